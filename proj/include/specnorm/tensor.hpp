#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace specnorm {

// Dense row-major array of 64-bit floats tagged with a shape.
// The universal value type for inputs, outputs and parameters.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> s);
  Tensor(std::vector<std::size_t> s, std::vector<double> d);

  std::size_t size() const { return data.size(); }
  double& operator[](std::size_t i) { return data[i]; }
  double operator[](std::size_t i) const { return data[i]; }

  static Tensor zeros(std::vector<std::size_t> s) { return Tensor(std::move(s)); }
};

std::size_t shape_product(const std::vector<std::size_t>& shape);
std::string shape_string(const std::vector<std::size_t>& shape);

double dot(const Tensor& a, const Tensor& b);
double norm(const Tensor& a);
void axpy(double alpha, const Tensor& x, Tensor& y);  // y += alpha * x
void scale(Tensor& t, double alpha);

bool all_finite(const Tensor& t);
void require_finite(const Tensor& t, const char* what);
void require_length(const Tensor& t, std::size_t n, const char* what);

}  // namespace specnorm
