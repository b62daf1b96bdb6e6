#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "specnorm/tensor.hpp"

namespace specnorm {

enum class Padding { zeros, circular, reflect, replicate };

std::string padding_name(Padding p);
Padding padding_from_name(const std::string& name);

// f(x) = W x + b
struct DenseSpec {
  Tensor weight;  // [m, n]
  Tensor bias;    // [m]
};

// 2-D (or 1-D, with k_h == 1 and h == 1) cross-correlation over a padded input.
//
// For zeros/reflect/replicate padding the output extent is
// (extent + 2p - k) / stride + 1 per spatial dimension. Circular padding is a
// true modular wrap: the output extent is ceil(extent / stride) independent of
// pad_amount, which only shifts the kernel alignment. With pad_amount =
// floor(k/2) and stride 1 the materialized single-channel operator is exactly
// the circulant with first row [f_m, ..., f_{k-1}, 0, ..., 0, f_0, ..., f_{m-1}].
struct ConvSpec {
  Tensor kernel;  // [c_out, c_in, k_h, k_w]
  Tensor bias;    // [c_out]
  std::array<std::size_t, 2> stride{1, 1};
  Padding padding = Padding::zeros;
  std::array<std::size_t, 2> pad_amount{0, 0};
  std::array<std::size_t, 3> input_shape{0, 0, 0};  // (c_in, h, w)
  bool one_dimensional = false;                     // serialization tag; k_h == 1, h == 1
};

// Inference-mode affine batch norm over (channels x spatial) inputs.
struct BatchNormSpec {
  Tensor gamma;
  Tensor beta;
  Tensor running_mean;
  Tensor running_var;
  double epsilon = 1e-5;
  std::size_t spatial = 1;  // positions per channel
};

class OperatorSpec;

struct CompositionSpec {
  std::vector<OperatorSpec> stages;  // evaluated first-to-last
};

class OperatorSpec {
 public:
  using Node = std::variant<DenseSpec, ConvSpec, BatchNormSpec, CompositionSpec>;

  OperatorSpec(DenseSpec s);
  OperatorSpec(ConvSpec s);
  OperatorSpec(BatchNormSpec s);
  OperatorSpec(CompositionSpec s);

  const Node& node() const { return node_; }
  Node& node() { return node_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&node_);
  }

 private:
  Node node_;
};

// Gradient of a scalar objective with respect to the trainable parameters
// (dense weight, conv kernel, batch-norm gamma), one tensor per leaf operator
// in depth-first stage order. Biases and beta are frozen.
struct ParamDelta {
  std::vector<Tensor> leaves;
};

ParamDelta zero_delta(const OperatorSpec& op);
ParamDelta param_snapshot(const OperatorSpec& op);
void add_scaled(ParamDelta& acc, const ParamDelta& d, double s);
double delta_norm(const ParamDelta& d);

std::size_t input_dim(const OperatorSpec& op);
std::size_t output_dim(const OperatorSpec& op);
std::vector<std::size_t> input_shape(const OperatorSpec& op);
std::vector<std::size_t> output_shape(const OperatorSpec& op);

// Checks the structural invariants of the spec; throws std::invalid_argument.
void validate(const OperatorSpec& op);

Tensor apply(const OperatorSpec& op, const Tensor& x);

// M^T y for the linear part; bias is ignored. Compositions apply stage
// adjoints in reverse order.
Tensor adjoint_apply(const OperatorSpec& op, const Tensor& y);

// M^T M X, column-wise on X [n, k], computed as adjoint_apply(apply(x) - apply(0)).
Tensor gram_apply(const OperatorSpec& op, const Tensor& X);

// Gradient of 0.5 * ||f_W(x) - t||^2 with respect to the trainable parameters,
// evaluated where residual = f_W(x) - t.
ParamDelta weight_grad(const OperatorSpec& op, const Tensor& x, const Tensor& residual);

// Returns the spec with parameters replaced by (param - step * delta).
OperatorSpec apply_delta(const OperatorSpec& op, const ParamDelta& delta, double step);

// Brute-force matrix form: column j is apply(e_j) - apply(0). The oracle
// against which everything else is tested.
Tensor materialize(const OperatorSpec& op, std::size_t cap = 4096);

// Multiplies all linear parameters by `factor` (bias/beta untouched), so every
// singular value scales by `factor`. For compositions only the first stage is
// scaled, which preserves that contract.
OperatorSpec scale_params(const OperatorSpec& op, double factor);

}  // namespace specnorm
