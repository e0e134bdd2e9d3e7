#pragma once

#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace amc {

// Extent/shape mismatches between tensors.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::size_t numel_of(std::span<const int> shape) {
  std::size_t n = 1;
  for (int e : shape) n *= static_cast<std::size_t>(e);
  return n;
}

inline std::string shape_str(std::span<const int> shape) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) os << 'x';
    os << shape[i];
  }
  os << ']';
  return os.str();
}

// Dense row-major tensor. Copies are shallow: they share the underlying
// data and gradient buffers, so tensors can be captured cheaply by the
// tape and passed around by value.
template <typename S>
struct TensorT {
  std::vector<int> shape;
  std::shared_ptr<std::vector<S>> data;
  std::shared_ptr<std::vector<S>> grad;  // allocated iff requires_grad
  bool requires_grad = false;

  TensorT() = default;

  explicit TensorT(std::vector<int> shp, S fill = S(0)) : shape(std::move(shp)) {
    check_extents();
    data = std::make_shared<std::vector<S>>(numel(), fill);
  }

  static TensorT from(std::vector<int> shp, std::vector<S> values) {
    TensorT t;
    t.shape = std::move(shp);
    t.check_extents();
    if (numel_of(t.shape) != values.size())
      throw ShapeError("tensor data length " + std::to_string(values.size()) +
                       " does not match shape " + shape_str(t.shape));
    t.data = std::make_shared<std::vector<S>>(std::move(values));
    return t;
  }

  static TensorT scalar(S v) { return from({1}, {v}); }

  std::size_t numel() const { return numel_of(shape); }
  int rank() const { return static_cast<int>(shape.size()); }

  // Negative indices count from the end, python-style.
  int extent(int i) const {
    int r = rank();
    if (i < 0) i += r;
    if (i < 0 || i >= r) throw ShapeError("extent index out of range for " + shape_str(shape));
    return shape[static_cast<std::size_t>(i)];
  }

  S* ptr() { return data->data(); }
  const S* ptr() const { return data->data(); }
  S& operator[](std::size_t i) { return (*data)[i]; }
  const S& operator[](std::size_t i) const { return (*data)[i]; }

  std::span<S> values() { return {data->data(), data->size()}; }
  std::span<const S> values() const { return {data->data(), data->size()}; }

  bool defined() const { return static_cast<bool>(data); }

  void set_requires_grad(bool want) {
    requires_grad = want;
    if (want && !grad) grad = std::make_shared<std::vector<S>>(numel(), S(0));
    if (!want) grad.reset();
  }

  void ensure_grad() {
    if (!grad) grad = std::make_shared<std::vector<S>>(numel(), S(0));
  }

  void zero_grad() {
    if (grad) std::fill(grad->begin(), grad->end(), S(0));
  }

  // The accumulated gradient viewed as a tensor of the same shape.
  TensorT grad_tensor() const {
    TensorT g;
    g.shape = shape;
    g.data = grad;
    return g;
  }

 private:
  void check_extents() const {
    for (int e : shape)
      if (e < 1) throw ShapeError("tensor extents must be >= 1, got " + shape_str(shape));
  }
};

using Tensor = TensorT<float>;
using Tensor64 = TensorT<double>;

template <typename S>
inline void require_same_shape(const TensorT<S>& a, const TensorT<S>& b, const char* op) {
  if (a.shape != b.shape)
    throw ShapeError(std::string(op) + ": shape mismatch " + shape_str(a.shape) + " vs " +
                     shape_str(b.shape));
}

}  // namespace amc
