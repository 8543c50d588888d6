#ifndef COUNTCEPTION_TENSOR_HPP_
#define COUNTCEPTION_TENSOR_HPP_

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace countception {

/// Dense n-dimensional array, row-major. Activations use the
/// [batch, channels, height, width] convention.
template <typename T>
struct Tensor {
  std::vector<int64_t> shape;
  std::vector<T> data;

  Tensor() = default;

  explicit Tensor(std::vector<int64_t> s) : shape(std::move(s)) {
    data.assign(static_cast<size_t>(numel_of(shape)), T(0));
  }

  Tensor(std::vector<int64_t> s, std::vector<T> d)
      : shape(std::move(s)), data(std::move(d)) {
    if (static_cast<int64_t>(data.size()) != numel_of(shape))
      throw std::invalid_argument("tensor: data length does not match shape");
  }

  static int64_t numel_of(const std::vector<int64_t>& s) {
    int64_t n = 1;
    for (int64_t e : s) {
      if (e < 1) throw std::invalid_argument("tensor: extents must be >= 1");
      n *= e;
    }
    return n;
  }

  static Tensor zeros(std::vector<int64_t> s) { return Tensor(std::move(s)); }

  static Tensor full(std::vector<int64_t> s, T v) {
    Tensor t(std::move(s));
    for (auto& x : t.data) x = v;
    return t;
  }

  static Tensor scalar(T v) { return Tensor({1}, {v}); }

  int64_t numel() const { return static_cast<int64_t>(data.size()); }
  int rank() const { return static_cast<int>(shape.size()); }
  int64_t size(int i) const { return shape.at(static_cast<size_t>(i)); }
  bool empty() const { return data.empty(); }

  T* ptr() { return data.data(); }
  const T* ptr() const { return data.data(); }

  // 4-D accessors for [B,C,H,W] tensors.
  T& at4(int64_t b, int64_t c, int64_t y, int64_t x) {
    return data[static_cast<size_t>(((b * shape[1] + c) * shape[2] + y) * shape[3] + x)];
  }
  T at4(int64_t b, int64_t c, int64_t y, int64_t x) const {
    return data[static_cast<size_t>(((b * shape[1] + c) * shape[2] + y) * shape[3] + x)];
  }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> out;
    out.shape = shape;
    out.data.resize(data.size());
    for (size_t i = 0; i < data.size(); ++i) out.data[i] = static_cast<U>(data[i]);
    return out;
  }

  std::string shape_str() const {
    std::string s = "[";
    for (size_t i = 0; i < shape.size(); ++i) {
      if (i) s += "x";
      s += std::to_string(shape[i]);
    }
    return s + "]";
  }
};

template <typename T>
double sum_as_double(const Tensor<T>& t) {
  double acc = 0.0;
  for (T v : t.data) acc += static_cast<double>(v);
  return acc;
}

}  // namespace countception

#endif  // COUNTCEPTION_TENSOR_HPP_
