#pragma once

#include <vector>

#include "degenlab/errors.hpp"

namespace degenlab {

/// Dense rank-3 array with deterministic (row-major) iteration order.
template <class S>
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int d0, int d1, int d2)
      : d0_(d0), d1_(d1), d2_(d2),
        data_(static_cast<size_t>(d0) * d1 * d2, S(0)) {}

  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  int dim2() const { return d2_; }

  S& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
  const S& operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

  bool all_zero() const {
    for (const auto& v : data_)
      if (!(v == S(0))) return false;
    return true;
  }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.data_ == b.data_;
  }

  template <class T, class Fn>
  Tensor3<T> map(Fn&& fn) const {
    Tensor3<T> out(d0_, d1_, d2_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = fn(data_[i]);
    return out;
  }

  template <class T>
  friend class Tensor3;

 private:
  size_t index(int i, int j, int k) const {
    if (i < 0 || i >= d0_ || j < 0 || j >= d1_ || k < 0 || k >= d2_)
      fail("IndexOutOfRange", "tensor index out of range");
    return (static_cast<size_t>(i) * d1_ + j) * d2_ + k;
  }

  int d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<S> data_;
};

}  // namespace degenlab
