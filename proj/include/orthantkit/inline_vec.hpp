#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace orthantkit {

/// Fixed-capacity vector stored inline.
template <typename T, std::size_t N>
class InlineVec {
 public:
  static constexpr std::size_t kCapacity = N;

  InlineVec() = default;
  InlineVec(std::initializer_list<T> init) {
    for (const auto& v : init) push_back(v);
  }

  void push_back(const T& v) {
    if (size_ == N) throw std::length_error("InlineVec capacity exceeded");
    data_[size_++] = v;
  }
  void reserve(std::size_t) {}
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const T& operator[](std::size_t i) const { return data_[i]; }
  T& operator[](std::size_t i) { return data_[i]; }
  const T* begin() const { return data_.data(); }
  const T* end() const { return data_.data() + size_; }
  T* begin() { return data_.data(); }
  T* end() { return data_.data() + size_; }
  std::vector<T> to_vector() const { return std::vector<T>(begin(), end()); }

  friend bool operator==(const InlineVec& a, const InlineVec& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }
  friend bool operator<(const InlineVec& a, const InlineVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  std::array<T, N> data_{};
  std::size_t size_ = 0;
};

}  // namespace orthantkit
