#pragma once

#include <cstddef>
#include <vector>

#include "tcfv/error.hpp"

namespace tcfv {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Dense 2D array, row-major with i (x-direction) fastest.
template <class T>
class Field2D {
 public:
  Field2D() = default;
  Field2D(int nx, int ny, T init = T{}) : nx_(nx), ny_(ny), data_(size_t(nx) * ny, init) {}

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  size_t size() const { return data_.size(); }

  T& operator()(int i, int j) { return data_[size_t(j) * nx_ + i]; }
  const T& operator()(int i, int j) const { return data_[size_t(j) * nx_ + i]; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  bool same_shape(int nx, int ny) const { return nx_ == nx && ny_ == ny; }

  void fill(const T& v) { data_.assign(data_.size(), v); }

 private:
  int nx_ = 0;
  int ny_ = 0;
  std::vector<T> data_;
};

}  // namespace tcfv
