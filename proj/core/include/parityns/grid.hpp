#pragma once

// Sample storage on the periodic grid of [0, 2*pi)^3 with n points per axis.
// Flat index j1 + n*(j2 + n*j3): x1 varies fastest.

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace parityns {

using cplx = std::complex<double>;

inline void require_grid_size(int n) {
  if (n < 8 || n % 2 != 0) throw std::invalid_argument("grid size must be even and >= 8, got " + std::to_string(n));
}

struct PhysicalTag {};
struct SpectralTag {};

/// n^3 complex values. The tag keeps physical samples and Fourier
/// coefficients from being mixed up; both use the same flat layout.
template <class Tag>
class Array3 {
 public:
  Array3() = default;
  explicit Array3(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n) { require_grid_size(n); }

  int n() const { return n_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  std::size_t index(int j1, int j2, int j3) const {
    return static_cast<std::size_t>(j1) + static_cast<std::size_t>(n_) * (static_cast<std::size_t>(j2) + static_cast<std::size_t>(n_) * static_cast<std::size_t>(j3));
  }
  cplx& operator()(int j1, int j2, int j3) { return data_[index(j1, j2, j3)]; }
  const cplx& operator()(int j1, int j2, int j3) const { return data_[index(j1, j2, j3)]; }
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }
  std::vector<cplx>& values() { return data_; }
  const std::vector<cplx>& values() const { return data_; }

  Array3& operator+=(const Array3& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Array3& operator-=(const Array3& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Array3& operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
  }
  friend Array3 operator+(Array3 a, const Array3& b) { return a += b; }
  friend Array3 operator-(Array3 a, const Array3& b) { return a -= b; }
  friend Array3 operator*(Array3 a, cplx s) { return a *= s; }
  friend Array3 operator*(cplx s, Array3 a) { return a *= s; }

  bool operator==(const Array3&) const = default;

 private:
  void check_same(const Array3& o) const {
    if (o.n_ != n_) throw std::invalid_argument("grid size mismatch");
  }

  int n_ = 0;
  std::vector<cplx> data_;
};

using Grid3 = Array3<PhysicalTag>;
using SpectralGrid = Array3<SpectralTag>;

template <class G>
struct Vector3 {
  std::array<G, 3> c;

  Vector3() = default;
  explicit Vector3(int n) : c{G(n), G(n), G(n)} {}
  Vector3(G a, G b, G d) : c{std::move(a), std::move(b), std::move(d)} {
    if (c[1].n() != c[0].n() || c[2].n() != c[0].n()) throw std::invalid_argument("components must share one grid");
  }

  int n() const { return c[0].n(); }
  G& operator[](int l) { return c[static_cast<std::size_t>(l)]; }
  const G& operator[](int l) const { return c[static_cast<std::size_t>(l)]; }

  Vector3& operator+=(const Vector3& o) {
    for (int l = 0; l < 3; ++l) (*this)[l] += o[l];
    return *this;
  }
  Vector3& operator-=(const Vector3& o) {
    for (int l = 0; l < 3; ++l) (*this)[l] -= o[l];
    return *this;
  }
  Vector3& operator*=(cplx s) {
    for (auto& g : c) g *= s;
    return *this;
  }
  friend Vector3 operator+(Vector3 a, const Vector3& b) { return a += b; }
  friend Vector3 operator-(Vector3 a, const Vector3& b) { return a -= b; }
  friend Vector3 operator*(Vector3 a, cplx s) { return a *= s; }
  friend Vector3 operator*(cplx s, Vector3 a) { return a *= s; }

  bool operator==(const Vector3&) const = default;
};

using VectorField = Vector3<Grid3>;
using SpectralVector = Vector3<SpectralGrid>;

/// Grid coordinate 2*pi*j/n.
inline double grid_coord(int j, int n) { return 2.0 * 3.14159265358979323846 * j / n; }

}  // namespace parityns
