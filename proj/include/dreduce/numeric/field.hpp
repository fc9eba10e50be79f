#pragma once

#include <array>
#include <cmath>
#include <vector>

#include <Eigen/Core>

#include "dreduce/errors.hpp"

namespace dreduce::numeric {

/// Uniform box grid (0,L1)x(0,L2)[x(0,L3)] with n points per axis, padded by
/// analytic ghost layers so stencils reach the boundary points.
class Grid {
 public:
  static constexpr int kGhosts = 4;

  Grid(int dim, int n, std::array<double, 3> lengths = {1.0, 1.0, 1.0}) : dim_(dim), n_(n), lengths_(lengths) {
    if (dim != 2 && dim != 3) throw Error(ErrorKind::ShapeMismatch, "grid dimension must be 2 or 3");
    if (n < 8) throw Error(ErrorKind::GridTooCoarse, "grid needs at least 8 points per axis");
    for (int a = 0; a < dim; ++a)
      if (!(lengths[a] > 0)) throw Error(ErrorKind::ShapeMismatch, "box lengths must be positive");
  }

  int dim() const { return dim_; }
  int n() const { return n_; }
  int padded() const { return n_ + 2 * kGhosts; }
  double length(int axis) const { return lengths_[axis]; }
  double h(int axis) const { return lengths_[axis] / (n_ - 1); }
  double cell_volume() const {
    double v = 1;
    for (int a = 0; a < dim_; ++a) v *= h(a);
    return v;
  }

  Eigen::Index size() const {
    Eigen::Index s = 1;
    for (int a = 0; a < dim_; ++a) s *= padded();
    return s;
  }

  /// Flat-index distance between neighbours along an axis (x fastest).
  Eigen::Index stride(int axis) const {
    Eigen::Index s = 1;
    for (int a = 0; a < axis; ++a) s *= padded();
    return s;
  }

  /// Padded index along each axis for a flat index.
  std::array<int, 3> unflatten(Eigen::Index k) const {
    std::array<int, 3> p{0, 0, 0};
    for (int a = 0; a < dim_; ++a) {
      p[a] = static_cast<int>(k % padded());
      k /= padded();
    }
    return p;
  }

  /// Physical coordinate of a padded index; ghosts lie outside [0, L].
  double coord(int axis, int padded_index) const { return (padded_index - kGhosts) * h(axis); }

  /// h^d on points strictly inside the box, 0 elsewhere.
  Eigen::ArrayXd interior_weights() const {
    Eigen::ArrayXd w = Eigen::ArrayXd::Zero(size());
    const double vol = cell_volume();
    for (Eigen::Index k = 0; k < size(); ++k) {
      const auto p = unflatten(k);
      bool inside = true;
      for (int a = 0; a < dim_; ++a) inside = inside && p[a] > kGhosts && p[a] < kGhosts + n_ - 1;
      if (inside) w[k] = vol;
    }
    return w;
  }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.dim_ == b.dim_ && a.n_ == b.n_ && a.lengths_ == b.lengths_;
  }

 private:
  int dim_;
  int n_;
  std::array<double, 3> lengths_;
};

/// Samples on the padded grid. |margin| counts outer layers whose values are
/// not trustworthy; each stencil application widens it by one.
template <typename Scalar>
struct ScalarField {
  using Array = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  Grid grid;
  Array values;
  int margin = 0;

  explicit ScalarField(const Grid& g) : grid(g), values(Array::Zero(g.size())) {}
  ScalarField(const Grid& g, Array v, int m) : grid(g), values(std::move(v)), margin(m) {}
};

template <typename Scalar>
struct VectorField {
  std::vector<ScalarField<Scalar>> components;

  VectorField() = default;
  explicit VectorField(std::vector<ScalarField<Scalar>> c) : components(std::move(c)) {}

  std::size_t size() const { return components.size(); }
  const ScalarField<Scalar>& operator[](std::size_t i) const { return components[i]; }
  ScalarField<Scalar>& operator[](std::size_t i) { return components[i]; }
  const Grid& grid() const { return components.front().grid; }
};

inline void require_same(const Grid& a, const Grid& b) {
  if (!(a == b)) throw Error(ErrorKind::ShapeMismatch, "fields live on different grids");
}

/// Samples fn(x, y, z) at every padded point, ghosts included.
template <typename Scalar, typename Fn>
ScalarField<Scalar> sample(const Grid& g, Fn&& fn) {
  ScalarField<Scalar> f(g);
  for (Eigen::Index k = 0; k < g.size(); ++k) {
    const auto p = g.unflatten(k);
    const double x = g.coord(0, p[0]);
    const double y = g.coord(1, p[1]);
    const double z = g.dim() == 3 ? g.coord(2, p[2]) : 0.0;
    f.values[k] = fn(x, y, z);
  }
  return f;
}

template <typename To, typename From>
ScalarField<To> cast(const ScalarField<From>& f) {
  return {f.grid, f.values.template cast<To>(), f.margin};
}

template <typename To, typename From>
VectorField<To> cast(const VectorField<From>& f) {
  VectorField<To> out;
  for (const auto& c : f.components) out.components.push_back(cast<To>(c));
  return out;
}

}  // namespace dreduce::numeric
