#pragma once

#include <algorithm>

#include "dreduce/numeric/field.hpp"

namespace dreduce::numeric {

// Second-order centered stencils on the flat padded array. Entries that wrap
// across a row end lie in the widened margin and are never read by norms.

template <typename Scalar>
ScalarField<Scalar> diff(const ScalarField<Scalar>& f, int axis) {
  const Grid& g = f.grid;
  if (axis >= g.dim()) throw Error(ErrorKind::ShapeMismatch, "derivative axis exceeds grid dimension");
  const Eigen::Index s = g.stride(axis);
  const Eigen::Index m = g.size() - 2 * s;
  ScalarField<Scalar> out(g);
  out.values.segment(s, m) = (f.values.segment(2 * s, m) - f.values.segment(0, m)) / Scalar(2 * g.h(axis));
  out.margin = f.margin + 1;
  return out;
}

template <typename Scalar>
ScalarField<Scalar> diff2(const ScalarField<Scalar>& f, int axis) {
  const Grid& g = f.grid;
  if (axis >= g.dim()) throw Error(ErrorKind::ShapeMismatch, "derivative axis exceeds grid dimension");
  const Eigen::Index s = g.stride(axis);
  const Eigen::Index m = g.size() - 2 * s;
  const double h = g.h(axis);
  ScalarField<Scalar> out(g);
  out.values.segment(s, m) =
      (f.values.segment(2 * s, m) - Scalar(2) * f.values.segment(s, m) + f.values.segment(0, m)) / Scalar(h * h);
  out.margin = f.margin + 1;
  return out;
}

template <typename Scalar>
ScalarField<Scalar> operator+(const ScalarField<Scalar>& a, const ScalarField<Scalar>& b) {
  require_same(a.grid, b.grid);
  return {a.grid, a.values + b.values, std::max(a.margin, b.margin)};
}

template <typename Scalar>
ScalarField<Scalar> operator-(const ScalarField<Scalar>& a, const ScalarField<Scalar>& b) {
  require_same(a.grid, b.grid);
  return {a.grid, a.values - b.values, std::max(a.margin, b.margin)};
}

template <typename Scalar>
ScalarField<Scalar> operator*(const ScalarField<Scalar>& a, const ScalarField<Scalar>& b) {
  require_same(a.grid, b.grid);
  return {a.grid, a.values * b.values, std::max(a.margin, b.margin)};
}

template <typename Scalar>
ScalarField<Scalar> operator*(Scalar c, const ScalarField<Scalar>& a) {
  return {a.grid, c * a.values, a.margin};
}

template <typename Scalar>
VectorField<Scalar> operator+(const VectorField<Scalar>& a, const VectorField<Scalar>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "vector fields differ in component count");
  VectorField<Scalar> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.components.push_back(a[i] + b[i]);
  return out;
}

template <typename Scalar>
VectorField<Scalar> operator-(const VectorField<Scalar>& a, const VectorField<Scalar>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "vector fields differ in component count");
  VectorField<Scalar> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.components.push_back(a[i] - b[i]);
  return out;
}

template <typename Scalar>
VectorField<Scalar> operator*(Scalar c, const VectorField<Scalar>& a) {
  VectorField<Scalar> out;
  for (const auto& comp : a.components) out.components.push_back(c * comp);
  return out;
}

template <typename Scalar>
VectorField<Scalar> grad(const ScalarField<Scalar>& f) {
  VectorField<Scalar> out;
  for (int a = 0; a < f.grid.dim(); ++a) out.components.push_back(diff(f, a));
  return out;
}

template <typename Scalar>
ScalarField<Scalar> div(const VectorField<Scalar>& v) {
  if (static_cast<int>(v.size()) != v.grid().dim()) throw Error(ErrorKind::ShapeMismatch, "div needs dim components");
  ScalarField<Scalar> out = diff(v[0], 0);
  for (int a = 1; a < v.grid().dim(); ++a) out = out + diff(v[a], a);
  return out;
}

template <typename Scalar>
ScalarField<Scalar> laplacian(const ScalarField<Scalar>& f) {
  ScalarField<Scalar> out = diff2(f, 0);
  for (int a = 1; a < f.grid.dim(); ++a) out = out + diff2(f, a);
  return out;
}

template <typename Scalar>
VectorField<Scalar> laplacian(const VectorField<Scalar>& v) {
  VectorField<Scalar> out;
  for (const auto& c : v.components) out.components.push_back(laplacian(c));
  return out;
}

/// 3-D curl of a vector field.
template <typename Scalar>
VectorField<Scalar> curl(const VectorField<Scalar>& v) {
  if (v.size() != 3 || v.grid().dim() != 3) throw Error(ErrorKind::ShapeMismatch, "vector curl needs a 3-D field");
  return VectorField<Scalar>({diff(v[2], 1) - diff(v[1], 2), diff(v[0], 2) - diff(v[2], 0),
                              diff(v[1], 0) - diff(v[0], 1)});
}

/// 2-D scalar vorticity d_x v2 - d_y v1.
template <typename Scalar>
ScalarField<Scalar> curl2d(const VectorField<Scalar>& v) {
  if (v.size() != 2 || v.grid().dim() != 2) throw Error(ErrorKind::ShapeMismatch, "scalar curl needs a 2-D field");
  return diff(v[1], 0) - diff(v[0], 1);
}

/// 2-D velocity (d_y psi, -d_x psi) of a stream function.
template <typename Scalar>
VectorField<Scalar> perp_grad(const ScalarField<Scalar>& psi) {
  if (psi.grid.dim() != 2) throw Error(ErrorKind::ShapeMismatch, "stream function needs a 2-D grid");
  return VectorField<Scalar>({diff(psi, 1), Scalar(-1) * diff(psi, 0)});
}

/// (a . grad) f
template <typename Scalar>
ScalarField<Scalar> advect(const VectorField<Scalar>& a, const ScalarField<Scalar>& f) {
  if (static_cast<int>(a.size()) != f.grid.dim()) throw Error(ErrorKind::ShapeMismatch, "advecting field has wrong size");
  ScalarField<Scalar> out = a[0] * diff(f, 0);
  for (int j = 1; j < f.grid.dim(); ++j) out = out + a[j] * diff(f, j);
  return out;
}

template <typename Scalar>
VectorField<Scalar> advect(const VectorField<Scalar>& a, const VectorField<Scalar>& f) {
  VectorField<Scalar> out;
  for (const auto& c : f.components) out.components.push_back(advect(a, c));
  return out;
}

/// Midpoint-rule sum of f*g over interior points (bilinear, no conjugation).
template <typename Scalar>
Scalar inner_product(const ScalarField<Scalar>& f, const ScalarField<Scalar>& g) {
  require_same(f.grid, g.grid);
  if (std::max(f.margin, g.margin) > Grid::kGhosts + 1)
    throw Error(ErrorKind::ShapeMismatch, "field is not valid on the interior");
  return (f.values * g.values * f.grid.interior_weights().template cast<Scalar>()).sum();
}

template <typename Scalar>
Scalar inner_product(const VectorField<Scalar>& f, const VectorField<Scalar>& g) {
  if (f.size() != g.size()) throw Error(ErrorKind::ShapeMismatch, "vector fields differ in component count");
  Scalar s(0);
  for (std::size_t i = 0; i < f.size(); ++i) s += inner_product(f[i], g[i]);
  return s;
}

/// sum_ij (d_j f_i, d_j g_i)
template <typename Scalar>
Scalar gradient_inner_product(const VectorField<Scalar>& f, const VectorField<Scalar>& g) {
  Scalar s(0);
  for (std::size_t i = 0; i < f.size(); ++i) s += inner_product(grad(f[i]), grad(g[i]));
  return s;
}

inline double norm(const ScalarField<double>& f) { return std::sqrt(inner_product(f, f)); }
inline double norm(const VectorField<double>& f) { return std::sqrt(inner_product(f, f)); }

}  // namespace dreduce::numeric
