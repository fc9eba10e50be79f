#pragma once

#include <numbers>
#include <random>

#include "dreduce/numeric/operators.hpp"

namespace dreduce::numeric {

/// Seeded analytic building blocks. modes = 0 gives the zero field.
struct FieldSpec {
  unsigned seed = 1;
  int modes = 3;
  double amplitude = 1.0;
};

namespace detail {

struct Mode {
  double coefficient;
  std::array<int, 3> wave;
};

inline std::vector<Mode> draw_modes(std::mt19937& rng, int count) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> wave(0, 1);
  std::vector<Mode> modes;
  for (int m = 0; m < count; ++m) modes.push_back({coef(rng), {wave(rng), wave(rng), wave(rng)}});
  return modes;
}

}  // namespace detail

/// prod sin^2(pi x_i / L_i) * sum_m c_m prod cos(k_mi pi x_i / L_i). Even about
/// every face, so centered differences of it vanish there.
template <typename Scalar = double>
ScalarField<Scalar> boundary_bump(const Grid& g, std::mt19937& rng, const FieldSpec& spec) {
  const auto modes = detail::draw_modes(rng, spec.modes);
  return sample<Scalar>(g, [&](double x, double y, double z) {
    const std::array<double, 3> p{x, y, z};
    double envelope = spec.amplitude;
    for (int a = 0; a < g.dim(); ++a) envelope *= std::pow(std::sin(std::numbers::pi * p[a] / g.length(a)), 2);
    double sum = 0;
    for (const auto& m : modes) {
      double term = m.coefficient;
      for (int a = 0; a < g.dim(); ++a) term *= std::cos(m.wave[a] * std::numbers::pi * p[a] / g.length(a));
      sum += term;
    }
    return Scalar(envelope * sum);
  });
}

/// Smooth field with no boundary condition.
template <typename Scalar = double>
ScalarField<Scalar> smooth_scalar(const Grid& g, std::mt19937& rng, const FieldSpec& spec) {
  std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
  const auto modes = detail::draw_modes(rng, spec.modes);
  std::vector<std::array<double, 3>> phases;
  for (std::size_t m = 0; m < modes.size(); ++m) phases.push_back({phase(rng), phase(rng), phase(rng)});
  return sample<Scalar>(g, [&](double x, double y, double z) {
    const std::array<double, 3> p{x, y, z};
    double sum = 0;
    for (std::size_t m = 0; m < modes.size(); ++m) {
      double term = modes[m].coefficient;
      for (int a = 0; a < g.dim(); ++a)
        term *= std::sin((modes[m].wave[a] + 1) * std::numbers::pi * p[a] / g.length(a) + phases[m][a]);
      sum += term;
    }
    return Scalar(spec.amplitude * sum);
  });
}

/// Divergence-free velocity vanishing on the boundary: the discrete
/// perpendicular gradient of a bump stream function in 2-D, the discrete curl
/// of a bump vector potential in 3-D.
template <typename Scalar = double>
VectorField<Scalar> manufactured_field(const Grid& g, const FieldSpec& spec) {
  std::mt19937 rng(spec.seed);
  if (g.dim() == 2) return perp_grad(boundary_bump<Scalar>(g, rng, spec));
  VectorField<Scalar> potential;
  for (int i = 0; i < 3; ++i) potential.components.push_back(boundary_bump<Scalar>(g, rng, spec));
  return curl(potential);
}

/// Boundary-zero vector field with no divergence constraint.
template <typename Scalar = double>
VectorField<Scalar> bump_vector(const Grid& g, const FieldSpec& spec) {
  std::mt19937 rng(spec.seed);
  VectorField<Scalar> out;
  for (int i = 0; i < g.dim(); ++i) out.components.push_back(boundary_bump<Scalar>(g, rng, spec));
  return out;
}

}  // namespace dreduce::numeric
