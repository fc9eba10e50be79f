#include "dreduce/identities.hpp"

#include <cmath>
#include <complex>
#include <cstdio>

#include "dreduce/errors.hpp"
#include "dreduce/numeric/manufactured.hpp"

namespace dreduce {

namespace {

using namespace numeric;

constexpr std::array<double, 3> kBox = {1.0, 1.2, 0.9};
constexpr double kRoundoff = 1e-14;

// f(x, t) = g(x) phi(t), phi(t) = 2 + sin(t); d/dt ||f||^2 via a complex step.
double id_time(const Grid& g, unsigned seed) {
  using C = std::complex<double>;
  const VectorField<double> base = manufactured_field(g, {seed});
  const double t0 = 0.7;
  const double step = 1e-20;
  const double phi = 2 + std::sin(t0);
  const double dphi = std::cos(t0);
  const VectorField<double> f = phi * base;
  const VectorField<double> ft = dphi * base;
  const C phi_c = C(2.0) + std::sin(C(t0, step));
  const VectorField<C> fc = phi_c * cast<C>(base);
  const double half_dnorm = 0.5 * inner_product(fc, fc).imag() / step;
  return std::abs(inner_product(ft, f) - half_dnorm);
}

double id_selfadv(const Grid& g, unsigned seed) {
  const auto f = manufactured_field(g, {seed});
  return std::abs(inner_product(advect(f, f), f));
}

double id_skew(const Grid& g, unsigned seed) {
  const auto f = manufactured_field(g, {seed});
  const auto v = bump_vector(g, {seed + 1000});
  return std::abs(inner_product(advect(f, v), f) + inner_product(advect(f, f), v));
}

double id_laplace(const Grid& g, unsigned seed) {
  const auto f = bump_vector(g, {seed});
  const auto v = bump_vector(g, {seed + 1000});
  return std::abs(inner_product(laplacian(f), v) + gradient_inner_product(f, v));
}

double curl_grad_zero(const Grid& g, unsigned seed) {
  std::mt19937 rng(seed);
  const auto s = smooth_scalar(g, rng, {seed});
  if (g.dim() == 2) return norm(curl2d(grad(s)));
  return norm(curl(grad(s)));
}

double div_curl_zero(const Grid& g, unsigned seed) {
  std::mt19937 rng(seed);
  if (g.dim() == 2) return norm(div(perp_grad(smooth_scalar(g, rng, {seed}))));
  VectorField<double> a;
  for (int i = 0; i < 3; ++i) a.components.push_back(smooth_scalar(g, rng, {seed}));
  return norm(div(curl(a)));
}

double gap_2d_self(const Grid& g, unsigned seed) {
  const auto f = manufactured_field(g, {seed});
  return norm(curl2d(advect(f, f)) - advect(f, curl2d(f)));
}

double gap_3d(const Grid& g, unsigned seed) {
  const auto a = manufactured_field(g, {seed});
  const auto b = manufactured_field(g, {seed + 1000});
  return norm(curl(advect(a, b)) - advect(a, curl(b)));
}

struct CheckDef {
  const char* name;
  double (*residual)(const Grid&, unsigned);
  int fixed_dim;  // 0: caller's choice
  bool measurement_only;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"id_time", id_time, 0, false},
      {"id_selfadv", id_selfadv, 0, false},
      {"id_skew", id_skew, 0, false},
      {"id_laplace", id_laplace, 0, false},
      {"curl_grad_zero", curl_grad_zero, 0, false},
      {"div_curl_zero", div_curl_zero, 0, false},
      {"advection_curl_gap_2d_self", gap_2d_self, 2, false},
      {"advection_curl_gap_3d", gap_3d, 3, true},
  };
  return defs;
}

}  // namespace

std::string to_string(IdentityClass c) {
  switch (c) {
    case IdentityClass::exact_zero: return "exact_zero";
    case IdentityClass::converging: return "converging";
    case IdentityClass::non_vanishing: return "non_vanishing";
  }
  return "?";
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.emplace_back(d.name);
    return out;
  }();
  return names;
}

IdentityClass classify_residuals(double coarse, double fine, std::optional<double> order) {
  if (coarse <= kExactZeroTolerance && fine <= kExactZeroTolerance) return IdentityClass::exact_zero;
  if (order) return *order >= kConvergingOrder ? IdentityClass::converging : IdentityClass::non_vanishing;
  return fine < coarse ? IdentityClass::converging : IdentityClass::non_vanishing;
}

IdentityReport check_identity(const std::string& name, GridPair grid, int dim, unsigned seed) {
  const CheckDef* def = nullptr;
  for (const auto& d : registry())
    if (name == d.name) def = &d;
  if (!def) throw Error(ErrorKind::UnknownCheck, "unknown check '" + name + "'");
  if (grid.fine <= grid.coarse) throw Error(ErrorKind::GridTooCoarse, "fine grid must have more points than coarse");

  IdentityReport rep;
  rep.check = name;
  rep.dim = def->fixed_dim ? def->fixed_dim : dim;
  rep.grid = grid;
  rep.measurement_only = def->measurement_only;
  const Grid coarse(rep.dim, grid.coarse, kBox);
  const Grid fine(rep.dim, grid.fine, kBox);
  rep.residual_coarse = def->residual(coarse, seed);
  rep.residual_fine = def->residual(fine, seed);
  if (rep.residual_coarse > kRoundoff && rep.residual_fine > kRoundoff)
    rep.observed_order = std::log(rep.residual_coarse / rep.residual_fine) / std::log(coarse.h(0) / fine.h(0));
  rep.classification = classify_residuals(rep.residual_coarse, rep.residual_fine, rep.observed_order);
  return rep;
}

nlohmann::json to_json(const IdentityReport& r) {
  return {{"check", r.check},
          {"dim", r.dim},
          {"grid", {r.grid.coarse, r.grid.fine}},
          {"residual_coarse", r.residual_coarse},
          {"residual_fine", r.residual_fine},
          {"observed_order", r.observed_order ? nlohmann::json(*r.observed_order) : nlohmann::json(nullptr)},
          {"classification", to_string(r.classification)},
          {"measurement_only", r.measurement_only}};
}

std::string render(const IdentityReport& r) {
  char order[32] = "n/a";
  if (r.observed_order) std::snprintf(order, sizeof order, "%.3f", *r.observed_order);
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-28s %dD  coarse %.3e  fine %.3e  order %-7s %s%s", r.check.c_str(), r.dim,
                r.residual_coarse, r.residual_fine, order, to_string(r.classification).c_str(),
                r.measurement_only ? " (measurement)" : "");
  return buf;
}

}  // namespace dreduce
