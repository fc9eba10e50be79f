#include "dreduce/models.hpp"

#include <array>

#include "dreduce/errors.hpp"

namespace dreduce {

namespace {

using Vec = std::vector<DiffPoly>;

constexpr std::array<Derivation, 3> kSpace = {Derivation::x, Derivation::y, Derivation::z};

unsigned bit(Regime r) { return static_cast<unsigned>(r); }

DiffPoly nu() { return DiffPoly(Coefficient::parameter_power(1)); }

DiffPoly var(const SymbolTable& s, const std::string& name) { return DiffPoly(DerivativeKey{s.id(name), {}}); }

Vec vars(const SymbolTable& s, std::initializer_list<const char*> names) {
  Vec out;
  for (const char* n : names) out.push_back(var(s, n));
  return out;
}

DiffPoly laplacian(const DiffPoly& p, int dim) {
  DiffPoly out;
  for (int j = 0; j < dim; ++j) out += p.differentiate(kSpace[j]).differentiate(kSpace[j]);
  return out;
}

// (a . grad) b for a scalar b.
DiffPoly advect(const Vec& a, const DiffPoly& b) {
  DiffPoly out;
  for (std::size_t j = 0; j < a.size(); ++j) out += a[j] * b.differentiate(kSpace[j]);
  return out;
}

DiffPoly divergence(const Vec& a) {
  DiffPoly out;
  for (std::size_t j = 0; j < a.size(); ++j) out += a[j].differentiate(kSpace[j]);
  return out;
}

Vec curl(const Vec& a) {
  using D = Derivation;
  return {a[2].differentiate(D::y) - a[1].differentiate(D::z), a[0].differentiate(D::z) - a[2].differentiate(D::x),
          a[1].differentiate(D::x) - a[0].differentiate(D::y)};
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Ranking ranking_of(const SymbolTable& s) {
  std::vector<IndeterminateId> blocks;
  for (std::size_t i = 0; i < s.size(); ++i) blocks.push_back(static_cast<IndeterminateId>(i));
  return Ranking(blocks);
}

ModelSpec make_spec(ModelName name, unsigned regime, int dim, std::vector<std::string> names, Vec eqs,
                    bool best_effort = false) {
  ModelSpec s;
  s.name = name;
  s.regime = regime;
  s.dimension = dim;
  s.symbols = SymbolTable(names);
  s.equations = std::move(eqs);
  s.suggested_ranking = ranking_of(s.symbols);
  s.best_effort = best_effort;
  return s;
}

// Incompressible Navier-Stokes with convection, u > v > w > p.
ModelSpec navier_stokes() {
  ModelSpec s = make_spec(ModelName::ns3d, bit(Regime::incompressible), 3, {"u", "v", "w", "p"}, {});
  const Vec vel = vars(s.symbols, {"u", "v", "w"});
  const DiffPoly p = var(s.symbols, "p");
  s.equations.push_back(divergence(vel));
  for (int i = 0; i < 3; ++i)
    s.equations.push_back(vel[i].differentiate(Derivation::t) + advect(vel, vel[i]) + p.differentiate(kSpace[i]) -
                          nu() * laplacian(vel[i], 3));
  return s;
}

// Barotropic compressible Navier-Stokes: density and pressure both unknown.
ModelSpec compressible_navier_stokes() {
  ModelSpec s = make_spec(ModelName::ns3d, bit(Regime::compressible), 3, {"u", "v", "w", "p", "rho"}, {}, true);
  const Vec vel = vars(s.symbols, {"u", "v", "w"});
  const DiffPoly p = var(s.symbols, "p");
  const DiffPoly rho = var(s.symbols, "rho");
  Vec flux;
  for (const auto& c : vel) flux.push_back(rho * c);
  s.equations.push_back(rho.differentiate(Derivation::t) + divergence(flux));
  for (int i = 0; i < 3; ++i)
    s.equations.push_back(rho * (vel[i].differentiate(Derivation::t) + advect(vel, vel[i])) +
                          p.differentiate(kSpace[i]) - nu() * laplacian(vel[i], 3));
  return s;
}

// Two-scale split v + v' before averaging; mean continuity only, as in the
// Stokes-limit display.
ModelSpec rans(bool compressible) {
  std::vector<std::string> names = {"u", "v", "w", "u'", "v'", "w'", "p"};
  if (compressible) names.push_back("rho");
  ModelSpec s = make_spec(ModelName::rans3d, bit(compressible ? Regime::compressible : Regime::incompressible), 3,
                          names, {}, compressible);
  const Vec mean = vars(s.symbols, {"u", "v", "w"});
  const Vec fluct = vars(s.symbols, {"u'", "v'", "w'"});
  const Vec total = add(mean, fluct);
  const DiffPoly p = var(s.symbols, "p");
  if (compressible) {
    const DiffPoly rho = var(s.symbols, "rho");
    Vec flux;
    for (const auto& c : total) flux.push_back(rho * c);
    s.equations.push_back(rho.differentiate(Derivation::t) + divergence(flux));
    for (int i = 0; i < 3; ++i)
      s.equations.push_back(rho * (total[i].differentiate(Derivation::t) + advect(total, total[i])) +
                            p.differentiate(kSpace[i]) - nu() * laplacian(total[i], 3));
    return s;
  }
  s.equations.push_back(divergence(mean));
  for (int i = 0; i < 3; ++i)
    s.equations.push_back(total[i].differentiate(Derivation::t) + advect(total, total[i]) + p.differentiate(kSpace[i]) -
                          nu() * laplacian(total[i], 3));
  return s;
}

// Rotational two-scale balance written componentwise, optionally with the
// curl definitions, plus both divergence constraints.
ModelSpec omega_rans(bool compressible, bool with_curl_defs) {
  ModelSpec s = make_spec(ModelName::omega_rans, bit(compressible ? Regime::compressible : Regime::incompressible), 3,
                          {"omega1", "omega2", "omega3", "omega1'", "omega2'", "omega3'", "u", "v", "w", "u'", "v'", "w'"},
                          {}, compressible);
  const Vec omega = vars(s.symbols, {"omega1", "omega2", "omega3"});
  const Vec omega_f = vars(s.symbols, {"omega1'", "omega2'", "omega3'"});
  const Vec mean = vars(s.symbols, {"u", "v", "w"});
  const Vec fluct = vars(s.symbols, {"u'", "v'", "w'"});
  for (int i = 0; i < 3; ++i) {
    const DiffPoly total = omega[i] + omega_f[i];
    s.equations.push_back(total.differentiate(Derivation::t) + advect(mean, omega[i]) + advect(fluct, omega_f[i]) +
                          advect(mean, omega_f[i]) + advect(fluct, omega[i]) - nu() * laplacian(total, 3));
  }
  if (with_curl_defs) {
    const Vec c = curl(mean);
    const Vec cf = curl(fluct);
    for (int i = 0; i < 3; ++i) s.equations.push_back(omega[i] - c[i]);
    for (int i = 0; i < 3; ++i) s.equations.push_back(omega_f[i] - cf[i]);
  }
  if (!compressible) {
    s.equations.push_back(divergence(mean));
    s.equations.push_back(divergence(fluct));
  }
  return s;
}

// Vorticity transport for v = (psi_y, -psi_x).
ModelSpec streamfunction() {
  ModelSpec s = make_spec(ModelName::streamfunction2d, bit(Regime::incompressible), 2, {"psi"}, {}, true);
  const DiffPoly psi = var(s.symbols, "psi");
  const DiffPoly lap = laplacian(psi, 2);
  s.equations.push_back(lap.differentiate(Derivation::t) + psi.differentiate(Derivation::y) * lap.differentiate(Derivation::x) -
                        psi.differentiate(Derivation::x) * lap.differentiate(Derivation::y) - nu() * laplacian(lap, 2));
  return s;
}

// Steady 2-D boundary layer with prescribed outer velocity U.
ModelSpec prandtl() {
  ModelSpec s = make_spec(ModelName::prandtl, bit(Regime::incompressible), 2, {"u", "v", "U"}, {}, true);
  const DiffPoly u = var(s.symbols, "u");
  const DiffPoly v = var(s.symbols, "v");
  const DiffPoly U = var(s.symbols, "U");
  using D = Derivation;
  s.equations.push_back(u * u.differentiate(D::x) + v * u.differentiate(D::y) -
                        nu() * u.differentiate(D::y).differentiate(D::y) - U * U.differentiate(D::x));
  s.equations.push_back(u.differentiate(D::x) + v.differentiate(D::y));
  // Eliminate the normal velocity first.
  s.suggested_ranking = Ranking({s.symbols.id("v"), s.symbols.id("u"), s.symbols.id("U")});
  return s;
}

ModelSpec stokes() {
  ModelSpec s = regime_filter(navier_stokes(), Regime::stokes_limit);
  s.name = ModelName::stokes3d;
  s.regime = bit(Regime::incompressible);
  return s;
}

ModelSpec rans_stokes() {
  ModelSpec s = regime_filter(rans(false), Regime::stokes_limit);
  s.name = ModelName::rans_stokes;
  s.regime = bit(Regime::incompressible);
  return s;
}

[[noreturn]] void unsupported(ModelName m, Regime r) {
  throw Error(ErrorKind::UnsupportedCell, to_string(m) + " / " + to_string(r));
}

}  // namespace

std::string to_string(ModelName m) {
  switch (m) {
    case ModelName::stokes3d: return "stokes3d";
    case ModelName::rans_stokes: return "rans_stokes";
    case ModelName::ns3d: return "ns3d";
    case ModelName::rans3d: return "rans3d";
    case ModelName::omega_rans: return "omega_rans";
    case ModelName::streamfunction2d: return "streamfunction2d";
    case ModelName::prandtl: return "prandtl";
    case ModelName::busemann: return "busemann";
  }
  return "?";
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::compressible: return "compressible";
    case Regime::incompressible: return "incompressible";
    case Regime::stokes_limit: return "stokes_limit";
    case Regime::euler_limit: return "euler_limit";
    case Regime::stationary: return "stationary";
  }
  return "?";
}

ModelName parse_model_name(const std::string& s) {
  for (ModelName m : {ModelName::stokes3d, ModelName::rans_stokes, ModelName::ns3d, ModelName::rans3d,
                      ModelName::omega_rans, ModelName::streamfunction2d, ModelName::prandtl, ModelName::busemann})
    if (to_string(m) == s) return m;
  throw Error(ErrorKind::UnsupportedCell, "unknown model '" + s + "'");
}

Regime parse_regime(const std::string& s) {
  for (Regime r : {Regime::compressible, Regime::incompressible, Regime::stokes_limit, Regime::euler_limit,
                   Regime::stationary})
    if (to_string(r) == s) return r;
  throw Error(ErrorKind::UnsupportedCell, "unknown regime '" + s + "'");
}

ModelSpec regime_filter(const ModelSpec& spec, Regime flag) {
  if (spec.has(flag)) return spec;
  ModelSpec out = spec;
  auto apply = [&](auto pred) {
    std::vector<DiffPoly> kept;
    for (const auto& e : spec.equations) {
      DiffPoly f = e.filtered(pred);
      if (!f.is_zero()) kept.push_back(std::move(f));
    }
    if (kept.empty()) throw Error(ErrorKind::UnsupportedCell, "regime filter removed every equation");
    out.equations = std::move(kept);
    out.regime |= bit(flag);
  };
  switch (flag) {
    case Regime::stokes_limit:
      if (spec.has(Regime::compressible) || spec.has(Regime::euler_limit)) unsupported(spec.name, flag);
      apply([](const Term& t) { return t.monomial.total_degree() >= 2; });
      break;
    case Regime::euler_limit:
      if (spec.has(Regime::stokes_limit)) unsupported(spec.name, flag);
      apply([](const Term& t) { return !t.coefficient.is_rational(); });
      break;
    case Regime::stationary:
      apply([](const Term& t) {
        for (const auto& f : t.monomial.factors())
          if (f.key.alpha[static_cast<int>(Derivation::t)] > 0) return true;
        return false;
      });
      break;
    case Regime::compressible:
    case Regime::incompressible:
      unsupported(spec.name, flag);
  }
  return out;
}

ModelSpec build(ModelName name, Regime regime, const ModelOptions& options) {
  switch (name) {
    case ModelName::stokes3d:
      if (regime == Regime::incompressible) return stokes();
      break;
    case ModelName::rans_stokes:
      if (regime == Regime::incompressible) return rans_stokes();
      break;
    case ModelName::ns3d:
    case ModelName::rans3d:
    case ModelName::omega_rans: {
      auto base = [&](bool compressible) {
        if (name == ModelName::ns3d) return compressible ? compressible_navier_stokes() : navier_stokes();
        if (name == ModelName::rans3d) return rans(compressible);
        return omega_rans(compressible, options.with_curl_defs);
      };
      if (regime == Regime::compressible) return base(true);
      if (regime == Regime::incompressible) return base(false);
      return regime_filter(base(false), regime);
    }
    case ModelName::streamfunction2d:
      if (regime == Regime::incompressible) return streamfunction();
      if (regime == Regime::stationary) return regime_filter(streamfunction(), regime);
      break;
    case ModelName::prandtl:
      if (regime == Regime::incompressible) return prandtl();
      break;
    case ModelName::busemann:
      break;
  }
  unsupported(name, regime);
}

const std::vector<Regime>& table_columns() {
  static const std::vector<Regime> cols = {Regime::compressible, Regime::incompressible, Regime::stokes_limit,
                                           Regime::euler_limit, Regime::stationary};
  return cols;
}

const std::vector<ModelName>& table_rows() {
  static const std::vector<ModelName> rows = {ModelName::busemann, ModelName::prandtl,    ModelName::ns3d,
                                              ModelName::rans3d,   ModelName::omega_rans, ModelName::streamfunction2d};
  return rows;
}

std::optional<Classification> published_code(ModelName m, Regime column) {
  using C = Classification;
  switch (m) {
    case ModelName::busemann:
      if (column == Regime::compressible) return C::I;
      return std::nullopt;
    case ModelName::prandtl:
      if (column == Regime::incompressible) return C::R;
      return std::nullopt;
    case ModelName::ns3d:
    case ModelName::rans3d:
    case ModelName::omega_rans:
      return column == Regime::stokes_limit ? C::R : C::I;
    case ModelName::streamfunction2d:
      if (column == Regime::incompressible || column == Regime::stationary) return C::R;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::vector<TableCell> table_cells() {
  std::vector<TableCell> out;
  for (ModelName m : table_rows())
    for (Regime c : table_columns()) {
      const auto code = published_code(m, c);
      if (!code) continue;
      out.push_back({m, c, m != ModelName::busemann, code});
    }
  return out;
}

std::string column_label(Regime r) {
  switch (r) {
    case Regime::compressible: return "C";
    case Regime::incompressible: return "In";
    case Regime::stokes_limit: return "S";
    case Regime::euler_limit: return "E";
    case Regime::stationary: return "St";
  }
  return "?";
}

std::string row_label(ModelName m) {
  switch (m) {
    case ModelName::busemann: return "Busemann jet";
    case ModelName::prandtl: return "Prandtl boundary layer";
    case ModelName::ns3d: return "Navier-Stokes (3-D)";
    case ModelName::rans3d: return "RANS (3-D)";
    case ModelName::omega_rans: return "omega-RANS";
    case ModelName::streamfunction2d: return "Stream-function NS (2-D)";
    case ModelName::stokes3d: return "Stokes (3-D)";
    case ModelName::rans_stokes: return "RANS-Stokes (3-D)";
  }
  return "?";
}

}  // namespace dreduce
