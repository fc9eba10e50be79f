#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dreduce/identities.hpp"
#include "dreduce/models.hpp"
#include "dreduce/render.hpp"
#include "goldens.hpp"
#include "properties.hpp"

using namespace dreduce;
using namespace dreduce::testing;
using nlohmann::json;

namespace {

constexpr double kStokesSeconds = 5;
constexpr double kRansStokesSeconds = 10;
constexpr double kCellSeconds = 60;
constexpr double kNumericSeconds = 30;
constexpr std::size_t kPropertyCases = 10000;
constexpr unsigned kPropertySeed = 20240;
constexpr unsigned kFieldSeed = 1;
constexpr double kExactDiscrete = 1e-12;
constexpr double kTimeIdentity = 1e-10;

struct Outcome {
  bool pass = false;
  std::string detail;
  json data;  // compared across runs; holds no timings
  double seconds = 0;
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome timed(const std::function<Outcome()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = f();
  o.seconds = since(t0);
  return o;
}

Outcome stokes_golden() {
  const SystemFile sys = load_system("stokes3d.sys");
  const Ranking r = parse_ranking("u>v>w>p", sys.symbols);
  const Verdict v = rosenfeld_groebner(sys.equations, r);
  const auto golden = golden_polys(stokes_chain_text(), sys.symbols, r);
  Outcome o;
  o.data = to_json(v, sys.symbols, r);
  o.pass = v.reducible && v.branches.size() == 1 && chain_equals(v.branches[0].chain, golden, r);
  o.detail = v.reducible ? std::to_string(v.branches[0].chain.size()) + " elements, " +
                               (o.pass ? "exact match" : "mismatch")
                         : "irreducible";
  return o;
}

Outcome rans_stokes_golden() {
  const SystemFile sys = load_system("rans_stokes.sys");
  const Ranking r = parse_ranking("u>v>w>u'>v'>w'>p", sys.symbols);
  const Verdict v = rosenfeld_groebner(sys.equations, r);
  const auto golden = golden_polys(rans_stokes_relations_text(), sys.symbols, r);
  Outcome o;
  o.data = to_json(v, sys.symbols, r);
  std::size_t found = 0;
  if (v.reducible && v.branches.size() == 1)
    for (const auto& g : golden) found += chain_contains(v.branches[0].chain, {g}, r);
  o.pass = found == golden.size();
  o.detail = std::to_string(found) + "/" + std::to_string(golden.size()) + " relations found";
  return o;
}

Outcome table_grid(double& slowest) {
  Outcome o;
  o.pass = true;
  o.data = json::array();
  std::size_t checked = 0, matched = 0;
  slowest = 0;
  for (const TableCell& cell : table_cells()) {
    json row = {{"model", to_string(cell.model)}, {"regime", to_string(cell.column)}};
    if (!cell.supported) {
      row["outcome"] = "unsupported";
      o.data.push_back(row);
      continue;
    }
    const ModelSpec spec = build(cell.model, cell.column);
    const auto t0 = std::chrono::steady_clock::now();
    const Classification got = classify(spec.equations, spec.suggested_ranking);
    const double secs = since(t0);
    slowest = std::max(slowest, secs);
    const bool ok = cell.published && got == *cell.published;
    ++checked;
    matched += ok;
    o.pass = o.pass && ok && secs < kCellSeconds;
    row["outcome"] = got == Classification::R ? "R" : "I";
    row["published"] = cell.published ? (*cell.published == Classification::R ? "R" : "I") : "-";
    o.data.push_back(row);
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu/%zu cells match, slowest %.2f s", matched, checked, slowest);
  o.detail = buf;
  return o;
}

Outcome property_suite() {
  Outcome o;
  o.pass = true;
  o.data = json::array();
  std::string failing;
  std::size_t redrawn = 0;
  for (const auto& p : kernel_properties(kPropertyCases, kPropertySeed)) {
    const bool ok = p.ok() && p.cases == kPropertyCases;
    o.pass = o.pass && ok;
    if (!ok) failing += " [" + p.name + ": " + p.first_failure + "]";
    redrawn += p.redrawn;
    o.data.push_back({{"property", p.name}, {"cases", p.cases}, {"failures", p.failures}, {"redrawn", p.redrawn}});
  }
  o.detail = std::to_string(o.data.size()) + " properties x " + std::to_string(kPropertyCases) + " cases, " +
             std::to_string(redrawn) + " redrawn" + failing;
  return o;
}

Outcome numeric_suite() {
  struct Case {
    std::string check;
    int dim;
  };
  std::vector<Case> cases;
  for (int dim : {2, 3})
    for (const char* c : {"curl_grad_zero", "div_curl_zero", "id_time", "id_selfadv", "id_skew", "id_laplace"})
      cases.push_back({c, dim});
  cases.push_back({"advection_curl_gap_2d_self", 2});
  cases.push_back({"advection_curl_gap_3d", 3});

  Outcome o;
  o.pass = true;
  o.data = json::array();
  std::string failing;
  for (const auto& c : cases) {
    const IdentityReport rep = check_identity(c.check, GridPair{16, 31}, c.dim, kFieldSeed);
    bool ok = true;
    const double worst = std::max(rep.residual_coarse, rep.residual_fine);
    if (c.check == "curl_grad_zero" || c.check == "div_curl_zero") ok = worst <= kExactDiscrete;
    else if (c.check == "id_time") ok = worst <= kTimeIdentity;
    else if (c.check == "advection_curl_gap_2d_self") ok = rep.classification == IdentityClass::converging;
    else if (!rep.measurement_only) ok = rep.observed_order && *rep.observed_order >= kConvergingOrder;
    if (!ok) failing += " [" + c.check + " " + std::to_string(c.dim) + "-D]";
    o.pass = o.pass && ok;
    o.data.push_back(to_json(rep));
    if (rep.measurement_only) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "; %s %.3g -> %.3g (reported)", c.check.c_str(), rep.residual_coarse,
                    rep.residual_fine);
      o.detail += buf;
    }
  }
  o.detail = std::to_string(cases.size()) + " checks" + o.detail + failing;
  return o;
}

struct Run {
  std::vector<Outcome> outcomes;
  double slowest_cell = 0;
  json combined() const {
    json j = json::array();
    for (const auto& o : outcomes) j.push_back(o.data);
    return j;
  }
};

Run run_all() {
  Run run;
  run.outcomes.push_back(timed(stokes_golden));
  run.outcomes.push_back(timed(rans_stokes_golden));
  run.outcomes.push_back(timed([&] { return table_grid(run.slowest_cell); }));
  run.outcomes.push_back(timed(property_suite));
  run.outcomes.push_back(timed(numeric_suite));
  return run;
}

void report(int id, const char* title, bool pass, const std::string& detail, double seconds = -1) {
  if (seconds >= 0) std::printf("%s  %d  %-34s %s (%.2f s)\n", pass ? "PASS" : "FAIL", id, title, detail.c_str(), seconds);
  else std::printf("%s  %d  %-34s %s\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  Run first, second;
  try {
    first = run_all();
    second = run_all();
  } catch (const std::exception& e) {
    std::printf("FAIL  acceptance aborted: %s\n", e.what());
    return 1;
  }

  const auto& o = first.outcomes;
  const bool c1 = o[0].pass && o[0].seconds < kStokesSeconds;
  const bool c2 = o[1].pass && o[1].seconds < kRansStokesSeconds;
  const bool c3 = o[2].pass && first.slowest_cell < kCellSeconds;
  const bool c4 = o[3].pass;
  const bool c5 = o[4].pass && o[4].seconds < kNumericSeconds;
  const std::string a = first.combined().dump(), b = second.combined().dump();
  const bool c6 = a == b;

  report(1, "Stokes 3-D golden chain", c1, o[0].detail, o[0].seconds);
  report(2, "two-scale Stokes relations", c2, o[1].detail, o[1].seconds);
  report(3, "reducibility grid", c3, o[2].detail, o[2].seconds);
  report(4, "kernel property suite", c4, o[3].detail, o[3].seconds);
  report(5, "numeric identity suite", c5, o[4].detail, o[4].seconds);
  report(6, "determinism across two runs", c6,
         c6 ? std::to_string(a.size()) + " bytes of JSON identical" : "JSON differs between runs");

  return c1 && c2 && c3 && c4 && c5 && c6 ? 0 : 1;
}
