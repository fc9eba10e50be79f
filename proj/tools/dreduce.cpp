#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dreduce/errors.hpp"
#include "dreduce/identities.hpp"
#include "dreduce/models.hpp"
#include "dreduce/parser.hpp"
#include "dreduce/render.hpp"

using namespace dreduce;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kIrreducible = 1;
constexpr int kInputError = 2;
constexpr int kCapReached = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct BudgetArgs {
  std::size_t window = Budget{}.quiescence_window;
  int order_cap = Budget{}.order_cap;
  std::size_t step_cap = Budget{}.step_cap;
  std::size_t term_cap = Budget{}.term_cap;
  std::string unit = "elementary";

  void attach(CLI::App* app) {
    app->add_option("--budget", window, "Quiescence window in steps")->check(CLI::PositiveNumber);
    app->add_option("--order-cap", order_cap, "Maximum derivative order")->check(CLI::PositiveNumber);
    app->add_option("--step-cap", step_cap, "Global step cap")->check(CLI::PositiveNumber);
    app->add_option("--term-cap", term_cap, "Largest remainder in terms")->check(CLI::PositiveNumber);
    app->add_option("--step-unit", unit, "What one step counts")->check(CLI::IsMember({"elementary", "divisor_pass"}));
  }

  Budget get() const {
    Budget b;
    b.quiescence_window = window;
    b.order_cap = order_cap;
    b.step_cap = step_cap;
    b.term_cap = term_cap;
    b.unit = unit == "divisor_pass" ? StepUnit::divisor_pass : StepUnit::elementary;
    return b;
  }
};

void add_format(CLI::App* app, std::string& format) {
  app->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));
}

int run_reduce(const std::string& path, const std::string& ranking, const Budget& budget, const std::string& format) {
  const SystemFile sys = parse_system(read_file(path));
  const Ranking r = ranking.empty() ? sys.effective_ranking() : parse_ranking(ranking, sys.symbols);
  const Verdict v = rosenfeld_groebner(sys.equations, r, budget);
  if (format == "json") std::cout << to_json(v, sys.symbols, r).dump(2) << "\n";
  else std::cout << render(v, sys.symbols, r);
  return v.reducible ? kOk : kCapReached;
}

int run_classify(const std::string& model, const std::string& regime, bool curl_defs, const Budget& budget,
                 const std::string& format) {
  const ModelName m = parse_model_name(model);
  const Regime g = parse_regime(regime);
  const ModelSpec spec = build(m, g, {curl_defs});
  const Verdict v = rosenfeld_groebner(spec.equations, spec.suggested_ranking, budget);
  if (format == "json") {
    json out = to_json(v, spec.symbols, spec.suggested_ranking);
    out["model"] = model;
    out["regime"] = regime;
    out["best_effort"] = spec.best_effort;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_string(m) << " / " << to_string(g) << (spec.best_effort ? " (best-effort)" : "") << "\n"
              << render(v, spec.symbols, spec.suggested_ranking);
  }
  return v.reducible ? kOk : kIrreducible;
}

int run_table1(const Budget& budget, const std::string& format, bool timing) {
  json cells = json::array();
  std::map<std::pair<int, int>, std::string> grid;
  for (const TableCell& cell : table_cells()) {
    json row = {{"model", to_string(cell.model)},
                {"regime", to_string(cell.column)},
                {"published", cell.published ? (*cell.published == Classification::R ? "R" : "I") : "-"}};
    std::string code;
    if (!cell.supported) {
      row["outcome"] = nullptr;
      row["status"] = "unsupported";
      code = "n/a";
    } else {
      const ModelSpec spec = build(cell.model, cell.column);
      const auto t0 = std::chrono::steady_clock::now();
      const Verdict v = rosenfeld_groebner(spec.equations, spec.suggested_ranking, budget);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      code = v.reducible ? "R" : "I";
      row["outcome"] = code;
      row["status"] = spec.best_effort ? "best-effort" : "supported";
      row["reason"] = v.reducible ? json(nullptr) : json(to_string(v.reason));
      row["stats"] = to_json(v.stats);
      if (timing) row["seconds"] = secs;
      if (spec.best_effort) code += "*";
    }
    grid[{static_cast<int>(cell.model), static_cast<int>(cell.column)}] = code;
    cells.push_back(std::move(row));
  }
  if (format == "json") {
    std::cout << json{{"schema", kSchemaVersion}, {"cells", cells}}.dump(2) << "\n";
    return kOk;
  }
  std::printf("%-26s", "model");
  for (Regime c : table_columns()) std::printf("%6s", column_label(c).c_str());
  std::printf("\n");
  for (ModelName m : table_rows()) {
    std::printf("%-26s", row_label(m).c_str());
    for (Regime c : table_columns()) {
      auto it = grid.find({static_cast<int>(m), static_cast<int>(c)});
      std::printf("%6s", it == grid.end() ? "-" : it->second.c_str());
    }
    std::printf("\n");
  }
  std::printf("\n* best-effort: equations are a standard form, not displayed in the source\n");
  std::printf("n/a: unsupported cell (Busemann jet equations unspecified)\n");
  return kOk;
}

int run_verify(const std::string& check, const std::string& grid, int dim, unsigned seed, const std::string& format) {
  const auto comma = grid.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::GridTooCoarse, "--grid expects 'coarse,fine'");
  const GridPair pair{std::stoi(grid.substr(0, comma)), std::stoi(grid.substr(comma + 1))};
  std::vector<std::string> names;
  if (check == "all") names = check_names();
  else names.push_back(check);
  json rows = json::array();
  for (const auto& name : names) {
    const IdentityReport rep = check_identity(name, pair, dim, seed);
    if (format == "json") rows.push_back(to_json(rep));
    else std::cout << render(rep) << "\n";
  }
  if (format == "json") std::cout << json{{"schema", kSchemaVersion}, {"reports", rows}}.dump(2) << "\n";
  return kOk;
}

int run_parse(const std::string& path) {
  const SystemFile sys = parse_system(read_file(path));
  const Ranking r = sys.effective_ranking();
  std::cout << "ok: " << sys.equations.size() << " equations, " << sys.symbols.size() << " indeterminates\n";
  for (const auto& e : sys.equations) std::cout << "  " << render(e, sys.symbols, r) << " = 0\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential elimination for fluid-model PDE systems"};
  app.require_subcommand(1);

  std::string format = "human";

  auto* reduce = app.add_subcommand("reduce", "Run Rosenfeld-Groebner on a system file");
  std::string reduce_file, ranking;
  BudgetArgs reduce_budget;
  reduce->add_option("file", reduce_file, "System file")->required();
  reduce->add_option("--ranking", ranking, "Ranking, e.g. \"u>v>w>p; prec x,y,z,t\"");
  reduce_budget.attach(reduce);
  add_format(reduce, format);

  auto* classify = app.add_subcommand("classify", "Classify a built-in model cell");
  std::string model, regime;
  bool curl_defs = true;
  BudgetArgs classify_budget;
  classify->add_option("--model", model, "Model name")->required();
  classify->add_option("--regime", regime, "Regime flag")->required();
  classify->add_flag("--with-curl-defs,!--without-curl-defs", curl_defs, "omega_rans: include curl definitions");
  classify_budget.attach(classify);
  add_format(classify, format);

  auto* table = app.add_subcommand("table1", "Run every supported reducibility-grid cell");
  BudgetArgs table_budget;
  bool timing = false;
  table_budget.attach(table);
  table->add_flag("--timing", timing, "Include wall-clock seconds (non-deterministic)");
  add_format(table, format);

  auto* verify = app.add_subcommand("verify", "Finite-difference identity checks");
  std::string check = "all", grid = "16,31";
  int dim = 3;
  unsigned seed = 1;
  verify->add_option("check", check, "Check name or 'all'");
  verify->add_option("--grid", grid, "Coarse and fine point counts");
  verify->add_option("--dim", dim, "Spatial dimension")->check(CLI::IsMember({2, 3}));
  verify->add_option("--seed", seed, "Field seed");
  add_format(verify, format);

  auto* parse = app.add_subcommand("parse", "Syntax-check a system file");
  std::string parse_file;
  parse->add_option("file", parse_file, "System file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*reduce) return run_reduce(reduce_file, ranking, reduce_budget.get(), format);
    if (*classify) return run_classify(model, regime, curl_defs, classify_budget.get(), format);
    if (*table) return run_table1(table_budget.get(), format, timing);
    if (*verify) return run_verify(check, grid, dim, seed, format);
    if (*parse) return run_parse(parse_file);
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error at " << e.line() << ":" << e.column() << ": " << e.message() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
