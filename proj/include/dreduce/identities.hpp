#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dreduce {

struct GridPair {
  int coarse = 16;
  int fine = 31;
};

enum class IdentityClass { exact_zero, converging, non_vanishing };

std::string to_string(IdentityClass c);

inline constexpr double kExactZeroTolerance = 1e-10;
inline constexpr double kConvergingOrder = 1.5;

struct IdentityReport {
  std::string check;
  int dim = 3;
  GridPair grid;
  double residual_coarse = 0;
  double residual_fine = 0;
  std::optional<double> observed_order;  // absent when a residual is at rounding level
  IdentityClass classification = IdentityClass::exact_zero;
  bool measurement_only = false;  // reported, never asserted
};

const std::vector<std::string>& check_names();

/// Throws UnknownCheck, GridTooCoarse. Checks named *_2d_* or *_3d run in
/// their own dimension regardless of |dim|.
IdentityReport check_identity(const std::string& name, GridPair grid, int dim, unsigned seed);

IdentityClass classify_residuals(double coarse, double fine, std::optional<double> order);

nlohmann::json to_json(const IdentityReport& r);
std::string render(const IdentityReport& r);

}  // namespace dreduce
