#pragma once

// Front-end support shared by the edmoduli executable, the tests and the
// Python bindings: point reports, CSV emission and the subcommand driver.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "edm/moduli.hpp"
#include "edm/space.hpp"

namespace edm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitOffVariety = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 73;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CheckReport {
  ModuliParams params;
  RicciData ricci;
  double q_residual = 0.0;
  bool on_variety = false;
  std::optional<double> lambda;
  int lambda_sign = 0;
  std::optional<ErrorCode> error;
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;
  bool flat = false;
  double curvature_max_norm = 0.0;
  double einstein_residual = 0.0;
  int einstein_sign = 0;
  std::optional<double> invariant;
  std::optional<ErrorCode> invariant_error;

  [[nodiscard]] int exit_code() const;
};

[[nodiscard]] CheckReport make_check_report(const ModuliParams& p, double tol = kVarietyTolerance);
[[nodiscard]] nlohmann::json to_json(const CheckReport& r);

/// Formats with 17 significant digits.
[[nodiscard]] std::string format_number(double x);

inline constexpr const char* kTraceHeader = "M,L,A,B,C,S,lambda,vol,invariant,error";

void write_trace_csv(std::ostream& os, const CurveBranch& branch);

struct FigureGrid {
  double m_min = 0.02;
  double m_max = 20.0;
  int samples = 500;
};

/// Writes fig1_L.csv ... fig6_inv_minus.csv (and .svg files when requested)
/// into dir. Returns the written paths. Throws IoError.
std::vector<std::filesystem::path> write_figures(const std::filesystem::path& dir, bool svg,
                                                 const FigureGrid& grid = {});

/// Runs the command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edm::cli
