#pragma once

// Regeneration of the reference accuracy tables.
//
//   table 1  density, n = 1, x in {2.5, ..., 15}, orders 0-2, truth = exact pdf
//   table 3  upper tail at x = Q(p), n = 1, orders 0-2
//   table 4  upper tail at x = Q(p), n in {3, 5, 7}, order 2
//   table 5  quantile approximation against Q(p), n in {3, 5, 7}
//
// Rows are ordered (mu_x, mu_y, rho) block first, then n, then order, then
// the column value, which matches the printed layout row by row.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "prodnorm/coefficients.hpp"
#include "prodnorm/exact.hpp"
#include "prodnorm/params.hpp"

namespace prodnorm::harness {

enum class TruthMode { quadrature, mc };
enum class Method { order0, order1, order2, quantile_approx };
enum class RowStatus { ok, not_applicable };

std::string to_string(Method m);
std::string to_string(RowStatus s);

struct TableRow {
  int table_id = 0;
  DistParams params;
  double point = 0.0;  ///< x for table 1, p otherwise
  double x = 0.0;      ///< evaluation point; for table 5 the reference quantile
  Method method = Method::order0;
  double approx = 0.0;
  double truth = 0.0;
  double rel_err = 0.0;
  RowStatus status = RowStatus::ok;
};

struct TableReport {
  int table_id = 0;
  TruthMode truth_mode = TruthMode::quadrature;
  std::vector<TableRow> rows;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct HarnessConfig {
  TruthMode truth_mode = TruthMode::quadrature;
  long long n_samples = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
  exact::EvalConfig eval{};
  asym::Transcription delta_form = asym::Transcription::printed;
  asym::Transcription quantile_form = asym::Transcription::printed;
};

/// (approx - truth) / truth; Error(domain) when truth is zero.
double relative_error(double approx, double truth);

/// The nine (mu_x, mu_y, rho) blocks in reference order, sigma = 1.
std::vector<DistParams> table_blocks(int n);

const std::vector<double>& table1_points();
const std::vector<double>& quantile_levels();

/// Throws Error(parameter) for an unknown table id.
TableReport reproduce_table(int table_id, const HarnessConfig& cfg = {});

/// Two significant figures in the reference style, e.g. "-8.4E-03";
/// "N/A" for NaN.
std::string format_2sf(double v);

void write_csv(std::ostream& os, const TableReport& report);
void write_json(std::ostream& os, const TableReport& report);
/// Fixed-width layout with one printed row per line and 2 s.f. cells.
void write_text(std::ostream& os, const TableReport& report);

}  // namespace prodnorm::harness
