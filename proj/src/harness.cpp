#include "prodnorm/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <ostream>

#include <json.hpp>

#include "prodnorm/error.hpp"
#include "prodnorm/expansions.hpp"
#include "prodnorm/mc.hpp"
#include "prodnorm/rng.hpp"

namespace prodnorm::harness {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Method order_method(int order) {
  switch (order) {
    case 0: return Method::order0;
    case 1: return Method::order1;
    default: return Method::order2;
  }
}

std::vector<int> table_ns(int table_id) {
  return table_id == 1 || table_id == 3 ? std::vector<int>{1} : std::vector<int>{3, 5, 7};
}

std::vector<int> table_orders(int table_id) {
  if (table_id == 1 || table_id == 3) return {0, 1, 2};
  if (table_id == 4) return {2};
  return {-1};
}

// Reference quantiles for one parameter set: numerically exact, or the
// k-th largest of one Monte Carlo run.
class QuantileSource {
 public:
  QuantileSource(const DistParams& params, const HarnessConfig& cfg, std::uint64_t substream)
      : params_(params), cfg_(cfg), substream_(substream) {}

  double quantile(double p) {
    if (cfg_.truth_mode == TruthMode::quadrature) return dist().quantile(p);
    if (samples_.empty()) {
      samples_ = mc::sample_run(params_, cfg_.n_samples, mc::RandomStream(cfg_.seed, substream_), cfg_.threads);
      std::sort(samples_.begin(), samples_.end());
    }
    const auto n = static_cast<long long>(samples_.size());
    const long long k = static_cast<long long>(std::floor(static_cast<double>(n) * (1.0 - p))) + 1;
    return samples_[static_cast<std::size_t>(std::clamp(n - k, 0LL, n - 1))];
  }

  // Probability above x. Under Monte Carlo truth x is the empirical
  // quantile, whose tail is 1 - p by construction.
  double tail(double x, double p) {
    return cfg_.truth_mode == TruthMode::quadrature ? dist().tail(x) : 1.0 - p;
  }

 private:
  const exact::Distribution& dist() {
    if (!dist_) dist_ = std::make_unique<exact::Distribution>(params_, cfg_.eval);
    return *dist_;
  }

  DistParams params_;
  const HarnessConfig& cfg_;
  std::uint64_t substream_;
  std::unique_ptr<exact::Distribution> dist_;
  std::vector<double> samples_;
};

void finish(TableRow& row) {
  if (row.status == RowStatus::not_applicable) {
    row.approx = kNaN;
    row.rel_err = kNaN;
  } else {
    row.rel_err = relative_error(row.approx, row.truth);
  }
}

std::string csv_number(double v) {
  if (std::isnan(v)) return "NaN";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::order0: return "order-0";
    case Method::order1: return "order-1";
    case Method::order2: return "order-2";
    case Method::quantile_approx: return "quantile-approx";
  }
  return "unknown";
}

std::string to_string(RowStatus s) { return s == RowStatus::ok ? "ok" : "not-applicable"; }

double relative_error(double approx, double truth) {
  if (truth == 0.0) fail(ErrorKind::domain, "relative_error: truth is zero");
  return (approx - truth) / truth;
}

std::vector<DistParams> table_blocks(int n) {
  std::vector<DistParams> out;
  for (double mu_y : {-1.0, 0.0, 1.0}) {
    for (double rho : {-0.5, 0.0, 0.5}) {
      DistParams p;
      p.mu_x = 1.0;
      p.mu_y = mu_y;
      p.rho = rho;
      p.n = n;
      out.push_back(p);
    }
  }
  return out;
}

const std::vector<double>& table1_points() {
  static const std::vector<double> xs = {2.5, 5.0, 7.5, 10.0, 12.5, 15.0};
  return xs;
}

const std::vector<double>& quantile_levels() {
  static const std::vector<double> ps = {0.95, 0.975, 0.99, 0.995, 0.999, 0.9999};
  return ps;
}

TableReport reproduce_table(int table_id, const HarnessConfig& cfg) {
  if (table_id != 1 && table_id != 3 && table_id != 4 && table_id != 5)
    fail(ErrorKind::parameter, "table id must be one of 1, 3, 4, 5");
  cfg.eval.validate();
  if (cfg.truth_mode == TruthMode::mc && cfg.n_samples < mc::kMinSamples)
    fail(ErrorKind::parameter, "Monte Carlo truth needs at least 1000 samples");

  TableReport report;
  report.table_id = table_id;
  report.truth_mode = table_id == 1 ? TruthMode::quadrature : cfg.truth_mode;

  const auto blocks = table_blocks(1);
  std::uint64_t set_index = 0;
  for (const DistParams& block : blocks) {
    for (int n : table_ns(table_id)) {
      DistParams params = block;
      params.n = n;
      QuantileSource source(params, cfg, static_cast<std::uint64_t>(table_id) * 1000 + set_index++);

      // Reference points are shared by all orders of a parameter set.
      std::vector<double> xs, truths;
      if (table_id == 1) {
        for (double x : table1_points()) {
          xs.push_back(x);
          truths.push_back(exact::pdf(params, x, cfg.eval));
        }
      } else {
        for (double p : quantile_levels()) {
          const double x = source.quantile(p);
          xs.push_back(x);
          truths.push_back(table_id == 5 ? x : (x > 0.0 ? source.tail(x, p) : kNaN));
        }
      }

      for (int order : table_orders(table_id)) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
          TableRow row;
          row.table_id = table_id;
          row.params = params;
          row.point = table_id == 1 ? xs[i] : quantile_levels()[i];
          row.x = xs[i];
          row.truth = truths[i];
          row.method = order < 0 ? Method::quantile_approx : order_method(order);
          row.status = xs[i] > 0.0 ? RowStatus::ok : RowStatus::not_applicable;
          if (row.status == RowStatus::ok) {
            if (table_id == 1)
              row.approx = asym::pdf_asym(params, xs[i], asym::TailSide::upper, order);
            else if (table_id == 5)
              row.approx = asym::quantile_asym(params, row.point, cfg.quantile_form).value;
            else
              row.approx = asym::tail_asym(params, xs[i], asym::TailSide::upper, order, cfg.delta_form);
          }
          finish(row);
          report.rows.push_back(row);
        }
      }
    }
  }
  return report;
}

std::string format_2sf(double v) {
  if (std::isnan(v)) return "N/A";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1E", v);
  return buf;
}

void write_csv(std::ostream& os, const TableReport& report) {
  os << "table_id,mu_x,mu_y,rho,n,point,method,approx,truth,rel_err,status\n";
  for (const auto& r : report.rows) {
    os << r.table_id << ',' << csv_number(r.params.mu_x) << ',' << csv_number(r.params.mu_y) << ','
       << csv_number(r.params.rho) << ',' << r.params.n << ',' << csv_number(r.point) << ','
       << to_string(r.method) << ',' << csv_number(r.approx) << ',' << csv_number(r.truth) << ','
       << csv_number(r.rel_err) << ',' << to_string(r.status) << '\n';
  }
}

void write_json(std::ostream& os, const TableReport& report) {
  // NaN has no JSON literal; nlohmann writes it as null.
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"table_id", r.table_id},
                    {"mu_x", r.params.mu_x},
                    {"mu_y", r.params.mu_y},
                    {"sigma_x", r.params.sigma_x},
                    {"sigma_y", r.params.sigma_y},
                    {"rho", r.params.rho},
                    {"n", r.params.n},
                    {"point", r.point},
                    {"x", r.x},
                    {"method", to_string(r.method)},
                    {"approx", r.approx},
                    {"truth", r.truth},
                    {"rel_err", r.rel_err},
                    {"status", to_string(r.status)}});
  }
  os << rows.dump(2) << '\n';
}

void write_text(std::ostream& os, const TableReport& report) {
  const bool density = report.table_id == 1;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%5s %5s %5s %2s %-15s", "mu_x", "mu_y", "rho", "n", "method");
  os << buf;
  for (double c : density ? table1_points() : quantile_levels()) {
    std::snprintf(buf, sizeof buf, " %9g", c);
    os << buf;
  }
  os << '\n';

  const std::size_t width = density ? table1_points().size() : quantile_levels().size();
  for (std::size_t i = 0; i < report.rows.size(); i += width) {
    const TableRow& head = report.rows[i];
    std::snprintf(buf, sizeof buf, "%5g %5g %5g %2d %-15s", head.params.mu_x, head.params.mu_y, head.params.rho,
                  head.params.n, to_string(head.method).c_str());
    os << buf;
    for (std::size_t j = i; j < std::min(i + width, report.rows.size()); ++j) {
      std::snprintf(buf, sizeof buf, " %9s", format_2sf(report.rows[j].rel_err).c_str());
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace prodnorm::harness
