#include "prodnorm/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prodnorm/error.hpp"
#include "prodnorm/exact.hpp"
#include "prodnorm/expansions.hpp"
#include "prodnorm/harness.hpp"
#include "prodnorm/mc.hpp"

namespace prodnorm::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  DistParams params;
  std::string mode = "numeric";
  std::string side = "upper";
  std::string output = "text";
  std::string out_path;
  std::string form = "printed";
  std::string delta_form = "printed";
  std::string truth = "quadrature";
  int order = 2;
  double x = 0.0;
  double p = 0.0;
  long long n_samples = 1'000'000;
  long long count = 10;
  std::uint64_t seed = harness::kDefaultSeed;
  std::uint64_t substream = 0;
  unsigned threads = 0;
  int table_id = 0;
  std::string csv_out, json_out;
  exact::EvalConfig eval;
};

// One evaluated quantity, printed in the requested format.
struct Result {
  std::string quantity;
  double point = 0.0;
  double value = 0.0;
  std::optional<double> std_error;
  std::optional<bool> valid;
};

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

asym::Transcription transcription(const std::string& s) {
  return s == "corrected" ? asym::Transcription::corrected : asym::Transcription::printed;
}

asym::TailSide tail_side(const std::string& s) {
  return s == "lower" ? asym::TailSide::lower : asym::TailSide::upper;
}

void add_params(CLI::App* sub, Options& o) {
  sub->add_option("--mu-x", o.params.mu_x, "mean of X")->capture_default_str();
  sub->add_option("--mu-y", o.params.mu_y, "mean of Y")->capture_default_str();
  sub->add_option("--sigma-x", o.params.sigma_x, "standard deviation of X")->capture_default_str();
  sub->add_option("--sigma-y", o.params.sigma_y, "standard deviation of Y")->capture_default_str();
  sub->add_option("--rho", o.params.rho, "correlation of X and Y")->capture_default_str();
  sub->add_option("--n", o.params.n, "number of summed products")->capture_default_str();
}

void add_output(CLI::App* sub, Options& o) {
  sub->add_option("--output", o.output, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", o.out_path, "write to this file instead of stdout");
}

void add_mc(CLI::App* sub, Options& o) {
  sub->add_option("--n-samples", o.n_samples, "Monte Carlo sample size")->capture_default_str();
  sub->add_option("--seed", o.seed, std::string("master seed (default from ") + kSeedEnv + ")")
      ->capture_default_str();
  sub->add_option("--substream", o.substream, "random substream index")->capture_default_str();
  sub->add_option("--threads", o.threads, "worker threads, 0 = hardware concurrency")->capture_default_str();
}

void add_asym(CLI::App* sub, Options& o) {
  sub->add_option("--order", o.order, "number of correction terms of the expansion")->capture_default_str();
  sub->add_option("--side", o.side, "upper (x > 0) or lower (x < 0) expansion")
      ->check(CLI::IsMember({"upper", "lower"}))
      ->capture_default_str();
}

void write_result(std::ostream& os, const Options& o, const Result& r) {
  if (o.output == "json") {
    nlohmann::json j = {{"quantity", r.quantity},
                        {"mode", o.mode},
                        {"mu_x", o.params.mu_x},
                        {"mu_y", o.params.mu_y},
                        {"sigma_x", o.params.sigma_x},
                        {"sigma_y", o.params.sigma_y},
                        {"rho", o.params.rho},
                        {"n", o.params.n},
                        {"point", r.point},
                        {"value", r.value}};
    if (o.mode == "asym" && r.quantity != "quantile") {
      j["order"] = o.order;
      j["side"] = o.side;
    }
    if (r.std_error) j["std_error"] = *r.std_error;
    if (r.valid) j["valid"] = *r.valid;
    os << j.dump(2) << '\n';
  } else if (o.output == "csv") {
    os << "quantity,mode,point,value,std_error,valid\n"
       << r.quantity << ',' << o.mode << ',' << g17(r.point) << ',' << g17(r.value) << ','
       << (r.std_error ? g17(*r.std_error) : "") << ',' << (r.valid ? (*r.valid ? "true" : "false") : "") << '\n';
  } else {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.12g", r.value);
    os << buf;
    if (r.std_error) {
      std::snprintf(buf, sizeof buf, " (std error %.3g)", *r.std_error);
      os << buf;
    }
    if (r.valid && !*r.valid) os << " (outside the asymptotic regime)";
    os << '\n';
  }
}

Result do_pdf(const Options& o) {
  Result r{"pdf", o.x, 0.0, {}, {}};
  if (o.mode == "numeric")
    r.value = exact::pdf(o.params, o.x, o.eval);
  else if (o.mode == "exact-series")
    r.value = exact::pdf_series(o.params, o.x, o.eval);
  else if (o.mode == "exact-integral")
    r.value = exact::pdf_integral(o.params, o.x, o.eval);
  else if (o.mode == "exact-cui")
    r.value = exact::pdf_cui(o.params, o.x, o.eval);
  else if (o.mode == "asym")
    r.value = asym::pdf_asym(o.params, o.x, tail_side(o.side), o.order);
  else
    fail(ErrorKind::parameter, "pdf: mode " + o.mode + " is not available");
  return r;
}

Result do_tail(const Options& o) {
  // Upper side reports P(S_n > x), lower side P(S_n <= x), in every mode.
  const bool lower = o.side == "lower";
  Result r{lower ? "cdf" : "tail", o.x, 0.0, {}, {}};
  if (o.mode == "numeric") {
    r.value = lower ? exact::cdf(o.params, o.x, o.eval) : exact::tail(o.params, o.x, o.eval);
  } else if (o.mode == "asym") {
    r.value = asym::tail_asym(o.params, o.x, tail_side(o.side), o.order, transcription(o.delta_form));
  } else if (o.mode == "mc") {
    const auto e = mc::empirical_tail(o.params, o.x, o.n_samples, mc::RandomStream(o.seed, o.substream), o.threads);
    r.value = lower ? 1.0 - e.estimate : e.estimate;
    r.std_error = e.std_error;
  } else {
    fail(ErrorKind::parameter, "tail: mode " + o.mode + " is not available");
  }
  return r;
}

Result do_quantile(const Options& o) {
  Result r{"quantile", o.p, 0.0, {}, {}};
  if (o.mode == "numeric") {
    r.value = exact::quantile_numeric(o.params, o.p, o.eval);
  } else if (o.mode == "asym") {
    const auto q = asym::quantile_asym(o.params, o.p, transcription(o.form));
    r.value = q.value;
    r.valid = q.valid;
  } else if (o.mode == "mc") {
    const auto e = mc::empirical_quantile(o.params, o.p, o.n_samples, mc::RandomStream(o.seed, o.substream), o.threads);
    r.value = e.estimate;
    r.std_error = e.std_error;
  } else {
    fail(ErrorKind::parameter, "quantile: mode " + o.mode + " is not available");
  }
  return r;
}

void do_sample(const Options& o, std::ostream& os) {
  o.params.validate();
  if (o.count < 1) fail(ErrorKind::parameter, "sample: --count must be positive");
  // Same block layout as a Monte Carlo run, so sample i here equals sample i
  // of `sample_run` for the same seed and substream.
  mc::RandomStream stream(o.seed, o.substream);
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(o.count));
  for (long long i = 0; i < o.count; ++i) {
    stream.seek(static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(o.params.n));
    xs.push_back(mc::sample_sn(o.params, stream));
  }
  if (o.output == "json") {
    os << nlohmann::json(xs).dump() << '\n';
  } else {
    if (o.output == "csv") os << "index,value\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (o.output == "csv") os << i << ',';
      os << g17(xs[i]) << '\n';
    }
  }
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  body(f);
}

void do_table(const Options& o, std::ostream& os) {
  harness::HarnessConfig cfg;
  cfg.truth_mode = o.truth == "mc" ? harness::TruthMode::mc : harness::TruthMode::quadrature;
  cfg.n_samples = o.n_samples;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  cfg.eval = o.eval;
  cfg.delta_form = transcription(o.delta_form);
  cfg.quantile_form = transcription(o.form);
  const auto report = harness::reproduce_table(o.table_id, cfg);

  if (!o.csv_out.empty()) write_file(o.csv_out, [&](std::ostream& f) { harness::write_csv(f, report); });
  if (!o.json_out.empty()) write_file(o.json_out, [&](std::ostream& f) { harness::write_json(f, report); });
  if (o.output == "csv")
    harness::write_csv(os, report);
  else if (o.output == "json")
    harness::write_json(os, report);
  else
    harness::write_text(os, report);
}

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return harness::kDefaultSeed;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || *env == '-') throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer");
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Distribution of sums of products of correlated normals", "prodnorm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "read options from a TOML/INI file");
  app.add_option("--series-k-max", o.eval.series_k_max, "diagonals of the exact series before falling back")
      ->capture_default_str();
  app.add_option("--quad-rel-tol", o.eval.quad_rel_tol, "relative tolerance of exact quadrature")
      ->capture_default_str();
  app.add_option("--tail-cut", o.eval.tail_cut, "log range over which integrands are followed")
      ->capture_default_str();
  app.add_option("--specfun-max-terms", o.eval.specfun.max_terms, "term cap of special-function series")
      ->capture_default_str();

  auto* pdf = app.add_subcommand("pdf", "density at x");
  auto* tail = app.add_subcommand("tail", "P(S_n > x), or P(S_n <= x) with --side lower");
  auto* quant = app.add_subcommand("quantile", "quantile at probability p");
  auto* sample = app.add_subcommand("sample", "draw realisations of S_n");
  auto* table = app.add_subcommand("table", "regenerate an accuracy table");

  for (auto* sub : {pdf, tail, quant, sample}) add_params(sub, o);
  for (auto* sub : {pdf, tail, quant, sample, table}) add_output(sub, o);
  for (auto* sub : {tail, quant, table}) add_mc(sub, o);

  pdf->add_option("--x", o.x, "evaluation point")->required();
  pdf->add_option("--mode", o.mode, "numeric, exact-series, exact-integral, exact-cui or asym")
      ->check(CLI::IsMember({"numeric", "exact-series", "exact-integral", "exact-cui", "asym", "mc"}))
      ->capture_default_str();
  add_asym(pdf, o);

  tail->add_option("--x", o.x, "evaluation point")->required();
  tail->add_option("--mode", o.mode, "numeric, asym or mc; the exact-* modes apply to pdf only")
      ->check(CLI::IsMember({"numeric", "exact-series", "exact-integral", "asym", "mc"}))
      ->capture_default_str();
  tail->add_option("--delta-form", o.delta_form, "printed or corrected coefficients when R = 0")
      ->check(CLI::IsMember({"printed", "corrected"}))
      ->capture_default_str();
  add_asym(tail, o);

  quant->add_option("--p", o.p, "probability in (0, 1)")->required();
  quant->add_option("--mode", o.mode, "numeric, asym or mc; the exact-* modes apply to pdf only")
      ->check(CLI::IsMember({"numeric", "exact-series", "exact-integral", "asym", "mc"}))
      ->capture_default_str();
  quant->add_option("--form", o.form, "printed or corrected constant of the asym formula")
      ->check(CLI::IsMember({"printed", "corrected"}))
      ->capture_default_str();

  sample->add_option("--count", o.count, "number of realisations")->capture_default_str();
  sample->add_option("--seed", o.seed, std::string("master seed (default from ") + kSeedEnv + ")")
      ->capture_default_str();
  sample->add_option("--substream", o.substream, "random substream index")->capture_default_str();

  table->add_option("--id", o.table_id, "table number: 1, 3, 4 or 5")
      ->required()
      ->check(CLI::IsMember({1, 3, 4, 5}));
  table->add_option("--truth", o.truth, "quadrature or mc")
      ->check(CLI::IsMember({"quadrature", "mc"}))
      ->capture_default_str();
  table->add_option("--form", o.form, "printed or corrected constant of the quantile formula")
      ->check(CLI::IsMember({"printed", "corrected"}))
      ->capture_default_str();
  table->add_option("--delta-form", o.delta_form, "printed or corrected coefficients when R = 0")
      ->check(CLI::IsMember({"printed", "corrected"}))
      ->capture_default_str();
  table->add_option("--csv-out", o.csv_out, "also write the CSV report here");
  table->add_option("--json-out", o.json_out, "also write the JSON report here");

  try {
    o.seed = default_seed();
    std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 consumes from the back
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage-error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "usage-error: " << e.what() << '\n';
    return 2;
  }

  try {
    std::ofstream file;
    if (!o.out_path.empty()) {
      file.open(o.out_path);
      if (!file) throw UsageError("cannot open " + o.out_path + " for writing");
    }
    std::ostream& os = o.out_path.empty() ? out : file;
    os.precision(17);

    if (pdf->parsed())
      write_result(os, o, do_pdf(o));
    else if (tail->parsed())
      write_result(os, o, do_tail(o));
    else if (quant->parsed())
      write_result(os, o, do_quantile(o));
    else if (sample->parsed())
      do_sample(o, os);
    else
      do_table(o, os);
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "usage-error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace prodnorm::cli
