#include "wmnorm/cli.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "wmnorm/certificates.hpp"
#include "wmnorm/error.hpp"
#include "wmnorm/matrices.hpp"
#include "wmnorm/report.hpp"
#include "wmnorm/spectral.hpp"
#include "wmnorm/weights.hpp"
#include "wmnorm/wirtinger.hpp"

namespace wmnorm::cli {
namespace {

constexpr double kBisectionTol = 1e-12;
constexpr double kPowerTol = 1e-10;
constexpr const char* kTruncationWarning =
    "warning: l_trunc is the maximum ratio difference over n < N only; "
    "the bound is certified for this truncation, not for sup_n\n";

std::string num17(double v) {
  if (!std::isfinite(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num6(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

class Table {
 public:
  void row(std::string key, std::string value) {
    rows_.emplace_back(std::move(key), std::move(value));
  }
  void row(std::string key, double value) { row(std::move(key), num6(value)); }
  void print(std::ostream& os) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) {
      os << std::left << std::setw(static_cast<int>(width) + 2) << k << v
         << '\n';
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

Format format_or(const RunConfig& cfg, Format fallback) {
  return cfg.output.value_or(fallback);
}

double bisection_tol(const RunConfig& cfg) {
  return cfg.tol.value_or(kBisectionTol);
}
double power_tol(const RunConfig& cfg) { return cfg.tol.value_or(kPowerTol); }

// l_trunc over the truncation. N = 1 has no consecutive pair, so the
// profile is taken over the first two weights when the family has them.
std::optional<double> truncated_l(const Family& family, std::size_t n) {
  if (n >= 2) return ratio_profile(make_weights(family, n)).l_trunc;
  if (family.unbounded() || family.values.size() >= 2) {
    return ratio_profile(make_weights(family, 2)).l_trunc;
  }
  return std::nullopt;
}

struct NormRow {
  std::size_t n = 0;
  std::optional<double> l_trunc;
  SpectralResult sigma;
  SpectralResult lambda_min;
  std::optional<double> bound;  // only when l_trunc < 2
};

NormRow compute_norm_row(const Family& family, std::size_t n,
                         const RunConfig& cfg) {
  const WeightSequence w = make_weights(family, n);
  NormRow row;
  row.n = n;
  row.l_trunc = cfg.l_override ? cfg.l_override : truncated_l(family, n);
  row.sigma = power_norm(LowerTriangularMean(w), power_tol(cfg));
  row.lambda_min =
      eigen_extreme(build_gram_inverse(w), Extreme::min, bisection_tol(cfg));
  if (row.l_trunc && *row.l_trunc < 2.0) row.bound = 2.0 / (2.0 - *row.l_trunc);
  return row;
}

bool within(const NormRow& row) {
  return !row.bound || row.sigma.value <= *row.bound * (1.0 + 1e-12);
}

}  // namespace

int cmd_norm(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Family family = parse_family(cfg.weights_spec);
  const NormRow row = compute_norm_row(family, cfg.n, cfg);
  const bool ok = within(row);
  const bool claimed = row.bound.has_value();

  if (row.l_trunc && !claimed) {
    err << "Cartlidge condition fails at p=2; no bound claimed\n";
  } else if (claimed && !cfg.l_override) {
    err << kTruncationWarning;
  }

  switch (format_or(cfg, Format::table)) {
    case Format::table: {
      Table t;
      t.row("weights", family.describe());
      t.row("n", std::to_string(cfg.n));
      t.row("sigma_max", row.sigma.value);
      t.row("lambda_min", row.lambda_min.value);
      t.row("l_trunc", row.l_trunc ? num6(*row.l_trunc) : "n/a");
      if (claimed) {
        t.row("bound", *row.bound);
        t.row("within_bound", ok ? "yes" : "NO");
      } else {
        t.row("bound", "none claimed");
      }
      t.row("iterations", std::to_string(row.sigma.iterations));
      t.print(out);
      break;
    }
    case Format::json: {
      nlohmann::ordered_json j = {
          {"weights", family.describe()},
          {"n", cfg.n},
          {"sigma_max", row.sigma.value},
          {"lambda_min", row.lambda_min.value},
          {"l_trunc", row.l_trunc ? nlohmann::ordered_json(*row.l_trunc) : nullptr},
          {"bound", row.bound ? nlohmann::ordered_json(*row.bound) : nullptr},
          {"within_bound", ok},
          {"power_iterations", row.sigma.iterations},
          {"converged", row.sigma.converged},
      };
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "n,l_trunc,sigma_max,lambda_min,bound,within_bound\n"
          << cfg.n << ',' << (row.l_trunc ? num17(*row.l_trunc) : "") << ','
          << num17(row.sigma.value) << ',' << num17(row.lambda_min.value)
          << ',' << (row.bound ? num17(*row.bound) : "") << ','
          << (ok ? "true" : "false") << '\n';
      break;
  }
  return ok ? kOk : kViolation;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Family family = parse_family(cfg.weights_spec);
  const WeightSequence w = make_weights(family, cfg.n);
  double l = 0.0;
  if (cfg.l_override) {
    l = *cfg.l_override;
  } else if (const auto lt = truncated_l(family, cfg.n)) {
    l = *lt;
  } else {
    err << "N = 1 custom weights give no l_trunc; pass --l\n";
    return kUsageError;
  }

  const Certificate cert = build_certificate(w, l);
  const ChainReport chain = verify_34_chain(cert, w);
  const QuadraticBoundReport bound =
      verify_quadratic_bound(w, l, cfg.trials, cfg.seed);
  const bool ok = chain.ok() && bound.ok();
  if (!cfg.l_override) err << kTruncationWarning;

  const nlohmann::ordered_json j = certify_json(cert, chain, bound);
  switch (format_or(cfg, Format::json)) {
    case Format::json:
      out << j.dump(2) << '\n';
      break;
    case Format::table: {
      Table t;
      t.row("weights", family.describe());
      t.row("n", std::to_string(cfg.n));
      t.row("l", cert.l);
      t.row("k", cert.k);
      t.row("c", cert.c);
      t.row("min_slack34", std::isfinite(chain.min_slack34)
                               ? num6(chain.min_slack34)
                               : std::string("n/a"));
      t.row("tail_slack", chain.tail_slack);
      t.row("lambda_min", bound.lambda_min.value);
      t.row("k_bound", bound.k_bound);
      t.row("sigma_max", bound.sigma_max.value);
      t.row("norm_bound", bound.norm_bound);
      t.row("violations", std::to_string(j["violations"].size()));
      t.print(out);
      break;
    }
    case Format::csv:
      out << "l,k,c,min_slack34,tail_slack,lambda_min,k_bound,sigma_max,"
             "norm_bound,violations\n"
          << num17(cert.l) << ',' << num17(cert.k) << ',' << num17(cert.c)
          << ',' << num17(chain.min_slack34) << ',' << num17(chain.tail_slack)
          << ',' << num17(bound.lambda_min.value) << ','
          << num17(bound.k_bound) << ',' << num17(bound.sigma_max.value)
          << ',' << num17(bound.norm_bound) << ',' << j["violations"].size()
          << '\n';
      break;
  }
  return ok ? kOk : kViolation;
}

int cmd_wirtinger(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const FttMatrix ftt = make_ftt_matrix(cfg.a, cfg.b, cfg.n);
  const std::vector<double> closed =
      ftt_eigenvalues_closed_form(cfg.a, cfg.b, cfg.n);
  const double tol = bisection_tol(cfg);

  // Full comparison for small N, extremes only above that.
  std::vector<double> bisected;
  if (cfg.n <= 64) {
    for (std::size_t i = 0; i < cfg.n; ++i) {
      bisected.push_back(eigenvalue_at(ftt.matrix, i, tol).value);
    }
  } else {
    bisected = {eigen_extreme(ftt.matrix, Extreme::min, tol).value,
                eigen_extreme(ftt.matrix, Extreme::max, tol).value};
  }
  double discrepancy = 0.0;
  if (bisected.size() == closed.size()) {
    for (std::size_t i = 0; i < closed.size(); ++i) {
      discrepancy = std::max(discrepancy, std::abs(closed[i] - bisected[i]));
    }
  } else {
    discrepancy = std::max(std::abs(closed.front() - bisected.front()),
                           std::abs(closed.back() - bisected.back()));
  }
  const bool spectrum_ok = discrepancy < 1e-10;

  const FttReport ineq =
      verify_ftt_inequalities(cfg.n, cfg.a, cfg.b, cfg.trials, cfg.seed);
  std::optional<SineCheckReport> plus, minus;
  if (cfg.n >= 2) {
    plus = sine_certificate_check(cfg.a, cfg.b, cfg.n, SineSign::plus);
    minus = sine_certificate_check(cfg.a, cfg.b, cfg.n, SineSign::minus);
  }
  const bool ok = spectrum_ok && ineq.ok() && (!plus || plus->ok()) &&
                  (!minus || minus->ok());

  switch (format_or(cfg, Format::table)) {
    case Format::table: {
      out << "k  closed_form  bisection\n";
      if (bisected.size() == closed.size()) {
        for (std::size_t i = 0; i < closed.size(); ++i) {
          out << i + 1 << "  " << num6(closed[i]) << "  " << num6(bisected[i])
              << '\n';
        }
      } else {
        out << "min  " << num6(closed.front()) << "  "
            << num6(bisected.front()) << '\n'
            << "max  " << num6(closed.back()) << "  " << num6(bisected.back())
            << '\n';
      }
      Table t;
      t.row("max_discrepancy", discrepancy);
      t.row("lower_constant", ineq.constants.lower);
      t.row("upper_constant", ineq.constants.upper);
      t.row("min_ratio", ineq.min_ratio);
      t.row("max_ratio", ineq.max_ratio);
      t.row("trials", std::to_string(ineq.trials));
      t.row("violations", std::to_string(ineq.violations.size()));
      if (plus) {
        t.row("sine_plus", plus->ok() ? "ok" : "FAILED");
        t.row("sine_minus", minus->ok() ? "ok" : "FAILED");
      }
      t.print(out);
      break;
    }
    case Format::json: {
      nlohmann::ordered_json j = {{"n", cfg.n},
                          {"a", cfg.a},
                          {"b", cfg.b},
                          {"closed_form", closed},
                          {"bisection", bisected},
                          {"max_discrepancy", discrepancy},
                          {"inequalities", to_json(ineq)}};
      if (plus) {
        j["sine_plus"] = to_json(*plus);
        j["sine_minus"] = to_json(*minus);
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "n,a,b,closed_min,closed_max,bisection_min,bisection_max,"
             "max_discrepancy,violations\n"
          << cfg.n << ',' << num17(cfg.a) << ',' << num17(cfg.b) << ','
          << num17(closed.front()) << ',' << num17(closed.back()) << ','
          << num17(bisected.front()) << ',' << num17(bisected.back()) << ','
          << num17(discrepancy) << ',' << ineq.violations.size() << '\n';
      break;
  }
  return ok ? kOk : kViolation;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Family family = parse_family(cfg.weights_spec);
  std::vector<std::size_t> sizes = cfg.sweep;
  if (sizes.empty()) sizes.push_back(cfg.n);
  for (std::size_t n : sizes) {
    if (n == 0) throw std::invalid_argument("sweep sizes must be >= 1");
  }

  std::vector<std::future<NormRow>> pending;
  pending.reserve(sizes.size());
  for (std::size_t n : sizes) {
    pending.push_back(std::async(std::launch::async, [&family, n, &cfg] {
      return compute_norm_row(family, n, cfg);
    }));
  }
  std::vector<NormRow> rows;
  for (auto& f : pending) rows.push_back(f.get());

  bool ok = true;
  for (const auto& r : rows) ok = ok && within(r);
  if (!cfg.l_override) err << kTruncationWarning;

  const Format fmt = format_or(cfg, Format::csv);
  if (fmt == Format::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json k = nullptr;
      if (r.bound) k = (2.0 - *r.l_trunc) * (2.0 - *r.l_trunc) / 4.0;
      arr.push_back({{"n", r.n},
                     {"l_trunc", r.l_trunc ? nlohmann::ordered_json(*r.l_trunc) : nullptr},
                     {"sigma_max", r.sigma.value},
                     {"lambda_min", r.lambda_min.value},
                     {"bound", r.bound ? nlohmann::ordered_json(*r.bound) : nullptr},
                     {"k", k}});
    }
    out << arr.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    out << "N,l_trunc,sigma_max,lambda_min,bound,k\n";
    for (const auto& r : rows) {
      out << r.n << ',' << (r.l_trunc ? num17(*r.l_trunc) : "") << ','
          << num17(r.sigma.value) << ',' << num17(r.lambda_min.value) << ',';
      if (r.bound) {
        const double l = *r.l_trunc;
        out << num17(*r.bound) << ',' << num17((2.0 - l) * (2.0 - l) / 4.0);
      } else {
        out << ',';
      }
      out << '\n';
    }
  } else {
    out << std::left << std::setw(10) << "N" << std::setw(14) << "l_trunc"
        << std::setw(14) << "sigma_max" << std::setw(14) << "lambda_min"
        << std::setw(14) << "bound" << "k\n";
    for (const auto& r : rows) {
      const std::string lt = r.l_trunc ? num6(*r.l_trunc) : "n/a";
      const std::string bd = r.bound ? num6(*r.bound) : "-";
      const std::string k =
          r.bound ? num6((2.0 - *r.l_trunc) * (2.0 - *r.l_trunc) / 4.0) : "-";
      out << std::setw(10) << r.n << std::setw(14) << lt << std::setw(14)
          << num6(r.sigma.value) << std::setw(14) << num6(r.lambda_min.value)
          << std::setw(14) << bd << k << '\n';
    }
  }
  return ok ? kOk : kViolation;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.n < 1) throw std::invalid_argument("--n must be >= 1");
    if (cfg.tol && !(*cfg.tol > 0.0)) {
      throw std::invalid_argument("--tol must be positive");
    }
    if (cfg.l_override &&
        !(std::isfinite(*cfg.l_override) && *cfg.l_override > 0.0)) {
      throw std::invalid_argument("--l must be a finite positive number");
    }
    if (cfg.trials < 1) throw std::invalid_argument("--trials must be >= 1");
    switch (cfg.command) {
      case Command::norm: return cmd_norm(cfg, out, err);
      case Command::certify: return cmd_certify(cfg, out, err);
      case Command::wirtinger: return cmd_wirtinger(cfg, out, err);
      case Command::sweep: return cmd_sweep(cfg, out, err);
    }
  } catch (const ConditionViolated& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"l2 norms of weighted mean matrices and their certificates",
               "wmnorm"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format;
  std::string sweep;
  double l = 0.0;
  double tol = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--weights", cfg.weights_spec,
                    "cesaro | power:alpha=<f> | geometric:rho=<f> | file:<path>");
    sub->add_option("--n", cfg.n, "truncation size N");
    sub->add_option("--l", l, "L value to certify against (default l_trunc)");
    sub->add_option("--tol", tol, "solver tolerance");
    sub->add_option("--trials", cfg.trials, "random trials");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--format", format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--a", cfg.a, "FTT parameter a");
    sub->add_option("--b", cfg.b, "FTT parameter b");
    sub->add_option("--sweep", sweep, "comma-separated list of N values");
  };

  struct Entry {
    const char* name;
    const char* help;
    Command command;
  };
  const Entry entries[] = {
      {"norm", "sigma_max(B_N), lambda_min(A^-1) and the Cartlidge bound",
       Command::norm},
      {"certify", "build and check the multiplier certificate (JSON)",
       Command::certify},
      {"wirtinger", "tridiagonal Toeplitz eigenvalues and inequalities",
       Command::wirtinger},
      {"sweep", "norm rows for a list of N values (CSV)", Command::sweep},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub);
    subs.emplace_back(sub, e.command);
  }

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  for (const auto& [sub, command] : subs) {
    if (!sub->parsed()) continue;
    cfg.command = command;
    if (sub->count("--l") > 0) cfg.l_override = l;
    if (sub->count("--tol") > 0) cfg.tol = tol;
    if (!format.empty()) {
      cfg.output = format == "json"  ? Format::json
                   : format == "csv" ? Format::csv
                                     : Format::table;
    }
  }

  if (!sweep.empty()) {
    std::stringstream ss(sweep);
    std::string item;
    try {
      while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        const long long v = std::stoll(item, &pos);
        if (pos != item.size() || v < 1) throw std::invalid_argument(item);
        cfg.sweep.push_back(static_cast<std::size_t>(v));
      }
    } catch (const std::exception&) {
      err << "error: --sweep expects positive integers, got '" << sweep
          << "'\n";
      return kUsageError;
    }
  }
  return execute(cfg, out, err);
}

}  // namespace wmnorm::cli
