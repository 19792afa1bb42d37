#include "wmnorm/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "wmnorm/error.hpp"

namespace wmnorm {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, std::string_view what) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw std::invalid_argument("cannot parse " + std::string(what) + " '" +
                                std::string(text) + "'");
  }
  return value;
}

// "name=value" with the expected name.
double parse_named(std::string_view body, std::string_view name) {
  const auto eq = body.find('=');
  if (eq == std::string_view::npos || trim(body.substr(0, eq)) != name) {
    throw std::invalid_argument("expected '" + std::string(name) +
                                "=<float>', got '" + std::string(body) + "'");
  }
  return parse_double(body.substr(eq + 1), name);
}

// Running Neumaier-compensated prefix sums.
std::vector<double> prefix_sums(std::span<const double> values) {
  std::vector<double> out;
  out.reserve(values.size());
  double sum = 0.0;
  double comp = 0.0;
  for (double x : values) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
    out.push_back(sum + comp);
  }
  return out;
}

}  // namespace

Family Family::cesaro() { return Family{FamilyKind::cesaro, 0.0, {}}; }

Family Family::power(double alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("power family requires alpha > -1");
  }
  return Family{FamilyKind::power, alpha, {}};
}

Family Family::geometric(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw std::invalid_argument("geometric family requires rho > 0");
  }
  return Family{FamilyKind::geometric, rho, {}};
}

Family Family::custom(std::vector<double> values) {
  return Family{FamilyKind::custom, 0.0, std::move(values)};
}

std::string Family::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
    case FamilyKind::cesaro: os << "cesaro"; break;
    case FamilyKind::power: os << "power:alpha=" << parameter; break;
    case FamilyKind::geometric: os << "geometric:rho=" << parameter; break;
    case FamilyKind::custom: os << "custom[" << values.size() << "]"; break;
  }
  return os.str();
}

Family parse_family(std::string_view spec) {
  spec = trim(spec);
  if (spec == "cesaro") return Family::cesaro();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("unknown weight family '" + std::string(spec) +
                                "'");
  }
  const auto head = spec.substr(0, colon);
  const auto body = spec.substr(colon + 1);
  if (head == "power") return Family::power(parse_named(body, "alpha"));
  if (head == "geometric") return Family::geometric(parse_named(body, "rho"));
  if (head == "file") return Family::custom(read_weight_file(std::string(body)));
  throw std::invalid_argument("unknown weight family '" + std::string(spec) +
                              "'");
}

std::vector<double> parse_weight_text(std::istream& in) {
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const double value =
        parse_double(view, "weight on line " + std::to_string(lineno));
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw InvalidWeight(out.size(), "weight on line " +
                                          std::to_string(lineno) +
                                          " is not a positive number");
    }
    out.push_back(value);
  }
  return out;
}

std::vector<double> read_weight_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open weight file '" + path.string() + "'");
  }
  return parse_weight_text(in);
}

WeightSequence::WeightSequence(std::vector<double> lambdas, Family family)
    : lambdas_(std::move(lambdas)), family_(std::move(family)) {
  if (lambdas_.empty()) {
    throw InvalidWeight(0, "weight sequence must have at least one entry");
  }
  for (std::size_t i = 0; i < lambdas_.size(); ++i) {
    const double x = lambdas_[i];
    if (!std::isfinite(x)) {
      throw InvalidWeight(i, "weight at position " + std::to_string(i) +
                                 " is not finite");
    }
    if (!(x > 0.0)) {
      throw InvalidWeight(i, "weight at position " + std::to_string(i) +
                                 " is not positive");
    }
  }
  cumsums_ = prefix_sums(lambdas_);
  if (!std::isfinite(cumsums_.back())) {
    throw InvalidWeight(lambdas_.size() - 1, "prefix sum overflows");
  }
}

std::vector<double> WeightSequence::ratios() const {
  std::vector<double> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = ratio(i);
  return out;
}

WeightSequence WeightSequence::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("scale factor must be positive");
  }
  std::vector<double> out(lambdas_);
  for (double& x : out) x *= factor;
  return WeightSequence(std::move(out), family_);
}

WeightSequence make_weights(const Family& family, std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  std::vector<double> lambdas(n);
  switch (family.kind) {
    case FamilyKind::cesaro:
      std::fill(lambdas.begin(), lambdas.end(), 1.0);
      break;
    case FamilyKind::power:
      if (!(family.parameter > -1.0)) {
        throw std::invalid_argument("power family requires alpha > -1");
      }
      for (std::size_t k = 1; k <= n; ++k) {
        lambdas[k - 1] = std::pow(static_cast<double>(k), family.parameter);
      }
      break;
    case FamilyKind::geometric:
      if (!(family.parameter > 0.0)) {
        throw std::invalid_argument("geometric family requires rho > 0");
      }
      for (std::size_t k = 1; k <= n; ++k) {
        lambdas[k - 1] = std::pow(family.parameter, static_cast<double>(k));
      }
      break;
    case FamilyKind::custom:
      if (family.values.size() < n) {
        throw std::invalid_argument(
            "custom weights have " + std::to_string(family.values.size()) +
            " entries, " + std::to_string(n) + " requested");
      }
      std::copy_n(family.values.begin(), n, lambdas.begin());
      break;
  }
  return WeightSequence(std::move(lambdas), family);
}

RatioProfile ratio_profile(const WeightSequence& w) {
  if (w.size() < 2) {
    throw std::invalid_argument("ratio profile needs N >= 2");
  }
  RatioProfile p;
  p.ratios = w.ratios();
  p.diffs.resize(w.size() - 1);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    p.diffs[i] = p.ratios[i + 1] - p.ratios[i];
  }
  p.l_trunc = *std::max_element(p.diffs.begin(), p.diffs.end());
  return p;
}

}  // namespace wmnorm
