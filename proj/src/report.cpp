#include "wmnorm/report.hpp"

#include <cmath>

namespace wmnorm {
namespace {

nlohmann::ordered_json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json certify_json(const Certificate& cert, const ChainReport& chain,
                            const QuadraticBoundReport& bound) {
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  const std::size_t tail_index = cert.mu.size() - 1;
  for (const auto& v : chain.violations) {
    violations.push_back({{"kind", v.index == tail_index ? "tail" : "slack34"},
                          {"index", v.index},
                          {"value", v.value}});
  }
  for (const auto& v : bound.violations) {
    violations.push_back(
        {{"kind", "quadratic"}, {"lhs", v.lhs}, {"rhs", v.rhs},
         {"witness", v.witness}});
  }
  if (!bound.spectral_ok) {
    violations.push_back({{"kind", "lambda_min"},
                          {"value", bound.lambda_min.value - bound.k_bound}});
  }
  if (!bound.norm_ok) {
    violations.push_back({{"kind", "sigma_max"},
                          {"value", bound.sigma_max.value - bound.norm_bound}});
  }
  if (!chain.ok() && chain.violations.empty()) {
    violations.push_back({{"kind", "reduction_chain"},
                          {"coefficient", chain.coefficient},
                          {"constant", chain.constant},
                          {"equivalence_error", chain.max_equivalence_error},
                          {"recompute_error", chain.max_recompute_error}});
  }
  return {
      {"l", cert.l},
      {"k", cert.k},
      {"c", cert.c},
      {"min_slack34", finite_or_null(chain.min_slack34)},
      {"tail_slack", chain.tail_slack},
      {"lambda_min", bound.lambda_min.value},
      {"k_bound", bound.k_bound},
      {"sigma_max", bound.sigma_max.value},
      {"norm_bound", bound.norm_bound},
      {"violations", violations},
  };
}

nlohmann::ordered_json to_json(const SpectralResult& r) {
  return {{"value", r.value},
          {"method", std::string(to_string(r.method))},
          {"iterations", r.iterations},
          {"uncertainty", r.uncertainty},
          {"converged", r.converged}};
}

nlohmann::ordered_json to_json(const FttReport& r) {
  return {{"n", r.n},
          {"a", r.a},
          {"b", r.b},
          {"trials", r.trials},
          {"lower_constant", r.constants.lower},
          {"upper_constant", r.constants.upper},
          {"min_ratio", finite_or_null(r.min_ratio)},
          {"max_ratio", finite_or_null(r.max_ratio)},
          {"violations", r.violations.size()}};
}

nlohmann::ordered_json to_json(const SineCheckReport& r) {
  return {{"sign", r.certificate.sign == SineSign::plus ? "plus" : "minus"},
          {"t", r.certificate.t},
          {"mu", r.certificate.mu},
          {"target", r.target},
          {"max_deviation", r.max_deviation},
          {"directions_ok", r.directions_ok},
          {"ok", r.ok()}};
}

}  // namespace wmnorm
