#pragma once

#include "json.hpp"

#include "wmnorm/certificates.hpp"
#include "wmnorm/spectral.hpp"
#include "wmnorm/wirtinger.hpp"

namespace wmnorm {

/// {l, k, c, min_slack34, tail_slack, lambda_min, k_bound, sigma_max,
///  norm_bound, violations: [{kind, index, value}]}
/// min_slack34 is null when N = 1.
nlohmann::ordered_json certify_json(const Certificate& cert, const ChainReport& chain,
                            const QuadraticBoundReport& bound);

nlohmann::ordered_json to_json(const SpectralResult& r);
nlohmann::ordered_json to_json(const FttReport& r);
nlohmann::ordered_json to_json(const SineCheckReport& r);

}  // namespace wmnorm
