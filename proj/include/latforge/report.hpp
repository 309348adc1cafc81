#pragma once

#include <nlohmann/json.hpp>

#include <vector>

#include "latforge/basis.hpp"
#include "latforge/hillclimb.hpp"
#include "latforge/ldsf.hpp"
#include "latforge/metrics.hpp"
#include "latforge/perm.hpp"
#include "latforge/pipeline.hpp"
#include "latforge/svp.hpp"

namespace latforge {

// JSON renderings of the library's results. Every number is written as a
// decimal string so 1000-digit entries survive. Wall-clock fields appear
// only when `timing` is set, which keeps reports byte-identical across runs
// with the same seed.

nlohmann::json to_json(const BasisMetrics& m);
nlohmann::json to_json(const Basis& b);
nlohmann::json to_json(const Permutation& p);  // 1-based Cartesian form
nlohmann::json to_json(const SvpResult& r);
nlohmann::json to_json(const HcTrace& t, bool timing);
nlohmann::json to_json(const LdsfTrace& t);
nlohmann::json to_json(const PipelineReport& r, bool timing);

// Stage lists, e.g.
//   {"stages": [{"kind": "ldsf", "blocks": 3},
//               {"kind": "sigma", "blocks": 6, "samples": 10, "inner": 2},
//               {"kind": "lll", "alpha": "0.99"}]}
// "alpha", "target", "inner" and "outer" are optional on every stage; a
// missing alpha falls back to `default_alpha`.
nlohmann::json stages_to_json(const std::vector<StageSpec>& stages);
std::vector<StageSpec> stages_from_json(const nlohmann::json& j,
                                        const LllParams& default_alpha);

}  // namespace latforge
