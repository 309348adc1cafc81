#include "latforge/report.hpp"

#include <string>

#include "latforge/error.hpp"
#include "latforge/experiments.hpp"

namespace latforge {

using nlohmann::json;

json to_json(const BasisMetrics& m) {
  return json{{"shortest", format_real(m.shortest)},
              {"longest", format_real(m.longest)},
              {"log10_weight", format_real(m.log10_weight)},
              {"det_lattice", format_real(m.det_lattice)}};
}

json to_json(const Basis& b) {
  json rows = json::array();
  for (const auto& row : b.rows()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    rows.push_back(std::move(r));
  }
  return rows;
}

json to_json(const Permutation& p) {
  json out = json::array();
  for (std::size_t x : p.cartesian()) out.push_back(std::to_string(x));
  return out;
}

json to_json(const SvpResult& r) {
  json v = json::array(), c = json::array();
  for (const auto& x : r.vector) v.push_back(x.get_str());
  for (const auto& x : r.coefficients) c.push_back(x.get_str());
  return json{{"vector", v},
              {"coefficients", c},
              {"norm_sq", r.norm_sq.get_str()},
              {"lambda1", format_real(r.lambda1)},
              {"count_checked", std::to_string(r.count_checked)}};
}

json to_json(const HcTrace& t, bool timing) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json step{{"step", std::to_string(s.index)},
              {"radius", std::to_string(s.radius)},
              {"permutation", to_json(s.chosen)},
              {"metrics", to_json(s.metrics)},
              {"improved", s.improved},
              {"best_shortest", format_real(s.best_shortest)}};
    if (timing) step["elapsed_seconds"] = std::to_string(s.elapsed_seconds);
    steps.push_back(std::move(step));
  }
  json out{{"initial_metrics", to_json(t.initial_metrics)},
           {"steps", std::move(steps)},
           {"best_metrics", to_json(t.best_metrics)},
           {"best_basis", to_json(t.best_basis)},
           {"target_bound", format_real(t.target_bound)},
           {"target_met", t.target_met},
           {"stopped_by_target", t.stopped_by_target}};
  if (timing) {
    out["seconds_to_best"] = std::to_string(t.seconds_to_best);
    out["total_seconds"] = std::to_string(t.total_seconds);
  }
  return out;
}

json to_json(const LdsfTrace& t) {
  json rounds = json::array();
  for (const auto& r : t.rounds) {
    json blocks = json::array();
    for (const auto& m : r.block_metrics) blocks.push_back(to_json(m));
    rounds.push_back(json{{"outer", std::to_string(r.outer)},
                          {"inner", std::to_string(r.inner)},
                          {"blocks", std::to_string(r.blocks)},
                          {"beta", std::to_string(r.beta)},
                          {"block_metrics", std::move(blocks)},
                          {"fused", to_json(r.fused)},
                          {"permutation", to_json(r.permutation)},
                          {"best_so_far", format_real(r.best_so_far)}});
  }
  return json{{"rounds", std::move(rounds)},
              {"best_vector_norm", format_real(t.best_vector_norm)},
              {"min_longest", format_real(t.min_longest)},
              {"best_basis", to_json(t.best_basis)},
              {"stopped_by_target", t.stopped_by_target}};
}

json to_json(const PipelineReport& r, bool timing) {
  json stages = json::array();
  for (const auto& s : r.stages) {
    json stage{{"stage", std::to_string(s.index)},
               {"kind", s.kind},
               {"blocks", std::to_string(s.blocks)},
               {"samples", std::to_string(s.samples)},
               {"before", to_json(s.before)},
               {"after", to_json(s.after)},
               {"llb", format_real(s.llb)},
               {"lub", format_real(s.lub)}};
    if (timing) stage["seconds"] = std::to_string(s.seconds);
    stages.push_back(std::move(stage));
  }
  json out{{"stages", std::move(stages)},
           {"llb_inversions", std::to_string(r.llb_inversions)},
           {"final_basis", to_json(r.final_basis)}};
  if (timing) out["total_seconds"] = std::to_string(r.total_seconds);
  return out;
}

json stages_to_json(const std::vector<StageSpec>& stages) {
  json list = json::array();
  for (const auto& s : stages) {
    json j{{"kind", stage_name(s.kind)}, {"alpha", s.alpha.alpha().get_str()}};
    if (const auto* l = std::get_if<LdsfStage>(&s.kind)) {
      j["blocks"] = l->blocks;
    } else if (const auto* g = std::get_if<SigmaStage>(&s.kind)) {
      j["blocks"] = g->blocks;
      j["samples"] = g->samples;
    }
    if (s.target_bound) j["target"] = format_real(*s.target_bound);
    if (s.inner_iters) j["inner"] = *s.inner_iters;
    if (s.outer_iters) j["outer"] = *s.outer_iters;
    list.push_back(std::move(j));
  }
  return json{{"stages", std::move(list)}};
}

namespace {

std::size_t count_field(const json& j, const char* key, std::size_t index) {
  const json& v = j.at(key);
  if (!v.is_number_unsigned() || v.get<std::size_t>() < 1) {
    throw LatticeError(ErrorCode::kBadStageParams,
                       "stage " + std::to_string(index + 1) + ": '" + key +
                           "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

std::vector<StageSpec> stages_from_json(const json& j,
                                        const LllParams& default_alpha) {
  const json* list = &j;
  if (j.is_object()) list = &j.at("stages");
  if (!list->is_array() || list->empty()) {
    throw LatticeError(ErrorCode::kBadStageParams,
                       "expected a non-empty list of stages");
  }
  std::vector<StageSpec> out;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const json& s = (*list)[i];
    try {
      StageSpec spec;
      spec.alpha = default_alpha;
      const std::string kind = s.at("kind").get<std::string>();
      if (kind == "ldsf") {
        spec.kind = LdsfStage{count_field(s, "blocks", i)};
      } else if (kind == "sigma") {
        spec.kind =
            SigmaStage{count_field(s, "blocks", i), count_field(s, "samples", i)};
      } else if (kind == "lll") {
        spec.kind = LllStage{};
      } else {
        throw LatticeError(ErrorCode::kBadStageParams,
                           "stage " + std::to_string(i + 1) +
                               ": unknown kind '" + kind + "'");
      }
      if (s.contains("alpha")) {
        spec.alpha = LllParams(parse_rational(s["alpha"].get<std::string>()));
      }
      if (s.contains("target")) {
        const json& t = s["target"];
        spec.target_bound = t.is_string() ? std::stold(t.get<std::string>())
                                          : t.get<long double>();
      }
      if (s.contains("inner")) spec.inner_iters = count_field(s, "inner", i);
      if (s.contains("outer")) spec.outer_iters = count_field(s, "outer", i);
      out.push_back(std::move(spec));
    } catch (const LatticeError&) {
      throw;
    } catch (const std::exception& e) {
      throw LatticeError(ErrorCode::kBadStageParams,
                         "stage " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace latforge
