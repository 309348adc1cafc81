#include "latforge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "latforge/error.hpp"
#include "latforge/experiments.hpp"
#include "latforge/generators.hpp"
#include "latforge/hillclimb.hpp"
#include "latforge/lattice_io.hpp"
#include "latforge/ldsf.hpp"
#include "latforge/lll.hpp"
#include "latforge/pipeline.hpp"
#include "latforge/report.hpp"
#include "latforge/svp.hpp"

namespace latforge {

namespace {

using nlohmann::json;

struct GlobalOptions {
  std::string alpha = "0.99";
  std::uint64_t seed = 0;
  std::string in;
  std::string out_csv;
  std::string report;
  std::string out;
  bool timing = false;
};

// Comma-separated radii; "a-b" expands to every radius from a to b.
std::vector<std::size_t> parse_radii(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw LatticeError(ErrorCode::kBadParams,
                         "bad radius '" + s + "' in '" + text + "'");
    }
    return std::stoul(s);
  };
  while (std::getline(ss, item, ',')) {
    if (auto dash = item.find('-'); dash != std::string::npos) {
      const std::size_t lo = number(item.substr(0, dash));
      const std::size_t hi = number(item.substr(dash + 1));
      for (std::size_t r = lo; r <= hi; ++r) out.push_back(r);
    } else {
      out.push_back(number(item));
    }
  }
  if (out.empty()) {
    throw LatticeError(ErrorCode::kBadParams, "empty radius list");
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw LatticeError(ErrorCode::kBadParams, "cannot write '" + path + "'");
  f << content;
}

class Runner {
 public:
  Runner(const GlobalOptions& g, std::ostream& out) : g_(g), out_(out) {}

  LllParams alpha() const { return LllParams(parse_rational(g_.alpha)); }

  Basis input() const {
    if (g_.in.empty()) {
      throw LatticeError(ErrorCode::kBadParams, "--in FILE is required");
    }
    return read_lattice_file(g_.in).basis;
  }

  void emit_report(json report) const {
    if (g_.report.empty()) return;
    report["seed"] = std::to_string(g_.seed);
    report["alpha"] = alpha().alpha().get_str();
    write_file(g_.report, report.dump(2) + "\n");
  }

  void emit_csv(const std::string& csv) const {
    if (g_.out_csv.empty()) {
      out_ << csv;
    } else {
      write_file(g_.out_csv, csv);
    }
  }

  void emit_basis(const Basis& b) const {
    if (!g_.out.empty()) write_file(g_.out, serialize_lattice(b));
  }

  void summary(const std::string& label, const BasisMetrics& m) const {
    out_ << label << ": shortest " << format_real(m.shortest) << ", longest "
         << format_real(m.longest) << ", log10_weight "
         << format_real(m.log10_weight) << "\n";
  }

  const GlobalOptions& g_;
  std::ostream& out_;
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"latforge: lattice basis reduction by LLL, hill climbing and "
               "lattice diffusion / sublattice fusion"};
  app.name("latforge");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--alpha", g.alpha, "LLL parameter, e.g. 3/4 or 0.9999")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--in", g.in, "input lattice in bracket format");
  app.add_option("--out-csv", g.out_csv, "write CSV here instead of stdout");
  app.add_option("--report", g.report, "write a JSON report here");
  app.add_option("--out", g.out, "write the resulting basis here");
  app.add_flag("--timing", g.timing, "include wall-clock times in reports");

  auto* lll = app.add_subcommand("lll", "LLL-reduce the input basis");

  auto* hc = app.add_subcommand("hc", "hill climbing over permuted bases");
  std::optional<std::size_t> hc_radius, hc_r0;
  std::size_t hc_rstep = 1, hc_k = 10, hc_steps = 5;
  std::optional<unsigned long> hc_psl2;
  std::optional<long double> hc_target;
  auto* opt_radius = hc->add_option("--radius", hc_radius, "fixed radius (Type I)");
  auto* opt_r0 = hc->add_option("--r0", hc_r0, "starting radius (Type II)");
  hc->add_option("--rstep", hc_rstep, "radius increment (Type II)")
      ->capture_default_str()
      ->needs(opt_r0);
  auto* opt_psl2 = hc->add_option("--psl2", hc_psl2, "PSL(2,P) samples, rank P+1");
  opt_radius->excludes(opt_r0)->excludes(opt_psl2);
  opt_r0->excludes(opt_psl2);
  hc->add_option("--k", hc_k, "candidates per step")->capture_default_str();
  hc->add_option("--p", hc_steps, "maximum number of steps")->capture_default_str();
  hc->add_option("--target", hc_target, "stop at this shortest length");

  auto* ldsf = app.add_subcommand("ldsf", "lattice diffusion / sublattice fusion");
  LdsfConfig ldsf_cfg;
  std::optional<long double> ldsf_target;
  ldsf->add_option("--blocks", ldsf_cfg.servers, "block (server) count k")
      ->capture_default_str();
  ldsf->add_option("--beta", ldsf_cfg.block_rows, "initial block size, 0 = ceil(m/k)")
      ->capture_default_str();
  ldsf->add_option("--inner", ldsf_cfg.inner_iters, "inner iterations M")
      ->capture_default_str();
  ldsf->add_option("--outer", ldsf_cfg.outer_iters, "outer iterations N")
      ->capture_default_str();
  ldsf->add_option("--target", ldsf_target, "stop once b* <= target");

  auto* hybrid = app.add_subcommand("hybrid", "multistage LDSF pipeline");
  std::string stages_file;
  std::size_t hy_m = 3, hy_n = 10, hy_l = 2;
  hybrid->add_option("--stages", stages_file, "JSON stage list");
  hybrid->add_option("--m-blocks", hy_m, "four-stage default: stage 1-2 blocks")
      ->capture_default_str();
  hybrid->add_option("--n-sample", hy_n, "four-stage default: sample size")
      ->capture_default_str();
  hybrid->add_option("--l-blocks", hy_l, "four-stage default: stage 3 blocks")
      ->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "shortest-vector statistics per radius");
  std::string sweep_radii;
  std::size_t sweep_samples = 100;
  sweep->add_option("--radii", sweep_radii, "e.g. 5,10,15 or 2-52")->required();
  sweep->add_option("--samples", sweep_samples, "permutations per radius")
      ->capture_default_str();

  auto* freq = app.add_subcommand(
      "freq", "improvement frequency and averages per radius over LLL(B)");
  std::string freq_radii;
  std::size_t freq_samples = 100;
  freq->add_option("--radii", freq_radii, "default: every radius 2..m");
  freq->add_option("--samples", freq_samples, "permutations per radius")
      ->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "brute-force shortest vector");
  long oracle_bound = 2;
  std::uint64_t oracle_budget = kDefaultEnumerationBudget;
  oracle->add_option("--bound", oracle_bound, "coefficient box half-width")
      ->capture_default_str();
  oracle->add_option("--budget", oracle_budget, "maximum box size")
      ->capture_default_str();

  auto* gen = app.add_subcommand("gen", "write a synthetic test lattice");
  std::size_t gen_rank = 20, gen_bits = 60, gen_digits = 0;
  std::string gen_kind = "knapsack";
  long gen_range = 999;
  gen->add_option("--rank", gen_rank)->capture_default_str();
  gen->add_option("--kind", gen_kind, "knapsack | random")
      ->check(CLI::IsMember({"knapsack", "random"}))
      ->capture_default_str();
  gen->add_option("--bits", gen_bits, "knapsack weight size in bits")
      ->capture_default_str();
  gen->add_option("--digits", gen_digits, "knapsack weight size in digits");
  gen->add_option("--range", gen_range, "random entries in [-R, R]")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Runner run(g, out);
  try {
    if (*lll) {
      const Basis b = run.input();
      const LllParams params = run.alpha();
      const Basis reduced = lll_reduce(b, params);
      const BasisMetrics before = metrics(b);
      const BasisMetrics after = metrics(reduced, before.det_lattice);
      run.summary("input", before);
      run.summary("lll", after);
      run.emit_basis(reduced);
      run.emit_report(json{{"command", "lll"},
                           {"before", to_json(before)},
                           {"after", to_json(after)},
                           {"is_lll_reduced", is_lll_reduced(reduced, params)},
                           {"basis", to_json(reduced)}});
    } else if (*hc) {
      const Basis b = run.input();
      HcConfig cfg;
      if (hc_radius) {
        cfg.kind = FixedRadius{*hc_radius};
      } else if (hc_r0) {
        cfg.kind = VariableRadius{*hc_r0, hc_rstep};
      } else if (hc_psl2) {
        cfg.kind = Psl2{*hc_psl2};
      } else {
        err << "hc: one of --radius, --r0 or --psl2 is required\n";
        return kExitUsage;
      }
      cfg.sample_size = hc_k;
      cfg.max_steps = hc_steps;
      cfg.alpha = run.alpha();
      cfg.target_bound = hc_target;
      cfg.seed = g.seed;
      const HcTrace trace = hill_climb(b, cfg);
      run.summary("lll", trace.initial_metrics);
      run.summary("best", trace.best_metrics);
      out << "steps " << trace.steps.size() << ", target "
          << format_real(trace.target_bound)
          << (trace.target_met ? " met" : " not met") << "\n";
      run.emit_basis(trace.best_basis);
      json report = to_json(trace, g.timing);
      report["command"] = "hc";
      run.emit_report(std::move(report));
    } else if (*ldsf) {
      const Basis b = run.input();
      ldsf_cfg.alpha = run.alpha();
      ldsf_cfg.target_bound = ldsf_target;
      ldsf_cfg.seed = g.seed;
      const LdsfTrace trace = ldsf_run(b, ldsf_cfg);
      run.summary("input", metrics(b));
      out << "rounds " << trace.rounds.size() << ", b* "
          << format_real(trace.best_vector_norm) << "\n";
      run.emit_basis(trace.best_basis);
      json report = to_json(trace);
      report["command"] = "ldsf";
      run.emit_report(std::move(report));
    } else if (*hybrid) {
      const Basis b = run.input();
      std::vector<StageSpec> stages;
      if (!stages_file.empty()) {
        std::ifstream f(stages_file);
        if (!f) {
          throw LatticeError(ErrorCode::kBadParams,
                             "cannot open '" + stages_file + "'");
        }
        json j;
        try {
          j = json::parse(f);
        } catch (const json::exception& e) {
          throw LatticeError(ErrorCode::kBadStageParams,
                             stages_file + ": " + e.what());
        }
        stages = stages_from_json(j, run.alpha());
      } else {
        stages = default_four_stage(hy_m, hy_n, hy_l, run.alpha());
      }
      const PipelineReport report = run_pipeline(b, stages, g.seed);
      for (const auto& s : report.stages) {
        out << "stage " << s.index << " " << s.kind << ": llb "
            << format_real(s.llb) << ", lub " << format_real(s.lub) << "\n";
      }
      run.emit_basis(report.final_basis);
      json j = to_json(report, g.timing);
      j["command"] = "hybrid";
      j["stage_specs"] = stages_to_json(stages)["stages"];
      run.emit_report(std::move(j));
    } else if (*sweep) {
      const Basis b = run.input();
      const SweepResult result = radius_sweep(b, parse_radii(sweep_radii),
                                              sweep_samples, run.alpha(), g.seed);
      run.emit_csv(sweep_csv(result));
      json rows = json::array();
      for (const auto& r : result.rows) {
        rows.push_back(json{{"radius", std::to_string(r.radius)},
                            {"min", format_real(r.min)},
                            {"max", format_real(r.max)},
                            {"mean", format_real(r.mean)},
                            {"std", format_real(r.std)},
                            {"range", format_real(r.range)}});
      }
      run.emit_report(json{{"command", "sweep"}, {"rows", std::move(rows)}});
    } else if (*freq) {
      const Basis b = run.input();
      const LllParams params = run.alpha();
      const Basis reduced = lll_reduce(b, params);
      std::vector<std::size_t> radii;
      if (freq_radii.empty()) {
        for (std::size_t r = 2; r <= b.rank(); ++r) radii.push_back(r);
      } else {
        radii = parse_radii(freq_radii);
      }
      const auto profile =
          radius_profile(reduced, radii, freq_samples, params, g.seed);
      run.emit_csv(profile_csv(profile));
      json rows = json::array();
      for (const auto& r : profile) {
        rows.push_back(json{{"radius", std::to_string(r.radius)},
                            {"frequency", format_real(r.frequency)},
                            {"llb", format_real(r.llb)},
                            {"lub", format_real(r.lub)},
                            {"mwt", format_real(r.mwt)}});
      }
      run.emit_report(json{{"command", "freq"},
                           {"lll", to_json(metrics(reduced))},
                           {"rows", std::move(rows)}});
    } else if (*oracle) {
      const Basis b = run.input();
      const SvpResult r = svp_oracle(b, oracle_bound, oracle_budget);
      out << "lambda1 " << format_real(r.lambda1) << " (" << r.count_checked
          << " vectors checked)\n";
      json report = to_json(r);
      report["command"] = "oracle";
      run.emit_report(std::move(report));
    } else if (*gen) {
      Rng rng = make_rng(g.seed, {});
      Basis b = gen_kind == "random"
                    ? random_basis(gen_rank, gen_rank, -gen_range, gen_range, rng)
                : gen_digits > 0 ? knapsack_lattice_digits(gen_rank, gen_digits, rng)
                                 : knapsack_lattice(gen_rank, gen_bits, rng);
      if (g.out.empty()) {
        out << serialize_lattice(b);
      } else {
        run.emit_basis(b);
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << g.in << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const LatticeError& e) {
    err << "error: " << e.what() << "\n";
    return e.is_usage_error() ? kExitUsage : kExitComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitOk;
}

int cli_main(int argc, char** argv) {
  return cli_main(std::vector<std::string>(argv, argv + argc), std::cout,
                  std::cerr);
}

}  // namespace latforge
