// lrcc: construct, convert and verify locally repairable convertible codes
// in the merge regime, with every claimed property checked by brute force.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "lrcc/json_io.hpp"

namespace {

using namespace lrcc;

struct CliState {
  Config cfg = Config::from_env();
  std::string format = "pretty";  // pretty | json | csv
  int verbosity = 0;
};

std::vector<elem_t> random_codeword(const LinearCode& C, std::mt19937_64& rng) {
  const FieldTower& F = *C.tower();
  std::uniform_int_distribution<std::uint64_t> dist(0, F.size() - 1);
  std::vector<elem_t> msg(C.k());
  for (auto& m : msg) m = static_cast<elem_t>(dist(rng));
  return encode(C, msg);
}

BuiltCode construct_from_file(const ojson& j, const CliState& st) {
  std::string schema = j.value("schema", "");
  if (schema == "lrcc.base_a/1") {
    return build_base_a(base_a_spec_from_json(j, st.cfg), st.cfg);
  }
  if (schema == "lrcc.base_b/1") {
    return build_base_b(base_b_spec_from_json(j, st.cfg), st.cfg);
  }
  if (schema == "lrcc.family_a/1") {
    BaseCodeASpec initial = base_a_spec_from_json(j.at("initial"), st.cfg);
    std::size_t shared = j.at("shared_index").get<std::size_t>();
    std::vector<elem_t> leaders = j.at("leaders").get<std::vector<elem_t>>();
    return build_base_a(merged_family_spec_a(initial, shared, leaders), st.cfg);
  }
  if (schema == "lrcc.code/1") return built_code_from_json(j, st.cfg);
  fail_usage(Errc::parse_error, "unrecognized input schema '" + schema + "'");
}

std::optional<std::vector<PlanScaling>> scalings_from_file(const ojson& j,
                                                           std::size_t t,
                                                           const CliState& st) {
  std::string schema = j.value("schema", "");
  if (schema == "lrcc.base_b/1")
    return plan_scalings_base_b(base_b_spec_from_json(j, st.cfg), t);
  if (schema == "lrcc.family_a/1") {
    BaseCodeASpec initial = base_a_spec_from_json(j.at("initial"), st.cfg);
    std::size_t shared = j.at("shared_index").get<std::size_t>();
    std::vector<elem_t> leaders = j.at("leaders").get<std::vector<elem_t>>();
    BaseCodeASpec merged = merged_family_spec_a(initial, shared, leaders);
    return plan_scalings_base_a(merged, leaders, initial.m - 1);
  }
  fail_usage(Errc::parse_error, "same-initial scalings need a base_b or family_a spec");
}

// Parity-check matrix with the repair-group block boundaries drawn in.
void print_block_form(std::ostream& os, const BuiltCode& bc) {
  const MatrixGF& H = bc.code.H();
  const FieldTower& F = *bc.code.tower();
  const std::size_t w = bc.blocks.width();
  std::size_t cell = 1;
  for (std::size_t i = 0; i < H.rows(); ++i)
    for (std::size_t j = 0; j < H.cols(); ++j)
      cell = std::max(cell, F.to_string(H.at(i, j)).size());
  for (std::size_t i = 0; i < H.rows(); ++i) {
    if (i == bc.blocks.g() * bc.blocks.local_rows()) {
      for (std::size_t j = 0; j < H.cols() * (cell + 1) + H.cols() / w * 2; ++j)
        os << "-";
      os << "\n";
    }
    for (std::size_t j = 0; j < H.cols(); ++j) {
      if (j && j % w == 0) os << "| ";
      std::string s = F.to_string(H.at(i, j));
      os << s << std::string(cell + 1 - s.size(), ' ');
    }
    os << "\n";
  }
}

void emit(const ojson& j, const std::string& out_path) {
  if (!out_path.empty()) {
    save_json_file(out_path, j);
    return;
  }
  std::cout << j.dump(2) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for locally repairable convertible codes"};
  app.require_subcommand(1);
  app.fallthrough();
  CliState st;
  app.add_option("--format", st.format, "pretty | json | csv")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));
  app.add_option("--work-ceiling", st.cfg.distance_work_ceiling,
                 "work-unit budget for exhaustive searches");
  app.add_option("--seed", st.cfg.seed, "seed for randomized inputs");
  app.add_flag("-v,--verbose", st.verbosity, "more progress output");

  // ---- construct ----
  auto* c_cmd = app.add_subcommand("construct", "build a base code from a spec file");
  std::string c_in, c_out, c_csv;
  c_cmd->add_option("spec", c_in, "spec file (base_a, family_a, base_b)")->required();
  c_cmd->add_option("-o,--out", c_out, "write the code JSON here");
  c_cmd->add_option("--csv", c_csv, "also dump H as CSV with polynomial entries");

  // ---- plan ----
  auto* p_cmd = app.add_subcommand("plan", "derive a merge-conversion plan");
  std::string p_in, p_out;
  std::size_t p_t = 0, p_h = 0;
  bool p_same = false;
  p_cmd->add_option("base", p_in, "spec or code file for the base code")->required();
  p_cmd->add_option("-t,--initial-count", p_t, "number of initial codes")->required();
  p_cmd->add_option("--retained", p_h, "retained shared blocks kept in the final code")->required();
  p_cmd->add_flag("--same-initial", p_same, "attach same-initial-code scalings");
  p_cmd->add_option("-o,--out", p_out, "write the plan JSON here");

  // ---- convert ----
  auto* v_cmd = app.add_subcommand("convert", "execute conversions against a plan");
  std::string v_plan, v_out;
  std::vector<std::string> v_inputs;
  std::size_t v_random = 0;
  bool v_same = false;
  v_cmd->add_option("--plan", v_plan, "plan JSON")->required();
  v_cmd->add_option("--inputs", v_inputs, "codeword files, one per initial code");
  v_cmd->add_option("--random", v_random, "run N conversions on random codewords");
  v_cmd->add_flag("--same-initial", v_same, "use the same-initial-code procedure");
  v_cmd->add_option("-o,--out", v_out, "write traces here");

  // ---- verify ----
  auto* f_cmd = app.add_subcommand("verify", "check properties of a built code");
  std::string f_in, f_regime = "auto";
  bool f_loc = false, f_opt = false, f_mr = false, f_dist = false;
  f_cmd->add_option("code", f_in, "code file (or spec file)")->required();
  f_cmd->add_flag("--locality", f_loc, "repair-group locality");
  f_cmd->add_flag("--optimal", f_opt, "distance matches the regime bound");
  f_cmd->add_flag("--mr", f_mr, "maximal recoverability, exhaustive");
  f_cmd->add_flag("--distance", f_dist, "exact minimum distance");
  f_cmd->add_option("--regime", f_regime, "classic | improved | auto")
      ->check(CLI::IsMember({"classic", "improved", "auto"}));

  // ---- bounds ----
  auto* b_cmd = app.add_subcommand("bounds", "access-cost lower bound tables");
  bool b_fig1 = false;
  long long b_nF = 0, b_k = 0, b_t = 0, b_r = 0, b_delta = 2, b_d = 0, b_nI = 0;
  std::string b_out;
  b_cmd->add_flag("--fig1-grid", b_fig1, "emit the comparison grid as CSV");
  b_cmd->add_option("--nF", b_nF, "final length");
  b_cmd->add_option("--k", b_k, "per-initial dimension");
  b_cmd->add_option("--t", b_t, "initial-code count");
  b_cmd->add_option("--r", b_r, "locality");
  b_cmd->add_option("--delta", b_delta, "local distance");
  b_cmd->add_option("--d", b_d, "final distance");
  b_cmd->add_option("--nI", b_nI, "initial length");
  b_cmd->add_option("-o,--out", b_out, "write CSV/JSON here");

  CLI11_PARSE(app, argc, argv);
  st.cfg.mr_work_ceiling = st.cfg.distance_work_ceiling;

  if (c_cmd->parsed()) {
    ojson spec = load_json_file(c_in);
    BuiltCode bc = construct_from_file(spec, st);
    ojson out = built_code_to_json(bc);
    if (!c_csv.empty()) {
      std::ofstream f(c_csv);
      f << matrix_to_csv(bc.code.H());
    }
    if (st.format == "pretty") {
      std::cout << "[" << bc.code.n() << ", " << bc.code.k() << "] code over GF("
                << bc.code.tower()->size() << "), " << bc.blocks.g() << " repair groups of "
                << bc.blocks.width() << "\n";
      if (st.verbosity > 0) print_block_form(std::cout, bc);
      if (!c_out.empty()) save_json_file(c_out, out);
    } else {
      emit(out, c_out);
    }
    return 0;
  }

  if (p_cmd->parsed()) {
    ojson in = load_json_file(p_in);
    BuiltCode base = construct_from_file(in, st);
    std::optional<std::vector<PlanScaling>> sc;
    if (p_same) sc = scalings_from_file(in, p_t, st);
    ConversionPlan plan = make_plan(base, p_t, p_h, std::move(sc), st.cfg);
    ojson out = plan_to_json(plan);
    if (st.format == "pretty") {
      std::cout << "plan: t=" << plan.t << " h=" << plan.h << " s=" << plan.s
                << "  initial [" << plan.n_I() << ", " << plan.s * plan.base.part.r
                << "]  final [" << plan.n_F() << ", " << plan.final_code.k() << "]\n";
      if (!p_out.empty()) save_json_file(p_out, out);
    } else {
      emit(out, p_out);
    }
    return 0;
  }

  if (v_cmd->parsed()) {
    ConversionPlan plan = plan_from_json(load_json_file(v_plan), st.cfg);
    std::vector<std::vector<std::vector<elem_t>>> batches;
    if (v_random > 0) {
      std::mt19937_64 rng(st.cfg.seed);
      for (std::size_t run = 0; run < v_random; ++run) {
        std::vector<std::vector<elem_t>> cws;
        for (std::size_t i = 0; i < plan.t; ++i)
          cws.push_back(random_codeword(plan.initial_codes[v_same ? 0 : i], rng));
        batches.push_back(std::move(cws));
      }
    } else {
      if (v_inputs.size() != plan.t)
        fail_usage(Errc::dimension_mismatch, "need one codeword file per initial code");
      std::vector<std::vector<elem_t>> cws;
      for (const auto& path : v_inputs)
        cws.push_back(codeword_from_json(load_json_file(path)));
      batches.push_back(std::move(cws));
    }
    ojson traces = ojson::array();
    for (const auto& cws : batches) {
      ConversionTrace tr = v_same ? convert_same_initial(plan, cws) : convert(plan, cws);
      AuditReport audit = audit_optimality(plan, tr);
      ojson entry = trace_to_json(tr);
      entry["audit"] = ojson{{"rho_r", audit.rho_r},
                             {"rho_w", audit.rho_w},
                             {"bound_rho_r", audit.bound.rho_r},
                             {"bound_rho_w", audit.bound.rho_w},
                             {"read_optimal", audit.read_optimal},
                             {"write_optimal", audit.write_optimal},
                             {"baseline_reads", audit.baseline_reads},
                             {"baseline_writes", audit.baseline_writes}};
      traces.push_back(std::move(entry));
      if (st.format == "pretty")
        std::cout << "rho_r=" << tr.rho_r << " rho_w=" << tr.rho_w
                  << (audit.read_optimal && audit.write_optimal ? "  access-optimal"
                                                                : "  SUBOPTIMAL")
                  << " (baseline reads " << audit.baseline_reads << ", writes "
                  << audit.baseline_writes << ")\n";
    }
    ojson out{{"schema", "lrcc.traces/1"}, {"traces", std::move(traces)}};
    if (st.format != "pretty" || !v_out.empty()) emit(out, v_out);
    return 0;
  }

  if (f_cmd->parsed()) {
    ojson in = load_json_file(f_in);
    BuiltCode bc = construct_from_file(in, st);
    PhiRegime regime = f_regime == "auto"
                           ? bc.regime
                           : (f_regime == "improved" ? PhiRegime::improved
                                                     : PhiRegime::classic);
    bool all_pass = true;
    ojson rep = ojson::object();
    if (f_dist || f_opt) {
      int d = min_distance(bc.code, st.cfg);
      bc.code.cache_distance(d);
      rep["distance"] = d;
      std::cout << "distance: " << d << "\n";
    }
    if (f_loc) {
      LocalityReport lr = verify_locality(bc.code, bc.part, st.cfg);
      rep["locality"] = lr.pass;
      all_pass &= lr.pass;
      std::cout << "locality: " << (lr.pass ? "pass" : "FAIL") << "\n";
      if (!lr.pass)
        std::cout << "  first failing group: " << *lr.first_failing_group << "\n";
    }
    if (f_opt) {
      bool opt = is_optimal_lrc(bc.code, bc.part, regime, st.cfg);
      long long bound =
          singleton_bound(static_cast<long long>(bc.code.n()),
                          static_cast<long long>(bc.code.k()),
                          static_cast<long long>(bc.part.r),
                          static_cast<long long>(bc.part.delta),
                          regime == PhiRegime::improved);
      rep["optimal"] = opt;
      rep["distance_bound"] = bound;
      all_pass &= opt;
      std::cout << "optimal (" << (regime == PhiRegime::improved ? "improved" : "classic")
                << " bound " << bound << "): " << (opt ? "pass" : "FAIL") << "\n";
    }
    if (f_mr) {
      MrReport mr = is_mr(bc.code, bc.part, st.cfg);
      rep["mr"] = mr.mr;
      rep["patterns_checked"] = mr.patterns_checked;
      all_pass &= mr.mr;
      std::cout << "maximally recoverable: " << (mr.mr ? "pass" : "FAIL") << " ("
                << mr.patterns_checked << "/" << mr.patterns_total << " patterns)\n";
      if (mr.witness_kept) {
        std::cout << "  witness kept coordinates:";
        for (auto c : *mr.witness_kept) std::cout << " " << c;
        std::cout << "\n";
      }
    }
    if (st.format == "json") std::cout << rep.dump(2) << "\n";
    if (!all_pass) return 2;
    return 0;
  }

  if (b_cmd->parsed()) {
    std::ostringstream csv;
    if (b_fig1) {
      // three initial codes [80, 40], final [120/rate, 120, 15] with
      // (10, delta) locality, rates 0.05..0.95
      csv << "rate,delta,rho_r_old,rho_r_new\n";
      for (int ri = 1; ri <= 19; ++ri) {
        double rate = 0.05 * ri;
        long long nF = std::llround(120.0 / rate);
        for (long long delta : {3LL, 4LL, 5LL}) {
          BoundInputs bi{nF, 40, 3, 10, delta, 15, 80, PhiRegime::classic};
          csv << rate << "," << delta << "," << access_lb_old(bi).rho_r << ","
              << access_lb_new(bi).rho_r << "\n";
        }
      }
      if (!b_out.empty()) {
        std::ofstream f(b_out);
        f << csv.str();
      } else {
        std::cout << csv.str();
      }
      return 0;
    }
    if (!b_nF || !b_k || !b_t || !b_r || !b_d || !b_nI)
      fail_usage(Errc::parse_error, "bounds needs --nF --k --t --r --d --nI (or --fig1-grid)");
    ojson rows = ojson::array();
    for (PhiRegime regime : {PhiRegime::classic, PhiRegime::improved}) {
      BoundInputs bi{b_nF, b_k, b_t, b_r, b_delta, b_d, b_nI, regime};
      AccessBound old_b = access_lb_old(bi), new_b = access_lb_new(bi);
      const char* rn = regime == PhiRegime::classic ? "classic" : "improved";
      rows.push_back(ojson{{"regime", rn},
                           {"rho_r_old", old_b.rho_r},
                           {"rho_w_old", old_b.rho_w},
                           {"rho_r_new", new_b.rho_r},
                           {"rho_w_new", new_b.rho_w}});
      std::cout << rn << ": old read>=" << old_b.rho_r << " write>=" << old_b.rho_w
                << " | new read>=" << new_b.rho_r << " write>=" << new_b.rho_w << "\n";
    }
    if (st.format == "json")
      std::cout << ojson{{"schema", "lrcc.bounds/1"}, {"rows", rows}}.dump(2) << "\n";
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lrcc::WorkCeilingError& e) {
    std::cerr << "error: " << e.what() << " (progress " << e.progress() << ")\n";
    return e.exit_code();
  } catch (const lrcc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
