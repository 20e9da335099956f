#include "lrcc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace lrcc {

namespace {

void require_schema(const ojson& j, const std::string& tag) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != tag)
    fail_usage(Errc::parse_error, "expected schema " + tag);
}

PhiRegime regime_from_string(const std::string& s) {
  if (s == "classic") return PhiRegime::classic;
  if (s == "improved") return PhiRegime::improved;
  fail_usage(Errc::parse_error, "regime must be classic or improved");
}

const char* regime_name(PhiRegime r) {
  return r == PhiRegime::classic ? "classic" : "improved";
}

}  // namespace

ojson tower_to_json(const FieldTower& F) {
  return ojson{{"schema", "lrcc.tower/1"},
               {"p", F.characteristic()},
               {"m", F.degree()},
               {"modulus", F.modulus()},
               {"base_degree", F.base_degree()}};
}

TowerPtr tower_from_json(const ojson& j, const Config& cfg) {
  require_schema(j, "lrcc.tower/1");
  std::vector<std::uint32_t> modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  return FieldTower::make(j.at("p").get<std::uint32_t>(), j.at("m").get<std::uint32_t>(),
                          modulus, j.value("base_degree", 0u), cfg);
}

ojson matrix_to_json(const MatrixGF& M) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(M.at(i, j));
    rows.push_back(std::move(row));
  }
  return ojson{{"schema", "lrcc.matrix/1"},
               {"rows", M.rows()},
               {"cols", M.cols()},
               {"entries", std::move(rows)}};
}

MatrixGF matrix_from_json(const ojson& j, TowerPtr tower) {
  require_schema(j, "lrcc.matrix/1");
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  MatrixGF M(tower, rows, cols);
  const ojson& e = j.at("entries");
  if (e.size() != rows) fail_usage(Errc::parse_error, "entry row count mismatch");
  for (std::size_t i = 0; i < rows; ++i) {
    if (e[i].size() != cols) fail_usage(Errc::parse_error, "entry column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) {
      std::uint64_t v = e[i][c].get<std::uint64_t>();
      if (v >= tower->size()) fail_usage(Errc::parse_error, "entry out of field range");
      M.set(i, c, static_cast<elem_t>(v));
    }
  }
  return M;
}

ojson element_coeffs_json(const FieldTower& F, elem_t v) {
  return ojson(F.coeffs(v));
}

elem_t element_from_coeffs_json(const FieldTower& F, const ojson& j) {
  return F.from_coeffs(j.get<std::vector<std::uint32_t>>());
}

namespace {

ojson partition_to_json(const LocalityPartition& p) {
  return ojson{{"groups", p.groups}, {"r", p.r}, {"delta", p.delta}};
}

LocalityPartition partition_from_json(const ojson& j) {
  LocalityPartition p;
  p.groups = j.at("groups").get<std::vector<std::vector<std::size_t>>>();
  p.r = j.at("r").get<std::size_t>();
  p.delta = j.at("delta").get<std::size_t>();
  return p;
}

}  // namespace

ojson built_code_to_json(const BuiltCode& bc) {
  ojson j{{"schema", "lrcc.code/1"},
          {"tower", tower_to_json(*bc.code.tower())},
          {"n", bc.code.n()},
          {"k", bc.code.k()},
          {"d", nullptr},
          {"H", matrix_to_json(bc.code.H())},
          {"partition", partition_to_json(bc.part)},
          {"block_structure",
           ojson{{"g", bc.blocks.g()},
                 {"width", bc.blocks.width()},
                 {"local_rows", bc.blocks.local_rows()},
                 {"global_rows", bc.blocks.global_rows()}}},
          {"regime", regime_name(bc.regime)}};
  if (auto d = bc.code.cached_distance()) j["d"] = *d;
  return j;
}

BuiltCode built_code_from_json(const ojson& j, const Config& cfg) {
  require_schema(j, "lrcc.code/1");
  TowerPtr tower = tower_from_json(j.at("tower"), cfg);
  MatrixGF H = matrix_from_json(j.at("H"), tower);
  BuiltCode bc;
  bc.code = LinearCode(H);
  bc.part = partition_from_json(j.at("partition"));
  bc.part.validate(bc.code.n());
  bc.regime = regime_from_string(j.at("regime").get<std::string>());
  const ojson& bs = j.at("block_structure");
  std::size_t g = bs.at("g").get<std::size_t>();
  std::size_t width = bs.at("width").get<std::size_t>();
  std::size_t lr = bs.at("local_rows").get<std::size_t>();
  std::size_t gr = bs.at("global_rows").get<std::size_t>();
  if (H.rows() != g * lr + gr || H.cols() != g * width)
    fail_usage(Errc::parse_error, "block structure disagrees with H shape");
  bc.blocks.tower = tower;
  for (std::size_t b = 0; b < g; ++b) {
    MatrixGF A(tower, lr, width), B(tower, gr, width);
    for (std::size_t i = 0; i < lr; ++i)
      for (std::size_t c = 0; c < width; ++c) A.set(i, c, H.at(b * lr + i, b * width + c));
    for (std::size_t i = 0; i < gr; ++i)
      for (std::size_t c = 0; c < width; ++c)
        B.set(i, c, H.at(g * lr + i, b * width + c));
    bc.blocks.A.push_back(std::move(A));
    bc.blocks.B.push_back(std::move(B));
  }
  bc.blocks.validate();
  // off-block entries of the local rows must be zero for the block shape to
  // be faithful
  if (!(bc.blocks.assemble() == H))
    fail_usage(Errc::parse_error, "H is not in block-diagonal form");
  return bc;
}

ojson base_a_spec_to_json(const BaseCodeASpec& spec) {
  return ojson{{"schema", "lrcc.base_a/1"},
               {"tower", tower_to_json(*spec.tower)},
               {"m", spec.m},
               {"r", spec.r},
               {"delta", spec.delta},
               {"d", spec.d},
               {"G", spec.G}};
}

BaseCodeASpec base_a_spec_from_json(const ojson& j, const Config& cfg) {
  require_schema(j, "lrcc.base_a/1");
  BaseCodeASpec spec;
  spec.tower = tower_from_json(j.at("tower"), cfg);
  spec.m = j.at("m").get<std::size_t>();
  spec.r = j.at("r").get<std::size_t>();
  spec.delta = j.at("delta").get<std::size_t>();
  spec.d = j.at("d").get<std::size_t>();
  spec.G = j.at("G").get<std::vector<std::vector<elem_t>>>();
  return spec;
}

ojson base_b_spec_to_json(const BaseCodeBSpec& spec) {
  ojson j{{"schema", "lrcc.base_b/1"},
          {"p", spec.tower->characteristic()},
          {"q_degree", spec.tower->base_degree()},
          {"h", spec.h},
          {"m", spec.m},
          {"r", spec.r},
          {"delta", spec.delta},
          {"alphas", spec.alphas},
          {"modulus", spec.tower->modulus()}};
  if (!spec.gammas.empty()) j["gammas"] = spec.gammas;
  return j;
}

BaseCodeBSpec base_b_spec_from_json(const ojson& j, const Config& cfg) {
  require_schema(j, "lrcc.base_b/1");
  BaseCodeBSpec spec;
  std::uint32_t p = j.at("p").get<std::uint32_t>();
  std::uint32_t b = j.at("q_degree").get<std::uint32_t>();
  spec.h = j.at("h").get<std::size_t>();
  std::uint32_t m_tower = b * static_cast<std::uint32_t>(spec.h);
  if (j.contains("modulus"))
    spec.tower = FieldTower::make(p, m_tower,
                                  j.at("modulus").get<std::vector<std::uint32_t>>(), b, cfg);
  else
    spec.tower = FieldTower::make_auto(p, m_tower, b, cfg);
  spec.m = j.at("m").get<std::size_t>();
  spec.r = j.at("r").get<std::size_t>();
  spec.delta = j.at("delta").get<std::size_t>();
  spec.alphas = j.at("alphas").get<std::vector<elem_t>>();
  if (j.contains("gammas")) spec.gammas = j.at("gammas").get<std::vector<elem_t>>();
  return spec;
}

ojson plan_to_json(const ConversionPlan& plan) {
  ojson j{{"schema", "lrcc.plan/1"},
          {"base", built_code_to_json(plan.base)},
          {"g", plan.g},
          {"ell", plan.ell},
          {"t", plan.t},
          {"h", plan.h},
          {"s", plan.s},
          {"parts", plan.parts},
          {"shared", plan.shared},
          {"global_row_order", plan.global_row_order},
          {"M13", matrix_to_json(plan.M13)},
          {"M13_inv", matrix_to_json(plan.M13_inv)},
          {"HF", matrix_to_json(plan.HF)},
          {"regime", regime_name(plan.regime)},
          {"n_I", plan.n_I()},
          {"n_F", plan.n_F()}};
  ojson hbars = ojson::array();
  for (const auto& hb : plan.Hbar) hbars.push_back(matrix_to_json(hb));
  j["Hbar"] = std::move(hbars);
  if (plan.scalings) {
    ojson sc = ojson::array();
    for (const auto& ps : *plan.scalings)
      sc.push_back(ojson{{"local", ps.local}, {"global", ps.global}});
    j["scalings"] = std::move(sc);
  }
  return j;
}

ConversionPlan plan_from_json(const ojson& j, const Config& cfg) {
  require_schema(j, "lrcc.plan/1");
  BuiltCode base = built_code_from_json(j.at("base"), cfg);
  std::optional<std::vector<PlanScaling>> scalings;
  if (j.contains("scalings")) {
    std::vector<PlanScaling> sc;
    for (const auto& e : j.at("scalings")) {
      PlanScaling ps;
      ps.local = e.at("local").get<std::vector<elem_t>>();
      ps.global = e.at("global").get<std::vector<elem_t>>();
      sc.push_back(std::move(ps));
    }
    scalings = std::move(sc);
  }
  ConversionPlan plan = make_plan(base, j.at("t").get<std::size_t>(),
                                  j.at("h").get<std::size_t>(), std::move(scalings), cfg);
  MatrixGF stored_hf = matrix_from_json(j.at("HF"), base.blocks.tower);
  if (!(stored_hf == plan.HF))
    fail_usage(Errc::parse_error, "stored final parity-check matrix disagrees with the plan");
  return plan;
}

ojson trace_to_json(const ConversionTrace& tr) {
  return ojson{{"schema", "lrcc.trace/1"},
               {"unchanged", tr.unchanged},
               {"reads", tr.reads},
               {"written", tr.written},
               {"rho_r", tr.rho_r},
               {"rho_w", tr.rho_w},
               {"final_codeword", tr.final_codeword}};
}

ojson codeword_to_json(const FieldTower& F, const std::vector<elem_t>& v) {
  (void)F;
  return ojson{{"schema", "lrcc.codeword/1"}, {"v", v}};
}

std::vector<elem_t> codeword_from_json(const ojson& j) {
  require_schema(j, "lrcc.codeword/1");
  return j.at("v").get<std::vector<elem_t>>();
}

std::string matrix_to_csv(const MatrixGF& M) {
  std::ostringstream os;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (j) os << ",";
      os << M.tower()->to_string(M.at(i, j));
    }
    os << "\n";
  }
  return os.str();
}

ojson load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, ErrorClass::usage, "cannot open " + path);
  try {
    return ojson::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, ErrorClass::usage,
                std::string(e.what()) + " in " + path);
  }
}

void save_json_file(const std::string& path, const ojson& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, ErrorClass::usage, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace lrcc
