#pragma once

#include <string>

#include "json.hpp"
#include "lrcc/convert.hpp"

namespace lrcc {

// Deterministic key ordering so identical inputs give byte-identical files.
using ojson = nlohmann::ordered_json;

// schema tags: lrcc.tower/1, lrcc.matrix/1, lrcc.code/1, lrcc.base_a/1,
// lrcc.family_a/1, lrcc.base_b/1, lrcc.plan/1, lrcc.trace/1, lrcc.codeword/1
ojson tower_to_json(const FieldTower& F);
TowerPtr tower_from_json(const ojson& j, const Config& cfg = Config{});

ojson matrix_to_json(const MatrixGF& M);
MatrixGF matrix_from_json(const ojson& j, TowerPtr tower);

// Elements print as little-endian coefficient vectors ("1+b" <-> [1, 1]);
// matrices and codewords use canonical indices for compactness.
ojson element_coeffs_json(const FieldTower& F, elem_t v);
elem_t element_from_coeffs_json(const FieldTower& F, const ojson& j);

ojson built_code_to_json(const BuiltCode& bc);
BuiltCode built_code_from_json(const ojson& j, const Config& cfg = Config{});

ojson base_a_spec_to_json(const BaseCodeASpec& spec);
BaseCodeASpec base_a_spec_from_json(const ojson& j, const Config& cfg = Config{});

ojson base_b_spec_to_json(const BaseCodeBSpec& spec);
BaseCodeBSpec base_b_spec_from_json(const ojson& j, const Config& cfg = Config{});

ojson plan_to_json(const ConversionPlan& plan);
// Plans are reconstructed deterministically from (base, t, h, scalings) and
// cross-checked against the stored final parity-check matrix.
ConversionPlan plan_from_json(const ojson& j, const Config& cfg = Config{});

ojson trace_to_json(const ConversionTrace& tr);

ojson codeword_to_json(const FieldTower& F, const std::vector<elem_t>& v);
std::vector<elem_t> codeword_from_json(const ojson& j);

std::string matrix_to_csv(const MatrixGF& M);

ojson load_json_file(const std::string& path);
void save_json_file(const std::string& path, const ojson& j);

}  // namespace lrcc
