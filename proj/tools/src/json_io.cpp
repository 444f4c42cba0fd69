// Copyright 2026 The Hardy-Heisenberg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hardy_cli/json_io.hpp"

#include <cmath>

namespace hardy {

nlohmann::json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

void to_json(nlohmann::json& j, const GroupPoint& p) { j = p.to_vector(); }

void to_json(nlohmann::json& j, const HardyParams& q) {
  j = {{"n", q.n}, {"p", q.p}, {"s", q.s}, {"alpha", q.alpha}, {"Q", q.Q()}};
}

void to_json(nlohmann::json& j, const ContractionSchedule& c) {
  j = {{"regime", to_string(c.regime)},
       {"m_min", c.m_min},
       {"m", c.m},
       {"gamma", c.gamma},
       {"log2_gamma", c.log2_gamma},
       {"pointwise_constant", c.pointwise_constant},
       {"log2_pointwise_constant", c.log2_pointwise_constant},
       {"C_final", c.C_final},
       {"log2_C_final", c.log2_C_final},
       {"annulus_coefficient", c.annulus_coefficient},
       {"S", c.S}};
  if (c.regime == Regime::kHalfSpace) {
    j["R1"] = c.R1;
    j["R2"] = c.R2;
  } else {
    j["R"] = c.R;
  }
}

void to_json(nlohmann::json& j, const DistanceResult& d) {
  j = {{"value", d.value},
       {"witness", d.witness},
       {"certified_exact", d.certified_exact}};
}

void to_json(nlohmann::json& j, const HalfCellIndex& idx) {
  j = {{"j", idx.j}, {"k", idx.k}, {"i", idx.i}, {"l", idx.l},
       {"shell", idx.shell}};
}

void to_json(nlohmann::json& j, const WholeCellIndex& idx) {
  j = {{"j", idx.j}, {"k", idx.k}, {"l", idx.l}};
}

void to_json(nlohmann::json& j, const GeometryReport& r) {
  j = {{"lemma", r.lemma},
       {"m", r.m},
       {"samples", r.samples},
       {"violations", r.violations},
       {"max_gauge_ratio", r.max_gauge_ratio},
       {"max_z_ratio", r.max_z_ratio},
       {"gauge_bound", r.gauge_bound},
       {"measure_ratio", r.measure_ratio},
       {"measure_ok", r.measure_ok},
       {"measure_identity", r.measure_identity},
       {"measure_identity_expected", r.measure_identity_expected},
       {"measure_identity_exact", r.measure_identity_exact},
       {"passed", r.passed}};
  if (r.lemma == "lemma21") {
    j["z_bound"] = r.z_bound;
    j["intermediate_gauge_bound"] = r.intermediate_gauge_bound;
    j["intermediate_violations"] = r.intermediate_violations;
    j["chain_violations"] = r.chain_violations;
    j["j0_convention"] = r.j0_convention;
  }
}

void to_json(nlohmann::json& j, const PartitionReport& r) {
  j = {{"family", r.family},
       {"samples", r.samples},
       {"location_failures", r.location_failures},
       {"face_points", r.face_points},
       {"pairs_checked", r.pairs_checked},
       {"overlap_failures", r.overlap_failures},
       {"passed", r.passed}};
}

void to_json(nlohmann::json& j, const Estimate& e) {
  j = {{"mean", e.mean},
       {"stderr", e.std_error},
       {"samples", e.samples},
       {"seed", e.seed},
       {"method", e.method}};
}

void to_json(nlohmann::json& j, const SeminormEstimate& e) {
  j = {{"estimate", e.truncated},
       {"cutoff", e.cutoff},
       {"split_radius", e.split_radius},
       {"near_diagonal_exponent", e.near_diagonal_exponent},
       {"near_diagonal_finite", e.near_diagonal_finite},
       {"remainder_upper", finite_or_null(e.remainder_upper)},
       {"angular_mass", e.angular_mass}};
}

void to_json(nlohmann::json& j, const QuotientEstimate& e) {
  j = {{"lhs", e.lhs}, {"seminorm", e.seminorm}, {"quotient", e.quotient}};
}

void to_json(nlohmann::json& j, const Membership& m) {
  j = {{"member", m.member},
       {"conclusive", m.conclusive},
       {"value_p", m.value_p},
       {"threshold", finite_or_null(m.threshold)},
       {"local_integral", m.local_integral},
       {"margin", m.margin}};
}

void to_json(nlohmann::json& j, const PointwiseCheck& c) {
  j = {{"membership", c.membership},
       {"weighted_value", c.weighted_value},
       {"constant", c.constant},
       {"kernel_integral", c.kernel_integral},
       {"holds", c.holds},
       {"ratio", finite_or_null(c.ratio)}};
}

void to_json(nlohmann::json& j, const OptimizeResult& r) {
  j = {{"best_params", r.best_params},
       {"best", r.best},
       {"start", r.start},
       {"evaluations", r.evaluations},
       {"C_final", r.C_final},
       {"margin_ratio", r.margin_ratio},
       {"red_flag", r.red_flag}};
}

void to_json(nlohmann::json& j, const GroupCheckReport& r) {
  j = {{"n", r.n},
       {"samples", r.samples},
       {"associativity", r.associativity},
       {"identity", r.identity},
       {"inverse", r.inverse},
       {"inverse_of_product", r.inverse_of_product},
       {"t_component", r.t_component},
       {"dilation_homomorphism", r.dilation_homomorphism},
       {"homogeneity", r.homogeneity},
       {"left_invariance", r.left_invariance},
       {"triangle_violations", r.triangle_violations},
       {"symmetry_violations", r.symmetry_violations},
       {"ball_volume", r.ball_volume},
       {"ball_volume_exact", r.ball_volume_exact},
       {"ball_volume_z", r.ball_volume_z},
       {"algebra_tolerance", r.algebra_tolerance},
       {"metric_tolerance", r.metric_tolerance},
       {"volume_z_limit", r.volume_z_limit},
       {"passed", r.passed}};
}

void to_json(nlohmann::json& j, const DistanceCheckReport& r) {
  j = {{"n", r.n},
       {"half_points", r.half_points},
       {"half_max_error", r.half_max_error},
       {"half_tolerance", r.half_tolerance},
       {"half_failures", r.half_failures},
       {"omega_points", r.omega_points},
       {"appendix_not_below_sqrt", r.appendix_not_below_sqrt},
       {"numeric_above_appendix", r.numeric_above_appendix},
       {"max_appendix_over_sqrt", r.max_appendix_over_sqrt},
       {"max_numeric_minus_appendix", r.max_numeric_minus_appendix},
       {"min_numeric_over_appendix", r.min_numeric_over_appendix},
       {"passed", r.passed}};
}

void to_json(nlohmann::json& j, const LemmaSweep& s) {
  j = {{"lemma", s.lemma},
       {"n", s.n},
       {"m", s.m},
       {"cells", s.cells},
       {"failed_cells", s.failed_cells},
       {"violations", s.violations},
       {"max_gauge_ratio", s.max_gauge_ratio},
       {"gauge_bound", s.gauge_bound},
       {"min_measure_ratio", s.min_measure_ratio},
       {"measure_identities_exact", s.measure_identities_exact},
       {"reports", s.reports},
       {"passed", s.passed}};
}

void to_json(nlohmann::json& j, const PointwiseSweep& s) {
  nlohmann::json checks = nlohmann::json::array();
  for (std::size_t i = 0; i < s.checks.size(); ++i) {
    checks.push_back({{"point", s.points[i]}, {"check", s.checks[i]}});
  }
  j = {{"attempts", s.attempts},
       {"members", s.members},
       {"inconclusive", s.inconclusive},
       {"nonmembers", s.nonmembers},
       {"holds", s.holds},
       {"max_ratio", finite_or_null(s.max_ratio)},
       {"constant", s.constant},
       {"complete", s.complete},
       {"checks", checks},
       {"passed", s.passed}};
}

}  // namespace hardy
