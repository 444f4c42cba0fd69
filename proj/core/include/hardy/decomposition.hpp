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

// Dyadic cell decompositions: the half-space cells A_{j'} n Q_{j,k}^{i,l} of
// Q(rho) and the whole-space annular cells J_j^{k,l}, with point location,
// exact measures and sampling-based verification of the cell-comparison
// lemmas.

#ifndef HARDY_DECOMPOSITION_HPP_
#define HARDY_DECOMPOSITION_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hardy/box.hpp"
#include "hardy/constants.hpp"
#include "hardy/group.hpp"
#include "hardy/random.hpp"

namespace hardy {

// ---------------------------------------------------------------------------
// Half-space family.
//
// At scale j >= 1 the base cube L(rho) = (-rho/2, rho/2)^{2n-1} is cut into
// 2^{j(2n-1)} subcubes of side rho/2^j. A subcube belongs to class k when the
// supremum of |x_2|, ..., |y_n| over it is k rho/2^j, k in {1, ..., 2^{j-1}}.
// Within a class, subcubes are ranked by the lexicographic order of their
// lower-left corners. Class-k cells have t-intervals of length k rho^2/4^j.
//
// Scale j = 0 has the single subcube L(rho); it is assigned class k = 1 and
// t-intervals of length rho^2 (the class formula gives no integer class
// there). Reports flag cells that use this convention.

struct HalfCellIndex {
  int j = 0;
  int k = 1;
  std::uint64_t i = 0;
  std::int64_t l = 0;
  int shell = 0;

  bool operator==(const HalfCellIndex&) const = default;
};

// Largest supported scale for a given n: j (2n - 1) <= 62.
int max_half_scale(int n);

// Number of classes at scale j (1 at j = 0).
int half_class_count(int j);
// Number of subcubes in class k at scale j: (2k)^L - (2k - 2)^L, L = 2n - 1.
std::uint64_t half_class_size(int n, int j, int k);

// Per-axis subcube indices c in [0, 2^j) of the subcube (j, k, i).
std::vector<std::int64_t> half_subcube_axes(int n, int j, int k,
                                            std::uint64_t i);
// {k, i} of the subcube with per-axis indices c at scale j.
std::pair<int, std::uint64_t> half_subcube_rank(
    int n, int j, std::span<const std::int64_t> c);

// Length of the t-intervals of class k at scale j.
double half_t_length(int j, int k, double rho);

// Throws UsageError unless the index is valid.
void validate_half_index(const HalfCellIndex& idx, int n);

// Point location in Q(rho). Faces go to the lower-index neighbour.
HalfCellIndex locate_half_cell(const GroupPoint& xi, double rho);

// Coordinate box of the cell: x_1 in (rho/2^{shell+1}, rho/2^{shell}), the
// (j, k, i) subcube, t in I_{j,k}^l.
CoordBox half_cell_box(const HalfCellIndex& idx, int n, double rho);

// Exact measure (rho/2^{shell+1}) (rho/2^j)^{2n-1} |I_{j,k}|, in log-free
// dyadic form.
double half_cell_measure(const HalfCellIndex& idx, int n, double rho);

// ---------------------------------------------------------------------------
// Whole-space family.

struct WholeCellIndex {
  int j = 0;
  int k = 0;
  std::int64_t l = 0;

  bool operator==(const WholeCellIndex&) const = default;
};

// {2^j r < |z| < 2^{j+1} r} x (l 4^k r^2, (l + 1) 4^k r^2).
class AnnularCell {
 public:
  AnnularCell(int n, const WholeCellIndex& idx, double r);

  int n() const { return n_; }
  const WholeCellIndex& index() const { return idx_; }
  double z_inner() const { return z_lo_; }
  double z_outer() const { return z_hi_; }
  const Interval& t() const { return t_; }
  // (2^j r)^{2n} (2^{2n} - 1) v_{2n} 4^k r^2, computed exactly up to the
  // common factor r^Q v_{2n} (2^{2n} - 1).
  double measure() const { return measure_; }

  // Closed-cell membership.
  bool contains(const GroupPoint& xi) const;
  bool contains_open(const GroupPoint& xi) const;
  // Uniform point of the cell.
  GroupPoint sample(SampleStream& rng) const;

  // Lebesgue measure of the intersection with another cell.
  double overlap_measure(const AnnularCell& other) const;

 private:
  int n_;
  WholeCellIndex idx_;
  double r_;
  double z_lo_;
  double z_hi_;
  Interval t_;
  double measure_;
};

// Point location for |z| > r with k = j; |z| = 2^j r goes to the lower j.
WholeCellIndex locate_whole_cell(const GroupPoint& xi, double r);

// ---------------------------------------------------------------------------
// Verification reports.

struct GeometryReport {
  std::string lemma;
  std::int64_t samples = 0;
  // Violations of the lemma's membership bounds.
  std::int64_t violations = 0;
  // Half space: max d / (x_1 |z|)^{1/2}; whole space: max d / |z|.
  double max_gauge_ratio = 0.0;
  // Half space: max |z' - z| / x_1; whole space: max |z' - z| / |z|.
  double max_z_ratio = 0.0;
  // Bounds the ratios are compared against.
  double gauge_bound = 0.0;
  double z_bound = 0.0;
  // |E2| / (S sup_{E1} w) with w = x_1^{Q-1} |z| or |z|^Q.
  double measure_ratio = 0.0;
  bool measure_ok = false;
  // |E1| / |E2| as computed from the cell measures and as predicted.
  double measure_identity = 0.0;
  double measure_identity_expected = 0.0;
  bool measure_identity_exact = false;
  // Half space only: the intermediate bound 2 sqrt(2) (n^2+n+2)^{1/4} on the
  // gauge ratio, and the fourth-power chain
  // d^4 <= |z'-z|^4 + 2 (t'-t)^2 + 8 |z|^2 |z'-z|^2.
  double intermediate_gauge_bound = 0.0;
  std::int64_t intermediate_violations = 0;
  std::int64_t chain_violations = 0;
  bool j0_convention = false;
  int m = 0;
  bool passed = false;
};

// Samples pairs (xi in E1, xi' in E2) with E1 = shell j and E2 = shell j + m
// of the cell (j, k, i, l), and checks xi' in Sigma_{R1,R2}(xi).
GeometryReport verify_lemma21(int n, int j, int k, std::uint64_t i,
                              std::int64_t l, int m, double rho,
                              std::int64_t samples, std::uint64_t seed,
                              int threads = 1);

// Outward: E1 = J_j^{j,l}, E2 = J_{j+m}^{j,l}. Inward (j >= m):
// E2 = J_{j-m}^{j,l}. Checks d(xi^{-1} o xi') < R |z|.
GeometryReport verify_lemma3x(int n, int j, std::int64_t l, int m, double r,
                              Direction direction, std::int64_t samples,
                              std::uint64_t seed, int threads = 1);

struct PartitionReport {
  std::string family;
  std::int64_t samples = 0;
  // Located cell box does not contain the point.
  std::int64_t location_failures = 0;
  // Points on a face of the located cell (measure zero; informational).
  std::int64_t face_points = 0;
  std::int64_t pairs_checked = 0;
  std::int64_t overlap_failures = 0;
  bool passed = false;
};

// Half-space family on Q(rho).
PartitionReport partition_check_half(int n, double rho, std::int64_t samples,
                                     std::uint64_t seed, int pairs = 100);
// Whole-space family on {r < |z| < z_max} x (-t_max, t_max).
PartitionReport partition_check_whole(int n, double r, double z_max,
                                      double t_max, std::int64_t samples,
                                      std::uint64_t seed, int pairs = 100);

// Uniform point of {a < |z| < b} in R^{2n} (written into the first 2n
// coordinates of the builder).
void sample_annulus(SampleStream& rng, int n, double a, double b,
                    PointBuilder& out);

}  // namespace hardy

#endif  // HARDY_DECOMPOSITION_HPP_
