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

#include "hardy/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/error.hpp"
#include "hardy/geometry.hpp"
#include "hardy/parallel.hpp"

namespace hardy {
namespace {

constexpr std::int64_t kBlock = 4096;
constexpr int kMaxShell = 900;

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int q = 0; q < e; ++q) r *= base;
  return r;
}

int base_dims(int n) { return 2 * n - 1; }

// Level of axis index c at scale j >= 1: sup |coord| = level * rho / 2^j.
std::int64_t axis_level(std::int64_t c, std::int64_t h) {
  return c >= h ? c + 1 - h : h - c;
}

// Interval of axis index c at scale j: (-rho/2 + c rho/2^j, ...).
Interval axis_interval(std::int64_t c, int j, double rho) {
  const double two_j = std::ldexp(1.0, j);
  return {std::ldexp(rho * (2.0 * double(c) - two_j), -j - 1),
          std::ldexp(rho * (2.0 * double(c + 1) - two_j), -j - 1)};
}

void check_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw UsageError("rho must be positive and finite");
  }
}

void check_samples(std::int64_t samples) {
  if (samples < 1) throw UsageError("sample count must be >= 1");
}

// Per-block accumulator for the geometry samplers.
struct PairStats {
  std::int64_t samples = 0;
  std::int64_t violations = 0;
  std::int64_t intermediate = 0;
  std::int64_t chain = 0;
  double max_gauge = 0.0;
  double max_z = 0.0;
};

PairStats reduce(const std::vector<PairStats>& blocks) {
  PairStats out;
  for (const PairStats& b : blocks) {
    out.samples += b.samples;
    out.violations += b.violations;
    out.intermediate += b.intermediate;
    out.chain += b.chain;
    out.max_gauge = std::max(out.max_gauge, b.max_gauge);
    out.max_z = std::max(out.max_z, b.max_z);
  }
  return out;
}

template <typename Body>
PairStats sample_pairs(std::int64_t samples, int threads, Body body) {
  const std::int64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<PairStats> partial(blocks);
  parallel_for_blocks(blocks, threads, [&](std::int64_t b) {
    PairStats s;
    const std::int64_t end = std::min(samples, (b + 1) * kBlock);
    for (std::int64_t q = b * kBlock; q < end; ++q) body(q, s);
    partial[b] = s;
  });
  return reduce(partial);
}

}  // namespace

int max_half_scale(int n) {
  GroupParams check(n);
  return 62 / base_dims(n);
}

int half_class_count(int j) {
  if (j < 0) throw UsageError("scale j must be >= 0");
  if (j > 62) throw UsageError("scale j too large");
  return j == 0 ? 1 : int(std::int64_t(1) << (j - 1));
}

std::uint64_t half_class_size(int n, int j, int k) {
  if (j > max_half_scale(n)) throw UsageError("scale j too large for this n");
  if (k < 1 || k > half_class_count(j)) {
    throw UsageError("class k out of range at scale " + std::to_string(j));
  }
  if (j == 0) return 1;
  const int L = base_dims(n);
  return ipow(2 * std::uint64_t(k), L) - ipow(2 * std::uint64_t(k) - 2, L);
}

std::vector<std::int64_t> half_subcube_axes(int n, int j, int k,
                                            std::uint64_t i) {
  const std::uint64_t size = half_class_size(n, j, k);
  if (i >= size) throw UsageError("subcube rank i out of range");
  const int L = base_dims(n);
  std::vector<std::int64_t> c(L, 0);
  if (j == 0) return c;
  const std::int64_t h = std::int64_t(1) << (j - 1);
  const std::uint64_t two_k = 2 * std::uint64_t(k);
  bool has_k = false;
  for (int a = 0; a < L; ++a) {
    const int rest = L - 1 - a;
    const std::uint64_t all = ipow(two_k, rest);
    const std::uint64_t mid_w = has_k ? all : all - ipow(two_k - 2, rest);
    // Candidate values in increasing order: h - k (level k), the 2k - 2
    // values of level < k, then h + k - 1 (level k).
    if (i < all) {
      c[a] = h - k;
      has_k = true;
      continue;
    }
    i -= all;
    const std::uint64_t mid_n = two_k - 2;
    if (mid_w > 0 && i < mid_n * mid_w) {
      c[a] = h - k + 1 + std::int64_t(i / mid_w);
      i %= mid_w;
      continue;
    }
    i -= mid_n * mid_w;
    c[a] = h + k - 1;
    has_k = true;
  }
  return c;
}

std::pair<int, std::uint64_t> half_subcube_rank(
    int n, int j, std::span<const std::int64_t> c) {
  const int L = base_dims(n);
  if (int(c.size()) != L) throw UsageError("wrong number of axis indices");
  if (j > max_half_scale(n)) throw UsageError("scale j too large for this n");
  if (j == 0) {
    for (auto v : c) {
      if (v != 0) throw UsageError("axis index out of range");
    }
    return {1, 0};
  }
  const std::int64_t h = std::int64_t(1) << (j - 1);
  std::int64_t k = 0;
  for (auto v : c) {
    if (v < 0 || v >= 2 * h) throw UsageError("axis index out of range");
    k = std::max(k, axis_level(v, h));
  }
  const std::uint64_t two_k = 2 * std::uint64_t(k);
  std::uint64_t rank = 0;
  bool has_k = false;
  for (int a = 0; a < L; ++a) {
    const int rest = L - 1 - a;
    const std::uint64_t all = ipow(two_k, rest);
    const std::uint64_t mid_w = has_k ? all : all - ipow(two_k - 2, rest);
    const std::int64_t ca = c[a];
    const std::int64_t lo = h - k;
    const std::int64_t hi = h + k - 1;
    if (lo < ca) rank += all;
    const std::int64_t mid_count =
        std::max<std::int64_t>(0, std::min(ca - 1, hi - 1) - (lo + 1) + 1);
    rank += std::uint64_t(mid_count) * mid_w;
    if (hi < ca) rank += all;
    if (axis_level(ca, h) == k) has_k = true;
  }
  return {int(k), rank};
}

double half_t_length(int j, int k, double rho) {
  return j == 0 ? rho * rho : std::ldexp(double(k) * rho * rho, -2 * j);
}

void validate_half_index(const HalfCellIndex& idx, int n) {
  GroupParams check(n);
  if (idx.j < 0 || idx.j > max_half_scale(n)) {
    throw UsageError("scale j out of range [0, " +
                     std::to_string(max_half_scale(n)) + "]");
  }
  if (idx.k < 1 || idx.k > half_class_count(idx.j)) {
    throw UsageError("class k out of range [1, " +
                     std::to_string(half_class_count(idx.j)) + "]");
  }
  if (idx.i >= half_class_size(n, idx.j, idx.k)) {
    throw UsageError("subcube rank i out of range");
  }
  if (idx.shell < idx.j || idx.shell > kMaxShell) {
    throw UsageError("shell must satisfy j <= shell <= " +
                     std::to_string(kMaxShell));
  }
}

HalfCellIndex locate_half_cell(const GroupPoint& xi, double rho) {
  check_rho(rho);
  if (!contains(QBox{rho}, xi)) throw DomainError("point lies outside Q(rho)");
  const int n = xi.n();
  const double x1 = xi.x1();
  int shell = std::max(0, int(std::floor(std::log2(rho / x1))));
  while (shell > 0 && x1 > std::ldexp(rho, -shell)) --shell;
  while (x1 <= std::ldexp(rho, -shell - 1)) ++shell;
  if (shell > max_half_scale(n)) {
    throw DomainError("x_1 too small for the supported scale range");
  }
  HalfCellIndex idx;
  idx.j = shell;
  idx.shell = shell;
  const int j = shell;
  const std::int64_t cells = std::int64_t(1) << j;
  std::vector<std::int64_t> c(base_dims(n));
  for (int b = 0; b < base_dims(n); ++b) {
    const double u = xi.coord(b + 1);
    std::int64_t v = std::int64_t(std::ceil(std::ldexp((u + 0.5 * rho) / rho, j))) - 1;
    v = std::clamp<std::int64_t>(v, 0, cells - 1);
    while (v > 0 && u <= axis_interval(v, j, rho).lo) --v;
    while (v < cells - 1 && u > axis_interval(v, j, rho).hi) ++v;
    c[b] = v;
  }
  const auto [k, i] = half_subcube_rank(n, j, c);
  idx.k = k;
  idx.i = i;
  const double len = half_t_length(j, k, rho);
  std::int64_t l = std::int64_t(std::ceil(xi.t() / len)) - 1;
  while (xi.t() <= double(l) * len) --l;
  while (xi.t() > double(l + 1) * len) ++l;
  idx.l = l;
  return idx;
}

CoordBox half_cell_box(const HalfCellIndex& idx, int n, double rho) {
  check_rho(rho);
  validate_half_index(idx, n);
  std::vector<Interval> iv;
  iv.reserve(2 * n + 1);
  iv.push_back({std::ldexp(rho, -idx.shell - 1), std::ldexp(rho, -idx.shell)});
  for (std::int64_t c : half_subcube_axes(n, idx.j, idx.k, idx.i)) {
    iv.push_back(axis_interval(c, idx.j, rho));
  }
  const double len = half_t_length(idx.j, idx.k, rho);
  iv.push_back({double(idx.l) * len, double(idx.l + 1) * len});
  return CoordBox(n, iv);
}

double half_cell_measure(const HalfCellIndex& idx, int n, double rho) {
  check_rho(rho);
  validate_half_index(idx, n);
  const int e = -(idx.shell + 1) - idx.j * base_dims(n) - 2 * idx.j;
  return std::ldexp(std::pow(rho, 2 * n + 2) * double(idx.k), e);
}

// ---------------------------------------------------------------------------

AnnularCell::AnnularCell(int n, const WholeCellIndex& idx, double r)
    : n_(n), idx_(idx), r_(r) {
  GroupParams check(n);
  check_rho(r);
  if (idx.j < 0 || idx.k < 0 || idx.j > 500 || idx.k > 250) {
    throw UsageError("whole-space cell scales must satisfy 0 <= j <= 500, "
                     "0 <= k <= 250");
  }
  z_lo_ = std::ldexp(r, idx.j);
  z_hi_ = std::ldexp(r, idx.j + 1);
  const double len = std::ldexp(r * r, 2 * idx.k);
  t_ = {double(idx.l) * len, double(idx.l + 1) * len};
  measure_ = std::ldexp(annulus_volume(n) * std::pow(r, 2 * n + 2),
                        2 * n * idx.j + 2 * idx.k);
}

bool AnnularCell::contains(const GroupPoint& xi) const {
  if (xi.n() != n_) throw UsageError("dimension mismatch between cell and point");
  const double zn = xi.z_norm();
  return z_lo_ <= zn && zn <= z_hi_ && t_.contains_closed(xi.t());
}

bool AnnularCell::contains_open(const GroupPoint& xi) const {
  if (xi.n() != n_) throw UsageError("dimension mismatch between cell and point");
  const double zn = xi.z_norm();
  return z_lo_ < zn && zn < z_hi_ && t_.contains_open(xi.t());
}

GroupPoint AnnularCell::sample(SampleStream& rng) const {
  PointBuilder b(n_);
  sample_annulus(rng, n_, z_lo_, z_hi_, b);
  b[2 * n_] = rng.uniform(t_.lo, t_.hi);
  return b.build();
}

double AnnularCell::overlap_measure(const AnnularCell& other) const {
  if (other.n_ != n_) throw UsageError("dimension mismatch between cells");
  const double lo = std::max(z_lo_, other.z_lo_);
  const double hi = std::min(z_hi_, other.z_hi_);
  const double tlo = std::max(t_.lo, other.t_.lo);
  const double thi = std::min(t_.hi, other.t_.hi);
  if (hi <= lo || thi <= tlo) return 0.0;
  return unit_ball_volume(n_) *
         (std::pow(hi, 2 * n_) - std::pow(lo, 2 * n_)) * (thi - tlo);
}

void sample_annulus(SampleStream& rng, int n, double a, double b,
                    PointBuilder& out) {
  const int d = 2 * n;
  double norm2 = 0.0;
  std::array<double, 2 * kMaxDimension> g{};
  do {
    norm2 = 0.0;
    for (int u = 0; u < d; ++u) {
      g[u] = rng.normal();
      norm2 += g[u] * g[u];
    }
  } while (norm2 == 0.0);
  const double ad = std::pow(a, d);
  const double radius = std::pow(ad + rng.uniform() * (std::pow(b, d) - ad),
                                 1.0 / d);
  const double scale = radius / std::sqrt(norm2);
  for (int u = 0; u < d; ++u) out[u] = g[u] * scale;
}

WholeCellIndex locate_whole_cell(const GroupPoint& xi, double r) {
  check_rho(r);
  const double zn = xi.z_norm();
  if (!(zn > r)) throw DomainError("whole-space location needs |z| > r");
  int j = std::max(0, int(std::ceil(std::log2(zn / r))) - 1);
  while (j > 0 && zn <= std::ldexp(r, j)) --j;
  while (zn > std::ldexp(r, j + 1)) ++j;
  WholeCellIndex idx{j, j, 0};
  const double len = std::ldexp(r * r, 2 * j);
  std::int64_t l = std::int64_t(std::ceil(xi.t() / len)) - 1;
  while (xi.t() <= double(l) * len) --l;
  while (xi.t() > double(l + 1) * len) ++l;
  idx.l = l;
  return idx;
}

// ---------------------------------------------------------------------------

GeometryReport verify_lemma21(int n, int j, int k, std::uint64_t i,
                              std::int64_t l, int m, double rho,
                              std::int64_t samples, std::uint64_t seed,
                              int threads) {
  check_samples(samples);
  if (m < 1) throw UsageError("m must be >= 1");
  HalfCellIndex e1_idx{j, k, i, l, j};
  HalfCellIndex e2_idx{j, k, i, l, j + m};
  const CoordBox e1 = half_cell_box(e1_idx, n, rho);
  const CoordBox e2 = half_cell_box(e2_idx, n, rho);
  const HalfSpaceConstants c = half_space_constants(n, m);
  const double inter = 2.0 * std::sqrt(2.0) * std::pow(double(n) * n + n + 2.0, 0.25);

  const PairStats st = sample_pairs(samples, threads, [&](std::int64_t q,
                                                          PairStats& s) {
    SampleStream rng(seed, std::uint64_t(q), StreamDomain::kGeometry);
    const GroupPoint a = e1.sample(rng);
    const GroupPoint b = e2.sample(rng);
    const double d = left_distance(a, b);
    const double x1 = a.x1();
    const double zn = a.z_norm();
    const double dz = z_distance(a, b);
    const double scale = std::sqrt(x1 * zn);
    const double g = d / scale;
    const double zr = dz / x1;
    ++s.samples;
    if (!(d < c.R1 * scale) || !(dz < c.R2 * x1)) ++s.violations;
    if (g > inter) ++s.intermediate;
    const double dt = b.t() - a.t();
    const double chain = dz * dz * dz * dz + 2.0 * dt * dt + 8.0 * zn * zn * dz * dz;
    if (d * d * d * d > chain * (1.0 + 1e-12)) ++s.chain;
    s.max_gauge = std::max(s.max_gauge, g);
    s.max_z = std::max(s.max_z, zr);
  });

  GeometryReport rep;
  rep.lemma = "lemma21";
  rep.m = m;
  rep.samples = st.samples;
  rep.violations = st.violations;
  rep.max_gauge_ratio = st.max_gauge;
  rep.max_z_ratio = st.max_z;
  rep.gauge_bound = c.R1;
  rep.z_bound = c.R2;
  rep.intermediate_gauge_bound = inter;
  rep.intermediate_violations = st.intermediate;
  rep.chain_violations = st.chain;
  const int Q = 2 * n + 2;
  const double sup_w = e1.power_weight_extrema(Q - 1, 1.0).second;
  rep.measure_ratio = half_cell_measure(e2_idx, n, rho) / (c.S * sup_w);
  // The exact ratio equals 1 on class-1 cells; allow binary64 rounding.
  rep.measure_ok = rep.measure_ratio >= 1.0 - 1e-12;
  rep.measure_identity =
      half_cell_measure(e1_idx, n, rho) / half_cell_measure(e2_idx, n, rho);
  rep.measure_identity_expected = std::ldexp(1.0, m);
  rep.measure_identity_exact =
      rep.measure_identity == rep.measure_identity_expected;
  rep.j0_convention = j == 0;
  rep.passed = rep.violations == 0 && rep.measure_ok;
  return rep;
}

GeometryReport verify_lemma3x(int n, int j, std::int64_t l, int m, double r,
                              Direction direction, std::int64_t samples,
                              std::uint64_t seed, int threads) {
  check_samples(samples);
  if (m < 1) throw UsageError("m must be >= 1");
  if (j < 0) throw UsageError("scale j must be >= 0");
  const bool outward = direction == Direction::kOutward;
  if (!outward && j < m) {
    throw DomainError("inward comparison needs j >= m");
  }
  const AnnularCell e1(n, {j, j, l}, r);
  const AnnularCell e2(n, {outward ? j + m : j - m, j, l}, r);
  const WholeSpaceConstants c = whole_space_constants(n, m, direction);

  const PairStats st = sample_pairs(samples, threads, [&](std::int64_t q,
                                                          PairStats& s) {
    SampleStream rng(seed, std::uint64_t(q), StreamDomain::kGeometry);
    const GroupPoint a = e1.sample(rng);
    const GroupPoint b = e2.sample(rng);
    const double d = left_distance(a, b);
    const double zn = a.z_norm();
    ++s.samples;
    if (!(d < c.R * zn)) ++s.violations;
    s.max_gauge = std::max(s.max_gauge, d / zn);
    s.max_z = std::max(s.max_z, z_distance(a, b) / zn);
  });

  GeometryReport rep;
  rep.lemma = outward ? "lemma31" : "lemma32";
  rep.m = m;
  rep.samples = st.samples;
  rep.violations = st.violations;
  rep.max_gauge_ratio = st.max_gauge;
  rep.max_z_ratio = st.max_z;
  rep.gauge_bound = c.R;
  const int Q = 2 * n + 2;
  // S = 2^{e_S} |annulus|; both sides share the factor |annulus| r^Q, so the
  // ratio is a power of two computed exactly.
  const int e_S = outward ? Q * (m - 1) - 2 * m : 2 * m - Q * (m + 1);
  const double common = annulus_volume(n) * std::pow(r, Q);
  rep.measure_ratio = e2.measure() / std::ldexp(common, e_S + Q * (j + 1));
  rep.measure_ok = rep.measure_ratio >= 1.0;
  rep.measure_identity = e1.measure() / e2.measure();
  rep.measure_identity_expected = std::ldexp(1.0, (outward ? -1 : 1) * (Q - 2) * m);
  rep.measure_identity_exact =
      rep.measure_identity == rep.measure_identity_expected;
  rep.passed = rep.violations == 0 && rep.measure_ok;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

template <typename Index, typename Cell, typename Draw, typename Locate,
          typename MakeCell, typename Perturb>
PartitionReport run_partition(std::string family, std::int64_t samples,
                              std::uint64_t seed, int pairs, Draw draw,
                              Locate locate, MakeCell make_cell,
                              Perturb perturb) {
  check_samples(samples);
  if (pairs < 0) throw UsageError("pair count must be >= 0");
  PartitionReport rep;
  rep.family = std::move(family);
  for (std::int64_t q = 0; q < samples; ++q) {
    SampleStream rng(seed, std::uint64_t(q), StreamDomain::kPartition);
    const GroupPoint xi = draw(rng);
    const Cell cell = make_cell(locate(xi));
    ++rep.samples;
    if (!cell.contains(xi)) ++rep.location_failures;
    if (!cell.contains_open(xi)) ++rep.face_points;
  }
  // Pairs of distinct cells: half come from nearby points (typically
  // neighbours sharing a face), half from independent points.
  std::int64_t attempt = 0;
  while (rep.pairs_checked < pairs && attempt < 1000 * std::int64_t(pairs)) {
    SampleStream rng(seed, std::uint64_t(samples + attempt),
                     StreamDomain::kPartition);
    ++attempt;
    const GroupPoint a = draw(rng);
    const GroupPoint b = (attempt % 2 == 0) ? draw(rng) : perturb(a, rng);
    Index ia = locate(a);
    Index ib;
    try {
      ib = locate(b);
    } catch (const DomainError&) {
      continue;
    }
    if (ia == ib) continue;
    ++rep.pairs_checked;
    if (make_cell(ia).overlap_measure(make_cell(ib)) != 0.0) {
      ++rep.overlap_failures;
    }
  }
  rep.passed = rep.location_failures == 0 && rep.overlap_failures == 0 &&
               rep.pairs_checked == pairs;
  return rep;
}

}  // namespace

PartitionReport partition_check_half(int n, double rho, std::int64_t samples,
                                     std::uint64_t seed, int pairs) {
  GroupParams check(n);
  check_rho(rho);
  auto draw = [&](SampleStream& rng) {
    PointBuilder b(n);
    b[0] = rng.uniform(0.0, rho);
    for (int u = 1; u < 2 * n; ++u) b[u] = rng.uniform(-0.5 * rho, 0.5 * rho);
    b[2 * n] = rng.uniform(-0.5 * rho * rho, 0.5 * rho * rho);
    return b.build();
  };
  auto locate = [&](const GroupPoint& xi) { return locate_half_cell(xi, rho); };
  auto make_cell = [&](const HalfCellIndex& idx) {
    return half_cell_box(idx, n, rho);
  };
  auto perturb = [&](const GroupPoint& a, SampleStream& rng) {
    PointBuilder b(a);
    const int u = int(rng.uniform() * (2 * n + 1));
    b[u] += rng.uniform(-0.05 * rho, 0.05 * rho);
    return b.build();
  };
  return run_partition<HalfCellIndex, CoordBox>("halfspace", samples, seed,
                                                pairs, draw, locate, make_cell,
                                                perturb);
}

PartitionReport partition_check_whole(int n, double r, double z_max,
                                      double t_max, std::int64_t samples,
                                      std::uint64_t seed, int pairs) {
  GroupParams check(n);
  check_rho(r);
  if (!(z_max > r) || !(t_max > 0.0)) {
    throw UsageError("whole-space truncation needs z_max > r and t_max > 0");
  }
  auto draw = [&](SampleStream& rng) {
    PointBuilder b(n);
    sample_annulus(rng, n, r, z_max, b);
    b[2 * n] = rng.uniform(-t_max, t_max);
    return b.build();
  };
  auto locate = [&](const GroupPoint& xi) { return locate_whole_cell(xi, r); };
  auto make_cell = [&](const WholeCellIndex& idx) {
    return AnnularCell(n, idx, r);
  };
  auto perturb = [&](const GroupPoint& a, SampleStream& rng) {
    PointBuilder b(a);
    const double f = 1.0 + rng.uniform(-0.3, 0.3);
    for (int u = 0; u < 2 * n; ++u) b[u] *= f;
    b[2 * n] += rng.uniform(-0.1, 0.1) * t_max;
    return b.build();
  };
  return run_partition<WholeCellIndex, AnnularCell>(
      "wholespace", samples, seed, pairs, draw, locate, make_cell, perturb);
}

}  // namespace hardy
