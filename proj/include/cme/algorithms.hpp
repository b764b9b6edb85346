#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cme/errors.hpp"
#include "cme/logmath.hpp"
#include "cme/oracle.hpp"
#include "cme/schedule.hpp"

namespace cme {

enum class AlgorithmId {
  SFM,         // sample-frequency maximization (identity-less, mixed)
  DSM,         // distinct-samples maximization (mixed)
  CC_SR,       // consecutive-collision successive rejects (separated)
  DS_SR_SEP,   // distinct-samples SR, per-box totals (separated)
  DS_SR_BOX,   // distinct-samples SR, per-box leading community (disjoint box)
  DS_PSR,      // DS-SR with size-proportional within-phase sampling
  NDS_SR,      // DS-SR with ratio normalization by known box sizes
  ENDS_SR,     // DS-SR with expectation normalization by known box sizes
  NDS_SR_MLE,  // NDS-SR with box sizes replaced by collision-based estimates
  DS_UE,       // single-phase uniform exploration, distinct totals
  DS_PE,       // single-phase size-proportional exploration
  NDS_UE,      // single-phase uniform exploration, ratio normalization
  ENDS_UE,     // single-phase uniform exploration, expectation normalization
};

inline constexpr AlgorithmId kAllAlgorithms[] = {
    AlgorithmId::SFM,      AlgorithmId::DSM,    AlgorithmId::CC_SR,
    AlgorithmId::DS_SR_SEP, AlgorithmId::DS_SR_BOX, AlgorithmId::DS_PSR,
    AlgorithmId::NDS_SR,   AlgorithmId::ENDS_SR, AlgorithmId::NDS_SR_MLE,
    AlgorithmId::DS_UE,    AlgorithmId::DS_PE,  AlgorithmId::NDS_UE,
    AlgorithmId::ENDS_UE,
};

inline const char* algorithm_name(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::SFM: return "SFM";
    case AlgorithmId::DSM: return "DSM";
    case AlgorithmId::CC_SR: return "CC_SR";
    case AlgorithmId::DS_SR_SEP: return "DS_SR_SEP";
    case AlgorithmId::DS_SR_BOX: return "DS_SR_BOX";
    case AlgorithmId::DS_PSR: return "DS_PSR";
    case AlgorithmId::NDS_SR: return "NDS_SR";
    case AlgorithmId::ENDS_SR: return "ENDS_SR";
    case AlgorithmId::NDS_SR_MLE: return "NDS_SR_MLE";
    case AlgorithmId::DS_UE: return "DS_UE";
    case AlgorithmId::DS_PE: return "DS_PE";
    case AlgorithmId::NDS_UE: return "NDS_UE";
    case AlgorithmId::ENDS_UE: return "ENDS_UE";
  }
  return "?";
}

inline std::optional<AlgorithmId> algorithm_from_name(const std::string& s) {
  for (AlgorithmId id : kAllAlgorithms)
    if (s == algorithm_name(id)) return id;
  return std::nullopt;
}

/// Whether the estimator reads pseudo-identities (everything except SFM).
inline bool algorithm_needs_identity(AlgorithmId id) {
  return id != AlgorithmId::SFM;
}

/// Whether the estimator requires a-priori knowledge of the box sizes.
inline bool algorithm_needs_sizes(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::DS_PSR:
    case AlgorithmId::NDS_SR:
    case AlgorithmId::ENDS_SR:
    case AlgorithmId::DS_PE:
    case AlgorithmId::NDS_UE:
    case AlgorithmId::ENDS_UE:
      return true;
    default:
      return false;
  }
}

inline bool algorithm_applicable(AlgorithmId id, Setting setting) {
  switch (id) {
    case AlgorithmId::SFM:
    case AlgorithmId::DSM:
      return setting == Setting::Mixed;
    case AlgorithmId::CC_SR:
    case AlgorithmId::DS_SR_SEP:
      return setting == Setting::Separated;
    case AlgorithmId::DS_SR_BOX:
    case AlgorithmId::DS_PSR:
    case AlgorithmId::NDS_SR:
    case AlgorithmId::ENDS_SR:
    case AlgorithmId::NDS_SR_MLE:
      return setting == Setting::Separated || setting == Setting::DisjointBox;
    default:
      return true;
  }
}

struct KnowledgeMode {
  bool box_sizes_known = false;
};

struct RunResult {
  int estimate = -1;
  std::int64_t queries_used = 0;
  std::vector<int> elimination_order;  // one box per phase; empty outside SR
  // Final decision tallies, box x community. Distinct-individual counts for
  // every identity-based estimator; raw sample counts for SFM.
  std::vector<std::vector<std::int64_t>> per_community_distinct;
};

// ---------------------------------------------------------------------------
// Plumbing shared by the estimators.

namespace detail {

inline int argmax_tie(std::span<const double> value, std::span<const int> among,
                      Xoshiro256& rng) {
  double best = -std::numeric_limits<double>::infinity();
  for (int i : among) best = std::max(best, value[i]);
  std::vector<int> ties;
  for (int i : among)
    if (value[i] == best) ties.push_back(i);
  return pick_uniform(std::span<const int>(ties), rng);
}

inline int argmin_tie(std::span<const double> value, std::span<const int> among,
                      Xoshiro256& rng) {
  double best = std::numeric_limits<double>::infinity();
  for (int i : among) best = std::min(best, value[i]);
  std::vector<int> ties;
  for (int i : among)
    if (value[i] == best) ties.push_back(i);
  return pick_uniform(std::span<const int>(ties), rng);
}

inline int argmax_count_tie(std::span<const std::int64_t> counts,
                            Xoshiro256& rng) {
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (std::int64_t c : counts) best = std::max(best, c);
  std::vector<int> ties;
  for (std::size_t j = 0; j < counts.size(); ++j)
    if (counts[j] == best) ties.push_back(static_cast<int>(j));
  return pick_uniform(std::span<const int>(ties), rng);
}

/// Splits `total` across weights in proportion, flooring each share and
/// handing leftovers to the largest fractional remainders (ties by lower
/// index). Exact integer arithmetic; all-zero weights get nothing.
inline std::vector<std::int64_t> largest_remainder_split(
    std::span<const std::int64_t> weights, std::int64_t total) {
  const std::size_t n = weights.size();
  std::vector<std::int64_t> share(n, 0);
  std::int64_t wsum = 0;
  for (auto w : weights) wsum += w;
  if (wsum == 0 || total == 0) return share;
  std::int64_t assigned = 0;
  std::vector<std::pair<std::int64_t, std::size_t>> rema(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t prod = total * weights[i];
    share[i] = prod / wsum;
    rema[i] = {prod % wsum, i};
    assigned += share[i];
  }
  std::sort(rema.begin(), rema.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  for (std::int64_t k = 0; k < total - assigned; ++k) share[rema[k % n].second]++;
  return share;
}

// Distinct-individual bookkeeping across boxes and communities.
struct Tallies {
  std::vector<std::vector<std::int64_t>> s_ij;  // distinct per box x community
  std::vector<std::int64_t> s_i;                // distinct per box
  std::vector<std::int64_t> queries;            // samples issued per box

  Tallies(int b, int m)
      : s_ij(b, std::vector<std::int64_t>(m, 0)), s_i(b, 0), queries(b, 0) {}

  void observe(const Observation& o) {
    ++queries[o.box];
    if (o.first_time && *o.first_time) {
      ++s_ij[o.box][o.community];
      ++s_i[o.box];
    }
  }
};

inline void require_identity(const Oracle& o, const char* алго) = delete;

inline void require_identity_mode(const Oracle& o, const char* algo) {
  if (o.mode() != IdentityMode::Identity)
    throw ApplicabilityError(std::string(algo) +
                             " needs identity sampling (pseudo-identities)");
}

inline void require_setting(const Oracle& o, std::initializer_list<Setting> ok,
                            const char* algo) {
  for (Setting s : ok)
    if (o.setting() == s) return;
  throw ApplicabilityError(std::string(algo) + " is not applicable to a " +
                           setting_name(o.setting()) + " instance");
}

enum class SrStat { BoxTotal, BoxLeader, Ratio, Expectation, RatioMle };
enum class BoxAllocation { Uniform, Proportional };

inline std::int64_t estimate_box_size_impl(std::int64_t distinct,
                                           std::int64_t draws);

inline RunResult run_sr_family(Oracle& o, std::int64_t t, SrStat stat,
                               BoxAllocation alloc,
                               std::span<const std::int64_t> sizes,
                               const char* algo) {
  require_identity_mode(o, algo);
  const int b = o.num_boxes(), m = o.num_communities();
  if (alloc == BoxAllocation::Proportional ||
      stat == SrStat::Ratio || stat == SrStat::Expectation) {
    if (sizes.size() != static_cast<std::size_t>(b))
      throw ApplicabilityError(std::string(algo) + " needs known box sizes");
  }
  const std::uint64_t start = o.query_count();
  const SrSchedule sched = sr_round_lengths(t, b);

  Tallies tal(b, m);
  std::vector<int> alive(b);
  for (int i = 0; i < b; ++i) alive[i] = i;
  RunResult res;

  std::vector<double> f(b, 0.0);
  for (int r = 1; r < b; ++r) {
    const std::int64_t pulls = sched.per_phase_pulls[r - 1];
    if (alloc == BoxAllocation::Uniform) {
      for (int i : alive)
        for (std::int64_t k = 0; k < pulls; ++k) tal.observe(o.sample(i));
    } else {
      std::vector<std::int64_t> w(alive.size());
      for (std::size_t a = 0; a < alive.size(); ++a) w[a] = sizes[alive[a]];
      const auto share = largest_remainder_split(
          w, pulls * static_cast<std::int64_t>(alive.size()));
      for (std::size_t a = 0; a < alive.size(); ++a)
        for (std::int64_t k = 0; k < share[a]; ++k)
          tal.observe(o.sample(alive[a]));
    }

    for (int i : alive) {
      std::int64_t lead = 0;
      for (int j = 0; j < m; ++j) lead = std::max(lead, tal.s_ij[i][j]);
      switch (stat) {
        case SrStat::BoxTotal:
          f[i] = static_cast<double>(tal.s_i[i]);
          break;
        case SrStat::BoxLeader:
          f[i] = static_cast<double>(lead);
          break;
        case SrStat::Ratio:
          f[i] = tal.s_i[i] > 0 ? static_cast<double>(lead) /
                                      static_cast<double>(tal.s_i[i]) *
                                      static_cast<double>(sizes[i])
                                : 0.0;
          break;
        case SrStat::Expectation: {
          const double denom = expected_distinct(sizes[i], tal.queries[i]);
          f[i] = denom > 0.0 ? static_cast<double>(lead) /
                                   denom * static_cast<double>(sizes[i])
                             : 0.0;
          break;
        }
        case SrStat::RatioMle: {
          const std::int64_t size_hat =
              estimate_box_size_impl(tal.s_i[i], tal.queries[i]);
          f[i] = tal.s_i[i] > 0 ? static_cast<double>(lead) /
                                      static_cast<double>(tal.s_i[i]) *
                                      static_cast<double>(size_hat)
                                : 0.0;
          break;
        }
      }
    }
    const int out = argmin_tie(f, alive, o.tie_rng());
    alive.erase(std::find(alive.begin(), alive.end(), out));
    res.elimination_order.push_back(out);
  }

  const int final_box = alive.front();
  res.estimate = argmax_count_tie(tal.s_ij[final_box], o.tie_rng());
  res.queries_used = static_cast<std::int64_t>(o.query_count() - start);
  res.per_community_distinct = std::move(tal.s_ij);
  return res;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Mixed-setting estimators.

/// Returns the community with the most raw samples after t queries of the
/// single box; ties uniform at random.
inline RunResult run_sfm(Oracle& o, std::int64_t t) {
  detail::require_setting(o, {Setting::Mixed}, "SFM");
  if (t < 0) throw std::invalid_argument("SFM: negative budget");
  const std::uint64_t start = o.query_count();
  std::vector<std::int64_t> counts(o.num_communities(), 0);
  for (std::int64_t k = 0; k < t; ++k) ++counts[o.sample(0).community];
  RunResult res;
  res.estimate = detail::argmax_count_tie(counts, o.tie_rng());
  res.queries_used = static_cast<std::int64_t>(o.query_count() - start);
  res.per_community_distinct = {std::move(counts)};
  return res;
}

/// Returns the community with the most distinct individuals after t queries
/// of the single box; ties uniform at random.
inline RunResult run_dsm(Oracle& o, std::int64_t t) {
  detail::require_setting(o, {Setting::Mixed}, "DSM");
  detail::require_identity_mode(o, "DSM");
  if (t < 0) throw std::invalid_argument("DSM: negative budget");
  const std::uint64_t start = o.query_count();
  std::vector<std::int64_t> distinct(o.num_communities(), 0);
  for (std::int64_t k = 0; k < t; ++k) {
    const Observation obs = o.sample(0);
    if (*obs.first_time) ++distinct[obs.community];
  }
  RunResult res;
  res.estimate = detail::argmax_count_tie(distinct, o.tie_rng());
  res.queries_used = static_cast<std::int64_t>(o.query_count() - start);
  res.per_community_distinct = {std::move(distinct)};
  return res;
}

// ---------------------------------------------------------------------------
// Separated-setting successive-rejects estimators.

/// Successive rejects on disjoint sample pairs: each phase draws pairs from
/// every surviving box and eliminates the box with the most within-pair
/// collisions (cumulative); two samples of one pair collide when they return
/// the same pseudo-identity. Odd budgets drop the last sample.
inline RunResult run_cc_sr(Oracle& o, std::int64_t t) {
  detail::require_setting(o, {Setting::Separated}, "CC_SR");
  detail::require_identity_mode(o, "CC_SR");
  const int b = o.num_boxes(), m = o.num_communities();
  if (t < 2 * b + 2) throw std::invalid_argument("CC_SR: budget below 2b+2");
  const std::uint64_t start = o.query_count();
  const SrSchedule sched = sr_round_lengths(t / 2, b);

  detail::Tallies tal(b, m);
  std::vector<std::int64_t> collisions(b, 0);
  std::vector<double> f(b, 0.0);
  std::vector<int> alive(b);
  for (int i = 0; i < b; ++i) alive[i] = i;
  RunResult res;

  for (int r = 1; r < b; ++r) {
    for (int i : alive) {
      for (std::int64_t k = 0; k < sched.per_phase_pulls[r - 1]; ++k) {
        const Observation first = o.sample(i);
        const Observation second = o.sample(i);
        tal.observe(first);
        tal.observe(second);
        if (*first.pseudo_id == *second.pseudo_id) ++collisions[i];
      }
    }
    for (int i : alive) f[i] = static_cast<double>(collisions[i]);
    const int out = detail::argmax_tie(f, alive, o.tie_rng());
    alive.erase(std::find(alive.begin(), alive.end(), out));
    res.elimination_order.push_back(out);
  }

  res.estimate = detail::argmax_count_tie(tal.s_ij[alive.front()], o.tie_rng());
  res.queries_used = static_cast<std::int64_t>(o.query_count() - start);
  res.per_community_distinct = std::move(tal.s_ij);
  return res;
}

/// Successive rejects eliminating the surviving box with the fewest distinct
/// individuals seen so far.
inline RunResult run_ds_sr_separated(Oracle& o, std::int64_t t) {
  detail::require_setting(o, {Setting::Separated}, "DS_SR_SEP");
  return detail::run_sr_family(o, t, detail::SrStat::BoxTotal,
                               detail::BoxAllocation::Uniform, {}, "DS_SR_SEP");
}

// ---------------------------------------------------------------------------
// Community-disjoint box estimators.

/// Box-eliminating SR: phase statistic is the largest per-community distinct
/// count in the box; the final estimate is the leading community of the last
/// surviving box.
inline RunResult run_ds_sr_box(Oracle& o, std::int64_t t) {
  detail::require_setting(o, {Setting::Separated, Setting::DisjointBox},
                          "DS_SR_BOX");
  return detail::run_sr_family(o, t, detail::SrStat::BoxLeader,
                               detail::BoxAllocation::Uniform, {}, "DS_SR_BOX");
}

/// DS_SR_BOX with each phase's sample total split across surviving boxes in
/// proportion to their known sizes (floors, leftovers by largest fractional
/// remainder). A box floored to zero samples still competes on stale tallies.
inline RunResult run_ds_psr(Oracle& o, std::int64_t t,
                            std::span<const std::int64_t> box_sizes) {
  detail::require_setting(o, {Setting::Separated, Setting::DisjointBox},
                          "DS_PSR");
  return detail::run_sr_family(o, t, detail::SrStat::BoxLeader,
                               detail::BoxAllocation::Proportional, box_sizes,
                               "DS_PSR");
}

/// DS_SR_BOX with the phase statistic rescaled to an unbiased community-size
/// estimate, max_j (S_ij / S_i) * N_i; boxes with no distinct samples score 0.
inline RunResult run_nds_sr(Oracle& o, std::int64_t t,
                            std::span<const std::int64_t> box_sizes) {
  detail::require_setting(o, {Setting::Separated, Setting::DisjointBox},
                          "NDS_SR");
  return detail::run_sr_family(o, t, detail::SrStat::Ratio,
                               detail::BoxAllocation::Uniform, box_sizes,
                               "NDS_SR");
}

/// NDS_SR with the empirical denominator replaced by the closed-form expected
/// distinct count for the queries issued to the box so far.
inline RunResult run_ends_sr(Oracle& o, std::int64_t t,
                             std::span<const std::int64_t> box_sizes) {
  detail::require_setting(o, {Setting::Separated, Setting::DisjointBox},
                          "ENDS_SR");
  return detail::run_sr_family(o, t, detail::SrStat::Expectation,
                               detail::BoxAllocation::Uniform, box_sizes,
                               "ENDS_SR");
}

/// NDS_SR with the box size replaced by estimate_box_size(S_i, queries_i),
/// recomputed at every elimination point; needs no size knowledge.
inline RunResult run_nds_sr_mle(Oracle& o, std::int64_t t) {
  detail::require_setting(o, {Setting::Separated, Setting::DisjointBox},
                          "NDS_SR_MLE");
  return detail::run_sr_family(o, t, detail::SrStat::RatioMle,
                               detail::BoxAllocation::Uniform, {},
                               "NDS_SR_MLE");
}

// ---------------------------------------------------------------------------
// Single-phase estimators for the general setting.

namespace detail {

enum class UeScore { Distinct, Ratio, Expectation };

inline RunResult run_single_phase(Oracle& o, std::int64_t t, UeScore score,
                                  BoxAllocation alloc,
                                  std::span<const std::int64_t> sizes,
                                  const char* algo) {
  require_identity_mode(o, algo);
  if (t < 0) throw std::invalid_argument(std::string(algo) + ": negative budget");
  const int b = o.num_boxes(), m = o.num_communities();
  if (alloc == BoxAllocation::Proportional || score != UeScore::Distinct) {
    if (sizes.size() != static_cast<std::size_t>(b))
      throw ApplicabilityError(std::string(algo) + " needs known box sizes");
  }
  const std::uint64_t start = o.query_count();

  Tallies tal(b, m);
  if (alloc == BoxAllocation::Uniform) {
    const std::int64_t each = t / b;
    for (int i = 0; i < b; ++i)
      for (std::int64_t k = 0; k < each; ++k) tal.observe(o.sample(i));
  } else {
    const auto share = largest_remainder_split(sizes, t);
    for (int i = 0; i < b; ++i)
      for (std::int64_t k = 0; k < share[i]; ++k) tal.observe(o.sample(i));
  }

  std::vector<double> total(m, 0.0);
  for (int i = 0; i < b; ++i) {
    double scale = 0.0;
    switch (score) {
      case UeScore::Distinct:
        scale = 1.0;
        break;
      case UeScore::Ratio:
        scale = tal.s_i[i] > 0 ? static_cast<double>(sizes[i]) /
                                     static_cast<double>(tal.s_i[i])
                               : 0.0;
        break;
      case UeScore::Expectation: {
        const double denom = expected_distinct(sizes[i], tal.queries[i]);
        scale = denom > 0.0 ? static_cast<double>(sizes[i]) / denom : 0.0;
        break;
      }
    }
    for (int j = 0; j < m; ++j)
      total[j] += scale * static_cast<double>(tal.s_ij[i][j]);
  }

  std::vector<int> all(m);
  for (int j = 0; j < m; ++j) all[j] = j;
  RunResult res;
  res.estimate = argmax_tie(total, all, o.tie_rng());
  res.queries_used = static_cast<std::int64_t>(o.query_count() - start);
  res.per_community_distinct = std::move(tal.s_ij);
  return res;
}

}  // namespace detail

/// floor(t/b) samples per box; picks the community with the most distinct
/// individuals summed across boxes.
inline RunResult run_ds_ue(Oracle& o, std::int64_t t) {
  return detail::run_single_phase(o, t, detail::UeScore::Distinct,
                                  detail::BoxAllocation::Uniform, {}, "DS_UE");
}

/// Single phase with box budgets proportional to known sizes.
inline RunResult run_ds_pe(Oracle& o, std::int64_t t,
                           std::span<const std::int64_t> box_sizes) {
  return detail::run_single_phase(o, t, detail::UeScore::Distinct,
                                  detail::BoxAllocation::Proportional,
                                  box_sizes, "DS_PE");
}

/// floor(t/b) per box; picks argmax_j sum_i (S_ij / S_i) * N_i, empty boxes
/// contributing nothing.
inline RunResult run_nds_ue(Oracle& o, std::int64_t t,
                            std::span<const std::int64_t> box_sizes) {
  return detail::run_single_phase(o, t, detail::UeScore::Ratio,
                                  detail::BoxAllocation::Uniform, box_sizes,
                                  "NDS_UE");
}

/// NDS_UE with empirical S_i replaced by expected_distinct(N_i, floor(t/b)).
inline RunResult run_ends_ue(Oracle& o, std::int64_t t,
                             std::span<const std::int64_t> box_sizes) {
  return detail::run_single_phase(o, t, detail::UeScore::Expectation,
                                  detail::BoxAllocation::Uniform, box_sizes,
                                  "ENDS_UE");
}

// ---------------------------------------------------------------------------

/// Method-of-moments inversion of expected_distinct: the smallest population
/// N >= S whose expected distinct count after k draws reaches S. Collision-free
/// observations (S == k) carry no upper evidence and return the birthday-order
/// cap k^2; S <= 1 is returned as-is.
inline std::int64_t estimate_box_size(std::int64_t distinct, std::int64_t draws) {
  if (distinct < 0 || draws < distinct)
    throw std::invalid_argument("estimate_box_size: need 0 <= S <= k");
  if (distinct <= 1) return distinct;
  if (distinct == draws) return draws * draws;
  std::int64_t lo = distinct;  // expected_distinct(S, k) < S always
  std::int64_t hi = 2 * distinct;
  while (expected_distinct(hi, draws) < static_cast<double>(distinct)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (expected_distinct(mid, draws) >= static_cast<double>(distinct))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

namespace detail {
inline std::int64_t estimate_box_size_impl(std::int64_t distinct,
                                           std::int64_t draws) {
  return estimate_box_size(distinct, draws);
}
}  // namespace detail

/// Dispatch by id; box_sizes must be supplied exactly when
/// algorithm_needs_sizes(id).
inline RunResult run_algorithm(AlgorithmId id, Oracle& o, std::int64_t t,
                               std::span<const std::int64_t> box_sizes = {}) {
  switch (id) {
    case AlgorithmId::SFM: return run_sfm(o, t);
    case AlgorithmId::DSM: return run_dsm(o, t);
    case AlgorithmId::CC_SR: return run_cc_sr(o, t);
    case AlgorithmId::DS_SR_SEP: return run_ds_sr_separated(o, t);
    case AlgorithmId::DS_SR_BOX: return run_ds_sr_box(o, t);
    case AlgorithmId::DS_PSR: return run_ds_psr(o, t, box_sizes);
    case AlgorithmId::NDS_SR: return run_nds_sr(o, t, box_sizes);
    case AlgorithmId::ENDS_SR: return run_ends_sr(o, t, box_sizes);
    case AlgorithmId::NDS_SR_MLE: return run_nds_sr_mle(o, t);
    case AlgorithmId::DS_UE: return run_ds_ue(o, t);
    case AlgorithmId::DS_PE: return run_ds_pe(o, t, box_sizes);
    case AlgorithmId::NDS_UE: return run_nds_ue(o, t, box_sizes);
    case AlgorithmId::ENDS_UE: return run_ends_ue(o, t, box_sizes);
  }
  throw std::invalid_argument("unknown algorithm id");
}

}  // namespace cme
