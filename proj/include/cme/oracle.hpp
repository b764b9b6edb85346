#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "cme/instance.hpp"
#include "cme/rng.hpp"

namespace cme {

enum class IdentityMode { Identity, Identityless };

// One oracle response. pseudo_id and first_time are present only under
// identity sampling. pseudo_id equality means the same underlying individual
// within one oracle lifetime; first_time is true exactly on the first
// observation carrying that pseudo_id.
struct Observation {
  int box = 0;
  int community = 0;
  std::optional<std::uint64_t> pseudo_id;
  std::optional<bool> first_time;
};

// Samples uniformly with replacement from a chosen box and reveals the
// community of the drawn individual. Under identity sampling it additionally
// reports whether the individual was seen before, through pseudo-identities
// assigned in first-seen order per box (token = box index in the high 24
// bits, per-box order in the low 40). The sequence of observations is a pure
// function of (instance, seed, mode, query sequence).
//
// Stream seeding: the sampling stream uses derive_seed({seed, kSampleTag})
// and the tie-break stream derive_seed({seed, kTieTag}); both are xoshiro256**
// generators (see rng.hpp). Algorithms draw from tie_rng() only.
class Oracle {
 public:
  static constexpr std::uint64_t kSampleTag = 0x6f7261636c65ULL;  // "oracle"
  static constexpr std::uint64_t kTieTag = 0x746965ULL;           // "tie"

  Oracle(const Instance& inst, std::uint64_t seed, IdentityMode mode)
      : mode_(mode),
        num_boxes_(inst.num_boxes()),
        num_communities_(inst.num_communities()),
        sample_rng_(derive_seed({seed, kSampleTag})),
        tie_rng_(derive_seed({seed, kTieTag})) {
    setting_ = classify_setting(inst);
    cum_.resize(static_cast<std::size_t>(num_boxes_) * num_communities_);
    box_start_.resize(num_boxes_ + 1, 0);
    for (int i = 0; i < num_boxes_; ++i) {
      std::int64_t acc = 0;
      for (int j = 0; j < num_communities_; ++j) {
        acc += inst.counts[i][j];
        cum_[static_cast<std::size_t>(i) * num_communities_ + j] = acc;
      }
      box_start_[i + 1] = box_start_[i] + acc;
    }
    if (mode_ == IdentityMode::Identity) {
      const std::int64_t n = box_start_[num_boxes_];
      seen_.assign(static_cast<std::size_t>((n + 63) / 64), 0);
      order_.assign(static_cast<std::size_t>(n), kUnseen);
      next_order_.assign(num_boxes_, 0);
    }
  }

  int num_boxes() const { return num_boxes_; }
  int num_communities() const { return num_communities_; }
  IdentityMode mode() const { return mode_; }
  std::uint64_t query_count() const { return query_count_; }
  std::int64_t box_size(int box) const {
    return box_start_[box + 1] - box_start_[box];
  }

  // Structural regime of the underlying instance. Exposes no counts beyond
  // the class the experimenter's algorithm choice already presumes.
  Setting setting() const { return setting_; }

  /// Dedicated stream for random tie-breaking inside estimators.
  Xoshiro256& tie_rng() { return tie_rng_; }

  Observation sample(int box) {
    if (box < 0 || box >= num_boxes_)
      throw std::invalid_argument("oracle: box index out of range");
    const std::int64_t n = box_size(box);
    if (n == 0) throw std::invalid_argument("oracle: sampled box is empty");
    ++query_count_;

    const std::int64_t idx =
        static_cast<std::int64_t>(sample_rng_.below(static_cast<std::uint64_t>(n)));
    const auto* row = cum_.data() + static_cast<std::size_t>(box) * num_communities_;
    const int community = static_cast<int>(
        std::upper_bound(row, row + num_communities_, idx) - row);

    Observation obs;
    obs.box = box;
    obs.community = community;
    if (mode_ == IdentityMode::Identity) {
      const std::size_t g = static_cast<std::size_t>(box_start_[box] + idx);
      const bool fresh = !(seen_[g >> 6] & (1ULL << (g & 63)));
      if (fresh) {
        seen_[g >> 6] |= 1ULL << (g & 63);
        order_[g] = next_order_[box]++;
      }
      obs.pseudo_id = (static_cast<std::uint64_t>(box) << 40) | order_[g];
      obs.first_time = fresh;
    }
    return obs;
  }

 private:
  static constexpr std::uint64_t kUnseen = ~0ULL;

  IdentityMode mode_;
  int num_boxes_;
  int num_communities_;
  Setting setting_;
  std::vector<std::int64_t> cum_;        // row-major inclusive prefix sums
  std::vector<std::int64_t> box_start_;  // global individual offsets
  std::vector<std::uint64_t> seen_;      // one bit per individual
  std::vector<std::uint64_t> order_;     // first-seen order per individual
  std::vector<std::uint64_t> next_order_;
  std::uint64_t query_count_ = 0;
  Xoshiro256 sample_rng_;
  Xoshiro256 tie_rng_;
};

/// Debug trace: step,box,community,first_time (first_time empty in
/// identity-less mode).
inline void write_trace_csv(std::ostream& out,
                            std::span<const Observation> trace) {
  out << "step,box,community,first_time\n";
  for (std::size_t k = 0; k < trace.size(); ++k) {
    out << k << ',' << trace[k].box << ',' << trace[k].community << ',';
    if (trace[k].first_time) out << (*trace[k].first_time ? 1 : 0);
    out << '\n';
  }
}

}  // namespace cme
