#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cme {

/// Normalizer used by the successive-rejects phase lengths:
/// log_bar(b) = 1/2 + sum_{i=2}^{b} 1/i.
inline double log_bar(int arms) {
  if (arms < 2) throw std::invalid_argument("log_bar: need at least 2 arms");
  double acc = 0.5;
  for (int i = 2; i <= arms; ++i) acc += 1.0 / i;
  return acc;
}

// Cumulative per-phase sample counts for successive rejects over b arms:
// K_0 = 0 and K_r = ceil((1/log_bar(b)) * (t-b)/(b-r+1)) for r = 1..b-1.
// In phase r each of the b-r+1 surviving arms is pulled K_r - K_{r-1} times,
// so total consumption is sum_r (b-r+1)(K_r - K_{r-1}) = K_1+..+K_{b-2} +
// 2K_{b-1} <= t.
struct SrSchedule {
  std::int64_t budget = 0;
  int arms = 0;
  std::vector<std::int64_t> cumulative;       // K_0..K_{b-1}
  std::vector<std::int64_t> per_phase_pulls;  // K_r - K_{r-1}, r = 1..b-1

  int phases() const { return arms - 1; }

  std::int64_t total_consumption() const {
    std::int64_t total = 0;
    for (int r = 1; r < arms; ++r)
      total += static_cast<std::int64_t>(arms - r + 1) * per_phase_pulls[r - 1];
    return total;
  }
};

inline SrSchedule sr_round_lengths(std::int64_t budget, int arms) {
  if (arms < 2) throw std::invalid_argument("sr_round_lengths: need at least 2 arms");
  if (budget <= arms)
    throw std::invalid_argument("sr_round_lengths: budget must exceed the number of arms");

  SrSchedule s;
  s.budget = budget;
  s.arms = arms;
  s.cumulative.assign(arms, 0);
  const double norm = log_bar(arms);
  for (int r = 1; r < arms; ++r) {
    s.cumulative[r] = static_cast<std::int64_t>(std::ceil(
        static_cast<double>(budget - arms) / (norm * (arms - r + 1))));
    if (s.cumulative[r] < s.cumulative[r - 1]) s.cumulative[r] = s.cumulative[r - 1];
  }
  // Ceilings provably never overshoot the budget, but guard anyway: shrink
  // the final phase until consumption fits.
  auto consumption = [&] {
    std::int64_t total = 0;
    for (int r = 1; r < arms; ++r)
      total += static_cast<std::int64_t>(arms - r + 1) *
               (s.cumulative[r] - s.cumulative[r - 1]);
    return total;
  };
  while (consumption() > budget && s.cumulative[arms - 1] > s.cumulative[arms - 2])
    --s.cumulative[arms - 1];

  s.per_phase_pulls.resize(arms - 1);
  for (int r = 1; r < arms; ++r)
    s.per_phase_pulls[r - 1] = s.cumulative[r] - s.cumulative[r - 1];
  return s;
}

}  // namespace cme
