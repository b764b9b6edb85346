#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "cme/errors.hpp"

namespace cme {

// A population of N individuals, each belonging to one community, partitioned
// across sampling boxes. counts[i][j] is the number of individuals of
// community j living in box i.
struct Instance {
  std::vector<std::vector<std::int64_t>> counts;  // b x m
  std::vector<std::string> box_labels;            // size b
  std::vector<std::string> community_labels;      // size m

  int num_boxes() const { return static_cast<int>(counts.size()); }
  int num_communities() const {
    return counts.empty() ? 0 : static_cast<int>(counts.front().size());
  }

  friend bool operator==(const Instance& a, const Instance& b) = default;
};

struct InstanceSummary {
  std::vector<std::int64_t> box_sizes;        // N_i, row sums
  std::vector<std::int64_t> community_sizes;  // d_j, column sums
  std::int64_t total = 0;                     // N
  std::set<int> mode_set;                     // argmax_j d_j, 0-based
};

enum class Setting { Mixed, Separated, DisjointBox, General };

inline const char* setting_name(Setting s) {
  switch (s) {
    case Setting::Mixed: return "mixed";
    case Setting::Separated: return "separated";
    case Setting::DisjointBox: return "disjoint-box";
    case Setting::General: return "general";
  }
  return "?";
}

namespace detail {

inline void check_unique_labels(const std::vector<std::string>& labels,
                                const char* kind) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second)
      throw std::invalid_argument(std::string("duplicate ") + kind +
                                  " label: " + l);
  }
}

}  // namespace detail

/// Validates and assembles an Instance. Rejects ragged or empty matrices,
/// negative entries, all-zero matrices, and mismatched or duplicated labels.
inline Instance build_instance(std::vector<std::vector<std::int64_t>> counts,
                               std::vector<std::string> box_labels,
                               std::vector<std::string> community_labels) {
  if (counts.empty() || counts.front().empty())
    throw std::invalid_argument("instance must have at least one box and one community");
  const std::size_t m = counts.front().size();
  bool any_positive = false;
  for (const auto& row : counts) {
    if (row.size() != m)
      throw std::invalid_argument("instance rows have unequal lengths");
    for (std::int64_t v : row) {
      if (v < 0) throw std::invalid_argument("instance entry is negative");
      if (v > 0) any_positive = true;
    }
  }
  if (!any_positive) throw std::invalid_argument("instance is all zero");
  if (box_labels.size() != counts.size())
    throw std::invalid_argument("box label count does not match row count");
  if (community_labels.size() != m)
    throw std::invalid_argument("community label count does not match column count");
  detail::check_unique_labels(box_labels, "box");
  detail::check_unique_labels(community_labels, "community");
  return Instance{std::move(counts), std::move(box_labels),
                  std::move(community_labels)};
}

/// build_instance with generated labels B1.., C1..
inline Instance make_instance(std::vector<std::vector<std::int64_t>> counts) {
  std::vector<std::string> boxes, communities;
  for (std::size_t i = 0; i < counts.size(); ++i)
    boxes.push_back("B" + std::to_string(i + 1));
  const std::size_t m = counts.empty() ? 0 : counts.front().size();
  for (std::size_t j = 0; j < m; ++j)
    communities.push_back("C" + std::to_string(j + 1));
  return build_instance(std::move(counts), std::move(boxes),
                        std::move(communities));
}

/// Single-box instance from a vector of community sizes.
inline Instance make_mixed_instance(std::vector<std::int64_t> sizes) {
  return make_instance({std::move(sizes)});
}

/// Diagonal instance: one community per box, in the given order.
inline Instance make_separated_instance(const std::vector<std::int64_t>& sizes) {
  std::vector<std::vector<std::int64_t>> counts(
      sizes.size(), std::vector<std::int64_t>(sizes.size(), 0));
  for (std::size_t i = 0; i < sizes.size(); ++i) counts[i][i] = sizes[i];
  return make_instance(std::move(counts));
}

inline InstanceSummary summarize(const Instance& inst) {
  InstanceSummary s;
  const int b = inst.num_boxes(), m = inst.num_communities();
  s.box_sizes.assign(b, 0);
  s.community_sizes.assign(m, 0);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < m; ++j) {
      s.box_sizes[i] += inst.counts[i][j];
      s.community_sizes[j] += inst.counts[i][j];
    }
  s.total = std::accumulate(s.box_sizes.begin(), s.box_sizes.end(),
                            std::int64_t{0});
  const std::int64_t top =
      *std::max_element(s.community_sizes.begin(), s.community_sizes.end());
  for (int j = 0; j < m; ++j)
    if (s.community_sizes[j] == top) s.mode_set.insert(j);
  return s;
}

/// Classification is checked in the order Mixed, Separated, DisjointBox,
/// General; the first match wins.
inline Setting classify_setting(const Instance& inst) {
  const int b = inst.num_boxes(), m = inst.num_communities();
  if (b == 1) return Setting::Mixed;

  // Separated: at most one non-zero per row and per column, and equally many
  // non-empty rows and columns.
  bool separated = true;
  int nonzero_rows = 0;
  for (int i = 0; i < b && separated; ++i) {
    int nz = 0;
    for (int j = 0; j < m; ++j) nz += inst.counts[i][j] > 0;
    if (nz > 1) separated = false;
    nonzero_rows += nz > 0;
  }
  int nonzero_cols = 0;
  std::vector<int> col_nz(m, 0);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < b; ++i) col_nz[j] += inst.counts[i][j] > 0;
    if (col_nz[j] > 1) separated = false;
    nonzero_cols += col_nz[j] > 0;
  }
  if (separated && nonzero_rows == nonzero_cols) return Setting::Separated;

  if (std::all_of(col_nz.begin(), col_nz.end(), [](int c) { return c == 1; }))
    return Setting::DisjointBox;
  return Setting::General;
}

// ---------------------------------------------------------------------------
// JSON file format: {"boxes": [...], "communities": [...], "counts": [[..]]}
// with counts in row-major box order.

inline nlohmann::ordered_json instance_to_json(const Instance& inst) {
  nlohmann::ordered_json j;
  j["boxes"] = inst.box_labels;
  j["communities"] = inst.community_labels;
  j["counts"] = inst.counts;
  return j;
}

inline Instance instance_from_json(const nlohmann::json& j) {
  try {
    return build_instance(
        j.at("counts").get<std::vector<std::vector<std::int64_t>>>(),
        j.at("boxes").get<std::vector<std::string>>(),
        j.at("communities").get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad instance document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad instance document: ") + e.what());
  }
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("cannot parse instance file " + path + ": " + e.what());
  }
  return instance_from_json(j);
}

inline void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  out << instance_to_json(inst).dump(2) << '\n';
}

}  // namespace cme
