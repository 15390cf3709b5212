#pragma once

// The three cumulant lattices behind one interface: noncrossing partitions
// (free), all set partitions (classical), interval partitions (Boolean).

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "nckit/error.hpp"
#include "nckit/nc_lattice.hpp"
#include "nckit/set_partition.hpp"

namespace nckit {

/// A partition of {1..n} into contiguous intervals, stored by its cut-set:
/// c in cuts means a block boundary between c and c + 1.
class IntervalPartition : public detail::PartitionData {
 public:
  static IntervalPartition from_cuts(int n, std::vector<int> cuts) {
    detail::require_positive_size(n);
    std::sort(cuts.begin(), cuts.end());
    if (std::adjacent_find(cuts.begin(), cuts.end()) != cuts.end())
      throw invalid_input("interval partition: repeated cut");
    for (int c : cuts)
      if (c < 1 || c >= n) throw invalid_input("interval partition: cut " + std::to_string(c) + " out of range");
    return IntervalPartition(n, std::move(cuts));
  }

  static IntervalPartition from_set_partition(const SetPartition& p) {
    std::vector<int> cuts;
    for (const auto& b : p.blocks()) {
      if (b.back() - b.front() + 1 != static_cast<int>(b.size()))
        throw invalid_input("partition is not an interval partition");
      if (b.back() != p.size()) cuts.push_back(b.back());
    }
    return IntervalPartition(p.size(), std::move(cuts));
  }

  static IntervalPartition bottom(int n) {
    detail::require_positive_size(n);
    std::vector<int> cuts(static_cast<std::size_t>(n) - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    return IntervalPartition(n, std::move(cuts));
  }
  static IntervalPartition top(int n) { return from_cuts(n, {}); }

  const std::vector<int>& cuts() const noexcept { return cuts_; }
  SetPartition to_set_partition() const { return SetPartition::from_labels(labels_); }

 private:
  IntervalPartition(int n, std::vector<int> cuts) : cuts_(std::move(cuts)) {
    n_ = n;
    labels_.assign(static_cast<std::size_t>(n), 0);
    int label = 0;
    auto cut = cuts_.begin();
    for (int i = 1; i <= n; ++i) {
      labels_[i - 1] = label;
      if (cut != cuts_.end() && *cut == i) {
        ++label;
        ++cut;
      }
    }
    blocks_ = detail::blocks_from_normalized(labels_);
  }

  std::vector<int> cuts_;
};

/// All Bell(n) set partitions, sorted by canonical block list.
inline std::vector<SetPartition> enumerate_set_partitions(int n, std::size_t cap = caps::set_partitions) {
  detail::require_positive_size(n);
  check_cap("enumerate_set_partitions", static_cast<std::size_t>(n), cap);
  std::vector<SetPartition> out;
  // Restricted growth strings: labels[i] <= 1 + max(labels[0..i-1]).
  std::vector<int> labels(static_cast<std::size_t>(n), 0), maxima(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(SetPartition::from_labels(labels));
    int i = n - 1;
    while (i > 0 && labels[i] > maxima[i - 1]) --i;
    if (i == 0) break;
    ++labels[i];
    maxima[i] = std::max(maxima[i - 1], labels[i]);
    for (int j = i + 1; j < n; ++j) {
      labels[j] = 0;
      maxima[j] = maxima[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All 2^(n-1) interval partitions (compositions of n), sorted by
/// canonical block list.
inline std::vector<IntervalPartition> enumerate_interval_partitions(int n,
                                                                    std::size_t cap = caps::interval_partitions) {
  detail::require_positive_size(n);
  check_cap("enumerate_interval_partitions", static_cast<std::size_t>(n), cap);
  std::vector<IntervalPartition> out;
  const unsigned long subsets = 1ul << (n - 1);
  out.reserve(subsets);
  for (unsigned long mask = 0; mask < subsets; ++mask) {
    std::vector<int> cuts;
    for (int c = 1; c < n; ++c)
      if (mask & (1ul << (c - 1))) cuts.push_back(c);
    out.push_back(IntervalPartition::from_cuts(n, std::move(cuts)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class Family { free_, classical, boolean };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::free_: return "free";
    case Family::classical: return "classical";
    case Family::boolean: return "boolean";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  if (s == "free") return Family::free_;
  if (s == "classical") return Family::classical;
  if (s == "boolean") return Family::boolean;
  throw invalid_input("unknown lattice family '" + std::string(s) + "'");
}

// Lattice traits: element type, enumeration, join, top. Generic code over
// the three families is written against these.

struct FreeLattice {
  using element = NcPartition;
  static constexpr Family family = Family::free_;
  static constexpr std::size_t default_cap = caps::enumerate_nc;
  static std::vector<element> enumerate(int n, std::size_t cap = default_cap) { return enumerate_nc(n, cap); }
  static element join(const element& a, const element& b) { return nckit::join(a, b); }
  static element top(int n) { return element::top(n); }
  static element bottom(int n) { return element::bottom(n); }
  static element from_set_partition(const SetPartition& p) { return element::from_set_partition(p); }
};

struct ClassicalLattice {
  using element = SetPartition;
  static constexpr Family family = Family::classical;
  static constexpr std::size_t default_cap = caps::set_partitions;
  static std::vector<element> enumerate(int n, std::size_t cap = default_cap) {
    return enumerate_set_partitions(n, cap);
  }
  static element join(const element& a, const element& b) {
    if (a.size() != b.size()) throw invalid_input("join: partitions of different ground sets");
    return SetPartition::from_labels(detail::full_join_labels(a, b));
  }
  static element top(int n) { return element::top(n); }
  static element bottom(int n) { return element::bottom(n); }
  static element from_set_partition(const SetPartition& p) { return p; }
};

struct BooleanLattice {
  using element = IntervalPartition;
  static constexpr Family family = Family::boolean;
  static constexpr std::size_t default_cap = caps::interval_partitions;
  static std::vector<element> enumerate(int n, std::size_t cap = default_cap) {
    return enumerate_interval_partitions(n, cap);
  }
  /// Coarsest common coarsening keeps only the shared cuts.
  static element join(const element& a, const element& b) {
    if (a.size() != b.size()) throw invalid_input("join: partitions of different ground sets");
    std::vector<int> shared;
    std::set_intersection(a.cuts().begin(), a.cuts().end(), b.cuts().begin(), b.cuts().end(),
                          std::back_inserter(shared));
    return element::from_cuts(a.size(), std::move(shared));
  }
  static element top(int n) { return element::top(n); }
  static element bottom(int n) { return element::bottom(n); }
  static element from_set_partition(const SetPartition& p) { return element::from_set_partition(p); }
};

/// Calls f(Lattice{}) with the traits type matching `family`.
template <class F>
decltype(auto) with_family(Family family, F&& f) {
  switch (family) {
    case Family::free_: return f(FreeLattice{});
    case Family::classical: return f(ClassicalLattice{});
    case Family::boolean: return f(BooleanLattice{});
  }
  throw invalid_input("unknown lattice family");
}

/// Join in the lattice of `family`. Both inputs must belong to that family
/// (noncrossing for free, interval for boolean).
inline SetPartition join_family(Family family, const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size()) throw invalid_input("join_family: partitions of different ground sets");
  return with_family(family, [&](auto lattice) {
    using L = decltype(lattice);
    auto joined = L::join(L::from_set_partition(a), L::from_set_partition(b));
    return SetPartition::from_labels(joined.labels());
  });
}

/// Every partition of the family as a plain SetPartition, in the family's
/// enumeration order.
inline std::vector<SetPartition> family_partitions(Family family, int n) {
  return with_family(family, [&](auto lattice) {
    using L = decltype(lattice);
    std::vector<SetPartition> out;
    for (const auto& p : L::enumerate(n)) out.push_back(SetPartition::from_labels(p.labels()));
    return out;
  });
}

}  // namespace nckit
