#pragma once

// The lattice NC(n) of noncrossing partitions under reverse refinement:
// enumeration, meet, join, Kreweras complement, rotation, Möbius values.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "nckit/arith.hpp"
#include "nckit/error.hpp"
#include "nckit/set_partition.hpp"

namespace nckit {

class NcPartition : public detail::PartitionData {
 public:
  /// Validates both the partition property and noncrossing-ness.
  static NcPartition from_blocks(int n, const Blocks& blocks) {
    detail::validate_partition(n, blocks);
    return from_labels(labels_from_blocks(n, blocks));
  }

  static NcPartition from_labels(std::span<const int> labels) {
    detail::require_positive_size(static_cast<int>(labels.size()));
    if (detail::find_crossing(labels)) throw invalid_input("partition is not noncrossing");
    return NcPartition(labels);
  }

  static NcPartition from_set_partition(const SetPartition& p) { return from_labels(p.labels()); }

  /// 0_n: all singletons.
  static NcPartition bottom(int n) { return from_set_partition(SetPartition::bottom(n)); }
  /// 1_n: a single block.
  static NcPartition top(int n) { return from_set_partition(SetPartition::top(n)); }

  bool is_bottom() const noexcept { return block_count() == static_cast<std::size_t>(n_); }
  bool is_top() const noexcept { return block_count() == 1; }

  SetPartition to_set_partition() const { return SetPartition::from_labels(labels_); }

 private:
  explicit NcPartition(std::span<const int> labels) : PartitionData(labels) {}
  friend NcPartition unchecked_nc(std::span<const int> labels);
};

/// Builds an NcPartition from labels already known to be noncrossing.
inline NcPartition unchecked_nc(std::span<const int> labels) { return NcPartition(labels); }

/// Multiplicities of block sizes: counts[k] = number of blocks of size k.
struct BlockProfile {
  int n = 0;
  std::map<int, std::size_t> counts;

  std::size_t operator[](int k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }
  friend bool operator==(const BlockProfile&, const BlockProfile&) = default;
};

/// True iff the set partition `blocks` of {1..n} has no crossing quadruple.
inline bool is_noncrossing(int n, const Blocks& blocks) {
  return SetPartition::from_blocks(n, blocks).is_noncrossing();
}

namespace detail {

// Depth-first generation of restricted growth strings, rejecting an
// element as soon as joining a block would cross an earlier one: element i
// may join block b (last element l) only if every element strictly
// between l and i belongs to a block whose minimum exceeds l.
inline void generate_nc(int n, std::vector<int>& labels, std::vector<int>& first, std::vector<int>& last,
                        int i, int blocks, const std::function<void(std::span<const int>)>& emit) {
  if (i == n) {
    emit(labels);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    if (b < blocks) {
      int l = last[b];
      bool ok = true;
      for (int j = l + 1; j < i && ok; ++j) ok = first[labels[j]] > l;
      if (!ok) continue;
    }
    labels[i] = b;
    int saved_last = b < blocks ? last[b] : -1;
    if (b == blocks) {
      first.push_back(i);
      last.push_back(i);
    } else {
      last[b] = i;
    }
    generate_nc(n, labels, first, last, i + 1, b == blocks ? blocks + 1 : blocks, emit);
    if (b == blocks) {
      first.pop_back();
      last.pop_back();
    } else {
      last[b] = saved_last;
    }
  }
}

}  // namespace detail

/// All of NC(n), sorted lexicographically by canonical block list.
inline std::vector<NcPartition> enumerate_nc(int n, std::size_t cap = caps::enumerate_nc) {
  detail::require_positive_size(n);
  check_cap("enumerate_nc", static_cast<std::size_t>(n), cap);
  std::vector<NcPartition> out;
  std::vector<int> labels(static_cast<std::size_t>(n)), first, last;
  detail::generate_nc(n, labels, first, last, 0, 0,
                      [&](std::span<const int> l) { out.push_back(unchecked_nc(l)); });
  std::sort(out.begin(), out.end());
  return out;
}

/// a <= b in reverse refinement order.
inline bool leq(const NcPartition& a, const NcPartition& b) { return refines(a, b); }

inline NcPartition meet(const NcPartition& a, const NcPartition& b) {
  if (a.size() != b.size()) throw invalid_input("meet: partitions of different ground sets");
  const int n = a.size();
  // Pairwise block intersections; the pair (la, lb) is a block id.
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[i] = a.labels()[i] * n + b.labels()[i];
  return unchecked_nc(labels);
}

namespace detail {

/// Smallest noncrossing coarsening of a labelling: merge crossing blocks
/// until none remain. Each merge lowers the block count, so this ends.
inline std::vector<int> noncrossing_closure(std::vector<int> labels) {
  while (auto crossing = find_crossing(labels)) {
    auto [keep, drop] = *crossing;
    for (int& l : labels)
      if (l == drop) l = keep;
    labels = normalize_labels(labels);
  }
  return labels;
}

inline std::vector<int> full_join_labels(const PartitionData& a, const PartitionData& b) {
  const int n = a.size();
  UnionFind uf(static_cast<std::size_t>(n));
  for (const auto* p : {&a, &b})
    for (const auto& block : p->blocks())
      for (int x : block) uf.unite(block.front() - 1, x - 1);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[i] = uf.find(i);
  return normalize_labels(labels);
}

}  // namespace detail

inline NcPartition join(const NcPartition& a, const NcPartition& b) {
  if (a.size() != b.size()) throw invalid_input("join: partitions of different ground sets");
  return unchecked_nc(detail::noncrossing_closure(detail::full_join_labels(a, b)));
}

/// Relabels i -> ((i - 1 + s) mod n) + 1.
inline NcPartition rotate(const NcPartition& p, long long s) {
  const int n = p.size();
  long long shift = ((s % n) + n) % n;
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[(i + shift) % n] = p.labels()[i];
  return unchecked_nc(labels);
}

/// Kreweras complement, read off the cycles of pi^{-1} o gamma where pi
/// cycles each block in increasing order and gamma = (1 2 ... n).
inline NcPartition kreweras(const NcPartition& p) {
  const int n = p.size();
  std::vector<int> pi_inv(static_cast<std::size_t>(n));
  for (const auto& block : p.blocks()) {
    for (std::size_t j = 0; j < block.size(); ++j) {
      int from = block[j] - 1;
      int to = block[(j + 1) % block.size()] - 1;
      pi_inv[to] = from;
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int start = 0; start < n; ++start) {
    if (labels[start] >= 0) continue;
    for (int i = start; labels[i] < 0; i = pi_inv[(i + 1) % n]) labels[i] = next;
    ++next;
  }
  return unchecked_nc(labels);
}

/// K(K(p)) == rotate(p, kreweras_square_shift) for every p.
inline constexpr int kreweras_square_shift = -1;

inline BlockProfile block_profile(const NcPartition& p) {
  BlockProfile profile{p.size(), {}};
  for (const auto& b : p.blocks()) ++profile.counts[static_cast<int>(b.size())];
  return profile;
}

/// mu(p, 0_n) from the multiplicative product over blocks:
/// each block of size k contributes (-1)^(k-1) Cat_(k-1).
inline BigInt mobius_to_zero(const NcPartition& p) {
  BigInt result = 1;
  for (const auto& [k, count] : block_profile(p).counts) {
    BigInt factor = catalan(k - 1);
    if ((k - 1) % 2 == 1) factor = -factor;
    result *= ipow(factor, count);
  }
  return result;
}

/// mu(p, 0_n) from the defining recursion over the interval [0_n, p]:
/// mu(0,0) = 1 and mu(x,0) = -sum_{0 <= z < x} mu(z,0).
inline BigInt mobius_oracle(const NcPartition& p, std::size_t cap = caps::mobius_oracle) {
  check_cap("mobius_oracle", static_cast<std::size_t>(p.size()), cap);
  std::vector<NcPartition> interval;
  for (auto& z : enumerate_nc(p.size(), cap))
    if (leq(z, p)) interval.push_back(std::move(z));
  // Linear extension: finer partitions (more blocks) first.
  std::stable_sort(interval.begin(), interval.end(),
                   [](const auto& x, const auto& y) { return x.block_count() > y.block_count(); });
  std::vector<BigInt> mu(interval.size());
  for (std::size_t i = 0; i < interval.size(); ++i) {
    if (i == 0) {
      mu[i] = 1;
      continue;
    }
    BigInt sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (leq(interval[j], interval[i])) sum += mu[j];
    mu[i] = -sum;
  }
  return mu.back();
}

}  // namespace nckit
