#pragma once

// Canonical set partitions of {1..n}. Shared storage for the three
// partition families (all set partitions, noncrossing, interval).

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nckit/error.hpp"

namespace nckit {

using Block = std::vector<int>;
using Blocks = std::vector<Block>;

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

namespace detail {

inline void require_positive_size(int n) {
  if (n < 1) throw invalid_input("ground-set size must be at least 1, got " + std::to_string(n));
}

/// Throws unless `blocks` partitions {1..n} into nonempty blocks.
inline void validate_partition(int n, const Blocks& blocks) {
  require_positive_size(n);
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::size_t total = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw invalid_input("partition contains an empty block");
    for (int x : b) {
      if (x < 1 || x > n)
        throw invalid_input("element " + std::to_string(x) + " outside 1.." + std::to_string(n));
      if (seen[x]) throw invalid_input("element " + std::to_string(x) + " appears twice");
      seen[x] = 1;
      ++total;
    }
  }
  if (total != static_cast<std::size_t>(n)) throw invalid_input("blocks do not cover 1..n");
}

/// Relabels arbitrary block ids so blocks are numbered by first occurrence
/// (restricted growth form); block i of the canonical list has label i.
inline std::vector<int> normalize_labels(std::span<const int> raw) {
  std::vector<int> out(raw.size());
  std::vector<std::pair<int, int>> remap;
  int next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto it = std::find_if(remap.begin(), remap.end(), [&](auto& p) { return p.first == raw[i]; });
    if (it == remap.end()) {
      remap.emplace_back(raw[i], next);
      out[i] = next++;
    } else {
      out[i] = it->second;
    }
  }
  return out;
}

inline Blocks blocks_from_normalized(std::span<const int> labels) {
  int count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  Blocks blocks(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < labels.size(); ++i) blocks[labels[i]].push_back(static_cast<int>(i) + 1);
  return blocks;
}

/// Returns a pair of distinct crossing block labels, or nullopt when the
/// labelling is noncrossing. Single left-to-right pass with a stack of
/// open blocks.
inline std::optional<std::pair<int, int>> find_crossing(std::span<const int> labels) {
  int count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<int> last(count, -1);
  std::vector<char> opened(count, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) last[labels[i]] = static_cast<int>(i);
  std::vector<int> stack;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int b = labels[i];
    if (!opened[b]) {
      opened[b] = 1;
      if (last[b] > static_cast<int>(i)) stack.push_back(b);
      continue;
    }
    if (stack.back() != b) return std::make_pair(b, stack.back());
    if (last[b] == static_cast<int>(i)) stack.pop_back();
  }
  return std::nullopt;
}

/// Common storage: canonical blocks plus the per-element block label.
class PartitionData {
 public:
  int size() const noexcept { return n_; }
  const Blocks& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<int>& labels() const noexcept { return labels_; }
  /// Index (in canonical order) of the block holding `element` (1-based).
  int block_of(int element) const { return labels_.at(static_cast<std::size_t>(element) - 1); }

  friend bool operator==(const PartitionData& a, const PartitionData& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_;
  }
  friend std::strong_ordering operator<=>(const PartitionData& a, const PartitionData& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 protected:
  PartitionData() = default;
  explicit PartitionData(std::span<const int> raw_labels)
      : n_(static_cast<int>(raw_labels.size())),
        labels_(normalize_labels(raw_labels)) {
    blocks_ = blocks_from_normalized(labels_);
  }

  static std::vector<int> labels_from_blocks(int n, const Blocks& blocks) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (int x : blocks[b]) labels[x - 1] = static_cast<int>(b);
    return labels;
  }

  int n_ = 0;
  Blocks blocks_;
  std::vector<int> labels_;
};

}  // namespace detail

/// An arbitrary set partition of {1..n} in canonical form: blocks sorted
/// internally and ordered by their minimum element.
class SetPartition : public detail::PartitionData {
 public:
  static SetPartition from_blocks(int n, const Blocks& blocks) {
    detail::validate_partition(n, blocks);
    return SetPartition(labels_from_blocks(n, blocks));
  }

  /// `labels[i]` is any block id for element i + 1.
  static SetPartition from_labels(std::span<const int> labels) {
    detail::require_positive_size(static_cast<int>(labels.size()));
    return SetPartition(labels);
  }

  static SetPartition bottom(int n) {
    detail::require_positive_size(n);
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 0);
    return SetPartition(labels);
  }

  static SetPartition top(int n) {
    detail::require_positive_size(n);
    return SetPartition(std::vector<int>(static_cast<std::size_t>(n), 0));
  }

  bool is_noncrossing() const { return !detail::find_crossing(labels_).has_value(); }

 private:
  explicit SetPartition(std::span<const int> labels) : PartitionData(labels) {}
};

/// Reverse refinement: every block of `a` lies inside a block of `b`.
template <class P>
  requires std::derived_from<P, detail::PartitionData>
bool refines(const P& a, const P& b) {
  if (a.size() != b.size()) throw invalid_input("partitions of different ground sets");
  for (const auto& block : a.blocks()) {
    int target = b.block_of(block.front());
    for (int x : block)
      if (b.block_of(x) != target) return false;
  }
  return true;
}

}  // namespace nckit
