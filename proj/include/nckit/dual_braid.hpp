#pragma once

// Band generators of the dual braid monoid as words in the Artin
// generators, the map from noncrossing partitions to braid words, and the
// projection of braids onto permutations.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "nckit/error.hpp"
#include "nckit/nc_lattice.hpp"

namespace nckit {

/// A word in sigma_1..sigma_{n-1} and their inverses: letter +i is
/// sigma_i, -i is sigma_i^{-1}.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<int> letters = {}) : strands_(strands), letters_(std::move(letters)) {
    detail::require_positive_size(strands);
    for (int l : letters_)
      if (l == 0 || std::abs(l) >= strands_)
        throw invalid_input("braid letter " + std::to_string(l) + " out of range for " + std::to_string(strands_) +
                            " strands");
  }

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  BraidWord& operator*=(const BraidWord& rhs) {
    if (rhs.strands_ != strands_) throw invalid_input("cannot concatenate braids on different strand counts");
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
  }
  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) { return lhs *= rhs; }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// A bijection of {1..n}, stored as its one-line images.
class Permutation {
 public:
  static Permutation identity(int n) {
    detail::require_positive_size(n);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
  }

  /// images[i - 1] is the image of i.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    detail::require_positive_size(n);
    std::vector<char> seen(images_.size() + 1, 0);
    for (int x : images_) {
      if (x < 1 || x > n || seen[x]) throw invalid_input("images do not form a permutation");
      seen[x] = 1;
    }
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i) - 1); }
  const std::vector<int>& images() const noexcept { return images_; }

  /// (f * g)(i) = f(g(i)): the right factor acts first.
  friend Permutation operator*(const Permutation& f, const Permutation& g) {
    if (f.size() != g.size()) throw invalid_input("cannot compose permutations of different sizes");
    std::vector<int> out(f.images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.images_[g.images_[i] - 1];
    return Permutation(std::move(out));
  }

  /// Cycles with at least two elements, each starting at its minimum.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size() + 1, 0);
    for (int start = 1; start <= size(); ++start) {
      if (seen[start]) continue;
      std::vector<int> cycle;
      for (int i = start; !seen[i]; i = (*this)(i)) {
        seen[i] = 1;
        cycle.push_back(i);
      }
      if (cycle.size() > 1) out.push_back(std::move(cycle));
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// a_{ij} = sigma_i ... sigma_{j-2} sigma_{j-1} sigma_{j-2}^{-1} ... sigma_i^{-1}.
inline BraidWord band_generator(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw invalid_input("band generator needs 1 <= i < j <= n, got (" + std::to_string(i) + ", " + std::to_string(j) +
                        ", " + std::to_string(n) + ")");
  std::vector<int> letters;
  for (int g = i; g <= j - 1; ++g) letters.push_back(g);
  for (int g = j - 2; g >= i; --g) letters.push_back(-g);
  return BraidWord(n, std::move(letters));
}

/// Product of chained band generators a_{b1 b2} a_{b2 b3} ... over each
/// block, taking blocks in the order given.
inline BraidWord blocks_to_braid(int n, std::span<const Block> blocks) {
  BraidWord word(n);
  for (const auto& block : blocks)
    for (std::size_t t = 0; t + 1 < block.size(); ++t) word *= band_generator(block[t], block[t + 1], n);
  return word;
}

/// a_pi, with blocks in canonical order.
inline BraidWord partition_to_braid(const NcPartition& p) { return blocks_to_braid(p.size(), p.blocks()); }

/// delta_n = sigma_1 sigma_2 ... sigma_{n-1}.
inline BraidWord delta_word(int n) {
  detail::require_positive_size(n);
  std::vector<int> letters(static_cast<std::size_t>(n) - 1);
  std::iota(letters.begin(), letters.end(), 1);
  return BraidWord(n, std::move(letters));
}

/// sigma_i -> transposition (i, i+1); the word x_1 x_2 ... x_m maps to
/// t_{x_1} * t_{x_2} * ... * t_{x_m}, so the rightmost letter acts first.
inline Permutation braid_to_permutation(const BraidWord& w) {
  std::vector<int> images(static_cast<std::size_t>(w.strands()));
  std::iota(images.begin(), images.end(), 1);
  // Composing on the right: images <- images o t.
  for (int letter : w.letters()) {
    const int g = std::abs(letter);
    std::swap(images[g - 1], images[g]);
  }
  return Permutation(std::move(images));
}

/// Each block becomes the cycle through its elements in increasing order.
inline Permutation partition_to_permutation(const NcPartition& p) {
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (const auto& block : p.blocks())
    for (std::size_t t = 0; t < block.size(); ++t) images[block[t] - 1] = block[(t + 1) % block.size()];
  return Permutation(std::move(images));
}

}  // namespace nckit
