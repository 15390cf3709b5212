#pragma once

// Counting normal sequences in the dual braid monoid. Two noncrossing
// partitions (a, b) form a normal pair when kreweras(a) and b meet in 0_n;
// the incidence matrix M_n records this relation over NC(n), and the number
// of normal sequences of length d is the sum of the entries of M_n^(d-1).

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <vector>

#include "nckit/arith.hpp"
#include "nckit/error.hpp"
#include "nckit/linalg.hpp"
#include "nckit/nc_lattice.hpp"

namespace nckit {

/// True iff (a, b) is a normal pair: kreweras(a) ∧ b = 0_n.
inline bool normal_pair(const NcPartition& a, const NcPartition& b) {
  if (a.size() != b.size()) throw invalid_input("normal_pair: partitions of different ground sets");
  return meet(kreweras(a), b).is_bottom();
}

/// Dense 0/1 matrix indexed by a fixed ordering of NC(n).
class IncidenceMatrix {
 public:
  IncidenceMatrix(int n, std::vector<NcPartition> order)
      : n_(n), order_(std::move(order)), words_((order_.size() + 63) / 64), bits_(order_.size() * words_, 0) {
    for (std::size_t i = 0; i < order_.size(); ++i) index_.emplace(order_[i], i);
  }

  int strands() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return order_.size(); }
  const std::vector<NcPartition>& order() const noexcept { return order_; }

  bool operator()(std::size_t row, std::size_t col) const {
    return (bits_[row * words_ + col / 64] >> (col % 64)) & 1u;
  }
  void set(std::size_t row, std::size_t col) { bits_[row * words_ + col / 64] |= std::uint64_t{1} << (col % 64); }

  std::size_t distinct_entries() const noexcept { return index_.size(); }

  std::size_t index_of(const NcPartition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw invalid_input("partition is not indexed by this matrix");
    return it->second;
  }

  /// Number of nonzero entries.
  std::size_t ones() const {
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  std::vector<std::size_t> row_support(std::size_t row) const {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < dimension(); ++j)
      if ((*this)(row, j)) cols.push_back(j);
    return cols;
  }

  DenseMatrix<BigInt> to_dense() const {
    DenseMatrix<BigInt> m(dimension(), std::vector<BigInt>(dimension()));
    for (std::size_t i = 0; i < dimension(); ++i)
      for (std::size_t j = 0; j < dimension(); ++j)
        if ((*this)(i, j)) m[i][j] = 1;
    return m;
  }

 private:
  int n_;
  std::vector<NcPartition> order_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::map<NcPartition, std::size_t> index_;
};

namespace detail {

// b meets `complement` in 0_n iff no block of b holds two elements from the
// same block of `complement`.
inline bool meets_trivially(const std::vector<int>& complement_labels, const NcPartition& b) {
  std::vector<char> used(complement_labels.size(), 0);
  for (const auto& block : b.blocks()) {
    if (block.size() == 1) continue;
    for (int x : block) {
      char& u = used[complement_labels[x - 1]];
      if (u) return false;
      u = 1;
    }
    for (int x : block) used[complement_labels[x - 1]] = 0;
  }
  return true;
}

}  // namespace detail

/// M_n over an explicit ordering, which must list every element of NC(n)
/// exactly once.
inline IncidenceMatrix incidence_matrix_over(std::vector<NcPartition> order) {
  if (order.empty()) throw invalid_input("incidence matrix over an empty order");
  const int n = order.front().size();
  for (const auto& p : order)
    if (p.size() != n) throw invalid_input("order mixes ground-set sizes");
  if (order.size() != static_cast<std::size_t>(catalan(n))) throw invalid_input("order does not list NC(n)");
  IncidenceMatrix m(n, std::move(order));
  if (m.distinct_entries() != m.dimension()) throw invalid_input("order repeats a partition");
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    const auto complement = kreweras(m.order()[i]).labels();
    for (std::size_t j = 0; j < m.dimension(); ++j)
      if (detail::meets_trivially(complement, m.order()[j])) m.set(i, j);
  }
  return m;
}

/// M_n over the lexicographic enumeration order of NC(n).
inline IncidenceMatrix incidence_matrix(int n, std::size_t cap = caps::incidence_matrix) {
  check_cap("incidence_matrix", static_cast<std::size_t>(n), cap);
  return incidence_matrix_over(enumerate_nc(n));
}

/// Normal-sequence counts by final entry: values[j] is the number of
/// normal sequences of length d ending in order[j].
struct CountVector {
  int n = 0;
  int d = 0;
  std::vector<NcPartition> order;
  std::vector<BigInt> values;

  BigInt total() const {
    BigInt s = 0;
    for (const auto& v : values) s += v;
    return s;
  }

  const BigInt& at(const NcPartition& p) const {
    auto it = std::find(order.begin(), order.end(), p);
    if (it == order.end()) throw invalid_input("partition not in count vector");
    return values[static_cast<std::size_t>(it - order.begin())];
  }
};

/// Row vector (1, ..., 1) M^(d-1), by d - 1 vector-matrix products.
inline CountVector count_by_last(const IncidenceMatrix& m, int d) {
  if (d < 1) throw invalid_input("sequence length d must be at least 1");
  const std::size_t dim = m.dimension();
  std::vector<std::vector<std::size_t>> column_support(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (m(i, j)) column_support[j].push_back(i);
  std::vector<BigInt> v(dim, BigInt(1)), next(dim);
  for (int step = 1; step < d; ++step) {
    for (std::size_t j = 0; j < dim; ++j) {
      BigInt s = 0;
      for (auto i : column_support[j]) s += v[i];
      next[j] = std::move(s);
    }
    std::swap(v, next);
  }
  return CountVector{m.strands(), d, m.order(), std::move(v)};
}

inline CountVector count_by_last(int n, int d, std::size_t cap = caps::incidence_matrix) {
  if (d < 1) throw invalid_input("sequence length d must be at least 1");
  return count_by_last(incidence_matrix(n, cap), d);
}

/// b*_{n,d}: number of n-strand braids of dual normal length at most d.
inline BigInt count_braids(const IncidenceMatrix& m, int d) { return count_by_last(m, d).total(); }

inline BigInt count_braids(int n, int d, std::size_t cap = caps::incidence_matrix) {
  if (d < 1) throw invalid_input("sequence length d must be at least 1");
  return count_by_last(n, d, cap).total();
}

/// Signed determinant of M_n (exact).
inline BigInt determinant_of(const IncidenceMatrix& m) { return bareiss_determinant(m.to_dense()); }

inline BigInt determinant_exact(int n, std::size_t cap = caps::determinant) {
  check_cap("determinant_exact", static_cast<std::size_t>(n), cap);
  return determinant_of(incidence_matrix(n, cap));
}

/// prod_{k=2}^{n} Cat_{k-1}^C(2n-k-1, n-1).
inline BigInt determinant_formula(int n) {
  detail::require_positive_size(n);
  BigInt result = 1;
  for (int k = 2; k <= n; ++k)
    result *= ipow(catalan(k - 1), static_cast<std::uint64_t>(binomial(2 * n - k - 1, n - 1)));
  return result;
}

/// det of Phi(x, y) = phi(x ∧ y) over NC(n) in enumeration order.
inline Rational meet_matrix_det(int n, const std::function<Rational(const NcPartition&)>& phi,
                                std::size_t cap = caps::meet_matrix) {
  check_cap("meet_matrix_det", static_cast<std::size_t>(n), cap);
  const auto order = enumerate_nc(n);
  std::map<NcPartition, Rational> cache;
  DenseMatrix<Rational> a(order.size(), std::vector<Rational>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      auto x = meet(order[i], order[j]);
      auto it = cache.find(x);
      if (it == cache.end()) it = cache.emplace(x, phi(x)).first;
      a[i][j] = it->second;
    }
  }
  return bareiss_determinant(std::move(a));
}

struct SpectralEstimate {
  double value = 0;
  /// |difference| between the last two Rayleigh quotients.
  double achieved_tolerance = 0;
  bool converged = false;
  std::size_t iterations = 0;
  /// Collatz-Wielandt bounds from the final (positive) iterate.
  double lower_bound = 0;
  double upper_bound = 0;
  /// Largest row sum of M_n; an a priori upper bound.
  double max_row_sum = 0;
};

/// Perron root of M_n by power iteration on M_n + I from the all-ones
/// vector, stopping when successive Rayleigh quotients differ by < tol.
inline SpectralEstimate spectral_radius(const IncidenceMatrix& m, double tol,
                                        std::size_t max_iterations = 100000) {
  if (!(tol > 0)) throw invalid_input("spectral_radius: tolerance must be positive");
  const std::size_t dim = m.dimension();
  std::vector<std::vector<std::size_t>> rows(dim);
  SpectralEstimate est;
  for (std::size_t i = 0; i < dim; ++i) {
    rows[i] = m.row_support(i);
    est.max_row_sum = std::max(est.max_row_sum, static_cast<double>(rows[i].size()));
  }
  auto apply = [&](const std::vector<double>& v, std::vector<double>& out) {
    for (std::size_t i = 0; i < dim; ++i) {
      double s = 0;
      for (auto j : rows[i]) s += v[j];
      out[i] = s;
    }
  };
  std::vector<double> v(dim, 1.0 / std::sqrt(static_cast<double>(dim))), mv(dim);
  double previous = 0;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    apply(v, mv);
    double vv = 0, vmv = 0, norm = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      const double shifted = mv[i] + v[i];
      vv += v[i] * v[i];
      vmv += v[i] * shifted;
      norm += shifted * shifted;
    }
    const double rayleigh = vmv / vv;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < dim; ++i) v[i] = (mv[i] + v[i]) / norm;
    est.iterations = it;
    est.achieved_tolerance = std::abs(rayleigh - previous);
    est.value = rayleigh - 1.0;
    if (it > 1 && est.achieved_tolerance < tol) {
      est.converged = true;
      break;
    }
    previous = rayleigh;
  }
  apply(v, mv);
  est.lower_bound = std::numeric_limits<double>::infinity();
  est.upper_bound = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    const double ratio = mv[i] / v[i];
    est.lower_bound = std::min(est.lower_bound, ratio);
    est.upper_bound = std::max(est.upper_bound, ratio);
  }
  if (!est.converged) throw numerical_failure("spectral_radius: power iteration did not converge", est.value, v);
  return est;
}

inline SpectralEstimate spectral_radius(int n, double tol, std::size_t cap = caps::spectral,
                                        std::size_t max_iterations = 100000) {
  check_cap("spectral_radius", static_cast<std::size_t>(n), cap);
  return spectral_radius(incidence_matrix(n, cap), tol, max_iterations);
}

/// a_{k,n}: total number of size-k blocks over all of NC(n).
inline BigInt part_size_total(int n, int k, std::size_t cap = caps::enumerate_nc) {
  if (k < 1 || k > n) throw invalid_input("part_size_total: need 1 <= k <= n");
  BigInt total = 0;
  for (const auto& p : enumerate_nc(n, cap)) total += block_profile(p)[k];
  return total;
}

}  // namespace nckit
