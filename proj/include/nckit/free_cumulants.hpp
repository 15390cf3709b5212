#pragma once

// Moment-cumulant transforms over the free, classical and Boolean
// partition lattices; cumulants of products of independent variables;
// and the formal-series identity R(z M(z)) = M(z).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nckit/arith.hpp"
#include "nckit/error.hpp"
#include "nckit/partition_families.hpp"

namespace nckit {

enum class SeqRole { moments, cumulants };

/// A 1-indexed sequence of exact rationals T_1, ..., T_N.
class ExactSeq {
 public:
  ExactSeq(std::vector<Rational> terms, SeqRole role) : terms_(std::move(terms)), role_(role) {
    if (terms_.empty()) throw invalid_input("sequence must have at least one term");
  }

  std::size_t length() const noexcept { return terms_.size(); }
  SeqRole role() const noexcept { return role_; }
  const std::vector<Rational>& terms() const noexcept { return terms_; }

  const Rational& operator[](std::size_t l) const {
    if (l < 1 || l > terms_.size())
      throw invalid_input("sequence index " + std::to_string(l) + " outside 1.." + std::to_string(terms_.size()));
    return terms_[l - 1];
  }

  ExactSeq truncated(std::size_t n) const {
    if (n < 1 || n > terms_.size()) throw invalid_input("cannot truncate sequence to length " + std::to_string(n));
    return ExactSeq({terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(n)}, role_);
  }

  friend bool operator==(const ExactSeq&, const ExactSeq&) = default;

 private:
  std::vector<Rational> terms_;
  SeqRole role_;
};

/// Truncated power series 1 + c_1 z + ... + c_N z^N.
class FormalSeries {
 public:
  explicit FormalSeries(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty() || c_.front() != 1) throw invalid_input("formal series must have constant term 1");
  }

  static FormalSeries one(std::size_t order) {
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    return FormalSeries(std::move(c));
  }

  /// 1 + sum_l T_l z^l.
  static FormalSeries from_sequence(const ExactSeq& t) {
    std::vector<Rational> c{Rational(1)};
    c.insert(c.end(), t.terms().begin(), t.terms().end());
    return FormalSeries(std::move(c));
  }

  std::size_t order() const noexcept { return c_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  ExactSeq to_sequence(SeqRole role) const {
    if (order() == 0) throw invalid_input("series of order 0 has no sequence terms");
    return ExactSeq({c_.begin() + 1, c_.end()}, role);
  }

  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

 private:
  std::vector<Rational> c_;
};

/// T_pi = prod over blocks of T_|block|.
inline Rational partition_weight(const detail::PartitionData& p, const ExactSeq& t) {
  Rational w = 1;
  for (const auto& b : p.blocks()) w *= t[b.size()];
  return w;
}

namespace detail {

inline std::size_t family_cap(Family f) {
  return with_family(f, [](auto lattice) { return decltype(lattice)::default_cap; });
}

inline std::size_t product_order_cap(Family f) {
  return f == Family::boolean ? caps::product_order_boolean : caps::product_order;
}

}  // namespace detail

/// M_n = sum over the family's partitions pi of {1..n} of R_pi.
inline ExactSeq moments_from_cumulants(const ExactSeq& r, Family family) {
  check_cap("moments_from_cumulants", r.length(), detail::family_cap(family));
  std::vector<Rational> m;
  for (std::size_t n = 1; n <= r.length(); ++n) {
    Rational s = 0;
    for (const auto& p : family_partitions(family, static_cast<int>(n))) s += partition_weight(p, r);
    m.push_back(std::move(s));
  }
  return ExactSeq(std::move(m), SeqRole::moments);
}

/// Inverse transform by triangular solve: R_n = M_n - sum_{pi != 1_n} R_pi.
inline ExactSeq cumulants_from_moments(const ExactSeq& m, Family family) {
  check_cap("cumulants_from_moments", m.length(), detail::family_cap(family));
  std::vector<Rational> r;
  for (std::size_t n = 1; n <= m.length(); ++n) {
    Rational s = m[n];
    if (n > 1) {
      // Only R_1..R_{n-1} appear in the weights of pi != 1_n.
      ExactSeq known(r, SeqRole::cumulants);
      for (const auto& p : family_partitions(family, static_cast<int>(n)))
        if (p.block_count() > 1) s -= partition_weight(p, known);
    }
    r.push_back(std::move(s));
  }
  return ExactSeq(std::move(r), SeqRole::cumulants);
}

inline ExactSeq pointwise_product(const std::vector<ExactSeq>& seqs, std::size_t order) {
  if (seqs.empty()) throw invalid_input("pointwise product of no sequences");
  std::vector<Rational> out(order, Rational(1));
  for (const auto& s : seqs)
    for (std::size_t l = 1; l <= order; ++l) out[l - 1] *= s[l];
  return ExactSeq(std::move(out), seqs.front().role());
}

namespace detail {

/// The family's partitions of {1..n} with a precomputed join table on
/// indices.
template <class L>
struct JoinTable {
  std::vector<typename L::element> elements;
  std::vector<std::uint32_t> join;
  std::uint32_t top = 0;

  explicit JoinTable(int n) : elements(L::enumerate(n)) {
    const std::size_t size = elements.size();
    join.resize(size * size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i; j < size; ++j) {
        auto joined = L::join(elements[i], elements[j]);
        auto it = std::lower_bound(elements.begin(), elements.end(), joined);
        auto idx = static_cast<std::uint32_t>(it - elements.begin());
        join[i * size + j] = join[j * size + i] = idx;
      }
    }
    top = static_cast<std::uint32_t>(std::lower_bound(elements.begin(), elements.end(), L::top(n)) -
                                     elements.begin());
  }

  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const { return join[a * elements.size() + b]; }
};

inline void check_product_guard(Family family, std::size_t k, std::size_t order) {
  if (k < 1) throw invalid_input("need at least one factor");
  check_cap("product arity k", k, caps::product_arity);
  check_cap("product order N", order, product_order_cap(family));
}

template <class L>
Rational joined_weight_sum(int n, const std::vector<ExactSeq>& rs) {
  JoinTable<L> table(n);
  const std::size_t size = table.elements.size();
  // acc[x] = sum over tuples (pi_1..pi_i) with running join x of prod weights.
  std::vector<Rational> acc(size), next(size);
  std::vector<Rational> w(size);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t e = 0; e < size; ++e) w[e] = partition_weight(table.elements[e], rs[i]);
    if (i == 0) {
      acc = w;
      continue;
    }
    std::fill(next.begin(), next.end(), Rational(0));
    for (std::size_t a = 0; a < size; ++a) {
      if (acc[a] == 0) continue;
      for (std::size_t b = 0; b < size; ++b) {
        if (w[b] == 0) continue;
        next[table(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b))] += acc[a] * w[b];
      }
    }
    std::swap(acc, next);
  }
  return acc[table.top];
}

}  // namespace detail

/// Cumulants of a product of independent variables from the cumulants of
/// the factors: R_n = sum over k-tuples whose join is 1_n of
/// prod_i R^(i)_{pi_i}. Tuples are grouped by their running join.
inline ExactSeq product_cumulants(const std::vector<ExactSeq>& rs, Family family, std::size_t order) {
  detail::check_product_guard(family, rs.size(), order);
  if (order < 1) throw invalid_input("order N must be at least 1");
  for (const auto& r : rs)
    if (r.length() < order) throw invalid_input("factor sequence shorter than order N");
  std::vector<Rational> out;
  for (std::size_t n = 1; n <= order; ++n) {
    out.push_back(with_family(family, [&](auto lattice) {
      return detail::joined_weight_sum<decltype(lattice)>(static_cast<int>(n), rs);
    }));
  }
  return ExactSeq(std::move(out), SeqRole::cumulants);
}

/// Number of k-tuples of the family's partitions of {1..n} whose join is
/// 1_n, by enumeration of tuples. Once a prefix already joins to 1_n, all
/// completions are counted at once.
inline BigInt count_joining_tuples(Family family, int n, std::size_t k) {
  detail::require_positive_size(n);
  detail::check_product_guard(family, k, static_cast<std::size_t>(n));
  return with_family(family, [&](auto lattice) {
    using L = decltype(lattice);
    detail::JoinTable<L> table(n);
    const std::uint32_t size = static_cast<std::uint32_t>(table.elements.size());
    std::vector<BigInt> completions(k + 1);
    for (std::size_t r = 0; r <= k; ++r) completions[r] = ipow(BigInt(size), r);
    std::uint64_t small = 0;
    BigInt total = 0;
    // Depth-first over prefixes; running[i] is the join of the first i entries.
    std::vector<std::uint32_t> running(k + 1);
    auto visit = [&](auto&& self, std::size_t depth) -> void {
      if (depth == k) {
        if (running[depth] == table.top) ++small;
        return;
      }
      for (std::uint32_t e = 0; e < size; ++e) {
        running[depth + 1] = depth == 0 ? e : table(running[depth], e);
        if (running[depth + 1] == table.top && depth + 1 < k) {
          total += completions[k - depth - 1];
          continue;
        }
        self(self, depth + 1);
      }
    };
    visit(visit, 0);
    return total + small;
  });
}

namespace detail {

inline std::vector<Rational> truncated_product(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                               std::size_t order) {
  std::vector<Rational> out(order + 1);
  for (std::size_t i = 0; i <= order && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace detail

/// R(z M(z)) through order N.
inline FormalSeries compose_with_zm(const FormalSeries& m_series, const FormalSeries& r_series) {
  const std::size_t order = m_series.order();
  if (r_series.order() != order) throw invalid_input("series of different truncation orders");
  std::vector<Rational> zm(order + 1);
  for (std::size_t i = 1; i <= order; ++i) zm[i] = m_series[i - 1];
  std::vector<Rational> power(order + 1), result(order + 1);
  power[0] = 1;
  result[0] = r_series[0];
  for (std::size_t l = 1; l <= order; ++l) {
    power = detail::truncated_product(power, zm, order);
    for (std::size_t i = 0; i <= order; ++i) result[i] += r_series[l] * power[i];
  }
  return FormalSeries(std::move(result));
}

/// True iff R(z M(z)) = M(z) through the common truncation order.
inline bool series_compose_check(const FormalSeries& m_series, const FormalSeries& r_series) {
  return compose_with_zm(m_series, r_series) == m_series;
}

/// The unique R with R(z M(z)) = M(z), order by order:
/// [z^n] gives R_n = M_n - sum_{l<n} R_l [z^(n-l)] M^l.
inline FormalSeries series_solve_R(const FormalSeries& m_series) {
  const std::size_t order = m_series.order();
  std::vector<std::vector<Rational>> powers{FormalSeries::one(order).coefficients()};
  for (std::size_t l = 1; l < order; ++l)
    powers.push_back(detail::truncated_product(powers.back(), m_series.coefficients(), order));
  std::vector<Rational> r(order + 1);
  r[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational s = m_series[n];
    for (std::size_t l = 1; l < n; ++l) s -= r[l] * powers[l][n - l];
    r[n] = std::move(s);
  }
  return FormalSeries(std::move(r));
}

}  // namespace nckit
