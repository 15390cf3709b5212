#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "nckit/free_cumulants.hpp"
#include "nckit/garside_count.hpp"
#include "oracles.hpp"

using namespace nckit;

namespace {

constexpr Family kFamilies[] = {Family::free_, Family::classical, Family::boolean};

ExactSeq seq(std::vector<long> terms, SeqRole role = SeqRole::cumulants) {
  std::vector<Rational> r(terms.begin(), terms.end());
  return ExactSeq(std::move(r), role);
}

ExactSeq random_seq(std::mt19937& rng, std::size_t length, SeqRole role = SeqRole::cumulants) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  std::vector<Rational> t;
  for (std::size_t i = 0; i < length; ++i) t.emplace_back(num(rng), den(rng));
  return ExactSeq(std::move(t), role);
}

FormalSeries catalan_squared_series(std::size_t order) {
  std::vector<Rational> c{Rational(1)};
  for (std::size_t l = 1; l <= order; ++l) c.emplace_back(catalan(static_cast<long>(l)) * catalan(static_cast<long>(l)));
  return FormalSeries(std::move(c));
}

}  // namespace

TEST_CASE("partition_weight") {
  const auto t = seq({2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(partition_weight(NcPartition::bottom(5), t) == 32);
  CHECK(partition_weight(NcPartition::top(5), t) == 11);
  const auto p = NcPartition::from_blocks(8, {{1}, {2, 8}, {3, 5, 6}, {4}, {7}});
  CHECK(partition_weight(p, t) == t[1] * t[1] * t[1] * t[2] * t[3]);
  CHECK_THROWS_AS(partition_weight(NcPartition::top(5), seq({1, 1, 1})), invalid_input);
}

TEST_CASE("ExactSeq and FormalSeries invariants") {
  CHECK_THROWS_AS(ExactSeq({}, SeqRole::moments), invalid_input);
  CHECK_THROWS_AS(FormalSeries({Rational(2), Rational(1)}), invalid_input);
  CHECK_THROWS_AS(seq({1, 2})[0], invalid_input);
  CHECK_THROWS_AS(seq({1, 2})[3], invalid_input);
  const auto s = seq({4, 5, 6}, SeqRole::moments);
  CHECK(FormalSeries::from_sequence(s).to_sequence(SeqRole::moments) == s);
}

TEST_CASE("moments_from_cumulants examples") {
  CHECK(moments_from_cumulants(seq({1, 0, 0, 0, 0, 0}), Family::free_).terms() ==
        std::vector<Rational>(6, Rational(1)));

  const auto catalan_moments = moments_from_cumulants(seq(std::vector<long>(10, 1)), Family::free_);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(catalan_moments[n] == catalan(static_cast<long>(n)));

  const auto semicircle = moments_from_cumulants(seq({0, 1, 0, 0, 0, 0, 0, 0, 0, 0}), Family::free_);
  for (std::size_t m = 1; m <= 5; ++m) {
    CHECK(semicircle[2 * m] == catalan(static_cast<long>(m)));
    CHECK(semicircle[2 * m - 1] == 0);
  }

  // Classical and Boolean counterparts of "all cumulants one".
  const auto bell = moments_from_cumulants(seq(std::vector<long>(7, 1)), Family::classical);
  for (int n = 1; n <= 7; ++n) CHECK(bell[n] == oracle::bell(n));
  const auto compositions = moments_from_cumulants(seq(std::vector<long>(8, 1)), Family::boolean);
  for (int n = 1; n <= 8; ++n) CHECK(compositions[n] == ipow(2, n - 1));

  CHECK_THROWS_AS(moments_from_cumulants(seq(std::vector<long>(13, 1)), Family::free_), resource_limit);
}

TEST_CASE("cumulants_from_moments examples") {
  CHECK(cumulants_from_moments(seq({1, 2, 5, 14}, SeqRole::moments), Family::free_) == seq({1, 1, 1, 1}));
  CHECK(cumulants_from_moments(seq({1, 1, 1, 1, 1}, SeqRole::moments), Family::free_) == seq({1, 0, 0, 0, 0}));
  // Point mass at 1 in every family.
  for (auto f : kFamilies)
    CHECK(cumulants_from_moments(seq({1, 1, 1, 1, 1, 1}, SeqRole::moments), f) == seq({1, 0, 0, 0, 0, 0}));
}

TEST_CASE("moment-cumulant transforms invert each other") {
  std::mt19937 rng(2024);
  for (auto f : kFamilies) {
    const std::size_t order = f == Family::boolean ? 10 : 6;
    for (int trial = 0; trial < 25; ++trial) {
      const auto r = random_seq(rng, order);
      REQUIRE(cumulants_from_moments(moments_from_cumulants(r, f), f) == r);
      const auto m = random_seq(rng, order, SeqRole::moments);
      REQUIRE(moments_from_cumulants(cumulants_from_moments(m, f), f) == m);
    }
  }
}

TEST_CASE("cumulants add under the moment transform") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r1 = random_seq(rng, 6), r2 = random_seq(rng, 6);
    std::vector<Rational> sum;
    for (std::size_t l = 1; l <= 6; ++l) sum.push_back(r1[l] + r2[l]);
    const ExactSeq r_sum(sum, SeqRole::cumulants);
    REQUIRE(cumulants_from_moments(moments_from_cumulants(r_sum, Family::free_), Family::free_) == r_sum);
  }
}

TEST_CASE("product_cumulants examples") {
  std::mt19937 rng(5);
  const auto r = random_seq(rng, 6);
  for (auto f : kFamilies) CHECK(product_cumulants({r}, f, 4) == r.truncated(4));

  const auto ones = seq(std::vector<long>(6, 1));
  CHECK(product_cumulants({ones, ones}, Family::free_, 3)[3] == 15);
  const auto two = product_cumulants({ones, ones}, Family::free_, 6);
  const std::vector<long> table_column{1, 3, 15, 99, 773, 6743};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(two[n] == table_column[n - 1]);
}

TEST_CASE("product_cumulants guards") {
  const auto ones = seq(std::vector<long>(12, 1));
  CHECK_THROWS_AS(product_cumulants({}, Family::free_, 3), invalid_input);
  CHECK_THROWS_AS(product_cumulants({ones, ones, ones, ones, ones}, Family::free_, 3), resource_limit);
  CHECK_THROWS_AS(product_cumulants({ones, ones}, Family::free_, 7), resource_limit);
  CHECK_THROWS_AS(product_cumulants({ones, ones}, Family::boolean, 11), resource_limit);
  CHECK_NOTHROW(product_cumulants({ones, ones}, Family::boolean, 10));
  CHECK_THROWS_AS(product_cumulants({seq({1, 1}), ones}, Family::free_, 3), invalid_input);
}

TEST_CASE("moments of product cumulants multiply, all families, k = 2, 3") {
  std::mt19937 rng(99);
  for (auto f : kFamilies) {
    for (std::size_t k : {2u, 3u}) {
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<ExactSeq> rs, ms;
        for (std::size_t i = 0; i < k; ++i) {
          rs.push_back(random_seq(rng, 5));
          ms.push_back(moments_from_cumulants(rs.back(), f));
        }
        const auto product = product_cumulants(rs, f, 5);
        REQUIRE(moments_from_cumulants(product, f) == pointwise_product(ms, 5));
      }
    }
  }
}

TEST_CASE("product_cumulants is symmetric in its factors") {
  std::mt19937 rng(3);
  std::vector<ExactSeq> rs{random_seq(rng, 5), random_seq(rng, 5), random_seq(rng, 5)};
  for (auto f : kFamilies) {
    const auto base = product_cumulants(rs, f, 5);
    auto perm = rs;
    std::rotate(perm.begin(), perm.begin() + 1, perm.end());
    CHECK(product_cumulants(perm, f, 5) == base);
    std::swap(perm[0], perm[2]);
    CHECK(product_cumulants(perm, f, 5) == base);
  }
}

TEST_CASE("count_joining_tuples") {
  for (std::size_t k = 1; k <= 4; ++k) CHECK(count_joining_tuples(Family::free_, 1, k) == 1);
  CHECK(count_joining_tuples(Family::free_, 2, 2) == 3);
  CHECK(count_joining_tuples(Family::free_, 3, 2) == 15);
  for (int n = 1; n <= 6; ++n) CHECK(count_joining_tuples(Family::free_, n, 2) == count_braids(n, 2));
  CHECK_THROWS_AS(count_joining_tuples(Family::free_, 7, 2), resource_limit);
  CHECK_THROWS_AS(count_joining_tuples(Family::free_, 3, 5), resource_limit);
}

TEST_CASE("tuple counts agree with product cumulants of all-ones inputs") {
  const auto ones = seq(std::vector<long>(6, 1));
  for (auto f : kFamilies) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto product = product_cumulants(std::vector<ExactSeq>(k, ones), f, 5);
      for (int n = 1; n <= 5; ++n) REQUIRE(product[n] == Rational(count_joining_tuples(f, n, k)));
    }
  }
}

TEST_CASE("series_compose_check") {
  CHECK(series_compose_check(FormalSeries::one(6), FormalSeries::one(6)));

  std::vector<Rational> cat{Rational(1)}, ones{Rational(1)};
  for (long l = 1; l <= 12; ++l) {
    cat.emplace_back(catalan(l));
    ones.emplace_back(1);
  }
  CHECK(series_compose_check(FormalSeries(cat), FormalSeries(ones)));
  auto broken = ones;
  broken[5] = 2;
  CHECK_FALSE(series_compose_check(FormalSeries(cat), FormalSeries(broken)));

  std::vector<Rational> b2{Rational(1)};
  for (int n = 1; n <= 8; ++n) b2.emplace_back(count_braids(n, 2));
  CHECK(series_compose_check(catalan_squared_series(8), FormalSeries(b2)));

  CHECK_THROWS_AS(series_compose_check(FormalSeries::one(3), FormalSeries::one(4)), invalid_input);
}

TEST_CASE("series_solve_R") {
  CHECK(series_solve_R(FormalSeries::one(5)) == FormalSeries::one(5));
  const auto r = series_solve_R(catalan_squared_series(6));
  const std::vector<long> expected{1, 3, 15, 99, 773, 6743};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(r[n] == expected[n - 1]);
  CHECK(series_compose_check(catalan_squared_series(6), r));
}

TEST_CASE("series inversion agrees with the free triangular solve") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = random_seq(rng, 6, SeqRole::moments);
    CHECK(series_solve_R(FormalSeries::from_sequence(m)).to_sequence(SeqRole::cumulants) ==
          cumulants_from_moments(m, Family::free_));
  }
}
