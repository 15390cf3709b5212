#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "nckit/garside_count.hpp"
#include "oracles.hpp"

using namespace nckit;

namespace {

// Reference M_3 in a fixed, non-lexicographic ordering of NC(3).
const std::vector<std::vector<int>> kPrintedM3 = {
    {1, 0, 0, 0, 0}, {1, 1, 0, 1, 0}, {1, 1, 1, 0, 0}, {1, 0, 1, 1, 0}, {1, 1, 1, 1, 1}};

/// phi_hat(x) = sum_{y <= x} mu(x, y) phi(y), with mu the inverse of the
/// zeta matrix zeta(x, y) = [x >= y] in a linear extension.
Rational mobius_transform_product(int n, const std::function<Rational(const NcPartition&)>& phi) {
  auto order = enumerate_nc(n);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.block_count() > b.block_count(); });
  DenseMatrix<BigInt> zeta(order.size(), std::vector<BigInt>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j) zeta[i][j] = leq(order[j], order[i]) ? 1 : 0;
  const auto mu = unit_lower_inverse(zeta);
  Rational product = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Rational hat = 0;
    for (std::size_t j = 0; j < order.size(); ++j)
      if (mu[i][j] != 0) hat += Rational(mu[i][j]) * phi(order[j]);
    product *= hat;
  }
  return product;
}

}  // namespace

TEST_CASE("normal_pair") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& b : enumerate_nc(n)) CHECK(normal_pair(NcPartition::top(n), b));
    for (const auto& a : enumerate_nc(n)) CHECK(normal_pair(a, NcPartition::bottom(n)));
  }
  auto three = enumerate_nc(3);
  int pairs = 0;
  for (const auto& a : three)
    for (const auto& b : three) pairs += normal_pair(a, b);
  CHECK(pairs == 15);
  CHECK_THROWS_AS(normal_pair(NcPartition::top(3), NcPartition::top(4)), invalid_input);
}

TEST_CASE("incidence_matrix examples") {
  auto m2 = incidence_matrix(2);
  CHECK(m2.dimension() == 2);
  CHECK(m2.ones() == 3);

  auto m3 = incidence_matrix(3);
  CHECK(m3.dimension() == 5);
  CHECK(m3.ones() == 15);
  CHECK_THROWS_AS(incidence_matrix(10), resource_limit);
}

TEST_CASE("incidence matrix entries agree with normal_pair") {
  for (int n = 1; n <= 5; ++n) {
    auto m = incidence_matrix(n);
    for (std::size_t i = 0; i < m.dimension(); ++i)
      for (std::size_t j = 0; j < m.dimension(); ++j)
        REQUIRE(m(i, j) == normal_pair(m.order()[i], m.order()[j]));
  }
}

TEST_CASE("incidence matrix: rows and columns of 0_n and 1_n") {
  for (int n = 2; n <= 6; ++n) {
    auto m = incidence_matrix(n);
    const auto bottom = m.index_of(NcPartition::bottom(n));
    const auto top = m.index_of(NcPartition::top(n));
    for (std::size_t k = 0; k < m.dimension(); ++k) {
      REQUIRE(m(k, bottom));
      REQUIRE(m(top, k));
      REQUIRE(m(bottom, k) == (k == bottom));
      REQUIRE(m(k, top) == (k == top));
    }
  }
}

TEST_CASE("M_3 is permutation-equivalent to the printed matrix") {
  auto m = incidence_matrix(3);
  std::vector<std::size_t> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  int matches = 0;
  do {
    bool same = true;
    for (std::size_t i = 0; i < 5 && same; ++i)
      for (std::size_t j = 0; j < 5 && same; ++j) same = m(perm[i], perm[j]) == (kPrintedM3[i][j] == 1);
    matches += same;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(matches > 0);
}

TEST_CASE("count_braids examples") {
  for (int n = 1; n <= 6; ++n) CHECK(count_braids(n, 1) == catalan(n));
  CHECK(count_braids(4, 3) == 556);
  CHECK(count_braids(6, 5) == BigInt(356470124));
  CHECK_THROWS_AS(count_braids(3, 0), invalid_input);
  CHECK_THROWS_AS(count_braids(10, 2), resource_limit);
}

TEST_CASE("count_braids matches explicit sequence enumeration") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) CHECK(count_braids(n, d) == oracle::normal_sequences(n, d));
  CHECK(count_braids(4, 4) == oracle::normal_sequences(4, 4));
}

TEST_CASE("count_braids(3, d) = 6 * 2^d - 2d - 5") {
  auto m = incidence_matrix(3);
  for (int d = 1; d <= 20; ++d) CHECK(count_braids(m, d) == 6 * ipow(2, d) - 2 * d - 5);
}

TEST_CASE("count_by_last") {
  auto ones = count_by_last(4, 1);
  CHECK(std::all_of(ones.values.begin(), ones.values.end(), [](const BigInt& v) { return v == 1; }));

  auto m3 = incidence_matrix(3);
  for (int d = 1; d <= 12; ++d) {
    auto c = count_by_last(m3, d);
    for (const auto& p : c.order)
      if (!p.is_bottom() && !p.is_top()) CHECK(c.at(p) == ipow(2, d) - 1);
    CHECK(c.total() == count_braids(m3, d));
    // The middle entries alone would exceed the total if each were 2^(d+1) - 1.
    CHECK(3 * (ipow(2, d + 1) - 1) > c.total());
  }
  CHECK(count_by_last(3, 2).total() == 15);
}

TEST_CASE("count_braids is nondecreasing in d") {
  for (int n = 2; n <= 6; ++n) {
    auto m = incidence_matrix(n);
    BigInt previous = 0;
    for (int d = 1; d <= 7; ++d) {
      auto current = count_braids(m, d);
      CHECK(current >= previous);
      previous = current;
    }
  }
}

TEST_CASE("determinant examples") {
  CHECK(abs(determinant_exact(2)) == 1);
  const auto printed = [] {
    DenseMatrix<BigInt> a(5, std::vector<BigInt>(5));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) a[i][j] = kPrintedM3[i][j];
    return a;
  }();
  CHECK(abs(oracle::cofactor_determinant(printed)) == 2);
  CHECK(abs(determinant_exact(3)) == 2);
  CHECK(abs(determinant_exact(4)) == determinant_formula(4));
  CHECK(determinant_formula(1) == 1);
  CHECK(determinant_formula(2) == 1);
  CHECK(determinant_formula(3) == 2);
  CHECK(determinant_formula(5) == ipow(2, 15) * ipow(5, 5) * 14);
  CHECK(abs(determinant_exact(5)) == determinant_formula(5));
  CHECK_THROWS_AS(determinant_exact(9), resource_limit);
}

TEST_CASE("Bareiss agrees with cofactor expansion on random integer matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t size = 1 + static_cast<std::size_t>(trial % 6);
    DenseMatrix<BigInt> a(size, std::vector<BigInt>(size));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    REQUIRE(bareiss_determinant(a) == oracle::cofactor_determinant(a));
  }
}

TEST_CASE("meet_matrix_det examples") {
  auto all_ones = [](const NcPartition&) { return Rational(1); };
  for (int n = 2; n <= 4; ++n) CHECK(meet_matrix_det(n, all_ones) == 0);
  CHECK(meet_matrix_det(1, all_ones) == 1);

  auto bottom_indicator = [](const NcPartition& p) { return Rational(p.is_bottom() ? 1 : 0); };
  CHECK(abs(meet_matrix_det(3, bottom_indicator)) == 2);
  CHECK(abs(meet_matrix_det(3, bottom_indicator)) == Rational(abs(determinant_exact(3))));

  auto catalan_weight = [](const NcPartition& p) { return Rational(catalan(static_cast<long>(p.block_count()))); };
  CHECK(meet_matrix_det(4, catalan_weight) == mobius_transform_product(4, catalan_weight));
  CHECK_THROWS_AS(meet_matrix_det(7, all_ones), resource_limit);
}

TEST_CASE("meet-matrix determinant equals the Mobius-transform product for random phi") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> value(-5, 5);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::map<NcPartition, Rational> table;
      for (const auto& p : enumerate_nc(n)) table[p] = value(rng);
      auto phi = [&](const NcPartition& p) { return table.at(p); };
      REQUIRE(meet_matrix_det(n, phi) == mobius_transform_product(n, phi));
    }
  }
}

TEST_CASE("spectral_radius") {
  auto e2 = spectral_radius(2, 1e-9);
  CHECK(e2.converged);
  CHECK(std::abs(e2.value - 1.0) < 1e-3);
  auto e4 = spectral_radius(4, 1e-9);
  CHECK(std::abs(e4.value - 4.83) < 0.01);
  for (int n = 1; n <= 7; ++n) {
    auto e = spectral_radius(n, 1e-9);
    CHECK(e.lower_bound <= e.value + 1e-6);
    CHECK(e.value <= e.upper_bound + 1e-6);
    CHECK(e.value <= e.max_row_sum);
  }
  CHECK_THROWS_AS(spectral_radius(3, 0.0), invalid_input);
  CHECK_THROWS_AS(spectral_radius(9, 1e-9), resource_limit);
}

TEST_CASE("spectral_radius reports non-convergence with the last iterate") {
  try {
    spectral_radius(2, 1e-12, caps::spectral, 10);
    FAIL("expected numerical_failure");
  } catch (const numerical_failure& e) {
    CHECK(e.last_iterate().size() == 2);
    CHECK(e.last_estimate() > 0.9);
  }
}

TEST_CASE("reordering NC(n) conjugates M_n and preserves its invariants") {
  for (int n = 2; n <= 5; ++n) {
    auto base = incidence_matrix(n);
    auto shuffled_order = enumerate_nc(n);
    std::mt19937 rng(static_cast<unsigned>(n));
    std::shuffle(shuffled_order.begin(), shuffled_order.end(), rng);
    auto shuffled = incidence_matrix_over(shuffled_order);
    for (std::size_t i = 0; i < base.dimension(); ++i)
      for (std::size_t j = 0; j < base.dimension(); ++j)
        REQUIRE(shuffled(i, j) == base(base.index_of(shuffled_order[i]), base.index_of(shuffled_order[j])));
    for (int d = 1; d <= 5; ++d) CHECK(count_braids(shuffled, d) == count_braids(base, d));
    CHECK(abs(determinant_of(shuffled)) == abs(determinant_of(base)));
    CHECK(std::abs(spectral_radius(shuffled, 1e-9).value - spectral_radius(base, 1e-9).value) < 1e-4);
  }
  auto order = enumerate_nc(3);
  order.pop_back();
  CHECK_THROWS_AS(incidence_matrix_over(order), invalid_input);
  order.push_back(order.front());
  CHECK_THROWS_AS(incidence_matrix_over(order), invalid_input);
}

TEST_CASE("part_size_total") {
  for (int n = 1; n <= 6; ++n) CHECK(part_size_total(n, n) == 1);
  CHECK(part_size_total(3, 2) == 3);
  CHECK(part_size_total(5, 2) == 35);
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) CHECK(part_size_total(n, k) == binomial(2 * n - k - 1, n - 1));
  CHECK_THROWS_AS(part_size_total(3, 4), invalid_input);
}
