#include "doctest.h"

#include "feynkit/wick.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace feynkit;

namespace {

RatMatrix mat(const std::vector<std::vector<int>>& rows) {
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("enumerate_pairings counts and canonical order") {
  CHECK(enumerate_pairings(0).size() == 1);  // the empty pairing
  CHECK(enumerate_pairings(1).empty());
  CHECK(enumerate_pairings(3).empty());

  const auto p2 = enumerate_pairings(2);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0] == Pairing{{0, 1}});

  CHECK(enumerate_pairings(4).size() == 3);
  CHECK(enumerate_pairings(6).size() == 15);

  // (2n)!/(2^n n!) for n <= 6, and all pairings distinct with sorted pairs.
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto ps = enumerate_pairings(2 * n);
    CHECK(BigInt(ps.size()) == double_factorial_odd(n));
    auto sorted = ps;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (const auto& p : ps) {
      for (std::size_t k = 0; k < p.size(); ++k) {
        CHECK(p[k].first < p[k].second);
        if (k) CHECK(p[k - 1].first < p[k].first);
      }
    }
  }
}

TEST_CASE("moment: paper four-point examples") {
  // A with distinct propagator entries to tell monomials apart.
  const SymmetricForm a(mat({{2, 1}, {1, 1}}));
  const auto A = [&](std::size_t i, std::size_t j) { return a.propagator(i, j); };

  CHECK(moment(a, {{0, 1, 0, 1}}) == A(0, 0) * A(1, 1) + 2 * A(0, 1) * A(0, 1));
  CHECK(moment(a, {{0, 0, 0, 0}}) == 3 * A(0, 0) * A(0, 0));
  // <x1,x2,x3,x4> over d=4 identity-like form with off-diagonal couplings
  const SymmetricForm b(mat({{2, 1, 0, 0}, {1, 2, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 3}}));
  const auto B = [&](std::size_t i, std::size_t j) { return b.propagator(i, j); };
  CHECK(moment(b, {{0, 1, 2, 3}}) ==
        B(0, 1) * B(2, 3) + B(0, 2) * B(1, 3) + B(0, 3) * B(1, 2));
}

TEST_CASE("moment: odd moments vanish") {
  const SymmetricForm a(mat({{2, 1}, {1, 1}}));
  CHECK(moment(a, {{0}}) == Rat(0));
  CHECK(moment(a, {{0, 1, 0}}) == Rat(0));
  CHECK(moment_via_recursion(a, {{1}}) == Rat(0));
  CHECK(moment_via_recursion(a, {{0, 1, 1}}) == Rat(0));
}

TEST_CASE("moment_via_recursion: two-point reduces to the propagator") {
  const SymmetricForm a(mat({{3, 1, 0}, {1, 2, 1}, {0, 1, 4}}));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(moment_via_recursion(a, {{i, j}}) == a.propagator(i, j));
}

TEST_CASE("moment == moment_via_recursion on random instances") {
  std::mt19937_64 rng(7151);
  int done = 0;
  while (done < 120) {
    const std::size_t d = 1 + rng() % 4;
    const SymmetricForm a(oracles::random_pd_matrix(rng, d));
    const std::size_t m = 1 + rng() % 8;
    MomentRequest req;
    for (std::size_t k = 0; k < m; ++k) req.indices.push_back(rng() % d);
    CHECK(moment(a, req) == moment_via_recursion(a, req));
    ++done;
  }
}

TEST_CASE("moment is permutation invariant") {
  std::mt19937_64 rng(99);
  const SymmetricForm a(oracles::random_pd_matrix(rng, 3));
  MomentRequest req{{0, 1, 2, 2, 1, 0}};
  const Rat reference = moment(a, req);
  auto idx = req.indices;
  std::sort(idx.begin(), idx.end());
  do {
    CHECK(moment(a, {idx}) == reference);
  } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST_CASE("moment_oracle_numeric") {
  SUBCASE("independent coordinates") {
    const auto est = moment_oracle_numeric(SymmetricForm::identity(2), {{0, 1}},
                                           {.samples = 200000, .seed = 3});
    CHECK(std::abs(est.value) < 4.0 * est.std_error);
  }
  SUBCASE("unit variance") {
    const auto est =
        moment_oracle_numeric(SymmetricForm(mat({{1}})), {{0, 0}}, {.samples = 200000, .seed = 4});
    CHECK(std::abs(est.value - 1.0) < 4.0 * est.std_error);
  }
  SUBCASE("coupled form: (A^{-1})_11 = 1") {
    const auto est = moment_oracle_numeric(SymmetricForm(mat({{2, 1}, {1, 1}})), {{0, 0}},
                                           {.samples = 400000, .seed = 5});
    CHECK(std::abs(est.value - 1.0) < 4.0 * est.std_error);
  }
  SUBCASE("matches exact moments within 4 sigma, m <= 4") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 4; ++trial) {
      const std::size_t d = 1 + trial % 3;
      const SymmetricForm a(oracles::random_pd_matrix(rng, d));
      MomentRequest req;
      for (std::size_t k = 0; k < 4; ++k) req.indices.push_back(rng() % d);
      const auto est = moment_oracle_numeric(a, req, {.samples = 1000000, .seed = std::uint64_t(10 + trial)});
      CHECK(std::abs(est.value - to_double(moment(a, req))) < 4.0 * est.std_error);
    }
  }
  SUBCASE("zero samples rejected") {
    CHECK_THROWS_AS(moment_oracle_numeric(SymmetricForm::identity(1), {{0, 0}}, {.samples = 0}),
                    std::invalid_argument);
  }
  SUBCASE("deterministic mode reproduces bit-exactly; chunked is thread-count independent") {
    const SymmetricForm a(mat({{2, 1}, {1, 1}}));
    const MomentRequest req{{0, 1, 0, 1}};
    const auto e1 = moment_oracle_numeric(a, req, {.samples = 100000, .seed = 7, .deterministic = true});
    const auto e2 = moment_oracle_numeric(a, req, {.samples = 100000, .seed = 7, .deterministic = true});
    CHECK(e1.value == e2.value);
    const auto c1 = moment_oracle_numeric(a, req, {.samples = 300000, .seed = 7, .threads = 1});
    const auto c2 = moment_oracle_numeric(a, req, {.samples = 300000, .seed = 7, .threads = 3});
    CHECK(c1.value == c2.value);  // chunk partials reduced in fixed order
  }
}
