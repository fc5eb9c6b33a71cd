#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "degflag/perm.hpp"
#include "oracles.hpp"

using namespace degflag;

namespace {

Permutation random_perm(int m, std::mt19937& rng) {
  std::vector<int> w(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(w.begin(), w.end(), rng);
  return Permutation(w);
}

}  // namespace

TEST_CASE("sigma_n tables") {
  CHECK(sigma_n(5).one_line() == std::vector<int>{6, 1, 7, 2, 8, 3, 9, 4, 10, 5});
  CHECK(sigma_n(1).one_line() == std::vector<int>{2, 1});
  CHECK(sigma_n(2).one_line() == std::vector<int>{3, 1, 4, 2});
  CHECK_THROWS_AS(sigma_n(0), std::invalid_argument);
}

TEST_CASE("sigma_d closed formula") {
  const DimensionVector dv(8, {2, 5, 7});
  CHECK(sigma_d(dv).one_line() ==
        std::vector<int>{1, 9, 10, 2, 3, 4, 11, 12, 13, 5, 6, 14, 15, 7, 8, 16});

  // complete d collapses to sigma_n
  for (int n = 1; n <= 6; ++n)
    CHECK(sigma_d(DimensionVector::complete(n)) == sigma_n(n));
  CHECK(sigma_d(DimensionVector(2, {1, 2})).one_line() == std::vector<int>{3, 1, 4, 2});
}

TEST_CASE("length") {
  for (int n = 1; n <= 8; ++n)
    CHECK(sigma_n(n).length() == n * (n + 1) / 2);
  CHECK(Permutation::identity(6).length() == 0);
  CHECK(Permutation({3, 1, 4, 2}).length() == 3);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation w = random_perm(8, rng);
    CHECK(w.length() == oracles::brute_length(w.one_line()));
  }
}

TEST_CASE("iota involution") {
  for (int n = 1; n <= 8; ++n)
    CHECK(iota_involution(sigma_n(n)) == sigma_n(n));
  CHECK(iota_involution(Permutation::identity(8)) == Permutation::identity(8));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation w = random_perm(10, rng);
    CHECK(iota_involution(iota_involution(w)) == w);
  }
  CHECK_THROWS_AS(iota_involution(Permutation({2, 3, 1})), std::invalid_argument);
}

TEST_CASE("iota is a group automorphism") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation u = random_perm(8, rng);
    const Permutation v = random_perm(8, rng);
    CHECK(iota_involution(compose(u, v)) ==
          compose(iota_involution(u), iota_involution(v)));
  }
}

TEST_CASE("compose and inverse") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Permutation u = random_perm(7, rng);
    CHECK(compose(u, inverse(u)) == Permutation::identity(7));
    CHECK(compose(Permutation::identity(7), u) == u);
  }
  // s2 . (s1 . s3) with the right factor acting first
  const Permutation s1 = Permutation::simple_transposition(4, 1);
  const Permutation s2 = Permutation::simple_transposition(4, 2);
  const Permutation s3 = Permutation::simple_transposition(4, 3);
  CHECK(compose(s2, compose(s1, s3)) == sigma_n(2));
  CHECK_THROWS_AS(compose(Permutation::identity(4), Permutation::identity(6)),
                  std::invalid_argument);
}

TEST_CASE("word_to_perm") {
  auto [prod, reduced] = word_to_perm({2, 1, 3}, 4);
  CHECK(prod == sigma_n(2));
  CHECK(reduced);

  auto [id_prod, id_reduced] = word_to_perm({}, 4);
  CHECK(id_prod == Permutation::identity(4));
  CHECK(id_reduced);

  auto [cancel, cancel_reduced] = word_to_perm({1, 1}, 4);
  CHECK(cancel == Permutation::identity(4));
  CHECK_FALSE(cancel_reduced);

  CHECK_THROWS_AS(word_to_perm({4}, 4), std::invalid_argument);
  CHECK_THROWS_AS(word_to_perm({0}, 4), std::invalid_argument);
}

TEST_CASE("dimension vector derived data") {
  const DimensionVector complete = DimensionVector::complete(3);
  CHECK(complete.descent_positions() == std::vector<int>{1, 3, 5});
  CHECK(complete.ascent_positions() == std::vector<int>{2, 4});
  CHECK(complete.run_lengths() == std::vector<int>{1, 2, 2, 1});

  const DimensionVector partial(8, {2, 5, 7});
  CHECK(partial.descent_positions() == std::vector<int>{3, 9, 13});
  CHECK(partial.run_lengths() == std::vector<int>{3, 6, 4, 3});
  int total = 0;
  for (int len : partial.run_lengths()) total += len;
  CHECK(total == 16);

  CHECK(DimensionVector::complete(3).type_c_symmetric());
  CHECK(DimensionVector(3, {2}).type_c_symmetric());
  CHECK_FALSE(DimensionVector(3, {1}).type_c_symmetric());
  CHECK_THROWS_AS(DimensionVector(3, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(DimensionVector(3, {4}), std::invalid_argument);
  CHECK_THROWS_AS(DimensionVector(3, {}), std::invalid_argument);
}

TEST_CASE("minimal representatives") {
  for (int n = 1; n <= 6; ++n)
    CHECK(is_minimal_rep(sigma_n(n), DimensionVector::complete(n)));
  CHECK(is_minimal_rep(Permutation::identity(4), DimensionVector::complete(2)));
  CHECK_FALSE(is_minimal_rep(Permutation({1, 3, 2, 4}), DimensionVector::complete(2)));
  CHECK(is_minimal_rep(sigma_d(DimensionVector(8, {2, 5, 7})), DimensionVector(8, {2, 5, 7})));
}

TEST_CASE("sigma_d is the coset minimum") {
  // over every element of sigma_n W_J: minimal length and Bruhat-smallest
  for (int n = 1; n <= 4; ++n) {
    std::vector<DimensionVector> dvs;
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> d;
      for (int i = 1; i <= n; ++i)
        if (mask & (1 << (i - 1))) d.push_back(i);
      dvs.emplace_back(n, d);
    }
    for (const auto& dv : dvs) {
      const Permutation rep = sigma_d(dv);
      CHECK(is_minimal_rep(rep, dv));
      bool found_rep = false;
      for (const auto& w : oracles::parabolic_subgroup(dv)) {
        const Permutation elem = compose(sigma_n(n), w);
        CHECK(rep.length() <= elem.length());
        if (elem == rep) found_rep = true;
      }
      CHECK(found_rep);
    }
  }
}
