#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "degflag/degflag.hpp"
#include "oracles.hpp"

using namespace degflag;

TEST_CASE("projections") {
  const int n = 3, p = 3;
  const LinearMap pr1 = projection_map(1, n, p);
  std::vector<std::uint8_t> f1(4, 0), f2(4, 0);
  f1[0] = 1;
  f2[1] = 1;
  CHECK(pr1.apply(f1) == std::vector<std::uint8_t>(4, 0));
  CHECK(pr1.apply(f2) == f2);

  // idempotent
  for (int k = 1; k <= n + 1; ++k) {
    const LinearMap pr = projection_map(k, n, p);
    CHECK(pr.after(pr).matrix() == pr.matrix());
  }
  // single-factor range
  for (int i = 1; i <= n; ++i)
    CHECK(projection_range(i, i + 1, n, p).matrix() == projection_map(i, n, p).matrix());
  // pr_{1,3} kills f_1 and f_2
  const LinearMap pr13 = projection_range(1, 3, n, p);
  CHECK(pr13.apply(f1) == std::vector<std::uint8_t>(4, 0));
  CHECK(pr13.apply(f2) == std::vector<std::uint8_t>(4, 0));
  CHECK_THROWS_AS(projection_map(5, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(projection_range(2, 2, 3, 3), std::invalid_argument);
}

TEST_CASE("pi maps") {
  // basis-vector cases for n = 3, all i
  const int n = 3, p = 2;
  for (int i = 1; i <= n; ++i) {
    const LinearMap pi = pi_map(n, i, p);
    CHECK(pi.domain_dim() == n + i);
    CHECK(pi.codomain_dim() == n + 1);
    for (int k = 1; k <= n + i; ++k) {
      std::vector<std::uint8_t> ek(static_cast<std::size_t>(n + i), 0);
      ek[static_cast<std::size_t>(k - 1)] = 1;
      std::vector<std::uint8_t> expected(static_cast<std::size_t>(n + 1), 0);
      if (k >= i && k <= n + 1)
        expected[static_cast<std::size_t>(k - 1)] = 1;
      else if (k >= n + 2)
        expected[static_cast<std::size_t>(k - n - 2)] = 1;
      CHECK(pi.apply(ek) == expected);
    }
    CHECK(pi.kernel().dim() == i - 1);
  }
  // pi_1 is injective
  CHECK(pi_map(3, 1, 2).kernel() == Subspace::zero(2, 4));

  // pi_{i+1} restricted to U_{n+i} equals pr_i . pi_i, for n <= 4
  for (int nn = 2; nn <= 4; ++nn)
    for (int i = 1; i < nn; ++i) {
      const GFMatrix lhs = pi_map(nn, i + 1, 2).matrix();
      const GFMatrix rhs = projection_map(i, nn, 2).matrix().times(pi_map(nn, i, 2).matrix());
      for (int r = 0; r < nn + 1; ++r)
        for (int c = 0; c < nn + i; ++c) CHECK(lhs.at(r, c) == rhs.at(r, c));
    }
  CHECK_THROWS_AS(pi_map(3, 4, 2), std::invalid_argument);
}

TEST_CASE("zeta components and dimensions") {
  const DimensionVector dv = DimensionVector::complete(3);
  for (int p : {2, 3}) {
    for_each_degflag_point(dv, p, [&](const DegFlagPoint& pt) {
      const SchubertFlagPoint z = zeta(pt, dv);
      for (int i = 1; i <= 3; ++i)
        CHECK(z.spaces[static_cast<std::size_t>(i - 1)].dim() == 2 * i - 1);
      CHECK(yn_membership(z, dv));
    });
  }
}

TEST_CASE("n=1: zeta bijects the projective line onto Y_1") {
  const DimensionVector dv = DimensionVector::complete(1);
  const auto points = enumerate_degflag(dv, 2);
  CHECK(points.size() == 3);
  std::set<SchubertFlagPoint> image;
  for (const auto& pt : points) image.insert(zeta(pt, dv));
  const auto yn = enumerate_yn(dv, 2);
  CHECK(yn.size() == 3);
  CHECK(image == std::set<SchubertFlagPoint>(yn.begin(), yn.end()));
}

TEST_CASE("degflag enumeration counts") {
  CHECK(enumerate_degflag(DimensionVector::complete(2), 2).size() == 25);
  // direct filtered double loop over Gr_1 x Gr_2 of F_2^3
  long long brute = 0;
  for (const Subspace& v1 : grassmannian(1, 3, 2))
    for (const Subspace& v2 : grassmannian(2, 3, 2))
      if (v2.contains(LinearMap(projection_map(1, 2, 2)).image(v1))) ++brute;
  CHECK(brute == 25);

  CHECK(count_degflag(DimensionVector::complete(2), 2) == 25);
  CHECK(count_degflag(DimensionVector::complete(3), 2, 3) ==
        count_degflag(DimensionVector::complete(3), 2));
  CHECK_THROWS_AS(enumerate_degflag(DimensionVector::complete(5), 2), bound_error);
  CHECK_THROWS_AS(enumerate_degflag(DimensionVector::complete(4), 3), bound_error);
}

TEST_CASE("membership predicates agree pointwise") {
  // over every chain of SL_{2n}/P(F_2), Y_n membership is equivalent to the
  // rank conditions of sigma_d -- both directions, not just on Y_n
  for (int n = 2; n <= 3; ++n) {
    for (const auto& dims :
         n == 2 ? std::vector<std::vector<int>>{{1, 2}, {1}, {2}}
                : std::vector<std::vector<int>>{{1, 2, 3}, {1, 3}, {2}}) {
      const DimensionVector dv(n, dims);
      const Permutation sig = dv.is_complete() ? sigma_n(n) : sigma_d(dv);
      long long checked = 0;
      std::vector<Subspace> cur;
      std::function<void(int)> rec = [&](int level) {
        if (level == dv.count()) {
          const SchubertFlagPoint fl{cur};
          CHECK(yn_membership(fl, dv) == schubert_conditions(fl, sig, dv));
          ++checked;
          return;
        }
        const int dl = dv.dims()[static_cast<std::size_t>(level)];
        const Subspace lower = (level == 0) ? Subspace::zero(2, 2 * n) : cur.back();
        for_each_between(lower, Subspace::full(2, 2 * n), 2 * dl - 1, [&](const Subspace& w) {
          cur.push_back(w);
          rec(level + 1);
          cur.pop_back();
        });
      };
      rec(0);
      CHECK(checked > 0);
    }
  }

  // a chain violating the upper containment fails
  const DimensionVector dv1 = DimensionVector::complete(1);
  const SchubertFlagPoint bad{{Subspace::coordinate(2, 2, {2})}};
  CHECK(yn_membership(bad, dv1));  // n=1: U_{n+1} is everything
  const DimensionVector dv2 = DimensionVector::complete(2);
  const SchubertFlagPoint bad2{
      {Subspace::coordinate(2, 4, {4}), Subspace::coordinate(2, 4, {2, 3, 4})}};
  CHECK_FALSE(yn_membership(bad2, dv2));
  CHECK_FALSE(schubert_conditions(bad2, sigma_n(2), dv2));
}

TEST_CASE("coordinate flag lies in Y_n") {
  for (int n = 1; n <= 3; ++n) {
    const DimensionVector dv = DimensionVector::complete(n);
    SchubertFlagPoint fl;
    for (int i = 1; i <= n; ++i) {
      std::vector<int> coords;
      for (int c = 1; c <= 2 * i - 1; ++c) coords.push_back(c);
      fl.spaces.push_back(Subspace::coordinate(2, 2 * n, coords));
    }
    CHECK(yn_membership(fl, dv));
    CHECK(schubert_conditions(fl, sigma_n(n), dv));
  }
}

TEST_CASE("three independent enumerations of the same locus") {
  for (int n = 1; n <= 3; ++n)
    for (int p : {2, 3}) {
      const DimensionVector dv = DimensionVector::complete(n);
      const auto points = enumerate_degflag(dv, p);
      std::set<SchubertFlagPoint> image;
      for (const auto& pt : points) image.insert(zeta(pt, dv));
      CHECK(image.size() == points.size());  // injectivity
      const auto yn = enumerate_yn(dv, p);
      CHECK(image == std::set<SchubertFlagPoint>(yn.begin(), yn.end()));
      const auto locus = enumerate_schubert_points(sigma_n(n), dv, p);
      CHECK(image == std::set<SchubertFlagPoint>(locus.begin(), locus.end()));
    }
}

TEST_CASE("torus equivariance") {
  CHECK(torus_equivariance_check(DimensionVector::complete(2), 3));
  CHECK(torus_equivariance_check(DimensionVector::complete(2), 2));
  CHECK(torus_equivariance_check(DimensionVector(3, {1, 3}), 2));

  // coordinate collections map to coordinate chains; they are the fixed
  // points on both sides
  const DimensionVector dv = DimensionVector::complete(2);
  const int p = 3;
  std::set<DegFlagPoint> fixed;
  std::vector<TorusElement> torus;
  std::vector<int> digits{1, 1, 1, 1};
  while (true) {
    torus.emplace_back(p, digits);
    int i = 3;
    while (i >= 0 && digits[static_cast<std::size_t>(i)] == p - 1) {
      digits[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++digits[static_cast<std::size_t>(i)];
  }
  for_each_degflag_point(dv, p, [&](const DegFlagPoint& pt) {
    for (const auto& lam : torus)
      if (!(torus_act_flag(lam, pt, dv) == pt)) return;
    fixed.insert(pt);
  });
  std::set<DegFlagPoint> coords;
  for (const auto& collection : coordinate_collections(dv)) {
    DegFlagPoint pt;
    for (const auto& set : collection)
      pt.spaces.push_back(Subspace::coordinate(p, dv.n() + 1, set));
    coords.insert(pt);
  }
  CHECK(fixed == coords);
}

TEST_CASE("fixed point counts") {
  CHECK(fixed_points_count(DimensionVector::complete(1)) == 2);
  CHECK(fixed_points_count(DimensionVector::complete(2)) == 7);
  for (int n = 3; n <= 4; ++n)
    CHECK(fixed_points_count(DimensionVector::complete(n)) ==
          interval_poincare(sigma_n(n), DimensionVector::complete(n)).cardinality());
}

TEST_CASE("symplectic structure") {
  // m = 1: V is a symplectic plane and every line is lagrangian
  {
    const DimensionVector dv = DimensionVector::complete(1);
    const BilinearForm bv = symplectic_form_V(1, 3);
    CHECK(bv.nondegenerate());
    CHECK(bv.alternating());
    const auto points = enumerate_degflag(dv, 3);
    for (const auto& pt : points) CHECK(iota_flag(pt, dv, bv) == pt);
  }

  // m = 2, p = 3: the full battery
  const int m = 2, p = 3, n = 3;
  const DimensionVector dv = DimensionVector::complete(n);
  const BilinearForm bv = symplectic_form_V(m, p);
  const BilinearForm bw = BilinearForm::symplectic_E(n, p);
  CHECK(bv.nondegenerate());
  CHECK(bv.skew_symmetric());
  CHECK(bv.alternating());

  CHECK(metric_preserving_check(m, p));
  CHECK(metric_preserving_check(m, 5));
  CHECK(zeta_perp_check(m, p));
  CHECK_THROWS_AS(metric_preserving_check(2, 2), std::invalid_argument);

  long long fixed = 0;
  for_each_degflag_point(dv, p, [&](const DegFlagPoint& pt) {
    const DegFlagPoint ipt = iota_flag(pt, dv, bv);
    CHECK(iota_flag(ipt, dv, bv) == pt);
    CHECK(zeta(ipt, dv) == iota_chain(zeta(pt, dv), dv, bw));
    if (ipt == pt) ++fixed;
  });
  CHECK(static_cast<long long>(symplectic_fixed(dv, p).size()) == fixed);

  long long fixed_yn = 0;
  for_each_yn_point(dv, p, [&](const SchubertFlagPoint& fl) {
    if (iota_chain(fl, dv, bw) == fl) ++fixed_yn;
  });
  CHECK(fixed == fixed_yn);

  CHECK(iota_fixed_coordinate_count(dv) == iota_fixed_count(sigma_n(n), dv));

  // partial symmetric case d = (2) at n = 3
  const DimensionVector mid(3, {2});
  const auto mid_fixed = symplectic_fixed(mid, p);
  for (const auto& pt : mid_fixed) CHECK(iota_flag(pt, mid, bv) == pt);
  CHECK(iota_fixed_coordinate_count(mid) == iota_fixed_count(sigma_d(mid), mid));

  CHECK_THROWS_AS(iota_flag(DegFlagPoint{}, DimensionVector::complete(2), bv),
                  std::invalid_argument);
}
