#include <doctest.h>

#include "cohomology.hpp"
#include "error.hpp"
#include "support.hpp"

using namespace ckcoh;
using testing_support::Rng;

namespace {

struct Frozen {
  const char* family;
  const char* omega;
  int z2, b2, h2;
};

// From tests/oracle/sympy_oracle.py.
constexpr Frozen kFrozenCk[] = {
    {"su", "1", 3, 3, 0},        {"su", "0", 3, 2, 1},       {"su", "-1", 3, 3, 0},
    {"u", "0", 4, 2, 2},         {"u", "1", 3, 3, 0},        {"su", "1,1", 8, 8, 0},
    {"su", "1,-1", 8, 8, 0},     {"su", "0,1", 8, 7, 1},     {"su", "1,0", 8, 7, 1},
    {"su", "0,0", 9, 6, 3},      {"su", "0,-1", 8, 7, 1},    {"u", "0,0", 11, 6, 5},
    {"u", "1,0", 9, 7, 2},       {"su", "2,-1/3", 8, 8, 0},  {"su", "0,5/2", 8, 7, 1},
};

TwoCochain random_cochain(Rng& rng, int dim) {
  TwoCochain xi(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) xi.set(i, j, rng.rational(2));
  return xi;
}

TwoCochain random_cocycle(Rng& rng, const CohomologyResult& r, int dim) {
  DenseVector v(pair_count(dim));
  for (const auto& z : r.cocycle_basis) {
    const Rational c = rng.rational(1);
    const auto d = z.to_dense();
    for (std::size_t t = 0; t < v.size(); ++t) v[t] += c * d[t];
  }
  return TwoCochain::from_dense(dim, v);
}

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("Cayley-Klein dimensions match the independent oracle") {
    for (const auto& f : kFrozenCk) {
      CAPTURE(f.family);
      CAPTURE(f.omega);
      const auto w = OmegaVector::parse(f.omega);
      const auto r = h2(build_ck(parse_family(f.family), w.n(), w));
      CHECK(r.dim_Z2 == f.z2);
      CHECK(r.dim_B2 == f.b2);
      CHECK(r.dim_H2 == f.h2);
    }
  }

  TEST_CASE("generic algebras match the independent oracle") {
    using testing_support::direct_sum;
    struct Case {
      LieAlgebra g;
      int z2, b2, h2;
    };
    const std::vector<Case> cases{
        {testing_support::heisenberg(), 3, 1, 2},
        {testing_support::sl2(), 3, 3, 0},
        {LieAlgebra(2, {{0, 1, 1, 1}}), 1, 1, 0},
        {LieAlgebra::abelian(3), 3, 0, 3},
        {direct_sum(testing_support::sl2(), LieAlgebra::abelian(1)), 3, 3, 0},
        {LieAlgebra(5, {{0, 1, 4, 1}, {2, 3, 4, 1}}), 6, 1, 5},
        {LieAlgebra(4, {{0, 1, 2, 1}, {0, 2, 3, 1}}), 4, 2, 2},
    };
    for (const auto& c : cases) {
      const auto r = h2(c.g);
      CHECK(r.dim_Z2 == c.z2);
      CHECK(r.dim_B2 == c.b2);
      CHECK(r.dim_H2 == c.h2);
    }
  }

  TEST_CASE("Heisenberg representatives") {
    const auto r = h2(testing_support::heisenberg());
    REQUIRE(r.representatives.size() == 2);
    // Reduced against delta(mu) = mu_2 xi(0,1): what is left lives on (0,2), (1,2).
    for (const auto& rep : r.representatives) CHECK(rep(0, 1) == 0);
  }

  TEST_CASE("abelian algebras have no coboundaries") {
    for (int d = 0; d <= 6; ++d) {
      const auto r = h2(LieAlgebra::abelian(d));
      CHECK(r.dim_Z2 == d * (d - 1) / 2);
      CHECK(r.dim_B2 == 0);
    }
  }

  TEST_CASE("cocycle system rejects algebras violating Jacobi") {
    LieAlgebra bad(3, {{0, 1, 1, 1}, {0, 2, 2, 1}, {1, 2, 0, 1}});
    CHECK_THROWS_AS(cocycle_system(bad), Error);
    try {
      h2(bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidAlgebra);
    }
  }

  TEST_CASE("is_coboundary rejects non-cocycles") {
    const auto g = testing_support::sl2();
    TwoCochain xi(4);
    CHECK_THROWS_AS(is_coboundary(g, xi), Error);
    // On sl2 every antisymmetric form is a cocycle; use a 4-dim algebra.
    const auto h = LieAlgebra(4, {{0, 1, 2, 1}, {0, 2, 3, 1}});
    TwoCochain bad(4);
    bad.set(2, 3, 1);
    REQUIRE_FALSE(is_cocycle(h, bad));
    try {
      is_coboundary(h, bad);
      FAIL("expected NotCocycle");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotCocycle);
    }
  }

  TEST_CASE("cochain accessors") {
    TwoCochain xi(3);
    xi.set(2, 0, 5);
    CHECK(xi(0, 2) == -5);
    CHECK(xi(2, 0) == 5);
    CHECK(xi(1, 1) == 0);
    CHECK_THROWS_AS(xi.set(1, 1, 1), Error);
    CHECK_THROWS_AS(xi(0, 3), Error);
    CHECK((xi - xi).is_zero());
  }

  TEST_CASE("every coboundary is a cocycle") {
    Rng rng(101);
    for (int t = 0; t < 30; ++t) {
      const auto g = testing_support::random_algebra(rng);
      OneCochain mu{DenseVector(g.dim())};
      for (auto& x : mu.mu) x = rng.rational(1);
      CHECK(is_cocycle(g, coboundary(g, mu)));
      const auto back = is_coboundary(g, coboundary(g, mu));
      REQUIRE(back.has_value());
      CHECK(coboundary(g, *back) == coboundary(g, mu));
    }
  }

  TEST_CASE("representatives are independent modulo coboundaries") {
    Rng rng(202);
    for (int t = 0; t < 25; ++t) {
      const auto g = testing_support::random_algebra(rng);
      const auto r = h2(g);
      REQUIRE(static_cast<int>(r.representatives.size()) == r.dim_H2);
      REQUIRE(static_cast<int>(r.cocycle_basis.size()) == r.dim_Z2);
      IncrementalBasis span(pair_count(g.dim()));
      const auto delta = coboundary_matrix(g);
      for (const auto& col : delta.transpose().to_dense()) span.insert(to_sparse(col));
      CHECK(span.rank() == r.dim_B2);
      for (const auto& rep : r.representatives) {
        CHECK(is_cocycle(g, rep));
        CHECK_FALSE(is_coboundary(g, rep).has_value());
        CHECK(span.insert(rep.entries()));
      }
      // Together with the coboundaries they span every cocycle.
      for (const auto& z : r.cocycle_basis) CHECK(span.contains(z.entries()));
    }
  }

  TEST_CASE("dimension is invariant under relabeling and change of basis") {
    Rng rng(303);
    for (int t = 0; t < 25; ++t) {
      const auto g = testing_support::random_algebra(rng);
      const auto r = h2(g);
      const auto p = h2(permute_basis(g, rng.permutation(g.dim())));
      const auto c = h2(change_basis(g, rng.invertible(g.dim())));
      CHECK(p.dim_Z2 == r.dim_Z2);
      CHECK(p.dim_H2 == r.dim_H2);
      CHECK(c.dim_Z2 == r.dim_Z2);
      CHECK(c.dim_H2 == r.dim_H2);
    }
    for (int n = 1; n <= 3; ++n) {
      const auto w = rng.sign_vector(n);
      const auto g = build_u_omega(n, w);
      CHECK(h2(permute_basis(g, rng.permutation(g.dim()))).dim_H2 == h2(g).dim_H2);
    }
  }

  TEST_CASE("central extension satisfies Jacobi exactly when the cochain is a cocycle") {
    Rng rng(404);
    for (int t = 0; t < 25; ++t) {
      const auto g = testing_support::random_algebra(rng);
      const auto r = h2(g);
      const auto z = random_cocycle(rng, r, g.dim());
      const auto ext = central_extension(g, z);
      CHECK(ext.dim() == g.dim() + 1);
      CHECK(jacobi_residual(ext) == 0);
      const auto xi = random_cochain(rng, g.dim());
      CHECK((jacobi_residual(central_extension(g, xi)) == 0) == is_cocycle(g, xi));
      for (int i = 0; i < g.dim(); ++i) CHECK(ext.bracket(i, g.dim()).empty());
    }
  }

  TEST_CASE("dense and sparse paths give identical results") {
    Rng rng(505);
    for (int t = 0; t < 15; ++t) {
      const auto g = testing_support::random_algebra(rng);
      const auto d = h2(g, EliminationPath::dense);
      const auto s = h2(g, EliminationPath::sparse);
      CHECK(d.dim_Z2 == s.dim_Z2);
      CHECK(d.dim_B2 == s.dim_B2);
      CHECK(d.representatives == s.representatives);
    }
  }

  TEST_CASE("agreement with the dense oracle on random algebras") {
    Rng rng(606);
    for (int t = 0; t < 20; ++t) {
      std::string kind;
      const auto g = testing_support::random_algebra(rng, &kind);
      CAPTURE(kind);
      const auto o = oracle::second_cohomology(testing_support::to_tensor(g));
      const auto r = h2(g);
      CHECK(r.dim_Z2 == o.z2);
      CHECK(r.dim_B2 == o.b2);
    }
  }
}
