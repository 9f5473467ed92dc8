#include <doctest.h>

#include "error.hpp"
#include "serialize.hpp"
#include "support.hpp"

using namespace ckcoh;
using testing_support::Rng;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("algebra text format") {
    const auto g = build_su_omega(1, OmegaVector::parse("1/2"));
    const std::string text = algebra_to_text(g);
    CHECK(text.rfind("3 1 su 1/2\n", 0) == 0);
    CHECK(text.find("0 1 2 -1/1\n") != std::string::npos);
    const auto back = algebra_from_text(text);
    CHECK(back.same_constants(g));
    CHECK(back.meta() == g.meta());
  }

  TEST_CASE("comments and blank lines are ignored") {
    const auto g = algebra_from_text("# heisenberg\n\n3 0 none\n0 1 2 1\n# jacobi: ok\n");
    CHECK(g.same_constants(testing_support::heisenberg()));
    CHECK_FALSE(g.meta().has_value());
  }

  TEST_CASE("algebra round trips in both formats") {
    Rng rng(77);
    for (int t = 0; t < 20; ++t) {
      const auto g = testing_support::random_algebra(rng);
      CHECK(algebra_from_text(algebra_to_text(g)).same_constants(g));
      CHECK(algebra_from_json(algebra_to_json(g)).same_constants(g));
      CHECK(parse_algebra(algebra_to_json(g).dump()).same_constants(g));
      CHECK(parse_algebra(algebra_to_text(g)).same_constants(g));
    }
    const auto u = build_u_omega(3, OmegaVector::parse("0,-7/3,+"));
    const auto j = algebra_from_json(algebra_to_json(u));
    CHECK(j.same_constants(u));
    CHECK(j.meta() == u.meta());
  }

  TEST_CASE("text and json carry identical numbers") {
    const auto g = build_u_omega(2, OmegaVector::parse("2/3,-1"));
    CHECK(algebra_from_text(algebra_to_text(g)).entries() ==
          algebra_from_json(algebra_to_json(g)).entries());
  }

  TEST_CASE("malformed algebra input") {
    CHECK(kind_of([] { algebra_from_text(""); }) == ErrorKind::Parse);
    CHECK(kind_of([] { algebra_from_text("3 0 none\n0 1 2\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { algebra_from_text("3 0 none\n0 1 x 1\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { algebra_from_text("3 2 su 1\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { algebra_from_text("3 0 none\n0 1 5 1\n"); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { parse_algebra("{\"dim\": 3}"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_algebra("{not json"); }) == ErrorKind::Parse);
  }

  TEST_CASE("cochain round trips") {
    Rng rng(78);
    TwoCochain xi(6);
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) xi.set(i, j, rng.rational(1));
    CHECK(cochain_from_text(cochain_to_text(xi)) == xi);
    CHECK(cochain_from_json(cochain_to_json(xi)) == xi);
    CHECK(kind_of([] { cochain_from_text("3\n0 0 1\n"); }) == ErrorKind::IndexOutOfRange);
  }

  TEST_CASE("matrix round trips") {
    Rng rng(79);
    std::vector<DenseVector> d(5, DenseVector(7));
    for (auto& row : d)
      for (auto& x : row) x = rng.rational(2);
    const auto m = SparseMatrix::from_dense(d, 7);
    CHECK(matrix_from_text(matrix_to_text(m)) == m);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK(matrix_from_text("2 2\n") == SparseMatrix(2, 2));
    CHECK(kind_of([] { matrix_from_text("2 2\n2 0 1\n"); }) == ErrorKind::Parse);
  }

  TEST_CASE("basic coefficients json") {
    BasicCoefficients c{.eta = {{{0, 2}, Rational(1, 2)}}, .alpha = {{1, 3}}, .beta = {{{1, 3}, -1}}};
    const auto j = coefficients_to_json(c);
    CHECK(j.dump() == R"({"eta":{"0,2":"1/2"},"alpha":{"1":"3"},"beta":{"1,3":"-1"}})");
    CHECK(coefficients_from_json(j) == c);
    CHECK(coefficients_from_json(Json::parse(R"({"alpha":{"2":"0"}})")) == BasicCoefficients{});
    CHECK(kind_of([] { coefficients_from_json(Json::parse(R"({"delta":{}})")); }) == ErrorKind::Parse);
    CHECK(kind_of([] { coefficients_from_json(Json::parse(R"({"beta":{"12":"1"}})")); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { coefficients_from_json(Json::parse("[1]")); }) == ErrorKind::Parse);
  }

  TEST_CASE("reports are deterministic") {
    const auto w = OmegaVector::parse("0,+,0");
    CHECK(classification_to_json(classify(Family::u, 3, w)).dump() ==
          classification_to_json(classify(Family::u, 3, w)).dump());
    const auto r = theorem_to_json(verify_theorem(Family::su, 2, OmegaVector::parse("0,0")));
    CHECK(r["dim_H2"] == 3);
    CHECK(r["pass"] == true);
    const auto t = table_to_json(extension_table(Family::su, 1));
    CHECK(t.size() == 3);
    CHECK(t[2]["labels"][0] == "α_1");
    const auto k = contraction_to_json(contract(Family::su, OmegaVector::parse("+,+"), 1));
    CHECK(k["omega_after"] == Json::array({"0/1", "1/1"}));
  }
}
