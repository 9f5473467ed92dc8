#include "ck_algebra.hpp"

#include <set>

#include "error.hpp"

namespace ckcoh {

using Kind = Generator::Kind;

int b_selector(int a, int b, int l) {
  if (l == a) return -1;
  if (l == a + 1) return b == a + 1 ? 2 : 1;
  if (l == b) return 1;
  if (l == b + 1) return -1;
  return 0;
}

int b_selector_delta(int a, int b, int l) {
  auto d = [](int x, int y) { return x == y ? 1 : 0; };
  return d(a, l - 1) - d(b, l - 1) + d(b, l) - d(a, l);
}

namespace {

enum class Pattern { ab_ac, ab_bc, ac_bc };

// [P1, P2] for the ordered pattern; kinds are J or M.
GeneratorTerms pair_table(const OmegaVector& w, Kind k1, Kind k2, Pattern pat, int a, int b,
                          int c) {
  const bool jj = k1 == Kind::J && k2 == Kind::J;
  const bool mm = k1 == Kind::M && k2 == Kind::M;
  const bool jm = k1 == Kind::J && k2 == Kind::M;
  switch (pat) {
    case Pattern::ab_ac: {
      Rational w_ab = w.product(a, b);
      if (jj || mm) return {{Generator::J(b, c), w_ab}};
      if (jm) return {{Generator::M(b, c), w_ab}};
      return {{Generator::M(b, c), -w_ab}};
    }
    case Pattern::ab_bc:
      if (jj) return {{Generator::J(a, c), Rational(-1)}};
      if (mm) return {{Generator::J(a, c), Rational(1)}};
      return {{Generator::M(a, c), Rational(-1)}};
    case Pattern::ac_bc: {
      Rational w_bc = w.product(b, c);
      if (jj || mm) return {{Generator::J(a, b), w_bc}};
      if (jm) return {{Generator::M(a, b), -w_bc}};
      return {{Generator::M(a, b), w_bc}};
    }
  }
  return {};
}

GeneratorTerms negated(GeneratorTerms t) {
  for (auto& [g, c] : t) c = -c;
  return t;
}

GeneratorTerms pair_bracket(const OmegaVector& w, const Generator& x, const Generator& y) {
  if (x.a == y.a && x.b == y.b) {
    if (x.kind == y.kind) return {};
    Rational coef = -2 * w.product(x.a, x.b);
    if (x.kind == Kind::M) coef = -coef;
    GeneratorTerms out;
    for (int s = x.a + 1; s <= x.b; ++s) out.emplace_back(Generator::B(s), coef);
    return out;
  }
  if (x.a == y.a) {
    const bool x_first = x.b < y.b;
    const auto& f = x_first ? x : y;
    const auto& s = x_first ? y : x;
    auto t = pair_table(w, f.kind, s.kind, Pattern::ab_ac, x.a, f.b, s.b);
    return x_first ? t : negated(std::move(t));
  }
  if (x.b == y.b) {
    const bool x_first = x.a < y.a;
    const auto& f = x_first ? x : y;
    const auto& s = x_first ? y : x;
    auto t = pair_table(w, f.kind, s.kind, Pattern::ac_bc, f.a, s.a, x.b);
    return x_first ? t : negated(std::move(t));
  }
  if (x.b == y.a) return pair_table(w, x.kind, y.kind, Pattern::ab_bc, x.a, x.b, y.b);
  if (x.a == y.b) return negated(pair_table(w, y.kind, x.kind, Pattern::ab_bc, y.a, y.b, x.b));
  return {};
}

}  // namespace

GeneratorTerms ck_bracket(const OmegaVector& omega, const Generator& x, const Generator& y) {
  GeneratorTerms out;
  if (x == y || x.kind == Kind::I || y.kind == Kind::I) return out;
  if (x.kind == Kind::B && y.kind == Kind::B) return out;
  if (x.is_pair() && y.kind == Kind::B) {
    const int s = b_selector(x.a, x.b, y.l());
    if (s == 0) return out;
    if (x.kind == Kind::J)
      out.emplace_back(Generator::M(x.a, x.b), Rational(s));
    else
      out.emplace_back(Generator::J(x.a, x.b), Rational(-s));
    return out;
  }
  if (x.kind == Kind::B) return negated(ck_bracket(omega, y, x));
  out = pair_bracket(omega, x, y);
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

LieAlgebra build_ck(Family family, int n, const OmegaVector& omega) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "N must be positive");
  if (omega.n() != n)
    throw Error(ErrorKind::LengthMismatch, "omega has " + std::to_string(omega.n()) +
                                               " entries, expected N = " + std::to_string(n));
  GeneratorBasis basis(family, n);
  std::vector<LieAlgebra::Entry> entries;
  for (int i = 0; i < basis.dim(); ++i)
    for (int j = i + 1; j < basis.dim(); ++j)
      for (const auto& [gen, c] : ck_bracket(omega, basis[i], basis[j]))
        entries.push_back({i, j, basis.index_of(gen), c});
  return LieAlgebra(basis.dim(), entries, FamilyMeta{family, omega});
}

LieAlgebra build_su_omega(int n, const OmegaVector& omega) {
  return build_ck(Family::su, n, omega);
}

LieAlgebra build_u_omega(int n, const OmegaVector& omega) {
  return build_ck(Family::u, n, omega);
}

GeneratorBasis ck_basis(const LieAlgebra& g) {
  if (!g.meta())
    throw Error(ErrorKind::InvalidArgument, "algebra carries no CK family metadata");
  return GeneratorBasis(g.meta()->family, g.meta()->omega.n());
}

std::vector<ComplexMatrix> fundamental_matrices(int n, const OmegaVector& omega, Family family) {
  if (omega.n() != n) throw Error(ErrorKind::LengthMismatch, "omega length must equal N");
  GeneratorBasis basis(family, n);
  std::vector<ComplexMatrix> out;
  for (const auto& g : basis.generators()) {
    ComplexMatrix m(n + 1);
    switch (g.kind) {
      case Kind::J:
        m.re(g.a, g.b) = -omega.product(g.a, g.b);
        m.re(g.b, g.a) = 1;
        break;
      case Kind::M:
        m.im(g.a, g.b) = omega.product(g.a, g.b);
        m.im(g.b, g.a) = 1;
        break;
      case Kind::B:
        m.im(g.l() - 1, g.l() - 1) = 1;
        m.im(g.l(), g.l()) = -1;
        break;
      case Kind::I:
        for (int s = 0; s <= n; ++s) m.im(s, s) = 1;
        break;
    }
    out.push_back(std::move(m));
  }
  return out;
}

ComplexMatrix metric_matrix(const OmegaVector& omega) {
  std::vector<Rational> d;
  for (int s = 0; s <= omega.n(); ++s) d.push_back(omega.product(0, s));
  return ComplexMatrix::diagonal(d);
}

std::vector<Rational> cartan_G(int n, int a) {
  if (a < 1 || a > n)
    throw Error(ErrorKind::IndexOutOfRange, "G_a needs 1 <= a <= N");
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (int s = 1; s < a; ++s) c[s - 1] = Rational(s, a);
  c[a - 1] = 1;
  for (int s = a + 1; s <= n; ++s) c[s - 1] = Rational(n + 1 - s, n + 1 - a);
  for (auto& q : c) q.canonicalize();
  return c;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& inner) const {
  SignedPermutation out;
  for (std::size_t i = 0; i < inner.target.size(); ++i) {
    out.target.push_back(target[inner.target[i]]);
    out.sign.push_back(inner.sign[i] * sign[inner.target[i]]);
  }
  return out;
}

SignedPermutation polarity_map(Family family, int n) {
  GeneratorBasis basis(family, n);
  SignedPermutation p;
  for (const auto& g : basis.generators()) {
    switch (g.kind) {
      case Kind::J:
        p.target.push_back(basis.J(n - g.b, n - g.a));
        p.sign.push_back(-1);
        break;
      case Kind::M:
        p.target.push_back(basis.M(n - g.b, n - g.a));
        p.sign.push_back(-1);
        break;
      case Kind::B:
        p.target.push_back(basis.B(n + 1 - g.l()));
        p.sign.push_back(1);
        break;
      case Kind::I:
        p.target.push_back(basis.I());
        p.sign.push_back(1);
        break;
    }
  }
  return p;
}

LieAlgebra transport(const LieAlgebra& g, const SignedPermutation& phi) {
  if (static_cast<int>(phi.target.size()) != g.dim())
    throw Error(ErrorKind::LengthMismatch, "map size does not match algebra dimension");
  std::vector<LieAlgebra::Entry> entries;
  for (const auto& e : g.entries())
    entries.push_back({phi.target[e.i], phi.target[e.j], phi.target[e.k],
                       e.c * (phi.sign[e.i] * phi.sign[e.j] * phi.sign[e.k])});
  return LieAlgebra(g.dim(), entries);
}

bool is_automorphism(const LieAlgebra& g, const SignedPermutation& phi) {
  return transport(g, phi).same_constants(g);
}

SignedPermutation involution_automorphism(const LieAlgebra& g, const std::vector<int>& subset) {
  GeneratorBasis basis = ck_basis(g);
  std::set<int> s;
  for (int x : subset) {
    if (x < 0 || x > basis.n())
      throw Error(ErrorKind::IndexOutOfRange, "subset index outside 0..N");
    s.insert(x);
  }
  SignedPermutation p;
  for (int i = 0; i < basis.dim(); ++i) {
    const auto& gen = basis[i];
    p.target.push_back(i);
    int parity = gen.is_pair() ? static_cast<int>(s.count(gen.a) + s.count(gen.b)) : 0;
    p.sign.push_back(parity % 2 ? -1 : 1);
  }
  return p;
}

bool subalgebra_closure_check(const LieAlgebra& g, const std::vector<int>& generators) {
  std::set<int> in(generators.begin(), generators.end());
  for (int i : in)
    for (int j : in)
      if (i < j)
        for (const auto& t : g.upper(i, j))
          if (!in.count(t.k)) return false;
  return true;
}

bool subalgebra_closure_check(const LieAlgebra& g, const std::vector<DenseVector>& span) {
  IncrementalBasis basis(g.dim());
  for (const auto& v : span) basis.insert(to_sparse(v));
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = i + 1; j < span.size(); ++j)
      if (!basis.contains(to_sparse(g.bracket(span[i], span[j])))) return false;
  return true;
}

RepresentationReport check_representation(Family family, int n, const OmegaVector& omega) {
  const LieAlgebra g = build_ck(family, n, omega);
  const auto rho = fundamental_matrices(n, omega, family);
  const ComplexMatrix metric = metric_matrix(omega);
  RepresentationReport rep;
  for (int i = 0; i < g.dim(); ++i) {
    if (!(rho[i].conjugate_transpose() * metric + metric * rho[i]).is_zero()) ++rep.isometry_failures;
    for (int j = i + 1; j < g.dim(); ++j) {
      ComplexMatrix expected(n + 1);
      for (const auto& t : g.bracket(i, j)) expected = expected + rho[t.k].scaled(t.c);
      ++rep.pairs_checked;
      if (!(commutator(rho[i], rho[j]) == expected)) ++rep.commutator_mismatches;
    }
  }
  return rep;
}

}  // namespace ckcoh
