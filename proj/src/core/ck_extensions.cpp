#include "ck_extensions.hpp"

#include <algorithm>

#include "error.hpp"

namespace ckcoh {

namespace {

template <class Map>
void erase_zeros(Map& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
}

template <class Map, class Key>
Rational get_or_zero(const Map& m, const Key& key) {
  auto it = m.find(key);
  return it == m.end() ? Rational(0) : it->second;
}

std::string two_index(int k, int l) {
  if (k < 10 && l < 10) return std::to_string(k) + std::to_string(l);
  return std::to_string(k) + "," + std::to_string(l);
}

// sum_{s=a+1}^{b} omega_{a,s-1} omega_{s,b} alpha_s
Rational alpha_chain(const OmegaVector& w, const std::map<int, Rational>& alpha, int a, int b) {
  Rational sum(0);
  for (int s = a + 1; s <= b; ++s) {
    Rational al = get_or_zero(alpha, s);
    if (al == 0) continue;
    sum += w.product(a, s - 1) * w.product(s, b) * al;
  }
  return sum;
}

}  // namespace

void BasicCoefficients::drop_zeros() {
  erase_zeros(eta);
  erase_zeros(tau);
  erase_zeros(alpha);
  erase_zeros(beta);
  erase_zeros(gamma);
}

std::string alpha_label(int k) { return "\xCE\xB1_" + std::to_string(k); }
std::string beta_label(int k, int l) { return "\xCE\xB2_" + two_index(k, l); }
std::string gamma_label(int k) { return "\xCE\xB3_" + std::to_string(k); }

std::vector<std::string> ExtensionClassification::labels() const {
  std::vector<std::string> out;
  for (int k : type2_nontrivial) out.push_back(alpha_label(k));
  for (auto [k, l] : type3_beta_allowed) out.push_back(beta_label(k, l));
  for (int k : type3_gamma_allowed) out.push_back(gamma_label(k));
  return out;
}

int dim_h2_formula(Family family, const OmegaVector& omega) {
  const int n = omega.zero_count();
  return family == Family::su ? n * (n + 1) / 2 : n * (n + 3) / 2;
}

ExtensionClassification classify(Family family, int n, const OmegaVector& omega) {
  if (omega.n() != n) throw Error(ErrorKind::LengthMismatch, "omega length must equal N");
  ExtensionClassification c{family, omega};
  c.n_zero = omega.zero_count();
  for (int k = 1; k <= n; ++k) {
    if (omega.is_zero(k)) {
      c.type2_nontrivial.push_back(k);
      if (family == Family::u) c.type3_gamma_allowed.push_back(k);
    } else {
      c.type2_trivial.push_back(k);
    }
  }
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l)
      if (omega.is_zero(k) && omega.is_zero(l)) c.type3_beta_allowed.emplace_back(k, l);
  c.dim_h2_formula = dim_h2_formula(family, omega);
  return c;
}

void check_constraints(Family family, const OmegaVector& omega, const BasicCoefficients& c) {
  const int n = omega.n();
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::ConstraintViolation, msg); };
  for (const auto* m : {&c.eta, &c.tau})
    for (const auto& [ab, v] : *m)
      if (ab.first < 0 || ab.first >= ab.second || ab.second > n)
        fail("Type I index (" + std::to_string(ab.first) + "," + std::to_string(ab.second) +
             ") out of range");
  for (const auto& [k, v] : c.alpha)
    if (k < 1 || k > n) fail("alpha index " + std::to_string(k) + " out of range");
  for (const auto& [kl, v] : c.beta) {
    auto [k, l] = kl;
    if (k < 1 || k >= l || l > n)
      fail("beta index (" + std::to_string(k) + "," + std::to_string(l) + ") out of range");
    if (v != 0 && (!omega.is_zero(k) || !omega.is_zero(l)))
      fail("beta_" + two_index(k, l) + " != 0 requires omega_" + std::to_string(k) +
           " = omega_" + std::to_string(l) + " = 0");
  }
  if (family == Family::su && !c.gamma.empty())
    for (const auto& [k, v] : c.gamma)
      if (v != 0) fail("gamma coefficients only exist for the u family");
  for (const auto& [k, v] : c.gamma) {
    if (k < 1 || k > n) fail("gamma index " + std::to_string(k) + " out of range");
    if (v != 0 && !omega.is_zero(k))
      fail("gamma_" + std::to_string(k) + " != 0 requires omega_" + std::to_string(k) + " = 0");
  }
}

TwoCochain cocycle_from_basic(Family family, int n, const OmegaVector& omega,
                              const BasicCoefficients& c) {
  check_constraints(family, omega, c);
  const LieAlgebra g = build_ck(family, n, omega);
  const GeneratorBasis basis(family, n);

  // Type I terms are the coboundary of mu(J_ab) = eta_ab, mu(M_ab) = tau_ab.
  OneCochain mu{DenseVector(static_cast<std::size_t>(basis.dim()))};
  for (const auto& [ab, v] : c.eta) mu.mu[basis.J(ab.first, ab.second)] = v;
  for (const auto& [ab, v] : c.tau) mu.mu[basis.M(ab.first, ab.second)] = v;
  TwoCochain xi = coboundary(g, mu);

  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      Rational v = alpha_chain(omega, c.alpha, a, b);
      if (v != 0) {
        const int i = basis.J(a, b), j = basis.M(a, b);
        xi.set(i, j, xi(i, j) + v);
      }
    }
  for (const auto& [kl, v] : c.beta) xi.set(basis.B(kl.first), basis.B(kl.second), v);
  for (const auto& [k, v] : c.gamma) xi.set(basis.B(k), basis.I(), v);
  return xi;
}

LieAlgebra build_extended(Family family, int n, const OmegaVector& omega,
                          const BasicCoefficients& c) {
  const TwoCochain xi = cocycle_from_basic(family, n, omega, c);
  const LieAlgebra ext = central_extension(build_ck(family, n, omega), xi);
  return LieAlgebra(ext.dim(), ext.entries(), FamilyMeta{family, omega});
}

bool RelationReport::ok() const { return violations() == 0; }

int RelationReport::violations() const {
  int v = 0;
  for (const auto& c : checks) v += c.violations;
  return v;
}

RelationReport check_relations(const LieAlgebra& g, const TwoCochain& xi,
                               const BasicCoefficients& c) {
  const GeneratorBasis basis = ck_basis(g);
  const OmegaVector& w = g.meta()->omega;
  const int n = basis.n();
  auto eta = [&](int a, int b) { return get_or_zero(c.eta, std::pair{a, b}); };
  auto tau = [&](int a, int b) { return get_or_zero(c.tau, std::pair{a, b}); };
  auto J = [&](int a, int b) { return basis.J(a, b); };
  auto M = [&](int a, int b) { return basis.M(a, b); };

  RelationReport report;
  auto check = [&](RelationCheck& rc, const Rational& actual, const Rational& expected) {
    ++rc.checked;
    if (actual != expected) ++rc.violations;
  };

  RelationCheck four{"four-index vanishing"};
  RelationCheck middle{"middle pattern (ab,bc)"};
  RelationCheck first{"first pattern (ab,ac)"};
  RelationCheck third{"third pattern (ac,bc)"};
  RelationCheck bcol{"B-column collapse"};
  RelationCheck recursion{"alpha recursion"};
  RelationCheck bconstraint{"beta constraint"};
  RelationCheck ucentral{"u-family I relations"};

  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int d = 0; d <= n; ++d)
        for (int e = d + 1; e <= n; ++e) {
          if (a == d || a == e || b == d || b == e) continue;
          if (std::pair{a, b} > std::pair{d, e}) continue;
          check(four, xi(J(a, b), J(d, e)), 0);
          check(four, xi(M(a, b), M(d, e)), 0);
          check(four, xi(J(a, b), M(d, e)), 0);
          check(four, xi(M(a, b), J(d, e)), 0);
        }

  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int cc = b + 1; cc <= n; ++cc) {
        check(middle, xi(J(a, b), J(b, cc)), -eta(a, cc));
        check(middle, xi(M(a, b), M(b, cc)), eta(a, cc));
        check(middle, xi(J(a, b), M(b, cc)), -tau(a, cc));
        check(middle, xi(M(a, b), J(b, cc)), -tau(a, cc));

        const Rational w_ab = w.product(a, b);
        check(first, xi(J(a, b), J(a, cc)), w_ab * eta(b, cc));
        check(first, xi(M(a, b), M(a, cc)), w_ab * eta(b, cc));
        check(first, xi(J(a, b), M(a, cc)), w_ab * tau(b, cc));
        check(first, xi(M(a, b), J(a, cc)), -w_ab * tau(b, cc));

        const Rational w_bc = w.product(b, cc);
        check(third, xi(J(a, cc), J(b, cc)), w_bc * eta(a, b));
        check(third, xi(M(a, cc), M(b, cc)), w_bc * eta(a, b));
        check(third, xi(J(a, cc), M(b, cc)), -w_bc * tau(a, b));
        check(third, xi(M(a, cc), J(b, cc)), w_bc * tau(a, b));
      }

  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      for (int l = 1; l <= n; ++l) {
        const int s = b_selector(a, b, l);
        check(bcol, xi(J(a, b), basis.B(l)), s * tau(a, b));
        check(bcol, xi(M(a, b), basis.B(l)), -s * eta(a, b));
      }
      check(recursion, xi(J(a, b), M(a, b)), alpha_chain(w, c.alpha, a, b));
    }

  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      const Rational v = xi(basis.B(k), basis.B(l));
      check(bconstraint, v, get_or_zero(c.beta, std::pair{k, l}));
      check(bconstraint, w(k) * v, 0);
      check(bconstraint, w(l) * v, 0);
    }

  if (basis.family() == Family::u) {
    const int I = basis.I();
    for (int a = 0; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        check(ucentral, xi(J(a, b), I), 0);
        check(ucentral, xi(M(a, b), I), 0);
      }
    for (int k = 1; k <= n; ++k) {
      const Rational v = xi(basis.B(k), I);
      check(ucentral, v, get_or_zero(c.gamma, k));
      check(ucentral, w(k) * v, 0);
    }
    report.checks = {four, middle, first, third, bcol, recursion, bconstraint, ucentral};
  } else {
    report.checks = {four, middle, first, third, bcol, recursion, bconstraint};
  }
  return report;
}

BasicCoefficients extract_basic(const LieAlgebra& g, const TwoCochain& xi) {
  const GeneratorBasis basis = ck_basis(g);
  if (!is_cocycle(g, xi))
    throw Error(ErrorKind::NotCocycle, "cochain does not satisfy the two-cocycle condition");
  const int n = basis.n();
  BasicCoefficients c;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (b >= a + 2) {
        c.eta[{a, b}] = -xi(basis.J(a, a + 1), basis.J(a + 1, b));
        c.tau[{a, b}] = -xi(basis.J(a, a + 1), basis.M(a + 1, b));
      } else {
        // [J_{a,a+1}, B_{a+1}] = 2 M_{a,a+1}, [M_{a,a+1}, B_{a+1}] = -2 J_{a,a+1}
        c.eta[{a, b}] = xi(basis.M(a, b), basis.B(b)) / -2;
        c.tau[{a, b}] = xi(basis.J(a, b), basis.B(b)) / 2;
      }
    }
  for (int k = 1; k <= n; ++k) c.alpha[k] = xi(basis.J(k - 1, k), basis.M(k - 1, k));
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) c.beta[{k, l}] = xi(basis.B(k), basis.B(l));
  if (basis.family() == Family::u)
    for (int k = 1; k <= n; ++k) c.gamma[k] = xi(basis.B(k), basis.I());
  c.drop_zeros();

  const RelationReport report = check_relations(g, xi, c);
  if (!report.ok()) {
    std::string msg = "cocycle violates derived relations:";
    for (const auto& rc : report.checks)
      if (rc.violations) msg += " " + rc.name + " (" + std::to_string(rc.violations) + ")";
    throw Error(ErrorKind::RelationMismatch, msg);
  }
  return c;
}

OneCochain trivializing_cochain(Family family, const OmegaVector& omega,
                                const std::map<int, Rational>& alpha) {
  const GeneratorBasis basis(family, omega.n());
  OneCochain mu{DenseVector(static_cast<std::size_t>(basis.dim()))};
  for (const auto& [s, a] : alpha) {
    if (a == 0) continue;
    if (omega(s) == 0)
      throw Error(ErrorKind::ConstraintViolation,
                  "alpha_" + std::to_string(s) + " sits on omega_" + std::to_string(s) +
                      " = 0: the extension is non-trivial");
    mu.mu[basis.B(s)] = -a / (2 * omega(s));
  }
  return mu;
}

ContractionReport contract(Family family, const OmegaVector& omega, int k) {
  ContractionReport r{family, omega, omega.with_zero(k), k};
  r.dim_before = dim_h2_formula(family, omega);
  r.dim_after = dim_h2_formula(family, r.after);
  r.changed = !omega.is_zero(k);
  if (r.changed) {
    r.alpha_became_nontrivial.push_back(k);
    for (int l = 1; l <= omega.n(); ++l)
      if (l != k && omega.is_zero(l)) r.beta_newly_allowed.emplace_back(std::min(k, l), std::max(k, l));
    if (family == Family::u) r.gamma_newly_allowed.push_back(k);
  }
  return r;
}

TheoremReport verify_theorem(Family family, int n, const OmegaVector& omega) {
  TheoremReport rep{family, n, omega};
  const LieAlgebra g = build_ck(family, n, omega);
  const CohomologyResult res = h2(g);
  rep.dim_Z2 = res.dim_Z2;
  rep.dim_B2 = res.dim_B2;
  rep.dim_H2 = res.dim_H2;
  rep.formula = dim_h2_formula(family, omega);
  rep.match = rep.dim_H2 == rep.formula;

  const int cols = pair_count(g.dim());
  IncrementalBasis coboundaries(cols);
  const SparseMatrix images = coboundary_matrix(g).transpose();
  for (int k = 0; k < g.dim(); ++k) coboundaries.insert(images.row(k));
  const SparseMatrix system = cocycle_system(g);
  auto is_cocycle_vec = [&](const TwoCochain& xi) {
    auto r = system.multiply(xi.to_dense());
    return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; });
  };

  const ExtensionClassification cls = classify(family, n, omega);
  std::vector<BasicCoefficients> nontrivial;
  for (int k : cls.type2_nontrivial) nontrivial.push_back(BasicCoefficients{.alpha = {{k, 1}}});
  for (auto kl : cls.type3_beta_allowed) nontrivial.push_back(BasicCoefficients{.beta = {{kl, 1}}});
  for (int k : cls.type3_gamma_allowed) nontrivial.push_back(BasicCoefficients{.gamma = {{k, 1}}});

  rep.nontrivial_ok = static_cast<int>(nontrivial.size()) == rep.dim_H2;
  IncrementalBasis extended = coboundaries;
  for (const auto& c : nontrivial) {
    const TwoCochain xi = cocycle_from_basic(family, n, omega, c);
    if (!is_cocycle_vec(xi) || !extended.insert(xi.entries())) rep.nontrivial_ok = false;
  }

  rep.trivial_ok = true;
  std::vector<BasicCoefficients> trivial;
  for (int k : cls.type2_trivial) trivial.push_back(BasicCoefficients{.alpha = {{k, 1}}});
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      trivial.push_back(BasicCoefficients{.eta = {{{a, b}, 1}}});
      trivial.push_back(BasicCoefficients{.tau = {{{a, b}, 1}}});
    }
  for (const auto& c : trivial) {
    const TwoCochain xi = cocycle_from_basic(family, n, omega, c);
    if (!is_cocycle_vec(xi) || !coboundaries.contains(xi.entries())) rep.trivial_ok = false;
  }
  return rep;
}

namespace {

// Conventional N=3 listing: rows sharing a real form stay together.
constexpr const char* kReferenceOrder3[] = {
    "+,+,+", "-,+,+", "-,-,+", "+,+,-", "+,-,-", "+,-,+", "-,+,-", "-,-,-",
    "0,+,+", "+,+,0", "0,-,+", "0,+,-", "0,-,-", "+,-,0", "-,+,0", "-,-,0",
    "+,0,+", "+,0,-", "-,0,+", "-,0,-",
    "0,0,+", "+,0,0", "0,0,-", "-,0,0", "0,+,0", "0,-,0",
    "0,0,0"};

}  // namespace

std::vector<TableRow> extension_table(Family family, int n) {
  std::vector<TableRow> rows;
  for (const auto& w : OmegaVector::all_sign_vectors(n)) {
    const auto cls = classify(family, n, w);
    rows.push_back({w, cls.n_zero, cls.labels(), cls.type2_count(), cls.type3_count()});
  }
  if (n == 3) {
    auto rank = [](const TableRow& r) {
      const auto key = r.omega.sign_string();
      return std::find(std::begin(kReferenceOrder3), std::end(kReferenceOrder3), key) -
             std::begin(kReferenceOrder3);
    };
    std::stable_sort(rows.begin(), rows.end(),
                     [&](const TableRow& x, const TableRow& y) { return rank(x) < rank(y); });
  } else {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const TableRow& x, const TableRow& y) { return x.zeros < y.zeros; });
  }
  return rows;
}

std::string format_table(const std::vector<TableRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    out += "(" + row.omega.sign_string() + ") | ";
    if (row.labels.empty()) out += "none";
    for (std::size_t i = 0; i < row.labels.size(); ++i) {
      if (i) out += ",";
      out += row.labels[i];
    }
    out += " | " + std::to_string(row.type2) + "+" + std::to_string(row.type3) + "\n";
  }
  return out;
}

}  // namespace ckcoh
