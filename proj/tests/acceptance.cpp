// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "ck_extensions.hpp"
#include "cohomology.hpp"
#include "error.hpp"
#include "oracle/dense_oracle.hpp"
#include "support.hpp"

using namespace ckcoh;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string label(Family f, const OmegaVector& w) { return family_name(f) + " (" + w.to_string() + ")"; }

// Formula sweep over {+,-,0}^N, N = 1..5. Returns the seconds spent on N <= 4.
double formula_sweep(Family fam, Outcome& out, int& cases) {
  const auto t0 = Clock::now();
  double small = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& w : OmegaVector::all_sign_vectors(n)) {
      const auto r = h2(build_ck(fam, n, w));
      ++cases;
      if (r.dim_H2 != dim_h2_formula(fam, w))
        out.fail(label(fam, w) + ": dim H2 " + std::to_string(r.dim_H2) + " vs formula " +
                 std::to_string(dim_h2_formula(fam, w)));
    }
    if (n == 4) small = seconds_since(t0);
  }
  return small;
}

Outcome criterion1() {
  Outcome out;
  int cases = 0;
  const auto t0 = Clock::now();
  const double small = formula_sweep(Family::su, out, cases);
  const double total = seconds_since(t0);
  if (cases != 363) out.fail("expected 363 cases, ran " + std::to_string(cases));
  if (small >= 10) out.fail("N <= 4 took " + std::to_string(small) + " s");
  if (total >= 300) out.fail("sweep took " + std::to_string(total) + " s");
  if (out.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "363 cases, N<=4 %.2f s, total %.2f s", small, total);
    out.detail = buf;
  }
  return out;
}

Outcome criterion2() {
  Outcome out;
  int cases = 0;
  const auto t0 = Clock::now();
  formula_sweep(Family::u, out, cases);
  const double total = seconds_since(t0);
  if (total >= 600) out.fail("sweep took " + std::to_string(total) + " s");
  if (out.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d cases, total %.2f s", cases, total);
    out.detail = buf;
  }
  return out;
}

Outcome criterion3() {
  Outcome out;
  std::ifstream in(std::string(CKCOH_GOLDEN_DIR) + "/table_su3.txt", std::ios::binary);
  if (!in) {
    out.fail("golden file missing");
    return out;
  }
  std::ostringstream golden;
  golden << in.rdbuf();
  const auto rows = extension_table(Family::su, 3);
  const std::string produced = format_table(rows);
  if (rows.size() != 27) out.fail("expected 27 rows");
  if (produced != golden.str()) out.fail("table differs from golden transcription");
  if (out.ok) out.detail = "27 rows byte-exact";
  return out;
}

Outcome criterion4() {
  Outcome out;
  const GeneratorBasis b(Family::su, 2);
  int checked = 0;
  for (const auto& w2 : {Rational(1), Rational(-1), Rational(3, 7), Rational(-5, 2)})
    for (const auto& a1 : {Rational(1), Rational(2), Rational(-1, 3)}) {
      const OmegaVector w(std::vector<Rational>{Rational(0), w2});
      const auto ext = build_extended(Family::su, 2, w, {.alpha = {{1, a1}}});
      const int xi = ext.dim() - 1;
      ++checked;
      if (ext.constant(b.J(0, 2), b.M(0, 2), xi) != w2 * a1)
        out.fail("[J02,M02] central term wrong for omega_2 = " + to_short_string(w2));
      if (jacobi_residual(ext) != 0) out.fail("extension violates Jacobi");
    }
  if (out.ok) out.detail = std::to_string(checked) + " (omega_2, alpha_1) pairs";
  return out;
}

Outcome criterion5() {
  Outcome out;
  int cases = 0;
  for (auto fam : {Family::su, Family::u})
    for (int n = 1; n <= 5; ++n)
      for (const auto& w : OmegaVector::all_sign_vectors(n)) {
        if (w.zero_count() != 0) continue;
        ++cases;
        const int d = h2(build_ck(fam, n, w)).dim_H2;
        if (d != 0) out.fail(label(fam, w) + ": dim H2 = " + std::to_string(d));
      }
  if (out.ok) out.detail = std::to_string(cases) + " semisimple cases";
  return out;
}

Outcome criterion6() {
  Outcome out;
  int cases = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : OmegaVector::all_sign_vectors(n)) {
      if (w.zero_count() != 1 || !(w.is_zero(1) || w.is_zero(n))) continue;
      ++cases;
      const int d = h2(build_su_omega(n, w)).dim_H2;
      if (d != 1) out.fail(label(Family::su, w) + ": dim H2 = " + std::to_string(d));
    }
  if (out.ok) out.detail = std::to_string(cases) + " cases";
  return out;
}

Outcome criterion7() {
  Outcome out;
  int trivial = 0, nontrivial = 0;
  for (auto fam : {Family::su, Family::u})
    for (int n = 1; n <= 4; ++n)
      for (const auto& w : OmegaVector::all_sign_vectors(n)) {
        const auto g = build_ck(fam, n, w);
        for (int k = 1; k <= n; ++k) {
          const auto xi = cocycle_from_basic(fam, n, w, {.alpha = {{k, 1}}});
          const auto mu = is_coboundary(g, xi);
          if (w.is_zero(k)) {
            ++nontrivial;
            if (mu) out.fail(label(fam, w) + ": alpha_" + std::to_string(k) + " trivial");
            continue;
          }
          ++trivial;
          if (!mu) {
            out.fail(label(fam, w) + ": alpha_" + std::to_string(k) + " not a coboundary");
            continue;
          }
          if (!(*mu == trivializing_cochain(fam, w, {{k, 1}})))
            out.fail(label(fam, w) + ": mu differs from closed form");
          if (!(xi - coboundary(g, *mu)).is_zero())
            out.fail(label(fam, w) + ": xi - delta(mu) not zero");
        }
      }
  if (out.ok)
    out.detail = std::to_string(trivial) + " trivialized, " + std::to_string(nontrivial) + " non-trivial";
  return out;
}

Outcome criterion8() {
  Outcome out;
  long cocycles = 0, relations = 0;
  for (auto fam : {Family::su, Family::u})
    for (int n = 1; n <= 4; ++n)
      for (const auto& w : OmegaVector::all_sign_vectors(n)) {
        const auto g = build_ck(fam, n, w);
        for (const auto& z : h2(g).cocycle_basis) {
          ++cocycles;
          try {
            const auto report = check_relations(g, z, extract_basic(g, z));
            for (const auto& c : report.checks) relations += c.checked;
            if (!report.ok())
              out.fail(label(fam, w) + ": " + std::to_string(report.violations()) + " violations");
          } catch (const Error& e) {
            out.fail(label(fam, w) + ": " + e.what());
          }
        }
      }
  if (out.ok)
    out.detail = std::to_string(cocycles) + " cocycles, " + std::to_string(relations) + " relation checks";
  return out;
}

Outcome criterion9() {
  Outcome out;
  long pairs = 0;
  for (auto fam : {Family::su, Family::u})
    for (int n = 1; n <= 4; ++n)
      for (const auto& w : OmegaVector::all_sign_vectors(n)) {
        const auto r = check_representation(fam, n, w);
        pairs += r.pairs_checked;
        if (!r.ok()) out.fail(label(fam, w) + ": representation mismatch");
      }
  if (out.ok) out.detail = std::to_string(pairs) + " commutators";
  return out;
}

Outcome criterion10() {
  Outcome out;
  int cases = 0;
  for (auto fam : {Family::su, Family::u})
    for (int n = 1; n <= 4; ++n) {
      const auto phi = polarity_map(fam, n);
      for (const auto& w : OmegaVector::all_sign_vectors(n)) {
        ++cases;
        if (!transport(build_ck(fam, n, w), phi).same_constants(build_ck(fam, n, w.reversed())))
          out.fail(label(fam, w) + ": transported tensor differs");
      }
    }
  if (out.ok) out.detail = std::to_string(cases) + " cases";
  return out;
}

Outcome criterion11() {
  Outcome out;
  const auto compare = [&](const LieAlgebra& g, const std::string& what) {
    const auto o = oracle::second_cohomology(testing_support::to_tensor(g));
    const auto r = h2(g, EliminationPath::sparse);
    if (o.z2 != r.dim_Z2 || o.b2 != r.dim_B2 || o.h2 != r.dim_H2)
      out.fail(what + ": oracle " + std::to_string(o.z2) + "/" + std::to_string(o.b2) + "/" +
               std::to_string(o.h2) + " engine " + std::to_string(r.dim_Z2) + "/" +
               std::to_string(r.dim_B2) + "/" + std::to_string(r.dim_H2));
  };
  testing_support::Rng rng(20240611);
  for (int t = 0; t < 50; ++t) {
    std::string kind;
    const auto g = testing_support::random_algebra(rng, &kind);
    compare(g, "random " + kind + " #" + std::to_string(t));
  }
  int ck = 0;
  for (auto fam : {Family::su, Family::u})
    for (int n = 1; n <= 3; ++n)
      for (const auto& w : OmegaVector::all_sign_vectors(n)) {
        ++ck;
        compare(build_ck(fam, n, w), label(fam, w));
      }
  if (out.ok) out.detail = "50 random + " + std::to_string(ck) + " Cayley-Klein";
  return out;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"su formula sweep", criterion1},
      {"u formula sweep", criterion2},
      {"N=3 table", criterion3},
      {"worked example constant", criterion4},
      {"semisimple vanishing", criterion5},
      {"single end contraction", criterion6},
      {"triviality mechanics", criterion7},
      {"cocycle relations", criterion8},
      {"representation fidelity", criterion9},
      {"polarity isomorphism", criterion10},
      {"oracle equivalence", criterion11},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d: %s (%s)\n", o.ok ? "PASS" : "FAIL", index++, name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
