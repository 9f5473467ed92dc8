#include "ckcoh/ckcoh.h"

#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "ck_extensions.hpp"
#include "error.hpp"
#include "serialize.hpp"

using namespace ckcoh;

struct ckcoh_algebra {
  LieAlgebra g;
};

struct ckcoh_h2 {
  LieAlgebra g;
  CohomologyResult result;
  bool ck = false;
  int formula = 0;
  std::vector<BasicCoefficients> basic;
};

namespace {

thread_local std::string last_error;

ckcoh_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::IndexOutOfRange:
      return CKCOH_INVALID_ARGUMENT;
    case ErrorKind::LengthMismatch:
      return CKCOH_LENGTH_MISMATCH;
    case ErrorKind::InvalidAlgebra:
      return CKCOH_INVALID_ALGEBRA;
    case ErrorKind::NotCocycle:
      return CKCOH_NOT_COCYCLE;
    case ErrorKind::ConstraintViolation:
      return CKCOH_CONSTRAINT;
    case ErrorKind::RelationMismatch:
      return CKCOH_VERIFICATION;
    case ErrorKind::Parse:
      return CKCOH_PARSE;
  }
  return CKCOH_INTERNAL;
}

template <class F>
ckcoh_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return CKCOH_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CKCOH_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CKCOH_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorKind::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

struct CkArgs {
  Family family;
  int n;
  OmegaVector omega;
};

CkArgs ck_args(const char* family, int n, const char* omega) {
  require(family && omega, "family and omega must not be null");
  require(n >= 1, "N must be a positive integer");
  OmegaVector w = OmegaVector::parse(omega);
  if (w.n() != n)
    throw Error(ErrorKind::LengthMismatch, "omega has " + std::to_string(w.n()) +
                                               " entries but N = " + std::to_string(n));
  return {parse_family(family), n, std::move(w)};
}

bool is_plain_ck(const LieAlgebra& g) {
  return g.meta() && GeneratorBasis(g.meta()->family, g.meta()->omega.n()).dim() == g.dim();
}

std::string index_label(const char* sym, int a, int b) {
  std::string s = std::string(sym) + "_";
  if (a >= 10 || b >= 10) return s + std::to_string(a) + "," + std::to_string(b);
  return s + std::to_string(a) + std::to_string(b);
}

std::string basic_terms(const BasicCoefficients& c) {
  std::vector<std::string> parts;
  auto term = [&](const std::string& label, const Rational& v) {
    parts.push_back(label + " = " + to_short_string(v));
  };
  for (const auto& [ab, v] : c.eta) term(index_label("η", ab.first, ab.second), v);
  for (const auto& [ab, v] : c.tau) term(index_label("τ", ab.first, ab.second), v);
  for (const auto& [k, v] : c.alpha) term(alpha_label(k), v);
  for (const auto& [kl, v] : c.beta) term(beta_label(kl.first, kl.second), v);
  for (const auto& [k, v] : c.gamma) term(gamma_label(k), v);
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

std::string cochain_terms(const TwoCochain& xi) {
  std::string out;
  for (int i = 0; i < xi.dim(); ++i)
    for (int j = i + 1; j < xi.dim(); ++j) {
      Rational v = xi(i, j);
      if (v == 0) continue;
      if (!out.empty()) out += ", ";
      out += "(" + std::to_string(i) + "," + std::to_string(j) + ") " + to_short_string(v);
    }
  return out.empty() ? "0" : out;
}

std::string join(const std::vector<std::string>& xs) {
  if (xs.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
  return out;
}

std::string complex_entry(const Rational& re, const Rational& im) {
  if (im == 0) return to_short_string(re);
  std::string imag = im == 1 ? "i" : (im == -1 ? "-i" : to_short_string(im) + "i");
  if (re == 0) return imag;
  return to_short_string(re) + (im > 0 ? "+" : "") + imag;
}

std::string family_header(const CkArgs& a) {
  return std::string(family_name(a.family)) + " " + std::to_string(a.n) + " (" +
         a.omega.to_string() + ")";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* ckcoh_version(void) { return "1.0.0"; }

const char* ckcoh_last_error(void) { return last_error.c_str(); }

const char* ckcoh_status_name(ckcoh_status status) {
  switch (status) {
    case CKCOH_OK: return "ok";
    case CKCOH_INVALID_ARGUMENT: return "invalid argument";
    case CKCOH_LENGTH_MISMATCH: return "length mismatch";
    case CKCOH_NOT_COCYCLE: return "not a cocycle";
    case CKCOH_INVALID_ALGEBRA: return "invalid algebra";
    case CKCOH_CONSTRAINT: return "constraint violation";
    case CKCOH_VERIFICATION: return "verification failure";
    case CKCOH_PARSE: return "parse error";
    case CKCOH_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ckcoh_string_free(char* s) { delete[] s; }

ckcoh_status ckcoh_algebra_build(const char* family, int n, const char* omega,
                                 ckcoh_algebra** out) {
  return guarded([&] {
    require(out, "out must not be null");
    auto a = ck_args(family, n, omega);
    *out = new ckcoh_algebra{build_ck(a.family, a.n, a.omega)};
  });
}

ckcoh_status ckcoh_algebra_parse(const char* data, ckcoh_algebra** out) {
  return guarded([&] {
    require(data && out, "arguments must not be null");
    *out = new ckcoh_algebra{parse_algebra(data)};
  });
}

ckcoh_status ckcoh_algebra_build_extended(const char* family, int n, const char* omega,
                                          const char* coefficients_json, ckcoh_algebra** out) {
  return guarded([&] {
    require(coefficients_json && out, "arguments must not be null");
    auto a = ck_args(family, n, omega);
    Json j;
    try {
      j = Json::parse(coefficients_json);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
    *out = new ckcoh_algebra{build_extended(a.family, a.n, a.omega, coefficients_from_json(j))};
  });
}

void ckcoh_algebra_free(ckcoh_algebra* g) { delete g; }

int ckcoh_algebra_dim(const ckcoh_algebra* g) { return g ? g->g.dim() : -1; }

ckcoh_status ckcoh_algebra_jacobi_ok(const ckcoh_algebra* g, int* ok) {
  return guarded([&] {
    require(g && ok, "arguments must not be null");
    *ok = jacobi_residual(g->g) == 0 ? 1 : 0;
  });
}

ckcoh_status ckcoh_algebra_constant(const ckcoh_algebra* g, int i, int j, int k, char** out) {
  return guarded([&] {
    require(g && out, "arguments must not be null");
    const int d = g->g.dim();
    require(i >= 0 && j >= 0 && k >= 0 && i < d && j < d && k < d, "index out of range");
    *out = dup_string(to_short_string(g->g.constant(i, j, k)));
  });
}

ckcoh_status ckcoh_algebra_generator_index(const ckcoh_algebra* g, const char* name, int* index) {
  return guarded([&] {
    require(g && name && index, "arguments must not be null");
    require(g->g.meta().has_value(), "algebra has no named generators");
    const GeneratorBasis basis = ck_basis(g->g);
    if (std::string(name) == "Xi") {
      require(g->g.dim() == basis.dim() + 1, "algebra is not a central extension");
      *index = basis.dim();
      return;
    }
    auto gen = basis.parse(name);
    if (!gen) throw Error(ErrorKind::InvalidArgument, std::string("unknown generator ") + name);
    *index = basis.index_of(*gen);
  });
}

ckcoh_status ckcoh_algebra_serialize(const ckcoh_algebra* g, ckcoh_format format, char** out) {
  return guarded([&] {
    require(g && out, "arguments must not be null");
    *out = dup_string(format == CKCOH_JSON ? dump(algebra_to_json(g->g)) : algebra_to_text(g->g));
  });
}

ckcoh_status ckcoh_h2_compute(const ckcoh_algebra* g, ckcoh_h2** out) {
  return guarded([&] {
    require(g && out, "arguments must not be null");
    auto h = std::make_unique<ckcoh_h2>(ckcoh_h2{g->g, h2(g->g)});
    if (is_plain_ck(g->g)) {
      h->ck = true;
      h->formula = dim_h2_formula(g->g.meta()->family, g->g.meta()->omega);
      for (const auto& rep : h->result.representatives) h->basic.push_back(extract_basic(g->g, rep));
    }
    *out = h.release();
  });
}

void ckcoh_h2_free(ckcoh_h2* h) { delete h; }

int ckcoh_h2_dim_z2(const ckcoh_h2* h) { return h ? h->result.dim_Z2 : -1; }
int ckcoh_h2_dim_b2(const ckcoh_h2* h) { return h ? h->result.dim_B2 : -1; }
int ckcoh_h2_dim_h2(const ckcoh_h2* h) { return h ? h->result.dim_H2 : -1; }

int ckcoh_h2_matches_formula(const ckcoh_h2* h) {
  return h && h->ck && h->formula == h->result.dim_H2 ? 1 : 0;
}

ckcoh_status ckcoh_h2_report(const ckcoh_h2* h, ckcoh_format format, char** out) {
  return guarded([&] {
    require(h && out, "arguments must not be null");
    const auto& r = h->result;
    if (format == CKCOH_JSON) {
      Json j;
      j["dim"] = h->g.dim();
      if (h->ck) {
        j["family"] = family_name(h->g.meta()->family);
        j["N"] = h->g.meta()->omega.n();
        j["omega"] = omega_json(h->g.meta()->omega);
      }
      j["dim_Z2"] = r.dim_Z2;
      j["dim_B2"] = r.dim_B2;
      j["dim_H2"] = r.dim_H2;
      j["formula"] = h->ck ? Json(h->formula) : Json(nullptr);
      j["match"] = h->ck ? Json(h->formula == r.dim_H2) : Json(nullptr);
      Json reps = Json::array();
      for (const auto& rep : r.representatives) reps.push_back(cochain_to_json(rep));
      j["representatives"] = std::move(reps);
      if (h->ck) {
        Json basic = Json::array();
        for (const auto& c : h->basic) basic.push_back(coefficients_to_json(c));
        j["basic"] = std::move(basic);
      }
      *out = dup_string(dump(j));
      return;
    }
    std::ostringstream s;
    if (h->ck)
      s << "algebra: " << family_name(h->g.meta()->family) << ' ' << h->g.meta()->omega.n() << " ("
        << h->g.meta()->omega.to_string() << "), dim " << h->g.dim() << '\n';
    else
      s << "algebra: dim " << h->g.dim() << '\n';
    s << "dim Z2 = " << r.dim_Z2 << '\n' << "dim B2 = " << r.dim_B2 << '\n';
    s << "dim H2 = " << r.dim_H2;
    if (h->ck) s << " (formula " << h->formula << ") " << (h->formula == r.dim_H2 ? "MATCH" : "MISMATCH");
    s << '\n';
    for (std::size_t i = 0; i < r.representatives.size(); ++i) {
      s << "representative " << i + 1 << ": ";
      s << (h->ck ? basic_terms(h->basic[i]) : cochain_terms(r.representatives[i])) << '\n';
    }
    *out = dup_string(s.str());
  });
}

ckcoh_status ckcoh_classify(const char* family, int n, const char* omega, ckcoh_format format,
                            char** out) {
  return guarded([&] {
    require(out, "out must not be null");
    auto a = ck_args(family, n, omega);
    const auto c = classify(a.family, a.n, a.omega);
    if (format == CKCOH_JSON) {
      *out = dup_string(dump(classification_to_json(c)));
      return;
    }
    std::vector<std::string> nontrivial, trivial, type3;
    for (int k : c.type2_nontrivial) nontrivial.push_back(alpha_label(k));
    for (int k : c.type2_trivial) trivial.push_back(alpha_label(k));
    for (auto [k, l] : c.type3_beta_allowed) type3.push_back(beta_label(k, l));
    for (int k : c.type3_gamma_allowed) type3.push_back(gamma_label(k));
    std::ostringstream s;
    s << "algebra: " << family_header(a) << '\n'
      << "vanishing omega: " << c.n_zero << '\n'
      << "type I: trivial\n"
      << "type II non-trivial: " << join(nontrivial) << '\n'
      << "type II trivial: " << join(trivial) << '\n'
      << "type III: " << join(type3) << '\n'
      << "dim H2 = " << c.dim_h2_formula << " (" << c.type2_count() << '+' << c.type3_count()
      << ")\n";
    *out = dup_string(s.str());
  });
}

ckcoh_status ckcoh_table(const char* family, int n, ckcoh_format format, char** out) {
  return guarded([&] {
    require(family && out, "arguments must not be null");
    require(n >= 1, "N must be a positive integer");
    const auto rows = extension_table(parse_family(family), n);
    *out = dup_string(format == CKCOH_JSON ? dump(table_to_json(rows)) : format_table(rows));
  });
}

ckcoh_status ckcoh_contract(const char* family, int n, const char* omega, int k,
                            ckcoh_format format, char** out) {
  return guarded([&] {
    require(out, "out must not be null");
    auto a = ck_args(family, n, omega);
    const auto r = contract(a.family, a.omega, k);
    if (format == CKCOH_JSON) {
      *out = dup_string(dump(contraction_to_json(r)));
      return;
    }
    std::vector<std::string> alpha, beta, gamma;
    for (int x : r.alpha_became_nontrivial) alpha.push_back(alpha_label(x));
    for (auto [x, y] : r.beta_newly_allowed) beta.push_back(beta_label(x, y));
    for (int x : r.gamma_newly_allowed) gamma.push_back(gamma_label(x));
    std::ostringstream s;
    s << "contraction omega_" << k << " -> 0: (" << r.before.to_string() << ") -> ("
      << r.after.to_string() << ")" << (r.changed ? "" : " (already zero)") << '\n'
      << "dim H2: " << r.dim_before << " -> " << r.dim_after << '\n'
      << "type II newly non-trivial: " << join(alpha) << '\n'
      << "type III newly allowed: ";
    beta.insert(beta.end(), gamma.begin(), gamma.end());
    s << join(beta) << '\n';
    *out = dup_string(s.str());
  });
}

ckcoh_status ckcoh_representation(const char* family, int n, const char* omega,
                                  ckcoh_format format, int* ok, char** out) {
  return guarded([&] {
    require(out && ok, "arguments must not be null");
    auto a = ck_args(family, n, omega);
    const auto rho = fundamental_matrices(a.n, a.omega, a.family);
    const auto report = check_representation(a.family, a.n, a.omega);
    const GeneratorBasis basis(a.family, a.n);
    *ok = report.ok() ? 1 : 0;
    if (format == CKCOH_JSON) {
      Json j;
      j["family"] = family_name(a.family);
      j["N"] = a.n;
      j["omega"] = omega_json(a.omega);
      Json mats = Json::object();
      for (int i = 0; i < basis.dim(); ++i) {
        Json m = Json::array();
        for (int r = 0; r <= a.n; ++r) {
          Json row = Json::array();
          for (int c = 0; c <= a.n; ++c)
            row.push_back(Json::array({to_fraction_string(rho[i].re(r, c)),
                                       to_fraction_string(rho[i].im(r, c))}));
          m.push_back(std::move(row));
        }
        mats[basis[i].name()] = std::move(m);
      }
      j["matrices"] = std::move(mats);
      j["pairs_checked"] = report.pairs_checked;
      j["commutator_mismatches"] = report.commutator_mismatches;
      j["isometry_failures"] = report.isometry_failures;
      *out = dup_string(dump(j));
      return;
    }
    std::ostringstream s;
    s << "algebra: " << family_header(a) << '\n';
    for (int i = 0; i < basis.dim(); ++i) {
      s << basis[i].name() << ":\n";
      for (int r = 0; r <= a.n; ++r) {
        s << ' ';
        for (int c = 0; c <= a.n; ++c) s << ' ' << complex_entry(rho[i].re(r, c), rho[i].im(r, c));
        s << '\n';
      }
    }
    s << "commutators: " << (report.commutator_mismatches == 0 ? "ok" : "FAILED") << " ("
      << report.pairs_checked << " pairs, " << report.commutator_mismatches << " mismatches)\n"
      << "isometry: " << (report.isometry_failures == 0 ? "ok" : "FAILED") << " ("
      << report.isometry_failures << " failures)\n";
    *out = dup_string(s.str());
  });
}

ckcoh_status ckcoh_verify(const char* family, int n, const char* omega, ckcoh_format format,
                          int* pass, char** out) {
  return guarded([&] {
    require(pass, "pass must not be null");
    auto a = ck_args(family, n, omega);
    const auto r = verify_theorem(a.family, a.n, a.omega);
    *pass = r.pass() ? 1 : 0;
    if (!out) return;
    if (format == CKCOH_JSON) {
      *out = dup_string(theorem_to_json(r).dump());
      return;
    }
    std::ostringstream s;
    s << (r.pass() ? "PASS " : "FAIL ") << family_name(a.family) << ' ' << a.n << " ("
      << a.omega.to_string() << ") dim H2 = " << r.dim_H2 << " formula " << r.formula;
    if (!r.match) s << " [dimension mismatch]";
    if (!r.nontrivial_ok) s << " [non-trivial classes]";
    if (!r.trivial_ok) s << " [trivial classes]";
    *out = dup_string(s.str());
  });
}

}  // extern "C"
