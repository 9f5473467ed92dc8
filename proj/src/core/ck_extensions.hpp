#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ck_algebra.hpp"
#include "cohomology.hpp"

namespace ckcoh {

// Basic extension coefficients. Zero values are never stored, so absent
// keys mean zero.
struct BasicCoefficients {
  std::map<std::pair<int, int>, Rational> eta;   // Type I, (a,b) with a < b
  std::map<std::pair<int, int>, Rational> tau;   // Type I
  std::map<int, Rational> alpha;                 // Type II, k = 1..N
  std::map<std::pair<int, int>, Rational> beta;  // Type III, k < l
  std::map<int, Rational> gamma;                 // Type III, u family only

  void drop_zeros();
  bool has_type1() const { return !eta.empty() || !tau.empty(); }

  friend bool operator==(const BasicCoefficients&, const BasicCoefficients&) = default;
};

struct ExtensionClassification {
  Family family;
  OmegaVector omega;
  int n_zero = 0;
  std::vector<int> type2_nontrivial;  // k with omega_k = 0
  std::vector<int> type2_trivial;     // k with omega_k != 0
  std::vector<std::pair<int, int>> type3_beta_allowed;
  std::vector<int> type3_gamma_allowed;
  int dim_h2_formula = 0;

  int type2_count() const { return static_cast<int>(type2_nontrivial.size()); }
  int type3_count() const {
    return static_cast<int>(type3_beta_allowed.size() + type3_gamma_allowed.size());
  }
  // "α_1", "β_12", "γ_2", ... in that order.
  std::vector<std::string> labels() const;
};

std::string alpha_label(int k);
std::string beta_label(int k, int l);
std::string gamma_label(int k);

ExtensionClassification classify(Family family, int n, const OmegaVector& omega);

// n(n+1)/2 for su, n(n+3)/2 for u, n = number of vanishing omega_k.
int dim_h2_formula(Family family, const OmegaVector& omega);

// Throws ConstraintViolation for beta_kl != 0 with omega_k or omega_l != 0,
// gamma_k != 0 with omega_k != 0, gamma on the su family, or indices out
// of range.
void check_constraints(Family family, const OmegaVector& omega, const BasicCoefficients& c);

// Cocycle of the fully extended brackets (eta/tau, alpha, beta, gamma
// terms) on the canonical basis of build_ck(family, N, omega).
TwoCochain cocycle_from_basic(Family family, int n, const OmegaVector& omega,
                              const BasicCoefficients& c);

// Central extension by cocycle_from_basic; the central element is last.
LieAlgebra build_extended(Family family, int n, const OmegaVector& omega,
                          const BasicCoefficients& c);

struct RelationCheck {
  std::string name;
  int checked = 0;
  int violations = 0;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool ok() const;
  int violations() const;
};

// Evaluates every derived relation of the general cocycle against xi, using
// coefficient values c as the basic data.
RelationReport check_relations(const LieAlgebra& g, const TwoCochain& xi,
                               const BasicCoefficients& c);

// Reads the basic coefficients of a cocycle and verifies the derived
// relations. Throws NotCocycle or RelationMismatch.
BasicCoefficients extract_basic(const LieAlgebra& g, const TwoCochain& xi);

// mu(B_s) = -alpha_s / (2 omega_s). Throws ConstraintViolation if some
// alpha_s != 0 sits on omega_s = 0.
OneCochain trivializing_cochain(Family family, const OmegaVector& omega,
                                const std::map<int, Rational>& alpha);

struct ContractionReport {
  Family family;
  OmegaVector before;
  OmegaVector after;
  int k = 0;
  bool changed = false;
  std::vector<int> alpha_became_nontrivial;
  std::vector<std::pair<int, int>> beta_newly_allowed;
  std::vector<int> gamma_newly_allowed;
  int dim_before = 0;
  int dim_after = 0;
};

ContractionReport contract(Family family, const OmegaVector& omega, int k);

struct TheoremReport {
  Family family;
  int n = 0;
  OmegaVector omega;
  int dim_Z2 = 0;
  int dim_B2 = 0;
  int dim_H2 = 0;
  int formula = 0;
  bool match = false;
  // The classified non-trivial cocycles are cocycles, independent modulo
  // coboundaries, and as many as dim H^2.
  bool nontrivial_ok = false;
  // Type I unit cocycles and alpha_k with omega_k != 0 are coboundaries.
  bool trivial_ok = false;

  bool pass() const { return match && nontrivial_ok && trivial_ok; }
};

TheoremReport verify_theorem(Family family, int n, const OmegaVector& omega);

struct TableRow {
  OmegaVector omega;
  int zeros = 0;
  std::vector<std::string> labels;
  int type2 = 0;
  int type3 = 0;
};

// One row per sign vector, ordered by number of zeros and then by sign
// string with + < - < 0. N=3 uses the conventional listing that keeps rows
// of the same real form together.
std::vector<TableRow> extension_table(Family family, int n);

// "(0,0,+) | α_1,α_2,β_12 | 2+1" per row, newline terminated.
std::string format_table(const std::vector<TableRow>& rows);

}  // namespace ckcoh
