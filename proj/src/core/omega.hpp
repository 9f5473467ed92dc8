#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace ckcoh {

enum class Family { su, u };

std::string family_name(Family f);
Family parse_family(std::string_view text);

// The CK contraction parameters omega_1..omega_N. Index 0 of the storage is
// omega_1.
class OmegaVector {
 public:
  OmegaVector() = default;
  explicit OmegaVector(std::vector<Rational> values);

  // Parses a comma separated list. Tokens are '+', '-', U+2212, '0' or any
  // rational "p/q".
  static OmegaVector parse(std::string_view list);
  // All sign vectors {+1,-1,0}^n in lexicographic order of the sign
  // characters "+", "-", "0".
  static std::vector<OmegaVector> all_sign_vectors(int n);

  int n() const { return static_cast<int>(values_.size()); }
  // 1-based: omega(k) is omega_k.
  const Rational& operator()(int k) const;
  const std::vector<Rational>& values() const { return values_; }

  // omega_{a+1} * ... * omega_b for 0 <= a <= b <= N; 1 when a == b.
  Rational product(int a, int b) const;

  int zero_count() const;
  bool is_zero(int k) const { return (*this)(k) == 0; }

  OmegaVector reversed() const;
  OmegaVector with_zero(int k) const;

  // "+,-,0" for sign vectors, otherwise rationals in short form.
  std::string to_string() const;
  std::string sign_string() const;

  friend bool operator==(const OmegaVector&, const OmegaVector&) = default;

 private:
  std::vector<Rational> values_;
};

Rational omega_product(const OmegaVector& omega, int a, int b);

}  // namespace ckcoh
