#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omega.hpp"

namespace ckcoh {

struct Generator {
  enum class Kind { J, M, B, I };
  Kind kind = Kind::J;
  int a = 0;  // J/M: row index a < b; B: l stored in a
  int b = 0;

  static Generator J(int a, int b) { return {Kind::J, a, b}; }
  static Generator M(int a, int b) { return {Kind::M, a, b}; }
  static Generator B(int l) { return {Kind::B, l, 0}; }
  static Generator I() { return {Kind::I, 0, 0}; }

  bool is_pair() const { return kind == Kind::J || kind == Kind::M; }
  int l() const { return a; }

  // "J01", "M23", "B2", "I"; indices >= 10 are separated: "J_3,12".
  std::string name() const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Canonical ordering of the CK basis: J(a,b) lexicographic, then M(a,b)
// lexicographic, then B_1..B_N, then I for the u family.
class GeneratorBasis {
 public:
  GeneratorBasis(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(gens_.size()); }
  int pair_count() const { return n_ * (n_ + 1) / 2; }

  const Generator& operator[](int index) const { return gens_[static_cast<std::size_t>(index)]; }
  const std::vector<Generator>& generators() const { return gens_; }

  int index_of(const Generator& g) const;
  int J(int a, int b) const { return index_of(Generator::J(a, b)); }
  int M(int a, int b) const { return index_of(Generator::M(a, b)); }
  int B(int l) const { return index_of(Generator::B(l)); }
  int I() const { return index_of(Generator::I()); }

  std::optional<Generator> parse(const std::string& name) const;

 private:
  int pair_offset(int a, int b) const;

  Family family_;
  int n_;
  std::vector<Generator> gens_;
};

}  // namespace ckcoh
