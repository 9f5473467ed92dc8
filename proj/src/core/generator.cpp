#include "generator.hpp"

#include "error.hpp"

namespace ckcoh {

std::string Generator::name() const {
  auto idx = [](int x, int y) {
    if (x < 10 && y < 10) return std::to_string(x) + std::to_string(y);
    return "_" + std::to_string(x) + "," + std::to_string(y);
  };
  switch (kind) {
    case Kind::J: return "J" + idx(a, b);
    case Kind::M: return "M" + idx(a, b);
    case Kind::B: return "B" + std::to_string(a);
    case Kind::I: return "I";
  }
  return "?";
}

GeneratorBasis::GeneratorBasis(Family family, int n) : family_(family), n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "N must be positive");
  for (auto kind : {Generator::Kind::J, Generator::Kind::M})
    for (int a = 0; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) gens_.push_back({kind, a, b});
  for (int l = 1; l <= n; ++l) gens_.push_back(Generator::B(l));
  if (family == Family::u) gens_.push_back(Generator::I());
}

int GeneratorBasis::pair_offset(int a, int b) const {
  // number of pairs (x,y) preceding (a,b) in lexicographic order
  return a * n_ - a * (a - 1) / 2 + (b - a - 1);
}

int GeneratorBasis::index_of(const Generator& g) const {
  const int p = pair_count();
  switch (g.kind) {
    case Generator::Kind::J:
    case Generator::Kind::M:
      if (g.a < 0 || g.a >= g.b || g.b > n_) break;
      return (g.kind == Generator::Kind::J ? 0 : p) + pair_offset(g.a, g.b);
    case Generator::Kind::B:
      if (g.a < 1 || g.a > n_) break;
      return 2 * p + g.a - 1;
    case Generator::Kind::I:
      if (family_ != Family::u) break;
      return 2 * p + n_;
  }
  throw Error(ErrorKind::IndexOutOfRange, "generator " + g.name() + " not in basis");
}

std::optional<Generator> GeneratorBasis::parse(const std::string& name) const {
  for (const auto& g : gens_)
    if (g.name() == name) return g;
  return std::nullopt;
}

}  // namespace ckcoh
