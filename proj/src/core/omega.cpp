#include "omega.hpp"

#include "error.hpp"

namespace ckcoh {

std::string family_name(Family f) { return f == Family::su ? "su" : "u"; }

Family parse_family(std::string_view text) {
  if (text == "su") return Family::su;
  if (text == "u") return Family::u;
  throw Error(ErrorKind::InvalidArgument,
              "unknown family '" + std::string(text) + "' (expected su or u)");
}

OmegaVector::OmegaVector(std::vector<Rational> values) : values_(std::move(values)) {}

OmegaVector OmegaVector::parse(std::string_view list) {
  std::vector<Rational> out;
  if (list.empty()) throw Error(ErrorKind::Parse, "empty omega list");
  std::size_t start = 0;
  while (true) {
    auto comma = list.find(',', start);
    std::string_view tok = list.substr(start, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - start);
    if (tok == "+")
      out.emplace_back(1);
    else if (tok == "-" || tok == "\xE2\x88\x92")
      out.emplace_back(-1);
    else
      out.push_back(parse_rational(tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return OmegaVector(std::move(out));
}

std::vector<OmegaVector> OmegaVector::all_sign_vectors(int n) {
  static const int kSigns[3] = {1, -1, 0};
  std::vector<OmegaVector> out;
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Rational> v;
    for (int d : digit) v.emplace_back(kSigns[d]);
    out.emplace_back(std::move(v));
    int pos = n - 1;
    while (pos >= 0 && digit[pos] == 2) digit[pos--] = 0;
    if (pos < 0) break;
    ++digit[pos];
  }
  return out;
}

const Rational& OmegaVector::operator()(int k) const {
  if (k < 1 || k > n())
    throw Error(ErrorKind::IndexOutOfRange,
                "omega index " + std::to_string(k) + " outside 1.." + std::to_string(n()));
  return values_[static_cast<std::size_t>(k - 1)];
}

Rational OmegaVector::product(int a, int b) const {
  if (a < 0 || b > n() || a > b)
    throw Error(ErrorKind::IndexOutOfRange,
                "omega_ab needs 0 <= a <= b <= " + std::to_string(n()) + ", got a=" +
                    std::to_string(a) + " b=" + std::to_string(b));
  Rational p(1);
  for (int s = a + 1; s <= b; ++s) {
    p *= values_[static_cast<std::size_t>(s - 1)];
    if (p == 0) break;
  }
  return p;
}

int OmegaVector::zero_count() const {
  int n0 = 0;
  for (const auto& w : values_) n0 += (w == 0);
  return n0;
}

OmegaVector OmegaVector::reversed() const {
  return OmegaVector(std::vector<Rational>(values_.rbegin(), values_.rend()));
}

OmegaVector OmegaVector::with_zero(int k) const {
  (void)(*this)(k);
  auto v = values_;
  v[static_cast<std::size_t>(k - 1)] = 0;
  return OmegaVector(std::move(v));
}

std::string OmegaVector::sign_string() const {
  std::string s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ',';
    int sg = sgn(values_[i]);
    s += sg > 0 ? '+' : (sg < 0 ? '-' : '0');
  }
  return s;
}

std::string OmegaVector::to_string() const {
  bool signs = true;
  for (const auto& w : values_) signs = signs && (w == 0 || w == 1 || w == -1);
  if (signs) return sign_string();
  std::string s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ',';
    s += to_short_string(values_[i]);
  }
  return s;
}

Rational omega_product(const OmegaVector& omega, int a, int b) {
  return omega.product(a, b);
}

}  // namespace ckcoh
