#include "serialize.hpp"

#include <sstream>

#include "error.hpp"

namespace ckcoh {

namespace {

std::vector<std::vector<std::string>> content_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    out.push_back(std::move(tokens));
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "empty input");
  return out;
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "expected an integer, got '" + s + "'");
  }
}

void expect_tokens(const std::vector<std::string>& line, std::size_t n) {
  if (line.size() != n)
    throw Error(ErrorKind::Parse, "expected " + std::to_string(n) + " fields per line, got " +
                                      std::to_string(line.size()));
}

std::string pair_key(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

std::pair<int, int> parse_pair_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::Parse, "bad pair key '" + key + "'");
  return {to_int(key.substr(0, comma)), to_int(key.substr(comma + 1))};
}

Rational json_rational(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw Error(ErrorKind::Parse, "expected a rational string");
}

template <class F>
auto json_guard(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json omega_json(const OmegaVector& w) {
  Json arr = Json::array();
  for (const auto& q : w.values()) arr.push_back(to_fraction_string(q));
  return arr;
}

std::string algebra_to_text(const LieAlgebra& g) {
  std::ostringstream out;
  out << g.dim();
  if (g.meta()) {
    out << ' ' << g.meta()->omega.n() << ' ' << family_name(g.meta()->family);
    for (const auto& w : g.meta()->omega.values()) out << ' ' << to_fraction_string(w);
  } else {
    out << " 0 none";
  }
  out << '\n';
  for (const auto& e : g.entries())
    out << e.i << ' ' << e.j << ' ' << e.k << ' ' << to_fraction_string(e.c) << '\n';
  return out.str();
}

LieAlgebra algebra_from_text(const std::string& text) {
  const auto lines = content_lines(text);
  const auto& h = lines[0];
  if (h.size() < 3) throw Error(ErrorKind::Parse, "algebra header needs 'dim N family omega...'");
  const int dim = to_int(h[0]);
  const int n = to_int(h[1]);
  std::optional<FamilyMeta> meta;
  if (h[2] != "none") {
    if (static_cast<int>(h.size()) != 3 + n)
      throw Error(ErrorKind::Parse, "header lists a different number of omega values than N");
    std::vector<Rational> w;
    for (int k = 0; k < n; ++k) w.push_back(parse_rational(h[3 + k]));
    meta = FamilyMeta{parse_family(h[2]), OmegaVector(std::move(w))};
  }
  std::vector<LieAlgebra::Entry> entries;
  for (std::size_t t = 1; t < lines.size(); ++t) {
    expect_tokens(lines[t], 4);
    entries.push_back({to_int(lines[t][0]), to_int(lines[t][1]), to_int(lines[t][2]),
                       parse_rational(lines[t][3])});
  }
  return LieAlgebra(dim, entries, std::move(meta));
}

Json algebra_to_json(const LieAlgebra& g) {
  Json j;
  j["dim"] = g.dim();
  if (g.meta()) {
    j["N"] = g.meta()->omega.n();
    j["family"] = family_name(g.meta()->family);
    j["omega"] = omega_json(g.meta()->omega);
  } else {
    j["N"] = 0;
    j["family"] = nullptr;
    j["omega"] = Json::array();
  }
  Json c = Json::array();
  for (const auto& e : g.entries()) c.push_back(Json::array({e.i, e.j, e.k, to_fraction_string(e.c)}));
  j["constants"] = std::move(c);
  return j;
}

LieAlgebra algebra_from_json(const Json& j) {
  return json_guard([&] {
    std::optional<FamilyMeta> meta;
    if (!j.at("family").is_null()) {
      std::vector<Rational> w;
      for (const auto& q : j.at("omega")) w.push_back(json_rational(q));
      meta = FamilyMeta{parse_family(j.at("family").get<std::string>()), OmegaVector(std::move(w))};
    }
    std::vector<LieAlgebra::Entry> entries;
    for (const auto& e : j.at("constants"))
      entries.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(),
                         json_rational(e.at(3))});
    return LieAlgebra(j.at("dim").get<int>(), entries, std::move(meta));
  });
}

LieAlgebra parse_algebra(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j = json_guard([&] { return Json::parse(text); });
    return algebra_from_json(j);
  }
  return algebra_from_text(text);
}

std::string cochain_to_text(const TwoCochain& xi) {
  std::ostringstream out;
  out << xi.dim() << '\n';
  for (int i = 0; i < xi.dim(); ++i)
    for (int j = i + 1; j < xi.dim(); ++j) {
      Rational v = xi(i, j);
      if (v != 0) out << i << ' ' << j << ' ' << to_fraction_string(v) << '\n';
    }
  return out.str();
}

TwoCochain cochain_from_text(const std::string& text) {
  const auto lines = content_lines(text);
  expect_tokens(lines[0], 1);
  TwoCochain xi(to_int(lines[0][0]));
  for (std::size_t t = 1; t < lines.size(); ++t) {
    expect_tokens(lines[t], 3);
    const int i = to_int(lines[t][0]), j = to_int(lines[t][1]);
    xi.set(i, j, xi(i, j) + parse_rational(lines[t][2]));
  }
  return xi;
}

Json cochain_to_json(const TwoCochain& xi) {
  Json j;
  j["dim"] = xi.dim();
  Json e = Json::array();
  for (int a = 0; a < xi.dim(); ++a)
    for (int b = a + 1; b < xi.dim(); ++b) {
      Rational v = xi(a, b);
      if (v != 0) e.push_back(Json::array({a, b, to_fraction_string(v)}));
    }
  j["entries"] = std::move(e);
  return j;
}

TwoCochain cochain_from_json(const Json& j) {
  return json_guard([&] {
    TwoCochain xi(j.at("dim").get<int>());
    for (const auto& e : j.at("entries")) {
      const int a = e.at(0).get<int>(), b = e.at(1).get<int>();
      xi.set(a, b, xi(a, b) + json_rational(e.at(2)));
    }
    return xi;
  });
}

std::string matrix_to_text(const SparseMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) out << r << ' ' << c << ' ' << to_fraction_string(v) << '\n';
  return out.str();
}

SparseMatrix matrix_from_text(const std::string& text) {
  const auto lines = content_lines(text);
  expect_tokens(lines[0], 2);
  const int rows = to_int(lines[0][0]);
  std::vector<SparseVector> entries(static_cast<std::size_t>(std::max(rows, 0)));
  for (std::size_t t = 1; t < lines.size(); ++t) {
    expect_tokens(lines[t], 3);
    const int r = to_int(lines[t][0]);
    if (r < 0 || r >= rows) throw Error(ErrorKind::Parse, "row index out of range");
    entries[r].emplace_back(to_int(lines[t][1]), parse_rational(lines[t][2]));
  }
  SparseMatrix m(rows, to_int(lines[0][1]));
  for (int r = 0; r < rows; ++r) m.set_row(r, std::move(entries[r]));
  return m;
}

Json matrix_to_json(const SparseMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json e = Json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) e.push_back(Json::array({r, c, to_fraction_string(v)}));
  j["entries"] = std::move(e);
  return j;
}

SparseMatrix matrix_from_json(const Json& j) {
  return json_guard([&] {
    const int rows = j.at("rows").get<int>();
    std::vector<SparseVector> entries(static_cast<std::size_t>(std::max(rows, 0)));
    for (const auto& e : j.at("entries")) {
      const int r = e.at(0).get<int>();
      if (r < 0 || r >= rows) throw Error(ErrorKind::Parse, "row index out of range");
      entries[r].emplace_back(e.at(1).get<int>(), json_rational(e.at(2)));
    }
    SparseMatrix m(rows, j.at("cols").get<int>());
    for (int r = 0; r < rows; ++r) m.set_row(r, std::move(entries[r]));
    return m;
  });
}

Json coefficients_to_json(const BasicCoefficients& c) {
  Json j = Json::object();
  auto two = [&](const char* key, const std::map<std::pair<int, int>, Rational>& m) {
    if (m.empty()) return;
    Json o = Json::object();
    for (const auto& [ab, v] : m) o[pair_key(ab.first, ab.second)] = to_short_string(v);
    j[key] = std::move(o);
  };
  auto one = [&](const char* key, const std::map<int, Rational>& m) {
    if (m.empty()) return;
    Json o = Json::object();
    for (const auto& [k, v] : m) o[std::to_string(k)] = to_short_string(v);
    j[key] = std::move(o);
  };
  two("eta", c.eta);
  two("tau", c.tau);
  one("alpha", c.alpha);
  two("beta", c.beta);
  one("gamma", c.gamma);
  return j;
}

BasicCoefficients coefficients_from_json(const Json& j) {
  return json_guard([&] {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "coefficients must be a JSON object");
    BasicCoefficients c;
    for (const auto& [key, value] : j.items()) {
      if (key != "eta" && key != "tau" && key != "alpha" && key != "beta" && key != "gamma")
        throw Error(ErrorKind::Parse, "unknown coefficient key '" + key + "'");
    }
    auto two = [&](const char* key, std::map<std::pair<int, int>, Rational>& m) {
      if (!j.contains(key)) return;
      for (const auto& [k, v] : j.at(key).items()) m[parse_pair_key(k)] = json_rational(v);
    };
    auto one = [&](const char* key, std::map<int, Rational>& m) {
      if (!j.contains(key)) return;
      for (const auto& [k, v] : j.at(key).items()) m[to_int(k)] = json_rational(v);
    };
    two("eta", c.eta);
    two("tau", c.tau);
    one("alpha", c.alpha);
    two("beta", c.beta);
    one("gamma", c.gamma);
    c.drop_zeros();
    return c;
  });
}

Json classification_to_json(const ExtensionClassification& c) {
  Json j;
  j["family"] = family_name(c.family);
  j["N"] = c.omega.n();
  j["omega"] = omega_json(c.omega);
  j["n_zero"] = c.n_zero;
  j["type2_nontrivial"] = c.type2_nontrivial;
  j["type2_trivial"] = c.type2_trivial;
  Json beta = Json::array();
  for (auto [k, l] : c.type3_beta_allowed) beta.push_back(Json::array({k, l}));
  j["type3_beta_allowed"] = std::move(beta);
  j["type3_gamma_allowed"] = c.type3_gamma_allowed;
  j["labels"] = c.labels();
  j["dim_h2_formula"] = c.dim_h2_formula;
  return j;
}

Json contraction_to_json(const ContractionReport& r) {
  Json j;
  j["family"] = family_name(r.family);
  j["k"] = r.k;
  j["omega_before"] = omega_json(r.before);
  j["omega_after"] = omega_json(r.after);
  j["changed"] = r.changed;
  j["alpha_became_nontrivial"] = r.alpha_became_nontrivial;
  Json beta = Json::array();
  for (auto [k, l] : r.beta_newly_allowed) beta.push_back(Json::array({k, l}));
  j["beta_newly_allowed"] = std::move(beta);
  j["gamma_newly_allowed"] = r.gamma_newly_allowed;
  j["dim_h2_before"] = r.dim_before;
  j["dim_h2_after"] = r.dim_after;
  return j;
}

Json theorem_to_json(const TheoremReport& r) {
  Json j;
  j["family"] = family_name(r.family);
  j["N"] = r.n;
  j["omega"] = omega_json(r.omega);
  j["dim_Z2"] = r.dim_Z2;
  j["dim_B2"] = r.dim_B2;
  j["dim_H2"] = r.dim_H2;
  j["formula"] = r.formula;
  j["match"] = r.match;
  j["nontrivial_ok"] = r.nontrivial_ok;
  j["trivial_ok"] = r.trivial_ok;
  j["pass"] = r.pass();
  return j;
}

Json table_to_json(const std::vector<TableRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json j;
    j["omega"] = row.omega.sign_string();
    j["zeros"] = row.zeros;
    j["labels"] = row.labels;
    j["type2"] = row.type2;
    j["type3"] = row.type3;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace ckcoh
