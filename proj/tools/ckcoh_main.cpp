// ckcoh command line front end. Talks to the library only through the C API.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ckcoh/ckcoh.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kSweepLimit = 6;

struct Options {
  std::string family;
  int n = 0;
  std::string omega;
  std::string format = "text";
  std::string out;
  std::string golden;
  std::string input;
  std::string range;
  int k = 0;
  bool force = false;
};

struct Failure {
  ckcoh_status status;
};

class Owned {
 public:
  Owned() = default;
  ~Owned() { ckcoh_string_free(p_); }
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  char** slot() { return &p_; }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

void check(ckcoh_status s) {
  if (s != CKCOH_OK) throw Failure{s};
}

ckcoh_format fmt(const Options& o) { return o.format == "json" ? CKCOH_JSON : CKCOH_TEXT; }

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

struct AlgebraHandle {
  ckcoh_algebra* g = nullptr;
  ~AlgebraHandle() { ckcoh_algebra_free(g); }
};

void load_algebra(const Options& o, AlgebraHandle& h) {
  if (!o.input.empty())
    check(ckcoh_algebra_parse(read_file(o.input).c_str(), &h.g));
  else
    check(ckcoh_algebra_build(o.family.c_str(), o.n, o.omega.c_str(), &h.g));
}

int cmd_algebra(const Options& o) {
  AlgebraHandle h;
  load_algebra(o, h);
  Owned text;
  check(ckcoh_algebra_serialize(h.g, fmt(o), text.slot()));
  int ok = 0;
  check(ckcoh_algebra_jacobi_ok(h.g, &ok));
  const std::string dim_line = "dim: " + std::to_string(ckcoh_algebra_dim(h.g)) + "\n";
  const std::string jacobi_line = ok ? "jacobi: ok\n" : "jacobi: FAILED\n";
  if (!o.out.empty()) {
    emit(o, text.str());
    std::cout << dim_line << jacobi_line;
  } else if (fmt(o) == CKCOH_TEXT) {
    // Comment lines keep the output parseable as an algebra file.
    emit(o, text.str() + "# " + dim_line + "# " + jacobi_line);
  } else {
    emit(o, text.str());
    std::cerr << dim_line << jacobi_line;
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_h2(const Options& o) {
  AlgebraHandle g;
  load_algebra(o, g);
  ckcoh_h2* h = nullptr;
  check(ckcoh_h2_compute(g.g, &h));
  Owned report;
  const ckcoh_status s = ckcoh_h2_report(h, fmt(o), report.slot());
  const bool generic = !o.input.empty();
  const bool match = ckcoh_h2_matches_formula(h) == 1;
  ckcoh_h2_free(h);
  check(s);
  emit(o, report.str());
  // Generic algebras have no closed formula to compare against.
  if (generic) return kExitOk;
  return match ? kExitOk : kExitMismatch;
}

int cmd_classify(const Options& o) {
  Owned text;
  check(ckcoh_classify(o.family.c_str(), o.n, o.omega.c_str(), fmt(o), text.slot()));
  emit(o, text.str());
  return kExitOk;
}

// First line where the two texts differ, 1-based; 0 when equal.
int first_difference(const std::string& a, const std::string& b) {
  if (a == b) return 0;
  std::istringstream x(a), y(b);
  std::string lx, ly;
  for (int line = 1;; ++line) {
    const bool gx = static_cast<bool>(std::getline(x, lx));
    const bool gy = static_cast<bool>(std::getline(y, ly));
    if (!gx || !gy || lx != ly) return line;
  }
}

int cmd_table(const Options& o) {
  Owned text;
  check(ckcoh_table(o.family.c_str(), o.n, fmt(o), text.slot()));
  emit(o, text.str());
  if (o.golden.empty()) return kExitOk;
  const int line = first_difference(text.str(), read_file(o.golden));
  if (line == 0) {
    std::cerr << "golden: match\n";
    return kExitOk;
  }
  std::cerr << "golden: MISMATCH at line " << line << '\n';
  return kExitMismatch;
}

int cmd_rep(const Options& o) {
  Owned text;
  int ok = 0;
  check(ckcoh_representation(o.family.c_str(), o.n, o.omega.c_str(), fmt(o), &ok, text.slot()));
  emit(o, text.str());
  return ok ? kExitOk : kExitMismatch;
}

int cmd_contract(const Options& o) {
  Owned text;
  check(ckcoh_contract(o.family.c_str(), o.n, o.omega.c_str(), o.k, fmt(o), text.slot()));
  emit(o, text.str());
  return kExitOk;
}

std::vector<std::string> sign_vectors(int n) {
  std::vector<std::string> out{""};
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& prefix : out)
      for (const char* s : {"+", "-", "0"}) next.push_back(prefix.empty() ? s : prefix + "," + s);
    out = std::move(next);
  }
  return out;
}

unsigned thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("CKCOH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) n = static_cast<unsigned>(v);
  }
  return n == 0 ? 1 : n;
}

bool parse_range(const std::string& r, int& lo, int& hi) {
  const auto dots = r.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      lo = hi = std::stoi(r, &used);
      return used == r.size();
    }
    const std::string a = r.substr(0, dots), b = r.substr(dots + 2);
    lo = std::stoi(a, &used);
    if (used != a.size()) return false;
    hi = std::stoi(b, &used);
    return used == b.size();
  } catch (const std::exception&) {
    return false;
  }
}

int cmd_sweep(const Options& o) {
  int lo = 0, hi = 0;
  if (!parse_range(o.range, lo, hi) || lo < 1 || hi < lo) {
    std::cerr << "error: range must look like 1..4 with 1 <= lo <= hi\n";
    return kExitUsage;
  }
  if (hi > kSweepLimit && !o.force) {
    std::cerr << "error: N > " << kSweepLimit << " needs --force\n";
    return kExitUsage;
  }
  struct Case {
    int n;
    std::string omega;
    std::string line;
    bool pass = false;
  };
  std::vector<Case> cases;
  for (int n = lo; n <= hi; ++n)
    for (auto& w : sign_vectors(n)) cases.push_back({n, w, "", false});

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
      Case& c = cases[i];
      int pass = 0;
      Owned line;
      const ckcoh_status s =
          ckcoh_verify(o.family.c_str(), c.n, c.omega.c_str(), CKCOH_TEXT, &pass, line.slot());
      c.pass = s == CKCOH_OK && pass == 1;
      c.line = s == CKCOH_OK ? line.str()
                             : "FAIL " + o.family + " " + std::to_string(c.n) + " (" + c.omega +
                                   ") error: " + ckcoh_last_error();
    }
  };
  const unsigned threads = std::min<std::size_t>(thread_count(), cases.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::string text;
  int passed = 0;
  for (const auto& c : cases) {
    text += c.line + "\n";
    passed += c.pass ? 1 : 0;
  }
  const int failed = static_cast<int>(cases.size()) - passed;
  text += std::to_string(passed) + " PASS, " + std::to_string(failed) + " FAIL\n";
  emit(o, text);
  return failed == 0 ? kExitOk : kExitMismatch;
}

int exit_code_for(ckcoh_status s) {
  switch (s) {
    case CKCOH_INVALID_ARGUMENT:
    case CKCOH_LENGTH_MISMATCH:
    case CKCOH_PARSE:
    case CKCOH_CONSTRAINT:
      return kExitUsage;
    default:
      return kExitMismatch;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact second cohomology of Cayley-Klein unitary algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ckcoh_version()));
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "Write output to PATH instead of stdout");
  };
  auto add_case = [&](CLI::App* sub, bool required) {
    sub->add_option("family", o.family, "su or u")->check(CLI::IsMember({"su", "u"}))->required(required);
    sub->add_option("N", o.n, "Number of omega parameters")->check(CLI::PositiveNumber)->required(required);
    sub->add_option("omega", o.omega, "Comma separated: + - 0 or rationals p/q")->required(required);
    add_common(sub);
  };

  auto* algebra = app.add_subcommand("algebra", "Structure constants and Jacobi check");
  add_case(algebra, false);
  algebra->add_option("--input", o.input, "Read an algebra file instead of building one");
  auto* h2 = app.add_subcommand("h2", "Second cohomology with representatives");
  add_case(h2, false);
  h2->add_option("--input", o.input, "Read an algebra file instead of building one");
  auto* classify = app.add_subcommand("classify", "Type I/II/III classification");
  add_case(classify, true);
  auto* rep = app.add_subcommand("rep", "Fundamental matrices and their fidelity check");
  add_case(rep, true);
  auto* contract = app.add_subcommand("contract", "Effect of sending omega_k to zero");
  add_case(contract, true);
  contract->add_option("--k", o.k, "Index of the contracted parameter")->required();
  auto* table = app.add_subcommand("table", "Extension table over all sign vectors");
  table->add_option("family", o.family, "su or u")->check(CLI::IsMember({"su", "u"}))->required();
  table->add_option("N", o.n, "Number of omega parameters")->check(CLI::PositiveNumber)->required();
  table->add_option("--golden", o.golden, "Compare byte-exactly with this file");
  add_common(table);
  auto* sweep = app.add_subcommand("sweep", "Check the classification for all sign vectors");
  sweep->add_option("family", o.family, "su or u")->check(CLI::IsMember({"su", "u"}))->required();
  sweep->add_option("range", o.range, "N or lo..hi")->required();
  sweep->add_flag("--force", o.force, "Allow N above the default limit");
  sweep->add_option("--out", o.out, "Write output to PATH instead of stdout");

  // A sign list such as "-,+" or a lone "-" would otherwise be read as an
  // option; U+2212 is accepted by the omega parser as the same sign.
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string a = argv[i];
    if (a == "-" || a.rfind("-,", 0) == 0) a = "\u2212" + a.substr(1);
    args.push_back(std::move(a));
  }

  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (auto* sub : {algebra, h2}) {
    if (sub->parsed() && o.input.empty() && (o.family.empty() || o.n == 0 || o.omega.empty())) {
      std::cerr << "error: give family, N and omega, or --input PATH\n";
      return kExitUsage;
    }
  }

  try {
    if (algebra->parsed()) return cmd_algebra(o);
    if (h2->parsed()) return cmd_h2(o);
    if (classify->parsed()) return cmd_classify(o);
    if (rep->parsed()) return cmd_rep(o);
    if (contract->parsed()) return cmd_contract(o);
    if (table->parsed()) return cmd_table(o);
    if (sweep->parsed()) return cmd_sweep(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << ckcoh_status_name(f.status) << ": " << ckcoh_last_error() << '\n';
    return exit_code_for(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
