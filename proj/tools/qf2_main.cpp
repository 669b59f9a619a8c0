#include <array>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qf2/textio.hpp"
#include "qf2/verify.hpp"

using nlohmann::ordered_json;
using namespace qf2;

namespace {

// Exit codes: 0 success, 1 theorem violation, 2 usage or parse error,
// 3 enumeration bound exceeded.
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

struct Options {
  int bound = kDefaultSpanBound;
  std::string format = "text";
  std::uint64_t seed = 12345;
};

bool json_mode(const Options& o) { return o.format == "json-lines"; }

std::string matrix_rows(const BitMatrix& m) {
  std::string s;
  for (int i = 0; i < m.rows; ++i) {
    if (i) s += ',';
    s += m.row_vec(i).str();
  }
  return s;
}

// Matrix argument: a file with one 0/1 row per line, or rows inline joined
// by commas. Shape is fixed by the surrounding spaces.
BitMatrix load_matrix_arg(const std::string& arg, int rows, int cols) {
  std::vector<std::string> parts;
  std::error_code ec;
  if (std::filesystem::exists(arg, ec)) {
    std::ifstream f(arg);
    std::string line;
    while (std::getline(f, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) parts.push_back(line);
    }
  } else {
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) parts.push_back(tok);
  }
  if (int(parts.size()) != rows)
    throw ParseError("expected " + std::to_string(rows) + " matrix rows, got " +
                     std::to_string(parts.size()));
  BitMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (int(parts[i].size()) != cols)
      throw ParseError("matrix row '" + parts[i] + "' is not " +
                       std::to_string(cols) + " wide");
    for (int j = 0; j < cols; ++j) {
      if (parts[i][j] != '0' && parts[i][j] != '1')
        throw ParseError("matrix row '" + parts[i] + "' is not binary");
      m.set(i, j, parts[i][j] == '1');
    }
  }
  return m;
}

template <typename T>
T load_block(const std::string& path, T (*reader)(std::istream&), const char* what) {
  std::ifstream f(path);
  if (!f) throw ParseError(std::string("cannot open ") + what + " file '" + path + "'");
  return reader(f);
}

int cmd_classify(const std::vector<std::string>& args, const Options& opt) {
  for (const std::string& a : args) {
    std::string cls = iso_class(load_space_arg(a)).str();
    if (json_mode(opt))
      std::cout << ordered_json{{"space", a}, {"class", cls}}.dump() << '\n';
    else
      std::cout << cls << '\n';
  }
  return 0;
}

int cmd_enum_homs(const std::string& a, const std::string& b, const Options& opt) {
  QuadSpace dom = load_space_arg(a), cod = load_space_arg(b);
  std::vector<QuadMap> homs = enumerate_homs(dom, cod, Exec::parallel, opt.bound);
  if (json_mode(opt)) {
    std::cout << ordered_json{{"count", homs.size()}}.dump() << '\n';
    for (std::size_t i = 0; i < homs.size(); ++i)
      std::cout << ordered_json{{"index", i}, {"matrix", matrix_rows(homs[i].mat)}}
                       .dump()
                << '\n';
  } else {
    std::cout << "count " << homs.size() << '\n';
    for (const QuadMap& h : homs) std::cout << matrix_rows(h.mat) << '\n';
  }
  return 0;
}

int cmd_orth_group(const std::string& a, const Options& opt) {
  return cmd_enum_homs(a, a, opt);
}

int cmd_compose_span(const std::string& a, const std::string& b) {
  SpanMorphism s1 = load_block(a, read_span, "span");
  SpanMorphism s2 = load_block(b, read_span, "span");
  write_span(std::cout, compose_spans(s1, s2));
  return 0;
}

int cmd_compose_cospan(const std::string& a, const std::string& b) {
  Cospan t1 = load_block(a, read_cospan, "cospan");
  Cospan t2 = load_block(b, read_cospan, "cospan");
  write_cospan(std::cout, compose_cospans(t1, t2));
  return 0;
}

int cmd_epsilon_lift(const std::string& va, const std::string& wa,
                     const std::string& ma, bool shrink) {
  QuadSpace v = load_space_arg(va), w = load_space_arg(wa);
  BitMatrix f = load_matrix_arg(ma, w.dim, v.dim);
  Cospan t = epsilon_lift(f, v, w, shrink);
  if (!(epsilon(t) == f)) throw std::logic_error("lift failed to project back");
  write_cospan(std::cout, t);
  return 0;
}

int cmd_sigma_lift(const std::string& a) {
  SpanMorphism s = load_block(a, read_span, "span");
  Cospan t = sigma_lift(s);
  if (!(sigma(t) == s)) throw std::logic_error("lift failed to project back");
  write_cospan(std::cout, t);
  return 0;
}

int cmd_iso_table(const Options& opt) {
  std::vector<QuadSpace> objs = {QuadSpace(), standard_point(false),
                                 standard_point(true), standard_h0(), standard_h1()};
  std::vector<std::string> names;
  for (const QuadSpace& s : objs) names.push_back(iso_class(s).str());
  const int n = int(objs.size());

  std::vector<std::array<int, 3>> dims;  // per (v, x): dim Q, dim iso, dim K
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FunctorValue q = eval_functor(FunctorId::linearization, objs[i], objs[j],
                                    Exec::parallel, opt.bound);
      int full = 0;
      for (const SpanMorphism& s : q.basis)
        if (s.rel.dim() == objs[i].dim) ++full;
      dims.push_back({int(q.basis.size()), full, int(q.basis.size()) - full});
    }
  std::vector<int> hom(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      hom[i * n + j] = hom_iso_dim(objs[i], objs[j], Exec::parallel, opt.bound);

  if (json_mode(opt)) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        std::cout << ordered_json{{"v", names[i]},
                                  {"x", names[j]},
                                  {"dim_q", dims[i * n + j][0]},
                                  {"dim_iso", dims[i * n + j][1]},
                                  {"dim_k", dims[i * n + j][2]}}
                         .dump()
                  << '\n';
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        std::cout << ordered_json{{"v", names[i]},
                                  {"w", names[j]},
                                  {"hom_iso_dim", hom[i * n + j]}}
                         .dump()
                  << '\n';
    return 0;
  }
  std::cout << "value dimensions (rows: indexing space, argument; columns: "
               "linearization, quotient, kernel)\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      std::cout << std::left << std::setw(6) << names[i] << std::setw(6)
                << names[j] << std::right << std::setw(5) << dims[i * n + j][0]
                << std::setw(5) << dims[i * n + j][1] << std::setw(5)
                << dims[i * n + j][2] << '\n';
  std::cout << "\nhom dimensions between the quotient functors\n";
  std::cout << std::left << std::setw(6) << "";
  for (int j = 0; j < n; ++j) std::cout << std::right << std::setw(5) << names[j];
  std::cout << '\n';
  for (int i = 0; i < n; ++i) {
    std::cout << std::left << std::setw(6) << names[i];
    for (int j = 0; j < n; ++j)
      std::cout << std::right << std::setw(5) << hom[i * n + j];
    std::cout << '\n';
  }
  return 0;
}

int cmd_verify(const Options& opt, const std::string& only, bool list) {
  if (list) {
    for (const std::string& s : suite_names()) std::cout << s << '\n';
    return 0;
  }
  VerifyOptions vopt;
  vopt.seed = opt.seed;
  vopt.span_bound = opt.bound;
  vopt.apex_bound = opt.bound + 2;
  std::vector<SuiteResult> results;
  if (only.empty()) {
    results = run_all(vopt);
  } else {
    results.push_back(run_suite(only, vopt));
  }
  bool all_pass = true;
  for (const SuiteResult& r : results) {
    all_pass = all_pass && r.passed;
    if (json_mode(opt)) {
      for (const CaseResult& c : r.cases)
        std::cout << ordered_json{{"suite", r.suite},
                                  {"case", c.name},
                                  {"expected", c.expected},
                                  {"actual", c.actual},
                                  {"status", c.passed ? "pass" : "fail"}}
                         .dump()
                  << '\n';
    } else {
      std::cout << "suite " << r.suite << ": " << (r.passed ? "pass" : "FAIL")
                << " (" << r.cases.size() << " cases)\n";
      for (const CaseResult& c : r.cases)
        if (!c.passed)
          std::cout << "  case " << c.name << ": expected " << c.expected
                    << ", got " << c.actual << '\n';
    }
  }
  if (!json_mode(opt)) {
    int passed = 0;
    for (const SuiteResult& r : results) passed += r.passed;
    std::cout << "summary: " << passed << "/" << results.size()
              << " suites passed\n";
  }
  return all_pass ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with quadratic spaces over F2: "
               "classification, span/cospan composition, lifts, and the "
               "structural verification suites"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--bound", opt.bound, "enumeration bound (total ambient dimension)")
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for the randomized suites")
      ->capture_default_str();

  std::vector<std::string> spaces;
  auto* classify = app.add_subcommand("classify", "isometry class of each space");
  classify->add_option("space", spaces, "space file or descriptor like H0+x1")
      ->required();

  std::string arg_a, arg_b, arg_mat, arg_suite;
  auto* enum_homs = app.add_subcommand("enum-homs", "all morphisms dom -> cod");
  enum_homs->add_option("dom", arg_a)->required();
  enum_homs->add_option("cod", arg_b)->required();

  auto* orth = app.add_subcommand("orth-group", "isometry group of a space");
  orth->add_option("space", arg_a)->required();

  auto* cspan = app.add_subcommand("compose-span", "compose two span files");
  cspan->add_option("first", arg_a)->required();
  cspan->add_option("second", arg_b)->required();

  auto* ccospan = app.add_subcommand("compose-cospan", "compose two cospan files");
  ccospan->add_option("first", arg_a)->required();
  ccospan->add_option("second", arg_b)->required();

  bool shrink = false;
  auto* elift = app.add_subcommand(
      "epsilon-lift", "cospan projecting to a given linear map");
  elift->add_option("dom", arg_a)->required();
  elift->add_option("cod", arg_b)->required();
  elift->add_option("matrix", arg_mat, "cod.dim rows of width dom.dim")->required();
  elift->add_flag("--shrink", shrink, "corestrict the apex afterwards");

  auto* slift = app.add_subcommand(
      "sigma-lift", "cospan whose fibre product is a given span");
  slift->add_option("span", arg_a)->required();

  app.add_subcommand("iso-table",
                     "value dimensions and hom matrix of the quotient functors");

  bool list_suites = false;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", arg_suite, "run a single suite by name");
  verify->add_flag("--list", list_suites, "list suite names and exit");

  // global flags may follow the subcommand name
  for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(spaces, opt);
    if (enum_homs->parsed()) return cmd_enum_homs(arg_a, arg_b, opt);
    if (orth->parsed()) return cmd_orth_group(arg_a, opt);
    if (cspan->parsed()) return cmd_compose_span(arg_a, arg_b);
    if (ccospan->parsed()) return cmd_compose_cospan(arg_a, arg_b);
    if (elift->parsed()) return cmd_epsilon_lift(arg_a, arg_b, arg_mat, shrink);
    if (slift->parsed()) return cmd_sigma_lift(arg_a);
    if (app.get_subcommand("iso-table")->parsed()) return cmd_iso_table(opt);
    if (verify->parsed()) return cmd_verify(opt, arg_suite, list_suites);
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const BoundError& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return kExitBound;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kExitViolation;
  }
}
