#include "qf2/textio.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace qf2 {
namespace {

// Next non-blank line, trimmed; blank lines between items are insignificant.
std::string next_line(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    std::size_t e = line.find_last_not_of(" \t\r");
    if (e == std::string::npos) continue;
    std::size_t b = line.find_first_not_of(" \t");
    return line.substr(b, e - b + 1);
  }
  throw ParseError("unexpected end of input");
}

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != s.size()) throw ParseError("expected an integer, got '" + s + "'");
  return v;
}

BitVec parse_row(const std::string& s, int n) {
  if (int(s.size()) != n)
    throw ParseError("expected a 0/1 row of length " + std::to_string(n) +
                     ", got '" + s + "'");
  BitVec v(0, n);
  for (int i = 0; i < n; ++i) {
    if (s[i] != '0' && s[i] != '1')
      throw ParseError("expected a 0/1 row, got '" + s + "'");
    v.set(i, s[i] == '1');
  }
  return v;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

QuadSpace parse_descriptor(const std::string& text) {
  QuadSpace acc;
  std::stringstream ss(text);
  std::string token;
  bool any = false;
  while (std::getline(ss, token, '+')) {
    any = true;
    token = trim(token);
    std::string base = token;
    int rep = 1;
    if (std::size_t caret = token.find('^'); caret != std::string::npos) {
      base = trim(token.substr(0, caret));
      rep = parse_int(trim(token.substr(caret + 1)));
      if (rep < 0) throw ParseError("negative repetition in '" + token + "'");
    }
    QuadSpace block;
    if (base == "H0") block = standard_h0();
    else if (base == "H1") block = standard_h1();
    else if (base == "x0") block = standard_point(false);
    else if (base == "x1") block = standard_point(true);
    else if (base == "0") block = QuadSpace();
    else throw ParseError("unknown block '" + base + "' in descriptor");
    for (int i = 0; i < rep; ++i) acc = orthogonal_sum(acc, block);
  }
  if (!any) throw ParseError("empty space descriptor");
  return acc;
}

void write_space(std::ostream& os, const QuadSpace& s) {
  os << s.dim << '\n';
  for (int i = 0; i < s.dim; ++i) os << s.gram.row_vec(i).str() << '\n';
  if (s.dim > 0) os << s.diag.str() << '\n';
}

QuadSpace read_space(std::istream& is) {
  int dim = parse_int(next_line(is));
  if (dim < 0 || dim > kMaxDim) throw ParseError("dimension out of range");
  std::vector<BitVec> rows;
  for (int i = 0; i < dim; ++i) rows.push_back(parse_row(next_line(is), dim));
  BitVec diag(0, dim);
  if (dim > 0) diag = parse_row(next_line(is), dim);
  try {
    return QuadSpace(BitMatrix::from_rows(rows, dim), diag);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid quadratic space: ") + e.what());
  }
}

void write_span(std::ostream& os, const SpanMorphism& s) {
  write_space(os, s.dom);
  write_space(os, s.cod);
  os << s.rel.dim() << '\n';
  for (const BitVec& r : s.rel.basis()) os << r.str() << '\n';
}

SpanMorphism read_span(std::istream& is) {
  QuadSpace dom = read_space(is);
  QuadSpace cod = read_space(is);
  int k = parse_int(next_line(is));
  if (k < 0 || k > dom.dim + cod.dim) throw ParseError("relation rank out of range");
  std::vector<BitVec> rows;
  for (int i = 0; i < k; ++i)
    rows.push_back(parse_row(next_line(is), dom.dim + cod.dim));
  try {
    return SpanMorphism(dom, cod,
                        Subspace::from_spanning(rows, dom.dim + cod.dim));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid span relation: ") + e.what());
  }
}

void write_cospan(std::ostream& os, const Cospan& t) {
  write_space(os, t.dom);
  write_space(os, t.cod);
  write_space(os, t.apex);
  if (t.dom.dim > 0)
    for (int i = 0; i < t.apex.dim; ++i) os << t.left.mat.row_vec(i).str() << '\n';
  if (t.cod.dim > 0)
    for (int i = 0; i < t.apex.dim; ++i) os << t.right.mat.row_vec(i).str() << '\n';
}

Cospan read_cospan(std::istream& is) {
  QuadSpace dom = read_space(is);
  QuadSpace cod = read_space(is);
  QuadSpace apex = read_space(is);
  std::vector<BitVec> lrows(apex.dim, BitVec(0, dom.dim));
  std::vector<BitVec> rrows(apex.dim, BitVec(0, cod.dim));
  if (dom.dim > 0)
    for (int i = 0; i < apex.dim; ++i) lrows[i] = parse_row(next_line(is), dom.dim);
  if (cod.dim > 0)
    for (int i = 0; i < apex.dim; ++i) rrows[i] = parse_row(next_line(is), cod.dim);
  try {
    return Cospan(dom, cod, apex,
                  QuadMap(dom, apex, BitMatrix::from_rows(lrows, dom.dim)),
                  QuadMap(cod, apex, BitMatrix::from_rows(rrows, cod.dim)));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid cospan: ") + e.what());
  }
}

QuadSpace load_space_arg(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::exists(arg, ec)) {
    std::ifstream f(arg);
    if (!f) throw ParseError("cannot open '" + arg + "'");
    return read_space(f);
  }
  return parse_descriptor(arg);
}

}  // namespace qf2
