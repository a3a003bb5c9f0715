#include "frobkit/algebra_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace frobkit {
namespace {

constexpr int kMaxDepth = 16;

struct Line {
  int number;
  std::string text;
};

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Tokens of a linear combination or polynomial: numbers, labels, + - * ^.
struct Tok {
  enum Kind { Num, Label, Op } kind;
  std::string text;
};

class Reader {
 public:
  Reader(std::string origin, FieldSpec field) : origin_(std::move(origin)), field_(field) {}

  [[noreturn]] void fail(int line, const std::string& msg) const { throw AlgebraFileError(origin_, line, msg); }

  std::vector<Tok> tokenize(int line, const std::string& s) const {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < s.size()) {
      const char c = s[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i < s.size() && s[i] == '/') {
          ++i;
          if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail(line, "malformed rational");
          while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        }
        if (i < s.size() && (s[i] == '.' || s[i] == 'e' || s[i] == 'E'))
          fail(line, "decimal literals are not accepted; write p/q");
        out.push_back({Tok::Num, s.substr(b, i - b)});
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t b = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        out.push_back({Tok::Label, s.substr(b, i - b)});
      } else if (c == '+' || c == '-' || c == '*' || c == '^') {
        out.push_back({Tok::Op, std::string(1, c)});
        ++i;
      } else if (c == '.') {
        fail(line, "decimal literals are not accepted; write p/q");
      } else {
        fail(line, std::string("unexpected character '") + c + "'");
      }
    }
    return out;
  }

  mpq_class number(int line, const std::string& text) const {
    try {
      return Scalar::parse(field_, text).raw();
    } catch (const Error& e) {
      fail(line, e.what());
    }
  }

  // Signed terms: (coefficient, label or empty, exponent).
  struct Term {
    mpq_class coeff;
    std::string label;
    int power = 0;
  };

  std::vector<Term> terms(int line, const std::string& s, bool allow_power) const {
    std::vector<Tok> t = tokenize(line, s);
    if (t.empty()) fail(line, "empty expression");
    std::vector<Term> out;
    std::size_t i = 0;
    while (i < t.size()) {
      bool neg = false;
      bool signed_ = false;
      while (i < t.size() && t[i].kind == Tok::Op && (t[i].text == "+" || t[i].text == "-")) {
        neg ^= t[i].text == "-";
        signed_ = true;
        ++i;
      }
      if (!out.empty() && !signed_) fail(line, "expected '+' or '-' between terms");
      Term term;
      term.coeff = 1;
      bool any = false;
      if (i < t.size() && t[i].kind == Tok::Num) {
        term.coeff = number(line, t[i].text);
        any = true;
        ++i;
        if (i < t.size() && t[i].kind == Tok::Op && t[i].text == "*") {
          ++i;
          if (i >= t.size() || t[i].kind != Tok::Label) fail(line, "expected a label after '*'");
        }
      }
      if (i < t.size() && t[i].kind == Tok::Label) {
        term.label = t[i].text;
        term.power = 1;
        any = true;
        ++i;
        if (i < t.size() && t[i].kind == Tok::Op && t[i].text == "^") {
          if (!allow_power) fail(line, "exponents are only allowed in univariate polynomials");
          ++i;
          if (i >= t.size() || t[i].kind != Tok::Num || t[i].text.find('/') != std::string::npos)
            fail(line, "expected an integer exponent after '^'");
          term.power = std::stoi(t[i].text);
          ++i;
        }
      }
      if (!any) fail(line, "expected a coefficient or a label");
      if (neg) term.coeff = field_.neg(field_.from_rational(term.coeff));
      out.push_back(term);
    }
    return out;
  }

  const std::string& origin() const { return origin_; }
  const FieldSpec& field() const { return field_; }

 private:
  std::string origin_;
  FieldSpec field_;
};

FieldSpec parse_field(const std::string& origin, const Line& l) {
  auto w = words(l.text);
  if (w.size() == 2 && w[1] == "Q") return FieldSpec::rationals();
  if (w.size() == 3 && w[1] == "Fp") {
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(w[2], &used);
      if (used != w[2].size()) throw std::invalid_argument("p");
    } catch (const std::exception&) {
      throw AlgebraFileError(origin, l.number, "expected a prime after 'field Fp'");
    }
    try {
      return FieldSpec::prime(p);
    } catch (const Error& e) {
      throw AlgebraFileError(origin, l.number, e.what());
    }
  }
  throw AlgebraFileError(origin, l.number, "expected 'field Q' or 'field Fp <p>'");
}

Algebra parse_univariate(const Reader& r, const Line& l) {
  const std::string rest = l.text.substr(std::string("univariate").size());
  const auto colon = rest.find(':');
  if (colon == std::string::npos) r.fail(l.number, "expected 'univariate <label> : <polynomial>'");
  auto lw = words(rest.substr(0, colon));
  if (lw.size() != 1 || !std::isalpha(static_cast<unsigned char>(lw[0][0])))
    r.fail(l.number, "expected a single variable label before ':'");
  const std::string var = lw[0];
  std::vector<mpq_class> coeffs;
  for (const auto& t : r.terms(l.number, rest.substr(colon + 1), true)) {
    if (!t.label.empty() && t.label != var) r.fail(l.number, "unknown variable '" + t.label + "'");
    if (t.power < 0 || t.power > 4096) r.fail(l.number, "exponent out of range");
    if (coeffs.size() <= static_cast<std::size_t>(t.power)) coeffs.resize(t.power + 1, mpq_class(0));
    r.field().add_to(coeffs[t.power], t.coeff);
  }
  Polynomial f(r.field(), coeffs);
  try {
    return univariate_quotient(f, var);
  } catch (const Error& e) {
    r.fail(l.number, e.what());
  }
}

Algebra parse_structure(const Reader& r, const std::vector<Line>& body, int header_line) {
  if (body.empty() || words(body[0].text).empty() || words(body[0].text)[0] != "basis")
    r.fail(body.empty() ? header_line : body[0].number, "expected 'basis 1 <l2> ...' after 'structure'");
  std::vector<std::string> labels = words(body[0].text);
  labels.erase(labels.begin());
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string& s = labels[i];
    bool ok = s == "1" || std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_';
    for (char c : s) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) r.fail(body[0].number, "invalid basis label '" + s + "'");
    if (!index.emplace(s, static_cast<int>(i)).second) r.fail(body[0].number, "duplicate basis label '" + s + "'");
  }
  auto one = index.find("1");
  if (one == index.end()) r.fail(body[0].number, "the unit must be a basis element named 1");
  const int n = static_cast<int>(labels.size());
  const int u = one->second;

  std::map<std::pair<int, int>, SparseVec> given;
  std::map<std::pair<int, int>, int> given_line;
  for (std::size_t k = 1; k < body.size(); ++k) {
    const Line& l = body[k];
    auto eq = l.text.find('=');
    auto lhs = words(l.text.substr(0, eq == std::string::npos ? l.text.size() : eq));
    if (lhs.empty() || lhs[0] != "mul") r.fail(l.number, "expected 'mul <li> <lj> = <linear combination>'");
    if (lhs.size() != 3 || eq == std::string::npos) r.fail(l.number, "expected 'mul <li> <lj> = <linear combination>'");
    auto li = index.find(lhs[1]), lj = index.find(lhs[2]);
    if (li == index.end()) r.fail(l.number, "unknown basis label '" + lhs[1] + "'");
    if (lj == index.end()) r.fail(l.number, "unknown basis label '" + lhs[2] + "'");
    const auto key = std::make_pair(li->second, lj->second);
    if (given.count(key))
      r.fail(l.number, "product " + lhs[1] + "*" + lhs[2] + " already given on line " + std::to_string(given_line[key]));
    std::map<int, mpq_class> acc;
    for (const auto& t : r.terms(l.number, l.text.substr(eq + 1), false)) {
      int idx = u;
      if (!t.label.empty()) {
        auto it = index.find(t.label);
        if (it == index.end()) r.fail(l.number, "unknown basis label '" + t.label + "'");
        idx = it->second;
      }
      r.field().add_to(acc[idx], t.coeff);
    }
    SparseVec v;
    for (auto& [i, c] : acc)
      if (sgn(c) != 0) v.push_back({i, c});
    given[key] = v;
    given_line[key] = l.number;
  }

  std::vector<SparseVec> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = given.find({i, j});
      if (it != given.end()) {
        table[i * n + j] = it->second;
      } else if (auto mirror = given.find({j, i}); mirror != given.end()) {
        table[i * n + j] = mirror->second;
      } else if (i == u) {
        table[i * n + j] = {{j, mpq_class(1)}};
      } else if (j == u) {
        table[i * n + j] = {{i, mpq_class(1)}};
      }
    }
  Vec unit(n, mpq_class(0));
  unit[u] = 1;
  std::string name = r.origin();
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  if (auto dot = name.rfind('.'); dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  try {
    return make_algebra_sparse(r.field(), labels, std::move(table), std::move(unit), name);
  } catch (const Error& e) {
    r.fail(header_line, std::string("invalid structure: ") + e.what());
  }
}

}  // namespace

Algebra parse_algebra_text(const std::string& text, const std::string& origin, const std::filesystem::path& base_dir,
                           int depth) {
  if (depth > kMaxDepth) throw AlgebraFileError(origin, 1, "tensor nesting too deep");
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    int n = 0;
    for (std::string s; std::getline(in, s);) {
      ++n;
      if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
      if (!s.empty() && s.back() == '\r') s.pop_back();
      if (words(s).empty()) continue;
      lines.push_back({n, s});
    }
  }
  if (lines.empty()) throw AlgebraFileError(origin, 1, "empty algebra file");
  if (words(lines[0].text)[0] != "field") throw AlgebraFileError(origin, lines[0].number, "expected a 'field' line first");
  const FieldSpec field = parse_field(origin, lines[0]);
  Reader r(origin, field);
  if (lines.size() < 2) r.fail(lines[0].number, "missing algebra body after the field line");
  const Line& head = lines[1];
  const std::string kw = words(head.text)[0];
  if (kw == "univariate") {
    if (lines.size() > 2) r.fail(lines[2].number, "unexpected line after univariate definition");
    return parse_univariate(r, head);
  }
  if (kw == "structure") {
    if (words(head.text).size() != 1) r.fail(head.number, "'structure' takes no arguments");
    return parse_structure(r, std::vector<Line>(lines.begin() + 2, lines.end()), head.number);
  }
  if (kw == "tensor") {
    auto w = words(head.text);
    if (w.size() != 3) r.fail(head.number, "expected 'tensor <fileA> <fileB>'");
    if (lines.size() > 2) r.fail(lines[2].number, "unexpected line after tensor definition");
    Algebra a = load_algebra_file(base_dir / w[1], depth + 1);
    Algebra b = load_algebra_file(base_dir / w[2], depth + 1);
    if (!(a.field() == field) || !(b.field() == field))
      r.fail(head.number, "tensor factors are not over " + field.name());
    return tensor_flat(a, b);
  }
  r.fail(head.number, "expected 'univariate', 'structure' or 'tensor'");
}

Algebra load_algebra_file(const std::filesystem::path& path, int depth) {
  std::ifstream in(path);
  if (!in) throw AlgebraFileError(path.string(), 0, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra_text(ss.str(), path.string(), path.parent_path(), depth);
}

}  // namespace frobkit
