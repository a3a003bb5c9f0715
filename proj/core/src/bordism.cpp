#include "frobkit/bordism.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace frobkit {

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::Cup: return "cup";
    case Generator::Cap: return "cap";
    case Generator::Pants: return "pants";
    case Generator::Copants: return "copants";
    case Generator::Cyl: return "cyl";
    case Generator::Swap: return "swap";
  }
  return "cyl";
}

std::pair<int, int> generator_arity(Generator g) {
  switch (g) {
    case Generator::Cup: return {0, 1};
    case Generator::Cap: return {1, 0};
    case Generator::Pants: return {2, 1};
    case Generator::Copants: return {1, 2};
    case Generator::Cyl: return {1, 1};
    case Generator::Swap: return {2, 2};
  }
  return {1, 1};
}

ExprPtr BordismExpr::generator(Generator g, std::size_t pos) {
  auto e = std::make_shared<BordismExpr>();
  e->kind = Kind::Gen;
  e->gen = g;
  std::tie(e->in, e->out) = generator_arity(g);
  e->position = pos;
  return e;
}

ExprPtr BordismExpr::genus_macro(int g, std::size_t pos) {
  if (g < 0) throw Error("genus must be nonnegative");
  auto e = std::make_shared<BordismExpr>();
  e->kind = Kind::Genus;
  e->genus = g;
  e->position = pos;
  return e;
}

ExprPtr BordismExpr::compose(ExprPtr l, ExprPtr r, std::size_t pos) {
  if (l->out != r->in) {
    std::string node = print_bordism(*l) + " ; " + print_bordism(*r);
    throw ArityError(node, r->in, l->out,
                     "arity mismatch in '" + node + "': left side has " + std::to_string(l->out) +
                         " outgoing circles, right side expects " + std::to_string(r->in));
  }
  auto e = std::make_shared<BordismExpr>();
  e->kind = Kind::Compose;
  e->in = l->in;
  e->out = r->out;
  e->left = std::move(l);
  e->right = std::move(r);
  e->position = pos;
  return e;
}

ExprPtr BordismExpr::tensor(ExprPtr t, ExprPtr b, std::size_t pos) {
  auto e = std::make_shared<BordismExpr>();
  e->kind = Kind::Tensor;
  e->in = t->in + b->in;
  e->out = t->out + b->out;
  e->left = std::move(t);
  e->right = std::move(b);
  e->position = pos;
  return e;
}

bool same_structure(const BordismExpr& a, const BordismExpr& b) {
  if (a.kind != b.kind || a.in != b.in || a.out != b.out) return false;
  switch (a.kind) {
    case BordismExpr::Kind::Gen: return a.gen == b.gen;
    case BordismExpr::Kind::Genus: return a.genus == b.genus;
    default: return same_structure(*a.left, *b.left) && same_structure(*a.right, *b.right);
  }
}

namespace {

enum class Tok { Ident, Int, LParen, RParen, Semi, Bar, End, Invalid };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t pos = 0;
};

const std::vector<std::string> kAtomStart = {"cup", "cap", "pants", "copants", "cyl", "swap", "genus", "("};

class Parser {
 public:
  explicit Parser(const std::string& text) : src_(text) { advance(); }

  ExprPtr program() {
    ExprPtr e = expr();
    if (tok_.kind != Tok::End) fail({";", "|", "end of input"});
    return e;
  }

 private:
  const std::string& src_;
  std::size_t at_ = 0;
  Token tok_;

  void skip_space() {
    while (at_ < src_.size()) {
      if (src_[at_] == '#') {
        while (at_ < src_.size() && src_[at_] != '\n') ++at_;
      } else if (std::isspace(static_cast<unsigned char>(src_[at_]))) {
        ++at_;
      } else {
        break;
      }
    }
  }

  void advance() {
    skip_space();
    tok_ = Token{};
    tok_.pos = at_;
    if (at_ >= src_.size()) return;
    const char c = src_[at_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t b = at_;
      while (at_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[at_]))) ++at_;
      tok_.kind = Tok::Ident;
      tok_.text = src_.substr(b, at_ - b);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = at_;
      while (at_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[at_]))) ++at_;
      tok_.kind = Tok::Int;
      tok_.text = src_.substr(b, at_ - b);
    } else {
      ++at_;
      tok_.text = std::string(1, c);
      switch (c) {
        case '(': tok_.kind = Tok::LParen; break;
        case ')': tok_.kind = Tok::RParen; break;
        case ';': tok_.kind = Tok::Semi; break;
        case '|': tok_.kind = Tok::Bar; break;
        default: tok_.kind = Tok::Invalid;
      }
    }
  }

  [[noreturn]] void fail(const std::vector<std::string>& expected) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < tok_.pos && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string list;
    for (std::size_t i = 0; i < expected.size(); ++i) list += (i ? ", " : "") + expected[i];
    const std::string found = tok_.kind == Tok::End ? "end of input" : "'" + tok_.text + "'";
    throw SyntaxError(tok_.pos, line, col, expected,
                      "line " + std::to_string(line) + ", column " + std::to_string(col) + ": expected one of " +
                          list + "; found " + found);
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (tok_.kind == Tok::Semi) {
      const std::size_t pos = tok_.pos;
      advance();
      ExprPtr r = term();
      e = BordismExpr::compose(e, r, pos);
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = atom();
    while (tok_.kind == Tok::Bar) {
      const std::size_t pos = tok_.pos;
      advance();
      e = BordismExpr::tensor(e, atom(), pos);
    }
    return e;
  }

  ExprPtr atom() {
    const std::size_t pos = tok_.pos;
    if (tok_.kind == Tok::LParen) {
      advance();
      ExprPtr e = expr();
      if (tok_.kind != Tok::RParen) fail({";", "|", ")"});
      advance();
      return e;
    }
    if (tok_.kind != Tok::Ident) fail(kAtomStart);
    static const std::map<std::string, Generator> gens = {
        {"cup", Generator::Cup}, {"cap", Generator::Cap}, {"pants", Generator::Pants},
        {"copants", Generator::Copants}, {"cyl", Generator::Cyl}, {"swap", Generator::Swap}};
    if (auto it = gens.find(tok_.text); it != gens.end()) {
      advance();
      return BordismExpr::generator(it->second, pos);
    }
    if (tok_.text != "genus") fail(kAtomStart);
    advance();
    if (tok_.kind != Tok::LParen) fail({"("});
    advance();
    if (tok_.kind != Tok::Int) fail({"INT"});
    int g = 0;
    auto [ptr, ec] = std::from_chars(tok_.text.data(), tok_.text.data() + tok_.text.size(), g);
    if (ec != std::errc() || ptr != tok_.text.data() + tok_.text.size()) fail({"INT"});
    advance();
    if (tok_.kind != Tok::RParen) fail({")"});
    advance();
    return BordismExpr::genus_macro(g, pos);
  }
};

std::string wrapped(const BordismExpr& e) { return "(" + print_bordism(e) + ")"; }

}  // namespace

ExprPtr parse_bordism(const std::string& text) { return Parser(text).program(); }

std::string print_bordism(const BordismExpr& e) {
  using K = BordismExpr::Kind;
  switch (e.kind) {
    case K::Gen: return generator_name(e.gen);
    case K::Genus: return "genus(" + std::to_string(e.genus) + ")";
    case K::Compose:
      return print_bordism(*e.left) + " ; " + (e.right->kind == K::Compose ? wrapped(*e.right) : print_bordism(*e.right));
    case K::Tensor: {
      std::string l = e.left->kind == K::Compose ? wrapped(*e.left) : print_bordism(*e.left);
      std::string r = e.right->kind == K::Compose || e.right->kind == K::Tensor ? wrapped(*e.right)
                                                                               : print_bordism(*e.right);
      return l + " | " + r;
    }
  }
  return "";
}

ExprPtr expand_genus(const ExprPtr& e) {
  using K = BordismExpr::Kind;
  switch (e->kind) {
    case K::Gen: return e;
    case K::Genus: {
      ExprPtr out = BordismExpr::generator(Generator::Cup, e->position);
      for (int i = 0; i < e->genus; ++i) {
        out = BordismExpr::compose(out, BordismExpr::generator(Generator::Copants, e->position), e->position);
        out = BordismExpr::compose(out, BordismExpr::generator(Generator::Pants, e->position), e->position);
      }
      return BordismExpr::compose(out, BordismExpr::generator(Generator::Cap, e->position), e->position);
    }
    case K::Compose: return BordismExpr::compose(expand_genus(e->left), expand_genus(e->right), e->position);
    case K::Tensor: return BordismExpr::tensor(expand_genus(e->left), expand_genus(e->right), e->position);
  }
  return e;
}

namespace {

int emit(const BordismExpr& e, std::vector<PlanStep>& plan, std::map<Generator, int>& leaves) {
  using K = BordismExpr::Kind;
  PlanStep s;
  s.in = e.in;
  s.out = e.out;
  switch (e.kind) {
    case K::Gen: {
      if (auto it = leaves.find(e.gen); it != leaves.end()) return it->second;
      s.op = PlanStep::Op::Leaf;
      s.gen = e.gen;
      plan.push_back(s);
      return leaves[e.gen] = static_cast<int>(plan.size()) - 1;
    }
    case K::Compose:
    case K::Tensor:
      s.op = e.kind == K::Compose ? PlanStep::Op::Compose : PlanStep::Op::External;
      s.lhs = emit(*e.left, plan, leaves);
      s.rhs = emit(*e.right, plan, leaves);
      plan.push_back(s);
      return static_cast<int>(plan.size()) - 1;
    case K::Genus: throw Error("genus macro must be expanded before compilation");
  }
  return -1;
}

Kernel leaf_kernel(Generator g, const Algebra& a) {
  switch (g) {
    case Generator::Cup: return unit_kernel(a);
    case Generator::Cap: return counit_kernel(a);
    case Generator::Pants: return mult_kernel(a);
    case Generator::Copants: return comult_kernel(a);
    case Generator::Cyl: return identity_kernel(a);
    case Generator::Swap: return swap_kernel(a, a);
  }
  return identity_kernel(a);
}

}  // namespace

CompiledProgram compile_bordism(const ExprPtr& e, const Algebra& a, int cutoff) {
  if (cutoff < 0) throw Error("cutoff must be nonnegative");
  CompiledProgram p;
  p.expr = expand_genus(e);
  p.algebra = a;
  p.cutoff = cutoff;
  std::map<Generator, int> leaves;
  emit(*p.expr, p.plan, leaves);
  return p;
}

Evaluation evaluate(const CompiledProgram& p) {
  std::vector<Kernel> k;
  k.reserve(p.plan.size());
  for (const PlanStep& s : p.plan) {
    switch (s.op) {
      case PlanStep::Op::Leaf: k.push_back(leaf_kernel(s.gen, p.algebra)); break;
      case PlanStep::Op::Compose: k.push_back(compose(k[s.lhs], k[s.rhs], p.cutoff)); break;
      case PlanStep::Op::External: k.push_back(external(k[s.lhs], k[s.rhs])); break;
    }
  }
  Evaluation out;
  out.kernel = k.back();
  out.closed = p.expr->closed();
  if (out.closed) out.dims = kernel_dims(out.kernel, p.cutoff);
  return out;
}

}  // namespace frobkit
