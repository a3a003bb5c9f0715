#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frobkit/kernel.hpp"

namespace frobkit {

enum class Generator { Cup, Cap, Pants, Copants, Cyl, Swap };

std::string generator_name(Generator g);
/// (in, out) boundary circle counts.
std::pair<int, int> generator_arity(Generator g);

struct BordismExpr;
using ExprPtr = std::shared_ptr<const BordismExpr>;

/// Bordism AST. Every node records its arity; constructors check it.
struct BordismExpr {
  enum class Kind { Gen, Compose, Tensor, Genus };

  Kind kind = Kind::Gen;
  Generator gen = Generator::Cyl;
  int genus = 0;
  ExprPtr left, right;
  int in = 0, out = 0;
  std::size_t position = 0;  ///< offset of the node's first token in the source

  static ExprPtr generator(Generator g, std::size_t pos = 0);
  static ExprPtr genus_macro(int g, std::size_t pos = 0);
  /// left then right; throws ArityError unless left.out == right.in.
  static ExprPtr compose(ExprPtr l, ExprPtr r, std::size_t pos = 0);
  /// top above bottom; arities add.
  static ExprPtr tensor(ExprPtr t, ExprPtr b, std::size_t pos = 0);

  bool closed() const { return in == 0 && out == 0; }
};

/// Structural equality; positions are ignored.
bool same_structure(const BordismExpr& a, const BordismExpr& b);

/// program := expr EOF
/// expr    := term (";" term)*
/// term    := atom ("|" atom)*
/// atom    := cup | cap | pants | copants | cyl | swap | genus(INT) | "(" expr ")"
/// "#" starts a comment running to the end of the line.
ExprPtr parse_bordism(const std::string& text);

/// Minimal parenthesization; parse_bordism(print_bordism(e)) is structurally e.
std::string print_bordism(const BordismExpr& e);

/// genus(g) becomes cup ; (copants ; pants)^g ; cap.
ExprPtr expand_genus(const ExprPtr& e);

struct PlanStep {
  enum class Op { Leaf, Compose, External };
  Op op = Op::Leaf;
  Generator gen = Generator::Cyl;
  int lhs = -1, rhs = -1;  ///< indices of earlier steps
  int in = 0, out = 0;
};

struct CompiledProgram {
  ExprPtr expr;  ///< genus macros expanded
  Algebra algebra;
  int cutoff = 4;
  std::vector<PlanStep> plan;  ///< topologically ordered; the last step is the result; leaves are shared
};

CompiledProgram compile_bordism(const ExprPtr& e, const Algebra& a, int cutoff);

struct Evaluation {
  Kernel kernel;
  bool closed = false;
  GradedDims dims;  ///< homology dims through the cutoff when closed
};

/// Runs the plan: leaves become generator kernels, ";" compose, "|" external.
Evaluation evaluate(const CompiledProgram& p);

}  // namespace frobkit
