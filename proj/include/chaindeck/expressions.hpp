#pragma once

#include <compare>
#include <string>
#include <vector>

namespace chaindeck {

enum class SimpleFunctionKind {
  Power,       // x^p, p >= 2
  Sin, Cos, Tan, Sec, Csc, Cot,
  Ln,          // natural log
  LogBase,     // log_b, b >= 2
  ExpNatural,  // e^x
  ExpBase,     // b^x, b >= 2
  Arcsin, Arccos, Arctan,
};

struct SimpleFunction {
  SimpleFunctionKind kind = SimpleFunctionKind::Power;
  int param = 0;  // exponent (Power) or base (LogBase, ExpBase); unused otherwise

  auto operator<=>(const SimpleFunction&) const = default;
};

// A pure composition chain, innermost function first: {f, g, h} denotes
// h(g(f(x))).
using Chain = std::vector<SimpleFunction>;

// Rendering rules shared by LaTeX and plain text: named functions take a bare
// x without parentheses and parenthesize composite arguments; a power of a
// composite wraps it in parentheses; exponentials always superscript their
// argument. LaTeX puts braces around superscripted arguments and around
// multi-digit exponents and bases.
std::string render_latex(const Chain& chain);
std::string render_text(const Chain& chain);

// Expression tree as JSON, outermost function at the root; leaves are
// {"var":"x"}, nodes carry "fn" plus "exponent" or "base" where applicable.
std::string render_json(const Chain& chain);

// One simple function in the plain-text notation, e.g. "x^2", "sin x",
// "log_3 x", "e^x", "7^x", "arctan x".
SimpleFunction parse_simple_function(const std::string& text);
std::string simple_function_to_text(const SimpleFunction& f);

// Normalization applied before golden comparisons of LaTeX strings: drops
// \displaystyle prefixes, redundant braces that span a whole parenthesized
// group (({X}) -> (X)), and optional braces around one-character
// super/subscripts (e^{x} -> e^x).
std::string normalize_latex(const std::string& s);

}  // namespace chaindeck
