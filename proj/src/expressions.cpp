#include "chaindeck/expressions.hpp"

#include <cctype>
#include <stdexcept>

#include "json.hpp"

namespace chaindeck {

namespace {

const char* fn_name(SimpleFunctionKind kind) {
  switch (kind) {
    case SimpleFunctionKind::Sin: return "sin";
    case SimpleFunctionKind::Cos: return "cos";
    case SimpleFunctionKind::Tan: return "tan";
    case SimpleFunctionKind::Sec: return "sec";
    case SimpleFunctionKind::Csc: return "csc";
    case SimpleFunctionKind::Cot: return "cot";
    case SimpleFunctionKind::Arcsin: return "arcsin";
    case SimpleFunctionKind::Arccos: return "arccos";
    case SimpleFunctionKind::Arctan: return "arctan";
    case SimpleFunctionKind::Ln: return "ln";
    default: return nullptr;
  }
}

// Superscript/subscript integers get braces only when longer than one digit.
std::string latex_script(int value) {
  std::string digits = std::to_string(value);
  return digits.size() == 1 ? digits : "{" + digits + "}";
}

std::string render(const Chain& chain, bool latex) {
  if (chain.empty()) throw std::invalid_argument("empty composition chain");
  std::string arg = "x";
  bool bare = true;  // arg is still the plain variable
  for (const SimpleFunction& f : chain) {
    switch (f.kind) {
      case SimpleFunctionKind::Power: {
        std::string exp = latex ? latex_script(f.param) : std::to_string(f.param);
        arg = (bare ? arg : "(" + arg + ")") + "^" + exp;
        break;
      }
      case SimpleFunctionKind::ExpNatural:
      case SimpleFunctionKind::ExpBase: {
        std::string base =
            f.kind == SimpleFunctionKind::ExpNatural ? "e" : std::to_string(f.param);
        if (latex)
          arg = base + "^{" + arg + "}";
        else
          arg = base + "^" + (bare ? arg : "(" + arg + ")");
        break;
      }
      case SimpleFunctionKind::LogBase: {
        std::string name = latex ? "\\log_" + latex_script(f.param)
                                 : "log_" + std::to_string(f.param);
        arg = name + (bare ? " x" : "(" + arg + ")");
        break;
      }
      default: {
        const char* name = fn_name(f.kind);
        if (!name) throw std::logic_error("unhandled simple function kind");
        std::string prefix = latex ? "\\" + std::string(name) : std::string(name);
        arg = prefix + (bare ? " x" : "(" + arg + ")");
        break;
      }
    }
    bare = false;
  }
  return arg;
}

}  // namespace

std::string render_latex(const Chain& chain) { return render(chain, true); }

std::string render_text(const Chain& chain) { return render(chain, false); }

std::string render_json(const Chain& chain) {
  if (chain.empty()) throw std::invalid_argument("empty composition chain");
  nlohmann::ordered_json node{{"var", "x"}};
  for (const SimpleFunction& f : chain) {
    nlohmann::ordered_json parent;
    switch (f.kind) {
      case SimpleFunctionKind::Power:
        parent["fn"] = "power";
        parent["exponent"] = f.param;
        break;
      case SimpleFunctionKind::ExpNatural: parent["fn"] = "exp"; break;
      case SimpleFunctionKind::ExpBase:
        parent["fn"] = "exp";
        parent["base"] = f.param;
        break;
      case SimpleFunctionKind::LogBase:
        parent["fn"] = "log";
        parent["base"] = f.param;
        break;
      default: parent["fn"] = fn_name(f.kind); break;
    }
    parent["arg"] = std::move(node);
    node = std::move(parent);
  }
  return node.dump();
}

std::string simple_function_to_text(const SimpleFunction& f) { return render_text({f}); }

SimpleFunction parse_simple_function(const std::string& text) {
  auto fail = [&]() -> SimpleFunction {
    throw std::invalid_argument("cannot parse simple function \"" + text + "\"");
  };
  auto parse_int = [&](const std::string& s, int min) {
    try {
      std::size_t used = 0;
      int value = std::stoi(s, &used);
      if (used != s.size() || value < min) return -1;
      return value;
    } catch (const std::exception&) {
      return -1;
    }
  };

  if (text == "e^x") return {SimpleFunctionKind::ExpNatural, 0};
  if (text.size() > 2 && text.compare(0, 2, "x^") == 0) {
    int p = parse_int(text.substr(2), 2);
    if (p < 0) return fail();
    return {SimpleFunctionKind::Power, p};
  }
  if (text.size() > 2 && text.compare(text.size() - 2, 2, "^x") == 0) {
    int b = parse_int(text.substr(0, text.size() - 2), 2);
    if (b < 0) return fail();
    return {SimpleFunctionKind::ExpBase, b};
  }
  if (text.size() > 2 && text.compare(text.size() - 2, 2, " x") == 0) {
    std::string name = text.substr(0, text.size() - 2);
    for (SimpleFunctionKind kind :
         {SimpleFunctionKind::Sin, SimpleFunctionKind::Cos, SimpleFunctionKind::Tan,
          SimpleFunctionKind::Sec, SimpleFunctionKind::Csc, SimpleFunctionKind::Cot,
          SimpleFunctionKind::Arcsin, SimpleFunctionKind::Arccos, SimpleFunctionKind::Arctan,
          SimpleFunctionKind::Ln})
      if (name == fn_name(kind)) return {kind, 0};
    if (name.size() > 4 && name.compare(0, 4, "log_") == 0) {
      int b = parse_int(name.substr(4), 2);
      if (b < 0) return fail();
      return {SimpleFunctionKind::LogBase, b};
    }
  }
  return fail();
}

std::string normalize_latex(const std::string& s) {
  std::string out = s;
  const std::string token = "\\displaystyle";
  for (std::size_t at = out.find(token); at != std::string::npos; at = out.find(token)) {
    std::size_t end = at + token.size();
    if (end < out.size() && out[end] == ' ') ++end;
    out.erase(at, end - at);
  }
  // ({X}) -> (X) when the braces span the entire group
  for (std::size_t i = 0; i + 1 < out.size();) {
    if (out[i] != '(' || out[i + 1] != '{') {
      ++i;
      continue;
    }
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[j] == '{') ++depth;
      if (out[j] == '}' && --depth == 0) {
        close = j;
        break;
      }
    }
    if (close != std::string::npos && close + 1 < out.size() && out[close + 1] == ')') {
      out.erase(close, 1);
      out.erase(i + 1, 1);
      i = 0;  // rescan; erasures may expose new matches
    } else {
      ++i;
    }
  }
  // optional braces around one-character scripts: ^{x} -> ^x, _{8} -> _8
  for (std::size_t i = 0; i + 3 < out.size(); ++i) {
    if ((out[i] == '^' || out[i] == '_') && out[i + 1] == '{' && out[i + 3] == '}' &&
        std::isalnum(static_cast<unsigned char>(out[i + 2]))) {
      out.erase(i + 3, 1);
      out.erase(i + 1, 1);
    }
  }
  return out;
}

}  // namespace chaindeck
