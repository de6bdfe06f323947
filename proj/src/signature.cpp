#include "ttstar/signature.hpp"

#include <cctype>

#include "ttstar/errors.hpp"

namespace ttstar {

namespace {

// Forward declaration; the type parser lives in parse.cpp.
Ty parse_index_type(const std::string& text);

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

bool is_numeral(const std::string& name) { return all_digits(name); }

std::optional<BuiltinRef> parse_builtin_name(const std::string& name) {
  auto lb = name.find('[');
  if (lb == std::string::npos || name.back() != ']') return std::nullopt;
  std::string family = name.substr(0, lb);
  std::string index = name.substr(lb + 1, name.size() - lb - 2);
  if (family == builtin::kSub) {
    if (!all_digits(index)) return std::nullopt;
    return BuiltinRef{family, Ty(), std::stoi(index)};
  }
  if (family == builtin::kExists || family == builtin::kForall ||
      family == builtin::kExec || family == builtin::kTriv ||
      family == builtin::kEq) {
    Ty t = parse_index_type(index);
    if (!t.valid()) return std::nullopt;
    return BuiltinRef{family, t, 0};
  }
  return std::nullopt;
}

std::string builtin_name(const std::string& family, const Ty& index) {
  return family + "[" + print(index) + "]";
}

std::string builtin_name_sub(int n) {
  return std::string(builtin::kSub) + "[" + std::to_string(n) + "]";
}

Ty builtin_type(const BuiltinRef& ref) {
  if (ref.family == builtin::kExists || ref.family == builtin::kForall)
    return Ty::fun({Ty::fun({ref.index_ty}, Ty::o())}, Ty::o());
  if (ref.family == builtin::kSub) {
    Ty s = Ty::constr(ref.index_n);
    return Ty::fun({s, s, s}, s);
  }
  if (ref.family == builtin::kExec) {
    // Argument order n is cumulative, so the widest accepted level is
    // immaterial for checking; instances record the level separately when
    // they are elaborated. The declared shape is (*1)->tau widened by
    // cumulativity at the call site.
    return Ty::fun({Ty::constr(1)}, ref.index_ty);
  }
  if (ref.family == builtin::kTriv)
    return Ty::fun({ref.index_ty}, Ty::constr(1));
  if (ref.family == builtin::kEq)
    return Ty::fun({ref.index_ty, ref.index_ty}, Ty::o());
  throw Error("unknown builtin family '" + ref.family + "'");
}

Signature Signature::standard() {
  Signature sig;
  sig.declare_constant("T", Ty::o());
  sig.declare_constant("F", Ty::o());
  sig.declare_constant("neg", Ty::fun({Ty::o()}, Ty::o()));
  sig.declare_constant("÷", Ty::fun({Ty::nu(), Ty::nu()}, Ty::nu()));
  sig.declare_constant("Odd", Ty::fun({Ty::nu()}, Ty::o()));
  sig.declare_constant("Improp", Ty::fun({Ty::constr(1)}, Ty::o()));
  return sig;
}

void Signature::declare_constant(const std::string& name, Ty ty) {
  constants_[name] = std::move(ty);
}

void Signature::declare_variable(const std::string& name, Ty ty) {
  variables_[name] = std::move(ty);
}

std::optional<Ty> Signature::constant_type(const std::string& name) const {
  if (is_numeral(name)) return Ty::nu();
  if (auto it = constants_.find(name); it != constants_.end())
    return it->second;
  if (auto ref = parse_builtin_name(name)) return builtin_type(*ref);
  return std::nullopt;
}

std::optional<Ty> Signature::variable_type(const std::string& name) const {
  if (auto it = variables_.find(name); it != variables_.end())
    return it->second;
  return conventional_variable_type(name);
}

bool Signature::is_declared_variable(const std::string& name) const {
  return variables_.count(name) > 0;
}

std::optional<Ty> conventional_variable_type(const std::string& name) {
  if (name.empty()) return std::nullopt;
  char c = name[0];
  if (c == 'n') return Ty::nu();
  if (c == 'w') return Ty::omega();
  if (c == 'o') return Ty::o();
  if (c == 'x' || c == 'y') return Ty::iota();
  if (c == 'c' && name.size() >= 2) {
    size_t i = 1;
    std::string digits;
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i])))
      digits += name[i++];
    // rest may be primes/letters: c1, c2, c1a
    if (!digits.empty()) return Ty::constr(std::stoi(digits));
  }
  return std::nullopt;
}

namespace {

// Local single-purpose type parser for bracket indices; the full grammar
// lives in parse.cpp but signature.cpp must not depend on it.
struct TyReader {
  const std::string& s;
  size_t i = 0;
  explicit TyReader(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::string out;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      out += s[i++];
    return out;
  }

  Ty type() {
    skip_ws();
    if (i >= s.size()) return Ty();
    if (s[i] == '*') {
      ++i;
      std::string d = ident();
      if (!is_numeral(d)) return Ty();
      return Ty::constr(std::stoi(d));
    }
    if (s[i] == '(') {
      ++i;
      std::vector<Ty> args;
      for (;;) {
        Ty a = type();
        if (!a.valid()) return Ty();
        args.push_back(a);
        if (eat(',')) continue;
        if (eat(')')) break;
        return Ty();
      }
      skip_ws();
      if (i + 1 < s.size() && s[i] == '-' && s[i + 1] == '>') {
        i += 2;
        Ty r = type();
        if (!r.valid()) return Ty();
        return Ty::fun(std::move(args), r);
      }
      // parenthesized single type
      if (args.size() == 1) return args[0];
      return Ty();
    }
    std::string name = ident();
    if (name == "o") return Ty::o();
    if (name == "i" || name == "iota") return Ty::iota();
    if (name == "nu") return Ty::nu();
    if (name == "omega" || name == "om") return Ty::omega();
    return Ty();
  }
};

Ty parse_index_type(const std::string& text) {
  TyReader r(text);
  Ty t = r.type();
  r.skip_ws();
  if (r.i != text.size()) return Ty();
  return t;
}

}  // namespace

}  // namespace ttstar
