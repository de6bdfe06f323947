#pragma once

#include <map>
#include <optional>
#include <string>

#include "ttstar/ty.hpp"

namespace ttstar {

// Names of the schematic builtin families. Instances carry their index in
// the canonical name, e.g. "exists[nu]", "sub[2]", "exec[o]", "triv[nu]",
// "eq[nu]".
namespace builtin {
inline constexpr const char* kExists = "exists";
inline constexpr const char* kForall = "forall";
inline constexpr const char* kSub = "sub";
inline constexpr const char* kExec = "exec";
inline constexpr const char* kTriv = "triv";
inline constexpr const char* kEq = "eq";
}  // namespace builtin

struct BuiltinRef {
  std::string family;  // one of the names above
  Ty index_ty;         // exists/forall/exec/triv/eq
  int index_n = 0;     // sub
};

// Splits a canonical indexed name like "sub[2]" or "exists[nu]". Returns
// nothing for ordinary constants.
std::optional<BuiltinRef> parse_builtin_name(const std::string& name);

std::string builtin_name(const std::string& family, const Ty& index);
std::string builtin_name_sub(int n);

// Type of a fully indexed builtin instance.
Ty builtin_type(const BuiltinRef& ref);

// Constant and variable declarations. Numerals "0", "1", ... are always
// constants of type nu; the standard signature carries the fixed logical
// and arithmetic vocabulary of the corpus.
class Signature {
 public:
  // T, F : o; neg : (o)->o; ÷ : (nu,nu)->nu; Odd : (nu)->o;
  // Improp : (*1)->o.
  static Signature standard();

  void declare_constant(const std::string& name, Ty ty);
  void declare_variable(const std::string& name, Ty ty);

  std::optional<Ty> constant_type(const std::string& name) const;
  // Declared range, or the naming convention: n* -> nu, w* -> omega,
  // o* -> o, x*/y* -> i, c<k>* -> *k.
  std::optional<Ty> variable_type(const std::string& name) const;
  bool is_declared_variable(const std::string& name) const;

  int max_order() const { return max_order_; }
  void set_max_order(int n) { max_order_ = n; }

  const std::map<std::string, Ty>& constants() const { return constants_; }
  const std::map<std::string, Ty>& variables() const { return variables_; }

 private:
  std::map<std::string, Ty> constants_;
  std::map<std::string, Ty> variables_;
  int max_order_ = 3;
};

bool is_numeral(const std::string& name);

// The convention-derived type for a variable name, if any. Used by the
// printer to decide when a binder needs an explicit annotation.
std::optional<Ty> conventional_variable_type(const std::string& name);

}  // namespace ttstar
