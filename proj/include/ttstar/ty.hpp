#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace ttstar {

enum class BaseTy { Iota, O, Nu, Omega };

// Order-stratified type expression: base types, function types
// <t1,...,tm> -> t0, and construction types *n. Immutable value type;
// copies share the representation.
class Ty {
 public:
  enum class Kind { None, Base, Fun, Constr };

  Ty() = default;  // Kind::None, "unresolved"; only valid pre-elaboration

  static Ty base(BaseTy b);
  static Ty fun(std::vector<Ty> args, Ty result);
  static Ty constr(int order);

  static Ty iota() { return base(BaseTy::Iota); }
  static Ty o() { return base(BaseTy::O); }
  static Ty nu() { return base(BaseTy::Nu); }
  static Ty omega() { return base(BaseTy::Omega); }

  Kind kind() const;
  bool valid() const { return kind() != Kind::None; }
  BaseTy base_kind() const;                // pre: Base
  const std::vector<Ty>& fun_args() const; // pre: Fun
  const Ty& fun_result() const;            // pre: Fun
  int constr_order() const;                // pre: Constr

  bool is_base() const { return kind() == Kind::Base; }
  bool is_fun() const { return kind() == Kind::Fun; }
  bool is_constr() const { return kind() == Kind::Constr; }

  bool operator==(const Ty& other) const;
  std::strong_ordering operator<=>(const Ty& other) const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

// Minimal order per the recursive definition: bases are 1st-order,
// functions take the max of their components, *n is (n+1)st-order.
int order_of_type(const Ty& t);

// Accepts `actual` where `required` is demanded. Exact equality except for
// construction types, which are cumulative: a *m value is also a *n value
// for every n >= m.
bool ty_accepts(const Ty& required, const Ty& actual);

// Two match sides can only ever construct the same object if their types
// overlap: equal, or both construction types.
bool ty_match_compatible(const Ty& a, const Ty& b);

std::string print(const Ty& t);

}  // namespace ttstar
