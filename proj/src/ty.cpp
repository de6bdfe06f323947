#include "ttstar/ty.hpp"

#include <algorithm>
#include <cassert>

namespace ttstar {

struct Ty::Node {
  Kind kind = Kind::None;
  BaseTy base = BaseTy::Iota;
  std::vector<Ty> args;
  Ty result;
  int order = 0;  // for Constr
};

Ty Ty::base(BaseTy b) {
  Ty t;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Base;
  n->base = b;
  t.node_ = std::move(n);
  return t;
}

Ty Ty::fun(std::vector<Ty> args, Ty result) {
  assert(!args.empty());
  Ty t;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Fun;
  n->args = std::move(args);
  n->result = std::move(result);
  t.node_ = std::move(n);
  return t;
}

Ty Ty::constr(int order) {
  assert(order >= 1);
  Ty t;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constr;
  n->order = order;
  t.node_ = std::move(n);
  return t;
}

Ty::Kind Ty::kind() const { return node_ ? node_->kind : Kind::None; }
BaseTy Ty::base_kind() const { return node_->base; }
const std::vector<Ty>& Ty::fun_args() const { return node_->args; }
const Ty& Ty::fun_result() const { return node_->result; }
int Ty::constr_order() const { return node_->order; }

bool Ty::operator==(const Ty& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

std::strong_ordering Ty::operator<=>(const Ty& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  if (auto c = kind() <=> other.kind(); c != 0) return c;
  switch (kind()) {
    case Kind::None:
      return std::strong_ordering::equal;
    case Kind::Base:
      return base_kind() <=> other.base_kind();
    case Kind::Constr:
      return constr_order() <=> other.constr_order();
    case Kind::Fun: {
      const auto& a = fun_args();
      const auto& b = other.fun_args();
      if (auto c = a.size() <=> b.size(); c != 0) return c;
      for (size_t i = 0; i < a.size(); ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
      return fun_result() <=> other.fun_result();
    }
  }
  return std::strong_ordering::equal;
}

int order_of_type(const Ty& t) {
  switch (t.kind()) {
    case Ty::Kind::Base:
      return 1;
    case Ty::Kind::Constr:
      return t.constr_order() + 1;
    case Ty::Kind::Fun: {
      int m = order_of_type(t.fun_result());
      for (const auto& a : t.fun_args()) m = std::max(m, order_of_type(a));
      return m;
    }
    case Ty::Kind::None:
      break;
  }
  assert(false && "order of unresolved type");
  return 0;
}

bool ty_accepts(const Ty& required, const Ty& actual) {
  if (required == actual) return true;
  if (required.is_constr() && actual.is_constr())
    return actual.constr_order() <= required.constr_order();
  return false;
}

bool ty_match_compatible(const Ty& a, const Ty& b) {
  return a == b || (a.is_constr() && b.is_constr());
}

std::string print(const Ty& t) {
  switch (t.kind()) {
    case Ty::Kind::None:
      return "?";
    case Ty::Kind::Base:
      switch (t.base_kind()) {
        case BaseTy::Iota: return "i";
        case BaseTy::O: return "o";
        case BaseTy::Nu: return "nu";
        case BaseTy::Omega: return "omega";
      }
      return "?";
    case Ty::Kind::Constr:
      return "*" + std::to_string(t.constr_order());
    case Ty::Kind::Fun: {
      std::string s = "(";
      for (size_t i = 0; i < t.fun_args().size(); ++i) {
        if (i) s += ",";
        s += print(t.fun_args()[i]);
      }
      s += ")->";
      s += print(t.fun_result());
      return s;
    }
  }
  return "?";
}

}  // namespace ttstar
