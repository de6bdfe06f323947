#include "ttstar/construction.hpp"

#include <cassert>

namespace ttstar {

struct Construction::Node {
  Kind kind;
  // Constant / Variable
  Constant constant;
  Variable variable;
  // Application
  Construction head;
  std::vector<Construction> args;
  // Lambda
  std::vector<Variable> binders;
  // Lambda body / acquisition body
  Construction body;
};

Construction Construction::constant(std::string name, Ty ty) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->constant = Constant{std::move(name), std::move(ty)};
  Construction c;
  c.node_ = std::move(n);
  return c;
}

Construction Construction::variable(Variable v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->variable = std::move(v);
  Construction c;
  c.node_ = std::move(n);
  return c;
}

Construction Construction::application(Construction head,
                                       std::vector<Construction> args) {
  assert(!args.empty());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Application;
  n->head = std::move(head);
  n->args = std::move(args);
  Construction c;
  c.node_ = std::move(n);
  return c;
}

Construction Construction::lambda(std::vector<Variable> binders,
                                  Construction body) {
  assert(!binders.empty());
  for (size_t i = 0; i < binders.size(); ++i)
    for (size_t j = i + 1; j < binders.size(); ++j)
      assert(binders[i].name != binders[j].name && "binders must be distinct");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lambda;
  n->binders = std::move(binders);
  n->body = std::move(body);
  Construction c;
  c.node_ = std::move(n);
  return c;
}

Construction Construction::acquisition(Construction body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Acquisition;
  n->body = std::move(body);
  Construction c;
  c.node_ = std::move(n);
  return c;
}

Construction::Kind Construction::kind() const {
  assert(node_);
  return node_->kind;
}

const Constant& Construction::as_constant() const { return node_->constant; }
const Variable& Construction::as_variable() const { return node_->variable; }
const Construction& Construction::app_head() const { return node_->head; }
const std::vector<Construction>& Construction::app_args() const {
  return node_->args;
}
const std::vector<Variable>& Construction::lambda_binders() const {
  return node_->binders;
}
const Construction& Construction::lambda_body() const { return node_->body; }
const Construction& Construction::acq_body() const { return node_->body; }

bool Construction::operator==(const Construction& o) const {
  return (*this <=> o) == std::strong_ordering::equal;
}

std::strong_ordering Construction::operator<=>(const Construction& o) const {
  if (node_ == o.node_) return std::strong_ordering::equal;
  if (!node_ || !o.node_)
    return (node_ ? 1 : 0) <=> (o.node_ ? 1 : 0);
  if (auto c = kind() <=> o.kind(); c != 0) return c;
  switch (kind()) {
    case Kind::Constant: {
      if (auto c = as_constant().name <=> o.as_constant().name; c != 0)
        return c;
      return as_constant().ty <=> o.as_constant().ty;
    }
    case Kind::Variable:
      return as_variable() <=> o.as_variable();
    case Kind::Application: {
      if (auto c = app_head() <=> o.app_head(); c != 0) return c;
      const auto& a = app_args();
      const auto& b = o.app_args();
      if (auto c = a.size() <=> b.size(); c != 0) return c;
      for (size_t i = 0; i < a.size(); ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
      return std::strong_ordering::equal;
    }
    case Kind::Lambda: {
      const auto& a = lambda_binders();
      const auto& b = o.lambda_binders();
      if (auto c = a.size() <=> b.size(); c != 0) return c;
      for (size_t i = 0; i < a.size(); ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
      return lambda_body() <=> o.lambda_body();
    }
    case Kind::Acquisition:
      return acq_body() <=> o.acq_body();
  }
  return std::strong_ordering::equal;
}

namespace {

void collect_free(const Construction& c, std::set<std::string>& bound,
                  std::set<Variable>& out) {
  switch (c.kind()) {
    case Construction::Kind::Constant:
      return;
    case Construction::Kind::Variable:
      if (!bound.count(c.as_variable().name)) out.insert(c.as_variable());
      return;
    case Construction::Kind::Application:
      collect_free(c.app_head(), bound, out);
      for (const auto& a : c.app_args()) collect_free(a, bound, out);
      return;
    case Construction::Kind::Lambda: {
      std::vector<std::string> added;
      for (const auto& b : c.lambda_binders())
        if (bound.insert(b.name).second) added.push_back(b.name);
      collect_free(c.lambda_body(), bound, out);
      for (const auto& n : added) bound.erase(n);
      return;
    }
    case Construction::Kind::Acquisition:
      return;  // opaque
  }
}

void collect_sub(const Construction& c, std::vector<Construction>& out) {
  out.push_back(c);
  switch (c.kind()) {
    case Construction::Kind::Application:
      collect_sub(c.app_head(), out);
      for (const auto& a : c.app_args()) collect_sub(a, out);
      return;
    case Construction::Kind::Lambda:
      collect_sub(c.lambda_body(), out);
      return;
    case Construction::Kind::Acquisition:
      collect_sub(c.acq_body(), out);
      return;
    default:
      return;
  }
}

void collect_occ(const Construction& c, std::vector<int>& path, bool in_acq,
                 std::set<std::string>& bound, std::vector<VarOccurrence>& out) {
  switch (c.kind()) {
    case Construction::Kind::Constant:
      return;
    case Construction::Kind::Variable:
      out.push_back(VarOccurrence{
          c.as_variable(), path, in_acq || bound.count(c.as_variable().name) > 0});
      return;
    case Construction::Kind::Application: {
      path.push_back(0);
      collect_occ(c.app_head(), path, in_acq, bound, out);
      path.pop_back();
      for (size_t i = 0; i < c.app_args().size(); ++i) {
        path.push_back(static_cast<int>(i + 1));
        collect_occ(c.app_args()[i], path, in_acq, bound, out);
        path.pop_back();
      }
      return;
    }
    case Construction::Kind::Lambda: {
      std::vector<std::string> added;
      for (const auto& b : c.lambda_binders())
        if (bound.insert(b.name).second) added.push_back(b.name);
      path.push_back(0);
      collect_occ(c.lambda_body(), path, in_acq, bound, out);
      path.pop_back();
      for (const auto& n : added) bound.erase(n);
      return;
    }
    case Construction::Kind::Acquisition:
      path.push_back(0);
      collect_occ(c.acq_body(), path, true, bound, out);
      path.pop_back();
      return;
  }
}

}  // namespace

std::set<Variable> free_vars(const Construction& c) {
  std::set<Variable> out;
  std::set<std::string> bound;
  collect_free(c, bound, out);
  return out;
}

bool is_free_in(const Variable& x, const Construction& c) {
  for (const auto& v : free_vars(c))
    if (v.name == x.name) return true;
  return false;
}

std::vector<Construction> subconstructions(const Construction& c) {
  std::vector<Construction> out;
  collect_sub(c, out);
  return out;
}

std::vector<VarOccurrence> occurrences(const Construction& c) {
  std::vector<VarOccurrence> out;
  std::vector<int> path;
  std::set<std::string> bound;
  collect_occ(c, path, false, bound, out);
  return out;
}

}  // namespace ttstar
