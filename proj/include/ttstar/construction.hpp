#pragma once

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ttstar/ty.hpp"

namespace ttstar {

// A variable together with its variability range. Occurrences carry the
// resolved type; binders are the annotation site.
struct Variable {
  std::string name;
  Ty ty;

  bool operator==(const Variable& o) const {
    return name == o.name && ty == o.ty;
  }
  std::strong_ordering operator<=>(const Variable& o) const {
    if (auto c = name <=> o.name; c != 0) return c;
    return ty <=> o.ty;
  }
};

class Construction;

struct Constant {
  std::string name;  // canonical name, index included for builtin families
  Ty ty;             // resolved during elaboration
};

// Immutable construction AST: constant, variable, application,
// lambda-abstraction, acquisition. Handles are cheap to copy and share
// structure; equality is structural (syntactic identity, no alpha).
class Construction {
 public:
  enum class Kind { Constant, Variable, Application, Lambda, Acquisition };

  Construction() = default;  // empty handle; only valid as a temporary

  static Construction constant(std::string name, Ty ty = Ty());
  static Construction variable(Variable v);
  static Construction application(Construction head,
                                  std::vector<Construction> args);
  static Construction lambda(std::vector<Variable> binders, Construction body);
  static Construction acquisition(Construction body);

  bool empty() const { return node_ == nullptr; }
  Kind kind() const;

  bool is_constant() const { return kind() == Kind::Constant; }
  bool is_variable() const { return kind() == Kind::Variable; }
  bool is_application() const { return kind() == Kind::Application; }
  bool is_lambda() const { return kind() == Kind::Lambda; }
  bool is_acquisition() const { return kind() == Kind::Acquisition; }

  const Constant& as_constant() const;
  const Variable& as_variable() const;
  const Construction& app_head() const;
  const std::vector<Construction>& app_args() const;
  const std::vector<Variable>& lambda_binders() const;
  const Construction& lambda_body() const;
  const Construction& acq_body() const;

  bool operator==(const Construction& o) const;
  std::strong_ordering operator<=>(const Construction& o) const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

// Free variables of c. Acquisition bodies never contribute: every
// occurrence under an acquisition is bound.
std::set<Variable> free_vars(const Construction& c);

bool is_free_in(const Variable& x, const Construction& c);

// Preorder enumeration of subconstructions, including c itself. Lambda
// binders are syncategorematic and not enumerated; an acquisition
// contributes its body (needed for order computation).
std::vector<Construction> subconstructions(const Construction& c);

// Bound/free classification of a single variable occurrence.
struct VarOccurrence {
  Variable variable;
  std::vector<int> path;  // child indices from the root; for applications
                          // index 0 is the head, i the i-th argument
  bool bound = false;
};

// Every variable occurrence in c with its binding status. An occurrence is
// bound iff its path passes through an acquisition or a lambda binding it.
std::vector<VarOccurrence> occurrences(const Construction& c);

}  // namespace ttstar
