#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace comparo {

/// Immutable formula of the comparative-likelihood language.
///
/// Primitive cases are atoms, the constants T and F, negation, conjunction
/// and the comparison `a >= b` ("a is at least as likely as b"). The
/// connectives |, ->, <-> are sugar and are expanded by the factory
/// functions below; `render` folds the expansions back for readability.
///
/// Nodes are shared, so copying a Formula is cheap and values can be handed
/// across threads freely.
class Formula {
 public:
  enum class Kind { Atom, Top, Bot, Not, And, Geq };

  static Formula atom(std::string name);
  static Formula top();
  static Formula bot();
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula geq(Formula a, Formula b);

  // Derived connectives.
  static Formula disj(Formula a, Formula b);     // ~(~a & ~b)
  static Formula implies(Formula a, Formula b);  // ~(a & ~b)
  static Formula iff(Formula a, Formula b);      // (a -> b) & (b -> a)

  /// Balanced conjunction / disjunction of a list. The empty conjunction is
  /// T and the empty disjunction is F.
  static Formula conj_all(const std::vector<Formula>& fs);
  static Formula disj_all(const std::vector<Formula>& fs);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  const std::string& name() const { return node_->name; }
  /// Operand of Not, left operand of And / Geq.
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }

  /// Identity of the shared node. Used as a memo key during evaluation.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  /// Total structural order (used for deterministic containers).
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
    std::size_t hash;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Kind k, std::string name, const Formula* a, const Formula* b);

  std::shared_ptr<const Node> node_;
};

std::size_t modal_depth(const Formula& f);

/// Symbol count of the fully parenthesised primitive rendering: one symbol
/// per atom, constant and connective plus two per binary parenthesis pair.
std::size_t length(const Formula& f);

/// Number of comparison nodes.
std::size_t comparison_count(const Formula& f);

std::set<std::string> atoms(const Formula& f);

/// ASCII rendering that `parse` reads back to the same tree. With
/// `unicode`, uses the mathematical symbols instead.
std::string render(const Formula& f, bool unicode = false);

/// Parses the ASCII surface syntax. Throws ParseError.
Formula parse(std::string_view text);

/// Replaces every occurrence of `target` by `replacement`.
Formula substitute(const Formula& f, const Formula& target, const Formula& replacement);

/// Depth reduction: splits on nested comparisons, innermost and leftmost
/// first, until each disjunct has modal depth at most 1. Returns the
/// disjuncts; a formula already of depth <= 1 is returned unchanged as the
/// single element.
std::vector<Formula> flatten_depth_disjuncts(const Formula& f);

/// Disjunction of `flatten_depth_disjuncts(f)`.
Formula flatten_depth(const Formula& f);

/// One disjunct of the guarded normal form:
/// ~(a1 >= b1) & ... & ~(an >= bn) & (c1 >= d1) & ... & literals.
/// Every formula inside a pair has modal depth 0.
struct GuardedDisjunct {
  using Pair = std::pair<Formula, Formula>;

  std::vector<Pair> negatives;
  std::vector<Pair> positives;
  /// Conjunction of the propositional literals (T when there are none).
  Formula propositional = Formula::top();
  /// The same literals as (atom, polarity), sorted by atom.
  std::vector<std::pair<std::string, bool>> literals;

  /// The formula this disjunct denotes.
  Formula to_formula() const;
};

/// Guarded disjunctive normal form. Disjuncts whose Boolean skeleton is
/// contradictory are dropped, so the result may be empty. Throws
/// CapacityError beyond `max_disjuncts`.
std::vector<GuardedDisjunct> to_guarded_dnf(const Formula& f, std::size_t max_disjuncts = 1u << 16);

/// (phis) == (psis): true at a state iff as many phis as psis hold there.
/// Built as C_0 | ... | C_n with C_k = (exactly k phis) & (exactly k psis),
/// each side a disjunction over its k-subsets. Members must have modal
/// depth 0; n is capped at 8.
Formula build_equinumerosity(const std::vector<Formula>& phis, const std::vector<Formula>& psis);

inline constexpr std::size_t kMaxEquinumerosityArity = 8;

}  // namespace comparo
