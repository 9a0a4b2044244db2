#ifndef LENSLAB_RULES_HPP
#define LENSLAB_RULES_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lenslab/laws.hpp"

namespace lenslab {

/// Horn clause over the law atoms: premises ⇒ conclusion. The shipped
/// database has 18 rules with one or two premises each.
struct ImplicationRule {
  int index = 0;  // 1-based, R1..R18
  LawSet premises;
  Law conclusion = Law::SG;
  std::string_view rationale;  // why the rule is in the database

  bool operator==(const ImplicationRule&) const = default;
};

/// The fixed rule database, in index order R1..R18.
const std::vector<ImplicationRule>& rule_database();

struct ProofStep {
  int rule_index = 0;       // into rule_database(), 1-based
  LawSet premises_used;     // the rule's premises, all satisfied when fired
  Law conclusion = Law::SG;

  bool operator==(const ProofStep&) const = default;
};

/// Ordered rule applications from an initial law set to a goal: each step's
/// premises are contained in the initial set plus earlier conclusions, and
/// the last step concludes the goal. Empty when the goal is already in the
/// initial set.
struct ProofChain {
  Law goal = Law::SG;
  std::vector<ProofStep> steps;

  bool operator==(const ProofChain&) const = default;
};

struct ClosureResult {
  LawSet closed;
  /// One derivation per law not in the start set, assembled from
  /// earliest-round, lowest-index rules (ties broken by rule index).
  std::map<Law, ProofChain> traces;
};

/// Least fixpoint of forward chaining over rule_database().
ClosureResult closure(LawSet start);

/// Like closure() but over an explicit rule list (used for mutation testing).
ClosureResult closure_with(LawSet start, const std::vector<ImplicationRule>& rules);

/// ProofChain iff goal ∈ closure(premises).
std::optional<ProofChain> derivable(LawSet premises, Law goal);

/// closure(context ∪ a) == closure(context ∪ b).
bool equivalent_under(LawSet context, LawSet a, LawSet b);

/// Deterministic DOT digraph of the rule database: one node per law, one
/// "and_<i>" node per two-premise rule Ri. Byte-identical across runs.
std::string export_graph();

}  // namespace lenslab

#endif  // LENSLAB_RULES_HPP
