#include "lenslab/rules.hpp"

#include <algorithm>
#include <array>

namespace lenslab {

namespace {

constexpr std::string_view kGetPutInclusion = "GetPut family inclusion";
constexpr std::string_view kPutGetInclusion = "PutGet family inclusion";
constexpr std::string_view kPutPutInclusion = "PutPut family inclusion";
constexpr std::string_view kSameFamilyEquiv =
    "same-family equivalence under a law of another family";
constexpr std::string_view kCrossFamily = "cross-family combination";

std::vector<ImplicationRule> build_database() {
  using enum Law;
  return {
      {1, {SG}, GP, kGetPutInclusion},
      {2, {GP}, SS, kGetPutInclusion},
      {3, {SS}, PS, kGetPutInclusion},
      {4, {SG}, UD, kGetPutInclusion},
      {5, {UD}, PS, kGetPutInclusion},
      {6, {UD}, WP, kGetPutInclusion},
      {7, {SS, WP}, GP, kGetPutInclusion},
      {8, {PG}, WP, kPutGetInclusion},
      {9, {PG}, VD, kPutGetInclusion},
      {10, {VD}, PI, kPutGetInclusion},
      {11, {PI, WP}, PG, kPutGetInclusion},
      {12, {PP}, PT, kPutPutInclusion},
      {13, {PS, PT}, SS, kSameFamilyEquiv},
      {14, {GP, PP}, UD, kSameFamilyEquiv},
      {15, {VD, GP}, PG, kSameFamilyEquiv},
      {16, {PI, PT}, VD, kSameFamilyEquiv},
      {17, {SS, VD}, PT, kCrossFamily},
      {18, {SG, PI}, PP, kCrossFamily},
  };
}

}  // namespace

const std::vector<ImplicationRule>& rule_database() {
  static const std::vector<ImplicationRule> db = build_database();
  return db;
}

ClosureResult closure_with(LawSet start, const std::vector<ImplicationRule>& rules) {
  // Forward chaining in rounds; a law first derived in round k records the
  // lowest-index rule that concludes it there.
  std::array<int, kLawCount> round{};
  std::array<int, kLawCount> deriving_rule{};  // index into `rules`, or -1
  deriving_rule.fill(-1);

  LawSet closed = start;
  int current_round = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    ++current_round;
    LawSet additions;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const ImplicationRule& r = rules[i];
      if (closed.contains(r.conclusion) || additions.contains(r.conclusion)) continue;
      if (r.premises.subset_of(closed)) {
        additions.insert(r.conclusion);
        round[static_cast<int>(r.conclusion)] = current_round;
        deriving_rule[static_cast<int>(r.conclusion)] = static_cast<int>(i);
        changed = true;
      }
    }
    closed = closed | additions;
  }

  ClosureResult result;
  result.closed = closed;
  for (Law goal : (closed - start).to_vector()) {
    // Collect the laws this goal's derivation rests on, then order the steps
    // by (round, rule index) so every step's premises come earlier.
    LawSet needed;
    std::vector<Law> stack{goal};
    while (!stack.empty()) {
      Law l = stack.back();
      stack.pop_back();
      if (start.contains(l) || needed.contains(l)) continue;
      needed.insert(l);
      const ImplicationRule& r = rules[static_cast<std::size_t>(
          deriving_rule[static_cast<int>(l)])];
      for (Law p : r.premises.to_vector()) stack.push_back(p);
    }
    std::vector<Law> ordered = needed.to_vector();
    std::sort(ordered.begin(), ordered.end(), [&](Law a, Law b) {
      int ra = round[static_cast<int>(a)], rb = round[static_cast<int>(b)];
      if (ra != rb) return ra < rb;
      return deriving_rule[static_cast<int>(a)] < deriving_rule[static_cast<int>(b)];
    });
    ProofChain chain;
    chain.goal = goal;
    for (Law l : ordered) {
      const ImplicationRule& r = rules[static_cast<std::size_t>(
          deriving_rule[static_cast<int>(l)])];
      chain.steps.push_back({r.index, r.premises, r.conclusion});
    }
    result.traces.emplace(goal, std::move(chain));
  }
  return result;
}

ClosureResult closure(LawSet start) { return closure_with(start, rule_database()); }

std::optional<ProofChain> derivable(LawSet premises, Law goal) {
  if (premises.contains(goal)) {
    return ProofChain{goal, {}};
  }
  ClosureResult r = closure(premises);
  auto it = r.traces.find(goal);
  if (it == r.traces.end()) return std::nullopt;
  return it->second;
}

bool equivalent_under(LawSet context, LawSet a, LawSet b) {
  return closure(context | a).closed == closure(context | b).closed;
}

std::string export_graph() {
  const auto& rules = rule_database();
  std::string out;
  out += "digraph lens_law_implications {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=box];\n";
  for (Law l : all_laws()) {
    out += "  ";
    out += law_name(l);
    out += ";\n";
  }
  for (const ImplicationRule& r : rules) {
    if (r.premises.size() < 2) continue;
    out += "  and_" + std::to_string(r.index) +
           " [shape=point, width=0.1, label=\"∧\"];\n";
  }
  for (const ImplicationRule& r : rules) {
    if (r.premises.size() == 1) {
      out += "  ";
      out += law_name(r.premises.to_vector().front());
      out += " -> ";
      out += law_name(r.conclusion);
      out += ";\n";
    } else {
      std::string node = "and_" + std::to_string(r.index);
      for (Law p : r.premises.to_vector()) {
        out += "  ";
        out += law_name(p);
        out += " -> " + node + ";\n";
      }
      out += "  " + node + " -> ";
      out += law_name(r.conclusion);
      out += ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace lenslab
