#ifndef LENSLAB_SEARCH_HPP
#define LENSLAB_SEARCH_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lenslab/check.hpp"
#include "lenslab/laws.hpp"
#include "lenslab/lens.hpp"
#include "lenslab/rules.hpp"

namespace lenslab {

/// Carrier sizes fully searched so far, as (max s_size, max v_size); (0, 0)
/// when nothing was completed.
using Scale = std::pair<int, int>;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, Scale searched, std::uint64_t visited)
      : std::runtime_error(what), scale_searched(searched), lenses_visited(visited) {}

  Scale scale_searched;
  std::uint64_t lenses_visited;
};

struct SearchConfig {
  std::uint64_t budget = 10'000'000;  // max lenses enumerated per operation
  int threads = 1;
};

/// Compact coordinates of one lens in the full space over (s_size, v_size):
/// the get table is the base-v_size digits of get_code (digit s = get(s)),
/// the put table the base-s_size digits of put_code (digit s*v_size+v =
/// put(s, v)). Bijective with FiniteLens over the pair of sizes.
struct LensIndex {
  int s_size = 0;
  int v_size = 0;
  std::uint64_t get_code = 0;
  std::uint64_t put_code = 0;

  bool operator==(const LensIndex&) const = default;
};

/// m^n and n^(n*m); empty when the value overflows 64 bits.
std::optional<std::uint64_t> get_code_count(int s_size, int v_size);
std::optional<std::uint64_t> put_code_count(int s_size, int v_size);
std::optional<std::uint64_t> lens_space_size(int s_size, int v_size);

FiniteLens decode_lens(const LensIndex& index);
LensIndex encode_lens(const FiniteLens& lens);  // requires get present

/// Streams every lens over (s_size, v_size) exactly once in (get_code,
/// put_code) lexicographic order. Throws BudgetExceeded at construction when
/// the space size exceeds the budget.
class LensEnumerator {
 public:
  LensEnumerator(int s_size, int v_size, std::uint64_t budget = SearchConfig{}.budget);

  std::uint64_t total() const { return total_; }
  std::optional<FiniteLens> next();

 private:
  int s_size_;
  int v_size_;
  std::uint64_t total_;
  std::uint64_t put_count_;
  std::uint64_t cursor_ = 0;
};

/// The (s_size, v_size) pairs with sizes bounded by (max_s, max_v), in scan
/// order: increasing s_size*v_size, then s_size.
std::vector<Scale> spaces_up_to(int max_s, int max_v);

struct Counterexample {
  LensIndex index;
  FiniteLens lens;
  ViolationWitness witness;  // violation of the conclusion law

  bool operator==(const Counterexample&) const = default;
};

struct SearchOutcome {
  std::optional<Counterexample> found;
  Scale scale_searched;  // (max_s, max_v) when the scan ran to completion
  std::uint64_t lenses_visited = 0;
};

/// First lens (scan order, then enumeration order) whose profile contains
/// `premises` but not `conclusion`, with the conclusion's violation witness.
SearchOutcome find_counterexample(LawSet premises, Law conclusion, int max_s,
                                  int max_v, const SearchConfig& config = {});

struct SpaceStats {
  int s_size = 0;
  int v_size = 0;
  std::uint64_t lens_count = 0;
  std::uint64_t distinct_profiles = 0;
  std::array<std::uint64_t, kLawCount> law_hold_counts{};

  bool operator==(const SpaceStats&) const = default;
};

struct RuleViolationRecord {
  int rule_index = 0;
  LensIndex lens;

  bool operator==(const RuleViolationRecord&) const = default;
};

struct SweepReport {
  int max_s = 0;
  int max_v = 0;
  std::uint64_t total_lenses = 0;
  std::uint64_t violation_count = 0;
  std::optional<RuleViolationRecord> first_violation;
  std::vector<SpaceStats> spaces;

  std::string to_text() const;
  bool operator==(const SweepReport&) const = default;
};

/// Asserts every rule on the profile of every lens over every space up to
/// (max_s, max_v). The report is independent of config.threads.
SweepReport soundness_sweep(int max_s, int max_v, const SearchConfig& config = {},
                            const std::vector<ImplicationRule>& rules = rule_database());

/// Exact multiset of law profiles over the full space at (s_size, v_size).
std::map<LawSet, std::uint64_t> profile_census(int s_size, int v_size,
                                               const SearchConfig& config = {});

struct CandidateDerivable {
  ProofChain chain;
  bool operator==(const CandidateDerivable&) const = default;
};
struct CandidateRefuted {
  Counterexample counterexample;
  bool operator==(const CandidateRefuted&) const = default;
};
struct CandidateOpen {
  Scale scale_searched;
  bool operator==(const CandidateOpen&) const = default;
};

struct CandidateReport {
  LawSet premises;
  Law conclusion = Law::SG;
  std::variant<CandidateDerivable, CandidateRefuted, CandidateOpen> status;

  bool operator==(const CandidateReport&) const = default;
};

/// Every (premises, conclusion) with 1 <= |premises| <= max_premise_size and
/// conclusion outside premises, sorted by (|premises|, laws in canonical
/// order). Status independent of config.threads.
std::vector<CandidateReport> candidate_survey(int max_premise_size, int max_s,
                                              int max_v,
                                              const SearchConfig& config = {});

struct RandomSearchOutcome {
  std::optional<Counterexample> found;
  std::uint64_t samples_drawn = 0;
};

/// Samples lenses uniformly over (s_size, v_size) from a seeded generator;
/// the outcome is a pure function of the arguments.
RandomSearchOutcome random_search(LawSet premises, Law conclusion, int s_size,
                                  int v_size, std::uint64_t samples,
                                  std::uint64_t seed);

}  // namespace lenslab

#endif  // LENSLAB_SEARCH_HPP
