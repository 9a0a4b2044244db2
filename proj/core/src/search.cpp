#include "lenslab/search.hpp"

#include <algorithm>
#include <bitset>
#include <future>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace lenslab {

namespace {

constexpr std::uint64_t kNoHit = std::numeric_limits<std::uint64_t>::max();

std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp) {
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::nullopt;
    }
    result *= base;
  }
  return result;
}

void require_sizes(int s_size, int v_size) {
  if (s_size < 1 || v_size < 1) {
    throw std::invalid_argument("carrier sizes must be positive");
  }
}

void decode_into(const LensIndex& index, FiniteLens& out) {
  out.s_size = index.s_size;
  out.v_size = index.v_size;
  if (!out.get || out.get->size() != static_cast<std::size_t>(index.s_size)) {
    out.get.emplace(index.s_size);
  }
  out.put.resize(static_cast<std::size_t>(index.s_size) * index.v_size);
  std::uint64_t code = index.get_code;
  for (int s = 0; s < index.s_size; ++s) {
    (*out.get)[s] = static_cast<int>(code % index.v_size);
    code /= index.v_size;
  }
  code = index.put_code;
  for (std::size_t i = 0; i < out.put.size(); ++i) {
    out.put[i] = static_cast<int>(code % index.s_size);
    code /= index.s_size;
  }
}

/// Runs fn(begin, end) over a partition of [0, total) and returns the chunk
/// results in partition order. threads <= 1 runs inline.
template <class R, class Fn>
std::vector<R> run_chunks(std::uint64_t total, int threads, Fn fn) {
  std::vector<R> results;
  if (total == 0) return results;
  std::uint64_t t = threads < 1 ? 1 : static_cast<std::uint64_t>(threads);
  t = std::min(t, total);
  if (t == 1) {
    results.push_back(fn(std::uint64_t{0}, total));
    return results;
  }
  std::vector<std::future<R>> futures;
  std::uint64_t per = total / t;
  std::uint64_t rem = total % t;
  std::uint64_t begin = 0;
  for (std::uint64_t i = 0; i < t; ++i) {
    std::uint64_t len = per + (i < rem ? 1 : 0);
    futures.push_back(std::async(std::launch::async, fn, begin, begin + len));
    begin += len;
  }
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

/// Tracks lenses visited against the budget; throws before a space whose
/// size would push the total past it.
struct BudgetLedger {
  std::uint64_t budget;
  std::uint64_t visited = 0;
  Scale completed{0, 0};

  void propose(int s_size, int v_size, std::optional<std::uint64_t> size) const {
    std::ostringstream msg;
    if (!size) {
      msg << "lens space (" << s_size << ", " << v_size << ") does not fit in 64 bits";
      throw BudgetExceeded(msg.str(), completed, visited);
    }
    if (*size > budget - visited) {
      msg << "budget of " << budget << " lenses exceeded: space (" << s_size << ", "
          << v_size << ") holds " << *size << " and " << visited
          << " were already visited";
      throw BudgetExceeded(msg.str(), completed, visited);
    }
  }

  void complete(int s_size, int v_size, std::uint64_t size) {
    visited += size;
    completed = {s_size, v_size};
  }
};

std::uint16_t profile_bits(const FiniteLens& lens) {
  return law_profile(lens).bits();
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

}  // namespace

std::optional<std::uint64_t> get_code_count(int s_size, int v_size) {
  require_sizes(s_size, v_size);
  return checked_pow(static_cast<std::uint64_t>(v_size), s_size);
}

std::optional<std::uint64_t> put_code_count(int s_size, int v_size) {
  require_sizes(s_size, v_size);
  return checked_pow(static_cast<std::uint64_t>(s_size), s_size * v_size);
}

std::optional<std::uint64_t> lens_space_size(int s_size, int v_size) {
  auto gets = get_code_count(s_size, v_size);
  auto puts = put_code_count(s_size, v_size);
  if (!gets || !puts) return std::nullopt;
  if (*puts != 0 && *gets > std::numeric_limits<std::uint64_t>::max() / *puts) {
    return std::nullopt;
  }
  return *gets * *puts;
}

FiniteLens decode_lens(const LensIndex& index) {
  auto gets = get_code_count(index.s_size, index.v_size);
  auto puts = put_code_count(index.s_size, index.v_size);
  if (!gets || !puts) {
    throw std::invalid_argument("lens space does not fit in 64 bits");
  }
  if (index.get_code >= *gets) throw std::invalid_argument("get_code out of range");
  if (index.put_code >= *puts) throw std::invalid_argument("put_code out of range");
  FiniteLens lens;
  decode_into(index, lens);
  return lens;
}

LensIndex encode_lens(const FiniteLens& lens) {
  if (auto error = lens_validation_error(lens)) {
    throw std::invalid_argument(*error);
  }
  if (!lens.get) {
    throw std::invalid_argument("cannot encode a lens without a get table");
  }
  if (!lens_space_size(lens.s_size, lens.v_size)) {
    throw std::overflow_error("lens space does not fit in 64 bits");
  }
  LensIndex index;
  index.s_size = lens.s_size;
  index.v_size = lens.v_size;
  for (int s = lens.s_size - 1; s >= 0; --s) {
    index.get_code = index.get_code * lens.v_size + (*lens.get)[s];
  }
  for (std::size_t i = lens.put.size(); i-- > 0;) {
    index.put_code = index.put_code * lens.s_size + lens.put[i];
  }
  return index;
}

LensEnumerator::LensEnumerator(int s_size, int v_size, std::uint64_t budget)
    : s_size_(s_size), v_size_(v_size) {
  auto size = lens_space_size(s_size, v_size);
  BudgetLedger ledger{budget};
  ledger.propose(s_size, v_size, size);
  total_ = *size;
  put_count_ = *put_code_count(s_size, v_size);
}

std::optional<FiniteLens> LensEnumerator::next() {
  if (cursor_ == total_) return std::nullopt;
  LensIndex index{s_size_, v_size_, cursor_ / put_count_, cursor_ % put_count_};
  ++cursor_;
  FiniteLens lens;
  decode_into(index, lens);
  return lens;
}

std::vector<Scale> spaces_up_to(int max_s, int max_v) {
  require_sizes(max_s, max_v);
  std::vector<Scale> spaces;
  for (int n = 1; n <= max_s; ++n) {
    for (int m = 1; m <= max_v; ++m) spaces.push_back({n, m});
  }
  std::sort(spaces.begin(), spaces.end(), [](const Scale& a, const Scale& b) {
    return std::pair(a.first * a.second, a.first) < std::pair(b.first * b.second, b.first);
  });
  return spaces;
}

namespace {

/// Smallest flat index in the space whose profile satisfies pred, scanning
/// chunks in parallel; kNoHit when none matches.
template <class Pred>
std::uint64_t min_matching_flat(int s_size, int v_size, std::uint64_t total,
                                std::uint64_t put_count, int threads, Pred pred) {
  auto chunk = [=](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
    FiniteLens lens;
    for (std::uint64_t flat = begin; flat < end; ++flat) {
      LensIndex index{s_size, v_size, flat / put_count, flat % put_count};
      decode_into(index, lens);
      if (pred(profile_bits(lens))) return flat;
    }
    return kNoHit;
  };
  std::uint64_t best = kNoHit;
  for (std::uint64_t hit : run_chunks<std::uint64_t>(total, threads, chunk)) {
    best = std::min(best, hit);
  }
  return best;
}

}  // namespace

SearchOutcome find_counterexample(LawSet premises, Law conclusion, int max_s,
                                  int max_v, const SearchConfig& config) {
  std::uint16_t premise_bits = premises.bits();
  std::uint16_t conclusion_bit = static_cast<std::uint16_t>(1)
                                 << static_cast<int>(conclusion);
  BudgetLedger ledger{config.budget};
  for (auto [n, m] : spaces_up_to(max_s, max_v)) {
    auto size = lens_space_size(n, m);
    ledger.propose(n, m, size);
    std::uint64_t put_count = *put_code_count(n, m);
    std::uint64_t hit = min_matching_flat(
        n, m, *size, put_count, config.threads, [=](std::uint16_t bits) {
          return (bits & premise_bits) == premise_bits && !(bits & conclusion_bit);
        });
    if (hit != kNoHit) {
      LensIndex index{n, m, hit / put_count, hit % put_count};
      FiniteLens lens = decode_lens(index);
      ViolationWitness witness = *check_law(lens, conclusion);
      return {Counterexample{index, std::move(lens), witness},
              {n, m},
              ledger.visited + hit + 1};
    }
    ledger.complete(n, m, *size);
  }
  return {std::nullopt, {max_s, max_v}, ledger.visited};
}

namespace {

struct SweepChunk {
  std::uint64_t violations = 0;
  std::uint64_t first_flat = kNoHit;
  int first_rule_pos = 0;
  std::array<std::uint64_t, kLawCount> holds{};
  std::bitset<1 << kLawCount> profiles;
};

}  // namespace

SweepReport soundness_sweep(int max_s, int max_v, const SearchConfig& config,
                            const std::vector<ImplicationRule>& rules) {
  struct RuleBits {
    std::uint16_t premises;
    std::uint16_t conclusion;
  };
  std::vector<RuleBits> rule_bits;
  rule_bits.reserve(rules.size());
  for (const auto& rule : rules) {
    rule_bits.push_back({rule.premises.bits(),
                         static_cast<std::uint16_t>(
                             static_cast<std::uint16_t>(1)
                             << static_cast<int>(rule.conclusion))});
  }

  SweepReport report;
  report.max_s = max_s;
  report.max_v = max_v;
  BudgetLedger ledger{config.budget};
  for (auto [n, m] : spaces_up_to(max_s, max_v)) {
    auto size = lens_space_size(n, m);
    ledger.propose(n, m, size);
    std::uint64_t put_count = *put_code_count(n, m);

    auto chunk = [&, n = n, m = m](std::uint64_t begin, std::uint64_t end) {
      SweepChunk acc;
      FiniteLens lens;
      for (std::uint64_t flat = begin; flat < end; ++flat) {
        LensIndex index{n, m, flat / put_count, flat % put_count};
        decode_into(index, lens);
        std::uint16_t bits = profile_bits(lens);
        acc.profiles.set(bits);
        for (int law = 0; law < kLawCount; ++law) {
          if (bits & (1u << law)) ++acc.holds[law];
        }
        for (std::size_t pos = 0; pos < rule_bits.size(); ++pos) {
          const RuleBits& rb = rule_bits[pos];
          if ((bits & rb.premises) == rb.premises && !(bits & rb.conclusion)) {
            ++acc.violations;
            if (acc.first_flat == kNoHit) {
              acc.first_flat = flat;
              acc.first_rule_pos = static_cast<int>(pos);
            }
          }
        }
      }
      return acc;
    };

    SweepChunk merged;
    for (const SweepChunk& part : run_chunks<SweepChunk>(*size, config.threads, chunk)) {
      merged.violations += part.violations;
      if (part.first_flat < merged.first_flat) {
        merged.first_flat = part.first_flat;
        merged.first_rule_pos = part.first_rule_pos;
      }
      for (int law = 0; law < kLawCount; ++law) merged.holds[law] += part.holds[law];
      merged.profiles |= part.profiles;
    }

    SpaceStats stats;
    stats.s_size = n;
    stats.v_size = m;
    stats.lens_count = *size;
    stats.distinct_profiles = merged.profiles.count();
    stats.law_hold_counts = merged.holds;
    report.spaces.push_back(stats);
    report.violation_count += merged.violations;
    if (!report.first_violation && merged.first_flat != kNoHit) {
      report.first_violation = RuleViolationRecord{
          rules[merged.first_rule_pos].index,
          LensIndex{n, m, merged.first_flat / put_count, merged.first_flat % put_count}};
    }
    ledger.complete(n, m, *size);
  }
  report.total_lenses = ledger.visited;
  return report;
}

std::string SweepReport::to_text() const {
  std::ostringstream out;
  out << "soundness sweep up to (" << max_s << ", " << max_v << ")\n";
  for (const SpaceStats& stats : spaces) {
    out << "space (" << stats.s_size << ", " << stats.v_size
        << "): lenses=" << stats.lens_count
        << " profiles=" << stats.distinct_profiles << "\n  holds:";
    for (int law = 0; law < kLawCount; ++law) {
      out << ' ' << law_name(static_cast<Law>(law)) << '='
          << stats.law_hold_counts[law];
    }
    out << "\n";
  }
  out << "total lenses: " << total_lenses << "\n";
  out << violation_count << " violations\n";
  if (first_violation) {
    out << "first violation: rule " << first_violation->rule_index << " at ("
        << first_violation->lens.s_size << ", " << first_violation->lens.v_size
        << ") get_code=" << first_violation->lens.get_code
        << " put_code=" << first_violation->lens.put_code << "\n";
  }
  return out.str();
}

std::map<LawSet, std::uint64_t> profile_census(int s_size, int v_size,
                                               const SearchConfig& config) {
  auto size = lens_space_size(s_size, v_size);
  BudgetLedger ledger{config.budget};
  ledger.propose(s_size, v_size, size);
  std::uint64_t put_count = *put_code_count(s_size, v_size);

  using Counts = std::array<std::uint64_t, 1 << kLawCount>;
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    Counts counts{};
    FiniteLens lens;
    for (std::uint64_t flat = begin; flat < end; ++flat) {
      LensIndex index{s_size, v_size, flat / put_count, flat % put_count};
      decode_into(index, lens);
      ++counts[profile_bits(lens)];
    }
    return counts;
  };

  Counts merged{};
  for (const Counts& part : run_chunks<Counts>(*size, config.threads, chunk)) {
    for (std::size_t i = 0; i < merged.size(); ++i) merged[i] += part[i];
  }
  std::map<LawSet, std::uint64_t> census;
  for (std::size_t bits = 0; bits < merged.size(); ++bits) {
    if (merged[bits] != 0) {
      census[LawSet::from_bits(static_cast<std::uint16_t>(bits))] = merged[bits];
    }
  }
  return census;
}

std::vector<CandidateReport> candidate_survey(int max_premise_size, int max_s,
                                              int max_v, const SearchConfig& config) {
  if (max_premise_size < 1 || max_premise_size > kLawCount) {
    throw std::invalid_argument("max_premise_size must be between 1 and 11");
  }

  std::vector<CandidateReport> candidates;
  std::vector<LawSet> premise_sets;
  std::vector<int> combination;
  auto emit = [&](const std::vector<int>& laws) {
    LawSet premises;
    for (int law : laws) premises.insert(static_cast<Law>(law));
    premise_sets.push_back(premises);
  };
  for (int size = 1; size <= max_premise_size; ++size) {
    combination.assign(size, 0);
    std::iota(combination.begin(), combination.end(), 0);
    while (true) {
      emit(combination);
      int pos = size - 1;
      while (pos >= 0 && combination[pos] == kLawCount - size + pos) --pos;
      if (pos < 0) break;
      ++combination[pos];
      for (int i = pos + 1; i < size; ++i) combination[i] = combination[i - 1] + 1;
    }
  }
  for (LawSet premises : premise_sets) {
    ClosureResult closed = closure(premises);
    for (int law = 0; law < kLawCount; ++law) {
      Law conclusion = static_cast<Law>(law);
      if (premises.contains(conclusion)) continue;
      CandidateReport report;
      report.premises = premises;
      report.conclusion = conclusion;
      if (closed.closed.contains(conclusion)) {
        report.status = CandidateDerivable{closed.traces.at(conclusion)};
      } else {
        report.status = CandidateOpen{{0, 0}};
      }
      candidates.push_back(std::move(report));
    }
  }

  struct Pending {
    int candidate = 0;
    std::uint16_t premises = 0;
    std::uint16_t conclusion = 0;
    std::uint64_t hit_flat = kNoHit;
    Scale hit_space{0, 0};
  };
  std::vector<Pending> pending;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!std::holds_alternative<CandidateOpen>(candidates[i].status)) continue;
    Pending entry;
    entry.candidate = static_cast<int>(i);
    entry.premises = candidates[i].premises.bits();
    entry.conclusion = static_cast<std::uint16_t>(1)
                       << static_cast<int>(candidates[i].conclusion);
    pending.push_back(entry);
  }

  BudgetLedger ledger{config.budget};
  for (auto [n, m] : spaces_up_to(max_s, max_v)) {
    std::vector<int> active;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (pending[i].hit_flat == kNoHit) active.push_back(static_cast<int>(i));
    }
    if (active.empty()) break;
    auto size = lens_space_size(n, m);
    ledger.propose(n, m, size);
    std::uint64_t put_count = *put_code_count(n, m);

    using Hits = std::vector<std::uint64_t>;
    auto chunk = [&, n = n, m = m](std::uint64_t begin, std::uint64_t end) {
      Hits hits(active.size(), kNoHit);
      std::vector<std::vector<int>> refuted_by_mask(1 << kLawCount);
      std::bitset<1 << kLawCount> mask_seen;
      FiniteLens lens;
      std::size_t unresolved = active.size();
      for (std::uint64_t flat = begin; flat < end && unresolved > 0; ++flat) {
        LensIndex index{n, m, flat / put_count, flat % put_count};
        decode_into(index, lens);
        std::uint16_t bits = profile_bits(lens);
        if (!mask_seen.test(bits)) {
          mask_seen.set(bits);
          for (std::size_t i = 0; i < active.size(); ++i) {
            const Pending& entry = pending[active[i]];
            if ((bits & entry.premises) == entry.premises &&
                !(bits & entry.conclusion)) {
              refuted_by_mask[bits].push_back(static_cast<int>(i));
            }
          }
        }
        for (int i : refuted_by_mask[bits]) {
          if (hits[i] == kNoHit) {
            hits[i] = flat;
            --unresolved;
          }
        }
      }
      return hits;
    };

    Hits merged(active.size(), kNoHit);
    for (const Hits& part : run_chunks<Hits>(*size, config.threads, chunk)) {
      for (std::size_t i = 0; i < merged.size(); ++i) {
        merged[i] = std::min(merged[i], part[i]);
      }
    }
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (merged[i] != kNoHit) {
        pending[active[i]].hit_flat = merged[i];
        pending[active[i]].hit_space = {n, m};
      }
    }
    ledger.complete(n, m, *size);
  }

  for (const Pending& entry : pending) {
    CandidateReport& report = candidates[entry.candidate];
    if (entry.hit_flat == kNoHit) {
      report.status = CandidateOpen{{max_s, max_v}};
      continue;
    }
    auto [n, m] = entry.hit_space;
    std::uint64_t put_count = *put_code_count(n, m);
    LensIndex index{n, m, entry.hit_flat / put_count, entry.hit_flat % put_count};
    FiniteLens lens = decode_lens(index);
    ViolationWitness witness = *check_law(lens, report.conclusion);
    report.status = CandidateRefuted{Counterexample{index, std::move(lens), witness}};
  }
  return candidates;
}

RandomSearchOutcome random_search(LawSet premises, Law conclusion, int s_size,
                                  int v_size, std::uint64_t samples,
                                  std::uint64_t seed) {
  require_sizes(s_size, v_size);
  std::uint16_t premise_bits = premises.bits();
  std::uint16_t conclusion_bit = static_cast<std::uint16_t>(1)
                                 << static_cast<int>(conclusion);
  std::mt19937_64 rng(seed);
  FiniteLens lens;
  lens.s_size = s_size;
  lens.v_size = v_size;
  lens.get.emplace(s_size);
  lens.put.resize(static_cast<std::size_t>(s_size) * v_size);
  for (std::uint64_t sample = 0; sample < samples; ++sample) {
    for (int s = 0; s < s_size; ++s) {
      (*lens.get)[s] = static_cast<int>(uniform_below(rng, v_size));
    }
    for (std::size_t i = 0; i < lens.put.size(); ++i) {
      lens.put[i] = static_cast<int>(uniform_below(rng, s_size));
    }
    std::uint16_t bits = profile_bits(lens);
    if ((bits & premise_bits) == premise_bits && !(bits & conclusion_bit)) {
      ViolationWitness witness = *check_law(lens, conclusion);
      return {Counterexample{encode_lens(lens), lens, witness}, sample + 1};
    }
  }
  return {std::nullopt, samples};
}

}  // namespace lenslab
