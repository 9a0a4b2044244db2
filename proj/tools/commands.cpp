#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lens_document.hpp"

namespace lenslab::cli {

namespace {

Law require_law(const std::string& name) {
  std::optional<Law> law = parse_law(name);
  if (!law) throw std::invalid_argument("unknown law: " + name);
  return *law;
}

LawSet parse_law_set(const std::vector<std::string>& names) {
  LawSet set;
  for (const std::string& name : names) set.insert(require_law(name));
  return set;
}

std::string family_tags(Law law) {
  std::ostringstream out;
  out << "[";
  bool first = true;
  for (Family family : families_of(law)) {
    if (!first) out << ", ";
    out << family_name(family);
    first = false;
  }
  out << "]";
  return out.str();
}

std::string claims_line(const GalleryEntry& entry) {
  std::ostringstream out;
  out << to_string(entry.claimed_holds) << " hold";
  if (entry.claimed_holds.size() == 1) out << "s";
  if (!entry.claimed_fails.empty()) {
    out << "; " << to_string(entry.claimed_fails) << " fail";
    if (entry.claimed_fails.size() == 1) out << "s";
  }
  return out.str();
}

nlohmann::ordered_json scale_to_json(const Scale& scale) {
  return nlohmann::ordered_json::array({scale.first, scale.second});
}

}  // namespace

int cmd_laws(OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Structured) {
    nlohmann::ordered_json laws = nlohmann::ordered_json::array();
    for (Law law : all_laws()) {
      const LawInfo& info = law_info(law);
      nlohmann::ordered_json entry;
      entry["name"] = std::string(info.name);
      entry["long_name"] = std::string(info.long_name);
      entry["equation"] = std::string(info.equation);
      nlohmann::ordered_json families = nlohmann::ordered_json::array();
      for (Family family : families_of(law)) {
        families.push_back(std::string(family_name(family)));
      }
      entry["families"] = std::move(families);
      entry["put_only"] = info.put_only;
      laws.push_back(std::move(entry));
    }
    out << laws.dump(2) << "\n";
    return kExitSuccess;
  }
  for (Law law : all_laws()) {
    const LawInfo& info = law_info(law);
    out << info.name << ": " << info.long_name << " " << family_tags(law);
    if (info.put_only) out << " (put-only)";
    out << "\n    " << info.equation << "\n";
  }
  return kExitSuccess;
}

int cmd_check(const CheckOptions& options, std::ostream& out) {
  FiniteLens lens = load_lens_document(options.path);
  LawSet requested;
  if (options.laws.empty()) {
    requested = lens.get ? LawSet::all() : LawSet::put_only_laws();
  } else {
    requested = parse_law_set(options.laws);
  }
  LawSet profile = law_profile(lens);

  struct Result {
    Law law;
    std::optional<ViolationWitness> witness;
  };
  std::vector<Result> results;
  for (Law law : requested.to_vector()) {
    results.push_back({law, check_law(lens, law)});
  }
  bool any_violation =
      std::any_of(results.begin(), results.end(),
                  [](const Result& result) { return result.witness.has_value(); });

  if (options.format == OutputFormat::Structured) {
    nlohmann::ordered_json document;
    document["lens"] = lens_to_json(lens);
    document["profile"] = law_set_to_json(profile);
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const Result& result : results) {
      nlohmann::ordered_json entry;
      entry["law"] = std::string(law_name(result.law));
      entry["holds"] = !result.witness.has_value();
      if (result.witness) entry["witness"] = witness_to_json(*result.witness);
      entries.push_back(std::move(entry));
    }
    document["results"] = std::move(entries);
    out << document.dump(2) << "\n";
  } else {
    out << "lens: " << lens_to_json_line(lens) << "\n";
    out << "profile: " << to_string(profile) << "\n";
    for (const Result& result : results) {
      if (result.witness) {
        out << law_name(result.law) << ": " << describe_witness(*result.witness)
            << "\n";
      } else {
        out << law_name(result.law) << ": holds\n";
      }
    }
  }
  return any_violation ? kExitViolation : kExitSuccess;
}

int cmd_closure(const ClosureOptions& options, std::ostream& out) {
  LawSet start = parse_law_set(options.laws);
  ClosureResult result = closure(start);

  if (options.format == OutputFormat::Structured) {
    nlohmann::ordered_json document;
    document["start"] = law_set_to_json(start);
    document["closed"] = law_set_to_json(result.closed);
    nlohmann::ordered_json traces;
    for (const auto& [law, chain] : result.traces) {
      traces[std::string(law_name(law))] = chain_to_json(chain);
    }
    document["traces"] = std::move(traces);
    out << document.dump(2) << "\n";
    return kExitSuccess;
  }

  out << "start: " << to_string(start) << "\n";
  out << "closed: " << to_string(result.closed) << "\n";
  for (const auto& [law, chain] : result.traces) {
    out << law_name(law) << ": ";
    bool first = true;
    for (const ProofStep& step : chain.steps) {
      if (!first) out << "; ";
      out << describe_step(step);
      first = false;
    }
    out << "\n";
  }
  return kExitSuccess;
}

int cmd_implies(const ImpliesOptions& options, std::ostream& out) {
  std::vector<std::string> terms;
  for (const std::string& term : options.terms) {
    if (term == "->" || term == "=>") continue;
    terms.push_back(term);
  }
  if (terms.size() < 2) {
    throw std::invalid_argument("implies needs at least one premise and a goal");
  }
  Law goal = require_law(terms.back());
  terms.pop_back();
  LawSet premises = parse_law_set(terms);

  SearchConfig config{options.budget, options.threads};
  std::optional<ProofChain> chain = derivable(premises, goal);

  if (chain) {
    if (options.format == OutputFormat::Structured) {
      nlohmann::ordered_json document;
      document["premises"] = law_set_to_json(premises);
      document["goal"] = std::string(law_name(goal));
      document["verdict"] = "derivable";
      document["chain"] = chain_to_json(*chain);
      out << document.dump(2) << "\n";
    } else {
      out << "derivable: " << to_string(premises) << " ⇒ " << law_name(goal) << "\n";
      for (const ProofStep& step : chain->steps) out << describe_step(step) << "\n";
    }
    return kExitSuccess;
  }

  SearchOutcome outcome =
      find_counterexample(premises, goal, options.max_s, options.max_v, config);
  std::optional<RandomSearchOutcome> sampled;
  if (!outcome.found && options.seed) {
    int rand_s = options.rand_s > 0 ? options.rand_s : options.max_s + 1;
    int rand_v = options.rand_v > 0 ? options.rand_v : options.max_v + 1;
    sampled = random_search(premises, goal, rand_s, rand_v, options.samples,
                            *options.seed);
  }
  const std::optional<Counterexample>& found =
      outcome.found ? outcome.found : (sampled ? sampled->found : outcome.found);

  if (options.format == OutputFormat::Structured) {
    nlohmann::ordered_json document;
    document["premises"] = law_set_to_json(premises);
    document["goal"] = std::string(law_name(goal));
    document["verdict"] = found ? "refuted" : "open";
    document["scale_searched"] = scale_to_json(outcome.scale_searched);
    document["lenses_visited"] = outcome.lenses_visited;
    if (sampled) document["samples_drawn"] = sampled->samples_drawn;
    if (found) document["counterexample"] = counterexample_to_json(*found);
    out << document.dump(2) << "\n";
  } else if (found) {
    out << "refuted: " << to_string(premises) << " ⇏ " << law_name(goal) << "\n";
    out << describe_counterexample(*found) << "\n";
    if (!outcome.found && sampled) {
      out << "found by seeded sampling after " << sampled->samples_drawn
          << " samples\n";
    }
  } else {
    out << "open: not derivable from the rule database; no counterexample up to ("
        << options.max_s << ", " << options.max_v << ")";
    if (sampled) out << " nor among " << sampled->samples_drawn << " samples";
    out << "\n";
  }
  return found ? kExitViolation : kExitOpen;
}

int cmd_sweep(const SweepOptions& options, std::ostream& out) {
  SearchConfig config{options.budget, options.threads};
  SweepReport report = soundness_sweep(options.max_s, options.max_v, config);

  if (options.format == OutputFormat::Structured) {
    nlohmann::ordered_json document;
    document["max_s"] = report.max_s;
    document["max_v"] = report.max_v;
    document["total_lenses"] = report.total_lenses;
    document["violation_count"] = report.violation_count;
    if (report.first_violation) {
      nlohmann::ordered_json violation;
      violation["rule"] = report.first_violation->rule_index;
      violation["s_size"] = report.first_violation->lens.s_size;
      violation["v_size"] = report.first_violation->lens.v_size;
      violation["get_code"] = report.first_violation->lens.get_code;
      violation["put_code"] = report.first_violation->lens.put_code;
      document["first_violation"] = std::move(violation);
    }
    nlohmann::ordered_json spaces = nlohmann::ordered_json::array();
    for (const SpaceStats& stats : report.spaces) {
      nlohmann::ordered_json space;
      space["s_size"] = stats.s_size;
      space["v_size"] = stats.v_size;
      space["lens_count"] = stats.lens_count;
      space["distinct_profiles"] = stats.distinct_profiles;
      nlohmann::ordered_json holds;
      for (int law = 0; law < kLawCount; ++law) {
        holds[std::string(law_name(static_cast<Law>(law)))] =
            stats.law_hold_counts[law];
      }
      space["law_hold_counts"] = std::move(holds);
      spaces.push_back(std::move(space));
    }
    document["spaces"] = std::move(spaces);
    out << document.dump(2) << "\n";
  } else {
    out << report.to_text();
  }
  return report.violation_count == 0 ? kExitSuccess : kExitViolation;
}

int cmd_census(const CensusOptions& options, std::ostream& out) {
  SearchConfig config{options.budget, options.threads};
  std::map<LawSet, std::uint64_t> census =
      profile_census(options.s_size, options.v_size, config);
  std::uint64_t total = 0;
  for (const auto& [profile, count] : census) total += count;

  if (options.format == OutputFormat::Structured) {
    nlohmann::ordered_json document;
    document["s_size"] = options.s_size;
    document["v_size"] = options.v_size;
    document["total_lenses"] = total;
    document["distinct_profiles"] = census.size();
    nlohmann::ordered_json profiles = nlohmann::ordered_json::array();
    for (const auto& [profile, count] : census) {
      nlohmann::ordered_json entry;
      entry["laws"] = law_set_to_json(profile);
      entry["count"] = count;
      profiles.push_back(std::move(entry));
    }
    document["profiles"] = std::move(profiles);
    out << document.dump(2) << "\n";
  } else {
    out << "profile census at (" << options.s_size << ", " << options.v_size
        << "): " << total << " lenses, " << census.size() << " distinct profiles\n";
    for (const auto& [profile, count] : census) {
      out << std::setw(12) << count << "  " << to_string(profile) << "\n";
    }
  }
  return kExitSuccess;
}

int cmd_survey(const SurveyOptions& options, std::ostream& out) {
  SearchConfig config{options.budget, options.threads};
  std::vector<CandidateReport> candidates = candidate_survey(
      options.max_premise_size, options.max_s, options.max_v, config);

  std::uint64_t derivable_count = 0;
  std::uint64_t refuted_count = 0;
  std::uint64_t open_count = 0;
  for (const CandidateReport& candidate : candidates) {
    if (std::holds_alternative<CandidateDerivable>(candidate.status)) {
      ++derivable_count;
    } else if (std::holds_alternative<CandidateRefuted>(candidate.status)) {
      ++refuted_count;
    } else {
      ++open_count;
    }
  }

  if (options.format == OutputFormat::Structured) {
    nlohmann::ordered_json document;
    document["max_premise_size"] = options.max_premise_size;
    document["max_s"] = options.max_s;
    document["max_v"] = options.max_v;
    document["derivable"] = derivable_count;
    document["refuted"] = refuted_count;
    document["open"] = open_count;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const CandidateReport& candidate : candidates) {
      nlohmann::ordered_json entry;
      entry["premises"] = law_set_to_json(candidate.premises);
      entry["conclusion"] = std::string(law_name(candidate.conclusion));
      if (const auto* derived = std::get_if<CandidateDerivable>(&candidate.status)) {
        entry["status"] = "derivable";
        entry["chain"] = chain_to_json(derived->chain);
      } else if (const auto* refuted =
                     std::get_if<CandidateRefuted>(&candidate.status)) {
        entry["status"] = "refuted";
        entry["counterexample"] = counterexample_to_json(refuted->counterexample);
      } else {
        entry["status"] = "open";
        entry["scale_searched"] =
            scale_to_json(std::get<CandidateOpen>(candidate.status).scale_searched);
      }
      entries.push_back(std::move(entry));
    }
    document["candidates"] = std::move(entries);
    out << document.dump(2) << "\n";
    return kExitSuccess;
  }

  out << "candidate survey: premises up to size " << options.max_premise_size
      << ", spaces up to (" << options.max_s << ", " << options.max_v << ")\n";
  out << "candidates: " << candidates.size() << " derivable: " << derivable_count
      << " refuted: " << refuted_count << " open: " << open_count << "\n";
  for (const CandidateReport& candidate : candidates) {
    out << to_string(candidate.premises) << " ⇒ " << law_name(candidate.conclusion)
        << ": ";
    if (const auto* derived = std::get_if<CandidateDerivable>(&candidate.status)) {
      out << "derivable";
      if (!derived->chain.steps.empty()) {
        out << " [";
        bool first = true;
        for (const ProofStep& step : derived->chain.steps) {
          if (!first) out << "; ";
          out << describe_step(step);
          first = false;
        }
        out << "]";
      }
    } else if (const auto* refuted =
                   std::get_if<CandidateRefuted>(&candidate.status)) {
      const LensIndex& index = refuted->counterexample.index;
      out << "refuted at (" << index.s_size << ", " << index.v_size
          << ") get_code=" << index.get_code << " put_code=" << index.put_code;
    } else {
      const Scale& scale = std::get<CandidateOpen>(candidate.status).scale_searched;
      out << "open up to (" << scale.first << ", " << scale.second << ")";
    }
    out << "\n";
  }
  return kExitSuccess;
}

int cmd_dot(std::ostream& out) {
  out << export_graph();
  return kExitSuccess;
}

int cmd_gallery(const GalleryOptions& options, std::ostream& out) {
  if (options.name.empty()) {
    if (options.format == OutputFormat::Structured) {
      nlohmann::ordered_json entries = nlohmann::ordered_json::array();
      for (const GalleryEntry& entry : list_gallery()) {
        nlohmann::ordered_json document;
        document["name"] = entry.name;
        if (!entry.get_formula.empty()) document["get"] = entry.get_formula;
        document["put"] = entry.put_formula;
        document["claimed_holds"] = law_set_to_json(entry.claimed_holds);
        document["claimed_fails"] = law_set_to_json(entry.claimed_fails);
        document["note"] = entry.source_note;
        entries.push_back(std::move(document));
      }
      out << entries.dump(2) << "\n";
    } else {
      for (const GalleryEntry& entry : list_gallery()) {
        out << entry.name << "\n";
        if (!entry.get_formula.empty()) out << "  " << entry.get_formula << "\n";
        out << "  " << entry.put_formula << "\n";
        out << "  claims: " << claims_line(entry) << "\n";
        out << "  note: " << entry.source_note << "\n";
      }
    }
    return kExitSuccess;
  }

  WindowReport report = gallery_check(options.name, options.window);
  if (options.format == OutputFormat::Structured) {
    nlohmann::ordered_json document;
    document["entry"] = report.entry;
    document["window"] = report.window;
    document["conforms"] = report.conforms();
    nlohmann::ordered_json laws = nlohmann::ordered_json::array();
    for (const GalleryLawReport& law_report : report.laws) {
      nlohmann::ordered_json entry;
      entry["law"] = std::string(law_name(law_report.law));
      entry["claimed_to_hold"] = law_report.claimed_to_hold;
      entry["verdict"] = std::string(to_string(law_report.verdict));
      if (law_report.witness) {
        entry["witness"] = gallery_witness_to_json(*law_report.witness);
      }
      laws.push_back(std::move(entry));
    }
    document["laws"] = std::move(laws);
    out << document.dump(2) << "\n";
  } else {
    out << "entry " << report.entry << " at window " << report.window << "\n";
    for (const GalleryLawReport& law_report : report.laws) {
      out << law_name(law_report.law) << ": " << to_string(law_report.verdict) << "\n";
      if (law_report.witness) {
        out << "    " << describe_gallery_witness(*law_report.witness) << "\n";
      }
    }
  }

  bool claim_violated =
      std::any_of(report.laws.begin(), report.laws.end(),
                  [](const GalleryLawReport& law_report) {
                    return law_report.verdict == GalleryVerdict::ClaimViolated;
                  });
  if (claim_violated) return kExitViolation;
  if (report.window_too_small()) return kExitOpen;
  return kExitSuccess;
}

}  // namespace lenslab::cli
