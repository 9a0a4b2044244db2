#include <doctest.h>

#include "lenslab/search.hpp"
#include "oracle.hpp"

using namespace lenslab;

TEST_CASE("space sizes") {
  CHECK(get_code_count(2, 3) == 9);
  CHECK(put_code_count(2, 3) == 64);
  CHECK(lens_space_size(1, 1) == 1);
  CHECK(lens_space_size(2, 1) == 4);
  CHECK(lens_space_size(2, 2) == 64);
  CHECK(lens_space_size(3, 3) == 531441);
  CHECK_FALSE(lens_space_size(6, 6).has_value());
  CHECK_THROWS_AS((void)lens_space_size(0, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)lens_space_size(1, -2), std::invalid_argument);
}

TEST_CASE("scan order of spaces") {
  std::vector<Scale> expected = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1},
                                 {2, 2}, {2, 3}, {3, 2}, {3, 3}};
  CHECK(spaces_up_to(3, 3) == expected);
  CHECK(spaces_up_to(1, 1) == std::vector<Scale>{{1, 1}});
}

TEST_CASE("codes are little-endian digit strings") {
  FiniteLens lens = decode_lens({2, 3, 5, 45});
  CHECK(lens.s_size == 2);
  CHECK(lens.v_size == 3);
  // 5 in base 3 is digits (2, 1): get(0) = 2, get(1) = 1.
  CHECK(*lens.get == std::vector<int>{2, 1});
  // 45 in base 2 is digits (1, 0, 1, 1, 0, 1), row-major over (s, v).
  CHECK(lens.put == std::vector<int>{1, 0, 1, 1, 0, 1});
  CHECK(encode_lens(lens) == LensIndex{2, 3, 5, 45});

  FiniteLens identity = decode_lens({2, 2, 2, 10});
  CHECK(*identity.get == std::vector<int>{0, 1});
  CHECK(identity.put == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("enumerator walks the whole space in code order") {
  LensEnumerator it(2, 1);
  CHECK(it.total() == 4);
  std::vector<std::vector<int>> puts;
  while (auto lens = it.next()) {
    CHECK(*lens->get == std::vector<int>{0, 0});
    puts.push_back(lens->put);
  }
  CHECK(puts == std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("enumerator refuses spaces beyond the budget") {
  CHECK_THROWS_AS(LensEnumerator(3, 3, 1000), BudgetExceeded);
  try {
    LensEnumerator it(3, 3, 1000);
  } catch (const BudgetExceeded& e) {
    CHECK(e.lenses_visited == 0);
    CHECK(e.scale_searched == Scale{0, 0});
  }
}

TEST_CASE("first counterexample for the round-trip weakening") {
  SearchOutcome outcome = find_counterexample(LawSet{Law::GP}, Law::SG, 3, 3);
  REQUIRE(outcome.found.has_value());
  const Counterexample& hit = *outcome.found;
  CHECK(hit.index == LensIndex{2, 1, 0, 2});
  CHECK(*hit.lens.get == std::vector<int>{0, 0});
  CHECK(hit.lens.put == std::vector<int>{0, 1});
  CHECK(hit.witness.law == Law::SG);
  CHECK(hit.witness.binding.s == 0);
  CHECK(hit.witness.binding.s_prime == 1);
  CHECK(outcome.lenses_visited == 6);
  CHECK(outcome.scale_searched == Scale{2, 1});
  CHECK(verify_witness(hit.lens, hit.witness));
  CHECK(oracle::refutes(hit.lens, hit.witness));
  CHECK(oracle::holds(hit.lens, Law::GP));
}

TEST_CASE("sound rules admit no counterexample") {
  SearchOutcome outcome = find_counterexample(LawSet{Law::SG}, Law::GP, 2, 2);
  CHECK_FALSE(outcome.found.has_value());
  CHECK(outcome.scale_searched == Scale{2, 2});
  CHECK(outcome.lenses_visited == 71);
}

TEST_CASE("search respects the lens budget") {
  SearchConfig config;
  config.budget = 5;
  CHECK_THROWS_AS(
      (void)find_counterexample(LawSet{Law::SG}, Law::GP, 2, 2, config),
      BudgetExceeded);
  try {
    (void)find_counterexample(LawSet{Law::SG}, Law::GP, 2, 2, config);
  } catch (const BudgetExceeded& e) {
    CHECK(e.scale_searched == Scale{1, 2});
    CHECK(e.lenses_visited == 3);
  }
}

TEST_CASE("sweep totals and purity at small scale") {
  SweepReport report = soundness_sweep(2, 2);
  CHECK(report.total_lenses == 71);
  CHECK(report.violation_count == 0);
  CHECK_FALSE(report.first_violation.has_value());
  REQUIRE(report.spaces.size() == 4);
  CHECK(report.spaces[0].s_size == 1);
  CHECK(report.spaces[0].v_size == 1);
  CHECK(report.spaces[0].lens_count == 1);
  CHECK(report.spaces[0].distinct_profiles == 1);
  for (int law = 0; law < kLawCount; ++law) {
    CHECK(report.spaces[0].law_hold_counts[law] == 1);
  }

  std::string text = report.to_text();
  CHECK(text.find("total lenses: 71") != std::string::npos);
  CHECK(text.find("0 violations") != std::string::npos);
}

TEST_CASE("sweep is schedule-independent") {
  SearchConfig serial;
  serial.threads = 1;
  SearchConfig parallel;
  parallel.threads = 4;
  SweepReport a = soundness_sweep(2, 3, serial);
  SweepReport b = soundness_sweep(2, 3, parallel);
  CHECK(a == b);
  CHECK(a.to_text() == b.to_text());
}

TEST_CASE("a deliberately bogus rule is caught by the sweep") {
  std::vector<ImplicationRule> rules = {{1, {Law::GP}, Law::SG, "bogus"}};
  SweepReport report = soundness_sweep(3, 3, SearchConfig{}, rules);
  CHECK(report.violation_count > 0);
  REQUIRE(report.first_violation.has_value());
  CHECK(report.first_violation->rule_index == 1);
  CHECK(report.first_violation->lens == LensIndex{2, 1, 0, 2});
  CHECK(report.to_text().find("first violation: rule 1 at (2, 1)") !=
        std::string::npos);
}

TEST_CASE("profile census over the smallest spaces") {
  auto tiny = profile_census(1, 1);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny.begin()->first == LawSet::all());
  CHECK(tiny.begin()->second == 1);

  auto census = profile_census(2, 1);
  std::uint64_t total = 0;
  for (const auto& [profile, count] : census) total += count;
  CHECK(total == 4);
  REQUIRE(census.size() == 3);
  LawSet all_but_sg = LawSet::all() - LawSet{Law::SG};
  LawSet trivial_m1{Law::PG, Law::PP, Law::WP, Law::PT, Law::VD, Law::PI};
  LawSet undo_only{Law::PG, Law::WP, Law::UD, Law::PS, Law::VD, Law::PI};
  REQUIRE(census.count(all_but_sg) == 1);
  REQUIRE(census.count(trivial_m1) == 1);
  REQUIRE(census.count(undo_only) == 1);
  CHECK(census.at(all_but_sg) == 1);
  CHECK(census.at(trivial_m1) == 2);
  CHECK(census.at(undo_only) == 1);
}

TEST_CASE("census agrees with the reference loops") {
  auto census = profile_census(2, 2);
  std::map<LawSet, std::uint64_t> expected;
  LensEnumerator it(2, 2);
  while (auto lens = it.next()) {
    LawSet profile;
    for (Law law : all_laws()) {
      if (oracle::holds(*lens, law)) profile.insert(law);
    }
    ++expected[profile];
  }
  CHECK(census == expected);
}

TEST_CASE("candidate survey statuses") {
  auto survey = candidate_survey(1, 2, 2);
  CHECK(survey.size() == 110);

  auto find = [&](LawSet premises, Law conclusion) -> const CandidateReport& {
    for (const auto& candidate : survey) {
      if (candidate.premises == premises && candidate.conclusion == conclusion) {
        return candidate;
      }
    }
    REQUIRE(false);
    return survey.front();
  };

  const auto& derived = find(LawSet{Law::SG}, Law::GP);
  REQUIRE(std::holds_alternative<CandidateDerivable>(derived.status));
  const auto& chain = std::get<CandidateDerivable>(derived.status).chain;
  REQUIRE(chain.steps.size() == 1);
  CHECK(chain.steps.front().rule_index == 1);

  const auto& refuted = find(LawSet{Law::GP}, Law::SG);
  REQUIRE(std::holds_alternative<CandidateRefuted>(refuted.status));
  const auto& hit = std::get<CandidateRefuted>(refuted.status).counterexample;
  CHECK(hit.index == LensIndex{2, 1, 0, 2});
  CHECK(verify_witness(hit.lens, hit.witness));

  for (const auto& candidate : survey) {
    CHECK_FALSE(candidate.premises.contains(candidate.conclusion));
    CHECK(candidate.premises.size() == 1);
    if (const auto* d = std::get_if<CandidateDerivable>(&candidate.status)) {
      CHECK(d->chain.goal == candidate.conclusion);
    } else if (const auto* r = std::get_if<CandidateRefuted>(&candidate.status)) {
      const FiniteLens& lens = r->counterexample.lens;
      for (Law premise : candidate.premises.to_vector()) {
        CHECK(oracle::holds(lens, premise));
      }
      CHECK_FALSE(oracle::holds(lens, candidate.conclusion));
      CHECK(r->counterexample.witness.law == candidate.conclusion);
    }
  }
}

TEST_CASE("survey is schedule-independent") {
  SearchConfig serial;
  serial.threads = 1;
  SearchConfig parallel;
  parallel.threads = 3;
  auto a = candidate_survey(2, 2, 2, serial);
  auto b = candidate_survey(2, 2, 2, parallel);
  CHECK(a == b);
}

TEST_CASE("survey candidate ordering is by size then canonical laws") {
  auto survey = candidate_survey(2, 1, 1);
  REQUIRE(survey.size() > 112);
  CHECK(survey[0].premises == LawSet{Law::SG});
  CHECK(survey[0].conclusion == Law::GP);
  CHECK(survey[9].premises == LawSet{Law::SG});
  CHECK(survey[9].conclusion == Law::PI);
  CHECK(survey[10].premises == LawSet{Law::GP});
  CHECK(survey[10].conclusion == Law::SG);
  CHECK(survey[110].premises == LawSet{Law::SG, Law::GP});
}

TEST_CASE("seeded sampling is reproducible and validated") {
  RandomSearchOutcome first =
      random_search(LawSet{Law::GP}, Law::SG, 2, 1, 500, 42);
  RandomSearchOutcome second =
      random_search(LawSet{Law::GP}, Law::SG, 2, 1, 500, 42);
  CHECK(first.found == second.found);
  CHECK(first.samples_drawn == second.samples_drawn);

  REQUIRE(first.found.has_value());
  CHECK(first.found->index.s_size == 2);
  CHECK(first.found->index.v_size == 1);
  CHECK(oracle::holds(first.found->lens, Law::GP));
  CHECK(oracle::refutes(first.found->lens, first.found->witness));
  CHECK(first.samples_drawn >= 1);
  CHECK(first.samples_drawn <= 500);

  RandomSearchOutcome none =
      random_search(LawSet{Law::SG}, Law::GP, 2, 2, 50, 7);
  CHECK_FALSE(none.found.has_value());
  CHECK(none.samples_drawn == 50);
}
