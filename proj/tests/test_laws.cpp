#include <doctest.h>

#include <algorithm>
#include <set>

#include "lenslab/laws.hpp"

using namespace lenslab;

TEST_CASE("canonical law order") {
  REQUIRE(kLawCount == 11);
  const auto& laws = all_laws();
  REQUIRE(laws.size() == 11);
  std::vector<std::string_view> names;
  for (Law l : laws) names.push_back(law_name(l));
  CHECK(names == std::vector<std::string_view>{"SG", "GP", "PG", "PP", "WP", "UD",
                                               "PT", "SS", "PS", "VD", "PI"});
  for (int i = 0; i < kLawCount; ++i) CHECK(static_cast<int>(laws[i]) == i);
}

TEST_CASE("long names") {
  CHECK(law_info(Law::SG).long_name == "StrongGetPut");
  CHECK(law_info(Law::GP).long_name == "GetPut");
  CHECK(law_info(Law::PG).long_name == "PutGet");
  CHECK(law_info(Law::PP).long_name == "PutPut");
  CHECK(law_info(Law::WP).long_name == "WeakPutGet");
  CHECK(law_info(Law::UD).long_name == "Undoability");
  CHECK(law_info(Law::PT).long_name == "PutTwice");
  CHECK(law_info(Law::SS).long_name == "SourceStability");
  CHECK(law_info(Law::PS).long_name == "PutSurjectivity");
  CHECK(law_info(Law::VD).long_name == "ViewDetermination");
  CHECK(law_info(Law::PI).long_name == "PutInjectivity");
}

TEST_CASE("put-only laws never mention get") {
  LawSet expected{Law::PP, Law::PT, Law::SS, Law::PS, Law::VD, Law::PI};
  CHECK(LawSet::put_only_laws() == expected);
  for (Law l : all_laws()) {
    bool mentions_get =
        law_info(l).equation.find("get") != std::string_view::npos;
    CHECK(law_info(l).put_only == !mentions_get);
  }
}

TEST_CASE("family membership") {
  auto family_set = [](Family f) {
    std::set<Law> out;
    for (Law l : all_laws()) {
      auto fams = families_of(l);
      if (std::find(fams.begin(), fams.end(), f) != fams.end()) out.insert(l);
    }
    return out;
  };
  CHECK(family_set(Family::GetPut) ==
        std::set<Law>{Law::SG, Law::GP, Law::UD, Law::WP, Law::SS, Law::PS});
  CHECK(family_set(Family::PutGet) ==
        std::set<Law>{Law::PG, Law::WP, Law::VD, Law::PI});
  CHECK(family_set(Family::PutPut) == std::set<Law>{Law::PP, Law::PT});
  CHECK(families_of(Law::WP) ==
        std::vector<Family>{Family::GetPut, Family::PutGet});
  CHECK(family_name(Family::GetPut) == "GetPut");
}

TEST_CASE("parse_law accepts short names case-insensitively") {
  CHECK(parse_law("SG") == Law::SG);
  CHECK(parse_law("sg") == Law::SG);
  CHECK(parse_law("Pi") == Law::PI);
  CHECK(parse_law("vd") == Law::VD);
  CHECK_FALSE(parse_law("").has_value());
  CHECK_FALSE(parse_law("XX").has_value());
  CHECK_FALSE(parse_law("GetPut").has_value());
}

TEST_CASE("law set operations") {
  LawSet a{Law::SG, Law::GP};
  LawSet b{Law::GP, Law::PI};
  CHECK((a | b) == LawSet{Law::SG, Law::GP, Law::PI});
  CHECK((a & b) == LawSet{Law::GP});
  CHECK((a - b) == LawSet{Law::SG});
  CHECK(a.size() == 2);
  CHECK(LawSet{}.empty());
  CHECK(LawSet::all().size() == 11);
  CHECK(a.subset_of(LawSet::all()));
  CHECK_FALSE(LawSet::all().subset_of(a));
  CHECK(LawSet::from_bits(a.bits()) == a);

  LawSet c = a;
  c.insert(Law::VD);
  c.erase(Law::SG);
  CHECK(c == LawSet{Law::GP, Law::VD});
  CHECK(c.contains(Law::VD));
  CHECK_FALSE(c.contains(Law::SG));
}

TEST_CASE("law set rendering follows canonical order") {
  CHECK(to_string(LawSet{}) == "(none)");
  CHECK(to_string(LawSet{Law::PI, Law::SG, Law::WP}) == "SG WP PI");
  CHECK(to_string(LawSet::all()) == "SG GP PG PP WP UD PT SS PS VD PI");
  auto v = LawSet{Law::PI, Law::SG}.to_vector();
  CHECK(v == std::vector<Law>{Law::SG, Law::PI});
}
