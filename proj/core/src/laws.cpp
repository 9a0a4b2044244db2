#include "lenslab/laws.hpp"

#include <cctype>

namespace lenslab {

namespace {

constexpr std::array<LawInfo, kLawCount> kLawTable = {{
    {Law::SG, "SG", "StrongGetPut", "∀s,s′: put(s, get(s′)) = s′",
     false, true, false, false},
    {Law::GP, "GP", "GetPut", "∀s: put(s, get(s)) = s",
     false, true, false, false},
    {Law::PG, "PG", "PutGet", "∀s,v: get(put(s, v)) = v",
     false, false, true, false},
    {Law::PP, "PP", "PutPut", "∀s,v,v′: put(put(s, v), v′) = put(s, v′)",
     true, false, false, true},
    {Law::WP, "WP", "WeakPutGet", "∀s,v: put(s, get(put(s, v))) = put(s, v)",
     false, true, true, false},
    {Law::UD, "UD", "Undoability", "∀s,v: put(put(s, v), get(s)) = s",
     false, true, false, false},
    {Law::PT, "PT", "PutTwice", "∀s,v: put(put(s, v), v) = put(s, v)",
     true, false, false, true},
    {Law::SS, "SS", "SourceStability", "∀s ∃v: put(s, v) = s",
     true, true, false, false},
    {Law::PS, "PS", "PutSurjectivity", "∀s ∃s′,v: put(s′, v) = s",
     true, true, false, false},
    {Law::VD, "VD", "ViewDetermination",
     "∀s,s′,v,v′: put(s, v) = put(s′, v′) ⟹ v = v′",
     true, false, true, false},
    {Law::PI, "PI", "PutInjectivity",
     "∀s,v,v′: put(s, v) = put(s, v′) ⟹ v = v′",
     true, false, true, false},
}};

constexpr std::array<Law, kLawCount> kAllLaws = {
    Law::SG, Law::GP, Law::PG, Law::PP, Law::WP, Law::UD,
    Law::PT, Law::SS, Law::PS, Law::VD, Law::PI,
};

}  // namespace

const LawInfo& law_info(Law law) { return kLawTable[static_cast<int>(law)]; }

const std::array<Law, kLawCount>& all_laws() { return kAllLaws; }

LawSet LawSet::put_only_laws() {
  LawSet s;
  for (Law l : kAllLaws) {
    if (law_info(l).put_only) s.insert(l);
  }
  return s;
}

std::vector<Law> LawSet::to_vector() const {
  std::vector<Law> out;
  for (Law l : kAllLaws) {
    if (contains(l)) out.push_back(l);
  }
  return out;
}

bool law_in_family(Law law, Family family) {
  const LawInfo& info = law_info(law);
  switch (family) {
    case Family::GetPut: return info.in_getput;
    case Family::PutGet: return info.in_putget;
    case Family::PutPut: return info.in_putput;
  }
  return false;
}

std::vector<Family> families_of(Law law) {
  std::vector<Family> out;
  for (Family f : {Family::GetPut, Family::PutGet, Family::PutPut}) {
    if (law_in_family(law, f)) out.push_back(f);
  }
  return out;
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::GetPut: return "GetPut";
    case Family::PutGet: return "PutGet";
    case Family::PutPut: return "PutPut";
  }
  return "?";
}

std::string_view law_name(Law law) { return law_info(law).name; }

std::optional<Law> parse_law(std::string_view name) {
  if (name.size() != 2) return std::nullopt;
  char a = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  char b = static_cast<char>(std::toupper(static_cast<unsigned char>(name[1])));
  for (const LawInfo& info : kLawTable) {
    if (info.name[0] == a && info.name[1] == b) return info.law;
  }
  return std::nullopt;
}

std::string to_string(LawSet set) {
  if (set.empty()) return "(none)";
  std::string out;
  for (Law l : kAllLaws) {
    if (!set.contains(l)) continue;
    if (!out.empty()) out += ' ';
    out += law_name(l);
  }
  return out;
}

}  // namespace lenslab
