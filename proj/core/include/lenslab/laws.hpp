#ifndef LENSLAB_LAWS_HPP
#define LENSLAB_LAWS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lenslab {

/// The eleven lens laws. Enum order is the canonical order used everywhere
/// (iteration, printing, set rendering): the four core laws first, then the
/// rest in presentation order.
enum class Law : std::uint8_t {
  SG,  // StrongGetPut:    ∀s,s′: put(s, get(s′)) = s′
  GP,  // GetPut:          ∀s: put(s, get(s)) = s
  PG,  // PutGet:          ∀s,v: get(put(s, v)) = v
  PP,  // PutPut:          ∀s,v,v′: put(put(s, v), v′) = put(s, v′)
  WP,  // WeakPutGet:      ∀s,v: put(s, get(put(s, v))) = put(s, v)
  UD,  // Undoability:     ∀s,v: put(put(s, v), get(s)) = s
  PT,  // PutTwice:        ∀s,v: put(put(s, v), v) = put(s, v)
  SS,  // SourceStability: ∀s ∃v: put(s, v) = s
  PS,  // PutSurjectivity: ∀s ∃s′,v: put(s′, v) = s
  VD,  // ViewDetermination: ∀s,s′,v,v′: put(s,v) = put(s′,v′) ⟹ v = v′
  PI,  // PutInjectivity:    ∀s,v,v′: put(s,v) = put(s,v′) ⟹ v = v′
};

inline constexpr int kLawCount = 11;

enum class Family : std::uint8_t { GetPut, PutGet, PutPut };

/// Immutable set of laws. Small value type backed by an 11-bit mask.
class LawSet {
 public:
  constexpr LawSet() = default;
  constexpr LawSet(std::initializer_list<Law> laws) {
    for (Law l : laws) insert(l);
  }

  static constexpr LawSet all() { return LawSet::from_bits((1u << kLawCount) - 1); }
  static LawSet put_only_laws();

  static constexpr LawSet from_bits(std::uint16_t bits) {
    LawSet s;
    s.bits_ = bits;
    return s;
  }
  constexpr std::uint16_t bits() const { return bits_; }

  constexpr bool contains(Law l) const { return (bits_ >> static_cast<int>(l)) & 1u; }
  constexpr void insert(Law l) { bits_ |= std::uint16_t(1u << static_cast<int>(l)); }
  constexpr void erase(Law l) { bits_ &= std::uint16_t(~(1u << static_cast<int>(l))); }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const {
    int n = 0;
    for (int i = 0; i < kLawCount; ++i) n += (bits_ >> i) & 1;
    return n;
  }
  constexpr bool subset_of(LawSet other) const { return (bits_ & other.bits_) == bits_; }

  constexpr LawSet operator|(LawSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr LawSet operator&(LawSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr LawSet operator-(LawSet o) const { return from_bits(bits_ & std::uint16_t(~o.bits_)); }

  constexpr bool operator==(const LawSet&) const = default;
  constexpr bool operator<(LawSet o) const { return bits_ < o.bits_; }

  /// Laws in canonical enum order.
  std::vector<Law> to_vector() const;

 private:
  std::uint16_t bits_ = 0;
};

/// Static metadata for one law.
struct LawInfo {
  Law law;
  std::string_view name;       // canonical short name, e.g. "SG"
  std::string_view long_name;  // e.g. "StrongGetPut"
  std::string_view equation;   // quantified formula, get/put notation
  bool put_only;               // equation never mentions get
  bool in_getput;
  bool in_putget;
  bool in_putput;
};

const LawInfo& law_info(Law law);
const std::array<Law, kLawCount>& all_laws();

bool law_in_family(Law law, Family family);
std::vector<Family> families_of(Law law);
std::string_view family_name(Family family);

std::string_view law_name(Law law);

/// Case-insensitive lookup by canonical short name. Empty on unknown names.
std::optional<Law> parse_law(std::string_view name);

/// Space-separated short names in canonical order, "(none)" for the empty set.
std::string to_string(LawSet set);

}  // namespace lenslab

#endif  // LENSLAB_LAWS_HPP
