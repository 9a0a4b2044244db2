#ifndef LENSLAB_GALLERY_HPP
#define LENSLAB_GALLERY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lenslab/laws.hpp"

namespace lenslab {

using Int = boost::multiprecision::cpp_int;
using ViewPair = std::pair<Int, Int>;

/// A view value of either carrier shape: plain integers for most entries,
/// integer pairs for the one entry whose views are products.
using GalleryView = std::variant<Int, ViewPair>;

std::string to_string(const GalleryView& value);

/// Largest integer q with q * denominator <= numerator; denominator > 0.
Int floor_div(const Int& numerator, const Int& denominator);

inline constexpr int kDefaultWindow = 16;

struct IntLens {
  std::function<Int(const Int&)> get;  // empty for put-only entries
  std::function<Int(const Int&, const Int&)> put;
};

struct PairLens {
  std::function<ViewPair(const Int&)> get;
  std::function<Int(const Int&, const ViewPair&)> put;
};

struct GalleryEntry {
  std::string name;
  std::string get_formula;  // empty for put-only entries
  std::string put_formula;
  std::variant<IntLens, PairLens> lens;
  LawSet claimed_holds;
  LawSet claimed_fails;
  std::string source_note;

  bool has_get() const;
};

/// Violation found while quantifying over the symmetric window [-N, N]
/// (window^2 for pair views), scanned outward from zero: 0, 1, -1, 2, -2 and
/// so on, nesting variables in the order s, s', v, v'. Equational and
/// conditional law witnesses are unconditional refutations; existential law
/// witnesses (SS, PS) only record that no in-window value satisfies the law
/// for the bound source.
struct GalleryWitness {
  Law law = Law::SG;
  int window = 0;
  std::optional<Int> s;
  std::optional<Int> s_prime;
  std::optional<GalleryView> v;
  std::optional<GalleryView> v_prime;
  std::optional<GalleryView> lhs;
  std::optional<GalleryView> rhs;

  bool operator==(const GalleryWitness&) const = default;
};

enum class GalleryVerdict {
  ConsistentWithClaim,  // claimed to hold, no violation in the window
  WitnessFound,         // claimed to fail, violation witnessed
  WindowTooSmall,       // claimed to fail, no witness; enlarge the window
  ClaimViolated,        // claimed to hold, yet a witness exists
};

std::string_view to_string(GalleryVerdict verdict);

struct GalleryLawReport {
  Law law = Law::SG;
  bool claimed_to_hold = false;
  GalleryVerdict verdict = GalleryVerdict::ConsistentWithClaim;
  std::optional<GalleryWitness> witness;
};

struct WindowReport {
  std::string entry;
  int window = 0;
  std::vector<GalleryLawReport> laws;  // claimed laws in canonical order

  bool conforms() const;
  bool window_too_small() const;
};

class UnknownEntry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The fixed registry of twelve example lenses over integer carriers.
const std::vector<GalleryEntry>& list_gallery();

const GalleryEntry& find_entry(std::string_view name);  // throws UnknownEntry

/// Checks every claimed law of the named entry by exhaustive exact
/// evaluation over the window. window >= 1.
WindowReport gallery_check(std::string_view name, int window = kDefaultWindow);

/// Re-evaluates a witness against the named entry's exact functions: true
/// when it demonstrates a genuine violation. Missing bindings, mismatched
/// view shapes, or sides that disagree with a recorded lhs/rhs yield false.
bool gallery_replay(std::string_view name, const GalleryWitness& witness);

}  // namespace lenslab

#endif  // LENSLAB_GALLERY_HPP
