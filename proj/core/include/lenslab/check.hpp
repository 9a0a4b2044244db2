#ifndef LENSLAB_CHECK_HPP
#define LENSLAB_CHECK_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "lenslab/laws.hpp"
#include "lenslab/lens.hpp"

namespace lenslab {

/// Requesting a get-involving law on a put-only lens, or replaying a witness
/// whose binding falls outside the lens carriers.
class CarrierMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Values for the quantified variables of a law instance, in the fixed
/// variable order (s, s′, v, v′). Only the variables the law actually
/// quantifies are set.
struct Binding {
  std::optional<int> s;
  std::optional<int> s_prime;
  std::optional<int> v;
  std::optional<int> v_prime;

  bool operator==(const Binding&) const = default;
};

/// A concrete law failure on a specific lens.
///
/// For equational laws, `lhs`/`rhs` are the two sides of the equation under
/// `binding` (lhs ≠ rhs). For the conditional laws VD/PI the binding makes the
/// put-equality antecedent true while the views differ; lhs/rhs are those two
/// views. For the existential laws SS/PS the binding holds only `s`, the
/// element whose existential search is empty, and lhs = rhs = s.
struct ViolationWitness {
  Law law = Law::SG;
  Binding binding;
  int lhs = 0;
  int rhs = 0;

  bool operator==(const ViolationWitness&) const = default;
};

/// Result of a single law check: empty means the law holds over the full
/// carriers; otherwise the canonically least witness (lexicographic in the
/// variable order s, s′, v, v′).
using CheckResult = std::optional<ViolationWitness>;

/// Decides `law` on `lens` by exhaustive quantifier evaluation.
/// Throws CarrierMismatch when a get-involving law is requested on a lens
/// without get, std::invalid_argument when the lens tables are not total.
CheckResult check_law(const FiniteLens& lens, Law law);

/// { law | check_law(lens, law) holds }, restricted to put-only laws when the
/// lens has no get. Each law is decided independently.
LawSet law_profile(const FiniteLens& lens);

/// Replays the witness's law equation with its binding on `lens`; true iff
/// the violation reproduces. Throws CarrierMismatch when a binding value is
/// outside the lens carriers.
bool verify_witness(const FiniteLens& lens, const ViolationWitness& w);

namespace detail {
/// Same as check_law but assumes the lens was already validated.
CheckResult check_law_unchecked(const FiniteLens& lens, Law law);
}  // namespace detail

}  // namespace lenslab

#endif  // LENSLAB_CHECK_HPP
