#ifndef LENSLAB_LENS_HPP
#define LENSLAB_LENS_HPP

#include <optional>
#include <string>
#include <vector>

namespace lenslab {

/// A lens tabulated over dense integer carriers S = {0..s_size-1} and
/// V = {0..v_size-1}. `get` may be absent, in which case only put-only laws
/// can be evaluated. `put` is row-major: put(s, v) = put[s * v_size + v].
struct FiniteLens {
  int s_size = 0;
  int v_size = 0;
  std::optional<std::vector<int>> get;  // size s_size, entries in [0, v_size)
  std::vector<int> put;                 // size s_size * v_size, entries in [0, s_size)

  int get_at(int s) const { return (*get)[static_cast<std::size_t>(s)]; }
  int put_at(int s, int v) const {
    return put[static_cast<std::size_t>(s) * static_cast<std::size_t>(v_size) +
               static_cast<std::size_t>(v)];
  }

  bool operator==(const FiniteLens&) const = default;
};

/// Diagnostic naming the first offending field/index, or empty if the lens is
/// total over its declared carriers.
std::optional<std::string> lens_validation_error(const FiniteLens& lens);

/// Throws std::invalid_argument with the diagnostic above.
void require_valid(const FiniteLens& lens);

/// Copy with the get component dropped.
FiniteLens without_get(const FiniteLens& lens);

}  // namespace lenslab

#endif  // LENSLAB_LENS_HPP
