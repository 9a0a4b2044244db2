#ifndef LENSLAB_TOOLS_COMMANDS_HPP
#define LENSLAB_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "format.hpp"

namespace lenslab::cli {

// Exit codes shared by every command.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOpen = 3;

struct CheckOptions {
  std::string path;
  std::vector<std::string> laws;  // empty: every law the lens can answer
  OutputFormat format = OutputFormat::Text;
};

struct ClosureOptions {
  std::vector<std::string> laws;
  OutputFormat format = OutputFormat::Text;
};

struct ImpliesOptions {
  std::vector<std::string> terms;  // premises..., optional "->", goal
  int max_s = 3;
  int max_v = 3;
  std::uint64_t budget = 10'000'000;
  int threads = 1;
  std::optional<std::uint64_t> seed;  // enables the sampling fallback
  std::uint64_t samples = 10'000;
  int rand_s = 0;  // 0: max_s + 1
  int rand_v = 0;  // 0: max_v + 1
  OutputFormat format = OutputFormat::Text;
};

struct SweepOptions {
  int max_s = 3;
  int max_v = 3;
  std::uint64_t budget = 10'000'000;
  int threads = 1;
  OutputFormat format = OutputFormat::Text;
};

struct CensusOptions {
  int s_size = 2;
  int v_size = 2;
  std::uint64_t budget = 10'000'000;
  int threads = 1;
  OutputFormat format = OutputFormat::Text;
};

struct SurveyOptions {
  int max_premise_size = 2;
  int max_s = 3;
  int max_v = 3;
  std::uint64_t budget = 10'000'000;
  int threads = 1;
  OutputFormat format = OutputFormat::Text;
};

struct GalleryOptions {
  std::string name;  // empty: list the registry
  int window = 16;
  OutputFormat format = OutputFormat::Text;
};

int cmd_laws(OutputFormat format, std::ostream& out);
int cmd_check(const CheckOptions& options, std::ostream& out);
int cmd_closure(const ClosureOptions& options, std::ostream& out);
int cmd_implies(const ImpliesOptions& options, std::ostream& out);
int cmd_sweep(const SweepOptions& options, std::ostream& out);
int cmd_census(const CensusOptions& options, std::ostream& out);
int cmd_survey(const SurveyOptions& options, std::ostream& out);
int cmd_dot(std::ostream& out);
int cmd_gallery(const GalleryOptions& options, std::ostream& out);

}  // namespace lenslab::cli

#endif  // LENSLAB_TOOLS_COMMANDS_HPP
