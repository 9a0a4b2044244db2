#ifndef LENSLAB_TOOLS_LENS_DOCUMENT_HPP
#define LENSLAB_TOOLS_LENS_DOCUMENT_HPP

#include <string>

#include <json.hpp>

#include "lenslab/lens.hpp"

namespace lenslab::cli {

/// Parses the lens file format: a JSON object with s_size, v_size, an
/// optional get array of s_size view indices, and a put table of s_size rows
/// of v_size source indices. Throws std::invalid_argument with a diagnostic
/// naming the offending key or index.
FiniteLens parse_lens_document(const std::string& text);

FiniteLens load_lens_document(const std::string& path);

nlohmann::ordered_json lens_to_json(const FiniteLens& lens);

/// One-line document that parse_lens_document accepts back.
std::string lens_to_json_line(const FiniteLens& lens);

}  // namespace lenslab::cli

#endif  // LENSLAB_TOOLS_LENS_DOCUMENT_HPP
