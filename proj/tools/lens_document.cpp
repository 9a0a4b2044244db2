#include "lens_document.hpp"

#include <fstream>
#include <sstream>

namespace lenslab::cli {

namespace {

using nlohmann::json;

int require_size(const json& document, const char* key) {
  if (!document.contains(key)) {
    throw std::invalid_argument(std::string("lens document is missing \"") + key + "\"");
  }
  const json& value = document.at(key);
  if (!value.is_number_integer() || value.get<long long>() < 1) {
    throw std::invalid_argument(std::string("\"") + key + "\" must be a positive integer");
  }
  return value.get<int>();
}

int require_index(const json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    throw std::invalid_argument(where + " must be an integer");
  }
  return value.get<int>();
}

}  // namespace

FiniteLens parse_lens_document(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& error) {
    throw std::invalid_argument(std::string("invalid lens document: ") + error.what());
  }
  if (!document.is_object()) {
    throw std::invalid_argument("lens document must be a JSON object");
  }

  FiniteLens lens;
  lens.s_size = require_size(document, "s_size");
  lens.v_size = require_size(document, "v_size");

  if (document.contains("get") && !document.at("get").is_null()) {
    const json& get = document.at("get");
    if (!get.is_array() || get.size() != static_cast<std::size_t>(lens.s_size)) {
      std::ostringstream message;
      message << "\"get\" must be an array of s_size = " << lens.s_size << " entries";
      throw std::invalid_argument(message.str());
    }
    lens.get.emplace();
    lens.get->reserve(get.size());
    for (std::size_t s = 0; s < get.size(); ++s) {
      std::ostringstream where;
      where << "get[" << s << "]";
      lens.get->push_back(require_index(get.at(s), where.str()));
    }
  }

  if (!document.contains("put")) {
    throw std::invalid_argument("lens document is missing \"put\"");
  }
  const json& put = document.at("put");
  if (!put.is_array() || put.size() != static_cast<std::size_t>(lens.s_size)) {
    std::ostringstream message;
    message << "\"put\" must be an array of s_size = " << lens.s_size << " rows";
    throw std::invalid_argument(message.str());
  }
  lens.put.reserve(static_cast<std::size_t>(lens.s_size) * lens.v_size);
  for (std::size_t s = 0; s < put.size(); ++s) {
    const json& row = put.at(s);
    if (!row.is_array() || row.size() != static_cast<std::size_t>(lens.v_size)) {
      std::ostringstream message;
      message << "put[" << s << "] must be an array of v_size = " << lens.v_size
              << " entries";
      throw std::invalid_argument(message.str());
    }
    for (std::size_t v = 0; v < row.size(); ++v) {
      std::ostringstream where;
      where << "put[" << s << "][" << v << "]";
      lens.put.push_back(require_index(row.at(v), where.str()));
    }
  }

  if (auto error = lens_validation_error(lens)) {
    throw std::invalid_argument(*error);
  }
  return lens;
}

FiniteLens load_lens_document(const std::string& path) {
  std::ifstream input(path);
  if (!input) {
    throw std::invalid_argument("cannot open lens file: " + path);
  }
  std::ostringstream buffer;
  buffer << input.rdbuf();
  return parse_lens_document(buffer.str());
}

nlohmann::ordered_json lens_to_json(const FiniteLens& lens) {
  nlohmann::ordered_json document;
  document["s_size"] = lens.s_size;
  document["v_size"] = lens.v_size;
  if (lens.get) document["get"] = *lens.get;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int s = 0; s < lens.s_size; ++s) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int v = 0; v < lens.v_size; ++v) row.push_back(lens.put_at(s, v));
    rows.push_back(std::move(row));
  }
  document["put"] = std::move(rows);
  return document;
}

std::string lens_to_json_line(const FiniteLens& lens) {
  return lens_to_json(lens).dump();
}

}  // namespace lenslab::cli
