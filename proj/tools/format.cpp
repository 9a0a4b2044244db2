#include "format.hpp"

#include <sstream>

#include "lens_document.hpp"

namespace lenslab::cli {

namespace {

nlohmann::ordered_json gallery_view_to_json(const GalleryView& value) {
  if (const Int* single = std::get_if<Int>(&value)) return single->str();
  const ViewPair& pair = std::get<ViewPair>(value);
  return nlohmann::ordered_json::array({pair.first.str(), pair.second.str()});
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "structured") return OutputFormat::Structured;
  throw std::invalid_argument("unknown format: " + name + " (expected text or structured)");
}

std::string law_list(LawSet set) { return to_string(set); }

std::string describe_rule(const ImplicationRule& rule) {
  std::ostringstream out;
  out << "rule " << rule.index << ": ";
  bool first = true;
  for (Law law : rule.premises.to_vector()) {
    if (!first) out << " ∧ ";
    out << law_name(law);
    first = false;
  }
  out << " ⇒ " << law_name(rule.conclusion);
  return out.str();
}

std::string describe_step(const ProofStep& step) {
  std::ostringstream out;
  out << "rule " << step.rule_index << " (";
  bool first = true;
  for (Law law : step.premises_used.to_vector()) {
    if (!first) out << " ∧ ";
    out << law_name(law);
    first = false;
  }
  out << " ⇒ " << law_name(step.conclusion) << ")";
  return out.str();
}

std::string describe_binding(const Binding& binding) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  auto field = [&](const char* name, const std::optional<int>& value) {
    if (!value) return;
    if (!first) out << ", ";
    out << name << "=" << *value;
    first = false;
  };
  field("s", binding.s);
  field("s′", binding.s_prime);
  field("v", binding.v);
  field("v′", binding.v_prime);
  out << "}";
  return out.str();
}

std::string describe_witness(const ViolationWitness& witness) {
  std::ostringstream out;
  out << law_name(witness.law) << " violated " << describe_binding(witness.binding)
      << ": ";
  switch (witness.law) {
    case Law::SS:
      out << "no view stabilizes the source";
      break;
    case Law::PS:
      out << "the source is outside the image of put";
      break;
    case Law::VD:
    case Law::PI:
      out << "views " << witness.lhs << " and " << witness.rhs << " collide";
      break;
    default:
      out << "lhs=" << witness.lhs << " rhs=" << witness.rhs;
      break;
  }
  return out.str();
}

std::string describe_counterexample(const Counterexample& counterexample) {
  std::ostringstream out;
  out << "counterexample at (" << counterexample.index.s_size << ", "
      << counterexample.index.v_size << ") get_code=" << counterexample.index.get_code
      << " put_code=" << counterexample.index.put_code << "\n";
  out << "lens: " << lens_to_json_line(counterexample.lens) << "\n";
  out << describe_witness(counterexample.witness);
  return out.str();
}

std::string describe_gallery_witness(const GalleryWitness& witness) {
  std::ostringstream out;
  out << law_name(witness.law) << " violated {";
  bool first = true;
  auto field = [&](const char* name, const std::string& value) {
    if (!first) out << ", ";
    out << name << "=" << value;
    first = false;
  };
  if (witness.s) field("s", witness.s->str());
  if (witness.s_prime) field("s′", witness.s_prime->str());
  if (witness.v) field("v", to_string(*witness.v));
  if (witness.v_prime) field("v′", to_string(*witness.v_prime));
  out << "}";
  switch (witness.law) {
    case Law::SS:
      out << ": no stabilizing view within window " << witness.window;
      break;
    case Law::PS:
      out << ": no put reaches the source within window " << witness.window;
      break;
    default:
      if (witness.lhs && witness.rhs) {
        out << ": lhs=" << to_string(*witness.lhs) << " rhs=" << to_string(*witness.rhs);
      }
      break;
  }
  return out.str();
}

nlohmann::ordered_json law_set_to_json(LawSet set) {
  nlohmann::ordered_json names = nlohmann::ordered_json::array();
  for (Law law : set.to_vector()) names.push_back(std::string(law_name(law)));
  return names;
}

nlohmann::ordered_json witness_to_json(const ViolationWitness& witness) {
  nlohmann::ordered_json document;
  document["law"] = std::string(law_name(witness.law));
  nlohmann::ordered_json binding;
  if (witness.binding.s) binding["s"] = *witness.binding.s;
  if (witness.binding.s_prime) binding["s_prime"] = *witness.binding.s_prime;
  if (witness.binding.v) binding["v"] = *witness.binding.v;
  if (witness.binding.v_prime) binding["v_prime"] = *witness.binding.v_prime;
  document["binding"] = std::move(binding);
  document["lhs"] = witness.lhs;
  document["rhs"] = witness.rhs;
  return document;
}

nlohmann::ordered_json chain_to_json(const ProofChain& chain) {
  nlohmann::ordered_json document;
  document["goal"] = std::string(law_name(chain.goal));
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const ProofStep& step : chain.steps) {
    nlohmann::ordered_json entry;
    entry["rule"] = step.rule_index;
    entry["premises"] = law_set_to_json(step.premises_used);
    entry["conclusion"] = std::string(law_name(step.conclusion));
    steps.push_back(std::move(entry));
  }
  document["steps"] = std::move(steps);
  return document;
}

nlohmann::ordered_json counterexample_to_json(const Counterexample& counterexample) {
  nlohmann::ordered_json document;
  document["s_size"] = counterexample.index.s_size;
  document["v_size"] = counterexample.index.v_size;
  document["get_code"] = counterexample.index.get_code;
  document["put_code"] = counterexample.index.put_code;
  document["lens"] = lens_to_json(counterexample.lens);
  document["witness"] = witness_to_json(counterexample.witness);
  return document;
}

nlohmann::ordered_json gallery_witness_to_json(const GalleryWitness& witness) {
  nlohmann::ordered_json document;
  document["law"] = std::string(law_name(witness.law));
  document["window"] = witness.window;
  nlohmann::ordered_json binding;
  if (witness.s) binding["s"] = witness.s->str();
  if (witness.s_prime) binding["s_prime"] = witness.s_prime->str();
  if (witness.v) binding["v"] = gallery_view_to_json(*witness.v);
  if (witness.v_prime) binding["v_prime"] = gallery_view_to_json(*witness.v_prime);
  document["binding"] = std::move(binding);
  if (witness.lhs) document["lhs"] = gallery_view_to_json(*witness.lhs);
  if (witness.rhs) document["rhs"] = gallery_view_to_json(*witness.rhs);
  return document;
}

}  // namespace lenslab::cli
