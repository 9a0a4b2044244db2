#ifndef LENSLAB_TOOLS_FORMAT_HPP
#define LENSLAB_TOOLS_FORMAT_HPP

#include <string>

#include <json.hpp>

#include "lenslab/check.hpp"
#include "lenslab/gallery.hpp"
#include "lenslab/laws.hpp"
#include "lenslab/rules.hpp"
#include "lenslab/search.hpp"

namespace lenslab::cli {

enum class OutputFormat { Text, Structured };

OutputFormat parse_format(const std::string& name);  // "text" | "structured"

/// Law names separated by spaces; "(none)" for the empty set.
std::string law_list(LawSet set);

std::string describe_rule(const ImplicationRule& rule);   // "rule 7: SS ∧ WP ⇒ GP"
std::string describe_step(const ProofStep& step);
std::string describe_binding(const Binding& binding);     // "{s=0, s′=1}"
std::string describe_witness(const ViolationWitness& witness);
std::string describe_counterexample(const Counterexample& counterexample);
std::string describe_gallery_witness(const GalleryWitness& witness);

nlohmann::ordered_json law_set_to_json(LawSet set);
nlohmann::ordered_json witness_to_json(const ViolationWitness& witness);
nlohmann::ordered_json chain_to_json(const ProofChain& chain);
nlohmann::ordered_json counterexample_to_json(const Counterexample& counterexample);
nlohmann::ordered_json gallery_witness_to_json(const GalleryWitness& witness);

}  // namespace lenslab::cli

#endif  // LENSLAB_TOOLS_FORMAT_HPP
