#pragma once

#include "wbs/algebra.hpp"
#include "wbs/duality.hpp"
#include "wbs/presentation.hpp"
#include "wbs/sparse_matrix.hpp"

#include <string>
#include <variant>

namespace wbs {

// Diagram serialization is canonical on the structs themselves (serialize());
// this module adds parsing and the composite document formats.

using AnyDiagram = std::variant<KSuperDiagram, WalledDiagram>;

// Parses either diagram kind; throws std::invalid_argument with parse
// position or field information on malformed input.
AnyDiagram parse_diagram(const std::string& text);
WalledDiagram parse_walled(const std::string& text);
KSuperDiagram parse_k(const std::string& text);

std::string element_to_json(const WalledElement& x);
std::string element_to_json(const KElement& x);
WalledElement parse_walled_element(const std::string& text);

std::string matrix_to_json(const SparseExactMatrix& m);

std::string sign_report_to_json(const SergeevSignReport& r);
std::string sign_report_to_json(const WalledSignReport& r);
std::string duality_report_to_json(const DualityReport& r);
std::string relation_report_to_json(const RelationCheckReport& r);
std::string checks_to_json(const std::vector<CheckEntry>& checks);
std::string basis_form_to_json(const BasisXForm& f);

}  // namespace wbs
