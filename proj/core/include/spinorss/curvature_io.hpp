#pragma once

#include <optional>
#include <string>

#include "spinorss/classify.hpp"
#include "spinorss/curvature.hpp"

namespace spinorss {

/// A parsed input document: curvature set over a fresh symbol table plus
/// the declared assumptions and an optional Petrov hint for symbolic Weyl
/// components.
struct ParsedInput {
    CurvatureSet set;
    Assumptions assumptions;
    std::optional<PetrovType> petrov_hint;
};

/// Schema: {"lambda": scalar, "psi": [5 scalars], "phi": [3x3 scalars],
/// "symbols": [{"name","kind"}...], "assume_nonzero": [names...],
/// "petrov_hint": "D"}. Scalars use the textual scalar syntax. The upper
/// triangle of phi is authoritative; a present lower entry must equal the
/// conjugate of its mirror (HermiticityError otherwise) and lambda must be
/// self-conjugate (ConjugationMismatch).
ParsedInput parse_input(const std::string& json_text);

/// Canonical re-serialization; format(parse(x)) re-parses to an identical
/// curvature set.
std::string format_input(const ParsedInput& input);

std::string classification_report_text(const ClassificationReport& report,
                                       const ParsedInput& input);
std::string classification_report_json(const ClassificationReport& report,
                                       const ParsedInput& input);

std::string kernel_report_text(const KernelReport& report);
std::string kernel_report_json(const KernelReport& report);

} // namespace spinorss
