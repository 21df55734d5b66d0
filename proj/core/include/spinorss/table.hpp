#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinorss/classify.hpp"

namespace spinorss {

struct TableCell {
    std::string row_label;
    PetrovType column;
    std::string label; // "semi-sym" | "Ric s-s" | "conf s-s" | "-" | the nonexistence mark
    bool exists = true;
    std::vector<std::string> residuals;
    std::optional<std::string> witness;
};

struct TableDocument {
    std::vector<std::string> row_labels;
    std::vector<TableCell> cells; // row-major in (row, column) order
    std::string to_text() const;
    std::string to_json() const;

    const TableCell& cell(std::size_t row, PetrovType col) const;
};

/// Builds every (row, Petrov column) family of the classification table,
/// evaluates the semi-symmetry predicates on the generic member, and
/// assembles the document (deterministic cell order and content).
TableDocument reproduce_table();

} // namespace spinorss
