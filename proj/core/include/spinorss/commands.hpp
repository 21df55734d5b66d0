#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "spinorss/classify.hpp"

namespace spinorss {

// Exit codes: 0 success, 1 verification/golden mismatch, 2 input error.

struct ClassifyOptions {
    std::string file;
    bool machine = false;
};
int run_classify(const ClassifyOptions& opts, std::ostream& out, std::ostream& err);

/// The identity and rank claims, fully symbolically; prints one pass/fail
/// line per claim.
int run_verify_identities(std::ostream& out);

struct TableOptions {
    std::optional<std::string> golden; // compare the text grid byte-exactly
    bool machine = false;
};
int run_table(const TableOptions& opts, std::ostream& out, std::ostream& err);

struct KernelOptions {
    PetrovType petrov = PetrovType::D;
    KernelWhich which = KernelWhich::Both;
    bool machine = false;
};
int run_kernel(const KernelOptions& opts, std::ostream& out, std::ostream& err);

} // namespace spinorss
