#pragma once

#include <optional>
#include <string>

namespace spinorss {

/// Algebraic type of the Weyl tensor by multiplicity partition of the
/// principal null directions: {1,1,1,1} I, {2,1,1} II, {2,2} D,
/// {3,1} III, {4} N, vanishing Weyl O.
enum class PetrovType { I, II, D, III, N, O };

inline const char* to_string(PetrovType t) {
    switch (t) {
        case PetrovType::I: return "I";
        case PetrovType::II: return "II";
        case PetrovType::D: return "D";
        case PetrovType::III: return "III";
        case PetrovType::N: return "N";
        case PetrovType::O: return "O";
    }
    return "?";
}

inline std::optional<PetrovType> parse_petrov(const std::string& s) {
    if (s == "I") return PetrovType::I;
    if (s == "II") return PetrovType::II;
    if (s == "III") return PetrovType::III;
    if (s == "D") return PetrovType::D;
    if (s == "N") return PetrovType::N;
    if (s == "O" || s == "0") return PetrovType::O;
    return std::nullopt;
}

} // namespace spinorss
