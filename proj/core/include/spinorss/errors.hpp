#pragma once

#include <stdexcept>
#include <string>

namespace spinorss {

/// Base class for all errors raised by the engine.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// scalar layer
struct ConjugationMismatch : Error { using Error::Error; };
struct SymbolicCoefficient : Error { using Error::Error; };

// spinor layer
struct VarianceMismatch : Error { using Error::Error; };
struct PrimednessMismatch : Error { using Error::Error; };
struct MixedSlots : Error { using Error::Error; };
struct SignatureMismatch : Error { using Error::Error; };
struct UpperSlot : Error { using Error::Error; };

// curvature / classification layer
struct NotUnimodular : Error { using Error::Error; };
struct UnknownPattern : Error { using Error::Error; };
struct InconsistentInstantiationRank : Error { using Error::Error; };

// input layer
struct ParseError : Error { using Error::Error; };
struct HermiticityError : Error { using Error::Error; };

} // namespace spinorss
