#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "spinorss/polynomial.hpp"

namespace spinorss {

enum class Primedness : std::uint8_t { unprimed, primed };
enum class Variance : std::uint8_t { lower, upper };

struct IndexSlot {
    Primedness primedness = Primedness::unprimed;
    Variance variance = Variance::lower;
    friend bool operator==(const IndexSlot&, const IndexSlot&) = default;
};

inline IndexSlot lower_unprimed() { return {Primedness::unprimed, Variance::lower}; }
inline IndexSlot lower_primed() { return {Primedness::primed, Variance::lower}; }

/// Dense spinor with two-valued indices over polynomial scalars.
/// Component layout: slot 0 is the most significant bit of the flat
/// index, so a 4-slot spinor's component [0,1,1,0] sits at flat 0b0110.
///
/// Conventions (Penrose-Rindler): eps_{01} = eps^{01} = +1 with see-saw
/// raising kappa^A = eps^{AB} kappa_B and kappa_A = kappa^B eps_{BA}.
/// contract(i, j) sums the diagonal of an upper/lower slot pair; the
/// orientation lives in which slot was raised, so contracting after
/// raising the other slot of a pair flips the sign.
class GeneralSpinor {
  public:
    GeneralSpinor() : comp_(1) {} // 0-slot scalar, value 0
    explicit GeneralSpinor(std::vector<IndexSlot> slots);
    static GeneralSpinor scalar(const Polynomial& value);

    /// eps_{AB}: two lower slots, eps_01 = +1, eps_10 = -1.
    /// The upper variant carries the same numeric components.
    static GeneralSpinor epsilon(Primedness p = Primedness::unprimed,
                                 Variance v = Variance::lower);

    std::size_t slot_count() const { return slots_.size(); }
    const std::vector<IndexSlot>& slots() const { return slots_; }
    std::size_t component_count() const { return comp_.size(); }

    const Polynomial& at(std::size_t flat) const { return comp_.at(flat); }
    const Polynomial& at(const std::vector<int>& idx) const { return comp_.at(flat_of(idx)); }
    void set(std::size_t flat, Polynomial value) { comp_.at(flat) = std::move(value); }
    void set(const std::vector<int>& idx, Polynomial value) {
        comp_.at(flat_of(idx)) = std::move(value);
    }
    std::size_t flat_of(const std::vector<int>& idx) const;
    std::vector<int> index_of(std::size_t flat) const;

    bool is_zero() const;
    friend bool operator==(const GeneralSpinor& a, const GeneralSpinor& b) {
        return a.slots_ == b.slots_ && a.comp_ == b.comp_;
    }

    GeneralSpinor raise(std::size_t slot) const; // VarianceMismatch on an upper slot
    GeneralSpinor lower(std::size_t slot) const; // VarianceMismatch on a lower slot

    /// Removes slots i and j (opposite variance, equal primedness) and
    /// sums over the paired value.
    GeneralSpinor contract(std::size_t i, std::size_t j) const;

    /// Average over all permutations of the subset; slots must share
    /// primedness and variance. Idempotent.
    GeneralSpinor symmetrize(const std::vector<std::size_t>& subset) const;

    /// new slot k := old slot perm[k].
    GeneralSpinor permute_slots(const std::vector<std::size_t>& perm) const;

    static GeneralSpinor outer(const GeneralSpinor& a, const GeneralSpinor& b);
    friend GeneralSpinor operator+(const GeneralSpinor& a, const GeneralSpinor& b);
    friend GeneralSpinor operator-(const GeneralSpinor& a, const GeneralSpinor& b);
    GeneralSpinor scaled(const Polynomial& c) const;
    GeneralSpinor scaled(const GaussianRational& c) const;

    /// Flips primedness of every slot, conjugates every component, and
    /// reorders slots so the unprimed block precedes the primed block
    /// (stable within each block). An involution.
    GeneralSpinor conj() const;

    std::string str(const std::string& name = "S") const;

  private:
    std::vector<IndexSlot> slots_;
    std::vector<Polynomial> comp_;
};

std::ostream& operator<<(std::ostream& os, const GeneralSpinor& s);

/// Applies `m_unprimed` to every lower unprimed slot and `m_primed` to
/// every lower primed slot; throws UpperSlot if any slot is raised.
using DyadMatrix = std::array<std::array<GaussianRational, 2>, 2>;
GeneralSpinor transform_slots(const GeneralSpinor& s, const DyadMatrix& m_unprimed,
                              const DyadMatrix& m_primed);

/// Flat indices of the independent components of a spinor that is
/// symmetric within each listed group of slot positions (values
/// non-decreasing inside every group), ascending.
std::vector<std::size_t> independent_component_indices(
    std::size_t slot_count, const std::vector<std::vector<std::size_t>>& groups);

} // namespace spinorss
