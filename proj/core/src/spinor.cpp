#include "spinorss/spinor.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "spinorss/errors.hpp"

namespace spinorss {

GeneralSpinor::GeneralSpinor(std::vector<IndexSlot> slots)
    : slots_(std::move(slots)), comp_(std::size_t(1) << slots_.size()) {
    if (slots_.size() > 16) throw Error("spinor rank out of range");
}

GeneralSpinor GeneralSpinor::scalar(const Polynomial& value) {
    GeneralSpinor s;
    s.comp_[0] = value;
    return s;
}

GeneralSpinor GeneralSpinor::epsilon(Primedness p, Variance v) {
    GeneralSpinor s({IndexSlot{p, v}, IndexSlot{p, v}});
    s.comp_[0b01] = Polynomial(1);
    s.comp_[0b10] = Polynomial(-1);
    return s;
}

std::size_t GeneralSpinor::flat_of(const std::vector<int>& idx) const {
    if (idx.size() != slots_.size()) throw Error("index arity mismatch");
    std::size_t flat = 0;
    for (int v : idx) {
        if (v != 0 && v != 1) throw Error("spinor index out of range");
        flat = (flat << 1) | std::size_t(v);
    }
    return flat;
}

std::vector<int> GeneralSpinor::index_of(std::size_t flat) const {
    std::vector<int> idx(slots_.size());
    for (std::size_t k = 0; k < slots_.size(); ++k)
        idx[k] = int((flat >> (slots_.size() - 1 - k)) & 1);
    return idx;
}

bool GeneralSpinor::is_zero() const {
    return std::all_of(comp_.begin(), comp_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

GeneralSpinor GeneralSpinor::raise(std::size_t slot) const {
    if (slot >= slots_.size()) throw Error("slot out of range");
    if (slots_[slot].variance != Variance::lower)
        throw VarianceMismatch("raise on an already-upper slot");
    GeneralSpinor out = *this;
    out.slots_[slot].variance = Variance::upper;
    const std::size_t bit = std::size_t(1) << (slots_.size() - 1 - slot);
    // kappa^0 = kappa_1, kappa^1 = -kappa_0
    for (std::size_t f = 0; f < comp_.size(); ++f) {
        if (f & bit) out.comp_[f] = -comp_[f & ~bit];
        else out.comp_[f] = comp_[f | bit];
    }
    return out;
}

GeneralSpinor GeneralSpinor::lower(std::size_t slot) const {
    if (slot >= slots_.size()) throw Error("slot out of range");
    if (slots_[slot].variance != Variance::upper)
        throw VarianceMismatch("lower on an already-lower slot");
    GeneralSpinor out = *this;
    out.slots_[slot].variance = Variance::lower;
    const std::size_t bit = std::size_t(1) << (slots_.size() - 1 - slot);
    // kappa_0 = -kappa^1, kappa_1 = kappa^0
    for (std::size_t f = 0; f < comp_.size(); ++f) {
        if (f & bit) out.comp_[f] = comp_[f & ~bit];
        else out.comp_[f] = -comp_[f | bit];
    }
    return out;
}

GeneralSpinor GeneralSpinor::contract(std::size_t i, std::size_t j) const {
    if (i == j || i >= slots_.size() || j >= slots_.size()) throw Error("bad contraction slots");
    if (slots_[i].primedness != slots_[j].primedness)
        throw PrimednessMismatch("contraction across primed/unprimed slots");
    if (slots_[i].variance == slots_[j].variance)
        throw VarianceMismatch("contraction requires one upper and one lower slot");
    std::vector<IndexSlot> out_slots;
    for (std::size_t k = 0; k < slots_.size(); ++k)
        if (k != i && k != j) out_slots.push_back(slots_[k]);
    GeneralSpinor out(out_slots);
    const std::size_t n = slots_.size();
    for (std::size_t f = 0; f < out.comp_.size(); ++f) {
        const auto rest = out.index_of(f);
        std::vector<int> idx(n);
        std::size_t r = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (k != i && k != j) idx[k] = rest[r++];
        Polynomial sum;
        for (int v = 0; v <= 1; ++v) {
            idx[i] = v;
            idx[j] = v;
            sum += comp_[flat_of(idx)];
        }
        out.comp_[f] = std::move(sum);
    }
    return out;
}

GeneralSpinor GeneralSpinor::symmetrize(const std::vector<std::size_t>& subset) const {
    if (subset.empty()) return *this;
    for (std::size_t k : subset) {
        if (k >= slots_.size()) throw Error("symmetrize slot out of range");
        if (slots_[k] != slots_[subset[0]])
            throw MixedSlots("symmetrization across slots of different kind");
    }
    std::vector<std::size_t> perm(subset.size());
    std::iota(perm.begin(), perm.end(), 0);
    GeneralSpinor acc(slots_);
    std::size_t count = 0;
    do {
        GeneralSpinor term(slots_);
        for (std::size_t f = 0; f < comp_.size(); ++f) {
            auto idx = index_of(f);
            auto src = idx;
            for (std::size_t k = 0; k < subset.size(); ++k) src[subset[k]] = idx[subset[perm[k]]];
            term.comp_[flat_of(src)] = comp_[f];
        }
        acc = acc + term;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const GaussianRational w = GaussianRational(1) / GaussianRational(long(count));
    return acc.scaled(w);
}

GeneralSpinor GeneralSpinor::permute_slots(const std::vector<std::size_t>& perm) const {
    if (perm.size() != slots_.size()) throw Error("permutation arity mismatch");
    std::vector<IndexSlot> out_slots(slots_.size());
    for (std::size_t k = 0; k < perm.size(); ++k) out_slots[k] = slots_[perm[k]];
    GeneralSpinor out(out_slots);
    for (std::size_t f = 0; f < comp_.size(); ++f) {
        const auto t = out.index_of(f);
        std::vector<int> s(slots_.size());
        for (std::size_t k = 0; k < perm.size(); ++k) s[perm[k]] = t[k];
        out.comp_[f] = comp_[flat_of(s)];
    }
    return out;
}

GeneralSpinor GeneralSpinor::outer(const GeneralSpinor& a, const GeneralSpinor& b) {
    std::vector<IndexSlot> slots = a.slots_;
    slots.insert(slots.end(), b.slots_.begin(), b.slots_.end());
    GeneralSpinor out(slots);
    for (std::size_t fa = 0; fa < a.comp_.size(); ++fa) {
        if (a.comp_[fa].is_zero()) continue;
        for (std::size_t fb = 0; fb < b.comp_.size(); ++fb) {
            if (b.comp_[fb].is_zero()) continue;
            out.comp_[(fa << b.slots_.size()) | fb] = a.comp_[fa] * b.comp_[fb];
        }
    }
    return out;
}

GeneralSpinor operator+(const GeneralSpinor& a, const GeneralSpinor& b) {
    if (a.slots_ != b.slots_) throw SignatureMismatch("adding spinors of different signature");
    GeneralSpinor out(a.slots_);
    for (std::size_t f = 0; f < a.comp_.size(); ++f) out.comp_[f] = a.comp_[f] + b.comp_[f];
    return out;
}

GeneralSpinor operator-(const GeneralSpinor& a, const GeneralSpinor& b) {
    return a + b.scaled(GaussianRational(-1));
}

GeneralSpinor GeneralSpinor::scaled(const Polynomial& c) const {
    GeneralSpinor out(slots_);
    for (std::size_t f = 0; f < comp_.size(); ++f) out.comp_[f] = comp_[f] * c;
    return out;
}

GeneralSpinor GeneralSpinor::scaled(const GaussianRational& c) const {
    GeneralSpinor out(slots_);
    for (std::size_t f = 0; f < comp_.size(); ++f) out.comp_[f] = comp_[f].scaled(c);
    return out;
}

GeneralSpinor GeneralSpinor::conj() const {
    std::vector<IndexSlot> flipped = slots_;
    for (auto& s : flipped)
        s.primedness = s.primedness == Primedness::unprimed ? Primedness::primed
                                                            : Primedness::unprimed;
    // stable partition: unprimed block first
    std::vector<std::size_t> perm;
    for (std::size_t k = 0; k < flipped.size(); ++k)
        if (flipped[k].primedness == Primedness::unprimed) perm.push_back(k);
    for (std::size_t k = 0; k < flipped.size(); ++k)
        if (flipped[k].primedness == Primedness::primed) perm.push_back(k);
    std::vector<IndexSlot> out_slots(flipped.size());
    for (std::size_t k = 0; k < perm.size(); ++k) out_slots[k] = flipped[perm[k]];
    GeneralSpinor out(out_slots);
    for (std::size_t f = 0; f < comp_.size(); ++f) {
        const auto t = out.index_of(f);
        std::vector<int> s(slots_.size());
        for (std::size_t k = 0; k < perm.size(); ++k) s[perm[k]] = t[k];
        out.comp_[f] = comp_[flat_of(s)].conj();
    }
    return out;
}

std::string GeneralSpinor::str(const std::string& name) const {
    std::ostringstream os;
    os << name << "(";
    for (std::size_t k = 0; k < slots_.size(); ++k) {
        os << (slots_[k].variance == Variance::lower ? "l" : "u");
        if (slots_[k].primedness == Primedness::primed) os << "'";
    }
    os << ")";
    bool any = false;
    for (std::size_t f = 0; f < comp_.size(); ++f) {
        if (comp_[f].is_zero()) continue;
        os << "\n  " << name << "[";
        for (int v : index_of(f)) os << v;
        os << "] = " << comp_[f].str();
        any = true;
    }
    if (!any) os << " = 0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GeneralSpinor& s) { return os << s.str(); }

GeneralSpinor transform_slots(const GeneralSpinor& s, const DyadMatrix& m_unprimed,
                              const DyadMatrix& m_primed) {
    GeneralSpinor out = s;
    for (std::size_t k = 0; k < s.slot_count(); ++k) {
        const IndexSlot slot = s.slots()[k];
        if (slot.variance != Variance::lower)
            throw UpperSlot("dyad transform expects all-lower slots");
        const DyadMatrix& m =
            slot.primedness == Primedness::unprimed ? m_unprimed : m_primed;
        GeneralSpinor next(out.slots());
        const std::size_t bit = std::size_t(1) << (s.slot_count() - 1 - k);
        for (std::size_t f = 0; f < out.component_count(); ++f) {
            const int a = (f & bit) ? 1 : 0;
            Polynomial v = out.at(f & ~bit).scaled(m[a][0]) + out.at(f | bit).scaled(m[a][1]);
            next.set(f, std::move(v));
        }
        out = next;
    }
    return out;
}

std::vector<std::size_t> independent_component_indices(
    std::size_t slot_count, const std::vector<std::vector<std::size_t>>& groups) {
    std::vector<std::size_t> out;
    const std::size_t total = std::size_t(1) << slot_count;
    for (std::size_t f = 0; f < total; ++f) {
        bool canonical = true;
        for (const auto& g : groups) {
            for (std::size_t k = 1; k < g.size() && canonical; ++k) {
                const int prev = int((f >> (slot_count - 1 - g[k - 1])) & 1);
                const int cur = int((f >> (slot_count - 1 - g[k])) & 1);
                if (prev > cur) canonical = false;
            }
            if (!canonical) break;
        }
        if (canonical) out.push_back(f);
    }
    return out;
}

} // namespace spinorss
