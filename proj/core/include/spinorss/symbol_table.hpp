#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace spinorss {

using SymbolId = std::uint32_t;

enum class SymbolKind : std::uint8_t { real_valued, complex_valued };

struct SymbolInfo {
    std::string name;
    SymbolKind kind;
    SymbolId conjugate; // partner id; equals own id for real symbols
    bool primary;       // false for auto-created `_bar` partners
};

/// Append-only interning table. A complex symbol is interned together with
/// its `_bar` conjugate partner; a real symbol is its own conjugate.
/// Symbol ids double as the (lexicographic) variable order for monomials.
class SymbolTable {
  public:
    static std::shared_ptr<SymbolTable> create() { return std::make_shared<SymbolTable>(); }

    /// Interns `name`; idempotent. Throws if the name is already interned
    /// with a different kind, or if it carries the reserved `_bar` suffix.
    SymbolId intern(const std::string& name, SymbolKind kind);

    std::optional<SymbolId> find(const std::string& name) const;
    /// Returned by value: interning may reallocate the underlying storage.
    SymbolInfo info(SymbolId id) const;
    SymbolId conjugate_of(SymbolId id) const { return info(id).conjugate; }
    bool is_real(SymbolId id) const { return info(id).kind == SymbolKind::real_valued; }
    std::string name(SymbolId id) const { return info(id).name; }

    std::size_t size() const;
    /// Primary symbols in interning order (bar partners excluded).
    std::vector<SymbolId> primary_symbols() const;

  private:
    SymbolId push(const std::string& name, SymbolKind kind, bool primary);

    mutable std::mutex mu_;
    std::vector<SymbolInfo> symbols_;
    std::map<std::string, SymbolId> by_name_;
};

/// Side conditions a caller declares about a family of curvature values.
/// `nonzero` symbols are generically nonzero; each `not_all_zero` group
/// must not vanish simultaneously. Consulted only when turning residual
/// polynomials into verdicts, never by polynomial arithmetic itself.
struct Assumptions {
    std::set<SymbolId> nonzero;
    std::vector<std::set<SymbolId>> not_all_zero;
};

} // namespace spinorss
