#include "spinorss/symbol_table.hpp"

#include "spinorss/errors.hpp"

namespace spinorss {

namespace {
bool has_bar_suffix(const std::string& name) {
    return name.size() > 4 && name.compare(name.size() - 4, 4, "_bar") == 0;
}
} // namespace

SymbolId SymbolTable::push(const std::string& name, SymbolKind kind, bool primary) {
    const SymbolId id = static_cast<SymbolId>(symbols_.size());
    symbols_.push_back(SymbolInfo{name, kind, id, primary});
    by_name_.emplace(name, id);
    return id;
}

SymbolId SymbolTable::intern(const std::string& name, SymbolKind kind) {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = by_name_.find(name); it != by_name_.end()) {
        const SymbolInfo& existing = symbols_[it->second];
        if (existing.kind != kind)
            throw Error("symbol '" + name + "' already interned with a different kind");
        if (!existing.primary)
            throw Error("symbol '" + name + "' is a conjugate partner; intern the primary symbol");
        return it->second;
    }
    if (name.empty()) throw Error("empty symbol name");
    if (has_bar_suffix(name))
        throw Error("'" + name + "': the _bar suffix is reserved for conjugate partners");
    if (kind == SymbolKind::real_valued) return push(name, kind, true);
    const SymbolId id = push(name, kind, true);
    const SymbolId bar = push(name + "_bar", kind, false);
    symbols_[id].conjugate = bar;
    symbols_[bar].conjugate = id;
    return id;
}

std::optional<SymbolId> SymbolTable::find(const std::string& name) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
    return std::nullopt;
}

SymbolInfo SymbolTable::info(SymbolId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (id >= symbols_.size()) throw Error("symbol id out of range");
    return symbols_[id];
}

std::size_t SymbolTable::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return symbols_.size();
}

std::vector<SymbolId> SymbolTable::primary_symbols() const {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<SymbolId> out;
    for (SymbolId id = 0; id < symbols_.size(); ++id)
        if (symbols_[id].primary) out.push_back(id);
    return out;
}

} // namespace spinorss
