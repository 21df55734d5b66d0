#include "spinorss/curvature_io.hpp"

#include <sstream>

#include "spinorss/errors.hpp"
#include "spinorss/scalar_parser.hpp"

#include <nlohmann/json.hpp>

namespace spinorss {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad input document: ") + e.what());
    }
}

std::string require_string(const json& j, const std::string& what) {
    if (!j.is_string()) throw ParseError(what + " must be a string");
    return j.get<std::string>();
}

const char* verdict_name(Verdict::State s) {
    switch (s) {
        case Verdict::State::holds: return "holds";
        case Verdict::State::holds_iff: return "holds iff residuals vanish";
        case Verdict::State::fails_generically: return "fails generically";
    }
    return "?";
}

json verdict_json(const Verdict& v, const SymbolTable& table) {
    json j;
    j["state"] = v.state == Verdict::State::holds
                     ? "holds"
                     : (v.state == Verdict::State::holds_iff ? "holds_iff" : "fails_generically");
    j["residuals"] = json::array();
    for (const auto& g : v.generators) j["residuals"].push_back(g.str());
    if (v.witness && !v.witness->values.empty()) {
        json w = json::object();
        for (const auto& [id, value] : v.witness->values) w[table.name(id)] = value.str();
        j["witness"] = std::move(w);
    }
    return j;
}

} // namespace

ParsedInput parse_input(const std::string& json_text) {
    const json doc = parse_json(json_text);
    if (!doc.is_object()) throw ParseError("input document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "lambda" && key != "psi" && key != "phi" && key != "symbols" &&
            key != "assume_nonzero" && key != "petrov_hint")
            throw ParseError("unknown input field '" + key + "'");
    }

    ParsedInput out;
    out.set.table = SymbolTable::create();
    const auto& table = out.set.table;

    if (doc.contains("symbols")) {
        if (!doc["symbols"].is_array()) throw ParseError("'symbols' must be an array");
        for (const auto& s : doc["symbols"]) {
            if (!s.is_object() || !s.contains("name") || !s.contains("kind"))
                throw ParseError("each symbol needs {name, kind}");
            const std::string name = require_string(s["name"], "symbol name");
            const std::string kind = require_string(s["kind"], "symbol kind");
            if (name == "i") throw ParseError("'i' is reserved for the imaginary unit");
            if (kind != "real" && kind != "complex")
                throw ParseError("symbol kind must be 'real' or 'complex'");
            try {
                table->intern(name,
                              kind == "real" ? SymbolKind::real_valued : SymbolKind::complex_valued);
            } catch (const Error& e) {
                throw ParseError(e.what());
            }
        }
    }

    if (!doc.contains("lambda")) throw ParseError("missing 'lambda'");
    out.set.scalar.lambda = parse_scalar(require_string(doc["lambda"], "'lambda'"), table);
    if (!out.set.scalar.lambda.is_self_conjugate())
        throw ConjugationMismatch("lambda must be self-conjugate");

    if (!doc.contains("psi") || !doc["psi"].is_array() || doc["psi"].size() != 5)
        throw ParseError("'psi' must be an array of 5 scalars");
    for (int n = 0; n < 5; ++n)
        out.set.weyl.psi[n] = parse_scalar(require_string(doc["psi"][n], "'psi' entry"), table);

    if (!doc.contains("phi") || !doc["phi"].is_array() || doc["phi"].size() != 3)
        throw ParseError("'phi' must be a 3x3 array of scalars");
    for (int a = 0; a < 3; ++a) {
        if (!doc["phi"][a].is_array() || doc["phi"][a].size() != 3)
            throw ParseError("'phi' must be a 3x3 array of scalars");
        for (int b = 0; b < 3; ++b)
            out.set.ricci.phi[a][b] =
                parse_scalar(require_string(doc["phi"][a][b], "'phi' entry"), table);
    }
    out.set.ricci.check_hermitian();

    if (doc.contains("assume_nonzero")) {
        if (!doc["assume_nonzero"].is_array()) throw ParseError("'assume_nonzero' must be an array");
        for (const auto& n : doc["assume_nonzero"]) {
            const std::string name = require_string(n, "'assume_nonzero' entry");
            auto id = table->find(name);
            if (!id) throw ParseError("assume_nonzero references undeclared symbol '" + name + "'");
            out.assumptions.nonzero.insert(*id);
        }
    }

    if (doc.contains("petrov_hint")) {
        const std::string hint = require_string(doc["petrov_hint"], "'petrov_hint'");
        auto t = parse_petrov(hint);
        if (!t) throw ParseError("bad petrov_hint '" + hint + "'");
        out.petrov_hint = *t;
    }
    return out;
}

std::string format_input(const ParsedInput& input) {
    json doc;
    const auto& table = *input.set.table;
    doc["lambda"] = input.set.scalar.lambda.str();
    doc["psi"] = json::array();
    for (const auto& p : input.set.weyl.psi) doc["psi"].push_back(p.str());
    doc["phi"] = json::array();
    for (int a = 0; a < 3; ++a) {
        json row = json::array();
        for (int b = 0; b < 3; ++b) row.push_back(input.set.ricci.phi[a][b].str());
        doc["phi"].push_back(std::move(row));
    }
    doc["symbols"] = json::array();
    for (SymbolId id : table.primary_symbols()) {
        const SymbolInfo inf = table.info(id);
        doc["symbols"].push_back(
            {{"name", inf.name},
             {"kind", inf.kind == SymbolKind::real_valued ? "real" : "complex"}});
    }
    doc["assume_nonzero"] = json::array();
    for (SymbolId id : input.assumptions.nonzero) doc["assume_nonzero"].push_back(table.name(id));
    if (input.petrov_hint) doc["petrov_hint"] = to_string(*input.petrov_hint);
    return doc.dump(2) + "\n";
}

std::string classification_report_text(const ClassificationReport& report,
                                       const ParsedInput& input) {
    std::ostringstream os;
    os << "petrov type:  " << to_string(report.petrov)
       << (report.petrov_declared ? " (declared)" : "") << "\n";
    os << "segre type:   " << report.segre.label;
    if (!report.segre.bindings.empty()) {
        os << " (";
        for (std::size_t k = 0; k < report.segre.bindings.size(); ++k)
            os << (k ? "; " : "") << report.segre.bindings[k];
        os << ")";
    }
    os << "\n";
    const auto& table = *input.set.table;
    auto line = [&](const char* name, const Verdict& v) {
        os << name << verdict_name(v.state);
        if (!v.generators.empty()) {
            os << " [";
            for (std::size_t k = 0; k < v.generators.size(); ++k)
                os << (k ? ", " : "") << v.generators[k].str();
            os << "]";
        }
        os << "\n";
        if (v.witness && !v.witness->values.empty() &&
            v.state == Verdict::State::fails_generically)
            os << "    witness: " << v.witness->to_text(table) << "\n";
    };
    line("conformally semi-symmetric: ", report.verdicts.conformal);
    line("ricci semi-symmetric:       ", report.verdicts.ricci);
    line("semi-symmetric:             ", report.verdicts.semisymmetric);
    return os.str();
}

std::string classification_report_json(const ClassificationReport& report,
                                       const ParsedInput& input) {
    json j;
    const auto& table = *input.set.table;
    j["petrov"] = to_string(report.petrov);
    j["petrov_declared"] = report.petrov_declared;
    j["segre"] = {{"label", report.segre.label}, {"bindings", report.segre.bindings}};
    j["conformal"] = verdict_json(report.verdicts.conformal, table);
    j["ricci"] = verdict_json(report.verdicts.ricci, table);
    j["semisymmetric"] = verdict_json(report.verdicts.semisymmetric, table);
    j["residuals"] = report.residuals;
    j["input"] = json::parse(format_input(input));
    return j.dump(2) + "\n";
}

std::string kernel_report_text(const KernelReport& report) {
    std::ostringstream os;
    os << "petrov type: " << to_string(report.petrov) << "\n";
    os << "kernel dimension: " << report.dimension << "\n";
    for (const auto& b : report.basis) {
        os << "  basis: " << b.direction;
        if (b.direction == "mixed") {
            os << " [";
            for (int j = 0; j < 9; ++j) {
                if (b.coords[std::size_t(j)].is_zero()) continue;
                os << " (" << j / 3 << "," << j % 3 << ")=" << b.coords[std::size_t(j)].str();
            }
            os << " ]";
        }
        os << "\n";
    }
    if (report.dimension > 0) {
        os << "conditions on the kernel:";
        if (report.conditions_on_kernel.empty()) os << " none (vanishes identically)";
        os << "\n";
        for (const auto& c : report.conditions_on_kernel) {
            const Monomial content = c.monomial_content();
            if (!content.is_unit() && c.terms().size() > 1) {
                // display with the monomial content split off
                Polynomial rest = c.divided_by(content);
                Polynomial m(1);
                for (const auto& [s, e] : content.factors())
                    m *= Polynomial::symbol(c.table(), s).pow(e);
                os << "  " << m.str() << "*(" << rest.str() << ") = 0\n";
            } else {
                os << "  " << c.str() << " = 0\n";
            }
        }
    }
    if (!report.genericity.empty()) {
        os << "genericity assumptions:\n";
        for (const auto& g : report.genericity) os << "  " << g.str() << " != 0\n";
    }
    return os.str();
}

std::string kernel_report_json(const KernelReport& report) {
    json j;
    j["petrov"] = to_string(report.petrov);
    j["which"] = report.which == KernelWhich::S1 ? "S1"
                                                 : (report.which == KernelWhich::Mixed5 ? "mixed" : "both");
    j["dimension"] = report.dimension;
    j["basis"] = json::array();
    for (const auto& b : report.basis) {
        json v;
        v["direction"] = b.direction;
        v["coords"] = json::array();
        for (const auto& c : b.coords) v["coords"].push_back(c.str());
        j["basis"].push_back(std::move(v));
    }
    j["conditions_on_kernel"] = json::array();
    for (const auto& c : report.conditions_on_kernel) j["conditions_on_kernel"].push_back(c.str());
    j["genericity"] = json::array();
    for (const auto& g : report.genericity) j["genericity"].push_back(g.str());
    return j.dump(2) + "\n";
}

} // namespace spinorss
