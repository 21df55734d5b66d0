#include "spinorss/table.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "spinorss/errors.hpp"

#include <nlohmann/json.hpp>

namespace spinorss {

namespace {

constexpr const char* kNoSuchFamily = "∄"; // ∄

const std::array<PetrovType, 6> kColumns = {PetrovType::I,  PetrovType::II, PetrovType::III,
                                            PetrovType::D,  PetrovType::N,  PetrovType::O};

enum class PhiSpec { zero, p11_only, p22_only, fluid, tachyon, generic };
enum class LambdaSpec { vacuum_or_term, free_scalar, zero, matched_psi2, matched_p11 };

struct RowSpec {
    std::string label;
    PhiSpec phi;
    LambdaSpec lambda;
};

const std::vector<RowSpec>& rows() {
    static const std::vector<RowSpec> r = {
        {"Lambda-term A1[(111,1)] or vacuum", PhiSpec::zero, LambdaSpec::vacuum_or_term},
        {"Lambda-term, Lambda = -1/2*Psi2", PhiSpec::zero, LambdaSpec::matched_psi2},
        {"A1[(11)(1,1)], Lambda = -1/2*Psi2", PhiSpec::p11_only, LambdaSpec::matched_psi2},
        {"A1[(11)(1,1)]", PhiSpec::p11_only, LambdaSpec::free_scalar},
        {"A3[(11,2)], Lambda = 0", PhiSpec::p22_only, LambdaSpec::zero},
        {"A1[(111),1] perfect fluid, Lambda = 1/2*Phi00' = Phi11' = 1/2*Phi22'",
         PhiSpec::fluid, LambdaSpec::matched_p11},
        {"A1[1(11,1)] tachyon fluid, Lambda = -1/2*Phi00' = Phi11' = -1/2*Phi22'",
         PhiSpec::tachyon, LambdaSpec::matched_p11},
        {"All other Ricci tensors", PhiSpec::generic, LambdaSpec::free_scalar},
    };
    return r;
}

PhiPattern pattern_of(PhiSpec p) {
    switch (p) {
        case PhiSpec::zero: return PhiPattern::vacuum;
        case PhiSpec::p11_only: return PhiPattern::a1_11_11;
        case PhiSpec::p22_only: return PhiPattern::a3_11_2;
        case PhiSpec::fluid: return PhiPattern::perfect_fluid;
        case PhiSpec::tachyon: return PhiPattern::tachyon;
        case PhiSpec::generic: return PhiPattern::generic;
    }
    throw UnknownPattern("bad phi spec");
}

struct FamilyEvaluation {
    PredicateVerdicts verdicts;
    std::vector<std::string> residuals;
    std::optional<std::string> witness;
};

FamilyEvaluation evaluate_family(PetrovType col, PhiSpec phi_spec, LambdaSpec lambda_spec,
                                 bool lambda_term_nonzero) {
    auto table = SymbolTable::create();
    WeylNaming naming;
    naming.psi2_real = lambda_spec == LambdaSpec::matched_psi2;
    const StandardWeyl sw = standard_weyl(col, table, naming);
    const StandardPhi sp = standard_phi(pattern_of(phi_spec), table);

    CurvatureSet c;
    c.table = table;
    c.weyl = sw.weyl;
    c.ricci = sp.ricci;

    Assumptions assumptions;
    assumptions.nonzero.insert(sw.assume_nonzero.begin(), sw.assume_nonzero.end());
    assumptions.nonzero.insert(sp.assume_nonzero.begin(), sp.assume_nonzero.end());

    switch (lambda_spec) {
        case LambdaSpec::zero:
            break;
        case LambdaSpec::matched_psi2:
            c.scalar.lambda = sw.weyl.psi[2].scaled(GaussianRational(BigRational(-1, 2)));
            break;
        case LambdaSpec::matched_p11:
            c.scalar.lambda = sp.ricci.phi[1][1];
            break;
        case LambdaSpec::free_scalar:
        case LambdaSpec::vacuum_or_term: {
            const Polynomial lam = Polynomial::symbol(table, "lam", SymbolKind::real_valued);
            c.scalar.lambda = lam;
            if (lambda_spec == LambdaSpec::vacuum_or_term && lambda_term_nonzero)
                assumptions.nonzero.insert(*lam.symbols().begin());
            break;
        }
    }
    if (phi_spec == PhiSpec::generic) {
        std::set<SymbolId> group;
        for (const char* n : {"p00", "p01", "p02", "p11", "p12", "p22"})
            if (auto id = table->find(n)) group.insert(*id);
        assumptions.not_all_zero.push_back(group);
    }
    c.validate();

    FamilyEvaluation out;
    out.verdicts = predicates(c, assumptions);
    auto collect = [&](const char* name, const Verdict& v) {
        for (const auto& g : v.generators)
            out.residuals.push_back(std::string(name) + ": " + g.str());
        if (!out.witness && v.witness) out.witness = v.witness->to_text(*table);
    };
    collect("conformal", out.verdicts.conformal);
    collect("ricci", out.verdicts.ricci);
    return out;
}

std::string label_for(bool conf_holds, bool ricci_holds) {
    if (conf_holds && ricci_holds) return "semi-sym";
    if (ricci_holds) return "Ric s-s";
    if (conf_holds) return "conf s-s";
    return "-";
}

std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char ch : s)
        if ((ch & 0xC0) != 0x80) ++w; // count codepoints
    return w;
}

std::string pad(const std::string& s, std::size_t width) {
    std::string out = s;
    for (std::size_t w = display_width(s); w < width; ++w) out += ' ';
    return out;
}

} // namespace

TableDocument reproduce_table() {
    TableDocument doc;
    for (const RowSpec& row : rows()) {
        doc.row_labels.push_back(row.label);
        for (PetrovType col : kColumns) {
            TableCell cell;
            cell.row_label = row.label;
            cell.column = col;
            // nonexistence: the row constraint references Psi2, identically
            // zero in the III / N / O standard forms
            if (row.lambda == LambdaSpec::matched_psi2 &&
                (col == PetrovType::III || col == PetrovType::N || col == PetrovType::O)) {
                cell.exists = false;
                cell.label = kNoSuchFamily;
                doc.cells.push_back(std::move(cell));
                continue;
            }
            if (row.lambda == LambdaSpec::vacuum_or_term) {
                // evaluated in both sub-cases; the cell takes the property
                // common to both
                const FamilyEvaluation term =
                    evaluate_family(col, row.phi, LambdaSpec::vacuum_or_term, true);
                const FamilyEvaluation vac = evaluate_family(col, row.phi, LambdaSpec::zero, false);
                const bool conf = term.verdicts.conformal.holds_identically() &&
                                  vac.verdicts.conformal.holds_identically();
                const bool ric = term.verdicts.ricci.holds_identically() &&
                                 vac.verdicts.ricci.holds_identically();
                cell.label = label_for(conf, ric);
                for (const auto& r : term.residuals) cell.residuals.push_back("lambda-term " + r);
                for (const auto& r : vac.residuals) cell.residuals.push_back("vacuum " + r);
                cell.witness = term.witness ? term.witness : vac.witness;
            } else {
                const FamilyEvaluation fam = evaluate_family(col, row.phi, row.lambda, false);
                cell.label = label_for(fam.verdicts.conformal.holds_identically(),
                                       fam.verdicts.ricci.holds_identically());
                cell.residuals = fam.residuals;
                cell.witness = fam.witness;
            }
            doc.cells.push_back(std::move(cell));
        }
    }
    return doc;
}

const TableCell& TableDocument::cell(std::size_t row, PetrovType col) const {
    for (const auto& c : cells)
        if (c.row_label == row_labels.at(row) && c.column == col) return c;
    throw Error("no such table cell");
}

std::string TableDocument::to_text() const {
    const std::string corner = "Segre type \\ Petrov type";
    std::size_t w = display_width(corner);
    for (const auto& l : row_labels) w = std::max(w, display_width(l));
    constexpr std::size_t cw = 8;

    std::ostringstream os;
    os << pad(corner, w);
    for (PetrovType col : kColumns) os << " | " << pad(to_string(col), cw);
    os << "\n";
    os << std::string(w + 1, '-');
    for (std::size_t k = 0; k < kColumns.size(); ++k) os << "+" << std::string(cw + 2, '-');
    os << "\n";
    std::size_t idx = 0;
    for (const auto& label : row_labels) {
        os << pad(label, w);
        for (std::size_t k = 0; k < kColumns.size(); ++k) {
            const TableCell& c = cells.at(idx++);
            os << " | " << pad(c.label, cw);
        }
        os << "\n";
    }
    os << "\n";
    os << "labels: semi-sym = conformally and Ricci semi-symmetric; Ric s-s / conf s-s =\n"
          "only that property holds identically; - = neither holds identically;\n"
       << kNoSuchFamily
       << " = the row constraint references a curvature component that vanishes\n"
          "identically in this column's standard form.\n"
          "\n"
          "notes:\n"
          "  A1[(11)(1,1)] at Petrov D: the generic cell is '-'; its semi-symmetric\n"
          "  sub-family Lambda = -1/2*Psi2 is the row above.\n"
          "  A1[(11)(1,1)] at Petrov O: conformal semi-symmetry holds identically and\n"
          "  Ricci semi-symmetry holds exactly on the Lambda = 0 sub-family.\n";
    return os.str();
}

std::string TableDocument::to_json() const {
    nlohmann::json j;
    j["columns"] = nlohmann::json::array();
    for (PetrovType col : kColumns) j["columns"].push_back(to_string(col));
    j["rows"] = nlohmann::json::array();
    std::size_t idx = 0;
    for (const auto& label : row_labels) {
        nlohmann::json row;
        row["label"] = label;
        row["cells"] = nlohmann::json::array();
        for (std::size_t k = 0; k < kColumns.size(); ++k) {
            const TableCell& c = cells.at(idx++);
            nlohmann::json cell;
            cell["column"] = to_string(c.column);
            cell["label"] = c.label;
            cell["exists"] = c.exists;
            cell["residuals"] = c.residuals;
            if (c.witness) cell["witness"] = *c.witness;
            row["cells"].push_back(std::move(cell));
        }
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

} // namespace spinorss
