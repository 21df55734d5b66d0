#include "spinorss/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "spinorss/curvature_io.hpp"
#include "spinorss/errors.hpp"
#include "spinorss/table.hpp"

namespace spinorss {

namespace {

/// Fully symbolic curvature set: five complex Weyl symbols, a generic
/// Hermitian Phi, a real Lambda.
CurvatureSet symbolic_set() {
    auto table = SymbolTable::create();
    CurvatureSet c;
    c.table = table;
    for (int n = 0; n < 5; ++n)
        c.weyl.psi[n] =
            Polynomial::symbol(table, "psi" + std::to_string(n), SymbolKind::complex_valued);
    c.scalar.lambda = Polynomial::symbol(table, "lam", SymbolKind::real_valued);
    c.ricci = standard_phi(PhiPattern::generic, table).ricci;
    c.validate();
    return c;
}

std::string first_failing_component(const GeneralSpinor& s) {
    for (std::size_t f = 0; f < s.component_count(); ++f) {
        if (s.at(f).is_zero()) continue;
        std::ostringstream os;
        os << "component [";
        for (int v : s.index_of(f)) os << v;
        os << "] = " << s.at(f).str();
        return os.str();
    }
    return "all components vanish";
}

} // namespace

int run_verify_identities(std::ostream& out) {
    const CurvatureSet c = symbolic_set();
    int failures = 0;
    auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        out << (ok ? "PASS" : "FAIL") << "  " << name;
        if (!ok && !detail.empty()) out << "\n      first failing " << detail;
        out << "\n";
        if (!ok) ++failures;
    };

    {
        const GeneralSpinor lhs = box_on(c, c.ricci.expand(), BoxKind::unprimed_pair);
        const GeneralSpinor rhs = ricci_full_spinor(build_X(c), c.ricci.expand());
        const GeneralSpinor diff = lhs - rhs;
        report("ricci commutator equals the Box action on Phi", diff.is_zero(),
               first_failing_component(diff));
    }
    {
        const GeneralSpinor tr = ricci_full_trace(c);
        report("AB-trace of the ricci commutator vanishes", tr.is_zero(),
               first_failing_component(tr));
    }
    {
        const GeneralSpinor lhs = ricci_full_spinor(build_X(c), c.ricci.expand()).conj();
        const GeneralSpinor rhs = ricci_full_primed_spinor(build_X(c).conj(), c.ricci.expand());
        const GeneralSpinor diff = lhs - rhs;
        report("primed ricci commutator is the conjugate of the unprimed one", diff.is_zero(),
               first_failing_component(diff));
    }
    {
        const GeneralSpinor contraction = weyl_full_bc_contraction(c);
        const GeneralSpinor e6 = weyl_contracted_spinor(c.weyl.expand(), c.scalar.lambda);
        const auto factor = proportionality_factor(contraction, e6);
        const bool ok = factor.has_value() && !factor->is_zero() &&
                        *factor == GaussianRational(BigRational(3, 4));
        std::string detail = factor ? ("factor " + factor->str() + " (expected 3/4)")
                                    : std::string("spinors are not proportional");
        report("BC-contraction of the full Weyl condition is 3/4 of the contracted one", ok,
               detail);
    }
    {
        const GeneralSpinor from_x = ricci_s1_spinor(build_X(c), c.ricci.expand());
        const GeneralSpinor from_psi = ricci_s1_spinor(c.weyl.expand(), c.ricci.expand());
        const GeneralSpinor diff = from_x - from_psi;
        report("symmetrized Ricci part built from X equals the one built from Psi",
               diff.is_zero(), first_failing_component(diff));
    }
    {
        const RankReport r = verify_reduction_4_to_6(c);
        std::ostringstream os;
        os << "ranks (" << r.rank_a << ", " << r.rank_b << ", " << r.rank_union
           << "), expected (5, 5, 5)";
        report("full Weyl condition has rank 5 and is spanned by its contraction", r.pass,
               os.str());
    }
    {
        const RankReport r = verify_decomposition_7_to_9_10(c);
        std::ostringstream os;
        os << "ranks (" << r.rank_a << ", " << r.rank_b << ", " << r.rank_union
           << "), trace_zero=" << (r.trace_zero ? "yes" : "no");
        report("ricci commutator span equals the span of its 15+9 symmetric parts", r.pass,
               os.str());
    }

    out << (failures == 0 ? "verify-identities: all claims hold\n"
                          : "verify-identities: " + std::to_string(failures) + " claim(s) failed\n");
    return failures == 0 ? 0 : 1;
}

int run_classify(const ClassifyOptions& opts, std::ostream& out, std::ostream& err) {
    std::ifstream in(opts.file);
    if (!in) {
        err << "cannot open '" << opts.file << "'\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        const ParsedInput input = parse_input(buf.str());
        const ClassificationReport report =
            classify_case(input.set, input.assumptions, input.petrov_hint);
        out << (opts.machine ? classification_report_json(report, input)
                             : classification_report_text(report, input));
        return 0;
    } catch (const Error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
}

int run_table(const TableOptions& opts, std::ostream& out, std::ostream& err) {
    const TableDocument doc = reproduce_table();
    const std::string text = doc.to_text();
    out << (opts.machine ? doc.to_json() : text);
    if (!opts.golden) return 0;
    std::ifstream in(*opts.golden);
    if (!in) {
        err << "cannot open golden file '" << *opts.golden << "'\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if (buf.str() != text) {
        err << "table differs from the golden grid\n";
        return 1;
    }
    err << "table matches the golden grid\n";
    return 0;
}

int run_kernel(const KernelOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const KernelReport report = phi_kernel(opts.petrov, opts.which);
        out << (opts.machine ? kernel_report_json(report) : kernel_report_text(report));
        return 0;
    } catch (const Error& e) {
        err << "kernel error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace spinorss
