// Command-line front end: catalog inspection, operator construction,
// spectral certification, and the full reproduction suite.
//
// Exit codes: 0 success / certified_true, 2 certified_false, 3 inconclusive,
// 1 usage or input errors.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcoh/verify.hpp"

using namespace qcoh;

namespace {

constexpr const char* kConventionBanner =
    "# Convention: column j holds the coordinates of c1 * b_j, i.e. the\n"
    "# operator acts on the row of basis classes from the right: c1 * B = B M.\n";

int verdict_exit(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::certified_true: return 0;
        case VerdictStatus::certified_false: return 2;
        default: return 3;
    }
}

void print_verdict(const std::string& what, const SpectralVerdict& v) {
    std::cout << what << ": " << to_string(v.status) << "\n";
    for (const auto& e : v.evidence)
        std::cout << "  [" << e.kind << (e.exact ? "" : ", approximate") << "] " << e.detail
                  << "\n";
}

ExactMatrix entry_operator(const ManifoldEntry& ent, const std::string& basis_sel) {
    if (basis_sel == "ring" || !ent.distinguished_basis)
        return c1_operator_matrix(ent.quantum_spec);
    return c1_operator_matrix(ent.quantum_spec, *ent.distinguished_basis);
}

int cmd_list() {
    for (const auto& id : builtin_ids()) {
        ManifoldEntry ent = builtin(id);
        std::cout << id << "  (dim " << ent.quantum_spec.ring.dim << ")  " << ent.description
                  << "\n";
    }
    return 0;
}

int cmd_show(const std::string& id) {
    ManifoldEntry ent = resolve_entry(id);
    const RingSpec& r = ent.quantum_spec.ring;
    std::cout << ent.id << ": " << ent.description << "\n";
    std::cout << "dim " << r.dim;
    if (r.fano_index) std::cout << ", Fano index " << *r.fano_index;
    std::cout << ", basis of rank " << r.size() << "\n";
    for (const auto& el : r.basis.elements)
        std::cout << "  " << el.label << "  (degree " << el.degree << ")\n";
    std::cout << "lattice generators:";
    for (const auto& g : ent.quantum_spec.lattice.generator_labels) std::cout << " " << g;
    std::cout << "\nGW entries: "
              << (ent.quantum_spec.gw.style == GWStyle::two_point
                      ? ent.quantum_spec.gw.two_point.size()
                      : ent.quantum_spec.gw.three_point.size())
              << " ("
              << (ent.quantum_spec.gw.style == GWStyle::two_point ? "two-point" : "three-point")
              << ")\n";
    return 0;
}

int cmd_operator(const std::string& id, const std::string& basis_sel) {
    ManifoldEntry ent = resolve_entry(id);
    ExactMatrix m = entry_operator(ent, basis_sel);
    std::cout << kConventionBanner << m.str();
    return 0;
}

int cmd_spectrum(const std::string& id) {
    ManifoldEntry ent = resolve_entry(id);
    ExactMatrix m = entry_operator(ent, "distinguished");
    Polynomial p = char_poly(m);
    std::cout << "char poly: " << p.str("x") << "\n";
    std::cout << "real roots:\n";
    SturmChain chain(p);
    Rational eps = Rational(1) / (Integer(1) << 32);
    for (auto iv : isolate_real_roots(p)) {
        if (!iv.is_exact()) refine_interval(chain, iv, eps);
        if (iv.is_exact())
            std::cout << "  = " << format_rational(iv.lo);
        else
            std::cout << "  in (" << format_rational(iv.lo) << ", " << format_rational(iv.hi)
                      << "]  ~ " << iv.midpoint().get_d();
        std::cout << "  (multiplicity " << iv.multiplicity << ")\n";
    }
    RadiusBound rb = spectral_radius(m);
    std::cout << "spectral radius: ";
    if (rb.exact)
        std::cout << rb.exact->str() << " (exact)";
    else if (rb.certified())
        std::cout << "in (" << format_rational(rb.interval.lo) << ", "
                  << format_rational(rb.interval.hi) << "]  ~ " << rb.interval.midpoint().get_d();
    else
        std::cout << "uncertified; <= " << format_rational(rb.interval.hi);
    std::cout << "\n";
    return 0;
}

int cmd_check(const std::string& id, bool o, bool galkin, const std::string& threshold) {
    ManifoldEntry ent = resolve_entry(id);
    ExactMatrix m = entry_operator(ent, "distinguished");
    if (o) {
        long index = computed_fano_index(ent.quantum_spec);
        SpectralVerdict v = check_conjecture_o(m, int(index));
        print_verdict("conjecture O (Fano index " + std::to_string(index) + ")", v);
        return verdict_exit(v.status);
    }
    if (galkin) {
        SpectralVerdict v = check_galkin(m, ent.quantum_spec.ring.dim);
        print_verdict("Galkin bound rho >= dim + 1", v);
        return verdict_exit(v.status);
    }
    QuadExt thr = parse_quadext(threshold);
    SpectralVerdict v = compare_radius_exceeds(m, thr);
    print_verdict("rho > " + thr.str(), v);
    return verdict_exit(v.status);
}

int cmd_verify_paper(bool as_json) {
    VerifyReport rep = run_verify_paper();
    if (as_json) {
        std::cout << verify_report_to_json(rep).dump(2) << "\n";
    } else {
        for (const auto& it : rep.items)
            std::cout << (it.pass ? "pass" : "FAIL") << "  [criterion " << it.criterion << "] "
                      << it.name << ": " << it.detail << "\n";
        std::cout << (rep.all_pass() ? "all items pass" : "FAILURES present") << "\n";
    }
    return rep.all_pass() ? 0 : 2;
}

int cmd_export(const std::string& id, const std::string& out) {
    ManifoldEntry ent = resolve_entry(id);
    std::string doc = export_entry(ent);
    if (out.empty()) {
        std::cout << doc;
    } else {
        std::ofstream f(out);
        if (!f) throw Error("cannot write " + out);
        f << doc;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quantum cohomology operators and certified spectra"};
    app.require_subcommand(1);

    app.add_subcommand("list", "list built-in catalog entries");

    std::string id, basis_sel = "distinguished", threshold, out_path;
    auto* show = app.add_subcommand("show", "summarize a catalog entry or spec file");
    show->add_option("id", id, "catalog id or path to a spec file")->required();

    auto* op = app.add_subcommand("operator", "print the exact c1 operator matrix");
    op->add_option("id", id)->required();
    op->add_option("--basis", basis_sel, "ring|distinguished")
        ->check(CLI::IsMember({"ring", "distinguished"}));

    auto* spec = app.add_subcommand("spectrum", "real roots and certified spectral radius");
    spec->add_option("id", id)->required();

    auto* check = app.add_subcommand("check", "run one certification");
    check->add_option("id", id)->required();
    bool flag_o = false, flag_galkin = false, flag_compare = false;
    check->add_flag("--o", flag_o, "Conjecture O");
    check->add_flag("--galkin", flag_galkin, "Galkin's bound rho >= dim + 1");
    check->add_flag("--compare", flag_compare, "compare rho against --threshold");
    check->add_option("--threshold", threshold, "exact expression, e.g. \"4*sqrt(2)\"");

    bool as_json = false;
    auto* verify = app.add_subcommand("verify-paper", "run the full reproduction suite");
    verify->add_flag("--json", as_json, "machine-readable report");

    auto* exp = app.add_subcommand("export", "canonical serialization of an entry");
    exp->add_option("id", id)->required();
    exp->add_option("--out", out_path, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("list")) return cmd_list();
        if (app.got_subcommand("show")) return cmd_show(id);
        if (app.got_subcommand("operator")) return cmd_operator(id, basis_sel);
        if (app.got_subcommand("spectrum")) return cmd_spectrum(id);
        if (app.got_subcommand("check")) {
            if (int(flag_o) + int(flag_galkin) + int(flag_compare) != 1) {
                std::cerr << "check requires exactly one of --o, --galkin, --compare\n";
                return 1;
            }
            if (flag_compare && threshold.empty()) {
                std::cerr << "--compare requires --threshold\n";
                return 1;
            }
            return cmd_check(id, flag_o, flag_galkin, threshold);
        }
        if (app.got_subcommand("verify-paper")) return cmd_verify_paper(as_json);
        if (app.got_subcommand("export")) return cmd_export(id, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
