#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <functional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chowkit/moduli.hpp"
#include "chowkit/varieties.hpp"

namespace {

using nlohmann::json;
using namespace chowkit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitIntegrity = 4;

json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

struct CommandResult {
    std::string command;
    json inputs = json::object();
    json outputs = json::object();
    std::vector<std::string> axioms;
    std::vector<std::string> paper_refs;

    json to_json() const {
        json out;
        out["command"] = command;
        out["inputs"] = inputs;
        out["outputs"] = outputs;
        out["axioms"] = axioms;
        out["paper_refs"] = paper_refs;
        return out;
    }
};

void render_human(const json& j, std::ostream& os, int indent = 0) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        std::size_t width = 0;
        for (auto it = j.begin(); it != j.end(); ++it)
            width = std::max(width, it.key().size());
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                os << pad << it.key() << ":\n";
                render_human(it.value(), os, indent + 2);
            } else {
                os << pad << it.key()
                   << std::string(width - it.key().size() + 1, ' ')
                   << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                os << pad << "-\n";
                render_human(v, os, indent + 2);
            } else {
                os << pad << "- " << v.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

void emit(const CommandResult& result, const std::string& out_path,
          bool human) {
    std::string text;
    if (human) {
        std::ostringstream os;
        render_human(result.to_json(), os);
        text = os.str();
    } else {
        text = result.to_json().dump(2) + "\n";
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file)
            throw precondition_error("cannot open output file '" + out_path +
                                     "'");
        file << text;
    }
}

json picard_lattice_json(const BidegreePicardLattice& lat, int n) {
    json out = lat.to_json();
    out["modulus"] = n + 1;
    json labels = json::array();
    for (const auto& row : lat.lattice.basis) {
        // Basis rows are (fiber exponent, base exponent); the (1,1) class is
        // the Hodge class when present.
        std::string label = "Phi_{" + row[0].str() + "," + row[1].str() + "}";
        if (row[0] == 1 && row[1] == 1) label += " (= lambda_1)";
        labels.push_back(label);
    }
    out["basis_labels"] = labels;
    return out;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"chowkit - exact intersection theory and moduli divisor "
                 "classes, with deterministic JSON output"};
    app.require_subcommand(1);
    app.fallthrough(); // let --out/--human appear after a subcommand
    std::string out_path;
    bool human = false;
    app.add_option("--out", out_path, "write the JSON result to this path");
    app.add_flag("--human", human, "render aligned text instead of JSON");
    app.set_version_flag("--version", "chowkit 0.1.0");

    // discriminant
    auto* discriminant =
        app.add_subcommand("discriminant", "discriminant divisor degrees");
    discriminant->require_subcommand(1);
    int eq_d = 0, eq_m = 0, eq_n = 0;
    auto* equidegree = discriminant->add_subcommand(
        "equidegree",
        "degree of the divisor of singular complete intersections of m "
        "degree-d hypersurfaces in P^n");
    equidegree->add_option("--d", eq_d)->required();
    equidegree->add_option("--m", eq_m)->required();
    equidegree->add_option("--n", eq_n)->required();

    int bi_a = 0, bi_b = 0, bi_n = 0;
    auto* bidegree = discriminant->add_subcommand(
        "bidegree",
        "class of the divisor of singular bidegree-(a,b) complete "
        "intersections in P^n");
    bidegree->add_option("--a", bi_a)->required();
    bidegree->add_option("--b", bi_b)->required();
    bidegree->add_option("--n", bi_n)->required();

    // picard
    auto* picard = app.add_subcommand("picard", "Picard group presentations");
    picard->require_subcommand(1);
    int gg_d = 0, gg_m = 0, gg_n = 0;
    bool gg_smooth = false;
    auto* gg = picard->add_subcommand(
        "gg", "equidegree complete intersections: linearization exponents "
              "and (with --smooth) the cyclic Picard group of the smooth "
              "locus");
    gg->add_option("--d", gg_d)->required();
    gg->add_option("--m", gg_m)->required();
    gg->add_option("--n", gg_n)->required();
    gg->add_flag("--smooth", gg_smooth);

    int ff_a = 0, ff_b = 0, ff_n = 0;
    std::string ff_convention = "proof";
    auto* ff = picard->add_subcommand(
        "ff", "bidegree complete intersections: the linearizable sublattice "
              "of Z^2 in (fiber, base) exponent coordinates");
    ff->add_option("--a", ff_a)->required();
    ff->add_option("--b", ff_b)->required();
    ff->add_option("--n", ff_n)->required();
    ff->add_option("--convention", ff_convention,
                   "which degree weights the fiber exponent")
        ->check(CLI::IsMember({"proof", "statement"}));

    // lines-divisor
    int lines_d = 0;
    bool show_chern = false;
    auto* lines = app.add_subcommand(
        "lines-divisor", "degree of the divisor of degree-d surfaces in P^3 "
                         "containing a line");
    lines->add_option("--d", lines_d)->required();
    lines->add_flag("--show-chern", show_chern,
                    "include the Chern character and Chern class tables");

    // k3
    auto* k3 = app.add_subcommand("k3", "quasi-polarized K3 moduli data");
    k3->require_subcommand(1);
    int k3_degree = 0;
    auto* table = k3->add_subcommand(
        "table", "Picard presentation of the degree-2l moduli stack");
    table->add_option("--degree", k3_degree, "2l, one of 4, 6, 8")->required();
    int chi_l = 0, chi_p = 0;
    auto* chi = k3->add_subcommand(
        "chi", "Euler characteristic of the p-th power of a degree-2l "
               "quasi-polarization");
    chi->add_option("--l", chi_l)->required();
    chi->add_option("--p", chi_p)->required();

    // chow demo
    auto* chow = app.add_subcommand("chow", "Chow ring engine");
    chow->require_subcommand(1);
    bool dump_ring = false;
    auto* demo = chow->add_subcommand(
        "demo", "the lines-in-quartics computation step by step");
    demo->add_flag("--dump-ring", dump_ring,
                   "include the ring presentations involved");

    // Accept the global --out/--human anywhere on the line.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        cmd->fallthrough();
        for (CLI::App* sub : cmd->get_subcommands({}))
            enable_fallthrough(sub);
    };
    for (CLI::App* sub : app.get_subcommands({}))
        enable_fallthrough(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the usage error
        return code == 0 ? kExitOk : kExitUsage;
    }

    CommandResult result;
    if (*equidegree) {
        result.command = "discriminant equidegree";
        result.inputs = {{"d", eq_d}, {"m", eq_m}, {"n", eq_n}};
        result.outputs["degree"] =
            json_int(equidegree_discriminant_degree(eq_d, eq_m, eq_n));
        result.paper_refs = {
            "degree formula for the discriminant of equidegree complete "
            "intersections"};
    } else if (*bidegree) {
        result.command = "discriminant bidegree";
        result.inputs = {{"a", bi_a}, {"b", bi_b}, {"n", bi_n}};
        result.outputs = bidegree_discriminant_class(bi_a, bi_b, bi_n).to_json();
        result.paper_refs = {
            "class of the singular locus in the parameter space of "
            "bidegree-(a,b) complete intersections"};
    } else if (*gg) {
        result.command = "picard gg";
        result.inputs = {{"d", gg_d},
                         {"m", gg_m},
                         {"n", gg_n},
                         {"smooth", gg_smooth}};
        const auto exps = linearization_exponents(gg_d, gg_m, gg_n);
        result.outputs["k"] = json_int(exps.k);
        result.outputs["p"] = json_int(exps.p);
        result.outputs["discriminant_degree"] =
            json_int(equidegree_discriminant_degree(gg_d, gg_m, gg_n));
        const PicardPresentation smooth = smooth_locus_picard(gg_d, gg_m, gg_n);
        if (gg_smooth) {
            result.outputs["presentation"] = smooth.to_json();
        } else {
            PicardPresentation free_part;
            free_part.basis = {"Phi"};
            free_part.invariant_factors = {0};
            // the discriminant divisor in terms of the generator Phi
            free_part.named_classes["discriminant"] = {
                smooth.invariant_factors.at(0)};
            result.outputs["presentation"] = free_part.to_json();
        }
        result.paper_refs = {
            "linearization exponents of the determinant of the tautological "
            "bundle under the projective group"};
    } else if (*ff) {
        result.command = "picard ff";
        result.inputs = {{"a", ff_a},
                         {"b", ff_b},
                         {"n", ff_n},
                         {"convention", ff_convention}};
        const auto convention = ff_convention == "proof"
                                    ? FiberCoefficientConvention::proof
                                    : FiberCoefficientConvention::statement;
        const auto lat = bidegree_picard_lattice(ff_a, ff_b, ff_n, convention);
        if (!lat.conventions_agree)
            std::cerr << "warning: the two coefficient conventions give "
                         "different lattices for these parameters\n";
        result.outputs = picard_lattice_json(lat, ff_n);
        result.paper_refs = {
            "linearizable line bundles on the parameter space of "
            "bidegree-(a,b) complete intersections"};
    } else if (*lines) {
        result.command = "lines-divisor";
        result.inputs = {{"d", lines_d}, {"show_chern", show_chern}};
        result.outputs = lines_in_surfaces_report(lines_d).to_json(show_chern);
        result.axioms = {
            "multiplicity one: a generic quartic surface containing a line "
            "contains exactly one line (assumed, not verified)",
            "vanishing of higher direct images of the twisted structure "
            "sheaf (granted by base change, not recomputed)"};
        result.paper_refs = {"Riemann-Roch pushforward of the sections "
                             "bundle over the Grassmannian of lines",
                             "Schubert calculus of Gr(1,3)"};
    } else if (*table) {
        result.command = "k3 table";
        result.inputs = {{"degree", k3_degree}};
        const PicardPresentation pres = k3_picard_table(k3_degree);
        result.outputs = pres.to_json();
        result.axioms = pres.axioms;
        result.paper_refs = {
            "Noether-Lefschetz divisor bases of low-degree quasi-polarized "
            "K3 moduli"};
    } else if (*chi) {
        result.command = "k3 chi";
        result.inputs = {{"l", chi_l}, {"p", chi_p}};
        result.outputs["chi"] = json_int(k3_euler_characteristic(chi_l, chi_p));
        result.paper_refs = {
            "Riemann-Roch on a K3 surface: chi(L^p) = p^2 l + 2"};
    } else if (*demo) {
        result.command = "chow demo";
        result.inputs = {{"dump_ring", dump_ring}};
        const LinesDivisorReport report = lines_in_surfaces_report(4);
        result.outputs = report.to_json(true);
        result.outputs["ch_terms"] = report.ch.to_json();
        const Ring gr = report.grassmannian;
        json schubert;
        schubert["s1^4"] = json_int(to_int(
            integrate(ChowClass::generator(gr, "s1").pow(4))));
        schubert["s1^2*s2"] = json_int(to_int(
            integrate(ChowClass::generator(gr, "s1").pow(2) *
                      ChowClass::generator(gr, "s2"))));
        schubert["s2^2"] = json_int(to_int(
            integrate(ChowClass::generator(gr, "s2").pow(2))));
        result.outputs["schubert_integrals"] = schubert;
        for (int i = 1; i <= 4; ++i)
            result.outputs["c" + std::to_string(i) + "_reduced"] =
                report.chern.at(i - 1).canonical_string();
        if (dump_ring) {
            result.outputs["rings"] = {
                projective_space(3)->to_json(), gr->to_json(),
                product(projective_space(3), report.cover)->to_json()};
        }
        result.paper_refs = {"Riemann-Roch pushforward of the sections "
                             "bundle over the Grassmannian of lines",
                             "Schubert calculus of Gr(1,3)"};
    }

    emit(result, out_path, human);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const chowkit::precondition_error& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const chowkit::integrity_error& e) {
        std::cerr << "internal integrity failure: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const std::exception& e) {
        std::cerr << "internal integrity failure: " << e.what() << "\n";
        return kExitIntegrity;
    }
}
