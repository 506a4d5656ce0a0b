#include "ohcp/cli.hpp"

#include "ohcp/errors.hpp"
#include "ohcp/homology.hpp"
#include "ohcp/io.hpp"
#include "ohcp/report.hpp"
#include "ohcp/solver.hpp"
#include "ohcp/unimodularity.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace ohcp::cli {
namespace {

using nlohmann::json;

struct Options {
    std::string complex_path;
    std::string matrix_path;
    std::string chain_path;
    std::string weights_path;
    std::string coords_path;
    std::string y_weights_path;
    std::string out_prefix;
    std::string method = "auto";
    std::string variant = "l1";
    int dim = -1;
    std::size_t col_cap = 16;
    std::uint64_t budget = 0;
    long y_bound = 1;
};

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

TUOptions tu_options(const Options& o) {
    TUOptions t;
    t.col_cap = o.col_cap;
    if (o.budget) t.mobius_budget = o.budget;
    return t;
}

int cmd_boundary(const Options& o, std::ostream& out) {
    const auto k = io::load_complex(o.complex_path);
    io::write_matrix(out, boundary_matrix(k, o.dim));
    return kOk;
}

int cmd_snf(const Options& o, std::ostream& out) {
    const IntMatrix m = !o.matrix_path.empty() ? io::load_matrix(o.matrix_path)
                                               : boundary_matrix(io::load_complex(o.complex_path), o.dim);
    const SNFResult r = smith_normal_form(m);
    for (std::size_t i = 0; i < r.diagonal.size(); ++i) out << (i ? " " : "") << r.diagonal[i].get_str();
    out << '\n';
    return kOk;
}

// Boundary matrix named on the command line and the p it belongs to.
std::pair<IntMatrix, int> tu_input(const Options& o) {
    if (!o.matrix_path.empty()) return {io::load_matrix(o.matrix_path), o.dim < 0 ? 1 : o.dim};
    const auto k = io::load_complex(o.complex_path);
    if (o.dim < 0 || o.dim + 1 > k.dim()) throw InputError("--dim p needs p + 1 <= dim(K)");
    return {boundary_matrix(k, o.dim + 1), o.dim};
}

TUVerdict decide(const IntMatrix& b, int p, const Options& o) {
    const TUOptions opts = tu_options(o);
    if (o.method == "auto") return tu_verdict(b, p, opts);
    if (o.method == "minors") return is_tu_minor_enumeration(b, opts.col_cap, opts.threads);
    TUVerdict v;
    if (o.method == "ht") {
        auto r = heller_tompkins(b.transpose());
        if (r.status != HellerTompkinsResult::Status::Certified)
            throw UndecidedError("Heller-Tompkins condition does not certify this matrix");
        v.method = TUMethod::HellerTompkins;
        v.status = TUStatus::TU;
        return v;
    }
    if (o.method == "mobius") {
        v.method = TUMethod::MobiusSearch;
        if (auto w = find_mobius_subcomplex(b, opts)) {
            v.status = TUStatus::NotTU;
            MinorWitness mw{w->shared_faces, w->simplices, 0};
            std::sort(mw.rows.begin(), mw.rows.end());
            std::sort(mw.cols.begin(), mw.cols.end());
            mw.det = det_int(b.submatrix(mw.rows, mw.cols));
            v.witness = std::move(mw);
            return v;
        }
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b.nonzeros_in_col(j) > 3) throw UndecidedError("no Moebius subcomplex, but that only decides p <= 1");
        if (p > 1) throw UndecidedError("no Moebius subcomplex, but that only decides p <= 1");
        v.status = TUStatus::TU;
        return v;
    }
    throw InputError("unknown method '" + o.method + "'");
}

int cmd_tu(const Options& o, std::ostream& out) {
    auto [b, p] = tu_input(o);
    print_json(out, report::verdict(decide(b, p, o)));
    return kOk;
}

int cmd_mobius(const Options& o, std::ostream& out) {
    const auto k = io::load_complex(o.complex_path);
    TUOptions opts = tu_options(o);
    print_json(out, report::cycle_complex(find_mobius_subcomplex(k, o.dim, opts), k, o.dim));
    return kOk;
}

int cmd_torsion(const Options& o, std::ostream& out) {
    const auto k = io::load_complex(o.complex_path);
    if (o.dim < 0 || o.dim + 1 > k.dim()) throw InputError("--dim p needs p + 1 <= dim(K)");
    const IntMatrix b = boundary_matrix(k, o.dim + 1);
    const TUVerdict v = decide(b, o.dim, o);
    json j = report::verdict(v);
    j["torsion_free"] = v.status == TUStatus::TU;
    j["witness"] = nullptr;
    if (v.witness) j["witness"] = report::torsion_witness(
        torsion_witness_from_submatrix(b, v.witness->rows, v.witness->cols), k, o.dim);
    print_json(out, j);
    return kOk;
}

int cmd_homology(const Options& o, std::ostream& out) {
    const auto k = io::load_complex(o.complex_path);
    const HomologySummary h = homology_summary(k, o.dim);
    json j;
    j["dim"] = o.dim;
    j["betti"] = h.betti;
    j["torsion"] = json::array();
    for (const auto& t : h.torsion) j["torsion"].push_back(report::integer(t));
    print_json(out, j);
    return kOk;
}

OHCPInstance load_instance(const Options& o) {
    OHCPInstance inst;
    inst.complex = io::load_complex(o.complex_path);
    inst.p = o.dim;
    if (inst.p < 0 || inst.p > inst.complex.dim()) throw InputError("--dim outside the complex");
    inst.variant = parse_variant(o.variant);
    inst.chain = io::load_chain(o.chain_path, inst.complex, inst.p).dense(inst.m());
    if (!o.weights_path.empty() && !o.coords_path.empty())
        throw InputError("give either --weights or --coords, not both");
    if (!o.weights_path.empty()) inst.weights = io::load_weights(o.weights_path, inst.complex, inst.p);
    if (!o.coords_path.empty())
        inst.weights = weights_from_coordinates(inst.complex, io::load_coordinates(o.coords_path), inst.p);
    if (!o.y_weights_path.empty())
        inst.y_weights = io::load_weights(o.y_weights_path, inst.complex, inst.p + 1);
    inst.validate();
    return inst;
}

int emit_solution(const Options& o, const OHCPInstance& inst, const OHCPSolution& s, std::ostream& out) {
    const json summary = report::solution(s, inst);
    if (!o.out_prefix.empty()) {
        std::ofstream chain(o.out_prefix + ".chn");
        if (s.integral)
            io::write_chain(chain, Chain::from_dense(inst.p, s.x_star()), inst.complex);
        else
            io::write_rational_chain(chain, inst.p, s.x, inst.complex);
        std::ofstream js(o.out_prefix + ".json");
        print_json(js, summary);
        if (!chain || !js) throw std::runtime_error("cannot write output files with prefix '" + o.out_prefix + "'");
    }
    print_json(out, summary);
    return s.integral ? kOk : kNonIntegral;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
    const OHCPInstance inst = load_instance(o);
    const OHCPSolution s = solve(inst);
    if (!s.integral) err << "warning: " << *s.torsion_note << '\n';
    return emit_solution(o, inst, s, out);
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const OHCPInstance inst = load_instance(o);
    const OHCPSolution s = o.budget ? brute_force_oracle(inst, o.y_bound, o.budget) : brute_force_oracle(inst, o.y_bound);
    return emit_solution(o, inst, s, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optimal homologous chains and total unimodularity of boundary matrices", "ohcp"};
    app.require_subcommand(1);
    Options o;

    auto complex_opt = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--complex", o.complex_path, "Complex file (.scx)")->check(CLI::ExistingFile);
        if (required) opt->required();
    };
    auto dim_opt = [&](CLI::App* sub, const std::string& what, bool required) {
        auto* opt = sub->add_option("--dim", o.dim, what);
        if (required) opt->required();
    };

    auto* boundary = app.add_subcommand("boundary", "Print the boundary matrix [d_q]");
    complex_opt(boundary, true);
    dim_opt(boundary, "q", true);

    auto* snf = app.add_subcommand("snf", "Smith normal form diagonal");
    snf->add_option("--matrix", o.matrix_path, "Matrix file (.mat)")->check(CLI::ExistingFile);
    complex_opt(snf, false);
    dim_opt(snf, "q (with --complex)", false);

    auto* tu = app.add_subcommand("tu", "Total unimodularity verdict for [d_{p+1}]");
    complex_opt(tu, false);
    tu->add_option("--matrix", o.matrix_path, "Matrix file (.mat) instead of a complex")->check(CLI::ExistingFile);
    dim_opt(tu, "p", false);
    tu->add_option("--method", o.method, "auto|minors|ht|mobius")
        ->check(CLI::IsMember({"auto", "minors", "ht", "mobius"}));
    tu->add_option("--col-cap", o.col_cap, "Column cap for minor enumeration");
    tu->add_option("--budget", o.budget, "Step budget for the Moebius search");

    auto* mobius = app.add_subcommand("mobius-scan", "Search for a Moebius cycle complex of dimension q");
    complex_opt(mobius, true);
    dim_opt(mobius, "q", true);
    mobius->add_option("--budget", o.budget, "Step budget");

    auto* torsion = app.add_subcommand("torsion-scan", "Find (L, L0) with torsion in H_p(L, L0)");
    complex_opt(torsion, true);
    dim_opt(torsion, "p", true);
    torsion->add_option("--col-cap", o.col_cap, "Column cap for minor enumeration");
    torsion->add_option("--budget", o.budget, "Step budget for the Moebius search");

    auto add_instance = [&](CLI::App* sub) {
        complex_opt(sub, true);
        sub->add_option("--chain", o.chain_path, "Chain file (.chn)")->required()->check(CLI::ExistingFile);
        dim_opt(sub, "p", true);
        sub->add_option("--weights", o.weights_path, "Weights file (.wts)")->check(CLI::ExistingFile);
        sub->add_option("--coords", o.coords_path, "Coordinates file (.xyz)")->check(CLI::ExistingFile);
        sub->add_option("--variant", o.variant, "l1|l0|total")->check(CLI::IsMember({"l1", "l0", "total"}));
        sub->add_option("--y-weights", o.y_weights_path, "Weights on (p+1)-simplices (.wts)")
            ->check(CLI::ExistingFile);
        sub->add_option("--out", o.out_prefix, "Write <out>.chn and <out>.json");
    };
    auto* solve_cmd = app.add_subcommand("solve", "Solve an optimal homologous chain problem by LP");
    add_instance(solve_cmd);
    auto* oracle = app.add_subcommand("oracle", "Exhaustive search over bounded y");
    add_instance(oracle);
    oracle->add_option("--y-bound", o.y_bound, "Search y in [-B, B]^n")->required();
    oracle->add_option("--budget", o.budget, "Maximum number of candidates");

    auto* homology = app.add_subcommand("homology", "Betti number and torsion of H_p(K)");
    complex_opt(homology, true);
    dim_opt(homology, "p", true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*boundary) return cmd_boundary(o, out);
        if (*snf) {
            if (o.matrix_path.empty() && (o.complex_path.empty() || o.dim < 0))
                throw InputError("snf needs --matrix, or --complex with --dim");
            return cmd_snf(o, out);
        }
        if (*tu) {
            if (o.matrix_path.empty() == o.complex_path.empty())
                throw InputError("tu needs exactly one of --complex and --matrix");
            return cmd_tu(o, out);
        }
        if (*mobius) return cmd_mobius(o, out);
        if (*torsion) return cmd_torsion(o, out);
        if (*solve_cmd) return cmd_solve(o, out, err);
        if (*oracle) return cmd_oracle(o, out);
        if (*homology) return cmd_homology(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kParseError;
    } catch (const UndecidedError& e) {
        err << "undecided: " << e.what() << '\n';
        return kUndecided;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}

}  // namespace ohcp::cli
