#pragma once

// Subcommands of the treespec tool. Each writes to the given streams and
// returns the process exit code, so tests can drive them in-process.

#include <treespec/cli/document.hpp>

#include <CLI11.hpp>

#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace treespec::cli {

enum Exit : int { ok = 0, input_error = 1, verification_failure = 2 };

class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal form.
inline std::string num(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

inline Tree read_tree(std::istream& in, const std::string& name) {
    try {
        return from_edge_list(parse_edge_list(in));
    } catch (const ParseError& e) {
        throw InputError(name + ": " + e.what());
    } catch (const TreeError& e) {
        throw InputError(name + ": " + e.what());
    }
}

/// "-" reads stdin.
inline Tree load_tree(const std::string& path) {
    if (path == "-") return read_tree(std::cin, "<stdin>");
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    return read_tree(in, path);
}

// ---------------------------------------------------------------------------

inline int cmd_analyze(const Tree& t, const Tolerances& tol, bool with_vectors, std::ostream& out) {
    const auto a = analyze(t, tol);
    const auto rep = verify_all(a);
    out << to_json(make_document(a, rep, with_vectors)).dump(2) << '\n';
    return rep.passed() ? ok : verification_failure;
}

struct EnsembleSummary {
    std::size_t trees = 0, passed = 0, failed = 0, flagged = 0;
};

inline int cmd_verify(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed, const Tolerances& tol,
                      std::ostream& out) {
    const auto plan = ensemble_plan(count, min_n, max_n, seed);
    EnsembleSummary sum;
    std::vector<std::string> ids;
    std::vector<std::array<std::size_t, 3>> tally;  // pass, fail, vacuous
    std::ostringstream witness;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const auto t = random_tree(plan[i].n, plan[i].seed);
        const auto rep = verify_all(t, tol);
        ++sum.trees;
        rep.passed() ? ++sum.passed : ++sum.failed;
        if (rep.flagged()) ++sum.flagged;
        for (std::size_t k = 0; k < rep.records.size(); ++k) {
            const auto& r = rep.records[k];
            if (k == ids.size()) {
                ids.push_back(r.id);
                tally.push_back({0, 0, 0});
            }
            ++tally[k][static_cast<std::size_t>(r.status)];
        }
        if (const auto* f = rep.first_failure(); f && witness.tellp() == 0) {
            witness << "first failure: tree " << i << " (n = " << plan[i].n << ", seed = " << plan[i].seed << ") " << f->id << '\n';
            for (const auto& note : f->notes) witness << "  " << note << '\n';
            witness << format_edge_list(t);
        }
    }
    out << "trees " << sum.trees << "\npassed " << sum.passed << "\nfailed " << sum.failed << "\nflagged " << sum.flagged
        << '\n';
    for (std::size_t k = 0; k < ids.size(); ++k)
        out << "record " << ids[k] << " pass " << tally[k][0] << " fail " << tally[k][1] << " vacuous " << tally[k][2] << '\n';
    out << witness.str();
    return sum.failed ? verification_failure : ok;
}

inline constexpr const char* kBoundsHeader = "n,cover_size,lambda_bar,bound_volume,bound_quotient,tight_volume,tight_quotient";

inline std::string bounds_row(const Tree& t, const Tolerances& tol) {
    const auto a = analyze(t, tol);
    const auto& s = a.separation;
    const bool tv = std::abs(s.bound_volume - s.lambda_bar) <= tol.bound_tol;
    const bool tq = std::abs(s.bound_quotient - s.lambda_bar) <= tol.bound_tol;
    std::ostringstream row;
    row << t.n() << ',' << a.cover.cover_size << ',' << num(s.lambda_bar) << ',' << num(s.bound_volume) << ','
        << num(s.bound_quotient) << ',' << tv << ',' << tq;
    return row.str();
}

inline int cmd_bounds(const std::vector<Tree>& trees, const Tolerances& tol, std::ostream& out) {
    out << kBoundsHeader << '\n';
    for (const auto& t : trees) out << bounds_row(t, tol) << '\n';
    return ok;
}

/// Vertex function picked by a selector: an eigenvector index, "one" (first
/// exact 1-eigenspace basis vector) or "pre-one" (lambda_p).
inline Eigen::VectorXd select_vector(const Analysis& a, const std::string& selector, std::string& label) {
    const auto n = static_cast<Eigen::Index>(a.tree.n());
    if (selector == "one") {
        if (a.kernel.basis.empty()) throw InputError("selector 'one': eigenvalue 1 has multiplicity 0");
        Eigen::VectorXd f(n);
        for (Eigen::Index i = 0; i < n; ++i) f(i) = a.kernel.basis.front()[static_cast<std::size_t>(i)].get_d();
        label = "eigenvalue 1";
        return f;
    }
    std::size_t k = 0;
    if (selector == "pre-one") {
        k = a.separation.lambda_p_index;
    } else {
        const auto* end = selector.data() + selector.size();
        const auto res = std::from_chars(selector.data(), end, k);
        if (selector.empty() || res.ec != std::errc{} || res.ptr != end)
            throw InputError("unknown vector selector '" + selector + "'");
        if (k >= a.tree.n())
            throw InputError("selector " + selector + " out of range: tree has " + std::to_string(a.tree.n()) + " eigenvalues");
    }
    label = "eigenvalue " + num(a.spectrum.eigenvalues(static_cast<Eigen::Index>(k)));
    return a.spectrum.laplacian_vectors.col(static_cast<Eigen::Index>(k));
}

/// Size encodes |f(v)|, color its sign: black negative, gray positive,
/// white zero.
inline void write_dot(const Tree& t, const Eigen::VectorXd& f, double zero_rel, const std::string& label, std::ostream& out) {
    const double peak = f.cwiseAbs().maxCoeff();
    const double zt = relative_zero_tol(f, zero_rel);
    out << "graph tree {\n  // " << label << "\n  node [shape=circle, style=filled, fixedsize=true, label=\"\"];\n";
    for (Eigen::Index v = 0; v < f.size(); ++v) {
        const double w = 0.15 + 0.85 * (peak > 0 ? std::abs(f(v)) / peak : 0.0);
        const char* color = f(v) > zt ? "gray" : (f(v) < -zt ? "black" : "white");
        out << "  " << v << " [width=" << std::fixed << std::setprecision(4) << w << ", height=" << w
            << ", fillcolor=" << color << "];\n";
        out.unsetf(std::ios::floatfield);
    }
    for (const auto& [u, v] : t.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

inline int cmd_export_dot(const Tree& t, const std::string& selector, const Tolerances& tol, std::ostream& out) {
    const auto a = analyze(t, tol);
    std::string label;
    const auto f = select_vector(a, selector, label);
    write_dot(t, f, tol.zero_tol_rel, label, out);
    return ok;
}

inline int cmd_charpoly(const Tree& t, std::ostream& out) {
    const auto p = matching_polynomial(t);
    out << "n = " << p.n << '\n';
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) out << "c_" << k << " = " << to_string(p.coeffs[k]) << '\n';
    out << "P = " << format_in_y(p) << "\ny = x - 1\n";
    const auto m = multiplicity_of_one(p);
    out << "factor (x - 1)^" << m << "\nmult(1) = " << m << '\n';
    return ok;
}

// ---------------------------------------------------------------------------

inline std::vector<Tree> path_family(std::size_t lo, std::size_t hi) {
    if (lo < 2 || hi < lo) throw InputError("invalid path range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    std::vector<Tree> out;
    for (std::size_t n = lo; n <= hi; ++n) {
        std::vector<Edge> e;
        for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
        out.push_back(Tree::from_edges(e));
    }
    return out;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectra of normalized Laplacians of trees and their minimum vertex covers"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string("treespec ") + kVersion);

    Tolerances tol;
    bool no_banner = false;
    app.add_flag("--no-banner", no_banner, "Do not print the version banner on stderr");
    app.add_option("--cluster-tol", tol.cluster_tol, "Eigenvalues this close to a target share its cluster")->capture_default_str();
    app.add_option("--zero-tol", tol.zero_tol_rel, "Entries below this times the max entry count as zero")->capture_default_str();
    app.add_option("--residual-tol", tol.residual_tol, "Eigenpair residual bound")->capture_default_str();
    app.add_option("--vanish-tol", tol.vanish_tol, "Bound on 1-eigenvectors over cover vertices")->capture_default_str();
    app.add_option("--cover-cap", tol.cover_cap, "Maximum minimum covers enumerated per tree")->capture_default_str();

    std::string input;
    bool with_vectors = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis and verification of one tree, as JSON");
    analyze_cmd->add_option("input", input, "Edge-list file, or - for stdin")->required();
    analyze_cmd->add_flag("--with-vectors", with_vectors, "Include eigenvectors");

    std::size_t count = 500, min_n = 4, max_n = 24;
    std::uint64_t seed = 1;
    auto* verify_cmd = app.add_subcommand("verify", "Verify every theorem on a seeded random ensemble");
    verify_cmd->add_option("--count", count, "Number of trees")->capture_default_str();
    verify_cmd->add_option("--min-n", min_n, "Smallest tree size")->capture_default_str();
    verify_cmd->add_option("--max-n", max_n, "Largest tree size")->capture_default_str();
    verify_cmd->add_option("--seed", seed, "Ensemble seed")->capture_default_str();

    std::vector<std::string> files;
    std::size_t bcount = 0, path_min = 0, path_max = 0;
    auto* bounds_cmd = app.add_subcommand("bounds", "CSV of the separation and its two bounds");
    bounds_cmd->add_option("inputs", files, "Edge-list files");
    bounds_cmd->add_option("--paths", path_min, "Include paths from this many vertices");
    bounds_cmd->add_option("--paths-to", path_max, "... up to this many");
    bounds_cmd->add_option("--count", bcount, "Random trees to append")->capture_default_str();
    bounds_cmd->add_option("--min-n", min_n, "Smallest random tree")->capture_default_str();
    bounds_cmd->add_option("--max-n", max_n, "Largest random tree")->capture_default_str();
    bounds_cmd->add_option("--seed", seed, "Ensemble seed")->capture_default_str();

    std::string selector = "pre-one";
    auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of an eigenvector");
    dot_cmd->add_option("input", input, "Edge-list file, or - for stdin")->required();
    dot_cmd->add_option("--vector", selector, "Eigenvector index, 'one' or 'pre-one'")->capture_default_str();

    auto* poly_cmd = app.add_subcommand("charpoly", "Exact characteristic polynomial");
    poly_cmd->add_option("input", input, "Edge-list file, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }
    if (!no_banner) err << "treespec " << kVersion << '\n';

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(load_tree(input), tol, with_vectors, out);
        if (verify_cmd->parsed()) return cmd_verify(count, min_n, max_n, seed, tol, out);
        if (dot_cmd->parsed()) return cmd_export_dot(load_tree(input), selector, tol, out);
        if (poly_cmd->parsed()) return cmd_charpoly(load_tree(input), out);
        if (bounds_cmd->parsed()) {
            std::vector<Tree> trees;
            for (const auto& f : files) trees.push_back(load_tree(f));
            if (path_min || path_max) {
                for (auto& p : path_family(path_min, path_max ? path_max : path_min)) trees.push_back(std::move(p));
            }
            for (const auto& m : ensemble_plan(bcount, min_n, max_n, seed)) trees.push_back(random_tree(m.n, m.seed));
            return cmd_bounds(trees, tol, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}

} // namespace treespec::cli
