#pragma once

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "invsemi/corpus.hpp"
#include "invsemi/io.hpp"
#include "invsemi/positive.hpp"
#include "invsemi/suite.hpp"

// Command-line front end. Exit codes follow one convention everywhere:
// 0 = pass, 1 = mathematical failure (invalid semigroup, false verdict,
// input not restricted-PD), 2 = operational failure (unreadable or
// malformed files, bad parameters, base mismatches).

namespace invsemi::cli {

namespace detail {

inline void emit(const json& j, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << j.dump(2) << '\n';
    else
        save_json(j, out_path);
}

} // namespace detail

inline int cmd_validate(const std::string& file, std::ostream& out, std::ostream& err) {
    json doc;
    try {
        doc = load_json(file);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    }
    try {
        auto s = semigroup_from_json(doc);
        json rep{{"valid", true},
                 {"size", s->size()},
                 {"identity", s->identity() ? json(*s->identity()) : json(nullptr)},
                 {"zero", s->zero() ? json(*s->zero()) : json(nullptr)},
                 {"idempotents", s->idempotents()}};
        if (!s->name().empty()) rep["name"] = s->name();
        out << rep.dump(2) << '\n';
        return 0;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        json rep{{"valid", false}, {"error", e.what()}};
        json w = json::array();
        for (int v : e.witness)
            if (v >= 0) w.push_back(v);
        rep["witness"] = std::move(w);
        out << rep.dump(2) << '\n';
        err << e.what() << '\n';
        return 1;
    }
}

inline int cmd_build(const std::string& kind, const std::vector<std::string>& args,
                     const std::string& out_path, std::ostream& out, std::ostream& err) {
    try {
        SemigroupPtr s;
        auto want = [&](std::size_t n, const char* usage) {
            if (args.size() != n) throw std::invalid_argument(std::string("usage: build ") + usage);
        };
        if (kind == "chain") {
            want(1, "chain <k>");
            s = chain_semilattice(std::stoi(args[0]));
        } else if (kind == "cyclic") {
            want(1, "cyclic <k>");
            s = cyclic_group(std::stoi(args[0]));
        } else if (kind == "inverse-monoid") {
            want(1, "inverse-monoid <k>");
            s = symmetric_inverse_monoid(std::stoi(args[0]));
        } else if (kind == "product") {
            want(2, "product <file-a> <file-b>");
            s = direct_product(load_semigroup(args[0]), load_semigroup(args[1]));
        } else if (kind == "restricted") {
            want(1, "restricted <file>");
            s = restricted_semigroup(*load_semigroup(args[0]));
        } else {
            throw std::invalid_argument("unknown build kind: " + kind);
        }
        detail::emit(semigroup_to_json(*s), out_path, out);
        return 0;
    } catch (const std::exception& e) {
        err << "build failed: " << e.what() << '\n';
        return 2;
    }
}

inline int cmd_check(const std::string& semigroup_file, const std::string& function_file,
                     const std::string& which, std::optional<double> tol,
                     const std::string& format, const std::string& out_path, std::ostream& out,
                     std::ostream& err) {
    try {
        auto s = resolve_semigroup(semigroup_file);
        auto u = load_function(function_file, s);
        CheckReport rep;
        if (which == "pd")
            rep = is_pd(u, tol);
        else if (which == "rpd")
            rep = is_rpd(u, tol);
        else if (which == "extendible")
            rep = is_extendible_rpd(u, tol);
        else
            throw std::invalid_argument("check kind must be pd, rpd or extendible");
        if (format == "text") {
            out << rep.check << ": " << (rep.verdict ? "true" : "false");
            if (rep.constant) out << " (constant " << *rep.constant << ")";
            if (!rep.detail.empty()) out << " -- " << rep.detail;
            out << '\n';
        } else {
            detail::emit(report_to_json(rep), out_path, out);
        }
        return rep.verdict ? 0 : 1;
    } catch (const std::exception& e) {
        err << "check failed: " << e.what() << '\n';
        return 2;
    }
}

inline int cmd_factorize(const std::string& semigroup_file, const std::string& function_file,
                         std::optional<double> tol, const std::string& out_path, std::ostream& out,
                         std::ostream& err) {
    SemigroupPtr s;
    std::optional<SFunction> phi;
    try {
        s = resolve_semigroup(semigroup_file);
        phi.emplace(load_function(function_file, s));
    } catch (const std::exception& e) {
        err << "factorize failed: " << e.what() << '\n';
        return 2;
    }
    try {
        auto fac = godement_factorize(*phi, tol);
        json xi = function_to_json(fac.xi);
        if (!out_path.empty()) save_json(xi, out_path);
        json rep{{"reconstruction_error", fac.reconstruction_error}, {"verdict", true}};
        if (out_path.empty()) rep["xi"] = std::move(xi);
        out << rep.dump(2) << '\n';
        return 0;
    } catch (const NotRPD& e) {
        out << report_to_json(e.report).dump(2) << '\n';
        err << "factorize failed: input is not restricted positive definite\n";
        return 1;
    } catch (const std::exception& e) {
        err << "factorize failed: " << e.what() << '\n';
        return 2;
    }
}

inline int cmd_random(const std::string& semigroup_file, std::uint64_t seed,
                      const std::string& out_path, std::ostream& out, std::ostream& err) {
    try {
        auto s = resolve_semigroup(semigroup_file);
        auto phi = random_rpd(s, seed);
        detail::emit(function_to_json(phi), out_path, out);
        return 0;
    } catch (const std::exception& e) {
        err << "random failed: " << e.what() << '\n';
        return 2;
    }
}

inline int cmd_suite(const SuiteConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        auto run = run_suite(cfg);
        const std::string rendered =
            cfg.format == "text" ? render_suite_text(run.report) : run.report.dump(2) + "\n";
        if (cfg.out_path.empty()) {
            out << rendered;
        } else {
            std::ofstream f(cfg.out_path);
            if (!f) throw ParseError("cannot write " + cfg.out_path);
            f << rendered;
        }
        return run.exit_code;
    } catch (const std::exception& e) {
        err << "suite failed: " << e.what() << '\n';
        return 2;
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"harmonic analysis on finite inverse semigroups"};
    app.require_subcommand(1);

    std::string file, function_file, out_path, format = "json", kind, which = "rpd";
    std::vector<std::string> build_args, corpus;
    std::uint64_t seed = 1;
    int trials = 200;
    double tolerance = -1.0; // negative = library defaults

    auto* validate = app.add_subcommand("validate", "validate a semigroup file");
    validate->add_option("file", file)->required();

    auto* build = app.add_subcommand("build", "construct a semigroup and write its table");
    build->add_option("kind", kind, "chain | cyclic | inverse-monoid | product | restricted")
        ->required();
    build->add_option("args", build_args, "size or input files");
    build->add_option("--out", out_path, "output file (stdout if absent)");

    auto* check = app.add_subcommand("check", "decide positive definiteness of a function");
    check->add_option("semigroup", file)->required();
    check->add_option("function", function_file)->required();
    check->add_option("--which", which, "pd | rpd | extendible");
    check->add_option("--tolerance", tolerance);
    check->add_option("--format", format, "json | text");
    check->add_option("--out", out_path);

    auto* factorize = app.add_subcommand("factorize", "factor a restricted-PD function as xi•xi~");
    factorize->add_option("semigroup", file)->required();
    factorize->add_option("function", function_file)->required();
    factorize->add_option("--tolerance", tolerance);
    factorize->add_option("--out", out_path, "write xi to this file");

    auto* random = app.add_subcommand("random", "generate a certified restricted-PD function");
    random->add_option("semigroup", file)->required();
    random->add_option("--seed", seed);
    random->add_option("--out", out_path);

    auto* suite = app.add_subcommand("suite", "run the verification suite over a corpus");
    suite->add_option("--corpus", corpus, "builtin names or semigroup files");
    suite->add_option("--trials", trials)->check(CLI::PositiveNumber);
    suite->add_option("--seed", seed);
    suite->add_option("--tolerance", tolerance);
    suite->add_option("--format", format, "json | text");
    suite->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::optional<double> tol;
    if (tolerance >= 0.0) tol = tolerance;

    if (validate->parsed()) return cmd_validate(file, out, err);
    if (build->parsed()) return cmd_build(kind, build_args, out_path, out, err);
    if (check->parsed())
        return cmd_check(file, function_file, which, tol, format, out_path, out, err);
    if (factorize->parsed()) return cmd_factorize(file, function_file, tol, out_path, out, err);
    if (random->parsed()) return cmd_random(file, seed, out_path, out, err);
    if (suite->parsed()) {
        SuiteConfig cfg;
        if (!corpus.empty()) cfg.corpus = corpus;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.tolerance = tol;
        cfg.format = format;
        cfg.out_path = out_path;
        return cmd_suite(cfg, out, err);
    }
    return 2;
}

} // namespace invsemi::cli
