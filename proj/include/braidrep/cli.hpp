#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braidrep/analysis.hpp"
#include "braidrep/braid_word.hpp"
#include "braidrep/golden_phi3.hpp"
#include "braidrep/io.hpp"
#include "braidrep/representation.hpp"

namespace braidrep::cli {

// Exit code contract (stable for CI): 0 success, 1 usage/config error,
// 2 mathematical failure (relation or golden mismatch).
inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 1;
inline constexpr int exit_math_failure = 2;

inline constexpr std::uint64_t default_rng_seed = 12345;

struct RunConfig {
    int n = 0;
    int m = 0;
    std::string seed_tuple;
    std::string q_table_path;
    std::string t_value;
    std::string format = "text";
    std::string output_path;
    std::uint64_t rng_seed = default_rng_seed;
    bool no_verify = false;
    bool golden_check = false;
    bool timings = false;
    bool dense = false;
    bool corank_of_word = false;
    int n_min = 3, n_max = 8;
    std::string word_text;
};

namespace detail {

inline Representation build_from_config(const RunConfig& cfg) {
    const bool family = cfg.n > 0 || cfg.m > 0;
    const bool explicit_seed = !cfg.seed_tuple.empty() || !cfg.q_table_path.empty();
    if (family == explicit_seed)
        throw Error("specify exactly one of --n/--m or --seed/--qtable");
    if (family) {
        if (cfg.n <= 0 || cfg.m <= 0) throw Error("--n and --m must both be given");
        return build_phi_m(cfg.n, cfg.m);
    }
    if (cfg.seed_tuple.empty() || cfg.q_table_path.empty())
        throw Error("--seed and --qtable must both be given");
    return build_generic(parse_tuple(cfg.seed_tuple), qtable_from_file(cfg.q_table_path));
}

inline void write_output(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output_path);
    if (!file) throw Error("cannot open output file: " + cfg.output_path);
    file << text;
}

inline std::string render_scalar(const Scalar& s, const std::optional<Rational>& at) {
    if (!at) return s.to_string();
    return gaussian_to_string(s.eval(GaussianRational(*at)));
}

inline std::string monomial_text(const Representation& rep, const MonomialMatrix& m,
                                 const std::optional<Rational>& at) {
    std::ostringstream out;
    out << "action on basis vectors (ranks are 0-based; k in tau_k is 1-based):\n";
    for (std::size_t x = 0; x < m.dim(); ++x) {
        out << "  " << x << " " << tuple_to_string(rep.orbit.basis[x]) << " -> " << m.perm(x)
            << " " << tuple_to_string(rep.orbit.basis[m.perm(x)]) << "   scale "
            << render_scalar(m.scale(x), at) << "\n";
    }
    return out.str();
}

inline std::string dense_text(const DenseMatrix& m, const std::optional<Rational>& at) {
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << "  [";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ", ";
            out << render_scalar(m.at(r, c), at);
        }
        out << "]\n";
    }
    return out.str();
}

/// Compares a built phi_3 (n=5) against the embedded fixture, entry by entry
/// on the canonical string renderings.
inline bool golden_matches(const Representation& rep, std::ostream& diagnostics) {
    GoldenFixture fixture = golden_phi3_n5();
    if (rep.n != fixture.n || rep.dim() != fixture.basis.size()) {
        diagnostics << "golden-check: shape mismatch\n";
        return false;
    }
    bool ok = true;
    for (std::size_t i = 0; i < fixture.basis.size(); ++i)
        if (rep.orbit.basis[i] != fixture.basis[i]) {
            diagnostics << "golden-check: basis[" << i << "] = "
                        << tuple_to_string(rep.orbit.basis[i]) << ", fixture has "
                        << tuple_to_string(fixture.basis[i]) << "\n";
            ok = false;
        }
    for (std::size_t k = 0; k < fixture.matrices.size(); ++k) {
        DenseMatrix built = mm_to_dense(rep.generators[k]);
        for (std::size_t r = 0; r < built.rows(); ++r)
            for (std::size_t c = 0; c < built.cols(); ++c) {
                std::string lhs = built.at(r, c).to_string();
                std::string rhs = fixture.matrices[k].at(r, c).to_string();
                if (lhs != rhs) {
                    diagnostics << "golden-check: tau_" << (k + 1) << " entry (" << (r + 1) << ","
                                << (c + 1) << ") built " << lhs << " != fixture " << rhs << "\n";
                    ok = false;
                }
            }
    }
    return ok;
}

inline int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Representation rep = build_from_config(cfg);
    if (cfg.golden_check) {
        if (cfg.n != 5 || cfg.m != 3)
            throw Error("--golden-check applies to --n 5 --m 3 only");
        if (!golden_matches(rep, err)) {
            err << "golden-check: MISMATCH\n";
            return exit_math_failure;
        }
        out << "golden-check: byte-exact match with the embedded n=5, m=3 fixture\n";
    }
    RelationReport relations;
    if (!cfg.no_verify) {
        relations = verify_braid_relations(rep);
        if (!relations.all_pass) {
            err << "braid relations FAILED:\n";
            for (const RelationCheck& c : relations.checks)
                if (!c.pass)
                    err << "  " << c.name() << " fails at v_" << tuple_to_string(c.witness->x)
                        << ": scalars " << c.witness->lhs_scalar.to_string() << " vs "
                        << c.witness->rhs_scalar.to_string() << "\n";
            return exit_math_failure;
        }
    }
    if (cfg.format == "json") {
        json j = representation_to_json(rep);
        if (!cfg.no_verify) j["relations_verified"] = true;
        write_output(cfg, out, j.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        std::ostringstream all;
        for (std::size_t k = 0; k < rep.generators.size(); ++k) {
            all << "# tau_" << (k + 1) << "\n";
            all << dense_to_csv(mm_to_dense(rep.generators[k]));
        }
        write_output(cfg, out, all.str());
    } else {
        std::ostringstream text;
        text << "n=" << rep.n << " seed=" << tuple_to_string(rep.seed) << " dim=" << rep.dim()
             << " generators=" << rep.generators.size() << "\n";
        text << "basis (ascending lex, 0-based ranks):\n";
        for (std::size_t i = 0; i < rep.dim(); ++i)
            text << "  " << i << ": " << tuple_to_string(rep.orbit.basis[i]) << "\n";
        for (std::size_t k = 0; k < rep.generators.size(); ++k) {
            text << "tau_" << (k + 1) << ":\n"
                 << monomial_text(rep, rep.generators[k], std::nullopt);
        }
        if (!cfg.no_verify)
            text << "braid relations: all " << relations.checks.size() << " pass\n";
        write_output(cfg, out, text.str());
    }
    return exit_ok;
}

inline int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    Representation rep = build_from_config(cfg);
    Rational at = cfg.t_value.empty() ? Rational(2) : parse_rational(cfg.t_value);

    SeparationReport sep = separation_check(rep);
    SeparationReport sep_consecutive = separation_check(rep, SeparationMode::consecutive_only);
    IrreducibilityCertificate cert = certify_irreducible(rep, at);
    CorankResult ranks = corank(rep, {Rational(2), Rational(3), Rational(5, 2)});
    AdjointnessReport adjointness = classify_adjointness(rep);
    std::optional<EquivalenceReport> standard;
    if (auto m = phi_m_parameter(rep); m && *m == 1)
        standard = check_standard_equivalence(rep.n);

    if (cfg.format == "json") {
        json j = certificate_to_json(cert, ranks);
        j["n"] = rep.n;
        j["dim"] = rep.dim();
        j["separation"] = separation_to_json(sep);
        j["separation_consecutive"] = separation_to_json(sep_consecutive);
        json adj = json::array();
        for (const auto& g : adjointness.per_generator) adj.push_back(g.label());
        j["adjointness"] = adj;
        if (standard) j["standard_equivalence"] = equivalence_to_json(*standard);
        write_output(cfg, out, j.dump(2) + "\n");
        return exit_ok;
    }

    std::ostringstream text;
    text << "n=" << rep.n << " seed=" << tuple_to_string(rep.seed) << " dim=" << rep.dim() << "\n";
    text << "verdict: " << IrreducibilityCertificate::verdict_name(cert.verdict)
         << " (method: " << IrreducibilityCertificate::method_name(cert.method);
    if (cert.evaluation_point) text << " at t=" << rational_to_string(*cert.evaluation_point);
    text << ")\n";
    if (cert.commutant_dim) text << "commutant dimension: " << *cert.commutant_dim << "\n";
    if (cert.witness) {
        if (cert.witness->description == "sum_of_basis")
            text << "invariant line: sum of all basis vectors, eigenvalue "
                 << cert.witness->eigenvalue->to_string() << " for every generator\n";
        else
            text << "invariant subspace: " << cert.witness->description << " of dimension "
                 << cert.witness->subspace_dim
                 << " (the complement involution v_x -> v_complement(x) commutes with every "
                    "generator)\n";
    }
    text << "separation (all pairs): " << (sep.holds ? "holds" : "fails");
    if (sep.witness_pair)
        text << " at " << tuple_to_string(sep.witness_pair->first) << " vs "
             << tuple_to_string(sep.witness_pair->second);
    text << "; consecutive-only: " << (sep_consecutive.holds ? "holds" : "fails") << "\n";
    text << "generators:";
    for (std::size_t k = 0; k < adjointness.per_generator.size(); ++k)
        text << " tau_" << (k + 1) << "=" << adjointness.per_generator[k].label();
    text << "\n";
    text << "corank: measured [";
    for (std::size_t i = 0; i < ranks.measured.size(); ++i)
        text << (i ? "," : "") << ranks.measured[i];
    text << "]";
    if (ranks.closed_form) {
        bool match = ranks.k_independent && ranks.measured.front() == *ranks.closed_form;
        text << " closed-form " << *ranks.closed_form << " -> "
             << (match ? "measured = closed form for every generator"
                       : "MISMATCH between measured and closed form");
    } else {
        text << " (no closed form: not a phi_m instance)";
    }
    text << (ranks.cross_checked ? "; dense ranks at t=2,3,5/2 agree\n" : "\n");
    if (standard)
        text << "m=1 is the standard representation: intertwiner check "
             << (standard->pass ? "passed" : "FAILED") << " for all " << standard->per_k.size()
             << " generators against the 1+(t-1)b table (the symmetric 1-or-t table matches "
                "the standard matrices at parameter t^2)\n";
    write_output(cfg, out, text.str());
    return exit_ok;
}

inline int cmd_word(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    Representation rep = build_from_config(cfg);
    BraidWord word = parse_braid_word(cfg.word_text);
    MonomialMatrix result = evaluate_word(rep, word);
    std::optional<Rational> at;
    if (!cfg.t_value.empty()) at = parse_rational(cfg.t_value);

    if (cfg.format == "json") {
        json j{{"word", word.to_string()}, {"n", rep.n}, {"dim", rep.dim()}};
        j["matrix"] = monomial_to_json(result);
        if (cfg.dense) j["dense"] = dense_to_json(mm_to_dense(result));
        if (result.is_identity()) j["identity"] = true;
        write_output(cfg, out, j.dump(2) + "\n");
        return exit_ok;
    }
    if (cfg.format == "csv") {
        DenseMatrix dense = mm_to_dense(result);
        std::ostringstream csv;
        for (std::size_t r = 0; r < dense.rows(); ++r) {
            for (std::size_t c = 0; c < dense.cols(); ++c) {
                if (c) csv << ",";
                csv << render_scalar(dense.at(r, c), at);
            }
            csv << "\n";
        }
        write_output(cfg, out, csv.str());
        return exit_ok;
    }
    std::ostringstream text;
    text << "word: " << word.to_string() << " on n=" << rep.n << ", dim=" << rep.dim() << "\n";
    if (result.is_identity()) text << "result: identity\n";
    text << monomial_text(rep, result, at);
    if (cfg.dense) text << "dense:\n" << dense_text(mm_to_dense(result), at);
    if (cfg.corank_of_word) {
        DenseMatrix shifted = mm_to_dense(result) - DenseMatrix::identity(result.dim());
        text << "rank(word - identity) at generic t: " << generic_rank(shifted, cfg.rng_seed)
             << "\n";
    }
    write_output(cfg, out, text.str());
    return exit_ok;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    if (cfg.n_min < 3 || cfg.n_max < cfg.n_min)
        throw Error("sweep requires 3 <= n-min <= n-max");
    std::ostringstream csv;
    csv << "n,m,dim,corank_measured,corank_closed_form,verdict,wall_ms\n";
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        for (int m = 1; m < n; ++m) {
            if (cfg.m > 0 && m != cfg.m) continue;
            auto start = std::chrono::steady_clock::now();
            Representation rep = build_phi_m(n, m);
            IrreducibilityCertificate cert = certify_irreducible(rep);
            CorankResult ranks = corank(rep, {Rational(2), Rational(3), Rational(5, 2)});
            auto stop = std::chrono::steady_clock::now();
            if (!ranks.k_independent)
                throw Error("corank is not k-independent for n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
            csv << n << "," << m << "," << rep.dim() << "," << ranks.measured.front() << ","
                << (ranks.closed_form ? std::to_string(*ranks.closed_form) : "") << ","
                << IrreducibilityCertificate::verdict_name(cert.verdict) << ",";
            if (cfg.timings)
                csv << std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
            csv << "\n";
        }
    }
    write_output(cfg, out, csv.str());
    return exit_ok;
}

inline int cmd_golden_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Representation rep = build_phi_m(5, 3);
    if (!golden_matches(rep, err)) {
        err << "golden-check: MISMATCH\n";
        return exit_math_failure;
    }
    std::ostringstream text;
    text << "golden-check: all 4 generator matrices match the embedded n=5, m=3 fixture\n";
    write_output(cfg, out, text.str());
    return exit_ok;
}

}  // namespace detail

/// Runs the CLI against an argument vector (argv[0] excluded). All output
/// goes to the given streams; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact braid-group representations on multiset permutation orbits"};
    app.require_subcommand(1);

    auto add_rep_options = [&](CLI::App* cmd) {
        cmd->add_option("--n", cfg.n, "strand count (phi_m family; with --m)");
        cmd->add_option("--m", cfg.m, "number of ones in the binary seed (with --n)");
        cmd->add_option("--seed", cfg.seed_tuple, "explicit seed tuple, e.g. 1,0,0 (with --qtable)");
        cmd->add_option("--qtable", cfg.q_table_path,
                        "JSON q-table file: {\"a,b\": \"scalar\", ...} (with --seed)");
    };
    auto add_common = [&](CLI::App* cmd, bool with_csv) {
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember(with_csv ? std::vector<std::string>{"text", "json", "csv"}
                                           : std::vector<std::string>{"text", "json"}))
            ->capture_default_str();
        cmd->add_option("--output", cfg.output_path, "write output to a file instead of stdout");
        cmd->add_option("--rng-seed", cfg.rng_seed,
                        "seed for the generic-rank evaluation points "
                        "(env BRAIDREP_SEED overrides)")
            ->capture_default_str();
    };

    CLI::App* build = app.add_subcommand("build", "build a representation and verify relations");
    add_rep_options(build);
    add_common(build, true);
    build->add_flag("--no-verify", cfg.no_verify, "skip braid-relation verification");
    build->add_flag("--golden-check", cfg.golden_check,
                    "also compare --n 5 --m 3 against the embedded fixture");

    CLI::App* analyze =
        app.add_subcommand("analyze", "irreducibility certificate, corank, adjointness");
    add_rep_options(analyze);
    add_common(analyze, false);
    analyze->add_option("--t", cfg.t_value,
                        "exact rational evaluation point for the commutant fallback "
                        "(default 2; never a float)");

    CLI::App* word = app.add_subcommand("word", "evaluate a braid word to a monomial matrix");
    add_rep_options(word);
    add_common(word, true);
    word->add_option("--t", cfg.t_value, "evaluate scalars at this exact rational t");
    word->add_flag("--dense", cfg.dense, "also print the dense matrix");
    word->add_flag("--corank", cfg.corank_of_word,
                   "print rank(result - identity) at seeded generic points");
    word->add_option("word", cfg.word_text,
                     "braid word: signed generator indices, optional ^power "
                     "(e.g. \"1 -2 3^-2\"); the word a b means the matrix product "
                     "phi(tau_a) phi(tau_b) acting on column vectors")
        ->required();

    CLI::App* sweep = app.add_subcommand("sweep", "dimension/corank/verdict table over (n, m)");
    sweep->add_option("--n-min", cfg.n_min, "smallest n")->capture_default_str();
    sweep->add_option("--n-max", cfg.n_max, "largest n")->capture_default_str();
    sweep->add_option("--m", cfg.m, "restrict to a single m (default: all 1 <= m < n)");
    add_common(sweep, true);
    sweep->add_flag("--timings", cfg.timings,
                    "fill the wall_ms column (off by default so output is byte-deterministic)");

    CLI::App* golden = app.add_subcommand("golden-check",
                                          "compare phi_3 (n=5) against the embedded fixture");
    add_common(golden, false);

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    std::string prog = "braidrep";
    argv.push_back(prog.data());
    for (std::string& a : storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_config_error;
    }

    if (const char* env_seed = std::getenv("BRAIDREP_SEED")) {
        try {
            cfg.rng_seed = std::stoull(env_seed);
        } catch (const std::exception&) {
            err << "error: BRAIDREP_SEED is not an unsigned integer\n";
            return exit_config_error;
        }
    }

    try {
        if (build->parsed()) return detail::cmd_build(cfg, out, err);
        if (analyze->parsed()) return detail::cmd_analyze(cfg, out, err);
        if (word->parsed()) return detail::cmd_word(cfg, out, err);
        if (sweep->parsed()) return detail::cmd_sweep(cfg, out, err);
        if (golden->parsed()) return detail::cmd_golden_check(cfg, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_config_error;
    }
    err << "error: no command\n";
    return exit_config_error;
}

}  // namespace braidrep::cli
