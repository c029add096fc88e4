#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "braidrep/analysis.hpp"
#include "braidrep/dense.hpp"
#include "braidrep/errors.hpp"
#include "braidrep/representation.hpp"

namespace braidrep {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// q-tables: JSON map from "a,b" keys to scalar strings.
// ---------------------------------------------------------------------------

inline json qtable_to_json(const QTable& q) {
    json out = json::object();
    for (const auto& [key, value] : q.entries())
        out[std::to_string(key.first) + "," + std::to_string(key.second)] = value.to_string();
    return out;
}

inline QTable qtable_from_json(const json& j) {
    if (!j.is_object()) throw Error("q-table JSON must be an object of \"a,b\" keys");
    QTable q;
    for (const auto& [key, value] : j.items()) {
        std::size_t comma = key.find(',');
        if (comma == std::string::npos)
            throw Error("q-table key '" + key + "' is not of the form \"a,b\"");
        int a = 0, b = 0;
        try {
            a = std::stoi(key.substr(0, comma));
            b = std::stoi(key.substr(comma + 1));
        } catch (const std::exception&) {
            throw Error("q-table key '" + key + "' must be two integers \"a,b\"");
        }
        Scalar s = Scalar::parse(value.get<std::string>());
        if (s.is_zero()) throw ZeroQEntry(a, b);
        q.set(a, b, std::move(s));
    }
    return q;
}

inline QTable qtable_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open q-table file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw Error("q-table file " + path + " is not valid JSON: " + e.what());
    }
    return qtable_from_json(j);
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

inline json monomial_to_json(const MonomialMatrix& m) {
    json perm = json::array();
    json scale = json::array();
    for (std::size_t x = 0; x < m.dim(); ++x) {
        perm.push_back(m.perm(x));
        scale.push_back(m.scale(x).to_string());
    }
    return json{{"perm", perm}, {"scale", scale}};
}

inline json dense_to_json(const DenseMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string dense_to_csv(const DenseMatrix& m) {
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ",";
            out << m.at(r, c).to_string();
        }
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

inline json representation_to_json(const Representation& rep) {
    json basis = json::array();
    for (const ValueTuple& x : rep.orbit.basis) basis.push_back(tuple_to_string(x));
    json generators = json::array();
    for (const MonomialMatrix& g : rep.generators) generators.push_back(monomial_to_json(g));
    return json{{"n", rep.n},
                {"seed", tuple_to_string(rep.seed)},
                {"basis", basis},
                {"q_table", qtable_to_json(rep.q)},
                {"generators", generators}};
}

/// Rebuilds the representation from seed + q-table and validates any stored
/// basis/generators against the rebuilt ones.
inline Representation representation_from_json(const json& j) {
    ValueTuple seed = parse_tuple(j.at("seed").get<std::string>());
    Representation rep = build_generic(seed, qtable_from_json(j.at("q_table")));
    if (j.contains("n") && j.at("n").get<int>() != rep.n)
        throw Error("representation JSON: n does not match the seed length");
    if (j.contains("basis")) {
        const auto& basis = j.at("basis");
        if (basis.size() != rep.dim())
            throw Error("representation JSON: basis size does not match the orbit");
        for (std::size_t i = 0; i < rep.dim(); ++i)
            if (parse_tuple(basis[i].get<std::string>()) != rep.orbit.basis[i])
                throw Error("representation JSON: basis is not in ascending lex order");
    }
    if (j.contains("generators")) {
        const auto& gens = j.at("generators");
        if (gens.size() != rep.generators.size())
            throw Error("representation JSON: wrong number of generators");
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const auto& perm = gens[g].at("perm");
            const auto& scale = gens[g].at("scale");
            for (std::size_t x = 0; x < rep.dim(); ++x) {
                if (perm[x].get<std::size_t>() != rep.generators[g].perm(x) ||
                    Scalar::parse(scale[x].get<std::string>()) != rep.generators[g].scale(x))
                    throw Error("representation JSON: stored generator " + std::to_string(g + 1) +
                                " disagrees with the rebuilt one");
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Reports and certificates
// ---------------------------------------------------------------------------

inline json relation_report_to_json(const RelationReport& report) {
    json checks = json::array();
    for (const RelationCheck& c : report.checks) {
        json entry{{"relation", c.name()},
                   {"kind", c.kind == RelationCheck::Kind::braid ? "braid" : "far_commutation"},
                   {"k", c.k},
                   {"j", c.j},
                   {"pass", c.pass}};
        if (c.witness) {
            entry["witness"] = json{{"x", tuple_to_string(c.witness->x)},
                                    {"lhs_target", tuple_to_string(c.witness->lhs_target)},
                                    {"rhs_target", tuple_to_string(c.witness->rhs_target)},
                                    {"lhs_scalar", c.witness->lhs_scalar.to_string()},
                                    {"rhs_scalar", c.witness->rhs_scalar.to_string()}};
        }
        checks.push_back(std::move(entry));
    }
    return json{{"all_pass", report.all_pass}, {"checks", checks}};
}

inline json corank_to_json(const CorankResult& result) {
    json per_k = json::array();
    for (std::size_t r : result.measured) per_k.push_back(r);
    json out{{"per_k", per_k}, {"k_independent", result.k_independent}};
    if (result.closed_form) out["closed_form"] = *result.closed_form;
    else out["closed_form"] = nullptr;
    if (result.cross_checked) out["cross_checked"] = true;
    return out;
}

inline json certificate_to_json(const IrreducibilityCertificate& cert,
                                const CorankResult& corank_result) {
    json out{{"verdict", IrreducibilityCertificate::verdict_name(cert.verdict)},
             {"method", IrreducibilityCertificate::method_name(cert.method)}};
    if (cert.evaluation_point) out["evaluation_point"] = rational_to_string(*cert.evaluation_point);
    if (cert.commutant_dim) out["commutant_dim"] = *cert.commutant_dim;
    if (cert.witness) {
        json w{{"subspace", cert.witness->description},
               {"dim", cert.witness->subspace_dim}};
        if (cert.witness->eigenvalue) w["eigenvalue"] = cert.witness->eigenvalue->to_string();
        out["witness"] = w;
    }
    out["corank"] = corank_to_json(corank_result);
    return out;
}

inline json separation_to_json(const SeparationReport& report) {
    json out{{"holds", report.holds},
             {"self_adjoint", report.self_adjoint},
             {"mode", report.mode == SeparationMode::all_pairs ? "all_pairs" : "consecutive_only"}};
    if (report.witness_pair)
        out["witness_pair"] = json::array({tuple_to_string(report.witness_pair->first),
                                           tuple_to_string(report.witness_pair->second)});
    return out;
}

inline json equivalence_to_json(const EquivalenceReport& report) {
    json per_k = json::array();
    for (bool ok : report.per_k) per_k.push_back(ok);
    json out{{"n", report.n}, {"pass", report.pass}, {"per_k", per_k}};
    if (report.witness)
        out["witness"] = json{{"k", report.witness->k},
                              {"row", report.witness->row},
                              {"col", report.witness->col},
                              {"lhs", report.witness->lhs.to_string()},
                              {"rhs", report.witness->rhs.to_string()}};
    return out;
}

}  // namespace braidrep
