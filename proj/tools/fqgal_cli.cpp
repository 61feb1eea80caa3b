// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fqgal/certify.hpp"
#include "fqgal/errors.hpp"
#include "fqgal/rootspace.hpp"
#include "json.hpp"

using namespace fqgal;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kHypothesis = 2, kBudget = 3, kMalformed = 4 };

struct Options {
    std::string q = "2";
    std::string mod;
    std::string M;
    std::string phi;
    unsigned m = 0;
    unsigned n = 0;
    unsigned smax = 2;
    std::string mode = "both";
    std::string kind = "sp";
    std::string json_path;
    std::string mu;
    Config cfg;
};

// Human-readable lines; moved to stderr when JSON goes to stdout.
std::ostream* g_text = &std::cout;

FieldPtr field_of(const Options& o) { return parse_field(o.q, o.mod); }

Poly required_poly(const Options& o) {
    if (o.M.empty()) throw MalformedInput("--M is required");
    return parse_poly(field_of(o), o.M);
}

void emit_json(const Options& o, const json& j) {
    if (o.json_path.empty()) return;
    const std::string text = j.dump(2) + "\n";
    if (o.json_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(o.json_path, std::ios::binary);
    if (!out) throw MalformedInput("cannot write " + o.json_path);
    out << text;
}

int run_associate(const Options& o) {
    const FieldPtr F = field_of(o);
    if (!o.phi.empty()) {
        const QPoly p(F, parse_poly(F, o.phi).coeffs());
        *g_text << "M=" << associate(p).to_string() << "\n";
        emit_json(o, {{"M", associate(p).coeffs()}, {"Phi", p.qcoeffs()}});
        return kOk;
    }
    const Poly m = required_poly(o);
    const QPoly p = from_associate(m);
    *g_text << "Phi=" << p.to_string() << "\n";
    emit_json(o, {{"M", m.coeffs()}, {"Phi", p.qcoeffs()}});
    return kOk;
}

int run_lift(const Options& o) {
    const FieldPtr F = field_of(o);
    const QPoly phi = o.phi.empty() ? from_associate(required_poly(o)) : QPoly(F, parse_poly(F, o.phi).coeffs());
    const SparsePoly f = artin_schreier_lift(phi);
    const bool ok = check_artin_schreier(phi, f);
    *g_text << "f=" << f.to_string() << "\n" << "identity=" << (ok ? "holds" : "fails") << "\n";
    emit_json(o, {{"Phi", phi.qcoeffs()}, {"lift_f", f.to_string()}, {"identity", ok}});
    return ok ? kOk : kHypothesis;
}

int run_certify(const Options& o, CertKind kind) {
    const Poly m = required_poly(o);
    const Certificate cert = certify(kind, m, o.cfg);
    for (const auto& c : cert.checks) *g_text << (c.pass ? "pass  " : "FAIL  ") << c.name << "\n";
    *g_text << "conclusion: " << cert.statement << " [" << cert.theorem << "]\n";
    emit_json(o, cert.to_json());
    return kOk;
}

int run_enumerate(const Options& o) {
    if (o.m == 0) throw MalformedInput("--m is required");
    CertKind kind = CertKind::sp;
    if (o.kind == "o-even") kind = CertKind::o_even;
    else if (o.kind != "sp") throw MalformedInput("--kind must be sp or o-even");
    const auto rep = enumerate_admissible(field_of(o), o.m, kind, o.cfg);
    for (std::size_t i = 0; i < rep.M.size(); ++i) *g_text << "f=" << rep.f[i].to_string() << "  M=" << rep.M[i].to_string() << "\n";
    *g_text << "count=" << rep.count;
    json j{{"q", rep.q}, {"m", rep.m}, {"kind", o.kind}, {"count", rep.count}};
    json list = json::array();
    for (std::size_t i = 0; i < rep.M.size(); ++i) list.push_back({{"f", rep.f[i].coeffs()}, {"M", rep.M[i].coeffs()}});
    j["admissible"] = list;
    if (rep.formula) {
        *g_text << " formula=" << *rep.formula;
        j["formula"] = *rep.formula;
        j["formula_applies"] = rep.formula_applies;
        if (!rep.formula_applies)
            *g_text << " (m=1: formula not applied; enumeration finds " << rep.count << ")";
    }
    *g_text << "\n";
    emit_json(o, j);
    if (rep.formula_applies && !rep.formula_matches()) return kHypothesis;
    return kOk;
}

int run_counts(const Options& o) {
    if (o.n == 0) throw MalformedInput("--n is required");
    const std::uint64_t q = field_of(o)->order();
    json j{{"q", q}, {"n", o.n}};
    std::ostringstream line;
    std::optional<std::uint64_t> a, b;
    if (o.mode == "formula" || o.mode == "both") {
        a = count_squarefree_vanishing(o.n, q, CountMode::formula);
        line << "formula=" << *a;
        j["formula"] = *a;
    }
    if (o.mode == "enumerate" || o.mode == "both") {
        b = count_squarefree_vanishing(o.n, q, CountMode::enumerate, o.cfg.enum_budget);
        line << (a ? " " : "") << "enumerate=" << *b;
        j["enumerate"] = *b;
    }
    if (!a && !b) throw MalformedInput("--mode must be formula, enumerate or both");
    *g_text << line.str() << "\n";
    emit_json(o, j);
    return a && b && *a != *b ? kHypothesis : kOk;
}

int run_weyl(const Options& o) {
    const Poly m = required_poly(o);
    const WeylStructure w = weyl_structure(m);
    const SurveyReport rep = cycle_type_survey(m, o.smax, o.cfg);
    *g_text << "M_t=" << w.Mt.to_string() << "\n";
    *g_text << "self_reciprocal_t=" << w.self_reciprocal_t << " irreducible=" << cert_status_name(w.irreducibility.status)
              << " pattern_matches=" << w.pattern_matches << "\n";
    *g_text << "unramified=" << rep.unramified << " ramified=" << rep.ramified << "\n";
    for (const auto& t : rep.cycle_types) {
        *g_text << "type [";
        for (std::size_t i = 0; i < t.size(); ++i) *g_text << (i ? "," : "") << t[i];
        *g_text << "]\n";
    }
    *g_text << "pair_closure=" << rep.pair_closure << " order_divisibility=" << rep.order_divisibility
              << " degree_bound=" << rep.degree_bound << "\n";
    json pattern = json::array();
    for (const auto& [g, e] : w.pattern) pattern.push_back({{"factor", g.coeffs()}, {"multiplicity", e}});
    json j = rep.to_json();
    j["M_t"] = w.Mt.to_string();
    j["pattern"] = pattern;
    j["pattern_matches"] = w.pattern_matches;
    j["self_reciprocal_t"] = w.self_reciprocal_t;
    emit_json(o, j);
    return rep.pair_closure && rep.order_divisibility && rep.degree_bound ? kOk : kHypothesis;
}

int run_monodromy(const Options& o) {
    const SurveyReport rep = monodromy_survey(required_poly(o), o.smax, o.cfg);
    *g_text << "unramified=" << rep.unramified << " ramified=" << rep.ramified << "\n";
    for (const auto& t : rep.cycle_types) {
        *g_text << "type [";
        for (std::size_t i = 0; i < t.size(); ++i) *g_text << (i ? "," : "") << t[i];
        *g_text << "]\n";
    }
    *g_text << "all_even=" << rep.all_even << " consistent_with=" << (rep.all_even ? "A_m" : "S_m") << "\n";
    emit_json(o, rep.to_json());
    return kOk;
}

int run_check_q(const Options& o) {
    const FieldPtr F = field_of(o);
    const QPoly phi = o.phi.empty() ? from_associate(required_poly(o)) : QPoly(F, parse_poly(F, o.phi).coeffs());
    const QPolyT l = build_L_orthogonal(phi);
    const SparsePoly f = artin_schreier_lift(phi);
    std::vector<Elem> mus;
    if (o.mu.empty()) {
        for (Elem mu = 0; mu < F->order(); ++mu) mus.push_back(mu);
    } else {
        mus.push_back(parse_poly(F, o.mu).coeff(0));
    }
    json reports = json::array();
    bool all = true;
    for (Elem mu : mus) {
        const auto r = check_specialized_quadratic_form(l, f, mu, o.cfg.max_ambient_bits, std::uint64_t{1} << 22, o.cfg.rng_seed);
        *g_text << "mu=" << mu << " values_in_Fq=" << r.values_in_fq << " bilinear=" << r.bilinear
                  << " nondegenerate=" << r.nondegenerate << " frobenius_invariant=" << r.frobenius_invariant
                  << " isotropic_count=" << r.isotropic_count << " expected=" << r.expected_isotropic << "\n";
        reports.push_back({{"mu", mu},
                           {"checks",
                            {{"values_in_Fq", r.values_in_fq},
                             {"bilinear", r.bilinear},
                             {"nondegenerate", r.nondegenerate},
                             {"frobenius_invariant", r.frobenius_invariant},
                             {"isotropic_count", r.isotropic_count}}},
                           {"expected_isotropic", r.expected_isotropic}});
        all = all && r.all_pass();
    }
    emit_json(o, {{"reports", reports}});
    return all ? kOk : kHypothesis;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fqgal: q-polynomials, classical groups and Galois certificates over finite fields"};
    app.require_subcommand(1);
    Options o;

    auto field_opts = [&](CLI::App* sub) {
        sub->add_option("--q", o.q, "field order as p^k or a prime power")->capture_default_str();
        sub->add_option("--mod", o.mod, "modulus coefficients for k > 1 (ascending, comma separated)");
        sub->add_option("--json", o.json_path, "write JSON output to PATH ('-' for stdout)");
        sub->add_option("--seed", o.cfg.rng_seed, "random seed")->capture_default_str();
        sub->add_option("--jobs", o.cfg.jobs, "worker threads for enumeration and surveys")->capture_default_str();
        sub->add_option("--max-ambient", o.cfg.max_ambient_bits, "largest ambient extension degree over F_p")
            ->capture_default_str();
    };

    auto* assoc = app.add_subcommand("associate", "q-polynomial of M, or the associate of --phi");
    field_opts(assoc);
    assoc->add_option("--M", o.M, "coefficients c0,c1,...");
    assoc->add_option("--phi", o.phi, "q-coefficients c0,c1,...");

    auto* lift = app.add_subcommand("lift", "solve f^q - f = x^(q^m) Phi");
    field_opts(lift);
    lift->add_option("--M", o.M, "associate of Phi");
    lift->add_option("--phi", o.phi, "q-coefficients of Phi");

    auto* cert = app.add_subcommand("certify", "certificate pipelines");
    cert->require_subcommand(1);
    std::vector<std::pair<CLI::App*, CertKind>> cert_subs;
    for (auto [name, kind] : {std::pair{"sp", CertKind::sp}, std::pair{"o-even", CertKind::o_even},
                              std::pair{"o-odd", CertKind::o_odd}}) {
        auto* sub = cert->add_subcommand(name, std::string("certify the ") + name + " case");
        field_opts(sub);
        sub->add_option("--M", o.M, "coefficients c0,c1,...")->required();
        cert_subs.emplace_back(sub, kind);
    }

    auto* enumerate = app.add_subcommand("enumerate", "admissible M of degree 2m");
    field_opts(enumerate);
    enumerate->add_option("--m", o.m, "half degree")->required();
    enumerate->add_option("--kind", o.kind, "sp or o-even")->capture_default_str();
    enumerate->add_option("--budget", o.cfg.enum_budget, "candidate budget")->capture_default_str();

    auto* counts = app.add_subcommand("counts", "counting formulas");
    counts->require_subcommand(1);
    auto* zn = counts->add_subcommand("zn", "monic square-free f of degree n with f(0) = 0");
    field_opts(zn);
    zn->add_option("--n", o.n, "degree")->required();
    zn->add_option("--mode", o.mode, "formula, enumerate or both")->capture_default_str();

    auto* survey = app.add_subcommand("survey", "Frobenius cycle-type surveys");
    survey->require_subcommand(1);
    auto* weyl = survey->add_subcommand("weyl", "M(x) + t x^m");
    auto* mono = survey->add_subcommand("monodromy", "f(x) + t");
    for (auto* sub : {weyl, mono}) {
        field_opts(sub);
        sub->add_option("--M", o.M, "coefficients c0,c1,...")->required();
        sub->add_option("--smax", o.smax, "largest extension degree s")->capture_default_str();
        sub->add_option("--samples", o.cfg.survey_samples, "samples per level above the exhaustive limit")
            ->capture_default_str();
        sub->add_option("--exhaustive-limit", o.cfg.survey_exhaustive_limit, "largest q^s enumerated exhaustively")
            ->capture_default_str();
    }

    auto* rs = app.add_subcommand("rootspace", "concrete root spaces");
    rs->require_subcommand(1);
    auto* checkq = rs->add_subcommand("check-q", "quadratic forms on the roots of L at t = mu");
    field_opts(checkq);
    checkq->add_option("--M", o.M, "associate of Phi");
    checkq->add_option("--phi", o.phi, "q-coefficients of Phi");
    checkq->add_option("--mu", o.mu, "single specialization (default: all of F_q)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kMalformed;
    }

    try {
        o.cfg.validate();
        if (o.json_path == "-") g_text = &std::cerr;
        if (*assoc) return run_associate(o);
        if (*lift) return run_lift(o);
        for (auto& [sub, kind] : cert_subs)
            if (*sub) return run_certify(o, kind);
        if (*enumerate) return run_enumerate(o);
        if (*zn) return run_counts(o);
        if (*weyl) return run_weyl(o);
        if (*mono) return run_monodromy(o);
        if (*checkq) return run_check_q(o);
    } catch (const HypothesisFailed& e) {
        std::cerr << "hypothesis failed: " << e.check() << " (" << e.what() << ")\n";
        return kHypothesis;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const MalformedInput& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    }
    return kMalformed;
}
