// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqgal/certify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "fqgal/errors.hpp"
#include "fqgal/intmath.hpp"
#include "fqgal/rootspace.hpp"

namespace fqgal {

using nlohmann::json;

// ---------------------------------------------------------------- reports

bool CheckReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* CheckReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

void CheckReport::add(std::string name, bool pass, std::string evidence) {
    checks.push_back({std::move(name), pass, std::move(evidence)});
}

const char* cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::sp: return "sp";
        case CertKind::o_even: return "o_even";
        case CertKind::o_odd: return "o_odd";
    }
    return "?";
}

namespace {

template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned count = std::min<std::size_t>(jobs, n);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::string factorization_text(const Factorization& fac) {
    std::ostringstream os;
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        os << (i ? " " : "") << "(" << fac.factors[i].first.to_string() << ")";
        if (fac.factors[i].second > 1) os << "^" << fac.factors[i].second;
    }
    return os.str();
}

unsigned multiplicity_of(const Factorization& fac, const Poly& g) {
    for (const auto& [h, e] : fac.factors)
        if (h == g) return e;
    return 0;
}

Poly linear(const FieldPtr& F, Elem root) { return Poly(F, {F->neg(root), 1}); }

void throw_if_failed(const CheckReport& r) {
    if (const Check* c = r.first_failure()) throw HypothesisFailed(c->name, c->evidence);
}

std::string field_label(const FieldPtr& F) { return "F_" + std::to_string(F->order()); }

std::uint64_t qpow(std::uint64_t q, unsigned e) {
    auto v = intmath::checked_pow(q, e);
    if (!v) throw BudgetExceeded("power q^" + std::to_string(e) + " overflows");
    return *v;
}

json poly_json(const Poly& p) {
    json a = json::array();
    for (Elem c : p.coeffs()) a.push_back(c);
    return a;
}

json field_json(const FieldPtr& F) {
    json j{{"p", F->p()}, {"k", F->k()}};
    if (F->k() > 1) j["mod"] = F->modulus();
    return j;
}

FieldPtr field_from_json(const json& j) {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto k = j.at("k").get<unsigned>();
    std::vector<std::uint32_t> mod;
    if (j.contains("mod")) mod = j.at("mod").get<std::vector<std::uint32_t>>();
    return Field::make(p, k, mod);
}

json irreducibility_json(const IrreducibilityCertificate& c) {
    return json{{"f", sparse_from(c.f).to_string()},
                {"g", sparse_from(c.g).to_string()},
                {"gcd", c.gcd.to_string()},
                {"status", cert_status_name(c.status)}};
}

/// Certificate for L(x)/x = Phi(x)/x + t x^(q^m - 1). The x-polynomial part
/// has constant term c_0, so its gcd with a power of x is 1; for moderate
/// degrees the gcd is also computed densely.
json symplectic_irreducibility(const QPoly& phi, unsigned m, bool& certified) {
    const FieldPtr& F = phi.field();
    const std::uint64_t q = F->order();
    SparsePoly f{F, {}};
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < phi.qcoeffs().size(); ++i, e *= q) f.add_term(e - 1, phi.coeff(i));
    SparsePoly g{F, {}};
    g.add_term(qpow(q, m) - 1, 1);
    json out;
    if (f.degree() <= (std::uint64_t{1} << 16)) {
        auto cert = irreducible_f_plus_tg(f.to_dense(), g.to_dense());
        certified = cert.status == CertStatus::certified;
        out = irreducibility_json(cert);
    } else {
        certified = f.coeff(0) != 0;
        out = json{{"f", f.to_string()},
                   {"g", g.to_string()},
                   {"gcd", certified ? "1" : "0"},
                   {"status", certified ? "certified" : "not_applicable"}};
    }
    return out;
}

json split_json(const SplitWitness& s) {
    return json{{"e1", s.e1},
                {"e2", s.e2},
                {"order", s.order},
                {"bezout",
                 {{"alpha", s.alpha}, {"beta", s.beta}, {"modulus", s.bezout_modulus}, {"p_power", s.p_power}}}};
}

json L_json(const QPolyT& l) {
    json j = json::object();
    for (std::size_t i = 0; i < l.qcoeffs().size(); ++i)
        if (!l.qcoeffs()[i].is_zero()) j[std::to_string(i)] = l.qcoeffs()[i].to_string();
    return j;
}

json qform_json(const QuadraticFormReport& r) {
    return json{{"mu", r.mu},
                {"status", "verified"},
                {"ambient_degree", r.ambient_degree},
                {"checks",
                 {{"values_in_Fq", r.values_in_fq},
                  {"bilinear", r.bilinear},
                  {"nondegenerate", r.nondegenerate},
                  {"frobenius_invariant", r.frobenius_invariant},
                  {"isotropic_count", r.isotropic_count}}},
                {"expected_isotropic", r.expected_isotropic}};
}

const char* kFlag = "hypotheses-verified-computationally; group identification per cited theorem";

}  // namespace

// ---------------------------------------------------------------- admissibility

namespace {

// Shared symplectic conditions; returns false when the degree check fails.
bool symplectic_checks(const Poly& m, CheckReport& r) {
    const bool shape = m.is_monic() && m.degree() >= 2 && m.degree() % 2 == 0;
    r.add("monic-even-degree", shape, "degree " + std::to_string(m.degree()));
    if (!shape) return false;
    const FieldPtr& F = m.field();
    r.add("self-reciprocal", is_self_reciprocal(m), "M* = " + star(m).to_string());
    r.add("M(0)=1", m.coeff(0) == 1, "M(0) = " + std::to_string(m.coeff(0)));
    const Factorization fac = factor(m);
    const std::string text = factorization_text(fac);
    const unsigned mult = multiplicity_of(fac, linear(F, 1));
    r.add("(x-1)^2-exact", mult == 2, "multiplicity " + std::to_string(mult) + " in " + text);
    bool squarefree = true, free_pm = true;
    for (const auto& [g, e] : fac.factors) {
        const bool is_minus = g == linear(F, 1), is_plus = g == linear(F, F->neg(1));
        const unsigned rest = is_minus ? (e >= 2 ? e - 2 : 0) : e;
        if (rest > 1) squarefree = false;
        if ((is_minus || is_plus) && rest > 0) free_pm = false;
    }
    r.add("M1-squarefree", squarefree, text);
    r.add("M1-free-of-x+-1", free_pm, text);
    return true;
}

}  // namespace

CheckReport admissible_symplectic(const Poly& m) {
    CheckReport r;
    symplectic_checks(m, r);
    return r;
}

CheckReport admissible_orthogonal_even(const Poly& m) {
    CheckReport r;
    r.add("char-even", m.field()->p() == 2, "p = " + std::to_string(m.field()->p()));
    if (!symplectic_checks(m, r)) return r;
    const unsigned half = static_cast<unsigned>(m.degree() / 2);
    r.add("m>=2", half >= 2, "m = " + std::to_string(half));
    r.add("c_m=0", m.coeff(half) == 0, "c_m = " + std::to_string(m.coeff(half)));
    return r;
}

CheckReport admissible_orthogonal_odd(const Poly& m) {
    CheckReport r;
    const FieldPtr& F = m.field();
    r.add("char-odd", F->p() != 2, "p = " + std::to_string(F->p()));
    const bool shape = m.is_monic() && m.degree() >= 2 && m.degree() % 2 == 0;
    r.add("monic-even-degree", shape, "degree " + std::to_string(m.degree()));
    if (!shape || F->p() == 2) return r;
    r.add("self-reciprocal", is_self_reciprocal(m), "M* = " + star(m).to_string());
    r.add("M(0)=-1", m.coeff(0) == F->neg(1), "M(0) = " + std::to_string(m.coeff(0)));
    const Factorization fac = factor(m);
    const std::string text = factorization_text(fac);
    const Poly xp1 = linear(F, F->neg(1));
    const unsigned mult = multiplicity_of(fac, xp1);
    r.add("(x+1)-simple", mult == 1, "multiplicity " + std::to_string(mult) + " in " + text);
    bool odd = true;
    std::ostringstream ev;
    for (const auto& [g, e] : fac.factors) {
        if (g == xp1) continue;
        const std::uint64_t ord = order_of_x_mod(g);
        ev << "ord(x mod " << g.to_string() << ")=" << ord << " ";
        if (ord % 2 == 0) odd = false;
    }
    std::string evs = ev.str();
    if (!evs.empty()) evs.pop_back();
    r.add("odd-order-roots", odd, evs);
    return r;
}

// ---------------------------------------------------------------- certificates

json Certificate::to_json() const {
    json j;
    j["kind"] = cert_kind_name(kind);
    j["q"] = field_json(field);
    j["m"] = m;
    j["M"] = poly_json(M);
    const QPoly phi = from_associate(M);
    j["Phi"] = phi.qcoeffs();
    j["L"] = kind == CertKind::sp ? L_json(build_L_symplectic(M)) : L_json(build_L_orthogonal(phi));
    json checks_json = json::array();
    for (const auto& c : checks) checks_json.push_back({{"name", c.name}, {"pass", c.pass}, {"evidence", c.evidence}});
    j["checks"] = checks_json;
    j["witnesses"] = witnesses;
    j["conclusion"] = {{"theorem", theorem}, {"statement", statement}, {"flag", kFlag}};
    return j;
}

Certificate certify_symplectic(const Poly& mpoly, const Config& cfg) {
    CheckReport r = admissible_symplectic(mpoly);
    throw_if_failed(r);
    const FieldPtr& F = mpoly.field();
    const unsigned m = static_cast<unsigned>(mpoly.degree() / 2);
    const QPoly phi = from_associate(mpoly);
    build_L_symplectic(mpoly);  // validates the shape once more

    Certificate cert;
    cert.kind = CertKind::sp;
    cert.field = F;
    cert.m = m;
    cert.M = mpoly;

    bool irreducible = false;
    json irr = symplectic_irreducibility(phi, m, irreducible);
    r.add("irreducible-L/x", irreducible, "gcd(Phi/x, x^(q^m-1)) = " + irr["gcd"].get<std::string>());

    const Matrix c = companion(mpoly);
    const auto cyc = is_cyclic(c, std::uint64_t{1} << 16, cfg.rng_seed);
    r.add("cyclic-frobenius-model", cyc.cyclic && minimal_polynomial(c) == mpoly,
          "minimal polynomial of the companion matrix is M");

    const SplitWitness sw = su_split(c);
    r.add("sigma1-transvection", is_transvection_matrix(sw.sigma1),
          "C^" + std::to_string(sw.e1) + " has rank(C^e1 - I) = 1");
    const BilinearForm b = invariant_alternating_form(c, std::uint64_t{1} << 16, cfg.rng_seed);
    r.add("invariant-alternating-form", b.is_alternating() && b.is_nondegenerate(), b.gram.to_string());
    r.add("C-isometry", b.is_isometry(c), "C^T B C = B");
    r.add("sigma1-isometry", b.is_isometry(sw.sigma1), "sigma1^T B sigma1 = B");
    throw_if_failed(r);

    std::vector<unsigned> degrees;
    for (const auto& [g, e] : factor(mpoly).factors)
        for (unsigned i = 0; i < e; ++i) degrees.push_back(static_cast<unsigned>(g.degree()));
    std::sort(degrees.begin(), degrees.end());

    cert.checks = r.checks;
    cert.witnesses = {{"split", split_json(sw)},
                      {"transvection_exponent", sw.e1},
                      {"gram", b.gram.to_string()},
                      {"lift_f", nullptr},
                      {"factor_degrees", degrees},
                      {"irreducibility", json::array({irr})}};
    cert.theorem = "symplectic-transvection-criterion";
    const std::string q = std::to_string(F->order());
    cert.statement = "Galois group of L(x)/x over " + field_label(F) + "(t) is Sp(" + std::to_string(2 * m) + "," + q + ")";
    if (m == 1) cert.statement += " = SL(2," + q + ")";
    return cert;
}

namespace {

// Lift, wedge and specialized quadratic forms shared by both orthogonal
// pipelines. `exponent` is the power of the Frobenius that should act as a
// transvection (even q) or reflection (odd q) on the roots at t = 0.
void orthogonal_stage(Certificate& cert, CheckReport& r, std::uint64_t exponent, const Config& cfg) {
    const FieldPtr& F = cert.field;
    const bool even = F->p() == 2;
    const QPoly phi = from_associate(cert.M);
    const SparsePoly f = artin_schreier_lift(phi);
    r.add("artin-schreier-identity", check_artin_schreier(phi, f), "f^q - f = x^(q^m) Phi");
    const QPolyT l = build_L_orthogonal(phi);
    const WedgeReport wedge = verify_wedge_factorization(l, f);
    r.add("wedge-identity", wedge.identity_holds && wedge.x_power_divides, "x^(q^m) L = prod (t x^(q^m+q^(m-1)) + f + lambda)");
    r.add("wedge-degrees", wedge.degrees_match,
          "expected " + std::to_string(wedge.expected_reduced_degree) + " and " +
              std::to_string(wedge.expected_other_degree));
    json irr = json::array();
    std::vector<std::uint64_t> degrees;
    bool all_certified = true;
    for (const auto& fac : wedge.factors) {
        irr.push_back(irreducibility_json(fac.certificate));
        degrees.push_back(fac.degree_x);
        if (fac.certificate.status != CertStatus::certified) all_certified = false;
    }
    std::sort(degrees.begin(), degrees.end());
    r.add("wedge-factors-irreducible", all_certified, std::to_string(wedge.factors.size()) + " factors");

    json forms = json::array();
    std::optional<QuadraticFormReport> at_zero;
    bool forms_ok = true;
    for (Elem mu = 0; mu < F->order(); ++mu) {
        try {
            auto rep = check_specialized_quadratic_form(l, f, mu, cfg.max_ambient_bits, std::uint64_t{1} << 22, cfg.rng_seed);
            forms.push_back(qform_json(rep));
            if (!rep.all_pass()) forms_ok = false;
            if (mu == 0) at_zero = std::move(rep);
        } catch (const BudgetExceeded& e) {
            forms.push_back({{"mu", mu}, {"status", "skipped-budget"}, {"reason", e.what()}});
        }
    }
    r.add("quadratic-forms", forms_ok, "all computed specializations give minus-type forms");

    json gram = nullptr, frob = nullptr;
    if (at_zero && at_zero->form && at_zero->frobenius) {
        const Matrix s = at_zero->frobenius->pow(exponent);
        const bool shape = even ? is_transvection_matrix(s) : is_reflection_matrix(s);
        r.add(even ? "sigma1-orthogonal-transvection-on-roots" : "reflection-on-roots",
              shape && at_zero->form->is_isometry(s) && at_zero->form->is_isometry(*at_zero->frobenius),
              "Frobenius^" + std::to_string(exponent) + " preserves Q_0");
        gram = at_zero->form->upper.to_string();
        frob = at_zero->frobenius->to_string();
    }

    cert.witnesses["lift_f"] = f.to_string();
    cert.witnesses["factor_degrees"] = degrees;
    cert.witnesses["irreducibility"] = irr;
    cert.witnesses["quadratic_forms"] = forms;
    cert.witnesses["gram"] = gram;
    cert.witnesses["frobenius_on_roots"] = frob;
}

}  // namespace

Certificate certify_orthogonal_even(const Poly& mpoly, const Config& cfg) {
    CheckReport r = admissible_orthogonal_even(mpoly);
    throw_if_failed(r);
    const FieldPtr& F = mpoly.field();
    Certificate cert;
    cert.kind = CertKind::o_even;
    cert.field = F;
    cert.m = static_cast<unsigned>(mpoly.degree() / 2);
    cert.M = mpoly;

    const Matrix c = companion(mpoly);
    const SplitWitness sw = su_split(c);
    r.add("sigma1-transvection", is_transvection_matrix(sw.sigma1), "C^" + std::to_string(sw.e1));
    cert.witnesses = {{"split", split_json(sw)}, {"transvection_exponent", sw.e1}};
    orthogonal_stage(cert, r, sw.e1, cfg);
    throw_if_failed(r);
    cert.checks = r.checks;
    cert.theorem = "orthogonal-transvection-criterion";
    cert.statement = "Galois group of L(x)/x over " + field_label(F) + "(t) is O-(" + std::to_string(2 * cert.m) + "," +
                     std::to_string(F->order()) + ")";
    return cert;
}

Certificate certify_orthogonal_odd(const Poly& mpoly, const Config& cfg) {
    CheckReport r = admissible_orthogonal_odd(mpoly);
    throw_if_failed(r);
    const FieldPtr& F = mpoly.field();
    Certificate cert;
    cert.kind = CertKind::o_odd;
    cert.field = F;
    cert.m = static_cast<unsigned>(mpoly.degree() / 2);
    cert.M = mpoly;

    const Matrix c = companion(mpoly);
    const std::uint64_t order = element_order(c);
    const std::uint64_t e = order / 2;
    r.add("reflection-exponent-odd", order % 2 == 0 && e % 2 == 1,
          "order " + std::to_string(order) + ", exponent " + std::to_string(e));
    const Matrix s = c.pow(e);
    r.add("reflection-witness", is_reflection_matrix(s), "C^" + std::to_string(e) + " has order 2, det -1, fixes a hyperplane");
    const SplitWitness sw = su_split(c);
    cert.witnesses = {{"split", split_json(sw)}, {"reflection_exponent", e}};
    orthogonal_stage(cert, r, e, cfg);
    throw_if_failed(r);
    cert.checks = r.checks;
    cert.theorem = "orthogonal-reflection-criterion";
    cert.statement = "Galois group of L(x)/x over " + field_label(F) + "(t) is O-(" + std::to_string(2 * cert.m) + "," +
                     std::to_string(F->order()) + ")";
    return cert;
}

Certificate certify(CertKind kind, const Poly& m, const Config& cfg) {
    switch (kind) {
        case CertKind::sp: return certify_symplectic(m, cfg);
        case CertKind::o_even: return certify_orthogonal_even(m, cfg);
        case CertKind::o_odd: return certify_orthogonal_odd(m, cfg);
    }
    throw MalformedInput("unknown certificate kind");
}

// ---------------------------------------------------------------- verifier

namespace {

bool is_p_power(std::uint64_t n, std::uint64_t p) {
    while (n > 1 && n % p == 0) n /= p;
    return n == 1;
}

void verify_irreducibility(const FieldPtr& F, const json& entries, CheckReport& r) {
    bool ok = true;
    for (const auto& e : entries) {
        const SparsePoly f = parse_sparse(F, e.at("f").get<std::string>());
        const SparsePoly g = parse_sparse(F, e.at("g").get<std::string>());
        const std::string stored = e.at("gcd").get<std::string>();
        std::string computed;
        if (f.degree() <= (std::uint64_t{1} << 20) && g.degree() <= (std::uint64_t{1} << 20)) {
            computed = gcd(f.to_dense(), g.to_dense()).to_string();
        } else if (g.terms.size() == 1 && g.terms.begin()->second != 0) {
            // gcd with a monomial x^d is x^min(d, v(f)).
            const std::uint64_t v = f.terms.empty() ? g.degree() : f.terms.begin()->first;
            computed = Poly::monomial(F, 1, std::min(v, g.degree())).to_string();
        } else {
            computed = "?";
        }
        const bool certified = e.at("status").get<std::string>() == "certified";
        if (computed != stored || certified != (computed == "1")) ok = false;
    }
    r.add("irreducibility-gcds", ok, std::to_string(entries.size()) + " certificates");
}

}  // namespace

CheckReport verify_certificate(const json& j, const Config& cfg) {
    CheckReport r;
    const std::string kind_text = j.at("kind").get<std::string>();
    CertKind kind;
    if (kind_text == "sp") kind = CertKind::sp;
    else if (kind_text == "o_even") kind = CertKind::o_even;
    else if (kind_text == "o_odd") kind = CertKind::o_odd;
    else throw MalformedInput("unknown certificate kind " + kind_text);
    const FieldPtr F = field_from_json(j.at("q"));
    const Poly mpoly(F, j.at("M").get<std::vector<Elem>>());
    const unsigned m = j.at("m").get<unsigned>();
    r.add("degree", mpoly.degree() == static_cast<int>(2 * m));

    const CheckReport adm = kind == CertKind::sp       ? admissible_symplectic(mpoly)
                            : kind == CertKind::o_even ? admissible_orthogonal_even(mpoly)
                                                       : admissible_orthogonal_odd(mpoly);
    r.add("admissibility", adm.all_pass());
    bool recorded = true;
    for (const auto& c : j.at("checks")) recorded = recorded && c.at("pass").get<bool>();
    r.add("recorded-checks", recorded);
    r.add("Phi", j.at("Phi").get<std::vector<Elem>>() == from_associate(mpoly).qcoeffs());

    const json& w = j.at("witnesses");
    const Matrix c = companion(mpoly);
    const json& split = w.at("split");
    const auto e1 = split.at("e1").get<std::uint64_t>(), e2 = split.at("e2").get<std::uint64_t>();
    const Matrix s1 = c.pow(e1), s2 = c.pow(e2);
    r.add("split-product", s1 * s2 == c && s2 * s1 == c);
    r.add("split-orders", is_p_power(element_order(s1), F->p()) && intmath::gcd(element_order(s2), F->p()) == 1);
    const json& bz = split.at("bezout");
    const intmath::i128 lhs = intmath::i128(bz.at("alpha").get<std::int64_t>()) * bz.at("p_power").get<std::uint64_t>() +
                              intmath::i128(bz.at("beta").get<std::int64_t>()) * bz.at("modulus").get<std::uint64_t>();
    r.add("bezout", lhs == 1);

    if (kind == CertKind::o_odd) {
        const auto e = w.at("reflection_exponent").get<std::uint64_t>();
        r.add("reflection-exponent", e % 2 == 1 && is_reflection_matrix(c.pow(e)));
    } else {
        r.add("transvection-exponent", is_transvection_matrix(c.pow(w.at("transvection_exponent").get<std::uint64_t>())));
    }

    if (kind == CertKind::sp) {
        const BilinearForm b{parse_matrix(F, w.at("gram").get<std::string>()), FormKind::alternating};
        r.add("gram", b.is_alternating() && b.is_nondegenerate() && b.is_isometry(c) && b.is_isometry(s1));
    } else {
        const QPoly phi = from_associate(mpoly);
        const SparsePoly f = parse_sparse(F, w.at("lift_f").get<std::string>());
        r.add("lift", check_artin_schreier(phi, f));
        const QPolyT l = build_L_orthogonal(phi);
        const WedgeReport wedge = verify_wedge_factorization(l, f);
        std::vector<std::uint64_t> degrees;
        for (const auto& fac : wedge.factors) degrees.push_back(fac.degree_x);
        std::sort(degrees.begin(), degrees.end());
        r.add("factor-degrees", wedge.identity_holds && degrees == w.at("factor_degrees").get<std::vector<std::uint64_t>>());
        bool forms = true;
        for (const auto& entry : w.at("quadratic_forms")) {
            if (entry.at("status").get<std::string>() != "verified") continue;
            const auto rep = check_specialized_quadratic_form(l, f, entry.at("mu").get<Elem>(), cfg.max_ambient_bits,
                                                              std::uint64_t{1} << 22, cfg.rng_seed);
            forms = forms && rep.all_pass() &&
                    rep.isotropic_count == entry.at("checks").at("isotropic_count").get<std::uint64_t>();
        }
        r.add("quadratic-forms", forms);
    }
    verify_irreducibility(F, w.at("irreducibility"), r);
    const bool conclusion = j.contains("conclusion") && !j.at("conclusion").at("theorem").get<std::string>().empty();
    r.add("conclusion-present", conclusion);
    return r;
}

// ---------------------------------------------------------------- enumeration

std::uint64_t admissible_count_formula(std::uint64_t q, unsigned m) {
    if (m == 0) return 0;
    const std::uint64_t qm1 = qpow(q, m - 1);
    const std::uint64_t base = m % 2 == 1 ? qm1 - 1 : qm1 + 1;
    return base * (q - 1) / (q + 1);
}

EnumerationReport enumerate_admissible(const FieldPtr& F, unsigned m, CertKind kind, const Config& cfg) {
    if (m == 0) throw MalformedInput("m must be positive");
    if (kind == CertKind::o_odd) throw MalformedInput("enumeration supports sp and o_even");
    const std::uint64_t q = F->order();
    auto total = intmath::checked_pow(q, m);
    if (!total || *total > cfg.enum_budget)
        throw BudgetExceeded("enumeration of q^m candidates exceeds the budget " + std::to_string(cfg.enum_budget));
    const bool even = F->p() == 2;
    const Elem two = F->from_int(2), minus_two = F->from_int(-2);
    // Even q: the constant coefficient is zero, so step through indices by q.
    const std::uint64_t count = even ? *total / q : *total;
    std::vector<std::optional<std::pair<Poly, Poly>>> slots(count);
    parallel_for(count, cfg.jobs, [&](std::size_t i) {
        const Poly f = monic_from_index(F, m, even ? i * q : i);
        if (even) {
            if (!is_squarefree(f)) return;
        } else if (f.eval(two) != 0 || f.eval(minus_two) == 0) {
            return;
        }
        const Poly M = cap_lift(f);
        const CheckReport adm = kind == CertKind::sp ? admissible_symplectic(M) : admissible_orthogonal_even(M);
        if (adm.all_pass()) slots[i] = std::make_pair(f, M);
    });
    EnumerationReport rep;
    rep.q = q;
    rep.m = m;
    rep.kind = kind;
    for (auto& s : slots)
        if (s) {
            rep.f.push_back(s->first);
            rep.M.push_back(s->second);
        }
    rep.count = rep.M.size();
    rep.all_admissible = true;
    if (even && kind == CertKind::sp) {
        rep.formula = admissible_count_formula(q, m);
        rep.formula_applies = m >= 2;
    }
    return rep;
}

// ---------------------------------------------------------------- Weyl structure

WeylStructure weyl_structure(const Poly& mpoly) {
    throw_if_failed(admissible_symplectic(mpoly));
    const FieldPtr& F = mpoly.field();
    WeylStructure w;
    w.M = mpoly;
    w.m = static_cast<unsigned>(mpoly.degree() / 2);
    const Poly xm = Poly::monomial(F, 1, w.m);
    w.Mt = BiPoly::from_x(mpoly) + BiPoly::t_times(xm);
    w.irreducibility = irreducible_f_plus_tg(mpoly, xm);
    bool sym = true;
    const int d = w.Mt.degree_x();
    for (int i = 0; i <= d; ++i)
        if (!(w.Mt.x_coeff(i) == w.Mt.x_coeff(d - i))) sym = false;
    w.self_reciprocal_t = sym;
    const Factorization fac = factor(mpoly);
    w.pattern = fac.factors;
    unsigned ramified = 0;
    bool ok = true;
    for (const auto& [g, e] : fac.factors) {
        if (e > 1) {
            ++ramified;
            if (!(g == linear(F, 1)) || e != 2) ok = false;
        }
    }
    w.pattern_matches = ok && ramified == 1;
    return w;
}

// ---------------------------------------------------------------- surveys

std::uint64_t wreath_exponent(unsigned m) {
    std::uint64_t l = 1;
    for (unsigned i = 2; i <= m; ++i) l = std::lcm(l, static_cast<std::uint64_t>(i));
    return 2 * l;
}

namespace {

SpecializationRecord survey_one(const Poly& base_big, bool weyl, unsigned m, std::uint64_t exponent, unsigned s,
                                Elem mu) {
    const FieldPtr& E = base_big.field();
    SpecializationRecord rec;
    rec.s = s;
    rec.mu = mu;
    const Poly mu_poly = base_big + Poly::monomial(E, mu, weyl ? m : 0);
    const Poly d = mu_poly.derivative();
    rec.ramified = d.is_zero() || gcd(mu_poly, d).degree() > 0;
    if (rec.ramified) return rec;
    const Factorization fac = factor(mu_poly);
    std::uint64_t l = 1;
    unsigned transpositions = 0;
    for (const auto& [g, e] : fac.factors)
        for (unsigned i = 0; i < e; ++i) {
            const auto deg = static_cast<unsigned>(g.degree());
            rec.degrees.push_back(deg);
            l = std::lcm(l, static_cast<std::uint64_t>(deg));
            transpositions += deg - 1;
        }
    std::sort(rec.degrees.rbegin(), rec.degrees.rend());
    rec.lcm_divides = exponent % l == 0;
    rec.degree_bound = rec.degrees.empty() || rec.degrees.front() <= (weyl ? 2 * m : m);
    rec.even = transpositions % 2 == 0;
    if (weyl)
        for (const auto& [g, e] : fac.factors) {
            const Poly gs = star(g);
            if (multiplicity_of(fac, gs) != e) rec.pair_closed = false;
        }
    return rec;
}

}  // namespace

SurveyReport survey_levels(const Poly& base, bool weyl, const std::vector<unsigned>& levels, const Config& cfg) {
    const FieldPtr& F = base.field();
    SurveyReport rep;
    rep.m = weyl ? static_cast<unsigned>(base.degree() / 2) : static_cast<unsigned>(base.degree());
    rep.exponent_bound = weyl ? wreath_exponent(rep.m) : wreath_exponent(rep.m) / 2;
    rep.description = weyl ? "M(x) + t x^" + std::to_string(rep.m) + ", M = " + base.to_string()
                           : "f(x) + t, f = " + base.to_string();
    for (unsigned s : levels) {
        if (s == 0 || static_cast<std::uint64_t>(s) * F->k() > 62) throw BudgetExceeded("extension degree out of range");
        FieldPtr E = Field::make(F->p(), F->k() * s);
        const Embedding emb = embed(F, E);
        std::vector<Elem> big;
        for (Elem c : base.coeffs()) big.push_back(emb(c));
        const Poly base_big(E, big);
        std::vector<Elem> mus;
        if (E->order() <= cfg.survey_exhaustive_limit) {
            mus.resize(E->order());
            std::iota(mus.begin(), mus.end(), Elem{0});
        } else {
            rep.sampled_levels.push_back(s);
            std::mt19937_64 rng(cfg.rng_seed ^ (0x9E3779B97F4A7C15ULL * s));
            std::uniform_int_distribution<std::uint64_t> dist(0, E->order() - 1);
            for (std::uint64_t i = 0; i < cfg.survey_samples; ++i) mus.push_back(dist(rng));
        }
        std::vector<SpecializationRecord> recs(mus.size());
        parallel_for(mus.size(), cfg.jobs,
                     [&](std::size_t i) { recs[i] = survey_one(base_big, weyl, rep.m, rep.exponent_bound, s, mus[i]); });
        for (auto& rec : recs) {
            if (rec.ramified) {
                ++rep.ramified;
            } else {
                ++rep.unramified;
                rep.cycle_types.insert(rec.degrees);
                rep.pair_closure = rep.pair_closure && rec.pair_closed;
                rep.order_divisibility = rep.order_divisibility && rec.lcm_divides;
                rep.degree_bound = rep.degree_bound && rec.degree_bound;
                rep.all_even = rep.all_even && rec.even;
            }
            rep.records.push_back(std::move(rec));
        }
    }
    return rep;
}

SurveyReport cycle_type_survey(const Poly& mpoly, unsigned s_max, const Config& cfg) {
    weyl_structure(mpoly);
    std::vector<unsigned> levels(s_max);
    std::iota(levels.begin(), levels.end(), 1u);
    return survey_levels(mpoly, true, levels, cfg);
}

SurveyReport monodromy_survey(const Poly& f, unsigned s_max, const Config& cfg) {
    if (!f.is_monic() || f.degree() < 1) throw MalformedInput("monodromy survey needs a monic polynomial");
    if (!is_squarefree(f)) throw HypothesisFailed("squarefree", "f = " + f.to_string() + " has a repeated factor");
    if (f.field()->p() == 2 && f.coeff(0) != 0) throw HypothesisFailed("f(0)=0", "f = " + f.to_string());
    std::vector<unsigned> levels(s_max);
    std::iota(levels.begin(), levels.end(), 1u);
    return survey_levels(f, false, levels, cfg);
}

json SurveyReport::to_json() const {
    json types = json::array();
    for (const auto& t : cycle_types) types.push_back(t);
    json recs = json::array();
    for (const auto& r : records) {
        json e{{"s", r.s}, {"mu", r.mu}, {"ramified", r.ramified}};
        if (!r.ramified) e["degrees"] = r.degrees;
        recs.push_back(e);
    }
    return json{{"description", description},
                {"m", m},
                {"exponent_bound", exponent_bound},
                {"unramified", unramified},
                {"ramified", ramified},
                {"cycle_types", types},
                {"sampled_levels", sampled_levels},
                {"pair_closure", pair_closure},
                {"order_divisibility", order_divisibility},
                {"degree_bound", degree_bound},
                {"all_even", all_even},
                {"records", recs}};
}

}  // namespace fqgal
