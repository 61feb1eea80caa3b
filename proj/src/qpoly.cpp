// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqgal/qpoly.hpp"

#include <sstream>

#include "fqgal/errors.hpp"
#include "fqgal/intmath.hpp"

namespace fqgal {

namespace {

std::uint64_t qpow(std::uint64_t q, unsigned e) {
    auto v = intmath::checked_pow(q, e);
    if (!v) throw BudgetExceeded("exponent q^" + std::to_string(e) + " overflows 64 bits");
    return *v;
}

std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
    if (a > UINT64_MAX - b) throw BudgetExceeded("exponent overflows 64 bits");
    return a + b;
}

std::string header(const Field& f) { return "q=" + f.describe(); }

}  // namespace

QPoly::QPoly(FieldPtr field, std::vector<Elem> qcoeffs) : field_(std::move(field)), c_(std::move(qcoeffs)) {
    for (Elem c : c_)
        if (!field_->contains(c)) throw MalformedInput("q-polynomial coefficient outside the field");
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string QPoly::to_string() const {
    std::ostringstream os;
    os << header(*field_) << ':';
    if (c_.empty()) os << '0';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    return os.str();
}

QPoly parse_qpoly(const std::string& text) {
    const auto colon = text.find(':');
    if (text.rfind("q=", 0) != 0 || colon == std::string::npos) throw MalformedInput("q-polynomial text must look like q=<p^k>:c0,c1,...");
    std::string head = text.substr(2, colon - 2);
    std::string mod;
    if (auto pos = head.find(" mod="); pos != std::string::npos) {
        mod = head.substr(pos + 5);
        head = head.substr(0, pos);
    }
    FieldPtr field = parse_field(head, mod);
    return from_associate(parse_poly(field, text.substr(colon + 1)));
}

QPolyT::QPolyT(FieldPtr field, std::vector<Poly> qcoeffs) : field_(std::move(field)), c_(std::move(qcoeffs)) {
    for (const auto& c : c_)
        if (!c.field()->same_as(*field_)) throw MalformedInput("q-polynomial coefficient over a different field");
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool operator==(const QPolyT& a, const QPolyT& b) {
    if (!a.field_->same_as(*b.field_) || a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

QPoly QPolyT::specialize(Elem mu) const {
    if (!field_->contains(mu)) throw MalformedInput("specialization value outside F_q");
    std::vector<Elem> c;
    for (const auto& p : c_) c.push_back(p.eval(mu));
    return QPoly(field_, std::move(c));
}

BiPoly QPolyT::to_bipoly() const {
    if (c_.empty()) return BiPoly(field_);
    const std::uint64_t deg = qpow(base_q(), static_cast<unsigned>(c_.size() - 1));
    if (deg > (std::uint64_t{1} << 24)) throw BudgetExceeded("dense form of the q-polynomial is too large");
    std::vector<Poly> x(deg + 1, Poly(field_));
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < c_.size(); ++i, e *= base_q()) x[e] = c_[i];
    return BiPoly(field_, std::move(x));
}

std::string QPolyT::to_string() const {
    std::string s = header(*field_) + ':';
    if (c_.empty()) return s + '0';
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? ";" : "") + c_[i].to_string();
    return s;
}

Poly associate(const QPoly& p) { return Poly(p.field(), p.qcoeffs()); }

QPoly from_associate(const Poly& m) { return QPoly(m.field(), m.coeffs()); }

Elem qeval(const QPoly& p, Elem a, const Embedding& emb) {
    if (!emb.source()->same_as(*p.field())) throw MalformedInput("embedding source does not match the coefficient field");
    const Field& T = *emb.target();
    if (!T.contains(a)) throw MalformedInput("evaluation point outside the target field");
    Elem acc = 0, power = a;
    for (std::size_t i = 0; i < p.qcoeffs().size(); ++i) {
        if (i) power = T.pow(power, p.base_q());
        if (p.coeff(i)) acc = T.add(acc, T.mul(emb(p.coeff(i)), power));
    }
    return acc;
}

PalindromeReport palindrome_class(const QPoly& p) {
    if (p.qdegree() < 0 || p.qdegree() % 2) throw MalformedInput("symmetry class needs an even q-degree");
    if (!p.is_monic()) throw MalformedInput("symmetry class needs a monic q-polynomial");
    if (p.coeff(0) == 0) throw MalformedInput("symmetry class needs c_0 != 0");
    const Field& F = *p.field();
    PalindromeReport r;
    r.m = static_cast<unsigned>(p.qdegree() / 2);
    r.palindromic = r.anti_palindromic = true;
    const auto n = static_cast<std::size_t>(p.qdegree());
    for (std::size_t i = 0; i <= n; ++i) {
        r.palindromic &= p.coeff(i) == p.coeff(n - i);
        r.anti_palindromic &= p.coeff(i) == F.neg(p.coeff(n - i));
    }
    r.middle_zero = p.coeff(r.m) == 0;
    return r;
}

QPolyT build_L_symplectic(const Poly& m) {
    if (!m.is_monic() || m.degree() < 2 || m.degree() % 2) throw MalformedInput("M must be monic of even degree 2m >= 2");
    if (m.coeff(0) == 0) throw MalformedInput("M(0) = 0");
    if (m.coeff(0) != 1) throw HypothesisFailed("M(0)=1", "constant term is " + std::to_string(m.coeff(0)));
    if (!is_self_reciprocal(m)) throw HypothesisFailed("self-reciprocal", "M differs from its reciprocal");
    const auto half = static_cast<std::size_t>(m.degree() / 2);
    std::vector<Poly> c;
    for (Elem a : m.coeffs()) c.push_back(Poly::constant(m.field(), a));
    c[half] += Poly::monomial(m.field(), 1, 1);
    return QPolyT(m.field(), std::move(c));
}

namespace {

unsigned check_orthogonal_shape(const QPoly& phi) {
    auto r = palindrome_class(phi);
    if (!r.anti_palindromic) throw HypothesisFailed("anti-palindromic", "c_i != -c_(2m-i) for some i");
    if (!r.middle_zero) throw HypothesisFailed("c_m=0", "middle coefficient is nonzero");
    return r.m;
}

}  // namespace

QPolyT build_L_orthogonal(const QPoly& phi) {
    const unsigned m = check_orthogonal_shape(phi);
    if (m < 2) throw HypothesisFailed("m>=2", "orthogonal family needs q-degree at least 4");
    const FieldPtr& F = phi.field();
    std::vector<Poly> c;
    for (Elem a : phi.qcoeffs()) c.push_back(Poly::constant(F, a));
    c[m + 1] += Poly::monomial(F, 1, phi.base_q());
    c[m - 1] -= Poly::monomial(F, 1, 1);
    return QPolyT(F, std::move(c));
}

Elem SparsePoly::coeff(std::uint64_t e) const {
    auto it = terms.find(e);
    return it == terms.end() ? 0 : it->second;
}

void SparsePoly::add_term(std::uint64_t e, Elem c) {
    Elem v = field->add(coeff(e), c);
    if (v)
        terms[e] = v;
    else
        terms.erase(e);
}

Elem SparsePoly::eval(Elem a, const Embedding& emb) const {
    const Field& T = *emb.target();
    Elem acc = 0;
    for (const auto& [e, c] : terms) acc = T.add(acc, T.mul(emb(c), T.pow(a, e)));
    return acc;
}

Poly SparsePoly::to_dense(std::uint64_t max_degree) const {
    if (degree() > max_degree) throw BudgetExceeded("sparse polynomial too large for dense form");
    std::vector<Elem> c(terms.empty() ? 0 : degree() + 1, 0);
    for (const auto& [e, v] : terms) c[e] = v;
    return Poly(field, std::move(c));
}

std::string SparsePoly::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        os << (first ? "" : ",") << e << ':' << c;
        first = false;
    }
    return os.str();
}

SparsePoly parse_sparse(const FieldPtr& field, const std::string& text) {
    SparsePoly s{field, {}};
    if (text == "0") return s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw MalformedInput("sparse term must be exp:coeff");
        try {
            const std::uint64_t e = std::stoull(item.substr(0, colon));
            const std::int64_t c = std::stoll(item.substr(colon + 1));
            if (c < 0 || !field->contains(static_cast<Elem>(c))) throw MalformedInput("sparse coefficient outside the field");
            s.add_term(e, static_cast<Elem>(c));
        } catch (const std::logic_error&) {
            throw MalformedInput("bad sparse term '" + item + "'");
        }
    }
    return s;
}

SparsePoly sparse_from(const Poly& f) {
    SparsePoly s{f.field(), {}};
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (f.coeff(i)) s.terms[i] = f.coeff(i);
    return s;
}

SparsePoly artin_schreier_lift(const QPoly& phi) {
    const unsigned m = check_orthogonal_shape(phi);
    const std::uint64_t q = phi.base_q();
    SparsePoly f{phi.field(), {}};
    // Pair (c_i, c_{2m-i}) contributes c_{2m-i} * sum_{j=i}^{m-1} X^(q^j), X = x^(q^(m-i)+1).
    for (unsigned i = 0; i < m; ++i) {
        const Elem c = phi.coeff(2 * m - i);
        if (!c) continue;
        const std::uint64_t x_exp = add_checked(qpow(q, m - i), 1);
        for (unsigned j = i; j < m; ++j) {
            auto e = intmath::checked_mul(qpow(q, j), x_exp);
            if (!e) throw BudgetExceeded("lift exponent overflows 64 bits");
            f.add_term(*e, c);
        }
    }
    return f;
}

bool check_artin_schreier(const QPoly& phi, const SparsePoly& f) {
    const Field& F = *phi.field();
    const std::uint64_t q = phi.base_q();
    SparsePoly diff{phi.field(), {}};
    for (const auto& [e, c] : f.terms) {
        auto eq = intmath::checked_mul(e, q);
        if (!eq) throw BudgetExceeded("exponent overflow while raising to the q-th power");
        diff.add_term(*eq, F.pow(c, q));
        diff.add_term(e, F.neg(c));
    }
    const auto m = static_cast<unsigned>(phi.qdegree() / 2);
    const std::uint64_t shift = qpow(q, m);
    for (std::size_t i = 0; i < phi.qcoeffs().size(); ++i)
        if (phi.coeff(i)) diff.add_term(add_checked(shift, qpow(q, static_cast<unsigned>(i))), F.neg(phi.coeff(i)));
    return diff.terms.empty();
}

WedgeReport verify_wedge_factorization(const QPolyT& l, const SparsePoly& f) {
    const FieldPtr& F = l.field();
    if (l.qdegree() < 2 || l.qdegree() % 2) throw MalformedInput("wedge identity needs q-degree 2m");
    const auto m = static_cast<unsigned>(l.qdegree() / 2);
    const std::uint64_t q = l.base_q();
    const std::uint64_t qm = qpow(q, m), qm1 = qpow(q, m - 1);
    const std::uint64_t wedge_exp = qm + qm1;

    BiPoly lhs = l.to_bipoly().shift_x(qm);
    const Poly fd = f.to_dense();
    const BiPoly t_wedge = BiPoly::t_times(Poly::monomial(F, 1, wedge_exp));
    const BiPoly fb = BiPoly::from_x(fd);

    WedgeReport rep;
    BiPoly rhs = BiPoly::from_x(Poly::constant(F, 1));
    for (Elem lambda = 0; lambda < q; ++lambda) {
        BiPoly factor = t_wedge + fb + BiPoly::from_x(Poly::constant(F, lambda));
        rhs = rhs * factor;
        WedgeFactor wf;
        wf.lambda = lambda;
        if (lambda == 0) {
            const std::uint64_t low = qm + 1;
            rep.x_power_divides = !f.terms.empty() && f.terms.begin()->first >= low;
            if (!rep.x_power_divides) throw HypothesisFailed("x-power-divides", "x^(q^m+1) does not divide f");
            SparsePoly reduced{F, {}};
            for (const auto& [e, c] : f.terms) reduced.terms[e - low] = c;
            const Poly f0 = reduced.to_dense();
            const Poly g0 = Poly::monomial(F, 1, qm1 - 1);
            wf.factor = BiPoly::from_x(f0) + BiPoly::t_times(g0);
            wf.certificate = irreducible_f_plus_tg(f0, g0);
        } else {
            const Poly fl = fd + Poly::constant(F, lambda);
            const Poly g = Poly::monomial(F, 1, wedge_exp);
            wf.factor = factor;
            wf.certificate = irreducible_f_plus_tg(fl, g);
        }
        wf.degree_x = static_cast<std::uint64_t>(wf.factor.degree_x());
        rep.factors.push_back(std::move(wf));
    }
    rep.identity_holds = lhs == rhs;
    if (!rep.identity_holds) throw HypothesisFailed("wedge-identity", "x^(q^m) L differs from the product of the q factors");
    rep.reduced_degree = rep.factors[0].degree_x;
    rep.expected_reduced_degree = (qm1 - 1) * (qm + 1);
    rep.expected_other_degree = qm1 * (qm + 1);
    rep.degrees_match = rep.reduced_degree == rep.expected_reduced_degree;
    for (std::size_t i = 1; i < rep.factors.size(); ++i)
        rep.degrees_match &= rep.factors[i].degree_x == rep.expected_other_degree;
    return rep;
}

}  // namespace fqgal
