// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqgal/bivar.hpp"

#include <algorithm>
#include <sstream>

#include "fqgal/errors.hpp"

namespace fqgal {

BiPoly::BiPoly(FieldPtr field, std::vector<Poly> x_coeffs) : field_(std::move(field)), c_(std::move(x_coeffs)) {
    for (const auto& c : c_)
        if (!c.field()->same_as(*field_)) throw MalformedInput("bivariate coefficient over a different field");
    trim();
}

BiPoly BiPoly::from_x(const Poly& f) {
    std::vector<Poly> c;
    for (Elem a : f.coeffs()) c.push_back(Poly::constant(f.field(), a));
    return BiPoly(f.field(), std::move(c));
}

BiPoly BiPoly::t_times(const Poly& g) {
    std::vector<Poly> c;
    for (Elem a : g.coeffs()) c.push_back(Poly::monomial(g.field(), a, 1));
    return BiPoly(g.field(), std::move(c));
}

BiPoly BiPoly::term(const Poly& c, std::size_t i) {
    std::vector<Poly> v(i + 1, Poly(c.field()));
    v[i] = c;
    return BiPoly(c.field(), std::move(v));
}

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::degree_t() const {
    int d = -1;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
}

std::vector<Poly> BiPoly::t_coeffs() const {
    const int dt = degree_t();
    std::vector<std::vector<Elem>> rows(static_cast<std::size_t>(std::max(dt + 1, 0)),
                                        std::vector<Elem>(c_.size(), 0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < c_[i].coeffs().size(); ++j) rows[j][i] = c_[i].coeff(j);
    std::vector<Poly> out;
    for (auto& r : rows) out.emplace_back(field_, std::move(r));
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Poly(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Poly(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly(a.field_);
    std::vector<Poly> out(a.c_.size() + b.c_.size() - 1, Poly(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) out[i + j] += a.c_[i] * b.c_[j];
    }
    return BiPoly(a.field_, std::move(out));
}

bool operator==(const BiPoly& a, const BiPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

BiPoly BiPoly::shift_x(std::size_t n) const {
    if (is_zero()) return *this;
    std::vector<Poly> v(n, Poly(field_));
    v.insert(v.end(), c_.begin(), c_.end());
    return BiPoly(field_, std::move(v));
}

std::string BiPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ';';
        s += c_[i].to_string();
    }
    return s;
}

BiPoly parse_bipoly(const FieldPtr& field, const std::string& text) {
    std::vector<Poly> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) c.push_back(parse_poly(field, item));
    if (c.empty()) throw MalformedInput("empty bivariate polynomial");
    return BiPoly(field, std::move(c));
}

namespace {

Elem eval_in_target(const Poly& c, Elem mu, const Embedding& emb) {
    const Field& T = *emb.target();
    Elem acc = 0;
    for (std::size_t i = c.coeffs().size(); i-- > 0;) acc = T.add(T.mul(acc, mu), emb(c.coeff(i)));
    return acc;
}

}  // namespace

Poly specialize(const BiPoly& p, Elem mu, const Embedding& emb) {
    if (!emb.source()->same_as(*p.field())) throw MalformedInput("embedding source does not match the coefficient field");
    if (!emb.target()->contains(mu)) throw MalformedInput("specialization value outside the target field");
    std::vector<Elem> out;
    for (const auto& c : p.x_coeffs()) out.push_back(eval_in_target(c, mu, emb));
    return Poly(emb.target(), std::move(out));
}

Poly specialize(const BiPoly& p, Elem mu) { return specialize(p, mu, embed(p.field(), p.field())); }

bool leading_vanishes(const BiPoly& p, Elem mu, const Embedding& emb) {
    return p.is_zero() || eval_in_target(p.x_coeffs().back(), mu, emb) == 0;
}

unsigned factor_count_bound(const BiPoly& p) {
    if (!p.is_monic_x()) throw MalformedInput("factor count bound needs a polynomial monic in x");
    Poly g(p.field());
    for (const auto& pj : p.t_coeffs()) g = gcd(g, pj);
    if (!g.is_one()) throw HypothesisFailed("relatively-prime", "t-coefficients share the factor " + g.to_string());
    return static_cast<unsigned>(std::max(p.degree_t(), 0));
}

const char* cert_status_name(CertStatus s) {
    switch (s) {
        case CertStatus::certified: return "certified";
        case CertStatus::not_applicable: return "not_applicable";
        case CertStatus::malformed: return "malformed";
    }
    return "?";
}

IrreducibilityCertificate irreducible_f_plus_tg(const Poly& f, const Poly& g) {
    IrreducibilityCertificate cert{CertStatus::malformed, f, g, Poly(f.field()), ""};
    if (f.is_zero() || g.is_zero()) {
        cert.reason = "f and g must be nonzero";
        return cert;
    }
    if (!f.field()->same_as(*g.field())) {
        cert.reason = "f and g over different fields";
        return cert;
    }
    cert.gcd = gcd(f, g);
    if (std::max(f.degree(), g.degree()) < 1) {
        cert.status = CertStatus::not_applicable;
        cert.reason = "f + t g is constant in x";
    } else if (!cert.gcd.is_one()) {
        cert.status = CertStatus::not_applicable;
        cert.reason = "gcd(f, g) != 1";
    } else {
        cert.status = CertStatus::certified;
        cert.reason = "gcd(f, g) = 1";
    }
    return cert;
}

}  // namespace fqgal
