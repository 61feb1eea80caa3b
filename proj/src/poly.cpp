// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqgal/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fqgal/errors.hpp"
#include "fqgal/intmath.hpp"

namespace fqgal {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto v : c_)
        if (!field_->contains(v)) throw MalformedInput("coefficient " + std::to_string(v) + " outside the field");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), std::vector<Elem>{c}); }

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::from_ints(FieldPtr field, const std::vector<std::int64_t>& coeffs) {
    std::vector<Elem> v;
    v.reserve(coeffs.size());
    for (auto c : coeffs) v.push_back(field->from_int(c));
    return Poly(std::move(field), std::move(v));
}

Elem Poly::eval(Elem a) const {
    Elem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, a), c_[i]);
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Elem> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i % field_->p())));
    return Poly(field_, std::move(d));
}

Poly Poly::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    return scale(field_->inv(c_.back()));
}

Poly Poly::scale(Elem s) const {
    if (s == 0) return Poly(field_);
    Poly r(*this);
    for (auto& v : r.c_) v = field_->mul(v, s);
    return r;
}

Poly Poly::shift(std::size_t n) const {
    if (c_.empty()) return *this;
    Poly r(field_);
    r.c_.assign(n, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::pow(std::uint64_t e) const {
    Poly r = constant(field_, 1), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& v : r.c_) v = field_->neg(v);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly(a.field_);
    const Field& F = *a.field_;
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, 0);
    if (F.is_prime_field()) {
        const std::uint64_t p = F.p();
        if (p < (1u << 16)) {
            // Accumulate without reduction while the sum cannot overflow.
            std::vector<std::uint64_t> acc(r.size(), 0);
            const std::uint64_t limit = ~std::uint64_t{0} / ((p - 1) * (p - 1) + 1);
            std::size_t pending = 0;
            for (std::size_t i = 0; i < a.c_.size(); ++i) {
                if (!a.c_[i]) continue;
                for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i] * b.c_[j];
                if (++pending == limit) {
                    for (auto& v : acc) v %= p;
                    pending = 0;
                }
            }
            for (std::size_t i = 0; i < r.size(); ++i) r[i] = acc[i] % p;
            return Poly(a.field_, std::move(r));
        }
    }
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.field_, std::move(r));
}

bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_ && a.field_->same_as(*b.field_); }

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& F = *a.field();
    const int db = b.degree();
    if (a.degree() < db) return {Poly(a.field()), a};
    std::vector<Elem> rem = a.coeffs();
    std::vector<Elem> quot(rem.size() - db, 0);
    const Elem lead_inv = F.inv(b.lead());
    const auto& bc = b.coeffs();
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        Elem c = rem[i];
        if (!c) continue;
        c = F.mul(c, lead_inv);
        quot[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, bc[j]));
    }
    rem.resize(db);
    return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
    Poly r = Poly::constant(base.field(), 1) % mod;
    base = base % mod;
    while (e) {
        if (e & 1) r = (r * base) % mod;
        e >>= 1;
        if (e) base = (base * base) % mod;
    }
    return r;
}

bool canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t i = ca.size(); i-- > 0;)
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    return false;
}

Poly parse_poly(const FieldPtr& field, const std::string& text) {
    std::vector<Elem> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw MalformedInput("empty coefficient in '" + text + "'");
        item = item.substr(b, e - b + 1);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw MalformedInput("bad coefficient '" + item + "'");
        }
        if (used != item.size()) throw MalformedInput("bad coefficient '" + item + "'");
        if (v < 0) {
            out.push_back(field->from_int(v));
        } else {
            if (static_cast<std::uint64_t>(v) >= field->order())
                throw MalformedInput("coefficient " + item + " outside F_" + std::to_string(field->order()));
            out.push_back(static_cast<Elem>(v));
        }
    }
    if (out.empty()) throw MalformedInput("empty polynomial");
    return Poly(field, std::move(out));
}

Poly Factorization::product(const FieldPtr& field) const {
    Poly r = Poly::constant(field, unit);
    for (const auto& [g, e] : factors) r = r * g.pow(e);
    return r;
}

namespace {

// Inverse Frobenius on coefficients: a^(1/p) = a^(p^(k-1)).
Poly pth_root(const Poly& f) {
    const Field& F = *f.field();
    const std::uint32_t p = F.p();
    std::vector<Elem> out(f.degree() / p + 1, 0);
    std::uint64_t inv_exp = *intmath::checked_pow(p, F.k() - 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.pow(f.coeff(i * p), inv_exp);
    return Poly(f.field(), std::move(out));
}

void squarefree_parts(const Poly& f, unsigned scale, std::vector<std::pair<Poly, unsigned>>& out) {
    if (f.degree() < 1) return;
    Poly c = gcd(f, f.derivative());
    Poly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i * scale);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) squarefree_parts(pth_root(c), scale * f.field()->p(), out);
}

Poly x_power_q(const Poly& h, const Poly& mod) { return powmod(h, h.field()->order(), mod); }

Poly random_below(const FieldPtr& field, int degree, std::mt19937_64& rng) {
    std::vector<Elem> v(degree, 0);
    for (auto& c : v) c = rng() % field->order();
    return Poly(field, std::move(v));
}

void equal_degree_split(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const FieldPtr& field = g.field();
    const std::uint64_t q = field->order();
    for (;;) {
        Poly a = random_below(field, g.degree(), rng);
        if (a.degree() < 1) continue;
        Poly b(field);
        if (q % 2 == 1) {
            // a^((q^d - 1)/2) = (prod_{i<d} a^(q^i))^((q-1)/2)
            Poly cur = a, norm = a;
            for (int i = 1; i < d; ++i) {
                cur = powmod(cur, q, g);
                norm = (norm * cur) % g;
            }
            b = powmod(norm, (q - 1) / 2, g) - Poly::constant(field, 1);
        } else {
            // Absolute trace to F_2: sum of a^(2^i), i < k*d.
            const unsigned steps = field->k() * static_cast<unsigned>(d);
            Poly cur = a, tr = a;
            for (unsigned i = 1; i < steps; ++i) {
                cur = (cur * cur) % g;
                tr += cur;
            }
            b = tr;
        }
        Poly h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split(g / h, d, rng, out);
            return;
        }
    }
}

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, int>> out;
    const FieldPtr& field = f.field();
    const Poly x = Poly::x(field);
    Poly h = x % f;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = x_power_q(h, f);
        Poly g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

}  // namespace

Factorization factor(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw MalformedInput("cannot factor the zero polynomial");
    Factorization result;
    result.unit = f.lead();
    Poly m = f.monic();
    std::vector<std::pair<Poly, unsigned>> sqf;
    squarefree_parts(m, 1, sqf);
    std::mt19937_64 rng(seed);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<Poly> pieces;
            equal_degree_split(block, d, rng, pieces);
            for (auto& piece : pieces) result.factors.emplace_back(piece.monic(), mult);
        }
    }
    // Merge equal factors (possible across square-free layers).
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    std::vector<std::pair<Poly, unsigned>> merged;
    for (auto& fe : result.factors) {
        if (!merged.empty() && merged.back().first == fe.first)
            merged.back().second += fe.second;
        else
            merged.push_back(std::move(fe));
    }
    result.factors = std::move(merged);
    return result;
}

bool is_squarefree(const Poly& f) {
    if (f.degree() < 1) return !f.is_zero();
    Poly d = f.derivative();
    if (d.is_zero()) return false;  // f is a p-th power
    return gcd(f, d).degree() == 0;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    Poly m = f.monic();
    const FieldPtr& field = m.field();
    const Poly x = Poly::x(field);
    const int n = m.degree();
    // Rabin: x^(q^n) = x mod m and gcd(x^(q^(n/r)) - x, m) = 1 for primes r | n.
    std::vector<Poly> frob{x % m};
    for (int i = 1; i <= n; ++i) frob.push_back(x_power_q(frob.back(), m));
    if (!(frob[n] - x).is_zero()) return false;
    for (auto [r, _] : intmath::factorize(static_cast<std::uint64_t>(n)))
        if (gcd(m, frob[n / r] - x).degree() != 0) return false;
    return true;
}

std::vector<Elem> roots(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw MalformedInput("roots of the zero polynomial");
    if (f.degree() < 1) return {};
    const FieldPtr& field = f.field();
    Poly m = f.monic();
    const Poly x = Poly::x(field);
    Poly split = gcd(m, powmod(x, field->order(), m) - x);
    std::vector<Elem> out;
    if (split.degree() < 1) return out;
    std::mt19937_64 rng(seed);
    std::vector<Poly> lin;
    equal_degree_split(split, 1, rng, lin);
    for (const auto& l : lin) out.push_back(field->neg(l.monic().coeff(0)));
    std::sort(out.begin(), out.end());
    return out;
}

Poly star(const Poly& g) {
    if (g.is_zero() || g.coeff(0) == 0) throw MalformedInput("star needs g(0) != 0");
    std::vector<Elem> rev(g.coeffs().rbegin(), g.coeffs().rend());
    return Poly(g.field(), std::move(rev)).monic();
}

SelfReciprocity self_reciprocity(const Poly& g) {
    if (g.is_zero() || g.coeff(0) == 0) throw MalformedInput("self-reciprocity needs g(0) != 0");
    SelfReciprocity r;
    r.self_reciprocal = g.is_monic() && star(g) == g;
    const Field& F = *g.field();
    if (g.coeff(0) == 1)
        r.constant = ConstantSign::plus_one;
    else if (g.coeff(0) == F.neg(1))
        r.constant = ConstantSign::minus_one;
    return r;
}

Poly cap_lift(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1) throw MalformedInput("cap_lift needs a monic polynomial of degree >= 1");
    const FieldPtr& field = f.field();
    const auto m = static_cast<std::size_t>(f.degree());
    // sum_i f_i x^(m-i) (x^2 + 1)^i
    const Poly x2p1 = Poly(field, {1, 0, 1});
    Poly acc(field), power = Poly::constant(field, 1);
    for (std::size_t i = 0; i <= m; ++i) {
        if (f.coeff(i)) acc += power.shift(m - i).scale(f.coeff(i));
        power = power * x2p1;
    }
    return acc;
}

Poly cap_drop(const Poly& g) {
    if (!g.is_monic() || g.degree() < 2 || g.degree() % 2 != 0)
        throw MalformedInput("cap_drop needs a monic polynomial of even degree");
    if (g.coeff(0) != 1) throw HypothesisFailed("g(0)=1", "cap_drop needs g(0) = 1, got " + std::to_string(g.coeff(0)));
    if (!is_self_reciprocal(g)) throw HypothesisFailed("self-reciprocal", "cap_drop needs a self-reciprocal input");
    const FieldPtr& field = g.field();
    const auto m = static_cast<std::size_t>(g.degree() / 2);
    // x^i + x^-i = D_i(y) with y = x + 1/x: D_0 = 2, D_1 = y, D_i = y D_{i-1} - D_{i-2}.
    const Poly y = Poly::x(field);
    Poly prev = Poly::constant(field, field->from_int(2)), cur = y;
    Poly result = Poly::constant(field, g.coeff(m));
    for (std::size_t i = 1; i <= m; ++i) {
        result += cur.scale(g.coeff(m + i));
        Poly next = y * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return result;
}

MultiplicityProfile multiplicity_profile(const Poly& f) {
    if (f.degree() < 1) throw MalformedInput("multiplicity profile needs a nonconstant polynomial");
    MultiplicityProfile prof;
    const FieldPtr& field = f.field();
    prof.factors = factor(f).factors;
    const Poly xm1 = Poly(field, {field->neg(1), 1});
    const Poly xp1 = Poly(field, {1, 1});
    const Poly x = Poly::x(field);
    for (const auto& [g, e] : prof.factors) {
        if (g == xm1) prof.mult_x_minus_1 = e;
        if (g == xp1) prof.mult_x_plus_1 = e;
        if (g == x) prof.mult_x = e;
    }
    prof.derivative_zero = f.derivative().is_zero();
    prof.squarefree = std::all_of(prof.factors.begin(), prof.factors.end(), [](const auto& fe) { return fe.second == 1; });
    return prof;
}

Poly monic_from_index(const FieldPtr& field, unsigned degree, std::uint64_t index) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = 1;
    const std::uint64_t q = field->order();
    for (unsigned i = 0; i < degree; ++i) {
        v[i] = index % q;
        index /= q;
    }
    return Poly(field, std::move(v));
}

std::uint64_t count_squarefree_vanishing(unsigned n, std::uint64_t q, CountMode mode, std::uint64_t budget) {
    if (n < 1) throw MalformedInput("degree must be at least 1");
    if (mode == CountMode::formula) {
        if (n == 1) return 1;
        auto qn1 = intmath::checked_pow(q, n - 1);
        if (!qn1) throw BudgetExceeded("q^(n-1) overflows");
        const std::uint64_t top = (n % 2 == 1) ? *qn1 - 1 : *qn1 + 1;
        auto num = intmath::checked_mul(top, q - 1);
        if (!num) throw BudgetExceeded("count overflows");
        return *num / (q + 1);
    }
    auto total = intmath::checked_pow(q, n - 1);
    if (!total || *total > budget)
        throw BudgetExceeded("enumeration of " + std::to_string(q) + "^" + std::to_string(n - 1) +
                             " polynomials exceeds the budget");
    auto field = Field::make_order(q);
    std::uint64_t count = 0;
    // f = x * g with g monic of degree n-1.
    for (std::uint64_t idx = 0; idx < *total; ++idx) {
        Poly f = monic_from_index(field, n - 1, idx).shift(1);
        if (is_squarefree(f)) ++count;
    }
    return count;
}

bool omega_predicate(const Poly& h) {
    if (!h.is_monic() || h.degree() < 2 || h.degree() % 2 != 0)
        throw MalformedInput("omega predicate needs a monic polynomial of even degree");
    if (h.coeff(0) == 0 || !is_self_reciprocal(h)) return false;
    const FieldPtr& field = h.field();
    const Poly xm1 = Poly(field, {field->neg(1), 1});
    auto [q1, r1] = divmod(h, xm1);
    if (!r1.is_zero()) return false;
    auto [q2, r2] = divmod(q1, xm1);
    if (!r2.is_zero()) return false;
    if ((q2 % xm1).is_zero()) return false;
    return is_squarefree(q2);
}

Embedding embed(const FieldPtr& source, const FieldPtr& target) {
    if (source->p() != target->p())
        throw MalformedInput("embedding needs equal characteristic (" + std::to_string(source->p()) + " vs " +
                             std::to_string(target->p()) + ")");
    if (target->k() % source->k() != 0)
        throw MalformedInput("cannot embed F_" + std::to_string(source->order()) + " into F_" +
                             std::to_string(target->order()));
    if (source->k() == 1) return Embedding(source, target, 1);
    std::vector<Elem> mod(source->modulus().begin(), source->modulus().end());
    Poly m(target, mod);
    Elem image = 0;
    if (target->order() <= (std::uint64_t{1} << 20)) {
        bool found = false;
        for (Elem a = 0; a < target->order(); ++a) {
            if (m.eval(a) == 0) {
                image = a;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("modulus has no root in the target field");
    } else {
        auto rs = roots(m);
        if (rs.empty()) throw std::logic_error("modulus has no root in the target field");
        image = rs.front();
    }
    return Embedding(source, target, image);
}

}  // namespace fqgal
