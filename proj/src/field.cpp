// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqgal/field.hpp"

#include <algorithm>
#include <sstream>

#include "fqgal/errors.hpp"
#include "fqgal/intmath.hpp"

namespace fqgal {

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Minimal dense arithmetic over F_p used to vet moduli before any Field exists.
void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs mulmod_fp(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    const std::size_t d = m.size() - 1;  // m monic
    for (std::size_t i = prod.size(); i-- > d;) {
        std::uint64_t c = prod[i];
        if (!c) continue;
        for (std::size_t j = 0; j < d; ++j) prod[i - d + j] = (prod[i - d + j] + (p - c) * m[j]) % p;
        prod[i] = 0;
    }
    Coeffs r(prod.begin(), prod.begin() + std::min(prod.size(), d));
    trim(r);
    return r;
}

Coeffs powmod_fp(Coeffs base, std::uint64_t e, const Coeffs& m, std::uint32_t p) {
    Coeffs r{1};
    while (e) {
        if (e & 1) r = mulmod_fp(r, base, m, p);
        base = mulmod_fp(base, base, m, p);
        e >>= 1;
    }
    return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    return static_cast<std::uint32_t>(intmath::powmod(a, p - 2, p));
}

Coeffs gcd_fp(Coeffs a, Coeffs b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        std::uint32_t lead_inv = inv_mod(b.back(), p);
        while (a.size() >= b.size()) {
            std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * b[j]) % p);
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

Coeffs sub_x(Coeffs a, std::uint32_t p) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
    Coeffs f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2 || f.back() != 1) return false;
    const unsigned k = static_cast<unsigned>(f.size() - 1);
    if (k == 1) return true;
    if (f[0] == 0) return false;
    const Coeffs x{0, 1};
    // x^(p^k) == x mod f
    Coeffs xp = x;
    std::vector<Coeffs> frob_powers{xp};
    for (unsigned i = 1; i <= k; ++i) {
        xp = powmod_fp(xp, p, f, p);
        frob_powers.push_back(xp);
    }
    if (sub_x(frob_powers[k], p).size() != 0) return false;
    for (auto [r, _] : intmath::factorize(k)) {
        Coeffs g = gcd_fp(f, sub_x(frob_powers[k / r], p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

Field::Field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    pow_p_.resize(k_ + 1);
    pow_p_[0] = 1;
    for (unsigned i = 1; i <= k_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
    order_ = pow_p_[k_];
    if (k_ == 1) {
        mode_ = Mode::prime;
    } else if (order_ <= (1u << 16)) {
        mode_ = Mode::table;
        if (p_ == 2) {
            for (unsigned i = 0; i < k_; ++i)
                if (modulus_[i]) binary_reduce_ |= std::uint64_t{1} << i;
        }
        build_tables();
    } else if (p_ == 2) {
        mode_ = Mode::binary;
        for (unsigned i = 0; i < k_; ++i)
            if (modulus_[i]) binary_reduce_ |= std::uint64_t{1} << i;
    }
}

FieldPtr Field::make(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus) {
    if (!intmath::is_prime(p)) throw MalformedInput("field characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw MalformedInput("extension degree must be at least 1");
    auto order = intmath::checked_pow(p, k);
    if (!order || *order >= (std::uint64_t{1} << 63))
        throw BudgetExceeded("field order " + std::to_string(p) + "^" + std::to_string(k) + " exceeds 63 bits");
    if (k == 1) {
        if (!modulus.empty() && modulus != std::vector<std::uint32_t>{0, 1}) {
            if (modulus.size() != 2 || modulus[1] != 1)
                throw MalformedInput("modulus of a prime field must be monic linear");
        }
        return FieldPtr(new Field(p, 1, {0, 1}));
    }
    if (modulus.empty()) {
        std::vector<std::uint32_t> cand(k + 1, 0);
        cand[k] = 1;
        for (std::uint64_t n = 0; n < *order; ++n) {
            std::uint64_t v = n;
            for (unsigned i = 0; i < k; ++i) {
                cand[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (cand[0] == 0) continue;
            if (is_irreducible_mod_p(cand, p)) {
                modulus = cand;
                break;
            }
        }
    } else {
        if (modulus.size() != k + 1 || modulus[k] != 1)
            throw MalformedInput("modulus must be monic of degree " + std::to_string(k));
        for (auto c : modulus)
            if (c >= p) throw MalformedInput("modulus coefficient out of range");
        if (!is_irreducible_mod_p(modulus, p)) throw MalformedInput("modulus is reducible over F_" + std::to_string(p));
    }
    return FieldPtr(new Field(p, k, std::move(modulus)));
}

FieldPtr Field::make_order(std::uint64_t q) {
    auto pp = intmath::prime_power(q);
    if (!pp) throw MalformedInput("field order " + std::to_string(q) + " is not a prime power");
    return make(static_cast<std::uint32_t>(pp->first), pp->second);
}

Elem Field::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::coords(Elem a) const {
    std::vector<std::uint32_t> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = static_cast<std::uint32_t>(a % p_);
        a /= p_;
    }
    return c;
}

Elem Field::from_coords(std::span<const std::uint32_t> c) const {
    Elem a = 0;
    for (std::size_t i = std::min<std::size_t>(c.size(), k_); i-- > 0;) a = a * p_ + (c[i] % p_);
    return a;
}

Elem Field::add_digits(Elem a, Elem b, bool subtract) const {
    Elem r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        std::uint64_t d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
        r += d * pow_p_[i];
    }
    return r;
}

Elem Field::add(Elem a, Elem b) const {
    switch (mode_) {
        case Mode::prime: {
            Elem s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        default:
            if (p_ == 2) return a ^ b;
            return add_digits(a, b, false);
    }
}

Elem Field::sub(Elem a, Elem b) const {
    if (mode_ == Mode::prime) return a >= b ? a - b : a + p_ - b;
    if (p_ == 2) return a ^ b;
    return add_digits(a, b, true);
}

Elem Field::neg(Elem a) const { return sub(0, a); }

Elem Field::mul_slow(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (p_ == 2) {
        // Carry-less product then reduction by x^k + binary_reduce_.
        unsigned __int128 prod = 0;
        for (unsigned i = 0; i < k_; ++i)
            if ((b >> i) & 1) prod ^= static_cast<unsigned __int128>(a) << i;
        for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i) {
            if ((prod >> i) & 1) {
                prod ^= static_cast<unsigned __int128>(1) << i;
                prod ^= static_cast<unsigned __int128>(binary_reduce_) << (i - k_);
            }
        }
        return static_cast<Elem>(prod);
    }
    auto ca = coords(a), cb = coords(b);
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (!ca[i]) continue;
        for (unsigned j = 0; j < k_; ++j) prod[i + j] += std::uint64_t{ca[i]} * cb[j] % p_;
    }
    for (auto& v : prod) v %= p_;
    for (std::size_t i = prod.size(); i-- > k_;) {
        std::uint64_t c = prod[i];
        if (!c) continue;
        for (unsigned j = 0; j < k_; ++j) prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
        prod[i] = 0;
    }
    Elem r = 0;
    for (unsigned i = k_; i-- > 0;) r = r * p_ + prod[i];
    return r;
}

void Field::build_tables() {
    const std::uint64_t n = order_ - 1;
    auto factors = intmath::factorize(n);
    Elem primitive = 0;
    for (Elem g = 2; g < order_; ++g) {
        bool ok = true;
        for (auto [r, _] : factors) {
            // g^(n/r) via slow multiplication
            Elem acc = 1, base = g;
            std::uint64_t e = n / r;
            while (e) {
                if (e & 1) acc = mul_slow(acc, base);
                base = mul_slow(base, base);
                e >>= 1;
            }
            if (acc == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            primitive = g;
            break;
        }
    }
    exp_table_.assign(2 * n, 0);
    log_table_.assign(order_, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        exp_table_[i] = static_cast<std::uint32_t>(cur);
        exp_table_[i + n] = static_cast<std::uint32_t>(cur);
        log_table_[cur] = static_cast<std::uint32_t>(i);
        cur = mul_slow(cur, primitive);
    }
}

Elem Field::mul(Elem a, Elem b) const {
    switch (mode_) {
        case Mode::prime:
            return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p_);
        case Mode::table:
            if (a == 0 || b == 0) return 0;
            return exp_table_[log_table_[a] + log_table_[b]];
        default:
            return mul_slow(a, b);
    }
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (mode_ == Mode::table) {
        const std::uint64_t n = order_ - 1;
        return exp_table_[intmath::mulmod(log_table_[a], e % n, n)];
    }
    e %= (order_ - 1);
    if (e == 0) e = order_ - 1;
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (mode_ == Mode::prime) return intmath::powmod(a, p_ - 2, p_);
    if (mode_ == Mode::table) {
        const std::uint64_t n = order_ - 1;
        return exp_table_[(n - log_table_[a]) % n];
    }
    return pow(a, order_ - 2);
}

Elem Field::frobenius_power(Elem a, std::uint64_t base_q, std::uint64_t e) const {
    auto pp = intmath::prime_power(base_q);
    if (!pp || pp->first != p_)
        throw MalformedInput("base " + std::to_string(base_q) + " is not a power of the characteristic " +
                             std::to_string(p_));
    if (a == 0) return 0;
    // a^(q^e) with the exponent reduced modulo |F*|.
    const std::uint64_t n = order_ - 1;
    if (n == 1) return a;
    std::uint64_t ex = intmath::powmod(base_q % n, e, n);
    return pow(a, ex == 0 ? n : ex);
}

std::uint64_t Field::multiplicative_order(Elem a) const {
    if (a == 0) throw std::domain_error("order of zero");
    std::uint64_t ord = order_ - 1;
    for (auto [r, mult] : intmath::factorize(order_ - 1)) {
        for (unsigned i = 0; i < mult; ++i) {
            if (pow(a, ord / r) == 1)
                ord /= r;
            else
                break;
        }
    }
    return ord;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << p_ << '^' << k_;
    if (k_ > 1) {
        os << " mod=";
        for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    }
    return os.str();
}

namespace {

std::vector<std::uint32_t> parse_uint_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw MalformedInput("empty entry in list '" + text + "'");
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            throw MalformedInput("bad integer '" + item + "'");
        }
        if (pos != item.size()) throw MalformedInput("bad integer '" + item + "'");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

}  // namespace

FieldPtr parse_field(const std::string& q_text, const std::string& modulus_text) {
    std::string q = q_text;
    std::string mod = modulus_text;
    if (auto pos = q.find("mod="); pos != std::string::npos) {
        mod = q.substr(pos + 4);
        q = q.substr(0, pos);
        while (!q.empty() && (q.back() == ' ' || q.back() == ';')) q.pop_back();
    }
    if (mod.rfind("mod=", 0) == 0) mod = mod.substr(4);
    std::uint64_t p = 0;
    unsigned k = 1;
    try {
        if (auto caret = q.find('^'); caret != std::string::npos) {
            std::size_t used = 0;
            p = std::stoull(q.substr(0, caret), &used);
            if (used != caret) throw MalformedInput("bad field '" + q_text + "'");
            k = static_cast<unsigned>(std::stoul(q.substr(caret + 1), &used));
            if (used != q.size() - caret - 1) throw MalformedInput("bad field '" + q_text + "'");
        } else {
            std::size_t used = 0;
            std::uint64_t order = std::stoull(q, &used);
            if (used != q.size()) throw MalformedInput("bad field '" + q_text + "'");
            auto pp = intmath::prime_power(order);
            if (!pp) throw MalformedInput("field order " + q + " is not a prime power");
            p = pp->first;
            k = pp->second;
        }
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const MalformedInput*>(&e)) throw;
        throw MalformedInput("bad field '" + q_text + "'");
    }
    if (p > 0xffffffffULL) throw MalformedInput("characteristic too large");
    std::vector<std::uint32_t> modulus;
    if (!mod.empty()) modulus = parse_uint_list(mod);
    return Field::make(static_cast<std::uint32_t>(p), k, std::move(modulus));
}

Embedding::Embedding(FieldPtr source, FieldPtr target, Elem generator_image)
    : source_(std::move(source)), target_(std::move(target)), generator_image_(generator_image) {
    basis_images_.resize(source_->k());
    Elem cur = 1;
    for (unsigned i = 0; i < source_->k(); ++i) {
        basis_images_[i] = cur;
        cur = target_->mul(cur, generator_image_);
    }
}

Elem Embedding::operator()(Elem a) const {
    if (source_->k() == 1) return a;
    Elem r = 0;
    for (unsigned i = 0; i < source_->k(); ++i) {
        std::uint64_t c = a % source_->p();
        a /= source_->p();
        if (c) r = target_->add(r, target_->mul(target_->from_int(static_cast<std::int64_t>(c)), basis_images_[i]));
    }
    return r;
}

std::optional<Elem> Embedding::preimage(Elem b) const {
    const std::uint32_t p = target_->p();
    if (source_->k() == 1) {
        if (b < p) return b;
        return std::nullopt;
    }
    // Solve sum_i c_i * basis_images_[i] = b over F_p.
    const unsigned ks = source_->k(), kt = target_->k();
    std::vector<std::vector<std::uint64_t>> rows(kt, std::vector<std::uint64_t>(ks + 1, 0));
    for (unsigned j = 0; j < ks; ++j) {
        auto c = target_->coords(basis_images_[j]);
        for (unsigned i = 0; i < kt; ++i) rows[i][j] = c[i];
    }
    auto cb = target_->coords(b);
    for (unsigned i = 0; i < kt; ++i) rows[i][ks] = cb[i];
    std::vector<int> pivot_row(ks, -1);
    unsigned r = 0;
    for (unsigned col = 0; col < ks && r < kt; ++col) {
        unsigned piv = r;
        while (piv < kt && rows[piv][col] == 0) ++piv;
        if (piv == kt) continue;
        std::swap(rows[piv], rows[r]);
        std::uint64_t inv = intmath::powmod(rows[r][col], p - 2, p);
        for (auto& v : rows[r]) v = v * inv % p;
        for (unsigned i = 0; i < kt; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            std::uint64_t f = rows[i][col];
            for (unsigned j = 0; j <= ks; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
        }
        pivot_row[col] = static_cast<int>(r);
        ++r;
    }
    for (unsigned i = r; i < kt; ++i)
        if (rows[i][ks] != 0) return std::nullopt;
    std::vector<std::uint32_t> sol(ks, 0);
    for (unsigned col = 0; col < ks; ++col)
        if (pivot_row[col] >= 0) sol[col] = static_cast<std::uint32_t>(rows[pivot_row[col]][ks]);
    return source_->from_coords(sol);
}

}  // namespace fqgal
