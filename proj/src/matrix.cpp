// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqgal/matrix.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fqgal/errors.hpp"
#include "fqgal/intmath.hpp"
#include "fqgal/kernels.hpp"

namespace fqgal {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (field_->order() > 0xffffffffULL) throw MalformedInput("matrix entries need a field of order below 2^32");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
    const std::size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw MalformedInput("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) {
            if (!field->contains(rows[i][j])) throw MalformedInput("matrix entry outside the field");
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

Matrix Matrix::from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<Elem>> conv;
    for (const auto& r : rows) {
        std::vector<Elem> out;
        for (auto v : r) out.push_back(field->from_int(v));
        conv.push_back(std::move(out));
    }
    return from_rows(std::move(field), conv);
}

Matrix Matrix::from_columns(FieldPtr field, const std::vector<Vec>& cols) {
    const std::size_t c = cols.size(), r = cols.empty() ? 0 : cols[0].size();
    Matrix m(std::move(field), r, c);
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t i = 0; i < r; ++i) m.set(i, j, cols[j][i]);
    return m;
}

Vec Matrix::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

void Matrix::row_axpy(std::size_t dst, std::span<const std::uint32_t> src, Elem s) {
    if (s == 0) return;
    std::span<std::uint32_t> d{data_.data() + dst * cols_, cols_};
    if (field_->is_prime_field()) {
        kernels::axpy_mod(d, src, static_cast<std::uint32_t>(s), field_->p());
        return;
    }
    const Field& F = *field_;
    for (std::size_t j = 0; j < cols_; ++j)
        if (src[j]) d[j] = static_cast<std::uint32_t>(F.add(d[j], F.mul(s, src[j])));
}

void Matrix::row_scale(std::size_t r, Elem s) {
    std::span<std::uint32_t> d{data_.data() + r * cols_, cols_};
    if (field_->is_prime_field()) {
        kernels::scale_mod(d, static_cast<std::uint32_t>(s), field_->p());
        return;
    }
    for (auto& v : d) v = static_cast<std::uint32_t>(field_->mul(v, s));
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw MalformedInput("matrix dimension mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Elem a = at(i, k);
            if (a) r.row_axpy(i, o.row(k), a);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = static_cast<std::uint32_t>(field_->add(data_[i], o.data_[i]));
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = static_cast<std::uint32_t>(field_->sub(data_[i], o.data_[i]));
    return r;
}

Matrix Matrix::scale(Elem s) const {
    Matrix r(*this);
    for (auto& v : r.data_) v = static_cast<std::uint32_t>(field_->mul(v, s));
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw MalformedInput("vector length mismatch");
    Vec out(rows_, 0);
    const Field& F = *field_;
    for (std::size_t i = 0; i < rows_; ++i) {
        Elem acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j] && at(i, j)) acc = F.add(acc, F.mul(at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

Matrix Matrix::pow(std::uint64_t e) const {
    Matrix r = identity(field_, rows_), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t v) { return v == 0; });
}

std::vector<std::size_t> Matrix::rref_in_place() {
    std::vector<std::size_t> pivots;
    const Field& F = *field_;
    std::size_t r = 0;
    std::vector<std::uint32_t> pivot_row(cols_);
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        swap_rows(piv, r);
        row_scale(r, F.inv(at(r, c)));
        std::copy_n(data_.begin() + r * cols_, cols_, pivot_row.begin());
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            Elem f = at(i, c);
            if (f) row_axpy(i, pivot_row, F.neg(f));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix m(*this);
    return m.rref_in_place().size();
}

Elem Matrix::determinant() const {
    if (!is_square()) throw MalformedInput("determinant of a non-square matrix");
    Matrix m(*this);
    const Field& F = *field_;
    Elem det = 1;
    std::vector<std::uint32_t> pivot_row(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t piv = c;
        while (piv < rows_ && m.at(piv, c) == 0) ++piv;
        if (piv == rows_) return 0;
        if (piv != c) {
            m.swap_rows(piv, c);
            det = F.neg(det);
        }
        Elem lead = m.at(c, c);
        det = F.mul(det, lead);
        m.row_scale(c, F.inv(lead));
        std::copy_n(m.data_.begin() + c * cols_, cols_, pivot_row.begin());
        for (std::size_t i = c + 1; i < rows_; ++i) {
            Elem f = m.at(i, c);
            if (f) m.row_axpy(i, pivot_row, F.neg(f));
        }
    }
    return det;
}

std::optional<Matrix> Matrix::inverse() const {
    if (!is_square()) return std::nullopt;
    const std::size_t n = rows_;
    Matrix aug(field_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, at(i, j));
        aug.set(i, n + i, 1);
    }
    auto piv = aug.rref_in_place();
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix inv(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, aug.at(i, n + j));
    return inv;
}

std::vector<Vec> Matrix::kernel() const {
    Matrix m(*this);
    auto pivots = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    const Field& F = *field_;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols_, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ';';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    }
    return os.str();
}

Matrix parse_matrix(const FieldPtr& field, const std::string& text) {
    std::vector<std::vector<Elem>> rows;
    std::stringstream again(text);
    std::string row;
    while (std::getline(again, row, ';')) {
        std::vector<Elem> entries;
        std::stringstream rs(row);
        std::string item;
        while (std::getline(rs, item, ',')) entries.push_back(parse_poly(field, item).coeff(0));
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) throw MalformedInput("empty matrix");
    return Matrix::from_rows(field, rows);
}

Matrix companion(const Poly& m) {
    if (!m.is_monic() || m.degree() < 1) throw MalformedInput("companion matrix needs a monic polynomial of degree >= 1");
    const auto n = static_cast<std::size_t>(m.degree());
    const Field& F = *m.field();
    Matrix c(m.field(), n, n);
    for (std::size_t i = 1; i < n; ++i) c.set(i, i - 1, 1);
    for (std::size_t i = 0; i < n; ++i) c.set(i, n - 1, F.neg(m.coeff(i)));
    return c;
}

Matrix evaluate(const Poly& p, const Matrix& a) {
    const std::size_t n = a.rows();
    Matrix r(a.field(), n, n);
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        r = r * a;
        for (std::size_t j = 0; j < n; ++j) r.set(j, j, a.field()->add(r.at(j, j), c[i]));
    }
    return r;
}

Poly local_minimal_polynomial(const Matrix& a, const Vec& v) {
    const FieldPtr& field = a.field();
    const Field& F = *field;
    const std::size_t n = a.rows();
    struct Stored {
        std::size_t pivot;
        Vec row;
        Vec combo;
    };
    std::vector<Stored> stored;
    Vec w = v;
    for (std::size_t j = 0; j <= n; ++j) {
        Vec r = w, combo(n + 1, 0);
        combo[j] = 1;
        for (const auto& s : stored) {
            Elem f = r[s.pivot];
            if (!f) continue;
            for (std::size_t i = 0; i < n; ++i) r[i] = F.sub(r[i], F.mul(f, s.row[i]));
            for (std::size_t i = 0; i <= n; ++i) combo[i] = F.sub(combo[i], F.mul(f, s.combo[i]));
        }
        auto it = std::find_if(r.begin(), r.end(), [](Elem e) { return e != 0; });
        if (it == r.end()) {
            combo.resize(j + 1);
            return Poly(field, combo);
        }
        const auto piv = static_cast<std::size_t>(it - r.begin());
        const Elem inv = F.inv(r[piv]);
        for (auto& e : r) e = F.mul(e, inv);
        for (auto& e : combo) e = F.mul(e, inv);
        stored.push_back({piv, std::move(r), std::move(combo)});
        w = a.apply(w);
    }
    throw std::logic_error("Krylov chain did not terminate");
}

namespace {

Poly lcm(const Poly& a, const Poly& b) { return (a * b / gcd(a, b)).monic(); }

}  // namespace

Poly minimal_polynomial(const Matrix& a) {
    if (!a.is_square()) throw MalformedInput("minimal polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    Poly result = Poly::constant(a.field(), 1);
    for (std::size_t i = 0; i < n && result.degree() < static_cast<int>(n); ++i) {
        Vec e(n, 0);
        e[i] = 1;
        result = lcm(result, local_minimal_polynomial(a, e));
    }
    return result;
}

Poly characteristic_polynomial(const Matrix& a) {
    if (!a.is_square()) throw MalformedInput("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    const FieldPtr& field = a.field();
    const Field& F = *field;
    std::vector<std::vector<Elem>> h(n, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h[i][j] = a.at(i, j);
    // Reduce to upper Hessenberg form by similarity transforms.
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && h[i][m - 1] == 0) ++i;
        if (i == n) continue;
        if (i != m) {
            std::swap(h[i], h[m]);
            for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
        }
        const Elem t_inv = F.inv(h[m][m - 1]);
        for (std::size_t r = m + 1; r < n; ++r) {
            Elem u = F.mul(h[r][m - 1], t_inv);
            if (!u) continue;
            for (std::size_t c = 0; c < n; ++c) h[r][c] = F.sub(h[r][c], F.mul(u, h[m][c]));
            for (std::size_t c = 0; c < n; ++c) h[c][m] = F.add(h[c][m], F.mul(u, h[c][r]));
        }
    }
    std::vector<Poly> p;
    p.push_back(Poly::constant(field, 1));
    const Poly x = Poly::x(field);
    for (std::size_t m = 0; m < n; ++m) {
        Poly next = (x - Poly::constant(field, h[m][m])) * p[m];
        Elem prod = 1;
        for (std::size_t i = m; i-- > 0;) {
            prod = F.mul(prod, h[i + 1][i]);
            Elem coef = F.mul(h[i][m], prod);
            if (coef) next -= p[i].scale(coef);
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

std::uint64_t order_of_x_mod(const Poly& g) {
    if (g.coeff(0) == 0) throw MalformedInput("x is not invertible modulo g");
    const auto d = static_cast<unsigned>(g.degree());
    if (d == 0) return 1;
    auto qd = intmath::checked_pow(g.field()->order(), d);
    if (!qd) throw BudgetExceeded("q^d overflows 64 bits in order computation");
    std::uint64_t ord = *qd - 1;
    const Poly x = Poly::x(g.field());
    for (auto [r, mult] : intmath::factorize(ord)) {
        for (unsigned i = 0; i < mult; ++i) {
            if (powmod(x, ord / r, g).is_one())
                ord /= r;
            else
                break;
        }
    }
    return ord;
}

std::uint64_t element_order(const Matrix& a) {
    Poly mp = minimal_polynomial(a);
    if (mp.coeff(0) == 0) throw MalformedInput("element order of a singular matrix");
    auto fac = factor(mp);
    std::uint64_t ord = 1;
    unsigned max_mult = 1;
    for (const auto& [g, e] : fac.factors) {
        auto l = intmath::checked_lcm(ord, order_of_x_mod(g));
        if (!l) throw BudgetExceeded("element order overflows");
        ord = *l;
        max_mult = std::max(max_mult, e);
    }
    const std::uint32_t p = a.field()->p();
    auto pa = intmath::checked_pow(p, intmath::ceil_log(p, max_mult));
    auto total = pa ? intmath::checked_mul(ord, *pa) : std::nullopt;
    if (!total) throw BudgetExceeded("element order overflows");
    return *total;
}

std::vector<PrimaryBlock> primary_decomposition(const Matrix& a) {
    Poly mp = minimal_polynomial(a);
    std::vector<PrimaryBlock> blocks;
    for (auto& [g, e] : factor(mp).factors) {
        Matrix ge = evaluate(g.pow(e), a);
        blocks.push_back({g, e, ge.kernel()});
    }
    return blocks;
}

SplitWitness su_split(const Matrix& a) {
    const FieldPtr& field = a.field();
    Poly mp = minimal_polynomial(a);
    if (mp.coeff(0) == 0) throw MalformedInput("su_split of a singular matrix");
    auto fac = factor(mp);
    unsigned max_mult = 1;
    std::uint64_t d = 1;
    for (const auto& [g, e] : fac.factors) {
        max_mult = std::max(max_mult, e);
        d = *intmath::checked_lcm(d, static_cast<std::uint64_t>(g.degree()));
    }
    const std::uint32_t p = field->p();
    SplitWitness w{Matrix(field, 0, 0), Matrix(field, 0, 0)};
    w.order = element_order(a);
    w.p_power = *intmath::checked_pow(p, intmath::ceil_log(p, max_mult));
    w.d = static_cast<unsigned>(d);
    auto qd = intmath::checked_pow(field->order(), static_cast<unsigned>(d));
    if (qd) {
        w.bezout_modulus = *qd - 1;
        w.modulus_is_qd_minus_1 = true;
    } else {
        std::uint64_t regular = w.order;
        while (regular % p == 0) regular /= p;
        w.bezout_modulus = regular;
        w.modulus_is_qd_minus_1 = false;
    }
    using intmath::i128;
    const i128 mod = w.bezout_modulus;
    // alpha = (p^a)^{-1} mod modulus, least non-negative; beta from the identity.
    i128 alpha = 0;
    if (mod > 1) {
        auto bz = intmath::ext_gcd(static_cast<i128>(w.p_power % w.bezout_modulus), mod);
        alpha = bz.x % mod;
        if (alpha < 0) alpha += mod;
    }
    i128 beta = (1 - alpha * static_cast<i128>(w.p_power)) / mod;
    w.alpha = static_cast<std::int64_t>(alpha);
    w.beta = static_cast<std::int64_t>(beta);
    const i128 n = w.order;
    auto least_positive = [&](i128 v) {
        v %= n;
        if (v <= 0) v += n;
        return static_cast<std::uint64_t>(v);
    };
    w.e1 = least_positive(beta * mod);
    w.e2 = least_positive(alpha * static_cast<i128>(w.p_power));
    w.sigma1 = a.pow(w.e1);
    w.sigma2 = a.pow(w.e2);
    return w;
}

bool is_transvection_matrix(const Matrix& a) {
    if (!a.is_square() || a.rows() < 2) return false;
    const Matrix id = Matrix::identity(a.field(), a.rows());
    const Matrix n = a - id;
    if (n.rank() != 1) return false;
    const FieldPtr& field = a.field();
    const Poly xm1_sq = Poly(field, {field->neg(1), 1}).pow(2);
    return minimal_polynomial(a) == xm1_sq;
}

Vec vector_from_index(const FieldPtr& field, std::size_t n, std::uint64_t index) {
    Vec v(n, 0);
    const std::uint64_t q = field->order();
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = index % q;
        index /= q;
    }
    return v;
}

std::uint64_t vector_index(const FieldPtr& field, const Vec& v) {
    std::uint64_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) idx = idx * field->order() + v[i];
    return idx;
}

CyclicResult is_cyclic(const Matrix& a, std::uint64_t budget, std::uint64_t seed) {
    const std::size_t n = a.rows();
    Poly mp = minimal_polynomial(a);
    CyclicResult res;
    if (mp.degree() != static_cast<int>(n)) return res;
    res.cyclic = true;
    const FieldPtr& field = a.field();
    auto total = intmath::checked_pow(field->order(), static_cast<unsigned>(n));
    const std::uint64_t limit = total ? std::min(*total, budget) : budget;
    for (std::uint64_t idx = 1; idx < limit; ++idx) {
        Vec v = vector_from_index(field, n, idx);
        if (local_minimal_polynomial(a, v).degree() == static_cast<int>(n)) {
            res.vector = std::move(v);
            return res;
        }
    }
    std::mt19937_64 rng(seed);
    for (;;) {
        Vec v(n);
        for (auto& e : v) e = rng() % field->order();
        if (local_minimal_polynomial(a, v).degree() == static_cast<int>(n)) {
            res.vector = std::move(v);
            return res;
        }
    }
}

}  // namespace fqgal
