// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqgal/classical.hpp"

#include <deque>
#include <random>
#include <unordered_set>

#include "fqgal/errors.hpp"
#include "fqgal/intmath.hpp"

namespace fqgal {

namespace {

std::uint64_t space_size(const FieldPtr& f, std::size_t n, std::uint64_t budget) {
    auto total = intmath::checked_pow(f->order(), static_cast<unsigned>(n));
    if (!total || *total > budget) throw BudgetExceeded("vector space of size q^" + std::to_string(n) + " exceeds the budget");
    return *total;
}

std::string matrix_key(const Matrix& m) {
    const auto& d = m.data();
    return std::string(reinterpret_cast<const char*>(d.data()), d.size() * sizeof(std::uint32_t));
}

Vec gram_times(const Matrix& g, const Vec& u) { return g.apply(u); }

// I + s * u * v^T
Matrix rank_one_update(const FieldPtr& f, const Vec& u, const Vec& v, Elem s) {
    const std::size_t n = u.size();
    Matrix m = Matrix::identity(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, f->add(m.at(i, j), f->mul(s, f->mul(u[i], v[j]))));
    return m;
}

bool is_zero_vec(const Vec& v) {
    for (Elem e : v)
        if (e) return false;
    return true;
}

}  // namespace

Elem BilinearForm::eval(const Vec& u, const Vec& w) const {
    const Field& F = *gram.field();
    const Vec gw = gram.apply(w);
    Elem acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc = F.add(acc, F.mul(u[i], gw[i]));
    return acc;
}

bool BilinearForm::is_isometry(const Matrix& a) const { return a.transpose() * gram * a == gram; }

bool BilinearForm::is_alternating() const {
    const Field& F = *gram.field();
    for (std::size_t i = 0; i < gram.rows(); ++i) {
        if (gram.at(i, i)) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (gram.at(i, j) != F.neg(gram.at(j, i))) return false;
    }
    return true;
}

std::string BilinearForm::to_string() const {
    return gram.to_string() + (kind == FormKind::alternating ? " alternating" : " symmetric");
}

QuadraticForm::QuadraticForm(Matrix u) : upper(std::move(u)) {
    if (!upper.is_square()) throw MalformedInput("quadratic form matrix must be square");
    for (std::size_t i = 0; i < upper.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (upper.at(i, j)) throw MalformedInput("quadratic form matrix must be upper triangular");
}

Elem QuadraticForm::eval(const Vec& w) const {
    const Field& F = *upper.field();
    Elem acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!w[i]) continue;
        Elem row = 0;
        for (std::size_t j = i; j < w.size(); ++j)
            if (w[j] && upper.at(i, j)) row = F.add(row, F.mul(upper.at(i, j), w[j]));
        acc = F.add(acc, F.mul(w[i], row));
    }
    return acc;
}

BilinearForm QuadraticForm::polarization() const {
    const bool even = upper.field()->p() == 2;
    return {upper + upper.transpose(), even ? FormKind::alternating : FormKind::symmetric};
}

bool QuadraticForm::is_isometry(const Matrix& a) const {
    const Matrix m = a.transpose() * upper * a;
    const Field& F = *upper.field();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m.at(i, i) != upper.at(i, i)) return false;
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (F.add(m.at(i, j), m.at(j, i)) != upper.at(i, j)) return false;
    }
    return true;
}

QuadraticForm standard_quadratic_form(const FieldPtr& field, unsigned m, FormType type) {
    if (m < 1) throw MalformedInput("quadratic form needs m >= 1");
    Matrix u(field, 2 * m, 2 * m);
    for (unsigned i = 0; i < m; ++i) u.set(2 * i, 2 * i + 1, 1);
    if (type == FormType::minus) {
        const std::uint64_t q = field->order();
        for (std::uint64_t idx = 0; idx < q * q; ++idx) {
            Poly g = monic_from_index(field, 2, idx);
            if (!is_irreducible(g)) continue;
            const std::size_t x = 2 * m - 2, y = 2 * m - 1;
            u.set(x, x, 1);
            u.set(x, y, g.coeff(1));
            u.set(y, y, g.coeff(0));
            break;
        }
    }
    return QuadraticForm(u);
}

BilinearForm invariant_alternating_form(const Matrix& a, std::uint64_t enum_cap, std::uint64_t seed) {
    if (!a.is_square()) throw MalformedInput("invariant form needs a square matrix");
    const FieldPtr& F = a.field();
    const std::size_t n = a.rows();
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) unknowns.emplace_back(i, j);
    auto unit = [&](std::size_t k) {
        Matrix e(F, n, n);
        e.set(unknowns[k].first, unknowns[k].second, 1);
        e.set(unknowns[k].second, unknowns[k].first, F->neg(1));
        return e;
    };
    const Matrix at = a.transpose();
    Matrix system(F, n * n, unknowns.size());
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
        const Matrix e = unit(k);
        const Matrix r = at * e * a - e;
        for (std::size_t i = 0; i < n * n; ++i) system.set(i, k, r.data()[i]);
    }
    const auto kernel = system.kernel();
    if (kernel.empty()) throw HypothesisFailed("invariant-form", "no nonzero invariant alternating form");

    auto assemble = [&](const std::vector<Elem>& coeffs) {
        Matrix g(F, n, n);
        for (std::size_t b = 0; b < kernel.size(); ++b) {
            if (!coeffs[b]) continue;
            for (std::size_t k = 0; k < unknowns.size(); ++k) {
                const Elem v = F->mul(coeffs[b], kernel[b][k]);
                if (!v) continue;
                auto [i, j] = unknowns[k];
                g.set(i, j, F->add(g.at(i, j), v));
                g.set(j, i, F->sub(g.at(j, i), v));
            }
        }
        return g;
    };

    const std::uint64_t q = F->order();
    auto total = intmath::checked_pow(q, static_cast<unsigned>(kernel.size()));
    const std::uint64_t limit = total ? std::min(*total, enum_cap) : enum_cap;
    for (std::uint64_t idx = 1; idx < limit; ++idx) {
        Matrix g = assemble(vector_from_index(F, kernel.size(), idx));
        if (g.determinant() != 0) return {g, FormKind::alternating};
    }
    if (total && *total <= enum_cap)
        throw HypothesisFailed("invariant-form", "every invariant alternating form is degenerate");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        std::vector<Elem> c(kernel.size());
        for (auto& v : c) v = rng() % q;
        Matrix g = assemble(c);
        if (g.determinant() != 0) return {g, FormKind::alternating};
    }
    throw HypothesisFailed("invariant-form", "random search found no nondegenerate invariant form");
}

Matrix sp_transvection(const Vec& u, Elem c, const BilinearForm& b) {
    if (is_zero_vec(u)) throw MalformedInput("transvection vector must be nonzero");
    if (c == 0) throw MalformedInput("transvection scalar must be nonzero");
    return rank_one_update(b.gram.field(), u, gram_times(b.gram, u), c);
}

Matrix orth_reflection(const Vec& u, const QuadraticForm& q) {
    const FieldPtr& F = q.upper.field();
    if (F->p() == 2) throw MalformedInput("reflections need odd characteristic");
    if (q.eval(u) != 1) throw HypothesisFailed("Q(u)=1", "reflection vector must have norm one");
    return rank_one_update(F, u, gram_times(q.polarization().gram, u), F->neg(1));
}

Matrix orth_transvection(const Vec& u, const QuadraticForm& q) {
    const FieldPtr& F = q.upper.field();
    if (F->p() != 2) throw MalformedInput("orthogonal transvections need characteristic 2");
    if (q.eval(u) != 1) throw HypothesisFailed("Q(u)=1", "transvection vector must have norm one");
    return rank_one_update(F, u, gram_times(q.polarization().gram, u), 1);
}

std::uint64_t expected_isotropic(std::uint64_t q, unsigned m, FormType type) {
    const std::uint64_t a = *intmath::checked_pow(q, m - 1), b = *intmath::checked_pow(q, m);
    return type == FormType::plus ? (a + 1) * (b - 1) : (a - 1) * (b + 1);
}

std::uint64_t expected_norm_one(std::uint64_t q, unsigned m, FormType type) {
    const std::uint64_t a = *intmath::checked_pow(q, m - 1), b = *intmath::checked_pow(q, m);
    return type == FormType::plus ? a * (b - 1) : a * (b + 1);
}

FormStatistics form_statistics(const QuadraticForm& q, std::uint64_t budget) {
    const std::size_t n = q.dim();
    if (n == 0 || n % 2) throw MalformedInput("form statistics need even dimension 2m");
    const FieldPtr& F = q.upper.field();
    const std::uint64_t total = space_size(F, n, budget);
    FormStatistics s;
    s.m = static_cast<unsigned>(n / 2);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        const Elem v = q.eval(vector_from_index(F, n, idx));
        s.isotropic_nonzero += v == 0;
        s.norm_one += v == 1;
    }
    const std::uint64_t qq = F->order();
    if (s.isotropic_nonzero == expected_isotropic(qq, s.m, FormType::plus))
        s.type = FormType::plus;
    else if (s.isotropic_nonzero == expected_isotropic(qq, s.m, FormType::minus))
        s.type = FormType::minus;
    else
        throw HypothesisFailed("form-type", "isotropic count " + std::to_string(s.isotropic_nonzero) +
                                                " matches neither closed form (degenerate form?)");
    s.expected_isotropic = expected_isotropic(qq, s.m, s.type);
    s.expected_norm_one = expected_norm_one(qq, s.m, s.type);
    return s;
}

std::vector<Vec> orbit(const std::vector<Matrix>& gens, const Vec& v, std::uint64_t budget) {
    const FieldPtr& F = gens.empty() ? throw MalformedInput("orbit needs at least one generator") : gens[0].field();
    const std::size_t n = v.size();
    const std::uint64_t total = space_size(F, n, budget);
    std::vector<bool> seen(total, false);
    std::deque<Vec> queue{v};
    seen[vector_index(F, v)] = true;
    while (!queue.empty()) {
        Vec w = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            Vec x = g.apply(w);
            const auto idx = vector_index(F, x);
            if (!seen[idx]) {
                seen[idx] = true;
                queue.push_back(std::move(x));
            }
        }
    }
    std::vector<Vec> out;
    for (std::uint64_t i = 0; i < total; ++i)
        if (seen[i]) out.push_back(vector_from_index(F, n, i));
    return out;
}

std::vector<Matrix> group_closure(const std::vector<Matrix>& gens, std::uint64_t budget) {
    if (gens.empty()) throw MalformedInput("group closure needs at least one generator");
    const Matrix id = Matrix::identity(gens[0].field(), gens[0].rows());
    std::vector<Matrix> elems{id};
    std::unordered_set<std::string> seen{matrix_key(id)};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            Matrix x = elems[head] * g;
            if (seen.insert(matrix_key(x)).second) {
                if (elems.size() >= budget) throw BudgetExceeded("group closure exceeds the element budget");
                elems.push_back(std::move(x));
            }
        }
    }
    return elems;
}

const char* classical_kind_name(ClassicalKind k) {
    switch (k) {
        case ClassicalKind::sp: return "sp";
        case ClassicalKind::o_even: return "o_even";
        case ClassicalKind::o_odd: return "o_odd";
    }
    return "?";
}

bool is_reflection_matrix(const Matrix& a) {
    if (!a.is_square() || a.is_identity()) return false;
    if (!(a * a).is_identity()) return false;
    const Matrix id = Matrix::identity(a.field(), a.rows());
    return (a - id).rank() == 1 && a.determinant() == a.field()->neg(1);
}

Recognition recognize(ClassicalKind kind, const std::vector<Matrix>& gens, const std::optional<BilinearForm>& alt,
                      const std::optional<QuadraticForm>& quad, std::uint64_t element_budget,
                      std::uint64_t orbit_budget) {
    if (gens.empty()) throw MalformedInput("recognition needs generators");
    const FieldPtr& F = gens[0].field();
    const std::size_t n = gens[0].rows();
    const std::uint64_t q = F->order();
    Recognition rec;
    Vec start;
    if (kind == ClassicalKind::sp) {
        if (!alt) throw MalformedInput("symplectic recognition needs an alternating form");
        for (const auto& g : gens)
            if (!alt->is_isometry(g)) throw MalformedInput("generator is not an isometry of the form");
        rec.group = "Sp(" + std::to_string(n) + "," + std::to_string(q) + ")";
        rec.orbit_target = space_size(F, n, orbit_budget) - 1;
        start = Vec(n, 0);
        start[0] = 1;
    } else {
        if (!quad) throw MalformedInput("orthogonal recognition needs a quadratic form");
        if ((kind == ClassicalKind::o_even) != (F->p() == 2)) throw MalformedInput("characteristic does not match the orthogonal branch");
        for (const auto& g : gens)
            if (!quad->is_isometry(g)) throw MalformedInput("generator is not an isometry of the form");
        auto stats = form_statistics(*quad, orbit_budget);
        rec.group = std::string(stats.type == FormType::plus ? "O+(" : "O-(") + std::to_string(n) + "," + std::to_string(q) + ")";
        rec.orbit_target = stats.norm_one;
        const std::uint64_t total = space_size(F, n, orbit_budget);
        for (std::uint64_t idx = 1; idx < total && start.empty(); ++idx) {
            Vec v = vector_from_index(F, n, idx);
            if (quad->eval(v) == 1) start = v;
        }
        if (start.empty()) {
            rec.reason = "no norm-one vector";
            return rec;
        }
    }
    rec.orbit_size = orbit(gens, start, orbit_budget).size();
    const bool transitive = rec.orbit_size == rec.orbit_target;

    auto witness_of = [&](const Matrix& x) -> std::optional<Matrix> {
        if (kind == ClassicalKind::o_odd) {
            if (is_reflection_matrix(x)) return x;
            const auto ord = element_order(x);
            if (ord % 2 == 0) {
                Matrix y = x.pow(ord / 2);
                if (is_reflection_matrix(y)) return y;
            }
            return std::nullopt;
        }
        if (is_transvection_matrix(x)) return x;
        Matrix s1 = su_split(x).sigma1;
        if (is_transvection_matrix(s1)) return s1;
        return std::nullopt;
    };

    // Breadth-first walk over group elements, generators first.
    const Matrix id = Matrix::identity(F, n);
    std::vector<Matrix> frontier{id};
    std::unordered_set<std::string> seen{matrix_key(id)};
    for (std::size_t head = 0; head < frontier.size() && !rec.witness && rec.elements_searched < element_budget; ++head) {
        for (const auto& g : gens) {
            Matrix x = frontier[head] * g;
            if (!seen.insert(matrix_key(x)).second) continue;
            ++rec.elements_searched;
            if (auto w = witness_of(x)) {
                rec.witness = *w;
                break;
            }
            frontier.push_back(std::move(x));
            if (rec.elements_searched >= element_budget) break;
        }
    }
    rec.equals_full_group = transitive && rec.witness.has_value();
    if (rec.equals_full_group)
        rec.reason = "transitive and contains a " + std::string(kind == ClassicalKind::o_odd ? "reflection" : "transvection");
    else if (!transitive)
        rec.reason = "orbit of size " + std::to_string(rec.orbit_size) + " out of " + std::to_string(rec.orbit_target);
    else
        rec.reason = "no witness among " + std::to_string(rec.elements_searched) + " elements";
    return rec;
}

}  // namespace fqgal
