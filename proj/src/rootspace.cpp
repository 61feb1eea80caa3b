// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqgal/rootspace.hpp"

#include <algorithm>
#include <random>

#include "fqgal/errors.hpp"
#include "fqgal/intmath.hpp"

namespace fqgal {

std::uint64_t splitting_degree(const Poly& m) {
    if (!m.is_monic() || m.degree() < 1) throw MalformedInput("splitting degree needs a monic polynomial of degree >= 1");
    if (m.coeff(0) == 0) throw MalformedInput("splitting degree needs M(0) != 0");
    return element_order(companion(m));
}

namespace {

Matrix expand_over_prime_field(const Field& ambient, const Embedding& emb, const std::vector<Elem>& basis) {
    const unsigned k = emb.source()->k();
    const unsigned big_k = ambient.k();
    Matrix m(Field::make(ambient.p(), 1), big_k, basis.size() * k);
    std::uint64_t omega_pow = 1;  // encoding of omega^l in F_q
    std::vector<Elem> omegas;
    for (unsigned l = 0; l < k; ++l, omega_pow *= emb.source()->p()) omegas.push_back(emb(omega_pow));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (unsigned l = 0; l < k; ++l) {
            auto c = ambient.coords(ambient.mul(omegas[l], basis[i]));
            for (unsigned r = 0; r < big_k; ++r) m.set(r, i * k + l, c[r]);
        }
    return m;
}

}  // namespace

RootSpace::RootSpace(QPoly source, FieldPtr ambient, std::uint64_t e, std::vector<Elem> basis)
    : source_(std::move(source)),
      ambient_(std::move(ambient)),
      emb_(embed(source_.field(), ambient_)),
      e_(e),
      basis_(std::move(basis)),
      expanded_(expand_over_prime_field(*ambient_, emb_, basis_)) {}

Elem RootSpace::combine(const Vec& coords) const {
    const Field& A = *ambient_;
    Elem acc = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (coords[i]) acc = A.add(acc, A.mul(emb_(coords[i]), basis_[i]));
    return acc;
}

Elem RootSpace::root_at(std::uint64_t index) const {
    return combine(vector_from_index(source_.field(), basis_.size(), index));
}

std::uint64_t RootSpace::size() const {
    auto s = intmath::checked_pow(source_.base_q(), static_cast<unsigned>(basis_.size()));
    if (!s) throw BudgetExceeded("root space too large to count");
    return *s;
}

std::optional<Vec> RootSpace::coordinates(Elem a) const {
    const unsigned k = source_.field()->k();
    const std::size_t cols = expanded_.cols();
    Matrix aug(expanded_.field(), expanded_.rows(), cols + 1);
    for (std::size_t r = 0; r < expanded_.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) aug.set(r, c, expanded_.at(r, c));
    const auto target = ambient_->coords(a);
    for (std::size_t r = 0; r < expanded_.rows(); ++r) aug.set(r, cols, target[r]);
    const auto pivots = aug.rref_in_place();
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    std::vector<std::uint32_t> x(cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = static_cast<std::uint32_t>(aug.at(r, cols));
    Vec out(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        out[i] = source_.field()->from_coords(std::span<const std::uint32_t>(x.data() + i * k, k));
    return out;
}

RootSpace root_space(const QPoly& p, unsigned max_ambient_degree) {
    if (p.coeff(0) == 0) throw MalformedInput("root space needs c_0 != 0");
    const FieldPtr& F = p.field();
    const Poly assoc = associate(p);
    const std::uint64_t e = assoc.degree() >= 1 ? splitting_degree(assoc.monic()) : 1;
    const std::uint64_t big_k = e * F->k();
    if (big_k > max_ambient_degree)
        throw BudgetExceeded("ambient degree " + std::to_string(big_k) + " exceeds the limit " + std::to_string(max_ambient_degree));
    FieldPtr ambient = Field::make(F->p(), static_cast<unsigned>(big_k));
    const Embedding emb = embed(F, ambient);
    const auto n = static_cast<std::size_t>(std::max(p.qdegree(), 0));

    // Kernel of the F_p-linear map a -> P(a) on the ambient field.
    FieldPtr fp = Field::make(F->p(), 1);
    Matrix map(fp, big_k, big_k);
    std::uint64_t unit = 1;
    for (std::uint64_t j = 0; j < big_k; ++j, unit *= F->p()) {
        const auto c = ambient->coords(qeval(p, unit, emb));
        for (std::uint64_t r = 0; r < big_k; ++r) map.set(r, j, c[r]);
    }
    std::vector<Elem> kernel;
    for (const auto& v : map.kernel()) {
        std::vector<std::uint32_t> c(v.begin(), v.end());
        kernel.push_back(ambient->from_coords(c));
    }
    if (kernel.size() != n * F->k()) throw std::logic_error("root space has unexpected dimension");

    std::vector<Elem> candidates;
    auto count = intmath::checked_pow(F->order(), static_cast<unsigned>(n));
    if (count && *count <= (std::uint64_t{1} << 20)) {
        for (std::uint64_t idx = 1; idx < *count; ++idx) {
            const Vec c = vector_from_index(fp, kernel.size(), idx);
            Elem a = 0;
            for (std::size_t i = 0; i < kernel.size(); ++i)
                if (c[i]) a = ambient->add(a, ambient->mul(c[i], kernel[i]));
            candidates.push_back(a);
        }
        std::sort(candidates.begin(), candidates.end());
    } else {
        candidates = kernel;
    }
    std::vector<Elem> basis;
    for (Elem r : candidates) {
        if (basis.size() == n) break;
        auto trial = basis;
        trial.push_back(r);
        if (expand_over_prime_field(*ambient, emb, trial).rank() == trial.size() * F->k()) basis = std::move(trial);
    }
    return RootSpace(p, ambient, e, std::move(basis));
}

Matrix frobenius_on_roots(const RootSpace& v) {
    const std::size_t n = v.dim();
    Matrix m(v.source().field(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto c = v.coordinates(v.ambient()->pow(v.basis()[j], v.source().base_q()));
        if (!c) throw std::logic_error("root space is not closed under Frobenius");
        for (std::size_t i = 0; i < n; ++i) m.set(i, j, (*c)[i]);
    }
    return m;
}

QuadraticFormReport check_specialized_quadratic_form(const QPolyT& l, const SparsePoly& f, Elem mu,
                                                     unsigned max_ambient_degree, std::uint64_t pair_budget,
                                                     std::uint64_t seed) {
    const FieldPtr& F = l.field();
    const QPoly lmu = l.specialize(mu);
    if (lmu.coeff(0) == 0) throw HypothesisFailed("unramified", "x-coefficient vanishes at t = " + std::to_string(mu));
    if (lmu.qdegree() < 2 || lmu.qdegree() % 2) throw MalformedInput("quadratic form check needs q-degree 2m");
    const RootSpace v = root_space(lmu, max_ambient_degree);
    const Field& A = *v.ambient();
    const Embedding& emb = v.embedding();
    const std::uint64_t q = F->order();

    QuadraticFormReport rep;
    rep.mu = mu;
    rep.m = static_cast<unsigned>(lmu.qdegree() / 2);
    rep.ambient_degree = v.extension_degree();
    rep.expected_isotropic = expected_isotropic(q, rep.m, FormType::minus);
    const std::uint64_t wedge = *intmath::checked_pow(q, rep.m) + *intmath::checked_pow(q, rep.m - 1);
    const Elem mu_big = emb(mu);
    auto qval = [&](Elem a) { return A.add(A.mul(mu_big, A.pow(a, wedge)), f.eval(a, emb)); };

    const std::uint64_t total = v.size();
    const std::size_t n = v.dim();
    std::vector<Elem> values(total);
    rep.values_in_fq = true;
    rep.frobenius_invariant = true;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const Elem a = v.root_at(idx);
        const Elem val = qval(a);
        auto pre = emb.preimage(val);
        if (!pre) {
            rep.values_in_fq = false;
        } else {
            values[idx] = *pre;
            if (idx && *pre == 0) ++rep.isotropic_count;
        }
        if (qval(A.pow(a, q)) != val) rep.frobenius_invariant = false;
    }
    if (!rep.values_in_fq) return rep;

    // Polarization C(a, b) = Q(a+b) - Q(a) - Q(b) through the index of the sum.
    auto index_of_sum = [&](std::uint64_t i, std::uint64_t j) {
        Vec a = vector_from_index(F, n, i), b = vector_from_index(F, n, j);
        for (std::size_t k = 0; k < n; ++k) a[k] = F->add(a[k], b[k]);
        return vector_index(F, a);
    };
    auto polar = [&](std::uint64_t i, std::uint64_t j) {
        return F->sub(F->sub(values[index_of_sum(i, j)], values[i]), values[j]);
    };
    std::vector<std::uint64_t> unit_index(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        unit_index[i] = vector_index(F, e);
    }
    Matrix gram(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram.set(i, j, polar(unit_index[i], unit_index[j]));
    const BilinearForm bf{gram, q % 2 == 0 ? FormKind::alternating : FormKind::symmetric};

    rep.bilinear = gram == gram.transpose();
    auto check_pair = [&](std::uint64_t i, std::uint64_t j) {
        if (polar(i, j) != bf.eval(vector_from_index(F, n, i), vector_from_index(F, n, j))) rep.bilinear = false;
    };
    if (total * total <= pair_budget) {
        for (std::uint64_t i = 0; i < total && rep.bilinear; ++i)
            for (std::uint64_t j = 0; j < total; ++j) check_pair(i, j);
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << 16) && rep.bilinear; ++s) check_pair(rng() % total, rng() % total);
    }
    if (q % 2 == 0)
        for (std::uint64_t i = 0; i < total; ++i)
            if (polar(i, i) != 0) rep.bilinear = false;
    rep.nondegenerate = gram.determinant() != 0;

    Matrix upper(F, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        upper.set(i, i, values[unit_index[i]]);
        for (std::size_t j = i + 1; j < n; ++j) upper.set(i, j, gram.at(i, j));
    }
    rep.form = QuadraticForm(upper);
    rep.frobenius = frobenius_on_roots(v);
    return rep;
}

}  // namespace fqgal
