// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fqgal/classical.hpp"
#include "fqgal/errors.hpp"

using namespace fqgal;

namespace {

Poly P(const FieldPtr& F, std::vector<std::int64_t> c) { return Poly::from_ints(F, c); }

BilinearForm standard_symplectic(const FieldPtr& F, unsigned m) {
    Matrix g(F, 2 * m, 2 * m);
    for (unsigned i = 0; i < m; ++i) {
        g.set(2 * i, 2 * i + 1, 1);
        g.set(2 * i + 1, 2 * i, F->neg(1));
    }
    return {g, FormKind::alternating};
}

std::vector<Matrix> all_sp_transvections(const BilinearForm& b) {
    const FieldPtr& F = b.gram.field();
    const std::size_t n = b.gram.rows();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= F->order();
    std::vector<Matrix> out;
    for (std::uint64_t idx = 1; idx < total; ++idx)
        for (Elem c = 1; c < F->order(); ++c) {
            Matrix t = sp_transvection(vector_from_index(F, n, idx), c, b);
            if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
        }
    return out;
}

// Sizes of conjugacy classes of `items` under the full group.
std::vector<std::size_t> class_sizes(const std::vector<Matrix>& group, const std::vector<Matrix>& items) {
    std::vector<bool> used(items.size(), false);
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (used[i]) continue;
        std::size_t count = 0;
        for (const auto& g : group) {
            Matrix c = g * items[i] * *g.inverse();
            auto it = std::find(items.begin(), items.end(), c);
            REQUIRE(it != items.end());
            const auto j = static_cast<std::size_t>(it - items.begin());
            if (!used[j]) {
                used[j] = true;
                ++count;
            }
        }
        sizes.push_back(count);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

TEST_CASE("invariant alternating forms") {
    auto F2 = Field::make(2, 1), F3 = Field::make(3, 1);
    auto b2 = invariant_alternating_form(companion(P(F2, {1, 0, 1})));
    CHECK(b2.gram.to_string() == "0,1;1,0");
    auto b3 = invariant_alternating_form(companion(P(F3, {1, 0, 1})));
    CHECK(b3.gram.to_string() == "0,1;2,0");
    Matrix c = companion(P(F2, {1, 1, 0, 1, 1}));
    auto b4 = invariant_alternating_form(c);
    CHECK(b4.is_alternating());
    CHECK(b4.is_nondegenerate());
    CHECK(b4.is_isometry(c));
    CHECK_THROWS_AS(invariant_alternating_form(companion(P(F2, {1, 1, 1, 1}))), HypothesisFailed);
}

TEST_CASE("symplectic transvections") {
    auto F2 = Field::make(2, 1), F3 = Field::make(3, 1), F5 = Field::make(5, 1);
    auto b = standard_symplectic(F2, 1);
    Matrix t = sp_transvection({1, 0}, 1, b);
    CHECK(t.to_string() == "1,1;0,1");
    CHECK(t.apply({1, 0}) == Vec{1, 0});
    CHECK(is_transvection_matrix(t));
    CHECK(b.is_isometry(t));
    CHECK_THROWS_AS(sp_transvection({0, 0}, 1, b), MalformedInput);
    CHECK_THROWS_AS(sp_transvection({1, 0}, 0, b), MalformedInput);
    auto b3 = standard_symplectic(F3, 1);
    CHECK(sp_transvection({1, 2}, 1, b3) == sp_transvection({2, 1}, 1, b3));
    // c = d^2 with v = d u gives the c = 1 transvection of v.
    auto b5 = standard_symplectic(F5, 2);
    const Vec u{1, 2, 0, 3};
    for (Elem d = 1; d < 5; ++d) {
        Vec v(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) v[i] = F5->mul(d, u[i]);
        CHECK(sp_transvection(u, F5->mul(d, d), b5) == sp_transvection(v, 1, b5));
    }
    for (const auto& tv : all_sp_transvections(b5)) {
        CHECK(element_order(tv) == 5);
        CHECK(b5.is_isometry(tv));
    }
}

TEST_CASE("reflections and orthogonal transvections") {
    auto F3 = Field::make(3, 1), F2 = Field::make(2, 1);
    QuadraticForm q(Matrix::identity(F3, 2));
    Matrix r = orth_reflection({1, 0}, q);
    CHECK(r.to_string() == "2,0;0,1");
    CHECK((r * r).is_identity());
    CHECK(r.determinant() == 2);
    CHECK(is_reflection_matrix(r));
    CHECK_THROWS_AS(orth_reflection({1, 1}, q), HypothesisFailed);

    QuadraticForm qm = standard_quadratic_form(F2, 1, FormType::minus);
    CHECK(qm.upper.to_string() == "1,1;0,1");
    Matrix t = orth_transvection({1, 0}, qm);
    for (std::uint64_t i = 0; i < 4; ++i) {
        Vec w = vector_from_index(F2, 2, i);
        CHECK(qm.eval(t.apply(w)) == qm.eval(w));
    }
    CHECK(qm.is_isometry(t));
    QuadraticForm qp = standard_quadratic_form(F2, 1, FormType::plus);
    CHECK_THROWS_AS(orth_transvection({1, 0}, qp), HypothesisFailed);
    // Valid transvections are in bijection with norm-one vectors.
    QuadraticForm q4 = standard_quadratic_form(F2, 2, FormType::minus);
    std::set<std::string> seen;
    std::uint64_t norm_one = 0;
    for (std::uint64_t i = 1; i < 16; ++i) {
        Vec w = vector_from_index(F2, 4, i);
        if (q4.eval(w) != 1) continue;
        ++norm_one;
        Matrix tv = orth_transvection(w, q4);
        CHECK(q4.is_isometry(tv));
        CHECK(is_transvection_matrix(tv));
        seen.insert(tv.to_string());
    }
    CHECK(seen.size() == norm_one);
}

TEST_CASE("quadratic form identities on random vectors") {
    std::mt19937_64 rng(21);
    for (auto F : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(5, 1)}) {
        for (auto type : {FormType::plus, FormType::minus}) {
            QuadraticForm q = standard_quadratic_form(F, 2, type);
            auto pol = q.polarization();
            for (int i = 0; i < 50; ++i) {
                Vec u(4), w(4);
                for (auto& x : u) x = rng() % F->order();
                for (auto& x : w) x = rng() % F->order();
                Vec s(4);
                for (int j = 0; j < 4; ++j) s[j] = F->add(u[j], w[j]);
                CHECK(q.eval(s) == F->add(F->add(q.eval(u), q.eval(w)), pol.eval(u, w)));
                const Elem lam = rng() % F->order();
                Vec lu(4);
                for (int j = 0; j < 4; ++j) lu[j] = F->mul(lam, u[j]);
                CHECK(q.eval(lu) == F->mul(F->mul(lam, lam), q.eval(u)));
            }
        }
    }
}

TEST_CASE("form statistics") {
    auto F2 = Field::make(2, 1);
    auto sm = form_statistics(standard_quadratic_form(F2, 2, FormType::minus));
    CHECK(sm.isotropic_nonzero == 5);
    CHECK(sm.norm_one == 10);
    CHECK(sm.type == FormType::minus);
    auto sp = form_statistics(standard_quadratic_form(F2, 2, FormType::plus));
    CHECK(sp.isotropic_nonzero == 9);
    CHECK(sp.norm_one == 6);
    CHECK(sp.type == FormType::plus);
    auto s1 = form_statistics(standard_quadratic_form(F2, 1, FormType::minus));
    CHECK(s1.isotropic_nonzero == 0);
    for (std::uint64_t q : {2, 3, 4, 5}) {
        auto F = Field::make_order(q);
        for (unsigned m = 1; m <= 2; ++m)
            for (auto type : {FormType::plus, FormType::minus}) {
                auto s = form_statistics(standard_quadratic_form(F, m, type));
                CHECK(s.type == type);
                CHECK(s.isotropic_nonzero == s.expected_isotropic);
                CHECK(s.norm_one == s.expected_norm_one);
            }
    }
    // A degenerate form matches neither count.
    Matrix deg(F2, 2, 2);
    deg.set(0, 0, 1);
    CHECK_THROWS_AS(form_statistics(QuadraticForm(deg)), HypothesisFailed);
    CHECK_THROWS_AS(form_statistics(standard_quadratic_form(F2, 2, FormType::plus), 8), BudgetExceeded);
}

TEST_CASE("orbits") {
    auto F2 = Field::make(2, 1);
    CHECK(orbit({Matrix::identity(F2, 2)}, {1, 0}).size() == 1);
    auto o = orbit({Matrix::from_ints(F2, {{1, 1}, {0, 1}}), Matrix::from_ints(F2, {{1, 0}, {1, 1}})}, {1, 0});
    CHECK(o.size() == 3);
    auto oc = orbit({companion(P(F2, {1, 1, 0, 1, 1}))}, {1, 0, 0, 0});
    CHECK(oc.size() <= 6);
    CHECK(oc.size() < 15);
}

TEST_CASE("recognition") {
    auto F2 = Field::make(2, 1);
    auto b = standard_symplectic(F2, 1);
    std::vector<Matrix> gens{Matrix::from_ints(F2, {{1, 1}, {0, 1}}), Matrix::from_ints(F2, {{1, 0}, {1, 1}})};
    auto r = recognize(ClassicalKind::sp, gens, b, std::nullopt);
    CHECK(r.equals_full_group);
    CHECK(r.group == "Sp(2,2)");
    auto ri = recognize(ClassicalKind::sp, {Matrix::identity(F2, 2)}, b, std::nullopt);
    CHECK_FALSE(ri.equals_full_group);
    Matrix bad = Matrix::from_ints(F2, {{1, 1}, {1, 0}});
    CHECK_NOTHROW(recognize(ClassicalKind::sp, {bad}, b, std::nullopt));
    Matrix not_iso = Matrix::from_ints(Field::make(3, 1), {{2, 0}, {0, 1}});
    CHECK_THROWS_AS(recognize(ClassicalKind::sp, {not_iso}, standard_symplectic(Field::make(3, 1), 1), std::nullopt), MalformedInput);
}

TEST_CASE("minus-type O(4,2) from four transvections") {
    auto F2 = Field::make(2, 1);
    QuadraticForm q = standard_quadratic_form(F2, 2, FormType::minus);
    std::vector<Matrix> all;
    for (std::uint64_t i = 1; i < 16; ++i) {
        Vec w = vector_from_index(F2, 4, i);
        if (q.eval(w) == 1) all.push_back(orth_transvection(w, q));
    }
    REQUIRE(all.size() == 10);
    // Greedy generating set in vector order.
    std::vector<Matrix> gens;
    std::size_t order = 1;
    for (const auto& t : all) {
        auto trial = gens;
        trial.push_back(t);
        const auto sz = group_closure(trial).size();
        if (sz > order) {
            gens = trial;
            order = sz;
        }
    }
    CHECK(order == 120);
    CHECK(gens.size() == 4);
    auto group = group_closure(gens);
    std::size_t transvections = 0;
    for (const auto& g : group) transvections += is_transvection_matrix(g);
    CHECK(transvections == 10);
    auto r = recognize(ClassicalKind::o_even, gens, std::nullopt, q);
    CHECK(r.equals_full_group);
    CHECK(r.group == "O-(4,2)");
}

TEST_CASE("transvection classes in small symplectic groups") {
    struct Case {
        std::uint64_t q;
        unsigned m;
        std::size_t group_order;
        std::vector<std::size_t> classes;
    };
    for (const auto& c : {Case{2, 1, 6, {3}}, Case{3, 1, 24, {4, 4}}, Case{2, 2, 720, {15}}}) {
        auto F = Field::make_order(c.q);
        auto b = standard_symplectic(F, c.m);
        auto tv = all_sp_transvections(b);
        auto group = group_closure(tv);
        CHECK(group.size() == c.group_order);
        std::vector<Matrix> found;
        for (const auto& g : group)
            if (is_transvection_matrix(g)) found.push_back(g);
        CHECK(found.size() == tv.size());
        CHECK(class_sizes(group, found) == c.classes);
    }
}

TEST_CASE("conjugation transports transvections") {
    std::mt19937_64 rng(22);
    for (auto [q, m] : {std::pair{2u, 2u}, std::pair{3u, 1u}}) {
        auto F = Field::make_order(q);
        auto b = standard_symplectic(F, m);
        auto group = group_closure(all_sp_transvections(b));
        const std::size_t n = 2 * m;
        std::uint64_t space = 1;
        for (std::size_t j = 0; j < n; ++j) space *= q;
        for (int i = 0; i < 40; ++i) {
            const Matrix& g = group[rng() % group.size()];
            const Vec u = vector_from_index(F, n, 1 + rng() % (space - 1));
            const Elem c = 1 + rng() % (q - 1);
            Vec v = g.apply(u);
            CHECK(g * sp_transvection(u, c, b) * *g.inverse() == sp_transvection(v, c, b));
        }
    }
}
