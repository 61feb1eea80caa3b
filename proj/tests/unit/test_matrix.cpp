// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "fqgal/errors.hpp"
#include "fqgal/intmath.hpp"
#include "fqgal/kernels.hpp"
#include "fqgal/matrix.hpp"

using namespace fqgal;

namespace {

Poly P(const FieldPtr& F, std::vector<std::int64_t> c) { return Poly::from_ints(F, c); }

std::uint64_t order_by_iteration(const Matrix& a, std::uint64_t cap) {
    Matrix x = a;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (x.is_identity()) return k;
        x = x * a;
    }
    return 0;
}

Matrix random_matrix(const FieldPtr& F, std::size_t n, std::mt19937_64& rng) {
    Matrix m(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng() % F->order());
    return m;
}

Matrix random_invertible(const FieldPtr& F, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix m = random_matrix(F, n, rng);
        if (m.determinant() != 0) return m;
    }
}

bool is_p_power(std::uint64_t v, std::uint64_t p) {
    while (v % p == 0) v /= p;
    return v == 1;
}

}  // namespace

TEST_CASE("companion examples") {
    auto F2 = Field::make(2, 1);
    CHECK(companion(P(F2, {1, 1, 1})).to_string() == "0,1;1,1");
    CHECK(companion(P(F2, {-1, 1})).to_string() == "1");
    CHECK_THROWS_AS(companion(P(Field::make(3, 1), {1, 2})), MalformedInput);
    Matrix c = companion(P(F2, {1, 1, 0, 1, 1}));
    CHECK(c.rows() == 4);
    CHECK(minimal_polynomial(c) == P(F2, {1, 1, 0, 1, 1}));
    CHECK(characteristic_polynomial(c) == P(F2, {1, 1, 0, 1, 1}));
}

TEST_CASE("parse and print") {
    auto F3 = Field::make(3, 1);
    Matrix m = parse_matrix(F3, "1,2;0,-1");
    CHECK(m.to_string() == "1,2;0,2");
    CHECK_THROWS_AS(parse_matrix(F3, "1,2;0"), MalformedInput);
}

TEST_CASE("minimal polynomial examples") {
    auto F2 = Field::make(2, 1);
    CHECK(minimal_polynomial(Matrix::identity(F2, 3)) == P(F2, {1, 1}));
    CHECK(minimal_polynomial(Matrix::from_ints(F2, {{1, 1}, {0, 1}})) == P(F2, {1, 0, 1}));
}

TEST_CASE("minimal and characteristic polynomials annihilate random matrices") {
    std::mt19937_64 rng(3);
    for (auto F : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(7, 1)}) {
        for (int i = 0; i < 60; ++i) {
            const std::size_t n = 1 + rng() % 6;
            Matrix a = random_matrix(F, n, rng);
            Poly mp = minimal_polynomial(a), cp = characteristic_polynomial(a);
            CHECK(evaluate(mp, a).is_zero());
            CHECK(evaluate(cp, a).is_zero());
            CHECK(cp.degree() == static_cast<int>(n));
            CHECK((cp % mp).is_zero());
            // No proper monic divisor of mp annihilates a.
            for (const auto& [g, e] : factor(mp).factors) CHECK_FALSE(evaluate(mp / g, a).is_zero());
            // det(A) = (-1)^n cp(0).
            Elem det = cp.coeff(0);
            if (n % 2) det = F->neg(det);
            CHECK(a.determinant() == det);
        }
    }
}

TEST_CASE("rank, inverse and kernel") {
    std::mt19937_64 rng(4);
    for (auto F : {Field::make(2, 1), Field::make(5, 1), Field::make(3, 2)}) {
        for (int i = 0; i < 40; ++i) {
            const std::size_t n = 1 + rng() % 6;
            Matrix a = random_matrix(F, n, rng);
            auto ker = a.kernel();
            CHECK(ker.size() + a.rank() == n);
            for (const auto& v : ker) {
                auto w = a.apply(v);
                for (auto x : w) CHECK(x == 0);
            }
            auto inv = a.inverse();
            CHECK(inv.has_value() == (a.determinant() != 0));
            if (inv) CHECK((a * *inv).is_identity());
        }
    }
}

TEST_CASE("scalar and vector kernels give identical eliminations") {
    std::mt19937_64 rng(5);
    auto F = Field::make(251, 1);
    const auto saved = kernels::active_isa();
    for (int i = 0; i < 20; ++i) {
        Matrix a = random_matrix(F, 24, rng), b = random_matrix(F, 24, rng);
        kernels::set_isa(kernels::Isa::scalar);
        Matrix prod_s = a * b;
        Matrix r_s = a;
        r_s.rref_in_place();
        kernels::set_isa(kernels::Isa::avx2);
        Matrix prod_v = a * b;
        Matrix r_v = a;
        r_v.rref_in_place();
        CHECK(prod_s == prod_v);
        CHECK(r_s == r_v);
    }
    kernels::set_isa(saved);
}

TEST_CASE("element order examples and iteration oracle") {
    auto F2 = Field::make(2, 1);
    CHECK(element_order(companion(P(F2, {1, 1, 1}))) == 3);
    CHECK(element_order(companion(P(F2, {1, 1, 0, 1, 1}))) == 6);
    CHECK(element_order(Matrix::identity(F2, 3)) == 1);
    CHECK_THROWS_AS(element_order(Matrix(F2, 2, 2)), MalformedInput);
    std::mt19937_64 rng(6);
    for (auto F : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(5, 1)}) {
        for (int i = 0; i < 60; ++i) {
            Matrix a = random_invertible(F, 1 + rng() % 5, rng);
            const auto ord = element_order(a);
            if (ord <= 10000) CHECK(order_by_iteration(a, 10000) == ord);
        }
    }
}

TEST_CASE("primary decomposition") {
    auto F2 = Field::make(2, 1);
    auto blocks = primary_decomposition(companion(P(F2, {1, 1, 0, 1, 1})));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].factor == P(F2, {1, 1}));
    CHECK(blocks[0].multiplicity == 2);
    CHECK(blocks[0].basis.size() == 2);
    CHECK(blocks[1].basis.size() == 2);
    CHECK(primary_decomposition(companion(P(F2, {1, 1, 1}))).size() == 1);
    auto id = primary_decomposition(Matrix::identity(F2, 3));
    REQUIRE(id.size() == 1);
    CHECK(id[0].basis.size() == 3);

    std::mt19937_64 rng(8);
    for (auto F : {Field::make(2, 1), Field::make(3, 1)}) {
        for (int i = 0; i < 40; ++i) {
            const std::size_t n = 1 + rng() % 6;
            Matrix a = random_matrix(F, n, rng);
            std::vector<Vec> all;
            for (const auto& b : primary_decomposition(a)) {
                all.insert(all.end(), b.basis.begin(), b.basis.end());
                // The restricted minimal polynomial is factor^multiplicity.
                Poly local = Poly::constant(F, 1);
                for (const auto& v : b.basis) {
                    Poly lm = local_minimal_polynomial(a, v);
                    local = (local * lm / gcd(local, lm)).monic();
                }
                CHECK(local == b.factor.pow(b.multiplicity));
            }
            CHECK(all.size() == n);
            CHECK(Matrix::from_columns(F, all).rank() == n);
        }
    }
}

TEST_CASE("su_split examples") {
    auto F2 = Field::make(2, 1);
    Matrix a = companion(P(F2, {1, 1, 0, 1, 1}));
    auto w = su_split(a);
    CHECK(w.p_power == 2);
    CHECK(w.bezout_modulus == 3);
    CHECK(w.alpha == 2);
    CHECK(w.beta == -1);
    CHECK(w.e1 == 3);
    CHECK(w.e2 == 4);
    CHECK(w.sigma1 == a.pow(3));
    CHECK(w.sigma2 == a.pow(4));
    CHECK(w.sigma1 * w.sigma2 == a);

    Matrix u = Matrix::from_ints(F2, {{1, 1}, {0, 1}});
    auto wu = su_split(u);
    CHECK(wu.sigma1 == u);
    CHECK(wu.sigma2.is_identity());

    Matrix c = companion(P(F2, {1, 1, 1}));
    auto wc = su_split(c);
    CHECK(wc.sigma1.is_identity());
    CHECK(wc.sigma2 == c);
}

TEST_CASE("su_split properties on random invertible matrices") {
    std::mt19937_64 rng(9);
    for (auto F : {Field::make(2, 1), Field::make(3, 1)}) {
        for (int i = 0; i < 100; ++i) {
            Matrix a = random_invertible(F, 1 + rng() % 6, rng);
            auto w = su_split(a);
            CHECK(w.sigma1 * w.sigma2 == a);
            CHECK(w.sigma2 * w.sigma1 == a);
            CHECK(w.sigma1 == a.pow(w.e1));
            CHECK(w.sigma2 == a.pow(w.e2));
            CHECK(is_p_power(element_order(w.sigma1), F->p()));
            CHECK(intmath::gcd(element_order(w.sigma2), F->p()) == 1);
        }
    }
}

TEST_CASE("transvection detection") {
    auto F2 = Field::make(2, 1);
    CHECK(is_transvection_matrix(Matrix::from_ints(F2, {{1, 1}, {0, 1}})));
    CHECK(is_transvection_matrix(companion(P(F2, {1, 1, 0, 1, 1})).pow(3)));
    CHECK_FALSE(is_transvection_matrix(Matrix::identity(F2, 3)));
}

TEST_CASE("cyclic vectors") {
    auto F2 = Field::make(2, 1), F3 = Field::make(3, 1);
    auto r = is_cyclic(companion(P(F3, {1, 0, 2, 1, 1})));
    CHECK(r.cyclic);
    REQUIRE(r.vector.has_value());
    CHECK(*r.vector == Vec{1, 0, 0, 0});
    CHECK_FALSE(is_cyclic(Matrix::identity(F2, 2)).cyclic);
    Matrix c = companion(P(F2, {1, 1, 1}));
    Matrix blocks(F2, 4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            blocks.set(i, j, c.at(i, j));
            blocks.set(i + 2, j + 2, c.at(i, j));
        }
    CHECK_FALSE(is_cyclic(blocks).cyclic);
    // Witness spans a Krylov basis.
    std::mt19937_64 rng(10);
    for (int i = 0; i < 30; ++i) {
        Matrix a = random_matrix(F3, 4, rng);
        auto res = is_cyclic(a);
        if (!res.cyclic) continue;
        std::vector<Vec> kry{*res.vector};
        for (int j = 1; j < 4; ++j) kry.push_back(a.apply(kry.back()));
        CHECK(Matrix::from_columns(F3, kry).rank() == 4);
    }
}
