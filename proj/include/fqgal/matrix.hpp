// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fqgal/field.hpp"
#include "fqgal/poly.hpp"

namespace fqgal {

using Vec = std::vector<Elem>;

/// Dense matrix over a finite field of order < 2^32, row-major. Matrices act
/// on column vectors. Prime-field row operations go through the dispatched
/// SIMD kernels.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldPtr field, std::size_t n);
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows);
    static Matrix from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows);
    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(FieldPtr field, const std::vector<Vec>& cols);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Elem v) { data_[r * cols_ + c] = static_cast<std::uint32_t>(v); }
    std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    const std::vector<std::uint32_t>& data() const { return data_; }
    Vec column(std::size_t c) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scale(Elem s) const;
    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    Matrix pow(std::uint64_t e) const;
    bool is_identity() const;
    bool is_zero() const;
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Reduced row echelon form with first-nonzero pivoting; returns pivot columns.
    std::vector<std::size_t> rref_in_place();
    std::size_t rank() const;
    Elem determinant() const;
    std::optional<Matrix> inverse() const;
    /// Null space basis (column vectors), one per free column in ascending order.
    std::vector<Vec> kernel() const;

    /// Rows of comma-separated encodings joined by ';'.
    std::string to_string() const;

private:
    void row_axpy(std::size_t dst, std::span<const std::uint32_t> src, Elem s);
    void row_scale(std::size_t r, Elem s);
    void swap_rows(std::size_t a, std::size_t b);

    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

Matrix parse_matrix(const FieldPtr& field, const std::string& text);

/// Multiplication-by-x matrix in the basis 1, x, ..., x^(n-1).
Matrix companion(const Poly& m);

/// p(A) by Horner's rule.
Matrix evaluate(const Poly& p, const Matrix& a);

/// Monic annihilator of v under A (Krylov chain).
Poly local_minimal_polynomial(const Matrix& a, const Vec& v);
Poly minimal_polynomial(const Matrix& a);
Poly characteristic_polynomial(const Matrix& a);

/// Multiplicative order of x modulo an irreducible g with g(0) != 0.
std::uint64_t order_of_x_mod(const Poly& g);

/// Order of an invertible matrix from its minimal polynomial:
/// p^ceil(log_p r_max) times the lcm of the orders of x modulo each factor.
std::uint64_t element_order(const Matrix& a);

struct PrimaryBlock {
    Poly factor;
    unsigned multiplicity;
    std::vector<Vec> basis;  // basis of ker factor(A)^multiplicity
};

std::vector<PrimaryBlock> primary_decomposition(const Matrix& a);

struct SplitWitness {
    Matrix sigma1;  // unipotent part, A^e1
    Matrix sigma2;  // p-regular part, A^e2
    std::uint64_t e1 = 0;
    std::uint64_t e2 = 0;
    std::uint64_t order = 0;  // order of A
    std::int64_t alpha = 0;   // alpha * p^a + beta * modulus = 1
    std::int64_t beta = 0;
    std::uint64_t p_power = 1;  // p^a
    unsigned d = 1;             // lcm of irreducible factor degrees
    /// q^d - 1 when it fits in 64 bits, otherwise the p-regular part of the
    /// order (which divides q^d - 1 and yields the same exponents).
    std::uint64_t bezout_modulus = 1;
    bool modulus_is_qd_minus_1 = true;
};

/// Commuting unipotent / p-regular factorization with both factors powers of A.
SplitWitness su_split(const Matrix& a);

/// Minimal polynomial (x-1)^2 and rank(A - I) = 1.
bool is_transvection_matrix(const Matrix& a);

struct CyclicResult {
    bool cyclic = false;
    std::optional<Vec> vector;
};

/// Cyclic iff the minimal polynomial has degree n. The witness is the first
/// vector in enumeration order (e_1 least significant) whose annihilator is
/// the minimal polynomial, searched up to `budget` vectors and then by seeded
/// random sampling.
CyclicResult is_cyclic(const Matrix& a, std::uint64_t budget = std::uint64_t{1} << 16, std::uint64_t seed = 0);

/// Vector <-> index with coordinate 0 least significant, base |F|.
Vec vector_from_index(const FieldPtr& field, std::size_t n, std::uint64_t index);
std::uint64_t vector_index(const FieldPtr& field, const Vec& v);

}  // namespace fqgal
