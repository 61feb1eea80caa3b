// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqgal/matrix.hpp"

namespace fqgal {

enum class FormKind { alternating, symmetric };

struct BilinearForm {
    Matrix gram;
    FormKind kind = FormKind::alternating;

    /// B(u, w) = u^T G w.
    Elem eval(const Vec& u, const Vec& w) const;
    bool is_nondegenerate() const { return gram.determinant() != 0; }
    /// A^T G A == G.
    bool is_isometry(const Matrix& a) const;
    /// Zero diagonal and G^T = -G.
    bool is_alternating() const;
    std::string to_string() const;
};

/// Q(w) = w^T U w with U upper triangular.
struct QuadraticForm {
    Matrix upper;

    explicit QuadraticForm(Matrix u);
    Elem eval(const Vec& w) const;
    /// Gram matrix U + U^T of f(u, w) = Q(u + w) - Q(u) - Q(w).
    BilinearForm polarization() const;
    bool is_nondegenerate() const { return polarization().is_nondegenerate(); }
    /// Q(Aw) = Q(w) for all w, checked on the upper-triangular normal form of A^T U A.
    bool is_isometry(const Matrix& a) const;
    std::size_t dim() const { return upper.rows(); }
};

enum class FormType { plus, minus };

/// Hyperbolic form sum x_i y_i (plus) or m-1 hyperbolic planes and the
/// anisotropic plane x^2 + a x y + b y^2 (minus), where x^2 + a x + b is the
/// first irreducible monic quadratic in encoding order. Coordinates are
/// ordered x_1, y_1, x_2, y_2, ...
QuadraticForm standard_quadratic_form(const FieldPtr& field, unsigned m, FormType type);

/// First nondegenerate alternating B with A^T B A = B, enumerating the
/// solution space in basis order (first basis vector least significant) up
/// to `enum_cap` candidates, then by seeded random combinations.
BilinearForm invariant_alternating_form(const Matrix& a, std::uint64_t enum_cap = std::uint64_t{1} << 16,
                                        std::uint64_t seed = 0);

/// w -> w + c B(w, u) u.
Matrix sp_transvection(const Vec& u, Elem c, const BilinearForm& b);
/// w -> w - f(w, u) u, q odd, Q(u) = 1.
Matrix orth_reflection(const Vec& u, const QuadraticForm& q);
/// w -> w + f(w, u) u, q even, Q(u) = 1.
Matrix orth_transvection(const Vec& u, const QuadraticForm& q);

struct FormStatistics {
    std::uint64_t isotropic_nonzero = 0;
    std::uint64_t norm_one = 0;
    unsigned m = 0;
    FormType type = FormType::plus;
    std::uint64_t expected_isotropic = 0;
    std::uint64_t expected_norm_one = 0;
};

std::uint64_t expected_isotropic(std::uint64_t q, unsigned m, FormType type);
std::uint64_t expected_norm_one(std::uint64_t q, unsigned m, FormType type);

/// Exhaustive counts over F_q^(2m); the type is whichever closed form the
/// isotropic count matches.
FormStatistics form_statistics(const QuadraticForm& q, std::uint64_t budget = std::uint64_t{1} << 24);

/// Orbit of v under the group generated by gens, in ascending vector index.
std::vector<Vec> orbit(const std::vector<Matrix>& gens, const Vec& v, std::uint64_t budget = std::uint64_t{1} << 24);

/// All elements of the group generated by gens (breadth-first, identity first).
std::vector<Matrix> group_closure(const std::vector<Matrix>& gens, std::uint64_t budget = std::uint64_t{1} << 20);

enum class ClassicalKind { sp, o_even, o_odd };

const char* classical_kind_name(ClassicalKind k);

struct Recognition {
    bool equals_full_group = false;
    std::string group;               // e.g. "Sp(4,2)" or "O-(4,2)"
    std::uint64_t orbit_size = 0;
    std::uint64_t orbit_target = 0;  // nonzero or norm-one vector count
    std::uint64_t elements_searched = 0;
    std::optional<Matrix> witness;   // transvection or reflection found
    std::string reason;
};

/// Sufficient-criterion recognition: transitivity plus a transvection
/// (sp, o_even) or reflection (o_odd). Never reports strict containment.
/// Exactly one of `alt` / `quad` is used depending on kind.
Recognition recognize(ClassicalKind kind, const std::vector<Matrix>& gens, const std::optional<BilinearForm>& alt,
                      const std::optional<QuadraticForm>& quad, std::uint64_t element_budget = 4096,
                      std::uint64_t orbit_budget = std::uint64_t{1} << 24);

/// A reflection: order 2, fixes a hyperplane pointwise, determinant -1.
bool is_reflection_matrix(const Matrix& a);

}  // namespace fqgal
