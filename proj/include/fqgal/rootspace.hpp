// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fqgal/classical.hpp"
#include "fqgal/field.hpp"
#include "fqgal/matrix.hpp"
#include "fqgal/qpoly.hpp"

namespace fqgal {

/// Least e >= 1 with companion(M)^e = I, for monic M with M(0) != 0.
std::uint64_t splitting_degree(const Poly& m);

/// The F_q-space of roots of a q-polynomial inside F_(q^e).
class RootSpace {
public:
    RootSpace(QPoly source, FieldPtr ambient, std::uint64_t e, std::vector<Elem> basis);

    const QPoly& source() const { return source_; }
    const FieldPtr& ambient() const { return ambient_; }
    const Embedding& embedding() const { return emb_; }
    std::uint64_t extension_degree() const { return e_; }
    const std::vector<Elem>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    /// sum_i coords_i * basis_i.
    Elem combine(const Vec& coords) const;
    /// Root with F_q-coordinates given by vector_from_index(F_q, n, index).
    Elem root_at(std::uint64_t index) const;
    /// Number of roots, q^n.
    std::uint64_t size() const;
    /// F_q-coordinates of an element of the span; nullopt if outside.
    std::optional<Vec> coordinates(Elem a) const;

private:
    QPoly source_;
    FieldPtr ambient_;
    Embedding emb_;
    std::uint64_t e_;
    std::vector<Elem> basis_;
    Matrix expanded_;  // F_p columns omega^l * basis_i
};

/// Root space of P with c_0 != 0. The basis is the first n roots in
/// ascending encoding that are independent over F_q (kernel basis order when
/// the space has more than 2^20 elements). Throws BudgetExceeded when
/// k e exceeds max_ambient_degree.
RootSpace root_space(const QPoly& p, unsigned max_ambient_degree = 24);

/// Matrix of a -> a^q in the root basis (column j holds the coordinates of basis_j^q).
Matrix frobenius_on_roots(const RootSpace& v);

struct QuadraticFormReport {
    Elem mu = 0;
    unsigned m = 0;
    std::uint64_t ambient_degree = 0;  // e over F_q
    bool values_in_fq = false;
    bool bilinear = false;
    bool nondegenerate = false;
    bool frobenius_invariant = false;
    std::uint64_t isotropic_count = 0;
    std::uint64_t expected_isotropic = 0;
    std::optional<QuadraticForm> form;  // in the root basis, when values lie in F_q
    std::optional<Matrix> frobenius;

    bool all_pass() const {
        return values_in_fq && bilinear && nondegenerate && frobenius_invariant && isotropic_count == expected_isotropic;
    }
};

/// Evaluates Q(a) = mu a^(q^m + q^(m-1)) + f(a) on every root of L at t = mu
/// and checks F_q-values, bilinearity of the polarization (alternating for
/// even q), nondegeneracy, Frobenius invariance and the minus-type isotropic
/// count. Throws HypothesisFailed("unramified") if the x-coefficient vanishes.
QuadraticFormReport check_specialized_quadratic_form(const QPolyT& l, const SparsePoly& f, Elem mu,
                                                     unsigned max_ambient_degree = 24,
                                                     std::uint64_t pair_budget = std::uint64_t{1} << 22,
                                                     std::uint64_t seed = 0);

}  // namespace fqgal
