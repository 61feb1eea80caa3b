// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fqgal/bivar.hpp"
#include "fqgal/field.hpp"
#include "fqgal/poly.hpp"

namespace fqgal {

/// Linearized polynomial sum_i c_i x^(q^i) with coefficients in F_q, where q
/// is the order of the coefficient field.
class QPoly {
public:
    QPoly(FieldPtr field, std::vector<Elem> qcoeffs);

    const FieldPtr& field() const { return field_; }
    std::uint64_t base_q() const { return field_->order(); }
    int qdegree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Elem>& qcoeffs() const { return c_; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    friend bool operator==(const QPoly& a, const QPoly& b) {
        return a.field_->same_as(*b.field_) && a.c_ == b.c_;
    }

    /// "q=<p^k>:c0,c1,..." (a modulus is appended to the header for k > 1).
    std::string to_string() const;

private:
    FieldPtr field_;
    std::vector<Elem> c_;
};

QPoly parse_qpoly(const std::string& text);

/// Linearized polynomial whose coefficients lie in F_q[t].
class QPolyT {
public:
    QPolyT(FieldPtr field, std::vector<Poly> qcoeffs);

    const FieldPtr& field() const { return field_; }
    std::uint64_t base_q() const { return field_->order(); }
    int qdegree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Poly>& qcoeffs() const { return c_; }
    Poly coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Poly(field_); }
    friend bool operator==(const QPolyT& a, const QPolyT& b);

    /// t = mu with mu in F_q.
    QPoly specialize(Elem mu) const;
    /// Dense bivariate form sum_i c_i(t) x^(q^i).
    BiPoly to_bipoly() const;

    /// t-polynomials in comma form joined by ';'.
    std::string to_string() const;

private:
    FieldPtr field_;
    std::vector<Poly> c_;
};

/// sum c_i x^i.
Poly associate(const QPoly& p);
/// Inverse of associate.
QPoly from_associate(const Poly& m);

/// P(a) for a in the target of an embedding of F_q.
Elem qeval(const QPoly& p, Elem a, const Embedding& emb);

struct PalindromeReport {
    bool palindromic = false;       // c_i = c_{2m-i}
    bool anti_palindromic = false;  // c_i = -c_{2m-i}
    bool middle_zero = false;       // c_m = 0
    unsigned m = 0;
};

/// Symmetry class of a monic q-polynomial of even q-degree 2m with c_0 != 0.
PalindromeReport palindrome_class(const QPoly& p);

/// Phi + t x^(q^m) with Phi = from_associate(M), M monic self-reciprocal of
/// degree 2m with M(0) = 1.
QPolyT build_L_symplectic(const Poly& m);

/// Phi + t^q x^(q^(m+1)) - t x^(q^(m-1)) for anti-palindromic Phi of
/// q-degree 2m with m >= 2 and c_m = 0.
QPolyT build_L_orthogonal(const QPoly& phi);

/// Polynomial with few terms of possibly huge degree, exponent -> coefficient.
struct SparsePoly {
    FieldPtr field;
    std::map<std::uint64_t, Elem> terms;

    std::uint64_t degree() const { return terms.empty() ? 0 : terms.rbegin()->first; }
    Elem coeff(std::uint64_t e) const;
    void add_term(std::uint64_t e, Elem c);
    Elem eval(Elem a, const Embedding& emb) const;
    /// Dense copy; throws BudgetExceeded above max_degree.
    Poly to_dense(std::uint64_t max_degree = std::uint64_t{1} << 22) const;
    /// "exp:coeff" pairs in ascending exponent order, comma separated.
    std::string to_string() const;
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms == b.terms; }
};

SparsePoly parse_sparse(const FieldPtr& field, const std::string& text);
SparsePoly sparse_from(const Poly& f);

/// The monic f with f(0) = 0 and f^q - f = x^(q^m) Phi for anti-palindromic
/// Phi of q-degree 2m with c_m = 0.
SparsePoly artin_schreier_lift(const QPoly& phi);

/// Exact check of f^q - f == x^(q^m) Phi on sparse representations.
bool check_artin_schreier(const QPoly& phi, const SparsePoly& f);

struct WedgeFactor {
    Elem lambda = 0;
    BiPoly factor;              // t x^(q^m+q^(m-1)) + f + lambda, divided by x^(q^m+1) when lambda = 0
    std::uint64_t degree_x = 0;
    IrreducibilityCertificate certificate;
};

struct WedgeReport {
    bool identity_holds = false;
    bool x_power_divides = false;  // x^(q^m+1) | f
    std::uint64_t reduced_degree = 0;
    std::uint64_t expected_reduced_degree = 0;  // (q^(m-1)-1)(q^m+1)
    std::uint64_t expected_other_degree = 0;    // q^(m-1)(q^m+1)
    std::vector<WedgeFactor> factors;            // lambda in encoding order
    bool degrees_match = false;
};

/// Checks x^(q^m) L = prod_lambda (t x^(q^m+q^(m-1)) + f + lambda) exactly and
/// reports factor degrees with per-factor irreducibility certificates. Throws
/// HypothesisFailed("wedge-identity") when the identity fails.
WedgeReport verify_wedge_factorization(const QPolyT& l, const SparsePoly& f);

}  // namespace fqgal
