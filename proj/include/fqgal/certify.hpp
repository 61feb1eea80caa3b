// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fqgal/classical.hpp"
#include "fqgal/config.hpp"
#include "fqgal/matrix.hpp"
#include "fqgal/poly.hpp"
#include "fqgal/qpoly.hpp"
#include "json.hpp"

namespace fqgal {

struct Check {
    std::string name;
    bool pass = false;
    std::string evidence;
};

struct CheckReport {
    std::vector<Check> checks;

    bool all_pass() const;
    /// First failing check, or nullptr.
    const Check* first_failure() const;
    void add(std::string name, bool pass, std::string evidence = {});
};

/// Self-reciprocal, M(0) = 1, (x-1)^2 exactly, M/(x-1)^2 square-free and
/// free of x +- 1.
CheckReport admissible_symplectic(const Poly& m);
/// Symplectic conditions plus even characteristic, m >= 2 and c_m = 0.
CheckReport admissible_orthogonal_even(const Poly& m);
/// Odd characteristic, self-reciprocal, M(0) = -1, x+1 simple, every other
/// irreducible factor has roots of odd multiplicative order.
CheckReport admissible_orthogonal_odd(const Poly& m);

enum class CertKind { sp, o_even, o_odd };
const char* cert_kind_name(CertKind k);

/// Result of a certification pipeline. Certificates are only produced when
/// every hypothesis check passes; the pipelines throw HypothesisFailed naming
/// the first failing check otherwise.
struct Certificate {
    CertKind kind = CertKind::sp;
    FieldPtr field;
    unsigned m = 0;
    Poly M;
    std::vector<Check> checks;
    nlohmann::json witnesses;
    std::string theorem;
    std::string statement;

    /// Stable JSON (sorted keys, canonical orderings).
    nlohmann::json to_json() const;
};

Certificate certify_symplectic(const Poly& m, const Config& cfg = {});
Certificate certify_orthogonal_even(const Poly& m, const Config& cfg = {});
Certificate certify_orthogonal_odd(const Poly& m, const Config& cfg = {});
Certificate certify(CertKind kind, const Poly& m, const Config& cfg = {});

/// Re-derives every witness of a certificate from its inputs. The report
/// passes only if all witnesses check out and the conclusion is present.
CheckReport verify_certificate(const nlohmann::json& cert, const Config& cfg = {});

struct EnumerationReport {
    std::uint64_t q = 0;
    unsigned m = 0;
    CertKind kind = CertKind::sp;
    std::vector<Poly> f;  // the degree-m polynomials, enumeration order
    std::vector<Poly> M;  // their lifts
    std::uint64_t count = 0;
    /// (q^(m-1) -+ 1)(q-1)/(q+1) for even q; absent for odd q.
    std::optional<std::uint64_t> formula;
    /// m = 1 is reported separately from the formula comparison.
    bool formula_applies = false;
    bool all_admissible = false;

    bool formula_matches() const { return formula && *formula == count; }
};

/// Closed form for the number of admissible symplectic M of degree 2m over
/// F_q, q even.
std::uint64_t admissible_count_formula(std::uint64_t q, unsigned m);

/// Lifts every candidate f of degree m through cap_lift and keeps the
/// admissible M. Even q: monic square-free f with f(0) = 0. Odd q: monic f
/// with f(2) = 0 and f(-2) != 0.
EnumerationReport enumerate_admissible(const FieldPtr& field, unsigned m, CertKind kind = CertKind::sp,
                                       const Config& cfg = {});

struct WeylStructure {
    Poly M;
    unsigned m = 0;
    BiPoly Mt;  // M + t x^m
    IrreducibilityCertificate irreducibility;
    bool self_reciprocal_t = false;
    std::vector<std::pair<Poly, unsigned>> pattern;  // factorization of M
    /// Exactly one ramified factor, x-1 with exponent 2; all others simple.
    bool pattern_matches = false;
};

/// Throws HypothesisFailed when M is not admissible for the symplectic shape.
WeylStructure weyl_structure(const Poly& m);

struct SpecializationRecord {
    unsigned s = 0;
    Elem mu = 0;
    bool ramified = false;
    std::vector<unsigned> degrees;  // descending
    bool pair_closed = true;
    bool lcm_divides = true;
    bool degree_bound = true;
    bool even = true;  // sum (d-1) even
};

struct SurveyReport {
    std::string description;
    unsigned m = 0;  // degree / 2 for Weyl surveys, degree for monodromy
    std::uint64_t exponent_bound = 0;
    std::vector<SpecializationRecord> records;
    std::set<std::vector<unsigned>> cycle_types;
    std::vector<unsigned> sampled_levels;  // s values not enumerated exhaustively
    std::uint64_t unramified = 0;
    std::uint64_t ramified = 0;
    bool pair_closure = true;
    bool order_divisibility = true;
    bool degree_bound = true;
    bool all_even = true;

    nlohmann::json to_json() const;
};

/// Exponent of the wreath product Z_2 wr S_m: 2 lcm(1..m).
std::uint64_t wreath_exponent(unsigned m);

/// Factor-degree survey of M + mu x^m for mu in F_{q^s}, s = 1..s_max.
SurveyReport cycle_type_survey(const Poly& m, unsigned s_max, const Config& cfg = {});

/// Same machinery for f(x) + mu. Throws HypothesisFailed("squarefree") or
/// ("f(0)=0") when f leaves the setting of the survey (even q).
SurveyReport monodromy_survey(const Poly& f, unsigned s_max, const Config& cfg = {});

/// Surveys at an explicit list of levels (used to add sampled levels).
SurveyReport survey_levels(const Poly& base, bool weyl, const std::vector<unsigned>& levels, const Config& cfg);

}  // namespace fqgal
