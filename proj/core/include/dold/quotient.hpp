#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dold/f2poly.hpp"
#include "dold/groebner.hpp"

namespace dold {

/// Graded-commutative quotient of a polynomial algebra over the two-element
/// field. Coefficients mod 2 make all generators commute without signs, so odd
/// degrees need no special handling here. Construction computes the reduced
/// Groebner basis and materializes the standard-monomial bases through
/// `degree_cap`; the value is immutable afterwards and safe to share across
/// threads.
class QuotientAlgebra {
public:
    QuotientAlgebra(std::vector<GradedVariable> variables, std::vector<Polynomial> relations,
                    int degree_cap);

    const std::vector<GradedVariable>& variables() const { return vars_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    const std::vector<Polynomial>& groebner_basis() const { return groebner_; }
    int degree_cap() const { return degree_cap_; }

    int variable_index(std::string_view name) const;
    Polynomial variable(std::size_t index) const;

    /// Monomials of weighted degree `degree` not divisible by any leading term
    /// of the Groebner basis; these form a vector-space basis of the degree
    /// slice of the quotient. Requires degree <= degree_cap.
    const std::vector<Monomial>& standard_monomials(int degree) const;

    /// Canonical representative modulo the relation ideal. Zero exactly on
    /// ideal members; idempotent.
    Polynomial normal_form(const Polynomial& p) const;

    /// Entry d = dimension of the degree-d slice, for 0 <= d <= cap <= degree_cap.
    std::vector<long long> poincare_series(int cap) const;

    /// True when every variable is bounded by some pure-power leading term, so
    /// the quotient is a finite-dimensional vector space.
    bool is_finite_dimensional() const;

    /// Largest degree that can carry a standard monomial (finite-dimensional
    /// algebras only). An upper bound from pure-power leading terms, safe as an
    /// enumeration cutoff.
    long long top_degree_bound() const;

    /// Sum of all slice dimensions (finite-dimensional algebras only).
    long long total_dimension() const;

    struct DualityReport {
        bool ok = false;
        bool palindromic = false;
        bool top_dimension_one = false;
        std::vector<long long> series;
    };
    /// Checks the series is palindromic on [0, top] with a one-dimensional top
    /// slice, as holds for a closed-manifold cohomology algebra.
    DualityReport poincare_duality_check(int top) const;

    struct NilpotencyIndex {
        long long value = 0;
        bool exact = true;  // false: `value` is only a lower bound within cap_used
        int cap_used = 0;
    };
    /// Largest n with w^n nonzero in the quotient, for homogeneous w of
    /// positive degree. Exact for finite-dimensional algebras; otherwise the
    /// search stops at degree_cap and reports a lower bound.
    NilpotencyIndex nilpotency_index(const Polynomial& w) const;

private:
    std::vector<GradedVariable> vars_;
    std::vector<Polynomial> relations_;
    int degree_cap_;
    std::vector<Polynomial> groebner_;
    std::vector<std::vector<Monomial>> standard_;  // [degree]
};

/// F2[gens]/(relations spelled as exponent-vector term lists). Convenience
/// builder used by the space catalog and tests.
QuotientAlgebra make_algebra(std::vector<GradedVariable> vars,
                             const std::vector<std::vector<std::vector<Exponent>>>& relation_terms,
                             int degree_cap);

}  // namespace dold
