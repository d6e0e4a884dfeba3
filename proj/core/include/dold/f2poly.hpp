#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dold/errors.hpp"

namespace dold {

using Exponent = std::uint32_t;

/// A named generator of a graded algebra together with its cohomological degree.
struct GradedVariable {
    std::string name;
    int degree = 1;
};

bool operator==(const GradedVariable& a, const GradedVariable& b);

/// Commuting monomial, stored as one exponent per ambient variable.
/// The all-zero vector is the unit.
class Monomial {
public:
    explicit Monomial(std::size_t var_count) : exp_(var_count, 0) {}
    explicit Monomial(std::vector<Exponent> exponents) : exp_(std::move(exponents)) {}

    std::size_t var_count() const { return exp_.size(); }
    Exponent exponent(std::size_t i) const { return exp_[i]; }
    const std::vector<Exponent>& exponents() const { return exp_; }
    bool is_unit() const;

    /// Total degree weighted by the variable degrees. Checked 64-bit arithmetic;
    /// overflow is a hard error.
    long long weighted_degree(std::span<const GradedVariable> vars) const;

    bool divides(const Monomial& m) const;
    Monomial times(const Monomial& m) const;       // checked exponent addition
    Monomial divided_by(const Monomial& m) const;  // pre: m.divides(*this)
    static Monomial lcm(const Monomial& a, const Monomial& b);

    /// Raw exponent-vector comparison (no grading); used only as a canonical
    /// storage order inside Polynomial.
    std::strong_ordering operator<=>(const Monomial& other) const = default;

    std::string to_string(std::span<const GradedVariable> vars) const;

private:
    std::vector<Exponent> exp_;
};

/// Compares in the graded order: weighted total degree first, ties broken
/// lexicographically on the exponent vector in declaration order (a higher
/// exponent on an earlier variable wins). Returns <0, 0, >0.
int compare_graded(const Monomial& a, const Monomial& b, std::span<const GradedVariable> vars);

/// Polynomial over the two-element field: a finite set of monomials, each with
/// implicit coefficient 1. Addition is symmetric difference. Terms are kept
/// sorted in the raw exponent order with no duplicates.
class Polynomial {
public:
    explicit Polynomial(std::size_t var_count) : nvars_(var_count) {}

    static Polynomial zero(std::size_t var_count) { return Polynomial(var_count); }
    static Polynomial from_monomial(Monomial m);
    static Polynomial from_monomials(std::size_t var_count, std::vector<Monomial> terms);

    std::size_t var_count() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Monomial>& terms() const { return terms_; }

    Polynomial plus(const Polynomial& q) const;
    Polynomial times(const Polynomial& q) const;
    Polynomial times(const Monomial& m) const;
    Polynomial power(Exponent k) const;

    bool operator==(const Polynomial& other) const = default;

    /// True when all terms share one weighted degree. The zero polynomial is
    /// homogeneous of every degree by convention.
    bool is_homogeneous(std::span<const GradedVariable> vars) const;

    /// Degree of a nonzero homogeneous polynomial; DomainError otherwise.
    long long homogeneous_degree(std::span<const GradedVariable> vars) const;

    /// Largest term under the graded order; DomainError when zero.
    const Monomial& leading_monomial(std::span<const GradedVariable> vars) const;

    std::string to_string(std::span<const GradedVariable> vars) const;

private:
    std::size_t nvars_;
    std::vector<Monomial> terms_;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);

/// Requires pairwise distinct names and degrees >= 1.
void validate_variables(std::span<const GradedVariable> vars);

/// Index of `name` in `vars`, or -1.
int variable_index(std::span<const GradedVariable> vars, std::string_view name);

/// x_i as a polynomial.
Polynomial variable_polynomial(std::size_t var_count, std::size_t index);

/// All monomials in `vars` of exact weighted degree `degree`, in raw exponent
/// order. Finite because every variable has degree >= 1.
std::vector<Monomial> monomials_of_degree(std::span<const GradedVariable> vars, long long degree);

}  // namespace dold
