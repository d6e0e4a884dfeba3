#include "dold/quotient.hpp"

#include <algorithm>

namespace dold {

QuotientAlgebra::QuotientAlgebra(std::vector<GradedVariable> variables,
                                 std::vector<Polynomial> relations, int degree_cap)
    : vars_(std::move(variables)), degree_cap_(degree_cap) {
    validate_variables(vars_);
    if (degree_cap_ < 0) throw DomainError("degree_cap must be non-negative");
    for (Polynomial& r : relations) {
        if (r.var_count() != vars_.size())
            throw DomainError("relation arity does not match the variable list");
        if (r.is_zero()) continue;
        if (!r.is_homogeneous(vars_))
            throw DomainError("relation is not homogeneous: " + r.to_string(vars_));
        relations_.push_back(std::move(r));
    }
    groebner_ = buchberger_reduced(relations_, vars_);
    for (const Polynomial& r : relations_) {
        if (!normal_form(r).is_zero())
            throw Error("internal: relation does not reduce to zero");
    }
    standard_.resize(static_cast<std::size_t>(degree_cap_) + 1);
    std::vector<const Monomial*> leads;
    leads.reserve(groebner_.size());
    for (const Polynomial& g : groebner_) leads.push_back(&g.leading_monomial(vars_));
    for (int d = 0; d <= degree_cap_; ++d) {
        for (Monomial& m : monomials_of_degree(vars_, d)) {
            bool reducible = std::any_of(leads.begin(), leads.end(),
                                         [&](const Monomial* l) { return l->divides(m); });
            if (!reducible) standard_[static_cast<std::size_t>(d)].push_back(std::move(m));
        }
    }
}

int QuotientAlgebra::variable_index(std::string_view name) const {
    return dold::variable_index(vars_, name);
}

Polynomial QuotientAlgebra::variable(std::size_t index) const {
    return variable_polynomial(vars_.size(), index);
}

const std::vector<Monomial>& QuotientAlgebra::standard_monomials(int degree) const {
    if (degree < 0 || degree > degree_cap_)
        throw DomainError("degree outside the materialized range");
    return standard_[static_cast<std::size_t>(degree)];
}

Polynomial QuotientAlgebra::normal_form(const Polynomial& p) const {
    if (p.var_count() != vars_.size())
        throw DomainError("polynomial arity does not match the algebra");
    return dold::normal_form(p, groebner_, vars_);
}

std::vector<long long> QuotientAlgebra::poincare_series(int cap) const {
    if (cap < 0 || cap > degree_cap_)
        throw DomainError("series cap outside the materialized range");
    std::vector<long long> series(static_cast<std::size_t>(cap) + 1);
    for (int d = 0; d <= cap; ++d)
        series[static_cast<std::size_t>(d)] =
            static_cast<long long>(standard_[static_cast<std::size_t>(d)].size());
    return series;
}

bool QuotientAlgebra::is_finite_dimensional() const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        bool bounded = false;
        for (const Polynomial& g : groebner_) {
            const Monomial& l = g.leading_monomial(vars_);
            bool pure = l.exponent(i) > 0;
            for (std::size_t j = 0; j < vars_.size() && pure; ++j)
                if (j != i && l.exponent(j) > 0) pure = false;
            if (pure) {
                bounded = true;
                break;
            }
        }
        if (!bounded) return false;
    }
    return true;
}

long long QuotientAlgebra::top_degree_bound() const {
    if (!is_finite_dimensional())
        throw DomainError("algebra is not finite-dimensional");
    long long top = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        Exponent bound = 0;
        for (const Polynomial& g : groebner_) {
            const Monomial& l = g.leading_monomial(vars_);
            bool pure = l.exponent(i) > 0;
            for (std::size_t j = 0; j < vars_.size() && pure; ++j)
                if (j != i && l.exponent(j) > 0) pure = false;
            if (pure && (bound == 0 || l.exponent(i) < bound)) bound = l.exponent(i);
        }
        top += static_cast<long long>(bound - 1) * vars_[i].degree;
    }
    return top;
}

long long QuotientAlgebra::total_dimension() const {
    long long top = top_degree_bound();
    if (top > degree_cap_)
        throw DomainError("degree_cap too small to hold the whole algebra");
    long long total = 0;
    for (long long d = 0; d <= top; ++d)
        total += static_cast<long long>(standard_[static_cast<std::size_t>(d)].size());
    return total;
}

QuotientAlgebra::DualityReport QuotientAlgebra::poincare_duality_check(int top) const {
    DualityReport report;
    report.series = poincare_series(top);
    report.palindromic = true;
    for (int d = 0; d <= top; ++d) {
        if (report.series[static_cast<std::size_t>(d)] !=
            report.series[static_cast<std::size_t>(top - d)]) {
            report.palindromic = false;
            break;
        }
    }
    report.top_dimension_one = report.series[static_cast<std::size_t>(top)] == 1;
    report.ok = report.palindromic && report.top_dimension_one;
    return report;
}

QuotientAlgebra::NilpotencyIndex QuotientAlgebra::nilpotency_index(const Polynomial& w) const {
    NilpotencyIndex result;
    result.cap_used = degree_cap_;
    Polynomial base = normal_form(w);
    if (base.is_zero()) return result;  // index 0, exact
    long long deg = base.homogeneous_degree(vars_);
    if (deg <= 0) throw DomainError("nilpotency index requires positive degree");

    const bool finite = is_finite_dimensional();
    const long long stop_degree = finite ? top_degree_bound() : degree_cap_;

    Polynomial power = base;
    long long n = 1;
    while (true) {
        long long next_degree = deg * (n + 1);
        if (next_degree > stop_degree) {
            if (finite) return {n, true, result.cap_used};  // w^{n+1} = 0 on degree grounds
            return {n, false, result.cap_used};             // only a bound within the cap
        }
        Polynomial next = normal_form(power.times(base));
        if (next.is_zero()) return {n, true, result.cap_used};
        power = std::move(next);
        ++n;
    }
}

QuotientAlgebra make_algebra(std::vector<GradedVariable> vars,
                             const std::vector<std::vector<std::vector<Exponent>>>& relation_terms,
                             int degree_cap) {
    std::vector<Polynomial> relations;
    relations.reserve(relation_terms.size());
    for (const auto& terms : relation_terms) {
        std::vector<Monomial> monomials;
        monomials.reserve(terms.size());
        for (const auto& exps : terms) {
            if (exps.size() != vars.size())
                throw DomainError("exponent vector arity mismatch");
            monomials.emplace_back(exps);
        }
        relations.push_back(Polynomial::from_monomials(vars.size(), std::move(monomials)));
    }
    return QuotientAlgebra(std::move(vars), std::move(relations), degree_cap);
}

}  // namespace dold
