#include "dold/f2poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace dold {

namespace {

void require_same_vars(const Polynomial& p, const Polynomial& q) {
    if (p.var_count() != q.var_count())
        throw DomainError("polynomial arithmetic across different variable sets");
}

}  // namespace

bool operator==(const GradedVariable& a, const GradedVariable& b) {
    return a.name == b.name && a.degree == b.degree;
}

bool Monomial::is_unit() const {
    return std::all_of(exp_.begin(), exp_.end(), [](Exponent e) { return e == 0; });
}

long long Monomial::weighted_degree(std::span<const GradedVariable> vars) const {
    if (vars.size() != exp_.size())
        throw DomainError("monomial/variable arity mismatch");
    long long total = 0;
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        long long contribution = static_cast<long long>(exp_[i]) * vars[i].degree;
        if (total > std::numeric_limits<long long>::max() - contribution)
            throw DomainError("weighted degree overflow");
        total += contribution;
    }
    return total;
}

bool Monomial::divides(const Monomial& m) const {
    if (var_count() != m.var_count())
        throw DomainError("monomial divisibility across different variable sets");
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > m.exp_[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& m) const {
    if (var_count() != m.var_count())
        throw DomainError("monomial product across different variable sets");
    std::vector<Exponent> out(exp_.size());
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        Exponent sum = exp_[i] + m.exp_[i];
        if (sum < exp_[i])
            throw DomainError("exponent overflow");
        out[i] = sum;
    }
    return Monomial(std::move(out));
}

Monomial Monomial::divided_by(const Monomial& m) const {
    if (!m.divides(*this))
        throw DomainError("monomial division with remainder");
    std::vector<Exponent> out(exp_.size());
    for (std::size_t i = 0; i < exp_.size(); ++i) out[i] = exp_[i] - m.exp_[i];
    return Monomial(std::move(out));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.var_count() != b.var_count())
        throw DomainError("monomial lcm across different variable sets");
    std::vector<Exponent> out(a.exp_.size());
    for (std::size_t i = 0; i < a.exp_.size(); ++i) out[i] = std::max(a.exp_[i], b.exp_[i]);
    return Monomial(std::move(out));
}

std::string Monomial::to_string(std::span<const GradedVariable> vars) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        if (exp_[i] == 0) continue;
        if (!first) os << "*";
        os << vars[i].name;
        if (exp_[i] > 1) os << "^" << exp_[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

int compare_graded(const Monomial& a, const Monomial& b, std::span<const GradedVariable> vars) {
    long long da = a.weighted_degree(vars);
    long long db = b.weighted_degree(vars);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.var_count(); ++i) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) < b.exponent(i) ? -1 : 1;
    }
    return 0;
}

Polynomial Polynomial::from_monomial(Monomial m) {
    Polynomial p(m.var_count());
    p.terms_.push_back(std::move(m));
    return p;
}

Polynomial Polynomial::from_monomials(std::size_t var_count, std::vector<Monomial> terms) {
    for (const Monomial& t : terms)
        if (t.var_count() != var_count)
            throw DomainError("term arity mismatch");
    std::sort(terms.begin(), terms.end());
    // duplicates cancel in pairs mod 2
    std::vector<Monomial> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(terms[i]);
        i = j;
    }
    Polynomial p(var_count);
    p.terms_ = std::move(out);
    return p;
}

Polynomial Polynomial::plus(const Polynomial& q) const {
    require_same_vars(*this, q);
    Polynomial out(nvars_);
    out.terms_.reserve(terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < q.terms_.size()) {
        auto cmp = terms_[i] <=> q.terms_[j];
        if (cmp == std::strong_ordering::less) {
            out.terms_.push_back(terms_[i++]);
        } else if (cmp == std::strong_ordering::greater) {
            out.terms_.push_back(q.terms_[j++]);
        } else {
            ++i;
            ++j;  // equal terms cancel
        }
    }
    out.terms_.insert(out.terms_.end(), terms_.begin() + i, terms_.end());
    out.terms_.insert(out.terms_.end(), q.terms_.begin() + j, q.terms_.end());
    return out;
}

Polynomial Polynomial::times(const Monomial& m) const {
    std::vector<Monomial> shifted;
    shifted.reserve(terms_.size());
    for (const Monomial& t : terms_) shifted.push_back(t.times(m));
    return from_monomials(nvars_, std::move(shifted));
}

Polynomial Polynomial::times(const Polynomial& q) const {
    require_same_vars(*this, q);
    std::vector<Monomial> products;
    products.reserve(terms_.size() * q.terms_.size());
    for (const Monomial& a : terms_)
        for (const Monomial& b : q.terms_) products.push_back(a.times(b));
    return from_monomials(nvars_, std::move(products));
}

Polynomial Polynomial::power(Exponent k) const {
    Polynomial result = from_monomial(Monomial(nvars_));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u) result = result.times(base);
        k >>= 1u;
        if (k > 0) base = base.times(base);
    }
    return result;
}

bool Polynomial::is_homogeneous(std::span<const GradedVariable> vars) const {
    if (terms_.empty()) return true;
    long long d = terms_.front().weighted_degree(vars);
    for (const Monomial& t : terms_)
        if (t.weighted_degree(vars) != d) return false;
    return true;
}

long long Polynomial::homogeneous_degree(std::span<const GradedVariable> vars) const {
    if (terms_.empty())
        throw DomainError("zero polynomial has no single degree");
    if (!is_homogeneous(vars))
        throw DomainError("polynomial is not homogeneous");
    return terms_.front().weighted_degree(vars);
}

const Monomial& Polynomial::leading_monomial(std::span<const GradedVariable> vars) const {
    if (terms_.empty())
        throw DomainError("zero polynomial has no leading monomial");
    const Monomial* best = &terms_.front();
    for (const Monomial& t : terms_)
        if (compare_graded(t, *best, vars) > 0) best = &t;
    return *best;
}

std::string Polynomial::to_string(std::span<const GradedVariable> vars) const {
    if (terms_.empty()) return "0";
    // print largest term first
    std::vector<const Monomial*> order;
    order.reserve(terms_.size());
    for (const Monomial& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [&](const Monomial* a, const Monomial* b) {
        return compare_graded(*a, *b, vars) > 0;
    });
    std::ostringstream os;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) os << " + ";
        os << order[i]->to_string(vars);
    }
    return os.str();
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) { return p.plus(q); }
Polynomial operator*(const Polynomial& p, const Polynomial& q) { return p.times(q); }

void validate_variables(std::span<const GradedVariable> vars) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].degree < 1)
            throw DomainError("variable '" + vars[i].name + "' must have degree >= 1");
        if (vars[i].name.empty())
            throw DomainError("variable names must be non-empty");
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i].name == vars[j].name)
                throw DomainError("duplicate variable name '" + vars[i].name + "'");
    }
}

int variable_index(std::span<const GradedVariable> vars, std::string_view name) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i].name == name) return static_cast<int>(i);
    return -1;
}

Polynomial variable_polynomial(std::size_t var_count, std::size_t index) {
    std::vector<Exponent> e(var_count, 0);
    e.at(index) = 1;
    return Polynomial::from_monomial(Monomial(std::move(e)));
}

namespace {

void enumerate_rec(std::span<const GradedVariable> vars, std::size_t index, long long remaining,
                   std::vector<Exponent>& current, std::vector<Monomial>& out) {
    if (index == vars.size()) {
        if (remaining == 0) out.emplace_back(current);
        return;
    }
    if (index + 1 == vars.size()) {
        // last variable must absorb the remainder exactly
        if (remaining % vars[index].degree == 0) {
            current[index] = static_cast<Exponent>(remaining / vars[index].degree);
            out.emplace_back(current);
            current[index] = 0;
        }
        return;
    }
    long long max_e = remaining / vars[index].degree;
    for (long long e = 0; e <= max_e; ++e) {
        current[index] = static_cast<Exponent>(e);
        enumerate_rec(vars, index + 1, remaining - e * vars[index].degree, current, out);
    }
    current[index] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::span<const GradedVariable> vars, long long degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    if (vars.empty()) {
        if (degree == 0) out.emplace_back(std::size_t{0});
        return out;
    }
    std::vector<Exponent> current(vars.size(), 0);
    enumerate_rec(vars, 0, degree, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dold
