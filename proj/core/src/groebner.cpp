#include "dold/groebner.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace dold {

namespace {

// Largest reducible term of p, together with the index of a reducer.
// Scanning for the largest term keeps the division deterministic.
std::optional<std::pair<const Monomial*, std::size_t>> find_reducible(
    const Polynomial& p, std::span<const Polynomial> basis, std::span<const GradedVariable> vars,
    const std::vector<const Monomial*>& leads) {
    const Monomial* best = nullptr;
    std::size_t best_reducer = 0;
    for (const Monomial& t : p.terms()) {
        if (best != nullptr && compare_graded(t, *best, vars) <= 0) continue;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (leads[i]->divides(t)) {
                best = &t;
                best_reducer = i;
                break;
            }
        }
    }
    if (best == nullptr) return std::nullopt;
    return std::make_pair(best, best_reducer);
}

std::vector<const Monomial*> leading_monomials(std::span<const Polynomial> basis,
                                               std::span<const GradedVariable> vars) {
    std::vector<const Monomial*> leads;
    leads.reserve(basis.size());
    for (const Polynomial& b : basis) leads.push_back(&b.leading_monomial(vars));
    return leads;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis,
                       std::span<const GradedVariable> vars) {
    for (const Polynomial& b : basis)
        if (b.is_zero()) throw DomainError("zero polynomial in reduction basis");
    auto leads = leading_monomials(basis, vars);
    Polynomial r = p;
    while (true) {
        auto hit = find_reducible(r, basis, vars, leads);
        if (!hit) return r;
        const auto [term, i] = *hit;
        Monomial factor = term->divided_by(*leads[i]);
        r = r.plus(basis[i].times(factor));
    }
}

std::vector<Polynomial> buchberger_reduced(std::vector<Polynomial> generators,
                                           std::span<const GradedVariable> vars) {
    std::vector<Polynomial> basis;
    for (Polynomial& g : generators) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous(vars))
            throw DomainError("Groebner input must be homogeneous: " + g.to_string(vars));
        basis.push_back(std::move(g));
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    auto queue_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    };
    for (std::size_t j = 0; j < basis.size(); ++j) queue_pairs_with(j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        const Monomial& li = basis[i].leading_monomial(vars);
        const Monomial& lj = basis[j].leading_monomial(vars);
        Monomial l = Monomial::lcm(li, lj);
        // first Buchberger criterion: coprime leading terms reduce to zero
        if (l == li.times(lj)) continue;
        Polynomial s = basis[i].times(l.divided_by(li)).plus(basis[j].times(l.divided_by(lj)));
        Polynomial r = normal_form(s, basis, vars);
        if (!r.is_zero()) {
            basis.push_back(std::move(r));
            queue_pairs_with(basis.size() - 1);
        }
    }

    // minimalize: drop members whose leading term another leading term divides
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = basis[i].leading_monomial(vars);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = basis[j].leading_monomial(vars);
            if (lj.divides(li) && !(li == lj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce each member against the others
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial lead = Polynomial::from_monomial(minimal[i].leading_monomial(vars));
        Polynomial tail = minimal[i].plus(lead);
        reduced.push_back(lead.plus(normal_form(tail, others, vars)));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare_graded(a.leading_monomial(vars), b.leading_monomial(vars), vars) < 0;
    });
    return reduced;
}

}  // namespace dold
