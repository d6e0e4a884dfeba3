#include "dold/spaces.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dold {

int ProductSpace::positive_sphere_count() const {
    int count = 0;
    for (const SpaceFactor& f : factors)
        if (f.m > 0) ++count;
    return count;
}

int ProductSpace::manifold_dimension() const {
    int dim = 0;
    for (const SpaceFactor& f : factors) {
        if (flavor == SpaceFlavor::SphereTimesCp)
            dim += 2 * f.m + 2 * f.n;
        else
            dim += f.m + 2 * f.n;
    }
    return dim;
}

std::string ProductSpace::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        const SpaceFactor& f = factors[i];
        switch (flavor) {
            case SpaceFlavor::SphereTimesCp:
                os << "S(" << 2 * f.m << ")xCP(" << f.n << ")";
                break;
            case SpaceFlavor::DoldProduct:
                os << "P(" << f.m << "," << f.n << ")";
                break;
            case SpaceFlavor::RpTimesCp:
                os << "RP(" << f.m << ")xCP(" << f.n << ")";
                break;
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(std::string_view token) {
        skip_ws();
        if (text.substr(pos, token.size()) == token) {
            pos += token.size();
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("expected a number in space descriptor");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }
};

int parenthesized_number(Cursor& c) {
    if (!c.eat("(")) throw ParseError("expected '(' in space descriptor");
    int value = c.number();
    if (!c.eat(")")) throw ParseError("expected ')' in space descriptor");
    return value;
}

std::pair<int, int> paren_pair(Cursor& c) {
    if (!c.eat("(")) throw ParseError("expected '(' in space descriptor");
    int first = c.number();
    if (!c.eat(",")) throw ParseError("expected ',' in space descriptor");
    int second = c.number();
    if (!c.eat(")")) throw ParseError("expected ')' in space descriptor");
    return {first, second};
}

int cp_dimension(Cursor& c) {
    if (!c.eat("x")) throw ParseError("expected 'x' between bundle factors");
    if (!c.eat("CP")) throw ParseError("expected 'CP' after 'x'");
    return parenthesized_number(c);
}

}  // namespace

ProductSpace parse_space(std::string_view text) {
    Cursor c{text};
    ProductSpace space;
    bool flavor_set = false;
    auto set_flavor = [&](SpaceFlavor f) {
        if (flavor_set && space.flavor != f)
            throw ParseError("mixed factor kinds in one space descriptor");
        space.flavor = f;
        flavor_set = true;
    };

    while (true) {
        if (c.eat("RP")) {
            set_flavor(SpaceFlavor::RpTimesCp);
            int m = parenthesized_number(c);
            int n = cp_dimension(c);
            space.factors.push_back({m, n});
        } else if (c.eat("P")) {
            set_flavor(SpaceFlavor::DoldProduct);
            auto [m, n] = paren_pair(c);
            space.factors.push_back({m, n});
        } else if (c.eat("S")) {
            set_flavor(SpaceFlavor::SphereTimesCp);
            int sphere_dim = parenthesized_number(c);
            if (sphere_dim % 2 != 0)
                throw ParseError("sphere factors must be even-dimensional, got S(" +
                                 std::to_string(sphere_dim) + ")");
            int n = cp_dimension(c);
            space.factors.push_back({sphere_dim / 2, n});
        } else if (c.eat("CP")) {
            set_flavor(SpaceFlavor::SphereTimesCp);
            int n = parenthesized_number(c);
            space.factors.push_back({0, n});
        } else {
            throw ParseError("unrecognized factor in space descriptor");
        }
        if (c.done()) break;
        if (!c.eat("*")) throw ParseError("expected '*' between factors");
    }
    validate_space(space);
    return space;
}

void validate_space(const ProductSpace& space) {
    if (space.factors.empty()) throw DomainError("a product space needs at least one factor");
    for (const SpaceFactor& f : space.factors) {
        if (f.m < 0 || f.n < 0) throw DomainError("factor dimensions must be non-negative");
        if (space.flavor != SpaceFlavor::SphereTimesCp && f.m + f.n == 0)
            throw DomainError("P(m,n) and RP(m)xCP(n) factors need m + n > 0");
    }
}

int mu(long long n) { return n % 2 != 0 ? 1 : 0; }

int eta(long long m) {
    if (m % 2 == 0) return 0;
    return m % 4 == 1 ? 1 : 2;
}

bool admits_free_involution(int m, int n) {
    if (m + n <= 0) throw DomainError("P(m,n) requires m + n > 0");
    return mu(m) == 1 || mu(n) == 1;
}

QuotientAlgebra dold_cohomology(int m, int n, std::optional<int> degree_cap) {
    if (m < 0 || n < 0) throw DomainError("P(m,n) requires non-negative m, n");
    if (m + n == 0) throw DomainError("P(m,n) requires m + n > 0");
    int cap = degree_cap.value_or(m + 2 * n + 4);
    std::vector<GradedVariable> vars{{"a", 1}, {"b", 2}};
    std::vector<std::vector<std::vector<Exponent>>> relations{
        {{static_cast<Exponent>(m + 1), 0}},
        {{0, static_cast<Exponent>(n + 1)}},
    };
    return make_algebra(std::move(vars), relations, cap);
}

ProductCohomology product_cohomology(const ProductSpace& space, std::optional<int> degree_cap) {
    validate_space(space);
    int cap = degree_cap.value_or(space.manifold_dimension() + 4);

    std::vector<GradedVariable> vars;
    std::vector<std::vector<std::vector<Exponent>>> relations;
    long long components = 1;

    auto relation_power = [&](std::size_t var_index, Exponent power, std::size_t total_vars) {
        std::vector<Exponent> exps(total_vars, 0);
        exps[var_index] = power;
        relations.push_back({std::move(exps)});
    };

    if (space.flavor == SpaceFlavor::SphereTimesCp) {
        // connected-component algebra: S^0 factors only multiply the component
        // count, all CP factors stay
        std::vector<std::pair<std::string, int>> plan;  // (name, degree), relation power appended after
        std::vector<Exponent> powers;
        int index = 1;
        for (const SpaceFactor& f : space.factors) {
            plan.emplace_back("a" + std::to_string(index), 2);
            powers.push_back(static_cast<Exponent>(f.n + 1));
            if (f.m > 0) {
                plan.emplace_back("b" + std::to_string(index), 2 * f.m);
                powers.push_back(2);
            } else {
                components *= 2;
            }
            ++index;
        }
        for (const auto& [name, degree] : plan) vars.push_back({name, degree});
        for (std::size_t i = 0; i < powers.size(); ++i) relation_power(i, powers[i], vars.size());
    } else {
        int index = 1;
        std::vector<Exponent> powers;
        for (const SpaceFactor& f : space.factors) {
            vars.push_back({"a" + std::to_string(index), 1});
            powers.push_back(static_cast<Exponent>(f.m + 1));
            vars.push_back({"b" + std::to_string(index), 2});
            powers.push_back(static_cast<Exponent>(f.n + 1));
            ++index;
        }
        for (std::size_t i = 0; i < powers.size(); ++i) relation_power(i, powers[i], vars.size());
    }

    return {make_algebra(std::move(vars), relations, cap), components};
}

long long euler_characteristic(const ProductSpace& space) {
    validate_space(space);
    long long chi = 1;
    for (const SpaceFactor& f : space.factors) {
        long long factor_chi = 0;
        if (space.flavor == SpaceFlavor::SphereTimesCp) {
            factor_chi = 2 * (f.n + 1);  // chi(S^{2m}) = 2 for every m >= 0, chi(CP^n) = n + 1
        } else {
            ProductSpace single{space.flavor, {f}};
            ProductCohomology coh = product_cohomology(single);
            auto series = coh.algebra.poincare_series(single.manifold_dimension());
            for (std::size_t d = 0; d < series.size(); ++d)
                factor_chi += (d % 2 == 0 ? series[d] : -series[d]);
            factor_chi *= coh.components;
        }
        chi *= factor_chi;
    }
    return chi;
}

long long total_mod2_dimension(const ProductSpace& space) {
    ProductCohomology coh = product_cohomology(space);
    return coh.components * coh.algebra.total_dimension();
}

int conjectured_frk2_dold_general(std::span<const SpaceFactor> factors) {
    int value = 0;
    for (const SpaceFactor& f : factors) value += eta(f.m) + mu(f.n);
    return value;
}

}  // namespace dold
