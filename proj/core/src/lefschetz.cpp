#include "dold/lefschetz.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace dold {

namespace {

void require_sphere_flavor(const ProductSpace& space) {
    if (space.flavor != SpaceFlavor::SphereTimesCp)
        throw DomainError("sign automorphisms are defined for products of even spheres and "
                          "complex projective spaces");
    for (const SpaceFactor& f : space.factors)
        if (f.m <= 0)
            throw DomainError("Lefschetz computations need positive-dimensional spheres; "
                              "split off S(0) factors as components first");
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

bool SignAutomorphism::is_identity() const {
    auto all_one = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [](int s) { return s == 1; });
    };
    return all_one(xi) && all_one(lambda);
}

void validate_sign_automorphism(const SignAutomorphism& g, const ProductSpace& space) {
    require_sphere_flavor(space);
    const std::size_t k = space.factors.size();
    if (g.xi.size() != k || g.lambda.size() != k)
        throw DomainError("sign automorphism arity does not match the factor count");
    for (std::size_t i = 0; i < k; ++i) {
        if ((g.xi[i] != 1 && g.xi[i] != -1) || (g.lambda[i] != 1 && g.lambda[i] != -1))
            throw DomainError("sign entries must be +1 or -1");
        if (g.xi[i] == -1 && space.factors[i].n % 2 == 0)
            throw DomainError("flipping the projective generator of factor " + std::to_string(i + 1) +
                              " is not an automorphism: its dimension is even");
    }
}

long long lefschetz_number(const SignAutomorphism& g, const ProductSpace& space) {
    validate_sign_automorphism(g, space);
    long long tau = 1;
    for (std::size_t i = 0; i < space.factors.size(); ++i) {
        long long geometric = 0;
        long long power = 1;
        for (int j = 0; j <= space.factors[i].n; ++j) {
            geometric += power;
            power *= g.xi[i];
        }
        tau *= geometric * (1 + g.lambda[i]);
    }
    return tau;
}

long long trace_oracle(const SignAutomorphism& g, const ProductSpace& space,
                       long long basis_limit) {
    validate_sign_automorphism(g, space);
    long long basis_size = 1;
    for (const SpaceFactor& f : space.factors) {
        basis_size *= 2 * (f.n + 1);
        if (basis_size > basis_limit)
            throw LimitError("monomial basis exceeds the configured limit");
    }

    // iterate the monomial basis prod a_i^{p_i} b_i^{q_i}, p_i <= n_i, q_i <= 1
    const std::size_t k = space.factors.size();
    std::vector<int> p(k, 0), q(k, 0);
    long long trace = 0;
    while (true) {
        long long sign = 1;
        long long degree = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (p[i] % 2 == 1) sign *= g.xi[i];
            if (q[i] == 1) sign *= g.lambda[i];
            degree += 2 * p[i] + 2 * space.factors[i].m * q[i];
        }
        trace += (degree % 2 == 0) ? sign : -sign;

        std::size_t pos = 0;
        while (pos < 2 * k) {
            if (pos < k) {
                if (++p[pos] <= space.factors[pos].n) break;
                p[pos] = 0;
            } else {
                if (++q[pos - k] <= 1) break;
                q[pos - k] = 0;
            }
            ++pos;
        }
        if (pos == 2 * k) break;
    }
    return trace;
}

namespace {

// Free sign coordinates of the valid automorphism group, as bit positions:
// xi bits for odd projective factors first (factor order), then lambda bits.
struct SignCoordinates {
    std::vector<std::size_t> xi_factor;  // factor index per xi bit
    std::size_t lambda_offset = 0;
    std::size_t k = 0;

    std::size_t bit_count() const { return xi_factor.size() + k; }

    SignAutomorphism decode(std::uint32_t bits, const ProductSpace& space) const {
        SignAutomorphism g;
        g.xi.assign(k, 1);
        g.lambda.assign(k, 1);
        for (std::size_t b = 0; b < xi_factor.size(); ++b)
            if ((bits >> b) & 1u) g.xi[xi_factor[b]] = -1;
        for (std::size_t i = 0; i < k; ++i)
            if ((bits >> (xi_factor.size() + i)) & 1u) g.lambda[i] = -1;
        (void)space;
        return g;
    }
};

SignCoordinates sign_coordinates(const ProductSpace& space) {
    SignCoordinates coords;
    coords.k = space.factors.size();
    for (std::size_t i = 0; i < coords.k; ++i)
        if (space.factors[i].n % 2 == 1) coords.xi_factor.push_back(i);
    coords.lambda_offset = coords.xi_factor.size();
    return coords;
}

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    const std::size_t r = comb.size();
    std::size_t i = r;
    while (i > 0) {
        --i;
        if (comb[i] + (r - i) < n) {
            ++comb[i];
            for (std::size_t j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Enumerates r-dimensional subspaces of F2^n by their canonical reduced
// echelon bases: pivot-column combinations in lexicographic order, then the
// free entries as binary counters. Invokes `visit` with the basis rows; stops
// when visit returns true and reports success.
bool enumerate_subspaces(std::size_t n, std::size_t r,
                         const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
    if (r == 0) {
        std::vector<std::uint32_t> empty;
        return visit(empty);
    }
    if (r > n) return false;
    std::vector<std::size_t> pivots(r);
    for (std::size_t i = 0; i < r; ++i) pivots[i] = i;
    do {
        // free positions: non-pivot columns to the right of each pivot
        std::vector<std::vector<std::size_t>> free_cols(r);
        std::size_t free_total = 0;
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t c = pivots[i] + 1; c < n; ++c) {
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                    free_cols[i].push_back(c);
            }
            free_total += free_cols[i].size();
        }
        if (free_total > 24) throw LimitError("subspace enumeration too large");
        for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << free_total); ++fill) {
            std::vector<std::uint32_t> rows(r, 0);
            std::size_t bit = 0;
            for (std::size_t i = 0; i < r; ++i) {
                rows[i] = std::uint32_t{1} << pivots[i];
                for (std::size_t c : free_cols[i]) {
                    if ((fill >> bit) & 1u) rows[i] |= std::uint32_t{1} << c;
                    ++bit;
                }
            }
            if (visit(rows)) return true;
        }
    } while (next_combination(pivots, n));
    return false;
}

}  // namespace

RankSearchResult max_free_rank_bruteforce(const ProductSpace& space) {
    require_sphere_flavor(space);
    const std::size_t k = space.factors.size();
    if (2 * k > 12) throw LimitError("brute-force rank search is limited to 2k <= 12");

    SignCoordinates coords = sign_coordinates(space);
    const std::size_t n = coords.bit_count();

    // tau vanishes exactly when some sign is flipped, so precompute per vector
    std::vector<bool> tau_zero(std::size_t{1} << n);
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
        SignAutomorphism g = coords.decode(bits, space);
        tau_zero[bits] = lefschetz_number(g, space) == 0;
    }

    for (std::size_t r = n + 1; r-- > 0;) {
        RankSearchResult found;
        auto visit = [&](const std::vector<std::uint32_t>& rows) {
            // every non-zero combination must have vanishing Lefschetz number
            for (std::uint32_t combo = 1; combo < (std::uint32_t{1} << rows.size()); ++combo) {
                std::uint32_t v = 0;
                for (std::size_t i = 0; i < rows.size(); ++i)
                    if ((combo >> i) & 1u) v ^= rows[i];
                if (!tau_zero[v]) return false;
            }
            found.rank = static_cast<int>(rows.size());
            for (std::uint32_t row : rows) found.certificate.push_back(coords.decode(row, space));
            return true;
        };
        if (enumerate_subspaces(n, r, visit)) return found;
    }
    return {};
}

int theorem_bound(const ProductSpace& space) {
    validate_space(space);
    int bound = 0;
    for (const SpaceFactor& f : space.factors) bound += mu(f.n);
    if (space.flavor == SpaceFlavor::SphereTimesCp) bound += space.positive_sphere_count();
    return bound;
}

int frk_table(const ProductSpace& space, long long p) {
    if (!is_prime(p)) throw DomainError("frk is indexed by primes");
    return p == 2 ? theorem_bound(space) : 0;
}

CarlssonReport carlsson_check(const ProductSpace& space) {
    CarlssonReport report;
    report.betti_sum = total_mod2_dimension(space);
    int bound = theorem_bound(space);
    if (bound >= 62) throw LimitError("threshold exponent too large");
    report.threshold = 1LL << bound;
    report.holds = report.betti_sum >= report.threshold;
    return report;
}

bool IntMatrix::is_identity() const {
    for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c)
            if (at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

namespace {

IntMatrix matrix_multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out;
    out.size = a.size;
    for (int r = 0; r < a.size; ++r)
        for (int c = 0; c < a.size; ++c) {
            long long sum = 0;
            for (int t = 0; t < a.size; ++t) sum += a.at(r, t) * b.at(t, c);
            out.entries[static_cast<std::size_t>(r * a.size + c)] = sum;
        }
    return out;
}

IntMatrix matrix_power(const IntMatrix& a, int p) {
    IntMatrix result = a;
    for (int i = 1; i < p; ++i) result = matrix_multiply(result, a);
    return result;
}

}  // namespace

std::vector<IntMatrix> mod2_rigidity_search(int size, int p, int entry_bound) {
    if (size < 1 || size > 3) throw LimitError("rigidity search supports sizes 1..3");
    if (entry_bound < 1 || entry_bound > 3) throw LimitError("rigidity search bounds entries by 1..3");
    if (p != 3 && p != 5) throw LimitError("rigidity search supports p in {3, 5}");

    // entry choices: odd values on the diagonal, even off-diagonal (A = I mod 2)
    std::vector<long long> odd_values, even_values;
    for (long long v = -entry_bound; v <= entry_bound; ++v) {
        if (v % 2 == 0)
            even_values.push_back(v);
        else
            odd_values.push_back(v);
    }

    const int cells = size * size;
    std::vector<IntMatrix> counterexamples;
    std::vector<std::size_t> choice(static_cast<std::size_t>(cells), 0);
    while (true) {
        IntMatrix a;
        a.size = size;
        for (int cell = 0; cell < cells; ++cell) {
            bool diagonal = (cell / size) == (cell % size);
            const auto& values = diagonal ? odd_values : even_values;
            a.entries[static_cast<std::size_t>(cell)] = values[choice[static_cast<std::size_t>(cell)]];
        }
        if (!a.is_identity() && matrix_power(a, p).is_identity()) counterexamples.push_back(a);

        int pos = 0;
        for (; pos < cells; ++pos) {
            bool diagonal = (pos / size) == (pos % size);
            std::size_t limit = diagonal ? odd_values.size() : even_values.size();
            if (++choice[static_cast<std::size_t>(pos)] < limit) break;
            choice[static_cast<std::size_t>(pos)] = 0;
        }
        if (pos == cells) break;
    }
    return counterexamples;
}

QuotientAlgebra bz4_cohomology(int degree_cap) {
    std::vector<GradedVariable> vars{{"x", 2}, {"y", 1}};
    return make_algebra(std::move(vars), {{{0, 2}}}, degree_cap);  // y^2 = 0
}

QuotientAlgebra bz2_cohomology(int degree_cap) {
    std::vector<GradedVariable> vars{{"t", 1}};
    return make_algebra(std::move(vars), {}, degree_cap);
}

Polynomial bz4_restriction(const Polynomial& p, const QuotientAlgebra& bz4,
                           const QuotientAlgebra& bz2) {
    int x = bz4.variable_index("x");
    int y = bz4.variable_index("y");
    if (x < 0 || y < 0 || p.var_count() != 2)
        throw DomainError("bz4_restriction expects a polynomial in x, y");
    std::vector<Monomial> image;
    for (const Monomial& m : p.terms()) {
        if (m.exponent(static_cast<std::size_t>(y)) > 0) continue;  // y restricts to zero
        std::vector<Exponent> t_exp{2 * m.exponent(static_cast<std::size_t>(x))};
        image.emplace_back(std::move(t_exp));
    }
    Polynomial result = Polynomial::from_monomials(1, std::move(image));
    return bz2.normal_form(result);
}

}  // namespace dold
