#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dold/quotient.hpp"
#include "dold/spaces.hpp"

namespace dold {

/// Diagonal automorphism of the integral cohomology of a product of even
/// spheres and complex projective spaces: one sign per projective generator
/// (xi) and one per sphere generator (lambda). The model is restricted to
/// diagonal maps; for mod 2 trivial actions degree and cup-length preservation
/// rule out everything else, and that restriction is assumed throughout.
struct SignAutomorphism {
    std::vector<int> xi;      // +1 / -1 per factor, image sign of the CP generator
    std::vector<int> lambda;  // +1 / -1 per factor, image sign of the sphere generator

    bool is_identity() const;
    bool operator==(const SignAutomorphism&) const = default;
};

/// Throws DomainError unless the sign pattern defines an automorphism of the
/// integral cohomology: entries in {-1, +1}, one per factor, and xi_j = -1
/// only where n_j is odd (flipping an even projective generator is not an
/// automorphism, which is treated as a hard error rather than skipped).
void validate_sign_automorphism(const SignAutomorphism& g, const ProductSpace& space);

/// Product formula: tau = prod_i (1 + xi_i + ... + xi_i^{n_i}) (1 + lambda_i).
/// Requires the sphere flavor with all sphere factors positive-dimensional.
long long lefschetz_number(const SignAutomorphism& g, const ProductSpace& space);

/// Independent route to the same number: materializes the monomial basis of
/// the integral cohomology, multiplies the diagonal action signs per basis
/// element and returns the alternating-degree trace sum. Throws LimitError
/// when the basis exceeds `basis_limit`.
long long trace_oracle(const SignAutomorphism& g, const ProductSpace& space,
                       long long basis_limit = 1 << 20);

struct RankSearchResult {
    int rank = 0;
    std::vector<SignAutomorphism> certificate;  // basis of a witness subgroup
};

/// Largest r such that some rank-r subgroup of valid sign automorphisms has
/// vanishing Lefschetz number on every non-identity element, found by
/// enumerating subspaces in canonical reduced-echelon order (the witness is
/// the lexicographically least basis). Requires 2k <= 12.
RankSearchResult max_free_rank_bruteforce(const ProductSpace& space);

/// Closed-form upper bound for the rank of a group acting freely and mod 2
/// cohomologically trivially: k0 + sum mu(n_i) for sphere products,
/// sum mu(n_i) for Dold and RPxCP products.
int theorem_bound(const ProductSpace& space);

/// Free p-rank table for mod 2 cohomologically trivial actions:
/// theorem_bound(space) at p = 2 and 0 at odd primes. DomainError unless p is
/// prime.
int frk_table(const ProductSpace& space, long long p);

struct CarlssonReport {
    long long betti_sum = 0;   // total mod 2 dimension
    long long threshold = 0;   // 2^{theorem_bound}
    bool holds = false;        // betti_sum >= threshold
};
/// Checks the elementary-abelian lower bound 2^rank <= total Betti sum on the
/// catalog spaces.
CarlssonReport carlsson_check(const ProductSpace& space);

/// Small integer matrix for the rigidity search, row-major, size <= 3.
struct IntMatrix {
    int size = 0;
    std::array<long long, 9> entries{};

    long long at(int r, int c) const { return entries[static_cast<std::size_t>(r * size + c)]; }
    bool is_identity() const;
};

/// Exhaustively enumerates integer matrices A = I (mod 2) with entries bounded
/// by `entry_bound` and A^p = I, returning every A != I found. Matrix rigidity
/// predicts the list is empty: the mod 2 reduction of a finite odd-order
/// symmetry determines it. Bounds: size <= 3, entry_bound <= 3, p in {3, 5}.
std::vector<IntMatrix> mod2_rigidity_search(int size, int p, int entry_bound);

/// F2[x] tensor exterior(y) with deg x = 2, deg y = 1: the mod 2 cohomology of
/// the classifying space of the cyclic group of order four.
QuotientAlgebra bz4_cohomology(int degree_cap);
/// F2[t], deg t = 1: the classifying space of the group of order two.
QuotientAlgebra bz2_cohomology(int degree_cap);

/// Restriction along the subgroup of order two: x -> t^2, y -> 0, extended
/// multiplicatively. `p` lives in bz4_cohomology variables; the result lives
/// in bz2_cohomology variables.
Polynomial bz4_restriction(const Polynomial& p, const QuotientAlgebra& bz4,
                           const QuotientAlgebra& bz2);

}  // namespace dold
