#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dold/quotient.hpp"

namespace dold {

/// Product family a space descriptor belongs to. The RpTimesCp flavor shares
/// the DoldProduct presentation: the mod 2 cohomology algebras agree, so one
/// code path serves both and only the bounds differ.
enum class SpaceFlavor { SphereTimesCp, DoldProduct, RpTimesCp };

/// One factor of a product space. For SphereTimesCp the pair (m, n) encodes
/// S^{2m} x CP^n (m is the half-dimension of the sphere); for DoldProduct and
/// RpTimesCp it encodes P(m, n) resp. RP^m x CP^n with m taken literally.
struct SpaceFactor {
    int m = 0;
    int n = 0;
    bool operator==(const SpaceFactor&) const = default;
};

struct ProductSpace {
    SpaceFlavor flavor = SpaceFlavor::DoldProduct;
    std::vector<SpaceFactor> factors;

    int factor_count() const { return static_cast<int>(factors.size()); }
    /// Number of positive-dimensional sphere factors (sphere flavor).
    int positive_sphere_count() const;
    int manifold_dimension() const;
    std::string to_string() const;
};

/// Descriptor grammar, '*' separates factors:
///   "P(2,1)*P(4,3)"            products of Dold manifolds
///   "S(2)xCP(1)*S(4)xCP(2)"    products of even spheres and complex
///                              projective spaces ("CP(n)" alone = S(0)xCP(n))
///   "RP(2)xCP(1)"              products of real and complex projective spaces
/// Flavors cannot be mixed within one descriptor. Round-trips via to_string().
ProductSpace parse_space(std::string_view text);

void validate_space(const ProductSpace& space);

/// Parity indicator: 1 on odd, 0 on even input.
int mu(long long n);
/// 0 for even m, 1 for m = 1 mod 4, 2 for m = 3 mod 4.
int eta(long long m);

/// A Dold manifold P(m, n) carries a free involution exactly when its Euler
/// characteristic vanishes, i.e. at least one of m, n is odd.
bool admits_free_involution(int m, int n);

/// F2[a, b] / (a^{m+1}, b^{n+1}) with deg a = 1, deg b = 2: the mod 2
/// cohomology of P(m, n). Default cap = manifold dimension + 4.
QuotientAlgebra dold_cohomology(int m, int n, std::optional<int> degree_cap = std::nullopt);

/// Cohomology of the connected component of a product space, with the number
/// of identical components (2 per S^0 factor; 1 unless the sphere flavor
/// contains zero-dimensional spheres). Rank computations consume this form.
struct ProductCohomology {
    QuotientAlgebra algebra;
    long long components = 1;
};
ProductCohomology product_cohomology(const ProductSpace& space,
                                     std::optional<int> degree_cap = std::nullopt);

/// Alternating sum of Betti numbers, multiplicative over factors.
long long euler_characteristic(const ProductSpace& space);

/// Total dimension of the mod 2 cohomology, components included.
long long total_mod2_dimension(const ProductSpace& space);

/// Value of the conjectured free 2-rank formula sum eta(m_i) + sum mu(n_i) for
/// a general Dold product; a conjecture, not a theorem, and callers must label
/// it as such.
int conjectured_frk2_dold_general(std::span<const SpaceFactor> factors);

}  // namespace dold
