#ifndef HOMSUM_DUALITY_HPP
#define HOMSUM_DUALITY_HPP

#include <map>
#include <string>

#include "homsum/graded_group.hpp"
#include "homsum/int_matrix.hpp"

namespace homsum {

/// Integral cohomology from homology by universal coefficients:
/// H^q = Free(H_q) (+) Tors(H_{q-1}).
GradedGroup cohomology_profile(const GradedGroup& homology);

/// Whether H^q is isomorphic to H_{n-q} in every degree, with H^* taken
/// from cohomology_profile.
bool check_poincare(const GradedGroup& homology, int dimension);

/// Induced-map data for a degree-lambda map f : X -> Y between closed
/// oriented m-manifolds. f_star is indexed by homology degree, the rest by
/// cohomology degree; duality sends H^k to H_{m-k}.
struct DualityMapSet {
    int total_dim = 0;
    Int lambda = 1;
    std::map<int, IntMatrix> f_star;   // H_j(X) -> H_j(Y)
    std::map<int, IntMatrix> f_upper;  // H^k(Y) -> H^k(X)
    std::map<int, IntMatrix> d_x;      // H^k(X) -> H_{m-k}(X)
    std::map<int, IntMatrix> d_y;      // H^k(Y) -> H_{m-k}(Y)
};

/// Exact matrix identity f_star . D_X . f_upper == lambda . D_Y in every
/// degree. Throws std::invalid_argument on incomposable shapes.
bool check_degree_relation(const DualityMapSet& maps);

/// Connected-sum shape of the circle bundle over a Wall 6-manifold:
/// 2r copies of S^3 x S^4 summed with a 7-manifold carrying Z/k in
/// degree 4.
struct WallDescriptor {
    std::size_t r = 0;
    Int k = 1;
    std::size_t summand_count = 0;        // 2r
    std::string text;                     // e.g. "#^{4}(S³×S⁴) # L_3"
    GradedGroup total_cohomology;         // predicted H^* of the bundle total space
    GradedGroup summand_cohomology;       // H^* of the 7-manifold summand L_k
};

WallDescriptor wall_descriptor(std::size_t r, const Int& k);

}  // namespace homsum

#endif
