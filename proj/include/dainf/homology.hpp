#pragma once

#include <optional>

#include "dainf/bigraded.hpp"

namespace dainf {

/// Dense matrix of exact scalars, row-major.
struct DenseMat {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;

    DenseMat() = default;
    DenseMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Scalar& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/// Exact rank. Over F_p: modular elimination; over Q (and Z, embedded in Q):
/// fraction-free elimination on cleared numerators. The parallel flag selects
/// the OpenMP row-update kernel; the serial path is the reference.
int rank(const DenseMat& m, const CoefficientRing& ring, bool parallel = true);

/// Fraction-free (Bareiss) rank of an integer matrix. Entries as BigInt.
int rank_bareiss(std::vector<std::vector<BigInt>> m, bool parallel = true);

/// Reduced row echelon form over a field (in place); returns pivot columns.
std::vector<int> rref(DenseMat& m, const CoefficientRing& ring);

/// Kernel basis (as columns) of a matrix over a field.
DenseMat kernel_basis(const DenseMat& m, const CoefficientRing& ring);

/// Homology of a square-zero graded endomorphism, with enough data to induce
/// maps: rep picks cycle representatives (H -> M) and proj is a left inverse
/// of rep vanishing on boundaries and on a chosen complement of the cycles
/// (M -> H). Both have bidegree (0,0), so chain maps induce maps on H via
/// proj_B . f . rep_A.
struct GradedHomology {
    BigradedModule H;
    BigradedMap rep;
    BigradedMap proj;
};

/// Requires a field ring and d square-zero (any fixed bidegree). Basis names
/// of H are "h<k>[a,b]" for the k-th class in bidegree (a,b).
GradedHomology graded_homology(const BigradedModule& m, const BigradedMap& d);

/// proj_B . f . rep_A; throws if f does not send cycles to cycles.
BigradedMap induced_map(const GradedHomology& ha, const BigradedMap& da,
                        const GradedHomology& hb, const BigradedMap& db, const BigradedMap& f);

/// Vertical homology of a vertical bicomplex (field ring required).
GradedHomology vertical_homology(const VerticalBicomplex& v);

/// H^h of H^v for twisted-complex data (d0 of bidegree (0,1), d1 of bidegree
/// (1,0), both square-zero and commuting).
BigradedModule e2_page(const BigradedModule& m, const BigradedMap& d0, const BigradedMap& d1);

/// True if f (bidegree (0,0)) induces an isomorphism in every bidegree.
bool is_isomorphism_on(const BigradedMap& f, const CoefficientRing& ring);

} // namespace dainf
