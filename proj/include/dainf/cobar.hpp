#pragma once

#include <map>
#include <string>
#include <vector>

#include "dainf/operad.hpp"

namespace dainf {

/// Differential of the generator m_uv of the cobar construction: the signed
/// sum of two-vertex trees m_ij(1^r (x) m_pq (x) 1^t) over splittings with
/// both factors != (0,1). Coefficients over Z; bidegree (u, 3-u-v).
TermSum cobar_diff_generator(int u, int v);

/// Extension of the generator differential as a derivation: vertical-degree
/// prefix sign per vertex, plus the Koszul re-sorting sign for the inserted
/// lower vertex moving past the first r child subtrees.
TermSum cobar_diff(const TermSum& ts);
TermSum cobar_diff_tree(const Tree& t, const CoefficientRing& ring);

/// All basis trees of the free operad on the m_uv ((u,v) != (0,1)) with the
/// given arity and total horizontal degree. Includes the single-leaf identity
/// when arity == 1 and hdeg == 0.
std::vector<Tree> enumerate_basis_trees(int arity, int hdeg);

/// Independent count of the same set via the dimension recursion.
long long count_basis_trees(int arity, int hdeg);

struct D2Report {
    long long trees_checked = 0;
    bool ok = true;
    std::string first_failure; // textual form of the offending tree
    std::map<std::pair<int, long long>, long long> counts; // (arity, hdeg) -> #trees
};

/// Checks d(d(T)) == 0 exactly over Z for every basis tree with arity <=
/// max_arity and horizontal degree <= max_h. The parallel flag selects the
/// OpenMP sweep; serial is the reference path.
D2Report check_d_squared(int max_arity, int max_h, bool parallel = true);

/// Homology of ((dA_infinity)(n))_i^* with the cobar differential: vertical
/// degree -> dimension, over Q or F_p.
std::map<long long, long long> homology_window(int n, int i, const CoefficientRing& ring,
                                               bool parallel = true);

} // namespace dainf
