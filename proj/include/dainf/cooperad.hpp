#pragma once

#include <utility>
#include <vector>

#include "dainf/operad.hpp"

namespace dainf {

/// Cogenerator mu_{ij} of the Koszul dual of dAs; mu_01 is the cooperad
/// identity, bidegree (i, 1-i-j).
struct CoopGen {
    int i = 0;
    int j = 1;
    bool is_identity() const { return i == 0 && j == 1; }
    Bidegree bidegree() const { return {i, 1 - i - j}; }
    bool operator==(const CoopGen& o) const { return i == o.i && j == o.j; }
    bool operator<(const CoopGen& o) const { return i != o.i ? i < o.i : j < o.j; }
};

/// One summand of a full cocomposition: coeff * mu_ij; mu_{p1q1} x ... x mu_{pjqj}.
struct CoopTerm {
    int coeff = 1; // always +-1
    CoopGen outer;
    std::vector<CoopGen> inner;

    bool operator==(const CoopTerm& o) const {
        return coeff == o.coeff && outer == o.outer && inner == o.inner;
    }
    std::string to_string() const;
};

/// Parity of the cocomposition sign X((p_1,q_1),...,(p_j,q_j)).
int sign_X(const std::vector<std::pair<int, int>>& pairs);

/// Complete signed cocomposition of mu_{uv}, trivial terms included.
std::vector<CoopTerm> cocompose(int u, int v);

/// One summand of the infinitesimal cocomposition:
/// coeff * mu_ij; 1^r (x) mu_pq (x) 1^t.
struct InfinitesimalTerm {
    int coeff = 1;
    CoopGen outer;
    int r = 0;
    CoopGen mid;
    int t = 0;

    bool operator==(const InfinitesimalTerm& o) const {
        return coeff == o.coeff && outer == o.outer && r == o.r && mid == o.mid && t == o.t;
    }
    std::string to_string() const;
};

/// All terms mu_ij; 1^r (x) mu_pq (x) 1^t with i+p=u, r+q+t=v, j=r+1+t, signed
/// (-1)^{r(1-p-q)+pt}. With include_trivial=false, terms with an identity
/// outer or middle factor are omitted.
std::vector<InfinitesimalTerm> infinitesimal_cocompose(int u, int v, bool include_trivial);

/// Expands mu_{uv} as a signed sum of binary/unary trees on the suspended
/// generators sm11 = m(1,1), sm02 = m(0,2). Memoized; throws once u+v
/// exceeds the cap.
TermSum mu_tree_expansion(int u, int v, int cap = 12);

} // namespace dainf
