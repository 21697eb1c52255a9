#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dainf/bigraded.hpp"

namespace dainf {

/// How a vertex label (u,v) grades: generators m_uv of the operad have
/// bidegree (u, 2-u-v); suspended cogenerators live at (u, 1-u-v).
enum class VertexGrading { operad, suspended };

Bidegree label_bidegree(int u, int v, VertexGrading g);

/// Planar rooted tree with (u,v)-labeled internal vertices, arity v = number
/// of children. Encoded as a preorder token stream; leaves are explicit
/// tokens, so the i-th leaf is the i-th input. The single-leaf tree is the
/// operad identity (no vertices).
class Tree {
public:
    struct Tok {
        int16_t u; // -1 for a leaf
        int16_t v;
        bool is_leaf() const { return u < 0; }
        bool operator==(const Tok& o) const { return u == o.u && v == o.v; }
        bool operator<(const Tok& o) const { return u != o.u ? u < o.u : v < o.v; }
    };

    static Tree leaf();
    static Tree corolla(int u, int v);
    /// Two-level tree: corolla (u,v) with `inner` grafted at slot pos (1-based).
    static Tree two_level(int u, int v, int pos, const Tree& inner);

    int arity() const;
    int vertex_count() const;
    Bidegree bidegree(VertexGrading g) const;
    long long horizontal_degree() const;

    const std::vector<Tok>& tokens() const { return toks_; }

    /// Grafts b into the i-th leaf (1-based); pure tree surgery, no sign.
    Tree grafted(int i, const Tree& b) const;
    /// Sum of bidegrees of vertices strictly after the i-th leaf in preorder.
    Bidegree degree_after_leaf(int i, VertexGrading g) const;

    bool operator==(const Tree& o) const { return toks_ == o.toks_; }
    bool operator<(const Tree& o) const { return toks_ < o.toks_; }

    /// Canonical textual form: m(u,v)[child,...], leaves as '*'.
    std::string to_string() const;

private:
    std::vector<Tok> toks_;
};

/// Signed linear combination of trees sharing one arity and one bidegree.
class TermSum {
public:
    TermSum(CoefficientRing ring, VertexGrading grading)
        : ring_(ring), grading_(grading) {}

    static TermSum single(const CoefficientRing& ring, VertexGrading g, const Tree& t,
                          const Scalar& c);

    const CoefficientRing& ring() const { return ring_; }
    VertexGrading grading() const { return grading_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<Tree, Scalar>& terms() const { return terms_; }

    int arity() const;          // throws if empty
    Bidegree bidegree() const;  // throws if empty

    void add_term(const Tree& t, const Scalar& c);
    TermSum add(const TermSum& o) const;
    TermSum scaled(const Scalar& c) const;
    TermSum negated() const { return scaled(Scalar::of(ring_, -1)); }

    bool operator==(const TermSum& o) const;

    std::string to_string() const;

private:
    CoefficientRing ring_;
    VertexGrading grading_;
    std::map<Tree, Scalar> terms_;
};

/// Operadic partial composition a o_i b: grafts b into leaf i of a, with the
/// Koszul insertion sign (-1)^{<|b|, deg of a's vertices after leaf i>} that
/// identifies trees with left-to-right iterated composites. Bilinear.
TermSum partial_compose(const TermSum& a, int i, const TermSum& b);

/// Element of dAs(n) = k[x_1..x_n]/(x_i^2) in the monomial basis; exponent
/// vectors as bitmasks (bit k-1 = exponent of x_k). Monomial eps has
/// bidegree (popcount(eps), 0).
class DAsElement {
public:
    DAsElement(CoefficientRing ring, int arity);

    static DAsElement monomial(const CoefficientRing& ring, int arity, uint64_t eps,
                               const Scalar& c);
    /// Operad identity: 1 in arity 1.
    static DAsElement identity(const CoefficientRing& ring);

    const CoefficientRing& ring() const { return ring_; }
    int arity() const { return arity_; }
    bool is_zero() const { return monos_.empty(); }
    const std::map<uint64_t, Scalar>& monomials() const { return monos_; }

    void add_monomial(uint64_t eps, const Scalar& c);
    DAsElement add(const DAsElement& o) const;
    DAsElement scaled(const Scalar& c) const;

    bool operator==(const DAsElement& o) const;
    std::string to_string() const;

private:
    CoefficientRing ring_;
    int arity_;
    std::map<uint64_t, Scalar> monos_;
};

/// The explicit composition law of dAs in the monomial basis: substitution
/// when eps_i = 0, the signed Leibniz sum when eps_i = 1, with the global
/// sign (-1)^{alpha}.
DAsElement das_compose(const DAsElement& a, int i, const DAsElement& b);

/// Rewrites a tree over {m11, m02} to the monomial basis (throws on foreign
/// labels). Trees are read as left-to-right iterated composites.
DAsElement das_normal_form(const Tree& t, const CoefficientRing& ring);
DAsElement das_normal_form(const TermSum& ts);

/// Kills every generator other than m02, m11, then takes the normal form.
DAsElement project_to_das(const TermSum& ts);

} // namespace dainf
