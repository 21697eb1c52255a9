#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "dainf/operad.hpp"
#include "support/testgen.hpp"

using namespace dainf;

namespace {

const CoefficientRing Z = CoefficientRing::Z();
const Scalar ONE = Scalar::of(Z, 1);

TermSum one_term(const Tree& t, VertexGrading g = VertexGrading::operad) {
    return TermSum::single(Z, g, t, ONE);
}

// left comb of m02 vertices with k leaves
Tree comb(int k) {
    if (k == 1) return Tree::leaf();
    if (k == 2) return Tree::corolla(0, 2);
    return Tree::corolla(0, 2).grafted(1, comb(k - 1));
}

// tree representing the monomial with exponent bitmask eps in arity k
Tree monomial_tree(int k, uint64_t eps) {
    Tree t = comb(k);
    for (int i = 1; i <= k; ++i)
        if (eps & (uint64_t(1) << (i - 1))) t = t.grafted(i, Tree::corolla(1, 1));
    return t;
}

Tree random_tree(testgen::Rng& rng, int arity, bool pure_das) {
    if (arity == 1 && rng.range(0, 2) == 0) return Tree::leaf();
    // pick a root label
    for (int attempt = 0; attempt < 50; ++attempt) {
        int v = static_cast<int>(rng.range(1, arity));
        int u = static_cast<int>(rng.range(0, 2));
        if (pure_das) {
            if (rng.range(0, 1)) {
                u = 1;
                v = 1;
            } else {
                u = 0;
                v = 2;
            }
        }
        if (u == 0 && v == 1) continue;
        if (v > arity) continue;
        // split arity into v parts
        std::vector<int> parts(v, 1);
        int extra = arity - v;
        while (extra > 0) {
            ++parts[rng.range(0, v - 1)];
            --extra;
        }
        Tree t = Tree::corolla(u, v);
        int slot = 1;
        bool ok = true;
        for (int c = 0; c < v; ++c) {
            if (parts[c] == 1 && rng.range(0, 1)) {
                slot += 1; // keep a bare leaf
                continue;
            }
            Tree child = random_tree(rng, parts[c], pure_das);
            t = t.grafted(slot, child);
            slot += child.arity();
        }
        if (ok) return t;
    }
    return Tree::leaf();
}

} // namespace

TEST_CASE("tree textual form and grafting") {
    Tree t = Tree::corolla(0, 2).grafted(1, Tree::corolla(0, 2));
    CHECK(t.to_string() == "m(0,2)[m(0,2)[*,*],*]");
    CHECK(t.arity() == 3);
    CHECK(t.vertex_count() == 2);
    CHECK(t.bidegree(VertexGrading::operad) == Bidegree{0, 0});
    CHECK(Tree::leaf().to_string() == "*");
    CHECK_THROWS_AS(Tree::corolla(0, 2).grafted(3, Tree::leaf()), std::invalid_argument);
}

TEST_CASE("partial_compose: identity, grafting, bilinearity") {
    TermSum a = one_term(Tree::corolla(1, 2));
    TermSum id = one_term(Tree::leaf());
    CHECK(partial_compose(a, 1, id) == a);
    CHECK(partial_compose(a, 2, id) == a);
    CHECK(partial_compose(id, 1, a) == a);

    TermSum m02 = one_term(Tree::corolla(0, 2));
    TermSum left = partial_compose(m02, 1, m02);
    CHECK(left.to_string() == "m(0,2)[m(0,2)[*,*],*]");

    TermSum two_a = a.scaled(Scalar::of(Z, 2));
    TermSum three_m = m02.scaled(Scalar::of(Z, 3));
    TermSum prod = partial_compose(two_a, 1, three_m);
    REQUIRE(prod.term_count() == 1);
    CHECK(prod.terms().begin()->second == Scalar::of(Z, 6));

    CHECK_THROWS_AS(partial_compose(a, 5, id), std::invalid_argument);
    TermSum f5 = TermSum::single(CoefficientRing::Fp(5), VertexGrading::operad,
                                 Tree::corolla(0, 2), Scalar::of(CoefficientRing::Fp(5), 1));
    CHECK_THROWS_AS(partial_compose(a, 1, f5), std::invalid_argument);
}

TEST_CASE("operad axioms (signed) on random trees, both gradings") {
    testgen::Rng rng(testgen::Rng::default_seed() + 20);
    for (VertexGrading g : {VertexGrading::operad, VertexGrading::suspended}) {
        for (int trial = 0; trial < 120; ++trial) {
            Tree ta = random_tree(rng, static_cast<int>(rng.range(1, 4)), false);
            Tree tb = random_tree(rng, static_cast<int>(rng.range(1, 3)), false);
            Tree tc = random_tree(rng, static_cast<int>(rng.range(1, 3)), false);
            TermSum a = one_term(ta, g), b = one_term(tb, g), c = one_term(tc, g);
            const int na = ta.arity(), nb = tb.arity();

            // sequential: (a o_i b) o_{i-1+j} c = a o_i (b o_j c)
            int i = static_cast<int>(rng.range(1, na));
            int j = static_cast<int>(rng.range(1, nb));
            CHECK(partial_compose(partial_compose(a, i, b), i - 1 + j, c) ==
                  partial_compose(a, i, partial_compose(b, j, c)));

            // parallel, i < j: (a o_i b) o_{j+nb-1} c = (-1)^{|b||c|} (a o_j c) o_i b
            if (na >= 2) {
                int pi = static_cast<int>(rng.range(1, na - 1));
                int pj = static_cast<int>(rng.range(pi + 1, na));
                TermSum lhs = partial_compose(partial_compose(a, pi, b), pj + nb - 1, c);
                TermSum rhs = partial_compose(partial_compose(a, pj, c), pi, b);
                if (Bidegree::pairing_odd(tb.bidegree(g), tc.bidegree(g))) rhs = rhs.negated();
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("das_compose: substitution, square vanishing, splicing") {
    // x1 (arity 2) o_1 1 (arity 2) = x1 + x2 (arity 3)
    DAsElement x1 = DAsElement::monomial(Z, 2, 0b01, ONE);
    DAsElement unit2 = DAsElement::monomial(Z, 2, 0b00, ONE);
    DAsElement r = das_compose(x1, 1, unit2);
    DAsElement want(Z, 3);
    want.add_monomial(0b001, ONE);
    want.add_monomial(0b010, ONE);
    CHECK(r == want);

    // x o_1 x = 0
    DAsElement x = DAsElement::monomial(Z, 1, 1, ONE);
    CHECK(das_compose(x, 1, x).is_zero());

    // 1 (arity 2) o_2 eps splices with sign +
    DAsElement eps = DAsElement::monomial(Z, 2, 0b10, ONE);
    DAsElement spliced = das_compose(unit2, 2, eps);
    DAsElement want2(Z, 3);
    want2.add_monomial(0b100, ONE);
    CHECK(spliced == want2);

    CHECK_THROWS_AS(das_compose(x1, 3, unit2), std::invalid_argument);
}

TEST_CASE("das_normal_form: generators, squares, the rewriting rule") {
    // corolla m02 -> monomial (0,0), coefficient 1
    CHECK(das_normal_form(Tree::corolla(0, 2), Z) ==
          DAsElement::monomial(Z, 2, 0, ONE));

    // m11 o  m11 = 0
    Tree m11sq = Tree::corolla(1, 1).grafted(1, Tree::corolla(1, 1));
    CHECK(das_normal_form(m11sq, Z).is_zero());

    // m11 on the root of m02: x1 + x2  (the distributive law)
    Tree phi = Tree::corolla(1, 1).grafted(1, Tree::corolla(0, 2));
    DAsElement want(Z, 2);
    want.add_monomial(0b01, ONE);
    want.add_monomial(0b10, ONE);
    CHECK(das_normal_form(phi, Z) == want);

    // foreign label
    CHECK_THROWS_AS(das_normal_form(Tree::corolla(0, 3), Z), std::invalid_argument);
}

TEST_CASE("monomial trees normalize to their monomials with coefficient +1") {
    for (int k = 1; k <= 4; ++k)
        for (uint64_t eps = 0; eps < (uint64_t(1) << k); ++eps) {
            if (k == 1 && eps == 0) continue; // bare leaf is the operad identity
            CHECK(das_normal_form(monomial_tree(k, eps), Z) ==
                  DAsElement::monomial(Z, k, eps, ONE));
        }
}

TEST_CASE("oracle: das_compose = das_normal_form after partial_compose, arity <= 3") {
    for (int ka = 1; ka <= 3; ++ka)
        for (int kb = 1; kb <= 3; ++kb)
            for (uint64_t ea = 0; ea < (uint64_t(1) << ka); ++ea)
                for (uint64_t eb = 0; eb < (uint64_t(1) << kb); ++eb)
                    for (int i = 1; i <= ka; ++i) {
                        TermSum ta = one_term(monomial_tree(ka, ea));
                        TermSum tb = one_term(monomial_tree(kb, eb));
                        DAsElement via_trees = das_normal_form(partial_compose(ta, i, tb));
                        DAsElement direct = das_compose(
                            DAsElement::monomial(Z, ka, ea, ONE), i,
                            DAsElement::monomial(Z, kb, eb, ONE));
                        CHECK(via_trees == direct);
                    }
}

TEST_CASE("das_compose satisfies the signed operad axioms (monomials)") {
    testgen::Rng rng(testgen::Rng::default_seed() + 21);
    for (int trial = 0; trial < 200; ++trial) {
        int ka = static_cast<int>(rng.range(1, 3)), kb = static_cast<int>(rng.range(1, 3)),
            kc = static_cast<int>(rng.range(1, 3));
        DAsElement a = DAsElement::monomial(Z, ka, rng.next() & ((1u << ka) - 1), ONE);
        DAsElement b = DAsElement::monomial(Z, kb, rng.next() & ((1u << kb) - 1), ONE);
        DAsElement c = DAsElement::monomial(Z, kc, rng.next() & ((1u << kc) - 1), ONE);
        int i = static_cast<int>(rng.range(1, ka));
        int j = static_cast<int>(rng.range(1, kb));
        CHECK(das_compose(das_compose(a, i, b), i - 1 + j, c) ==
              das_compose(a, i, das_compose(b, j, c)));
        if (ka >= 2) {
            int pi = static_cast<int>(rng.range(1, ka - 1));
            int pj = static_cast<int>(rng.range(pi + 1, ka));
            DAsElement lhs = das_compose(das_compose(a, pi, b), pj + kb - 1, c);
            DAsElement rhs = das_compose(das_compose(a, pj, c), pi, b);
            long long bo = std::popcount(b.monomials().begin()->first);
            long long co = std::popcount(c.monomials().begin()->first);
            if ((bo & 1) && (co & 1)) rhs = rhs.scaled(Scalar::of(Z, -1));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("dAs dimensions: binomial per horizontal degree, 2^n total") {
    auto binom = [](int n, int k) {
        long long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (int n = 1; n <= 5; ++n) {
        std::vector<long long> by_h(n + 1, 0);
        for (uint64_t eps = 0; eps < (uint64_t(1) << n); ++eps) ++by_h[std::popcount(eps)];
        long long total = 0;
        for (int i = 0; i <= n; ++i) {
            CHECK(by_h[i] == binom(n, i));
            total += by_h[i];
        }
        CHECK(total == (1LL << n));
    }
}

TEST_CASE("project_to_das kills foreign generators and is a morphism") {
    // corolla m03 -> 0
    CHECK(project_to_das(one_term(Tree::corolla(0, 3))).is_zero());

    testgen::Rng rng(testgen::Rng::default_seed() + 22);
    for (int trial = 0; trial < 150; ++trial) {
        bool pure = rng.range(0, 3) > 0;
        Tree ta = random_tree(rng, static_cast<int>(rng.range(1, 4)), pure);
        Tree tb = random_tree(rng, static_cast<int>(rng.range(1, 3)), pure);
        TermSum a = one_term(ta), b = one_term(tb);
        int i = static_cast<int>(rng.range(1, ta.arity()));
        DAsElement lhs = project_to_das(partial_compose(a, i, b));
        DAsElement rhs = das_compose(project_to_das(a), i, project_to_das(b));
        CHECK(lhs == rhs);
    }
}
