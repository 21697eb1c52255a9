#pragma once

#include "dainf/algebra.hpp"

namespace dainf::fixtures {

/// Dual-numbers bidga: k.1 at (0,0), k.e at (1,0); truncated-polynomial
/// product, horizontal differential e -> 1, no vertical differential.
inline DAInfStructure dual_numbers(const CoefficientRing& R) {
    BigradedModule A(R, {{"one", {0, 0}}, {"e", {1, 0}}});
    DAInfStructure s(A);
    BigradedMap m2(s.power(2), A, {0, 0});
    m2.add_entry("one", "one⊗one", Scalar::of(R, 1));
    m2.add_entry("e", "one⊗e", Scalar::of(R, 1));
    m2.add_entry("e", "e⊗one", Scalar::of(R, 1));
    s.set_op(0, 2, m2);
    BigradedMap dh(A, A, {1, 0});
    dh.add_entry("one", "e", Scalar::of(R, 1));
    s.set_op(1, 1, dh);
    return s;
}

/// Dual numbers with the product replaced by a non-associative table.
inline DAInfStructure broken_dual_numbers(const CoefficientRing& R) {
    DAInfStructure s = dual_numbers(R);
    BigradedMap m2(s.power(2), s.carrier(), {0, 0});
    m2.add_entry("one", "one⊗one", Scalar::of(R, 1));
    m2.add_entry("e", "one⊗e", Scalar::of(R, 2)); // 1*e != (1*1)*e
    m2.add_entry("e", "e⊗one", Scalar::of(R, 1));
    s.set_op(0, 2, m2);
    return s;
}

/// A dga in horizontal degree 0 with a nontrivial transferred m3:
/// a, b in vertical degree 1; c, e in degree 2; d(b) = c, a*a = c, a*b = e.
inline DAInfStructure massey_dga(const CoefficientRing& R) {
    BigradedModule W(R, {{"a", {0, 1}}, {"b", {0, 1}}, {"c", {0, 2}}, {"e", {0, 2}}});
    DAInfStructure s(W);
    BigradedMap d(W, W, {0, 1});
    d.add_entry("c", "b", Scalar::of(R, 1));
    s.set_op(0, 1, d);
    BigradedMap m2(s.power(2), W, {0, 0});
    m2.add_entry("c", "a⊗a", Scalar::of(R, 1));
    m2.add_entry("e", "a⊗b", Scalar::of(R, 1));
    s.set_op(0, 2, m2);
    return s;
}

/// Retract of massey_dga onto its vertical homology (abar, ebar).
inline HomotopyRetract massey_retract(const CoefficientRing& R) {
    DAInfStructure W = massey_dga(R);
    BigradedModule V(R, {{"abar", {0, 1}}, {"ebar", {0, 2}}});
    BigradedMap incl(V, W.carrier(), {0, 0});
    incl.add_entry("a", "abar", Scalar::of(R, 1));
    incl.add_entry("e", "ebar", Scalar::of(R, 1));
    BigradedMap proj(W.carrier(), V, {0, 0});
    proj.add_entry("abar", "a", Scalar::of(R, 1));
    proj.add_entry("ebar", "e", Scalar::of(R, 1));
    BigradedMap h(W.carrier(), W.carrier(), {0, -1});
    h.add_entry("b", "c", Scalar::of(R, 1));
    return HomotopyRetract(std::move(W), std::move(V), std::move(incl), std::move(proj),
                           std::move(h));
}

/// Bidga with every structure map nonzero: dual numbers tensored with the
/// massey dga, product twisted by the middle swap with Koszul signs.
inline DAInfStructure mixed_bidga(const CoefficientRing& R) {
    DAInfStructure Wc = massey_dga(R);
    BigradedModule DN(R, {{"one", {0, 0}}, {"eps", {1, 0}}});
    BigradedModule M = tensor(DN, Wc.carrier());
    DAInfStructure mix(M);
    mix.set_op(0, 1, tensor_maps(BigradedMap::identity(DN), Wc.op_or_zero(0, 1)));
    BigradedMap dh(DN, DN, {1, 0});
    dh.add_entry("one", "eps", Scalar::of(R, 1));
    mix.set_op(1, 1, tensor_maps(dh, BigradedMap::identity(Wc.carrier())));
    BigradedMap muDN(tensor_power(DN, 2), DN, {0, 0});
    muDN.add_entry("one", "one⊗one", Scalar::of(R, 1));
    muDN.add_entry("eps", "one⊗eps", Scalar::of(R, 1));
    muDN.add_entry("eps", "eps⊗one", Scalar::of(R, 1));
    const BigradedModule& Wm = Wc.carrier();
    BigradedModule tgt = tensor(tensor(DN, DN), tensor(Wm, Wm));
    BigradedMap sigma(mix.power(2), tgt, {0, 0});
    for (int x = 0; x < DN.dim(); ++x)
        for (int w = 0; w < Wm.dim(); ++w)
            for (int x2 = 0; x2 < DN.dim(); ++x2)
                for (int w2 = 0; w2 < Wm.dim(); ++w2) {
                    std::string sname = DN.basis(x).name + "⊗" + Wm.basis(w).name + "⊗" +
                                        DN.basis(x2).name + "⊗" + Wm.basis(w2).name;
                    std::string tname = DN.basis(x).name + "⊗" + DN.basis(x2).name + "⊗" +
                                        Wm.basis(w).name + "⊗" + Wm.basis(w2).name;
                    bool odd = Bidegree::pairing_odd(Wm.basis(w).deg, DN.basis(x2).deg);
                    sigma.add_entry(tname, sname, Scalar::of(R, odd ? -1 : 1));
                }
    mix.set_op(0, 2, compose(tensor_maps(muDN, Wc.op_or_zero(0, 2)), sigma));
    return mix;
}

/// Two-dimensional bidga with vertical spread: 1 at (0,0), t at (0,1),
/// truncated product, no differentials.
inline DAInfStructure tiny_vertical(const CoefficientRing& R) {
    BigradedModule A(R, {{"1", {0, 0}}, {"t", {0, 1}}});
    DAInfStructure s(A);
    BigradedMap m2(s.power(2), A, {0, 0});
    m2.add_entry("1", "1⊗1", Scalar::of(R, 1));
    m2.add_entry("t", "1⊗t", Scalar::of(R, 1));
    m2.add_entry("t", "t⊗1", Scalar::of(R, 1));
    s.set_op(0, 2, m2);
    return s;
}

/// k[e]/(e^2) (x) k[t]/(t^2) with e at (1,0), t at (0,1), horizontal
/// differential e -> 1 extended as a derivation, m01 = 0. The cross Koszul
/// pairing of e and t vanishes, so the product is plainly commutative.
inline DAInfStructure bigraded_exterior(const CoefficientRing& R) {
    BigradedModule A(R, {{"1", {0, 0}}, {"e", {1, 0}}, {"t", {0, 1}}, {"et", {1, 1}}});
    DAInfStructure s(A);
    BigradedMap m2(s.power(2), A, {0, 0});
    auto add = [&](const char* a, const char* b, const char* c) {
        m2.add_entry(c, std::string(a) + "⊗" + b, Scalar::of(R, 1));
    };
    add("1", "1", "1");
    add("1", "e", "e");
    add("e", "1", "e");
    add("1", "t", "t");
    add("t", "1", "t");
    add("1", "et", "et");
    add("et", "1", "et");
    add("e", "t", "et");
    add("t", "e", "et");
    s.set_op(0, 2, m2);
    BigradedMap dh(A, A, {1, 0});
    dh.add_entry("1", "e", Scalar::of(R, 1));
    dh.add_entry("t", "et", Scalar::of(R, 1));
    s.set_op(1, 1, dh);
    return s;
}

/// Retract of mixed_bidga induced from the massey retract on the second factor.
inline HomotopyRetract mixed_retract(const CoefficientRing& R) {
    DAInfStructure mix = mixed_bidga(R);
    BigradedModule DN(R, {{"one", {0, 0}}, {"eps", {1, 0}}});
    HomotopyRetract base = massey_retract(R);
    BigradedModule V = tensor(DN, base.V);
    return HomotopyRetract(std::move(mix), std::move(V),
                           tensor_maps(BigradedMap::identity(DN), base.incl),
                           tensor_maps(BigradedMap::identity(DN), base.proj),
                           tensor_maps(BigradedMap::identity(DN), base.h));
}

} // namespace dainf::fixtures
