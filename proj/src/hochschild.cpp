#include "dainf/hochschild.hpp"

#include <stdexcept>

namespace dainf {

HochschildElement::HochschildElement(BigradedModule carrier, long long total_degree)
    : carrier_(std::move(carrier)),
      total_(total_degree),
      powers_(std::make_shared<TensorPowerCache>(carrier_)) {}

const BigradedModule& HochschildElement::power(int n) const { return powers_->power(n); }

void HochschildElement::set_component(int n, int k, BigradedMap m) {
    if (n < 1) throw std::invalid_argument("HochschildElement: arity must be >= 1");
    const Bidegree want{static_cast<long long>(k), total_ - n - k};
    if (m.degree() != want)
        throw std::invalid_argument("HochschildElement: component (" + std::to_string(n) + "," +
                                    std::to_string(k) + ") must have bidegree " + want.to_string());
    if (m.source() != power(n) || m.target() != carrier_)
        throw std::invalid_argument("HochschildElement: component endpoints mismatch");
    if (m.is_zero()) {
        comps_.erase({n, k});
        return;
    }
    comps_.insert_or_assign({n, k}, std::move(m));
}

void HochschildElement::add_component(int n, int k, const BigradedMap& m) {
    if (const BigradedMap* cur = component(n, k)) {
        set_component(n, k, cur->add(m));
    } else {
        set_component(n, k, m);
    }
}

const BigradedMap* HochschildElement::component(int n, int k) const {
    auto it = comps_.find({n, k});
    return it == comps_.end() ? nullptr : &it->second;
}

BigradedMap HochschildElement::component_or_zero(int n, int k) const {
    if (const BigradedMap* m = component(n, k)) return *m;
    return BigradedMap::zero(power(n), carrier_, {k, total_ - n - k});
}

HochschildElement HochschildElement::add(const HochschildElement& o) const {
    if (!(carrier_ == o.carrier_) || total_ != o.total_)
        throw std::invalid_argument("HochschildElement: incompatible sum");
    HochschildElement r = *this;
    for (const auto& [nk, m] : o.comps_) r.add_component(nk.first, nk.second, m);
    return r;
}

HochschildElement HochschildElement::sub(const HochschildElement& o) const {
    return add(o.negated());
}

HochschildElement HochschildElement::negated() const {
    HochschildElement r(carrier_, total_);
    for (const auto& [nk, m] : comps_) r.comps_.emplace(nk, m.negated());
    return r;
}

bool HochschildElement::operator==(const HochschildElement& o) const {
    if (!(carrier_ == o.carrier_) || total_ != o.total_) return false;
    return sub(o).is_zero();
}

namespace {

// transported convolution sign for one component pair and insertion slot
bool star_sign_odd(int n, long long j_right, int k, int m, long long l, int r) {
    // (n+1)(m+1) + r(m+1) + j(n+1) + k(m+j+l+1), j = vertical of the right
    const long long e = static_cast<long long>(n + 1) * (m + 1) +
                        static_cast<long long>(r) * (m + 1) + j_right * (n + 1) +
                        static_cast<long long>(k) * (m + j_right + l + 1);
    return ((e % 2) + 2) % 2 != 0;
}

HochschildElement star_impl(const HochschildElement& f, const HochschildElement& g, bool rw) {
    if (!(f.carrier() == g.carrier())) throw std::invalid_argument("star: carrier mismatch");
    HochschildElement out(f.carrier(), f.total_degree() + g.total_degree() - 1);
    for (const auto& [nk, fm] : f.components()) {
        const auto [n, k] = nk;
        for (const auto& [ml, gm] : g.components()) {
            const auto [m, l] = ml;
            const long long j = g.total_degree() - m - l; // vertical of the right factor
            for (int r = 0; r + 1 <= n; ++r) {
                const int t = n - 1 - r;
                BigradedMap term = compose(fm, sandwich(f.carrier(), r, gm, t));
                bool neg = star_sign_odd(n, j, k, m, l, r);
                if (rw && ((static_cast<long long>(k) * (m + j + l + 1)) % 2 + 2) % 2 != 0)
                    neg = !neg;
                if (neg) term = term.negated();
                out.add_component(n + m - 1, k + l, term);
            }
        }
    }
    return out;
}

} // namespace

HochschildElement star(const HochschildElement& f, const HochschildElement& g) {
    return star_impl(f, g, false);
}

HochschildElement rw_circ(const HochschildElement& f, const HochschildElement& g) {
    return star_impl(f, g, true);
}

HochschildElement bracket(const HochschildElement& f, const HochschildElement& g) {
    HochschildElement fg = star(f, g);
    HochschildElement gf = star(g, f);
    const long long e = (f.total_degree() - 1) * (g.total_degree() - 1);
    return ((e % 2) + 2) % 2 != 0 ? fg.add(gf) : fg.sub(gf);
}

// The two pre-Lie products differ per left component by the gauge factor
// (-1)^{k(T_G+1)}; the bracket in the other convention antisymmetrizes
// compatibly with that gauge, so it is the gauge-weighted sum of the star
// brackets of the left components. For total-degree-1 right factors the
// factor is trivial and both brackets literally coincide.
HochschildElement rw_bracket(const HochschildElement& f, const HochschildElement& g) {
    HochschildElement out(f.carrier(), f.total_degree() + g.total_degree() - 1);
    for (const auto& [nk, fm] : f.components()) {
        HochschildElement single(f.carrier(), f.total_degree());
        single.set_component(nk.first, nk.second, fm);
        HochschildElement term = bracket(single, g);
        const long long gauge = static_cast<long long>(nk.second) * (g.total_degree() + 1);
        out = out.add(((gauge % 2) + 2) % 2 != 0 ? term.negated() : term);
    }
    return out;
}

HochschildElement differential(const HochschildElement& m, const HochschildElement& f) {
    if (m.total_degree() != 2)
        throw std::invalid_argument("differential: m must have total degree 2");
    if (!star(m, m).is_zero()) throw std::domain_error("differential: m is not square-zero");
    return bracket(m, f);
}

HochschildElement structure_element(const DAInfStructure& s) {
    HochschildElement e(s.carrier(), 2);
    for (const auto& [ij, m] : s.ops()) e.set_component(ij.second, ij.first, m);
    return e;
}

DAInfStructure element_to_structure(const HochschildElement& e) {
    if (e.total_degree() != 2)
        throw std::invalid_argument("element_to_structure: total degree must be 2");
    DAInfStructure s(e.carrier());
    for (const auto& [nk, m] : e.components()) s.set_op(nk.second, nk.first, m);
    return s;
}

TwistingCochain::TwistingCochain(DAInfStructure b, HochschildElement el)
    : base(std::move(b)), a(std::move(el)) {
    if (!(base.carrier() == a.carrier()))
        throw std::invalid_argument("TwistingCochain: carrier mismatch");
    if (a.total_degree() != 2)
        throw std::invalid_argument("TwistingCochain: cochain must have total degree 2");
    if (base.op(0, 1) != nullptr)
        throw std::invalid_argument("TwistingCochain: base must have m01 = 0");
    for (const auto& [ij, m] : base.ops()) {
        (void)m;
        if (ij.first + ij.second > 2)
            throw std::invalid_argument("TwistingCochain: base must be a bidga");
    }
    for (const auto& [nk, m] : a.components()) {
        (void)m;
        if (nk.first + nk.second <= 2)
            throw std::invalid_argument("TwistingCochain: support must satisfy i+j >= 3");
    }
}

HochschildElement mc_residual(const TwistingCochain& t) {
    HochschildElement m = structure_element(t.base);
    if (!star(m, m).is_zero())
        throw std::invalid_argument("mc_residual: base is not a bidga structure");
    return bracket(m, t.a).add(star(t.a, t.a));
}

PerturbResult perturb(const TwistingCochain& t, const HochschildElement& b, PerturbCase c, int k,
                      int n) {
    if (k + n < 3) throw std::invalid_argument("perturb: k+n must be >= 3");
    if (b.total_degree() != 1)
        throw std::invalid_argument("perturb: b must have total degree 1");
    if (b.components().size() > 1)
        throw std::invalid_argument("perturb: b must be a single component");
    // expected position of b
    const int want_arity = (c == PerturbCase::A) ? n - 1 : n;
    const int want_k = (c == PerturbCase::A) ? k : k - 1;
    if (want_arity < 1 || want_k < 0)
        throw std::invalid_argument("perturb: position out of range for this case");
    if (!b.is_zero()) {
        const auto& [nk, m] = *b.components().begin();
        (void)m;
        if (nk.first != want_arity || nk.second != want_k)
            throw std::invalid_argument("perturb: b sits at the wrong position for this case");
    }
    HochschildElement del(t.base.carrier(), 2);
    HochschildElement mu(t.base.carrier(), 2);
    if (const BigradedMap* m11 = t.base.op(1, 1)) del.set_component(1, 1, *m11);
    if (const BigradedMap* m02 = t.base.op(0, 2)) mu.set_component(2, 0, *m02);
    // preconditions
    if (c == PerturbCase::A) {
        if (!bracket(del, b).is_zero())
            throw std::invalid_argument("perturb: case A requires [m11, b] = 0");
    } else {
        if (!bracket(mu, b).is_zero())
            throw std::invalid_argument("perturb: case B requires [m02, b] = 0");
    }
    HochschildElement correction = (c == PerturbCase::A) ? bracket(mu, b) : bracket(del, b);
    PerturbResult out;
    // unchanged positions
    for (const auto& [nk, m] : t.a.components()) {
        const int arity = nk.first, hor = nk.second; // (v, u) in the statement's (u,v)
        bool keep;
        if (c == PerturbCase::A)
            keep = hor < k || arity < n - 1 || (hor == k && arity == n - 1);
        else
            keep = hor < k - 1 || arity < n || (hor == k - 1 && arity == n);
        if (keep) out.components.emplace(std::make_pair(hor, arity), m);
    }
    BigradedMap akn = t.a.component_or_zero(n, k);
    out.components.insert_or_assign({k, n}, akn.sub(correction.component_or_zero(n, k)));
    return out;
}

namespace {

struct CochainBasis {
    // one entry per basis cochain: (arity, horizontal, src index, tgt index)
    struct Item {
        int n;
        long long k;
        int src;
        int tgt;
    };
    std::vector<Item> items;
    std::map<std::tuple<int, long long, int, int>, int> index;

    void push(int n, long long k, int src, int tgt) {
        index[{n, k, src, tgt}] = static_cast<int>(items.size());
        items.push_back({n, k, src, tgt});
    }
};

// k >= -H bounds the arity by n <= sigma + H; the cells below that are
// enumerated from n = 1 and filter out empty ones by degree arithmetic.
CochainBasis cochain_basis(const DAInfStructure& base, long long sigma, long long r,
                           long long hmax) {
    CochainBasis b;
    for (int n = 1; n <= sigma + hmax; ++n) {
        const long long k = sigma - n;
        const BigradedModule& pw = base.power(n);
        const BigradedModule& a = base.carrier();
        for (int s = 0; s < pw.dim(); ++s)
            for (int t = 0; t < a.dim(); ++t)
                if (a.basis(t).deg == Bidegree{pw.basis(s).deg.h - k, pw.basis(s).deg.v + r})
                    b.push(n, k, s, t);
    }
    return b;
}

} // namespace

long long hh_bigraded(const DAInfStructure& base, long long s, long long r, bool parallel) {
    if (!base.ring().is_field()) throw std::domain_error("hh_bigraded: field coefficients required");
    if (base.op(0, 1) != nullptr) throw std::invalid_argument("hh_bigraded: base must have m01 = 0");
    for (const auto& [ij, m] : base.ops()) {
        (void)m;
        if (ij.first + ij.second > 2)
            throw std::invalid_argument("hh_bigraded: base must be a bidga");
    }
    HochschildElement m = structure_element(base);
    if (!star(m, m).is_zero())
        throw std::invalid_argument("hh_bigraded: base is not a bidga structure");

    long long hmax = 0;
    for (const auto& bel : base.carrier().basis()) hmax = std::max(hmax, bel.deg.h);

    auto boundary_rank = [&](long long sigma) -> long long {
        CochainBasis dom = cochain_basis(base, sigma, r, hmax);
        CochainBasis cod = cochain_basis(base, sigma + 1, r, hmax);
        if (dom.items.empty() || cod.items.empty()) return 0;
        DenseMat mat(static_cast<int>(cod.items.size()), static_cast<int>(dom.items.size()));
        for (int c = 0; c < static_cast<int>(dom.items.size()); ++c) {
            const auto& it = dom.items[c];
            HochschildElement e(base.carrier(), it.n + it.k + r);
            BigradedMap single = BigradedMap::zero(base.power(it.n), base.carrier(),
                                                   {it.k, r});
            single.add_entry(it.tgt, it.src, Scalar::of(base.ring(), 1));
            e.set_component(it.n, static_cast<int>(it.k), single);
            HochschildElement de = bracket(m, e);
            for (const auto& [nk, dm] : de.components()) {
                for (int src = 0; src < dm.source().dim(); ++src)
                    for (const auto& [tgt, coeff] : dm.column(src)) {
                        auto key = std::make_tuple(nk.first, static_cast<long long>(nk.second),
                                                   src, tgt);
                        auto found = cod.index.find(key);
                        if (found == cod.index.end())
                            throw std::domain_error("hh_bigraded: boundary leaves the window");
                        mat.at(found->second, c) = coeff;
                    }
            }
        }
        return rank(mat, base.ring(), parallel);
    };

    CochainBasis here = cochain_basis(base, s, r, hmax);
    const long long dim = static_cast<long long>(here.items.size());
    return dim - boundary_rank(s) - boundary_rank(s - 1);
}

} // namespace dainf
