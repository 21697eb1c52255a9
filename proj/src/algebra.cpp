#include "dainf/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace dainf {

const BigradedModule& TensorPowerCache::power(int n) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = powers_.find(n);
    if (it != powers_.end()) return it->second;
    // references into the map stay valid across later insertions
    return powers_.emplace(n, tensor_power(base_, n)).first->second;
}

DAInfStructure::DAInfStructure(BigradedModule carrier)
    : carrier_(std::move(carrier)),
      powers_(std::make_shared<TensorPowerCache>(carrier_)) {}

const BigradedModule& DAInfStructure::power(int j) const { return powers_->power(j); }

void DAInfStructure::set_op(int i, int j, BigradedMap m) {
    if (i < 0 || j < 1) throw std::invalid_argument("DAInfStructure: op index out of range");
    if (m.degree() != Bidegree{i, 2 - (i + j)})
        throw std::invalid_argument("DAInfStructure: m(" + std::to_string(i) + "," +
                                    std::to_string(j) + ") must have bidegree (" +
                                    std::to_string(i) + "," + std::to_string(2 - i - j) + ")");
    if (m.source() != power(j) || m.target() != carrier_)
        throw std::invalid_argument("DAInfStructure: op source/target mismatch");
    if (m.is_zero()) {
        ops_.erase({i, j});
        return;
    }
    ops_.insert_or_assign({i, j}, std::move(m));
}

const BigradedMap* DAInfStructure::op(int i, int j) const {
    auto it = ops_.find({i, j});
    return it == ops_.end() ? nullptr : &it->second;
}

BigradedMap DAInfStructure::op_or_zero(int i, int j) const {
    if (const BigradedMap* m = op(i, j)) return *m;
    return BigradedMap::zero(power(j), carrier_, {i, 2 - (i + j)});
}

std::string RelationReport::to_string(const char* relation) const {
    std::ostringstream os;
    if (ok()) {
        os << relation << " relation holds at all " << checked << " reachable bidegrees";
    } else {
        os << relation << " relation fails at";
        for (const auto& [u, v] : failures) os << " (u,v)=(" << u << "," << v << ")";
    }
    return os.str();
}

BigradedMap structure_residual(const DAInfStructure& s, int u, int v) {
    BigradedMap acc = BigradedMap::zero(s.power(v), s.carrier(), {u, 3 - u - v});
    const CoefficientRing& ring = s.ring();
    for (const auto& [outer, mo] : s.ops()) {
        const auto [i, j] = outer;
        for (const auto& [inner, mi] : s.ops()) {
            const auto [p, q] = inner;
            if (i + p != u || j + q - 1 != v) continue;
            for (int r = 0; r + 1 <= j; ++r) {
                const int t = j - 1 - r;
                const long long e = static_cast<long long>(r) * q + t +
                                    static_cast<long long>(p) * j;
                BigradedMap term = compose(mo, sandwich(s.carrier(), r, mi, t));
                if (((e % 2) + 2) % 2 != 0) term = term.negated();
                acc = acc.add(term);
            }
        }
    }
    (void)ring;
    return acc;
}

RelationReport check_structure(const DAInfStructure& s, int sum_cap) {
    RelationReport report;
    std::map<std::pair<int, int>, bool> seen;
    for (const auto& [outer, mo] : s.ops()) {
        for (const auto& [inner, mi] : s.ops()) {
            (void)mo;
            (void)mi;
            const int u = outer.first + inner.first;
            const int v = outer.second + inner.second - 1;
            if (sum_cap >= 0 && u + v > sum_cap) continue;
            seen[{u, v}] = true;
        }
    }
    for (const auto& [uv, _] : seen) {
        (void)_;
        ++report.checked;
        if (!structure_residual(s, uv.first, uv.second).is_zero()) report.failures.push_back(uv);
    }
    return report;
}

const char* to_string(StructureClass c) {
    switch (c) {
        case StructureClass::bidga: return "bidga";
        case StructureClass::twisted_complex: return "twisted-complex";
        case StructureClass::classical_a_infinity: return "classical-A-infinity";
        case StructureClass::general: return "general";
    }
    return "?";
}

StructureClass classify(const DAInfStructure& s) {
    bool bidga = true, twisted = true;
    for (const auto& [ij, m] : s.ops()) {
        (void)m;
        if (ij.first + ij.second > 2) bidga = false;
        if (ij.second != 1) twisted = false;
    }
    if (bidga) return StructureClass::bidga;
    if (twisted) return StructureClass::twisted_complex;
    bool h_concentrated = true;
    for (const auto& b : s.carrier().basis())
        if (b.deg.h != 0) h_concentrated = false;
    if (h_concentrated) return StructureClass::classical_a_infinity;
    return StructureClass::general;
}

InfMorphism::InfMorphism(DAInfStructure source, DAInfStructure target)
    : src_(std::move(source)), tgt_(std::move(target)) {
    if (src_.ring() != tgt_.ring()) throw std::invalid_argument("InfMorphism: ring mismatch");
}

void InfMorphism::set_comp(int u, int v, BigradedMap f) {
    if (u < 0 || v < 1) throw std::invalid_argument("InfMorphism: component index out of range");
    if (f.degree() != Bidegree{u, 1 - u - v})
        throw std::invalid_argument("InfMorphism: f(" + std::to_string(u) + "," +
                                    std::to_string(v) + ") must have bidegree (" +
                                    std::to_string(u) + "," + std::to_string(1 - u - v) + ")");
    if (f.source() != src_.power(v) || f.target() != tgt_.carrier())
        throw std::invalid_argument("InfMorphism: component source/target mismatch");
    if (f.is_zero()) {
        comps_.erase({u, v});
        return;
    }
    comps_.insert_or_assign({u, v}, std::move(f));
}

const BigradedMap* InfMorphism::comp(int u, int v) const {
    auto it = comps_.find({u, v});
    return it == comps_.end() ? nullptr : &it->second;
}

BigradedMap InfMorphism::comp_or_zero(int u, int v) const {
    if (const BigradedMap* f = comp(u, v)) return *f;
    return BigradedMap::zero(src_.power(v), tgt_.carrier(), {u, 1 - u - v});
}

InfMorphism identity_morphism(const DAInfStructure& a) {
    InfMorphism f(a, a);
    f.set_comp(0, 1, BigradedMap::identity(a.carrier()));
    return f;
}

namespace {

// X sign of the cocomposition for a list of (p,q) bidegrees of components
long long sign_x_pairs(const std::vector<std::pair<int, int>>& pairs) {
    const int j = static_cast<int>(pairs.size());
    long long x = 0;
    for (int k = 1; k <= j - 1; ++k) {
        long long tail = 0;
        for (int l = k + 1; l <= j; ++l) tail += pairs[l - 1].first + pairs[l - 1].second;
        x += static_cast<long long>(pairs[k - 1].first + pairs[k - 1].second) * (j + k) +
             static_cast<long long>(pairs[k - 1].second) * tail;
    }
    return x;
}

// enumerate all j-tuples of morphism components and hand them to sink
void for_each_tuple(const InfMorphism& f, int j,
                    const std::function<void(const std::vector<std::pair<int, int>>&)>& sink,
                    std::vector<std::pair<int, int>>& acc) {
    if (static_cast<int>(acc.size()) == j) {
        sink(acc);
        return;
    }
    for (const auto& [pq, m] : f.comps()) {
        (void)m;
        acc.push_back(pq);
        for_each_tuple(f, j, sink, acc);
        acc.pop_back();
    }
}

} // namespace

RelationReport check_morphism(const InfMorphism& f) {
    const DAInfStructure& A = f.source();
    const DAInfStructure& B = f.target();
    // accumulate LHS - RHS per (u,v)
    std::map<std::pair<int, int>, BigradedMap> diff;
    auto add_term = [&](int u, int v, const BigradedMap& term, bool negate) {
        auto it = diff.find({u, v});
        if (it == diff.end()) {
            BigradedMap z =
                BigradedMap::zero(A.power(v), B.carrier(), {u, 2 - u - v});
            it = diff.emplace(std::make_pair(u, v), std::move(z)).first;
        }
        it->second = negate ? it->second.sub(term) : it->second.add(term);
    };
    // LHS: f_ij ( 1^r (x) m^A_pq (x) 1^t )
    for (const auto& [fij, fm] : f.comps()) {
        const auto [i, j] = fij;
        for (const auto& [apq, am] : A.ops()) {
            const auto [p, q] = apq;
            const int u = i + p, v = j + q - 1;
            for (int r = 0; r + 1 <= j; ++r) {
                const int t = j - 1 - r;
                const long long e = static_cast<long long>(r) * q + t +
                                    static_cast<long long>(p) * j;
                BigradedMap term = compose(fm, sandwich(A.carrier(), r, am, t));
                add_term(u, v, term, ((e % 2) + 2) % 2 != 0);
            }
        }
    }
    // RHS: (-1)^{u+X} m^B_ij (f_{p1q1} (x) ... (x) f_{pjqj}), subtracted
    for (const auto& [bij, bm] : B.ops()) {
        const auto [i, j] = bij;
        std::vector<std::pair<int, int>> acc;
        for_each_tuple(
            f, j,
            [&](const std::vector<std::pair<int, int>>& pairs) {
                int u = i, v = 0;
                for (const auto& [p, q] : pairs) {
                    u += p;
                    v += q;
                }
                std::vector<BigradedMap> factors;
                factors.reserve(pairs.size());
                for (const auto& [p, q] : pairs) factors.push_back(*f.comp(p, q));
                BigradedMap term = compose(bm, tensor_many(factors));
                const long long e = u + sign_x_pairs(pairs);
                // subtract: LHS - RHS accumulates
                add_term(u, v, term, ((e % 2) + 2) % 2 == 0);
            },
            acc);
    }
    RelationReport report;
    for (const auto& [uv, d] : diff) {
        ++report.checked;
        if (!d.is_zero()) report.failures.push_back(uv);
    }
    return report;
}

InfMorphism compose_morphisms(const InfMorphism& g, const InfMorphism& f) {
    if (!(f.target().carrier() == g.source().carrier()))
        throw std::invalid_argument("compose_morphisms: target/source mismatch");
    InfMorphism gf(f.source(), g.target());
    std::map<std::pair<int, int>, BigradedMap> acc;
    for (const auto& [gij, gm] : g.comps()) {
        const auto [i, j] = gij;
        std::vector<std::pair<int, int>> tuple;
        for_each_tuple(
            f, j,
            [&](const std::vector<std::pair<int, int>>& pairs) {
                int u = i, v = 0;
                for (const auto& [p, q] : pairs) {
                    u += p;
                    v += q;
                }
                std::vector<BigradedMap> factors;
                for (const auto& [p, q] : pairs) factors.push_back(*f.comp(p, q));
                BigradedMap term = compose(gm, tensor_many(factors));
                if (sign_x_pairs(pairs) % 2 != 0) term = term.negated();
                auto it = acc.find({u, v});
                if (it == acc.end())
                    acc.emplace(std::make_pair(u, v), term);
                else
                    it->second = it->second.add(term);
            },
            tuple);
    }
    for (auto& [uv, m] : acc)
        if (!m.is_zero()) gf.set_comp(uv.first, uv.second, std::move(m));
    return gf;
}

namespace {

struct PageData {
    GradedHomology h;       // vertical homology with induced data
    BigradedMap delta;      // induced horizontal differential on h.H
};

PageData vertical_page(const DAInfStructure& s) {
    BigradedMap d0 = s.op_or_zero(0, 1);
    if (!compose(d0, d0).is_zero())
        throw std::invalid_argument("check_equivalence: m01 does not square to zero");
    PageData p{graded_homology(s.carrier(), d0), BigradedMap()};
    BigradedMap d1 = s.op_or_zero(1, 1);
    p.delta = induced_map(p.h, d0, p.h, d0, d1);
    if (!compose(p.delta, p.delta).is_zero())
        throw std::domain_error("check_equivalence: induced horizontal map does not square to zero");
    return p;
}

} // namespace

bool check_equivalence(const InfMorphism& f, EquivalenceLevel level) {
    const CoefficientRing& ring = f.source().ring();
    if (!ring.is_field()) throw std::domain_error("check_equivalence: field coefficients required");
    BigradedMap f0 = f.comp_or_zero(0, 1);
    BigradedMap dA = f.source().op_or_zero(0, 1);
    BigradedMap dB = f.target().op_or_zero(0, 1);
    if (compose(dB, f0) != compose(f0, dA))
        throw std::invalid_argument("check_equivalence: f01 is not a chain map for m01");
    PageData pa = vertical_page(f.source());
    PageData pb = vertical_page(f.target());
    BigradedMap F = induced_map(pa.h, dA, pb.h, dB, f0);
    if (level == EquivalenceLevel::E1) return is_isomorphism_on(F, ring);
    // E2: homology of the induced horizontal differential
    if (compose(pb.delta, F) != compose(F, pa.delta))
        throw std::invalid_argument(
            "check_equivalence: induced map is not a chain map for the horizontal differential");
    GradedHomology ha2 = graded_homology(pa.h.H, pa.delta);
    GradedHomology hb2 = graded_homology(pb.h.H, pb.delta);
    BigradedMap F2 = induced_map(ha2, pa.delta, hb2, pb.delta, F);
    return is_isomorphism_on(F2, ring);
}

HomotopyRetract::HomotopyRetract(DAInfStructure w, BigradedModule v, BigradedMap i, BigradedMap p,
                                 BigradedMap hh)
    : W(std::move(w)), V(std::move(v)), incl(std::move(i)), proj(std::move(p)), h(std::move(hh)) {
    if (incl.degree() != Bidegree{0, 0} || proj.degree() != Bidegree{0, 0})
        throw std::invalid_argument("HomotopyRetract: i and p must have bidegree (0,0)");
    if (h.degree() != Bidegree{0, -1})
        throw std::invalid_argument("HomotopyRetract: h must have bidegree (0,-1)");
    if (incl.source() != V || incl.target() != W.carrier() || proj.source() != W.carrier() ||
        proj.target() != V || h.source() != W.carrier() || h.target() != W.carrier())
        throw std::invalid_argument("HomotopyRetract: map endpoints do not match V and W");
    if (compose(proj, incl) != BigradedMap::identity(V))
        throw std::invalid_argument("HomotopyRetract: p i != 1");
    BigradedMap d = W.op_or_zero(0, 1);
    BigradedMap lhs = BigradedMap::identity(W.carrier()).sub(compose(incl, proj));
    BigradedMap rhs = compose(d, h).add(compose(h, d));
    if (lhs != rhs) throw std::invalid_argument("HomotopyRetract: 1 - ip != dh + hd");
    // i and p must be chain maps for the induced differential on V
    BigradedMap dv = compose(proj, compose(d, incl));
    if (compose(d, incl) != compose(incl, dv) || compose(dv, proj) != compose(proj, d))
        throw std::invalid_argument("HomotopyRetract: i/p are not chain maps");
}

DAInfStructure transfer(const HomotopyRetract& r, int cap) {
    const DAInfStructure& W = r.W;
    if (!W.ring().is_field()) throw std::domain_error("transfer: field coefficients required");
    for (const auto& [ij, m] : W.ops()) {
        (void)m;
        if (ij.first + ij.second > 2)
            throw std::invalid_argument("transfer: W must be a bidga (ops only at (0,1),(0,2),(1,1))");
    }
    if (!check_structure(W).ok())
        throw std::invalid_argument("transfer: W does not satisfy the structure relation");
    const BigradedMap m02 = W.op_or_zero(0, 2);
    const BigradedMap m11 = W.op_or_zero(1, 1);

    DAInfStructure out(r.V);
    BigradedMap dv = compose(r.proj, compose(W.op_or_zero(0, 1), r.incl));
    if (!dv.is_zero()) out.set_op(0, 1, dv);

    // E(u,v) : V^(x)v -> W of bidegree (u, 2-u-v), mirroring the cogenerator
    // recursion; hE wraps non-identity stages with the homotopy.
    std::map<std::pair<int, int>, BigradedMap> E;
    auto hE = [&](int u, int v) -> BigradedMap {
        if (u == 0 && v == 1) return r.incl;
        return compose(r.h, E.at({u, v}));
    };
    for (int total = 2; total <= cap; ++total) {
        for (int u = 0; u <= total; ++u) {
            const int v = total - u;
            if (v < 1) continue;
            BigradedMap acc = BigradedMap::zero(out.power(v), W.carrier(), {u, 2 - u - v});
            if (u >= 1) acc = acc.add(compose(m11, hE(u - 1, v)));
            if (v >= 2) {
                for (int rr = 0; rr <= u; ++rr) {
                    const int t = u - rr;
                    for (int ss = 1; ss <= v - 1; ++ss) {
                        const int w = v - ss;
                        const Bidegree s_mu_rs{rr, -rr - ss};
                        const Bidegree mu_tw{t, 1 - t - w};
                        const long long e = Bidegree::pairing(s_mu_rs, mu_tw) +
                                            static_cast<long long>(rr) * w;
                        BigradedMap term =
                            compose(m02, tensor_maps(hE(rr, ss), hE(t, w)));
                        if (((e % 2) + 2) % 2 != 0) term = term.negated();
                        acc = acc.add(term);
                    }
                }
            }
            E.emplace(std::make_pair(u, v), acc);
            BigradedMap muv = compose(r.proj, acc);
            if (!muv.is_zero()) out.set_op(u, v, std::move(muv));
        }
    }
    return out;
}

} // namespace dainf
