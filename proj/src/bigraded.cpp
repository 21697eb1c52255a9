#include "dainf/bigraded.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dainf {

BigradedModule::BigradedModule(CoefficientRing ring, std::vector<BasisElement> basis)
    : ring_(ring), basis_(std::move(basis)) {
    for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
        const auto& b = basis_[i];
        if (b.deg.h < 0)
            throw std::invalid_argument("BigradedModule: basis element '" + b.name +
                                        "' has negative horizontal degree");
        if (!index_.emplace(b.name, i).second)
            throw std::invalid_argument("BigradedModule: duplicate basis name '" + b.name + "'");
    }
}

int BigradedModule::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

bool BigradedModule::operator==(const BigradedModule& o) const {
    if (ring_ != o.ring_ || basis_.size() != o.basis_.size()) return false;
    for (size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name != o.basis_[i].name || basis_[i].deg != o.basis_[i].deg) return false;
    return true;
}

std::map<Bidegree, int> BigradedModule::dims_by_degree() const {
    std::map<Bidegree, int> d;
    for (const auto& b : basis_) ++d[b.deg];
    return d;
}

BigradedModule tensor(const BigradedModule& m, const BigradedModule& n) {
    if (m.ring() != n.ring()) throw std::invalid_argument("tensor: ring mismatch");
    std::vector<BasisElement> basis;
    basis.reserve(static_cast<size_t>(m.dim()) * n.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < n.dim(); ++j)
            basis.push_back({m.basis(i).name + "⊗" + n.basis(j).name,
                             m.basis(i).deg + n.basis(j).deg});
    return BigradedModule(m.ring(), std::move(basis));
}

BigradedModule tensor_power(const BigradedModule& m, int n) {
    if (n < 1) throw std::invalid_argument("tensor_power: n must be >= 1");
    BigradedModule r = m;
    for (int k = 1; k < n; ++k) r = tensor(r, m);
    return r;
}

BigradedMap::BigradedMap(BigradedModule src, BigradedModule tgt, Bidegree deg)
    : src_(std::move(src)), tgt_(std::move(tgt)), deg_(deg), cols_(src_.dim()) {
    if (src_.ring() != tgt_.ring()) throw std::invalid_argument("BigradedMap: ring mismatch");
}

BigradedMap BigradedMap::identity(const BigradedModule& m) {
    BigradedMap f(m, m, {0, 0});
    for (int i = 0; i < m.dim(); ++i) f.cols_[i].emplace_back(i, Scalar::of(m.ring(), 1));
    return f;
}

BigradedMap BigradedMap::zero(const BigradedModule& src, const BigradedModule& tgt, Bidegree deg) {
    return BigradedMap(src, tgt, deg);
}

void BigradedMap::add_entry(int tgt_index, int src_index, const Scalar& c) {
    if (src_index < 0 || src_index >= src_.dim() || tgt_index < 0 || tgt_index >= tgt_.dim())
        throw std::invalid_argument("BigradedMap: index out of range");
    const Bidegree s = src_.basis(src_index).deg;
    const Bidegree t = tgt_.basis(tgt_index).deg;
    if (t.h != s.h - deg_.h || t.v != s.v + deg_.v)
        throw std::invalid_argument("BigradedMap: entry " + tgt_.basis(tgt_index).name + " <- " +
                                    src_.basis(src_index).name + " violates bidegree " +
                                    deg_.to_string());
    if (c.is_zero()) return;
    auto& col = cols_[src_index];
    for (auto& [ti, coeff] : col) {
        if (ti == tgt_index) {
            coeff = coeff.add(c, ring());
            if (coeff.is_zero()) {
                col.erase(std::remove_if(col.begin(), col.end(),
                                         [&](const auto& e) { return e.first == tgt_index; }),
                          col.end());
            }
            return;
        }
    }
    col.emplace_back(tgt_index, c);
}

void BigradedMap::add_entry(const std::string& tgt, const std::string& src, const Scalar& c) {
    int ti = tgt_.index_of(tgt), si = src_.index_of(src);
    if (ti < 0) throw std::invalid_argument("BigradedMap: unknown target basis name '" + tgt + "'");
    if (si < 0) throw std::invalid_argument("BigradedMap: unknown source basis name '" + src + "'");
    add_entry(ti, si, c);
}

Scalar BigradedMap::entry(int tgt_index, int src_index) const {
    for (const auto& [ti, c] : cols_[src_index])
        if (ti == tgt_index) return c;
    return Scalar::zero();
}

bool BigradedMap::is_zero() const {
    for (const auto& col : cols_)
        if (!col.empty()) return false;
    return true;
}

bool BigradedMap::operator==(const BigradedMap& o) const {
    if (src_ != o.src_ || tgt_ != o.tgt_ || deg_ != o.deg_) return false;
    for (int j = 0; j < src_.dim(); ++j) {
        auto a = cols_[j];
        auto b = o.cols_[j];
        auto key = [](const std::pair<int, Scalar>& x, const std::pair<int, Scalar>& y) {
            return x.first < y.first;
        };
        std::sort(a.begin(), a.end(), key);
        std::sort(b.begin(), b.end(), key);
        if (a.size() != b.size()) return false;
        for (size_t k = 0; k < a.size(); ++k)
            if (a[k].first != b[k].first || a[k].second != b[k].second) return false;
    }
    return true;
}

BigradedMap BigradedMap::add(const BigradedMap& o) const {
    if (src_ != o.src_ || tgt_ != o.tgt_ || deg_ != o.deg_)
        throw std::invalid_argument("BigradedMap::add: incompatible maps");
    BigradedMap r = *this;
    for (int j = 0; j < src_.dim(); ++j)
        for (const auto& [ti, c] : o.cols_[j]) r.add_entry(ti, j, c);
    return r;
}

BigradedMap BigradedMap::sub(const BigradedMap& o) const { return add(o.negated()); }

BigradedMap BigradedMap::scaled(const Scalar& c) const {
    BigradedMap r(src_, tgt_, deg_);
    if (c.is_zero()) return r;
    for (int j = 0; j < src_.dim(); ++j)
        for (const auto& [ti, e] : cols_[j]) r.cols_[j].emplace_back(ti, e.mul(c, ring()));
    return r;
}

BigradedMap BigradedMap::negated() const {
    BigradedMap r(src_, tgt_, deg_);
    for (int j = 0; j < src_.dim(); ++j)
        for (const auto& [ti, e] : cols_[j]) r.cols_[j].emplace_back(ti, e.neg(ring()));
    return r;
}

std::string BigradedMap::to_string() const {
    std::ostringstream os;
    os << "map" << deg_.to_string() << "{";
    bool first = true;
    for (int j = 0; j < src_.dim(); ++j) {
        for (const auto& [ti, c] : cols_[j]) {
            if (!first) os << ", ";
            first = false;
            os << src_.basis(j).name << "->" << c.to_string() << "*" << tgt_.basis(ti).name;
        }
    }
    os << "}";
    return os.str();
}

BigradedMap compose(const BigradedMap& g, const BigradedMap& f) {
    if (f.tgt_ != g.src_) throw std::invalid_argument("compose: target/source mismatch");
    BigradedMap r(f.src_, g.tgt_, f.deg_ + g.deg_);
    const auto& ring = f.ring();
    for (int j = 0; j < f.src_.dim(); ++j) {
        std::map<int, Scalar> acc;
        for (const auto& [mid, a] : f.cols_[j])
            for (const auto& [ti, b] : g.cols_[mid]) {
                auto it = acc.find(ti);
                Scalar prod = b.mul(a, ring);
                if (it == acc.end()) acc.emplace(ti, prod);
                else it->second = it->second.add(prod, ring);
            }
        for (auto& [ti, c] : acc)
            if (!c.is_zero()) r.cols_[j].emplace_back(ti, std::move(c));
    }
    return r;
}

BigradedMap tensor_maps(const BigradedMap& f, const BigradedMap& g) {
    if (f.ring() != g.ring()) throw std::invalid_argument("tensor_maps: ring mismatch");
    BigradedModule src = tensor(f.source(), g.source());
    BigradedModule tgt = tensor(f.target(), g.target());
    BigradedMap r(std::move(src), std::move(tgt), f.degree() + g.degree());
    const auto& ring = f.ring();
    const int gsrc = g.source().dim(), gtgt = g.target().dim();
    for (int xj = 0; xj < f.source().dim(); ++xj) {
        const bool flip = Bidegree::pairing_odd(g.degree(), f.source().basis(xj).deg);
        for (const auto& [xi, a] : f.cols_[xj]) {
            for (int yj = 0; yj < gsrc; ++yj) {
                for (const auto& [yi, b] : g.cols_[yj]) {
                    Scalar c = a.mul(b, ring);
                    if (flip) c = c.neg(ring);
                    r.cols_[xj * gsrc + yj].emplace_back(xi * gtgt + yi, std::move(c));
                }
            }
        }
    }
    return r;
}

BigradedMap tensor_many(const std::vector<BigradedMap>& factors) {
    if (factors.empty()) throw std::invalid_argument("tensor_many: no factors");
    BigradedMap r = factors[0];
    for (size_t k = 1; k < factors.size(); ++k) r = tensor_maps(r, factors[k]);
    return r;
}

BigradedMap sandwich(const BigradedModule& ambient, int left, const BigradedMap& g, int right) {
    std::vector<BigradedMap> factors;
    factors.reserve(left + 1 + right);
    BigradedMap id = BigradedMap::identity(ambient);
    for (int k = 0; k < left; ++k) factors.push_back(id);
    factors.push_back(g);
    for (int k = 0; k < right; ++k) factors.push_back(id);
    return tensor_many(factors);
}

VerticalBicomplex::VerticalBicomplex(BigradedModule m, BigradedMap diff)
    : module(std::move(m)), d(std::move(diff)) {
    if (d.source() != module || d.target() != module)
        throw std::invalid_argument("VerticalBicomplex: differential must be an endomorphism");
    if (d.degree() != Bidegree{0, 1})
        throw std::invalid_argument("VerticalBicomplex: differential must have bidegree (0,1)");
    if (!compose(d, d).is_zero())
        throw std::invalid_argument("VerticalBicomplex: differential does not square to zero");
}

VerticalBicomplex tensor(const VerticalBicomplex& a, const VerticalBicomplex& b) {
    BigradedMap d = tensor_maps(a.d, BigradedMap::identity(b.module))
                        .add(tensor_maps(BigradedMap::identity(a.module), b.d));
    return VerticalBicomplex(tensor(a.module, b.module), std::move(d));
}

VerticalBicomplex shift(const VerticalBicomplex& v) {
    std::vector<BasisElement> basis;
    basis.reserve(v.module.dim());
    for (const auto& b : v.module.basis()) basis.push_back({b.name, {b.deg.h, b.deg.v - 1}});
    BigradedModule sm(v.module.ring(), std::move(basis));
    BigradedMap d(sm, sm, {0, 1});
    for (int j = 0; j < v.module.dim(); ++j)
        for (const auto& [ti, c] : v.d.column(j)) d.add_entry(ti, j, c.neg(v.module.ring()));
    return VerticalBicomplex(std::move(sm), std::move(d));
}

} // namespace dainf
