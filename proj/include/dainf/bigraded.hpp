#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dainf/scalar.hpp"

namespace dainf {

/// (horizontal, vertical) bidegree. Horizontal is homological (maps of
/// bidegree (u,v) lower it by u), vertical cohomological (raised by v).
struct Bidegree {
    long long h = 0;
    long long v = 0;

    Bidegree operator+(const Bidegree& o) const { return {h + o.h, v + o.v}; }
    Bidegree operator-(const Bidegree& o) const { return {h - o.h, v - o.v}; }
    bool operator==(const Bidegree& o) const { return h == o.h && v == o.v; }
    bool operator!=(const Bidegree& o) const { return !(*this == o); }
    bool operator<(const Bidegree& o) const { return h != o.h ? h < o.h : v < o.v; }

    /// Koszul pairing |c||d| = c.h*d.h + c.v*d.v.
    static long long pairing(const Bidegree& c, const Bidegree& d) { return c.h * d.h + c.v * d.v; }
    static bool pairing_odd(const Bidegree& c, const Bidegree& d) { return (pairing(c, d) & 1) != 0; }

    std::string to_string() const { return "(" + std::to_string(h) + "," + std::to_string(v) + ")"; }
};

struct BasisElement {
    std::string name;
    Bidegree deg;
};

/// Finite free (N,Z)-bigraded module with an ordered basis. Basis elements
/// have h >= 0 and unique names. Immutable after construction.
class BigradedModule {
public:
    BigradedModule() = default;
    BigradedModule(CoefficientRing ring, std::vector<BasisElement> basis);

    const CoefficientRing& ring() const { return ring_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const BasisElement& basis(int i) const { return basis_[i]; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    /// -1 if absent.
    int index_of(const std::string& name) const;

    bool operator==(const BigradedModule& o) const;
    bool operator!=(const BigradedModule& o) const { return !(*this == o); }

    /// Dimension in each occupied bidegree.
    std::map<Bidegree, int> dims_by_degree() const;

private:
    CoefficientRing ring_;
    std::vector<BasisElement> basis_;
    std::map<std::string, int> index_;
};

/// Tensor product; basis ordered lexicographically in factor order, degrees
/// add componentwise. Throws on ring mismatch.
BigradedModule tensor(const BigradedModule& m, const BigradedModule& n);
/// n-fold tensor power (n >= 1).
BigradedModule tensor_power(const BigradedModule& m, int n);

/// Linear map of a fixed bidegree (u,v): sends degree (a,b) to (a-u, b+v).
/// Stored column-sparse; missing entries are zero. Immutable in spirit —
/// set_entry/add_entry are for construction only.
class BigradedMap {
public:
    BigradedMap() = default;
    BigradedMap(BigradedModule src, BigradedModule tgt, Bidegree deg);

    static BigradedMap identity(const BigradedModule& m);
    static BigradedMap zero(const BigradedModule& src, const BigradedModule& tgt, Bidegree deg);

    const BigradedModule& source() const { return src_; }
    const BigradedModule& target() const { return tgt_; }
    const Bidegree& degree() const { return deg_; }
    const CoefficientRing& ring() const { return src_.ring(); }

    /// Adds c * (tgt_index <- src_index); throws if the entry violates the
    /// bidegree constraint.
    void add_entry(int tgt_index, int src_index, const Scalar& c);
    void add_entry(const std::string& tgt, const std::string& src, const Scalar& c);
    Scalar entry(int tgt_index, int src_index) const;

    bool is_zero() const;
    bool operator==(const BigradedMap& o) const;
    bool operator!=(const BigradedMap& o) const { return !(*this == o); }

    BigradedMap add(const BigradedMap& o) const;
    BigradedMap sub(const BigradedMap& o) const;
    BigradedMap scaled(const Scalar& c) const;
    BigradedMap negated() const;

    /// Column of src_index as (tgt_index, coeff) pairs (zero coeffs pruned).
    const std::vector<std::pair<int, Scalar>>& column(int src_index) const { return cols_[src_index]; }

    std::string to_string() const;

private:
    BigradedModule src_, tgt_;
    Bidegree deg_;
    std::vector<std::vector<std::pair<int, Scalar>>> cols_;

    friend BigradedMap compose(const BigradedMap& g, const BigradedMap& f);
    friend BigradedMap tensor_maps(const BigradedMap& f, const BigradedMap& g);
};

/// g after f. Throws if f's target differs from g's source (or rings clash).
BigradedMap compose(const BigradedMap& g, const BigradedMap& f);

/// Koszul tensor of maps: (f (x) g)(x (x) y) = (-1)^{<|g|,|x|>} f(x) (x) g(y).
BigradedMap tensor_maps(const BigradedMap& f, const BigradedMap& g);
/// Left fold of tensor_maps over factors (at least one).
BigradedMap tensor_many(const std::vector<BigradedMap>& factors);
/// 1^{(x)left} (x) g (x) 1^{(x)right} on tensor powers of `ambient`.
BigradedMap sandwich(const BigradedModule& ambient, int left, const BigradedMap& g, int right);

/// Bigraded module with a square-zero vertical differential of bidegree (0,1).
struct VerticalBicomplex {
    BigradedModule module;
    BigradedMap d;

    VerticalBicomplex(BigradedModule m, BigradedMap diff);
};

/// Tensor of vertical bicomplexes: differential d(x)1 + 1(x)d with Koszul signs.
VerticalBicomplex tensor(const VerticalBicomplex& a, const VerticalBicomplex& b);

/// Degree shift: (sA)_i^j = A_i^{j+1}, with d(sx) = -s(dx).
VerticalBicomplex shift(const VerticalBicomplex& v);

} // namespace dainf
