#pragma once

#include <map>
#include <utility>

#include "dainf/algebra.hpp"

namespace dainf {

/// Element of the Hochschild complex CH(A,A): a finite family of maps
/// A^(x)n -> A of bidegree (k, j), all sharing one total degree n+k+j.
/// Components are keyed by (n, k); the vertical degree j is determined.
class HochschildElement {
public:
    HochschildElement(BigradedModule carrier, long long total_degree);

    const BigradedModule& carrier() const { return carrier_; }
    const CoefficientRing& ring() const { return carrier_.ring(); }
    long long total_degree() const { return total_; }

    /// The map must be A^(x)n -> A of bidegree (k, total - n - k).
    void set_component(int n, int k, BigradedMap m);
    void add_component(int n, int k, const BigradedMap& m);
    const BigradedMap* component(int n, int k) const;
    BigradedMap component_or_zero(int n, int k) const;
    const std::map<std::pair<int, int>, BigradedMap>& components() const { return comps_; }

    bool is_zero() const { return comps_.empty(); }

    HochschildElement add(const HochschildElement& o) const;
    HochschildElement sub(const HochschildElement& o) const;
    HochschildElement negated() const;

    bool operator==(const HochschildElement& o) const;

    const BigradedModule& power(int n) const;

private:
    BigradedModule carrier_;
    long long total_ = 0;
    std::map<std::pair<int, int>, BigradedMap> comps_;
    std::shared_ptr<TensorPowerCache> powers_;
};

/// The convolution pre-Lie product; total degree of F*G is degF + degG - 1.
HochschildElement star(const HochschildElement& f, const HochschildElement& g);

/// [F,G] = F*G - (-1)^{(degF-1)(degG-1)} G*F.
HochschildElement bracket(const HochschildElement& f, const HochschildElement& g);

/// The other sign convention: per component pair the star summand times
/// (-1)^{k(m+j+l+1)} (k horizontal of the left factor; m,j,l arity, vertical,
/// horizontal of the right).
HochschildElement rw_circ(const HochschildElement& f, const HochschildElement& g);

/// Lie bracket of the other convention, antisymmetrized compatibly with the
/// componentwise gauge between the two products. Coincides with bracket()
/// whenever the right factor has total degree 1 (the perturbation inputs).
HochschildElement rw_bracket(const HochschildElement& f, const HochschildElement& g);

/// [m,F] for a square-zero m of total degree 2; throws if m*m != 0.
HochschildElement differential(const HochschildElement& m, const HochschildElement& f);

/// The total-degree-2 element gathering the structure maps of s.
HochschildElement structure_element(const DAInfStructure& s);

/// Rebuilds a structure from a total-degree-2 element.
DAInfStructure element_to_structure(const HochschildElement& e);

/// Twisting-cochain data over a bidga base with m01 = 0: a total-degree-2
/// family supported in k + n >= 3.
struct TwistingCochain {
    DAInfStructure base;
    HochschildElement a;

    TwistingCochain(DAInfStructure b, HochschildElement el);
};

/// D(a) + a*a for D = [m11 + m02, -]; zero iff base + a is a derived
/// A-infinity structure.
HochschildElement mc_residual(const TwistingCochain& t);

enum class PerturbCase { A, B };

struct PerturbResult {
    // components of the perturbed cochain indexed by (horizontal, arity);
    // only the positions the statement pins are returned
    std::map<std::pair<int, int>, BigradedMap> components;
};

/// b is a single-component element of total degree 1 at the case-determined
/// position; the case preconditions are enforced exactly.
PerturbResult perturb(const TwistingCochain& t, const HochschildElement& b, PerturbCase c, int k,
                      int n);

/// Bigraded Hochschild cohomology hh^{s,r} of a bidga with m01 = 0 over a
/// field; exact dimension.
long long hh_bigraded(const DAInfStructure& base, long long s, long long r, bool parallel = true);

} // namespace dainf
