#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dainf/bigraded.hpp"
#include "dainf/homology.hpp"

namespace dainf {

/// Lazily filled, lock-guarded table of tensor powers of one module. Shared
/// between copies; behaves as if absent (idempotent fill).
class TensorPowerCache {
public:
    explicit TensorPowerCache(BigradedModule base) : base_(std::move(base)) {}
    const BigradedModule& power(int n) const;

private:
    BigradedModule base_;
    mutable std::mutex mu_;
    mutable std::map<int, BigradedModule> powers_;
};

/// Derived A-infinity structure: a finite family of maps m_ij : A^(x)j -> A
/// of bidegree (i, 2-(i+j)). Absent (i,j) means zero. The structure relations
/// are checked by check_structure, not by the container.
class DAInfStructure {
public:
    explicit DAInfStructure(BigradedModule carrier);

    const BigradedModule& carrier() const { return carrier_; }
    const CoefficientRing& ring() const { return carrier_.ring(); }

    /// Throws if the map's source/target/bidegree do not match (i, 2-(i+j)).
    void set_op(int i, int j, BigradedMap m);
    const BigradedMap* op(int i, int j) const;
    BigradedMap op_or_zero(int i, int j) const;
    const std::map<std::pair<int, int>, BigradedMap>& ops() const { return ops_; }

    /// Cached tensor power of the carrier (j >= 1).
    const BigradedModule& power(int j) const;

private:
    BigradedModule carrier_;
    std::map<std::pair<int, int>, BigradedMap> ops_;
    std::shared_ptr<TensorPowerCache> powers_;
};

struct RelationReport {
    std::vector<std::pair<int, int>> failures; // (u,v) with nonzero residual
    long long checked = 0;
    bool ok() const { return failures.empty(); }
    std::string to_string(const char* relation) const;
};

/// Evaluates the structure relation at every reachable (u,v) (optionally only
/// u+v <= sum_cap) and reports the bidegrees with a nonzero residual.
RelationReport check_structure(const DAInfStructure& s, int sum_cap = -1);

/// The signed residual map at one (u,v); zero map if the relation holds there.
BigradedMap structure_residual(const DAInfStructure& s, int u, int v);

enum class StructureClass { bidga, twisted_complex, classical_a_infinity, general };
const char* to_string(StructureClass c);

/// Support-based tags: bidga (i+j <= 2), twisted complex (j == 1 only),
/// classical (carrier concentrated in horizontal degree 0).
StructureClass classify(const DAInfStructure& s);

/// Infinity-morphism: components f_uv : A^(x)v -> B of bidegree (u, 1-u-v).
class InfMorphism {
public:
    InfMorphism(DAInfStructure source, DAInfStructure target);

    const DAInfStructure& source() const { return src_; }
    const DAInfStructure& target() const { return tgt_; }

    void set_comp(int u, int v, BigradedMap f);
    const BigradedMap* comp(int u, int v) const;
    BigradedMap comp_or_zero(int u, int v) const;
    const std::map<std::pair<int, int>, BigradedMap>& comps() const { return comps_; }

private:
    DAInfStructure src_, tgt_;
    std::map<std::pair<int, int>, BigradedMap> comps_;
};

InfMorphism identity_morphism(const DAInfStructure& a);

/// Both sides of the morphism relation per reachable (u,v); reports mismatches.
RelationReport check_morphism(const InfMorphism& f);

/// Composite of infinity-morphisms: (g o f)_uv = sum (-1)^X g_ij (f_{p1q1} (x)
/// ... (x) f_{pjqj}).
InfMorphism compose_morphisms(const InfMorphism& g, const InfMorphism& f);

enum class EquivalenceLevel { E1, E2 };

/// E1: the vertical homology of f_01 is an isomorphism in every bidegree.
/// E2: the horizontal homology of the vertical homology is. Field ring only.
bool check_equivalence(const InfMorphism& f, EquivalenceLevel level);

/// Homotopy retract data (i, p, h) with p i = 1 and 1 - i p = d h + h d for
/// the vertical differential d = m_01 of W. i and p must be chain maps for
/// the induced differential on V.
struct HomotopyRetract {
    DAInfStructure W;
    BigradedModule V;
    BigradedMap incl; // V -> W, bidegree (0,0)
    BigradedMap proj; // W -> V, bidegree (0,0)
    BigradedMap h;    // W -> W, bidegree (0,-1)

    HomotopyRetract(DAInfStructure w, BigradedModule v, BigradedMap i, BigradedMap p,
                    BigradedMap hh);
};

/// Homotopy transfer along the retract: W must be a bidga over a field. The
/// transferred m_ij are produced for i+j <= cap and satisfy the structure
/// relation for u+v <= cap.
DAInfStructure transfer(const HomotopyRetract& r, int cap);

} // namespace dainf
