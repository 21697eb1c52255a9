#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "dainf/bigraded.hpp"

namespace dainf::testgen {

/// Deterministic generator for the property suites. Seed comes from
/// DAINF_SEED when set, otherwise a fixed default.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    static uint64_t default_seed() {
        if (const char* s = std::getenv("DAINF_SEED")) return std::strtoull(s, nullptr, 10);
        return 20250808ULL;
    }

    uint64_t next() {
        // splitmix64
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long long range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

private:
    uint64_t state_;
};

inline BigradedModule random_module(Rng& rng, const CoefficientRing& ring, int max_dim = 3,
                                    int max_h = 2, int max_abs_v = 2) {
    const int dim = static_cast<int>(rng.range(1, max_dim));
    std::vector<BasisElement> basis;
    for (int i = 0; i < dim; ++i)
        basis.push_back({"g" + std::to_string(i),
                         {rng.range(0, max_h), rng.range(-max_abs_v, max_abs_v)}});
    return BigradedModule(ring, std::move(basis));
}

inline BigradedMap random_map(Rng& rng, const BigradedModule& src, const BigradedModule& tgt,
                              Bidegree deg, int density_percent = 70) {
    BigradedMap f(src, tgt, deg);
    for (int j = 0; j < src.dim(); ++j) {
        const Bidegree want{src.basis(j).deg.h - deg.h, src.basis(j).deg.v + deg.v};
        for (int i = 0; i < tgt.dim(); ++i) {
            if (tgt.basis(i).deg != want) continue;
            if (rng.range(0, 99) < density_percent)
                f.add_entry(i, j, Scalar::of(src.ring(), rng.range(-4, 4)));
        }
    }
    return f;
}

} // namespace dainf::testgen
