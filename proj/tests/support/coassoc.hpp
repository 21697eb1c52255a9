#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "dainf/cooperad.hpp"

namespace dainf::coassoc {

/// Three-level decomposition outer; middle list; flattened inner list.
struct ThreeLevel {
    CoopGen outer;
    std::vector<CoopGen> middle;
    std::vector<CoopGen> inner;
    auto key() const { return std::make_tuple(outer, middle, inner); }
    bool operator<(const ThreeLevel& o) const { return key() < o.key(); }
    bool operator==(const ThreeLevel& o) const { return key() == o.key(); }
};

using Multiset = std::map<ThreeLevel, long long>;

inline void prune(Multiset& m) {
    for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
}

/// (Delta (x) id) Delta: split the outer factor of each cocomposition term.
inline Multiset outer_then(int u, int v) {
    Multiset acc;
    for (const auto& t : cocompose(u, v))
        for (const auto& s : cocompose(t.outer.i, t.outer.j))
            acc[{s.outer, s.inner, t.inner}] += static_cast<long long>(t.coeff) * s.coeff;
    prune(acc);
    return acc;
}

/// (id (x) Delta) Delta: split every inner factor, with the Koszul sign for
/// moving each inner block past the later middle factors.
inline Multiset inner_then(int u, int v) {
    Multiset acc;
    for (const auto& t : cocompose(u, v)) {
        const int j = static_cast<int>(t.inner.size());
        std::vector<std::vector<CoopTerm>> choices(j);
        for (int k = 0; k < j; ++k) choices[k] = cocompose(t.inner[k].i, t.inner[k].j);
        std::vector<int> pick(j, 0);
        while (true) {
            long long coeff = t.coeff;
            ThreeLevel key{t.outer, {}, {}};
            std::vector<Bidegree> block(j), mid(j);
            for (int k = 0; k < j; ++k) {
                const auto& ch = choices[k][pick[k]];
                coeff *= ch.coeff;
                key.middle.push_back(ch.outer);
                Bidegree bd{0, 0};
                for (const auto& g : ch.inner) {
                    key.inner.push_back(g);
                    bd = bd + g.bidegree();
                }
                block[k] = bd;
                mid[k] = ch.outer.bidegree();
            }
            long long sign = 0;
            for (int r = 0; r < j; ++r)
                for (int s = r + 1; s < j; ++s) sign += Bidegree::pairing(block[r], mid[s]);
            acc[key] += (sign % 2 != 0) ? -coeff : coeff;
            int k = j - 1;
            while (k >= 0 && ++pick[k] == static_cast<int>(choices[k].size())) pick[k--] = 0;
            if (k < 0) break;
        }
    }
    prune(acc);
    return acc;
}

} // namespace dainf::coassoc
