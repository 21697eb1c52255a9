#pragma once

#include <memory>
#include <vector>

#include "dainf/algebra.hpp"

namespace dainf::oracle {

// Planar binary trees, enumerated directly; the transferred operation is the
// state sum with p at the root, i on leaves, h on internal edges and the
// product at the vertices, each tree weighted by the product over vertices of
// (-1)^{leftArity*(rightArity+1)}.
struct BinTree {
    int leaves = 1;
    std::shared_ptr<BinTree> left, right; // null for a leaf
    bool is_leaf() const { return !left; }
};

inline std::vector<std::shared_ptr<BinTree>> all_binary_trees(int n) {
    std::vector<std::shared_ptr<BinTree>> out;
    if (n == 1) {
        out.push_back(std::make_shared<BinTree>());
        return out;
    }
    for (int k = 1; k < n; ++k)
        for (const auto& l : all_binary_trees(k))
            for (const auto& r : all_binary_trees(n - k)) {
                auto t = std::make_shared<BinTree>();
                t->leaves = n;
                t->left = l;
                t->right = r;
                out.push_back(t);
            }
    return out;
}

inline int tree_sign(const BinTree& t) {
    if (t.is_leaf()) return 1;
    int s = tree_sign(*t.left) * tree_sign(*t.right);
    const long long e = static_cast<long long>(t.left->leaves) * (t.right->leaves + 1);
    return (e % 2 != 0) ? -s : s;
}

inline BigradedMap eval_tree(const BinTree& t, const HomotopyRetract& r, const BigradedMap& mu) {
    if (t.is_leaf()) return r.incl;
    auto wrap = [&](const BinTree& c) {
        return c.is_leaf() ? r.incl : compose(r.h, eval_tree(c, r, mu));
    };
    return compose(mu, tensor_maps(wrap(*t.left), wrap(*t.right)));
}

/// Transferred m_n, 2 <= n <= nmax, for a dga concentrated in horizontal
/// degree 0 (so only the binary-tree stratum contributes).
inline std::map<int, BigradedMap> classical_transfer(const HomotopyRetract& r, int nmax) {
    const BigradedMap mu = r.W.op_or_zero(0, 2);
    std::map<int, BigradedMap> out;
    for (int n = 2; n <= nmax; ++n) {
        BigradedMap acc = BigradedMap::zero(tensor_power(r.V, n), r.V, {0, 2 - n});
        for (const auto& t : all_binary_trees(n)) {
            BigradedMap term = compose(r.proj, eval_tree(*t, r, mu));
            acc = tree_sign(*t) < 0 ? acc.sub(term) : acc.add(term);
        }
        out.emplace(n, std::move(acc));
    }
    return out;
}

} // namespace dainf::oracle
