#include "dainf/cobar.hpp"

#include <algorithm>
#include <stdexcept>

#include "dainf/homology.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dainf {

TermSum cobar_diff_generator(int u, int v) {
    if (u == 0 && v == 1)
        throw std::invalid_argument("cobar_diff_generator: (0,1) is not a generator");
    const CoefficientRing ring = CoefficientRing::Z();
    TermSum out(ring, VertexGrading::operad);
    for (int p = 0; p <= u; ++p) {
        const int i = u - p;
        for (int q = 1; q <= v; ++q) {
            for (int r = 0; r + q <= v; ++r) {
                const int t = v - q - r;
                const int j = r + 1 + t;
                if ((i == 0 && j == 1) || (p == 0 && q == 1)) continue;
                const long long e = u + 1 + static_cast<long long>(r) * q +
                                    static_cast<long long>(p) * j + t;
                Tree tree = Tree::two_level(i, j, r + 1, Tree::corolla(p, q));
                out.add_term(tree, Scalar::of(ring, (e % 2 != 0) ? -1 : 1));
            }
        }
    }
    return out;
}

namespace {

// token range [at, end) of the subtree rooted at `at`
size_t subtree_end(const std::vector<Tree::Tok>& toks, size_t at) {
    int need = 1;
    while (need > 0) {
        const auto& t = toks[at++];
        need += t.is_leaf() ? -1 : t.v - 1;
    }
    return at;
}

// rebuilds a Tree from a valid preorder stream via grafting
Tree parse_tokens(const std::vector<Tree::Tok>& s, size_t& at) {
    const auto tk = s[at++];
    if (tk.is_leaf()) return Tree::leaf();
    Tree node = Tree::corolla(tk.u, tk.v);
    int slot = 1;
    for (int c = 0; c < tk.v; ++c) {
        Tree child = parse_tokens(s, at);
        node = node.grafted(slot, child);
        slot += child.arity();
    }
    return node;
}

} // namespace

TermSum cobar_diff_tree(const Tree& tree, const CoefficientRing& ring) {
    const auto& toks = tree.tokens();
    TermSum out(ring, VertexGrading::operad);
    long long prefix_v = 0; // vertical degrees of vertices before the current one
    for (size_t m = 0; m < toks.size(); ++m) {
        const auto tok = toks[m];
        if (tok.is_leaf()) continue;
        const int a = tok.u, b = tok.v;
        if (!(a == 0 && b == 1)) {
            // child subtree token ranges
            std::vector<std::pair<size_t, size_t>> kids(b);
            size_t at = m + 1;
            for (int c = 0; c < b; ++c) {
                size_t e = subtree_end(toks, at);
                kids[c] = {at, e};
                at = e;
            }
            const size_t vertex_end = at;
            // bidegree of a child block
            auto block_degree = [&](int c) {
                Bidegree d{0, 0};
                for (size_t z = kids[c].first; z < kids[c].second; ++z)
                    if (!toks[z].is_leaf())
                        d = d + label_bidegree(toks[z].u, toks[z].v, VertexGrading::operad);
                return d;
            };
            for (int p = 0; p <= a; ++p) {
                const int i = a - p;
                for (int q = 1; q <= b; ++q) {
                    for (int r = 0; r + q <= b; ++r) {
                        const int t = b - q - r;
                        const int j = r + 1 + t;
                        if ((i == 0 && j == 1) || (p == 0 && q == 1)) continue;
                        long long e = a + 1 + static_cast<long long>(r) * q +
                                      static_cast<long long>(p) * j + t + prefix_v;
                        // move m_pq past the first r child blocks
                        Bidegree skipped{0, 0};
                        for (int c = 0; c < r; ++c) skipped = skipped + block_degree(c);
                        e += Bidegree::pairing(label_bidegree(p, q, VertexGrading::operad),
                                               skipped);
                        // assemble the surgered token stream
                        std::vector<Tree::Tok> nt;
                        nt.reserve(toks.size() + 1);
                        nt.insert(nt.end(), toks.begin(), toks.begin() + m);
                        nt.push_back({static_cast<int16_t>(i), static_cast<int16_t>(j)});
                        for (int c = 0; c < r; ++c)
                            nt.insert(nt.end(), toks.begin() + kids[c].first,
                                      toks.begin() + kids[c].second);
                        nt.push_back({static_cast<int16_t>(p), static_cast<int16_t>(q)});
                        for (int c = r; c < b; ++c)
                            nt.insert(nt.end(), toks.begin() + kids[c].first,
                                      toks.begin() + kids[c].second);
                        nt.insert(nt.end(), toks.begin() + vertex_end, toks.end());
                        size_t at0 = 0;
                        Tree result = parse_tokens(nt, at0);
                        out.add_term(result, Scalar::of(ring, (((e % 2) + 2) % 2) ? -1 : 1));
                    }
                }
            }
        }
        prefix_v += 2 - a - b;
    }
    return out;
}

TermSum cobar_diff(const TermSum& ts) {
    TermSum out(ts.ring(), VertexGrading::operad);
    for (const auto& [t, c] : ts.terms()) out = out.add(cobar_diff_tree(t, ts.ring()).scaled(c));
    return out;
}

namespace {

void enumerate_rec(int arity, int hdeg, std::vector<Tree>& out);

// all (sub)trees for a fixed root label with children arities/degrees summing
void children_rec(int slots, int arity_left, int h_left, std::vector<Tree>& partial,
                  std::vector<std::vector<Tree>>& acc) {
    if (slots == 0) {
        if (arity_left == 0 && h_left == 0) acc.push_back(partial);
        return;
    }
    for (int na = 1; na + (slots - 1) <= arity_left; ++na) {
        for (int nh = 0; nh <= h_left; ++nh) {
            std::vector<Tree> subs;
            enumerate_rec(na, nh, subs);
            for (const auto& s : subs) {
                partial.push_back(s);
                children_rec(slots - 1, arity_left - na, h_left - nh, partial, acc);
                partial.pop_back();
            }
        }
    }
}

void enumerate_rec(int arity, int hdeg, std::vector<Tree>& out) {
    if (arity == 1 && hdeg == 0) out.push_back(Tree::leaf());
    for (int v = 1; v <= arity; ++v) {
        for (int u = 0; u <= hdeg; ++u) {
            if (u == 0 && v == 1) continue;
            std::vector<std::vector<Tree>> combos;
            std::vector<Tree> partial;
            children_rec(v, arity, hdeg - u, partial, combos);
            for (const auto& kids : combos) {
                Tree t = Tree::corolla(u, v);
                int slot = 1;
                for (const auto& k : kids) {
                    t = t.grafted(slot, k);
                    slot += k.arity();
                }
                out.push_back(t);
            }
        }
    }
}

} // namespace

std::vector<Tree> enumerate_basis_trees(int arity, int hdeg) {
    if (arity < 1 || hdeg < 0) throw std::invalid_argument("enumerate_basis_trees: bad window");
    std::vector<Tree> out;
    enumerate_rec(arity, hdeg, out);
    std::sort(out.begin(), out.end());
    return out;
}

long long count_basis_trees(int arity, int hdeg) {
    long long total = (arity == 1 && hdeg == 0) ? 1 : 0;
    // distribute arity into v parts >= 1 and hdeg-u into v parts >= 0
    struct Rec {
        long long operator()(int slots, int a_left, int h_left) const {
            if (slots == 0) return (a_left == 0 && h_left == 0) ? 1 : 0;
            long long s = 0;
            for (int na = 1; na + (slots - 1) <= a_left; ++na)
                for (int nh = 0; nh <= h_left; ++nh)
                    s += count_basis_trees(na, nh) * (*this)(slots - 1, a_left - na, h_left - nh);
            return s;
        }
    } rec;
    for (int v = 1; v <= arity; ++v)
        for (int u = 0; u <= hdeg; ++u) {
            if (u == 0 && v == 1) continue;
            total += rec(v, arity, hdeg - u);
        }
    return total;
}

D2Report check_d_squared(int max_arity, int max_h, bool parallel) {
    D2Report report;
    const CoefficientRing ring = CoefficientRing::Z();
    for (int n = 1; n <= max_arity; ++n) {
        for (int h = 0; h <= max_h; ++h) {
            std::vector<Tree> trees = enumerate_basis_trees(n, h);
            report.counts[{n, h}] = static_cast<long long>(trees.size());
            report.trees_checked += static_cast<long long>(trees.size());
            std::vector<std::string> failures(trees.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
            for (long long k = 0; k < static_cast<long long>(trees.size()); ++k) {
                TermSum d1 = cobar_diff_tree(trees[k], ring);
                TermSum d2 = cobar_diff(d1);
                if (!d2.is_zero()) failures[k] = trees[k].to_string();
            }
            (void)parallel;
            for (const auto& f : failures) {
                if (!f.empty()) {
                    report.ok = false;
                    if (report.first_failure.empty()) report.first_failure = f;
                }
            }
        }
    }
    return report;
}

std::map<long long, long long> homology_window(int n, int i, const CoefficientRing& ring,
                                               bool parallel) {
    if (!ring.is_field()) throw std::domain_error("homology_window: field coefficients required");
    std::vector<Tree> trees = enumerate_basis_trees(n, i);
    // group by vertical degree
    std::map<long long, std::vector<size_t>> by_v;
    std::map<Tree, size_t> index;
    for (size_t k = 0; k < trees.size(); ++k) {
        by_v[trees[k].bidegree(VertexGrading::operad).v].push_back(k);
        index.emplace(trees[k], k);
    }
    const CoefficientRing zz = CoefficientRing::Z();
    // boundary matrices per vertical degree: d_j : V_j -> V_{j+1}
    std::map<long long, int> ranks;
    for (const auto& [j, cols] : by_v) {
        auto tgt_it = by_v.find(j + 1);
        if (tgt_it == by_v.end()) {
            ranks[j] = 0;
            continue;
        }
        const auto& rows = tgt_it->second;
        std::map<size_t, int> row_of;
        for (size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = static_cast<int>(r);
        std::vector<std::vector<BigInt>> mat(rows.size(), std::vector<BigInt>(cols.size(), BigInt(0)));
        for (size_t c = 0; c < cols.size(); ++c) {
            TermSum d = cobar_diff_tree(trees[cols[c]], zz);
            for (const auto& [t, s] : d.terms()) {
                auto it = index.find(t);
                if (it == index.end())
                    throw std::domain_error("homology_window: differential leaves the window");
                mat[row_of[it->second]][c] = s.num();
            }
        }
        if (ring.kind == RingKind::prime_field) {
            DenseMat dm(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
            for (int r = 0; r < dm.rows; ++r)
                for (int c = 0; c < dm.cols; ++c)
                    dm.at(r, c) = Scalar::of(ring, mat[r][c]);
            ranks[j] = rank(dm, ring, parallel);
        } else {
            ranks[j] = rank_bareiss(std::move(mat), parallel);
        }
    }
    std::map<long long, long long> hom;
    for (const auto& [j, cols] : by_v) {
        long long dim = static_cast<long long>(cols.size());
        long long rk_out = ranks.count(j) ? ranks[j] : 0;
        long long rk_in = ranks.count(j - 1) ? ranks[j - 1] : 0;
        hom[j] = dim - rk_out - rk_in;
    }
    return hom;
}

} // namespace dainf
