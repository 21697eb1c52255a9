#include "dainf/cooperad.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dainf {

std::string CoopTerm::to_string() const {
    std::ostringstream os;
    os << (coeff < 0 ? "- " : "+ ") << "mu(" << outer.i << "," << outer.j << ");";
    for (size_t k = 0; k < inner.size(); ++k)
        os << (k ? " x " : " ") << "mu(" << inner[k].i << "," << inner[k].j << ")";
    return os.str();
}

std::string InfinitesimalTerm::to_string() const {
    std::ostringstream os;
    os << (coeff < 0 ? "- " : "+ ") << "mu(" << outer.i << "," << outer.j << ");";
    bool first = true;
    auto item = [&](const std::string& s) {
        os << (first ? " " : " x ") << s;
        first = false;
    };
    for (int k = 0; k < r; ++k) item("1");
    item("mu(" + std::to_string(mid.i) + "," + std::to_string(mid.j) + ")");
    for (int k = 0; k < t; ++k) item("1");
    return os.str();
}

int sign_X(const std::vector<std::pair<int, int>>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("sign_X: empty list");
    const int j = static_cast<int>(pairs.size());
    long long x = 0;
    for (int k = 1; k <= j - 1; ++k) {
        const auto [pk, qk] = pairs[k - 1];
        long long tail = 0;
        for (int l = k + 1; l <= j; ++l) tail += pairs[l - 1].first + pairs[l - 1].second;
        x += static_cast<long long>(pk + qk) * (j + k) + static_cast<long long>(qk) * tail;
    }
    return static_cast<int>(((x % 2) + 2) % 2);
}

namespace {

// all (q_1..q_j) with q_k >= 1 summing to v, then (p_1..p_j) with p_k >= 0
// summing to u - i
void enumerate_inner(int u_rem, int v_rem, int slots, std::vector<std::pair<int, int>>& acc,
                     const CoopGen& outer, std::vector<CoopTerm>& out) {
    if (slots == 0) {
        if (u_rem != 0 || v_rem != 0) return;
        CoopTerm term;
        term.outer = outer;
        term.inner.reserve(acc.size());
        for (const auto& [p, q] : acc) term.inner.push_back({p, q});
        term.coeff = sign_X(acc) ? -1 : 1;
        out.push_back(std::move(term));
        return;
    }
    for (int q = 1; q + (slots - 1) <= v_rem; ++q) {
        for (int p = 0; p <= u_rem; ++p) {
            acc.emplace_back(p, q);
            enumerate_inner(u_rem - p, v_rem - q, slots - 1, acc, outer, out);
            acc.pop_back();
        }
    }
}

} // namespace

std::vector<CoopTerm> cocompose(int u, int v) {
    if (v < 1) throw std::invalid_argument("cocompose: v must be >= 1");
    std::vector<CoopTerm> out;
    for (int i = 0; i <= u; ++i) {
        for (int j = 1; j <= v; ++j) {
            std::vector<std::pair<int, int>> acc;
            enumerate_inner(u - i, v, j, acc, CoopGen{i, j}, out);
        }
    }
    return out;
}

std::vector<InfinitesimalTerm> infinitesimal_cocompose(int u, int v, bool include_trivial) {
    if (v < 1) throw std::invalid_argument("infinitesimal_cocompose: v must be >= 1");
    std::vector<InfinitesimalTerm> out;
    for (int p = 0; p <= u; ++p) {
        const int i = u - p;
        for (int q = 1; q <= v; ++q) {
            for (int r = 0; r + q <= v; ++r) {
                const int t = v - q - r;
                const int j = r + 1 + t;
                InfinitesimalTerm term;
                term.outer = {i, j};
                term.mid = {p, q};
                term.r = r;
                term.t = t;
                if (!include_trivial && (term.outer.is_identity() || term.mid.is_identity()))
                    continue;
                const long long e = static_cast<long long>(r) * (1 - p - q) +
                                    static_cast<long long>(p) * t;
                term.coeff = ((e % 2) + 2) % 2 ? -1 : 1;
                out.push_back(term);
            }
        }
    }
    return out;
}

namespace {

std::mutex g_expansion_mutex;
std::map<std::pair<int, int>, TermSum>& expansion_cache() {
    static std::map<std::pair<int, int>, TermSum> cache;
    return cache;
}

// left-to-right composite of a corolla with two expansions
TermSum binary_node(const TermSum& left, const TermSum& right) {
    TermSum c = TermSum::single(left.ring(), VertexGrading::suspended, Tree::corolla(0, 2),
                                Scalar::of(left.ring(), 1));
    TermSum r = partial_compose(c, 1, left);
    return partial_compose(r, left.arity() + 1, right);
}

TermSum expand(int u, int v, int cap) {
    if (u + v > cap) throw std::domain_error("mu_tree_expansion: cap exceeded");
    {
        std::lock_guard<std::mutex> lock(g_expansion_mutex);
        auto it = expansion_cache().find({u, v});
        if (it != expansion_cache().end()) return it->second;
    }
    const CoefficientRing ring = CoefficientRing::Z();
    const Scalar one = Scalar::of(ring, 1);
    TermSum result(ring, VertexGrading::suspended);
    if (u == 0 && v == 1) {
        result.add_term(Tree::leaf(), one);
    } else if (u == 1 && v == 1) {
        result.add_term(Tree::corolla(1, 1), one);
    } else if (u == 0 && v == 2) {
        result.add_term(Tree::corolla(0, 2), one);
    } else if (v == 1) {
        TermSum c11 = TermSum::single(ring, VertexGrading::suspended, Tree::corolla(1, 1), one);
        result = partial_compose(c11, 1, expand(u - 1, 1, cap));
    } else if (u == 0) {
        for (int p = 1; p < v; ++p) {
            const int q = v - p;
            TermSum term = binary_node(expand(0, p, cap), expand(0, q, cap));
            const bool neg = (static_cast<long long>(p) * (q + 1)) % 2 != 0;
            result = result.add(neg ? term.negated() : term);
        }
    } else {
        TermSum c11 = TermSum::single(ring, VertexGrading::suspended, Tree::corolla(1, 1), one);
        result = partial_compose(c11, 1, expand(u - 1, v, cap));
        for (int r = 0; r <= u; ++r) {
            const int t = u - r;
            for (int s = 1; s <= v - 1; ++s) {
                const int w = v - s;
                if (w < 1) continue;
                TermSum term = binary_node(expand(r, s, cap), expand(t, w, cap));
                const Bidegree s_mu_rs{r, -r - s};         // suspended mu_{rs}
                const Bidegree mu_tw{t, 1 - t - w};
                const long long e = Bidegree::pairing(s_mu_rs, mu_tw) +
                                    static_cast<long long>(r) * w;
                const bool neg = ((e % 2) + 2) % 2 != 0;
                result = result.add(neg ? term.negated() : term);
            }
        }
    }
    std::lock_guard<std::mutex> lock(g_expansion_mutex);
    return expansion_cache().emplace(std::make_pair(u, v), result).first->second;
}

} // namespace

TermSum mu_tree_expansion(int u, int v, int cap) {
    if (v < 1) throw std::invalid_argument("mu_tree_expansion: v must be >= 1");
    return expand(u, v, cap);
}

} // namespace dainf
