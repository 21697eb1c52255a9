#include "dainf/homology.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dainf {

namespace {

long long mod_inv_ll(long long a, long long p) {
    long long t = 0, newt = 1, r = p, newr = a % p;
    if (newr < 0) newr += p;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::domain_error("rank: non-invertible pivot mod p");
    return t < 0 ? t + p : t;
}

int rank_fp(std::vector<std::vector<long long>> m, long long p, bool parallel) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const long long inv = mod_inv_ll(m[rank][c], p);
        for (int j = c; j < cols; ++j) m[rank][j] = (m[rank][j] % p * inv) % p;
        auto& prow = m[rank];
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && rows > 64)
#endif
        for (int r = rank + 1; r < rows; ++r) {
            long long f = m[r][c] % p;
            if (f == 0) continue;
            for (int j = c; j < cols; ++j) {
                m[r][j] = (m[r][j] - f * prow[j]) % p;
                if (m[r][j] < 0) m[r][j] += p;
            }
        }
        ++rank;
    }
    (void)parallel;
    return rank;
}

} // namespace

int rank_bareiss(std::vector<std::vector<BigInt>> m, bool parallel) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    BigInt prev(1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][c].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const auto& prow = m[rank];
        const BigInt pv = prow[c];
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && rows > 16)
#endif
        for (int r = rank + 1; r < rows; ++r) {
            for (int j = c + 1; j < cols; ++j)
                m[r][j] = (m[r][j] * pv - m[r][c] * prow[j]) / prev;
            m[r][c] = BigInt(0);
        }
        prev = pv;
        ++rank;
    }
    (void)parallel;
    return rank;
}

int rank(const DenseMat& m, const CoefficientRing& ring, bool parallel) {
    if (ring.kind == RingKind::prime_field) {
        std::vector<std::vector<long long>> mm(m.rows, std::vector<long long>(m.cols));
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c) {
                const BigInt& n = m.at(r, c).num();
                mm[r][c] = n.fits_ll() ? n.to_ll() % ring.p : (n % BigInt(ring.p)).to_ll();
            }
        return rank_fp(std::move(mm), ring.p, parallel);
    }
    // Q and Z: clear denominators row by row, then fraction-free elimination.
    std::vector<std::vector<BigInt>> mm(m.rows, std::vector<BigInt>(m.cols, BigInt(0)));
    for (int r = 0; r < m.rows; ++r) {
        BigInt l(1);
        for (int c = 0; c < m.cols; ++c) {
            const BigInt& d = m.at(r, c).den();
            l = l / BigInt::gcd(l, d) * d;
        }
        for (int c = 0; c < m.cols; ++c)
            mm[r][c] = m.at(r, c).num() * (l / m.at(r, c).den());
    }
    return rank_bareiss(std::move(mm), parallel);
}

std::vector<int> rref(DenseMat& m, const CoefficientRing& ring) {
    if (!ring.is_field()) throw std::domain_error("rref: field coefficients required");
    std::vector<int> pivots;
    int row = 0;
    for (int c = 0; c < m.cols && row < m.rows; ++c) {
        int pr = -1;
        for (int r = row; r < m.rows; ++r)
            if (!m.at(r, c).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
        const Scalar inv = m.at(row, c).inv(ring);
        for (int j = c; j < m.cols; ++j) m.at(row, j) = m.at(row, j).mul(inv, ring);
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, c).is_zero()) continue;
            const Scalar f = m.at(r, c);
            for (int j = c; j < m.cols; ++j)
                m.at(r, j) = m.at(r, j).sub(f.mul(m.at(row, j), ring), ring);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

DenseMat kernel_basis(const DenseMat& m, const CoefficientRing& ring) {
    DenseMat e = m;
    std::vector<int> pivots = rref(e, ring);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    const int nfree = m.cols - static_cast<int>(pivots.size());
    DenseMat k(m.cols, nfree);
    int col = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        k.at(c, col) = Scalar::of(ring, 1);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            k.at(pivots[pi], col) = e.at(static_cast<int>(pi), c).neg(ring);
        ++col;
    }
    return k;
}

namespace {

// Solve W y = b for square invertible W by augmenting with the identity once.
struct BlockInverter {
    DenseMat inv; // W^{-1}
    explicit BlockInverter(const DenseMat& w, const CoefficientRing& ring) : inv(w.rows, w.rows) {
        DenseMat aug(w.rows, w.cols + w.rows);
        for (int r = 0; r < w.rows; ++r) {
            for (int c = 0; c < w.cols; ++c) aug.at(r, c) = w.at(r, c);
            aug.at(r, w.cols + r) = Scalar::of(ring, 1);
        }
        auto pivots = rref(aug, ring);
        if (static_cast<int>(pivots.size()) != w.rows)
            throw std::domain_error("homology: singular block, cannot invert");
        for (int r = 0; r < w.rows; ++r)
            for (int c = 0; c < w.rows; ++c) inv.at(r, c) = aug.at(r, w.cols + c);
    }
};

} // namespace

GradedHomology graded_homology(const BigradedModule& m, const BigradedMap& d) {
    const CoefficientRing ring = m.ring();
    if (!ring.is_field())
        throw std::domain_error("homology: field coefficients required (Z is rejected)");
    if (d.source() != m || d.target() != m)
        throw std::invalid_argument("homology: differential must be an endomorphism of the module");
    if (!compose(d, d).is_zero())
        throw std::invalid_argument("homology: differential does not square to zero");

    // indices per bidegree
    std::map<Bidegree, std::vector<int>> blocks;
    for (int i = 0; i < m.dim(); ++i) blocks[m.basis(i).deg].push_back(i);
    const Bidegree dd = d.degree();

    auto block_matrix = [&](const Bidegree& from, const Bidegree& to) {
        auto fit = blocks.find(from);
        auto tit = blocks.find(to);
        const int nc = fit == blocks.end() ? 0 : static_cast<int>(fit->second.size());
        const int nr = tit == blocks.end() ? 0 : static_cast<int>(tit->second.size());
        DenseMat mat(nr, nc);
        if (nr == 0 || nc == 0) return mat;
        std::map<int, int> trow;
        for (int r = 0; r < nr; ++r) trow[tit->second[r]] = r;
        for (int c = 0; c < nc; ++c)
            for (const auto& [ti, s] : d.column(fit->second[c])) {
                auto it = trow.find(ti);
                if (it != trow.end()) mat.at(it->second, c) = s;
            }
        return mat;
    };

    std::vector<BasisElement> hbasis;
    struct BlockData {
        Bidegree deg;
        std::vector<int> midx;        // module indices of the block
        std::vector<int> hidx;        // H indices of the classes in this block
        DenseMat reps;                // block_dim x nclasses, representative cycles
        DenseMat proj;                // nclasses x block_dim
    };
    std::vector<BlockData> data;

    for (const auto& [deg, idx] : blocks) {
        const int n = static_cast<int>(idx.size());
        const Bidegree prev{deg.h + dd.h, deg.v - dd.v};
        DenseMat dout = block_matrix(deg, {deg.h - dd.h, deg.v + dd.v});
        DenseMat din = block_matrix(prev, deg);

        DenseMat zk = kernel_basis(dout, ring); // n x z
        // image basis: pivot columns of din
        DenseMat dcopy = din;
        std::vector<int> bpiv = rref(dcopy, ring);
        const int b = static_cast<int>(bpiv.size());
        const int z = zk.cols;
        const int hdim = z - b;

        // choose representatives: columns of zk independent modulo the image
        DenseMat aug(n, b + z);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < b; ++c) aug.at(r, c) = din.at(r, bpiv[c]);
            for (int c = 0; c < z; ++c) aug.at(r, b + c) = zk.at(r, c);
        }
        DenseMat augc = aug;
        std::vector<int> piv = rref(augc, ring);
        std::vector<int> rep_cols;
        for (int c : piv)
            if (c >= b) rep_cols.push_back(c - b);
        if (static_cast<int>(rep_cols.size()) != hdim)
            throw std::domain_error("homology: internal rank inconsistency");

        BlockData bd;
        bd.deg = deg;
        bd.midx = idx;
        bd.reps = DenseMat(n, hdim);
        for (int c = 0; c < hdim; ++c)
            for (int r = 0; r < n; ++r) bd.reps.at(r, c) = zk.at(r, rep_cols[c]);

        // complete [image | reps] to a basis of the block with standard vectors
        DenseMat w(n, n);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < b; ++c) w.at(r, c) = din.at(r, bpiv[c]);
            for (int c = 0; c < hdim; ++c) w.at(r, b + c) = bd.reps.at(r, c);
        }
        int filled = b + hdim;
        for (int e = 0; e < n && filled < n; ++e) {
            DenseMat trial(n, filled + 1);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < filled; ++c) trial.at(r, c) = w.at(r, c);
            trial.at(e, filled) = Scalar::of(ring, 1);
            DenseMat tc = trial;
            if (static_cast<int>(rref(tc, ring).size()) == filled + 1) {
                w.at(e, filled) = Scalar::of(ring, 1);
                ++filled;
            }
        }
        if (filled != n) throw std::domain_error("homology: failed to complete basis");

        if (hdim > 0) {
            BlockInverter wi(w, ring);
            bd.proj = DenseMat(hdim, n);
            for (int r = 0; r < hdim; ++r)
                for (int c = 0; c < n; ++c) bd.proj.at(r, c) = wi.inv.at(b + r, c);
        }
        for (int k = 0; k < hdim; ++k) {
            bd.hidx.push_back(static_cast<int>(hbasis.size()));
            hbasis.push_back({"h" + std::to_string(hbasis.size()) + "[" + std::to_string(deg.h) +
                                  "," + std::to_string(deg.v) + "]",
                              deg});
        }
        data.push_back(std::move(bd));
    }

    GradedHomology g;
    g.H = BigradedModule(ring, std::move(hbasis));
    g.rep = BigradedMap(g.H, m, {0, 0});
    g.proj = BigradedMap(m, g.H, {0, 0});
    for (const auto& bd : data) {
        const int n = static_cast<int>(bd.midx.size());
        for (size_t k = 0; k < bd.hidx.size(); ++k) {
            for (int r = 0; r < n; ++r) {
                const Scalar& c = bd.reps.at(r, static_cast<int>(k));
                if (!c.is_zero()) g.rep.add_entry(bd.midx[r], bd.hidx[k], c);
            }
        }
        for (int c = 0; c < n; ++c)
            for (size_t k = 0; k < bd.hidx.size(); ++k) {
                const Scalar& s = bd.proj.at(static_cast<int>(k), c);
                if (!s.is_zero()) g.proj.add_entry(bd.hidx[k], bd.midx[c], s);
            }
    }
    return g;
}

BigradedMap induced_map(const GradedHomology& ha, const BigradedMap& da,
                        const GradedHomology& hb, const BigradedMap& db, const BigradedMap& f) {
    // representatives must be sent to cycles
    if (!compose(db, compose(f, ha.rep)).is_zero())
        throw std::invalid_argument("induced_map: map does not send cycles to cycles");
    (void)da;
    return compose(hb.proj, compose(f, ha.rep));
}

GradedHomology vertical_homology(const VerticalBicomplex& v) {
    return graded_homology(v.module, v.d);
}

BigradedModule e2_page(const BigradedModule& m, const BigradedMap& d0, const BigradedMap& d1) {
    if (d0.degree() != Bidegree{0, 1} || d1.degree() != Bidegree{1, 0})
        throw std::invalid_argument("e2_page: expected differentials of bidegree (0,1) and (1,0)");
    if (!compose(d0, d0).is_zero() || !compose(d1, d1).is_zero())
        throw std::invalid_argument("e2_page: differentials must square to zero");
    if (compose(d0, d1) != compose(d1, d0))
        throw std::invalid_argument("e2_page: differentials must commute");
    GradedHomology hv = graded_homology(m, d0);
    BigradedMap delta = induced_map(hv, d0, hv, d0, d1);
    if (!compose(delta, delta).is_zero())
        throw std::domain_error("e2_page: induced horizontal map does not square to zero");
    return graded_homology(hv.H, delta).H;
}

bool is_isomorphism_on(const BigradedMap& f, const CoefficientRing& ring) {
    auto sd = f.source().dims_by_degree();
    auto td = f.target().dims_by_degree();
    if (sd != td) return false;
    // per-bidegree blocks must be square of full rank
    std::map<Bidegree, std::vector<int>> sblocks, tblocks;
    for (int i = 0; i < f.source().dim(); ++i) sblocks[f.source().basis(i).deg].push_back(i);
    for (int i = 0; i < f.target().dim(); ++i) tblocks[f.target().basis(i).deg].push_back(i);
    for (const auto& [deg, sidx] : sblocks) {
        const auto& tidx = tblocks[deg];
        DenseMat m(static_cast<int>(tidx.size()), static_cast<int>(sidx.size()));
        std::map<int, int> trow;
        for (size_t r = 0; r < tidx.size(); ++r) trow[tidx[r]] = static_cast<int>(r);
        for (size_t c = 0; c < sidx.size(); ++c)
            for (const auto& [ti, s] : f.column(sidx[c])) {
                auto it = trow.find(ti);
                if (it == trow.end()) return false;
                m.at(it->second, static_cast<int>(c)) = s;
            }
        if (rank(m, ring) != m.cols) return false;
    }
    return true;
}

} // namespace dainf
