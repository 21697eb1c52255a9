#include "dainf/operad.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace dainf {

Bidegree label_bidegree(int u, int v, VertexGrading g) {
    switch (g) {
        case VertexGrading::operad: return {u, 2 - u - v};
        case VertexGrading::suspended: return {u, 1 - u - v};
    }
    return {0, 0};
}

Tree Tree::leaf() {
    Tree t;
    t.toks_.push_back({-1, 0});
    return t;
}

Tree Tree::corolla(int u, int v) {
    if (v < 1) throw std::invalid_argument("Tree: vertex arity must be >= 1");
    Tree t;
    t.toks_.push_back({static_cast<int16_t>(u), static_cast<int16_t>(v)});
    for (int k = 0; k < v; ++k) t.toks_.push_back({-1, 0});
    return t;
}

Tree Tree::two_level(int u, int v, int pos, const Tree& inner) {
    return corolla(u, v).grafted(pos, inner);
}

int Tree::arity() const {
    int n = 0;
    for (const auto& t : toks_)
        if (t.is_leaf()) ++n;
    return n;
}

int Tree::vertex_count() const { return static_cast<int>(toks_.size()) - arity(); }

Bidegree Tree::bidegree(VertexGrading g) const {
    Bidegree d{0, 0};
    for (const auto& t : toks_)
        if (!t.is_leaf()) d = d + label_bidegree(t.u, t.v, g);
    return d;
}

long long Tree::horizontal_degree() const {
    long long h = 0;
    for (const auto& t : toks_)
        if (!t.is_leaf()) h += t.u;
    return h;
}

Tree Tree::grafted(int i, const Tree& b) const {
    if (i < 1 || i > arity()) throw std::invalid_argument("Tree: graft index out of range");
    Tree r;
    r.toks_.reserve(toks_.size() + b.toks_.size() - 1);
    int seen = 0;
    for (const auto& t : toks_) {
        if (t.is_leaf() && ++seen == i) {
            r.toks_.insert(r.toks_.end(), b.toks_.begin(), b.toks_.end());
        } else {
            r.toks_.push_back(t);
        }
    }
    return r;
}

Bidegree Tree::degree_after_leaf(int i, VertexGrading g) const {
    Bidegree d{0, 0};
    int seen = 0;
    bool after = false;
    for (const auto& t : toks_) {
        if (after && !t.is_leaf()) d = d + label_bidegree(t.u, t.v, g);
        if (t.is_leaf() && ++seen == i) after = true;
    }
    return d;
}

namespace {
// renders the subtree starting at tok; returns index past it
size_t render(const std::vector<Tree::Tok>& toks, size_t at, std::ostringstream& os) {
    const auto& t = toks[at];
    if (t.is_leaf()) {
        os << "*";
        return at + 1;
    }
    os << "m(" << t.u << "," << t.v << ")[";
    size_t pos = at + 1;
    for (int k = 0; k < t.v; ++k) {
        if (k) os << ",";
        pos = render(toks, pos, os);
    }
    os << "]";
    return pos;
}
} // namespace

std::string Tree::to_string() const {
    std::ostringstream os;
    render(toks_, 0, os);
    return os.str();
}

TermSum TermSum::single(const CoefficientRing& ring, VertexGrading g, const Tree& t,
                        const Scalar& c) {
    TermSum s(ring, g);
    s.add_term(t, c);
    return s;
}

int TermSum::arity() const {
    if (terms_.empty()) throw std::domain_error("TermSum: arity of zero sum");
    return terms_.begin()->first.arity();
}

Bidegree TermSum::bidegree() const {
    if (terms_.empty()) throw std::domain_error("TermSum: bidegree of zero sum");
    return terms_.begin()->first.bidegree(grading_);
}

void TermSum::add_term(const Tree& t, const Scalar& c) {
    if (c.is_zero()) return;
    if (!terms_.empty()) {
        const Tree& t0 = terms_.begin()->first;
        if (t.arity() != t0.arity() || t.bidegree(grading_) != t0.bidegree(grading_))
            throw std::invalid_argument("TermSum: mixed arity or bidegree");
    }
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(t, c);
    } else {
        it->second = it->second.add(c, ring_);
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TermSum TermSum::add(const TermSum& o) const {
    if (ring_ != o.ring_) throw std::invalid_argument("TermSum: ring mismatch");
    TermSum r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

TermSum TermSum::scaled(const Scalar& c) const {
    TermSum r(ring_, grading_);
    if (c.is_zero()) return r;
    for (const auto& [t, s] : terms_) r.terms_.emplace(t, s.mul(c, ring_));
    return r;
}

bool TermSum::operator==(const TermSum& o) const {
    return ring_ == o.ring_ && grading_ == o.grading_ && terms_ == o.terms_;
}

std::string TermSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        std::string cs = c.to_string();
        if (!cs.empty() && cs[0] == '-') {
            os << (first ? "-" : " - ");
            cs = cs.substr(1);
        } else {
            os << (first ? "" : " + ");
        }
        if (cs != "1") os << cs << "*";
        os << t.to_string();
        first = false;
    }
    return os.str();
}

TermSum partial_compose(const TermSum& a, int i, const TermSum& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("partial_compose: ring mismatch");
    if (a.grading() != b.grading())
        throw std::invalid_argument("partial_compose: grading mismatch");
    TermSum r(a.ring(), a.grading());
    if (a.is_zero() || b.is_zero()) return r;
    if (i < 1 || i > a.arity()) throw std::invalid_argument("partial_compose: index out of range");
    const Bidegree bd = b.bidegree();
    for (const auto& [ta, ca] : a.terms()) {
        const bool flip = Bidegree::pairing_odd(bd, ta.degree_after_leaf(i, a.grading()));
        for (const auto& [tb, cb] : b.terms()) {
            Scalar c = ca.mul(cb, a.ring());
            if (flip) c = c.neg(a.ring());
            r.add_term(ta.grafted(i, tb), c);
        }
    }
    return r;
}

DAsElement::DAsElement(CoefficientRing ring, int arity) : ring_(ring), arity_(arity) {
    if (arity < 1 || arity > 32) throw std::invalid_argument("DAsElement: arity out of range");
}

DAsElement DAsElement::monomial(const CoefficientRing& ring, int arity, uint64_t eps,
                                const Scalar& c) {
    DAsElement e(ring, arity);
    e.add_monomial(eps, c);
    return e;
}

DAsElement DAsElement::identity(const CoefficientRing& ring) {
    return monomial(ring, 1, 0, Scalar::of(ring, 1));
}

void DAsElement::add_monomial(uint64_t eps, const Scalar& c) {
    if (eps >= (uint64_t(1) << arity_))
        throw std::invalid_argument("DAsElement: exponent vector out of range");
    if (c.is_zero()) return;
    auto it = monos_.find(eps);
    if (it == monos_.end()) {
        monos_.emplace(eps, c);
    } else {
        it->second = it->second.add(c, ring_);
        if (it->second.is_zero()) monos_.erase(it);
    }
}

DAsElement DAsElement::add(const DAsElement& o) const {
    if (arity_ != o.arity_ || ring_ != o.ring_)
        throw std::invalid_argument("DAsElement: incompatible sum");
    DAsElement r = *this;
    for (const auto& [e, c] : o.monos_) r.add_monomial(e, c);
    return r;
}

DAsElement DAsElement::scaled(const Scalar& c) const {
    DAsElement r(ring_, arity_);
    if (c.is_zero()) return r;
    for (const auto& [e, s] : monos_) r.monos_.emplace(e, s.mul(c, ring_));
    return r;
}

bool DAsElement::operator==(const DAsElement& o) const {
    return ring_ == o.ring_ && arity_ == o.arity_ && monos_ == o.monos_;
}

std::string DAsElement::to_string() const {
    if (monos_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : monos_) {
        os << (first ? "" : " + ") << c.to_string() << "*";
        if (e == 0) os << "1";
        for (int k = 0; k < arity_; ++k)
            if (e & (uint64_t(1) << k)) os << "x" << (k + 1);
        first = false;
    }
    return os.str();
}

DAsElement das_compose(const DAsElement& a, int i, const DAsElement& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("das_compose: ring mismatch");
    if (i < 1 || i > a.arity()) throw std::invalid_argument("das_compose: index out of range");
    const int k = b.arity();
    DAsElement r(a.ring(), a.arity() + k - 1);
    const auto& ring = a.ring();
    for (const auto& [ea, ca] : a.monomials()) {
        // alpha = (sum of eps_j for j > i) * (sum of delta_r)
        const int after = std::popcount(ea >> i);
        const uint64_t low = ea & ((uint64_t(1) << (i - 1)) - 1);
        const uint64_t high = ea >> i;
        for (const auto& [db, cb] : b.monomials()) {
            const bool alpha_odd = (after & 1) != 0 && (std::popcount(db) & 1) != 0;
            Scalar base = ca.mul(cb, ring);
            if (alpha_odd) base = base.neg(ring);
            auto splice = [&](uint64_t delta) {
                return low | (delta << (i - 1)) | (high << (i - 1 + k));
            };
            if ((ea >> (i - 1)) & 1) {
                // eps_i = 1: signed Leibniz sum; delta_s + 1 = 2 kills the term
                for (int s = 1; s <= k; ++s) {
                    if ((db >> (s - 1)) & 1) continue;
                    const int beta = std::popcount(db & ((uint64_t(1) << (s - 1)) - 1));
                    Scalar c = (beta & 1) ? base.neg(ring) : base;
                    r.add_monomial(splice(db | (uint64_t(1) << (s - 1))), c);
                }
            } else {
                r.add_monomial(splice(db), base);
            }
        }
    }
    return r;
}

namespace {

// parses the subtree at token position `at`, composing left to right
DAsElement eval_das(const std::vector<Tree::Tok>& toks, size_t& at, const CoefficientRing& ring) {
    const auto tok = toks[at++];
    if (tok.is_leaf()) return DAsElement::identity(ring);
    DAsElement gen(ring, 1);
    if (tok.u == 1 && tok.v == 1) {
        gen = DAsElement::monomial(ring, 1, 1, Scalar::of(ring, 1));
    } else if (tok.u == 0 && tok.v == 2) {
        gen = DAsElement::monomial(ring, 2, 0, Scalar::of(ring, 1));
    } else {
        throw std::invalid_argument("das_normal_form: foreign label m(" + std::to_string(tok.u) +
                                    "," + std::to_string(tok.v) + ")");
    }
    DAsElement result = gen;
    int slot = 1;
    for (int c = 0; c < tok.v; ++c) {
        DAsElement child = eval_das(toks, at, ring);
        result = das_compose(result, slot, child);
        slot += child.arity();
    }
    return result;
}

} // namespace

DAsElement das_normal_form(const Tree& t, const CoefficientRing& ring) {
    size_t at = 0;
    return eval_das(t.tokens(), at, ring);
}

DAsElement das_normal_form(const TermSum& ts) {
    if (ts.is_zero()) throw std::domain_error("das_normal_form: zero sum has no arity");
    DAsElement r(ts.ring(), ts.arity());
    for (const auto& [t, c] : ts.terms())
        r = r.add(das_normal_form(t, ts.ring()).scaled(c));
    return r;
}

DAsElement project_to_das(const TermSum& ts) {
    if (ts.is_zero()) throw std::domain_error("project_to_das: zero sum has no arity");
    DAsElement r(ts.ring(), ts.arity());
    for (const auto& [t, c] : ts.terms()) {
        bool killed = false;
        for (const auto& tok : t.tokens()) {
            if (tok.is_leaf()) continue;
            if (!((tok.u == 1 && tok.v == 1) || (tok.u == 0 && tok.v == 2))) {
                killed = true;
                break;
            }
        }
        if (!killed) r = r.add(das_normal_form(t, ts.ring()).scaled(c));
    }
    return r;
}

} // namespace dainf
