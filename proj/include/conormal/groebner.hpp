#pragma once

// Buchberger's algorithm for submodules of free modules R^r (ideals are the
// rank-one case): sugar selection, Gebauer-Moeller pair elimination, reduced
// bases, normal forms, and syzygies by tag-variable elimination.

#include "conormal/matrix.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <numeric>
#include <vector>

namespace conormal {

/// Per-thread cap on the number of S-pair and generator reductions of a single
/// Groebner basis computation.
inline long& gb_step_limit() {
    thread_local long limit = 20'000'000;
    return limit;
}

class ScopedStepLimit {
public:
    explicit ScopedStepLimit(long limit) : saved_(gb_step_limit()) { gb_step_limit() = limit; }
    ~ScopedStepLimit() { gb_step_limit() = saved_; }
    ScopedStepLimit(const ScopedStepLimit&) = delete;
    ScopedStepLimit& operator=(const ScopedStepLimit&) = delete;

private:
    long saved_;
};

namespace detail {

struct VTerm {
    Monomial mono;
    int comp;
    Scalar coeff;
};
using Vec = std::vector<VTerm>;

/// Term-over-position order on R^r, optionally refined by component blocks
/// (block 0 dominates block 1, and so on) for elimination of components.
class ModuleOrder {
public:
    ModuleOrder() = default;
    ModuleOrder(const PolyRing* ring, std::vector<int> twists, std::vector<int> blocks = {})
        : ring_(ring), twists_(std::move(twists)), blocks_(std::move(blocks)) {}

    int compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
        if (!blocks_.empty() && blocks_[ca] != blocks_[cb]) return blocks_[ca] < blocks_[cb] ? 1 : -1;
        int c = ring_->compare(a, b);
        if (c != 0) return c;
        if (ca != cb) return ca < cb ? 1 : -1;
        return 0;
    }
    int compare(const VTerm& a, const VTerm& b) const { return compare(a.mono, a.comp, b.mono, b.comp); }

    int block(int comp) const { return blocks_.empty() ? 0 : blocks_[comp]; }
    int twisted_degree(const VTerm& t) const { return t.mono.degree() + twists_[t.comp]; }
    int rank() const { return static_cast<int>(twists_.size()); }
    const PolyRing& ring() const { return *ring_; }
    const std::vector<int>& twists() const { return twists_; }

private:
    const PolyRing* ring_ = nullptr;
    std::vector<int> twists_;
    std::vector<int> blocks_;
};

inline void canonicalize(Vec& v, const ModuleOrder& ord) {
    std::sort(v.begin(), v.end(), [&](const VTerm& a, const VTerm& b) { return ord.compare(a, b) > 0; });
    Vec out;
    out.reserve(v.size());
    for (auto& t : v) {
        if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) out.back().coeff += t.coeff;
        else {
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    v = std::move(out);
}

/// f[start..] - c * m * g, merged in order.
inline Vec sub_multiple(Vec& f, std::size_t start, const Scalar& c, const Monomial& m, const Vec& g,
                        const ModuleOrder& ord) {
    Vec r;
    r.reserve(f.size() - start + g.size());
    std::size_t i = start, j = 0;
    while (i < f.size() || j < g.size()) {
        int cmp;
        Monomial gm;
        if (j < g.size()) gm = g[j].mono * m;
        if (i == f.size()) cmp = -1;
        else if (j == g.size()) cmp = 1;
        else cmp = ord.compare(f[i].mono, f[i].comp, gm, g[j].comp);
        if (cmp > 0) r.push_back(std::move(f[i++]));
        else if (cmp < 0) {
            r.push_back({gm, g[j].comp, -(c * g[j].coeff)});
            ++j;
        } else {
            f[i].coeff -= c * g[j].coeff;
            if (!f[i].coeff.is_zero()) r.push_back(std::move(f[i]));
            ++i;
            ++j;
        }
    }
    return r;
}

inline void make_monic(Vec& v) {
    if (v.empty() || v.front().coeff.is_one()) return;
    Scalar inv = v.front().coeff.inverse();
    for (auto& t : v) t.coeff *= inv;
}

inline int sugar_of(const Vec& v, const ModuleOrder& ord) {
    int s = 0;
    bool first = true;
    for (const auto& t : v) {
        int d = ord.twisted_degree(t);
        if (first || d > s) s = d;
        first = false;
    }
    return s;
}

inline bool is_homogeneous_vec(const Vec& v, const ModuleOrder& ord) {
    for (const auto& t : v)
        if (ord.twisted_degree(t) != ord.twisted_degree(v.front())) return false;
    return true;
}

/// One Buchberger run. Inputs are processed in order of sugar, interleaved
/// with S-pairs; for homogeneous input the inputs that survive reduction form
/// a minimal generating set.
class Buchberger {
public:
    Buchberger(ModuleOrder order, bool product_criterion)
        : ord_(std::move(order)),
          product_criterion_(product_criterion),
          weights_(ord_.ring().weights()),
          field_(ord_.ring().field()),
          qq_(field_.is_rational()) {}

    void run(std::vector<Vec> inputs) {
        std::vector<std::pair<int, int>> queue;  // (sugar, input index)
        inputs_ = std::move(inputs);
        minimal_.assign(inputs_.size(), false);
        for (std::size_t k = 0; k < inputs_.size(); ++k) {
            canonicalize(inputs_[k], ord_);
            if (!inputs_[k].empty()) normalize(inputs_[k]);
            if (!inputs_[k].empty()) queue.push_back({sugar_of(inputs_[k], ord_), static_cast<int>(k)});
        }
        std::stable_sort(queue.begin(), queue.end(), [](auto& a, auto& b) { return a.first < b.first; });
        std::size_t next = 0;
        long steps = 0;
        const long limit = gb_step_limit();
        while (next < queue.size() || !pairs_.empty()) {
            if (++steps > limit)
                throw LimitExceeded("Groebner basis step limit exceeded (" + std::to_string(limit) + " steps)");
            int best = select_pair();
            if (best >= 0 && pairs_[best].sugar > degree_bound_ && next == queue.size()) break;
            if (best >= 0 && (next == queue.size() || pairs_[best].sugar <= queue[next].first)) {
                Pair p = pairs_[best];
                pairs_[best] = pairs_.back();
                pairs_.pop_back();
                Vec s = spoly(p);
                insert(std::move(s), p.sugar, -1, ord_.block(p.comp) > 0);
            } else {
                int k = queue[next].second;
                insert(inputs_[k], queue[next].first, k);
                ++next;
            }
        }
    }

    /// Interreduced monic basis sorted by descending leading term.
    std::vector<Vec> reduced_basis() const {
        std::vector<int> act = active_indices();
        std::vector<Vec> out;
        out.reserve(act.size());
        for (int i : act) {
            const Vec& v = elems_[i].v;
            Vec tail(v.begin() + 1, v.end());
            Vec red = reduce(std::move(tail), true, i);
            Vec full;
            full.reserve(red.size() + 1);
            full.push_back(v.front());
            for (auto& t : red) full.push_back(std::move(t));
            make_monic(full);
            out.push_back(std::move(full));
        }
        std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) { return ord_.compare(a.front(), b.front()) > 0; });
        return out;
    }

    const std::vector<bool>& minimal_inputs() const { return minimal_; }

    /// Elements whose leading term lies past block 0 and that did not come from
    /// an S-pair of two such elements. For homogeneous input they minimally
    /// generate the part of the module supported on the later blocks.
    std::vector<Vec> block_minimal_generators() const {
        std::vector<Vec> out;
        for (int i : new_in_blocks_) {
            Vec v = elems_[i].v;
            make_monic(v);
            out.push_back(std::move(v));
        }
        return out;
    }

    /// S-pairs of sugar above the bound are discarded; with homogeneous input
    /// and the bound at the top input degree, minimal_inputs stays exact.
    void set_degree_bound(int bound) { degree_bound_ = bound; }

    Vec normal_form(Vec f) const {
        canonicalize(f, ord_);
        return reduce(std::move(f), true, -1);
    }

    const ModuleOrder& order() const { return ord_; }

private:
    struct Elem {
        Vec v;
        int sugar;
        bool active;
    };
    struct Pair {
        int i, j;
        Monomial lcm;
        int comp;
        int sugar;
    };

    std::vector<int> active_indices() const {
        std::vector<int> a;
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (elems_[i].active) a.push_back(static_cast<int>(i));
        return a;
    }

    int find_reducer(const VTerm& t, int skip) const {
        for (int k : active_) {
            if (k == skip) continue;
            const VTerm& l = elems_[k].v.front();
            if (l.comp == t.comp && l.mono.divides(t.mono)) return k;
        }
        return -1;
    }

    /// Reduces f; with full=false only the leading term is reduced away.
    /// Over QQ the reduction is fraction-free and the running scale is
    /// divided out at the end, so the result is the exact normal form.
    Vec reduce(Vec f, bool full, int skip) const {
        Vec done;
        std::size_t start = 0;
        mpq_class scale = 1;
        long steps = 0;
        if (qq_) {
            mpz_class l = 1;
            for (const auto& t : f) l = lcm(l, t.coeff.rational().get_den());
            if (l != 1) {
                Scalar sl(field_, mpq_class(l));
                for (auto& t : f) t.coeff *= sl;
                scale = l;
            }
        }
        while (start < f.size()) {
            int k = find_reducer(f[start], skip);
            if (k < 0) {
                if (!full) {
                    if (start > 0) f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(start));
                    return f;
                }
                done.push_back(std::move(f[start]));
                ++start;
                continue;
            }
            const Vec& g = elems_[k].v;
            Monomial m = g.front().mono.quotient_of(f[start].mono);
            if (qq_) {
                const mpz_class& a = g.front().coeff.rational().get_num();
                const mpz_class& b = f[start].coeff.rational().get_num();
                mpz_class d = gcd(a, b);
                mpz_class fa = a / d;
                Scalar c(field_, mpq_class(b / d));
                if (fa != 1) {
                    Scalar sa(field_, mpq_class(fa));
                    for (std::size_t i = start; i < f.size(); ++i) f[i].coeff *= sa;
                    for (auto& t : done) t.coeff *= sa;
                    scale *= fa;
                }
                f = sub_multiple(f, start, c, m, g, ord_);
                if (++steps % 8 == 0) remove_content(f, done, scale);
            } else {
                Scalar c = f[start].coeff / g.front().coeff;
                f = sub_multiple(f, start, c, m, g, ord_);
            }
            start = 0;
        }
        if (!full) return Vec{};
        if (qq_ && scale != 1) {
            Scalar inv(field_, mpq_class(1 / scale));
            for (auto& t : done) t.coeff *= inv;
        }
        return done;
    }

    /// Divides f and done by the integer content of their union.
    void remove_content(Vec& f, Vec& done, mpq_class& scale) const {
        mpz_class g = 0;
        for (const auto& t : done) {
            g = gcd(g, t.coeff.rational().get_num());
            if (g == 1) return;
        }
        for (const auto& t : f) {
            g = gcd(g, t.coeff.rational().get_num());
            if (g == 1) return;
        }
        if (g == 0) return;
        Scalar inv(field_, mpq_class(1, 1) / mpq_class(g));
        for (auto& t : f) t.coeff *= inv;
        for (auto& t : done) t.coeff *= inv;
        scale /= g;
    }

    /// Monic over F_p; primitive integral with positive leading coefficient over QQ.
    void normalize(Vec& v) const {
        if (!qq_) {
            make_monic(v);
            return;
        }
        mpz_class l = 1, g = 0;
        for (const auto& t : v) l = lcm(l, t.coeff.rational().get_den());
        for (const auto& t : v) g = gcd(g, mpz_class(t.coeff.rational().get_num() * (l / t.coeff.rational().get_den())));
        mpq_class f = mpq_class(l) / g;
        if (sgn(v.front().coeff.rational()) < 0) f = -f;
        if (f == 1) return;
        Scalar sf(field_, f);
        for (auto& t : v) t.coeff *= sf;
    }

    Vec spoly(const Pair& p) const {
        const Vec& a = elems_[p.i].v;
        const Vec& b = elems_[p.j].v;
        Monomial ma = a.front().mono.quotient_of(p.lcm);
        Monomial mb = b.front().mono.quotient_of(p.lcm);
        Scalar ca = Scalar::one(field_), cb = Scalar::one(field_);
        if (qq_) {
            const mpz_class& la = a.front().coeff.rational().get_num();
            const mpz_class& lb = b.front().coeff.rational().get_num();
            mpz_class d = gcd(la, lb);
            ca = Scalar(field_, mpq_class(lb / d));
            cb = Scalar(field_, mpq_class(la / d));
        }
        Vec scaled_a;
        scaled_a.reserve(a.size());
        for (const auto& t : a) scaled_a.push_back({t.mono * ma, t.comp, t.coeff * ca});
        // F_p leading coefficients are 1 for stored elements
        return sub_multiple(scaled_a, 0, cb, mb, b, ord_);
    }

    void insert(Vec v, int sugar, int input_index, bool inner = false) {
        Vec r = reduce(std::move(v), true, -1);
        if (r.empty()) return;
        normalize(r);
        if (input_index >= 0) minimal_[input_index] = true;
        if (!inner && ord_.block(r.front().comp) > 0) new_in_blocks_.push_back(static_cast<int>(elems_.size()));
        int sug = std::max(sugar, sugar_of(r, ord_));
        int h = static_cast<int>(elems_.size());
        elems_.push_back({std::move(r), sug, true});
        active_.push_back(h);
        update(h);
    }

    Pair make_pair(int i, int h) const {
        const VTerm& a = elems_[i].v.front();
        const VTerm& b = elems_[h].v.front();
        Pair p{i, h, lcm(a.mono, b.mono, weights_), a.comp, 0};
        int sa = elems_[i].sugar + p.lcm.degree() - a.mono.degree();
        int sb = elems_[h].sugar + p.lcm.degree() - b.mono.degree();
        p.sugar = std::max(sa, sb);
        return p;
    }

    bool disjoint(int i, int h) const {
        return product_criterion_ && elems_[i].v.front().mono.coprime_with(elems_[h].v.front().mono);
    }

    void update(int h) {
        const VTerm& lh = elems_[h].v.front();
        std::vector<Pair> C, D;
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (static_cast<int>(i) == h || !elems_[i].active) continue;
            if (elems_[i].v.front().comp != lh.comp) continue;
            C.push_back(make_pair(static_cast<int>(i), h));
        }
        // chain criterion among the new pairs
        while (!C.empty()) {
            Pair p = C.back();
            C.pop_back();
            bool keep = disjoint(p.i, h);
            if (!keep) {
                keep = true;
                for (const auto& q : C)
                    if (q.lcm.divides(p.lcm)) { keep = false; break; }
                if (keep)
                    for (const auto& q : D)
                        if (q.lcm.divides(p.lcm)) { keep = false; break; }
            }
            if (keep) D.push_back(p);
        }
        // drop old pairs whose lcm is covered by the new leading term
        std::vector<Pair> kept;
        kept.reserve(pairs_.size());
        for (const auto& p : pairs_) {
            bool drop = false;
            if (p.comp == lh.comp && lh.mono.divides(p.lcm)) {
                Monomial l1 = lcm(elems_[p.i].v.front().mono, lh.mono, weights_);
                Monomial l2 = lcm(elems_[p.j].v.front().mono, lh.mono, weights_);
                drop = !(l1 == p.lcm) && !(l2 == p.lcm);
            }
            if (!drop) kept.push_back(p);
        }
        pairs_ = std::move(kept);
        for (const auto& p : D)
            if (!disjoint(p.i, h)) pairs_.push_back(p);
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (static_cast<int>(i) == h || !elems_[i].active) continue;
            const VTerm& l = elems_[i].v.front();
            if (l.comp == lh.comp && lh.mono.divides(l.mono)) elems_[i].active = false;
        }
        std::erase_if(active_, [&](int i) { return !elems_[i].active; });
    }

    int select_pair() const {
        int best = -1;
        for (std::size_t k = 0; k < pairs_.size(); ++k) {
            if (best < 0) { best = static_cast<int>(k); continue; }
            const Pair& a = pairs_[k];
            const Pair& b = pairs_[best];
            if (a.sugar != b.sugar) {
                if (a.sugar < b.sugar) best = static_cast<int>(k);
                continue;
            }
            bool ia = ord_.block(a.comp) > 0, ib = ord_.block(b.comp) > 0;
            if (ia != ib) {
                if (ia) best = static_cast<int>(k);
                continue;
            }
            if (ord_.compare(a.lcm, a.comp, b.lcm, b.comp) < 0) best = static_cast<int>(k);
        }
        return best;
    }

    ModuleOrder ord_;
    bool product_criterion_;
    std::vector<int> weights_;
    Field field_;
    bool qq_;
    int degree_bound_ = std::numeric_limits<int>::max();
    std::vector<Vec> inputs_;
    std::vector<bool> minimal_;
    std::vector<Elem> elems_;
    std::vector<Pair> pairs_;
    std::vector<int> active_;
    std::vector<int> new_in_blocks_;
};

inline Vec to_vec(const Polynomial& f, int comp = 0) {
    Vec v;
    v.reserve(f.size());
    for (const auto& t : f.terms()) v.push_back({t.mono, comp, t.coeff});
    return v;
}

inline Vec column_to_vec(const Matrix& m, int j, const ModuleOrder& ord, int comp_offset = 0) {
    Vec v;
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& t : m.at(i, j).terms()) v.push_back({t.mono, i + comp_offset, t.coeff});
    canonicalize(v, ord);
    return v;
}

/// Splits a vector into per-component polynomials for components [lo, lo+count).
inline std::vector<Polynomial> vec_to_column(const Vec& v, const RingPtr& ring, int lo, int count) {
    std::vector<std::vector<Term>> parts(count);
    for (const auto& t : v)
        if (t.comp >= lo && t.comp < lo + count) parts[t.comp - lo].push_back({t.mono, t.coeff});
    std::vector<Polynomial> out;
    out.reserve(count);
    for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
    return out;
}

inline Polynomial vec_to_poly(const Vec& v, const RingPtr& ring) {
    std::vector<Term> terms;
    terms.reserve(v.size());
    for (const auto& t : v) terms.push_back({t.mono, t.coeff});
    return Polynomial::from_sorted(ring, std::move(terms));
}

}  // namespace detail

/// Reduced or minimal Groebner basis of an ideal under the ring's order.
class GroebnerBasis {
public:
    GroebnerBasis() = default;

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const MonomialOrder& order() const { return ring_->order(); }
    bool reduced() const { return reduced_; }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_constant() && !gens_[0].is_zero(); }
    bool is_zero() const { return gens_.empty(); }

    Polynomial normal_form(const Polynomial& f) const {
        if (!same_ring(f.ring(), ring_)) throw Error("ring mismatch in normal form");
        if (gens_.empty()) return f;
        detail::Vec v = detail::to_vec(f);
        detail::canonicalize(v, engine_->order());
        return detail::vec_to_poly(engine_->normal_form(std::move(v)), ring_);
    }
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> m;
        for (const auto& g : gens_) m.push_back(g.leading().mono);
        return m;
    }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
    }

    friend GroebnerBasis compute_groebner(const RingPtr& ring, const std::vector<Polynomial>& gens, bool reduced);

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    bool reduced_ = true;
    std::shared_ptr<const detail::Buchberger> engine_;
};

inline GroebnerBasis compute_groebner(const RingPtr& ring, const std::vector<Polynomial>& gens, bool reduced) {
    detail::ModuleOrder ord(ring.get(), {0});
    auto engine = std::make_shared<detail::Buchberger>(ord, true);
    std::vector<detail::Vec> inputs;
    for (const auto& g : gens) {
        if (!same_ring(g.ring(), ring)) throw Error("ring mismatch in Groebner basis input");
        if (!g.is_zero()) inputs.push_back(detail::to_vec(g));
    }
    engine->run(std::move(inputs));
    GroebnerBasis gb;
    gb.ring_ = ring;
    gb.reduced_ = true;
    for (const auto& v : engine->reduced_basis()) gb.gens_.push_back(detail::vec_to_poly(v, ring));
    (void)reduced;  // the minimal basis is always returned fully reduced
    gb.engine_ = std::move(engine);
    return gb;
}

/// groebner_basis under the ring's own order.
inline GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, bool reduced = true) {
    if (gens.empty()) throw Error("groebner_basis needs at least one generator to know its ring");
    return compute_groebner(gens.front().ring(), gens, reduced);
}

/// Same ring with a different monomial order.
inline RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
    return PolyRing::create(ring->names(), ring->field(), std::move(order), ring->weights());
}

/// groebner_basis under an explicit order: generators are moved to a copy of
/// their ring carrying `order`.
inline GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order, bool reduced = true) {
    if (gens.empty()) throw Error("groebner_basis needs at least one generator to know its ring");
    RingPtr r = with_order(gens.front().ring(), order);
    std::vector<Polynomial> moved;
    for (const auto& g : gens) moved.push_back(remap_by_name(g, r));
    return compute_groebner(r, moved, reduced);
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

/// Minimal homogeneous generators among `gens` (indices into gens), by
/// degree-by-degree reduction. Requires homogeneous input.
inline std::vector<int> minimal_generator_indices(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    detail::ModuleOrder ord(ring.get(), {0});
    detail::Buchberger engine(ord, true);
    std::vector<detail::Vec> inputs;
    for (const auto& g : gens) {
        if (!g.is_homogeneous()) throw Error("minimal generators need homogeneous input");
        inputs.push_back(detail::to_vec(g));
    }
    int top = std::numeric_limits<int>::min();
    for (const auto& g : gens) top = std::max(top, g.degree());
    engine.set_degree_bound(top);
    engine.run(std::move(inputs));
    std::vector<int> out;
    for (std::size_t k = 0; k < gens.size(); ++k)
        if (engine.minimal_inputs()[k]) out.push_back(static_cast<int>(k));
    return out;
}

/// Groebner basis of the submodule of R^r spanned by the columns of a matrix.
class SubmoduleGB {
public:
    explicit SubmoduleGB(const Matrix& gens) : ring_(gens.ring()), rank_(gens.rows()) {
        detail::ModuleOrder ord(ring_.get(), gens.row_degrees());
        engine_ = std::make_shared<detail::Buchberger>(ord, rank_ == 1);
        std::vector<detail::Vec> inputs;
        for (int j = 0; j < gens.cols(); ++j) inputs.push_back(detail::column_to_vec(gens, j, ord));
        engine_->run(std::move(inputs));
        basis_ = engine_->reduced_basis();
        twists_ = gens.row_degrees();
    }

    int rank() const { return rank_; }

    std::vector<Polynomial> normal_form(const std::vector<Polynomial>& column) const {
        detail::Vec v;
        for (int i = 0; i < rank_; ++i)
            for (const auto& t : column[i].terms()) v.push_back({t.mono, i, t.coeff});
        return detail::vec_to_column(engine_->normal_form(std::move(v)), ring_, 0, rank_);
    }
    bool contains(const std::vector<Polynomial>& column) const {
        for (const auto& p : normal_form(column))
            if (!p.is_zero()) return false;
        return true;
    }
    bool contains_column(const Matrix& m, int j) const { return contains(m.column(j)); }

    /// Leading (monomial, component) pairs of the reduced basis.
    std::vector<std::pair<Monomial, int>> leading_terms() const {
        std::vector<std::pair<Monomial, int>> out;
        for (const auto& v : basis_) out.push_back({v.front().mono, v.front().comp});
        return out;
    }

    Matrix basis_matrix() const {
        std::vector<std::vector<Polynomial>> cols;
        for (const auto& v : basis_) cols.push_back(detail::vec_to_column(v, ring_, 0, rank_));
        return Matrix::from_columns(ring_, rank_, cols, twists_);
    }

    const std::vector<int>& twists() const { return twists_; }

private:
    RingPtr ring_;
    int rank_;
    std::shared_ptr<detail::Buchberger> engine_;
    std::vector<detail::Vec> basis_;
    std::vector<int> twists_;
};

/// Minimal generators among the columns of a homogeneous matrix (column indices).
inline std::vector<int> minimal_column_indices(const Matrix& m) {
    detail::ModuleOrder ord(m.ring().get(), m.row_degrees());
    detail::Buchberger engine(ord, m.rows() == 1);
    std::vector<detail::Vec> inputs;
    int top = std::numeric_limits<int>::min();
    for (int j = 0; j < m.cols(); ++j) {
        inputs.push_back(detail::column_to_vec(m, j, ord));
        if (!inputs.back().empty()) top = std::max(top, detail::sugar_of(inputs.back(), ord));
    }
    if (m.is_homogeneous()) engine.set_degree_bound(top);
    engine.run(std::move(inputs));
    std::vector<int> out;
    for (int j = 0; j < m.cols(); ++j)
        if (engine.minimal_inputs()[j]) out.push_back(j);
    return out;
}

inline Matrix minimal_columns(const Matrix& m) {
    if (!m.is_homogeneous()) throw Error("minimal generators need a homogeneous matrix");
    return m.select_columns(minimal_column_indices(m));
}

/// Generators of { y in R^c : A y in image(Q) } where c = cols(A) and Q has the
/// same rows as A. Computed from a Groebner basis of the columns (A_j, e_j) and
/// (Q_k, 0) in an order where the first rows(A) components dominate. Output
/// rows carry A's column degrees; for homogeneous input the result is a minimal
/// generating set unless minimalize is false.
inline Matrix kernel_mod(const Matrix& A, const Matrix& Q, bool minimalize = true) {
    const RingPtr& ring = A.ring();
    int r = A.rows(), c = A.cols();
    if (Q.cols() > 0 && Q.rows() != r) throw Error("kernel_mod: row count mismatch");
    std::vector<int> twists = A.row_degrees();
    twists.insert(twists.end(), A.col_degrees().begin(), A.col_degrees().end());
    std::vector<int> blocks(r, 0);
    blocks.resize(r + c, 1);
    detail::ModuleOrder ord(ring.get(), twists, blocks);
    std::vector<detail::Vec> inputs;
    bool homogeneous = A.is_homogeneous() && (Q.cols() == 0 || Q.is_homogeneous());
    for (int j = 0; j < c; ++j) {
        detail::Vec v = detail::column_to_vec(A, j, ord);
        v.push_back({Monomial(), r + j, Scalar::one(ring->field())});
        detail::canonicalize(v, ord);
        inputs.push_back(std::move(v));
    }
    for (int k = 0; k < Q.cols(); ++k) {
        detail::Vec v = detail::column_to_vec(Q, k, ord);
        if (!v.empty()) inputs.push_back(std::move(v));
    }
    detail::Buchberger engine(ord, false);
    engine.run(std::move(inputs));
    std::vector<std::vector<Polynomial>> cols;
    if (minimalize && homogeneous) {
        for (const auto& v : engine.block_minimal_generators()) cols.push_back(detail::vec_to_column(v, ring, r, c));
    } else {
        for (const auto& v : engine.reduced_basis())
            if (v.front().comp >= r) cols.push_back(detail::vec_to_column(v, ring, r, c));
    }
    return Matrix::from_columns(ring, c, cols, A.col_degrees());
}

/// syzygies: columns generating the kernel of the map given by m.
inline Matrix syzygies(const Matrix& m) { return kernel_mod(m, Matrix(m.ring(), m.rows(), 0)); }

}  // namespace conormal
