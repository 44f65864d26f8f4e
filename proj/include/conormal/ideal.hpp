#pragma once

#include "conormal/groebner.hpp"

#include <climits>
#include <functional>
#include <map>
#include <mutex>

namespace conormal {

/// Height reported for the unit ideal.
inline constexpr int kInfiniteHeight = INT_MAX;

class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
        for (auto& g : gens) {
            if (!same_ring(g.ring(), ring_)) throw Error("ring mismatch in ideal generators");
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }
    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring) {
        Polynomial one = Polynomial::constant(ring, 1);
        return Ideal(std::move(ring), {one});
    }
    /// The ideal generated by all variables.
    static Ideal maximal(RingPtr ring) {
        std::vector<Polynomial> g;
        for (int i = 0; i < ring->nvars(); ++i) g.push_back(Polynomial::variable(ring, i));
        return Ideal(std::move(ring), std::move(g));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }

    /// Reduced Groebner basis under the ring's order, computed once and shared by copies.
    const GroebnerBasis& gb() const {
        std::call_once(cache_->once, [this] {
            if (!gens_.empty()) cache_->gb = compute_groebner(ring_, gens_, true);
        });
        return cache_->gb;
    }

    bool is_unit() const { return !gens_.empty() && gb().is_unit(); }
    bool contains(const Polynomial& f) const { return f.is_zero() || (!gens_.empty() && gb().contains(f)); }
    bool contains(const Ideal& J) const {
        for (const auto& g : J.generators())
            if (!contains(g)) return false;
        return true;
    }
    Polynomial normal_form(const Polynomial& f) const { return gens_.empty() ? f : gb().normal_form(f); }

    bool is_homogeneous() const {
        for (const auto& g : gens_)
            if (!g.is_homogeneous()) return false;
        return true;
    }

    std::vector<int> degrees() const {
        std::vector<int> d;
        for (const auto& g : gens_) d.push_back(g.degree());
        return d;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
        return s + ")";
    }

private:
    struct Cache {
        std::once_flag once;
        GroebnerBasis gb;
    };
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Equality of ideals by comparing reduced Groebner bases.
inline bool same_ideal(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) throw Error("ring mismatch in ideal comparison");
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a.gb().generators() == b.gb().generators();
}

/// An ideal generated by the reduced Groebner basis of I.
inline Ideal gb_ideal(const Ideal& I) {
    if (I.is_zero()) return I;
    return Ideal(I.ring(), I.gb().generators());
}

/// A variable name not used by the ring, built from `base`.
inline std::string fresh_name(const PolyRing& R, const std::string& base) {
    if (R.index_of(base) < 0) return base;
    for (int k = 1;; ++k) {
        std::string n = base + std::to_string(k);
        if (R.index_of(n) < 0) return n;
    }
}

namespace detail {

/// Ring with `front` variables placed before R's variables, eliminated first.
inline RingPtr elimination_ring(const PolyRing& R, const std::vector<std::string>& front,
                                const std::vector<int>& front_weights) {
    std::vector<std::string> names = front;
    names.insert(names.end(), R.names().begin(), R.names().end());
    std::vector<int> w = front_weights;
    w.insert(w.end(), R.weights().begin(), R.weights().end());
    return PolyRing::create(names, R.field(), MonomialOrder::block_elimination(static_cast<int>(front.size())), w);
}

/// Groebner basis elements free of the first `k` variables, mapped to `target` by name.
inline std::vector<Polynomial> elimination_slice(const GroebnerBasis& gb, int k, const RingPtr& target) {
    std::uint32_t mask = k >= 32 ? ~0u : ((1u << k) - 1u);
    std::vector<Polynomial> out;
    for (const auto& g : gb.generators()) {
        bool free = true;
        for (const auto& t : g.terms())
            if (t.mono.support() & mask) { free = false; break; }
        if (free) out.push_back(remap_by_name(g, target));
    }
    return out;
}

}  // namespace detail

/// eliminate: I intersected with the subring on the variables not in drop_vars.
inline Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop_vars) {
    const PolyRing& R = *I.ring();
    if (drop_vars.empty() || I.is_zero()) return I;
    std::vector<std::string> front, back;
    std::vector<int> wf, wb;
    for (const auto& d : drop_vars)
        if (R.index_of(d) < 0) throw Error("eliminate: unknown variable " + d);
    for (int i = 0; i < R.nvars(); ++i) {
        bool drop = std::find(drop_vars.begin(), drop_vars.end(), R.name(i)) != drop_vars.end();
        (drop ? front : back).push_back(R.name(i));
        (drop ? wf : wb).push_back(R.weights()[i]);
    }
    std::vector<std::string> names = front;
    names.insert(names.end(), back.begin(), back.end());
    std::vector<int> w = wf;
    w.insert(w.end(), wb.begin(), wb.end());
    RingPtr E = PolyRing::create(names, R.field(), MonomialOrder::block_elimination(static_cast<int>(front.size())), w);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(remap_by_name(g, E));
    GroebnerBasis gb = compute_groebner(E, gens, true);
    return Ideal(I.ring(), detail::elimination_slice(gb, static_cast<int>(front.size()), I.ring()));
}

/// kernel_of_ring_map: defining ideal of the image of source -> target, x_i |-> images[i].
/// When every image is homogeneous of positive degree the graph ideal is made
/// homogeneous by weighting x_i with deg(images[i]).
inline Ideal kernel_of_ring_map(const RingPtr& source, const std::vector<Polynomial>& images) {
    if (static_cast<int>(images.size()) != source->nvars())
        throw Error("kernel_of_ring_map needs one image per source variable");
    if (images.empty()) return Ideal::zero(source);
    const PolyRing& T = *images.front().ring();
    for (const auto& f : images)
        if (!same_ring(f.ring(), images.front().ring())) throw Error("images must share a ring");
    if (!(T.field() == source->field())) throw Error("field mismatch in ring map");
    bool graded = true;
    for (const auto& f : images)
        if (f.is_zero() || !f.is_homogeneous() || f.degree() <= 0) graded = false;
    std::vector<std::string> names, src_names;
    std::vector<int> w;
    for (int i = 0; i < T.nvars(); ++i) {
        names.push_back("_t" + std::to_string(i));
        w.push_back(T.weights()[i]);
    }
    for (int i = 0; i < source->nvars(); ++i) {
        src_names.push_back("_s" + std::to_string(i));
        names.push_back(src_names.back());
        w.push_back(graded ? images[i].degree() : source->weights()[i]);
    }
    RingPtr E = PolyRing::create(names, T.field(), MonomialOrder::block_elimination(T.nvars()), w);
    std::vector<int> tmap(T.nvars());
    std::iota(tmap.begin(), tmap.end(), 0);
    std::vector<Polynomial> gens;
    for (int i = 0; i < source->nvars(); ++i)
        gens.push_back(Polynomial::variable(E, T.nvars() + i) - remap(images[i], E, tmap));
    GroebnerBasis gb = compute_groebner(E, gens, true);
    std::vector<int> back(E->nvars(), -1);
    for (int i = 0; i < source->nvars(); ++i) back[T.nvars() + i] = i;
    std::vector<Polynomial> out;
    std::uint32_t mask = T.nvars() >= 32 ? ~0u : ((1u << T.nvars()) - 1u);
    for (const auto& g : gb.generators()) {
        bool free = true;
        for (const auto& t : g.terms())
            if (t.mono.support() & mask) { free = false; break; }
        if (free) out.push_back(remap(g, source, back));
    }
    return Ideal(source, out);
}

enum class IdealOp { sum, product, intersection, quotient };

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    std::vector<Polynomial> g = I.generators();
    g.insert(g.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), g);
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
    std::vector<Polynomial> g;
    for (const auto& a : I.generators())
        for (const auto& b : J.generators()) g.push_back(a * b);
    return Ideal(I.ring(), g);
}

/// I intersect J = (t*I + (1-t)*J) intersected with R.
inline Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
    if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
    const PolyRing& R = *I.ring();
    std::string t = fresh_name(R, "t_");
    RingPtr E = detail::elimination_ring(R, {t}, {1});
    Polynomial tv = Polynomial::variable(E, 0);
    Polynomial one_minus_t = Polynomial::constant(E, 1) - tv;
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(tv * remap_by_name(f, E));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * remap_by_name(g, E));
    GroebnerBasis gb = compute_groebner(E, gens, true);
    return Ideal(I.ring(), detail::elimination_slice(gb, 1, I.ring()));
}

/// I : J, as the R-multiples y with y*g in I for every generator g of J.
inline Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    if (J.is_zero()) throw Error("ideal quotient by the zero ideal");
    const RingPtr& R = I.ring();
    int k = static_cast<int>(J.size());
    Matrix A(R, k, 1);
    std::vector<int> rdeg(k);
    bool homogeneous = I.is_homogeneous() && J.is_homogeneous();
    for (int j = 0; j < k; ++j) {
        A.set(j, 0, J.generators()[j]);
        rdeg[j] = homogeneous ? -J.generators()[j].degree() : 0;
    }
    A.set_row_degrees(rdeg);
    A.set_col_degrees({0});
    Matrix Q = ideal_times_free(R, I.generators(), rdeg);
    Matrix K = kernel_mod(A, Q);
    std::vector<Polynomial> gens;
    for (int c = 0; c < K.cols(); ++c) gens.push_back(K.at(0, c));
    return Ideal(R, gens);
}

/// ideal_binary dispatcher.
inline Ideal ideal_binary(IdealOp op, const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring())) throw Error("ring mismatch in ideal operation");
    switch (op) {
    case IdealOp::sum: return ideal_sum(I, J);
    case IdealOp::product: return ideal_product(I, J);
    case IdealOp::intersection: return ideal_intersection(I, J);
    case IdealOp::quotient: return ideal_quotient(I, J);
    }
    return I;
}

/// I : J^infinity; stops once a quotient no longer grows the ideal.
inline Ideal saturate(const Ideal& I, const Ideal& J) {
    if (J.is_zero()) throw Error("saturation by the zero ideal");
    Ideal cur = I;
    for (;;) {
        Ideal next = ideal_quotient(cur, J);
        if (cur.contains(next)) return cur;
        cur = gb_ideal(next);
    }
}

/// Largest set of variables containing no leading-monomial support (bitmask search).
inline int max_independent_set(const std::vector<std::uint32_t>& supports, int nvars) {
    int best = 0;
    std::function<void(int, std::uint32_t, int)> dfs = [&](int i, std::uint32_t set, int size) {
        if (size + (nvars - i) <= best) return;
        if (i == nvars) {
            best = size;
            return;
        }
        std::uint32_t with = set | (1u << i);
        bool ok = true;
        for (auto s : supports)
            if ((s & ~with) == 0) { ok = false; break; }
        if (ok) dfs(i + 1, with, size + 1);
        dfs(i + 1, set, size);
    };
    dfs(0, 0, 0);
    return best;
}

struct DimHeight {
    int dim;
    int height;
};

/// Krull dimension of R/I from the initial ideal and height = dim R - dim R/I.
inline DimHeight dimension_and_height(const Ideal& I) {
    int n = I.ring()->nvars();
    if (I.is_zero()) return {n, 0};
    if (I.is_unit()) throw Error("dimension of the unit ideal is undefined");
    std::vector<std::uint32_t> sup;
    for (const auto& m : I.gb().leading_monomials()) sup.push_back(m.support());
    int d = max_independent_set(sup, n);
    return {d, n - d};
}

/// Height with the unit ideal mapped to kInfiniteHeight.
inline int height(const Ideal& I) {
    if (I.is_unit()) return kInfiniteHeight;
    return dimension_and_height(I).height;
}

inline std::string height_string(int h) { return h == kInfiniteHeight ? "inf" : std::to_string(h); }

namespace detail {

/// All size-t minors of m, via Laplace expansion memoized on column subsets.
inline std::vector<Polynomial> minors(const Matrix& m, int t) {
    std::vector<Polynomial> out;
    int r = m.rows(), c = m.cols();
    if (t <= 0 || t > r || t > c) return out;
    if (c > 31) throw Error("minors: too many columns");
    std::vector<int> rows(t);
    std::function<void(int, int)> choose_rows;
    choose_rows = [&](int start, int k) {
        if (k == t) {
            // det of rows[0..t) restricted to column mask, expanding along rows
            std::vector<std::map<std::uint32_t, Polynomial>> memo(t + 1);
            std::function<Polynomial(int, std::uint32_t)> det = [&](int row, std::uint32_t mask) -> Polynomial {
                if (row == t) return Polynomial::constant(m.ring(), 1);
                auto it = memo[row].find(mask);
                if (it != memo[row].end()) return it->second;
                Polynomial s(m.ring());
                int sign_pos = 0;
                for (int j = 0; j < c; ++j) {
                    if (!(mask & (1u << j))) continue;
                    const Polynomial& a = m.at(rows[row], j);
                    if (!a.is_zero()) {
                        Polynomial sub = det(row + 1, mask & ~(1u << j));
                        if (!sub.is_zero()) {
                            Polynomial term = a * sub;
                            if (sign_pos % 2) s -= term;
                            else s += term;
                        }
                    }
                    ++sign_pos;
                }
                memo[row][mask] = s;
                return s;
            };
            std::function<void(int, int, std::uint32_t)> choose_cols = [&](int cs, int kk, std::uint32_t mask) {
                if (kk == t) {
                    Polynomial d = det(0, mask);
                    if (!d.is_zero()) out.push_back(std::move(d));
                    return;
                }
                for (int j = cs; j <= c - (t - kk); ++j) choose_cols(j + 1, kk + 1, mask | (1u << j));
            };
            choose_cols(0, 0, 0);
            return;
        }
        for (int i = start; i <= r - (t - k); ++i) {
            rows[k] = i;
            choose_rows(i + 1, k + 1);
        }
    };
    choose_rows(0, 0);
    return out;
}

}  // namespace detail

/// fitting_ideal: the ideal I_t(m) of t x t minors (t <= 0 gives the unit ideal).
inline Ideal fitting_ideal(const Matrix& m, int t) {
    if (t <= 0) return Ideal::unit(m.ring());
    return Ideal(m.ring(), detail::minors(m, t));
}

/// Minimal number of homogeneous generators.
inline int minimal_generator_count(const Ideal& I) {
    if (!I.is_homogeneous()) throw Error("minimal generator count needs a homogeneous ideal");
    return static_cast<int>(minimal_generator_indices(I.ring(), I.generators()).size());
}

/// A minimal homogeneous generating subset of I's generators.
inline Ideal minimalize(const Ideal& I) {
    if (!I.is_homogeneous()) throw Error("minimal generators need a homogeneous ideal");
    std::vector<Polynomial> g;
    for (int k : minimal_generator_indices(I.ring(), I.generators())) g.push_back(I.generators()[k]);
    return Ideal(I.ring(), g);
}

struct HeightEntry {
    int t;          // criterion index
    int minor_size; // size of the minors forming the Fitting ideal
    int height;     // kInfiniteHeight for the unit ideal
    int bound;
    bool pass;
};

struct HeightProfile {
    int n = 0;      // number of generators of p
    int g = 0;      // height of p
    int d = 0;      // dimension of the ambient ring
    std::vector<HeightEntry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

}  // namespace conormal
