#pragma once

// Rees algebras, symmetric algebras and associated graded rings as quotients
// of R[x_1..x_n], where x_i carries the internal degree of the i-th generator.

#include "conormal/module.hpp"
#include "conormal/parse.hpp"

namespace conormal {

inline constexpr int kDefaultMaxDegree = 4;

struct GradedAlgebra {
    RingPtr base_ring;               // R
    RingPtr ring;                    // R[x_1..x_n]
    std::vector<std::string> xnames;
    std::vector<int> xdeg;           // internal degree of x_i
    Ideal defining;                  // in ring
    Ideal base_quotient;             // in base_ring

    int nbase() const { return base_ring->nvars(); }
    int nx() const { return static_cast<int>(xnames.size()); }

    /// Degree in the presentation variables.
    int x_degree(const Monomial& m) const {
        int d = 0;
        for (int i = 0; i < nx(); ++i) d += m[nbase() + i];
        return d;
    }
    bool is_x_homogeneous(const Polynomial& f) const {
        for (const auto& t : f.terms())
            if (x_degree(t.mono) != x_degree(f.leading().mono)) return false;
        return true;
    }
    Polynomial lift(const Polynomial& base_poly) const { return remap_by_name(base_poly, ring); }
    Polynomial x(int i) const { return Polynomial::variable(ring, nbase() + i); }
};

namespace detail {

/// Names prefix1..prefixn avoiding the ring's variables.
inline std::vector<std::string> presentation_names(const PolyRing& R, int n) {
    for (std::string prefix : {"x", "X", "y", "Y", "z", "T"}) {
        std::vector<std::string> names;
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i) {
            names.push_back(prefix + std::to_string(i));
            ok = R.index_of(names.back()) < 0;
        }
        if (ok) return names;
    }
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(fresh_name(R, "x_" + std::to_string(i)));
    return names;
}

inline RingPtr algebra_ring(const PolyRing& R, const std::vector<std::string>& xnames, const std::vector<int>& xdeg) {
    std::vector<std::string> names = R.names();
    names.insert(names.end(), xnames.begin(), xnames.end());
    std::vector<int> w = R.weights();
    w.insert(w.end(), xdeg.begin(), xdeg.end());
    return PolyRing::create(names, R.field(), MonomialOrder::grevlex(), w);
}

inline GradedAlgebra make_algebra(const RingPtr& R, const std::vector<int>& xdeg, std::vector<Polynomial> rel_in_ring,
                                  const Ideal& base_quotient, RingPtr A) {
    GradedAlgebra g;
    g.base_ring = R;
    g.ring = std::move(A);
    for (int i = 0; i < static_cast<int>(xdeg.size()); ++i) g.xnames.push_back(g.ring->name(R->nvars() + i));
    g.xdeg = xdeg;
    for (const auto& b : base_quotient.generators()) rel_in_ring.push_back(remap_by_name(b, g.ring));
    g.defining = gb_ideal(Ideal(g.ring, rel_in_ring));
    g.base_quotient = base_quotient;
    return g;
}

}  // namespace detail

/// rees_of_ideal: R[x]/J with J the kernel of x_i |-> f_i t, by eliminating t.
inline GradedAlgebra rees_of_ideal(const Ideal& I) {
    if (I.is_zero()) throw Error("Rees algebra of the zero ideal");
    if (!I.is_homogeneous()) throw Error("Rees algebra needs a homogeneous ideal");
    const RingPtr& R = I.ring();
    int n = static_cast<int>(I.size());
    std::vector<int> xdeg = I.degrees();
    for (int d : xdeg)
        if (d <= 0) throw Error("Rees algebra needs generators of positive degree");
    auto xn = detail::presentation_names(*R, n);
    std::string t = fresh_name(*R, "t_");
    std::vector<std::string> names{t};
    names.insert(names.end(), R->names().begin(), R->names().end());
    names.insert(names.end(), xn.begin(), xn.end());
    std::vector<int> w{1};
    w.insert(w.end(), R->weights().begin(), R->weights().end());
    for (int d : xdeg) w.push_back(d + 1);
    RingPtr E = PolyRing::create(names, R->field(), MonomialOrder::block_elimination(1), w);
    Polynomial tv = Polynomial::variable(E, 0);
    std::vector<Polynomial> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back(Polynomial::variable(E, 1 + R->nvars() + i) - tv * remap_by_name(I.generators()[i], E));
    GroebnerBasis gb = compute_groebner(E, gens, true);
    RingPtr A = detail::algebra_ring(*R, xn, xdeg);
    auto rel = detail::elimination_slice(gb, 1, A);
    return detail::make_algebra(R, xdeg, rel, Ideal::zero(R), A);
}

/// associated_graded: R(p)/pR(p).
inline GradedAlgebra associated_graded(const Ideal& p) {
    GradedAlgebra r = rees_of_ideal(p);
    std::vector<Polynomial> rel = r.defining.generators();
    return detail::make_algebra(p.ring(), r.xdeg, rel, p, r.ring);
}

/// symmetric_algebra: base[x]/(linear forms of the relation columns, base quotient).
inline GradedAlgebra symmetric_algebra(const FPModule& M) {
    const RingPtr& R = M.ring();
    for (int d : M.degrees())
        if (d <= 0) throw Error("symmetric algebra needs generators of positive degree");
    auto xn = detail::presentation_names(*R, M.ngens());
    RingPtr A = detail::algebra_ring(*R, xn, M.degrees());
    std::vector<Polynomial> rel;
    const Matrix& P = M.presentation();
    for (int j = 0; j < P.cols(); ++j) {
        Polynomial f(A);
        for (int i = 0; i < P.rows(); ++i)
            if (!P.at(i, j).is_zero()) f += remap_by_name(P.at(i, j), A) * Polynomial::variable(A, R->nvars() + i);
        if (!f.is_zero()) rel.push_back(f);
    }
    return detail::make_algebra(R, M.degrees(), rel, M.base(), A);
}

/// graded_component: A_t as a module over base_ring/base_quotient, on the
/// degree-t monomials in x, with relations x^b * g for defining generators g.
inline FPModule graded_component(const GradedAlgebra& A, int t, int max_degree = kDefaultMaxDegree) {
    if (t < 0) throw Error("component degree must be non-negative");
    if (t > max_degree)
        throw Error("component degree " + std::to_string(t) + " exceeds the materialization bound " +
                    std::to_string(max_degree));
    const RingPtr& R = A.base_ring;
    int nb = A.nbase(), nx = A.nx();
    // x-monomials of degree t as exponent vectors
    std::vector<std::vector<int>> basis;
    std::vector<int> e(nx, 0);
    std::function<void(int, int)> gen = [&](int i, int left) {
        if (i == nx - 1 || nx == 0) {
            if (nx > 0) e[i] = left;
            if (nx > 0 || left == 0) basis.push_back(e);
            if (nx > 0) e[i] = 0;
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            gen(i + 1, left - k);
        }
        e[i] = 0;
    };
    gen(0, t);
    std::map<std::vector<int>, int> index;
    std::vector<int> degs;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        index[basis[k]] = static_cast<int>(k);
        int d = 0;
        for (int i = 0; i < nx; ++i) d += basis[k][i] * A.xdeg[i];
        degs.push_back(d);
    }
    std::vector<std::vector<Polynomial>> cols;
    std::vector<int> col_deg;
    for (const auto& g : A.defining.generators()) {
        if (!A.is_x_homogeneous(g)) throw Error("defining ideal is not homogeneous in the presentation variables");
        int s = A.x_degree(g.leading().mono);
        if (s == 0 || s > t) continue;
        // split g by x-monomial
        std::map<std::vector<int>, std::vector<Term>> parts;
        for (const auto& term : g.terms()) {
            std::vector<int> xe(nx), be(nb);
            for (int i = 0; i < nx; ++i) xe[i] = term.mono[nb + i];
            for (int i = 0; i < nb; ++i) be[i] = term.mono[i];
            parts[xe].push_back({R->monomial(be), term.coeff});
        }
        std::vector<std::vector<int>> mults;
        std::vector<int> me(nx, 0);
        std::function<void(int, int)> gm = [&](int i, int left) {
            if (i == nx - 1) {
                me[i] = left;
                mults.push_back(me);
                me[i] = 0;
                return;
            }
            for (int k = left; k >= 0; --k) {
                me[i] = k;
                gm(i + 1, left - k);
            }
            me[i] = 0;
        };
        gm(0, t - s);
        for (const auto& b : mults) {
            std::vector<Polynomial> col(basis.size(), Polynomial(R));
            for (const auto& [xe, terms] : parts) {
                std::vector<int> tot(nx);
                for (int i = 0; i < nx; ++i) tot[i] = xe[i] + b[i];
                col[index.at(tot)] = Polynomial::from_terms(R, terms);
            }
            cols.push_back(std::move(col));
            int d = g.leading().mono.degree();
            for (int i = 0; i < nx; ++i) d += b[i] * A.xdeg[i];
            col_deg.push_back(d);
        }
    }
    Matrix P = Matrix::from_columns(R, static_cast<int>(basis.size()), cols, degs);
    P.set_col_degrees(col_deg);
    return minimal_presentation(FPModule(A.base_quotient,
                                         detail::minimal_mod(detail::reduce_mod(P, A.base_quotient), A.base_quotient)));
}

/// rees_of_module: kernel of base[x] -> base[T], x_j |-> sum_i E_ij T_i, over base_ring/base.
inline GradedAlgebra rees_of_module(const FPModule& M, const Matrix& embedding) {
    const RingPtr& R = M.ring();
    int e = embedding.rows(), n = embedding.cols();
    if (n != M.ngens()) throw Error("embedding must have one column per generator");
    if (!embedding.is_homogeneous()) throw Error("embedding must be homogeneous");
    bool nonzero = false;
    for (const auto& m : detail::minors(embedding, std::min(e, n)))
        if (!M.base().contains(m)) nonzero = true;
    if (e > n || !nonzero) throw Error("rank-deficient embedding matrix");
    int lo = 0;
    for (int i = 0; i < e; ++i) lo = std::min(lo, embedding.row_degrees()[i]);
    int shift = 1 - lo;
    std::vector<int> Tw(e), xdeg(n);
    for (int i = 0; i < e; ++i) Tw[i] = embedding.row_degrees()[i] + shift;
    for (int j = 0; j < n; ++j) xdeg[j] = std::max(1, embedding.col_degrees()[j] + shift);
    auto xn = detail::presentation_names(*R, n);
    std::vector<std::string> names;
    for (int i = 0; i < e; ++i) names.push_back("_T" + std::to_string(i));
    names.insert(names.end(), R->names().begin(), R->names().end());
    names.insert(names.end(), xn.begin(), xn.end());
    std::vector<int> w = Tw;
    w.insert(w.end(), R->weights().begin(), R->weights().end());
    w.insert(w.end(), xdeg.begin(), xdeg.end());
    RingPtr E = PolyRing::create(names, R->field(), MonomialOrder::block_elimination(e), w);
    std::vector<Polynomial> gens;
    for (int j = 0; j < n; ++j) {
        Polynomial f = Polynomial::variable(E, e + R->nvars() + j);
        for (int i = 0; i < e; ++i)
            if (!embedding.at(i, j).is_zero()) f -= remap_by_name(embedding.at(i, j), E) * Polynomial::variable(E, i);
        gens.push_back(f);
    }
    for (const auto& b : M.base().generators()) gens.push_back(remap_by_name(b, E));
    GroebnerBasis gb = compute_groebner(E, gens, true);
    RingPtr A = detail::algebra_ring(*R, xn, xdeg);
    auto rel = detail::elimination_slice(gb, e, A);
    return detail::make_algebra(R, xdeg, rel, M.base(), A);
}

/// linear_type_check: G(p) equals Sym(p/p^2) (GB equality of defining ideals).
inline bool linear_type_check(const Ideal& p) {
    Ideal q = minimalize(p);
    GradedAlgebra G = associated_graded(q);
    GradedAlgebra S = symmetric_algebra(present_conormal(q));
    if (!same_ring(G.ring, S.ring)) throw Error("internal: algebra rings differ");
    return same_ideal(G.defining, S.defining);
}

/// Krull dimension of A/mA, m the ideal of base variables.
inline int fiber_dimension(const GradedAlgebra& A) {
    std::vector<Polynomial> g = A.defining.generators();
    for (int i = 0; i < A.nbase(); ++i) g.push_back(Polynomial::variable(A.ring, i));
    return dimension_and_height(Ideal(A.ring, g)).dim;
}

/// analytic_spread: dim G/mG.
inline int analytic_spread(const Ideal& p) { return fiber_dimension(associated_graded(p)); }

/// Hilbert function of A_t over k in each internal degree, for finite-length base quotients
/// only through the component presentation; used for comparisons of algebras.
inline std::vector<FPModule> components_up_to(const GradedAlgebra& A, int max_t) {
    std::vector<FPModule> out;
    for (int t = 0; t <= max_t; ++t) out.push_back(graded_component(A, t, max_t));
    return out;
}

/// Candidate integral closure base[Y_1..Y_k]/(defining + relations).
struct ClosureCandidate {
    GradedAlgebra base;
    std::vector<std::string> new_vars;
    std::vector<int> new_degrees;      // internal degrees
    RingPtr ring;                      // base.ring variables, then new variables
    std::vector<Polynomial> relations; // in ring
    std::vector<int> monic;            // index of a monic relation per new variable (-1 when missing)

    Polynomial lift(const Polynomial& f) const { return remap_by_name(f, ring); }
    Ideal ideal() const {
        std::vector<Polynomial> g;
        for (const auto& d : base.defining.generators()) g.push_back(lift(d));
        g.insert(g.end(), relations.begin(), relations.end());
        return Ideal(ring, g);
    }
};

namespace detail {

/// Y-degree and leading Y power structure of f with respect to variable v.
inline int var_degree(const Polynomial& f, int v) {
    int d = 0;
    for (const auto& t : f.terms()) d = std::max(d, t.mono[v]);
    return d;
}

/// True when f = c * v^k + (terms of lower v-degree), c a nonzero scalar.
inline bool is_monic_in(const Polynomial& f, int v) {
    int k = var_degree(f, v);
    if (k == 0) return false;
    int top = 0;
    for (const auto& t : f.terms()) {
        if (t.mono[v] != k) continue;
        ++top;
        if (t.mono.support() != (1u << v)) return false;
    }
    return top == 1;
}

}  // namespace detail

/// Builds a candidate from relation texts; each new variable's internal degree
/// is read off its monic relation unless given.
inline ClosureCandidate make_closure_candidate(const GradedAlgebra& G, const std::vector<std::string>& new_vars,
                                               const std::vector<std::string>& relation_texts,
                                               std::vector<int> degrees = {}) {
    const PolyRing& A = *G.ring;
    for (const auto& v : new_vars)
        if (A.index_of(v) >= 0) throw Error("new variable " + v + " clashes with an existing variable");
    auto build = [&](const std::vector<int>& degs) {
        std::vector<std::string> names = A.names();
        names.insert(names.end(), new_vars.begin(), new_vars.end());
        std::vector<int> w = A.weights();
        w.insert(w.end(), degs.begin(), degs.end());
        return PolyRing::create(names, A.field(), MonomialOrder::grevlex(), w);
    };
    int k = static_cast<int>(new_vars.size());
    if (degrees.empty()) {
        RingPtr tmp = build(std::vector<int>(k, 1));
        degrees.assign(k, 0);
        for (const auto& text : relation_texts) {
            Polynomial f = poly_parse(tmp, text);
            for (int y = 0; y < k; ++y) {
                int v = A.nvars() + y;
                if (degrees[y] || !detail::is_monic_in(f, v)) continue;
                int top = detail::var_degree(f, v);
                for (const auto& t : f.terms()) {
                    if (t.mono[v] == top) continue;
                    int rest = 0;
                    bool other_new = false;
                    for (int i = 0; i < A.nvars(); ++i) rest += t.mono[i] * A.weights()[i];
                    for (int z = 0; z < k; ++z)
                        if (z != y && t.mono[A.nvars() + z]) other_new = true;
                    if (other_new) continue;
                    int gap = top - t.mono[v];
                    if (rest % gap == 0 && rest / gap > 0) {
                        degrees[y] = rest / gap;
                        break;
                    }
                }
            }
        }
        for (int y = 0; y < k; ++y)
            if (degrees[y] <= 0)
                throw Error("cannot infer a degree for " + new_vars[y] + " from a monic relation");
    }
    ClosureCandidate c;
    c.base = G;
    c.new_vars = new_vars;
    c.new_degrees = degrees;
    c.ring = build(degrees);
    for (const auto& text : relation_texts) c.relations.push_back(poly_parse(c.ring, text));
    c.monic.assign(k, -1);
    for (int y = 0; y < k; ++y)
        for (std::size_t r = 0; r < c.relations.size(); ++r)
            if (detail::is_monic_in(c.relations[r], A.nvars() + y)) {
                c.monic[y] = static_cast<int>(r);
                break;
            }
    return c;
}

}  // namespace conormal
