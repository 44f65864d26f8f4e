#pragma once

// Finitely presented graded modules over R or over a quotient S = R/I. A
// module over S is kept as an R-presentation; the relations I*F are adjoined
// whenever a computation needs the module as an R-module.

#include "conormal/ideal.hpp"
#include "conormal/resolution.hpp"

#include <optional>
#include <random>

namespace conormal {

class FPModule {
public:
    FPModule() = default;
    /// coker(presentation) over R/base; rows of the presentation are generators
    /// (row degrees = generator degrees).
    FPModule(Ideal base, Matrix presentation, std::optional<Matrix> embedding = std::nullopt)
        : base_(std::move(base)), pres_(std::move(presentation)), emb_(std::move(embedding)) {
        if (!same_ring(base_.ring(), pres_.ring())) throw Error("module presentation and base ring differ");
        if (emb_ && emb_->cols() != pres_.rows()) throw Error("embedding must have one column per generator");
    }
    /// Free module S^n with the given generator degrees.
    static FPModule free(const Ideal& base, std::vector<int> degrees) {
        Matrix m(base.ring(), static_cast<int>(degrees.size()), 0);
        m.set_row_degrees(degrees);
        Matrix id = Matrix::identity(base.ring(), static_cast<int>(degrees.size()), degrees);
        return FPModule(base, m, id);
    }

    const RingPtr& ring() const { return pres_.ring(); }
    const Ideal& base() const { return base_; }
    const Matrix& presentation() const { return pres_; }
    int ngens() const { return pres_.rows(); }
    const std::vector<int>& degrees() const { return pres_.row_degrees(); }
    bool has_embedding() const { return emb_.has_value(); }
    const Matrix& embedding() const {
        if (!emb_) throw Error("module has no embedding attached");
        return *emb_;
    }

    /// Relations as an R-module: [presentation | base * F].
    Matrix full_relations() const {
        if (base_.is_zero()) return pres_;
        return Matrix::concat_columns(pres_, ideal_times_free(ring(), base_.generators(), degrees()));
    }

private:
    Ideal base_;
    Matrix pres_;
    std::optional<Matrix> emb_;
};

struct ModuleMap {
    FPModule source;
    FPModule target;
    Matrix matrix;  // target.ngens x source.ngens

    /// Relations of the source land in relations of the target.
    bool is_well_defined() const {
        SubmoduleGB tgt(target.full_relations());
        Matrix img = matrix * source.full_relations();
        for (int j = 0; j < img.cols(); ++j)
            if (!tgt.contains_column(img, j)) return false;
        return true;
    }
};

namespace detail {

/// Rank over the field of the constant parts of a matrix.
inline int constant_rank(const Matrix& m) {
    std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols(), Scalar::zero(m.ring()->field())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j).constant_term();
    int rank = 0;
    for (int j = 0; j < m.cols() && rank < m.rows(); ++j) {
        int piv = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!a[i][j].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        Scalar inv = a[rank][j].inverse();
        for (int i = rank + 1; i < m.rows(); ++i) {
            if (a[i][j].is_zero()) continue;
            Scalar f = a[i][j] * inv;
            for (int k = j; k < m.cols(); ++k) a[i][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Columns of K that generate im(K) minimally modulo base * F.
inline Matrix minimal_mod(const Matrix& K, const Ideal& base) {
    if (K.cols() == 0) return K;
    if (base.is_zero()) return minimal_columns(K);
    Matrix B = ideal_times_free(K.ring(), base.generators(), K.row_degrees());
    Matrix all = Matrix::concat_columns(B, K);
    std::vector<int> keep;
    for (int j : minimal_column_indices(all))
        if (j >= B.cols()) keep.push_back(j - B.cols());
    return K.select_columns(keep);
}

/// Entries reduced modulo the base ideal.
inline Matrix reduce_mod(const Matrix& m, const Ideal& base) {
    if (base.is_zero()) return m;
    Matrix r = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.set(i, j, base.normal_form(m.at(i, j)));
    return r;
}

inline Matrix base_block(const Ideal& base, const std::vector<int>& degrees) {
    if (base.is_zero()) {
        Matrix z(base.ring(), static_cast<int>(degrees.size()), 0);
        z.set_row_degrees(degrees);
        return z;
    }
    return ideal_times_free(base.ring(), base.generators(), degrees);
}

/// The submodule im(K) of S^rows as a presented module with K as embedding.
inline FPModule image_module(const Ideal& base, Matrix K) {
    K = minimal_mod(reduce_mod(K, base), base);
    Matrix rel = kernel_mod(K, base_block(base, K.row_degrees()));
    rel = minimal_mod(reduce_mod(rel, base), base);
    return FPModule(base, rel, K);
}

}  // namespace detail

/// Minimal number of generators: generators minus the rank of the constant part of the relations.
inline int minimal_generators(const FPModule& M) {
    if (!M.presentation().is_homogeneous()) throw Error("minimal generators need a graded module");
    return M.ngens() - detail::constant_rank(M.presentation());
}

/// Minimal presentation: unit entries pruned, relations generated minimally modulo the base.
inline FPModule minimal_presentation(const FPModule& M) {
    PrunedPresentation p = prune_presentation(M.presentation());
    Matrix rel = detail::minimal_mod(detail::reduce_mod(p.relations, M.base()), M.base());
    std::optional<Matrix> emb;
    if (M.has_embedding()) emb = M.embedding().select_columns(p.kept);
    return FPModule(M.base(), rel, emb);
}

inline bool is_zero_module(const FPModule& M) {
    if (M.ngens() == 0) return true;
    SubmoduleGB gb(M.full_relations());
    for (int i = 0; i < M.ngens(); ++i) {
        std::vector<Polynomial> e(M.ngens(), Polynomial(M.ring()));
        e[i] = Polynomial::constant(M.ring(), 1);
        if (!gb.contains(e)) return false;
    }
    return true;
}

/// present_conormal: p/p^2 over R/p, on a minimal generating set of p.
inline FPModule present_conormal(const Ideal& p) {
    if (!p.is_homogeneous()) throw Error("conormal module needs a homogeneous ideal");
    if (p.is_zero()) throw Error("conormal module of the zero ideal");
    if (p.is_unit()) throw Error("conormal module needs a proper ideal");
    Ideal pm = minimalize(p);
    Matrix row = Matrix::row(p.ring(), pm.generators());
    Matrix syz = syzygies(row);
    Matrix rel = detail::minimal_mod(detail::drop_zero_columns(detail::reduce_mod(syz, pm)), pm);
    return FPModule(pm, rel);
}

/// Hom(M, N) over the common base, presented as a submodule of N^{ngens(M)}
/// modulo relations of N.
inline FPModule hom_module(const FPModule& M, const FPModule& N) {
    if (!same_ring(M.ring(), N.ring()) || !same_ideal(M.base(), N.base()))
        throw Error("hom_module: base mismatch");
    const RingPtr& R = M.ring();
    const Ideal& base = M.base();
    int n = M.ngens(), r = N.ngens(), c = M.presentation().cols();
    const Matrix& A = M.presentation();
    const Matrix& B = N.presentation();
    if (n == 0 || r == 0) return FPModule(base, Matrix(R, 0, 0));
    // y in S^{r*n}: Y(i,j) = y[i*n+j], twist deg N_i - deg M_j
    std::vector<int> ydeg(r * n), zdeg(r * c);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < n; ++j) ydeg[i * n + j] = N.degrees()[i] - M.degrees()[j];
        for (int k = 0; k < c; ++k) zdeg[i * c + k] = N.degrees()[i] - A.col_degrees()[k];
    }
    Matrix L(R, r * c, r * n);
    L.set_row_degrees(zdeg);
    L.set_col_degrees(ydeg);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < c; ++k)
            for (int j = 0; j < n; ++j) L.set(i * c + k, i * n + j, A.at(j, k));
    auto block_relations = [&](int copies, const std::vector<int>& degs, const std::vector<int>& src_deg) {
        // B in each copy: relation of N tensored with the copy index
        Matrix Q(R, r * copies, B.cols() * copies);
        Q.set_row_degrees(degs);
        std::vector<int> cd(B.cols() * copies);
        for (int q = 0; q < copies; ++q)
            for (int b = 0; b < B.cols(); ++b) {
                for (int i = 0; i < r; ++i) Q.set(i * copies + q, q * B.cols() + b, B.at(i, b));
                cd[q * B.cols() + b] = B.col_degrees()[b] - src_deg[q];
            }
        Q.set_col_degrees(cd);
        return Matrix::concat_columns(Q, detail::base_block(base, degs));
    };
    Matrix Qz = block_relations(c, zdeg, A.col_degrees());
    Matrix K = kernel_mod(L, Qz);
    Matrix Qy = block_relations(n, ydeg, M.degrees());
    Matrix Kmin = detail::minimal_mod(detail::reduce_mod(K, base), base);
    Matrix rel = kernel_mod(Kmin, Qy);
    rel = detail::minimal_mod(detail::reduce_mod(rel, base), base);
    if (r == 1 && B.cols() == 0) return FPModule(base, rel, Kmin);
    return FPModule(base, rel);
}

/// Hom(M, S) as a submodule of S^{ngens(M)}: generators are the columns of
/// kernel_mod(A^T, base), the embedding is attached.
inline FPModule dual(const FPModule& M) {
    const Ideal& base = M.base();
    std::vector<int> neg;
    for (int d : M.degrees()) neg.push_back(-d);
    if (M.ngens() == 0) return FPModule(base, Matrix(M.ring(), 0, 0), Matrix(M.ring(), 0, 0));
    Matrix At = M.presentation().transpose();
    Matrix K;
    if (At.rows() == 0) K = Matrix::identity(M.ring(), M.ngens(), neg);
    else K = kernel_mod(At, detail::base_block(base, At.row_degrees()));
    return detail::image_module(base, K);
}

struct BidualResult {
    FPModule bidual;       // embedded in S^{ngens(dual)}
    Matrix evaluation;     // images of M's generators in the same free module
    bool injective;
    bool surjective;
    bool is_reflexive() const { return injective && surjective; }
    FPModule defect;       // bidual / image of M
};

/// bidual_and_compare: M**, the evaluation map M -> M**, reflexivity, and the
/// cokernel of the evaluation map. M is assumed torsionfree over a domain.
inline BidualResult bidual_and_compare(const FPModule& M) {
    const Ideal& base = M.base();
    const RingPtr& R = M.ring();
    FPModule D = dual(M);
    const Matrix& K = D.embedding();  // n x k
    Matrix Kt = K.transpose();       // k x n: evaluation map
    FPModule B = dual(D);            // embedded in S^k
    const Matrix& K2 = B.embedding();
    int k = K.cols();
    BidualResult res{B, Kt, true, true, FPModule()};
    // surjectivity: columns of K2 in im(Kt) + base
    Matrix target_rel = Matrix::concat_columns(Kt, detail::base_block(base, Kt.row_degrees()));
    if (k > 0) {
        SubmoduleGB img(target_rel);
        for (int j = 0; j < K2.cols(); ++j)
            if (!img.contains_column(K2, j)) { res.surjective = false; break; }
        // injectivity: y with Kt y in base*S^k must lie in im(A) + base*S^n
        Matrix ker = kernel_mod(Kt, detail::base_block(base, Kt.row_degrees()));
        SubmoduleGB rel(M.full_relations());
        for (int j = 0; j < ker.cols(); ++j)
            if (!rel.contains_column(ker, j)) { res.injective = false; break; }
    } else {
        res.injective = is_zero_module(M);
    }
    if (K2.cols() > 0) {
        Matrix drel = kernel_mod(K2, target_rel);
        drel = detail::minimal_mod(detail::reduce_mod(drel, base), base);
        res.defect = FPModule(base, drel);
    } else {
        res.defect = FPModule(base, Matrix(R, 0, 0));
    }
    return res;
}

namespace detail {

/// Differential of the Koszul complex K_i -> K_{i-1} on gens; subsets as bitmasks.
inline std::vector<std::uint32_t> subsets_of_size(int n, int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
        if (__builtin_popcount(s) == k) out.push_back(s);
    return out;
}

inline Matrix koszul_map(const RingPtr& R, const std::vector<Polynomial>& f, int i) {
    int n = static_cast<int>(f.size());
    auto src = subsets_of_size(n, i), tgt = subsets_of_size(n, i - 1);
    auto deg = [&](std::uint32_t s) {
        int d = 0;
        for (int b = 0; b < n; ++b)
            if (s & (1u << b)) d += f[b].degree();
        return d;
    };
    Matrix m(R, static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    std::vector<int> rd, cd;
    for (auto s : tgt) rd.push_back(deg(s));
    for (auto s : src) cd.push_back(deg(s));
    m.set_row_degrees(rd);
    m.set_col_degrees(cd);
    for (std::size_t j = 0; j < src.size(); ++j) {
        int pos = 0;
        for (int b = 0; b < n; ++b) {
            if (!(src[j] & (1u << b))) continue;
            std::uint32_t t = src[j] & ~(1u << b);
            int row = static_cast<int>(std::find(tgt.begin(), tgt.end(), t) - tgt.begin());
            m.set(row, static_cast<int>(j), pos % 2 ? -f[b] : f[b]);
            ++pos;
        }
    }
    return m;
}

/// ker(d_out) / im(d_in) with d_out : F -> G and d_in : H -> F.
inline FPModule homology(const RingPtr& R, const Matrix* d_out, const Matrix* d_in, const std::vector<int>& fdeg) {
    Ideal zero = Ideal::zero(R);
    Matrix Z;
    if (d_out && d_out->rows() > 0) Z = syzygies(*d_out);
    else Z = Matrix::identity(R, static_cast<int>(fdeg.size()), fdeg);
    if (Z.cols() == 0) return FPModule(zero, Matrix(R, 0, 0));
    Matrix rel;
    if (d_in && d_in->cols() > 0) rel = kernel_mod(Z, *d_in);
    else {
        rel = Matrix(R, Z.cols(), 0);
        rel.set_row_degrees(Z.col_degrees());
    }
    return FPModule(zero, rel, Z);
}

}  // namespace detail

/// koszul_homology: H_i of the Koszul complex on the generators of I, as an R-module.
inline FPModule koszul_homology(const Ideal& I, int i) {
    int n = static_cast<int>(I.size());
    if (i < 0 || i > n) throw Error("Koszul homology index out of range");
    if (n > 16) throw Error("too many generators for the Koszul complex");
    const RingPtr& R = I.ring();
    std::optional<Matrix> d_out, d_in;
    if (i >= 1) d_out = detail::koszul_map(R, I.generators(), i);
    if (i + 1 <= n) d_in = detail::koszul_map(R, I.generators(), i + 1);
    std::vector<int> fdeg;
    for (auto s : detail::subsets_of_size(n, i)) {
        int d = 0;
        for (int b = 0; b < n; ++b)
            if (s & (1u << b)) d += I.generators()[b].degree();
        fdeg.push_back(d);
    }
    return detail::homology(R, d_out ? &*d_out : nullptr, d_in ? &*d_in : nullptr, fdeg);
}

/// Resolution of M as an R-module.
inline FreeResolution resolve(const FPModule& M) { return minimal_free_resolution(M.full_relations()); }

/// depth_via_ab: dim R - pd(M); the zero module has depth kInfiniteHeight.
inline int depth_via_ab(const FPModule& M) {
    FreeResolution F = resolve(M);
    if (F.f0_degrees.empty()) return kInfiniteHeight;
    return M.ring()->nvars() - F.length();
}

/// ext_against_ring: Ext^i_R(M, R) as the homology of the dualized minimal resolution.
inline FPModule ext_against_ring(const FPModule& M, int i) {
    if (i < 0) throw Error("Ext index must be non-negative");
    const RingPtr& R = M.ring();
    FreeResolution F = resolve(M);
    if (i > F.length() || F.f0_degrees.empty()) return FPModule(Ideal::zero(R), Matrix(R, 0, 0));
    std::vector<int> fdeg;
    for (int d : F.twists(i)) fdeg.push_back(-d);
    std::optional<Matrix> out, in;
    if (i < F.length()) out = F.maps[i].transpose();      // F_i* -> F_{i+1}*
    if (i >= 1) in = F.maps[i - 1].transpose();           // F_{i-1}* -> F_i*
    return detail::homology(R, out ? &*out : nullptr, in ? &*in : nullptr, fdeg);
}

/// Graded dimensions of a finite-length module: degree -> dim_k M_degree.
/// Throws when the module does not have finite length.
inline std::map<int, long> hilbert_function_finite(const FPModule& M) {
    std::map<int, long> hf;
    if (M.ngens() == 0) return hf;
    const RingPtr& R = M.ring();
    int n = R->nvars();
    Matrix rel = M.full_relations();
    SubmoduleGB gb(rel);
    auto leads = gb.leading_terms();
    for (int comp = 0; comp < M.ngens(); ++comp) {
        std::vector<Monomial> L;
        for (const auto& [m, c] : leads)
            if (c == comp) L.push_back(m);
        std::vector<int> bound(n, -1);
        for (const auto& m : L)
            if (m.support() && (m.support() & (m.support() - 1)) == 0) {
                int v = __builtin_ctz(m.support());
                if (bound[v] < 0 || m[v] < bound[v]) bound[v] = m[v];
            }
        bool unit = false;
        for (const auto& m : L)
            if (m.is_one()) unit = true;
        if (unit) continue;
        for (int v = 0; v < n; ++v)
            if (bound[v] < 0) throw Error("module does not have finite length");
        std::vector<int> e(n, 0);
        std::function<void(int)> walk = [&](int v) {
            if (v == n) {
                Monomial m = R->monomial(e);
                for (const auto& l : L)
                    if (l.divides(m)) return;
                hf[m.degree() + M.degrees()[comp]] += 1;
                return;
            }
            for (int k = 0; k < bound[v]; ++k) {
                e[v] = k;
                walk(v + 1);
            }
            e[v] = 0;
        };
        walk(0);
    }
    for (auto it = hf.begin(); it != hf.end();)
        it = it->second == 0 ? hf.erase(it) : std::next(it);
    return hf;
}

/// determinant_ideal: maximal minors of an embedding matrix with at least as many columns as rows.
inline Ideal determinant_ideal(const Matrix& embedding) {
    int r = embedding.rows();
    if (embedding.cols() < r) throw Error("determinant ideal: embedding has fewer columns than its rank");
    if (r == 0) return Ideal::unit(embedding.ring());
    return fitting_ideal(embedding, r);
}

inline Ideal determinant_ideal(const FPModule& M) { return determinant_ideal(M.embedding()); }

/// Divisorial hull (dS : (dS : D)) of an ideal D of S = R/base, as an R-ideal containing base.
inline Ideal divisorial_hull(const Ideal& D, const Ideal& base) {
    std::optional<Polynomial> d;
    for (const auto& g : D.generators())
        if (!base.contains(g)) { d = g; break; }
    if (!d) throw Error("divisorial hull of the zero ideal");
    Ideal dS = ideal_sum(Ideal(D.ring(), {*d}), base);
    Ideal DS = ideal_sum(D, base);
    Ideal inner = ideal_quotient(dS, DS);
    return ideal_quotient(dS, ideal_sum(inner, base));
}

inline bool is_divisorial(const Ideal& D, const Ideal& base) {
    return ideal_sum(D, base).contains(divisorial_hull(D, base));
}

/// Embedding of a torsionfree module of rank r into S^r, built from r dual
/// elements whose r x r minors do not all vanish modulo the base.
inline std::optional<Matrix> rank_embedding(const FPModule& M, int r) {
    FPModule D = dual(M);
    const Matrix& K = D.embedding();  // n x k
    Matrix Kt = K.transpose();
    int k = Kt.rows();
    std::vector<int> pick;
    std::optional<Matrix> found;
    std::function<void(int)> search = [&](int start) {
        if (found) return;
        if (static_cast<int>(pick.size()) == r) {
            std::vector<int> cols(Kt.cols());
            std::iota(cols.begin(), cols.end(), 0);
            Matrix sub = Kt.submatrix(pick, cols);
            for (const auto& m : detail::minors(sub, r))
                if (!M.base().contains(m)) { found = sub; return; }
            return;
        }
        for (int i = start; i < k && !found; ++i) {
            pick.push_back(i);
            search(i + 1);
            pick.pop_back();
        }
    };
    search(0);
    return found;
}

struct MFullResult {
    std::optional<Polynomial> witness;
    int tried = 0;
};

/// Candidate linear forms: the variables, then seeded pseudo-random forms.
inline std::vector<Polynomial> default_mfull_candidates(const RingPtr& R, unsigned seed, int attempts = 32) {
    std::vector<Polynomial> c;
    for (int i = 0; i < R->nvars() && static_cast<int>(c.size()) < attempts; ++i) c.push_back(Polynomial::variable(R, i));
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    while (static_cast<int>(c.size()) < attempts) {
        Polynomial f(R);
        for (int i = 0; i < R->nvars(); ++i)
            if (R->weights()[i] == 1) f += Polynomial::variable(R, i).scaled(Scalar(R->field(), coeff(rng)));
        if (!f.is_zero()) c.push_back(f);
    }
    return c;
}

/// m_full_test: first candidate x with (mM :_{S^e} x) = M, M given by its embedding.
inline MFullResult m_full_test(const FPModule& M, const std::vector<Polynomial>& candidates) {
    const Matrix& E = M.embedding();
    const RingPtr& R = M.ring();
    const Ideal& base = M.base();
    int e = E.rows();
    Matrix mE(R, e, 0);
    mE.set_row_degrees(E.row_degrees());
    for (int v = 0; v < R->nvars(); ++v) {
        Polynomial x = Polynomial::variable(R, v);
        Matrix s = E;
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < E.cols(); ++j) s.set(i, j, x * E.at(i, j));
        std::vector<int> cd;
        for (int d : E.col_degrees()) cd.push_back(d + R->weights()[v]);
        s.set_col_degrees(cd);
        mE = Matrix::concat_columns(mE, s);
    }
    Matrix Q = Matrix::concat_columns(mE, detail::base_block(base, E.row_degrees()));
    SubmoduleGB target(Matrix::concat_columns(E, detail::base_block(base, E.row_degrees())));
    MFullResult res;
    for (const auto& x : candidates) {
        ++res.tried;
        Matrix X(R, e, e);
        X.set_row_degrees(E.row_degrees());
        std::vector<int> cd;
        for (int d : E.row_degrees()) cd.push_back(d + x.degree());
        X.set_col_degrees(cd);
        for (int i = 0; i < e; ++i) X.set(i, i, x);
        Matrix K = kernel_mod(X, Q);
        bool ok = true;
        for (int j = 0; j < K.cols() && ok; ++j) ok = target.contains_column(K, j);
        if (ok) {
            res.witness = x;
            return res;
        }
    }
    return res;
}

}  // namespace conormal
