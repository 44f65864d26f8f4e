#pragma once

#include "conormal/criteria.hpp"

#include <random>

namespace conormal::testing {

inline RingPtr qq_ring(std::vector<std::string> vars) {
    return ring_create(std::move(vars), Field::rationals(), MonomialOrder::grevlex());
}

inline Polynomial P(const RingPtr& R, const std::string& s) { return poly_parse(R, s); }

inline Ideal I(const RingPtr& R, const std::vector<std::string>& gens) { return Ideal(R, parse_list(R, gens)); }

inline Matrix M(const RingPtr& R, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Polynomial>> r;
    for (const auto& row : rows) r.push_back(parse_list(R, row));
    return Matrix::from_rows(R, r);
}

/// Uniform random homogeneous form of degree d with small integer coefficients.
inline Polynomial random_form(const RingPtr& R, int d, std::mt19937& rng, int max_terms = 4, int bound = 3) {
    std::uniform_int_distribution<int> var(0, R->nvars() - 1), coef(-bound, bound);
    Polynomial f(R);
    for (int k = 0; k < max_terms; ++k) {
        std::vector<int> e(R->nvars(), 0);
        for (int i = 0; i < d; ++i) ++e[var(rng)];
        int c = coef(rng);
        if (c == 0) continue;
        f += Polynomial::monomial(R, R->monomial(e), Scalar(R->field(), c));
    }
    return f;
}

/// Random monomial of total degree in [1, max_deg].
inline Polynomial random_monomial(const RingPtr& R, int max_deg, std::mt19937& rng) {
    std::uniform_int_distribution<int> var(0, R->nvars() - 1), deg(1, max_deg);
    std::vector<int> e(R->nvars(), 0);
    int d = deg(rng);
    for (int i = 0; i < d; ++i) ++e[var(rng)];
    return Polynomial::monomial(R, R->monomial(e), Scalar::one(R->field()));
}

/// Krull dimension of R/I for a monomial ideal by enumerating all variable
/// subsets: the largest subset containing no generator's support.
inline int brute_force_monomial_dim(const std::vector<Polynomial>& gens, int nvars) {
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << nvars); ++s) {
        bool ok = true;
        for (const auto& g : gens) {
            std::uint32_t supp = 0;
            const Monomial& m = g.leading().mono;
            for (int i = 0; i < nvars; ++i)
                if (m[i] > 0) supp |= 1u << i;
            if ((supp & ~s) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
}

/// Depth of R/I for homogeneous I via a maximal regular sequence of
/// pseudo-random linear forms: l is regular on R/J iff J : l = J.
inline int depth_by_regular_sequence(const Ideal& I, std::mt19937& rng) {
    const RingPtr& R = I.ring();
    std::uniform_int_distribution<int> coef(1, 97);
    std::bernoulli_distribution sign(0.5);
    Ideal J = I;
    int depth = 0;
    for (int k = 0; k < R->nvars(); ++k) {
        if (J.is_unit()) return kInfiniteHeight;
        bool regular = false;
        for (int attempt = 0; attempt < 3 && !regular; ++attempt) {
            Polynomial l(R);
            for (int i = 0; i < R->nvars(); ++i)
                l += Polynomial::variable(R, i).scaled(Scalar(R->field(), sign(rng) ? coef(rng) : -coef(rng)));
            regular = J.is_zero() || same_ideal(ideal_quotient(J, Ideal(R, {l})), J);
            if (regular) {
                std::vector<Polynomial> g = J.generators();
                g.push_back(l);
                J = Ideal(R, g);
            }
        }
        if (!regular) break;
        ++depth;
    }
    return depth;
}

/// ex1: p ordered so that x1, x2, x3 match ut - v^2, uw - tv, vw - t^2.
inline Ideal ex1_ideal(const RingPtr& R) { return I(R, {"u*t - v^2", "u*w - t*v", "v*w - t^2"}); }
inline RingPtr ex1_ring() { return qq_ring({"u", "v", "t", "w"}); }

inline RingPtr ex2_ring() { return qq_ring({"x", "y", "z", "u", "v"}); }
inline Matrix ex2_matrix(const RingPtr& R) {
    return M(R, {{"x", "v - u", "z"}, {"y", "x", "v"}, {"z", "u", "x"}, {"u", "z", "y"}});
}
/// Signed maximal minors of ex2_matrix.
inline Ideal ex2_ideal(const RingPtr& R) {
    Matrix A = ex2_matrix(R);
    std::vector<Polynomial> g;
    for (int i = 0; i < 4; ++i) {
        std::vector<int> rows;
        for (int k = 0; k < 4; ++k)
            if (k != i) rows.push_back(k);
        Polynomial d = detail::minors(A.submatrix(rows, {0, 1, 2}), 3).at(0);
        g.push_back(i % 2 ? -d : d);
    }
    return Ideal(R, g);
}

}  // namespace conormal::testing
