#pragma once

#include "conormal/groebner.hpp"

#include <optional>

namespace conormal {

/// Presentation with unit entries removed.
struct PrunedPresentation {
    Matrix relations;
    std::vector<int> kept;  // surviving generator indices of the input
};

namespace detail {

inline std::optional<std::pair<int, int>> find_unit(const Matrix& a) {
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i)
            if (!a.at(i, j).is_zero() && a.at(i, j).is_constant()) return std::make_pair(i, j);
    return std::nullopt;
}

/// Schur complement of the unit entry at (r, c): row r and column c disappear.
inline Matrix schur_complement(const Matrix& a, int r, int c) {
    Scalar inv = a.at(r, c).constant_term().inverse();
    std::vector<int> rows, cols;
    for (int i = 0; i < a.rows(); ++i)
        if (i != r) rows.push_back(i);
    for (int j = 0; j < a.cols(); ++j)
        if (j != c) cols.push_back(j);
    Matrix s = a.submatrix(rows, cols);
    for (std::size_t ii = 0; ii < rows.size(); ++ii) {
        const Polynomial& aic = a.at(rows[ii], c);
        if (aic.is_zero()) continue;
        Polynomial f = aic.scaled(inv);
        for (std::size_t jj = 0; jj < cols.size(); ++jj) {
            const Polynomial& arj = a.at(r, cols[jj]);
            if (arj.is_zero()) continue;
            s.set(static_cast<int>(ii), static_cast<int>(jj), s.at(static_cast<int>(ii), static_cast<int>(jj)) - f * arj);
        }
    }
    return s;
}

inline Matrix drop_row(const Matrix& a, int r) {
    std::vector<int> rows, cols(a.cols());
    std::iota(cols.begin(), cols.end(), 0);
    for (int i = 0; i < a.rows(); ++i)
        if (i != r) rows.push_back(i);
    return a.submatrix(rows, cols);
}

inline Matrix drop_column(const Matrix& a, int c) {
    std::vector<int> cols;
    for (int j = 0; j < a.cols(); ++j)
        if (j != c) cols.push_back(j);
    return a.select_columns(cols);
}

inline Matrix drop_zero_columns(const Matrix& a) {
    std::vector<int> cols;
    for (int j = 0; j < a.cols(); ++j)
        if (!a.column_is_zero(j)) cols.push_back(j);
    return a.select_columns(cols);
}

}  // namespace detail

/// Removes unit entries of a presentation matrix one at a time; each removal
/// drops one generator and one relation.
inline PrunedPresentation prune_presentation(const Matrix& a) {
    PrunedPresentation p{a, {}};
    p.kept.resize(a.rows());
    std::iota(p.kept.begin(), p.kept.end(), 0);
    while (auto u = detail::find_unit(p.relations)) {
        p.relations = detail::schur_complement(p.relations, u->first, u->second);
        p.kept.erase(p.kept.begin() + u->first);
    }
    p.relations = detail::drop_zero_columns(p.relations);
    return p;
}

/// Graded free resolution: maps[i] is the differential F_{i+1} -> F_i.
struct FreeResolution {
    RingPtr ring;
    std::vector<int> f0_degrees;
    std::vector<Matrix> maps;

    int length() const { return static_cast<int>(maps.size()); }
    /// Ranks of F_0, F_1, ...
    std::vector<int> betti() const {
        std::vector<int> b{static_cast<int>(f0_degrees.size())};
        for (const auto& m : maps) b.push_back(m.cols());
        return b;
    }
    /// Generator degrees of F_i.
    std::vector<int> twists(int i) const {
        if (i == 0) return f0_degrees;
        return maps[i - 1].col_degrees();
    }
    bool is_complex() const {
        for (std::size_t i = 0; i + 1 < maps.size(); ++i)
            if (!(maps[i] * maps[i + 1]).is_zero()) return false;
        return true;
    }
    bool is_minimal() const {
        for (const auto& m : maps)
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j)
                    if (!m.at(i, j).is_zero() && m.at(i, j).is_constant()) return false;
        return true;
    }
};

/// Minimal graded free resolution of coker(presentation). Each syzygy module
/// is generated minimally; unit entries that survive are pruned by Schur
/// complements, deleting the matching row of the next map and column of the
/// previous one.
inline FreeResolution minimal_free_resolution(const Matrix& presentation) {
    if (!presentation.is_homogeneous()) throw Error("minimal free resolution needs a homogeneous presentation");
    FreeResolution res;
    res.ring = presentation.ring();
    PrunedPresentation p = prune_presentation(presentation);
    Matrix d = p.relations;
    res.f0_degrees = d.row_degrees();
    if (d.rows() == 0) return res;
    if (d.cols() > 0) d = minimal_columns(d);
    int n = res.ring->nvars();
    while (d.cols() > 0) {
        res.maps.push_back(d);
        if (static_cast<int>(res.maps.size()) > n + 1) throw Error("resolution longer than the number of variables");
        d = syzygies(d);
    }
    // pruning pass over the finished complex
    for (std::size_t i = 0; i < res.maps.size(); ++i) {
        while (auto u = detail::find_unit(res.maps[i])) {
            auto [r, c] = *u;
            res.maps[i] = detail::schur_complement(res.maps[i], r, c);
            if (i + 1 < res.maps.size()) res.maps[i + 1] = detail::drop_row(res.maps[i + 1], c);
            if (i > 0) res.maps[i - 1] = detail::drop_column(res.maps[i - 1], r);
            else res.f0_degrees.erase(res.f0_degrees.begin() + r);
        }
    }
    while (!res.maps.empty() && res.maps.back().cols() == 0) res.maps.pop_back();
    return res;
}

}  // namespace conormal
