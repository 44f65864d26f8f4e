#pragma once

#include "conormal/polynomial.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace conormal {

/// Graded matrix of a map F_src -> F_tgt between free modules; column j is the
/// image of the j-th source basis element. row_degrees are the twists of the
/// target basis, col_degrees those of the source basis. A homogeneous matrix
/// has deg(a_ij) = col_degree(j) - row_degree(i) for every nonzero entry.
class Matrix {
public:
    Matrix() = default;
    Matrix(RingPtr ring, int rows, int cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * cols, Polynomial(ring_)), row_deg_(rows, 0), col_deg_(cols, 0) {}

    static Matrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows[0].size()) : 0;
        Matrix m(ring, r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c) throw Error("ragged matrix rows");
            for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
        }
        m.infer_col_degrees();
        return m;
    }
    static Matrix from_columns(RingPtr ring, int rows, const std::vector<std::vector<Polynomial>>& cols,
                               std::vector<int> row_degrees = {}) {
        Matrix m(ring, rows, static_cast<int>(cols.size()));
        if (!row_degrees.empty()) m.row_deg_ = std::move(row_degrees);
        for (int j = 0; j < m.cols_; ++j)
            for (int i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
        m.infer_col_degrees();
        return m;
    }
    /// Single row [f_1 ... f_n] with target degree 0.
    static Matrix row(RingPtr ring, const std::vector<Polynomial>& entries) {
        return from_rows(std::move(ring), {entries});
    }
    static Matrix identity(RingPtr ring, int n, std::vector<int> degrees = {}) {
        Matrix m(ring, n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(ring, 1));
        if (!degrees.empty()) {
            m.row_deg_ = degrees;
            m.col_deg_ = std::move(degrees);
        }
        return m;
    }

    const RingPtr& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Polynomial& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, Polynomial p) { entries_[static_cast<std::size_t>(i) * cols_ + j] = std::move(p); }

    const std::vector<int>& row_degrees() const { return row_deg_; }
    const std::vector<int>& col_degrees() const { return col_deg_; }
    void set_row_degrees(std::vector<int> d) {
        if (static_cast<int>(d.size()) != rows_) throw Error("row degree vector has wrong length");
        row_deg_ = std::move(d);
    }
    void set_col_degrees(std::vector<int> d) {
        if (static_cast<int>(d.size()) != cols_) throw Error("column degree vector has wrong length");
        col_deg_ = std::move(d);
    }

    /// Sets each column degree from its leading nonzero entry (zero columns keep their degree).
    void infer_col_degrees() {
        for (int j = 0; j < cols_; ++j)
            for (int i = 0; i < rows_; ++i)
                if (!at(i, j).is_zero()) {
                    col_deg_[j] = at(i, j).leading().mono.degree() + row_deg_[i];
                    break;
                }
    }

    std::vector<Polynomial> column(int j) const {
        std::vector<Polynomial> c;
        c.reserve(rows_);
        for (int i = 0; i < rows_; ++i) c.push_back(at(i, j));
        return c;
    }
    bool column_is_zero(int j) const {
        for (int i = 0; i < rows_; ++i)
            if (!at(i, j).is_zero()) return false;
        return true;
    }
    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    bool is_homogeneous() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const Polynomial& e = at(i, j);
                if (e.is_zero()) continue;
                if (!e.is_homogeneous() || e.leading().mono.degree() != col_deg_[j] - row_deg_[i]) return false;
            }
        return true;
    }

    /// Dual map: rows and columns swap, degrees negate.
    Matrix transpose() const {
        Matrix t(ring_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
        for (int j = 0; j < cols_; ++j) t.row_deg_[j] = -col_deg_[j];
        for (int i = 0; i < rows_; ++i) t.col_deg_[i] = -row_deg_[i];
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch in product");
        Matrix p(a.ring_, a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) {
                Polynomial s(a.ring_);
                for (int k = 0; k < a.cols_; ++k)
                    if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) s += a.at(i, k) * b.at(k, j);
                p.set(i, j, std::move(s));
            }
        p.row_deg_ = a.row_deg_;
        p.col_deg_ = b.col_deg_;
        return p;
    }

    /// [A | B] with equal row counts; row degrees taken from A.
    static Matrix concat_columns(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw Error("row count mismatch in column concatenation");
        Matrix m(a.ring_, a.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) m.set(i, j, a.at(i, j));
            for (int j = 0; j < b.cols_; ++j) m.set(i, a.cols_ + j, b.at(i, j));
        }
        m.row_deg_ = a.row_deg_;
        for (int j = 0; j < a.cols_; ++j) m.col_deg_[j] = a.col_deg_[j];
        for (int j = 0; j < b.cols_; ++j) m.col_deg_[a.cols_ + j] = b.col_deg_[j];
        return m;
    }

    Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        Matrix m(ring_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            m.row_deg_[i] = row_deg_[rows[i]];
            for (std::size_t j = 0; j < cols.size(); ++j) m.set(static_cast<int>(i), static_cast<int>(j), at(rows[i], cols[j]));
        }
        for (std::size_t j = 0; j < cols.size(); ++j) m.col_deg_[j] = col_deg_[cols[j]];
        return m;
    }
    Matrix select_columns(const std::vector<int>& cols) const {
        std::vector<int> all(rows_);
        std::iota(all.begin(), all.end(), 0);
        return submatrix(all, cols);
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += "[";
            for (int j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).to_string();
            s += "]\n";
        }
        return s;
    }

private:
    RingPtr ring_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Polynomial> entries_;
    std::vector<int> row_deg_;
    std::vector<int> col_deg_;
};

/// Column vectors q*e_i for every generator q and basis index i: presents the
/// submodule q*F of a free module F with the given degrees.
inline Matrix ideal_times_free(const RingPtr& ring, const std::vector<Polynomial>& gens,
                               const std::vector<int>& degrees) {
    int n = static_cast<int>(degrees.size());
    Matrix m(ring, n, n * static_cast<int>(gens.size()));
    m.set_row_degrees(degrees);
    int col = 0;
    for (int i = 0; i < n; ++i)
        for (const auto& g : gens) m.set(i, col++, g);
    m.infer_col_degrees();
    return m;
}

}  // namespace conormal
