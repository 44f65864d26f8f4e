#pragma once

#include "conormal/scalar.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace conormal {

inline constexpr int kMaxVars = 32;

/// Exponent vector with a cached weighted degree and a support bitmask.
/// The arity is carried by the owning ring; unused slots stay zero.
class Monomial {
public:
    Monomial() = default;

    Monomial(std::span<const int> exponents, std::span<const int> weights) {
        if (exponents.size() > static_cast<std::size_t>(kMaxVars))
            throw Error("too many variables for a monomial (limit " + std::to_string(kMaxVars) + ")");
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] < 0) throw Error("negative exponent");
            if (exponents[i] > 0xFFFF) throw Error("exponent overflow");
            exps_[i] = static_cast<std::uint16_t>(exponents[i]);
            degree_ += exponents[i] * weights[i];
            if (exponents[i]) support_ |= (1u << i);
        }
    }

    static Monomial variable(int index, int weight) {
        Monomial m;
        m.exps_[index] = 1;
        m.degree_ = weight;
        m.support_ = 1u << index;
        return m;
    }

    int operator[](int i) const { return exps_[i]; }
    int degree() const { return degree_; }
    std::uint32_t support() const { return support_; }
    bool is_one() const { return support_ == 0; }

    int total_exponent(int nvars) const {
        int s = 0;
        for (int i = 0; i < nvars; ++i) s += exps_[i];
        return s;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
            if (e > 0xFFFF) throw Error("exponent overflow");
            r.exps_[i] = static_cast<std::uint16_t>(e);
        }
        r.degree_ = a.degree_ + b.degree_;
        r.support_ = a.support_ | b.support_;
        return r;
    }

    /// True when this divides other.
    bool divides(const Monomial& other) const {
        if ((support_ & ~other.support_) != 0) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    /// other / this; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& other) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            r.exps_[i] = static_cast<std::uint16_t>(other.exps_[i] - exps_[i]);
            if (r.exps_[i]) r.support_ |= (1u << i);
        }
        r.degree_ = other.degree_ - degree_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights) {
        Monomial r;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
            r.degree_ += r.exps_[i] * weights[i];
        }
        r.support_ = a.support_ | b.support_;
        return r;
    }

    bool coprime_with(const Monomial& o) const { return (support_ & o.support_) == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.support_ == b.support_ && a.exps_ == b.exps_;
    }

    std::vector<int> exponents(int nvars) const {
        return std::vector<int>(exps_.begin(), exps_.begin() + nvars);
    }

private:
    std::array<std::uint16_t, kMaxVars> exps_{};
    int degree_ = 0;
    std::uint32_t support_ = 0;
};

enum class OrderKind { grevlex, lex, block_elimination, weighted_grevlex };

/// A monomial order on a fixed number of variables.
///
/// grevlex compares the ring-weighted degree first, then reverse
/// lexicographically. block_elimination(split) compares the first `split`
/// variables by grevlex and breaks ties by grevlex on the remaining block,
/// so it eliminates the first block. weighted_grevlex uses its own weight
/// vector for the first comparison.
class MonomialOrder {
public:
    MonomialOrder() = default;

    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
    static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
    static MonomialOrder block_elimination(int split) {
        MonomialOrder o(OrderKind::block_elimination);
        o.split_ = split;
        return o;
    }
    static MonomialOrder weighted_grevlex(std::vector<int> weights) {
        MonomialOrder o(OrderKind::weighted_grevlex);
        o.order_weights_ = std::move(weights);
        return o;
    }

    OrderKind kind() const { return kind_; }
    int split() const { return split_; }
    const std::vector<int>& order_weights() const { return order_weights_; }

    /// Binds the order to a ring arity and grading; called by PolyRing.
    void bind(int nvars, std::vector<int> grading) {
        nvars_ = nvars;
        grading_ = std::move(grading);
        if (kind_ == OrderKind::block_elimination && (split_ < 0 || split_ > nvars))
            throw Error("block split point out of range");
        if (kind_ == OrderKind::weighted_grevlex) {
            if (static_cast<int>(order_weights_.size()) != nvars) throw Error("order weight vector has wrong length");
            for (int w : order_weights_)
                if (w <= 0) throw Error("order weights must be positive");
        }
    }

    int nvars() const { return nvars_; }

    /// Three-way comparison: negative, zero, positive.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
        case OrderKind::grevlex:
            if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
            return revlex(a, b, 0, nvars_);
        case OrderKind::lex:
            for (int i = 0; i < nvars_; ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        case OrderKind::weighted_grevlex: {
            long wa = 0, wb = 0;
            for (int i = 0; i < nvars_; ++i) {
                wa += long{order_weights_[i]} * a[i];
                wb += long{order_weights_[i]} * b[i];
            }
            if (wa != wb) return wa < wb ? -1 : 1;
            return revlex(a, b, 0, nvars_);
        }
        case OrderKind::block_elimination: {
            int c = block_grevlex(a, b, 0, split_);
            if (c != 0) return c;
            return block_grevlex(a, b, split_, nvars_);
        }
        }
        return 0;
    }

    std::string name() const {
        switch (kind_) {
        case OrderKind::grevlex: return "grevlex";
        case OrderKind::lex: return "lex";
        case OrderKind::block_elimination: return "elim(" + std::to_string(split_) + ")";
        case OrderKind::weighted_grevlex: return "wgrevlex";
        }
        return "?";
    }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && split_ == o.split_ && order_weights_ == o.order_weights_ && nvars_ == o.nvars_ &&
               grading_ == o.grading_;
    }

private:
    explicit MonomialOrder(OrderKind k) : kind_(k) {}

    static int revlex(const Monomial& a, const Monomial& b, int lo, int hi) {
        for (int i = hi - 1; i >= lo; --i)
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        return 0;
    }
    int block_grevlex(const Monomial& a, const Monomial& b, int lo, int hi) const {
        long da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += long{grading_[i]} * a[i];
            db += long{grading_[i]} * b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        return revlex(a, b, lo, hi);
    }

    OrderKind kind_ = OrderKind::grevlex;
    int split_ = 0;
    std::vector<int> order_weights_;
    int nvars_ = 0;
    std::vector<int> grading_;
};

}  // namespace conormal
