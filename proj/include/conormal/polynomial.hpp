#pragma once

#include "conormal/ring.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace conormal {

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Sparse polynomial: terms strictly descending in the ring order, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    /// Builds a canonical polynomial from arbitrary terms (sorted, combined, zeros dropped).
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
        Polynomial p(std::move(ring));
        const PolyRing& R = *p.ring_;
        std::sort(terms.begin(), terms.end(),
                  [&](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) p.terms_.back().coeff += t.coeff;
            else {
                if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
                p.terms_.push_back(std::move(t));
            }
        }
        if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        return p;
    }

    /// Terms already strictly sorted with nonzero coefficients.
    static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(terms);
        return p;
    }

    static Polynomial constant(RingPtr ring, const Scalar& c) {
        Polynomial p(std::move(ring));
        if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
        return p;
    }
    static Polynomial constant(RingPtr ring, long c) {
        Field f = ring->field();
        return constant(std::move(ring), Scalar(f, c));
    }
    static Polynomial variable(RingPtr ring, int i) {
        Polynomial p(ring);
        p.terms_.push_back({ring->var(i), Scalar::one(ring->field())});
        return p;
    }
    static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
        Polynomial p(std::move(ring));
        if (!c.is_zero()) p.terms_.push_back({m, c});
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    const Term& leading() const { return terms_.front(); }

    /// Maximal weighted degree; -1 for zero.
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }
    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }
    Scalar constant_term() const {
        if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
        return Scalar::zero(ring_->field());
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.combine(b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.combine(b, true); }
    Polynomial& operator+=(const Polynomial& b) { return *this = combine(b, false); }
    Polynomial& operator-=(const Polynomial& b) { return *this = combine(b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
        return from_terms(a.ring_, std::move(prod));
    }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    Polynomial scaled(const Scalar& c) const {
        if (c.is_zero()) return Polynomial(ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
        return r;
    }
    /// Multiplication by a monomial keeps the term order.
    Polynomial times_monomial(const Monomial& m, const Scalar& c) const {
        if (c.is_zero()) return Polynomial(ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
        return r;
    }

    Polynomial pow(int e) const {
        if (e < 0) throw Error("negative exponent");
        Polynomial result = constant(ring_, 1), base = *this;
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// Leading coefficient normalized to 1; zero stays zero.
    Polynomial monic() const {
        if (is_zero() || terms_.front().coeff.is_one()) return *this;
        return scaled(terms_.front().coeff.inverse());
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
        return true;
    }

    /// Validator for the representation invariants (used by tests).
    bool is_canonical() const {
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].coeff.is_zero()) return false;
            if (!(terms_[i].coeff.field() == ring_->field())) return false;
            if (i + 1 < terms_.size() && ring_->compare(terms_[i].mono, terms_[i + 1].mono) <= 0) return false;
        }
        return true;
    }

    std::string to_string() const;

private:
    void check_ring(const Polynomial& b) const {
        if (!same_ring(ring_, b.ring_)) throw Error("ring mismatch in polynomial arithmetic");
    }

    Polynomial combine(const Polynomial& b, bool subtract) const {
        check_ring(b);
        const PolyRing& R = *ring_;
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < b.terms_.size()) {
            int c = i == terms_.size() ? -1 : j == b.terms_.size() ? 1 : R.compare(terms_[i].mono, b.terms_[j].mono);
            if (c > 0) r.terms_.push_back(terms_[i++]);
            else if (c < 0) {
                r.terms_.push_back({b.terms_[j].mono, subtract ? -b.terms_[j].coeff : b.terms_[j].coeff});
                ++j;
            } else {
                Scalar s = subtract ? terms_[i].coeff - b.terms_[j].coeff : terms_[i].coeff + b.terms_[j].coeff;
                if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Scalar& c, const Polynomial& p) { return p.scaled(c); }

/// Exact division; throws when b does not divide a.
inline Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    if (!same_ring(a.ring(), b.ring())) throw Error("ring mismatch in polynomial arithmetic");
    const RingPtr& R = a.ring();
    Polynomial rem = a;
    std::vector<Term> quot;
    const Term& lb = b.leading();
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        if (!lb.mono.divides(lr.mono)) throw Error("polynomial division is not exact");
        Monomial m = lb.mono.quotient_of(lr.mono);
        Scalar c = lr.coeff / lb.coeff;
        quot.push_back({m, c});
        rem -= b.times_monomial(m, c);
    }
    return Polynomial::from_sorted(R, std::move(quot));
}

enum class ArithOp { add, mul, scalar_mul, exact_divide };

/// poly_arith dispatcher over the four elementary operations.
inline Polynomial poly_arith(ArithOp op, const Polynomial& a, const Polynomial& b) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::mul: return a * b;
    case ArithOp::scalar_mul:
        if (!b.is_constant()) throw Error("scalar_mul expects a scalar operand");
        if (!same_ring(a.ring(), b.ring())) throw Error("ring mismatch in polynomial arithmetic");
        return a.scaled(b.constant_term());
    case ArithOp::exact_divide: return exact_divide(a, b);
    }
    return a;
}

/// Substitution: replaces each variable i by images[i] (polynomials in a common target ring).
inline Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, const RingPtr& target) {
    if (static_cast<int>(images.size()) != f.ring()->nvars()) throw Error("substitution needs one image per variable");
    Polynomial result(target);
    int n = f.ring()->nvars();
    for (const auto& t : f.terms()) {
        Polynomial term = Polynomial::constant(target, t.coeff);
        for (int i = 0; i < n; ++i)
            if (t.mono[i]) term *= images[i].pow(t.mono[i]);
        result += term;
    }
    return result;
}

/// Maps f into `target` by a variable index map (source var i -> target var map[i]).
/// Coefficients must live in the same field.
inline Polynomial remap(const Polynomial& f, const RingPtr& target, const std::vector<int>& var_map) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    int n = f.ring()->nvars();
    std::vector<int> e(target->nvars());
    for (const auto& t : f.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < n; ++i) {
            if (!t.mono[i]) continue;
            if (var_map[i] < 0) throw Error("variable " + f.ring()->name(i) + " has no image in target ring");
            e[var_map[i]] += t.mono[i];
        }
        terms.push_back({target->monomial(e), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

/// Index map by variable name; missing names map to -1.
inline std::vector<int> name_map(const PolyRing& from, const PolyRing& to) {
    std::vector<int> m(from.nvars());
    for (int i = 0; i < from.nvars(); ++i) m[i] = to.index_of(from.name(i));
    return m;
}

inline Polynomial remap_by_name(const Polynomial& f, const RingPtr& target) {
    if (same_ring(f.ring(), target)) return f;
    return remap(f, target, name_map(*f.ring(), *target));
}

inline std::string format_monomial(const PolyRing& R, const Monomial& m) {
    std::string s;
    for (int i = 0; i < R.nvars(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += "*";
        s += R.name(i);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

inline std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        bool neg = t.coeff.is_negative();
        Scalar mag = neg ? -t.coeff : t.coeff;
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        std::string mono = format_monomial(*ring_, t.mono);
        if (mono.empty()) out += mag.to_string();
        else if (mag.is_one()) out += mono;
        else out += mag.to_string() + "*" + mono;
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace conormal
