#pragma once

// Exact scalars: arbitrary-precision rationals (the default field) and
// elements of a prime field F_p with p < 2^31.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conormal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a configurable step limit stops a computation.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

/// Field descriptor: modulus 0 means the rationals.
struct Field {
    std::uint32_t modulus = 0;

    static Field rationals() { return {}; }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return modulus == 0; }
    bool operator==(const Field&) const = default;
    std::string name() const { return is_rational() ? "QQ" : "GF(" + std::to_string(modulus) + ")"; }
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) throw Error("field modulus must be below 2^31: " + std::to_string(p));
    if (!is_prime_u64(p)) throw Error("field modulus is not prime: " + std::to_string(p));
    Field f;
    f.modulus = static_cast<std::uint32_t>(p);
    return f;
}

class Scalar {
public:
    Scalar() = default;
    explicit Scalar(Field f) : modulus_(f.modulus) {}

    Scalar(Field f, long value) : modulus_(f.modulus) {
        if (modulus_ == 0) q_ = value;
        else residue_ = reduce_signed(value);
    }

    /// Rational literal converted into the field; fails for F_p when p divides the denominator.
    Scalar(Field f, const mpq_class& value) : modulus_(f.modulus) {
        if (modulus_ == 0) {
            q_ = value;
            q_.canonicalize();
            return;
        }
        std::uint64_t num = reduce_mpz(value.get_num());
        std::uint64_t den = reduce_mpz(value.get_den());
        if (den == 0) throw Error("scalar not in field " + field().name() + ": denominator divisible by modulus");
        residue_ = static_cast<std::uint32_t>(num * inverse_mod(den) % modulus_);
    }

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return Scalar(f, 1); }

    Field field() const { return Field{modulus_}; }
    bool is_zero() const { return modulus_ == 0 ? sgn(q_) == 0 : residue_ == 0; }
    bool is_one() const { return modulus_ == 0 ? q_ == 1 : residue_ == 1; }

    const mpq_class& rational() const { return q_; }
    std::uint32_t residue() const { return residue_; }

    Scalar operator-() const {
        Scalar r(field());
        if (modulus_ == 0) r.q_ = -q_;
        else r.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        check(o);
        if (modulus_ == 0) q_ += o.q_;
        else residue_ = static_cast<std::uint32_t>((std::uint64_t{residue_} + o.residue_) % modulus_);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        check(o);
        if (modulus_ == 0) q_ -= o.q_;
        else residue_ = static_cast<std::uint32_t>((std::uint64_t{residue_} + modulus_ - o.residue_) % modulus_);
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        check(o);
        if (modulus_ == 0) q_ *= o.q_;
        else residue_ = static_cast<std::uint32_t>(std::uint64_t{residue_} * o.residue_ % modulus_);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        check(o);
        if (o.is_zero()) throw Error("division by zero scalar");
        if (modulus_ == 0) q_ /= o.q_;
        else residue_ = static_cast<std::uint32_t>(std::uint64_t{residue_} * inverse_mod(o.residue_) % modulus_);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const { return one(field()) / *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.modulus_ != b.modulus_) return false;
        return a.modulus_ == 0 ? a.q_ == b.q_ : a.residue_ == b.residue_;
    }

    /// Sign used when printing: rationals carry their sign, F_p values print as residues.
    bool is_negative() const { return modulus_ == 0 && sgn(q_) < 0; }

    std::string to_string() const { return modulus_ == 0 ? q_.get_str() : std::to_string(residue_); }

private:
    void check(const Scalar& o) const {
        if (o.modulus_ != modulus_) throw Error("mixed-field scalar arithmetic");
    }
    std::uint32_t reduce_signed(long v) const {
        long m = static_cast<long>(modulus_);
        long r = v % m;
        if (r < 0) r += m;
        return static_cast<std::uint32_t>(r);
    }
    std::uint64_t reduce_mpz(const mpz_class& z) const {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), modulus_);
        return r.get_ui();
    }
    std::uint64_t inverse_mod(std::uint64_t a) const {
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a % modulus_, e = modulus_ - 2;
        while (e) {
            if (e & 1) result = result * base % modulus_;
            base = base * base % modulus_;
            e >>= 1;
        }
        return result;
    }

    mpq_class q_{0};
    std::uint32_t modulus_ = 0;
    std::uint32_t residue_ = 0;
};

}  // namespace conormal
