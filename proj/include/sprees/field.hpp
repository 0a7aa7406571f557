/*
 * field.hpp
 * Coefficient fields: exact rationals (GMP-backed) and prime fields F_p.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace sprees {

struct FieldSpec {
    enum class Kind { rationals, prime_field };
    Kind kind = Kind::prime_field;
    std::uint32_t modulus = 32003;  // prime_field only

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && (kind == Kind::rationals || modulus == o.modulus);
    }
    std::string to_string() const {
        return kind == Kind::rationals ? std::string("q")
                                       : "fp:" + std::to_string(modulus);
    }
};

inline bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline FieldSpec make_rationals() { return FieldSpec{FieldSpec::Kind::rationals, 0}; }

inline FieldSpec make_prime_field(std::uint32_t p) {
    if (p <= 2 || !is_prime_u32(p))
        throw std::invalid_argument("prime field modulus must be a prime > 2, got " +
                                    std::to_string(p));
    return FieldSpec{FieldSpec::Kind::prime_field, p};
}

// Prime-field element. Carries its modulus so values are self-contained;
// mixing moduli is a programming error and throws.
class Fp {
  public:
    Fp(long long v, std::uint32_t p) : p_(p) {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, raw{}); }
    Fp operator+(const Fp& o) const {
        check(o);
        std::uint32_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return Fp(s, p_, raw{});
    }
    Fp operator-(const Fp& o) const {
        check(o);
        std::uint32_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return Fp(s, p_, raw{});
    }
    Fp operator*(const Fp& o) const {
        check(o);
        return Fp(static_cast<std::uint32_t>(
                      (std::uint64_t(v_) * o.v_) % p_),
                  p_, raw{});
    }
    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in F_p");
        // extended Euclid
        long long a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            long long q = a / b;
            long long t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Fp(x0, p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    // Symmetric residue for display: values above p/2 print negative.
    std::string to_string() const {
        if (v_ > p_ / 2)
            return "-" + std::to_string(p_ - v_);
        return std::to_string(v_);
    }

  private:
    struct raw {};
    Fp(std::uint32_t v, std::uint32_t p, raw) : v_(v), p_(p) {}
    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("F_p modulus mismatch");
    }
    std::uint32_t v_;
    std::uint32_t p_;
};

// Exact rational, always canonical (lowest terms, positive denominator).
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long long n) : v_(static_cast<long>(n)) {}
    Rat(long long n, long long d) : v_(static_cast<long>(n), static_cast<long>(d)) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat inverse() const { return Rat(1) / *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }

    std::string to_string() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

template <class K> struct field_traits;

template <> struct field_traits<Fp> {
    static constexpr FieldSpec::Kind kind = FieldSpec::Kind::prime_field;
    static Fp from_int(long long n, const FieldSpec& f) { return Fp(n, f.modulus); }
    static Fp one(const FieldSpec& f) { return Fp(1, f.modulus); }
};
template <> struct field_traits<Rat> {
    static constexpr FieldSpec::Kind kind = FieldSpec::Kind::rationals;
    static Rat from_int(long long n, const FieldSpec&) { return Rat(n); }
    static Rat one(const FieldSpec&) { return Rat(1); }
};

}  // namespace sprees
