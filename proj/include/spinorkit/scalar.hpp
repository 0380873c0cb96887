/// @file scalar.hpp
/// @brief Exact field elements: arbitrary-precision rationals and prime residues.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "spinorkit/error.hpp"
#include "spinorkit/rng.hpp"

namespace spinorkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct FieldSpec {
    enum class Kind { Rational, PrimeField };

    Kind kind = Kind::Rational;
    std::uint32_t p = 0;  // modulus, PrimeField only

    static FieldSpec rational() { return FieldSpec{Kind::Rational, 0}; }

    static FieldSpec prime(std::uint32_t p);

    [[nodiscard]] bool is_rational() const { return kind == Kind::Rational; }
    [[nodiscard]] bool is_prime_field() const { return kind == Kind::PrimeField; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && a.p == b.p;
    }

    [[nodiscard]] std::string to_string() const {
        return is_rational() ? "Q" : "Fp:" + std::to_string(p);
    }

    // Accepts "Q" or "Fp:<p>".
    static FieldSpec parse(const std::string& s) {
        if (s == "Q" || s == "q") return rational();
        if (s.rfind("Fp:", 0) == 0 || s.rfind("fp:", 0) == 0) {
            unsigned long v = 0;
            try {
                v = std::stoul(s.substr(3));
            } catch (const std::exception&) {
                fail(ErrorCode::BadInput, "bad field string '" + s + "'");
            }
            return prime(static_cast<std::uint32_t>(v));
        }
        fail(ErrorCode::BadInput, "bad field string '" + s + "' (expected Q or Fp:<p>)");
    }
};

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline FieldSpec FieldSpec::prime(std::uint32_t p) {
    require(p >= 2 && p < (1u << 16), ErrorCode::NotPrime,
            "modulus must satisfy 2 <= p < 2^16, got " + std::to_string(p));
    require(is_prime_u32(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    return FieldSpec{Kind::PrimeField, p};
}

// ---------------------------------------------------------------------------
// Rational scalar. cpp_rational keeps lowest terms with positive denominator,
// so equality is structural.
// ---------------------------------------------------------------------------

class Rat {
  public:
    Rat() = default;
    Rat(long long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(const BigInt& num, const BigInt& den) : v_(num, den) {
        require(den != 0, ErrorCode::BadInput, "zero denominator");
    }
    explicit Rat(BigRational v) : v_(std::move(v)) {}

    [[nodiscard]] const BigRational& value() const { return v_; }
    [[nodiscard]] BigInt num() const { return boost::multiprecision::numerator(v_); }
    [[nodiscard]] BigInt den() const { return boost::multiprecision::denominator(v_); }

    [[nodiscard]] bool is_zero() const { return v_.is_zero(); }
    [[nodiscard]] FieldSpec field() const { return FieldSpec::rational(); }
    [[nodiscard]] Rat zero() const { return Rat(0); }
    [[nodiscard]] Rat one() const { return Rat(1); }

    Rat operator-() const { return Rat(BigRational(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        require(!o.is_zero(), ErrorCode::BadInput, "division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    // Order is used only for canonical tie-breaking, never for numerics.
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    [[nodiscard]] Rat inv() const {
        require(!is_zero(), ErrorCode::BadInput, "inverse of zero");
        return Rat(BigRational(1) / v_);
    }

    [[nodiscard]] std::string to_string() const {
        if (den() == 1) return num().str();
        return num().str() + "/" + den().str();
    }

  private:
    BigRational v_;
};

// ---------------------------------------------------------------------------
// Prime-field scalar. Each element carries its modulus; a default-constructed
// element is a "wildcard zero" (p = 0) that adopts the other operand's field,
// which keeps zero-initialized containers usable over any F_p.
// ---------------------------------------------------------------------------

class Fp {
  public:
    Fp() = default;
    Fp(std::int64_t n, std::uint32_t p) : p_(p) {
        check_modulus(p);
        std::int64_t r = n % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }
    Fp(std::int64_t n, const FieldSpec& spec) : Fp(n, spec.p) {
        require(spec.is_prime_field(), ErrorCode::FieldMismatch, "Fp scalar needs a prime field spec");
    }

    [[nodiscard]] std::uint32_t residue() const { return v_; }
    [[nodiscard]] std::uint32_t modulus() const { return p_; }
    [[nodiscard]] bool is_zero() const { return v_ == 0; }
    [[nodiscard]] FieldSpec field() const {
        require(p_ != 0, ErrorCode::FieldMismatch, "wildcard zero has no field");
        return FieldSpec{FieldSpec::Kind::PrimeField, p_};
    }
    [[nodiscard]] Fp zero() const { return p_ ? Fp(0, p_) : Fp(); }
    [[nodiscard]] Fp one() const {
        require(p_ != 0, ErrorCode::FieldMismatch, "one() of wildcard zero");
        return Fp(1, p_);
    }

    Fp operator-() const {
        if (p_ == 0) return *this;
        return from_raw(v_ == 0 ? 0 : p_ - v_, p_);
    }
    Fp& operator+=(const Fp& o) {
        std::uint32_t p = unify(o);
        if (p == 0) return *this;
        std::uint32_t s = v_ + o.v_;
        v_ = (s >= p) ? s - p : s;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        std::uint32_t p = unify(o);
        if (p == 0) return *this;
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        std::uint32_t p = unify(o);
        if (p == 0) return *this;
        v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) * o.v_) % p);
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.p_ != 0 && b.p_ != 0)
            require(a.p_ == b.p_, ErrorCode::FieldMismatch, "comparing residues of different moduli");
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

    [[nodiscard]] Fp inv() const {
        require(p_ != 0 && v_ != 0, ErrorCode::BadInput, "inverse of zero");
        // extended Euclid
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (t < 0) t += p_;
        return from_raw(static_cast<std::uint32_t>(t), p_);
    }

    [[nodiscard]] std::string to_string() const { return std::to_string(v_); }

    static Fp from_raw(std::uint32_t v, std::uint32_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }

  private:
    static void check_modulus(std::uint32_t p) {
        require(p >= 2 && p < (1u << 16), ErrorCode::NotPrime, "modulus out of range");
    }
    // Returns the common modulus, adopting it if this is a wildcard zero.
    std::uint32_t unify(const Fp& o) {
        if (p_ == 0) p_ = o.p_;
        else if (o.p_ != 0)
            require(p_ == o.p_, ErrorCode::FieldMismatch, "mixing residues mod " + std::to_string(p_) +
                                                              " and mod " + std::to_string(o.p_));
        return p_;
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

// ---------------------------------------------------------------------------
// Generic helpers shared by the templated algorithms.
// ---------------------------------------------------------------------------

template <class F>
inline constexpr bool is_prime_scalar_v = false;
template <>
inline constexpr bool is_prime_scalar_v<Fp> = true;

inline Rat make_scalar(const FieldSpec& spec, std::int64_t n, const Rat* /*tag*/) {
    require(spec.is_rational(), ErrorCode::FieldMismatch, "Rat scalar over non-rational spec");
    return Rat(n);
}
inline Fp make_scalar(const FieldSpec& spec, std::int64_t n, const Fp* /*tag*/) {
    return Fp(n, spec);
}

template <class F>
F make_scalar(const FieldSpec& spec, std::int64_t n) {
    return make_scalar(spec, n, static_cast<const F*>(nullptr));
}

template <class F>
F zero_of(const FieldSpec& spec) {
    return make_scalar<F>(spec, 0);
}
template <class F>
F one_of(const FieldSpec& spec) {
    return make_scalar<F>(spec, 1);
}

inline std::uint32_t characteristic(const FieldSpec& spec) { return spec.is_rational() ? 0 : spec.p; }

inline void require_odd_characteristic(const FieldSpec& spec, const char* what) {
    require(characteristic(spec) != 2, ErrorCode::Char2Unsupported,
            std::string(what) + " requires characteristic != 2");
}

// Uniform random element; for Q a small fraction, which keeps downstream
// rational arithmetic bounded.
inline Rat random_scalar(Rng& rng, const FieldSpec& spec, const Rat* /*tag*/) {
    require(spec.is_rational(), ErrorCode::FieldMismatch, "random Rat over non-rational spec");
    std::int64_t num = rng.next_range(-9, 9);
    std::int64_t den = rng.next_range(1, 6);
    return Rat(BigInt(num), BigInt(den));
}
inline Fp random_scalar(Rng& rng, const FieldSpec& spec, const Fp* /*tag*/) {
    require(spec.is_prime_field(), ErrorCode::FieldMismatch, "random Fp needs a prime field spec");
    return Fp::from_raw(static_cast<std::uint32_t>(rng.next_below(spec.p)), spec.p);
}

template <class F>
F random_scalar(Rng& rng, const FieldSpec& spec) {
    return random_scalar(rng, spec, static_cast<const F*>(nullptr));
}

// ---------------------------------------------------------------------------
// Square roots. Q: perfect-square test on numerator and denominator.
// F_p: search, p < 2^16 by construction; smallest representative returned.
// ---------------------------------------------------------------------------

inline Rat scalar_sqrt(const Rat& x) {
    if (x.is_zero()) return Rat(0);
    require(!(x.num() < 0), ErrorCode::NonResidue, "negative rational has no square root");
    BigInt n = x.num(), d = x.den();
    BigInt rn = boost::multiprecision::sqrt(n);
    BigInt rd = boost::multiprecision::sqrt(d);
    require(rn * rn == n && rd * rd == d, ErrorCode::NonResidue,
            x.to_string() + " is not a perfect square in Q");
    return Rat(rn, rd);
}

inline Fp scalar_sqrt(const Fp& x) {
    std::uint32_t p = x.modulus();
    if (x.is_zero()) return x;
    require(p != 2, ErrorCode::Char2Unsupported, "square roots are not supported over F_2");
    for (std::uint32_t r = 1; r <= p / 2; ++r) {
        if (static_cast<std::uint64_t>(r) * r % p == x.residue()) return Fp::from_raw(r, p);
    }
    fail(ErrorCode::NonResidue, x.to_string() + " is not a square mod " + std::to_string(p));
}

// ---------------------------------------------------------------------------
// Text format: "a/b" or "a" for rationals, bare residue for F_p.
// ---------------------------------------------------------------------------

inline Rat parse_scalar(const std::string& s, const FieldSpec& spec, const Rat* /*tag*/) {
    require(spec.is_rational(), ErrorCode::FieldMismatch, "parsing Rat over non-rational spec");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(BigRational(BigInt(s)));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        require(den != 0, ErrorCode::BadInput, "zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(ErrorCode::BadInput, "bad rational '" + s + "'");
    }
}

inline Fp parse_scalar(const std::string& s, const FieldSpec& spec, const Fp* /*tag*/) {
    require(spec.is_prime_field(), ErrorCode::FieldMismatch, "parsing Fp needs a prime field spec");
    try {
        long long v = std::stoll(s);
        return Fp(v, spec);
    } catch (const std::exception&) {
        fail(ErrorCode::BadInput, "bad residue '" + s + "'");
    }
}

template <class F>
F parse_scalar(const std::string& s, const FieldSpec& spec) {
    return parse_scalar(s, spec, static_cast<const F*>(nullptr));
}

}  // namespace spinorkit
