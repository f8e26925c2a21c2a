#pragma once

// Exact scalars: arbitrary-precision rationals or residues modulo a prime.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

namespace mukai {

struct FieldMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("division by zero in prime field");
    return pow_mod(a, p - 2, p);
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace detail

class Scalar;

/// Either the rationals (modulus 0) or F_p for a prime p < 2^61.
class Field {
public:
    static constexpr std::uint64_t max_modulus = std::uint64_t{1} << 61;

    constexpr Field() = default;

    static constexpr Field rationals() { return Field{}; }

    static Field prime(std::uint64_t p) {
        if (p >= max_modulus) throw std::invalid_argument("prime modulus must be below 2^61");
        if (!detail::is_prime_u64(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
        Field f;
        f.modulus_ = p;
        return f;
    }

    constexpr bool is_rational() const { return modulus_ == 0; }
    constexpr std::uint64_t modulus() const { return modulus_; }
    constexpr std::uint64_t characteristic() const { return modulus_; }

    friend constexpr bool operator==(Field a, Field b) { return a.modulus_ == b.modulus_; }

    std::string name() const { return is_rational() ? std::string("Q") : "F_" + std::to_string(modulus_); }

private:
    friend class Scalar;
    struct Unchecked {};
    constexpr Field(std::uint64_t p, Unchecked) : modulus_(p) {}

    std::uint64_t modulus_ = 0;
};

inline void require_same_field(Field a, Field b) {
    if (!(a == b)) throw FieldMismatch("field mismatch: " + a.name() + " vs " + b.name());
}

/// Element of a Field. Rationals are kept canonical (lowest terms, positive
/// denominator); residues are kept in [0, p).
class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}

    Scalar(long v) : value_(mpq_class(v)) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : value_(mpq_class(v)) {}   // NOLINT(google-explicit-constructor)

    explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
    explicit Scalar(const mpz_class& z) : value_(mpq_class(z)) {}

    static Scalar rational(long num, long den = 1) {
        if (den == 0) throw std::domain_error("zero denominator");
        return Scalar(mpq_class(num, den));
    }

    static Scalar mod_p(long long v, Field f) {
        if (f.is_rational()) return Scalar(mpq_class(static_cast<long>(v)));
        const auto p = static_cast<long long>(f.modulus());
        long long r = v % p;
        if (r < 0) r += p;
        return Scalar(Residue{static_cast<std::uint64_t>(r), f.modulus()});
    }

    static Scalar zero(Field f) { return from_int(0, f); }
    static Scalar one(Field f) { return from_int(1, f); }

    static Scalar from_int(long long v, Field f) {
        if (f.is_rational()) return Scalar(mpq_class(static_cast<long>(v)));
        return mod_p(v, f);
    }

    /// Parses "n", "-n" or "n/d".
    static Scalar parse(const std::string& text, Field f = Field::rationals()) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw std::invalid_argument("cannot parse scalar '" + text + "'");
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        q.canonicalize();
        return Scalar(q).to_field(f);
    }

    Field field() const {
        if (const auto* r = std::get_if<Residue>(&value_)) return field_of(r->modulus);
        return Field::rationals();
    }

    bool is_zero() const {
        if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
        return sgn(std::get<mpq_class>(value_)) == 0;
    }
    bool is_one() const {
        if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1 % r->modulus;
        return std::get<mpq_class>(value_) == 1;
    }

    const mpq_class& rational_value() const {
        if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
        throw FieldMismatch("not a rational scalar");
    }
    std::uint64_t residue() const {
        if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
        throw FieldMismatch("not a prime-field scalar");
    }

    /// Image under Z_(p) -> F_p. Throws if p divides the denominator.
    Scalar to_field(Field f) const {
        if (f == field()) return *this;
        if (!field().is_rational()) throw FieldMismatch("cannot move a residue between prime fields");
        if (f.is_rational()) return *this;
        const auto& q = std::get<mpq_class>(value_);
        const mpz_class p(static_cast<unsigned long>(f.modulus()));
        mpz_class num = q.get_num() % p;
        mpz_class den = q.get_den() % p;
        if (num < 0) num += p;
        if (den == 0) throw std::domain_error("denominator divisible by " + std::to_string(f.modulus()));
        const auto n = static_cast<std::uint64_t>(num.get_ui());
        const auto d = static_cast<std::uint64_t>(den.get_ui());
        return Scalar(Residue{detail::mul_mod(n, detail::inv_mod(d, f.modulus()), f.modulus()), f.modulus()});
    }

    Scalar operator-() const {
        if (const auto* r = std::get_if<Residue>(&value_))
            return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
        return Scalar(mpq_class(-std::get<mpq_class>(value_)));
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        const Field f = a.common_field(b);
        if (f.is_rational()) return Scalar(mpq_class(a.rational_value() + b.rational_value()));
        const std::uint64_t p = f.modulus();
        std::uint64_t s = a.residue() + b.residue();
        if (s >= p) s -= p;
        return Scalar(Residue{s, p});
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        const Field f = a.common_field(b);
        if (f.is_rational()) return Scalar(mpq_class(a.rational_value() * b.rational_value()));
        return Scalar(Residue{detail::mul_mod(a.residue(), b.residue(), f.modulus()), f.modulus()});
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        const Field f = a.common_field(b);
        if (b.is_zero()) throw std::domain_error("division by zero");
        if (f.is_rational()) return Scalar(mpq_class(a.rational_value() / b.rational_value()));
        const std::uint64_t p = f.modulus();
        return Scalar(Residue{detail::mul_mod(a.residue(), detail::inv_mod(b.residue(), p), p), p});
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (!(a.field() == b.field())) return false;
        if (a.field().is_rational()) return a.rational_value() == b.rational_value();
        return a.residue() == b.residue();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text: "n" or "n/d" for rationals, the residue for F_p.
    std::string to_string() const {
        if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
        return std::get<mpq_class>(value_).get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    struct Residue {
        std::uint64_t value;
        std::uint64_t modulus;
    };

    explicit Scalar(Residue r) : value_(r) {}

    // Moduli inside a Scalar were validated when their Field was built.
    static Field field_of(std::uint64_t p) { return Field(p, Field::Unchecked{}); }

    Field common_field(const Scalar& o) const {
        const bool ra = std::holds_alternative<mpq_class>(value_);
        const bool rb = std::holds_alternative<mpq_class>(o.value_);
        if (ra && rb) return Field::rationals();
        if (ra != rb) throw FieldMismatch("mixing rational and prime-field scalars");
        const auto pa = std::get<Residue>(value_).modulus;
        const auto pb = std::get<Residue>(o.value_).modulus;
        if (pa != pb)
            throw FieldMismatch("mixing moduli " + std::to_string(pa) + " and " + std::to_string(pb));
        return field_of(pa);
    }

    std::variant<mpq_class, Residue> value_;
};

} // namespace mukai
