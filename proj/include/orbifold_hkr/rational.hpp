#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace orbifold_hkr {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}

    Rational(const Integer& value) : value_(value) {}

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) {
            throw DivisionByZero("rational with zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    /// Accepts "p" or "p/q" with an optional leading sign; surrounding spaces are rejected.
    static Rational parse(std::string_view text) {
        auto bad = [&] { return BadRational("not a rational: \"" + std::string(text) + "\""); };
        auto valid_int = [](std::string_view s, bool allow_sign) {
            if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
                s.remove_prefix(1);
            }
            if (s.empty()) {
                return false;
            }
            for (char c : s) {
                if (c < '0' || c > '9') {
                    return false;
                }
            }
            return true;
        };
        const auto slash = text.find('/');
        std::string_view num_part = text.substr(0, slash);
        std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (!valid_int(num_part, true) || !valid_int(den_part, false)) {
            throw bad();
        }
        std::string num_str(num_part);
        if (num_str.front() == '+') {
            num_str.erase(0, 1);
        }
        Integer num(num_str, 10);
        Integer den(std::string(den_part), 10);
        if (den == 0) {
            throw bad();
        }
        return Rational(num, den);
    }

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string str() const {
        if (is_integer()) {
            return value_.get_num().get_str();
        }
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational operator-() const {
        Rational r;
        r.value_ = -value_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        value_ += o.value_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        value_ -= o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        value_ *= o.value_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw DivisionByZero("rational division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    std::size_t hash() const {
        auto limb_hash = [](const mpz_class& z) {
            const mpz_srcptr p = z.get_mpz_t();
            std::size_t h = static_cast<std::size_t>(mpz_size(p)) * 31u + static_cast<std::size_t>(mpz_sgn(p) + 1);
            if (mpz_size(p) > 0) {
                h ^= static_cast<std::size_t>(mpz_getlimbn(p, 0)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            }
            return h;
        };
        return limb_hash(value_.get_num()) * 1000003u ^ limb_hash(value_.get_den());
    }

private:
    mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

} // namespace orbifold_hkr

template <>
struct std::hash<orbifold_hkr::Rational> {
    std::size_t operator()(const orbifold_hkr::Rational& r) const noexcept { return r.hash(); }
};
