#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "cowpath/errors.hpp"

namespace cowpath {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always stored in lowest terms with a positive denominator (the backing
/// boost rational keeps that canonical form). All arithmetic and comparisons
/// are exact; division by zero throws DivisionByZeroError. This is the sole
/// scalar type of the library: every length, cost and ratio is a Rational.
class Rational {
public:
    Rational() = default;
    template <std::integral T>
        requires(!std::same_as<T, bool>)
    Rational(T value) : value_(value) {}                   // NOLINT: implicit by design
    Rational(const BigInt& value) : value_(value) {}       // NOLINT

    Rational(const BigInt& numerator, const BigInt& denominator) {
        if (denominator == 0) {
            throw DivisionByZeroError("rational with zero denominator");
        }
        // the backing type insists on a positive denominator
        value_ = denominator < 0 ? Backing(-numerator, -denominator)
                                 : Backing(numerator, denominator);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(Backing(-value_)); }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs) {
        if (rhs.is_zero()) {
            throw DivisionByZeroError("rational division by zero");
        }
        value_ /= rhs.value_;
        return *this;
    }

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
        if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Exact integer power; the exponent may be negative (base must be nonzero).
    Rational pow(std::int64_t exponent) const {
        if (exponent < 0) {
            if (is_zero()) throw DivisionByZeroError("0 raised to a negative power");
            return (Rational(1) / *this).pow(-exponent);
        }
        Rational result(1);
        Rational base = *this;
        auto e = static_cast<std::uint64_t>(exponent);
        while (e > 0) {
            if (e & 1U) result *= base;
            base *= base;
            e >>= 1U;
        }
        return result;
    }

    /// Parses "p/q" or "p" (optional leading minus, decimal digits, q > 0).
    static std::optional<Rational> parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        if (text.empty()) return std::nullopt;

        const auto slash = text.find('/');
        std::string_view num_part = trim(text.substr(0, slash));
        std::string_view den_part =
            slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));

        auto parse_digits = [](std::string_view s) -> std::optional<BigInt> {
            if (s.empty()) return std::nullopt;
            BigInt v = 0;
            for (char c : s) {
                if (c < '0' || c > '9') return std::nullopt;
                v = v * 10 + (c - '0');
            }
            return v;
        };

        const bool negative = !num_part.empty() && num_part.front() == '-';
        if (negative) num_part.remove_prefix(1);
        const auto num = parse_digits(num_part);
        const auto den = parse_digits(den_part);
        if (!num || !den || *den == 0) return std::nullopt;
        return Rational(negative ? BigInt(-*num) : *num, *den);
    }

    /// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
    std::string str() const {
        const BigInt den = denominator();
        std::string out = numerator().str();
        if (den != 1) {
            out += '/';
            out += den.str();
        }
        return out;
    }

    /// Correctly rounded decimal rendering with the given number of
    /// significant digits (round half to even), formatted like printf %g:
    /// fixed notation for moderate exponents, scientific otherwise, and
    /// trailing zeros trimmed. Purely integer arithmetic, so the output is
    /// deterministic across platforms.
    std::string decimal(int significant_digits = 12) const {
        if (significant_digits < 1) {
            throw InvalidParameterError("decimal(): need at least one significant digit");
        }
        if (is_zero()) return "0";

        const bool negative = sign() < 0;
        BigInt a = boost::multiprecision::abs(numerator());
        BigInt b = denominator();

        auto pow10 = [](std::int64_t k) -> BigInt {
            return boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(k));
        };
        // a/b compared against 10^k, exactly.
        auto cmp_pow10 = [&](std::int64_t k) {
            return k >= 0 ? (a < b * pow10(k) ? -1 : (a == b * pow10(k) ? 0 : 1))
                          : (a * pow10(-k) < b ? -1 : (a * pow10(-k) == b ? 0 : 1));
        };

        // Exponent e with 10^e <= a/b < 10^{e+1}.
        std::int64_t e = static_cast<std::int64_t>(a.str().size()) -
                         static_cast<std::int64_t>(b.str().size());
        while (cmp_pow10(e) < 0) --e;
        while (cmp_pow10(e + 1) >= 0) ++e;

        // Mantissa with `significant_digits` digits, rounded half to even.
        const std::int64_t shift = significant_digits - 1 - e;
        BigInt scaled_num = shift >= 0 ? a * pow10(shift) : a;
        BigInt scaled_den = shift >= 0 ? b : b * pow10(-shift);
        BigInt mantissa = scaled_num / scaled_den;
        const BigInt remainder = scaled_num - mantissa * scaled_den;
        const BigInt twice = remainder * 2;
        if (twice > scaled_den || (twice == scaled_den && (mantissa & 1) != 0)) ++mantissa;
        if (mantissa == pow10(significant_digits)) {
            mantissa /= 10;
            ++e;
        }

        std::string digits = mantissa.str();
        auto trim_zeros = [](std::string& s) {
            while (!s.empty() && s.back() == '0') s.pop_back();
        };

        std::string out;
        if (e >= -4 && e < significant_digits) {
            if (e >= 0) {
                out = digits.substr(0, static_cast<std::size_t>(e) + 1);
                std::string frac = digits.substr(static_cast<std::size_t>(e) + 1);
                trim_zeros(frac);
                if (!frac.empty()) out += '.' + frac;
            } else {
                trim_zeros(digits);
                out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
            }
        } else {
            std::string frac = digits.substr(1);
            trim_zeros(frac);
            out = digits.substr(0, 1);
            if (!frac.empty()) out += '.' + frac;
            out += 'e';
            out += e < 0 ? '-' : '+';
            std::string exp = std::to_string(e < 0 ? -e : e);
            if (exp.size() < 2) exp.insert(0, "0");
            out += exp;
        }
        return negative ? '-' + out : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    using Backing = boost::multiprecision::cpp_rational;
    explicit Rational(Backing v) : value_(std::move(v)) {}
    Backing value_;
};

/// 2^n as an exact rational, n may be negative.
inline Rational pow2(std::int64_t n) { return Rational(2).pow(n); }

} // namespace cowpath
