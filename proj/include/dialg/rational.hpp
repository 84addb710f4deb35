#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dialg {

/// Exact rational scalar with arbitrary-precision numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator; zero is 0/1.
/// Serializes as "p/q", or "p" when q = 1.
class Rational {
public:
    using Integer = boost::multiprecision::cpp_int;

    Rational() = default;
    Rational(long long n) : value_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d);
    Rational(const Integer& n, const Integer& d);

    /// Parses "p", "-p", "p/q" with q > 0. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] Integer numerator() const { return boost::multiprecision::numerator(value_); }
    [[nodiscard]] Integer denominator() const { return boost::multiprecision::denominator(value_); }

    [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] int sign() const { return value_.sign(); }
    [[nodiscard]] bool is_integer() const { return denominator() == 1; }
    [[nodiscard]] std::size_t hash() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    boost::multiprecision::cpp_rational value_{0};
};

} // namespace dialg

template <>
struct std::hash<dialg::Rational> {
    std::size_t operator()(const dialg::Rational& r) const noexcept { return r.hash(); }
};
