#include "dialg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dialg {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = d < 0 ? boost::multiprecision::cpp_rational(Integer(-Integer(n)), Integer(-Integer(d)))
                   : boost::multiprecision::cpp_rational(Integer(n), Integer(d));
}

Rational::Rational(const Integer& n, const Integer& d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = d < 0 ? boost::multiprecision::cpp_rational(Integer(-n), Integer(-d))
                   : boost::multiprecision::cpp_rational(n, d);
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    if (negative) n = -n;
    return Rational(n, d);
}

std::string Rational::to_string() const {
    auto n = numerator();
    auto d = denominator();
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    value_ /= o.value_;
    return *this;
}

std::size_t Rational::hash() const {
    std::size_t h = std::hash<std::string>{}(numerator().str());
    h ^= std::hash<std::string>{}(denominator().str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace dialg
