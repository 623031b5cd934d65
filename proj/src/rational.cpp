#include "ncosc/rational.hpp"

#include "ncosc/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace ncosc {

std::string format_rational(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(const std::string& s) {
    if (s.empty()) throw DomainError("empty integer literal");
    const bool negative = s[0] == '-';
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw DomainError("malformed integer literal: " + s);
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw DomainError("malformed integer literal: " + s);
    while (i + 1 < s.size() && s[i] == '0') ++i;  // cpp_int reads a leading 0 as octal
    const BigInt magnitude(s.substr(i));
    return negative ? BigInt(-magnitude) : magnitude;
}

// decimal (optionally scientific) literal -> exact rational
Rational parse_decimal(const std::string& s) {
    std::string mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        const std::string exp_part = s.substr(e + 1);
        mantissa = s.substr(0, e);
        errno = 0;
        char* end = nullptr;
        exponent = std::strtol(exp_part.c_str(), &end, 10);
        if (errno != 0 || end == exp_part.c_str() || *end != '\0')
            throw DomainError("malformed exponent in: " + s);
    }
    std::string digits = mantissa;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
    }
    const BigInt value = parse_integer(digits);
    BigInt scale = 1;
    for (long i = 0; i < std::labs(exponent); ++i) scale *= 10;
    return exponent >= 0 ? Rational(value * scale) : Rational(value, scale);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw DomainError("empty rational literal");
    if (auto slash = text.find('/'); slash != std::string::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw DomainError("zero denominator in: " + text);
        if (den < 0) {  // cpp_rational requires a positive denominator
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    }
    if (text.find('.') != std::string::npos || text.find_first_of("eE") != std::string::npos)
        return parse_decimal(text);
    return Rational(parse_integer(text));
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    const BigInt sn = boost::multiprecision::sqrt(num);  // floor square root
    const BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

std::optional<Rational> approximate_rational(double x, double rel_tol, std::int64_t max_denominator) {
    if (!std::isfinite(x) || max_denominator < 1) return std::nullopt;
    const double target = std::abs(x);
    // continued-fraction convergents h/k of |x|
    std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(target));
    std::int64_t k_prev = 0, k = 1;
    double frac = target - std::floor(target);
    for (int iter = 0; iter < 64; ++iter) {
        const double approx = static_cast<double>(h) / static_cast<double>(k);
        if (std::abs(approx - target) <= rel_tol * std::max(target, 1e-300)) {
            Rational r(h, k);
            return x < 0 ? Rational(-r) : r;
        }
        if (frac < 1e-18) break;
        const double inv = 1.0 / frac;
        const double a_f = std::floor(inv);
        if (a_f > 9e17) break;
        const auto a = static_cast<std::int64_t>(a_f);
        frac = inv - a_f;
        const std::int64_t h_next = a * h + h_prev;
        const std::int64_t k_next = a * k + k_prev;
        if (k_next > max_denominator || k_next < k) break;  // cap or overflow
        h_prev = h; h = h_next;
        k_prev = k; k = k_next;
    }
    return std::nullopt;
}

}  // namespace ncosc
