#include "gtorbit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gtorbit {

std::string to_string(const Rational& q) {
    const auto num = boost::multiprecision::numerator(q);
    const auto den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    boost::multiprecision::cpp_int n{std::string(num)};
    boost::multiprecision::cpp_int d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational q(n, d);
    return negative ? Rational(-q) : q;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

} // namespace gtorbit
