#include "orthoq/rational.hpp"

#include <cctype>

#include "orthoq/error.hpp"

namespace orthoq {

namespace {

bool is_integer_literal(std::string_view text) {
    if (text.empty()) return false;
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view text) {
    std::string digits(text);
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    return mpz_class(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("invalid rational \"" + std::string(text) + "\"");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    Rational value(parse_integer(num), d);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (is_zero(base)) throw DomainError("zero raised to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

}  // namespace orthoq
