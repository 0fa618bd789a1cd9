#include "kaluza/rational.hpp"

#include <cctype>

#include "kaluza/error.hpp"

namespace kaluza {

namespace {

bool is_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view original = text;
    bool negative = false;
    constexpr std::string_view unicode_minus = "\xE2\x88\x92";
    if (text.starts_with('-')) {
        negative = true;
        text.remove_prefix(1);
    } else if (text.starts_with(unicode_minus)) {
        negative = true;
        text.remove_prefix(unicode_minus.size());
    }

    std::string_view num = text;
    std::string_view den = "1";
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_digits(num) || !is_digits(den)) {
        throw InputError("malformed rational: '" + std::string(original) + "'");
    }

    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) {
        throw InputError("zero denominator in rational: '" + std::string(original) + "'");
    }
    Rational value(negative ? Integer(-n) : n, d);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value)
{
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer factorial(unsigned long n)
{
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

} // namespace kaluza
