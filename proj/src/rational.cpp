#include "easyspace/rational.hpp"

#include <cctype>

namespace easyspace {

std::string to_string(const Rational& value)
{
    return value.get_str();
}

Rational parse_rational(std::string_view text)
{
    auto valid = [](std::string_view part) {
        if (part.empty())
            return false;
        std::size_t start = (part.front() == '-' || part.front() == '+') ? 1 : 0;
        if (start == part.size())
            return false;
        for (std::size_t i = start; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                return false;
        return true;
    };

    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid(num) || !valid(den) || den.front() == '-' || den.front() == '+')
        throw PreconditionError("not a rational number: '" + std::string(text) + "'");

    std::string n(num);
    if (n.front() == '+')
        n.erase(0, 1);
    Integer numerator(n, 10);
    Integer denominator(std::string(den), 10);
    if (denominator == 0)
        throw PreconditionError("zero denominator in '" + std::string(text) + "'");
    Rational result(numerator, denominator);
    result.canonicalize();
    return result;
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    result.canonicalize();
    return result;
}

Integer pow(const Integer& base, unsigned exponent)
{
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

double to_double(const Rational& value)
{
    return value.get_d();
}

} // namespace easyspace
