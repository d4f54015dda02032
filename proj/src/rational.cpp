#include "arrtopo/rational.hpp"

#include "arrtopo/errors.hpp"

#include <cctype>

namespace arrtopo {

std::string to_canonical(const Rational& r)
{
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view s, std::string_view whole, bool allow_sign)
{
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        throw InputError("malformed rational \"" + std::string(whole) + "\"");
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw InputError("malformed rational \"" + std::string(whole) + "\"");
    boost::multiprecision::cpp_int v(std::string(s.substr(i)));
    return (s[0] == '-') ? boost::multiprecision::cpp_int(-v) : v;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text, true));
    const auto num = parse_integer(text.substr(0, slash), text, true);
    const auto den = parse_integer(text.substr(slash + 1), text, false);
    if (den == 0)
        throw InputError("zero denominator in \"" + std::string(text) + "\"");
    return Rational(num, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace arrtopo
