#include "rnc/truth_value.hpp"

#include <cctype>
#include <stdexcept>

namespace rnc {

using boost::multiprecision::cpp_int;

TruthValue TruthValue::ratio(std::int64_t num, std::int64_t den)
{
    if (den <= 0)
        throw std::invalid_argument("TruthValue: non-positive denominator");
    Rational r(num, den);
    if (r < 0 || r > 1)
        throw std::invalid_argument("TruthValue: value outside [0,1]");
    return TruthValue(std::move(r));
}

static bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

TruthValue::ParseResult TruthValue::parse(std::string_view text)
{
    auto syntax = ParseResult{ParseStatus::Syntax, {}};
    if (text.empty())
        return syntax;

    auto slash = text.find('/');
    Rational r;
    if (slash != std::string_view::npos) {
        std::string_view p = text.substr(0, slash);
        std::string_view q = text.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q))
            return syntax;
        cpp_int num{std::string(p)};
        cpp_int den{std::string(q)};
        if (den == 0)
            return syntax;
        r = Rational(num, den);
    } else {
        auto dot = text.find('.');
        if (dot == std::string_view::npos) {
            if (!all_digits(text))
                return syntax;
            r = Rational(cpp_int(std::string(text)));
        } else {
            std::string_view ip = text.substr(0, dot);
            std::string_view fp = text.substr(dot + 1);
            if (ip.empty() && fp.empty())
                return syntax;
            if (!ip.empty() && !all_digits(ip))
                return syntax;
            if (!fp.empty() && !all_digits(fp))
                return syntax;
            cpp_int num = ip.empty() ? cpp_int(0) : cpp_int(std::string(ip));
            cpp_int den = 1;
            for (char c : fp) {
                num = num * 10 + (c - '0');
                den *= 10;
            }
            r = Rational(num, den);
        }
    }
    if (r < 0 || r > 1)
        return ParseResult{ParseStatus::Range, {}};
    return ParseResult{ParseStatus::Ok, TruthValue(std::move(r))};
}

std::string TruthValue::str() const
{
    cpp_int num = numerator(v_);
    cpp_int den = denominator(v_);
    if (den == 1)
        return num.str();

    // A finite decimal exists iff den = 2^a 5^b.
    cpp_int d = den;
    int a = 0, b = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++a;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++b;
    }
    if (d != 1)
        return num.str() + "/" + den.str();

    int k = a > b ? a : b;
    cpp_int scale = 1;
    for (int i = 0; i < k; ++i)
        scale *= 10;
    cpp_int scaled = num * (scale / den);
    std::string digits = scaled.str();
    if (static_cast<int>(digits.size()) < k)
        digits.insert(digits.begin(), k - digits.size(), '0');
    std::string ip = digits.size() > static_cast<std::size_t>(k)
                         ? digits.substr(0, digits.size() - k)
                         : std::string("0");
    return ip + "." + digits.substr(digits.size() - k);
}

TruthValue TruthValue::midpoint(const TruthValue& a, const TruthValue& b)
{
    return TruthValue((a.v_ + b.v_) / 2);
}

TruthValue TruthValue::max(const TruthValue& a, const TruthValue& b)
{
    return a.v_ >= b.v_ ? a : b;
}

TruthValue TruthValue::min(const TruthValue& a, const TruthValue& b)
{
    return a.v_ <= b.v_ ? a : b;
}

} // namespace rnc
