#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rnc {

/// An exact rational truth value in [0,1]. Comparisons are exact; equal
/// rationals always compare equal regardless of how they were written
/// ("0.5", "1/2", "2/4").
class TruthValue {
public:
    using Rational = boost::multiprecision::cpp_rational;

    TruthValue() : v_(0) {}

    static TruthValue zero() { return TruthValue(); }
    static TruthValue one() { return TruthValue(Rational(1)); }

    // num/den must land in [0,1]; throws std::invalid_argument otherwise.
    static TruthValue ratio(std::int64_t num, std::int64_t den);

    enum class ParseStatus { Ok, Syntax, Range };
    struct ParseResult; // defined below
    // Accepts decimals ("0.7", ".7", "1", "1.") and fractions ("1/3").
    static ParseResult parse(std::string_view text);

    const Rational& value() const { return v_; }

    // Shortest exact decimal when the denominator is of the form 2^a 5^b,
    // otherwise "p/q".
    std::string str() const;

    static TruthValue midpoint(const TruthValue& a, const TruthValue& b);
    static TruthValue max(const TruthValue& a, const TruthValue& b);
    static TruthValue min(const TruthValue& a, const TruthValue& b);

    bool operator==(const TruthValue& o) const { return v_ == o.v_; }
    bool operator!=(const TruthValue& o) const { return v_ != o.v_; }
    bool operator<(const TruthValue& o) const { return v_ < o.v_; }
    bool operator<=(const TruthValue& o) const { return v_ <= o.v_; }
    bool operator>(const TruthValue& o) const { return v_ > o.v_; }
    bool operator>=(const TruthValue& o) const { return v_ >= o.v_; }

private:
    explicit TruthValue(Rational v) : v_(std::move(v)) {}
    Rational v_;
};

struct TruthValue::ParseResult {
    ParseStatus status;
    TruthValue value; // meaningful only when status == Ok
};

} // namespace rnc
