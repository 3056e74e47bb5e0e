/* vim: set sw=4 sts=4 et : */

#include <bbu/rational.hpp>

#include <ostream>
#include <stdexcept>

using namespace bbu;

Rational::Rational(mpq_class && v) :
    _value(std::move(v))
{
    _value.canonicalize();
}

Rational::Rational() :
    _value(0)
{
}

Rational::Rational(long value) :
    _value(value)
{
}

Rational::Rational(long numerator, long denominator)
{
    if (0 == denominator)
        throw std::domain_error("rational with zero denominator");
    _value = mpq_class(numerator, denominator);
    _value.canonicalize();
}

Rational::Rational(const BigInt & numerator, const BigInt & denominator)
{
    if (0 == denominator)
        throw std::domain_error("rational with zero denominator");
    _value = mpq_class(numerator, denominator);
    _value.canonicalize();
}

auto Rational::parse(std::string_view text) -> Rational
{
    auto slash = text.find('/');
    auto parse_int = [&] (std::string_view part) -> BigInt {
        if (part.empty())
            throw std::invalid_argument("empty integer in rational '" + std::string(text) + "'");
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size())
            throw std::invalid_argument("bad rational '" + std::string(text) + "'");
        for (auto i = start ; i < part.size() ; ++i)
            if (part[i] < '0' || part[i] > '9')
                throw std::invalid_argument("bad rational '" + std::string(text) + "'");
        return BigInt(std::string(part[0] == '+' ? part.substr(1) : part));
    };

    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    auto den = parse_int(text.substr(slash + 1));
    if (den <= 0)
        throw std::invalid_argument("non-positive denominator in rational '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

auto Rational::numerator() const -> BigInt
{
    return _value.get_num();
}

auto Rational::denominator() const -> BigInt
{
    return _value.get_den();
}

auto Rational::is_zero() const -> bool
{
    return 0 == sgn(_value);
}

auto Rational::sign() const -> int
{
    return sgn(_value);
}

auto Rational::to_string() const -> std::string
{
    if (_value.get_den() == 1)
        return _value.get_num().get_str();
    return _value.get_num().get_str() + "/" + _value.get_den().get_str();
}

auto Rational::operator+= (const Rational & other) -> Rational &
{
    _value += other._value;
    return *this;
}

auto Rational::operator-= (const Rational & other) -> Rational &
{
    _value -= other._value;
    return *this;
}

auto Rational::operator*= (const Rational & other) -> Rational &
{
    _value *= other._value;
    return *this;
}

auto Rational::operator/= (const Rational & other) -> Rational &
{
    if (other.is_zero())
        throw std::domain_error("rational division by zero");
    _value /= other._value;
    return *this;
}

auto bbu::operator+ (const Rational & a, const Rational & b) -> Rational
{
    return Rational(mpq_class(a._value + b._value));
}

auto bbu::operator- (const Rational & a, const Rational & b) -> Rational
{
    return Rational(mpq_class(a._value - b._value));
}

auto bbu::operator* (const Rational & a, const Rational & b) -> Rational
{
    return Rational(mpq_class(a._value * b._value));
}

auto bbu::operator/ (const Rational & a, const Rational & b) -> Rational
{
    if (b.is_zero())
        throw std::domain_error("rational division by zero");
    return Rational(mpq_class(a._value / b._value));
}

auto bbu::operator- (const Rational & a) -> Rational
{
    return Rational(mpq_class(-a._value));
}

auto bbu::operator== (const Rational & a, const Rational & b) -> bool
{
    return a._value == b._value;
}

auto bbu::operator<=> (const Rational & a, const Rational & b) -> std::strong_ordering
{
    int c = cmp(a._value, b._value);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

auto bbu::operator<< (std::ostream & s, const Rational & r) -> std::ostream &
{
    return s << r.to_string();
}

auto bbu::choose2(long n) -> long
{
    return n * (n - 1) / 2;
}
