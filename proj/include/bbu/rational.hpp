/* vim: set sw=4 sts=4 et : */

#ifndef BBU_RATIONAL_HPP
#define BBU_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bbu
{
    using BigInt = mpz_class;

    /// Exact rational number, always held in lowest terms with a positive
    /// denominator.
    class Rational
    {
        private:
            mpq_class _value;

            explicit Rational(mpq_class && v);

        public:
            Rational();
            Rational(long value);
            Rational(long numerator, long denominator);
            Rational(const BigInt & numerator, const BigInt & denominator = 1);

            /// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument.
            static auto parse(std::string_view text) -> Rational;

            auto numerator() const -> BigInt;
            auto denominator() const -> BigInt;
            auto is_zero() const -> bool;
            auto sign() const -> int;

            /// "p/q" in lowest terms, or "p" when the denominator is one.
            auto to_string() const -> std::string;

            auto operator+= (const Rational &) -> Rational &;
            auto operator-= (const Rational &) -> Rational &;
            auto operator*= (const Rational &) -> Rational &;
            auto operator/= (const Rational &) -> Rational &;

            friend auto operator+ (const Rational & a, const Rational & b) -> Rational;
            friend auto operator- (const Rational & a, const Rational & b) -> Rational;
            friend auto operator* (const Rational & a, const Rational & b) -> Rational;
            friend auto operator/ (const Rational & a, const Rational & b) -> Rational;
            friend auto operator- (const Rational & a) -> Rational;

            friend auto operator== (const Rational & a, const Rational & b) -> bool;
            friend auto operator<=> (const Rational & a, const Rational & b) -> std::strong_ordering;
    };

    auto operator+ (const Rational & a, const Rational & b) -> Rational;
    auto operator- (const Rational & a, const Rational & b) -> Rational;
    auto operator* (const Rational & a, const Rational & b) -> Rational;
    auto operator/ (const Rational & a, const Rational & b) -> Rational;
    auto operator- (const Rational & a) -> Rational;
    auto operator== (const Rational & a, const Rational & b) -> bool;
    auto operator<=> (const Rational & a, const Rational & b) -> std::strong_ordering;

    auto operator<< (std::ostream &, const Rational &) -> std::ostream &;

    /// n choose 2.
    auto choose2(long n) -> long;
}

#endif
