#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace hilbfrob {

/// Exact rational scalar. Values that fit in a machine word are kept in an
/// int64 numerator/denominator pair; anything larger is promoted to a GMP
/// rational. All arithmetic is exact, there is no floating point path.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(int n) : num_(n) {}
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q);

    /// Parses "num", "-num" or "num/den". Throws std::invalid_argument on
    /// malformed input or zero denominator.
    static Rational parse(const std::string& text);

    Rational(const Rational& o);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&&) noexcept = default;

    bool is_zero() const { return big_ ? *big_ == 0 : num_ == 0; }
    bool is_one() const { return big_ ? *big_ == 1 : (num_ == 1 && den_ == 1); }
    bool is_integer() const;
    int sign() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    Rational operator-() const;

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const;
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;

    mpq_class to_mpq() const;
    /// "num" or "num/den", canonical (den > 0, reduced).
    std::string str() const;

    /// Numerator/denominator as long long; throws std::overflow_error if the
    /// value does not fit.
    long long num_ll() const;
    long long den_ll() const;

private:
    // Small representation: num_/den_ reduced, den_ > 0. big_ set => use *big_.
    long long num_ = 0;
    long long den_ = 1;
    std::unique_ptr<mpq_class> big_;

    void promote();
    void demote_if_possible();
    static Rational from_i128(__int128 num, __int128 den);
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational factorial(int n);
Rational binomial(long long n, long long k);

} // namespace hilbfrob
