#include "hilbfrob/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace hilbfrob {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 abs128(i128 x) { return x < 0 ? u128(-(x + 1)) + 1 : u128(x); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr i128 kI64Max = std::numeric_limits<long long>::max();
constexpr i128 kI64Min = std::numeric_limits<long long>::min();

bool fits64(i128 x) { return x >= kI64Min && x <= kI64Max; }

mpz_class mpz_from_i128(i128 x) {
    bool neg = x < 0;
    u128 u = abs128(x);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

mpq_class mpq_from_mpz(const mpz_class& z) {
    mpq_class q;
    mpq_set_z(q.get_mpq_t(), z.get_mpz_t());
    return q;
}

mpq_class mpq_from_i128(i128 num, i128 den) {
    mpq_class q = mpq_from_mpz(mpz_from_i128(num));
    q /= mpq_from_mpz(mpz_from_i128(den));
    q.canonicalize();
    return q;
}

} // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& q) : big_(std::make_unique<mpq_class>(q)) {
    big_->canonicalize();
    demote_if_possible();
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
    if (this != &o) {
        num_ = o.num_;
        den_ = o.den_;
        big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
}

Rational Rational::from_i128(i128 num, i128 den) {
    if (den < 0) {
        // i128 min cannot appear here: inputs are products/sums of int64.
        num = -num;
        den = -den;
    }
    u128 g = gcd128(abs128(num), u128(den));
    if (g > 1) {
        num = (num < 0) ? -i128(abs128(num) / g) : i128(u128(num) / g);
        den = i128(u128(den) / g);
    }
    Rational r;
    if (fits64(num) && fits64(den)) {
        r.num_ = static_cast<long long>(num);
        r.den_ = static_cast<long long>(den);
    } else {
        r.big_ = std::make_unique<mpq_class>(mpq_from_i128(num, den));
    }
    return r;
}

namespace {

bool is_integer_literal(const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    auto bad = [&] {
        return std::invalid_argument("Rational::parse: malformed rational '" + text + "'");
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_literal(text)) throw bad();
        mpq_class q(text);
        q.canonicalize();
        return Rational(q);
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) throw bad();
    mpq_class d(den);
    if (d == 0) throw bad();
    mpq_class q(num);
    q /= d;
    q.canonicalize();
    return Rational(q);
}

void Rational::promote() {
    if (!big_) big_ = std::make_unique<mpq_class>(mpq_from_i128(num_, den_));
}

void Rational::demote_if_possible() {
    if (!big_) return;
    if (big_->get_num().fits_slong_p() && big_->get_den().fits_slong_p()) {
        num_ = big_->get_num().get_si();
        den_ = big_->get_den().get_si();
        big_.reset();
    }
}

bool Rational::is_integer() const {
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : num_ < 0 ? -1 : 0;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
        i128 d = i128(den_) * o.den_;
        *this = from_i128(n, d);
        return *this;
    }
    promote();
    *big_ += o.to_mpq();
    big_->canonicalize();
    demote_if_possible();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (!big_ && !o.big_) {
        i128 n = i128(num_) * o.den_ - i128(o.num_) * den_;
        i128 d = i128(den_) * o.den_;
        *this = from_i128(n, d);
        return *this;
    }
    promote();
    *big_ -= o.to_mpq();
    big_->canonicalize();
    demote_if_possible();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        *this = from_i128(i128(num_) * o.num_, i128(den_) * o.den_);
        return *this;
    }
    promote();
    *big_ *= o.to_mpq();
    big_->canonicalize();
    demote_if_possible();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    if (!big_ && !o.big_) {
        *this = from_i128(i128(num_) * o.den_, i128(den_) * o.num_);
        return *this;
    }
    promote();
    *big_ /= o.to_mpq();
    big_->canonicalize();
    demote_if_possible();
    return *this;
}

Rational Rational::operator-() const {
    if (!big_) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    return Rational(mpq_class(-*big_));
}

bool Rational::operator==(const Rational& o) const {
    if (!big_ && !o.big_) return num_ == o.num_ && den_ == o.den_;
    return to_mpq() == o.to_mpq();
}

bool Rational::operator<(const Rational& o) const {
    if (!big_ && !o.big_) return i128(num_) * o.den_ < i128(o.num_) * den_;
    return to_mpq() < o.to_mpq();
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_from_i128(num_, den_);
}

std::string Rational::str() const {
    if (big_) {
        if (big_->get_den() == 1) return big_->get_num().get_str();
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
}

long long Rational::num_ll() const {
    if (!big_) return num_;
    if (!big_->get_num().fits_slong_p()) throw std::overflow_error("Rational numerator overflow");
    return big_->get_num().get_si();
}

long long Rational::den_ll() const {
    if (!big_) return den_;
    if (!big_->get_den().fits_slong_p()) throw std::overflow_error("Rational denominator overflow");
    return big_->get_den().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

Rational binomial(long long n, long long k) {
    if (k < 0) return Rational(0);
    Rational r(1);
    for (long long i = 1; i <= k; ++i) {
        r *= Rational(n - k + i);
        r /= Rational(i);
    }
    return r;
}

} // namespace hilbfrob
