#include "hart/rational.hpp"

#include <stdexcept>

namespace hart {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = INT64_MAX;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        if ((a >> 64) == 0 && (b >> 64) == 0)
            return gcd_u64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t uabs(std::int64_t v) {
    return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

mpz_class mpz_from_i128(i128 v) {
    bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool fits_small(const mpz_class& z) {
    return z.fits_slong_p() && z != mpz_class(static_cast<long>(INT64_MIN));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    *this = from_i128(den < 0 ? -static_cast<i128>(num) : static_cast<i128>(num),
                      den < 0 ? -static_cast<i128>(den) : static_cast<i128>(den));
}

Rational::Rational(const mpz_class& z) {
    if (fits_small(z)) {
        num_ = z.get_si();
    } else {
        big_ = std::make_unique<mpq_class>(z);
    }
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

void Rational::promote_int(std::int64_t v) {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(mpz_from_i128(v));
}

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    if (fits_small(q.get_num()) && q.get_den().fits_slong_p()) {
        r.num_ = q.get_num().get_si();
        r.den_ = q.get_den().get_si();
    } else {
        r.big_ = std::make_unique<mpq_class>(std::move(q));
    }
    return r;
}

Rational Rational::from_i128(i128 n, i128 d) {
    if (n == 0) return Rational();
    u128 un = n < 0 ? static_cast<u128>(-(n + 1)) + 1 : static_cast<u128>(n);
    u128 g = gcd_u128(un, static_cast<u128>(d));
    if (g != 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    Rational r;
    if (n > -static_cast<i128>(kMax) - 1 && n <= kMax && d <= kMax) {
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    r.big_ = std::make_unique<mpq_class>(std::move(q));
    return r;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    auto valid = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
    std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(ns, true) || !valid(ds, false)) throw std::invalid_argument("bad rational '" + s + "'");
    if (ns[0] == '+') ns = ns.substr(1);
    mpz_class n(ns, 10), d(ds, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return from_mpq(mpq_class(n, d));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
    return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
    return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (big_) return from_mpq(-*big_);
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (big_) return from_mpq(1 / *big_);
    return from_i128(num_ < 0 ? -static_cast<i128>(den_) : static_cast<i128>(den_),
                     num_ < 0 ? -static_cast<i128>(num_) : static_cast<i128>(num_));
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t r;
            if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != INT64_MIN) {
                Rational out;
                out.num_ = r;
                return out;
            }
            return Rational::from_i128(static_cast<i128>(a.num_) + b.num_, 1);
        }
        return Rational::from_i128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                                   static_cast<i128>(a.den_) * b.den_);
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t r;
            if (!__builtin_mul_overflow(a.num_, b.num_, &r) && r != INT64_MIN) {
                Rational out;
                out.num_ = r;
                return out;
            }
            return Rational::from_i128(static_cast<i128>(a.num_) * b.num_, 1);
        }
        std::uint64_t g1 = gcd_u64(uabs(a.num_), static_cast<std::uint64_t>(b.den_));
        std::uint64_t g2 = gcd_u64(uabs(b.num_), static_cast<std::uint64_t>(a.den_));
        i128 n = (static_cast<i128>(a.num_) / static_cast<i128>(g1)) * (static_cast<i128>(b.num_) / static_cast<i128>(g2));
        i128 d = (static_cast<i128>(a.den_) / static_cast<i128>(g2)) * (static_cast<i128>(b.den_) / static_cast<i128>(g1));
        return Rational::from_i128(n, d);
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

void Rational::add_mul(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
        std::int64_t p, s;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_add_overflow(num_, p, &s) && s != INT64_MIN) {
            num_ = s;
            return;
        }
    }
    *this = *this + a * b;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical forms differ in representation class
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
}

}  // namespace hart
