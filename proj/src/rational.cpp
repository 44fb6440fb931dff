#include "quiverlab/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace quiverlab {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 abs_u128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

bool fits_i64(i128 v) {
    return v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max();
}

mpz_class mpz_from_i128(i128 v) {
    bool neg = v < 0;
    u128 mag = abs_u128(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(mag)));
    mpz_class out = (hi << 64) + lo;
    return neg ? mpz_class(-out) : out;
}

mpz_class mpz_from_i64(int64_t v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

}  // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    assign_wide(num, den);
}

Rational::Rational(const mpq_class& q) { assign(q); }

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q.canonicalize();
    return Rational(q);
}

void Rational::assign(const mpq_class& q) {
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
        num_ = mpz_get_si(q.get_num_mpz_t());
        den_ = mpz_get_si(q.get_den_mpz_t());
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const mpq_class>(q);
    }
}

void Rational::assign_wide(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd_u128(abs_u128(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (fits_i64(num) && fits_i64(den)) {
        num_ = static_cast<int64_t>(num);
        den_ = static_cast<int64_t>(den);
        big_.reset();
    } else {
        mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
        q.canonicalize();
        assign(q);
    }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_fraction_string() const {
    if (big_) {
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.assign(mpq_class(-*big_));
    } else if (num_ == std::numeric_limits<int64_t>::min()) {
        r.assign_wide(-static_cast<i128>(num_), den_);
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (o.is_zero()) return *this;
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            int64_t out;
            if (!__builtin_add_overflow(num_, o.num_, &out)) {
                num_ = out;
                return *this;
            }
        }
        assign_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                    static_cast<i128>(den_) * o.den_);
        return *this;
    }
    assign(mpq_class(to_mpq() + o.to_mpq()));
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (o.is_zero()) return *this;
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            int64_t out;
            if (!__builtin_sub_overflow(num_, o.num_, &out)) {
                num_ = out;
                return *this;
            }
        }
        assign_wide(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                    static_cast<i128>(den_) * o.den_);
        return *this;
    }
    assign(mpq_class(to_mpq() - o.to_mpq()));
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        *this = Rational();
        return *this;
    }
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            int64_t out;
            if (!__builtin_mul_overflow(num_, o.num_, &out)) {
                num_ = out;
                return *this;
            }
        }
        assign_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
        return *this;
    }
    assign(mpq_class(to_mpq() * o.to_mpq()));
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    if (is_zero()) return *this;
    if (!big_ && !o.big_) {
        assign_wide(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
        return *this;
    }
    assign(mpq_class(to_mpq() / o.to_mpq()));
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

int Rational::compare(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 lhs = static_cast<i128>(a.num_) * b.den_;
        i128 rhs = static_cast<i128>(b.num_) * a.den_;
        return (lhs > rhs) - (lhs < rhs);
    }
    return cmp(a.to_mpq(), b.to_mpq());
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace quiverlab
