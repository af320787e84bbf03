#ifndef CYCDIAG_RATIONAL_HPP
#define CYCDIAG_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyd {

// Exact rational arithmetic for coefficients in Z[1/k!] for small k.
// Values stay tiny in practice; intermediates use 128-bit products and
// overflow is checked rather than silently wrapped.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& o)
    {
        __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
        __int128 d = (__int128)den_ * o.den_;
        assign(n, d);
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o)
    {
        assign((__int128)num_ * o.num_, (__int128)den_ * o.den_);
        return *this;
    }
    Rational& operator/=(const Rational& o)
    {
        if (o.num_ == 0)
            throw std::domain_error("Rational: division by zero");
        assign((__int128)num_ * o.den_, (__int128)den_ * o.num_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b)
    {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }

    // Image in F_p.  Fails if p divides the denominator.
    long long mod_p(long long p) const
    {
        if (p <= 1)
            throw std::invalid_argument("mod_p: modulus must be a prime > 1");
        if (den_ % p == 0)
            throw std::domain_error("mod_p: denominator " + std::to_string(den_) +
                                    " not invertible mod " + std::to_string(p));
        long long n = ((num_ % p) + p) % p;
        long long d = ((den_ % p) + p) % p;
        return (n * inverse_mod(d, p)) % p;
    }

    // Canonical rendering "num/den", always with explicit denominator.
    std::string str() const
    {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static long long inverse_mod(long long a, long long p)
    {
        // extended Euclid; a invertible mod p by assumption
        long long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
        while (newr != 0) {
            long long q = r / newr;
            t -= q * newt;
            std::swap(t, newt);
            r -= q * newr;
            std::swap(r, newr);
        }
        if (r != 1)
            throw std::domain_error("inverse_mod: not invertible");
        return ((t % p) + p) % p;
    }

private:
    void normalize()
    {
        if (den_ == 0)
            throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0)
            den_ = 1;
    }

    void assign(__int128 n, __int128 d)
    {
        if (d == 0)
            throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        constexpr __int128 lim = (__int128)INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("Rational: coefficient overflow");
        num_ = (long long)n;
        den_ = (long long)d;
        if (num_ == 0)
            den_ = 1;
    }

    long long num_;
    long long den_;
};

inline long long factorial(int n)
{
    long long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

}  // namespace cyd

#endif
