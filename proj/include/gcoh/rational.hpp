#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gcoh {

// Exact rational arithmetic on 64-bit numerator/denominator with overflow
// checks through 128-bit intermediates. All algebra in this library is exact;
// an overflow is a hard error, never a rounding.
struct overflow_error : std::runtime_error {
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline long long checked_cast(__int128 v, const char* ctx) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw overflow_error(std::string("integer overflow in ") + ctx);
    return static_cast<long long>(v);
}
}  // namespace detail

inline long long checked_add(long long a, long long b) {
    return detail::checked_cast(static_cast<__int128>(a) + b, "add");
}
inline long long checked_sub(long long a, long long b) {
    return detail::checked_cast(static_cast<__int128>(a) - b, "sub");
}
inline long long checked_mul(long long a, long long b) {
    return detail::checked_cast(static_cast<__int128>(a) * b, "mul");
}

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rat operator-() const { return Rat(checked_sub(0, num_), den_, already_normal{}); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        long long g = std::gcd(a.den_, b.den_);
        long long lhs = checked_mul(a.num_, b.den_ / g);
        long long rhs = checked_mul(b.num_, a.den_ / g);
        return Rat(checked_add(lhs, rhs), checked_mul(a.den_, b.den_ / g));
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        long long g1 = std::gcd(std::abs(a.num_), b.den_);
        long long g2 = std::gcd(std::abs(b.num_), a.den_);
        return Rat(checked_mul(a.num_ / g1, b.num_ / g2),
                   checked_mul(a.den_ / g2, b.den_ / g1), already_normal{});
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero rational");
        return a * Rat(b.den_, b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // Fractional part in [0, 1).
    Rat mod1() const {
        long long r = num_ % den_;
        if (r < 0) r += den_;
        return Rat(r, den_, already_normal{});
    }
    // Representative of x mod m in [0, m) for positive integer m; x must make
    // m*den fit (always true for our bounded denominators).
    Rat mod_int(long long m) const {
        long long md = checked_mul(m, den_);
        long long r = num_ % md;
        if (r < 0) r += md;
        return Rat(r, den_);
    }

    long long floor_ll() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    struct already_normal {};
    Rat(long long n, long long d, already_normal) : num_(n), den_(d) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) { num_ = checked_sub(0, num_); den_ = checked_sub(0, den_); }
        long long g = std::gcd(std::abs(num_), den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

// floor(sqrt(n)) for n >= 0.
inline long long isqrt_ll(long long n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    if (r < 0) r = 0;
    while (r > 0 && checked_mul(r, r) > n) --r;
    while (checked_mul(r + 1, r + 1) <= n) ++r;
    return r;
}

// Largest integer x with x <= sqrt(q), q >= 0 rational.
inline long long floor_sqrt(const Rat& q) {
    if (q < Rat(0)) throw std::domain_error("floor_sqrt of negative");
    // x <= sqrt(n/d)  <=>  x^2 * d <= n  (x >= 0)
    long long x = isqrt_ll(q.num() / q.den());
    while (checked_mul(checked_mul(x + 1, x + 1), q.den()) <= q.num()) ++x;
    while (x > 0 && checked_mul(checked_mul(x, x), q.den()) > q.num()) --x;
    return x;
}

// Smallest integer x with x >= -sqrt(q).
inline long long ceil_neg_sqrt(const Rat& q) {
    long long f = floor_sqrt(q);
    // -f <= -sqrt(q) iff f >= sqrt(q); we want ceil(-sqrt(q)) = -floor(sqrt(q))
    return -f;
}

}  // namespace gcoh
