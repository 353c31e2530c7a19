#pragma once

// Exact rational arithmetic on 64-bit numerator/denominator.
// All intermediates go through __int128 and are reduced before narrowing,
// so overflow is detected rather than wrapped.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace coxeter {

struct OverflowError : std::overflow_error {
    OverflowError() : std::overflow_error("rational overflow") {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class Rat {
public:
    constexpr Rat() = default;
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rat operator-() const { return Rat(-num_, den_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rat& operator+=(const Rat& r) { return *this = *this + r; }
    Rat& operator-=(const Rat& r) { return *this = *this - r; }
    Rat& operator*=(const Rat& r) { return *this = *this * r; }
    Rat& operator/=(const Rat& r) { return *this = *this / r; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        i128 l = i128(a.num_) * b.den_;
        i128 r = i128(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    Rat reciprocal() const {
        if (num_ == 0) throw std::domain_error("reciprocal of zero");
        return Rat(den_, num_);
    }

    // Floor as an integer (exact).
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    // Parses "p" or "p/q".
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(std::stoll(s));
            long long p = std::stoll(s.substr(0, slash));
            long long q = std::stoll(s.substr(slash + 1));
            return Rat(p, q);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational: " + s);
        } catch (const std::out_of_range&) {
            throw ParseError("rational out of range: " + s);
        }
    }

private:
    using i128 = __int128;

    long long num_ = 0;
    long long den_ = 1;

    static i128 abs128(i128 v) { return v < 0 ? -v : v; }

    static i128 gcd128(i128 a, i128 b) {
        a = abs128(a);
        b = abs128(b);
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static long long narrow(i128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw OverflowError();
        return static_cast<long long>(v);
    }

    static Rat make(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("division by zero");
        if (n == 0) return Rat();
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n, d);
        Rat r;
        r.num_ = narrow(n / g);
        r.den_ = narrow(d / g);
        return r;
    }

    void assign(long long n, long long d) {
        Rat r = make(n, d);
        num_ = r.num_;
        den_ = r.den_;
    }
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

} // namespace coxeter
