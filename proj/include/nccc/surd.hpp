#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace nccc {

/// Exact rational on long long, always in lowest terms with positive denominator.
/// Numerators stay far below overflow in this project (closed-form coefficients of
/// small group families).
class Rational {
  public:
    Rational() = default;
    Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return {x.num_ * y.num_, x.den_ * y.den_};
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        return {x.num_ * y.den_, x.den_ * y.num_};
    }
    friend Rational operator-(const Rational& x) { return {-x.num_, x.den_}; }
    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        return x.num_ * y.den_ < y.num_ * x.den_;
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

  private:
    void reduce() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Quadratic surd a + b*sqrt(d) with rational a, b and square-free integer d >= 1.
/// Normal form: b == 0 implies d == 1; d never carries a square factor, so two
/// normalized surds are equal iff their components are equal.
struct Surd {
    Rational a{0};
    Rational b{0};
    long long d = 1;

    Surd() = default;
    Surd(Rational rational_part) : a(rational_part) {}       // NOLINT(google-explicit-constructor)
    Surd(long long integer_part) : a(integer_part) {}        // NOLINT(google-explicit-constructor)

    /// Builds a + b*sqrt(radicand), extracting square factors from the radicand
    /// (sqrt(25) collapses to the rational 5, sqrt(12) becomes 2*sqrt(3)).
    static Surd make(Rational a, Rational b, long long radicand) {
        if (radicand < 0) throw std::domain_error("Surd: negative radicand");
        Surd s;
        s.a = a;
        if (b == 0 || radicand == 0) return s;
        long long root = 1;
        long long core = radicand;
        for (long long f = 2; f * f <= core;) {
            if (core % (f * f) == 0) {
                core /= f * f;
                root *= f;
            } else {
                ++f;
            }
        }
        b *= root;
        if (core == 1) {
            s.a += b;
        } else {
            s.b = b;
            s.d = core;
        }
        return s;
    }

    static Surd sqrt_of(long long radicand) { return make(0, 1, radicand); }

    bool is_rational() const { return b == 0; }
    bool is_integer() const { return b == 0 && a.denominator() == 1; }

    double value() const {
        double v = to_double(a);
        if (b != 0) v += to_double(b) * std::sqrt(static_cast<double>(d));
        return v;
    }

    /// Sign of a + b*sqrt(d), decided exactly.
    int sign() const {
        if (b == 0) return a > 0 ? 1 : (a < 0 ? -1 : 0);
        if (a == 0) return b > 0 ? 1 : -1;
        if (a > 0 && b > 0) return 1;
        if (a < 0 && b < 0) return -1;
        const Rational a2 = a * a;
        const Rational b2d = b * b * Rational(d);
        if (a2 == b2d) return 0;
        // a and b have opposite signs: |a| decides against |b|sqrt(d).
        const bool rational_dominates = a2 > b2d;
        return (rational_dominates ? (a > 0) : (b > 0)) ? 1 : -1;
    }

    friend bool operator==(const Surd& x, const Surd& y) {
        return x.a == y.a && x.b == y.b && x.d == y.d;
    }
    friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }

    friend Surd operator-(const Surd& x) {
        Surd r = x;
        r.a = -r.a;
        r.b = -r.b;
        return r;
    }

    friend Surd operator+(const Surd& x, const Surd& y) {
        if (y.b == 0) {
            Surd r = x;
            r.a += y.a;
            return r;
        }
        if (x.b == 0) {
            Surd r = y;
            r.a += x.a;
            return r;
        }
        if (x.d != y.d) throw std::logic_error("Surd: sum of surds with distinct radicands");
        Surd r;
        r.a = x.a + y.a;
        r.b = x.b + y.b;
        r.d = (r.b == 0) ? 1 : x.d;
        return r;
    }

    friend Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

    friend Surd operator*(const Rational& c, const Surd& x) {
        if (c == 0) return Surd{};
        Surd r = x;
        r.a *= c;
        r.b *= c;
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        auto rat = [](const Rational& r) {
            std::ostringstream t;
            t << r.numerator();
            if (r.denominator() != 1) t << '/' << r.denominator();
            return t.str();
        };
        if (b == 0) return rat(a);
        if (a != 0) os << rat(a) << (b > 0 ? " + " : " - ");
        else if (b < 0) os << "-";
        const Rational mag = b > 0 ? b : -b;
        if (mag != 1) os << rat(mag) << "*";
        os << "sqrt(" << d << ")";
        return os.str();
    }
};

inline Surd abs(const Surd& s) { return s.sign() < 0 ? -s : s; }

}  // namespace nccc
