#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace hsdirac {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& v) : q_(v) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "a" or "a/b" (optional leading sign).
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return q_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return q_.get_den(); }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational inverse() const;

    /// "5/6", "-3", "0".
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] const mpq_class& raw() const { return q_; }
    mpq_class& raw() { return q_; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_;
};

/// a + b i with a, b rational.
class ComplexRational {
public:
    ComplexRational() = default;
    ComplexRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    ComplexRational(long re) : re_(re) {}                 // NOLINT(google-explicit-constructor)
    ComplexRational(int re) : re_(re) {}                  // NOLINT(google-explicit-constructor)
    ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static ComplexRational i() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] const Rational& re() const { return re_; }
    [[nodiscard]] const Rational& im() const { return im_; }
    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_real() const { return im_.is_zero(); }
    [[nodiscard]] ComplexRational conj() const { return {re_, -im_}; }
    [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }
    [[nodiscard]] ComplexRational inverse() const;
    [[nodiscard]] std::string to_string() const;

    ComplexRational& operator+=(const ComplexRational& o);
    ComplexRational& operator-=(const ComplexRational& o);
    ComplexRational& operator*=(const ComplexRational& o);
    ComplexRational& operator/=(const ComplexRational& o) { return *this *= o.inverse(); }

    /// this += a * b, skipping zero parts.
    void add_product(const ComplexRational& a, const ComplexRational& b);

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend std::ostream& operator<<(std::ostream& os, const ComplexRational& z) { return os << z.to_string(); }

private:
    Rational re_;
    Rational im_;
};

/// A value in Z ∪ (Z + 1/2), stored as twice its value.
class HalfInt {
public:
    HalfInt() = default;
    static HalfInt from_doubled(BigInt doubled) { HalfInt h; h.doubled_ = std::move(doubled); return h; }
    static HalfInt from_int(long v) { return from_doubled(BigInt(2 * v)); }
    /// Throws ParseError unless the rational has denominator 1 or 2.
    static HalfInt from_rational(const Rational& r);
    static HalfInt parse(std::string_view text);

    [[nodiscard]] const BigInt& doubled() const { return doubled_; }
    [[nodiscard]] bool is_integer() const { return mpz_even_p(doubled_.get_mpz_t()) != 0; }
    [[nodiscard]] bool is_half() const { return !is_integer(); }
    [[nodiscard]] Rational to_rational() const { return {doubled_, BigInt(2)}; }
    [[nodiscard]] HalfInt abs() const { return from_doubled(::abs(doubled_)); }
    [[nodiscard]] int sign() const { return sgn(doubled_); }
    [[nodiscard]] std::string to_string() const { return to_rational().to_string(); }

    HalfInt& operator+=(const HalfInt& o) { doubled_ += o.doubled_; return *this; }
    HalfInt& operator-=(const HalfInt& o) { doubled_ -= o.doubled_; return *this; }
    friend HalfInt operator+(HalfInt a, const HalfInt& b) { return a += b; }
    friend HalfInt operator-(HalfInt a, const HalfInt& b) { return a -= b; }
    friend HalfInt operator-(const HalfInt& a) { return from_doubled(-a.doubled_); }

    friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.doubled_ == b.doubled_; }
    friend std::strong_ordering operator<=>(const HalfInt& a, const HalfInt& b) {
        const int c = cmp(a.doubled_, b.doubled_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend std::ostream& operator<<(std::ostream& os, const HalfInt& h) { return os << h.to_string(); }

private:
    BigInt doubled_ = 0;
};

/// Binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// n!! = n (n-2) (n-4) ...; 0!! = (-1)!! = 1.
BigInt double_factorial(long n);

BigInt pow2(unsigned long e);

}  // namespace hsdirac
