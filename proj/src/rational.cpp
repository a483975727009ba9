#include "hsdirac/rational.hpp"

#include "hsdirac/errors.hpp"

#include <cctype>

namespace hsdirac {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty number in '" + std::string(whole) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ParseError("malformed number '" + std::string(whole) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw ParseError("malformed number '" + std::string(whole) + "'");
        }
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto t = trim(text);
    const auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
    const BigInt den = parse_integer(t.substr(slash + 1), text);
    if (den <= 0) throw ParseError("non-positive denominator in '" + std::string(text) + "'");
    return {parse_integer(t.substr(0, slash), text), den};
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const { return q_.get_str(10); }

ComplexRational ComplexRational::inverse() const {
    const Rational n = norm();
    if (n.is_zero()) throw std::domain_error("ComplexRational: inverse of zero");
    return {re_ / n, -im_ / n};
}

std::string ComplexRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    const std::string im_part = im_.abs() == Rational(1) ? "i" : im_.abs().to_string() + "i";
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + im_part;
    return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + im_part;
}

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
    if (!o.re_.is_zero()) re_ += o.re_;
    if (!o.im_.is_zero()) im_ += o.im_;
    return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
    if (!o.re_.is_zero()) re_ -= o.re_;
    if (!o.im_.is_zero()) im_ -= o.im_;
    return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
    ComplexRational out;
    out.add_product(*this, o);
    *this = std::move(out);
    return *this;
}

void ComplexRational::add_product(const ComplexRational& a, const ComplexRational& b) {
    const bool ar = !a.re_.is_zero();
    const bool ai = !a.im_.is_zero();
    const bool br = !b.re_.is_zero();
    const bool bi = !b.im_.is_zero();
    mpq_class t;
    if (ar && br) { t = a.re_.raw() * b.re_.raw(); re_.raw() += t; }
    if (ai && bi) { t = a.im_.raw() * b.im_.raw(); re_.raw() -= t; }
    if (ar && bi) { t = a.re_.raw() * b.im_.raw(); im_.raw() += t; }
    if (ai && br) { t = a.im_.raw() * b.re_.raw(); im_.raw() += t; }
}

HalfInt HalfInt::from_rational(const Rational& r) {
    const BigInt den = r.denominator();
    if (den == 1) return from_doubled(2 * r.numerator());
    if (den == 2) return from_doubled(r.numerator());
    throw ParseError("'" + r.to_string() + "' is not an integer or half-integer");
}

HalfInt HalfInt::parse(std::string_view text) { return from_rational(Rational::parse(text)); }

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt double_factorial(long n) {
    if (n <= 0) return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt pow2(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace hsdirac
