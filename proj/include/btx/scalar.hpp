#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace btx {

/// Exact complex scalar a + b*i with rational a, b of arbitrary precision.
/// Values are kept canonical (lowest terms, positive denominators), so
/// equality is plain structural comparison.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long re) : re_(re), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im)
        : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    GaussianRational(long re_num, long re_den, long im_num, long im_den)
        : re_(re_num, re_den), im_(im_num, im_den) {
        if (re_den == 0 || im_den == 0)
            throw std::domain_error("zero denominator");
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /// |z|^2 = z * conj(z), a nonnegative rational.
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a) {
        return GaussianRational(-a.re_, -a.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_,
                                a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        mpq_class n2 = b.norm2();
        return GaussianRational((a.re_ * b.re_ + a.im_ * b.im_) / n2,
                                (a.im_ * b.re_ - a.re_ * b.im_) / n2);
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return cmp(a.re_, b.re_) == 0 && cmp(a.im_, b.im_) == 0;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    /// Text form "p/q+r/si"; unit denominators are dropped on output and
    /// optional on input ("3+4i", "3/5+4/5i", "-2", "-2+0/1i").
    std::string str() const;
    static GaussianRational parse(const std::string& text);

private:
    mpq_class re_, im_;
};

namespace detail {

inline std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "[+-]digits[/digits]" starting at pos; advances pos past the match.
inline mpq_class parse_rational(const std::string& s, std::size_t& pos) {
    if (pos < s.size() && s[pos] == '+') ++pos;  // mpz_set_str rejects a leading '+'
    std::size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits)
        throw std::invalid_argument("expected digits at offset " + std::to_string(digits) +
                                    " in scalar '" + s + "'");
    std::string num = s.substr(start, pos - start);
    std::string den = "1";
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart)
            throw std::invalid_argument("expected denominator digits at offset " +
                                        std::to_string(dstart) + " in scalar '" + s + "'");
        den = s.substr(dstart, pos - dstart);
    }
    mpq_class q{mpz_class(num), mpz_class(den)};
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in scalar '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace detail

inline std::string GaussianRational::str() const {
    std::string out = detail::rational_str(re_);
    if (sgn(im_) >= 0) out += "+";
    out += detail::rational_str(im_);
    out += "i";
    return out;
}

inline GaussianRational GaussianRational::parse(const std::string& text) {
    std::size_t pos = 0;
    // strip surrounding spaces
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty scalar");
    // pure imaginary shorthand "i", "-i", "+i"
    mpq_class re(0), im(0);
    auto imag_only = s.size() <= 2 && s.back() == 'i' &&
                     (s.size() == 1 || s[0] == '+' || s[0] == '-');
    if (imag_only) {
        im = (s[0] == '-') ? -1 : 1;
        return GaussianRational(re, im);
    }
    mpq_class first = detail::parse_rational(s, pos);
    if (pos == s.size()) return GaussianRational(first, im);
    if (s[pos] == 'i') {
        if (pos + 1 != s.size())
            throw std::invalid_argument("trailing characters in scalar '" + text + "'");
        return GaussianRational(re, first);
    }
    if (s[pos] != '+' && s[pos] != '-')
        throw std::invalid_argument("malformed scalar '" + text + "'");
    // "+i" / "-i" shorthand for the imaginary part
    if (pos + 2 == s.size() && s[pos + 1] == 'i') {
        im = (s[pos] == '-') ? -1 : 1;
        return GaussianRational(first, im);
    }
    mpq_class second = detail::parse_rational(s, pos);
    if (pos + 1 != s.size() || s[pos] != 'i')
        throw std::invalid_argument("malformed scalar '" + text + "' (expected trailing 'i')");
    return GaussianRational(first, second);
}

}  // namespace btx
