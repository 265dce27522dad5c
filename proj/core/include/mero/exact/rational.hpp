#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace mero::exact {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Element of Q(i): an exact complex number with rational real and
/// imaginary parts.  cpp_rational keeps both parts in lowest terms with a
/// positive denominator, so structural equality is semantic equality.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(BigRational re, BigRational im = 0)
        : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long re) : re_(re) {}
    GaussianRational(long re_num, long re_den) : re_(BigRational(re_num, re_den)) {}

    static GaussianRational i() { return GaussianRational(0, BigRational(1)); }
    GaussianRational(BigRational re, BigRational im, int) = delete;

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_ == 1 && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }

    /// |z|^2 as an exact rational.
    BigRational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        const BigRational n2 = b.norm2();
        if (n2.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        GaussianRational num = a * b.conj();
        return {num.re_ / n2, num.im_ / n2};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    GaussianRational pow(unsigned long k) const {
        GaussianRational acc(1);
        GaussianRational base = *this;
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    std::complex<double> to_complex() const {
        return {re_.convert_to<double>(), im_.convert_to<double>()};
    }

    /// Total bit size of all four integer parts; the coefficient-growth
    /// budget of map iteration is measured in these units.
    std::size_t bit_size() const {
        auto bits = [](const BigInt& v) -> std::size_t {
            return v.is_zero() ? 1 : boost::multiprecision::msb(abs(v)) + 1;
        };
        return bits(numerator(re_)) + bits(denominator(re_)) +
               bits(numerator(im_)) + bits(denominator(im_));
    }

private:
    BigRational re_{0};
    BigRational im_{0};
};

inline std::string to_string(const BigRational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Canonical text form `((a/b)+(c/d)i)`; the sign lives on the numerator.
inline std::string to_string(const GaussianRational& z) {
    return "((" + to_string(z.re()) + ")+(" + to_string(z.im()) + ")i)";
}

}  // namespace mero::exact
