#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace skewsym {

using Rational = boost::multiprecision::cpp_rational;
using Cplx = std::complex<double>;

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

/// Gaussian rational a + bi with exact arithmetic; always stored reduced
/// (cpp_rational keeps numerator/denominator coprime).
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() : re(0), im(0) {}
    ComplexRational(long long r) : re(r), im(0) {}
    ComplexRational(Rational r) : re(std::move(r)), im(0) {}
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    ComplexRational operator-() const { return {-re, -im}; }
    ComplexRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
        Rational n = b.norm2();
        if (n == 0) throw error("division by zero");
        ComplexRational num = a * b.conj();
        return {num.re / n, num.im / n};
    }
    ComplexRational& operator+=(const ComplexRational& o) { return *this = *this + o; }
    ComplexRational& operator-=(const ComplexRational& o) { return *this = *this - o; }
    ComplexRational& operator*=(const ComplexRational& o) { return *this = *this * o; }
    ComplexRational& operator/=(const ComplexRational& o) { return *this = *this / o; }

    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }

    ComplexRational pow(long long e) const {
        if (e < 0) return ComplexRational(1) / pow(-e);
        ComplexRational acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    /// Exact text form, e.g. "0", "3/2", "-i", "1/2+1/3i".
    std::string str() const {
        auto rat = [](const Rational& r) {
            std::ostringstream o;
            o << r;
            return o.str();
        };
        if (is_zero()) return "0";
        std::string out;
        if (re != 0) out += rat(re);
        if (im != 0) {
            if (im == 1) out += out.empty() ? "i" : "+i";
            else if (im == -1) out += "-i";
            else {
                std::string s = rat(im);
                if (!out.empty() && s[0] != '-') out += "+";
                out += s + "i";
            }
        }
        return out;
    }
};

} // namespace skewsym
