#pragma once

#include "cfkit/errors.hpp"

namespace cfkit {

// Field-pair complex wrapper usable over both the exact rational and the
// MPFR float component types (std::complex is not specified for either).
template <class T>
struct Complex {
    T re{};
    T im{};

    Complex() = default;
    Complex(T real_part, T imag_part) : re(std::move(real_part)), im(std::move(imag_part)) {}
    explicit Complex(T real_part) : re(std::move(real_part)), im(T(0)) {}

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        T d = b.re * b.re + b.im * b.im;
        if (d == 0) throw DomainError("complex division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
    Complex& operator/=(const Complex& o) { return *this = *this / o; }

    T norm_squared() const { return re * re + im * im; }
};

}  // namespace cfkit
