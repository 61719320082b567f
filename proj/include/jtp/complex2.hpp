#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace jtp {

using Complex = std::complex<double>;

// Dense 2x2 complex matrix, row major. Workhorse for products and unitary
// frames; the Hermitian-constrained type lives in herm2.hpp.
struct Mat2 {
    std::array<Complex, 4> m{Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}};

    Complex& at(int r, int c) { return m[2 * r + c]; }
    const Complex& at(int r, int c) const { return m[2 * r + c]; }

    static Mat2 identity() { return Mat2{{Complex{1, 0}, {0, 0}, {0, 0}, {1, 0}}}; }
    static Mat2 diag(Complex d1, Complex d2) { return Mat2{{d1, {0, 0}, {0, 0}, d2}}; }
};

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r;
    r.at(0, 0) = x.at(0, 0) * y.at(0, 0) + x.at(0, 1) * y.at(1, 0);
    r.at(0, 1) = x.at(0, 0) * y.at(0, 1) + x.at(0, 1) * y.at(1, 1);
    r.at(1, 0) = x.at(1, 0) * y.at(0, 0) + x.at(1, 1) * y.at(1, 0);
    r.at(1, 1) = x.at(1, 0) * y.at(0, 1) + x.at(1, 1) * y.at(1, 1);
    return r;
}

inline Mat2 operator*(Complex s, const Mat2& x) {
    Mat2 r = x;
    for (auto& e : r.m) e *= s;
    return r;
}

inline Mat2 operator+(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.m[i] = x.m[i] + y.m[i];
    return r;
}

inline Mat2 operator-(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.m[i] = x.m[i] - y.m[i];
    return r;
}

inline Mat2 adjoint(const Mat2& x) {
    Mat2 r;
    r.at(0, 0) = std::conj(x.at(0, 0));
    r.at(0, 1) = std::conj(x.at(1, 0));
    r.at(1, 0) = std::conj(x.at(0, 1));
    r.at(1, 1) = std::conj(x.at(1, 1));
    return r;
}

inline Complex trace(const Mat2& x) { return x.at(0, 0) + x.at(1, 1); }

inline Complex det(const Mat2& x) {
    return x.at(0, 0) * x.at(1, 1) - x.at(0, 1) * x.at(1, 0);
}

inline double frobenius(const Mat2& x) {
    double s = 0;
    for (const auto& e : x.m) s += std::norm(e);
    return std::sqrt(s);
}

} // namespace jtp
