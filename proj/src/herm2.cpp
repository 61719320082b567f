#include "jtp/herm2.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "jtp/errors.hpp"

namespace jtp {

namespace {

bool finite(double x) { return std::isfinite(x); }
bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Unit-phase gauge: first component real nonnegative; if its modulus is
// below 1e-8, the second component is made real nonnegative instead.
std::array<Complex, 2> gauge_phase(std::array<Complex, 2> v) {
    constexpr double kPivot = 1e-8;
    Complex pivot = (std::abs(v[0]) >= kPivot) ? v[0] : v[1];
    double r = std::abs(pivot);
    if (r == 0.0) return v;
    Complex phase = std::conj(pivot) / r;
    v[0] *= phase;
    v[1] *= phase;
    return v;
}

std::array<Complex, 2> normalize(std::array<Complex, 2> v) {
    double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    v[0] /= n;
    v[1] /= n;
    return v;
}

} // namespace

Herm2::Herm2(double a_, Complex b_, double c_) : a(a_), c(c_), b(b_) {
    if (!finite(a) || !finite(c) || !finite(b))
        throw DomainError("Herm2 entries must be finite");
}

Herm2 operator+(const Herm2& x, const Herm2& y) { return Herm2(x.a + y.a, x.b + y.b, x.c + y.c); }
Herm2 operator-(const Herm2& x, const Herm2& y) { return Herm2(x.a - y.a, x.b - y.b, x.c - y.c); }
Herm2 operator-(const Herm2& x) { return Herm2(-x.a, -x.b, -x.c); }
Herm2 operator*(double s, const Herm2& x) { return Herm2(s * x.a, s * x.b, s * x.c); }

double trace(const Herm2& x) { return x.a + x.c; }

double determinant(const Herm2& x) { return x.a * x.c - std::norm(x.b); }

double frobenius(const Herm2& x) {
    return std::sqrt(x.a * x.a + x.c * x.c + 2.0 * std::norm(x.b));
}

Mat2 to_mat(const Herm2& x) {
    Mat2 m;
    m.at(0, 0) = Complex{x.a, 0};
    m.at(0, 1) = x.b;
    m.at(1, 0) = std::conj(x.b);
    m.at(1, 1) = Complex{x.c, 0};
    return m;
}

Herm2 hermitize(const Mat2& m) {
#ifndef NDEBUG
    double scale = std::max(1.0, frobenius(m));
    assert(std::abs(m.at(0, 0).imag()) <= kConstructorTol * scale);
    assert(std::abs(m.at(1, 1).imag()) <= kConstructorTol * scale);
    assert(std::abs(m.at(1, 0) - std::conj(m.at(0, 1))) <= kConstructorTol * scale);
#endif
    return Herm2(m.at(0, 0).real(), m.at(0, 1), m.at(1, 1).real());
}

Herm2 jordan_triple(const Herm2& a, const Herm2& b) {
    Mat2 am = to_mat(a);
    return hermitize(am * to_mat(b) * am);
}

Unitary2::Unitary2(const Mat2& m) : u(m) {
    Mat2 gram = m * adjoint(m);
    double dev = frobenius(gram - Mat2::identity());
    if (!(dev <= kConstructorTol))
        throw DomainError("matrix is not unitary (||U U* - I|| = " + std::to_string(dev) + ")");
}

Unitary2 Unitary2::s_matrix() {
    const double s = 1.0 / std::sqrt(2.0);
    Mat2 m;
    m.at(0, 0) = {s, 0};
    m.at(0, 1) = {s, 0};
    m.at(1, 0) = {s, 0};
    m.at(1, 1) = {-s, 0};
    return Unitary2(m);
}

Herm2 conjugate(const Unitary2& u, const Herm2& a) {
    return hermitize(u.u * to_mat(a) * adjoint(u.u));
}

Herm2 entrywise_conj(const Herm2& a) { return Herm2(a.a, std::conj(a.b), a.c); }

Herm2 inverse(const Herm2& a, double tol) {
    double d = determinant(a);
    double nf = frobenius(a);
    if (std::abs(d) <= tol * std::max(1.0, nf * nf))
        throw SingularInput("matrix is singular within tolerance");
    return Herm2(a.c / d, -a.b / d, a.a / d);
}

std::pair<double, double> eigenvalues(const Herm2& a) {
    double mid = 0.5 * (a.a + a.c);
    double disc = 0.25 * (a.a - a.c) * (a.a - a.c) + std::norm(a.b);
    // disc = (tr^2 - 4 det) / 4 in exact arithmetic; this form is never
    // negative, so the clamp is only a guard against -0.
    double rad = std::sqrt(std::max(disc, 0.0));
    return {mid + rad, mid - rad};
}

EigenSystem eigensystem(const Herm2& a) {
    auto [l1, l2] = eigenvalues(a);
    EigenSystem es;
    es.lambda1 = l1;
    es.lambda2 = l2;

    // Kernel vectors of (A - l1 I): (b, l1 - a) from row 1, (l1 - c, conj b)
    // from row 2. Both factors l1 - a and l1 - c are nonnegative; pick the
    // larger for stability.
    std::array<Complex, 2> v;
    double da = l1 - a.a;
    double dc = l1 - a.c;
    if (da >= dc) {
        v = {a.b, Complex{da, 0}};
    } else {
        v = {Complex{dc, 0}, std::conj(a.b)};
    }
    double vn = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    if (vn < 1e-300) {
        // Scalar matrix: any basis is an eigenbasis.
        return es;
    }
    v[0] /= vn;
    v[1] /= vn;
    es.q1 = gauge_phase(v);
    es.q2 = gauge_phase(normalize({-std::conj(es.q1[1]), std::conj(es.q1[0])}));
    return es;
}

int inertia(const Herm2& a, double tol) {
    auto [l1, l2] = eigenvalues(a);
    double thr = tol * std::max(1.0, frobenius(a));
    return (l1 > thr ? 1 : 0) + (l2 > thr ? 1 : 0);
}

int rank_of(const Herm2& a, double tol) {
    auto [l1, l2] = eigenvalues(a);
    double thr = tol * std::max(1.0, frobenius(a));
    return (std::abs(l1) > thr ? 1 : 0) + (std::abs(l2) > thr ? 1 : 0);
}

Definiteness definiteness(const Herm2& a, double tol) {
    if (rank_of(a, tol) < 2) return Definiteness::Singular;
    switch (inertia(a, tol)) {
        case 2: return Definiteness::PositiveDefinite;
        case 0: return Definiteness::NegativeDefinite;
        default: return Definiteness::IndefiniteInvertible;
    }
}

int eta(const Herm2& a, double tol) {
    Definiteness d = definiteness(a, tol);
    if (d == Definiteness::Singular) throw SingularInput("eta is undefined for singular matrices");
    return d == Definiteness::NegativeDefinite ? -1 : +1;
}

BDBDecomposition decompose_bdb(const Herm2& a) {
    EigenSystem es = eigensystem(a);
    BDBDecomposition out;
    out.lambda1 = es.lambda1;
    out.lambda2 = es.lambda2;

    // w = e1 - q1. The phase gauge makes <q1, e1> real, so the reflection
    // I - 2 w w* / (w* w) exchanges e1 and q1.
    std::array<Complex, 2> w{Complex{1, 0} - es.q1[0], -es.q1[1]};
    double wn2 = std::norm(w[0]) + std::norm(w[1]);
    if (std::sqrt(wn2) <= 1e-8) {
        out.b = Herm2::identity();
        return out;
    }
    double f = 2.0 / wn2;
    out.b = Herm2(1.0 - f * std::norm(w[0]), -f * w[0] * std::conj(w[1]),
                  1.0 - f * std::norm(w[1]));
    return out;
}

InvolutionParam InvolutionParam::scalar(int sign) {
    if (sign != 1 && sign != -1) throw ParamOutOfRange("scalar involution sign must be +-1");
    InvolutionParam p;
    p.kind = sign == 1 ? Kind::ScalarPlus : Kind::ScalarMinus;
    return p;
}

InvolutionParam InvolutionParam::general(int branch, Complex a) {
    if (branch != 1 && branch != -1) throw ParamOutOfRange("involution branch must be +-1");
    InvolutionParam p;
    p.kind = Kind::General;
    p.branch = branch;
    p.a = a;
    return p;
}

Herm2 involution_from_param(const InvolutionParam& p) {
    switch (p.kind) {
        case InvolutionParam::Kind::ScalarPlus: return Herm2::identity();
        case InvolutionParam::Kind::ScalarMinus: return -Herm2::identity();
        case InvolutionParam::Kind::General: break;
    }
    double r = std::abs(p.a);
    if (r > 1.0 + 1e-12) throw ParamOutOfRange("involution parameter needs |a| <= 1");
    Complex a = p.a;
    if (r > 1.0) a /= r; // band case: snap onto the unit circle
    double d = std::sqrt(std::max(0.0, 1.0 - std::norm(a)));
    return Herm2(p.branch * d, a, -p.branch * d);
}

InvolutionParam involution_to_param(const Herm2& x) {
    Herm2 sq = jordan_triple(x, Herm2::identity()); // X I X = X^2
    if (frobenius(sq - Herm2::identity()) > 1e-9)
        throw NotAnInvolution("input does not square to the identity within 1e-9");
    const Herm2 id = Herm2::identity();
    if (frobenius(x - id) <= 1e-9) return InvolutionParam::scalar(+1);
    if (frobenius(x + id) <= 1e-9) return InvolutionParam::scalar(-1);
    return InvolutionParam::general(x.a >= 0 ? +1 : -1, x.b);
}

} // namespace jtp
