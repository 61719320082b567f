#pragma once

#include <utility>

#include "jtp/complex2.hpp"

namespace jtp {

// Default tolerances. Rank/inertia/definiteness decisions use kRankTol
// relative to max(1, Frobenius norm); constructor-level identities
// (unitarity, involution squares, Hermitian drift) use kConstructorTol.
inline constexpr double kRankTol = 1e-9;
inline constexpr double kConstructorTol = 1e-12;
inline constexpr double kReconstructTol = 1e-10;
inline constexpr double kInvolutionRoundTripTol = 1e-9;

/// 2x2 complex Hermitian matrix [[a, b], [conj(b), c]].
/// Hermitian by construction: only the (1,2) entry and the real diagonal
/// are stored. Constructors reject non-finite values.
struct Herm2 {
    double a{0};
    double c{0};
    Complex b{0, 0};

    Herm2() = default;
    Herm2(double a_, Complex b_, double c_);

    static Herm2 zero() { return Herm2{}; }
    static Herm2 identity() { return Herm2(1, {0, 0}, 1); }
    static Herm2 diag(double x, double y) { return Herm2(x, {0, 0}, y); }
};

Herm2 operator+(const Herm2& x, const Herm2& y);
Herm2 operator-(const Herm2& x, const Herm2& y);
Herm2 operator-(const Herm2& x);
Herm2 operator*(double s, const Herm2& x);

double trace(const Herm2& x);
double determinant(const Herm2& x);
double frobenius(const Herm2& x);

Mat2 to_mat(const Herm2& x);

/// Projects a numerically Hermitian product back onto the Hermitian
/// representation: keeps the (1,2) entry, takes real parts of the diagonal.
/// In debug builds asserts that the drift being discarded is below
/// kConstructorTol relative to max(1, Frobenius norm).
Herm2 hermitize(const Mat2& m);

/// Triple product A.B.A (itself Hermitian for Hermitian A, B).
Herm2 jordan_triple(const Herm2& a, const Herm2& b);

/// 2x2 unitary, validated U.adjoint(U) = I within kConstructorTol.
struct Unitary2 {
    Mat2 u = Mat2::identity();

    Unitary2() = default;
    explicit Unitary2(const Mat2& m);

    static Unitary2 identity() { return Unitary2{}; }
    /// The symmetric orthogonal involution (1/sqrt(2)) [[1, 1], [1, -1]].
    static Unitary2 s_matrix();
};

/// U A U*, re-Hermitized.
Herm2 conjugate(const Unitary2& u, const Herm2& a);

/// Entrywise complex conjugate (transpose of a Hermitian matrix).
Herm2 entrywise_conj(const Herm2& a);

/// Inverse via the adjugate. Throws SingularInput when
/// |det| <= tol * max(1, |A|_F^2).
Herm2 inverse(const Herm2& a, double tol = kRankTol);

/// Ordered eigensystem: lambda1 >= lambda2, unit eigenvectors with the
/// phase gauge "first component real nonnegative" (if |first| < 1e-8 the
/// second component is made real nonnegative instead).
struct EigenSystem {
    double lambda1{0};
    double lambda2{0};
    std::array<Complex, 2> q1{Complex{1, 0}, Complex{0, 0}};
    std::array<Complex, 2> q2{Complex{0, 0}, Complex{1, 0}};
};

/// Eigenvalues (tr +- sqrt(tr^2 - 4 det)) / 2, returned as (lambda1, lambda2)
/// with lambda1 >= lambda2. The discriminant is evaluated in the cancellation
/// free form (a - c)^2 + 4 |b|^2.
std::pair<double, double> eigenvalues(const Herm2& a);

EigenSystem eigensystem(const Herm2& a);

/// Number of eigenvalues > tol * max(1, |A|_F).
int inertia(const Herm2& a, double tol = kRankTol);

/// Number of eigenvalues with |lambda| > tol * max(1, |A|_F).
int rank_of(const Herm2& a, double tol = kRankTol);

enum class Definiteness { PositiveDefinite, NegativeDefinite, IndefiniteInvertible, Singular };

Definiteness definiteness(const Herm2& a, double tol = kRankTol);

/// +1 for positive definite or indefinite invertible, -1 for negative
/// definite. Throws SingularInput when rank < 2.
int eta(const Herm2& a, double tol = kRankTol);

/// Decomposition A = B . diag(lambda1, lambda2) . B with B a unitary
/// Hermitian involution (B = B* = B^-1).
struct BDBDecomposition {
    Herm2 b = Herm2::identity();
    double lambda1{0};
    double lambda2{0};
};

/// Constructs B as the reflection I - 2 w w* / (w* w), w = e1 - q1, where q1
/// is the unit eigenvector of lambda1 gauged to a real nonnegative first
/// component. The gauge makes <q1, e1> real, so the reflection swaps e1 and
/// q1 exactly and B diag(lambda1, lambda2) B reconstructs A. When |w| <= 1e-8
/// (A already diagonal with a >= c, or scalar) B = I.
BDBDecomposition decompose_bdb(const Herm2& a);

/// Parameter form of Hermitian involutions (X Hermitian, X^2 = I):
/// X = I, X = -I, or [[s d, a], [conj(a), -s d]] with d = sqrt(1 - |a|^2),
/// s = branch in {+1, -1}, |a| <= 1.
struct InvolutionParam {
    enum class Kind { ScalarPlus, ScalarMinus, General };
    Kind kind{Kind::ScalarPlus};
    int branch{+1};    // General only
    Complex a{0, 0};   // General only

    static InvolutionParam scalar(int sign);
    static InvolutionParam general(int branch, Complex a);
};

/// Throws ParamOutOfRange when |a| > 1 + 1e-12; values within that band are
/// normalized onto the unit circle. The result squares to I within 1e-12.
Herm2 involution_from_param(const InvolutionParam& p);

/// Requires |X^2 - I|_F <= 1e-9 (else NotAnInvolution). Roundtrip
/// involution_from_param(involution_to_param(X)) = X within 1e-9.
InvolutionParam involution_to_param(const Herm2& x);

} // namespace jtp
