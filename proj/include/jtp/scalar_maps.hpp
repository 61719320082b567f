#pragma once

#include <array>
#include <vector>

#include "jtp/herm2.hpp"

namespace jtp {

/// Multiplicative models f(xy) = f(x) f(y) on a real domain.
///
/// On NonNegReals:  Zero -> 0, One -> 1, Indicator -> [x != 0],
///                  Power{p} -> x^p for x > 0 and 0 at x = 0 (any sign of p).
/// On NonZeroReals: value at negative x is neg_sign * f(|x|); positive x as
///                  above. Indicator coincides with One on this domain.
enum class MultVariant { Zero, One, Indicator, Power };
enum class MultDomain { NonNegReals, NonZeroReals };

struct MultiplicativeModel {
    MultVariant variant{MultVariant::One};
    MultDomain domain{MultDomain::NonNegReals};
    double p{0};      // Power only, must be nonzero
    int neg_sign{+1}; // NonZeroReals only

    static MultiplicativeModel zero(MultDomain d);
    static MultiplicativeModel one(MultDomain d);
    static MultiplicativeModel indicator(MultDomain d);
    static MultiplicativeModel power(MultDomain d, double p, int neg_sign = +1);

    bool unital() const { return variant != MultVariant::Zero; }
};

/// Evaluates the model; throws DomainError when x is outside the domain.
double eval_mult(const MultiplicativeModel& m, double x);

/// Sign table indexed by inertia (number of positive eigenvalues) 0, 1, 2.
struct EtaTable {
    std::array<int, 3> at{+1, +1, +1};

    EtaTable() = default;
    EtaTable(int e0, int e1, int e2);
    int operator()(int inertia_value) const;
};

/// Scalar triple-product compatible map phi(A) = psi(|det A|) eta(inertia A).
/// psi must live on NonNegReals.
struct ScalarJtpHom {
    MultiplicativeModel psi = MultiplicativeModel::one(MultDomain::NonNegReals);
    EtaTable eta_table;

    ScalarJtpHom() = default;
    ScalarJtpHom(MultiplicativeModel psi_, EtaTable eta_);
};

double eval_scalar_hom(const ScalarJtpHom& h, const Herm2& a);

/// One probe of the degenerate-branch functional equation
///   gamma((x - 1 + sqrt(2 x^2 + 2)) / (x + 1))
///     = (gamma(x) - 1 + sqrt(2 gamma(x)^2 + 2)) / (gamma(x) + 1),
/// which the power maps gamma(x) = x^c satisfy exactly when c in {-1, 1}.
struct FeCheckResult {
    bool holds{false};
    double lhs{0};
    double rhs{0};
};

/// Requires x > 0 (DomainError otherwise). holds iff
/// |lhs - rhs| <= tol * max(1, |rhs|).
FeCheckResult fe_check(const MultiplicativeModel& gamma, double x, double tol = 1e-10);

/// Least squares exponent for f(x) = x^p through samples (x, f(x)), x > 0:
/// p = sum(log x log f) / sum(log x)^2, residual = max |log f - p log x|.
/// When every f(x) is 1 within tol the fit reports constant_one instead.
/// Requires at least two samples with distinct x; throws NonPositiveValue
/// when some f(x) <= 0.
struct PowerFit {
    bool constant_one{false};
    double p{0};
    double residual{0};
};

PowerFit fit_power_exponent(const std::vector<std::pair<double, double>>& samples,
                            double tol = 1e-9);

} // namespace jtp
