#include "jtp/scalar_maps.hpp"

#include <cmath>

#include "jtp/errors.hpp"

namespace jtp {

MultiplicativeModel MultiplicativeModel::zero(MultDomain d) {
    return MultiplicativeModel{MultVariant::Zero, d, 0, +1};
}
MultiplicativeModel MultiplicativeModel::one(MultDomain d) {
    return MultiplicativeModel{MultVariant::One, d, 0, +1};
}
MultiplicativeModel MultiplicativeModel::indicator(MultDomain d) {
    return MultiplicativeModel{MultVariant::Indicator, d, 0, +1};
}
MultiplicativeModel MultiplicativeModel::power(MultDomain d, double p, int neg_sign) {
    if (p == 0.0) throw DomainError("Power model needs a nonzero exponent; use One instead");
    if (!std::isfinite(p)) throw DomainError("Power exponent must be finite");
    if (neg_sign != 1 && neg_sign != -1) throw DomainError("neg_sign must be +-1");
    if (d == MultDomain::NonNegReals) neg_sign = +1;
    return MultiplicativeModel{MultVariant::Power, d, p, neg_sign};
}

double eval_mult(const MultiplicativeModel& m, double x) {
    if (!std::isfinite(x)) throw DomainError("argument must be finite");
    if (m.domain == MultDomain::NonNegReals) {
        if (x < 0) throw DomainError("model domain is [0, inf)");
    } else {
        if (x == 0) throw DomainError("model domain excludes 0");
    }
    double sign = 1.0;
    double ax = x;
    if (x < 0) {
        sign = static_cast<double>(m.neg_sign);
        ax = -x;
    }
    switch (m.variant) {
        case MultVariant::Zero: return 0.0;
        case MultVariant::One: return sign;
        case MultVariant::Indicator: return ax == 0.0 ? 0.0 : sign;
        case MultVariant::Power: return ax == 0.0 ? 0.0 : sign * std::pow(ax, m.p);
    }
    throw DomainError("unreachable model variant");
}

EtaTable::EtaTable(int e0, int e1, int e2) : at{e0, e1, e2} {
    for (int v : at)
        if (v != 1 && v != -1) throw DomainError("eta table values must be +-1");
}

int EtaTable::operator()(int inertia_value) const {
    if (inertia_value < 0 || inertia_value > 2)
        throw DomainError("inertia value must be 0, 1 or 2");
    return at[static_cast<std::size_t>(inertia_value)];
}

ScalarJtpHom::ScalarJtpHom(MultiplicativeModel psi_, EtaTable eta_)
    : psi(psi_), eta_table(eta_) {
    if (psi.domain != MultDomain::NonNegReals)
        throw DomainError("scalar map psi must live on NonNegReals");
}

double eval_scalar_hom(const ScalarJtpHom& h, const Herm2& a) {
    return eval_mult(h.psi, std::abs(determinant(a))) * h.eta_table(inertia(a));
}

FeCheckResult fe_check(const MultiplicativeModel& gamma, double x, double tol) {
    if (!(x > 0)) throw DomainError("fe_check requires x > 0");
    double arg = (x - 1.0 + std::sqrt(2.0 * x * x + 2.0)) / (x + 1.0);
    double lhs = eval_mult(gamma, arg);
    double g = eval_mult(gamma, x);
    double rhs = (g - 1.0 + std::sqrt(2.0 * g * g + 2.0)) / (g + 1.0);
    FeCheckResult r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.holds = std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(rhs));
    return r;
}

PowerFit fit_power_exponent(const std::vector<std::pair<double, double>>& samples, double tol) {
    if (samples.size() < 2) throw DomainError("need at least two samples");
    bool distinct = false;
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].first != samples[0].first) distinct = true;
    if (!distinct) throw DomainError("need samples at two distinct arguments");

    bool all_one = true;
    for (const auto& [x, f] : samples) {
        if (!(x > 0)) throw DomainError("sample arguments must be positive");
        if (f <= 0) throw NonPositiveValue("power fit needs positive sample values");
        if (std::abs(f - 1.0) > tol) all_one = false;
    }
    PowerFit fit;
    if (all_one) {
        fit.constant_one = true;
        return fit;
    }
    double sxy = 0, sxx = 0;
    for (const auto& [x, f] : samples) {
        double lx = std::log(x);
        sxy += lx * std::log(f);
        sxx += lx * lx;
    }
    if (sxx == 0) throw DomainError("samples do not determine an exponent");
    fit.p = sxy / sxx;
    for (const auto& [x, f] : samples)
        fit.residual = std::max(fit.residual, std::abs(std::log(f) - fit.p * std::log(x)));
    return fit;
}

} // namespace jtp
