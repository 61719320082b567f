#include "jtp/sampling.hpp"

#include <cmath>
#include <random>

namespace jtp {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// 53-bit uniform in [0, 1).
double uniform01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

// Box-Muller pair of independent standard normals.
std::pair<double, double> gauss_pair(std::mt19937_64& g) {
    double u1 = 1.0 - uniform01(g); // (0, 1], keeps log finite
    double u2 = uniform01(g);
    double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
}

} // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t salt) {
    return splitmix64(splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))) ^
                      splitmix64(salt + 0x6a09e667f3bcc909ULL));
}

Herm2 sample_hermitian(std::uint64_t seed, double scale) {
    std::mt19937_64 g(seed);
    auto [z1, z2] = gauss_pair(g);
    auto [z3, z4] = gauss_pair(g);
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return Herm2(scale * z1, Complex{z3, z4} * (scale * inv_sqrt2), scale * z2);
}

Unitary2 sample_unitary(std::uint64_t seed) {
    std::mt19937_64 g(seed);
    double t = kTwoPi * uniform01(g);
    double p = kTwoPi * uniform01(g);
    double u = kTwoPi * uniform01(g);
    double v = kTwoPi * uniform01(g);
    Complex eip = std::polar(1.0, p);
    Mat2 m;
    m.at(0, 0) = Complex{std::cos(t), 0} * std::polar(1.0, u);
    m.at(0, 1) = eip * std::sin(t) * std::polar(1.0, v);
    m.at(1, 0) = -std::conj(eip) * std::sin(t) * std::polar(1.0, u);
    m.at(1, 1) = Complex{std::cos(t), 0} * std::polar(1.0, v);
    return Unitary2(m);
}

Herm2 sample_involution(std::uint64_t seed) {
    std::mt19937_64 g(seed);
    int s1 = (g() & 1) ? +1 : -1;
    int s2 = (g() & 1) ? +1 : -1;
    Unitary2 v = sample_unitary(splitmix64(seed ^ 0xd1b54a32d192ed03ULL));
    return conjugate(v, Herm2::diag(s1, s2));
}

std::pair<Herm2, Herm2> sample_regular_pair(std::uint64_t seed, std::uint64_t index,
                                            double scale) {
    auto regular = [](const Herm2& x) {
        double nf = std::max(1.0, frobenius(x));
        return std::abs(determinant(x)) >= 1e-6 * nf * nf;
    };
    for (std::uint64_t attempt = 0;; ++attempt) {
        Herm2 a = sample_hermitian(derive_seed(seed, index, 2 * attempt), scale);
        Herm2 b = sample_hermitian(derive_seed(seed, index, 2 * attempt + 1), scale);
        if (regular(a) && regular(b) && regular(jordan_triple(a, b))) return {a, b};
    }
}

} // namespace jtp
