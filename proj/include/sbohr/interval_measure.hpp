#pragma once

// Atomic signed measures on [-1,1] with exact moment evaluation, and the
// moment-cancelling odd measure tau_{2l}: moment(1) = 1, every other moment
// up to 2l vanishes, total variation at most 2(2l-1), and |moment(k)| decays
// like 2^{1-k}. Mixing Riesz products p_{t omega} against tau_{2l} kills the
// low-order spectral terms, which is what drives the auxiliary measures.

#include <cmath>
#include <numbers>
#include <vector>

#include "sbohr/config.hpp"

namespace sbohr {

struct IntervalMeasure {
    struct Atom {
        double node;    ///< t in [-1,1]
        double weight;  ///< real, signed
    };
    std::vector<Atom> atoms;

    static IntervalMeasure point(double t, double w = 1.0) { return {{{t, w}}}; }

    double moment(int k) const {
        double s = 0.0;
        for (const Atom& a : atoms) s += a.weight * std::pow(a.node, k);
        return s;
    }
    double norm() const {
        double s = 0.0;
        for (const Atom& a : atoms) s += std::abs(a.weight);
        return s;
    }
};

namespace detail {

/// Dense solve by Gaussian elimination with partial pivoting; the systems
/// here are l x l with l <= 16 and cosine-matrix conditioning near 1.
inline std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                       std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        if (a[col][col] == 0.0) throw verification_error("singular moment system");
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t r = n; r-- > 0;) {
        double s = b[r];
        for (std::size_t c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return x;
}

}  // namespace detail

/// The odd measure tau_{2l} on [-1,1]. Atoms sit at +-s_j/2 where the s_j
/// are the positive extrema of the Chebyshev polynomial T_{2l-1}; the weights
/// solve the cosine-moment system
///
///   sum_j c_j cos((2i+1) theta_j) = (-1)^i (2i+1),  i = 0..l-1,
///
/// which is the power-moment system  sum_j c_j s_j^{2k-1} = [k == 1]  written
/// in the odd-harmonic basis. Antisymmetry makes every even moment vanish
/// identically; the remaining contract clauses are re-verified before return.
inline IntervalMeasure make_tau(int l) {
    if (l < 2 || l > 16) throw size_error("make_tau requires 2 <= l <= 16");
    const int n = 2 * l - 1;
    const std::size_t nl = std::size_t(l);
    std::vector<double> theta(nl), s(nl);
    for (std::size_t j = 0; j < nl; ++j) {
        theta[j] = double(j) * std::numbers::pi_v<double> / double(n);
        s[j] = std::cos(theta[j]);
    }
    std::vector<std::vector<double>> m(nl, std::vector<double>(nl));
    std::vector<double> rhs(nl);
    for (std::size_t i = 0; i < nl; ++i) {
        for (std::size_t j = 0; j < nl; ++j)
            m[i][j] = std::cos(double(2 * i + 1) * theta[j]);
        rhs[i] = (i % 2 == 0 ? 1.0 : -1.0) * double(2 * i + 1);
    }
    const std::vector<double> c = detail::solve_dense(std::move(m), std::move(rhs));

    IntervalMeasure tau;
    tau.atoms.reserve(2 * nl);
    for (std::size_t j = 0; j < nl; ++j) {
        tau.atoms.push_back({s[j] / 2.0, c[j]});
        tau.atoms.push_back({-s[j] / 2.0, -c[j]});
    }

    // contract of the construction; a violation is a bug, not bad input
    if (std::abs(tau.moment(1) - 1.0) > 1e-9)
        throw verification_error("tau: first moment is not 1");
    for (int k = 0; k <= 2 * l; ++k) {
        if (k == 1) continue;
        if (std::abs(tau.moment(k)) > 1e-9)
            throw verification_error("tau: moment " + std::to_string(k) + " does not vanish");
    }
    if (tau.norm() > 2.0 * double(n) + 1e-9)
        throw verification_error("tau: total variation exceeds 2(2l-1)");
    for (int k = 0; k <= 4 * l; ++k) {
        if (std::abs(tau.moment(k)) > std::pow(2.0, 1 - k) + 1e-9)
            throw verification_error("tau: moment decay 2^{1-k} fails at k = " +
                                     std::to_string(k));
    }
    return tau;
}

}  // namespace sbohr
