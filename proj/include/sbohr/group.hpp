#pragma once

// Finite abelian groups as products of cyclic factors, together with exact
// Fourier analysis under the probability-Haar normalization:
//
//   integral of f      = (1/|G|) sum_x f(x)
//   fhat(gamma)        = (1/|G|) sum_x f(x) conj(gamma(x))
//   inversion          = f(x) = sum_gamma fhat(gamma) gamma(x)
//   measure mu         = weight per element, integral h dmu = sum_x h(x) w(x)
//
// The dual group is canonically isomorphic to the group itself, so elements
// and characters share one flat mixed-radix index space: the character with
// index g pairs with the element x as
//
//   gamma_g(x) = exp(2 pi i sum_j g_j x_j / N_j).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sbohr/config.hpp"
#include "sbohr/transform.hpp"

namespace sbohr {

using cplx = std::complex<double>;
using index_t = std::int64_t;  ///< flat index of an element or character

class Group {
public:
    enum class Kind { cyclic, boolean_cube, mixed };

    Group() = default;

    /// Builds Z/N_0 x Z/N_1 x ... from the list of cyclic orders.
    static Group make(std::vector<std::int64_t> factors) {
        if (factors.empty()) throw parse_error("group needs at least one cyclic factor");
        Group g;
        g.factors_ = std::move(factors);
        for (std::int64_t n : g.factors_) {
            if (n < 2) throw size_error("cyclic order must be >= 2, got " + std::to_string(n));
            if (g.order_ > constants().group_order_cap / n)
                throw size_error("group order exceeds configured cap");
            g.order_ *= n;
            g.lcm_ = std::lcm(g.lcm_, n);
        }
        g.strides_.resize(g.factors_.size());
        std::int64_t s = 1;
        for (std::size_t j = 0; j < g.factors_.size(); ++j) {
            g.strides_[j] = s;
            s *= g.factors_[j];
        }
        const bool all2 = std::all_of(g.factors_.begin(), g.factors_.end(),
                                      [](std::int64_t n) { return n == 2; });
        g.kind_ = all2 ? Kind::boolean_cube
                       : (g.factors_.size() == 1 ? Kind::cyclic : Kind::mixed);
        return g;
    }

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::int64_t order() const { return order_; }
    Kind kind() const { return kind_; }
    /// L = lcm of the factors; every pairing value is a 2 pi k / L rotation.
    std::int64_t valuation_lcm() const { return lcm_; }

    bool operator==(const Group& o) const { return factors_ == o.factors_; }
    bool operator!=(const Group& o) const { return !(*this == o); }

    index_t coord(index_t x, std::size_t j) const { return (x / strides_[j]) % factors_[j]; }

    std::vector<index_t> coords(index_t x) const {
        std::vector<index_t> c(factors_.size());
        for (std::size_t j = 0; j < factors_.size(); ++j) c[j] = coord(x, j);
        return c;
    }

    index_t from_coords(const std::vector<index_t>& c) const {
        index_t x = 0;
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            index_t r = ((c[j] % factors_[j]) + factors_[j]) % factors_[j];
            x += r * strides_[j];
        }
        return x;
    }

    index_t add(index_t a, index_t b) const {
        index_t x = 0;
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            index_t r = (coord(a, j) + coord(b, j)) % factors_[j];
            x += r * strides_[j];
        }
        return x;
    }

    index_t neg(index_t a) const {
        index_t x = 0;
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            index_t r = (factors_[j] - coord(a, j)) % factors_[j];
            x += r * strides_[j];
        }
        return x;
    }

    index_t sub(index_t a, index_t b) const { return add(a, neg(b)); }

    index_t scalar_mul(std::int64_t m, index_t a) const {
        index_t x = 0;
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            index_t r = ((m % factors_[j]) * coord(a, j) % factors_[j] + factors_[j]) % factors_[j];
            x += r * strides_[j];
        }
        return x;
    }

    std::int64_t element_order(index_t a) const {
        std::int64_t o = 1;
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            std::int64_t c = coord(a, j);
            if (c != 0) o = std::lcm(o, factors_[j] / std::gcd(factors_[j], c));
        }
        return o;
    }

    /// k in [0, L) with gamma(x) = e^{2 pi i k / L}. Exact integer arithmetic:
    /// each term g_j x_j (L/N_j) stays below 2^48 under the order cap.
    index_t pairing_num(index_t gamma, index_t x) const {
        index_t k = 0;
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            k = (k + coord(gamma, j) * coord(x, j) % lcm_ * (lcm_ / factors_[j])) % lcm_;
        }
        return k;
    }

    cplx pairing(index_t gamma, index_t x) const {
        return std::polar(1.0, detail::two_pi * double(pairing_num(gamma, x)) / double(lcm_));
    }

    /// ||gamma(x)|| = (1/2pi) inf_n |2 pi n + arg gamma(x)|, computed exactly
    /// as min(k, L-k)/L so that Bohr membership ties are deterministic.
    double valuation(index_t gamma, index_t x) const {
        index_t k = pairing_num(gamma, x);
        return double(std::min(k, lcm_ - k)) / double(lcm_);
    }

    /// |1 - gamma(x)| = 2 sin(pi k / L).
    double one_minus_pairing_abs(index_t gamma, index_t x) const {
        return 2.0 * std::abs(std::sin(std::numbers::pi_v<double> *
                                       double(pairing_num(gamma, x)) / double(lcm_)));
    }

    /// gamma(x) for every x, evaluated from per-factor root tables.
    std::vector<cplx> character_column(index_t gamma) const {
        std::vector<std::vector<cplx>> roots(factors_.size());
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            const std::int64_t n = factors_[j], gj = coord(gamma, j);
            roots[j].resize(n);
            for (std::int64_t t = 0; t < n; ++t)
                roots[j][t] = std::polar(1.0, detail::two_pi * double(gj * t % n) / double(n));
        }
        std::vector<cplx> col(order_);
        std::vector<index_t> digit(factors_.size(), 0);
        for (index_t x = 0; x < order_; ++x) {
            cplx v = 1.0;
            for (std::size_t t = 0; t < factors_.size(); ++t) v *= roots[t][digit[t]];
            col[x] = v;
            std::size_t j = 0;
            while (j < factors_.size() && ++digit[j] == factors_[j]) digit[j++] = 0;
        }
        return col;
    }

private:
    std::vector<std::int64_t> factors_, strides_;
    std::int64_t order_ = 1, lcm_ = 1;
    Kind kind_ = Kind::cyclic;
};

// ---------------------------------------------------------------------------
// value types

/// Complex-valued function on G; integration is against probability Haar.
struct GroupFunction {
    Group group;
    std::vector<cplx> values;

    GroupFunction() = default;
    explicit GroupFunction(Group g) : group(std::move(g)), values(group.order(), cplx(0.0)) {}
    GroupFunction(Group g, std::vector<cplx> v) : group(std::move(g)), values(std::move(v)) {
        if (index_t(values.size()) != group.order())
            throw parse_error("function value count does not match group order");
    }

    static GroupFunction constant(const Group& g, cplx c) {
        GroupFunction f(g);
        std::fill(f.values.begin(), f.values.end(), c);
        return f;
    }
    static GroupFunction indicator(const Group& g, const std::vector<index_t>& set) {
        GroupFunction f(g);
        for (index_t x : set) f.values.at(std::size_t(x)) = 1.0;
        return f;
    }
    static GroupFunction character(const Group& g, index_t gamma) {
        return GroupFunction(g, g.character_column(gamma));
    }

    bool is_zero() const {
        return std::all_of(values.begin(), values.end(),
                           [](cplx v) { return v == cplx(0.0); });
    }
};

/// Fourier data indexed by the dual (same flat index space as the group).
struct Spectrum {
    Group group;
    std::vector<cplx> coef;

    Spectrum() = default;
    explicit Spectrum(Group g) : group(std::move(g)), coef(group.order(), cplx(0.0)) {}
    Spectrum(Group g, std::vector<cplx> c) : group(std::move(g)), coef(std::move(c)) {
        if (index_t(coef.size()) != group.order())
            throw parse_error("coefficient count does not match dual order");
    }

    static Spectrum unit(const Group& g, index_t gamma, cplx c = 1.0) {
        Spectrum s(g);
        s.coef.at(std::size_t(gamma)) = c;
        return s;
    }
};

/// Signed complex measure as a weight per element: integral h dmu = sum h w.
struct GroupMeasure {
    Group group;
    std::vector<cplx> weights;

    GroupMeasure() = default;
    explicit GroupMeasure(Group g) : group(std::move(g)), weights(group.order(), cplx(0.0)) {}
    GroupMeasure(Group g, std::vector<cplx> w) : group(std::move(g)), weights(std::move(w)) {
        if (index_t(weights.size()) != group.order())
            throw parse_error("weight count does not match group order");
    }

    static GroupMeasure haar(const Group& g) {
        GroupMeasure m(g);
        std::fill(m.weights.begin(), m.weights.end(), cplx(1.0 / double(g.order())));
        return m;
    }
    static GroupMeasure point_mass(const Group& g, index_t x, cplx w = 1.0) {
        GroupMeasure m(g);
        m.weights.at(std::size_t(x)) = w;
        return m;
    }
    /// Uniform probability measure on a nonempty subset.
    static GroupMeasure uniform_on(const Group& g, const std::vector<index_t>& set) {
        if (set.empty()) throw degenerate_error("uniform measure on empty set");
        GroupMeasure m(g);
        const cplx w(1.0 / double(set.size()));
        for (index_t x : set) m.weights.at(std::size_t(x)) += w;
        return m;
    }

    cplx total_mass() const {
        cplx s = 0.0;
        for (cplx w : weights) s += w;
        return s;
    }
};

// ---------------------------------------------------------------------------
// transforms

inline Spectrum fourier(const GroupFunction& f) {
    std::vector<cplx> data = f.values;
    detail::dft_mixed_radix(f.group.factors(), data, /*inverse=*/false);
    const double scale = 1.0 / double(f.group.order());
    for (cplx& c : data) c *= scale;
    return Spectrum(f.group, std::move(data));
}

inline GroupFunction inverse(const Spectrum& s) {
    std::vector<cplx> data = s.coef;
    detail::dft_mixed_radix(s.group.factors(), data, /*inverse=*/true);
    return GroupFunction(s.group, std::move(data));
}

/// Fourier-Stieltjes transform: muhat(gamma) = sum_x w(x) conj(gamma(x)).
inline Spectrum stieltjes(const GroupMeasure& mu) {
    std::vector<cplx> data = mu.weights;
    detail::dft_mixed_radix(mu.group.factors(), data, /*inverse=*/false);
    return Spectrum(mu.group, std::move(data));
}

// ---------------------------------------------------------------------------
// convolution (transform multiplicativity holds for each overload)

namespace detail {
inline void require_same_group(const Group& a, const Group& b) {
    if (a != b) throw parse_error("group mismatch between operands");
}
}  // namespace detail

/// (f * g)(x) = (1/|G|) sum_y f(y) g(x - y)
inline GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
    detail::require_same_group(f.group, g.group);
    std::vector<cplx> a = f.values, b = g.values;
    detail::dft_mixed_radix(f.group.factors(), a, false);
    detail::dft_mixed_radix(f.group.factors(), b, false);
    const double scale = 1.0 / double(f.group.order()) / double(f.group.order());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i] * scale;
    detail::dft_mixed_radix(f.group.factors(), a, true);
    return GroupFunction(f.group, std::move(a));
}

/// (mu * nu)(x) = sum_y w_mu(y) w_nu(x - y)
inline GroupMeasure convolve(const GroupMeasure& mu, const GroupMeasure& nu) {
    detail::require_same_group(mu.group, nu.group);
    std::vector<cplx> a = mu.weights, b = nu.weights;
    detail::dft_mixed_radix(mu.group.factors(), a, false);
    detail::dft_mixed_radix(mu.group.factors(), b, false);
    const double scale = 1.0 / double(mu.group.order());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i] * scale;
    detail::dft_mixed_radix(mu.group.factors(), a, true);
    return GroupMeasure(mu.group, std::move(a));
}

/// (f * mu)(x) = sum_y f(x - y) w_mu(y); a probability mu preserves sup norms.
inline GroupFunction convolve(const GroupFunction& f, const GroupMeasure& mu) {
    detail::require_same_group(f.group, mu.group);
    std::vector<cplx> a = f.values, b = mu.weights;
    detail::dft_mixed_radix(f.group.factors(), a, false);
    detail::dft_mixed_radix(f.group.factors(), b, false);
    const double scale = 1.0 / double(f.group.order());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i] * scale;
    detail::dft_mixed_radix(f.group.factors(), a, true);
    return GroupFunction(f.group, std::move(a));
}

inline GroupFunction convolve(const GroupMeasure& mu, const GroupFunction& f) {
    return convolve(f, mu);
}

// ---------------------------------------------------------------------------
// norms

enum class NormKind { L1, L2, Linf, A };

inline double tv_norm(const GroupMeasure& mu) {
    double s = 0.0;
    for (cplx w : mu.weights) s += std::abs(w);
    return s;
}

inline double norm(const GroupFunction& f, NormKind kind) {
    switch (kind) {
        case NormKind::L1: {
            double s = 0.0;
            for (cplx v : f.values) s += std::abs(v);
            return s / double(f.group.order());
        }
        case NormKind::L2: {
            double s = 0.0;
            for (cplx v : f.values) s += std::norm(v);
            return std::sqrt(s / double(f.group.order()));
        }
        case NormKind::Linf: {
            double s = 0.0;
            for (cplx v : f.values) s = std::max(s, std::abs(v));
            return s;
        }
        case NormKind::A: {
            const Spectrum s = fourier(f);
            double a = 0.0;
            for (cplx c : s.coef) a += std::abs(c);
            return a;
        }
    }
    return 0.0;  // unreachable
}

inline double anorm(const Spectrum& s) {
    double a = 0.0;
    for (cplx c : s.coef) a += std::abs(c);
    return a;
}

/// A_f = ||f||_A / ||f||_inf, the quantity driving every bound in the covers
/// and iterations. At least 1 for nonzero f.
inline double af_ratio(const GroupFunction& f) {
    const double sup = norm(f, NormKind::Linf);
    if (sup == 0.0) throw degenerate_error("A_f ratio of the zero function");
    return norm(f, NormKind::A) / sup;
}

// ---------------------------------------------------------------------------
// translation

/// Recentered view: returns t -> f(y + t). Local analysis at a translate
/// y + B reduces to analysis of recenter(f, y) at B, because translation
/// only twists the local transform by a unimodular factor.
inline GroupFunction recenter(const GroupFunction& f, index_t y) {
    GroupFunction out(f.group);
    for (index_t t = 0; t < f.group.order(); ++t)
        out.values[std::size_t(t)] = f.values[std::size_t(f.group.add(y, t))];
    return out;
}

/// (y + mu): the measure mu composed with translation by y; weight of x
/// becomes the old weight of x - y.
inline GroupMeasure translate(const GroupMeasure& mu, index_t y) {
    GroupMeasure out(mu.group);
    for (index_t x = 0; x < mu.group.order(); ++x)
        out.weights[std::size_t(x)] = mu.weights[std::size_t(mu.group.sub(x, y))];
    return out;
}

}  // namespace sbohr
