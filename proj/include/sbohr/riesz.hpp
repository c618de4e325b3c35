#pragma once

// Riesz products and the auxiliary-measure constructions built from them.
//
// For hermitian weights omega with |omega| <= 1 the product
//
//   p_omega = prod_lambda ( 1 + (omega(l) l + conj(omega(l)) conj(l)) / 2 )
//           = prod_lambda ( 1 + Re(omega(l) l(x)) )
//
// is real and nonnegative with spectrum inside <Lambda>. On F_2^n with real
// weights this is the model product prod (1 + omega(l) l). Mixing the
// t-scaled products against an interval measure tau and correcting
// recursively yields measures that interpolate omega on Lambda with small
// norm and small Fourier leakage elsewhere.

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sbohr/dissociation.hpp"
#include "sbohr/interval_measure.hpp"

namespace sbohr {

/// Weights on an ordered Lambda; values on Lambda^{-1} are the conjugates.
struct HermitianWeights {
    CharacterSet lambda;
    std::vector<cplx> values;  ///< aligned with lambda.members()

    HermitianWeights() = default;
    HermitianWeights(CharacterSet lam, std::vector<cplx> vals)
        : lambda(std::move(lam)), values(std::move(vals)) {
        if (values.size() != lambda.size())
            throw parse_error("weight count does not match Lambda");
        for (cplx v : values)
            if (std::abs(v) > 1.0 + 1e-12) throw parse_error("|omega| must be at most 1");
    }

    static HermitianWeights ones(const CharacterSet& lam) {
        return HermitianWeights(lam, std::vector<cplx>(lam.size(), cplx(1.0)));
    }

    cplx value(std::size_t i) const { return values[i]; }
    double sup() const {
        double s = 0.0;
        for (cplx v : values) s = std::max(s, std::abs(v));
        return s;
    }
    HermitianWeights scaled(double t) const {
        HermitianWeights w = *this;
        for (cplx& v : w.values) v *= t;
        return w;
    }

    /// Hermitian consistency: where lambda^{-1} = lambda the two prescribed
    /// values omega(l) and conj(omega(l)) must agree, i.e. omega(l) is real.
    void require_hermitian() const {
        const Group& g = lambda.group();
        for (std::size_t i = 0; i < values.size(); ++i)
            if (g.element_order(lambda.members()[i]) <= 2 && values[i].imag() != 0.0)
                throw parse_error("omega must be real on characters of order <= 2");
    }
};

namespace detail {

inline std::vector<std::vector<cplx>> character_columns(const CharacterSet& lam) {
    std::vector<std::vector<cplx>> cols;
    cols.reserve(lam.size());
    for (index_t m : lam.members()) cols.push_back(lam.group().character_column(m));
    return cols;
}

/// prod_i (1 + Re(w_i * col_i(x))) over all x; the |w| <= 1 precondition is
/// the caller's.
inline GroupFunction riesz_eval(const Group& g, const std::vector<std::vector<cplx>>& cols,
                                const std::vector<cplx>& w) {
    GroupFunction p = GroupFunction::constant(g, 1.0);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        const cplx wi = w[i];
        for (index_t x = 0; x < g.order(); ++x) {
            const cplx lx = cols[i][std::size_t(x)];
            p.values[std::size_t(x)] *= 1.0 + (wi * lx).real();
        }
    }
    return p;
}

/// sum_i tau_i.weight * p_{tau_i.node * omega}; shares the column cache.
inline GroupFunction riesz_mixture(const Group& g, const std::vector<std::vector<cplx>>& cols,
                                   const HermitianWeights& omega, const IntervalMeasure& tau) {
    GroupFunction acc(g);
    std::vector<cplx> w(omega.values.size());
    for (const auto& atom : tau.atoms) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = omega.values[i] * atom.node;
        GroupFunction p = riesz_eval(g, cols, w);
        for (std::size_t x = 0; x < p.values.size(); ++x)
            acc.values[x] += atom.weight * p.values[x];
    }
    return acc;
}

/// fhat on the members of lam only, by direct summation against the columns.
inline std::vector<cplx> coefficients_on(const GroupFunction& f,
                                         const std::vector<std::vector<cplx>>& cols) {
    std::vector<cplx> out(cols.size(), cplx(0.0));
    const double scale = 1.0 / double(f.group.order());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        cplx acc = 0.0;
        for (std::size_t x = 0; x < f.values.size(); ++x)
            acc += f.values[x] * std::conj(cols[i][x]);
        out[i] = acc * scale;
    }
    return out;
}

}  // namespace detail

/// The Riesz product p_omega as a group function.
inline GroupFunction riesz_product(const HermitianWeights& omega) {
    omega.require_hermitian();
    auto cols = detail::character_columns(omega.lambda);
    return detail::riesz_eval(omega.lambda.group(), cols, omega.values);
}

// ---------------------------------------------------------------------------
// formal Fourier transforms

/// Coefficient bookkeeping for p = integral of p_{t omega} d tau(t): the
/// value at a sign pattern m is  moment(|m|) prod_{m_l != 0} omega(l^{m_l})/2,
/// and fiber sums over {m : m.Lambda = gamma} reproduce the true transform.
struct FormalTransform {
    CharacterSet lambda;
    HermitianWeights omega;
    IntervalMeasure tau;

    cplx value(const SignVector& m) const {
        if (m.signs.size() != lambda.size())
            throw parse_error("sign pattern length does not match Lambda");
        cplx prod = 1.0;
        for (std::size_t i = 0; i < m.signs.size(); ++i) {
            if (m.signs[i] == 1)
                prod *= omega.values[i] / 2.0;
            else if (m.signs[i] == -1)
                prod *= std::conj(omega.values[i]) / 2.0;
        }
        return tau.moment(m.weight()) * prod;
    }

    /// Sum of formal values over every pattern, grouped by m.Lambda.
    Spectrum realize() const {
        detail::check_cap(lambda.size(), constants().dissociation_cap, "formal realize");
        Spectrum s(lambda.group());
        const auto& mem = lambda.members();
        detail::for_each_pattern(lambda.group(), mem, [&](index_t v, int w, std::uint64_t code) {
            SignVector m = detail::decode_trits(code, mem.size());
            (void)w;
            s.coef[std::size_t(v)] += value(m);
        });
        return s;
    }
};

inline FormalTransform formal_transform(const CharacterSet& lambda,
                                        const HermitianWeights& omega,
                                        const IntervalMeasure& tau) {
    omega.require_hermitian();
    if (omega.lambda.members() != lambda.members())
        throw parse_error("omega is indexed by a different Lambda");
    return FormalTransform{lambda, omega, tau};
}

// ---------------------------------------------------------------------------
// auxiliary measures

namespace detail {
inline GroupMeasure density_to_measure(const GroupFunction& f) {
    GroupMeasure mu(f.group);
    const double scale = 1.0 / double(f.group.order());
    for (std::size_t i = 0; i < mu.weights.size(); ++i) mu.weights[i] = f.values[i] * scale;
    return mu;
}
}  // namespace detail

/// mu_eta = eta^{-1} p_{eta omega} on F_2^n with linearly independent Lambda:
/// interpolates omega exactly, has norm at most eta^{-1}, and leaks at most
/// eta off Lambda union {0}.
inline GroupMeasure primitive_aux(const HermitianWeights& omega, double eta) {
    if (!(eta > 0.0 && eta <= 1.0)) throw parse_error("eta must be in (0,1]");
    const Group& g = omega.lambda.group();
    if (g.kind() != Group::Kind::boolean_cube)
        throw parse_error("primitive auxiliary measure lives in the model setting F_2^n");
    for (cplx v : omega.values)
        if (v.imag() != 0.0) throw parse_error("model-mode weights must be real");
    if (!is_dissociated(omega.lambda).dissociated)
        throw parse_error("Lambda must be linearly independent");
    GroupFunction p = riesz_product(omega.scaled(eta));
    for (cplx& v : p.values) v /= eta;
    return detail::density_to_measure(p);
}

/// Mela's measure on F_2^n: mu = integral of p_{t omega} d tau_{2l}(t) with
/// l = max(2, ceil(log2(eta^{-1}) / 2)). Exact on Lambda, leakage <= eta off
/// it, norm <= ||tau_{2l}||.
inline GroupMeasure aux_measure_model(const HermitianWeights& omega, double eta) {
    if (!(eta > 0.0 && eta <= 1.0)) throw parse_error("eta must be in (0,1]");
    const Group& g = omega.lambda.group();
    if (g.kind() != Group::Kind::boolean_cube)
        throw parse_error("model auxiliary measure requires F_2^n");
    for (cplx v : omega.values)
        if (v.imag() != 0.0) throw parse_error("model-mode weights must be real");
    if (!is_dissociated(omega.lambda).dissociated)
        throw parse_error("Lambda must be linearly independent");
    const int l = std::max(2, int(std::ceil(0.5 * std::log2(1.0 / eta))));
    const IntervalMeasure tau = make_tau(l);
    auto cols = detail::character_columns(omega.lambda);
    GroupFunction mix = detail::riesz_mixture(g, cols, omega, tau);
    return detail::density_to_measure(mix);
}

struct NearlyAuxResult {
    GroupFunction f;                   ///< the interpolating function f_eta
    int l = 0;                         ///< tau index used
    std::vector<double> round_defect;  ///< sup on-target defect after each round
};

/// Geometric-correction recursion: interpolates hermitian omega on
/// Lambda union Lambda^{-1} within 2^{-rounds}, leaks at most eta elsewhere,
/// with L1 norm at most 4 ||tau_{2l}||. Requires every member of Lambda to
/// have order at least 3.
inline NearlyAuxResult nearly_aux(const HermitianWeights& omega, double eta) {
    if (!(eta > 0.0 && eta <= 1.0)) throw parse_error("eta must be in (0,1]");
    const Group& g = omega.lambda.group();
    for (index_t m : omega.lambda.members())
        if (g.element_order(m) < 3)
            throw parse_error("nearly_aux requires characters of order >= 3");
    if (!is_dissociated(omega.lambda).dissociated)
        throw parse_error("Lambda must be dissociated");

    // smallest l >= 2 with 2^{3-2l} <= eta, so each round leaks at most eta/2
    const int l = std::max(2, int(std::ceil(0.5 * (3.0 + std::log2(1.0 / eta)))));
    const IntervalMeasure tau = make_tau(l);
    auto cols = detail::character_columns(omega.lambda);

    NearlyAuxResult out;
    out.l = l;
    out.f = GroupFunction(g);
    HermitianWeights target = omega;
    std::vector<cplx> acc_on(omega.values.size(), cplx(0.0));  // fhat of the running sum on Lambda
    double scale = 1.0;                                        // 2^{-(k-1)}
    const int rounds = constants().nearly_rounds;
    for (int k = 0; k < rounds; ++k) {
        GroupFunction fk = detail::riesz_mixture(g, cols, target, tau);
        for (cplx& v : fk.values) v *= 2.0;  // f^{(k)} = 2 p
        for (std::size_t i = 0; i < out.f.values.size(); ++i)
            out.f.values[i] += scale * fk.values[i];

        const std::vector<cplx> fk_on = detail::coefficients_on(fk, cols);
        double defect = 0.0;
        std::vector<cplx> next(omega.values.size());
        for (std::size_t i = 0; i < next.size(); ++i) {
            acc_on[i] += scale * fk_on[i];
            next[i] = 2.0 * (target.values[i] - fk_on[i]);
            defect = std::max(defect, std::abs(acc_on[i] - omega.values[i]));
        }
        out.round_defect.push_back(defect);
        target.values = std::move(next);
        scale *= 0.5;
    }
    return out;
}

struct LiftedGroup {
    Group base;
    Group lifted;          ///< base x Z/M
    std::int64_t fiber;    ///< M
    index_t lift_element(index_t x, index_t z) const { return x + base.order() * z; }
    index_t lift_character(index_t gamma) const { return gamma + base.order(); }  ///< (gamma, 1)
};

inline LiftedGroup lift_group(const Group& g) {
    std::vector<std::int64_t> f = g.factors();
    const std::int64_t m = constants().lift_modulus;
    f.push_back(m);
    return LiftedGroup{g, Group::make(std::move(f)), m};
}

/// General auxiliary measure on any finite abelian G (Lambda dissociated,
/// |omega| <= 1, no hermitian constraint thanks to the lift): interpolates
/// omega on Lambda within the recursion tolerance, has norm O(1 + log2
/// eta^{-1}), and |muhat| <= eta off Lambda. Construction: lift to G x Z/M,
/// run the recursion on Lambda x {1} (which never meets its own inverse and
/// has no order-2 members), then push down by extracting the frequency-1
/// fiber component.
inline GroupMeasure aux_measure(const CharacterSet& lambda, const std::vector<cplx>& omega,
                                double eta) {
    if (!(eta > 0.0 && eta <= 1.0)) throw parse_error("eta must be in (0,1]");
    if (omega.size() != lambda.size()) throw parse_error("omega size mismatch");
    if (!is_dissociated(lambda).dissociated) throw parse_error("Lambda must be dissociated");

    const LiftedGroup lg = lift_group(lambda.group());
    std::vector<index_t> lifted_members;
    lifted_members.reserve(lambda.size());
    for (index_t m : lambda.members()) lifted_members.push_back(lg.lift_character(m));
    HermitianWeights lifted_omega(CharacterSet(lg.lifted, std::move(lifted_members)), omega);

    const NearlyAuxResult lifted = nearly_aux(lifted_omega, eta);

    // w(x) = (1/|G'|) sum_z f_eta(x, z) conj(z-component character), so that
    // muhat(gamma) = fhat_eta(gamma, 1) and ||mu|| <= ||f_eta||_{L1(G')}
    const Group& gp = lg.lifted;
    GroupMeasure mu(lg.base);
    const double scale = 1.0 / double(gp.order());
    for (index_t x = 0; x < lg.base.order(); ++x) {
        cplx acc = 0.0;
        for (index_t z = 0; z < lg.fiber; ++z) {
            const cplx zbar = std::polar(1.0, -detail::two_pi * double(z) / double(lg.fiber));
            acc += lifted.f.values[std::size_t(lg.lift_element(x, z))] * zbar;
        }
        mu.weights[std::size_t(x)] = acc * scale;
    }
    return mu;
}

/// Interpolation defect, off-target leakage and tv norm of a candidate
/// auxiliary measure; used by the CLI report and the test suites.
struct AuxReport {
    double on_defect = 0.0;    ///< max |muhat(l) - omega(l)| over Lambda
    double max_leakage = 0.0;  ///< max |muhat| off Lambda (and off 0 if requested)
    double tv = 0.0;
};

inline AuxReport aux_verification_report(const GroupMeasure& mu, const CharacterSet& lambda,
                                         const std::vector<cplx>& omega,
                                         bool exempt_zero = false) {
    const Spectrum s = stieltjes(mu);
    AuxReport r;
    r.tv = tv_norm(mu);
    for (std::size_t i = 0; i < lambda.size(); ++i)
        r.on_defect = std::max(
            r.on_defect, std::abs(s.coef[std::size_t(lambda.members()[i])] - omega[i]));
    for (index_t gamma = 0; gamma < mu.group.order(); ++gamma) {
        if (lambda.contains(gamma)) continue;
        if (exempt_zero && gamma == 0) continue;
        r.max_leakage = std::max(r.max_leakage, std::abs(s.coef[std::size_t(gamma)]));
    }
    return r;
}

}  // namespace sbohr
