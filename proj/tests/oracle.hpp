#pragma once

// Test-only oracles: direct quadratic-time implementations used to check the
// fast paths. These depend only on Group::pairing, never on the transform
// kernels they certify.

#include <complex>
#include <random>
#include <vector>

#include "sbohr/group.hpp"

namespace oracle {

using sbohr::cplx;
using sbohr::Group;
using sbohr::GroupFunction;
using sbohr::GroupMeasure;
using sbohr::index_t;
using sbohr::Spectrum;

inline Spectrum dft_direct(const GroupFunction& f) {
    const Group& g = f.group;
    Spectrum s(g);
    for (index_t gamma = 0; gamma < g.order(); ++gamma) {
        cplx acc = 0.0;
        for (index_t x = 0; x < g.order(); ++x)
            acc += f.values[std::size_t(x)] * std::conj(g.pairing(gamma, x));
        s.coef[std::size_t(gamma)] = acc / double(g.order());
    }
    return s;
}

inline GroupFunction inverse_direct(const Spectrum& s) {
    const Group& g = s.group;
    GroupFunction f(g);
    for (index_t x = 0; x < g.order(); ++x) {
        cplx acc = 0.0;
        for (index_t gamma = 0; gamma < g.order(); ++gamma)
            acc += s.coef[std::size_t(gamma)] * g.pairing(gamma, x);
        f.values[std::size_t(x)] = acc;
    }
    return f;
}

inline Spectrum stieltjes_direct(const GroupMeasure& mu) {
    const Group& g = mu.group;
    Spectrum s(g);
    for (index_t gamma = 0; gamma < g.order(); ++gamma) {
        cplx acc = 0.0;
        for (index_t x = 0; x < g.order(); ++x)
            acc += mu.weights[std::size_t(x)] * std::conj(g.pairing(gamma, x));
        s.coef[std::size_t(gamma)] = acc;
    }
    return s;
}

inline GroupFunction convolve_direct(const GroupFunction& f, const GroupFunction& h) {
    const Group& g = f.group;
    GroupFunction out(g);
    for (index_t x = 0; x < g.order(); ++x) {
        cplx acc = 0.0;
        for (index_t y = 0; y < g.order(); ++y)
            acc += f.values[std::size_t(y)] * h.values[std::size_t(g.sub(x, y))];
        out.values[std::size_t(x)] = acc / double(g.order());
    }
    return out;
}

inline GroupFunction convolve_direct(const GroupFunction& f, const GroupMeasure& mu) {
    const Group& g = f.group;
    GroupFunction out(g);
    for (index_t x = 0; x < g.order(); ++x) {
        cplx acc = 0.0;
        for (index_t y = 0; y < g.order(); ++y)
            acc += f.values[std::size_t(g.sub(x, y))] * mu.weights[std::size_t(y)];
        out.values[std::size_t(x)] = acc;
    }
    return out;
}

/// sum_x f(x) w(x - x0) conj(gamma(x)) for every gamma: the local transform.
inline Spectrum local_dft_direct(const GroupFunction& f, const GroupMeasure& cutoff,
                                 index_t x0) {
    const Group& g = f.group;
    Spectrum s(g);
    for (index_t gamma = 0; gamma < g.order(); ++gamma) {
        cplx acc = 0.0;
        for (index_t x = 0; x < g.order(); ++x)
            acc += f.values[std::size_t(x)] * cutoff.weights[std::size_t(g.sub(x, x0))] *
                   std::conj(g.pairing(gamma, x));
        s.coef[std::size_t(gamma)] = acc;
    }
    return s;
}

inline double anorm_direct(const GroupFunction& f) {
    const Spectrum s = dft_direct(f);
    double a = 0.0;
    for (cplx c : s.coef) a += std::abs(c);
    return a;
}

// Deterministic random data helpers. Raw mt19937_64 bits are mapped to
// doubles directly so sequences are identical on every platform.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform() { return double(eng() >> 11) * 0x1.0p-53; }
    double symmetric() { return 2.0 * uniform() - 1.0; }
    cplx complex_unit_box() { return {symmetric(), symmetric()}; }
    std::int64_t below(std::int64_t n) { return std::int64_t(eng() % std::uint64_t(n)); }
};

inline GroupFunction random_function(const Group& g, Rng& rng) {
    GroupFunction f(g);
    for (auto& v : f.values) v = rng.complex_unit_box();
    return f;
}

inline std::vector<index_t> random_subset(const Group& g, double density, Rng& rng) {
    std::vector<index_t> set;
    for (index_t x = 0; x < g.order(); ++x)
        if (rng.uniform() < density) set.push_back(x);
    if (set.empty()) set.push_back(0);
    return set;
}

}  // namespace oracle
