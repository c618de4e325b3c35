#pragma once

// Large-spectrum sets at the two threshold regimes, and their localized
// (cutoff-weighted) variants. Thresholds use ">= eps * ref" with ties
// included; members are ordered by descending coefficient magnitude with
// enumeration index as the tiebreak, so downstream greedy algorithms are
// reproducible.

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "sbohr/group.hpp"

namespace sbohr {

struct SpectrumThreshold {
    enum class Kind { l1, linf, local_l1, local_linf };
    Kind kind = Kind::linf;
    double epsilon = 1.0;

    SpectrumThreshold(Kind k, double eps) : kind(k), epsilon(eps) {
        if (!(eps > 0.0 && eps <= 1.0)) throw parse_error("threshold epsilon must be in (0,1]");
    }
};

/// Duplicate-free ordered set of characters.
class CharacterSet {
public:
    CharacterSet() = default;
    CharacterSet(Group g, std::vector<index_t> members) : group_(std::move(g)) {
        members_.reserve(members.size());
        for (index_t m : members)
            if (lookup_.insert(m).second) members_.push_back(m);
    }

    static CharacterSet empty_set(const Group& g) { return CharacterSet(g, {}); }
    static CharacterSet zero_only(const Group& g) { return CharacterSet(g, {0}); }

    const Group& group() const { return group_; }
    const std::vector<index_t>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(index_t gamma) const { return lookup_.count(gamma) != 0; }
    bool is_symmetric() const {
        for (index_t m : members_)
            if (!contains(group_.neg(m))) return false;
        return true;
    }

private:
    Group group_;
    std::vector<index_t> members_;
    std::unordered_set<index_t> lookup_;
};

namespace detail {
inline std::vector<index_t> threshold_filter(const Spectrum& s, double cut) {
    // ">=" with exact ties included; the relative guard band keeps ties inside
    // despite transform roundoff
    const double guarded = cut - 1e-12 * (1.0 + cut);
    std::vector<index_t> hits;
    for (index_t gamma = 0; gamma < s.group.order(); ++gamma)
        if (std::abs(s.coef[std::size_t(gamma)]) >= guarded) hits.push_back(gamma);
    std::stable_sort(hits.begin(), hits.end(), [&](index_t a, index_t b) {
        const double ma = std::abs(s.coef[std::size_t(a)]);
        const double mb = std::abs(s.coef[std::size_t(b)]);
        if (ma != mb) return ma > mb;
        return a < b;
    });
    return hits;
}
}  // namespace detail

/// { gamma : |fhat(gamma)| >= eps * ref } with ref = ||f||_1 (Bessel regime)
/// or ||f||_inf (A(G) regime). The corresponding cardinality inequality is
/// checked on every call; it is exact, so a failure means a transform bug.
inline CharacterSet large_spectrum(const GroupFunction& f, const SpectrumThreshold& t) {
    if (f.is_zero()) throw degenerate_error("large spectrum of the zero function");
    const Spectrum s = fourier(f);
    const bool l1_kind = t.kind == SpectrumThreshold::Kind::l1;
    const double ref = l1_kind ? norm(f, NormKind::L1) : norm(f, NormKind::Linf);
    auto hits = detail::threshold_filter(s, t.epsilon * ref);

    if (l1_kind) {
        const double lf = norm(f, NormKind::L2) / norm(f, NormKind::L1);
        if (double(hits.size()) > lf * lf / (t.epsilon * t.epsilon) * (1.0 + 1e-12))
            throw verification_error("Bessel cardinality bound violated");
    } else {
        const double af = anorm(s) / ref;
        if (double(hits.size()) > af / t.epsilon * (1.0 + 1e-12))
            throw verification_error("A(G) cardinality bound violated");
    }
    return CharacterSet(f.group, std::move(hits));
}

/// Transform of the weighted restriction f d(beta): the local transform at
/// translate 0. Plain fast transform of the pointwise product of f with the
/// cutoff weights.
inline Spectrum local_transform(const GroupFunction& f, const GroupMeasure& cutoff) {
    detail::require_same_group(f.group, cutoff.group);
    GroupMeasure fw(f.group);
    for (std::size_t i = 0; i < fw.weights.size(); ++i)
        fw.weights[i] = f.values[i] * cutoff.weights[i];
    return stieltjes(fw);
}

inline void require_probability(const GroupMeasure& cutoff) {
    double sum = 0.0;
    for (cplx w : cutoff.weights) {
        if (std::abs(w.imag()) > 1e-9 || w.real() < -1e-9)
            throw parse_error("cutoff is not a probability measure");
        sum += w.real();
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw parse_error("cutoff weights do not sum to 1");
}

/// { gamma : |(f d beta)^(gamma)| >= eps * reference_value }.
inline CharacterSet local_large_spectrum(const GroupFunction& f, const GroupMeasure& cutoff,
                                         const SpectrumThreshold& t, double reference_value) {
    require_probability(cutoff);
    if (reference_value <= 0.0) throw parse_error("reference value must be positive");
    const Spectrum s = local_transform(f, cutoff);
    return CharacterSet(f.group, detail::threshold_filter(s, t.epsilon * reference_value));
}

}  // namespace sbohr
