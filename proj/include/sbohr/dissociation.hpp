#pragma once

// Dissociativity and its S-relative generalization. A set Lambda is
// S-dissociated when no nonzero sign pattern m in {-1,0,1}^Lambda lands
// m.Lambda inside S; vanilla dissociativity is S = {0}. Tests over the
// 3^|Lambda| pattern space use a meet-in-the-middle split, so the practical
// limit is the configured cap rather than the full enumeration cost.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sbohr/spectra.hpp"

namespace sbohr {

/// Sign pattern over an ordered character list; signs[i] weights members[i].
struct SignVector {
    std::vector<int> signs;

    int weight() const {
        int w = 0;
        for (int s : signs) w += (s != 0);
        return w;
    }
    bool is_zero() const { return weight() == 0; }

    index_t evaluate(const Group& g, const std::vector<index_t>& members) const {
        index_t v = 0;
        for (std::size_t i = 0; i < signs.size(); ++i) {
            if (signs[i] == 1) v = g.add(v, members[i]);
            else if (signs[i] == -1) v = g.sub(v, members[i]);
        }
        return v;
    }

    /// Flip so the first nonzero sign is +1 (m and -m witness equally).
    void canonicalize() {
        for (int s : signs) {
            if (s == 0) continue;
            if (s < 0)
                for (int& t : signs) t = -t;
            break;
        }
    }
};

/// All +-1/0 combinations of Lambda with the multiplicity of each target.
struct SpanSet {
    Group group;
    std::unordered_map<index_t, std::int64_t> multiplicity;

    bool contains(index_t gamma) const { return multiplicity.count(gamma) != 0; }
    std::vector<index_t> sorted_values() const {
        std::vector<index_t> v;
        v.reserve(multiplicity.size());
        for (const auto& [k, m] : multiplicity) v.push_back(k);
        std::sort(v.begin(), v.end());
        return v;
    }
};

namespace detail {

inline void check_cap(std::size_t n, int cap, const char* what) {
    if (int(n) > cap)
        throw size_error(std::string(what) + ": set size " + std::to_string(n) +
                         " exceeds cap " + std::to_string(cap));
}

/// Enumerates all sign patterns of `members`, calling fn(value, weight, code)
/// where code encodes the pattern base 3 (digit i: 0 -> 0, 1 -> +1, 2 -> -1).
template <typename Fn>
void for_each_pattern(const Group& g, const std::vector<index_t>& members, Fn&& fn) {
    const std::size_t k = members.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        index_t v = 0;
        int w = 0;
        std::uint64_t c = code;
        for (std::size_t i = 0; i < k; ++i) {
            const int d = int(c % 3);
            c /= 3;
            if (d == 1) {
                v = g.add(v, members[i]);
                ++w;
            } else if (d == 2) {
                v = g.sub(v, members[i]);
                ++w;
            }
        }
        fn(v, w, code);
    }
}

inline SignVector decode_trits(std::uint64_t code, std::size_t k) {
    SignVector m;
    m.signs.resize(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const int d = int(code % 3);
        code /= 3;
        m.signs[i] = (d == 0) ? 0 : (d == 1 ? 1 : -1);
    }
    return m;
}

struct HalfEntry {
    int weight = 1 << 30;
    std::uint64_t trits = 0;
};

/// value -> lightest pattern of the front half reaching it.
inline std::unordered_map<index_t, HalfEntry> half_map(const Group& g,
                                                       const std::vector<index_t>& half) {
    std::unordered_map<index_t, HalfEntry> map;
    for_each_pattern(g, half, [&](index_t v, int w, std::uint64_t code) {
        auto& e = map[v];
        if (w < e.weight) e = {w, code};
    });
    return map;
}

}  // namespace detail

struct DissociationResult {
    bool dissociated = true;
    std::optional<SignVector> witness;  ///< minimal-|m| violation when not dissociated
};

/// True iff no nonzero pattern lands in S. S must be symmetric and contain 0.
inline DissociationResult is_s_dissociated(const CharacterSet& lambda, const CharacterSet& s_set) {
    const Group& g = lambda.group();
    if (!s_set.contains(0)) throw parse_error("S must contain the trivial character");
    if (!s_set.is_symmetric()) throw parse_error("S must be symmetric");
    detail::check_cap(lambda.size(), constants().dissociation_cap, "is_s_dissociated");

    const auto& mem = lambda.members();
    const std::size_t k = mem.size();
    const std::size_t ka = k / 2;
    std::vector<index_t> front(mem.begin(), mem.begin() + ka);
    std::vector<index_t> back(mem.begin() + ka, mem.end());
    auto frontMap = detail::half_map(g, front);

    // nonzero front pattern reaching 0-relative targets is handled by the
    // combined scan below; track the best split m = (m1, m2).
    int bestW = 1 << 30;
    std::uint64_t bestFront = 0, bestBack = 0;
    detail::for_each_pattern(g, back, [&](index_t v2, int w2, std::uint64_t code2) {
        for (index_t s : s_set.members()) {
            const index_t target = g.sub(s, v2);  // need m1.front = s - m2.back
            auto it = frontMap.find(target);
            if (it == frontMap.end()) continue;
            const int w1 = it->second.weight;
            if (w1 + w2 == 0) continue;  // the all-zero pattern lands at 0 in S by design
            if (w1 + w2 < bestW) {
                bestW = w1 + w2;
                bestFront = it->second.trits;
                bestBack = code2;
            }
        }
    });

    // the lightest nonzero front-only pattern reaching some s was missed when
    // the stored entry for that value is the zero pattern; rescan front alone
    detail::for_each_pattern(g, front, [&](index_t v1, int w1, std::uint64_t code1) {
        if (w1 == 0 || w1 >= bestW) return;
        if (s_set.contains(v1)) {
            bestW = w1;
            bestFront = code1;
            bestBack = 0;
        }
    });

    DissociationResult r;
    if (bestW < (1 << 30)) {
        r.dissociated = false;
        SignVector m1 = detail::decode_trits(bestFront, ka);
        SignVector m2 = detail::decode_trits(bestBack, k - ka);
        SignVector m;
        m.signs = m1.signs;
        m.signs.insert(m.signs.end(), m2.signs.begin(), m2.signs.end());
        m.canonicalize();
        r.witness = std::move(m);
    }
    return r;
}

inline DissociationResult is_dissociated(const CharacterSet& lambda) {
    return is_s_dissociated(lambda, CharacterSet::zero_only(lambda.group()));
}

/// Full span with multiplicities. Requires 3^|Lambda| within the cap.
inline SpanSet span(const CharacterSet& lambda) {
    detail::check_cap(lambda.size(), constants().dissociation_cap, "span");
    double cost = 1.0;
    for (std::size_t i = 0; i < lambda.size(); ++i) cost *= 3.0;
    if (cost > double(constants().span_check_budget))
        throw size_error("span enumeration over budget");
    SpanSet out{lambda.group(), {}};
    out.multiplicity[0] = 1;
    for (index_t lam : lambda.members()) {
        std::unordered_map<index_t, std::int64_t> next;
        for (const auto& [v, c] : out.multiplicity) {
            next[v] += c;
            next[out.group.add(v, lam)] += c;
            next[out.group.sub(v, lam)] += c;
        }
        out.multiplicity = std::move(next);
    }
    return out;
}

/// |{ m : |m| = r, m.Lambda = gamma }|; at most 2^r when Lambda is dissociated
/// (Rider), which is re-asserted whenever a count lands above that line.
inline std::int64_t rider_count(const CharacterSet& lambda, index_t gamma, int r) {
    detail::check_cap(lambda.size(), constants().rider_cap, "rider_count");
    std::int64_t count = 0;
    detail::for_each_pattern(lambda.group(), lambda.members(),
                             [&](index_t v, int w, std::uint64_t) {
                                 if (w == r && v == gamma) ++count;
                             });
    if (count > (std::int64_t(1) << std::min(r, 62)) && is_dissociated(lambda).dissociated)
        throw verification_error("Rider bound violated for a dissociated set");
    return count;
}

/// One pass over the pattern space: value -> counts indexed by weight r.
inline std::unordered_map<index_t, std::vector<std::int64_t>> rider_counts_all(
    const CharacterSet& lambda) {
    detail::check_cap(lambda.size(), constants().rider_cap, "rider_counts_all");
    std::unordered_map<index_t, std::vector<std::int64_t>> table;
    const std::size_t k = lambda.size();
    detail::for_each_pattern(lambda.group(), lambda.members(),
                             [&](index_t v, int w, std::uint64_t) {
                                 auto& row = table[v];
                                 if (row.empty()) row.assign(k + 1, 0);
                                 ++row[std::size_t(w)];
                             });
    return table;
}

struct GreedyCoverOptions {
    int max_size = -1;  ///< stop growing past this size; -1 means the hard cap only
};

struct GreedyCoverResult {
    CharacterSet lambda;
    bool budget_hit = false;  ///< growth stopped by max_size before the scan finished
};

/// Greedy maximal S-dissociated subset of gamma_set, scanned in the set's
/// stored order. Every rejected character already lies in <Lambda> + S at the
/// moment of rejection and stays there, so one pass is maximal.
inline GreedyCoverResult max_s_dissociated_subset(const CharacterSet& gamma_set,
                                                  const CharacterSet& s_set,
                                                  GreedyCoverOptions opt = {}) {
    const Group& g = gamma_set.group();
    if (!s_set.contains(0)) throw parse_error("S must contain the trivial character");
    if (!s_set.is_symmetric()) throw parse_error("S must be symmetric");

    std::vector<index_t> chosen;
    std::unordered_set<index_t> spanValues = {0};
    bool budget_hit = false;
    for (index_t gamma : gamma_set.members()) {
        // candidate fails iff gamma + v lies in S for some v in <Lambda>
        bool clash = false;
        for (index_t v : spanValues) {
            if (s_set.contains(g.add(gamma, v))) {
                clash = true;
                break;
            }
        }
        if (clash) continue;
        if (opt.max_size >= 0 && int(chosen.size()) >= opt.max_size) {
            budget_hit = true;
            break;
        }
        detail::check_cap(chosen.size() + 1, constants().dissociation_cap,
                          "max_s_dissociated_subset");
        chosen.push_back(gamma);
        std::unordered_set<index_t> next;
        next.reserve(spanValues.size() * 3);
        for (index_t v : spanValues) {
            next.insert(v);
            next.insert(g.add(v, gamma));
            next.insert(g.sub(v, gamma));
        }
        spanValues = std::move(next);
    }
    return {CharacterSet(g, std::move(chosen)), budget_hit};
}

/// Checks gamma_set against <Lambda> + S by enumeration. Throws size_error
/// when 3^|Lambda| * |S| would exceed the configured budget.
inline bool covers(const CharacterSet& gamma_set, const CharacterSet& lambda,
                   const CharacterSet& s_set) {
    const Group& g = gamma_set.group();
    double cost = double(std::max<std::size_t>(s_set.size(), 1));
    for (std::size_t i = 0; i < lambda.size(); ++i) cost *= 3.0;
    if (cost > double(constants().span_check_budget))
        throw size_error("cover check over enumeration budget");
    SpanSet sp = span(lambda);
    for (index_t gamma : gamma_set.members()) {
        bool inside = false;
        for (index_t s : s_set.members()) {
            if (sp.contains(g.sub(gamma, s))) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

/// Spec'd entry point: greedy subset plus the asserted containment check.
inline GreedyCoverResult max_dissociated_subset(const CharacterSet& gamma_set,
                                                const CharacterSet& s_set,
                                                GreedyCoverOptions opt = {}) {
    GreedyCoverResult r = max_s_dissociated_subset(gamma_set, s_set, opt);
    if (!r.budget_hit && !covers(gamma_set, r.lambda, s_set))
        throw verification_error("greedy maximal subset failed to cover its source set");
    return r;
}

}  // namespace sbohr
