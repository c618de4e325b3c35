#pragma once

// Linear algebra over GF(2) for the model setting F_2^n, where flat indices
// are bitmasks and characters pair by dot-product parity.

#include <cstdint>
#include <vector>

#include "sbohr/group.hpp"

namespace sbohr::gf2 {

using mask = std::uint32_t;
inline constexpr int max_bits = 32;

inline int parity(mask v) { return __builtin_parity(v); }

/// Reduced row echelon basis: one row per pivot bit, pivot bits exclusive to
/// their rows, rows listed by descending pivot.
inline std::vector<mask> echelon_basis(const std::vector<mask>& rows) {
    mask table[max_bits] = {};
    for (mask r : rows) {
        for (int j = max_bits - 1; j >= 0 && r; --j) {
            if (!(r >> j & 1)) continue;
            if (!table[j]) {
                table[j] = r;
                break;
            }
            r ^= table[j];
        }
    }
    for (int j = 0; j < max_bits; ++j)
        if (table[j])
            for (int i = j + 1; i < max_bits; ++i)
                if (table[i] && (table[i] >> j & 1)) table[i] ^= table[j];
    std::vector<mask> basis;
    for (int j = max_bits - 1; j >= 0; --j)
        if (table[j]) basis.push_back(table[j]);
    return basis;
}

/// Canonical coset representative: clears every pivot bit.
inline mask reduce(const std::vector<mask>& basis, mask v) {
    for (mask b : basis) {
        const int p = max_bits - 1 - __builtin_clz(b);  // pivot = highest set bit
        if (v >> p & 1) v ^= b;
    }
    return v;
}

inline bool in_span(const std::vector<mask>& basis, mask v) { return reduce(basis, v) == 0; }

inline int rank(const std::vector<mask>& rows) { return int(echelon_basis(rows).size()); }

/// All 2^rank elements of the span.
inline std::vector<index_t> span_elements(const std::vector<mask>& basis) {
    std::vector<index_t> out = {0};
    for (mask b : basis) {
        const std::size_t sz = out.size();
        for (std::size_t i = 0; i < sz; ++i) out.push_back(index_t(mask(out[i]) ^ b));
    }
    return out;
}

/// Basis of { x in F_2^n : parity(g & x) = 0 for all g in rows }.
inline std::vector<mask> annihilator_basis(const std::vector<mask>& rows, int n) {
    const std::vector<mask> basis = echelon_basis(rows);
    mask pivots = 0;
    for (mask b : basis) pivots |= mask(1) << (max_bits - 1 - __builtin_clz(b));
    std::vector<mask> null_basis;
    for (int j = 0; j < n; ++j) {
        const mask e = mask(1) << j;
        if (pivots & e) continue;
        // fix pivot coordinates so every basis row pairs evenly; pivot bits
        // are exclusive to their rows in reduced form, so fixes are independent
        mask v = e;
        for (mask b : basis)
            if (parity(b & v)) v ^= mask(1) << (max_bits - 1 - __builtin_clz(b));
        null_basis.push_back(v);
    }
    return null_basis;
}

}  // namespace sbohr::gf2
