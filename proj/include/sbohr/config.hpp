#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sbohr {

/// Raised when an enumeration or group-size cap would be exceeded.
struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when user-facing input (group specs, files, flags) cannot be parsed.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a check that is guaranteed by construction fails; indicates a
/// bug or a misconfigured constant, never ordinary bad input.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised for degenerate inputs: zero functions where a ratio is needed,
/// Bohr widths that underflow the group scale, empty frequency sets.
struct degenerate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Every tunable knob in one place. The asymptotic statements this library
/// implements carry implicit absolute constants; the values below are the
/// concrete stand-ins, and every certification routine reports the measured
/// constant next to the ceiling it was checked against.
struct Constants {
    // numeric tolerances
    double eq_rel = 1e-9;    ///< global relative tolerance for equality-style checks
    double fft_tol = 1e-10;  ///< transform identities (roundtrip, Parseval, convolution)

    // enumeration caps
    std::int64_t group_order_cap = std::int64_t(1) << 24;
    int dissociation_cap = 20;               ///< |Lambda| limit for 3^k scans
    int rider_cap = 12;                       ///< |Lambda| limit for rider_count
    std::int64_t span_check_budget = 10000000;  ///< 3^|Lambda| * |S| budget for cover checks

    // Bohr regularity certification
    double c_regular = 0.01;    ///< probe range: |kappa| d <= c_regular
    double C_regular = 32.0;    ///< accept when |ratio - 1| <= C_regular |kappa| d
    int regular_grid = 64;      ///< candidate widths per regularity search
    int regular_probes = 33;    ///< signed kappa probes per candidate
    double C_smooth = 64.0;     ///< ||smoothed - plain cutoff|| <= C_smooth kappa d

    // measured-constant ceilings for the cover theorems
    double C_chang = 8.0;
    double C_ag = 8.0;
    double C_local = 16.0;

    // auxiliary measures
    double C_aux = 8.0;        ///< tv norm ceiling: C_aux (1 + log2 eta^-1)
    int nearly_rounds = 40;    ///< correction rounds; on-target defect <= 2^-rounds
    int lift_modulus = 4;      ///< Z/M fiber replacing S^1 in the lifted construction

    // iterative approximation
    double c_eta = 1.0 / 64;        ///< eta = c_eta eps^3 / A_f^2
    double c_increment = 1.0 / 64;  ///< per-round ledger increment constant
    double round_budget_factor = 4.0;
};

/// Process-wide constants. Mutated only at startup (CLI flag parsing) or at
/// the top of a test; all computation reads it.
inline Constants& constants() {
    static Constants c;
    return c;
}

}  // namespace sbohr
