#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "urnmix/oracle.hpp"
#include "urnmix/shuffle.hpp"
#include "urnmix/spectral.hpp"
#include "urnmix/zonal.hpp"

namespace urnmix::reports {

/// 17 significant digits, C locale, "." decimal point: parses back to the
/// identical double.
std::string format_double(double value);

/// Spherical table as CSV: one row per spectral component k, one _re/_im
/// column pair per occupancy type l.
void write_zonal_table_csv(std::ostream& out, const ZonalTable& table);

/// Spectral coefficients f_k, one row per composition.
void write_fourier_csv(std::ostream& out, ShuffleKind kind, int urns, int balls,
                       std::size_t max_types = kDefaultTableCap);

/// The exact distribution after `steps` moves, one row per occupancy type.
void write_distribution_csv(std::ostream& out, ShuffleKind kind, int steps, int urns,
                            int balls, std::size_t max_types = kDefaultTableCap);

struct TvCurveOptions {
    ShuffleKind shuffle = ShuffleKind::AnyOther;
    int urns = 0;
    int balls = 0;
    int max_steps = 0;
    std::size_t max_types = kDefaultTableCap;
};

/// Mixing curve over N = 0..max_steps: N, tv_exact, tv_bound, tv_squared,
/// bound_squared; for r = 2 an extra tv_parity column tracks the distance to
/// the parity limit, since the raw curve oscillates forever.
void write_tv_curve_csv(std::ostream& out, const TvCurveOptions& options);

/// Threshold step count and guarantee for one (r, n, c).
void write_cutoff_csv(std::ostream& out, int urns, int balls, double c);

struct VerifyOptions {
    ShuffleKind shuffle = ShuffleKind::AnyOther;
    int urns = 0;
    int balls = 0;
    int max_steps = 0;
    double tolerance = 1e-10;
    std::size_t state_cap = kDefaultStateCap;
    std::size_t max_types = kDefaultTableCap;
};

/// Compare the spectral distribution against the exact kernel power at every
/// step up to max_steps; the report carries the max per-state error, where it
/// occurred, and "status": "pass"/"fail" against the tolerance.
nlohmann::ordered_json verify_report(const VerifyOptions& options);

struct SimulateOptions {
    ShuffleKind shuffle = ShuffleKind::AnyOther;
    int urns = 0;
    int balls = 0;
    int steps = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t state_cap = kDefaultStateCap;
};

/// Run the Monte Carlo harness and compare with the exact distribution; the
/// report records seed and generator so the run can be reproduced bit for
/// bit.
nlohmann::ordered_json simulate_report(const SimulateOptions& options);

}  // namespace urnmix::reports
