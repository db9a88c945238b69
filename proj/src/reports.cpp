#include "urnmix/reports.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "urnmix/version.hpp"

namespace urnmix::reports {

namespace {

void write_header(std::ostream& out, int urns, int balls, std::string_view shuffle,
                  std::string_view extra = {}) {
    out << "# urnmix " << kVersion << "\n";
    out << "# r=" << urns << " n=" << balls << " shuffle=" << shuffle;
    if (!extra.empty()) out << ' ' << extra;
    out << "\n";
    out << "# compositions ordered lexicographically decreasing\n";
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_zonal_table_csv(std::ostream& out, const ZonalTable& table) {
    write_header(out, table.urns(), table.balls(), "none");
    out << "k";
    for (const Composition& l : table.index()) {
        out << ',' << l.label() << "_re," << l.label() << "_im";
    }
    out << "\n";
    for (std::size_t row = 0; row < table.size(); ++row) {
        out << table.index()[row].label();
        for (std::size_t col = 0; col < table.size(); ++col) {
            const std::complex<double> v = table.value(row, col);
            out << ',' << format_double(v.real()) << ',' << format_double(v.imag());
        }
        out << "\n";
    }
}

void write_fourier_csv(std::ostream& out, ShuffleKind kind, int urns, int balls,
                       std::size_t max_types) {
    const SpectralProfile profile = SpectralProfile::build(kind, urns, balls, max_types);
    const std::vector<Composition> index = compositions(urns, balls);
    write_header(out, urns, balls, shuffle_name(kind));
    out << "k,f_re,f_im\n";
    for (std::size_t i = 0; i < index.size(); ++i) {
        out << index[i].label() << ',' << format_double(profile.coefficients[i].real())
            << ',' << format_double(profile.coefficients[i].imag()) << "\n";
    }
}

void write_distribution_csv(std::ostream& out, ShuffleKind kind, int steps, int urns,
                            int balls, std::size_t max_types) {
    const TypeDistribution dist = distribution_after(kind, steps, urns, balls, max_types);
    const std::vector<Composition> index = compositions(urns, balls);
    write_header(out, urns, balls, shuffle_name(kind), "steps=" + std::to_string(steps));
    out << "type,states,mass_per_state,type_mass\n";
    for (std::size_t i = 0; i < index.size(); ++i) {
        const BigInt states = multinomial(index[i]);
        const double mass = dist.masses()[i];
        out << index[i].label() << ',' << states.str() << ',' << format_double(mass)
            << ',' << format_double(states.convert_to<double>() * mass) << "\n";
    }
}

void write_tv_curve_csv(std::ostream& out, const TvCurveOptions& options) {
    if (options.max_steps < 0) {
        throw std::invalid_argument("tv curve: the step range must be non-negative");
    }
    const ZonalTable table = ZonalTable::build(options.urns, options.balls, options.max_types);
    const TypeDistribution uniform = TypeDistribution::uniform(options.urns, options.balls);
    const bool periodic = options.urns == 2;
    const TypeDistribution even_limit =
        periodic ? limit_distribution(2, options.balls, Parity::Even) : uniform;
    const TypeDistribution odd_limit =
        periodic ? limit_distribution(2, options.balls, Parity::Odd) : uniform;

    write_header(out, options.urns, options.balls, shuffle_name(options.shuffle));
    out << "N,tv_exact,tv_bound,tv_squared,bound_squared";
    if (periodic) out << ",tv_parity";
    out << "\n";
    for (int step = 0; step <= options.max_steps; ++step) {
        const TypeDistribution dist = distribution_after(table, options.shuffle, step);
        const double tv = tv_distance(dist, uniform);
        const TvBound bound = tv_upper_bound(options.shuffle, step, options.urns,
                                             options.balls, options.max_types);
        out << step << ',' << format_double(tv) << ',' << format_double(bound.value)
            << ',' << format_double(tv * tv) << ',' << format_double(bound.squared);
        if (periodic) {
            const double parity_tv =
                tv_distance(dist, step % 2 == 0 ? even_limit : odd_limit);
            out << ',' << format_double(parity_tv);
        }
        out << "\n";
    }
}

void write_cutoff_csv(std::ostream& out, int urns, int balls, double c) {
    const CutoffEstimate estimate = cutoff_threshold(urns, balls, c);
    write_header(out, urns, balls, shuffle_name(ShuffleKind::AnyOther));
    out << "r,n,c,threshold_steps,threshold_ceil,guarantee,bound_applies_to\n";
    out << urns << ',' << balls << ',' << format_double(c) << ','
        << format_double(estimate.steps) << ','
        << static_cast<long long>(std::ceil(estimate.steps)) << ','
        << format_double(estimate.guarantee) << ','
        << (estimate.offset_by_quarter ? "tv_squared_minus_quarter" : "tv_squared")
        << "\n";
}

nlohmann::ordered_json verify_report(const VerifyOptions& options) {
    if (options.max_steps < 0) {
        throw std::invalid_argument("verify: the step range must be non-negative");
    }
    const ZonalTable table = ZonalTable::build(options.urns, options.balls, options.max_types);
    const DenseKernel kernel =
        build_kernel(options.shuffle, options.urns, options.balls, options.state_cap);

    double max_error = 0.0;
    int worst_step = 0;
    std::size_t worst_type = 0;
    for (int step = 0; step <= options.max_steps; ++step) {
        const TypeDistribution spectral = distribution_after(table, options.shuffle, step);
        const TypeDistribution exact =
            power_distribution(kernel, step).collapse_to_types();
        for (std::size_t i = 0; i < spectral.type_count(); ++i) {
            const double error = std::abs(spectral.masses()[i] - exact.masses()[i]);
            if (error > max_error) {
                max_error = error;
                worst_step = step;
                worst_type = i;
            }
        }
    }

    nlohmann::ordered_json report;
    report["command"] = "verify";
    report["version"] = kVersion;
    report["shuffle"] = shuffle_name(options.shuffle);
    report["r"] = options.urns;
    report["n"] = options.balls;
    report["steps_checked"] = options.max_steps;
    report["states"] = kernel.states();
    report["types"] = table.size();
    report["tolerance"] = options.tolerance;
    report["max_error"] = max_error;
    report["worst_step"] = worst_step;
    report["worst_type"] = table.index()[worst_type].label();
    report["status"] = max_error <= options.tolerance ? "pass" : "fail";
    return report;
}

nlohmann::ordered_json simulate_report(const SimulateOptions& options) {
    const DenseKernel kernel =
        build_kernel(options.shuffle, options.urns, options.balls, options.state_cap);
    const PowerDistribution exact = power_distribution(kernel, options.steps);
    const EmpiricalDistribution sample =
        simulate(options.shuffle, options.urns, options.balls, options.steps,
                 options.trials, options.seed, options.state_cap);
    const double tv = empirical_tv(sample, exact);

    // fold both sides down to types for the readable part of the report
    const std::vector<Composition> index = compositions(options.urns, options.balls);
    std::vector<double> exact_type(index.size(), 0.0);
    std::vector<std::uint64_t> counts_type(index.size(), 0);
    for (std::size_t state = 0; state < sample.counts.size(); ++state) {
        const std::size_t rank = composition_rank(
            configuration_from_index(state, options.urns, options.balls).type());
        exact_type[rank] += exact.mass(state);
        counts_type[rank] += sample.counts[state];
    }

    nlohmann::ordered_json report;
    report["command"] = "simulate";
    report["version"] = kVersion;
    report["shuffle"] = shuffle_name(options.shuffle);
    report["r"] = options.urns;
    report["n"] = options.balls;
    report["steps"] = options.steps;
    report["trials"] = options.trials;
    report["seed"] = options.seed;
    report["rng"] = EmpiricalDistribution::kRngName;
    report["states"] = sample.counts.size();
    report["tv_empirical_exact"] = tv;
    nlohmann::ordered_json types = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < index.size(); ++i) {
        nlohmann::ordered_json row;
        row["type"] = index[i].label();
        row["states"] = multinomial(index[i]).str();
        row["exact_mass"] = exact_type[i];
        row["empirical_mass"] =
            static_cast<double>(counts_type[i]) / static_cast<double>(options.trials);
        types.push_back(std::move(row));
    }
    report["types"] = std::move(types);
    return report;
}

}  // namespace urnmix::reports
