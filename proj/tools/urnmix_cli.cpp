#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "urnmix/oracle.hpp"
#include "urnmix/reports.hpp"
#include "urnmix/version.hpp"

namespace {

struct Options {
    int urns = 0;
    int balls = 0;
    int steps = 0;
    int max_steps = 0;
    double c = 0.0;
    double tolerance = 1e-10;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    std::size_t type_cap = urnmix::kDefaultTableCap;
    std::size_t state_cap = urnmix::kDefaultStateCap;
    std::string shuffle;
    std::string out;
};

int write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 2;
    }
    file << payload;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;

    // The r^n guard for the oracle commands; the environment can raise it,
    // an explicit --state-cap beats both.
    if (const char* raw = std::getenv("URNMIX_STATE_CAP")) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || parsed == 0) {
            std::cerr << "URNMIX_STATE_CAP must be a positive integer, got '" << raw << "'\n";
            return 2;
        }
        opt.state_cap = static_cast<std::size_t>(parsed);
    }

    CLI::App app{"urn walks via spherical Fourier analysis: exact distributions, "
                 "mixing curves, and brute-force/Monte Carlo oracles"};
    app.set_version_flag("--version", std::string(urnmix::kVersion));
    app.require_subcommand(1);

    auto add_rn = [&](CLI::App* cmd) {
        cmd->add_option("-r,--urns", opt.urns, "number of urns")
            ->required()
            ->check(CLI::Range(2, 1 << 16));
        cmd->add_option("-n,--balls", opt.balls, "number of balls")
            ->required()
            ->check(CLI::Range(1, 1 << 16));
    };
    auto add_shuffle = [&](CLI::App* cmd) {
        cmd->add_option("--shuffle", opt.shuffle, "which move rule to use")
            ->required()
            ->check(CLI::IsMember({"any-other", "cyclic-left", "cyclic-bidir"}));
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", opt.out, "write to this file instead of stdout");
    };
    auto add_type_cap = [&](CLI::App* cmd) {
        cmd->add_option("--type-cap", opt.type_cap,
                        "refuse composition counts beyond this many types");
    };
    auto add_state_cap = [&](CLI::App* cmd) {
        cmd->add_option("--state-cap", opt.state_cap,
                        "refuse state spaces beyond this many configurations "
                        "(default from URNMIX_STATE_CAP if set)");
    };

    CLI::App* table = app.add_subcommand("table", "spherical value table as CSV");
    add_rn(table);
    add_type_cap(table);
    add_out(table);

    CLI::App* fk = app.add_subcommand("fk", "spectral coefficients f_k as CSV");
    add_shuffle(fk);
    add_rn(fk);
    add_type_cap(fk);
    add_out(fk);

    CLI::App* evolve = app.add_subcommand("evolve", "exact distribution after N steps as CSV");
    add_shuffle(evolve);
    add_rn(evolve);
    evolve->add_option("-N,--steps", opt.steps, "number of steps")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_type_cap(evolve);
    add_out(evolve);

    CLI::App* tvd = app.add_subcommand("tvd", "total-variation mixing curve as CSV");
    add_shuffle(tvd);
    add_rn(tvd);
    tvd->add_option("--n-max", opt.max_steps, "last step of the curve")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_type_cap(tvd);
    add_out(tvd);

    CLI::App* cutoff = app.add_subcommand("cutoff", "threshold step count and mixing guarantee");
    add_rn(cutoff);
    cutoff->add_option("-c,--offset", opt.c, "threshold offset (steps beyond n log r scale)");
    add_out(cutoff);

    CLI::App* verify =
        app.add_subcommand("verify", "spectral distributions vs the exact kernel power");
    add_shuffle(verify);
    add_rn(verify);
    verify->add_option("--n-steps", opt.max_steps, "check every step count up to this")
        ->default_val(10)
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--tolerance", opt.tolerance, "max per-state error allowed");
    add_state_cap(verify);
    add_type_cap(verify);
    add_out(verify);

    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo walks vs the exact distribution");
    add_shuffle(simulate);
    add_rn(simulate);
    simulate->add_option("-N,--steps", opt.steps, "number of steps per trial")
        ->required()
        ->check(CLI::NonNegativeNumber);
    simulate->add_option("--trials", opt.trials, "number of independent walks");
    simulate->add_option("--seed", opt.seed, "64-bit seed");
    add_state_cap(simulate);
    add_out(simulate);

    CLI11_PARSE(app, argc, argv);

    try {
        std::ostringstream payload;
        int status = 0;

        if (app.got_subcommand(table)) {
            urnmix::reports::write_zonal_table_csv(
                payload, urnmix::ZonalTable::build(opt.urns, opt.balls, opt.type_cap));
        } else if (app.got_subcommand(fk)) {
            urnmix::reports::write_fourier_csv(payload, urnmix::parse_shuffle(opt.shuffle),
                                               opt.urns, opt.balls, opt.type_cap);
        } else if (app.got_subcommand(evolve)) {
            urnmix::reports::write_distribution_csv(payload, urnmix::parse_shuffle(opt.shuffle),
                                                    opt.steps, opt.urns, opt.balls,
                                                    opt.type_cap);
        } else if (app.got_subcommand(tvd)) {
            urnmix::reports::TvCurveOptions curve;
            curve.shuffle = urnmix::parse_shuffle(opt.shuffle);
            curve.urns = opt.urns;
            curve.balls = opt.balls;
            curve.max_steps = opt.max_steps;
            curve.max_types = opt.type_cap;
            urnmix::reports::write_tv_curve_csv(payload, curve);
        } else if (app.got_subcommand(cutoff)) {
            urnmix::reports::write_cutoff_csv(payload, opt.urns, opt.balls, opt.c);
        } else if (app.got_subcommand(verify)) {
            urnmix::reports::VerifyOptions check;
            check.shuffle = urnmix::parse_shuffle(opt.shuffle);
            check.urns = opt.urns;
            check.balls = opt.balls;
            check.max_steps = opt.max_steps;
            check.tolerance = opt.tolerance;
            check.state_cap = opt.state_cap;
            check.max_types = opt.type_cap;
            const nlohmann::ordered_json report = urnmix::reports::verify_report(check);
            payload << report.dump(2) << "\n";
            if (report.at("status") != "pass") status = 1;
        } else if (app.got_subcommand(simulate)) {
            urnmix::reports::SimulateOptions run;
            run.shuffle = urnmix::parse_shuffle(opt.shuffle);
            run.urns = opt.urns;
            run.balls = opt.balls;
            run.steps = opt.steps;
            run.trials = opt.trials;
            run.seed = opt.seed;
            run.state_cap = opt.state_cap;
            payload << urnmix::reports::simulate_report(run).dump(2) << "\n";
        }

        const int write_status = write_output(opt.out, payload.str());
        return write_status != 0 ? write_status : status;
    } catch (const std::length_error& error) {
        std::cerr << "resource cap exceeded: " << error.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& error) {
        std::cerr << "invalid arguments: " << error.what() << "\n";
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 3;
    }
}
