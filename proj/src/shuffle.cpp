#include "urnmix/shuffle.hpp"

#include <stdexcept>
#include <utility>

#include "urnmix/symmetric.hpp"

namespace urnmix {

std::string_view shuffle_name(ShuffleKind kind) {
    switch (kind) {
        case ShuffleKind::AnyOther: return "any-other";
        case ShuffleKind::CyclicLeft: return "cyclic-left";
        case ShuffleKind::CyclicBidirectional: return "cyclic-bidir";
    }
    throw std::invalid_argument("shuffle_name: unknown shuffle");
}

ShuffleKind parse_shuffle(std::string_view name) {
    if (name == "any-other") return ShuffleKind::AnyOther;
    if (name == "cyclic-left") return ShuffleKind::CyclicLeft;
    if (name == "cyclic-bidir") return ShuffleKind::CyclicBidirectional;
    throw std::invalid_argument("unknown shuffle '" + std::string(name) +
                                "' (expected any-other, cyclic-left or cyclic-bidir)");
}

UrnConfiguration::UrnConfiguration(std::vector<int> assignment, int urn_count)
    : assignment_(std::move(assignment)), urns_(urn_count) {
    if (urns_ < 1) {
        throw std::invalid_argument("UrnConfiguration: need at least one urn");
    }
    for (int urn : assignment_) {
        if (urn < 0 || urn >= urns_) {
            throw std::invalid_argument("UrnConfiguration: ball assigned to a missing urn");
        }
    }
}

UrnConfiguration UrnConfiguration::initial(int urns, int balls) {
    if (balls < 0) {
        throw std::invalid_argument("UrnConfiguration: ball count must be non-negative");
    }
    return UrnConfiguration(std::vector<int>(static_cast<std::size_t>(balls), 0), urns);
}

Composition UrnConfiguration::type() const {
    std::vector<int> counts(static_cast<std::size_t>(urns_), 0);
    for (int urn : assignment_) {
        ++counts[static_cast<std::size_t>(urn)];
    }
    return Composition(std::move(counts));
}

int hamming_distance(const UrnConfiguration& a, const UrnConfiguration& b) {
    if (a.urns() != b.urns() || a.balls() != b.balls()) {
        throw std::invalid_argument("hamming_distance: configurations of different shape");
    }
    int distance = 0;
    for (std::size_t i = 0; i < a.assignment().size(); ++i) {
        distance += a.assignment()[i] != b.assignment()[i];
    }
    return distance;
}

UrnConfiguration act(const GroupElement& g, const UrnConfiguration& b) {
    if (g.modulus() != b.urns() || g.size() != b.balls()) {
        throw std::invalid_argument("act: group element and configuration shapes differ");
    }
    const std::size_t n = b.assignment().size();
    std::vector<int> inverse(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        inverse[static_cast<std::size_t>(g.permutation()[i])] = static_cast<int>(i);
    }
    std::vector<int> moved(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const int colour = g.colors()[i];
        const int source = b.assignment()[static_cast<std::size_t>(inverse[i])];
        moved[i] = (colour + source) % b.urns();
    }
    return UrnConfiguration(std::move(moved), b.urns());
}

Rational transition_probability(ShuffleKind kind, const UrnConfiguration& from,
                                const UrnConfiguration& to) {
    if (from.urns() != to.urns() || from.balls() != to.balls()) {
        throw std::invalid_argument("transition_probability: configurations of different shape");
    }
    const int r = from.urns();
    const long long n = from.balls();
    if (r < 2 || n < 1) {
        throw std::invalid_argument("transition_probability: need r >= 2 urns and n >= 1 balls");
    }

    int moved = -1;
    for (std::size_t i = 0; i < from.assignment().size(); ++i) {
        if (from.assignment()[i] != to.assignment()[i]) {
            if (moved >= 0) return Rational(0);  // more than one ball moved
            moved = static_cast<int>(i);
        }
    }
    if (moved < 0) return Rational(0);  // staying put is never a move

    const int diff =
        ((to.assignment()[static_cast<std::size_t>(moved)] -
          from.assignment()[static_cast<std::size_t>(moved)]) % r + r) % r;
    switch (kind) {
        case ShuffleKind::AnyOther:
            return Rational(1, (r - 1) * n);
        case ShuffleKind::CyclicLeft:
            return diff == 1 ? Rational(1, n) : Rational(0);
        case ShuffleKind::CyclicBidirectional:
            if (diff != 1 && diff != r - 1) return Rational(0);
            // r = 2: the +1 and -1 moves are the same move, so it gets the
            // whole 1/n rather than 1/(2n) twice
            return r == 2 ? Rational(1, n) : Rational(1, 2 * n);
    }
    throw std::invalid_argument("transition_probability: unknown shuffle");
}

std::complex<double> fourier_coefficient(ShuffleKind kind, const Composition& k) {
    const int r = k.urns();
    const int n = k.balls();
    if (r < 2 || n < 1) {
        throw std::invalid_argument("fourier_coefficient: need r >= 2 urns and n >= 1 balls");
    }
    switch (kind) {
        case ShuffleKind::AnyOther: {
            const double value =
                (static_cast<double>(r) * k[0] / n - 1.0) / (r - 1);
            return {value, 0.0};
        }
        case ShuffleKind::CyclicLeft: {
            std::complex<double> f = 0.0;
            for (int j = 0; j < r; ++j) {
                if (k[static_cast<std::size_t>(j)] == 0) continue;
                f += (static_cast<double>(k[static_cast<std::size_t>(j)]) / n) *
                     root_of_unity(r, -static_cast<long long>(j));
            }
            return f;
        }
        case ShuffleKind::CyclicBidirectional: {
            // (zeta^j + zeta^-j)/2 = Re zeta^j, so the value is exactly real
            double f = 0.0;
            for (int j = 0; j < r; ++j) {
                if (k[static_cast<std::size_t>(j)] == 0) continue;
                f += (static_cast<double>(k[static_cast<std::size_t>(j)]) / n) *
                     root_of_unity(r, j).real();
            }
            return {f, 0.0};
        }
    }
    throw std::invalid_argument("fourier_coefficient: unknown shuffle");
}

std::complex<double> fourier_coefficient_numeric(ShuffleKind kind, const Composition& k) {
    const int r = k.urns();
    const int n = k.balls();
    if (r < 2 || n < 1) {
        throw std::invalid_argument("fourier_coefficient: need r >= 2 urns and n >= 1 balls");
    }
    // Average conj(omega_k) over one step of the actual kernel out of the
    // start configuration, touching every single-ball destination; no closed
    // form anywhere.
    const UrnConfiguration start = UrnConfiguration::initial(r, n);
    std::complex<double> f = 0.0;
    for (int ball = 0; ball < n; ++ball) {
        for (int dest = 1; dest < r; ++dest) {
            std::vector<int> assignment = start.assignment();
            assignment[static_cast<std::size_t>(ball)] = dest;
            const UrnConfiguration target(std::move(assignment), r);
            const Rational p = transition_probability(kind, start, target);
            if (p.numerator() == 0) continue;
            f += boost::rational_cast<double>(p) * std::conj(zonal_value(k, target.type()));
        }
    }
    return f;
}

}  // namespace urnmix
