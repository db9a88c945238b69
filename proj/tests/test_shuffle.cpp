#include "doctest.h"

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "urnmix/composition.hpp"
#include "urnmix/oracle.hpp"
#include "urnmix/shuffle.hpp"
#include "urnmix/zonal.hpp"

using urnmix::Composition;
using urnmix::Rational;
using urnmix::ShuffleKind;
using urnmix::UrnConfiguration;
using Complex = std::complex<double>;

namespace {

constexpr ShuffleKind kAllShuffles[] = {ShuffleKind::AnyOther, ShuffleKind::CyclicLeft,
                                        ShuffleKind::CyclicBidirectional};

}  // namespace

TEST_CASE("shuffle names round-trip and reject strangers") {
    for (const ShuffleKind kind : kAllShuffles) {
        CHECK(urnmix::parse_shuffle(urnmix::shuffle_name(kind)) == kind);
    }
    CHECK(urnmix::shuffle_name(ShuffleKind::AnyOther) == "any-other");
    CHECK(urnmix::shuffle_name(ShuffleKind::CyclicLeft) == "cyclic-left");
    CHECK(urnmix::shuffle_name(ShuffleKind::CyclicBidirectional) == "cyclic-bidir");

    CHECK_THROWS_AS(urnmix::parse_shuffle("riffle"), std::invalid_argument);
    try {
        urnmix::parse_shuffle("riffle");
    } catch (const std::invalid_argument& error) {
        const std::string message = error.what();
        CHECK(message.find("any-other") != std::string::npos);
        CHECK(message.find("cyclic-left") != std::string::npos);
        CHECK(message.find("cyclic-bidir") != std::string::npos);
    }
}

TEST_CASE("UrnConfiguration validates and reports its type") {
    const UrnConfiguration c({0, 2, 1, 0}, 3);
    CHECK(c.urns() == 3);
    CHECK(c.balls() == 4);
    CHECK(c[1] == 2);
    CHECK(c.type() == Composition({2, 1, 1}));

    const UrnConfiguration start = UrnConfiguration::initial(3, 2);
    CHECK(start.assignment() == std::vector<int>{0, 0});
    CHECK(start.type() == Composition::concentrated(3, 2));

    CHECK_THROWS_AS(UrnConfiguration({0, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(UrnConfiguration({0, -1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(UrnConfiguration({0, 1}, 0), std::invalid_argument);
}

TEST_CASE("hamming distance counts displaced balls") {
    const UrnConfiguration a({0, 1, 2}, 3);
    const UrnConfiguration b({0, 2, 2}, 3);
    CHECK(urnmix::hamming_distance(a, a) == 0);
    CHECK(urnmix::hamming_distance(a, b) == 1);
    CHECK(urnmix::hamming_distance(b, a) == 1);
    CHECK_THROWS_AS(urnmix::hamming_distance(a, UrnConfiguration({0, 1}, 3)),
                    std::invalid_argument);
}

TEST_CASE("the wreath action shifts colours and permutes labels") {
    const UrnConfiguration b({0, 1, 2}, 3);

    const urnmix::GroupElement identity({0, 0, 0}, {0, 1, 2}, 3);
    CHECK(urnmix::act(identity, b) == b);

    const urnmix::GroupElement shift({1, 1, 1}, {0, 1, 2}, 3);
    CHECK(urnmix::act(shift, b) == UrnConfiguration({1, 2, 0}, 3));

    // ball i ends up with the urn of ball sigma^{-1}(i), plus its colour
    const urnmix::GroupElement cycle({0, 0, 0}, {1, 2, 0}, 3);
    CHECK(urnmix::act(cycle, b) == UrnConfiguration({2, 0, 1}, 3));

    // a pure permutation can never change the occupancy type
    CHECK(urnmix::act(cycle, b).type() == b.type());

    CHECK_THROWS_AS(urnmix::act(identity, UrnConfiguration({0, 1}, 3)),
                    std::invalid_argument);
}

TEST_CASE("one-step probabilities, exact") {
    const UrnConfiguration start = UrnConfiguration::initial(3, 2);
    const UrnConfiguration near({0, 1}, 3);
    const UrnConfiguration far({0, 2}, 3);
    const UrnConfiguration both({1, 2}, 3);

    CHECK(urnmix::transition_probability(ShuffleKind::AnyOther, start, near) ==
          Rational(1, 4));
    CHECK(urnmix::transition_probability(ShuffleKind::AnyOther, start, far) ==
          Rational(1, 4));
    CHECK(urnmix::transition_probability(ShuffleKind::AnyOther, start, start) ==
          Rational(0));
    CHECK(urnmix::transition_probability(ShuffleKind::AnyOther, start, both) ==
          Rational(0));

    CHECK(urnmix::transition_probability(ShuffleKind::CyclicLeft, start, near) ==
          Rational(1, 2));
    CHECK(urnmix::transition_probability(ShuffleKind::CyclicLeft, start, far) ==
          Rational(0));

    CHECK(urnmix::transition_probability(ShuffleKind::CyclicBidirectional, start, near) ==
          Rational(1, 4));
    CHECK(urnmix::transition_probability(ShuffleKind::CyclicBidirectional, start, far) ==
          Rational(1, 4));

    // two urns: the up and down moves coincide and carry the full weight
    CHECK(urnmix::transition_probability(ShuffleKind::CyclicBidirectional,
                                         UrnConfiguration::initial(2, 3),
                                         UrnConfiguration({1, 0, 0}, 2)) ==
          Rational(1, 3));
    CHECK(urnmix::transition_probability(ShuffleKind::AnyOther,
                                         UrnConfiguration({0}, 2),
                                         UrnConfiguration({1}, 2)) == Rational(1));

    CHECK_THROWS_AS(urnmix::transition_probability(ShuffleKind::AnyOther, start,
                                                   UrnConfiguration({0}, 3)),
                    std::invalid_argument);
}

TEST_CASE("every row of the move law sums to one") {
    const auto check_space = [](int urns, int balls) {
        const std::size_t states = urnmix::state_count(urns, balls);
        for (const ShuffleKind kind : kAllShuffles) {
            for (std::size_t s = 0; s < states; ++s) {
                const UrnConfiguration from =
                    urnmix::configuration_from_index(s, urns, balls);
                Rational total(0);
                for (std::size_t t = 0; t < states; ++t) {
                    total += urnmix::transition_probability(
                        kind, from, urnmix::configuration_from_index(t, urns, balls));
                }
                CHECK(total == Rational(1));
            }
        }
    };
    for (int urns = 2; urns <= 4; ++urns) {
        for (int balls = 1; balls <= 3; ++balls) check_space(urns, balls);
    }
    check_space(2, 4);
}

TEST_CASE("the move law ignores global colour shifts and ball relabelling") {
    const int urns = 3;
    const int balls = 3;
    const std::size_t states = urnmix::state_count(urns, balls);
    const auto shifted = [&](const UrnConfiguration& c, int offset) {
        std::vector<int> parts(c.assignment());
        for (int& p : parts) p = (p + offset) % urns;
        return UrnConfiguration(parts, urns);
    };
    const auto relabeled = [&](const UrnConfiguration& c) {
        return UrnConfiguration({c[2], c[0], c[1]}, urns);
    };
    for (const ShuffleKind kind : kAllShuffles) {
        for (std::size_t s = 0; s < states; ++s) {
            for (std::size_t t = 0; t < states; ++t) {
                const UrnConfiguration from =
                    urnmix::configuration_from_index(s, urns, balls);
                const UrnConfiguration to =
                    urnmix::configuration_from_index(t, urns, balls);
                const Rational p = urnmix::transition_probability(kind, from, to);
                CHECK(urnmix::transition_probability(kind, shifted(from, 1),
                                                     shifted(to, 1)) == p);
                CHECK(urnmix::transition_probability(kind, relabeled(from),
                                                     relabeled(to)) == p);
            }
        }
    }
}

TEST_CASE("spectral coefficients, frozen values") {
    // the trivial component always carries exactly 1
    for (const ShuffleKind kind : kAllShuffles) {
        CHECK(urnmix::fourier_coefficient(kind, Composition({3, 0, 0})) ==
              Complex(1.0, 0.0));
    }

    CHECK(urnmix::fourier_coefficient(ShuffleKind::AnyOther, Composition({0, 4})) ==
          Complex(-1.0, 0.0));
    CHECK(urnmix::fourier_coefficient(ShuffleKind::AnyOther, Composition({1, 1})) ==
          Complex(0.0, 0.0));
    CHECK(urnmix::fourier_coefficient(ShuffleKind::CyclicLeft, Composition({0, 5})) ==
          Complex(-1.0, 0.0));

    // all mass on residue 1 rotates the coefficient a quarter turn
    CHECK(std::abs(urnmix::fourier_coefficient(ShuffleKind::CyclicLeft,
                                               Composition({0, 6, 0, 0})) -
                   Complex(0.0, -1.0)) <= 1e-12);

    // all mass on residue 2 pins the bidirectional coefficient at exactly -1
    const Complex pinned = urnmix::fourier_coefficient(ShuffleKind::CyclicBidirectional,
                                                       Composition({0, 0, 6, 0}));
    CHECK(pinned.real() == -1.0);
    CHECK(pinned.imag() == 0.0);

    CHECK_THROWS_AS(urnmix::fourier_coefficient(ShuffleKind::AnyOther, Composition({0})),
                    std::invalid_argument);
}

TEST_CASE("closed-form coefficients match the direct spectral average") {
    for (const ShuffleKind kind : kAllShuffles) {
        for (int urns = 2; urns <= 4; ++urns) {
            for (int balls = 1; balls <= 4; ++balls) {
                for (const Composition& k : urnmix::compositions(urns, balls)) {
                    const Complex closed = urnmix::fourier_coefficient(kind, k);
                    const Complex direct = urnmix::fourier_coefficient_numeric(kind, k);
                    CHECK(std::abs(closed - direct) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("coefficients stay inside the unit disc") {
    for (const ShuffleKind kind : kAllShuffles) {
        for (int urns = 2; urns <= 4; ++urns) {
            for (const Composition& k : urnmix::compositions(urns, 5)) {
                CHECK(std::abs(urnmix::fourier_coefficient(kind, k)) <= 1.0 + 1e-12);
            }
        }
    }
}
