#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "urnmix/composition.hpp"
#include "urnmix/zonal.hpp"

namespace urnmix {

using Rational = boost::rational<long long>;

/// The three single-ball moves studied here.  Each step picks one of the n
/// balls uniformly and then:
///   AnyOther           - moves it to one of the other r-1 urns uniformly;
///   CyclicLeft         - moves it from urn i to urn i+1 mod r;
///   CyclicBidirectional- moves it to urn i+1 or i-1 mod r with equal odds
///                        (for r = 2 the two coincide, so that single move
///                        has the full 1/n weight).
enum class ShuffleKind {
    AnyOther,
    CyclicLeft,
    CyclicBidirectional,
};

/// Stable names used by the CLI and file formats: "any-other", "cyclic-left",
/// "cyclic-bidir".
std::string_view shuffle_name(ShuffleKind kind);
ShuffleKind parse_shuffle(std::string_view name);

/// A labelled placement of n balls into r urns; entry i is the urn of ball
/// i+1.  This is the full (pre-quotient) state space of the chains.
class UrnConfiguration {
public:
    UrnConfiguration(std::vector<int> assignment, int urn_count);

    /// Everything in urn 0: the conventional start state.
    static UrnConfiguration initial(int urns, int balls);

    int urns() const noexcept { return urns_; }
    int balls() const noexcept { return static_cast<int>(assignment_.size()); }
    int operator[](std::size_t ball) const { return assignment_.at(ball); }
    const std::vector<int>& assignment() const noexcept { return assignment_; }

    /// Occupancy counts: how many balls sit in each urn.
    Composition type() const;

    friend bool operator==(const UrnConfiguration&, const UrnConfiguration&) = default;

private:
    std::vector<int> assignment_;
    int urns_ = 0;
};

/// Number of balls placed differently.
int hamming_distance(const UrnConfiguration& a, const UrnConfiguration& b);

/// Wreath-product action on configurations: ball sigma(i) keeps its urn
/// shifted by the colour at its new position, i.e. (x, sigma) . b assigns
/// urn x_i + b_{sigma^{-1}(i)} mod r to ball i.
UrnConfiguration act(const GroupElement& g, const UrnConfiguration& b);

/// One-step probability from `from` to `to`, exact.
Rational transition_probability(ShuffleKind kind, const UrnConfiguration& from,
                                const UrnConfiguration& to);

/// Spectral coefficient f_k of the shuffle in closed form:
///   AnyOther           f_k = (r k_0 / n - 1) / (r - 1)
///   CyclicLeft         f_k = sum_j (k_j / n) xi^{-j}
///   CyclicBidirectional f_k = sum_j (k_j / n) (xi^j + xi^{-j}) / 2
std::complex<double> fourier_coefficient(ShuffleKind kind, const Composition& k);

/// The same coefficient computed with no closed form at all: enumerate the
/// one-step moves out of the start configuration and average the conjugated
/// spherical values of the destination types.  Cross-checking this against
/// fourier_coefficient is the main self-test of the whole spectral setup.
std::complex<double> fourier_coefficient_numeric(ShuffleKind kind, const Composition& k);

}  // namespace urnmix
