#pragma once

#include <complex>
#include <span>
#include <vector>

#include "urnmix/composition.hpp"

namespace urnmix {

/// exp(2*pi*i*exponent/order).  Exponents that land on the real axis are
/// returned exactly (+1 or -1) so that real-valued tables stay free of
/// spurious imaginary dust.
std::complex<double> root_of_unity(int order, long long exponent);

/// The evaluation point (1,...,1, xi,...,xi, ..., xi^{r-1},...,xi^{r-1}) with
/// xi = exp(2*pi*i/r) and multiplicity l_j for xi^j.  Symmetric polynomials
/// only see the multiset, so the multiplicity vector l is the whole datum.
class RootOfUnityMultiset {
public:
    explicit RootOfUnityMultiset(Composition multiplicities);

    const Composition& multiplicities() const noexcept { return mult_; }
    int order() const noexcept { return mult_.urns(); }
    int size() const noexcept { return mult_.balls(); }

    /// The point expanded to a flat list of n complex numbers.
    std::vector<std::complex<double>> values() const;

private:
    Composition mult_;
};

/// Elementary symmetric polynomial e_j at the given values (e_0 = 1).
std::complex<double> elementary_symmetric(int j, std::span<const std::complex<double>> values);

/// All of e_0, ..., e_m at once via the stable product-expansion recurrence:
/// multiply out prod_i (1 + x_i t) one factor at a time.
std::vector<std::complex<double>> elementary_symmetric_all(std::span<const std::complex<double>> values);

/// Monomial symmetric polynomial m_lambda evaluated at the root-of-unity
/// multiset of type l, where lambda = (0^{k_0} 1^{k_1} ... (r-1)^{k_{r-1}})
/// is the partition-with-repeats encoded by the composition k.  All
/// bookkeeping is exact integer arithmetic; the result is rounded to a
/// complex double only at the very end.
std::complex<double> monomial_symmetric_at_type(const Composition& k, const Composition& l);

namespace detail {

/// Exact expansion m_lambda(k)(l) = sum_t c_t xi^t with integer coefficients
/// c_0..c_{r-1}.  Exposed for tests; monomial_symmetric_at_type is this
/// followed by one complex evaluation.
std::vector<BigInt> monomial_symmetric_residue_coefficients(const Composition& k,
                                                            const Composition& l);

}  // namespace detail

}  // namespace urnmix
