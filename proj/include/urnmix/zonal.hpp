#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "urnmix/composition.hpp"

namespace urnmix {

/// Default ceiling on the number of compositions a full table may hold.
inline constexpr std::size_t kDefaultTableCap = 4096;

/// Single spherical value omega_{k,l} = m_lambda(k)(l) / multinomial(k).
/// Exact integer bookkeeping inside, so this also serves as the reference
/// against which the bulk table builder is checked.
std::complex<double> zonal_value(const Composition& k, const Composition& l);

/// The full square table of spherical values for fixed (r, n).  Rows are the
/// spectral components k, columns the occupancy types l, both in the fixed
/// lexicographically decreasing order.  Built column-by-column with a shared
/// generating-product recursion, which is what makes n = 20, r = 4 (1771 x
/// 1771 entries) feasible in well under a second.
class ZonalTable {
public:
    static ZonalTable build(int urns, int balls, std::size_t max_types = kDefaultTableCap);

    int urns() const noexcept { return urns_; }
    int balls() const noexcept { return balls_; }
    std::size_t size() const noexcept { return index_.size(); }

    /// The shared row/column index: compositions(urns, balls).
    const std::vector<Composition>& index() const noexcept { return index_; }

    std::complex<double> value(std::size_t k_rank, std::size_t l_rank) const;
    std::complex<double> value(const Composition& k, const Composition& l) const;

private:
    ZonalTable() = default;

    int urns_ = 0;
    int balls_ = 0;
    std::vector<Composition> index_;
    std::vector<std::complex<double>> values_;  // row-major, size() * size()
};

/// Convenience spelling of ZonalTable::build.
ZonalTable zonal_table(int urns, int balls, std::size_t max_types = kDefaultTableCap);

/// An element (x, sigma) of the wreath product acting on ball labels: sigma
/// permutes the n positions and x adds a colour offset mod r to each.  Only
/// the colour multiset matters to any spherical value, which is the
/// bi-invariance the tests pin down.
class GroupElement {
public:
    GroupElement(std::vector<int> colors, std::vector<int> permutation, int modulus);

    int modulus() const noexcept { return modulus_; }
    int size() const noexcept { return static_cast<int>(colors_.size()); }
    const std::vector<int>& colors() const noexcept { return colors_; }
    const std::vector<int>& permutation() const noexcept { return permutation_; }

private:
    std::vector<int> colors_;
    std::vector<int> permutation_;
    int modulus_ = 0;
};

/// Multiplicity vector of the colours of g: entry j counts positions with
/// colour j.  Spherical values of g depend on g only through this.
Composition group_element_type(const GroupElement& g);

}  // namespace urnmix
