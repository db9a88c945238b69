#include "urnmix/zonal.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "urnmix/symmetric.hpp"

namespace urnmix {

std::complex<double> zonal_value(const Composition& k, const Composition& l) {
    using boost::multiprecision::cpp_rational;
    const std::vector<BigInt> coeffs = detail::monomial_symmetric_residue_coefficients(k, l);
    const BigInt dim = multinomial(k);
    const int r = k.urns();
    std::complex<double> acc = 0.0;
    for (int t = 0; t < r; ++t) {
        const BigInt& c = coeffs[static_cast<std::size_t>(t)];
        if (c == 0) continue;
        // exact rational c/dim, rounded once
        const double ratio = cpp_rational(c, dim).convert_to<double>();
        acc += (t == 0) ? std::complex<double>(ratio, 0.0) : ratio * root_of_unity(r, t);
    }
    return acc;
}

ZonalTable ZonalTable::build(int urns, int balls, std::size_t max_types) {
    if (urns < 2) {
        throw std::invalid_argument("zonal_table: need at least two urns");
    }
    if (balls < 1) {
        throw std::invalid_argument("zonal_table: need at least one ball");
    }
    {
        const BigInt total = composition_count(urns, balls);
        if (total > max_types) {
            throw std::length_error("zonal_table: " + total.str() +
                                    " compositions exceed the cap of " +
                                    std::to_string(max_types));
        }
    }

    ZonalTable table;
    table.urns_ = urns;
    table.balls_ = balls;
    table.index_ = compositions(urns, balls);
    const std::size_t count = table.index_.size();
    table.values_.assign(count * count, std::complex<double>(0.0, 0.0));

    const std::size_t rr = static_cast<std::size_t>(urns);

    // All columns share one recursion: m_{lambda(k)}(l) is the coefficient of
    // prod_e y_e^{k_e} in prod over balls of (sum_e y_e xi^{e * class}),
    // where "class" is the root-of-unity class of the ball's variable.  We
    // expand that product one factor at a time; the partial coefficients at
    // stage t are indexed by compositions of t, so precompute each stage's
    // index and the "+1 ball in part e" transition between stages.
    std::vector<std::vector<Composition>> stages(static_cast<std::size_t>(balls) + 1);
    for (int t = 0; t <= balls; ++t) {
        stages[static_cast<std::size_t>(t)] = compositions(urns, t);
    }
    std::vector<std::vector<std::uint32_t>> step(static_cast<std::size_t>(balls));
    for (int t = 0; t + 1 <= balls; ++t) {
        std::map<std::vector<int>, std::uint32_t> rank_next;
        const auto& next_stage = stages[static_cast<std::size_t>(t) + 1];
        for (std::size_t i = 0; i < next_stage.size(); ++i) {
            rank_next.emplace(next_stage[i].parts(), static_cast<std::uint32_t>(i));
        }
        auto& tr = step[static_cast<std::size_t>(t)];
        const auto& stage = stages[static_cast<std::size_t>(t)];
        tr.resize(stage.size() * rr);
        for (std::size_t idx = 0; idx < stage.size(); ++idx) {
            std::vector<int> parts = stage[idx].parts();
            for (std::size_t e = 0; e < rr; ++e) {
                ++parts[e];
                tr[idx * rr + e] = rank_next.at(parts);
                --parts[e];
            }
        }
    }

    std::vector<double> dim(count);
    for (std::size_t i = 0; i < count; ++i) {
        dim[i] = multinomial(table.index_[i]).convert_to<double>();
    }
    std::vector<std::complex<double>> xi(rr);
    for (std::size_t t = 0; t < rr; ++t) {
        xi[t] = root_of_unity(urns, static_cast<long long>(t));
    }

    std::vector<std::complex<double>> cur, nxt;
    for (std::size_t col = 0; col < count; ++col) {
        const Composition& l = table.index_[col];
        cur.assign(1, std::complex<double>(1.0, 0.0));
        int t = 0;
        for (int cls = 0; cls < urns; ++cls) {
            for (int rep = 0; rep < l[static_cast<std::size_t>(cls)]; ++rep) {
                const auto& tr = step[static_cast<std::size_t>(t)];
                nxt.assign(stages[static_cast<std::size_t>(t) + 1].size(),
                           std::complex<double>(0.0, 0.0));
                for (std::size_t idx = 0; idx < cur.size(); ++idx) {
                    const std::complex<double> v = cur[idx];
                    if (v.real() == 0.0 && v.imag() == 0.0) continue;
                    for (std::size_t e = 0; e < rr; ++e) {
                        const std::size_t w = (e * static_cast<std::size_t>(cls)) % rr;
                        // w == 0 added unscaled keeps the trivial row and the
                        // trivial column exact, not just close
                        nxt[tr[idx * rr + e]] += (w == 0) ? v : v * xi[w];
                    }
                }
                cur.swap(nxt);
                ++t;
            }
        }
        for (std::size_t row = 0; row < count; ++row) {
            table.values_[row * count + col] = cur[row] / dim[row];
        }
    }
    return table;
}

std::complex<double> ZonalTable::value(std::size_t k_rank, std::size_t l_rank) const {
    if (k_rank >= size() || l_rank >= size()) {
        throw std::out_of_range("ZonalTable::value: rank out of range");
    }
    return values_[k_rank * size() + l_rank];
}

std::complex<double> ZonalTable::value(const Composition& k, const Composition& l) const {
    if (k.urns() != urns_ || k.balls() != balls_ || l.urns() != urns_ || l.balls() != balls_) {
        throw std::invalid_argument("ZonalTable::value: composition from another table");
    }
    return value(composition_rank(k), composition_rank(l));
}

ZonalTable zonal_table(int urns, int balls, std::size_t max_types) {
    return ZonalTable::build(urns, balls, max_types);
}

GroupElement::GroupElement(std::vector<int> colors, std::vector<int> permutation, int modulus)
    : colors_(std::move(colors)), permutation_(std::move(permutation)), modulus_(modulus) {
    if (modulus_ < 1) {
        throw std::invalid_argument("GroupElement: modulus must be positive");
    }
    if (colors_.size() != permutation_.size()) {
        throw std::invalid_argument("GroupElement: colors and permutation lengths differ");
    }
    for (int c : colors_) {
        if (c < 0 || c >= modulus_) {
            throw std::invalid_argument("GroupElement: color out of range");
        }
    }
    std::vector<bool> seen(permutation_.size(), false);
    for (int p : permutation_) {
        if (p < 0 || static_cast<std::size_t>(p) >= permutation_.size() ||
            seen[static_cast<std::size_t>(p)]) {
            throw std::invalid_argument("GroupElement: permutation is not a bijection");
        }
        seen[static_cast<std::size_t>(p)] = true;
    }
}

Composition group_element_type(const GroupElement& g) {
    std::vector<int> counts(static_cast<std::size_t>(g.modulus()), 0);
    for (int c : g.colors()) {
        ++counts[static_cast<std::size_t>(c)];
    }
    return Composition(std::move(counts));
}

}  // namespace urnmix
