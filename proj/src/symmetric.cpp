#include "urnmix/symmetric.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace urnmix {

std::complex<double> root_of_unity(int order, long long exponent) {
    if (order < 1) {
        throw std::invalid_argument("root_of_unity: order must be positive");
    }
    long long e = exponent % order;
    if (e < 0) e += order;
    // Pin the real axis exactly; sin(pi) as a double is ~1.2e-16, not 0, and
    // that dust would otherwise leak into every nominally real table.
    if (e == 0) return {1.0, 0.0};
    if (2 * e == order) return {-1.0, 0.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / order;
    return {std::cos(angle), std::sin(angle)};
}

RootOfUnityMultiset::RootOfUnityMultiset(Composition multiplicities)
    : mult_(std::move(multiplicities)) {}

std::vector<std::complex<double>> RootOfUnityMultiset::values() const {
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int j = 0; j < order(); ++j) {
        const std::complex<double> v = root_of_unity(order(), j);
        for (int c = 0; c < mult_[static_cast<std::size_t>(j)]; ++c) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<std::complex<double>> elementary_symmetric_all(
    std::span<const std::complex<double>> values) {
    // Expand prod_i (1 + x_i t) one factor at a time; coefficient j is e_j.
    std::vector<std::complex<double>> e(values.size() + 1, 0.0);
    e[0] = 1.0;
    std::size_t filled = 0;
    for (const std::complex<double>& x : values) {
        ++filled;
        for (std::size_t j = filled; j >= 1; --j) {
            e[j] += x * e[j - 1];
        }
    }
    return e;
}

std::complex<double> elementary_symmetric(int j, std::span<const std::complex<double>> values) {
    if (j < 0 || static_cast<std::size_t>(j) > values.size()) {
        throw std::invalid_argument("elementary_symmetric: index out of range");
    }
    return elementary_symmetric_all(values)[static_cast<std::size_t>(j)];
}

namespace detail {

std::vector<BigInt> monomial_symmetric_residue_coefficients(const Composition& k,
                                                            const Composition& l) {
    if (k.urns() != l.urns() || k.balls() != l.balls()) {
        throw std::invalid_argument("monomial_symmetric_at_type: k and l must share r and n");
    }
    const int r = k.urns();

    // m_lambda(k) evaluated at l distinct values with multiplicities: sum
    // over ways of splitting the exponent multiset lambda(k) across the r
    // value classes.  A state records how many exponents of each kind are
    // still unplaced; its coefficient vector accumulates, per residue t, the
    // weighted count of partial assignments contributing xi^t.  Class j
    // receives a sub-multiset a (sum a_i = l_j) in C(l_j; a) ways -- the
    // choice of which of the l_j equal variables gets which exponent -- and
    // multiplies the evaluation by xi^{j * sum_i i*a_i}.
    using State = std::vector<int>;
    const std::size_t rr = static_cast<std::size_t>(r);
    std::map<State, std::vector<BigInt>> current;
    {
        std::vector<BigInt> one(rr, 0);
        one[0] = 1;
        current.emplace(k.parts(), std::move(one));
    }

    std::vector<int> pick(rr, 0);
    for (int cls = 0; cls < r; ++cls) {
        const int slots = l[static_cast<std::size_t>(cls)];
        std::map<State, std::vector<BigInt>> next;
        for (const auto& [state, coeffs] : current) {
            auto commit = [&]() {
                BigInt ways = 1;
                {
                    int rem = slots;
                    for (std::size_t i = 0; i < rr; ++i) {
                        ways *= binomial(rem, pick[i]);
                        rem -= pick[i];
                    }
                }
                long long shift = 0;
                for (std::size_t i = 0; i < rr; ++i) {
                    shift += static_cast<long long>(i) * pick[i];
                }
                shift = (shift % r) * cls % r;

                State reduced = state;
                for (std::size_t i = 0; i < rr; ++i) reduced[i] -= pick[i];

                auto [it, fresh] = next.try_emplace(std::move(reduced));
                if (fresh) it->second.assign(rr, 0);
                for (std::size_t t = 0; t < rr; ++t) {
                    if (coeffs[t] == 0) continue;
                    it->second[(t + static_cast<std::size_t>(shift)) % rr] +=
                        coeffs[t] * ways;
                }
            };
            // enumerate sub-multisets `pick` of `state` with sum = slots; the
            // last kind's count is forced by the remainder
            auto walk = [&](auto&& self, std::size_t kind, int left) -> void {
                if (kind + 1 == rr) {
                    if (left > state[kind]) return;
                    pick[kind] = left;
                    commit();
                    return;
                }
                for (int take = std::min(left, state[kind]); take >= 0; --take) {
                    pick[kind] = take;
                    self(self, kind + 1, left - take);
                }
            };
            walk(walk, 0, slots);
        }
        current = std::move(next);
    }

    const State empty(rr, 0);
    auto it = current.find(empty);
    if (it == current.end()) {
        // cannot happen: the multiplicities of l sum to n, as do the parts of k
        throw std::logic_error("monomial_symmetric_at_type: assignment DP lost mass");
    }
    return it->second;
}

}  // namespace detail

std::complex<double> monomial_symmetric_at_type(const Composition& k, const Composition& l) {
    const std::vector<BigInt> coeffs = detail::monomial_symmetric_residue_coefficients(k, l);
    const int r = k.urns();
    std::complex<double> acc = 0.0;
    for (int t = 0; t < r; ++t) {
        const BigInt& c = coeffs[static_cast<std::size_t>(t)];
        if (c == 0) continue;
        acc += c.convert_to<double>() * root_of_unity(r, t);
    }
    return acc;
}

}  // namespace urnmix
