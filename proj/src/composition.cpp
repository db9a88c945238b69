#include "urnmix/composition.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace urnmix {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw std::invalid_argument("Composition: needs at least one part");
    }
    for (int p : parts_) {
        if (p < 0) {
            throw std::invalid_argument("Composition: parts must be non-negative");
        }
        total_ += p;
    }
}

Composition Composition::concentrated(int urns, int balls, int urn) {
    if (urns < 1 || balls < 0 || urn < 0 || urn >= urns) {
        throw std::invalid_argument("Composition::concentrated: bad dimensions");
    }
    std::vector<int> parts(urns, 0);
    parts[urn] = balls;
    return Composition(std::move(parts));
}

std::string Composition::label(char sep) const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out.push_back(sep);
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Composition> compositions(int urns, int balls) {
    if (urns < 1) {
        throw std::invalid_argument("compositions: need at least one urn");
    }
    if (balls < 0) {
        throw std::invalid_argument("compositions: ball count must be non-negative");
    }

    std::vector<Composition> out;
    BigInt count = composition_count(urns, balls);
    if (count > std::numeric_limits<std::size_t>::max()) {
        throw std::length_error("compositions: count does not fit in size_t");
    }
    out.reserve(static_cast<std::size_t>(count));

    // Depth-first with the leading part taken as large as possible first:
    // that is exactly lexicographically decreasing order.
    std::vector<int> parts(static_cast<std::size_t>(urns), 0);
    auto emit = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == urns - 1) {
            parts[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(Composition(parts));
            return;
        }
        for (int take = remaining; take >= 0; --take) {
            parts[static_cast<std::size_t>(pos)] = take;
            self(self, pos + 1, remaining - take);
        }
    };
    emit(emit, 0, balls);
    return out;
}

BigInt composition_count(int urns, int balls) {
    if (urns < 1 || balls < 0) {
        throw std::invalid_argument("composition_count: bad dimensions");
    }
    return binomial(balls + urns - 1, urns - 1);
}

std::size_t composition_rank(const Composition& c) {
    // Count the compositions that precede c: at each position, those that
    // placed a strictly larger part there (with the same prefix).
    BigInt rank = 0;
    int remaining = c.balls();
    const int r = c.urns();
    for (int pos = 0; pos + 1 < r; ++pos) {
        const int tail = r - pos - 1;
        for (int take = remaining; take > c[static_cast<std::size_t>(pos)]; --take) {
            rank += composition_count(tail, remaining - take);
        }
        remaining -= c[static_cast<std::size_t>(pos)];
    }
    if (rank > std::numeric_limits<std::size_t>::max()) {
        throw std::length_error("composition_rank: rank does not fit in size_t");
    }
    return static_cast<std::size_t>(rank);
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i) at this point
    }
    return result;
}

BigInt multinomial(const Composition& k) {
    BigInt result = 1;
    int remaining = k.balls();
    for (int part : k.parts()) {
        result *= binomial(remaining, part);
        remaining -= part;
    }
    return result;
}

}  // namespace urnmix
