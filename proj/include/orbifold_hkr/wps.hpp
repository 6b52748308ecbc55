#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

// Inertia of the weighted projective stack P(a_0, …, a_n) = [(𝔸^{n+1} ∖ 0) / 𝔾_m].
//
// A point fixed by ζ ∈ 𝔾_m has nonzero coordinates only where ζ^{a_i} = 1, so every root of
// unity in ⋃ μ_{a_i} labels one component P(a_i : i ∈ S(ζ)).

namespace orbifold_hkr {

struct WeightedStack {
    std::vector<std::uint64_t> weights;

    explicit WeightedStack(std::vector<std::uint64_t> w) : weights(std::move(w)) {
        if (weights.empty()) {
            throw InputError("weighted projective stack needs at least one weight");
        }
        for (auto a : weights) {
            if (a == 0) {
                throw InputError("weights must be positive");
            }
        }
    }

    std::size_t dimension() const noexcept { return weights.size() - 1; }

    std::uint64_t lcm_of_weights() const {
        std::uint64_t l = 1;
        for (auto a : weights) {
            l = std::lcm(l, a);
        }
        return l;
    }
};

/// Component of the inertia labelled by ζ = exp(2πi·k/N), N = lcm of the weights.
struct InertiaComponent {
    std::uint64_t root_order = 1; // N
    std::uint64_t root_index = 0; // k ∈ [0, N)
    std::vector<std::size_t> support;
    std::vector<std::uint64_t> component_weights;

    /// Order of ζ in 𝔾_m.
    std::uint64_t order() const { return root_order / std::gcd(root_order, root_index); }
    std::size_t dimension() const { return support.size() - 1; }
    bool untwisted() const { return root_index == 0; }
};

/// Components in increasing root index k.
inline std::vector<InertiaComponent> inertia_components(const WeightedStack& W) {
    const std::uint64_t N = W.lcm_of_weights();
    std::vector<InertiaComponent> out;
    for (std::uint64_t k = 0; k < N; ++k) {
        const std::uint64_t ord = N / std::gcd(N, k);
        InertiaComponent c;
        c.root_order = N;
        c.root_index = k;
        for (std::size_t i = 0; i < W.weights.size(); ++i) {
            if (W.weights[i] % ord == 0) {
                c.support.push_back(i);
                c.component_weights.push_back(W.weights[i]);
            }
        }
        if (!c.support.empty()) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

/// h^{p,q} of a weighted projective stack of dimension `dim`: δ_{p,q} for 0 ≤ p ≤ dim.
inline std::uint64_t wps_hodge_number(std::size_t dim, std::size_t p, std::size_t q) {
    return p == q && p <= dim ? 1 : 0;
}

/// i ↦ dim HH_i = Σ_components Σ_{q − p = −i} h^{p,q}; only nonzero degrees are listed.
inline std::map<long, std::uint64_t> hh_vector(const WeightedStack& W) {
    std::map<long, std::uint64_t> hh;
    for (const auto& c : inertia_components(W)) {
        const std::size_t dim = c.dimension();
        for (std::size_t p = 0; p <= dim; ++p) {
            for (std::size_t q = 0; q <= dim; ++q) {
                const std::uint64_t h = wps_hodge_number(dim, p, q);
                if (h != 0) {
                    hh[static_cast<long>(p) - static_cast<long>(q)] += h;
                }
            }
        }
    }
    return hh;
}

} // namespace orbifold_hkr
