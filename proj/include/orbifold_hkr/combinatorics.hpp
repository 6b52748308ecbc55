#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace orbifold_hkr {

using Exponents = std::vector<unsigned>;

/// All exponent vectors in `vars` variables of total degree `degree`, in lexicographically
/// decreasing order (x_0^d first).
inline std::vector<Exponents> monomials_of_degree(std::size_t vars, std::size_t degree) {
    std::vector<Exponents> out;
    if (vars == 0) {
        if (degree == 0) {
            out.emplace_back();
        }
        return out;
    }
    Exponents current(vars, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t remaining) -> void {
        if (pos + 1 == vars) {
            current[pos] = static_cast<unsigned>(remaining);
            out.push_back(current);
            return;
        }
        for (std::size_t k = remaining + 1; k-- > 0;) {
            current[pos] = static_cast<unsigned>(k);
            self(self, pos + 1, remaining - k);
        }
    };
    rec(rec, 0, degree);
    return out;
}

/// k-element subsets of {0, …, n−1} as increasing index lists, in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) {
        return out;
    }
    std::vector<std::size_t> current;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (current.size() == k) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = start; i + (k - current.size()) <= n; ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// dim Sym^d of a `vars`-dimensional space.
inline std::uint64_t sym_dimension(std::uint64_t vars, std::uint64_t d) {
    if (vars == 0) {
        return d == 0 ? 1 : 0;
    }
    return binomial(vars + d - 1, d);
}

template <class Key>
std::map<Key, std::size_t> index_of(const std::vector<Key>& keys) {
    std::map<Key, std::size_t> idx;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        idx.emplace(keys[i], i);
    }
    return idx;
}

} // namespace orbifold_hkr
