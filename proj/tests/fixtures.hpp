#pragma once

#include <random>
#include <string>
#include <vector>

#include "orbifold_hkr/orbifold_hkr.hpp"

// Groups shared by the test binaries. Seeds are fixed so failures reproduce.

namespace fixtures {

using orbifold_hkr::Rational;
using orbifold_hkr::RationalMatrix;

inline RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    RationalMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long x : row) {
            m(i, j++) = Rational(x);
        }
        ++i;
    }
    return m;
}

struct NamedGroup {
    std::string name;
    std::vector<RationalMatrix> generators;
};

inline NamedGroup c2_sign() { return {"C2 sign on A1", {mat({{-1}})}}; }
inline NamedGroup c2_pm_identity() { return {"C2 = +-I on A2", {mat({{-1, 0}, {0, -1}})}}; }
inline NamedGroup c4_rotation() { return {"C4 rotation on A2", {mat({{0, -1}, {1, 0}})}}; }
inline NamedGroup s3_permutation() {
    return {"S3 permutation on A3", {mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), mat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})}};
}

/// The acceptance sweep.
inline std::vector<NamedGroup> sweep() { return {c2_sign(), c2_pm_identity(), c4_rotation(), s3_permutation()}; }

/// Extra groups for the property tests. D6 acts through a nonorthogonal integral basis.
inline std::vector<NamedGroup> extra() {
    return {
        {"D4 on A2", {mat({{0, -1}, {1, 0}}), mat({{1, 0}, {0, -1}})}},
        {"C3 on A3 with fixed line", {mat({{0, -1, 0}, {1, -1, 0}, {0, 0, 1}})}},
        {"D6 hexagonal on A2", {mat({{1, -1}, {1, 0}}), mat({{0, 1}, {1, 0}})}},
        {"trivial on A2", {mat({{1, 0}, {0, 1}})}},
    };
}

inline std::vector<NamedGroup> all_groups() {
    auto out = sweep();
    for (auto& g : extra()) {
        out.push_back(std::move(g));
    }
    return out;
}

inline Rational random_rational(std::mt19937& rng, long bound = 9) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rational(num(rng), den(rng));
}

} // namespace fixtures
