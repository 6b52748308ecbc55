#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eigenspace.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "matrix.hpp"

namespace orbifold_hkr {

/// Index of an element in MatrixGroup::elements().
using ElementId = std::size_t;

/// Conjugacy class, stored as element indices. Members and centralizer are sorted ascending.
struct ConjClass {
    ElementId representative = 0;
    std::vector<ElementId> members;
    std::vector<ElementId> centralizer;
};

/// Finite group of invertible rational matrices with its full element list.
///
/// Elements are enumerated breadth-first from the identity, multiplying on the right by the
/// generators in their given order; element 0 is always the identity.
class MatrixGroup {
public:
    static MatrixGroup generate(std::vector<RationalMatrix> generators, std::size_t cap = default_cap) {
        if (generators.empty()) {
            throw InputError("at least one generator is required");
        }
        const std::size_t n = generators.front().rows();
        if (n == 0) {
            throw NonSquareMatrix("generators must be at least 1x1");
        }
        for (std::size_t k = 0; k < generators.size(); ++k) {
            const auto& g = generators[k];
            if (!g.is_square() || g.rows() != n) {
                throw NonSquareMatrix("generator " + std::to_string(k) + " is not " + std::to_string(n) + "x" +
                                      std::to_string(n));
            }
            if (is_zero(determinant(g))) {
                throw NotInvertible("generator " + std::to_string(k) + " is singular");
            }
            matrix_order(g, cap);
        }

        MatrixGroup G;
        G.dim_ = n;
        G.generators_ = std::move(generators);
        G.add(RationalMatrix::identity(n), cap);
        for (std::size_t next = 0; next < G.elements_.size(); ++next) {
            for (const auto& gen : G.generators_) {
                RationalMatrix prod = G.elements_[next] * gen;
                if (!G.index_.contains(prod)) {
                    G.add(std::move(prod), cap);
                }
            }
        }
        G.finish();
        return G;
    }

    std::size_t ambient_dim() const noexcept { return dim_; }
    std::size_t order() const noexcept { return elements_.size(); }
    std::size_t exponent() const noexcept { return exponent_; }
    const std::vector<RationalMatrix>& generators() const noexcept { return generators_; }
    const std::vector<RationalMatrix>& elements() const noexcept { return elements_; }
    const RationalMatrix& element(ElementId i) const { return elements_.at(i); }
    std::size_t element_order(ElementId i) const { return orders_.at(i); }
    ElementId identity() const noexcept { return 0; }
    ElementId inverse(ElementId i) const { return inverses_.at(i); }

    ElementId multiply(ElementId a, ElementId b) const { return id_of(elements_.at(a) * elements_.at(b)); }

    ElementId id_of(const RationalMatrix& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) {
            throw InternalError("matrix is not an element of the group");
        }
        return it->second;
    }

    bool contains(const RationalMatrix& m) const { return index_.contains(m); }

    bool is_abelian() const {
        for (const auto& a : generators_) {
            for (const auto& b : generators_) {
                if (!(a * b == b * a)) {
                    return false;
                }
            }
        }
        return true;
    }

private:
    void add(RationalMatrix m, std::size_t cap) {
        if (elements_.size() >= cap) {
            throw CapExceeded("group closure exceeds cap " + std::to_string(cap) + " elements");
        }
        index_.emplace(m, elements_.size());
        elements_.push_back(std::move(m));
    }

    void finish() {
        orders_.resize(elements_.size());
        inverses_.resize(elements_.size());
        exponent_ = 1;
        for (ElementId i = 0; i < elements_.size(); ++i) {
            // powers of g stay inside the group, so walk them through the index
            const auto& g = elements_[i];
            RationalMatrix power = g;
            RationalMatrix previous = RationalMatrix::identity(dim_);
            std::size_t k = 1;
            while (index_.at(power) != 0) {
                previous = power;
                power = power * g;
                ++k;
            }
            orders_[i] = k;
            inverses_[i] = index_.at(previous);
            exponent_ = std::lcm(exponent_, k);
        }
    }

    std::size_t dim_ = 0;
    std::size_t exponent_ = 1;
    std::vector<RationalMatrix> generators_;
    std::vector<RationalMatrix> elements_;
    std::vector<std::size_t> orders_;
    std::vector<ElementId> inverses_;
    std::unordered_map<RationalMatrix, ElementId, RationalMatrixHash> index_;
};

inline MatrixGroup generate(std::vector<RationalMatrix> generators, std::size_t cap = default_cap) {
    return MatrixGroup::generate(std::move(generators), cap);
}

inline std::size_t exponent(const MatrixGroup& G) { return G.exponent(); }

/// Conjugacy classes in enumeration order of their representatives.
///
/// Orbits are closed under conjugation by the generators (which suffices in a finite group);
/// centralizers are found by testing commutation against every element.
inline std::vector<ConjClass> conjugacy_classes(const MatrixGroup& G) {
    const std::size_t order = G.order();
    std::vector<bool> assigned(order, false);
    std::vector<RationalMatrix> gen_inverses;
    for (const auto& g : G.generators()) {
        gen_inverses.push_back(inverse(g));
    }
    std::vector<ConjClass> classes;
    for (ElementId rep = 0; rep < order; ++rep) {
        if (assigned[rep]) {
            continue;
        }
        ConjClass cls;
        cls.representative = rep;
        std::deque<ElementId> queue{rep};
        assigned[rep] = true;
        while (!queue.empty()) {
            const ElementId x = queue.front();
            queue.pop_front();
            cls.members.push_back(x);
            for (std::size_t k = 0; k < G.generators().size(); ++k) {
                const ElementId y = G.id_of(G.generators()[k] * G.element(x) * gen_inverses[k]);
                if (!assigned[y]) {
                    assigned[y] = true;
                    queue.push_back(y);
                }
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        const auto& g = G.element(rep);
        for (ElementId h = 0; h < order; ++h) {
            if (G.element(h) * g == g * G.element(h)) {
                cls.centralizer.push_back(h);
            }
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

} // namespace orbifold_hkr
