#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace orbifold_hkr {

/// The m-th cyclotomic polynomial Φ_m, computed as (x^m − 1) / Π_{d | m, d < m} Φ_d.
inline UniPoly<Rational> cyclotomic_polynomial(unsigned m) {
    if (m == 0) {
        throw std::invalid_argument("cyclotomic polynomial of conductor 0");
    }
    static std::mutex mutex;
    static std::map<unsigned, UniPoly<Rational>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) {
            return it->second;
        }
    }
    UniPoly<Rational> p = UniPoly<Rational>::monomial(Rational(1), m) - UniPoly<Rational>::constant(Rational(1));
    for (unsigned d = 1; d < m; ++d) {
        if (m % d == 0) {
            auto [q, r] = divmod(p, cyclotomic_polynomial(d));
            if (!r.is_zero()) {
                throw InternalError("cyclotomic polynomial division left a remainder");
            }
            p = std::move(q);
        }
    }
    std::lock_guard lock(mutex);
    return cache.emplace(m, std::move(p)).first->second;
}

inline unsigned euler_phi(unsigned m) {
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

namespace detail {

/// Reduction data for ℚ(ζ_m): powers x^k mod Φ_m in the power basis.
struct CyclotomicModulus {
    unsigned conductor = 1;
    std::size_t degree = 1;
    std::vector<std::vector<Rational>> powers; // powers[k] = x^k mod Φ_m, k < max(m, 2φ−1)

    explicit CyclotomicModulus(unsigned m) : conductor(m), degree(euler_phi(m)) {
        const auto phi_poly = cyclotomic_polynomial(m);
        const std::size_t count = std::max<std::size_t>(m, 2 * degree - 1);
        powers.reserve(count);
        std::vector<Rational> current(degree, Rational(0));
        current[0] = Rational(1);
        for (std::size_t k = 0; k < count; ++k) {
            powers.push_back(current);
            // multiply by x and reduce using the monic relation x^φ = −Σ c_i x^i
            const Rational top = current[degree - 1];
            for (std::size_t i = degree - 1; i > 0; --i) {
                current[i] = current[i - 1];
            }
            current[0] = Rational(0);
            if (!top.is_zero()) {
                for (std::size_t i = 0; i < degree; ++i) {
                    current[i] -= top * phi_poly.coeff(i);
                }
            }
        }
    }
};

inline const CyclotomicModulus* cyclotomic_modulus(unsigned m) {
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<const CyclotomicModulus>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) {
            return it->second.get();
        }
    }
    auto built = std::make_unique<const CyclotomicModulus>(m);
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(m, std::move(built));
    return it->second.get();
}

} // namespace detail

/// Element of ℚ(ζ_m) in the power basis 1, ζ, …, ζ^{φ(m)−1}, fully reduced modulo Φ_m.
///
/// Values of conductor 1 are plain rationals and combine with any conductor through the
/// canonical embedding ℚ ⊂ ℚ(ζ_m). Two values with distinct conductors > 1 must be embedded
/// into a common field by the caller first; mixing them raises ConductorMismatch.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(Rational(0)) {}

    template <std::integral I>
    Cyclotomic(I value) : Cyclotomic(Rational(value)) {}

    Cyclotomic(const Rational& value) : mod_(rational_modulus()), coords_{value} {}

    Cyclotomic(unsigned conductor, std::vector<Rational> coords)
        : mod_(detail::cyclotomic_modulus(conductor)), coords_(std::move(coords)) {
        if (coords_.size() != mod_->degree) {
            throw std::invalid_argument("cyclotomic coordinate vector has wrong length");
        }
    }

    /// ζ_m^k.
    static Cyclotomic root_of_unity(unsigned conductor, long k = 1) {
        const auto* mod = detail::cyclotomic_modulus(conductor);
        long e = k % static_cast<long>(conductor);
        if (e < 0) {
            e += conductor;
        }
        Cyclotomic z;
        z.mod_ = mod;
        z.coords_ = mod->powers[static_cast<std::size_t>(e)];
        return z;
    }

    unsigned conductor() const noexcept { return mod_->conductor; }
    std::size_t degree() const noexcept { return mod_->degree; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_) {
            if (!c.is_zero()) {
                return false;
            }
        }
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coords_.size(); ++i) {
            if (!coords_[i].is_zero()) {
                return false;
            }
        }
        return true;
    }

    Rational to_rational() const {
        if (!is_rational()) {
            throw std::domain_error("cyclotomic value " + str() + " is not rational");
        }
        return coords_[0];
    }

    /// Image under ℚ(ζ_m) ⊂ ℚ(ζ_M), ζ_m ↦ ζ_M^{M/m}. Requires m | M.
    Cyclotomic embed(unsigned target) const {
        if (target == conductor()) {
            return *this;
        }
        if (target == 0 || target % conductor() != 0) {
            throw ConductorMismatch("cannot embed conductor " + std::to_string(conductor()) + " into " +
                                    std::to_string(target));
        }
        const auto* mod = detail::cyclotomic_modulus(target);
        const unsigned step = target / conductor();
        Cyclotomic out;
        out.mod_ = mod;
        out.coords_.assign(mod->degree, Rational(0));
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i].is_zero()) {
                continue;
            }
            const auto& image = mod->powers[(i * step) % target];
            for (std::size_t j = 0; j < mod->degree; ++j) {
                out.coords_[j] += coords_[i] * image[j];
            }
        }
        return out;
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coords_) {
            c = -c;
        }
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        const Cyclotomic rhs = align(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            coords_[i] += rhs.coords_[i];
        }
        return *this;
    }

    Cyclotomic& operator-=(const Cyclotomic& o) {
        const Cyclotomic rhs = align(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            coords_[i] -= rhs.coords_[i];
        }
        return *this;
    }

    Cyclotomic& operator*=(const Cyclotomic& o) {
        if (o.conductor() == 1) {
            for (auto& c : coords_) {
                c *= o.coords_[0];
            }
            return *this;
        }
        if (conductor() == 1) {
            const Rational s = coords_[0];
            *this = o;
            for (auto& c : coords_) {
                c *= s;
            }
            return *this;
        }
        check_same(o);
        const std::size_t phi = degree();
        std::vector<Rational> prod(2 * phi - 1, Rational(0));
        for (std::size_t i = 0; i < phi; ++i) {
            if (coords_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < phi; ++j) {
                prod[i + j] += coords_[i] * o.coords_[j];
            }
        }
        std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(phi));
        for (std::size_t k = phi; k < prod.size(); ++k) {
            if (prod[k].is_zero()) {
                continue;
            }
            const auto& red = mod_->powers[k];
            for (std::size_t i = 0; i < phi; ++i) {
                out[i] += prod[k] * red[i];
            }
        }
        coords_ = std::move(out);
        return *this;
    }

    /// Multiplicative inverse by solving a·x = 1 in the power basis.
    Cyclotomic inv() const {
        if (is_zero()) {
            throw DivisionByZero("inverse of zero in a cyclotomic field");
        }
        const std::size_t phi = degree();
        if (phi == 1) {
            return Cyclotomic(conductor(), {Rational(1) / coords_[0]});
        }
        // column j of the multiplication matrix is a·ζ^j
        Matrix<Rational> aug(phi, phi + 1);
        for (std::size_t j = 0; j < phi; ++j) {
            const Cyclotomic col = *this * root_of_unity(conductor(), static_cast<long>(j));
            for (std::size_t i = 0; i < phi; ++i) {
                aug(i, j) = col.coords_[i];
            }
        }
        aug(0, phi) = Rational(1);
        const auto ech = row_reduce(std::move(aug));
        std::vector<Rational> x(phi, Rational(0));
        for (std::size_t i = 0; i < ech.rank(); ++i) {
            if (ech.pivot_columns[i] == phi) {
                throw InternalError("inconsistent system while inverting a cyclotomic number");
            }
            x[ech.pivot_columns[i]] = ech.reduced(i, phi);
        }
        return Cyclotomic(conductor(), std::move(x));
    }

    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inv(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    Cyclotomic pow(unsigned long e) const {
        Cyclotomic result(Rational(1));
        Cyclotomic base = *this;
        while (e > 0) {
            if (e & 1u) {
                result *= base;
            }
            base *= base;
            e >>= 1u;
        }
        return result;
    }

    /// Equality after embedding both sides into ℚ(ζ_lcm).
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor() == b.conductor()) {
            return a.coords_ == b.coords_;
        }
        const unsigned l = std::lcm(a.conductor(), b.conductor());
        return a.embed(l).coords_ == b.embed(l).coords_;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) {
        bool first = true;
        for (std::size_t i = 0; i < z.coords_.size(); ++i) {
            if (z.coords_[i].is_zero()) {
                continue;
            }
            if (!first) {
                os << " + ";
            }
            first = false;
            if (i == 0) {
                os << z.coords_[i];
            } else {
                os << '(' << z.coords_[i] << ")*z" << z.conductor() << '^' << i;
            }
        }
        if (first) {
            os << '0';
        }
        return os;
    }

private:
    static const detail::CyclotomicModulus* rational_modulus() {
        static const detail::CyclotomicModulus* mod = detail::cyclotomic_modulus(1);
        return mod;
    }

    void check_same(const Cyclotomic& o) const {
        if (o.conductor() != conductor()) {
            throw ConductorMismatch("cyclotomic conductors " + std::to_string(conductor()) + " and " +
                                    std::to_string(o.conductor()) + " differ");
        }
    }

    /// Brings `o` (or *this) to a common conductor when one side is rational.
    Cyclotomic align(const Cyclotomic& o) {
        if (o.conductor() == conductor()) {
            return o;
        }
        if (o.conductor() == 1) {
            return o.embed(conductor());
        }
        if (conductor() == 1) {
            *this = embed(o.conductor());
            return o;
        }
        check_same(o);
        return o;
    }

    const detail::CyclotomicModulus* mod_;
    std::vector<Rational> coords_;
};

inline bool is_zero(const Cyclotomic& z) { return z.is_zero(); }

using CyclotomicMatrix = Matrix<Cyclotomic>;

inline CyclotomicMatrix embed_matrix(const RationalMatrix& m, unsigned conductor) {
    return m.map<Cyclotomic>([&](const Rational& r) { return Cyclotomic(r).embed(conductor); });
}

} // namespace orbifold_hkr
