#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace orbifold_hkr {

namespace detail {
template <class F>
bool coeff_is_zero(const F& x) {
    return is_zero(x);
}
} // namespace detail

/// Dense univariate polynomial, lowest degree first. The zero polynomial has no coefficients.
template <class F>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const F& c) { return UniPoly(std::vector<F>{c}); }
    static UniPoly monomial(const F& c, std::size_t degree) {
        std::vector<F> v(degree + 1, c - c);
        v[degree] = c;
        return UniPoly(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; the zero polynomial reports -1.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<F>& coeffs() const noexcept { return coeffs_; }

    F coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : F(0); }
    const F& leading() const {
        if (coeffs_.empty()) {
            throw std::domain_error("leading coefficient of zero polynomial");
        }
        return coeffs_.back();
    }

    F operator()(const F& x) const {
        F acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), F(0));
        }
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            coeffs_[k] += o.coeffs_[k];
        }
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), F(0));
        }
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            coeffs_[k] -= o.coeffs_[k];
        }
        trim();
        return *this;
    }
    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::coeff_is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return UniPoly(std::move(out));
    }

    friend UniPoly operator*(UniPoly a, const F& s) {
        for (auto& c : a.coeffs_) {
            c *= s;
        }
        a.trim();
        return a;
    }

    /// Euclidean division; returns (quotient, remainder).
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) {
            throw DivisionByZero("polynomial division by zero");
        }
        if (a.degree() < b.degree()) {
            return {UniPoly(), a};
        }
        std::vector<F> rem = a.coeffs_;
        std::vector<F> quo(a.coeffs_.size() - b.coeffs_.size() + 1, F(0));
        const F lead_inv = F(1) / b.leading();
        for (std::size_t k = quo.size(); k-- > 0;) {
            const F q = rem[k + b.coeffs_.size() - 1] * lead_inv;
            quo[k] = q;
            if (detail::coeff_is_zero(q)) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                rem[k + j] -= q * b.coeffs_[j];
            }
        }
        rem.resize(b.coeffs_.size() - 1);
        return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
        if (p.is_zero()) {
            return os << '0';
        }
        bool first = true;
        for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
            if (detail::coeff_is_zero(p.coeffs_[k])) {
                continue;
            }
            os << (first ? "" : " + ") << '(' << p.coeffs_[k] << ')';
            if (k > 0) {
                os << "*x^" << k;
            }
            first = false;
        }
        return os;
    }

    /// Unique polynomial of degree < points.size() through (points[i], values[i]).
    static UniPoly interpolate(std::span<const F> points, std::span<const F> values) {
        if (points.size() != values.size()) {
            throw std::invalid_argument("interpolation: size mismatch");
        }
        UniPoly result;
        for (std::size_t i = 0; i < points.size(); ++i) {
            UniPoly basis = UniPoly::constant(F(1));
            F denom(1);
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (j == i) {
                    continue;
                }
                basis = basis * UniPoly(std::vector<F>{-points[j], F(1)});
                denom *= points[i] - points[j];
            }
            result += basis * (values[i] / denom);
        }
        return result;
    }

private:
    void trim() {
        while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    std::vector<F> coeffs_;
};

} // namespace orbifold_hkr
