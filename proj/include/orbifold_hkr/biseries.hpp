#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace orbifold_hkr {

/// Bigraded series Σ c[p][d] u^p t^d: an exact polynomial in u (p ≤ u_max) and a power
/// series in t truncated after t^{t_max}.
template <class F>
class BasicBiSeries {
public:
    BasicBiSeries() : BasicBiSeries(0, 0) {}
    BasicBiSeries(std::size_t u_max, std::size_t t_max)
        : u_max_(u_max), t_max_(t_max), coeffs_((u_max + 1) * (t_max + 1), F(0)) {}

    static BasicBiSeries one(std::size_t u_max, std::size_t t_max) {
        BasicBiSeries s(u_max, t_max);
        s.at(0, 0) = F(1);
        return s;
    }

    std::size_t u_max() const noexcept { return u_max_; }
    std::size_t t_max() const noexcept { return t_max_; }

    F& at(std::size_t p, std::size_t d) {
        check(p, d);
        return coeffs_[p * (t_max_ + 1) + d];
    }
    const F& at(std::size_t p, std::size_t d) const {
        check(p, d);
        return coeffs_[p * (t_max_ + 1) + d];
    }
    /// Coefficient of u^p t^d; zero outside the stored rectangle in u.
    F coeff(std::size_t p, std::size_t d) const {
        if (d > t_max_) {
            throw std::out_of_range("coefficient beyond truncation order");
        }
        return p <= u_max_ ? at(p, d) : F(0);
    }

    /// Same series with u^p moved to u^{p+shift}.
    BasicBiSeries shift_u(std::size_t shift) const {
        BasicBiSeries out(u_max_ + shift, t_max_);
        for (std::size_t p = 0; p <= u_max_; ++p) {
            for (std::size_t d = 0; d <= t_max_; ++d) {
                out.at(p + shift, d) = at(p, d);
            }
        }
        return out;
    }

    /// Widens the u range to at least `u_max` (zero padding).
    BasicBiSeries with_u_max(std::size_t u_max) const {
        BasicBiSeries out(std::max(u_max, u_max_), t_max_);
        for (std::size_t p = 0; p <= u_max_; ++p) {
            for (std::size_t d = 0; d <= t_max_; ++d) {
                out.at(p, d) = at(p, d);
            }
        }
        return out;
    }

    template <class G, class Fn>
    BasicBiSeries<G> map(Fn&& fn) const {
        BasicBiSeries<G> out(u_max_, t_max_);
        for (std::size_t p = 0; p <= u_max_; ++p) {
            for (std::size_t d = 0; d <= t_max_; ++d) {
                out.at(p, d) = fn(at(p, d));
            }
        }
        return out;
    }

    /// Sum; the result keeps the wider u range and the smaller truncation order.
    friend BasicBiSeries operator+(const BasicBiSeries& a, const BasicBiSeries& b) {
        BasicBiSeries out(std::max(a.u_max_, b.u_max_), std::min(a.t_max_, b.t_max_));
        for (std::size_t p = 0; p <= out.u_max_; ++p) {
            for (std::size_t d = 0; d <= out.t_max_; ++d) {
                out.at(p, d) = a.coeff(p, d) + b.coeff(p, d);
            }
        }
        return out;
    }

    BasicBiSeries& operator+=(const BasicBiSeries& o) { return *this = *this + o; }

    /// Product; u degrees add exactly, t is truncated at the smaller order.
    friend BasicBiSeries operator*(const BasicBiSeries& a, const BasicBiSeries& b) {
        BasicBiSeries out(a.u_max_ + b.u_max_, std::min(a.t_max_, b.t_max_));
        for (std::size_t p1 = 0; p1 <= a.u_max_; ++p1) {
            for (std::size_t d1 = 0; d1 <= out.t_max_; ++d1) {
                const F& x = a.at(p1, d1);
                if (is_zero(x)) {
                    continue;
                }
                for (std::size_t p2 = 0; p2 <= b.u_max_; ++p2) {
                    for (std::size_t d2 = 0; d1 + d2 <= out.t_max_; ++d2) {
                        const F& y = b.at(p2, d2);
                        if (!is_zero(y)) {
                            out.at(p1 + p2, d1 + d2) += x * y;
                        }
                    }
                }
            }
        }
        return out;
    }

    friend BasicBiSeries operator*(BasicBiSeries a, const F& s) {
        for (auto& c : a.coeffs_) {
            c *= s;
        }
        return a;
    }

    /// Coefficient-wise equality over the common rectangle (missing u rows count as zero).
    friend bool operator==(const BasicBiSeries& a, const BasicBiSeries& b) {
        if (a.t_max_ != b.t_max_) {
            return false;
        }
        const std::size_t u = std::max(a.u_max_, b.u_max_);
        for (std::size_t p = 0; p <= u; ++p) {
            for (std::size_t d = 0; d <= a.t_max_; ++d) {
                if (!(a.coeff(p, d) == b.coeff(p, d))) {
                    return false;
                }
            }
        }
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const BasicBiSeries& s) {
        for (std::size_t p = 0; p <= s.u_max_; ++p) {
            os << "u^" << p << ":";
            for (std::size_t d = 0; d <= s.t_max_; ++d) {
                os << ' ' << s.at(p, d);
            }
            os << '\n';
        }
        return os;
    }

private:
    void check(std::size_t p, std::size_t d) const {
        if (p > u_max_ || d > t_max_) {
            throw std::out_of_range("bigraded coefficient index out of range");
        }
    }

    std::size_t u_max_;
    std::size_t t_max_;
    std::vector<F> coeffs_;
};

using BiSeries = BasicBiSeries<Rational>;

enum class Sign { plus, minus };

/// Which monomial the characteristic variable s becomes (t, u·t or plain u).
enum class Marker { t, u_t, u };

enum class FactorKind { numerator, reciprocal };

/// det(I + σ·s·M) as an exact polynomial in s (σ = ±1), by interpolation at s = 0..n.
template <class F>
UniPoly<F> det_polynomial(const Matrix<F>& m, Sign sign) {
    if (!m.is_square()) {
        throw NonSquareMatrix("det_polynomial of a non-square matrix");
    }
    const std::size_t n = m.rows();
    std::vector<F> points;
    std::vector<F> values;
    for (std::size_t k = 0; k <= n; ++k) {
        const F s = sign == Sign::plus ? F(static_cast<long>(k)) : F(-static_cast<long>(k));
        Matrix<F> a = Matrix<F>::identity(n) + m * s;
        points.push_back(F(static_cast<long>(k)));
        values.push_back(determinant(std::move(a)));
    }
    return UniPoly<F>::interpolate(points, values);
}

/// Truncated expansion of det(I ± marker·M) or of 1/det(I ± t·M) as a bigraded series.
///
/// The reciprocal form is only defined for the pure t marker (its u-degree would be unbounded).
/// The constant term of det(I ± t·M) is 1, so the reciprocal always exists as a power series.
template <class F>
BasicBiSeries<F> det_series_factor(const Matrix<F>& m, Sign sign, Marker marker, FactorKind kind, std::size_t t_max) {
    const UniPoly<F> q = det_polynomial(m, sign);
    const std::size_t n = m.rows();
    if (kind == FactorKind::numerator) {
        const std::size_t u_max = marker == Marker::t ? 0 : n;
        BasicBiSeries<F> out(u_max, t_max);
        for (std::size_t k = 0; k <= n; ++k) {
            const F c = q.coeff(k);
            switch (marker) {
            case Marker::t:
                if (k <= t_max) {
                    out.at(0, k) += c;
                }
                break;
            case Marker::u_t:
                if (k <= t_max) {
                    out.at(k, k) += c;
                }
                break;
            case Marker::u:
                out.at(k, 0) += c;
                break;
            }
        }
        return out;
    }
    if (marker != Marker::t) {
        throw std::invalid_argument("reciprocal determinant factor requires the t marker");
    }
    // power-series inverse of q, with q(0) = 1
    std::vector<F> inv(t_max + 1, F(0));
    inv[0] = F(1) / q.coeff(0);
    for (std::size_t d = 1; d <= t_max; ++d) {
        F acc(0);
        for (std::size_t k = 1; k <= std::min<std::size_t>(d, n); ++k) {
            acc += q.coeff(k) * inv[d - k];
        }
        inv[d] = -acc * inv[0];
    }
    BasicBiSeries<F> out(0, t_max);
    for (std::size_t d = 0; d <= t_max; ++d) {
        out.at(0, d) = inv[d];
    }
    return out;
}

} // namespace orbifold_hkr
