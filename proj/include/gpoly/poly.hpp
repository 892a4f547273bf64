#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpoly/errors.hpp"
#include "gpoly/rational.hpp"

namespace gpoly {

/// Dense univariate polynomial over Rat, coefficients in ascending order
/// (index = power of x). Canonical form: the zero polynomial is the empty
/// coefficient vector; otherwise the last coefficient is nonzero. The degree
/// of the zero polynomial is "minus infinity", modeled as std::nullopt.
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly constant(Rat value) { return Poly(std::vector<Rat>{std::move(value)}); }

    /// c * x^k
    static Poly monomial(Rat coeff, std::size_t power) {
        std::vector<Rat> coeffs(power + 1);
        coeffs[power] = std::move(coeff);
        return Poly(std::move(coeffs));
    }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) {
            return std::nullopt;
        }
        return coeffs_.size() - 1;
    }

    const std::vector<Rat>& coefficients() const { return coeffs_; }

    /// Coefficient of x^k; zero beyond the degree.
    const Rat& coeff(std::size_t k) const {
        static const Rat zero{};
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }

    /// Exact evaluation by Horner's rule.
    Rat operator()(const Rat& t) const {
        Rat acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * t + *it;
        }
        return acc;
    }

    Poly operator-() const {
        std::vector<Rat> out(coeffs_.size());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            out[k] = -coeffs_[k];
        }
        return Poly(std::move(out));
    }

    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<Rat> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] = p.coeff(k) + q.coeff(k);
        }
        return Poly(std::move(out));
    }

    friend Poly operator-(const Poly& p, const Poly& q) {
        std::vector<Rat> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] = p.coeff(k) - q.coeff(k);
        }
        return Poly(std::move(out));
    }

    /// Exact convolution product.
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) {
            return Poly{};
        }
        std::vector<Rat> out(p.coeffs_.size() + q.coeffs_.size() - 1);
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            if (p.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
                out[i + j] += p.coeffs_[i] * q.coeffs_[j];
            }
        }
        return Poly(std::move(out));
    }

    friend Poly operator*(const Rat& scalar, const Poly& p) {
        std::vector<Rat> out(p.coeffs_.size());
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] = scalar * p.coeffs_[k];
        }
        return Poly(std::move(out));
    }

    friend Poly operator*(const Poly& p, const Rat& scalar) { return scalar * p; }

    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator-=(const Poly& q) { return *this = *this - q; }

    friend bool operator==(const Poly& p, const Poly& q) { return p.coeffs_ == q.coeffs_; }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    /// The unique polynomial of degree < points.size() through all points.
    /// Throws DuplicateAbscissa when two x-values coincide.
    static Poly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
        if (points.empty()) {
            throw Error("interpolation requires at least one point");
        }
        Poly result;
        for (std::size_t i = 0; i < points.size(); ++i) {
            Poly basis = Poly::constant(1);
            Rat denom = 1;
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (j == i) {
                    continue;
                }
                if (points[i].first == points[j].first) {
                    throw DuplicateAbscissa("duplicate abscissa " + to_string(points[i].first));
                }
                basis = basis * Poly({-points[j].first, Rat(1)});
                denom *= points[i].first - points[j].first;
            }
            result += basis * (points[i].second / denom);
        }
        return result;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rat> coeffs_;
};

/// Formal derivative.
inline Poly derivative(const Poly& p) {
    if (p.is_zero() || p.coefficients().size() == 1) {
        return Poly{};
    }
    std::vector<Rat> out(p.coefficients().size() - 1);
    for (std::size_t k = 1; k < p.coefficients().size(); ++k) {
        out[k - 1] = Rat(k) * p.coefficients()[k];
    }
    return Poly(std::move(out));
}

/// Ascending list of coefficient strings, e.g. x^2 - 1 -> ["-1", "0", "1"].
/// The zero polynomial serializes as ["0"].
inline std::vector<std::string> coefficient_strings(const Poly& p) {
    if (p.is_zero()) {
        return {"0"};
    }
    std::vector<std::string> out;
    out.reserve(p.coefficients().size());
    for (const Rat& c : p.coefficients()) {
        out.push_back(to_string(c));
    }
    return out;
}

inline Poly poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rat> out;
    out.reserve(coeffs.size());
    for (const std::string& c : coeffs) {
        out.push_back(parse_rat(c));
    }
    return Poly(std::move(out));
}

}  // namespace gpoly
