#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fring/ring.hpp"

namespace fring {

/// Polynomial in one indeterminate over a FiniteRing. coeffs[i] is the
/// coefficient of x^i; trailing zeros are stripped after every operation, so
/// the zero polynomial has no coefficients.
class Polynomial {
public:
    explicit Polynomial(FiniteRing ring, std::vector<Index> coeffs = {});

    const FiniteRing& ring() const noexcept { return ring_; }
    const std::vector<Index>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Index coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    std::string format() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }

private:
    FiniteRing ring_;
    std::vector<Index> coeffs_;
};

/// Convolution product. Throws UsageError when the rings differ.
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_add(const Polynomial& f, const Polynomial& g);

/// Index of a polynomial with degree <= d in the canonical enumeration:
/// sum of coeff(i) * |R|^i. Constant polynomials come first.
std::uint64_t poly_index(const FiniteRing& r, const std::vector<Index>& coeffs);
/// Coefficients (length d+1, not normalized) of the polynomial with index k.
std::vector<Index> poly_from_index(const FiniteRing& r, std::uint64_t k, int max_degree);

}  // namespace fring
