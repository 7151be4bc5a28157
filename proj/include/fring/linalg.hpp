#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fring::linalg {

/// Coordinates over F_p, p <= 7, one byte each. Position 0 is the least
/// significant digit when a vector is read as a base-p index.
using Vec = std::vector<std::uint8_t>;

/// Arithmetic in F_p for a small prime p.
class PrimeField {
public:
    explicit PrimeField(unsigned p);

    unsigned p() const noexcept { return p_; }
    std::uint8_t add(unsigned a, unsigned b) const noexcept { return static_cast<std::uint8_t>((a + b) % p_); }
    std::uint8_t sub(unsigned a, unsigned b) const noexcept { return static_cast<std::uint8_t>((a + p_ - b) % p_); }
    std::uint8_t mul(unsigned a, unsigned b) const noexcept { return static_cast<std::uint8_t>((a * b) % p_); }
    std::uint8_t neg(unsigned a) const noexcept { return static_cast<std::uint8_t>((p_ - a) % p_); }
    std::uint8_t inv(unsigned a) const;

private:
    unsigned p_;
    std::vector<std::uint8_t> inverse_;
};

/// Dense row-major matrix over F_p.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::uint8_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Basis of { x : M x = 0 }.
std::vector<Vec> nullspace_basis(const Matrix& m, unsigned p);
std::size_t rank(const Matrix& m, unsigned p);

/// Reads v as a base-p number.
std::uint64_t encode(const Vec& v, unsigned p) noexcept;
Vec decode(std::uint64_t index, std::size_t length, unsigned p);

/// A subspace of F_p^n kept in top-reduced echelon form: each basis row has
/// leading coefficient 1 at its highest nonzero position and every other row
/// is zero there. In that form the base-p index order of the subspace members
/// is the lexicographic order of their coordinate tuples, which makes
/// ascending enumeration and the least nonzero member direct.
class Subspace {
public:
    Subspace(std::vector<Vec> spanning, std::size_t length, unsigned p);

    std::size_t dimension() const noexcept { return rows_.size(); }
    std::size_t length() const noexcept { return length_; }
    const std::vector<Vec>& rows() const noexcept { return rows_; }

    /// Least nonzero member by index. Requires dimension() > 0.
    const Vec& min_nonzero() const { return rows_.back(); }

    /// Calls fn(vec) for every nonzero member in ascending index order; stops
    /// early when fn returns false.
    template <class Fn>
    void for_each_nonzero_ascending(Fn&& fn) const {
        const std::size_t m = rows_.size();
        if (m == 0) return;
        std::vector<unsigned> digits(m, 0);
        Vec v(length_, 0);
        while (true) {
            std::size_t pos = m;
            while (pos > 0) {
                --pos;
                if (++digits[pos] < p_) break;
                digits[pos] = 0;
                if (pos == 0) return;
            }
            std::fill(v.begin(), v.end(), 0);
            for (std::size_t r = 0; r < m; ++r) {
                if (digits[r] == 0) continue;
                for (std::size_t k = 0; k < length_; ++k)
                    v[k] = static_cast<std::uint8_t>((v[k] + digits[r] * rows_[r][k]) % p_);
            }
            if (!fn(static_cast<const Vec&>(v))) return;
        }
    }

private:
    std::size_t length_;
    unsigned p_;
    std::vector<Vec> rows_;  // sorted by pivot, highest first
};

}  // namespace fring::linalg
