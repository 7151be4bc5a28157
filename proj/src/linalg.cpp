#include "fring/linalg.hpp"

#include <bit>
#include <stdexcept>

namespace fring::linalg {

PrimeField::PrimeField(unsigned p) : p_(p), inverse_(p, 0) {
    for (unsigned a = 1; a < p; ++a)
        for (unsigned b = 1; b < p; ++b)
            if (a * b % p == 1) inverse_[a] = static_cast<std::uint8_t>(b);
}

std::uint8_t PrimeField::inv(unsigned a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
    return inverse_[a % p_];
}

namespace {

// Row-reduces in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(Matrix& m, const PrimeField& f) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
        const std::uint8_t scale = f.inv(m.at(row, col));
        for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) = f.mul(m.at(row, c), scale);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const std::uint8_t factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// GF(2) with at most 64 columns: rows packed into machine words.
std::vector<Vec> nullspace_gf2(const Matrix& m) {
    std::vector<std::uint64_t> rows(m.rows, 0);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            if (m.at(r, c) & 1u) rows[r] |= std::uint64_t{1} << c;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < rows.size(); ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t sel = row;
        while (sel < rows.size() && !(rows[sel] & bit)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[row]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != row && (rows[r] & bit)) rows[r] ^= rows[row];
        pivots.push_back(col);
        ++row;
    }
    std::vector<Vec> basis;
    std::uint64_t pivot_mask = 0;
    for (auto c : pivots) pivot_mask |= std::uint64_t{1} << c;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (pivot_mask & (std::uint64_t{1} << free)) continue;
        Vec v(m.cols, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            if (rows[k] & (std::uint64_t{1} << free)) v[pivots[k]] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::vector<Vec> nullspace_basis(const Matrix& m, unsigned p) {
    if (p == 2 && m.cols <= 64) return nullspace_gf2(m);
    PrimeField f(p);
    Matrix work = m;
    const auto pivots = rref(work, f);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = f.neg(work.at(k, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const Matrix& m, unsigned p) {
    PrimeField f(p);
    Matrix work = m;
    return rref(work, f).size();
}

std::uint64_t encode(const Vec& v, unsigned p) noexcept {
    std::uint64_t out = 0;
    for (std::size_t k = v.size(); k-- > 0;) out = out * p + v[k];
    return out;
}

Vec decode(std::uint64_t index, std::size_t length, unsigned p) {
    Vec v(length, 0);
    for (std::size_t k = 0; k < length; ++k) {
        v[k] = static_cast<std::uint8_t>(index % p);
        index /= p;
    }
    return v;
}

Subspace::Subspace(std::vector<Vec> spanning, std::size_t length, unsigned p)
    : length_(length), p_(p) {
    // Eliminate with columns visited from the top down so that each pivot is
    // the row's highest nonzero coordinate.
    PrimeField f(p);
    Matrix m(spanning.size(), length);
    for (std::size_t r = 0; r < spanning.size(); ++r)
        for (std::size_t c = 0; c < length; ++c) m.at(r, length - 1 - c) = spanning[r][c] % p;
    const auto pivots = rref(m, f);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        Vec v(length, 0);
        for (std::size_t c = 0; c < length; ++c) v[length - 1 - c] = m.at(k, c);
        rows_.push_back(std::move(v));
    }
}

}  // namespace fring::linalg
