#include "fring/polynomial.hpp"

#include <algorithm>

namespace fring {

namespace {

void strip(std::vector<Index>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(FiniteRing ring, std::vector<Index> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_)
        if (c >= ring_.size()) throw UsageError("polynomial coefficient out of range");
    strip(coeffs_);
}

std::string Polynomial::format() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        const std::string c = ring_.format(coeffs_[i]);
        if (i == 0) out += c;
        else out += c + (i == 1 ? " x" : " x^" + std::to_string(i));
    }
    return out;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    if (!(f.ring() == g.ring())) throw UsageError("poly_mul: polynomials over different rings");
    if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
    const auto& r = f.ring();
    std::vector<Index> out(f.coeffs().size() + g.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            out[i + j] = r.add(out[i + j], r.mul(f.coeffs()[i], g.coeffs()[j]));
    return Polynomial(r, std::move(out));
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
    if (!(f.ring() == g.ring())) throw UsageError("poly_add: polynomials over different rings");
    const auto& r = f.ring();
    std::vector<Index> out(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.add(f.coeff(i), g.coeff(i));
    return Polynomial(r, std::move(out));
}

std::uint64_t poly_index(const FiniteRing& r, const std::vector<Index>& coeffs) {
    std::uint64_t out = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) out = out * r.size() + coeffs[i];
    return out;
}

std::vector<Index> poly_from_index(const FiniteRing& r, std::uint64_t k, int max_degree) {
    std::vector<Index> c(static_cast<std::size_t>(max_degree + 1));
    for (auto& x : c) {
        x = static_cast<Index>(k % r.size());
        k /= r.size();
    }
    return c;
}

}  // namespace fring
