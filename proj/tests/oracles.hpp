#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fring/properties.hpp"
#include "fring/ring.hpp"

// Brute-force reference implementations. They use only the ring's add and
// mul and straightforward loops, never the library's pruning or linear algebra.
namespace oracle {

using fring::FiniteRing;
using fring::Index;

inline std::vector<Index> poly(const FiniteRing& r, std::uint64_t k, int d) {
    std::vector<Index> c(static_cast<std::size_t>(d + 1));
    for (auto& x : c) {
        x = static_cast<Index>(k % r.size());
        k /= r.size();
    }
    return c;
}

inline std::uint64_t poly_count(const FiniteRing& r, int d) {
    std::uint64_t n = 1;
    for (int i = 0; i <= d; ++i) n *= r.size();
    return n;
}

inline bool product_zero(const FiniteRing& r, const std::vector<Index>& f, const std::vector<Index>& g) {
    for (std::size_t k = 0; k + 1 < f.size() + g.size(); ++k) {
        Index s = 0;
        for (std::size_t i = 0; i <= k; ++i)
            if (i < f.size() && k - i < g.size()) s = r.add(s, r.mul(f[i], g[k - i]));
        if (s != 0) return false;
    }
    return true;
}

inline bool central(const FiniteRing& r, Index a) {
    for (Index t = 0; t < r.size(); ++t)
        if (r.mul(a, t) != r.mul(t, a)) return false;
    return true;
}

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs(const FiniteRing& r, int d) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const std::uint64_t n = poly_count(r, d);
    for (std::uint64_t a = 1; a < n; ++a) {
        const auto f = poly(r, a, d);
        for (std::uint64_t b = 1; b < n; ++b)
            if (product_zero(r, f, poly(r, b, d))) out.emplace_back(a, b);
    }
    return out;
}

inline bool right_side(fring::Property p) {
    return p == fring::Property::RightMcCoy || p == fring::Property::RightCentralMcCoy;
}

inline bool central_variant(fring::Property p) {
    return p == fring::Property::RightCentralMcCoy || p == fring::Property::LeftCentralMcCoy;
}

inline bool witness_ok(const FiniteRing& r, fring::Property p, const std::vector<Index>& coeffs, Index w) {
    for (Index a : coeffs) {
        const Index v = right_side(p) ? r.mul(a, w) : r.mul(w, a);
        if (central_variant(p) ? !central(r, v) : v != 0) return false;
    }
    return true;
}

inline std::optional<Index> witness(const FiniteRing& r, fring::Property p, const std::vector<Index>& coeffs) {
    for (Index w = 1; w < r.size(); ++w)
        if (witness_ok(r, p, coeffs, w)) return w;
    return std::nullopt;
}

/// Canonical McCoy-type answer: the least primary (f for right checks, g for
/// left checks) with a zero-product partner and no witness, plus its least
/// partner. nullopt when every pair has a witness.
struct McCoyRefutation {
    std::uint64_t f = 0;
    std::uint64_t g = 0;
};

inline std::optional<McCoyRefutation> mccoy(const FiniteRing& r, fring::Property p, int d) {
    const std::uint64_t n = poly_count(r, d);
    const bool right = right_side(p);
    for (std::uint64_t a = 1; a < n; ++a) {
        const auto primary = poly(r, a, d);
        std::optional<std::uint64_t> partner;
        for (std::uint64_t b = 1; b < n && !partner; ++b) {
            const auto other = poly(r, b, d);
            if (right ? product_zero(r, primary, other) : product_zero(r, other, primary)) partner = b;
        }
        if (!partner) continue;
        if (!witness(r, p, primary)) return right ? McCoyRefutation{a, *partner} : McCoyRefutation{*partner, a};
    }
    return std::nullopt;
}

/// True when some zero-product pair has a coefficient product that is
/// nonzero (Armendariz) or noncentral (Central Armendariz).
inline bool armendariz_refuted(const FiniteRing& r, bool central_variant, int d) {
    for (const auto& [a, b] : pairs(r, d)) {
        const auto f = poly(r, a, d), g = poly(r, b, d);
        for (Index x : f)
            for (Index y : g) {
                const Index v = r.mul(x, y);
                if (central_variant ? !central(r, v) : v != 0) return true;
            }
    }
    return false;
}

inline bool reversible(const FiniteRing& r) {
    for (Index a = 0; a < r.size(); ++a)
        for (Index b = 0; b < r.size(); ++b)
            if (r.mul(a, b) == 0 && r.mul(b, a) != 0) return false;
    return true;
}

inline bool semicommutative(const FiniteRing& r) {
    for (Index a = 0; a < r.size(); ++a)
        for (Index b = 0; b < r.size(); ++b)
            if (r.mul(a, b) == 0)
                for (Index t = 0; t < r.size(); ++t)
                    if (r.mul(r.mul(a, t), b) != 0) return false;
    return true;
}

inline bool abelian(const FiniteRing& r) {
    for (Index e = 0; e < r.size(); ++e)
        if (r.mul(e, e) == e && !central(r, e)) return false;
    return true;
}

inline bool reduced(const FiniteRing& r) {
    for (Index a = 1; a < r.size(); ++a)
        if (r.mul(a, a) == 0) return false;
    return true;
}

inline std::size_t center_size(const FiniteRing& r) {
    std::size_t n = 0;
    for (Index a = 0; a < r.size(); ++a) n += central(r, a) ? 1 : 0;
    return n;
}

inline std::size_t idempotent_count(const FiniteRing& r) {
    std::size_t n = 0;
    for (Index a = 0; a < r.size(); ++a) n += r.mul(a, a) == a ? 1 : 0;
    return n;
}

inline bool unit(const FiniteRing& r, Index a) {
    for (Index b = 0; b < r.size(); ++b)
        if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) return true;
    return false;
}

inline bool property_holds(const FiniteRing& r, fring::Property p, int d) {
    using fring::Property;
    switch (p) {
        case Property::RightMcCoy:
        case Property::LeftMcCoy:
        case Property::RightCentralMcCoy:
        case Property::LeftCentralMcCoy:
            return !mccoy(r, p, d).has_value();
        case Property::Armendariz:
            return !armendariz_refuted(r, false, d);
        case Property::CentralArmendariz:
            return !armendariz_refuted(r, true, d);
        case Property::Reversible:
            return reversible(r);
        case Property::Semicommutative:
            return semicommutative(r);
        case Property::Abelian:
            return abelian(r);
        case Property::Reduced:
            return reduced(r);
    }
    return false;
}

}  // namespace oracle
