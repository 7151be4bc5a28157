#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fring/error.hpp"

namespace fring {

/// Canonical element index inside one ring. Index 0 is always zero.
using Index = std::uint32_t;

/// Rings with at most this many elements get materialized operation tables.
inline constexpr Index kTabulationLimit = Index{1} << 12;

/// Present when the ring is an F_p-algebra whose canonical index is the
/// mixed-radix (base p) encoding of coordinates in `names`, coordinate 0
/// least significant. Element with index p^k is basis vector k.
struct BasisInfo {
    unsigned characteristic = 0;
    std::vector<std::string> names;

    std::size_t dimension() const noexcept { return names.size(); }
    bool operator==(const BasisInfo&) const = default;
};

/// Element handle tied to a ring instance.
struct Element {
    std::uint64_t ring_id = 0;
    Index index = 0;

    auto operator<=>(const Element&) const = default;
};

/// Operations behind a FiniteRing. Constructions implement this; FiniteRing
/// tabulates small models and forwards to the model otherwise.
class RingModel {
public:
    virtual ~RingModel() = default;
    virtual Index size() const = 0;
    virtual Index one() const = 0;
    virtual Index add(Index a, Index b) const = 0;
    virtual Index neg(Index a) const = 0;
    virtual Index mul(Index a, Index b) const = 0;
    virtual std::string format(Index a) const { return "#" + std::to_string(a); }
};

/// Outcome of verify_axioms. `violation` is empty when every checked law held.
struct AxiomReport {
    bool ok = true;
    bool exhaustive_triples = true;
    std::uint64_t triples_checked = 0;
    std::string violation;

    bool operator==(const AxiomReport&) const = default;
};

namespace detail {
struct RingData;
}

/// Immutable finite associative ring with identity. Copies share state, so
/// passing by value is cheap; all queries are safe to call concurrently.
class FiniteRing {
public:
    FiniteRing(std::shared_ptr<const RingModel> model, std::string label,
               std::optional<BasisInfo> basis = std::nullopt);

    Index size() const noexcept;
    static constexpr Index zero() noexcept { return 0; }
    Index one() const noexcept;

    Index add(Index a, Index b) const;
    Index neg(Index a) const;
    Index sub(Index a, Index b) const { return add(a, neg(b)); }
    Index mul(Index a, Index b) const;

    Element element(Index a) const;
    Element add(Element a, Element b) const;
    Element mul(Element a, Element b) const;
    /// Throws UsageError when `a` belongs to another ring.
    Index index_of(Element a) const;

    const std::string& label() const noexcept;
    const std::optional<BasisInfo>& basis() const noexcept;
    std::uint64_t id() const noexcept;
    bool tabulated() const noexcept;
    std::string format(Index a) const;

    /// Stable 64-bit FNV-1a hash over size, zero, one and the add/mul tables
    /// restricted to the first min(size, 4096) indices.
    std::uint64_t fingerprint() const;
    std::string fingerprint_hex() const;

    const std::vector<Index>& center() const;
    /// One byte per element, nonzero iff central.
    const std::vector<std::uint8_t>& central_flags() const;
    bool is_central(Index a) const;
    std::vector<Index> idempotents() const;
    std::vector<Index> central_idempotents() const;
    bool is_regular(Index a) const;
    bool is_unit(Index a) const;
    std::optional<Index> inverse(Index a) const;
    bool is_commutative() const;

    /// Additive group laws exhaustively (size <= 4096), associativity and
    /// distributivity exhaustively for size <= 64 and by seeded sampling above.
    AxiomReport verify_axioms(std::uint64_t seed = 0) const;

    const RingModel& model() const noexcept;

    friend bool operator==(const FiniteRing& a, const FiniteRing& b) noexcept {
        return a.d_ == b.d_;
    }

private:
    std::shared_ptr<detail::RingData> d_;
};

/// Z/nZ; carries basis info when n is prime.
FiniteRing integers_mod(unsigned n);
/// F_p for a prime p. Throws UsageError otherwise.
FiniteRing prime_field(unsigned p);

bool is_prime(unsigned n) noexcept;

}  // namespace fring
