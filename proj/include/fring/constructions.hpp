#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fring/ring.hpp"

namespace fring {

inline constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 16;

struct ConstructionOptions {
    std::uint64_t size_cap = kDefaultSizeCap;
};

enum class MatrixFamily {
    Full,               // M_n
    UpperTriangular,    // T_n
    Diagonal,           // S_n
    ConstantDiagonal,   // D_n: upper triangular, one shared main-diagonal entry
    ConstantDiagonals,  // V_n: upper triangular, constant along each diagonal
};

struct MatrixShape {
    MatrixFamily family = MatrixFamily::Full;
    unsigned n = 1;
    FiniteRing base;
};

/// Number of independent base-ring entries of an n x n matrix in `family`.
std::size_t free_entries(MatrixFamily family, unsigned n);

/// Entries are encoded mixed-radix in row-major order of each free slot's
/// first occurrence, slot 0 least significant. For V_n this makes the index of
/// (a_1, ..., a_n) equal to the index of a_1 + a_2 x + ... in quotient_poly.
FiniteRing matrix_ring(const MatrixShape& shape, const ConstructionOptions& opts = {});

/// Componentwise product, component 0 least significant in the index.
FiniteRing product(std::span<const FiniteRing> rings, const ConstructionOptions& opts = {});

/// R[x]/(x^n): coefficient sequences (a_0, ..., a_{n-1}), a_0 least significant.
FiniteRing quotient_poly(const FiniteRing& base, unsigned n, const ConstructionOptions& opts = {});

/// Index of the element whose matrix entries are `entries` (row-major n x n).
/// Throws UsageError if the matrix is not in the family.
Index matrix_index(const MatrixShape& shape, std::span<const Index> entries);
/// Row-major entries of element `a` of matrix_ring(shape).
std::vector<Index> matrix_entries(const MatrixShape& shape, Index a);
/// Unit matrix E_{ij} (1-based) scaled by base element `r`.
Index unit_matrix(const MatrixShape& shape, unsigned i, unsigned j, Index r);

/// eR for a central idempotent e, with identity e. `embedding[k]` is the
/// parent index of element k; members keep the parent's index order.
struct Corner {
    FiniteRing ring;
    std::vector<Index> embedding;
};
Corner corner(const FiniteRing& r, Index e);

/// A two-sided ideal given by its members in canonical order.
struct IdealData {
    FiniteRing parent;
    std::vector<Index> members;
};
/// Validates closure under addition and two-sided absorption.
IdealData make_ideal(const FiniteRing& parent, std::vector<Index> members);

/// R/I with cosets represented by their least parent index.
/// `projection[a]` is the quotient index of parent element a.
struct Quotient {
    FiniteRing ring;
    std::vector<Index> projection;
    std::vector<Index> representatives;
};
Quotient quotient_by_ideal(const FiniteRing& r, const IdealData& ideal);

/// An ideal viewed as a ring without identity. Local index k denotes parent
/// element members[k]; index 0 is zero.
class NonunitalRing {
public:
    explicit NonunitalRing(IdealData ideal);

    Index size() const noexcept { return static_cast<Index>(ideal_.members.size()); }
    static constexpr Index zero() noexcept { return 0; }
    Index add(Index a, Index b) const;
    Index neg(Index a) const;
    Index mul(Index a, Index b) const;
    bool is_central(Index a) const { return central_[a] != 0; }
    const std::vector<std::uint8_t>& central_flags() const noexcept { return central_; }
    const std::optional<BasisInfo>& basis() const noexcept { return no_basis_; }
    const IdealData& ideal() const noexcept { return ideal_; }
    std::string format(Index a) const;
    std::string label() const;

private:
    Index local(Index parent_index) const;

    IdealData ideal_;
    std::vector<Index> to_local_;
    std::vector<std::uint8_t> central_;
    std::optional<BasisInfo> no_basis_;
};
NonunitalRing ideal_as_nonunital(const IdealData& ideal);

/// True iff `map` (indexed by elements of a) is a bijection onto b that
/// preserves addition, multiplication and the identity.
bool iso_check(const FiniteRing& a, const FiniteRing& b, std::span<const Index> map);
/// Injective unital homomorphism a -> b.
bool is_embedding(const FiniteRing& a, const FiniteRing& b, std::span<const Index> map);
/// Backtracking search for an isomorphism; rings above `max_size` elements
/// are refused with CapacityError.
std::optional<std::vector<Index>> find_isomorphism(const FiniteRing& a, const FiniteRing& b,
                                                   Index max_size = 64);

struct LocalizationSpec {
    FiniteRing parent;
    std::vector<Index> denominators;
};

/// For a finite ring every central regular element is a unit, so RS^{-1} is
/// the parent itself under r -> r/1. The result carries that map and the
/// inverse of each denominator as the collapse certificate.
struct Localization {
    FiniteRing ring;
    std::vector<Index> canonical_map;
    std::vector<std::pair<Index, Index>> inverses;
};
Localization localize(const LocalizationSpec& spec);

/// Central elements that are neither left nor right zero divisors.
std::vector<Index> central_regular_elements(const FiniteRing& r);

}  // namespace fring
