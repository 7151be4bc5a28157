#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fring/constructions.hpp"
#include "fring/fp_algebra.hpp"
#include "fring/polynomial.hpp"
#include "fring/ring.hpp"

namespace fring {

enum class Property {
    RightMcCoy,
    LeftMcCoy,
    RightCentralMcCoy,
    LeftCentralMcCoy,
    Armendariz,
    CentralArmendariz,
    Reversible,
    Semicommutative,
    Abelian,
    Reduced,
};

std::string_view property_name(Property p) noexcept;
std::optional<Property> parse_property(std::string_view name) noexcept;
const std::vector<Property>& all_properties();
/// McCoy and Central McCoy, either side: a witness r is searched per pair.
bool is_mccoy_type(Property p) noexcept;
/// Reversible, semicommutative, abelian, reduced: quantify over elements only.
bool is_element_level(Property p) noexcept;

enum class Polarity { Refuted, NotRefuted };

/// One line of a failed-witness transcript. For a right check `value` is
/// a_i r, for a left check r b_j, with `coefficient` = i or j. McCoy lines
/// record value != 0 and no probe; Central McCoy lines record a probe t with
/// lhs = value t != rhs = t value.
struct WitnessFailure {
    Index candidate = 0;
    std::uint32_t coefficient = 0;
    Index value = 0;
    std::optional<Index> probe;
    Index lhs = 0;
    Index rhs = 0;

    bool operator==(const WitnessFailure&) const = default;
};

/// Rank argument used on truncated algebras, where the witness space is too
/// large to list: the linear conditions on r have full rank, so r = 0.
struct LinearRefutation {
    std::size_t window_dimension = 0;
    std::size_t constraint_rank = 0;

    bool operator==(const LinearRefutation&) const = default;
};

struct Certificate {
    std::vector<Index> f;
    std::vector<Index> g;
    std::vector<std::string> f_forms;
    std::vector<std::string> g_forms;
    std::vector<WitnessFailure> transcript;
    /// Armendariz-type: the offending coefficient product a_i b_j.
    std::optional<std::pair<std::uint32_t, std::uint32_t>> product_indices;
    Index product_value = 0;
    /// Element-level properties: the violating tuple.
    std::vector<Index> tuple;
    std::optional<LinearRefutation> linear;

    bool operator==(const Certificate&) const = default;
};

/// Least-index witness accepted for one primary polynomial (f for right
/// checks, g for left checks) paired with its least partner.
struct WitnessRecord {
    std::uint64_t primary = 0;
    std::uint64_t partner = 0;
    Index witness = 0;

    bool operator==(const WitnessRecord&) const = default;
};

struct SearchStats {
    std::uint64_t primaries = 0;
    std::uint64_t pairs = 0;
    std::uint64_t witness_tests = 0;

    bool operator==(const SearchStats&) const = default;
};

/// REFUTED is exact and carries a certificate. NOT_REFUTED means the search
/// space up to `max_degree` (and `window` on truncated algebras) was
/// exhausted; element-level properties are `exact` in both polarities.
struct Verdict {
    Property property = Property::RightMcCoy;
    Polarity polarity = Polarity::NotRefuted;
    int max_degree = -1;
    bool exact = false;
    std::optional<std::size_t> window;
    std::optional<std::size_t> coefficient_window;
    bool bounded_witnesses = false;
    bool pruned = false;
    std::string note;
    std::optional<Certificate> certificate;
    std::optional<Index> universal_witness;
    SearchStats stats;
    std::vector<WitnessRecord> witnesses;
    double elapsed_seconds = 0;

    bool refuted() const noexcept { return polarity == Polarity::Refuted; }
    bool operator==(const Verdict&) const = default;
};

struct SearchOptions {
    unsigned workers = 1;
    /// Limit on the number of primary polynomials |R|^(d+1).
    std::uint64_t max_primaries = std::uint64_t{1} << 28;
    /// Limit on primary x partner work when no F_p structure is available.
    std::uint64_t max_exhaustive_pairs = std::uint64_t{1} << 34;
    /// Use nullspace enumeration of partners when the ring has BasisInfo.
    bool use_pruning = true;
};

/// Every pair of nonzero polynomials of degree <= d with f g = 0, as
/// polynomial indices, in ascending (f, g) order. `sink` returns false to stop.
void zero_divisor_pairs(const FiniteRing& r, int max_degree,
                        const std::function<bool(std::uint64_t, std::uint64_t)>& sink,
                        const SearchOptions& opts = {});
std::vector<std::pair<std::uint64_t, std::uint64_t>> zero_divisor_pairs(
    const FiniteRing& r, int max_degree, const SearchOptions& opts = {});

Verdict check_property(const FiniteRing& r, Property p, int max_degree, const SearchOptions& opts = {});
Verdict check_property(const NonunitalRing& r, Property p, int max_degree, const SearchOptions& opts = {});

Verdict check_right_mccoy(const FiniteRing& r, int d, const SearchOptions& opts = {});
Verdict check_left_mccoy(const FiniteRing& r, int d, const SearchOptions& opts = {});
Verdict check_right_central_mccoy(const FiniteRing& r, int d, const SearchOptions& opts = {});
Verdict check_left_central_mccoy(const FiniteRing& r, int d, const SearchOptions& opts = {});
Verdict check_armendariz(const FiniteRing& r, int d, const SearchOptions& opts = {});
Verdict check_central_armendariz(const FiniteRing& r, int d, const SearchOptions& opts = {});
Verdict check_reversible(const FiniteRing& r);
Verdict check_semicommutative(const FiniteRing& r);
Verdict check_abelian(const FiniteRing& r);
Verdict check_reduced(const FiniteRing& r);

/// Least c != 0 with a c central for every a; when it exists every right
/// Central McCoy question has the answer c regardless of degree.
std::optional<Index> universal_witness(const FiniteRing& r);

/// Least nonzero r with coeffs[i] r (right) or r coeffs[j] (left) zero or
/// central, according to the McCoy-type property `p`.
std::optional<Index> find_witness(const FiniteRing& r, Property p, const std::vector<Index>& coeffs);
/// Failure line for every nonzero candidate; empty lines are impossible, so
/// the result has |R| - 1 entries exactly when no witness exists.
std::vector<WitnessFailure> failure_transcript(const FiniteRing& r, Property p,
                                               const std::vector<Index>& coeffs);

/// Re-verifies a verdict's certificate from scratch.
bool recheck_certificate(const FiniteRing& r, const Verdict& v);

// ---- polynomials over R[x], packed back into R[x] ----

/// A polynomial in t whose coefficients are polynomials in x over R.
using PolyPoly = std::vector<Polynomial>;

PolyPoly polypoly_mul(const PolyPoly& f, const PolyPoly& g);
/// Substitutes t -> x^k. Requires k > deg f_i for every coefficient, so that
/// coefficient blocks cannot collide; throws UsageError otherwise.
Polynomial flatten_poly_poly(const PolyPoly& f, unsigned k);
/// The packing exponent for a pair: one more than the sum of all coefficient
/// degrees (zero polynomials count as degree 0).
unsigned packing_exponent(const PolyPoly& f, const PolyPoly& g);
/// Least (by coefficient index) nonzero c(x) of degree <= witness_degree with
/// f_i(x) c(x) in C(R[x]) = C(R)[x] for every i.
std::optional<Polynomial> poly_ring_witness(const FiniteRing& r, const PolyPoly& f, int witness_degree);

// ---- truncated algebras ----

struct TruncatedCheckOptions {
    int max_degree = 1;
    /// Polynomial coefficients range over irreducible words of length <= this
    /// (clipped to the algebra's window).
    std::size_t coefficient_window = 1;
    std::uint64_t max_primaries = std::uint64_t{1} << 22;
};

/// McCoy-type or Armendariz check over a truncated algebra. Witnesses range
/// over the full window; a witness whose validation products leave the
/// window is rejected, so refutations are reported as bounded.
Verdict check_on_truncated(const TruncatedAlgebra& view, Property p, const TruncatedCheckOptions& opts);

/// Witness search for one explicit pair on a truncated algebra. Returns the
/// least accepted witness as window coordinates, or the rank refutation.
struct TruncatedPairResult {
    bool product_is_zero = false;
    std::optional<std::vector<std::uint8_t>> witness;
    std::optional<LinearRefutation> refutation;
};
/// Every pair (f, g) of nonzero polynomials of degree <= d with coefficients
/// of word length <= coefficient_window and f g = 0, as coefficient lists.
struct TruncatedPair {
    std::vector<AlgebraElement> f;
    std::vector<AlgebraElement> g;
};
std::vector<TruncatedPair> truncated_zero_divisor_pairs(const TruncatedAlgebra& view, int max_degree,
                                                        std::size_t coefficient_window,
                                                        std::uint64_t max_pairs = std::uint64_t{1} << 20);

TruncatedPairResult check_pair_on_truncated(const TruncatedAlgebra& view, Property p,
                                            const std::vector<std::string>& f,
                                            const std::vector<std::string>& g);

}  // namespace fring
