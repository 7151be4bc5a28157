#include <gtest/gtest.h>

#include "fring/constructions.hpp"
#include "fring/ring.hpp"
#include "oracles.hpp"

using namespace fring;

namespace {

// Z/nZ with multiplication replaced by a*b + 1, which breaks distributivity.
class BrokenModel final : public RingModel {
public:
    Index size() const override { return 3; }
    Index one() const override { return 1; }
    Index add(Index a, Index b) const override { return (a + b) % 3; }
    Index neg(Index a) const override { return (3 - a) % 3; }
    Index mul(Index a, Index b) const override { return a == 1 ? b : b == 1 ? a : (a * b + 1) % 3; }
};

}  // namespace

TEST(Ring, IntegersModArithmetic) {
    const FiniteRing z6 = integers_mod(6);
    EXPECT_EQ(z6.size(), 6u);
    EXPECT_EQ(z6.one(), 1u);
    EXPECT_EQ(z6.add(4, 5), 3u);
    EXPECT_EQ(z6.mul(4, 5), 2u);
    EXPECT_EQ(z6.neg(2), 4u);
    EXPECT_EQ(z6.label(), "Z6");
    EXPECT_FALSE(z6.basis().has_value());
    EXPECT_TRUE(z6.tabulated());
}

TEST(Ring, PrimeFieldCarriesBasis) {
    const FiniteRing f5 = prime_field(5);
    ASSERT_TRUE(f5.basis().has_value());
    EXPECT_EQ(f5.basis()->characteristic, 5u);
    EXPECT_EQ(f5.basis()->dimension(), 1u);
    for (Index a = 1; a < 5; ++a) {
        ASSERT_TRUE(f5.inverse(a).has_value());
        EXPECT_EQ(f5.mul(a, *f5.inverse(a)), 1u);
    }
    EXPECT_THROW(prime_field(4), UsageError);
    EXPECT_THROW(integers_mod(0), UsageError);
}

TEST(Ring, PrimalityHelper) {
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(7));
    EXPECT_FALSE(is_prime(9));
}

TEST(Ring, AxiomsHoldForConstructions) {
    for (const FiniteRing& r : {integers_mod(4), prime_field(3),
                                matrix_ring({MatrixFamily::Full, 2, prime_field(2)}),
                                matrix_ring({MatrixFamily::UpperTriangular, 2, integers_mod(4)})}) {
        const AxiomReport rep = r.verify_axioms();
        EXPECT_TRUE(rep.ok) << r.label() << ": " << rep.violation;
    }
}

TEST(Ring, AxiomsSampledAboveThreshold) {
    const FiniteRing m = matrix_ring({MatrixFamily::Full, 2, prime_field(3)});
    const AxiomReport rep = m.verify_axioms(7);
    EXPECT_TRUE(rep.ok);
    EXPECT_FALSE(rep.exhaustive_triples);
    EXPECT_EQ(rep, m.verify_axioms(7));
}

TEST(Ring, AxiomViolationReported) {
    const FiniteRing bad(std::make_shared<BrokenModel>(), "broken");
    const AxiomReport rep = bad.verify_axioms();
    EXPECT_FALSE(rep.ok);
    EXPECT_FALSE(rep.violation.empty());
}

TEST(Ring, CenterAndIdempotentsMatchOracle) {
    for (const FiniteRing& r : {integers_mod(12), matrix_ring({MatrixFamily::Full, 2, prime_field(2)}),
                                matrix_ring({MatrixFamily::UpperTriangular, 3, prime_field(2)})}) {
        EXPECT_EQ(r.center().size(), oracle::center_size(r)) << r.label();
        EXPECT_EQ(r.idempotents().size(), oracle::idempotent_count(r)) << r.label();
        for (Index a = 0; a < r.size(); ++a) {
            EXPECT_EQ(r.is_central(a), oracle::central(r, a));
            EXPECT_EQ(r.is_unit(a), oracle::unit(r, a));
        }
    }
}

TEST(Ring, UnitsAreRegularInFiniteRings) {
    const FiniteRing r = matrix_ring({MatrixFamily::UpperTriangular, 2, integers_mod(4)});
    for (Index a = 0; a < r.size(); ++a) EXPECT_EQ(r.is_regular(a), r.is_unit(a));
}

TEST(Ring, CommutativityDetected) {
    EXPECT_TRUE(integers_mod(9).is_commutative());
    EXPECT_FALSE(matrix_ring({MatrixFamily::UpperTriangular, 2, prime_field(2)}).is_commutative());
}

TEST(Ring, FingerprintStableAcrossInstances) {
    const FiniteRing a = matrix_ring({MatrixFamily::Full, 2, prime_field(2)});
    const FiniteRing b = matrix_ring({MatrixFamily::Full, 2, prime_field(2)});
    EXPECT_NE(a.id(), b.id());
    EXPECT_EQ(a.fingerprint(), b.fingerprint());
    EXPECT_EQ(a.fingerprint_hex().size(), 16u);
    EXPECT_NE(a.fingerprint(), matrix_ring({MatrixFamily::UpperTriangular, 2, prime_field(2)}).fingerprint());
}

TEST(Ring, ElementsAreTiedToTheirRing) {
    const FiniteRing a = integers_mod(5);
    const FiniteRing b = integers_mod(5);
    const Element x = a.element(3);
    EXPECT_EQ(a.index_of(a.mul(x, x)), 4u);
    EXPECT_THROW(b.index_of(x), UsageError);
    EXPECT_THROW(b.add(x, b.element(1)), UsageError);
}
