#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fring/constructions.hpp"
#include "fring/ring_expr.hpp"
#include "oracles.hpp"

using namespace fring;

namespace {

FiniteRing F2() { return prime_field(2); }

// Matrix product computed from entries, independent of the model's mul.
std::vector<Index> entry_product(const FiniteRing& base, unsigned n, const std::vector<Index>& a,
                                 const std::vector<Index>& b) {
    std::vector<Index> c(n * n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) c[i * n + j] = base.add(c[i * n + j], base.mul(a[i * n + k], b[k * n + j]));
    return c;
}

}  // namespace

TEST(Matrix, FamilySizes) {
    const FiniteRing f2 = F2();
    EXPECT_EQ(matrix_ring({MatrixFamily::Full, 2, f2}).size(), 16u);
    EXPECT_EQ(matrix_ring({MatrixFamily::UpperTriangular, 2, f2}).size(), 8u);
    EXPECT_EQ(matrix_ring({MatrixFamily::Diagonal, 3, f2}).size(), 8u);
    EXPECT_EQ(matrix_ring({MatrixFamily::ConstantDiagonal, 2, f2}).size(), 4u);
    EXPECT_EQ(matrix_ring({MatrixFamily::ConstantDiagonal, 3, f2}).size(), 16u);
    EXPECT_EQ(matrix_ring({MatrixFamily::ConstantDiagonals, 3, f2}).size(), 8u);
    EXPECT_EQ(free_entries(MatrixFamily::ConstantDiagonal, 4), 7u);
    EXPECT_EQ(free_entries(MatrixFamily::ConstantDiagonals, 4), 4u);
}

TEST(Matrix, MultiplicationMatchesEntryArithmetic) {
    for (MatrixFamily fam : {MatrixFamily::Full, MatrixFamily::UpperTriangular, MatrixFamily::ConstantDiagonal,
                             MatrixFamily::ConstantDiagonals}) {
        const MatrixShape s{fam, 2, integers_mod(3)};
        const FiniteRing m = matrix_ring(s);
        for (Index a = 0; a < m.size(); ++a)
            for (Index b = 0; b < m.size(); ++b)
                ASSERT_EQ(matrix_entries(s, m.mul(a, b)),
                          entry_product(s.base, 2, matrix_entries(s, a), matrix_entries(s, b)));
    }
}

TEST(Matrix, UnitMatrixIndices) {
    const MatrixShape m{MatrixFamily::Full, 2, F2()};
    EXPECT_EQ(unit_matrix(m, 1, 1, 1), 1u);
    EXPECT_EQ(unit_matrix(m, 1, 2, 1), 2u);
    EXPECT_EQ(unit_matrix(m, 2, 1, 1), 4u);
    EXPECT_EQ(unit_matrix(m, 2, 2, 1), 8u);
    const MatrixShape t{MatrixFamily::UpperTriangular, 2, F2()};
    EXPECT_EQ(unit_matrix(t, 1, 1, 1), 1u);
    EXPECT_EQ(unit_matrix(t, 1, 2, 1), 2u);
    EXPECT_EQ(unit_matrix(t, 2, 2, 1), 4u);
    EXPECT_THROW(unit_matrix(t, 2, 1, 1), UsageError);
    EXPECT_THROW(unit_matrix(t, 3, 1, 1), UsageError);
}

TEST(Matrix, IndexRoundTrip) {
    const MatrixShape s{MatrixFamily::ConstantDiagonal, 3, F2()};
    const FiniteRing d = matrix_ring(s);
    for (Index a = 0; a < d.size(); ++a) EXPECT_EQ(matrix_index(s, matrix_entries(s, a)), a);
    const std::vector<Index> bad{1, 0, 0, 0, 0, 0, 0, 0, 0};
    EXPECT_THROW(matrix_index(s, bad), UsageError);
}

TEST(Matrix, StructuredBaseKeepsBasis) {
    const FiniteRing s = build_ring("fp(ex22)");
    const FiniteRing q = quotient_poly(s, 2);
    ASSERT_TRUE(q.basis().has_value());
    EXPECT_EQ(q.basis()->dimension(), 8u);
    const FiniteRing m = matrix_ring({MatrixFamily::ConstantDiagonal, 2, matrix_ring({MatrixFamily::UpperTriangular, 2, F2()})});
    ASSERT_TRUE(m.basis().has_value());
    EXPECT_EQ(m.basis()->dimension(), 6u);
    EXPECT_FALSE(matrix_ring({MatrixFamily::Full, 2, integers_mod(4)}).basis().has_value());
}

TEST(Product, ComponentEncoding) {
    const std::vector<FiniteRing> parts{F2(), integers_mod(3)};
    const FiniteRing p = product(parts);
    EXPECT_EQ(p.size(), 6u);
    for (Index a = 0; a < 6; ++a)
        for (Index b = 0; b < 6; ++b) {
            const Index x = (a % 2) * (b % 2) % 2, y = (a / 2) * (b / 2) % 3;
            EXPECT_EQ(p.mul(a, b), x + 2 * y);
        }
    EXPECT_EQ(p.one(), 1u + 2u);
    EXPECT_THROW(product(std::vector<FiniteRing>{}), UsageError);
}

TEST(QuotientPoly, MatchesConstantDiagonals) {
    for (unsigned p : {2u, 3u})
        for (unsigned n : {2u, 3u}) {
            const FiniteRing v = matrix_ring({MatrixFamily::ConstantDiagonals, n, prime_field(p)});
            const FiniteRing q = quotient_poly(prime_field(p), n);
            std::vector<Index> id(v.size());
            std::iota(id.begin(), id.end(), Index{0});
            EXPECT_TRUE(iso_check(v, q, id)) << p << " " << n;
        }
}

TEST(Corner, CentralIdempotentSplitsProduct) {
    const FiniteRing t2 = matrix_ring({MatrixFamily::UpperTriangular, 2, F2()});
    const std::vector<FiniteRing> parts{F2(), t2};
    const FiniteRing r = product(parts);
    const Corner c = corner(r, 1);
    EXPECT_EQ(c.ring.size(), 2u);
    EXPECT_EQ(c.embedding[c.ring.one()], 1u);
    EXPECT_TRUE(is_embedding(c.ring, F2(), std::vector<Index>{0, 1}));
    const Corner d = corner(r, r.sub(r.one(), 1));
    EXPECT_EQ(d.ring.size(), 8u);
    EXPECT_TRUE(find_isomorphism(d.ring, t2).has_value());
    EXPECT_THROW(corner(t2, 1), UsageError);
}

TEST(Ideal, StrictlyUpperQuotient) {
    const MatrixShape s{MatrixFamily::UpperTriangular, 2, F2()};
    const FiniteRing t2 = matrix_ring(s);
    const IdealData i = make_ideal(t2, {0, unit_matrix(s, 1, 2, 1)});
    const Quotient q = quotient_by_ideal(t2, i);
    EXPECT_EQ(q.ring.size(), 4u);
    EXPECT_TRUE(q.ring.is_commutative());
    for (Index a = 0; a < t2.size(); ++a)
        for (Index b = 0; b < t2.size(); ++b) EXPECT_EQ(q.projection[t2.mul(a, b)], q.ring.mul(q.projection[a], q.projection[b]));
    const NonunitalRing n = ideal_as_nonunital(i);
    EXPECT_EQ(n.size(), 2u);
    EXPECT_EQ(n.mul(1, 1), 0u);
    EXPECT_THROW(make_ideal(t2, {0, unit_matrix(s, 1, 1, 1)}), UsageError);
}

TEST(Isomorphism, SearchAndRejection) {
    EXPECT_TRUE(find_isomorphism(build_ring("prod(F2, F2)"), build_ring("S(2, F2)")).has_value());
    EXPECT_FALSE(find_isomorphism(build_ring("Z4"), build_ring("prod(F2, F2)")).has_value());
    EXPECT_FALSE(find_isomorphism(build_ring("V(2, F2)"), build_ring("S(2, F2)")).has_value());
    EXPECT_THROW(find_isomorphism(build_ring("M(2, F3)"), build_ring("M(2, F3)")), CapacityError);
}

TEST(Localization, CollapsesToParent) {
    const FiniteRing r = build_ring("Z12");
    const auto s = central_regular_elements(r);
    EXPECT_EQ(s, (std::vector<Index>{1, 5, 7, 11}));
    const Localization l = localize({r, s});
    EXPECT_TRUE(iso_check(r, l.ring, l.canonical_map));
    for (const auto& [x, inv] : l.inverses) EXPECT_EQ(r.mul(x, inv), 1u);
    EXPECT_THROW(localize({r, {1, 2}}), UsageError);
    EXPECT_THROW(localize({r, {5}}), UsageError);
}

TEST(Capacity, SizeCapEnforced) {
    EXPECT_THROW(build_ring("M(4, M(4, F3))"), CapacityError);
    RingExprOptions small;
    small.construction.size_cap = 50;
    EXPECT_THROW(build_ring("M(2, F3)", small), CapacityError);
    EXPECT_EQ(build_ring("M(2, F3)").size(), 81u);
}

TEST(RingExpr, ParsesGrammar) {
    EXPECT_EQ(build_ring("T(2, F2)").size(), 8u);
    EXPECT_EQ(build_ring("prod(F2, T(2, F2))").size(), 16u);
    EXPECT_EQ(build_ring("quotpoly(F3, 2)").size(), 9u);
    EXPECT_EQ(build_ring("D(2, T(2, F2))").size(), 64u);
    EXPECT_EQ(build_ring("fp(ex22)").size(), 16u);
    EXPECT_EQ(canonical_ring_expr("M(2,F2)"), "M(2, F2)");
    EXPECT_EQ(canonical_ring_expr("prod( F2 ,Z4 )"), "prod(F2, Z4)");
}

TEST(RingExpr, ErrorsCarryColumns) {
    auto column_of = [](const std::string& text) -> std::size_t {
        try {
            build_ring(text);
        } catch (const ParseError& e) {
            return e.column();
        }
        return 0;
    };
    EXPECT_EQ(column_of("M(2, F2"), 8u);
    EXPECT_EQ(column_of("Q(2, F2)"), 1u);
    EXPECT_EQ(column_of("prod(F2, F4)"), 10u);
    EXPECT_EQ(column_of("T(2, F2) x"), 10u);
    EXPECT_EQ(column_of("T(1..3, F2)"), 1u);
}

TEST(RingExpr, FamilyExpansion) {
    EXPECT_EQ(expand_ring_family("T(1..3, F2)"), (std::vector<std::string>{"T(1, F2)", "T(2, F2)", "T(3, F2)"}));
    EXPECT_EQ(expand_ring_family("prod(V(1..2, F2), quotpoly(F3, 1..2))"),
              (std::vector<std::string>{"prod(V(1, F2), quotpoly(F3, 1))", "prod(V(1, F2), quotpoly(F3, 2))",
                                        "prod(V(2, F2), quotpoly(F3, 1))", "prod(V(2, F2), quotpoly(F3, 2))"}));
    EXPECT_EQ(expand_ring_family("F2"), (std::vector<std::string>{"F2"}));
}
