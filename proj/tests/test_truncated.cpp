#include <gtest/gtest.h>

#include "fring/fp_algebra.hpp"
#include "fring/properties.hpp"
#include "fring/ring_expr.hpp"

using namespace fring;

namespace {

RewriteSystem ex23() { return complete_rewrite(parse_presentation(builtin_presentation_text("ex23"))); }

std::vector<std::uint8_t> coords_of(std::uint64_t k, std::size_t dim, unsigned p) {
    std::vector<std::uint8_t> c(dim);
    for (auto& x : c) {
        x = static_cast<std::uint8_t>(k % p);
        k /= p;
    }
    return c;
}

AlgebraElement parse(const RewriteSystem& rs, const std::string& s) {
    return rs.normal_form(parse_word_poly(rs.presentation(), s));
}

// Direct witness test on one candidate r, mirroring the bounded-witness rule:
// every value and validation product must stay in the window.
bool oracle_witness(const TruncatedAlgebra& view, const std::vector<AlgebraElement>& coeffs, const AlgebraElement& r,
                    bool right, bool central) {
    const RewriteSystem& rs = view.system();
    for (const auto& c : coeffs) {
        const AlgebraElement v = right ? rs.multiply(c, r) : rs.multiply(r, c);
        if (!central) {
            if (!v.is_zero()) return false;
            continue;
        }
        if (!view.in_window(v)) return false;
        for (std::size_t t = 0; t < rs.generators().size(); ++t) {
            const auto g = WordPoly::word(Word{static_cast<std::uint8_t>(t)});
            const auto vt = rs.multiply(v, g), tv = rs.multiply(g, v);
            if (!view.in_window(vt) || !view.in_window(tv) || !(vt == tv)) return false;
        }
    }
    return true;
}

std::optional<AlgebraElement> oracle_any_witness(const TruncatedAlgebra& view, const std::vector<AlgebraElement>& coeffs,
                                                 bool right, bool central) {
    const std::uint64_t n = std::uint64_t{1} << view.dimension();
    for (std::uint64_t k = 1; k < n; ++k) {
        const auto r = view.element(coords_of(k, view.dimension(), 2));
        if (oracle_witness(view, coeffs, r, right, central)) return r;
    }
    return std::nullopt;
}

}  // namespace

TEST(TruncatedPair, PaperPairAgainstBruteForce) {
    const RewriteSystem rs = ex23();
    for (std::size_t L : {1u, 2u}) {
        const TruncatedAlgebra view = truncated_view(rs, L);
        const std::vector<std::string> f{"a0", "a1"}, g{"b0", "b1"};
        for (Property p : {Property::RightCentralMcCoy, Property::LeftCentralMcCoy, Property::RightMcCoy,
                           Property::LeftMcCoy}) {
            const bool right = p == Property::RightCentralMcCoy || p == Property::RightMcCoy;
            const bool central = p == Property::RightCentralMcCoy || p == Property::LeftCentralMcCoy;
            std::vector<AlgebraElement> coeffs;
            for (const auto& s : right ? f : g) coeffs.push_back(parse(rs, s));
            const auto res = check_pair_on_truncated(view, p, f, g);
            ASSERT_TRUE(res.product_is_zero);
            const auto brute = oracle_any_witness(view, coeffs, right, central);
            EXPECT_EQ(res.witness.has_value(), brute.has_value()) << "L=" << L << " " << property_name(p);
            if (res.witness) EXPECT_TRUE(oracle_witness(view, coeffs, view.element(*res.witness), right, central));
            else EXPECT_EQ(res.refutation->constraint_rank, view.dimension());
        }
    }
}

TEST(TruncatedPair, NonzeroProductReported) {
    const TruncatedAlgebra view = truncated_view(ex23(), 2);
    const auto res = check_pair_on_truncated(view, Property::RightCentralMcCoy, {"a0", "b1"}, {"a1"});
    EXPECT_FALSE(res.product_is_zero);
    EXPECT_THROW(check_pair_on_truncated(view, Property::Armendariz, {"a0"}, {"b0"}), UsageError);
}

TEST(TruncatedCheck, Example23Asymmetry) {
    const RewriteSystem rs = ex23();
    for (std::size_t L : {1u, 2u, 3u}) {
        const TruncatedAlgebra view = truncated_view(rs, L);
        TruncatedCheckOptions o;
        const Verdict r = check_on_truncated(view, Property::RightCentralMcCoy, o);
        const Verdict l = check_on_truncated(view, Property::LeftCentralMcCoy, o);
        EXPECT_TRUE(r.refuted()) << L;
        EXPECT_TRUE(r.bounded_witnesses);
        ASSERT_TRUE(r.certificate->linear.has_value());
        EXPECT_EQ(r.certificate->linear->constraint_rank, view.dimension());
        EXPECT_EQ(r.window, std::optional<std::size_t>(L));
        EXPECT_EQ(r.coefficient_window, std::optional<std::size_t>(1));
        EXPECT_FALSE(l.refuted()) << L;
        EXPECT_NE(l.note.find("weaker evidence"), std::string::npos);
    }
}

TEST(TruncatedCheck, CertificatePairHasZeroProductAndNoWitness) {
    const RewriteSystem rs = ex23();
    const TruncatedAlgebra view = truncated_view(rs, 2);
    const Verdict v = check_on_truncated(view, Property::RightCentralMcCoy, {});
    ASSERT_TRUE(v.refuted());
    const auto res = check_pair_on_truncated(view, Property::RightCentralMcCoy, v.certificate->f_forms,
                                             v.certificate->g_forms);
    EXPECT_TRUE(res.product_is_zero);
    EXPECT_FALSE(res.witness.has_value());
}

TEST(TruncatedCheck, ArmendarizRefutedByPaperPair) {
    const TruncatedAlgebra view = truncated_view(ex23(), 2);
    const Verdict v = check_on_truncated(view, Property::Armendariz, {});
    ASSERT_TRUE(v.refuted());
    EXPECT_TRUE(v.certificate->product_indices.has_value());
    EXPECT_THROW(check_on_truncated(view, Property::Reduced, {}), UsageError);
}

TEST(TruncatedCheck, WindowZeroIsTheScalars) {
    const TruncatedAlgebra view = truncated_view(ex23(), 0);
    EXPECT_FALSE(check_on_truncated(view, Property::RightCentralMcCoy, {}).refuted());
}

TEST(TruncatedPairs, MatchBruteForceEnumeration) {
    const RewriteSystem rs = ex23();
    const TruncatedAlgebra view = truncated_view(rs, 1);
    const auto pairs = truncated_zero_divisor_pairs(view, 1, 1);
    // Brute force over all coefficient pairs in the 5-dimensional span.
    std::vector<AlgebraElement> elems;
    for (std::uint64_t k = 0; k < 32; ++k) elems.push_back(view.element(coords_of(k, 5, 2)));
    std::vector<std::vector<AlgebraElement>> prod(32, std::vector<AlgebraElement>(32));
    for (std::size_t a = 0; a < 32; ++a)
        for (std::size_t b = 0; b < 32; ++b) prod[a][b] = rs.multiply(elems[a], elems[b]);
    std::size_t expected = 0;
    for (std::size_t f0 = 0; f0 < 32; ++f0)
        for (std::size_t f1 = 0; f1 < 32; ++f1) {
            if (f0 == 0 && f1 == 0) continue;
            for (std::size_t g0 = 0; g0 < 32; ++g0)
                for (std::size_t g1 = 0; g1 < 32; ++g1) {
                    if (g0 == 0 && g1 == 0) continue;
                    if (!prod[f0][g0].is_zero() || !prod[f1][g1].is_zero()) continue;
                    if (wp_add(prod[f0][g1], prod[f1][g0], 2).is_zero()) ++expected;
                }
        }
    EXPECT_EQ(pairs.size(), expected);
    for (const auto& p : pairs) {
        AlgebraElement acc;
        for (std::size_t s = 0; s + 1 < p.f.size() + p.g.size(); ++s) {
            acc = {};
            for (std::size_t i = 0; i < p.f.size(); ++i)
                if (s >= i && s - i < p.g.size()) acc = wp_add(acc, rs.multiply(p.f[i], p.g[s - i]), 2);
            ASSERT_TRUE(acc.is_zero());
        }
    }
}

TEST(TruncatedPairs, RightAnnihilationByB) {
    const RewriteSystem rs = ex23();
    const TruncatedAlgebra view = truncated_view(rs, 2);
    for (const auto& p : truncated_zero_divisor_pairs(view, 1, 1))
        for (const char* b : {"b0", "b1"})
            for (const auto& gk : p.g) EXPECT_TRUE(rs.multiply(parse(rs, b), gk).is_zero());
}
