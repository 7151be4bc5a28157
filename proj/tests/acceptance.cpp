// Acceptance suite: one PASS/FAIL line per criterion with its runtime limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fring/cli.hpp"
#include "fring/constructions.hpp"
#include "fring/fp_algebra.hpp"
#include "fring/paper_suite.hpp"
#include "fring/properties.hpp"
#include "fring/ring_expr.hpp"
#include "oracles.hpp"

using namespace fring;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        failures.push_back(what);
    }
};

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<void(Outcome&)> body;
};

FiniteRing F2() { return prime_field(2); }

bool refuted_and_sound(const FiniteRing& r, const Verdict& v) { return v.refuted() && recheck_certificate(r, v); }

bool not_refuted(const FiniteRing& r, const Verdict& v) { return !v.refuted() && recheck_certificate(r, v); }

void matrix_ring_m2(Outcome& o) {
    const MatrixShape s{MatrixFamily::Full, 2, F2()};
    const FiniteRing m = matrix_ring(s);
    SearchOptions exhaustive;
    exhaustive.use_pruning = false;
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict slow = check_right_central_mccoy(m, 1, exhaustive);
    const double exhaustive_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(exhaustive_seconds < 5.0, "exhaustive search exceeded 5 s");
    const auto t1 = std::chrono::steady_clock::now();
    const Verdict v = check_right_central_mccoy(m, 1);
    const double pruned_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    o.require(pruned_seconds < 1.0, "pruned search exceeded 1 s");
    o.require(refuted_and_sound(m, v) && slow.refuted(), "M2(F2) not REFUTED with a sound certificate");
    if (!v.certificate) return;
    const Index e11 = unit_matrix(s, 1, 1, 1), e12 = unit_matrix(s, 1, 2, 1), e22 = unit_matrix(s, 2, 2, 1);
    const std::vector<Index> f{e12, e11}, g{e12, e22};
    o.require(v.certificate->f == f, "canonical f differs from E12 + E11 x");
    o.require(slow.certificate && slow.certificate->f == f, "exhaustive search chose a different f");
    o.require(v.certificate->transcript.size() == 15, "transcript does not list 15 failing witnesses");
    o.require(poly_mul(Polynomial(m, f), Polynomial(m, g)).is_zero(), "(E12 + E11 x)(E12 + E22 x) != 0");
    o.require(!find_witness(m, Property::RightCentralMcCoy, f).has_value(), "E12 + E11 x has a central witness");
    o.require(failure_transcript(m, Property::RightCentralMcCoy, f).size() == 15, "E12 + E11 x transcript is not 15 lines");
}

void triangular_t2(Outcome& o) {
    const FiniteRing t = build_ring("T(2, F2)");
    o.require(refuted_and_sound(t, check_right_central_mccoy(t, 1)), "T2(F2) not REFUTED");
}

void algebra_s(Outcome& o) {
    const FiniteRing s = build_ring("fp(\"" + std::string(FRING_SOURCE_DIR) + "/data/ex22.ring\")");
    o.require(s.size() == 16 && s.basis() && s.basis()->dimension() == 4, "S is not 4-dimensional of size 16");
    const Index one = 1, x = 2, y = 4, z = 8;
    const std::vector<Index> f{x, y}, g{s.add(one, x), s.add(one, y)};
    o.require(poly_mul(Polynomial(s, f), Polynomial(s, g)).is_zero(), "(x + y t)((1 + x) + (1 + y) t) != 0");
    o.require(refuted_and_sound(s, check_right_mccoy(s, 1)), "right McCoy not REFUTED");
    o.require(!find_witness(s, Property::RightMcCoy, f).has_value(), "x + y t has a McCoy witness");
    const Verdict v = check_right_central_mccoy(s, 2);
    o.require(not_refuted(s, v), "right Central McCoy REFUTED at d=2");
    o.require(universal_witness(s) == std::optional<Index>(z), "universal witness is not z");
}

void truncated_example(Outcome& o) {
    const RewriteSystem rs =
        complete_rewrite(parse_presentation(builtin_presentation_text("ex23")));
    const Presentation& p = rs.presentation();
    for (const char* c : {"a0*b0", "a0*b1 + a1*b0", "a1*b1"})
        o.require(rs.normal_form(parse_word_poly(p, c)).is_zero(), std::string("coefficient ") + c + " is nonzero");
    const TruncatedAlgebra view = truncated_view(rs, 3);
    TruncatedCheckOptions opts;
    opts.max_degree = 1;
    const Verdict r = check_on_truncated(view, Property::RightCentralMcCoy, opts);
    o.require(r.refuted() && r.bounded_witnesses, "right Central McCoy not REFUTED in the window");
    const Verdict l = check_on_truncated(view, Property::LeftCentralMcCoy, opts);
    o.require(!l.refuted(), "left Central McCoy REFUTED in the window");
}

void constant_diagonal_forward(Outcome& o) {
    for (const char* e : {"D(2, F2)", "D(3, F2)", "V(2, F2)", "V(3, F2)"}) {
        const FiniteRing r = build_ring(e);
        o.require(not_refuted(r, check_right_central_mccoy(r, 2)), std::string(e) + " REFUTED at d=2");
    }
}

void constant_diagonal_converse(Outcome& o) {
    const FiniteRing r = build_ring("D(2, T(2, F2))");
    o.require(r.size() == 64, "D2(T2(F2)) does not have 64 elements");
    o.require(refuted_and_sound(r, check_right_central_mccoy(r, 1)), "D2(T2(F2)) not REFUTED");
}

void truncated_polynomial_iso(Outcome& o) {
    const MatrixShape s{MatrixFamily::ConstantDiagonals, 3, F2()};
    const FiniteRing v = matrix_ring(s);
    const FiniteRing q = quotient_poly(F2(), 3);
    std::vector<Index> map(v.size());
    for (Index a = 0; a < v.size(); ++a) {
        const auto entries = matrix_entries(s, a);
        map[a] = static_cast<Index>(poly_index(F2(), {entries[0], entries[1], entries[2]}));
    }
    o.require(v.size() == 8 && q.size() == 8, "V3(F2) or F2[x]/(x^3) has the wrong size");
    o.require(iso_check(v, q, map), "coefficient map is not an isomorphism");
}

void finite_products(Outcome& o) {
    const FiniteRing ff = build_ring("prod(F2, F2)");
    o.require(not_refuted(ff, check_right_central_mccoy(ff, 2)), "F2 x F2 REFUTED at d=2");
    const FiniteRing ft = build_ring("prod(F2, T(2, F2))");
    const Verdict v = check_right_central_mccoy(ft, 1);
    if (!v.refuted()) {
        const auto w = universal_witness(ft);
        o.require(false, "F2 x T2(F2) NOT_REFUTED at d=1" +
                             (w ? " (universal witness " + ft.format(*w) + ")" : std::string()));
        return;
    }
    o.require(recheck_certificate(ft, v), "certificate fails recheck");
    bool on_t2 = true;
    for (Index c : v.certificate->f) on_t2 = on_t2 && c % 2 == 0;
    o.require(on_t2, "certificate is not supported on the T2 component");
}

void corner_rings(Outcome& o) {
    const FiniteRing r = build_ring("prod(F2, T(2, F2))");
    const Index e = 1;
    const Corner er = corner(r, e);
    const Corner fr = corner(r, r.sub(r.one(), e));
    o.require(find_isomorphism(er.ring, F2()).has_value(), "eR is not F2");
    o.require(find_isomorphism(fr.ring, build_ring("T(2, F2)")).has_value(), "(1 - e)R is not T2(F2)");
    o.require(not_refuted(er.ring, check_right_central_mccoy(er.ring, 1)), "eR REFUTED");
    o.require(refuted_and_sound(fr.ring, check_right_central_mccoy(fr.ring, 1)), "(1 - e)R not REFUTED");
    const Verdict v = check_right_central_mccoy(r, 1);
    if (!v.refuted()) {
        const auto w = universal_witness(r);
        o.require(false, "R NOT_REFUTED at d=1" + (w ? " (universal witness " + r.format(*w) + ")" : std::string()));
    }
}

void ideal_quotient(Outcome& o) {
    const MatrixShape s{MatrixFamily::UpperTriangular, 2, F2()};
    const FiniteRing t = matrix_ring(s);
    const IdealData i = make_ideal(t, {0, unit_matrix(s, 1, 2, 1)});
    const Quotient q = quotient_by_ideal(t, i);
    o.require(find_isomorphism(q.ring, build_ring("prod(F2, F2)")).has_value(), "R/I is not F2 x F2");
    o.require(not_refuted(q.ring, check_right_central_mccoy(q.ring, 2)), "R/I REFUTED at d=2");
    const NonunitalRing n = ideal_as_nonunital(i);
    bool all_zero = true;
    for (Index a = 0; a < n.size(); ++a)
        for (Index b = 0; b < n.size(); ++b) all_zero = all_zero && n.mul(a, b) == 0;
    o.require(all_zero, "I has a nonzero product");
    for (Property p : all_properties())
        if (is_mccoy_type(p))
            o.require(!check_property(n, p, 2).refuted(), "I REFUTED for " + std::string(property_name(p)));
    o.require(refuted_and_sound(t, check_right_central_mccoy(t, 1)), "T2(F2) not REFUTED");
}

void localization_collapse(Outcome& o) {
    for (const auto& expr : lattice_zoo()) {
        const FiniteRing r = build_ring(expr);
        std::vector<Index> central_units;
        for (Index a = 0; a < r.size(); ++a)
            if (oracle::central(r, a) && oracle::unit(r, a)) central_units.push_back(a);
        const auto s = central_regular_elements(r);
        o.require(s == central_units, expr + ": central regular elements differ from central units");
        const Localization l = localize({r, s});
        o.require(iso_check(r, l.ring, l.canonical_map), expr + ": localization is not isomorphic to R");
    }
}

void implication_lattice(Outcome& o) {
    const auto reps = run_paper_suite({"§1"}, {});
    for (const auto& c : reps.at(0).checks) o.require(c.pass, c.name + ": " + c.observed);
}

void pair_stream_oracle(Outcome& o) {
    for (const auto& expr : lattice_zoo()) {
        const FiniteRing r = build_ring(expr);
        if (r.size() > 16) continue;
        for (int d : {0, 1})
            o.require(zero_divisor_pairs(r, d) == oracle::pairs(r, d), expr + " d=" + std::to_string(d));
    }
}

void determinism(Outcome& o) {
    auto run = [](const std::string& workers) {
        std::ostringstream out, err;
        run_cli({"paper-verify", "--all", "--workers", workers}, out, err);
        return out.str();
    };
    const std::string one = run("1"), four = run("4");
    o.require(!one.empty() && one == four, "reports differ between 1 and 4 workers");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "M2(F2) is not right Central McCoy (canonical certificate)", 6.0, matrix_ring_m2},
        {2, "T2(F2) is not right Central McCoy", 1.0, triangular_t2},
        {3, "S is right Central McCoy but not right McCoy", 120.0, algebra_s},
        {4, "truncated algebra separates left and right Central McCoy", 120.0, truncated_example},
        {5, "D2, D3, V2, V3 over F2 are right Central McCoy at d=2", 300.0, constant_diagonal_forward},
        {6, "D2(T2(F2)) is not right Central McCoy", 600.0, constant_diagonal_converse},
        {7, "V3(F2) is isomorphic to F2[x]/(x^3)", 1.0, truncated_polynomial_iso},
        {8, "finite products", 60.0, finite_products},
        {9, "corner rings and the product F2 x T2(F2)", 60.0, corner_rings},
        {10, "R/I and I Central McCoy with R refuted", 60.0, ideal_quotient},
        {11, "localization at central regular elements collapses", 30.0, localization_collapse},
        {12, "implication lattice audit on the zoo", 600.0, implication_lattice},
        {13, "pruned pair streams match the exhaustive oracle", 60.0, pair_stream_oracle},
        {14, "paper-verify is byte-identical for 1 and 4 workers", 600.0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char limit[64];
        std::snprintf(limit, sizeof limit, "%.2f s, limit %.0f s", secs, c.limit_seconds);
        o.require(secs < c.limit_seconds, "runtime limit exceeded");
        std::printf("%s %2d  %s  (%s)\n", o.pass ? "PASS" : "FAIL", c.number, c.title.c_str(), limit);
        for (const auto& f : o.failures) std::printf("         - %s\n", f.c_str());
        if (!o.pass) ++failed;
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed == 0 ? 0 : 1;
}
