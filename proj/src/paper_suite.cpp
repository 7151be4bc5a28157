#include "fring/paper_suite.hpp"

#include <algorithm>
#include <map>

#include "fring/constructions.hpp"
#include "fring/fp_algebra.hpp"
#include "fring/ring_expr.hpp"

namespace fring {

namespace {

SearchOptions search(const SuiteOptions& o) {
    SearchOptions s;
    s.workers = o.workers;
    return s;
}

CheckResult polarity_check(std::string name, const FiniteRing& r, Verdict v, Polarity expected) {
    CheckResult c;
    c.name = std::move(name);
    c.expected = polarity_name(expected);
    const bool sound = recheck_certificate(r, v);
    c.observed = polarity_name(v.polarity);
    if (!sound) c.observed += " (certificate failed recheck)";
    if (v.universal_witness && !v.refuted())
        c.observed += " (universal witness " + r.format(*v.universal_witness) + ")";
    c.pass = v.polarity == expected && sound;
    c.verdict = std::move(v);
    return c;
}

CheckResult fact(std::string name, bool ok, std::string expected, std::string observed) {
    CheckResult c;
    c.name = std::move(name);
    c.expected = std::move(expected);
    c.observed = std::move(observed);
    c.pass = ok;
    return c;
}

CheckResult equal_check(std::string name, const std::string& expected, const std::string& observed) {
    return fact(std::move(name), expected == observed, expected, observed);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? sep : "") + xs[k];
    return out;
}

std::string index_list(const std::vector<Index>& xs) {
    std::vector<std::string> s;
    for (auto x : xs) s.push_back(std::to_string(x));
    return "[" + join(s) + "]";
}

EntryReport entry(const std::string& key, const std::vector<std::string>& anchors, const std::string& title) {
    EntryReport e;
    e.key = key;
    e.anchors = anchors;
    e.title = title;
    return e;
}

FiniteRing F2() { return prime_field(2); }

MatrixShape shape(MatrixFamily f, unsigned n, const FiniteRing& base) { return MatrixShape{f, n, base}; }

// ---- implication lattice ----

struct ZooRing {
    std::string expr;
    FiniteRing ring;
    std::map<std::pair<Property, int>, Verdict> verdicts;
    std::optional<Index> universal;

    const Verdict& at(Property p, int d) const { return verdicts.at({p, is_element_level(p) ? 0 : d}); }
};

bool holds(const Verdict& v) { return !v.refuted(); }

Property mccoy(bool right) { return right ? Property::RightMcCoy : Property::LeftMcCoy; }
Property central_mccoy(bool right) { return right ? Property::RightCentralMcCoy : Property::LeftCentralMcCoy; }

EntryReport run_lattice(const SuiteOptions& o) {
    EntryReport e = entry("§1", {"§1"}, "Implication lattice audit on the ring zoo");
    const std::vector<int> degrees = o.slow ? std::vector<int>{1, 2, 3} : std::vector<int>{1, 2};
    std::vector<ZooRing> zoo;
    for (const auto& expr : lattice_zoo()) {
        ZooRing z{expr, build_ring(expr), {}, std::nullopt};
        for (Property p : all_properties()) {
            if (is_element_level(p)) {
                z.verdicts.emplace(std::pair{p, 0}, check_property(z.ring, p, 0));
                continue;
            }
            for (int d : degrees) z.verdicts.emplace(std::pair{p, d}, check_property(z.ring, p, d, search(o)));
        }
        z.universal = universal_witness(z.ring);
        zoo.push_back(std::move(z));
    }

    struct Rule {
        explicit Rule(std::string n) : name(std::move(n)) {}
        std::string name;
        std::size_t applicable = 0;
        std::vector<std::string> violations;
    };
    Rule chain{"reduced => reversible => semicommutative (exact verdicts)"};
    Rule rev{"McCoy REFUTED => reversible REFUTED"};
    Rule cm{"Central McCoy REFUTED => McCoy REFUTED at the same degree"};
    Rule arm{"a McCoy-refuting pair has a nonzero coefficient product and Armendariz is REFUTED"};
    Rule ab{"abelian REFUTED excludes an exact Central Armendariz verdict"};
    Rule uw{"universal witness => right Central McCoy NOT_REFUTED"};
    Rule mono{"REFUTED at degree d => REFUTED at every larger tested degree"};
    Rule sound{"every REFUTED certificate re-verifies"};

    for (const auto& z : zoo) {
        const auto& reduced = z.at(Property::Reduced, 0);
        const auto& reversible = z.at(Property::Reversible, 0);
        const auto& semi = z.at(Property::Semicommutative, 0);
        ++chain.applicable;
        if ((holds(reduced) && !holds(reversible)) || (holds(reversible) && !holds(semi)))
            chain.violations.push_back(z.expr);
        for (const auto& [key, v] : z.verdicts) {
            ++sound.applicable;
            if (!recheck_certificate(z.ring, v))
                sound.violations.push_back(z.expr + " " + std::string(property_name(key.first)));
        }
        if (z.at(Property::Abelian, 0).refuted()) {
            // Bounded Central Armendariz verdicts are never exact, so no
            // verdict here can contradict a refuted abelian check.
            for (int d : degrees) {
                const auto& ca = z.at(Property::CentralArmendariz, d);
                if (ca.exact) {
                    ++ab.applicable;
                    if (!ca.refuted()) ab.violations.push_back(z.expr);
                }
            }
        }
        for (int d : degrees) {
            for (bool right : {true, false}) {
                const auto& m = z.at(mccoy(right), d);
                const auto& c = z.at(central_mccoy(right), d);
                ++rev.applicable;
                if (m.refuted() && !reversible.refuted()) rev.violations.push_back(z.expr);
                ++cm.applicable;
                if (c.refuted() && !m.refuted()) cm.violations.push_back(z.expr + " d=" + std::to_string(d));
                if (m.refuted()) {
                    ++arm.applicable;
                    const auto& cert = *m.certificate;
                    bool nonzero = false;
                    for (Index a : cert.f)
                        for (Index b : cert.g) nonzero = nonzero || z.ring.mul(a, b) != 0;
                    if (!nonzero || !z.at(Property::Armendariz, d).refuted())
                        arm.violations.push_back(z.expr + " d=" + std::to_string(d));
                }
            }
            if (z.universal) {
                ++uw.applicable;
                if (z.at(Property::RightCentralMcCoy, d).refuted()) uw.violations.push_back(z.expr);
            }
            for (int d2 : degrees) {
                if (d2 <= d) continue;
                for (Property p : all_properties()) {
                    if (is_element_level(p)) continue;
                    if (!z.at(p, d).refuted()) continue;
                    ++mono.applicable;
                    if (!z.at(p, d2).refuted())
                        mono.violations.push_back(z.expr + " " + std::string(property_name(p)));
                }
            }
        }
    }
    for (const Rule* r : {&chain, &rev, &cm, &arm, &ab, &uw, &mono, &sound})
        e.checks.push_back(fact(r->name, r->violations.empty(), "0 violations",
                                std::to_string(r->violations.size()) + " violations of " +
                                    std::to_string(r->applicable) + " applicable" +
                                    (r->violations.empty() ? "" : ": " + join(r->violations))));
    for (const auto& z : zoo) {
        std::string line = z.expr + ":";
        for (Property p : all_properties()) {
            line += " " + std::string(property_name(p)) + "=";
            std::string per;
            if (is_element_level(p)) per = z.at(p, 0).refuted() ? "R" : "H";
            else
                for (int d : degrees) per += z.at(p, d).refuted() ? "R" : "N";
            line += per;
        }
        e.notes.push_back(line);
    }
    e.notes.push_back("R = REFUTED, N = NOT_REFUTED per tested degree, H = holds exactly");
    return e;
}

// ---- finitely presented examples ----

EntryReport run_ex22(const SuiteOptions& o) {
    EntryReport e = entry("Example 2.2", {"Example 2.2", "Definition 2.1"},
                          "S is right Central McCoy but not right McCoy");
    const FiniteRing S = build_ring("fp(ex22)");
    e.checks.push_back(equal_check("size of S", "16", std::to_string(S.size())));
    e.checks.push_back(equal_check("basis of S", "1 x y z", join(S.basis()->names, " ")));
    const Index one = 1, x = 2, y = 4, z = 8;
    const bool relations = S.mul(x, x) == x && S.mul(y, x) == x && S.mul(z, z) == 0 && S.mul(y, y) == y &&
                           S.mul(x, y) == y && S.mul(z, x) == z && S.mul(x, z) == z && S.mul(y, z) == z &&
                           S.mul(z, y) == z;
    e.checks.push_back(fact("defining relations hold in S", relations, "all 9 hold", relations ? "all 9 hold" : "violated"));
    const Index one_x = S.add(one, x), one_y = S.add(one, y);
    const Polynomial f(S, {x, y}), g(S, {one_x, one_y});
    const bool zero = poly_mul(f, g).is_zero();
    e.checks.push_back(fact("(x + y t)((1 + x) + (1 + y) t) = 0", zero, "0", zero ? "0" : poly_mul(f, g).format()));
    e.checks.push_back(polarity_check("right McCoy, degree <= 1", S, check_right_mccoy(S, 1, search(o)), Polarity::Refuted));
    const auto w = find_witness(S, Property::RightMcCoy, {x, y});
    e.checks.push_back(fact("no r != 0 with x r = y r = 0", !w, "none", w ? S.format(*w) : "none"));
    const int d = o.slow ? 3 : 2;
    auto v = check_right_central_mccoy(S, d, search(o));
    e.checks.push_back(polarity_check("right Central McCoy, degree <= " + std::to_string(d), S, v, Polarity::NotRefuted));
    const auto u = universal_witness(S);
    e.checks.push_back(equal_check("universal witness", "z", u ? S.format(*u) : "none"));
    e.checks.push_back(fact("z is central", S.is_central(z), "true", yes_no(S.is_central(z))));
    return e;
}

EntryReport run_ex23(const SuiteOptions&) {
    EntryReport e = entry("Example 2.3", {"Example 2.3", "Definition 2.1"},
                          "Central McCoy is not left-right symmetric (truncated window)");
    const Presentation pres = parse_presentation(builtin_presentation_text("ex23"));
    const RewriteSystem rs = complete_rewrite(pres);
    e.checks.push_back(equal_check("completion status", "COMPLETE", rs.complete() ? "COMPLETE" : "CAPPED"));
    auto nf_zero = [&](const std::string& s) { return rs.normal_form(parse_word_poly(pres, s)).is_zero(); };
    const bool rels = nf_zero("a0*b0") && nf_zero("a0*b1 + a1*b0") && nf_zero("a1*b1") && nf_zero("b0*b0") &&
                      nf_zero("b0*b1") && nf_zero("b1*b0") && nf_zero("b1*b1");
    e.checks.push_back(fact("a0 b0, a0 b1 + a1 b0, a1 b1, b_s b_t reduce to 0", rels, "all 0", rels ? "all 0" : "nonzero"));
    bool infinite = false;
    try {
        realize_finite(rs);
    } catch (const NotFiniteDimensional&) {
        infinite = true;
    }
    e.checks.push_back(fact("algebra is infinite dimensional", infinite, "NotFiniteDimensional",
                            infinite ? "NotFiniteDimensional" : "finite"));
    const std::size_t L = 3;
    const TruncatedAlgebra view = truncated_view(rs, L);
    TruncatedCheckOptions opts;
    opts.max_degree = 1;
    const auto pair_right = check_pair_on_truncated(view, Property::RightCentralMcCoy, {"a0", "a1"}, {"b0", "b1"});
    e.checks.push_back(fact("(a0 + a1 x)(b0 + b1 x) = 0", pair_right.product_is_zero, "0",
                            pair_right.product_is_zero ? "0" : "nonzero"));
    e.checks.push_back(fact("no r != 0 in the window with a0 r, a1 r central", pair_right.refutation.has_value(),
                            "no witness",
                            pair_right.refutation ? "rank " + std::to_string(pair_right.refutation->constraint_rank) +
                                                        " = window dimension " +
                                                        std::to_string(pair_right.refutation->window_dimension)
                                                  : "witness found"));
    auto vr = check_on_truncated(view, Property::RightCentralMcCoy, opts);
    CheckResult cr;
    cr.name = "right Central McCoy, degree <= 1, window 3";
    cr.expected = "REFUTED";
    cr.observed = polarity_name(vr.polarity) + (vr.bounded_witnesses ? " (bounded witnesses)" : "");
    cr.pass = vr.refuted();
    cr.verdict = vr;
    e.checks.push_back(cr);
    auto vl = check_on_truncated(view, Property::LeftCentralMcCoy, opts);
    CheckResult cl;
    cl.name = "left Central McCoy, degree <= 1, window 3";
    cl.expected = "NOT_REFUTED";
    cl.observed = polarity_name(vl.polarity);
    cl.pass = !vl.refuted();
    cl.verdict = vl;
    e.checks.push_back(cl);
    const auto pairs = truncated_zero_divisor_pairs(view, 1, 1);
    std::size_t bad = 0;
    for (const auto& p : pairs)
        for (const char* b : {"b0", "b1"})
            for (const auto& gk : p.g)
                if (!rs.multiply(parse_word_poly(pres, b), gk).is_zero()) ++bad;
    e.checks.push_back(fact("b_j g(x) = 0 for every zero-divisor pair in the coefficient window", bad == 0,
                            "0 exceptions",
                            std::to_string(bad) + " exceptions over " + std::to_string(pairs.size()) + " pairs"));
    e.notes.push_back("witnesses range over irreducible words of length <= 3; pair coefficients over length <= 1");
    e.notes.push_back("the annihilation b_j g(x) = 0 is checked only on the bounded pair set");
    return e;
}

// ---- products, polynomial rings, corners ----

EntryReport run_prop24(const SuiteOptions& o) {
    EntryReport e = entry("Proposition 2.4", {"Proposition 2.4", "Corollary 2.5"},
                          "Finite products and eventually constant sequences");
    {
        const FiniteRing r = build_ring("prod(F2, F2)");
        e.checks.push_back(polarity_check("prod(F2, F2) right Central McCoy, degree <= 2", r,
                                          check_right_central_mccoy(r, 2, search(o)), Polarity::NotRefuted));
    }
    {
        const FiniteRing r = build_ring("prod(F2, V(2, F2))");
        e.checks.push_back(polarity_check("prod(F2, V(2, F2)) right Central McCoy, degree <= 2", r,
                                          check_right_central_mccoy(r, 2, search(o)), Polarity::NotRefuted));
    }
    const FiniteRing T2 = matrix_ring(shape(MatrixFamily::UpperTriangular, 2, F2()));
    const std::vector<FiniteRing> comps{F2(), T2};
    const FiniteRing P = product(comps);
    auto v = check_right_central_mccoy(P, 1, search(o));
    e.checks.push_back(polarity_check("prod(F2, T(2, F2)) right Central McCoy, degree <= 1", P, v, Polarity::Refuted));
    // T2's refuting pair placed in the second component.
    const Index two = 2;
    auto lift = [&](Index a) { return static_cast<Index>(a * two); };
    const std::vector<Index> f{lift(2), lift(1)}, g{lift(2), lift(4)};
    const bool zero = poly_mul(Polynomial(P, f), Polynomial(P, g)).is_zero();
    const auto w = find_witness(P, Property::RightCentralMcCoy, f);
    e.checks.push_back(fact("embedded T(2, F2) pair: product", zero, "0", zero ? "0" : "nonzero"));
    e.notes.push_back("embedded pair (0, E12) + (0, E11) x: least witness " + (w ? P.format(*w) : std::string("none")) +
                      "; a witness supported on the F2 component makes every a_i c central");
    {
        const FiniteRing r = build_ring("prod(F2, F2, F2)");
        e.checks.push_back(polarity_check("prod(F2, F2, F2), eventually constant sequences over F2, degree <= 2", r,
                                          check_right_central_mccoy(r, 2, search(o)), Polarity::NotRefuted));
    }
    {
        const std::vector<FiniteRing> parts{T2, T2, F2()};
        const FiniteRing r = product(parts);
        e.checks.push_back(polarity_check("prod(T(2, F2), T(2, F2), F2), eventually constant sequences with tail in F2, degree <= 1", r,
                                          check_right_central_mccoy(r, 1, search(o)), Polarity::Refuted));
    }
    e.notes.push_back("sequence rings are represented by a finite truncation prod(D, ..., D, C)");
    return e;
}

EntryReport run_thm26(const SuiteOptions&) {
    EntryReport e = entry("Theorem 2.6", {"Theorem 2.6"}, "Transfer between R and R[x] by degree packing");
    const MatrixShape ms = shape(MatrixFamily::Full, 2, F2());
    const FiniteRing M = matrix_ring(ms);
    const Index E11 = unit_matrix(ms, 1, 1, 1), E12 = unit_matrix(ms, 1, 2, 1), E21 = unit_matrix(ms, 2, 1, 1),
                E22 = unit_matrix(ms, 2, 2, 1);
    auto P = [&](std::vector<Index> c) { return Polynomial(M, std::move(c)); };
    {
        const PolyPoly F{P({E12, E11})};
        e.checks.push_back(fact("constant-in-t input is unchanged", flatten_poly_poly(F, 2) == F[0], "unchanged",
                                flatten_poly_poly(F, 2).format()));
    }
    {
        const PolyPoly F{P({E12, E11}), P({E22, E21})};
        const auto flat = flatten_poly_poly(F, 2);
        e.checks.push_back(equal_check("degree-1 coefficients packed with k = 2", index_list({E12, E11, E22, E21}),
                                       index_list(flat.coeffs())));
        bool threw = false;
        try {
            flatten_poly_poly(F, 1);
        } catch (const UsageError&) {
            threw = true;
        }
        e.checks.push_back(fact("k not above the coefficient degrees is rejected", threw, "UsageError",
                                threw ? "UsageError" : "accepted"));
    }
    {
        const PolyPoly F{P({E12}), P({E11})}, G{P({E12}), P({E22})};
        const bool zero = polypoly_mul(F, G).empty();
        const unsigned k = packing_exponent(F, G);
        const auto fF = flatten_poly_poly(F, k), fG = flatten_poly_poly(G, k);
        e.checks.push_back(fact("constant lift of the M(2, F2) pair: F G = 0 and flattened product 0",
                                zero && poly_mul(fF, fG).is_zero(), "0", zero ? "0" : "nonzero"));
        e.checks.push_back(equal_check("flattening reproduces E12 + E11 x", index_list({E12, E11}), index_list(fF.coeffs())));
        const auto w = poly_ring_witness(M, F, 1);
        e.checks.push_back(fact("no c(x) of degree <= 1 with f_i c(x) central", !w, "none", w ? w->format() : "none"));
    }
    {
        const PolyPoly F{P({0, E12}), P({0, E11})}, G{P({E12, E12}), P({E22, E22})};
        const bool zero = polypoly_mul(F, G).empty();
        const unsigned k = packing_exponent(F, G);
        const bool flat_zero = poly_mul(flatten_poly_poly(F, k), flatten_poly_poly(G, k)).is_zero();
        e.checks.push_back(fact("pair with x-degree 1: F G = 0 implies flattened product 0 at k = " + std::to_string(k),
                                zero && flat_zero, "0", zero && flat_zero ? "0" : "nonzero"));
    }
    {
        const FiniteRing S = build_ring("fp(ex22)");
        const PolyPoly F{Polynomial(S, {2}), Polynomial(S, {4})};
        const auto w = poly_ring_witness(S, F, 0);
        e.checks.push_back(fact("S[x]: the lifted pair (x, y) has a constant witness", w.has_value(), "witness",
                                w ? w->format() : "none"));
    }
    e.notes.push_back("the packing exponent must exceed every coefficient degree; one more than the sum of all "
                      "degrees is used so that distinct t-powers never collide");
    return e;
}

EntryReport run_prop27(const SuiteOptions& o) {
    EntryReport e = entry("Proposition 2.7", {"Proposition 2.7"}, "Corner rings eR and (1 - e)R");
    const FiniteRing T2 = matrix_ring(shape(MatrixFamily::UpperTriangular, 2, F2()));
    const std::vector<FiniteRing> comps{F2(), T2};
    const FiniteRing R = product(comps);
    const Index e1 = 1;
    const Index e2 = R.sub(R.one(), e1);
    const Corner ce = corner(R, e1), cf = corner(R, e2);
    const bool iso_e = find_isomorphism(ce.ring, F2()).has_value();
    const bool iso_f = find_isomorphism(cf.ring, T2).has_value();
    e.checks.push_back(fact("eR is isomorphic to F2", iso_e, "true", yes_no(iso_e)));
    e.checks.push_back(fact("(1 - e)R is isomorphic to T(2, F2)", iso_f, "true", yes_no(iso_f)));
    std::vector<Index> split(R.size());
    std::vector<FiniteRing> parts{ce.ring, cf.ring};
    const FiniteRing sum = product(parts);
    for (Index a = 0; a < R.size(); ++a) {
        const Index x = static_cast<Index>(std::find(ce.embedding.begin(), ce.embedding.end(), R.mul(e1, a)) -
                                           ce.embedding.begin());
        const Index y = static_cast<Index>(std::find(cf.embedding.begin(), cf.embedding.end(), R.mul(e2, a)) -
                                           cf.embedding.begin());
        split[a] = x + ce.ring.size() * y;
    }
    const bool decomposes = iso_check(R, sum, split);
    e.checks.push_back(fact("a -> (e a, (1 - e) a) is an isomorphism onto eR x (1 - e)R", decomposes, "true",
                            yes_no(decomposes)));
    const int d = o.slow ? 3 : 2;
    e.checks.push_back(polarity_check("eR right Central McCoy, degree <= " + std::to_string(d), ce.ring,
                                      check_right_central_mccoy(ce.ring, d, search(o)), Polarity::NotRefuted));
    e.checks.push_back(polarity_check("(1 - e)R right Central McCoy, degree <= 1", cf.ring,
                                      check_right_central_mccoy(cf.ring, 1, search(o)), Polarity::Refuted));
    e.checks.push_back(polarity_check("R = F2 x T(2, F2) right Central McCoy, degree <= 1", R,
                                      check_right_central_mccoy(R, 1, search(o)), Polarity::Refuted));
    return e;
}

EntryReport run_ex28(const SuiteOptions& o) {
    EntryReport e = entry("Example 2.8", {"Example 2.8", "Definition 2.1"},
                          "M2 and T2 over a commutative ring are not right Central McCoy");
    {
        const FiniteRing F = build_ring("F2");
        e.checks.push_back(polarity_check("F2 right Central McCoy, degree <= 2", F,
                                          check_right_central_mccoy(F, 2, search(o)), Polarity::NotRefuted));
    }
    for (MatrixFamily fam : {MatrixFamily::Full, MatrixFamily::UpperTriangular}) {
        const MatrixShape ms = shape(fam, 2, F2());
        const FiniteRing R = matrix_ring(ms);
        const Index E11 = unit_matrix(ms, 1, 1, 1), E12 = unit_matrix(ms, 1, 2, 1), E22 = unit_matrix(ms, 2, 2, 1);
        const std::string name = R.label();
        auto v = check_right_central_mccoy(R, 1, search(o));
        const std::vector<Index> f = v.certificate ? v.certificate->f : std::vector<Index>{};
        const std::size_t lines = v.certificate ? v.certificate->transcript.size() : 0;
        e.checks.push_back(polarity_check(name + " right Central McCoy, degree <= 1", R, v, Polarity::Refuted));
        e.checks.push_back(equal_check(name + " certificate f = E12 + E11 x", index_list({E12, E11}), index_list(f)));
        e.checks.push_back(equal_check(name + " transcript covers every nonzero candidate",
                                       std::to_string(R.size() - 1), std::to_string(lines)));
        const std::vector<Index> g{E12, R.neg(E22)};
        const bool zero = poly_mul(Polynomial(R, {E12, E11}), Polynomial(R, g)).is_zero();
        const auto w = find_witness(R, Property::RightCentralMcCoy, {E12, E11});
        e.checks.push_back(fact(name + " (E12 + E11 x)(E12 - E22 x) = 0 with no witness", zero && !w,
                                "0, no witness",
                                std::string(zero ? "0" : "nonzero") + ", " + (w ? "witness " + R.format(*w) : "no witness")));
    }
    e.notes.push_back("the canonical partner g is the least-index g with f g = 0; the printed pair is checked directly");
    return e;
}

// ---- matrix families ----

EntryReport run_thm29_1(const SuiteOptions& o) {
    EntryReport e = entry("Theorem 2.9(1)", {"Theorem 2.9"}, "D_n(R) with constant main diagonal");
    const int d = o.slow ? 3 : 2;
    for (unsigned n : {2u, 3u}) {
        const MatrixShape ms = shape(MatrixFamily::ConstantDiagonal, n, F2());
        const FiniteRing D = matrix_ring(ms);
        e.checks.push_back(polarity_check(D.label() + " right Central McCoy, degree <= " + std::to_string(d), D,
                                          check_right_central_mccoy(D, d, search(o)), Polarity::NotRefuted));
        e.checks.push_back(polarity_check(D.label() + " left Central McCoy, degree <= " + std::to_string(d), D,
                                          check_left_central_mccoy(D, d, search(o)), Polarity::NotRefuted));
        const Index E1n = unit_matrix(ms, 1, n, 1);
        bool ok = true;
        for (Index a = 0; a < D.size() && ok; ++a) ok = D.is_central(D.mul(a, E1n));
        e.checks.push_back(fact(D.label() + ": A E1n is central for every A", ok, "true", yes_no(ok)));
    }
    const FiniteRing T2 = matrix_ring(shape(MatrixFamily::UpperTriangular, 2, F2()));
    const MatrixShape ds = shape(MatrixFamily::ConstantDiagonal, 2, T2);
    const FiniteRing D = matrix_ring(ds);
    e.checks.push_back(polarity_check(D.label() + " right Central McCoy, degree <= 1", D,
                                      check_right_central_mccoy(D, 1, search(o)), Polarity::Refuted));
    // All-entries-equal lift of the T2 pair (E12 + E11 x, E12 + E22 x).
    auto lift = [&](Index a) {
        const std::vector<Index> entries{a, a, 0, a};
        return matrix_index(ds, entries);
    };
    const std::vector<Index> f{lift(2), lift(1)}, g{lift(2), lift(4)};
    const bool zero = poly_mul(Polynomial(D, f), Polynomial(D, g)).is_zero();
    const auto w = find_witness(D, Property::RightCentralMcCoy, f);
    e.checks.push_back(fact("lifted T(2, F2) pair: F G = 0 and no witness in " + D.label(), zero && !w,
                            "0, no witness",
                            std::string(zero ? "0" : "nonzero") + ", " + (w ? "witness " + D.format(*w) : "no witness")));
    return e;
}

EntryReport run_thm29_2(const SuiteOptions& o) {
    EntryReport e = entry("Theorem 2.9(2)", {"Theorem 2.9"}, "V_n(R) and R[x]/(x^n)");
    const int d = o.slow ? 3 : 2;
    for (unsigned n : {2u, 3u}) {
        const MatrixShape ms = shape(MatrixFamily::ConstantDiagonals, n, F2());
        const FiniteRing V = matrix_ring(ms);
        e.checks.push_back(polarity_check(V.label() + " right Central McCoy, degree <= " + std::to_string(d), V,
                                          check_right_central_mccoy(V, d, search(o)), Polarity::NotRefuted));
        const Index E1n = unit_matrix(ms, 1, n, 1);
        bool ok = true;
        for (Index a = 0; a < V.size() && ok; ++a) ok = V.is_central(V.mul(a, E1n));
        e.checks.push_back(fact(V.label() + ": A E1n is central for every A", ok, "true", yes_no(ok)));
    }
    for (unsigned p : {2u, 3u}) {
        const FiniteRing base = prime_field(p);
        const unsigned n = p == 2 ? 3 : 2;
        const FiniteRing V = matrix_ring(shape(MatrixFamily::ConstantDiagonals, n, base));
        const FiniteRing Q = quotient_poly(base, n);
        std::vector<Index> map(V.size());
        for (Index a = 0; a < V.size(); ++a) map[a] = a;
        const bool iso = iso_check(V, Q, map);
        e.checks.push_back(fact(V.label() + " -> " + Q.label() + " coefficient map is an isomorphism", iso, "true",
                                yes_no(iso)));
    }
    return e;
}

// ---- ideals, localization, corollary ----

EntryReport run_ex211(const SuiteOptions& o) {
    EntryReport e = entry("Example 2.11", {"Remark 2.10", "Example 2.11"},
                          "R/I and I Central McCoy does not force R Central McCoy");
    const MatrixShape ms = shape(MatrixFamily::UpperTriangular, 2, F2());
    const FiniteRing R = matrix_ring(ms);
    const IdealData I = make_ideal(R, {0, unit_matrix(ms, 1, 2, 1)});
    const Quotient q = quotient_by_ideal(R, I);
    const bool iso = find_isomorphism(q.ring, build_ring("prod(F2, F2)")).has_value();
    e.checks.push_back(fact("T(2, F2)/I is isomorphic to F2 x F2", iso, "true", yes_no(iso)));
    const int d = o.slow ? 3 : 2;
    e.checks.push_back(polarity_check("R/I right Central McCoy, degree <= " + std::to_string(d), q.ring,
                                      check_right_central_mccoy(q.ring, d, search(o)), Polarity::NotRefuted));
    const NonunitalRing N = ideal_as_nonunital(I);
    bool all_zero = true;
    for (Index a = 0; a < N.size(); ++a)
        for (Index b = 0; b < N.size(); ++b) all_zero = all_zero && N.mul(a, b) == 0;
    e.checks.push_back(fact("all products in I vanish", all_zero, "true", yes_no(all_zero)));
    for (Property p : {Property::RightMcCoy, Property::LeftMcCoy, Property::RightCentralMcCoy,
                       Property::LeftCentralMcCoy}) {
        auto v = check_property(N, p, d, search(o));
        CheckResult c;
        c.name = "I as a ring without identity: " + std::string(property_name(p)) + ", degree <= " + std::to_string(d);
        c.expected = "NOT_REFUTED";
        c.observed = polarity_name(v.polarity);
        c.pass = !v.refuted();
        c.verdict = std::move(v);
        e.checks.push_back(std::move(c));
    }
    e.checks.push_back(polarity_check("R = T(2, F2) right Central McCoy, degree <= 1", R,
                                      check_right_central_mccoy(R, 1, search(o)), Polarity::Refuted));
    e.notes.push_back("I is taken to be the strictly upper triangular ideal {0, E12}; the cited source is not "
                      "available to confirm it is the intended ideal");
    return e;
}

EntryReport run_thm212(const SuiteOptions&) {
    EntryReport e = entry("Theorem 2.12", {"Theorem 2.12"}, "Localization at central regular elements collapses");
    std::size_t rings = 0;
    std::vector<std::string> mismatched, failed;
    for (const auto& expr : lattice_zoo()) {
        const FiniteRing r = build_ring(expr);
        ++rings;
        const auto S = central_regular_elements(r);
        std::vector<Index> units;
        for (Index a = 0; a < r.size(); ++a)
            if (r.is_central(a) && r.is_unit(a)) units.push_back(a);
        if (S != units) mismatched.push_back(expr);
        const Localization loc = localize({r, S});
        bool ok = iso_check(r, loc.ring, loc.canonical_map) && loc.inverses.size() == S.size();
        for (const auto& [s, inv] : loc.inverses) ok = ok && r.mul(s, inv) == r.one() && r.mul(inv, s) == r.one();
        if (!ok) failed.push_back(expr);
    }
    e.checks.push_back(fact("central regular elements = central units", mismatched.empty(), "equal on all rings",
                            mismatched.empty() ? "equal on " + std::to_string(rings) + " rings"
                                               : "differ on " + join(mismatched)));
    e.checks.push_back(fact("R -> R S^-1 is an isomorphism with verified inverses", failed.empty(),
                            "isomorphism on all rings",
                            failed.empty() ? "isomorphism on " + std::to_string(rings) + " rings"
                                           : "failed on " + join(failed)));
    {
        const FiniteRing Z4 = build_ring("Z4");
        const Localization loc = localize({Z4, {1, 3}});
        const bool ok = loc.inverses.size() == 2 && iso_check(Z4, loc.ring, loc.canonical_map);
        e.checks.push_back(fact("Z4 localized at {1, 3} is Z4", ok, "true", yes_no(ok)));
    }
    {
        const MatrixShape ms = shape(MatrixFamily::Full, 2, F2());
        const FiniteRing M = matrix_ring(ms);
        bool rejected = false;
        try {
            localize({M, {1, unit_matrix(ms, 1, 1, 1)}});
        } catch (const UsageError&) {
            rejected = true;
        }
        e.checks.push_back(fact("M(2, F2) rejects a denominator set containing E11", rejected, "UsageError",
                                rejected ? "UsageError" : "accepted"));
    }
    return e;
}

EntryReport run_cor213(const SuiteOptions& o) {
    EntryReport e = entry("Corollary 2.13", {"Corollary 2.13"}, "Equivalent conditions on R, R[x] and R[x]/(x^n)");
    {
        const MatrixShape ms = shape(MatrixFamily::Full, 2, F2());
        const FiniteRing M = matrix_ring(ms);
        const PolyPoly F{Polynomial(M, {unit_matrix(ms, 1, 2, 1)}), Polynomial(M, {unit_matrix(ms, 1, 1, 1)})};
        const auto w = poly_ring_witness(M, F, 1);
        e.checks.push_back(fact("(1) <=> (2): M(2, F2)[x] has no witness of degree <= 1 for the lifted pair", !w,
                                "none", w ? w->format() : "none"));
        const FiniteRing S = build_ring("fp(ex22)");
        const auto ws = poly_ring_witness(S, {Polynomial(S, {2}), Polynomial(S, {4})}, 0);
        e.checks.push_back(fact("(1) <=> (2): S[x] has a constant witness for the lifted pair", ws.has_value(),
                                "witness", ws ? ws->format() : "none"));
    }
    {
        const FiniteRing r = build_ring("quotpoly(T(2, F2), 2)");
        e.checks.push_back(polarity_check("(1) <=> (4): quotpoly(T(2, F2), 2) right Central McCoy, degree <= 1", r,
                                          check_right_central_mccoy(r, 1, search(o)), Polarity::Refuted));
    }
    {
        const FiniteRing r = build_ring("quotpoly(F2, 3)");
        e.checks.push_back(polarity_check("(1) <=> (4): quotpoly(F2, 3) right Central McCoy, degree <= 2", r,
                                          check_right_central_mccoy(r, 2, search(o)), Polarity::NotRefuted));
    }
    {
        const FiniteRing r = build_ring("quotpoly(fp(ex22), 2)");
        e.checks.push_back(polarity_check("(1) <=> (4): quotpoly(fp(ex22), 2) right Central McCoy, degree <= 1", r,
                                          check_right_central_mccoy(r, 1, search(o)), Polarity::NotRefuted));
    }
    e.notes.push_back("(3) R[x, x^-1] is the localization of R[x] at the powers of x and reduces to (2); not "
                      "tested separately");
    e.notes.push_back("(5) arbitrary commuting indeterminates reduce to finitely many and then to (2) by induction; "
                      "not tested separately");
    return e;
}

}  // namespace

const std::vector<std::string>& lattice_zoo() {
    static const std::vector<std::string> zoo{"F2",       "F3",       "Z4",       "M(2, F2)", "T(2, F2)",
                                              "D(2, F2)", "D(3, F2)", "V(3, F2)", "fp(ex22)", "prod(F2, T(2, F2))"};
    return zoo;
}

const std::vector<SuiteEntry>& paper_suite() {
    static const std::vector<SuiteEntry> suite = [] {
        std::vector<SuiteEntry> s;
        s.push_back({"§1", {"§1"}, "Implication lattice audit on the ring zoo", run_lattice});
        s.push_back({"Example 2.2", {"Example 2.2", "Definition 2.1"}, "S is right Central McCoy but not right McCoy",
                     run_ex22});
        s.push_back({"Example 2.3", {"Example 2.3", "Definition 2.1"},
                     "Central McCoy is not left-right symmetric (truncated window)", run_ex23});
        s.push_back({"Proposition 2.4", {"Proposition 2.4", "Corollary 2.5"},
                     "Finite products and eventually constant sequences", run_prop24});
        s.push_back({"Theorem 2.6", {"Theorem 2.6"}, "Transfer between R and R[x] by degree packing", run_thm26});
        s.push_back({"Proposition 2.7", {"Proposition 2.7"}, "Corner rings eR and (1 - e)R", run_prop27});
        s.push_back({"Example 2.8", {"Example 2.8", "Definition 2.1"},
                     "M2 and T2 over a commutative ring are not right Central McCoy", run_ex28});
        s.push_back({"Theorem 2.9(1)", {"Theorem 2.9"}, "D_n(R) with constant main diagonal", run_thm29_1});
        s.push_back({"Theorem 2.9(2)", {"Theorem 2.9"}, "V_n(R) and R[x]/(x^n)", run_thm29_2});
        s.push_back({"Example 2.11", {"Remark 2.10", "Example 2.11"},
                     "R/I and I Central McCoy does not force R Central McCoy", run_ex211});
        s.push_back({"Theorem 2.12", {"Theorem 2.12"}, "Localization at central regular elements collapses",
                     run_thm212});
        s.push_back({"Corollary 2.13", {"Corollary 2.13"}, "Equivalent conditions on R, R[x] and R[x]/(x^n)",
                     run_cor213});
        return s;
    }();
    return suite;
}

std::vector<EntryReport> run_paper_suite(const std::vector<std::string>& keys, const SuiteOptions& opts) {
    const auto& suite = paper_suite();
    for (const auto& k : keys)
        if (std::none_of(suite.begin(), suite.end(), [&](const SuiteEntry& e) { return e.key == k; }))
            throw UsageError("unknown verification entry '" + k + "'");
    std::vector<EntryReport> out;
    for (const auto& e : suite)
        if (keys.empty() || std::find(keys.begin(), keys.end(), e.key) != keys.end()) out.push_back(e.run(opts));
    return out;
}

}  // namespace fring
