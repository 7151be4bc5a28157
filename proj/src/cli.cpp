#include "fring/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "fring/paper_suite.hpp"
#include "fring/report.hpp"
#include "fring/ring_expr.hpp"

namespace fring {

namespace {

struct Config {
    std::vector<std::string> rings;
    std::vector<std::string> properties;
    int max_degree = 1;
    std::optional<std::size_t> window;
    std::size_t coeff_window = 1;
    std::uint64_t size_cap = kDefaultSizeCap;
    unsigned workers = 1;
    std::uint64_t seed = 0;
    bool verify_axioms = false;
    std::string expect;
    std::string out;
    std::string format = "json";
    bool timing = false;
    std::vector<std::string> entries;
    bool all = false;
    bool list = false;
    bool slow = false;
    bool commutative_only = false;
};

RingExprOptions expr_options(const Config& c) {
    RingExprOptions o;
    o.construction.size_cap = c.size_cap;
    return o;
}

std::vector<Property> selected_properties(const Config& c, bool truncated) {
    std::vector<Property> out;
    for (const auto& name : c.properties) {
        auto p = parse_property(name);
        if (!p) throw UsageError("unknown property '" + name + "'");
        out.push_back(*p);
    }
    if (out.empty())
        for (Property p : all_properties())
            if (!truncated || !is_element_level(p)) out.push_back(p);
    return out;
}

SearchOptions search_options(const Config& c) {
    SearchOptions s;
    s.workers = c.workers;
    return s;
}

nlohmann::json base_config(const Config& c) {
    nlohmann::json j = {{"rings", c.rings},
                        {"properties", c.properties},
                        {"max_degree", c.max_degree},
                        {"coeff_window", c.coeff_window},
                        {"size_cap", c.size_cap},
                        {"seed", c.seed},
                        {"verify_axioms", c.verify_axioms}};
    j["window"] = c.window ? nlohmann::json(*c.window) : nlohmann::json(nullptr);
    if (!c.expect.empty()) j["expect"] = c.expect;
    return j;
}

void emit(const Config& c, const Report& r, std::ostream& out) {
    const std::string text = c.format == "md" ? render_markdown(r) : dump_json(r);
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + c.out + "'");
    f << text;
}

RingSummary truncated_summary(const std::string& expr, const TruncatedAlgebra& view) {
    RingSummary s;
    s.expression = expr;
    s.label = expr + " window " + std::to_string(view.window());
    BasisInfo b;
    b.characteristic = view.characteristic();
    for (const auto& w : view.basis()) b.names.push_back(format_word(view.system().generators(), w));
    s.basis = std::move(b);
    return s;
}

// Infinite fp algebras are checked on a truncated window when --window is given.
std::optional<TruncatedAlgebra> truncated_if_infinite(const Config& c, const std::string& expr) {
    if (!c.window) return std::nullopt;
    auto pres = ring_expr_presentation(expr, expr_options(c));
    if (!pres) return std::nullopt;
    const RewriteSystem rs = complete_rewrite(*pres);
    try {
        RealizeOptions ro;
        ro.size_cap = c.size_cap;
        realize_finite(rs, ro);
        return std::nullopt;
    } catch (const NotFiniteDimensional&) {
        return truncated_view(rs, *c.window);
    } catch (const UsageError&) {
        return truncated_view(rs, *c.window);
    }
}

RingReport check_one(const Config& c, const std::string& expr) {
    RingReport rr;
    const std::string canon = canonical_ring_expr(expr);
    if (auto view = truncated_if_infinite(c, expr)) {
        rr.ring = truncated_summary(canon, *view);
        TruncatedCheckOptions t;
        t.max_degree = c.max_degree;
        t.coefficient_window = c.coeff_window;
        for (Property p : selected_properties(c, true)) {
            if (is_element_level(p))
                throw UsageError(std::string(property_name(p)) + " needs a finite ring, not a truncated window");
            rr.verdicts.push_back(check_on_truncated(*view, p, t));
        }
        return rr;
    }
    const FiniteRing r = build_ring(expr, expr_options(c));
    rr.ring = summarize(r, canon);
    if (c.verify_axioms) rr.ring.axioms = r.verify_axioms(c.seed);
    for (Property p : selected_properties(c, false))
        rr.verdicts.push_back(check_property(r, p, c.max_degree, search_options(c)));
    return rr;
}

void add_separators(RingReport& rr) {
    for (const auto& [m, cm] : {std::pair{Property::RightMcCoy, Property::RightCentralMcCoy},
                                std::pair{Property::LeftMcCoy, Property::LeftCentralMcCoy}}) {
        for (const auto& a : rr.verdicts)
            for (const auto& b : rr.verdicts)
                if (a.property == m && b.property == cm && a.max_degree == b.max_degree && a.refuted() &&
                    !b.refuted())
                    rr.highlights.push_back(std::string(property_name(m)) + " REFUTED, " +
                                            std::string(property_name(cm)) + " NOT_REFUTED");
    }
}

int cmd_build(const Config& c, std::ostream& out) {
    if (c.rings.size() != 1) throw UsageError("build takes exactly one ring expression");
    const std::string& expr = c.rings.front();
    const FiniteRing r = build_ring(expr, expr_options(c));
    Report rep;
    rep.command = "build";
    rep.config = base_config(c);
    RingReport rr;
    rr.ring = summarize(r, canonical_ring_expr(expr));
    if (c.verify_axioms) rr.ring.axioms = r.verify_axioms(c.seed);
    rep.rings.push_back(rr);
    if (c.format == "text") {
        const auto& s = rr.ring;
        out << "ring " << s.label << "\n";
        out << "size " << s.size << "\n";
        out << "fingerprint " << s.fingerprint << "\n";
        out << "center size " << s.center_size << "\n";
        out << "idempotents " << s.idempotent_count << "\n";
        if (s.basis) {
            out << "basis";
            for (const auto& n : s.basis->names) out << " " << n;
            out << "\n";
        }
        if (s.axioms)
            out << "axioms " << (s.axioms->ok ? "ok" : "VIOLATED: " + s.axioms->violation) << "\n";
        return s.axioms && !s.axioms->ok ? kExitAssertion : kExitOk;
    }
    emit(c, rep, out);
    return rep.all_pass() ? kExitOk : kExitAssertion;
}

int cmd_check(const Config& c, std::ostream& out) {
    if (c.rings.empty()) throw UsageError("check needs --ring");
    if (c.max_degree < 1) throw UsageError("--max-degree must be >= 1");
    Report rep;
    rep.command = "check";
    rep.config = base_config(c);
    rep.include_timing = c.timing;
    for (const auto& expr : c.rings) {
        RingReport rr = check_one(c, expr);
        if (!c.expect.empty()) {
            const bool want_refuted = c.expect == "refuted";
            for (const auto& v : rr.verdicts)
                if (v.refuted() != want_refuted)
                    rep.failures.push_back(rr.ring.expression + " " + std::string(property_name(v.property)) +
                                           ": expected " + (want_refuted ? "REFUTED" : "NOT_REFUTED") + ", got " +
                                           polarity_name(v.polarity));
        }
        if (rr.ring.axioms && !rr.ring.axioms->ok)
            rep.failures.push_back(rr.ring.expression + ": ring axioms violated: " + rr.ring.axioms->violation);
        rep.rings.push_back(std::move(rr));
    }
    emit(c, rep, out);
    return rep.all_pass() ? kExitOk : kExitAssertion;
}

int cmd_search(const Config& c, std::ostream& out) {
    if (c.max_degree < 1) throw UsageError("--max-degree must be >= 1");
    Config cc = c;
    if (cc.properties.empty()) cc.properties = {"right-mccoy", "right-central-mccoy", "left-mccoy", "left-central-mccoy"};
    Report rep;
    rep.command = "search";
    rep.config = base_config(cc);
    rep.config["commutative_only"] = c.commutative_only;
    for (const auto& family : c.rings)
        for (const auto& expr : expand_ring_family(family)) {
            if (c.commutative_only && !build_ring(expr, expr_options(cc)).is_commutative()) continue;
            RingReport rr = check_one(cc, expr);
            add_separators(rr);
            rep.rings.push_back(std::move(rr));
        }
    emit(cc, rep, out);
    return kExitOk;
}

int cmd_paper_verify(const Config& c, std::ostream& out) {
    if (c.list) {
        for (const auto& e : paper_suite()) {
            out << e.key << "\t" << e.title << "\t";
            for (std::size_t k = 0; k < e.anchors.size(); ++k) out << (k ? ", " : "") << e.anchors[k];
            out << "\n";
        }
        return kExitOk;
    }
    if (!c.all && c.entries.empty()) throw UsageError("paper-verify needs --all, --entry or --list");
    SuiteOptions so;
    so.workers = c.workers;
    so.slow = c.slow;
    Report rep;
    rep.command = "paper-verify";
    rep.config = {{"entries", c.all ? std::vector<std::string>{} : c.entries}, {"all", c.all}, {"slow", c.slow}};
    rep.entries = run_paper_suite(c.all ? std::vector<std::string>{} : c.entries, so);
    emit(c, rep, out);
    return rep.all_pass() ? kExitOk : kExitAssertion;
}

void add_ring_options(CLI::App* sub, Config& c) {
    sub->add_option("--ring", c.rings, "ring expression or .ring file (repeatable)");
    sub->add_option("--property", c.properties, "property name (repeatable; default all)");
    sub->add_option("--max-degree", c.max_degree, "polynomial degree bound")->check(CLI::Range(1, 16));
    sub->add_option("--window", c.window, "word-length window for infinite fp algebras");
    sub->add_option("--coeff-window", c.coeff_window, "word-length bound for polynomial coefficients");
    sub->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--seed", c.seed, "seed for sampled axiom checks");
    sub->add_flag("--verify-axioms", c.verify_axioms, "verify ring axioms");
    sub->add_option("--size-cap", c.size_cap, "largest ring size to construct");
}

void add_output_options(CLI::App* sub, Config& c, bool text) {
    sub->add_option("--out", c.out, "write the report to this file");
    auto* f = sub->add_option("--format", c.format, "report format");
    if (text)
        f->check(CLI::IsMember({"json", "md", "text"}));
    else
        f->check(CLI::IsMember({"json", "md"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Central McCoy property checks over finite rings", "fring"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    auto* build = app.add_subcommand("build", "construct a ring and print its summary");
    build->add_option("ring", c.rings, "ring expression or .ring file")->required();
    build->add_flag("--verify-axioms", c.verify_axioms, "verify ring axioms");
    build->add_option("--seed", c.seed, "seed for sampled axiom checks");
    build->add_option("--size-cap", c.size_cap, "largest ring size to construct");
    c.format = "text";
    add_output_options(build, c, true);

    auto* check = app.add_subcommand("check", "run property checks on rings");
    add_ring_options(check, c);
    check->add_option("--expect", c.expect, "exit 1 unless every verdict matches")
        ->check(CLI::IsMember({"refuted", "not-refuted"}));
    check->add_flag("--timing", c.timing, "include elapsed times in the report");
    add_output_options(check, c, false);

    auto* verify = app.add_subcommand("paper-verify", "run the verification suite");
    verify->add_flag("--all", c.all, "run every entry");
    verify->add_option("--entry", c.entries, "entry key (repeatable)");
    verify->add_flag("--list", c.list, "list entry keys");
    verify->add_flag("--slow", c.slow, "raise degree bounds of positive checks");
    verify->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1u, 256u));
    add_output_options(verify, c, false);

    auto* search = app.add_subcommand("search", "check a ring family and report separating examples");
    add_ring_options(search, c);
    search->add_flag("--commutative-only", c.commutative_only, "skip noncommutative members");
    add_output_options(search, c, false);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (build->parsed() && c.format == "text" && !c.out.empty()) c.format = "json";
    if (!build->parsed() && c.format == "text") c.format = "json";
    try {
        if (build->parsed()) return cmd_build(c, out);
        if (check->parsed()) return cmd_check(c, out);
        if (verify->parsed()) return cmd_paper_verify(c, out);
        return cmd_search(c, out);
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace fring
