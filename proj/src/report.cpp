#include "fring/report.hpp"

#include <algorithm>
#include <sstream>

namespace fring {

using nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

Property property_from(const std::string& name) {
    auto p = parse_property(name);
    if (!p) throw UsageError("unknown property '" + name + "' in report");
    return *p;
}

json certificate_json(const Certificate& c) {
    json t = json::array();
    for (const auto& l : c.transcript)
        t.push_back({{"candidate", l.candidate},
                     {"coefficient", l.coefficient},
                     {"value", l.value},
                     {"probe", opt(l.probe)},
                     {"lhs", l.lhs},
                     {"rhs", l.rhs}});
    json j = {{"f", c.f},
              {"g", c.g},
              {"f_forms", c.f_forms},
              {"g_forms", c.g_forms},
              {"transcript", t},
              {"product_value", c.product_value},
              {"tuple", c.tuple}};
    j["product_indices"] = c.product_indices ? json::array({c.product_indices->first, c.product_indices->second})
                                             : json(nullptr);
    j["linear"] = c.linear ? json{{"window_dimension", c.linear->window_dimension},
                                  {"constraint_rank", c.linear->constraint_rank}}
                           : json(nullptr);
    return j;
}

Certificate certificate_from(const json& j) {
    Certificate c;
    c.f = j.at("f").get<std::vector<Index>>();
    c.g = j.at("g").get<std::vector<Index>>();
    c.f_forms = j.at("f_forms").get<std::vector<std::string>>();
    c.g_forms = j.at("g_forms").get<std::vector<std::string>>();
    for (const auto& l : j.at("transcript"))
        c.transcript.push_back({l.at("candidate").get<Index>(), l.at("coefficient").get<std::uint32_t>(),
                                l.at("value").get<Index>(), get_opt<Index>(l, "probe"), l.at("lhs").get<Index>(),
                                l.at("rhs").get<Index>()});
    if (!j.at("product_indices").is_null())
        c.product_indices = std::pair{j.at("product_indices")[0].get<std::uint32_t>(),
                                      j.at("product_indices")[1].get<std::uint32_t>()};
    c.product_value = j.at("product_value").get<Index>();
    c.tuple = j.at("tuple").get<std::vector<Index>>();
    if (!j.at("linear").is_null())
        c.linear = LinearRefutation{j.at("linear").at("window_dimension").get<std::size_t>(),
                                    j.at("linear").at("constraint_rank").get<std::size_t>()};
    return c;
}

json summary_json(const RingSummary& s) {
    json j = {{"expression", s.expression},
              {"label", s.label},
              {"size", s.size},
              {"fingerprint", s.fingerprint},
              {"center_size", s.center_size},
              {"idempotent_count", s.idempotent_count}};
    j["basis"] = s.basis ? json{{"characteristic", s.basis->characteristic}, {"names", s.basis->names}}
                         : json(nullptr);
    j["axioms"] = s.axioms ? json{{"ok", s.axioms->ok},
                                  {"exhaustive_triples", s.axioms->exhaustive_triples},
                                  {"triples_checked", s.axioms->triples_checked},
                                  {"violation", s.axioms->violation}}
                           : json(nullptr);
    return j;
}

RingSummary summary_from(const json& j) {
    RingSummary s;
    s.expression = j.at("expression").get<std::string>();
    s.label = j.at("label").get<std::string>();
    s.size = j.at("size").get<Index>();
    s.fingerprint = j.at("fingerprint").get<std::string>();
    s.center_size = j.at("center_size").get<std::size_t>();
    s.idempotent_count = j.at("idempotent_count").get<std::size_t>();
    if (!j.at("basis").is_null())
        s.basis = BasisInfo{j.at("basis").at("characteristic").get<unsigned>(),
                            j.at("basis").at("names").get<std::vector<std::string>>()};
    if (!j.at("axioms").is_null()) {
        const auto& a = j.at("axioms");
        s.axioms = AxiomReport{a.at("ok").get<bool>(), a.at("exhaustive_triples").get<bool>(),
                               a.at("triples_checked").get<std::uint64_t>(), a.at("violation").get<std::string>()};
    }
    return s;
}

}  // namespace

RingSummary summarize(const FiniteRing& r, const std::string& expression) {
    RingSummary s;
    s.expression = expression;
    s.label = r.label();
    s.size = r.size();
    s.fingerprint = r.fingerprint_hex();
    s.center_size = r.center().size();
    s.idempotent_count = r.idempotents().size();
    s.basis = r.basis();
    return s;
}

bool EntryReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool Report::all_pass() const {
    return failures.empty() && std::all_of(entries.begin(), entries.end(), [](const EntryReport& e) { return e.pass(); });
}

std::string polarity_name(Polarity p) { return p == Polarity::Refuted ? "REFUTED" : "NOT_REFUTED"; }

json to_json(const Verdict& v, bool include_timing) {
    json w = json::array();
    for (const auto& r : v.witnesses) w.push_back({r.primary, r.partner, r.witness});
    json j = {{"property", std::string(property_name(v.property))},
              {"polarity", polarity_name(v.polarity)},
              {"max_degree", v.max_degree},
              {"exact", v.exact},
              {"window", opt(v.window)},
              {"coefficient_window", opt(v.coefficient_window)},
              {"bounded_witnesses", v.bounded_witnesses},
              {"pruned", v.pruned},
              {"note", v.note},
              {"universal_witness", opt(v.universal_witness)},
              {"stats",
               {{"primaries", v.stats.primaries}, {"pairs", v.stats.pairs}, {"witness_tests", v.stats.witness_tests}}},
              {"witnesses", w}};
    j["certificate"] = v.certificate ? certificate_json(*v.certificate) : json(nullptr);
    if (include_timing) j["elapsed_seconds"] = v.elapsed_seconds;
    return j;
}

Verdict verdict_from_json(const json& j) {
    Verdict v;
    v.property = property_from(j.at("property").get<std::string>());
    const auto pol = j.at("polarity").get<std::string>();
    if (pol != "REFUTED" && pol != "NOT_REFUTED") throw UsageError("unknown polarity '" + pol + "' in report");
    v.polarity = pol == "REFUTED" ? Polarity::Refuted : Polarity::NotRefuted;
    v.max_degree = j.at("max_degree").get<int>();
    v.exact = j.at("exact").get<bool>();
    v.window = get_opt<std::size_t>(j, "window");
    v.coefficient_window = get_opt<std::size_t>(j, "coefficient_window");
    v.bounded_witnesses = j.at("bounded_witnesses").get<bool>();
    v.pruned = j.at("pruned").get<bool>();
    v.note = j.at("note").get<std::string>();
    v.universal_witness = get_opt<Index>(j, "universal_witness");
    const auto& st = j.at("stats");
    v.stats = {st.at("primaries").get<std::uint64_t>(), st.at("pairs").get<std::uint64_t>(),
               st.at("witness_tests").get<std::uint64_t>()};
    for (const auto& r : j.at("witnesses"))
        v.witnesses.push_back({r[0].get<std::uint64_t>(), r[1].get<std::uint64_t>(), r[2].get<Index>()});
    if (!j.at("certificate").is_null()) v.certificate = certificate_from(j.at("certificate"));
    if (j.contains("elapsed_seconds")) v.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    return v;
}

json to_json(const Report& r) {
    json rings = json::array();
    for (const auto& rr : r.rings) {
        json verdicts = json::array();
        for (const auto& v : rr.verdicts) verdicts.push_back(to_json(v, r.include_timing));
        rings.push_back({{"ring", summary_json(rr.ring)}, {"verdicts", verdicts}, {"highlights", rr.highlights}});
    }
    json entries = json::array();
    std::size_t passed = 0;
    for (const auto& e : r.entries) {
        json checks = json::array();
        for (const auto& c : e.checks) {
            json cj = {{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}};
            cj["verdict"] = c.verdict ? to_json(*c.verdict, r.include_timing) : json(nullptr);
            checks.push_back(cj);
        }
        if (e.pass()) ++passed;
        entries.push_back({{"key", e.key},
                           {"anchors", e.anchors},
                           {"title", e.title},
                           {"status", e.pass() ? "PASS" : "FAIL"},
                           {"checks", checks},
                           {"notes", e.notes}});
    }
    return {{"schema_version", r.schema_version},
            {"tool", "fring"},
            {"tool_version", r.tool_version},
            {"command", r.command},
            {"config", r.config},
            {"include_timing", r.include_timing},
            {"rings", rings},
            {"entries", entries},
            {"failures", r.failures},
            {"summary",
             {{"entries", r.entries.size()},
              {"entries_passed", passed},
              {"failures", r.failures.size()},
              {"all_pass", r.all_pass()}}}};
}

Report report_from_json(const json& j) {
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion)
        throw UsageError("unsupported report schema version " + std::to_string(r.schema_version));
    r.tool_version = j.at("tool_version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.config = j.at("config");
    r.include_timing = j.at("include_timing").get<bool>();
    for (const auto& rj : j.at("rings")) {
        RingReport rr;
        rr.ring = summary_from(rj.at("ring"));
        for (const auto& v : rj.at("verdicts")) rr.verdicts.push_back(verdict_from_json(v));
        rr.highlights = rj.at("highlights").get<std::vector<std::string>>();
        r.rings.push_back(std::move(rr));
    }
    for (const auto& ej : j.at("entries")) {
        EntryReport e;
        e.key = ej.at("key").get<std::string>();
        e.anchors = ej.at("anchors").get<std::vector<std::string>>();
        e.title = ej.at("title").get<std::string>();
        e.notes = ej.at("notes").get<std::vector<std::string>>();
        for (const auto& cj : ej.at("checks")) {
            CheckResult c;
            c.name = cj.at("name").get<std::string>();
            c.expected = cj.at("expected").get<std::string>();
            c.observed = cj.at("observed").get<std::string>();
            c.pass = cj.at("pass").get<bool>();
            if (!cj.at("verdict").is_null()) c.verdict = verdict_from_json(cj.at("verdict"));
            e.checks.push_back(std::move(c));
        }
        r.entries.push_back(std::move(e));
    }
    r.failures = j.at("failures").get<std::vector<std::string>>();
    return r;
}

std::string dump_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {

std::string verdict_line(const json& v) {
    std::ostringstream out;
    out << "`" << v.at("property").get<std::string>() << "`: **" << v.at("polarity").get<std::string>() << "**";
    if (v.at("max_degree").get<int>() >= 0 && !v.at("exact").get<bool>())
        out << " (degree <= " << v.at("max_degree").get<int>();
    else
        out << " (exact";
    if (!v.at("window").is_null()) out << ", window " << v.at("window").get<std::size_t>();
    out << ")";
    if (!v.at("certificate").is_null()) {
        const auto& c = v.at("certificate");
        if (!c.at("f").empty()) {
            auto join = [](const json& xs) {
                std::string s;
                for (std::size_t k = 0; k < xs.size(); ++k) {
                    if (k) s += " ; ";
                    s += xs[k].get<std::string>();
                }
                return s;
            };
            out << ", f = [" << join(c.at("f_forms")) << "], g = [" << join(c.at("g_forms")) << "]";
        }
        if (!c.at("tuple").empty()) out << ", tuple " << c.at("tuple").dump();
    }
    if (!v.at("universal_witness").is_null()) out << ", universal witness #" << v.at("universal_witness").get<Index>();
    return out.str();
}

}  // namespace

std::string render_markdown(const Report& r) {
    const json j = to_json(r);
    std::ostringstream out;
    out << "# fring report (" << j.at("command").get<std::string>() << ")\n\n";
    out << "Schema version " << j.at("schema_version").get<int>() << ", tool version "
        << j.at("tool_version").get<std::string>() << ".\n";
    for (const auto& rj : j.at("rings")) {
        const auto& s = rj.at("ring");
        out << "\n## " << s.at("label").get<std::string>() << "\n\n";
        out << "- expression: `" << s.at("expression").get<std::string>() << "`\n";
        if (s.at("size").get<Index>() == 0)
            out << "- truncated window of dimension " << s.at("basis").at("names").size() << "\n";
        else
            out << "- size " << s.at("size").get<Index>() << ", fingerprint `" << s.at("fingerprint").get<std::string>()
                << "`, center size " << s.at("center_size").get<std::size_t>() << ", idempotents "
                << s.at("idempotent_count").get<std::size_t>() << "\n";
        if (!s.at("basis").is_null()) {
            out << "- basis:";
            for (const auto& n : s.at("basis").at("names")) out << " " << n.get<std::string>();
            out << "\n";
        }
        if (!s.at("axioms").is_null())
            out << "- axioms: " << (s.at("axioms").at("ok").get<bool>() ? "ok" : "VIOLATED") << "\n";
        for (const auto& v : rj.at("verdicts")) out << "- " << verdict_line(v) << "\n";
        for (const auto& h : rj.at("highlights")) out << "- separator: " << h.get<std::string>() << "\n";
    }
    if (!j.at("entries").empty()) {
        out << "\n## Verification entries\n\n| entry | status | checks |\n|---|---|---|\n";
        for (const auto& e : j.at("entries")) {
            std::size_t ok = 0;
            for (const auto& c : e.at("checks")) ok += c.at("pass").get<bool>() ? 1 : 0;
            out << "| " << e.at("key").get<std::string>() << " | " << e.at("status").get<std::string>() << " | " << ok
                << "/" << e.at("checks").size() << " |\n";
        }
        for (const auto& e : j.at("entries")) {
            out << "\n### " << e.at("key").get<std::string>() << ": " << e.at("title").get<std::string>() << " ("
                << e.at("status").get<std::string>() << ")\n\n";
            for (const auto& c : e.at("checks")) {
                out << "- [" << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "] " << c.at("name").get<std::string>()
                    << ": expected " << c.at("expected").get<std::string>() << ", observed "
                    << c.at("observed").get<std::string>() << "\n";
                if (!c.at("verdict").is_null()) out << "  - " << verdict_line(c.at("verdict")) << "\n";
            }
            for (const auto& n : e.at("notes")) out << "- note: " << n.get<std::string>() << "\n";
        }
    }
    for (const auto& f : j.at("failures")) out << "\n- expectation failed: " << f.get<std::string>() << "\n";
    out << "\nOverall: " << (j.at("summary").at("all_pass").get<bool>() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace fring
