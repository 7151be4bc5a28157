#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "fring/cli.hpp"
#include "fring/paper_suite.hpp"
#include "fring/report.hpp"

using namespace fring;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path source(const std::string& rel) { return std::filesystem::path(FRING_SOURCE_DIR) / rel; }

}  // namespace

TEST(Cli, BuildPrintsSummary) {
    const CliRun r = cli({"build", "T(2, F2)"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("size 8\n"), std::string::npos);
    const CliRun s = cli({"build", source("data/ex22.ring").string(), "--verify-axioms"});
    EXPECT_EQ(s.code, kExitOk);
    EXPECT_NE(s.out.find("size 16\n"), std::string::npos);
    EXPECT_NE(s.out.find("basis 1 x y z\n"), std::string::npos);
    EXPECT_NE(s.out.find("axioms ok\n"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli({"build", "M(4, M(4, F3))"}).code, kExitCapacity);
    const CliRun parse = cli({"build", "M(2, F2"});
    EXPECT_EQ(parse.code, kExitUsage);
    EXPECT_NE(parse.err.find("1:8"), std::string::npos);
    EXPECT_EQ(cli({}).code, kExitUsage);
    EXPECT_EQ(cli({"check"}).code, kExitUsage);
    EXPECT_EQ(cli({"check", "--ring", "F2", "--property", "nonsense"}).code, kExitUsage);
    EXPECT_EQ(cli({"check", "--ring", "F2", "--format", "yaml"}).code, kExitUsage);
    EXPECT_EQ(cli({"paper-verify", "--entry", "Lemma 9.9"}).code, kExitUsage);
    EXPECT_EQ(cli({"paper-verify", "--entry", "Example 2.2"}).code, kExitOk);
    EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST(Cli, ExpectControlsExitCode) {
    const std::vector<std::string> base{"check", "--ring", "M(2, F2)", "--property", "right-central-mccoy",
                                        "--max-degree", "1"};
    auto with = [&](const std::string& e) {
        auto a = base;
        a.insert(a.end(), {"--expect", e});
        return cli(a).code;
    };
    EXPECT_EQ(with("refuted"), kExitOk);
    EXPECT_EQ(with("not-refuted"), kExitAssertion);
    EXPECT_EQ(cli({"check", "--ring", "F2", "--property", "right-mccoy", "--max-degree", "3", "--expect",
                   "not-refuted"})
                  .code,
              kExitOk);
}

TEST(Cli, CheckReportsCanonicalCertificate) {
    const CliRun r = cli({"check", "--ring", "M(2,F2)", "--property", "right-central-mccoy", "--max-degree", "1"});
    ASSERT_EQ(r.code, kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    const auto& v = j.at("rings")[0].at("verdicts")[0];
    EXPECT_EQ(v.at("polarity"), "REFUTED");
    EXPECT_EQ(v.at("certificate").at("f"), nlohmann::json::array({2, 1}));
    EXPECT_EQ(v.at("certificate").at("transcript").size(), 15u);
    EXPECT_EQ(j.at("rings")[0].at("ring").at("expression"), "M(2, F2)");
}

TEST(Cli, TruncatedWindowForInfiniteAlgebras) {
    const CliRun r = cli({"check", "--ring", source("data/ex23.ring").string(), "--window", "3", "--property",
                       "right-central-mccoy", "--property", "left-central-mccoy"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    const auto& vs = j.at("rings")[0].at("verdicts");
    EXPECT_EQ(vs[0].at("polarity"), "REFUTED");
    EXPECT_EQ(vs[0].at("bounded_witnesses"), true);
    EXPECT_EQ(vs[1].at("polarity"), "NOT_REFUTED");
    EXPECT_EQ(cli({"check", "--ring", "fp(ex23)"}).code, kExitUsage);
}

TEST(Cli, SearchHighlightsSeparators) {
    const CliRun r = cli({"search", "--ring", "F2", "--ring", "Z4", "--ring", "T(2, F2)", "--ring", "D(2, F2)",
                       "--ring", "V(2, F2)", "--ring", "fp(ex22)"});
    ASSERT_EQ(r.code, kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.at("rings").size(), 6u);
    for (const auto& rr : j.at("rings")) {
        const bool separator = !rr.at("highlights").empty();
        EXPECT_EQ(separator, rr.at("ring").at("expression") == "fp(ex22)") << rr.at("ring").at("expression");
    }
}

TEST(Cli, SearchCommutativeMembersHaveNoRefutations) {
    const CliRun r = cli({"search", "--ring", "F2", "--ring", "Z4", "--ring", "T(2, F2)", "--ring", "V(2..3, F2)",
                       "--ring", "quotpoly(Z4, 2)", "--commutative-only"});
    ASSERT_EQ(r.code, kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("rings").size(), 5u);
    for (const auto& rr : j.at("rings"))
        for (const auto& v : rr.at("verdicts")) EXPECT_EQ(v.at("polarity"), "NOT_REFUTED");
}

TEST(Cli, EmptySearchGivesEmptyReport) {
    const CliRun r = cli({"search"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(nlohmann::json::parse(r.out).at("rings").empty());
}

TEST(Cli, MarkdownAndFileOutput) {
    const auto path = std::filesystem::temp_directory_path() / "fring_harness_report.md";
    const CliRun r = cli({"paper-verify", "--entry", "Theorem 2.9(2)", "--format", "md", "--out", path.string()});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.out.empty());
    const std::string md = read_file(path);
    EXPECT_NE(md.find("| Theorem 2.9(2) | PASS |"), std::string::npos);
    EXPECT_NE(md.find("Overall: PASS"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Report, JsonRoundTrip) {
    const CliRun r = cli({"check", "--ring", "T(2, F2)", "--ring", "fp(ex22)", "--max-degree", "1", "--verify-axioms"});
    ASSERT_EQ(r.code, kExitOk);
    const Report rep = report_from_json(nlohmann::json::parse(r.out));
    EXPECT_EQ(dump_json(rep), r.out);
    const CliRun v = cli({"paper-verify", "--entry", "Example 2.3", "--entry", "Example 2.8"});
    const Report vr = report_from_json(nlohmann::json::parse(v.out));
    EXPECT_EQ(dump_json(vr), v.out);
    EXPECT_EQ(vr.entries.size(), 2u);
    EXPECT_EQ(report_from_json(nlohmann::json::parse(dump_json(vr))), vr);
}

TEST(Report, SchemaVersionChecked) {
    auto j = nlohmann::json::parse(cli({"search"}).out);
    EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
    j["schema_version"] = kSchemaVersion + 1;
    EXPECT_THROW(report_from_json(j), Error);
}

TEST(Golden, CheckMatrixRing) {
    const CliRun r = cli({"check", "--ring", "M(2, F2)", "--property", "right-central-mccoy", "--max-degree", "1"});
    EXPECT_EQ(r.out, read_file(source("tests/golden/check_m2.json")));
}

TEST(Golden, VerifyExample28) {
    const CliRun r = cli({"paper-verify", "--entry", "Example 2.8"});
    EXPECT_EQ(r.out, read_file(source("tests/golden/verify_ex28.json")));
}

TEST(Suite, AnchorsCoverEveryLocation) {
    const std::set<std::string> required{"Definition 2.1", "§1",          "Example 2.2",     "Example 2.3",
                                         "Proposition 2.4", "Corollary 2.5", "Theorem 2.6",    "Proposition 2.7",
                                         "Example 2.8",    "Theorem 2.9",  "Remark 2.10",     "Example 2.11",
                                         "Theorem 2.12",   "Corollary 2.13"};
    std::set<std::string> seen;
    for (const auto& e : paper_suite()) seen.insert(e.anchors.begin(), e.anchors.end());
    EXPECT_EQ(seen, required);
    EXPECT_EQ(paper_suite().size(), 12u);
}

TEST(Suite, DeterministicAcrossWorkerCounts) {
    const CliRun one = cli({"paper-verify", "--all", "--workers", "1"});
    const CliRun four = cli({"paper-verify", "--all", "--workers", "4"});
    EXPECT_EQ(one.out, four.out);
    EXPECT_EQ(one.code, four.code);
}

TEST(Suite, EntriesReportTheirKeys) {
    for (const auto& e : paper_suite()) {
        const auto reps = run_paper_suite({e.key}, {});
        ASSERT_EQ(reps.size(), 1u);
        EXPECT_EQ(reps[0].key, e.key);
        EXPECT_EQ(reps[0].anchors, e.anchors);
        EXPECT_FALSE(reps[0].checks.empty());
    }
}
