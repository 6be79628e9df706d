#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "stcurve/oracle.hpp"
#include "stcurve/pipeline.hpp"

using namespace stcurve;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    fs::path p = fs::temp_directory_path() / "stcurve-tests" / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunConfig basic(const std::vector<int>& stratum, const fs::path& out) {
    RunConfig c;
    c.stratum = stratum;
    c.output_dir = out;
    return c;
}

}  // namespace

TEST_CASE("genus three run finds exactly the eight-square class") {
    auto out = fresh_dir("ew");
    RunResult r = run_pipeline(basic({1, 1, 1, 1}, out));
    CHECK(r.exit_code == 0);
    REQUIRE(r.merged);
    REQUIRE(r.certified.size() == 1);
    CHECK(r.certified[0].certified);
    CHECK(r.certified[0].sum == Rational(1));
    CHECK(r.certified[0].canonical.n_squares() == 8);
    CHECK(slurp(out / "H_1_1_1_1" / "certified_list") ==
          certified_record(r.certified[0]) + "\n");
}

TEST_CASE("unknown stratum is rejected") {
    auto out = fresh_dir("bad");
    CHECK_THROWS_AS(run_pipeline(basic({5, 1}, out)), std::invalid_argument);
}

TEST_CASE("excluded strata produce empty certified lists") {
    for (const std::vector<int>& st :
         {std::vector<int>{1, 1, 1, 1, 1, 1}, {2, 2, 2, 1, 1}}) {
        auto out = fresh_dir("neg" + std::to_string(st.size()));
        RunResult r = run_pipeline(basic(st, out));
        CHECK(r.exit_code == 0);
        CHECK(r.merged);
        CHECK(r.certified.empty());
        CHECK(slurp(out / stratum_tag(st) / "certified_list").empty());
    }
}

TEST_CASE("final artifacts are byte-identical across shard counts") {
    for (const std::vector<int>& st : {std::vector<int>{2, 2, 2}, {2, 2, 2, 2}}) {
        std::vector<std::string> finals;
        for (int m : {1, 4, 16}) {
            auto out = fresh_dir("shards" + stratum_tag(st) + std::to_string(m));
            RunConfig c = basic(st, out);
            c.shard_count = m;
            bool merged = false;
            for (int k = 0; k < m; ++k) {
                c.shard_index = k;
                RunResult r = run_pipeline(c);
                REQUIRE(r.exit_code == 0);
                merged = merged || r.merged;
            }
            CHECK(merged);
            finals.push_back(slurp(out / stratum_tag(st) / "certified_list") + "|" +
                             slurp(out / stratum_tag(st) / "certified_presentations") +
                             "|" + slurp(out / stratum_tag(st) / "admissible_list"));
        }
        CHECK(finals[0] == finals[1]);
        CHECK(finals[0] == finals[2]);
    }
}

TEST_CASE("pruned and unpruned runs emit identical artifacts") {
    for (const std::vector<int>& st :
         {std::vector<int>{1, 1, 1, 1}, {2, 2, 2}, {3, 3, 1, 1}}) {
        auto out_on = fresh_dir("pr_on" + stratum_tag(st));
        auto out_off = fresh_dir("pr_off" + stratum_tag(st));
        RunConfig on = basic(st, out_on);
        RunConfig off = basic(st, out_off);
        off.window_prune = false;
        REQUIRE(run_pipeline(on).exit_code == 0);
        REQUIRE(run_pipeline(off).exit_code == 0);
        for (const char* f : {"certified_list", "admissible_list",
                              "certified_presentations"})
            CHECK(slurp(out_on / stratum_tag(st) / f) ==
                  slurp(out_off / stratum_tag(st) / f));
    }
}

TEST_CASE("resume reproduces the run byte for byte") {
    auto out = fresh_dir("resume");
    RunConfig c = basic({2, 2, 2}, out);
    REQUIRE(run_pipeline(c).exit_code == 0);
    const std::string before = slurp(out / "H_2_2_2" / "certified_list") +
                               slurp(out / "H_2_2_2" / "certified_presentations");
    c.resume = true;
    RunResult r2 = run_pipeline(c);
    CHECK(r2.exit_code == 0);
    CHECK(r2.merged);
    const std::string after = slurp(out / "H_2_2_2" / "certified_list") +
                              slurp(out / "H_2_2_2" / "certified_presentations");
    CHECK(before == after);
}

TEST_CASE("resume refuses a tampered artifact") {
    auto out = fresh_dir("tamper");
    RunConfig c = basic({2, 2, 2}, out);
    REQUIRE(run_pipeline(c).exit_code == 0);
    // corrupt one stage artifact
    fs::path victim;
    for (const auto& e : fs::directory_iterator(out / "H_2_2_2" / "case_0")) {
        if (e.path().filename().string().find("visible") != std::string::npos) {
            victim = e.path();
            break;
        }
    }
    REQUIRE(!victim.empty());
    std::ofstream(victim, std::ios::app) << "tampered\n";
    c.resume = true;
    RunResult r = run_pipeline(c);
    CHECK(r.exit_code == 3);
    CHECK(r.message.find("digest mismatch") != std::string::npos);
}

TEST_CASE("published Ornithorynque coordinates appear among presentations") {
    auto out = fresh_dir("pub");
    RunResult r = run_pipeline(basic({2, 2, 2}, out));
    REQUIRE(r.merged);
    const std::string pres = slurp(out / "H_2_2_2" / "certified_presentations");
    CHECK(pres.find(published_presentations()[0]) != std::string::npos);
}

TEST_CASE("oracle matches the run byte for byte") {
    auto out = fresh_dir("oracle");
    REQUIRE(run_pipeline(basic({1, 1, 1, 1}, out)).exit_code == 0);
    auto lines = oracle_records(8, {1, 1, 1, 1});
    std::string oracle_bytes;
    for (const auto& l : lines) oracle_bytes += l + "\n";
    CHECK(oracle_bytes == slurp(out / "H_1_1_1_1" / "certified_list"));
}

TEST_CASE("oracle on marked-torus covers certifies nothing") {
    CHECK(oracle_enumerate(4, {0}).empty());
    CHECK_THROWS_AS(oracle_enumerate(9, {2, 2, 2}), std::invalid_argument);
}

TEST_CASE("enumerate report shows the published ranges") {
    const std::string rep = enumerate_report({2, 1, 1, 1, 1, 1, 1});
    CHECK(rep.find("d_opt 36") != std::string::npos);
    CHECK(rep.find("t0 in [8,17]") != std::string::npos);
    CHECK(rep.find("s0 in {19,21,23,25,27}") != std::string::npos);
    const std::string rep6 = enumerate_report({1, 1, 1, 1, 1, 1});
    CHECK(rep6.find("no admissible partitions") != std::string::npos);
    const std::string rep4 = enumerate_report({1, 1, 1, 1});
    CHECK(rep4.find("d_opt 2") != std::string::npos);
}

TEST_CASE("fnv1a digest is stable") {
    CHECK(fnv1a("") == 14695981039346656037ULL);
    CHECK(fnv1a("a") != fnv1a("b"));
}
