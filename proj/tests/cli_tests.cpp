#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "steinx/families.hpp"
#include "steinx/json_io.hpp"

using namespace steinx;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout and stderr merged
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(STEINX_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/steinx_cli_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

RunResult pipe_run(const std::string& producer_args, const std::string& consumer_args) {
    const std::string cmd = std::string(STEINX_CLI_PATH) + " " + producer_args + " | " +
                            STEINX_CLI_PATH + " " + consumer_args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("gen | invariants pipeline reports the family values") {
    RunResult r = pipe_run("gen znp --n 3 --p 4", "invariants -");
    REQUIRE(r.exit_code == 0);
    Json j = parse_json_text(r.output);
    CHECK(j["divisibility"] == "4");
    CHECK(j["rotation_divisor"] == 4);
    CHECK(j["homology"]["b2"] == 3);
    CHECK(j["form"]["even"] == true);
}

TEST_CASE("emitted handlebodies re-validate and reports are byte-stable") {
    RunResult gen = run("gen znp --n 4 --p 6");
    REQUIRE(gen.exit_code == 0);
    SteinHandlebody x = handlebody_from_json(parse_json_text(gen.output));
    CHECK(validate(x).empty());
    CHECK(x == build_znp(4, 6));
    // Re-serialization is byte-identical (sorted keys, stable rendering).
    CHECK(handlebody_to_json(x).dump(2) + "\n" == gen.output);

    const std::string path = write_temp("znp46.json", gen.output);
    RunResult a = run("invariants " + path);
    RunResult b = run("invariants " + path);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("classify pipelines and exit codes") {
    RunResult ok = pipe_run("gen znp --n 3 --p 5", "classify -");
    REQUIRE(ok.exit_code == 0);
    Json j = parse_json_text(ok.output);
    CHECK(j["n"] == 3);
    CHECK(j["r"] == 5);
    CHECK(j["diffeo_type"] == "twisted_bundle_sum");

    // Irreducible 1-handle (abelianization Z/2): inconclusive, exit 1.
    const std::string blocked = write_temp(
        "blocked.json",
        R"({"one_handles":1,"handles":[{"tb":1,"rot":0,"word":[1,1]}],"linking":[[0]]})");
    RunResult bad = run("classify " + blocked + " --depth 3 --max-states 50");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("unclassifiable") != std::string::npos);

    // Depth 0 leaves no search budget at all: reducible or not, exit 1.
    const std::string reducible = write_temp(
        "reducible.json",
        R"({"one_handles":1,"handles":[{"tb":2,"rot":1,"word":[1]}],"linking":[[1]]})");
    RunResult zero = run("classify " + reducible + " --depth 0");
    CHECK(zero.exit_code == 1);
    RunResult enough = run("classify " + reducible + " --depth 4");
    CHECK(enough.exit_code == 0);
}

TEST_CASE("table and json formats carry the same numbers") {
    RunResult js = pipe_run("gen znp --n 3 --p 5", "classify -");
    RunResult tb = pipe_run("gen znp --n 3 --p 5", "classify - --format table");
    REQUIRE(js.exit_code == 0);
    REQUIRE(tb.exit_code == 0);
    Json j = parse_json_text(js.output);
    CHECK(tb.output.find("n = 3") != std::string::npos);
    CHECK(tb.output.find("r = 5") != std::string::npos);
    CHECK(j["n"] == 3);
    CHECK(j["r"] == 5);
}

TEST_CASE("detect exit codes distinguish verdicts") {
    // Family emitted by gen torus: distinct divisibilities, exit 0.
    RunResult good = pipe_run("gen torus --rs 1,3,5 --k 2", "detect - --route contact");
    CHECK(good.exit_code == 0);
    Json j = parse_json_text(good.output);
    CHECK(j["verdict"] == "infinite_exotic_subfamily");

    // Two equal members: inconclusive, exit 1.
    Json fam;
    fam["members"] = Json::array({Json{{"id", "a"}, {"handlebody", handlebody_to_json(build_znp(2, 2))}},
                                  Json{{"id", "b"}, {"handlebody", handlebody_to_json(build_znp(2, 2))}}});
    const std::string path = write_temp("dupfam.json", fam.dump());
    RunResult dup = run("detect " + path + " --route divisibility");
    CHECK(dup.exit_code == 1);
}

TEST_CASE("enumerate-c1 with an oracle file") {
    const std::string body = write_temp(
        "unknot.json", handlebody_to_json(build_y(1)).dump());
    const std::string oracle = write_temp(
        "oracle.json", R"({"entries":[{"class":[1],"genus_ub":0}]})");
    RunResult r = run("enumerate-c1 " + body + " --oracle " + oracle);
    REQUIRE(r.exit_code == 0);
    Json j = parse_json_text(r.output);
    CHECK(j["count"] == 1);
    CHECK(j["candidates"][0]["free_coords"][0] == "0");
}

TEST_CASE("acreduce and the state budget environment variable") {
    const std::string pres =
        write_temp("pres.json", R"({"generators":2,"relators":[[1,2],[2]]})");
    RunResult r = run("acreduce " + pres);
    REQUIRE(r.exit_code == 0);
    Json j = parse_json_text(r.output);
    CHECK(j["status"] == "trivialized");
    CHECK(j["presentation"]["generators"] == 0);

    const std::string blocked =
        write_temp("pres2.json", R"({"generators":1,"relators":[[1,1]]})");
    RunResult obs = run("acreduce " + blocked);
    CHECK(obs.exit_code == 1);
    Json oj = parse_json_text(obs.output);
    CHECK(oj["status"] == "exhausted");
    CHECK(oj["obstruction"] == "abelianization Z/2");

    // A one-state budget via the environment exhausts immediately.
    const std::string cmd = "STEINX_MAX_STATES=1 " + std::string(STEINX_CLI_PATH) +
                            " acreduce " + pres + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 1);
    CHECK(parse_json_text(out)["status"] == "exhausted");
}

TEST_CASE("malformed input exits 2 and points at the offending field") {
    const std::string bad = write_temp("bad.json", R"({"handles":[]})");
    RunResult r = run("invariants " + bad);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("one_handles") != std::string::npos);

    const std::string garbled = write_temp("garbled.json", "{nope");
    RunResult g = run("invariants " + garbled);
    CHECK(g.exit_code == 2);
    CHECK(g.output.find("malformed JSON") != std::string::npos);

    RunResult missing = run("invariants /tmp/steinx_no_such_file.json");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("compare emits classes, evidence, and an optional certificate") {
    const std::string a = write_temp("cmp_a.json", handlebody_to_json(build_znp(3, 0)).dump());
    const std::string b = write_temp("cmp_b.json", handlebody_to_json(build_znp(3, 8)).dump());
    const std::string q = write_temp(
        "cmp_q.json", R"([["-2","-1","0"],["-1","-2","-2"],["0","-2","-2"]])");
    const std::string oracle = write_temp("cmp_oracle.json", R"({"entries":[
        {"class":[1,-1,0],"genus_ub":1},
        {"class":[1,0,1],"genus_ub":1},
        {"class":[0,0,1],"genus_ub":0}]})");
    RunResult r = run("compare " + a + " " + b + " --oracle " + oracle + " --q " + q);
    REQUIRE(r.exit_code == 0);
    Json j = parse_json_text(r.output);
    CHECK(j["contactomorphic"] == false);
    CHECK(j["diffeomorphic_total_spaces"] == true);
    CHECK(j["evidence"]["b2_equal"] == true);
    REQUIRE(j.contains("certificate"));
    CHECK(j["certificate"]["upper_a"] == 1);
    CHECK(j["certificate"]["lower_b"] == "4");
}
