#include <doctest.h>

#include "normclass/cli/report.hpp"
#include "normclass/cli/run.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace normclass;

namespace {

struct Captured {
    int code;
    std::string out;
    std::string err;
};

Captured run_cli(const std::string& command, std::vector<std::string> args, std::uint64_t seed = 0,
                 OutputFormat format = OutputFormat::Json) {
    RunConfig c;
    c.command = command;
    c.args = std::move(args);
    c.seed = seed;
    c.output = format;
    std::ostringstream out, err;
    int code = run(c, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("surface report") {
    auto r = run_cli("surface-class", {"x^2*z + z^2*t + y^3"});
    REQUIRE(r.code == exit_code::kOk);
    Json j = Json::parse(r.out);
    CHECK(j["normal_class"] == 11);
    CHECK(j["degree"] == 3);
    CHECK(j["reduced"] == false);
    CHECK(j["certified"] == true);
    CHECK(j["schubert"] == Json::parse(R"({"sigma2":11,"sigma11":6})"));
    CHECK(j["seeds_used"] == Json::parse("[0,1]"));
    REQUIRE(j["base_points"].size() == 2);
    std::map<std::string, int> mult;
    for (const auto& b : j["base_points"]) mult[b["point"].dump()] = b["multiplicity"];
    CHECK(mult[R"(["0","0","0","1"])"] == 8);
    CHECK(mult[R"(["0","0","1","0"])"] == 2);
    // Keys come out in a fixed order.
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"input", "degree", "reduced", "d_H", "polar_degree", "bezout",
                                           "base_points", "residual", "normal_class", "schubert", "certified",
                                           "seeds_used"});
}

TEST_CASE("curve, chow, census, polar and quadric reports") {
    auto curve = run_cli("curve-class", {"x^2 + y^2 - z^2"});
    REQUIRE(curve.code == 0);
    CHECK(Json::parse(curve.out)["normal_class"] == 2);

    auto chow = run_cli("chow", {"s1*s1"});
    REQUIRE(chow.code == 0);
    CHECK(Json::parse(chow.out).dump() == R"({"sigma2":1,"sigma11":1})");

    auto census = run_cli("census", {"x*z*t - t*x^2 - z*t^2 - x*z^2 + y^3"});
    REQUIRE(census.code == 0);
    Json c = Json::parse(census.out);
    CHECK(c["census"]["kappa_star"] == 1);
    CHECK(c["census"]["closed_form_value"] == 19);
    CHECK(c["certified"] == true);

    auto singular = run_cli("census", {"x^2*z + z^2*t + y^3"});
    REQUIRE(singular.code == 0);
    CHECK(Json::parse(singular.out)["certified"] == false);

    auto polar = run_cli("polar", {"x^2 + y^2 + z^2 - t^2"});
    REQUIRE(polar.code == 0);
    CHECK(Json::parse(polar.out)["polar_degree"] == 1);

    auto table = run_cli("quadric-table", {});
    REQUIRE(table.code == 0);
    Json rows = Json::parse(table.out);
    REQUIRE(rows.size() == 10);
    std::vector<long> classes;
    for (const auto& row : rows) {
        CHECK(row["agree"] == true);
        classes.push_back(row["normal_class"]);
    }
    CHECK(classes == std::vector<long>{6, 4, 2, 4, 2, 0, 5, 3, 4, 2});
    auto one = run_cli("quadric-table", {"c", "2"});
    REQUIRE(one.code == 0);
    CHECK(Json::parse(one.out)["normal_class"] == 5);
}

TEST_CASE("exit codes") {
    auto parse = run_cli("surface-class", {"x^2 + 2x"});
    CHECK(parse.code == exit_code::kParse);
    CHECK(parse.out.empty());
    CHECK_FALSE(parse.err.empty());
    CHECK(run_cli("surface-class", {"x + y + t"}).code == exit_code::kHypothesis);
    CHECK(run_cli("curve-class", {"z*x - z*y"}).code == exit_code::kHypothesis);
    CHECK(run_cli("chow", {"s1/s1"}).code == exit_code::kParse);
    CHECK(run_cli("quadric-table", {"a", "0", "1"}).code == exit_code::kParse);
    CHECK(run_cli("frobnicate", {"x"}).code == exit_code::kParse);
    CHECK_FALSE(is_known_command("frobnicate"));
}

TEST_CASE("output is byte-identical for a fixed seed") {
    for (const char* s : {"x^2*z + z^2*t + y^3", "x^2 + 4*y^2 + 4*z^2 - t^2"}) {
        auto a = run_cli("surface-class", {s}, 5);
        auto b = run_cli("surface-class", {s}, 5);
        CHECK(a.out == b.out);
        auto c = run_cli("surface-class", {s}, 6);
        Json ja = Json::parse(a.out), jc = Json::parse(c.out);
        CHECK(ja["normal_class"] == jc["normal_class"]);
        CHECK(ja["base_points"] == jc["base_points"]);
        CHECK(ja["seeds_used"] != jc["seeds_used"]);
    }
}

TEST_CASE("text output") {
    auto r = run_cli("curve-class", {"x^2 + 2*y^2 - z^2"}, 0, OutputFormat::Text);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("normal_class: 4\n") != std::string::npos);
    CHECK(r.out.find("seeds_used: [0,1]\n") != std::string::npos);
}

TEST_CASE("batch mode keeps input order") {
    std::string path = "batch_input_test.txt";
    {
        std::ofstream f(path);
        f << "# normal classes\n"
          << "x^2*z + z^2*t + y^3\n"
          << "\n"
          << "x*y - z*t\n"
          << "x + \n"
          << "x^2 + y^2 + z^2 - t^2\n";
    }
    RunConfig c;
    c.command = "surface-class";
    c.batch_file = path;
    std::ostringstream out, err;
    int code = run(c, out, err);
    std::remove(path.c_str());
    CHECK(code == exit_code::kParse);
    std::istringstream lines(out.str());
    std::vector<Json> docs;
    for (std::string line; std::getline(lines, line);) docs.push_back(Json::parse(line));
    REQUIRE(docs.size() == 4);
    CHECK(docs[0]["normal_class"] == 11);
    CHECK(docs[1]["normal_class"] == 5);
    CHECK(docs[2]["exit_code"] == exit_code::kParse);
    CHECK(docs[3]["normal_class"] == 2);
    CHECK(err.str().find("line 3") != std::string::npos);

    c.batch_file = "does/not/exist.txt";
    CHECK(run(c, out, err) == exit_code::kParse);
}
