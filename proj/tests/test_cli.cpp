#include "enigme/cli.hpp"
#include "enigme/generate.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace enigme;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

} // namespace

TEST_CASE("text output with solution, stable across runs") {
    const auto a = run({"physics", "1d", "--seed", "1", "--with-solution"});
    CHECK(a.code == cli::kExitOk);
    CHECK(a.err.empty());
    const auto p = generate(Category::physics, Dimension(1), 1);
    CHECK(a.out == p.prompt + "SOLUTION:\n" + p.solution);
    CHECK(run({"physics", "1d", "--seed", "1", "--with-solution"}).out == a.out);
}

TEST_CASE("text batches are separated") {
    const auto r = run({"numeric", "2d", "--seed", "5", "--count", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == generate(Category::numeric, Dimension(2), 5).prompt + "=====\n" +
                       generate(Category::numeric, Dimension(2), 6).prompt);
}

TEST_CASE("jsonl batches use consecutive seeds") {
    const auto r = run({"sequence", "2d", "--count", "3", "--format", "jsonl", "--seed", "9"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        const auto j = nlohmann::json::parse(lines[i]);
        CHECK(j["seed"] == 9 + i);
        CHECK_FALSE(j.contains("solution"));
        CHECK(lines[i] == to_json_line(generate(Category::sequence, Dimension(2), 9 + i), false));
    }
}

TEST_CASE("usage errors exit 2") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"numeric", "5d"},
             {"riddle", "1d"},
             {"numeric"},
             {},
             {"numeric", "1d", "--count", "0"},
             {"numeric", "1d", "--format", "xml"},
             {"numeric", "1d", "--seed", "-3"},
             {"numeric", "1d", "--bogus"}}) {
        const auto r = run(args);
        CHECK(r.code == cli::kExitUsage);
        CHECK(r.out.empty());
        CHECK(r.err.find("usage:") != std::string::npos);
    }
}

TEST_CASE("unwritable output exits 3") {
    const auto r = run({"numeric", "1d", "--seed", "1", "--out", "/nonexistent-dir/x.txt"});
    CHECK(r.code == cli::kExitOutput);
    CHECK(r.out.empty());
}

TEST_CASE("--out writes the file instead of stdout") {
    const auto path = std::filesystem::temp_directory_path() / "enigme_cli_test.jsonl";
    const auto r = run({"physics", "2d", "--seed", "3", "--format", "jsonl", "--with-solution",
                        "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == to_json_line(generate(Category::physics, Dimension(2), 3), true) + "\n");
    std::filesystem::remove(path);
}

TEST_CASE("seed comes from ENIGME_SEED, or is drawn and reported") {
    ::setenv("ENIGME_SEED", "17", 1);
    const auto env = run({"numeric", "3d", "--format", "jsonl"});
    CHECK(env.code == 0);
    CHECK(nlohmann::json::parse(env.out)["seed"] == 17);
    CHECK(run({"numeric", "3d", "--format", "jsonl", "--seed", "4"}).out.find("\"seed\":4") !=
          std::string::npos);

    ::setenv("ENIGME_SEED", "seventeen", 1);
    CHECK(run({"numeric", "3d"}).code == cli::kExitUsage);

    ::unsetenv("ENIGME_SEED");
    const auto drawn = run({"numeric", "1d", "--format", "jsonl"});
    CHECK(drawn.code == 0);
    REQUIRE(drawn.err.rfind("seed: ", 0) == 0);
    const auto seed = std::stoull(drawn.err.substr(6));
    CHECK(nlohmann::json::parse(drawn.out)["seed"] == seed);
}

TEST_CASE("--estimate prints the table") {
    const auto one = run({"physics", "1d", "--estimate"});
    CHECK(one.code == 0);
    const auto rows = lines_of(one.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].rfind("category", 0) == 0);
    CHECK(rows[1].rfind("physics   1d", 0) == 0);

    const auto all = run({"--estimate"});
    CHECK(all.code == 0);
    CHECK(lines_of(all.out).size() == 10);
    CHECK(lines_of(run({"sequence", "--estimate"}).out).size() == 4);
}
