#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fht/io.hpp"

using namespace fht;

static std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

TEST_CASE("fmt12 deterministic significant digits") {
    CHECK(fmt12(0.101950123456789) == "0.101950123457");
    CHECK(fmt12(1.0) == "1");
    CHECK(fmt12(-14949.0) == "-14949");
    CHECK(fmt12(0.101950123456789) == fmt12(0.101950123456789));
}

TEST_CASE("csv round trip with header") {
    Table t;
    t.columns = {"N", "value"};
    t.add_row({long(40), 0.213238});
    t.add_row({long(100), 0.101950});
    std::string path = "test_io_tmp.csv";
    write_csv(t, path);
    std::string body = slurp(path);
    CHECK(body == "N,value\n40,0.213238\n100,0.10195\n");
    write_csv(t, path);
    CHECK(slurp(path) == body);  // byte-identical on rerun
    std::remove(path.c_str());
}

TEST_CASE("row width mismatch rejected") {
    Table t;
    t.columns = {"a", "b"};
    CHECK_THROWS_AS(t.add_row({1.0}), std::invalid_argument);
}

TEST_CASE("json table and sidecar") {
    Table t;
    t.columns = {"j", "abs_err"};
    t.add_row({long(0), 1.5e-7});
    std::string path = "test_io_tmp.json";
    write_json_table(t, path);
    auto parsed = nlohmann::json::parse(slurp(path));
    REQUIRE(parsed.is_array());
    CHECK(parsed[0]["j"] == 0);
    CHECK(parsed[0]["abs_err"] == 1.5e-7);

    write_sidecar({{"alpha", 1.0 / 3.0}, {"n", 40}}, path);
    auto meta = nlohmann::json::parse(slurp(path + ".meta.json"));
    CHECK(meta["config"]["n"] == 40);
    CHECK(meta["version"] == library_version);
    std::remove(path.c_str());
    std::remove((path + ".meta.json").c_str());
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("1/3") == Catch::Approx(1.0 / 3.0).epsilon(1e-16));
    CHECK(parse_rational("-1/2") == -0.5);
    CHECK(parse_rational("0.25") == 0.25);
    CHECK(parse_rational("2") == 2.0);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/3x"), std::invalid_argument);
}
