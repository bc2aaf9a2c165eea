#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <sys/wait.h>

#ifndef QRANK_CLI_PATH
#error "QRANK_CLI_PATH must point at the command-line binary"
#endif

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CmdResult run(const std::string& args) {
    const std::string out_file = "cli_test_stdout.tmp";
    const std::string err_file = "cli_test_stderr.tmp";
    const std::string cmd = std::string("'") + QRANK_CLI_PATH + "' " + args +
                            " > " + out_file + " 2> " + err_file;
    const int status = std::system(cmd.c_str());
    CmdResult r;
    if (status != -1 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("verify --id: json report round-trips byte for byte") {
    CmdResult r = run("verify --id eq-1.6 --order 60 --format json");
    REQUIRE(r.code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["id"] == "eq-1.6");
    CHECK(j["order"] == 60);
    CHECK(j["pass"] == true);
    CHECK(j["mismatch"].is_null());
    CHECK(j["millis"].get<long>() >= 0);
    CHECK(!j.contains("error"));
    CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("verify --id: text format") {
    CmdResult r = run("verify --id lem-2.1-l3 --order 50");
    CHECK(r.code == 0);
    CHECK(r.out.find("[ OK ] lem-2.1-l3") != std::string::npos);
    // Single report: no summary line.
    CHECK(r.out.find("summary:") == std::string::npos);
}

TEST_CASE("verify usage errors") {
    CHECK(run("verify --id nonsense").code == 2);
    CHECK(!run("verify --id nonsense").err.empty());
    CHECK(run("verify").code == 2);
    CHECK(run("verify --id eq-1.6 --all").code == 2);
    CHECK(run("verify --id eq-1.6 --order 0").code == 2);
    CHECK(run("verify --id eq-1.6 --format yaml").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("--bogus").code == 2);
}

TEST_CASE("verify --all: csv over the whole catalog") {
    CmdResult r = run("verify --all --order 8 --jobs 4 --format csv");
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 63);
    CHECK(ls[0] ==
          "id,order,pass,mismatch_exponent,mismatch_lhs,mismatch_rhs,millis,error");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        CAPTURE(ls[i]);
        CHECK(ls[i].find(",true,") != std::string::npos);
    }
}

TEST_CASE("table: csv gives the exact residue counts") {
    CmdResult r = run("table --rank m2 --modulus 3 --max-n 2 --format csv");
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "n,s0,s1,s2,total");
    CHECK(ls[1] == "0,0,0,0,0");
    CHECK(ls[2] == "1,2,0,0,2");
    CHECK(ls[3] == "2,4,0,0,4");

    CmdResult d = run("table --rank dyson --modulus 3 --max-n 2 --format csv");
    REQUIRE(d.code == 0);
    auto dl = lines(d.out);
    REQUIRE(dl.size() == 4);
    CHECK(dl[2] == "1,2,0,0,2");
    CHECK(dl[3] == "2,0,2,2,4");
}

TEST_CASE("table: json shape") {
    CmdResult r = run("table --rank m2 --modulus 3 --max-n 2 --format json");
    REQUIRE(r.code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["rank"] == "m2");
    CHECK(j["modulus"] == 3);
    CHECK(j["max_n"] == 2);
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["rows"][1]["n"] == 1);
    CHECK(j["rows"][1]["counts"] == nlohmann::ordered_json::array({2, 0, 0}));
    CHECK(j["rows"][1]["total"] == 2);
}

TEST_CASE("table guards") {
    CHECK(run("table --max-n 50").code == 2);
    CHECK(run("table --modulus 0").code == 2);
    CHECK(run("table --rank other").code == 2);
}

TEST_CASE("series: named series and rank-difference shorthands") {
    CmdResult om = run("series --name omega --order 6");
    REQUIRE(om.code == 0);
    auto ol = lines(om.out);
    REQUIRE(ol.size() == 6);
    CHECK(ol[0] == "0 1");
    CHECK(ol[1] == "1 2");
    CHECK(ol[2] == "2 3");
    CHECK(ol[3] == "3 4");
    CHECK(ol[4] == "4 6");
    CHECK(ol[5] == "5 8");

    CmdResult r01 = run("series --name 'R01(1)' --order 1");
    REQUIRE(r01.code == 0);
    auto rl = lines(r01.out);
    REQUIRE(rl.size() == 1);
    CHECK(rl[0] == "0 2");

    // A Laurent formula side: the window opens at -1 (with a vanishing
    // coefficient there, as the identity requires).
    CmdResult r02 = run("series --name 'R02(4)' --order 3 --format csv");
    REQUIRE(r02.code == 0);
    auto cl = lines(r02.out);
    REQUIRE(cl.size() >= 2);
    CHECK(cl[0] == "exponent,coefficient");
    CHECK(cl[1] == "-1,0");

    // Catalog ids print their formula side: here the alternating squares.
    CmdResult lem = run("series --name lem-2.1-l3 --order 5");
    REQUIRE(lem.code == 0);
    auto ll = lines(lem.out);
    REQUIRE(ll.size() == 5);
    CHECK(ll[0] == "0 0");
    CHECK(ll[1] == "1 1");
    CHECK(ll[2] == "2 0");
    CHECK(ll[3] == "3 0");
    CHECK(ll[4] == "4 -1");

    CmdResult js = run("series --name omega --order 3 --format json");
    REQUIRE(js.code == 0);
    auto j = nlohmann::ordered_json::parse(js.out);
    CHECK(j["name"] == "omega");
    CHECK(j["order"] == 3);
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][2]["exponent"] == 2);
    CHECK(j["terms"][2]["coefficient"] == "3");

    CHECK(run("series --name nonsense").code == 2);
    CHECK(run("series --name 'R01(4)'").code == 2);
    CHECK(run("series").code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run("--help").code == 0);
    CHECK(run("verify --help").code == 0);
}
