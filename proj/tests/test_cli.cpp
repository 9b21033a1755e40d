#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "")
{
    std::string cmd = env + " " + PREQUANT_BIN + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof(buf), pipe))
        r.out.append(buf, got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("l0 command text output")
{
    auto r = run("l0 PU:6");
    CHECK(r.status == 0);
    CHECK(r.out.find("l0 = 6") != std::string::npos);
    CHECK(r.out.find("p=2: 2 (pinned)") != std::string::npos);
    CHECK(r.out.find("p=3: 3 (computed)") != std::string::npos);
}

TEST_CASE("text and json reports carry the same numbers")
{
    auto text = run("l0 SU:8/4");
    auto js = run("--json l0 SU:8/4");
    CHECK(text.status == 0);
    CHECK(js.status == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["group"] == "SU:8/4");
    CHECK(j["l0"] == 2);
    CHECK(text.out.find("l0 = 2") != std::string::npos);
    for (const auto& item : j["breakdown"]) {
        std::string expect = "p=" + std::to_string(item["prime"].get<long long>()) + ": " +
                             std::to_string(item["order"].get<long long>());
        CHECK(text.out.find(expect) != std::string::npos);
    }
}

TEST_CASE("phi-star prints the symbolic tensor")
{
    auto r = run("phi-star PU:3 --prime 3");
    CHECK(r.status == 0);
    CHECK(r.out.find("x1⊗y2 - y2⊗x1") != std::string::npos);

    auto ascii = run("--ascii phi-star PU:3 --prime 3");
    CHECK(ascii.status == 0);
    CHECK(ascii.out.find("x1 (x) y2 - y2 (x) x1") != std::string::npos);

    auto pinned = run("phi-star PU:2 --prime 2");
    CHECK(pinned.status == 0);
    CHECK(pinned.out.find("pinned") != std::string::npos);

    auto tor = run("phi-star SU:8/4 --prime 2");
    CHECK(tor.status == 2);
}

TEST_CASE("check-level verdict")
{
    auto r = run("check-level SU:8/4 --level 3 --genus 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("NO (l0 = 2 does not divide 3)") != std::string::npos);

    auto yes = run("check-level PU:3 --level 6 --genus 5");
    CHECK(yes.status == 0);
    CHECK(yes.out.find("YES") != std::string::npos);
}

TEST_CASE("verify-hopf exit codes")
{
    CHECK(run("verify-hopf PU:3 --prime 3").status == 0);
    CHECK(run("verify-hopf PE7 --prime 2 --max-degree 8").status == 0);
    CHECK(run("verify-hopf PU:3 --prime 2").status == 2);  // irrelevant prime
}

TEST_CASE("usage errors exit 1")
{
    CHECK(run("l0 PO:6").status == 1);
    CHECK(run("l0").status == 1);
    CHECK(run("nonsense").status == 1);
}

TEST_CASE("degree cap environment override")
{
    CHECK(run("l0 PU:3", "PREQUANT_DEGREE_CAP=6").status == 2);
    CHECK(run("l0 PU:3", "PREQUANT_DEGREE_CAP=10").status == 0);
    CHECK(run("l0 PU:3", "PREQUANT_DEGREE_CAP=frog").status == 2);
}

TEST_CASE("table json output is byte-stable")
{
    auto a = run("--json table --max-n 12");
    auto b = run("--json table --max-n 12");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["max_n"] == 12);
    bool found_pu12 = false;
    for (const auto& e : j["entries"])
        if (e["group"] == "PU:12") {
            found_pu12 = true;
            CHECK(e["l0"] == 12);
        }
    CHECK(found_pu12);
}

TEST_CASE("alcove command reduces points")
{
    auto r = run("alcove --n 2 --reduce \"1 -1\"");
    CHECK(r.status == 0);
    CHECK(r.out.find("(0, 0)") != std::string::npos);

    auto j = run("--json alcove --n 3");
    CHECK(j.status == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["barycenter"][0] == "1/3");
}

TEST_CASE("marked-points command reads a classes file")
{
    std::string path = "cli_test_classes.txt";
    {
        std::ofstream f(path);
        f << "# two copies of the barycenter for n = 2\n";
        f << "1/4 -1/4\n";
        f << "1/4 -1/4\n";
    }
    auto no = run("marked-points --n 2 --level 3 --classes " + path);
    CHECK(no.status == 0);
    CHECK(no.out.find("NO") != std::string::npos);
    auto yes = run("marked-points --n 2 --level 4 --classes " + path);
    CHECK(yes.out.find("YES") != std::string::npos);

    auto missing = run("marked-points --n 2 --level 3 --classes does_not_exist.txt");
    CHECK(missing.status == 2);
    std::remove(path.c_str());
}
