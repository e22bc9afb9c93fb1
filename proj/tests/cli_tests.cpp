// End-to-end checks of the wellpath binary via popen.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
    std::string cmd = std::string(WELLPATH_CLI_PATH) + " " + args;
    if (!stdin_data.empty()) {
        const std::string tmp = "cli_tests_stdin.tmp";
        std::ofstream(tmp) << stdin_data;
        cmd += " < " + tmp;
    }
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int raw = pclose(pipe);
    return {WEXITSTATUS(raw), out};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("count") {
    CHECK(run("count --family motzkin --n 7").out == "10395\n");
    CHECK(run("count --family positive --n 7").out == "135135\n");
    CHECK(run("count --family positive --n 20").out == "319830986772877770815625\n");
    CHECK(run("count --family positive --n 4 --k 2").out == "36\n");
    CHECK(run("count --family motzkin --n 5 --k 1").out == "45\n");
    CHECK(run("count --family positive-updown --n 4").out == "9\n");
    CHECK(run("count --family dyck-updown --n 5").out == "0\n");
}

TEST_CASE("enumerate line counts agree with count") {
    for (int n = 1; n <= 6; ++n) {
        const auto expect = run("count --family positive --n " + std::to_string(n)).out;
        const auto listed = lines(run("enumerate --family positive --n " + std::to_string(n)).out);
        CHECK(std::to_string(listed.size()) + "\n" == expect);
    }
    CHECK(lines(run("enumerate --family motzkin --n 5").out).size() == 105);
    CHECK(lines(run("enumerate --family trees --n 5").out).size() == 105);
    CHECK(lines(run("enumerate --family marked-trees --n 4").out).size() == 105);
    CHECK(lines(run("enumerate --family matchings --n 4").out).size() == 105);
}

TEST_CASE("map round trips byte-for-byte") {
    const std::string paths = run("enumerate --family motzkin --n 5").out;
    const std::string trees = run("map --from path --to tree", paths).out;
    CHECK(run("map --from tree --to path", trees).out == paths);
    const std::string matchings = run("map --from tree --to matching", trees).out;
    CHECK(run("map --from matching --to tree", matchings).out == trees);
    CHECK(run("map --from path --to matching", paths).out == matchings);

    const std::string pos = run("enumerate --family positive --n 5").out;
    const std::string marked = run("map --marked --from path --to tree", pos).out;
    CHECK(run("map --marked --from tree --to path", marked).out == pos);
    const std::string pm = run("map --marked --from path --to matching", pos).out;
    CHECK(run("map --marked --from matching --to path", pm).out == pos);
}

TEST_CASE("map single objects") {
    CHECK(run("map --from path --to tree", R"({"steps":[0,-1],"labels":[2,1,3]})").out ==
          "[[1,3],2]\n");
    CHECK(run("map --marked --from path --to matching", R"({"steps":[0],"labels":[1,2]})").out ==
          R"({"pairs":[[1,3],[2,4]]})" "\n");
}

TEST_CASE("sample is reproducible and well formed") {
    const auto a = run("sample --family positive --n 4 --count 20 --seed 9");
    const auto b = run("sample --family positive --n 4 --count 20 --seed 9");
    const auto c = run("sample --family positive --n 4 --count 20 --seed 10");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    CHECK(lines(a.out).size() == 20);
    const std::string valid = run("enumerate --family positive --n 4").out;
    for (const auto& line : lines(a.out))
        CHECK(valid.find(line + "\n") != std::string::npos);
}

TEST_CASE("verify suites") {
    CHECK(run("verify --suite roundtrip --max-n 4").status == 0);
    CHECK(run("verify --suite cardinality --max-n 5").status == 0);
    CHECK(run("verify --suite eq3 --max-n 3").status == 0);
}

TEST_CASE("volume output") {
    const auto r = run("volume --n 2 --samples 200000 --seed 4");
    CHECK(r.status == 0);
    CHECK(r.out.find("exact=3/2") != std::string::npos);
}

TEST_CASE("bad flags exit 2") {
    CHECK(run("count --family nope --n 3").status == 2);
    CHECK(run("count --n 3").status == 2);
    CHECK(run("sample --family motzkin --n 3").status == 2);
}
