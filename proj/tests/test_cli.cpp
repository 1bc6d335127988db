#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(KLEINIAN_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_CASE("eval prints the displayed matrix") {
    auto res = run_cli("eval --word r^-1 --namespace links");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("[[(1 + 0*i + 0*s2 + 0*i*s2), (0 + 0*i + 0*s2 + 0*i*s2)], "
                          "[(1 + 0*i + 0*s2 + 0*i*s2), (1 + 0*i + 0*s2 + 0*i*s2)]]") !=
          std::string::npos);
}

TEST_CASE("homology result payload") {
    auto res = run_cli("--json --no-timestamp homology --n 4");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"result\": 5") != std::string::npos);
}

TEST_CASE("modulus subcommand reports the class and its normal form") {
    auto res = run_cli("--json --no-timestamp modulus --family links --n 3 --cusp knotted");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("(0 + 2*i + 0*s2 + 12*i*s2)") != std::string::npos);  // 2i(1+6 sqrt2)
    CHECK(res.output.find("(0 + 1*i + 0*s2 + 6*i*s2)") != std::string::npos);   // i(1+6 sqrt2)
    CHECK(res.output.find("\"equivalent\": true") != std::string::npos);

    auto other = run_cli("--json --no-timestamp modulus --family onecusped --n 2");
    CHECK(other.exit_code == 0);
    CHECK(other.output.find("\"equivalent\": true") != std::string::npos);
}

TEST_CASE("mutant family has no catalog cusp words") {
    CHECK(run_cli("modulus --family mutant --n 1").exit_code == 2);
}

TEST_CASE("equivalent subcommand") {
    auto yes = run_cli("--json --no-timestamp equivalent "
                       "--z \"(0 + 2*i + 0*s2 + 4*i*s2)\" --w \"(0 + 1*i + 0*s2 + 2*i*s2)\"");
    CHECK(yes.exit_code == 0);
    CHECK(yes.output.find("\"result\": true") != std::string::npos);
    auto no = run_cli("--json --no-timestamp equivalent "
                      "--z \"(0 + 1*i + 0*s2 + 2*i*s2)\" --w \"(0 + 1*i + 0*s2 + 4*i*s2)\"");
    CHECK(no.exit_code == 0);
    CHECK(no.output.find("\"result\": false") != std::string::npos);
    auto inf = run_cli("--json --no-timestamp equivalent --z inf --w \"(2 + 0*i + 0*s2 + 0*i*s2)\"");
    CHECK(inf.output.find("\"result\": true") != std::string::npos);
}

TEST_CASE("tracefield subcommand covers families and ad-hoc generators") {
    auto fam = run_cli("--json --no-timestamp tracefield --family links --n 2");
    CHECK(fam.exit_code == 0);
    CHECK(fam.output.find("Q(i,sqrt2)") != std::string::npos);
    auto cap = run_cli("--json --no-timestamp tracefield --generators a,b --namespace onecusped");
    CHECK(cap.exit_code == 0);
    CHECK(cap.output.find("\"result\": \"Q(i)\"") != std::string::npos);
    auto inv = run_cli("--json --no-timestamp tracefield --generators x,y,z --namespace onecusped "
                       "--invariant --radius 2");
    CHECK(inv.exit_code == 0);
    CHECK(inv.output.find("\"result\": \"Q(i*sqrt2)\"") != std::string::npos);
}

TEST_CASE("minpoly subcommand") {
    auto res = run_cli("--json --no-timestamp minpoly --word m*s*m^-1*g --namespace links --trace");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"13673\"") != std::string::npos);
    CHECK(res.output.find("\"algebraic_integer\": false") != std::string::npos);
    CHECK(res.output.find("(-7/5 + 86/5*i + 17/5*s2 + 9/5*i*s2)") != std::string::npos);
}

TEST_CASE("integral subcommand statuses") {
    auto cert = run_cli("--json --no-timestamp integral --family links --n 2");
    CHECK(cert.exit_code == 0);
    CHECK(cert.output.find("\"kind\": \"certificate\"") != std::string::npos);
    auto wit = run_cli("--json --no-timestamp integral --family mutant --n 1 --radius 2");
    CHECK(wit.exit_code == 0);
    CHECK(wit.output.find("\"kind\": \"witness\"") != std::string::npos);
    auto inc = run_cli("--json --no-timestamp integral --family mutant --n 0 --radius 3");
    CHECK(inc.exit_code == 0);  // inconclusive is not a failure
    CHECK(inc.output.find("\"kind\": \"inconclusive\"") != std::string::npos);
    CHECK(inc.output.find("\"inconclusive\": 1") != std::string::npos);
}

TEST_CASE("verify suites are deterministic byte for byte") {
    auto a = run_cli("--json --no-timestamp verify --suite section2");
    auto b = run_cli("--json --no-timestamp verify --suite section2");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"fail\":") != std::string::npos);
    // with a timestamp the runs still succeed
    auto c = run_cli("--json verify --suite geometry");
    CHECK(c.exit_code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("eval --word 'r*' --namespace links").exit_code == 2);   // parse error
    CHECK(run_cli("eval --word qq --namespace links").exit_code == 2);     // unknown name
    CHECK(run_cli("eval --word r --namespace nowhere").exit_code == 2);    // unknown namespace
    CHECK(run_cli("homology --n 0").exit_code == 2);                       // invalid n
    CHECK(run_cli("tracefield --family links --n -1").exit_code == 2);
    CHECK(run_cli("modulus --family links --n 1 --cusp sideways").exit_code == 2);
}

TEST_CASE("selftest subcommand runs the property suites") {
    auto res = run_cli("--json --no-timestamp selftest --samples 50");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("properties.field_axioms") != std::string::npos);
    CHECK(res.output.find("\"fail\": 0") != std::string::npos);
}
