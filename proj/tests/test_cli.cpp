#include "cli.hpp"

#include "klein/polyalg.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace klein;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "klein");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("solve in text form") {
    Result r = run({"solve", "--exponents", "1/2,1/3,2/3"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("Z = 27*X / (4*X - 1)^3\n") != std::string::npos);
    CHECK(r.out.find("psi: (27*X) / (64*X^3 - 48*X^2 + 12*X - 1)\n") != std::string::npos);
    CHECK(r.out.find("w = -27\n") != std::string::npos);
}

TEST_CASE("solve JSON round trip") {
    Result r = run({"solve", "--exponents", "1/2,2/3,2/3", "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    json j = json::parse(r.out);
    CHECK(j["status"] == "ok");
    CHECK(j["degree"] == 5);
    CHECK(j["w"] == "-2");
    RatFunc psi(MultiPoly::parse(j["psi"]["num"].get<std::string>()),
                MultiPoly::parse(j["psi"]["den"].get<std::string>()));
    CHECK(psi == RatFunc::parse("-X^2*(4*X-5)^3/(5*X-4)^3"));
    CHECK(RatFunc::parse(j["psi_factored"].get<std::string>()) == psi);
    // feeding the printed covering back in verifies it
    Result v = run({"verify-covering", "--exponents", "1/2,2/3,2/3", "--covering", j["psi_factored"]});
    CHECK(v.code == cli::kOk);
}

TEST_CASE("output is deterministic") {
    auto a = run({"solve", "--exponents", "3/2,1/3,1/3", "--format", "json"});
    auto b = run({"solve", "--exponents", "3/2,1/3,1/3", "--format", "json"});
    CHECK(a.out == b.out);
    CHECK(run({"export-db"}).out == run({"export-db"}).out);
}

TEST_CASE("classify") {
    Result r = run({"classify", "--exponents", "2/3,4/3,4/3", "--format", "json"});
    CHECK(r.code == cli::kOk);
    json j = json::parse(r.out);
    CHECK(j["group"] == "tetrahedral");
    CHECK(j["degree"] == 14);
}

TEST_CASE("identity") {
    Result r = run({"identity", "--exponents", "1/2,2/3,2/3"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("verified to order 20: pass") != std::string::npos);
    json j = json::parse(run({"identity", "--exponents", "3/2,1/3,1/3", "--format", "json"}).out);
    CHECK(j["theta"][0]["exponent"] == "1/4");
}

TEST_CASE("exit codes") {
    CHECK(run({"classify", "--exponents", "1/2,1/2,1/7"}).code == cli::kOutOfScope);
    CHECK(run({"solve", "--exponents", "1/2,1/3,1/7"}).code == cli::kOutOfScope);
    Result bad = run({"solve", "--exponents", "1/2,1/x,1"});
    CHECK(bad.code == cli::kUsage);
    CHECK_FALSE(bad.err.empty());
    CHECK(run({"solve"}).code == cli::kUsage);
    CHECK(run({"nonsense"}).code == cli::kUsage);
    CHECK(run({"solve", "--exponents", "1/2,1/3,2/3", "--format", "xml"}).code == cli::kUsage);
    CHECK(run({"verify-covering", "--exponents", "1/2,1/3,2/3", "--covering", "X"}).code == cli::kVerifyFailed);
    CHECK(run({"verify-covering", "--exponents", "1/2,1/3,2/3", "--covering", "(X"}).code == cli::kUsage);
    CHECK(run({"verify-covering", "--exponents", "1/2,1/3,2/3", "--covering", "1/(X-X)"}).code == cli::kUsage);
    CHECK(run({"solve", "--exponents", "1/0,1/3,2/3"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("verify-db and export-db") {
    Result r = run({"verify-db", "--order", "8"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "all identities pass (56 identities, order 8)\n");
    json j = json::parse(run({"verify-db", "--order", "4", "--format", "json"}).out);
    CHECK(j["status"] == "pass");
    Result e = run({"export-db"});
    CHECK(e.code == cli::kOk);
    CHECK(e.out.rfind("identity tetra1\n", 0) == 0);
}
