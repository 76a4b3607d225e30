#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "orthoq/cli.hpp"

using namespace orthoq;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Run run(const std::string& args) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    const auto tag = std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const auto out = dir / ("orthoq_out_" + tag);
    const auto err = dir / ("orthoq_err_" + tag);
    const std::string cmd = std::string(ORTHOQ_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    Run r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
    std::filesystem::remove(out);
    std::filesystem::remove(err);
    return r;
}

}  // namespace

TEST_CASE("construct wilson rows in t") {
    const Run r = run("--command construct --family wilson --params 1,1,1,1 --n-max 1");
    CHECK(r.code == 0);
    const Json j = parse_json(r.out);
    CHECK(j["variable"] == "t");
    CHECK(j["polynomials"] == Json::parse(R"([["1"],["-1","1"]])"));

    const Run zero = run("--command construct --family wilson --params 1,1,1,1 --n-max 0");
    CHECK(parse_json(zero.out)["polynomials"] == Json::parse(R"([["1"]])"));
}

TEST_CASE("input errors exit with 2") {
    CHECK(run("--command construct --family wilson --params 1/0,1,1,1 --n-max 1").code == 2);
    CHECK(run("--command verify --family wilsn --params 1,1,1,1").code == 2);
    CHECK(run("--command construct --family wilson --params 1,1,1 --n-max 1").code == 2);
    CHECK(run("--command construct --family wilson --params 1,1,1,1 --n-max 13").code == 2);
    CHECK(run("--command frobnicate").code == 2);
    CHECK(run("--bogus-flag").code == 2);
}

TEST_CASE("degenerate parameters exit with 3 naming the denominator") {
    const Run r = run("--command construct --family askey-wilson --params 2,1/2,1,1 --n-max 3");
    CHECK(r.code == 3);
    CHECK(r.err.find("A_k = 0") != std::string::npos);
    const Run w = run("--command coeffs --family wilson --params 1/2,-1/2,0,0 --n 2");
    CHECK(w.code == 3);
    CHECK(w.err.find("= 0") != std::string::npos);
}

TEST_CASE("full wilson suite passes") {
    const Run r = run("--command verify --family wilson --params 1/2,1/3,2,3/4 --n-max 6");
    CHECK(r.code == 0);
    const Json j = parse_json(r.out);
    CHECK(j["all_ok"] == true);
    CHECK(j["results"].size() > 50);
}

TEST_CASE("tampered lambda is caught") {
    const Run r = run("--command verify --family wilson --params 1,1,1,1 --n-max 4 --lambda-shift 1");
    CHECK(r.code == 1);
    CHECK(r.err.find("sturm-liouville n=") != std::string::npos);
    const Json j = parse_json(r.out);
    bool named = false;
    for (const auto& row : j["results"])
        if (row["identity"] == "sturm-liouville" && row["ok"] == false) named = true;
    CHECK(named);
}

TEST_CASE("verify output is sorted and deterministic") {
    const std::string args = "--command verify --family askey-wilson --params 1/3,2/5,3/7,1/5 --n-max 5";
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const Json j = parse_json(a.out);
    std::string prev_id;
    long prev_n = -1;
    for (const auto& row : j["results"]) {
        const auto id = row["identity"].get<std::string>();
        const long n = row["n"].get<long>();
        CHECK((id > prev_id || (id == prev_id && n > prev_n)));
        prev_id = id;
        prev_n = n;
    }
}

TEST_CASE("coeffs entries") {
    const Run first = run("--command coeffs --family wilson --params 1,1,1,1 --relation first --n 3");
    CHECK(first.code == 0);
    CHECK(first.out.find(R"("a_{n,n+2}":"6")") != std::string::npos);
    const Json j = parse_json(first.out);
    CHECK(j["closed_form_match"] == true);
    CHECK(j["residual_zero"] == true);

    const Run second = run("--command coeffs --family askey-wilson --params 1/3,2/5,3/7,1/5 --relation second --n 2");
    CHECK(second.code == 0);
    CHECK(parse_json(second.out)["normalized"]["2"] == "1");
}

TEST_CASE("csv window round-trips through the json view") {
    const std::string args = "--command coeffs --family wilson --params 1/2,1/3,2,3/4 --relation second --n 4";
    const Run js = run(args);
    const Run csv = run(args + " --format csv");
    REQUIRE(js.code == 0);
    REQUIRE(csv.code == 0);
    const Window from_csv = window_from_csv(csv.out);
    CHECK(to_json(from_csv) == parse_json(js.out)["window"]);
    CHECK(window_from_csv(window_to_csv(from_csv)) == from_csv);
}

TEST_CASE("classify") {
    const Run cqh = run("--command classify --phi -1,0,2 --psi 0,8/3");
    CHECK(cqh.code == 0);
    CHECK(parse_json(cqh.out)["family"] == "continuous-q-hermite");

    const Run wil = run("--command classify --family wilson --params 1,1,1,1");
    CHECK(wil.code == 0);
    const Json j = parse_json(wil.out);
    CHECK(j["family"] == "wilson");
    CHECK(j["params"] == Json::parse(R"(["1","1","1","1"])"));

    const Run irr = run(R"(--command classify --phi 1,0,1 --psi 0,1 --lattice '{"kind":"quadratic","c4":"1","c5":"0","c6":"0"}')");
    CHECK(irr.code == 4);
    CHECK(irr.err.find("parameters outside rational-root scope") != std::string::npos);
}

TEST_CASE("config file and output path") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto cfg = dir / ("orthoq_cfg_" + std::to_string(::getpid()) + ".json");
    const auto out = dir / ("orthoq_res_" + std::to_string(::getpid()) + ".json");
    {
        std::ofstream f(cfg);
        f << R"({"command":"construct","family":"continuous-q-hermite","params":[],"n_max":2,)"
          << R"("lattice":{"kind":"q","c1":"1/2","c2":"1/2","c3":"0","p":"1/2"},"output":")" << out.string() << "\"}";
    }
    const Run r = run("--config " + cfg.string());
    CHECK(r.code == 0);
    const Json j = parse_json(slurp(out));
    CHECK(j["polynomials"][2] == Json::parse(R"(["-3/16","0","1"])"));
    CHECK(run("--config " + cfg.string() + " --n-max 1 --output " + out.string()).code == 0);
    CHECK(parse_json(slurp(out))["polynomials"].size() == 2);
    std::filesystem::remove(cfg);
    std::filesystem::remove(out);
    CHECK(run("--config /nonexistent/cfg.json").code == 2);
}

TEST_CASE("execute in process") {
    JobConfig cfg;
    cfg.command = Command::Coeffs;
    cfg.family = "wilson";
    cfg.params = {1, 1, 1, 1};
    cfg.relation = "ttrr";
    cfg.n_max = 1;
    const Json j = parse_json(execute(cfg).text);
    CHECK(j["variable"] == "t");
    CHECK(j["rows"][0]["a"] == "1");
    CHECK(j["rows"][0]["closed_form_match"] == true);
}

TEST_CASE("lattice json") {
    const Lattice lat = lattice_from_json(Json::parse(R"({"kind":"q","c1":"1/2","c2":"1/2","c3":"0","p":"1/2"})"));
    CHECK(lat == Lattice::askey_wilson(Rational(1, 2)));
    CHECK(lattice_from_json(to_json(Lattice::wilson())) == Lattice::wilson());
    CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"kind":"linear"})")), ParseError);
    CHECK(polynomial_from_json(to_json(Polynomial({Rational(1, 3), 0, -2}))) == Polynomial({Rational(1, 3), 0, -2}));
}
