#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hopfwit/entwine.hpp"

using namespace hopfwit;
namespace fs = std::filesystem;

namespace {

fs::path fixture_dir() {
    fs::path dir = fs::temp_directory_path() / "hopfwit_cli_test";
    fs::create_directories(dir);
    return dir;
}

void dump(const nlohmann::json& j, const fs::path& p) { std::ofstream(p) << j.dump(2); }

int run(const std::string& args) {
    std::string cmd = std::string(HOPFWIT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("cli solve/verify/check/transport/catalog round trips") {
    fs::path dir = fixture_dir();
    Presentation kc2q = group_algebra(cyclic_group_table(2), Field::rationals());
    Presentation kc2f2 = group_algebra(cyclic_group_table(2), Field::prime_field(2));
    Presentation h4 = sweedler_h4(Field::rationals());
    dump(kc2q.to_json(), dir / "kc2_q.json");
    dump(kc2f2.to_json(), dir / "kc2_gf2.json");
    dump(h4.to_json(), dir / "h4_q.json");
    nlohmann::json rel{{"L", kc2q.to_json()},
                       {"A", kc2q.to_json()},
                       {"coactionA", regular_comodule(kc2q).to_json()}};
    dump(rel, dir / "relhopf.json");
    dump(entwining_yetter_drinfeld(kc2q).to_json(), dir / "yd.json");

    std::string d = dir.string() + "/";

    // witness found -> 0; emitted file re-verifies -> 0
    CHECK(run("solve integral --input " + d + "kc2_q.json --out " + d + "w.json") == 0);
    CHECK(run("verify integral --input " + d + "kc2_q.json --witness " + d + "w.json") == 0);

    // NoWitness -> 1
    CHECK(run("solve integral --input " + d + "kc2_gf2.json") == 1);

    // axiom report -> 0
    CHECK(run("check hopf --input " + d + "h4_q.json") == 0);

    // detached witness refused -> 2
    CHECK(run("verify integral --input " + d + "h4_q.json --witness " + d + "w.json") == 2);

    // malformed input -> 2
    std::ofstream(dir / "broken.json") << "{ not json";
    CHECK(run("solve integral --input " + d + "broken.json") == 2);
    CHECK(run("solve nonsense --input " + d + "kc2_q.json") == 2);

    // transports
    CHECK(run("solve theta --input " + d + "yd.json --out " + d + "theta.json") == 0);
    CHECK(run("solve total_integral --input " + d + "relhopf.json --out " + d + "phi.json") == 0);
    CHECK(run("transport --direction totalintegral_to_theta --witness " + d +
              "phi.json --input " + d + "relhopf.json --out " + d + "theta2.json") == 0);
    CHECK(run("verify theta --input " + d + "no_such_file.json --witness " + d +
              "theta2.json") == 2);
    // build the entwining json for verification of the transported witness
    EntwiningStructure e = relative_hopf_entwining(kc2q, kc2q, regular_comodule(kc2q));
    dump(e.to_json(), dir / "relhopf_entwining.json");
    CHECK(run("verify theta --input " + d + "relhopf_entwining.json --witness " + d +
              "theta2.json") == 0);

    // catalog subset
    CHECK(run("catalog --filter hopf/kC2 --json --out " + d + "report.json") == 0);
}

TEST_CASE("cli deform subcommands") {
    fs::path dir = fixture_dir();
    std::string d = dir.string() + "/";
    FieldPtr q = Field::rationals();
    FieldPtr ext = Field::simple_extension(q, {q->from_int(-2), q->zero(), q->one()});

    // field extension mode: the conjugation deforms to zero
    nlohmann::json fieldext{{"field", ext->to_json()}};
    dump(fieldext, dir / "fieldext.json");
    Matrix alpha(q, 2, 2);
    alpha.at(1, 0) = q->one();
    alpha.at(0, 1) = q->from_int(2);
    Matrix sigma(q, 2, 2);
    sigma.at(0, 0) = q->one();
    sigma.at(1, 1) = q->from_int(-1);
    nlohmann::json mapj{{"M", {{"kdim", 2}, {"alpha", alpha.to_json()}}},
                        {"N", {{"kdim", 2}, {"alpha", alpha.to_json()}}},
                        {"g", sigma.to_json()}};
    dump(mapj, dir / "map.json");
    CHECK(run("deform --fieldext " + d + "fieldext.json --map " + d + "map.json --out " + d +
              "deformed.json") == 0);
    std::ifstream in(dir / "deformed.json");
    nlohmann::json out;
    in >> out;
    CHECK(Matrix::from_json(q, out.at("deformed")).is_zero());
}
