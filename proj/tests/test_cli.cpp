#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "pastures/io.hpp"

using namespace pastures;

namespace {

struct CliRun {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

CliRun run_cli(const std::string& args) {
    std::string command = std::string(PASTURES_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliRun run;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof(buffer), pipe)) {
        run.output.append(buffer, n);
    }
    int status = pclose(pipe);
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return run;
}

std::string fixture(const std::string& name) {
    return std::string(PASTURES_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("validate reports valid fixtures with exit 0") {
    CliRun run = run_cli("validate " + fixture("f3.pasture") + " " + fixture("k_leg.morphism"));
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("f3.pasture pasture F3: valid") != std::string::npos);
    CHECK(run.output.find("k_leg.morphism morphism k_leg: valid") != std::string::npos);
}

TEST_CASE("validate flags broken fixtures with exit 1 and witnesses") {
    CliRun run = run_cli("validate " + fixture("broken_missing_pair.pasture"));
    CHECK(run.exit_code == 1);
    CHECK(run.output.find("INVALID") != std::string::npos);
    CHECK(run.output.find("nullset.zero-sum-missing witness=[1,1]") != std::string::npos);

    run = run_cli("validate " + fixture("broken_morphism.morphism"));
    CHECK(run.exit_code == 1);
    CHECK(run.output.find("morphism.nullset") != std::string::npos);
}

TEST_CASE("hom prints a count and exits 0 even for empty hom-sets") {
    CliRun run = run_cli("hom " + fixture("f3.pasture") + " " + fixture("sign.pasture"));
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("0 morphisms") != std::string::npos);

    run = run_cli("hom F1pm S");  // built-in names work too
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("1 morphism") != std::string::npos);
}

TEST_CASE("the pushout example emits a Krasner-sized document") {
    CliRun run = run_cli("pushout --base " + fixture("f1pm.pasture") + " --left " +
                         fixture("k_leg.morphism") + " --right " + fixture("k_leg.morphism"));
    CHECK(run.exit_code == 0);
    // the document portion parses back to a 2-element pasture equal to K
    Pasture apex = parse_pasture(run.output.substr(0, run.output.find("\nmorphism")));
    CHECK(apex.size == 2);
    CHECK(apex == *krasner());
}

TEST_CASE("iso distinguishes exit codes") {
    CHECK(run_cli("iso F3 F3").exit_code == 0);
    CliRun run = run_cli("iso K F2");
    CHECK(run.exit_code == 1);
    CHECK(run.output.find("not isomorphic") != std::string::npos);
}

TEST_CASE("show canonicalizes a document to --out") {
    std::string out = std::string(PASTURES_FIXTURES_DIR) + "/../build/show_test_out.pasture";
    CliRun run = run_cli("show " + fixture("f5.pasture") + " --out " + out);
    CHECK(run.exit_code == 0);
    std::remove(out.c_str());
}

TEST_CASE("check-universal passes on the shipped pullback diagram") {
    CliRun run = run_cli("check-universal " + fixture("pullback_s_k_s.diagram") + " " +
                         fixture("s_to_k.morphism"));
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("limit universal property: PASS") != std::string::npos);
    CHECK(run.output.find("colimit universal property: PASS") != std::string::npos);
}

TEST_CASE("construction output files can be fed back in whole") {
    std::string out = std::string(PASTURES_FIXTURES_DIR) + "/../build/pb_roundtrip.docs";
    CliRun run = run_cli("pullback --left " + fixture("s_to_k.morphism") + " --right " +
                         fixture("s_to_k.morphism") + " --out " + out);
    REQUIRE(run.exit_code == 0);

    // the multi-document file (apex + two legs) validates as a unit
    run = run_cli("validate " + out);
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("pasture pullback(S,S;K): valid") != std::string::npos);
    CHECK(run.output.find("morphism pi1: valid") != std::string::npos);

    // and its apex is directly usable as a pasture argument
    run = run_cli("hom F1pm " + out);
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("morphism") != std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("check-universal accepts an explicit probe family") {
    CliRun run = run_cli("check-universal " + fixture("pullback_s_k_s.diagram") + " " +
                         fixture("s_to_k.morphism") + " --side limit --probes F1pm S");
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("probe F1pm limit cone") != std::string::npos);
    CHECK(run.output.find("colimit") == std::string::npos);
}

TEST_CASE("PASTURES_MAX_SIZE mirrors --max-size") {
    CliRun run = run_cli("hom F5 F5 --max-size 3");
    CHECK(run.exit_code == 2);
    CHECK(run.output.find("bound is 3") != std::string::npos);

    run = run_cli("hom F5 F5");
    CHECK(run.exit_code == 0);

    std::string command = "PASTURES_MAX_SIZE=3 " + std::string(PASTURES_CLI_PATH) +
                          " hom F5 F5 > /dev/null 2>&1";
    CHECK(std::system(command.c_str()) != 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("validate no_such_file.pasture").exit_code == 2);
    CHECK(run_cli("coproduct").exit_code == 2);      // summands required
    CHECK(run_cli("product F5 F5 F5 F5").exit_code == 2);  // capacity
}
