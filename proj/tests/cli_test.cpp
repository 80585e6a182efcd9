// End-to-end checks of the command line tool: spawns the real binary and
// inspects exit codes and outputs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

const std::string cli = SWITCHHOM_CLI_PATH;
const std::string data = SWITCHHOM_DATA_DIR;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string command = cli + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("solve: YES instance exits 0 and prints the target") {
    RunResult r = run("solve " + data + "/graphs/c4_two_odd.mng " + data + "/groups/s2_m2.grp");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("YES k2 1") != std::string::npos);
}

TEST_CASE("solve: NO instance exits 1 with the reason") {
    RunResult r = run("solve " + data + "/graphs/c4_one_odd.mng " + data + "/groups/s2_m2.grp");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("NO bad_cycle") != std::string::npos);

    RunResult odd = run("solve " + data + "/graphs/triangle.mng " + data + "/groups/s2_m2.grp");
    CHECK(odd.exit_code == 1);
    CHECK(odd.output.find("NO odd_cycle") != std::string::npos);
}

TEST_CASE("solve: bad input exits 2") {
    RunResult r = run("solve /nonexistent.mng " + data + "/groups/s2_m2.grp");
    CHECK(r.exit_code == 2);

    RunResult mismatch =
        run("solve " + data + "/graphs/c4_two_odd.mng " + data + "/groups/flip_n1.grp");
    CHECK(mismatch.exit_code == 2);

    RunResult conflict = run("solve " + data + "/graphs/c4_two_odd.mng " + data +
                             "/groups/s2_m2.grp --verdict-only --certificate /tmp/x.cert");
    CHECK(conflict.exit_code == 2);
}

TEST_CASE("solve then verify round trip, including tampering") {
    std::string cert = temp_path("switchhom_cli_roundtrip.cert");
    RunResult solve = run("solve " + data + "/graphs/c4_two_odd.mng " + data +
                          "/groups/s2_m2.grp --certificate " + cert);
    REQUIRE(solve.exit_code == 0);

    RunResult verify =
        run("verify " + data + "/graphs/c4_two_odd.mng " + data + "/groups/s2_m2.grp " + cert);
    CHECK(verify.exit_code == 0);
    CHECK(verify.output.find("VERIFIED") != std::string::npos);

    // Verifying against the wrong graph must refute.
    RunResult wrong =
        run("verify " + data + "/graphs/c4_one_odd.mng " + data + "/groups/s2_m2.grp " + cert);
    CHECK(wrong.exit_code == 1);
    CHECK(wrong.output.find("REFUTED") != std::string::npos);
}

TEST_CASE("solve --compress emits one switch per vertex") {
    std::string cert = temp_path("switchhom_cli_compressed.cert");
    RunResult solve = run("solve " + data + "/graphs/petersen_like.mng " + data +
                          "/groups/s2_m2.grp --certificate " + cert + " --compress");
    REQUIRE(solve.exit_code == 0);
    RunResult verify =
        run("verify " + data + "/graphs/petersen_like.mng " + data + "/groups/s2_m2.grp " + cert);
    CHECK(verify.exit_code == 0);

    RunResult non_abelian = run("solve " + data + "/graphs/path_m3.mng " + data +
                                "/groups/s3_m3.grp --compress");
    CHECK(non_abelian.exit_code == 2);
}

TEST_CASE("classes output format") {
    RunResult r = run("classes " + data + "/groups/s2_m2.grp");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("class 1 : 1\n") != std::string::npos);
    CHECK(r.output.find("class 2 : 2\n") != std::string::npos);
    CHECK(r.output.find("c_gamma ") != std::string::npos);

    RunResult s3 = run("classes " + data + "/groups/s3_m3.grp");
    CHECK(s3.output.find("class 1 : 1 2 3\n") != std::string::npos);
}

TEST_CASE("reduce emits the encoded graph and group") {
    RunResult r =
        run("reduce " + data + "/graphs/opposed_path.mng " + data + "/groups/flip_n1.grp");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("mng 2 0") != std::string::npos);
    CHECK(r.output.find("grp 2 0") != std::string::npos);
    // Arc 1->2 has its tail on side 0, arc 3->2 on side 1.
    CHECK(r.output.find("e 1 2 1") != std::string::npos);
    CHECK(r.output.find("e 2 3 2") != std::string::npos);

    RunResult not_arcs =
        run("reduce " + data + "/graphs/triangle.mng " + data + "/groups/s2_m2.grp");
    CHECK(not_arcs.exit_code == 2);
}

TEST_CASE("gadget turns an edge list into a colour-1 graph") {
    std::string out = temp_path("switchhom_cli_gadget.mng");
    RunResult r = run("gadget " + data + "/edge_lists/k4.edges --m 2 --out " + out);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(out);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str().find("mng 2 0") != std::string::npos);
    CHECK(buffer.str().find("e 1 2 1") != std::string::npos);

    // K4 contains triangles: not 2-colourable.
    RunResult solve = run("solve " + out + " " + data + "/groups/s2_m2.grp");
    CHECK(solve.exit_code == 1);
}

TEST_CASE("oracle mirrors solve and counts states") {
    RunResult yes =
        run("oracle " + data + "/graphs/c4_two_odd.mng " + data + "/groups/s2_m2.grp --states");
    CHECK(yes.exit_code == 0);
    CHECK(yes.output.find("states 8") != std::string::npos);
    CHECK(yes.output.find("YES k2") != std::string::npos);

    RunResult no = run("oracle " + data + "/graphs/c4_one_odd.mng " + data + "/groups/s2_m2.grp");
    CHECK(no.exit_code == 1);
    CHECK(no.output.find("NO") != std::string::npos);

    std::string cert = temp_path("switchhom_cli_oracle.cert");
    RunResult with_cert = run("oracle " + data + "/graphs/c4_two_odd.mng " + data +
                              "/groups/s2_m2.grp --certificate " + cert);
    REQUIRE(with_cert.exit_code == 0);
    RunResult verify =
        run("verify " + data + "/graphs/c4_two_odd.mng " + data + "/groups/s2_m2.grp " + cert);
    CHECK(verify.exit_code == 0);
}

TEST_CASE("solver and oracle agree on the shipped samples") {
    for (const std::string graph : {"c4_one_odd", "c4_two_odd", "triangle", "petersen_like"}) {
        RunResult s = run("solve " + data + "/graphs/" + graph + ".mng " + data +
                          "/groups/s2_m2.grp --verdict-only");
        RunResult o = run("oracle " + data + "/graphs/" + graph + ".mng " + data +
                          "/groups/s2_m2.grp");
        CHECK(s.exit_code == o.exit_code);
    }
}
