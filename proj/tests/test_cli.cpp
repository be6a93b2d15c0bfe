#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "permcover/io.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Runs a shell command, capturing stdout (callers add 2>&1 when stderr
// matters) and the exit code.
RunResult run(const std::string& args) {
    const std::string cmd = std::string(PERMCOVER_CLI_PATH) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string temp_path(const std::string& stem) {
    return "/tmp/permcover_test_" + std::to_string(getpid()) + "_" + stem;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

}  // namespace

TEST_CASE("bound and count queries print bare numbers") {
    CHECK(run("gamma 6 --mode inversion").out == "9\n");
    CHECK(run("gamma 5 --mode pair").out == "6\n");
    CHECK(run("gamma 3 --mode pair").out == "3\n");
    CHECK(run("count 5 --what pstar").out == "1280\n");
    CHECK(run("count 6 --what qstar").out == "262144\n");
    CHECK(run("count 8 --what family --c 4").out == "36\n");
    CHECK(run("count 40 --what qstar").exit_code == 0);
}

TEST_CASE("generation is deterministic and always verifies") {
    const RunResult a = run("generate 7 --mode pair --seed 3");
    const RunResult b = run("generate 7 --mode pair --seed 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != run("generate 7 --mode pair --seed 4").out);

    const std::string path = temp_path("gen7.txt");
    write_file(path, a.out);
    CHECK(run("verify " + path + " --minimal").exit_code == 0);

    for (const char* args :
         {"generate 6 --mode inversion --seed 1",
          "generate 9 --mode inversion --seed 2",
          "generate 2 --mode pair --seed 5", "generate 3 --mode pair --seed 6",
          "generate 4 --mode pair --seed 7", "generate 5 --mode pair --seed 8",
          "generate 8 --mode pair --seed 9 --orbit",
          "generate 6 --mode pair --seed 10 --x 2,4,6",
          "generate 5 --mode pair --seed 11 --relabel 21345"}) {
        const RunResult g = run(args);
        CHECK(g.exit_code == 0);
        const std::string p = temp_path("pipe.txt");
        write_file(p, g.out);
        const RunResult v = run("verify " + p + " --minimal");
        CHECK(v.exit_code == 0);
    }

    CHECK(run("generate 6 --mode inversion --seed 1 --orbit 2>&1").exit_code ==
          1);
}

TEST_CASE("generated documents parse and carry their seed") {
    const RunResult g = run("generate 10 --mode inversion --seed 12");
    const permcover::PermSetDocument doc = permcover::parse_document(g.out);
    CHECK(doc.n == 10);
    CHECK(doc.perms.size() == 25);
    bool saw_seed = false;
    for (const auto& [key, value] : doc.metadata) {
        if (key == "seed" && value == "12") saw_seed = true;
    }
    CHECK(saw_seed);
}

TEST_CASE("enumeration streams documents and honors limits") {
    const RunResult r = run("enumerate 3 --mode inversion");
    CHECK(r.exit_code == 0);
    const std::vector<permcover::PermSetDocument> docs =
        permcover::parse_documents(r.out);
    CHECK(docs.size() == 3);

    const RunResult limited = run("enumerate 9 --mode inversion --limit 4");
    CHECK(limited.exit_code == 0);
    CHECK(permcover::parse_documents(limited.out).size() == 4);

    const RunResult refused = run("enumerate 9 --mode inversion 2>&1");
    CHECK(refused.exit_code == 1);
    CHECK(refused.out.find("--limit") != std::string::npos);
}

TEST_CASE("verification prints diagnostics and distinguishes exit codes") {
    const std::string bad = temp_path("bad.txt");
    write_file(bad, "n=3 mode=inversion\n2 1 3\n1 2 3\n");
    const RunResult incomplete = run("verify " + bad);
    CHECK(incomplete.exit_code == 1);
    CHECK(incomplete.out.find("(3,1)") != std::string::npos);
    CHECK(incomplete.out.find("(3,2)") != std::string::npos);

    const std::string redundant = temp_path("redundant.txt");
    write_file(redundant, "n=3 mode=inversion\n3 2 1\n2 1 3\n");
    CHECK(run("verify " + redundant).exit_code == 0);
    const RunResult not_minimal = run("verify " + redundant + " --minimal");
    CHECK(not_minimal.exit_code == 1);
    CHECK(not_minimal.out.find("213") != std::string::npos);

    const std::string malformed = temp_path("malformed.txt");
    write_file(malformed, "n=3 mode=inversion\n2 1 4\n");
    const RunResult syntax = run("verify " + malformed + " 2>&1");
    CHECK(syntax.exit_code == 2);
    CHECK(syntax.out.find(":2:1:") != std::string::npos);
    CHECK(syntax.out.find(malformed) != std::string::npos);
}

TEST_CASE("standard input stands in for a file path") {
    const RunResult piped = run("verify - --minimal <<'EOF'\n"
                                "n=2 mode=pair\n1 2\n2 1\nEOF\n");
    CHECK(piped.exit_code == 0);
}

TEST_CASE("search reports come back as json") {
    const RunResult r = run("oracle 3 --mode inversion");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"witness_count\": 3") != std::string::npos);
    const RunResult restricted =
        run("oracle 5 --mode inversion --restricted --trials 500");
    CHECK(restricted.exit_code == 0);
    CHECK(restricted.out.find("\"witness_count\": 128") != std::string::npos);
    CHECK(restricted.out.find("\"random_hits_all_known\": true") !=
          std::string::npos);
    CHECK(run("oracle 5 --mode inversion 2>&1").exit_code == 1);
}

TEST_CASE("graph export emits dot in both orientations") {
    const std::string q4 = temp_path("q4.txt");
    write_file(q4, "n=4 mode=inversion\n1 3 2 4\n1 4 2 3\n2 3 1 4\n2 4 1 3\n");
    const RunResult undirected = run("graph " + q4 + " --strategy lex_min");
    CHECK(undirected.exit_code == 0);
    CHECK(undirected.out.find("graph criticals {") == 0);
    CHECK(undirected.out.find("--") != std::string::npos);

    const std::string p4 = temp_path("p4.txt");
    write_file(p4, "n=4 mode=pair\n1 3 2 4\n1 4 2 3\n2 3 1 4\n2 4 1 3\n");
    const RunResult directed = run("graph " + p4 + " --strategy lex_min");
    CHECK(directed.exit_code == 0);
    CHECK(directed.out.find("digraph criticals {") == 0);
    CHECK(directed.out.find("->") != std::string::npos);

    const RunResult all = run("graph " + q4 + " --strategy all");
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("// selection 1 of") != std::string::npos);
}

TEST_CASE("the two bijection directions invert each other end to end") {
    const std::string q = temp_path("q6.txt");
    const RunResult gen = run("generate 6 --mode inversion --seed 21");
    write_file(q, gen.out);

    const std::string p = temp_path("p6.txt");
    const RunResult built = run("phi-inverse --x 1,4,5 --q " + q);
    CHECK(built.exit_code == 0);
    write_file(p, built.out);
    CHECK(run("verify " + p + " --minimal").exit_code == 0);

    const RunResult split = run("phi " + p);
    CHECK(split.exit_code == 0);
    CHECK(split.out.find("x=1,4,5") != std::string::npos);
    const permcover::PermSetDocument qdoc =
        permcover::parse_document(gen.out);
    const permcover::PermSetDocument back =
        permcover::parse_document(split.out);
    CHECK(permcover::to_set(back) == permcover::to_set(qdoc));

    const RunResult wrong = run("phi " + q + " 2>&1");
    CHECK(wrong.exit_code == 1);
}

TEST_CASE("bad command lines exit with the usage code") {
    CHECK(run("gamma 6 --mode banana 2>&1").exit_code == 2);
    CHECK(run("frobnicate 2>&1").exit_code == 2);
    CHECK(run("gamma 2>&1").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}
