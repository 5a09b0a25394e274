// End-to-end checks of the command-line tool. Takes the binary path as argv[1].
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

#define CHECK_MSG(cond, msg)                                                                       \
    do {                                                                                           \
        if (!(cond)) {                                                                             \
            ++failures;                                                                            \
            std::cerr << "FAILED: " << msg << " (line " << __LINE__ << ")\n";                      \
        }                                                                                          \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <graphlang binary>\n";
        return 2;
    }
    std::string bin = argv[1];

    {
        RunResult r = run(bin + " analyze --lang '(ab+aaab+a)+' --json");
        CHECK_MSG(r.exit_code == 0, "analyze exits 0");
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        CHECK_MSG(!j.is_discarded(), "analyze emits valid JSON");
        if (!j.is_discarded()) {
            CHECK_MSG(j["overallRank"] == 4, "rank 4 for the self-loop language");
            CHECK_MSG(j["chromaticSup"] == "inf", "chromatic sup inf");
            CHECK_MSG(j["torsion"]["t"] == 1 && j["torsion"]["p"] == 1, "torsion (1,1)");
        }
    }
    {
        RunResult r = run(bin + " analyze --lang '(aba)+' --json");
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        CHECK_MSG(!j.is_discarded() && j["overallRank"] == 1, "rank 1 for the one-vertex language");
        CHECK_MSG(j["familySize"] == 1, "family size 1");
    }
    {
        RunResult r = run(bin + " decode abaaabba");
        CHECK_MSG(r.exit_code == 0, "decode exits 0");
        CHECK_MSG(r.out == "n=2\ne 1 2\n", "decode prints the two-vertex edge graph");
    }
    {
        RunResult r = run("printf 'n=2\\ne 1 2\\n' | " + bin + " encode --graph -");
        CHECK_MSG(r.exit_code == 0, "encode exits 0");
        CHECK_MSG(r.out == "abaaabba\n", "encode emits the short-lex word");
    }
    {
        RunResult r = run("printf 'n=4\\ne 1 2\\ne 1 3\\ne 1 4\\n' | " + bin +
                          " member --lang '(abaaabbb*a)*(aba)' --graph -");
        CHECK_MSG(r.exit_code == 0, "member star-3: yes exits 0");
        CHECK_MSG(r.out.find("yes") == 0, "member star-3 prints yes");
        CHECK_MSG(r.out.find("witness: ") != std::string::npos, "member yes carries a witness");
    }
    {
        RunResult r = run("printf 'n=3\\ne 1 2\\ne 2 3\\ne 3 1\\n' | " + bin +
                          " member --lang '(abaaabbb*a)*(aba)' --graph -");
        CHECK_MSG(r.exit_code == 1, "member triangle: no exits 1");
    }
    {
        RunResult r = run("printf 'n=0\\n' | " + bin + " member --lang '(aba)+' --graph -");
        CHECK_MSG(r.exit_code == 1, "empty graph is no member when the empty word is rejected");
    }
    {
        RunResult r = run(bin + " enumerate --crown 5 --max-vertices 10 --json");
        CHECK_MSG(r.exit_code == 0, "enumerate exits 0");
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        CHECK_MSG(!j.is_discarded() && j.is_array() && j.size() == 8, "crown 5 has 8 graphs");
    }
    {
        RunResult r = run(bin + " decide --lang '(abaaabbb*a)*(aba)' --property hamiltonian");
        CHECK_MSG(r.exit_code == 1, "stars are never hamiltonian: exits 1");
    }
    {
        RunResult r =
            run(bin + " decide --lang '(ab+aaab+a)+' --property perfect-matching --json");
        CHECK_MSG(r.exit_code == 0, "perfect matching yes exits 0");
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        CHECK_MSG(!j.is_discarded() && j["answer"] == "yes", "verdict json answer yes");
    }
    {
        RunResult r = run(bin + " decide --lang '(ab+aaab+a)+' --property custom --pred-cmd true"
                          " --witness-bound 3");
        CHECK_MSG(r.exit_code == 0, "custom predicate via command works");
    }
    {
        RunResult r = run(bin + " oracle --lang '(aba)+' --max-len 12 --json");
        CHECK_MSG(r.exit_code == 0, "oracle exits 0");
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        CHECK_MSG(!j.is_discarded() && j.is_array() && j.size() == 1, "oracle finds one graph");
        if (!j.is_discarded() && j.size() == 1)
            CHECK_MSG(j[0]["witness"] == "aba", "shortest witness");
    }
    {
        RunResult r = run(bin + " analyze --lang '(ab'");
        CHECK_MSG(r.exit_code == 2, "parse errors exit 2");
    }
    {
        RunResult r = run(bin + " member --lang '(aba)+' --graph /nonexistent/file");
        CHECK_MSG(r.exit_code == 4, "io errors exit 4");
    }
    {
        RunResult r = run(bin + " analyze --lang '(abaaabbb*a)*(aba)' --cap-budget 2");
        CHECK_MSG(r.exit_code == 3, "resource caps exit 3");
    }

    if (failures == 0) {
        std::cout << "cli: all checks passed\n";
        return 0;
    }
    std::cerr << failures << " cli checks failed\n";
    return 1;
}
