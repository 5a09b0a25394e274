#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "graphlang/automata.hpp"
#include "graphlang/crown.hpp"
#include "graphlang/errors.hpp"
#include "graphlang/oracle.hpp"

using namespace graphlang;

namespace {

std::vector<Word> words_up_to(const std::string& re, std::size_t max_len) {
    std::vector<Word> out;
    enumerate_words(compile_regex(re), max_len, [&](const Word& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

} // namespace

TEST_CASE("word enumeration fixed sets") {
    CHECK(words_up_to("(aba)+", 5) == std::vector<Word>{"aba"});
    CHECK(words_up_to("(aba)+", 6) == std::vector<Word>{"aba", "abaaba"});
    CHECK(words_up_to("(ab+aaab+a)+", 8) ==
          std::vector<Word>{"abaaaba", "abaaabba", "abbaaaba"});
    CHECK(words_up_to("aaba|abaaba", 12) == std::vector<Word>{"aaba", "abaaba"});
    CHECK(words_up_to("b a* b", 1).empty());
}

TEST_CASE("word enumeration is short-lex ordered and complete") {
    for (const std::string& re : {std::string("(ab?)*"), std::string("(ab+aaab+a)+")}) {
        std::vector<Word> words = words_up_to(re, 10);
        Dfa d = compile_regex(re);
        CAPTURE(re);
        for (std::size_t i = 0; i + 1 < words.size(); ++i) {
            bool ordered = words[i].size() < words[i + 1].size() ||
                           (words[i].size() == words[i + 1].size() && words[i] < words[i + 1]);
            REQUIRE(ordered);
        }
        // completeness against direct filtering
        std::set<Word> seen(words.begin(), words.end());
        std::vector<Word> all{""};
        std::size_t begin = 0;
        for (int len = 1; len <= 10; ++len) {
            std::size_t end = all.size();
            for (std::size_t i = begin; i < end; ++i) {
                all.push_back(all[i] + "a");
                all.push_back(all[i] + "b");
            }
            begin = end;
        }
        for (const Word& w : all) REQUIRE(seen.count(w) == (dfa_accepts(d, w) ? 1u : 0u));
    }
}

TEST_CASE("early stop and caps") {
    int emitted = 0;
    enumerate_words(compile_regex("(a|b)*"), 12, [&](const Word&) {
        ++emitted;
        return emitted < 5;
    });
    CHECK(emitted == 5);

    CHECK_THROWS_AS(enumerate_words(compile_regex("a*"), 100, [](const Word&) { return true; }),
                    ResourceError);
}

TEST_CASE("oracle members for the one-vertex language") {
    Dfa d = compile_regex("(aba)+");
    OracleRun run = oracle_members(d, 12, 3);
    REQUIRE(run.entries.size() == 1);
    Graph one;
    one.add_vertex(1);
    CHECK(run.entries[0].canonical == one);
    CHECK(run.entries[0].witness == "aba"); // shortest witness
    CHECK(run.words_enumerated == 4);       // lengths 3, 6, 9, 12
}

TEST_CASE("oracle members for the stars language") {
    Dfa d = compile_regex("(abaaabbb*a)*(aba)");
    OracleRun run = oracle_members(d, 40, 4);
    // bare center plus stars with 1..3 rays
    REQUIRE(run.entries.size() == 4);
    for (const OracleEntry& e : run.entries) {
        CHECK(dfa_accepts(d, e.witness));
        CHECK(isomorphic(decode(e.witness), e.canonical));
        std::size_t n = e.canonical.vertex_count();
        CHECK(e.canonical.edge_count() == n - 1); // star shape
    }
}

TEST_CASE("oracle members for the crown over a triangle") {
    Dfa d = compile_regex(crown_regex(3));
    OracleRun run = oracle_members(d, 64, 6);
    // all 2^3 cusp subsets, up to the rotations of the directed cycle
    CHECK(run.entries.size() == 4);
    for (const OracleEntry& e : run.entries) CHECK(e.canonical.vertex_count() >= 3);
}

TEST_CASE("rank-1 families stabilize") {
    Config cfg;
    cfg.oracle_max_len_cap = 100;
    // every member of a finite family shows up well before these lengths
    struct Case {
        std::string re;
        std::size_t len;
    };
    for (const Case& c : {Case{"(aba)+", 20}, Case{crown_regex(3), 63}}) {
        Dfa d = compile_regex(c.re);
        OracleRun shorter = oracle_members(d, c.len, 8, cfg);
        OracleRun longer = oracle_members(d, c.len + 10, 8, cfg);
        std::set<Graph> a, b;
        for (const OracleEntry& e : shorter.entries) a.insert(e.canonical);
        for (const OracleEntry& e : longer.entries) b.insert(e.canonical);
        CAPTURE(c.re);
        CHECK(a == b);
    }
}

TEST_CASE("oversized decodes are counted, not stored") {
    Dfa d = compile_regex("(ab+a)+");
    OracleRun run = oracle_members(d, 20, 10, Config{}, 2);
    CHECK(run.oversized > 0);
    for (const OracleEntry& e : run.entries) CHECK(e.canonical.vertex_count() <= 2);
}
