#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "graphlang/crown.hpp"
#include "graphlang/family.hpp"
#include "graphlang/oracle.hpp"
#include "graphlang/properties.hpp"

using namespace graphlang;

namespace {

Graph g_from(std::initializer_list<VertexId> vs, std::initializer_list<EdgePair> es) {
    Graph g;
    for (VertexId v : vs) g.add_vertex(v);
    for (const auto& [u, v] : es) g.add_edge(u, v);
    return g;
}

const char* kSelfLoops = "(ab+aaab+a)+";
const char* kStars = "(abaaabbb*a)*(aba)";
const char* kOneVertex = "(aba)+";

long floor_log2_test(long n) {
    long k = -1;
    while (n > 0) {
        ++k;
        n >>= 1;
    }
    return k;
}

Graph petersen() {
    Graph g;
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i + 1, (i + 1) % 5 + 1);      // outer cycle
        g.add_edge(i + 6, (i + 2) % 5 + 6);      // inner pentagram
        g.add_edge(i + 1, i + 6);                // spokes
    }
    return g;
}

bool is_matching(const Graph& g) {
    // no two edges share a vertex (input arrives undirected and loop-free)
    std::set<VertexId> seen;
    for (const auto& [u, v] : g.edges()) {
        if (u > v) continue;
        if (seen.count(u) || seen.count(v)) return false;
        seen.insert(u);
        seen.insert(v);
    }
    return true;
}

bool has_triangle_component(const Graph& g) {
    const auto& vs = g.vertices();
    for (VertexId a : vs)
        for (VertexId b : vs)
            for (VertexId c : vs)
                if (a < b && b < c && g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
                    return true;
    return false;
}

} // namespace

TEST_CASE("hamiltonian cycle predicate") {
    CHECK(has_hamiltonian_cycle(cycle_graph(3)));
    CHECK(has_hamiltonian_cycle(cycle_graph(5)));
    CHECK(has_hamiltonian_cycle(complete_graph(4)));
    CHECK_FALSE(has_hamiltonian_cycle(path_graph(4)));
    CHECK_FALSE(has_hamiltonian_cycle(path_graph(2))); // a 2-cycle is no cycle
    CHECK_FALSE(has_hamiltonian_cycle(g_from({1}, {{1, 1}})));
    Graph c4_plus_isolated = cycle_graph(4);
    c4_plus_isolated.add_vertex(9);
    CHECK_FALSE(has_hamiltonian_cycle(c4_plus_isolated));
}

TEST_CASE("perfect matching predicate") {
    CHECK(has_perfect_matching(path_graph(2)));
    CHECK_FALSE(has_perfect_matching(path_graph(3)));
    CHECK(has_perfect_matching(cycle_graph(4)));
    CHECK(has_perfect_matching(path_graph(4)));
    CHECK_FALSE(has_perfect_matching(g_from({1, 2, 3}, {{1, 2}})));
    CHECK(has_perfect_matching(Graph{})); // vacuously matched
}

TEST_CASE("dominating set predicate") {
    CHECK(has_dominating_set_within(path_graph(3), 1)); // the middle vertex
    CHECK_FALSE(has_dominating_set_within(path_graph(3), 0));
    CHECK(has_dominating_set_within(complete_graph(5), 1));
    CHECK_FALSE(has_dominating_set_within(g_from({1, 2, 3}, {}), 2));
    CHECK(has_dominating_set_within(g_from({1, 2, 3}, {}), 3));
}

TEST_CASE("defensive alliance predicate") {
    // an isolated vertex is an alliance of size one
    CHECK(has_defensive_alliance_within(g_from({1, 2}, {}), 1));
    // a leaf holds half of its closed neighborhood
    CHECK(has_defensive_alliance_within(path_graph(4), 1));
    // the center of a large star does not
    Graph star5 = g_from({1, 2, 3, 4, 5, 6}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}});
    CHECK(has_defensive_alliance_within(star5, 1)); // a ray is enough
    CHECK_FALSE(has_defensive_alliance_within(g_from({1}, {}), 0));
}

TEST_CASE("planarity predicate") {
    CHECK(is_planar(complete_graph(4)));
    CHECK_FALSE(is_planar(complete_graph(5)));
    Graph k33;
    for (int i = 1; i <= 3; ++i)
        for (int j = 4; j <= 6; ++j) k33.add_edge(i, j);
    CHECK_FALSE(is_planar(k33));
    Graph k33_minus = k33;
    {
        Graph trimmed;
        for (VertexId v : k33_minus.vertices()) trimmed.add_vertex(v);
        for (const auto& [u, v] : k33_minus.edges())
            if (!(u == 1 && v == 4)) trimmed.add_edge(u, v);
        CHECK(is_planar(trimmed));
    }
    CHECK_FALSE(is_planar(petersen()));
    CHECK(is_planar(cycle_graph(6)));
    // subdivided K5 stays nonplanar
    Graph sub_k5 = complete_graph(5);
    {
        Graph g;
        int next = 6;
        for (const auto& [u, v] : sub_k5.edges()) {
            if (u > v) continue;
            if (u == 1 && v == 2) {
                g.add_edge(1, next);
                g.add_edge(next, 2);
                g.add_edge(next, 1);
                g.add_edge(2, next);
                ++next;
            } else {
                g.add_edge(u, v);
                g.add_edge(v, u);
            }
        }
        CHECK_FALSE(is_planar(g));
    }
}

TEST_CASE("hamiltonian over families") {
    CHECK(hamiltonian(analyze(kSelfLoops)).answer == Answer::yes);
    CHECK(hamiltonian(analyze(kStars)).answer == Answer::no);
    CHECK(hamiltonian(analyze("abaaabba")).answer == Answer::no); // single edge family
    Verdict v = hamiltonian(analyze(kSelfLoops));
    REQUIRE(v.witness_graph);
    CHECK(has_hamiltonian_cycle(*v.witness_graph));
    REQUIRE(v.witness_word);
    CHECK(isomorphic(decode(*v.witness_word), *v.witness_graph));
}

TEST_CASE("perfect matching over families") {
    CHECK(perfect_matching(analyze(kStars)).answer == Answer::yes);
    CHECK(perfect_matching(analyze(kOneVertex)).answer == Answer::no);
    CHECK(perfect_matching(analyze(kSelfLoops)).answer == Answer::yes);
}

TEST_CASE("logarithmic dominating sets over families") {
    CHECK(dominating_set_log(analyze(kStars)).answer == Answer::yes);
    CHECK(dominating_set_log(analyze(kOneVertex)).answer == Answer::no);
    CHECK(dominating_set_log(analyze("abaaabba")).answer == Answer::yes); // K2: 1 <= log2(2)
    CHECK(dominating_set_log(analyze(kSelfLoops)).answer == Answer::yes);
}

TEST_CASE("logarithmic defensive alliances over families") {
    CHECK(defensive_alliance_log(analyze(kSelfLoops)).answer == Answer::yes);
    CHECK(defensive_alliance_log(analyze(kOneVertex)).answer == Answer::no);
    CHECK(defensive_alliance_log(analyze(kStars)).answer == Answer::yes);
}

TEST_CASE("hereditary engine: planarity") {
    PropertyPlugin planar;
    planar.name = "planar";
    planar.predicate = is_planar;
    planar.hereditary = true;
    CHECK(decide(analyze(kSelfLoops), planar).answer == Answer::yes);
    CHECK(decide(analyze(kStars), planar).answer == Answer::yes);
    CHECK(decide(analyze(crown_regex(3)), planar).answer == Answer::yes);
}

TEST_CASE("hereditary engine sees saturation variants beyond the base graph") {
    // Both words fix target vertices 1 resp. 2 and share a pumped source
    // block. With distinct pumps the two edges are disjoint, so the family
    // contains a matching even though the base graph is a shared-vertex path.
    Analysis a = analyze("(abbb*aaaba)(abbb*aaabba)");
    PropertyPlugin matching;
    matching.name = "matching";
    matching.predicate = is_matching;
    matching.hereditary = true;

    bool base_graph_is_matching = true;
    for (const MarkedGraph& mg : a.marked)
        base_graph_is_matching =
            base_graph_is_matching && is_matching(undirected_simplification(mg.graph));
    CHECK_FALSE(base_graph_is_matching); // the base check alone would refuse

    Verdict v = decide(a, matching);
    REQUIRE(v.answer == Answer::yes);

    // the word search confirms a disjoint-edges member
    bool oracle_found = false;
    OracleRun run = oracle_members(a.dfa, 24, 8);
    for (const OracleEntry& e : run.entries)
        if (is_matching(undirected_simplification(e.canonical))) oracle_found = true;
    CHECK(oracle_found);
}

TEST_CASE("hereditary engine agrees with exhaustive search on finite families") {
    PropertyPlugin matching;
    matching.name = "matching";
    matching.predicate = is_matching;
    matching.hereditary = true;
    for (const char* re : {kOneVertex, "abaaabba", "(abba|abaaabba)+"}) {
        Analysis a = analyze(re);
        REQUIRE(a.overall_rank == 1);
        CAPTURE(re);
        bool exhaustive = a.epsilon && is_matching(Graph{});
        for (const Graph& g : enumerate_family(a, 8))
            exhaustive = exhaustive || is_matching(undirected_simplification(g));
        CHECK((decide(a, matching).answer == Answer::yes) == exhaustive);
    }
}

TEST_CASE("component-local shortcut on clique growth") {
    PropertyPlugin triangle;
    triangle.name = "triangle-component";
    triangle.predicate = has_triangle_component;
    triangle.component_local = true;
    triangle.witness_bound = [](long vf) { return vf + 3; };

    Analysis loops = analyze(kSelfLoops);
    Verdict v = decide(loops, triangle);
    REQUIRE(v.answer == Answer::yes);
    // the shortcut's probe witness is indeed achievable in the family
    REQUIRE(v.witness_graph);
    Graph f = loops.marked[0].graph;
    Graph probe = *v.witness_graph;
    (void)f;
    CHECK(member(loops, probe).yes);

    CHECK(decide(analyze(kStars), triangle).answer == Answer::no);
}

TEST_CASE("resource verdicts instead of wrong answers") {
    Analysis a = analyze(kStars);
    Config tiny;
    tiny.enumerate_budget = 3;
    PropertyPlugin triangle;
    triangle.name = "triangle-component";
    triangle.predicate = has_triangle_component;
    triangle.witness_bound = [](long vf) { return vf + 3; };
    CHECK(decide(a, triangle, tiny).answer == Answer::resource);
}

TEST_CASE("verdicts never contradict the word-search oracle") {
    struct Probe {
        const char* name;
        std::function<bool(const Graph&)> pred;
        std::function<Verdict(const Analysis&)> engine;
    };
    std::vector<Probe> probes{
        {"hamiltonian", has_hamiltonian_cycle, [](const Analysis& a) { return hamiltonian(a); }},
        {"perfect-matching", has_perfect_matching,
         [](const Analysis& a) { return perfect_matching(a); }},
        {"dominating-log",
         [](const Graph& g) {
             return has_dominating_set_within(g, floor_log2_test(g.vertex_count()));
         },
         [](const Analysis& a) { return dominating_set_log(a); }},
        {"defensive-alliance-log",
         [](const Graph& g) {
             return has_defensive_alliance_within(g, floor_log2_test(g.vertex_count()));
         },
         [](const Analysis& a) { return defensive_alliance_log(a); }},
    };
    for (const char* re : {kOneVertex, kSelfLoops, kStars, "abaaabba"}) {
        Analysis a = analyze(re);
        OracleRun run = oracle_members(a.dfa, 26, 8);
        CAPTURE(re);
        for (const Probe& probe : probes) {
            CAPTURE(probe.name);
            bool oracle_yes = false;
            for (const OracleEntry& e : run.entries)
                if (probe.pred(e.canonical)) oracle_yes = true;
            Verdict v = probe.engine(a);
            if (oracle_yes) REQUIRE(v.answer == Answer::yes);
            if (v.answer == Answer::no) REQUIRE_FALSE(oracle_yes);
        }
    }
}

TEST_CASE("hamiltonian witnesses respect the search bound") {
    Analysis a = analyze(kSelfLoops);
    // the excursion-shrinking slack: the smallest cycle member fits the bound
    long vf = static_cast<long>(a.marked[0].graph.vertex_count());
    long bound = (a.torsion.period + 1) * (vf + 2) + 1;
    OracleRun run = oracle_members(a.dfa, 28, 8);
    long smallest = -1;
    for (const OracleEntry& e : run.entries)
        if (has_hamiltonian_cycle(e.canonical)) {
            long n = static_cast<long>(e.canonical.vertex_count());
            if (smallest < 0 || n < smallest) smallest = n;
        }
    REQUIRE(smallest > 0);
    CHECK(smallest <= bound);
}
