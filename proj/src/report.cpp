#include "graphlang/report.hpp"

#include <sstream>

namespace graphlang {

using nlohmann::json;

json graph_json(const Graph& g) {
    Graph dense = relabel_dense(g);
    json out;
    out["vertices"] = dense.vertex_count();
    json edges = json::array();
    for (const auto& [u, v] : dense.edges()) edges.push_back(json::array({u, v}));
    out["edges"] = edges;
    return out;
}

namespace {

json marked_graph_json(const MarkedGraph& mg) {
    json out;
    out["vertices"] = mg.graph.vertices();
    json edges = json::array();
    for (const auto& [u, v] : mg.graph.edges()) edges.push_back(json::array({u, v}));
    out["edges"] = edges;
    json marks;
    marks["vertices"] = mg.marked_vertices;
    json medges = json::array();
    for (const auto& [u, v] : mg.marked_edges) medges.push_back(json::array({u, v}));
    marks["edges"] = medges;
    out["marks"] = marks;
    return out;
}

json alpha_json(const Alpha& a) {
    if (a.infinite) return json("inf");
    return json(a.count);
}

} // namespace

json analysis_json(const Analysis& a) {
    json out;
    out["language"] = a.language;
    out["torsion"] = {{"t", a.torsion.threshold}, {"p", a.torsion.period}};
    json alphabet = json::array();
    for (const Letter& z : a.alphabet.letters) alphabet.push_back(z.display());
    out["alphabet"] = alphabet;
    out["epsilon"] = a.epsilon;

    json pieces = json::array();
    for (std::size_t i = 0; i < a.pieces.size(); ++i) {
        const FamilyPiece& p = a.pieces[i];
        json pj;
        json letters = json::array();
        for (std::size_t z : p.letters) letters.push_back(a.alphabet.letters[z].display());
        pj["alphabet"] = letters;
        pj["q"] = p.base;
        pj["periods"] = p.periods;
        json alpha = json::array();
        for (const Alpha& al : p.alpha) alpha.push_back(alpha_json(al));
        pj["alpha"] = alpha;
        pj["markedGraph"] = marked_graph_json(a.marked[i]);
        pj["rank"] = a.ranks[i];
        if (a.widths[i].bounded)
            pj["widthBounds"] = {{"vertexCover", a.widths[i].vertex_cover},
                                 {"bagSize", a.widths[i].bag_size}};
        else
            pj["widthBounds"] = "unbounded";
        pieces.push_back(pj);
    }
    out["pieces"] = pieces;
    out["overallRank"] = a.overall_rank;
    if (a.chromatic_infinite)
        out["chromaticSup"] = "inf";
    else
        out["chromaticSup"] = a.chromatic;
    if (a.family_size) out["familySize"] = *a.family_size;
    json warnings = json::array();
    if (a.intersection_shrunk)
        warnings.push_back("language shrunk when intersected with the graph code");
    out["warnings"] = warnings;
    return out;
}

json verdict_json(const Verdict& v, const std::string& property) {
    json out;
    out["property"] = property;
    switch (v.answer) {
    case Answer::yes:
        out["answer"] = "yes";
        break;
    case Answer::no:
        out["answer"] = "no";
        break;
    case Answer::resource:
        out["answer"] = "resource";
        break;
    }
    if (v.witness_graph) out["witnessGraph"] = graph_json(*v.witness_graph);
    if (v.witness_word) out["witnessWord"] = *v.witness_word;
    if (v.piece) out["piece"] = *v.piece;
    return out;
}

std::string analysis_text(const Analysis& a) {
    std::ostringstream out;
    out << "language: " << a.language << "\n";
    if (a.intersection_shrunk)
        out << "warning: language shrunk when intersected with the graph code\n";
    out << "torsion: t=" << a.torsion.threshold << " p=" << a.torsion.period << "\n";
    out << "alphabet:";
    for (const Letter& z : a.alphabet.letters) out << " " << z.display();
    out << "\n";
    out << "epsilon: " << (a.epsilon ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < a.pieces.size(); ++i) {
        const FamilyPiece& p = a.pieces[i];
        out << "piece " << i << ": rank " << a.ranks[i];
        out << " alpha{";
        for (std::size_t k = 0; k < p.letters.size(); ++k) {
            if (k) out << " ";
            out << a.alphabet.letters[p.letters[k]].display() << "=";
            if (p.alpha[k].infinite)
                out << "inf";
            else
                out << p.alpha[k].count;
        }
        out << "}";
        if (a.widths[i].bounded)
            out << " width<=(" << a.widths[i].vertex_cover << "," << a.widths[i].bag_size << ")";
        else
            out << " width unbounded";
        out << "\n";
    }
    out << "overall rank: " << a.overall_rank << "\n";
    out << "chromatic sup: ";
    if (a.chromatic_infinite)
        out << "inf";
    else
        out << a.chromatic;
    out << "\n";
    if (a.family_size) out << "family size: " << *a.family_size << "\n";
    return out.str();
}

std::string verdict_text(const Verdict& v, const std::string& property) {
    std::ostringstream out;
    out << property << ": ";
    switch (v.answer) {
    case Answer::yes:
        out << "yes";
        break;
    case Answer::no:
        out << "no";
        break;
    case Answer::resource:
        out << "resource cap exceeded";
        break;
    }
    out << "\n";
    if (v.witness_graph) out << graph_text(relabel_dense(*v.witness_graph));
    if (v.witness_word) out << "witness: " << *v.witness_word << "\n";
    return out.str();
}

} // namespace graphlang
