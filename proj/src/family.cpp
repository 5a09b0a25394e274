#include "graphlang/family.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "graphlang/errors.hpp"

namespace graphlang {

std::optional<std::size_t> FamilyPiece::local_index(std::size_t global_letter) const {
    auto it = std::lower_bound(letters.begin(), letters.end(), global_letter);
    if (it == letters.end() || *it != global_letter) return std::nullopt;
    return static_cast<std::size_t>(it - letters.begin());
}

bool MarkedGraph::vertex_marked(VertexId v) const {
    return std::binary_search(marked_vertices.begin(), marked_vertices.end(), v);
}

bool MarkedGraph::edge_marked(VertexId u, VertexId v) const {
    return std::binary_search(marked_edges.begin(), marked_edges.end(), EdgePair{u, v});
}

std::vector<FamilyPiece> build_pieces(const SemilinearSet& normalized, const LetterAlphabet& C) {
    std::vector<FamilyPiece> out;
    for (const LinearPiece& p : normalized.pieces) {
        std::vector<std::size_t> support;
        for (std::size_t z = 0; z < normalized.dim; ++z)
            if (p.base[z] >= 1) support.push_back(z);
        if (support.empty()) continue; // the zero vector stands for the empty word

        FamilyPiece fp;
        fp.letters = support;
        fp.torsion = C.torsion;
        auto restrict_vec = [&](const Vec& v) {
            Vec r(support.size());
            for (std::size_t i = 0; i < support.size(); ++i) r[i] = v[support[i]];
            return r;
        };
        fp.base = restrict_vec(p.base);
        for (const Vec& per : p.periods) fp.periods.push_back(restrict_vec(per));
        fp.period_sum = Vec(support.size(), 0);
        for (const Vec& per : fp.periods)
            for (std::size_t i = 0; i < per.size(); ++i) fp.period_sum[i] += per[i];

        for (std::size_t i = 0; i < support.size(); ++i) {
            const Letter& z = C.letters[support[i]];
            Alpha a;
            if (!z.has_big_block(C.torsion)) {
                a = {false, 1};
            } else if (fp.period_sum[i] == 0) {
                a = {false, fp.base[i]};
            } else {
                a = {true, 0};
            }
            fp.alpha.push_back(a);
        }
        out.push_back(std::move(fp));
    }
    std::sort(out.begin(), out.end(), [](const FamilyPiece& a, const FamilyPiece& b) {
        return std::tie(a.letters, a.base, a.periods) < std::tie(b.letters, b.base, b.periods);
    });
    return out;
}

MarkedGraph marked_graph(const FamilyPiece& piece, const LetterAlphabet& C) {
    MarkedGraph mg;
    const Torsion& tor = piece.torsion;
    std::set<VertexId> marked_v;
    std::set<EdgePair> marked_e;
    for (std::size_t i = 0; i < piece.letters.size(); ++i) {
        const Letter& z = C.letters[piece.letters[i]];
        if (z.is_edge)
            mg.graph.add_edge(z.b1, z.b2);
        else
            mg.graph.add_vertex(z.b1);
        if (!piece.alpha[i].infinite) continue;
        if (z.is_edge) {
            marked_e.insert({z.b1, z.b2});
            if (z.b1 >= tor.threshold) marked_v.insert(z.b1);
            if (z.b2 >= tor.threshold) marked_v.insert(z.b2);
        } else {
            if (z.b1 >= tor.threshold) marked_v.insert(z.b1);
        }
    }

    // Keep a single marked isolated vertex.
    auto isolated = [&](VertexId v) {
        for (const auto& [x, y] : mg.graph.edges())
            if (x == v || y == v) return false;
        return true;
    };
    bool kept_one = false;
    std::vector<VertexId> drop;
    for (VertexId v : marked_v) {
        if (!isolated(v)) continue;
        if (!kept_one) {
            kept_one = true;
            continue;
        }
        drop.push_back(v);
    }
    if (!drop.empty()) {
        Graph g;
        for (VertexId v : mg.graph.vertices())
            if (!std::binary_search(drop.begin(), drop.end(), v)) g.add_vertex(v);
        for (const auto& [u, v] : mg.graph.edges()) g.add_edge(u, v);
        mg.graph = std::move(g);
        for (VertexId v : drop) marked_v.erase(v);
    }

    mg.marked_vertices.assign(marked_v.begin(), marked_v.end());
    mg.marked_edges.assign(marked_e.begin(), marked_e.end());
    return mg;
}

int piece_rank(const FamilyPiece& piece, const LetterAlphabet& C) {
    const int t = piece.torsion.threshold;
    bool any_inf = false, doubly = false, selfloop = false;
    for (std::size_t i = 0; i < piece.letters.size(); ++i) {
        if (!piece.alpha[i].infinite) continue;
        any_inf = true;
        const Letter& z = C.letters[piece.letters[i]];
        if (z.is_edge && z.b1 >= t && z.b2 >= t) {
            doubly = true;
            if (z.b1 == z.b2) selfloop = true;
        }
    }
    if (selfloop) return 4;
    if (doubly) return 3;
    if (any_inf) return 2;
    return 1;
}

WidthBounds width_bounds(const FamilyPiece& piece, const LetterAlphabet& C) {
    if (piece_rank(piece, C) >= 3) return {false, 0, 0};
    long n = static_cast<long>(marked_graph(piece, C).graph.vertex_count());
    return {true, n, n};
}

// ---------------------------------------------------------------------------
// Piece enumeration
// ---------------------------------------------------------------------------

namespace {

struct PieceView {
    struct EdgeL {
        int c = 0, d = 0;
        Alpha a;
    };
    struct VertL {
        int c = 0;
        Alpha a;
    };
    std::vector<EdgeL> edges;
    std::vector<VertL> verts;
    std::vector<int> smalls; // sorted distinct small block values
    std::vector<int> bigs;   // sorted distinct big block values
    Torsion tor;

    const VertL* vertex_letter(int c) const {
        for (const VertL& v : verts)
            if (v.c == c) return &v;
        return nullptr;
    }
};

PieceView resolve(const FamilyPiece& piece, const LetterAlphabet& C) {
    PieceView view;
    view.tor = piece.torsion;
    std::set<int> smalls, bigs;
    auto classify = [&](int c) {
        if (c >= piece.torsion.threshold)
            bigs.insert(c);
        else
            smalls.insert(c);
    };
    for (std::size_t i = 0; i < piece.letters.size(); ++i) {
        const Letter& z = C.letters[piece.letters[i]];
        if (z.is_edge) {
            view.edges.push_back({z.b1, z.b2, piece.alpha[i]});
            classify(z.b1);
            classify(z.b2);
        } else {
            view.verts.push_back({z.b1, piece.alpha[i]});
            classify(z.b1);
        }
    }
    view.smalls.assign(smalls.begin(), smalls.end());
    view.bigs.assign(bigs.begin(), bigs.end());
    return view;
}

long clamp_alpha(const Alpha& a, long limit) {
    if (a.infinite) return limit;
    return std::min(a.count, limit);
}

class PieceEnumerator {
public:
    PieceEnumerator(const PieceView& view, int max_vertices, bool edge_maximal,
                    std::size_t budget, std::size_t piece_idx)
        : view_(view), max_vertices_(max_vertices), edge_maximal_(edge_maximal), budget_(budget),
          piece_idx_(piece_idx) {}

    void run(std::set<Graph>& sink, int canonical_cap) {
        if (static_cast<int>(view_.smalls.size()) > max_vertices_) return;
        sink_ = &sink;
        canonical_cap_ = canonical_cap;
        reps_.assign(view_.bigs.size(), 1);
        assign_class(0, max_vertices_ - static_cast<int>(view_.smalls.size()));
    }

private:
    void spend() {
        if (budget_ == 0)
            throw ResourceError("enumerate: combination budget exceeded on piece " +
                                std::to_string(piece_idx_));
        --budget_;
    }

    long rep_cap(std::size_t k) const {
        int c = view_.bigs[k];
        long cap = 0;
        for (const auto& e : view_.edges) {
            long w = clamp_alpha(e.a, max_vertices_);
            if (e.c == c) cap += w;
            if (e.d == c) cap += w;
        }
        if (const auto* vl = view_.vertex_letter(c)) cap += clamp_alpha(vl->a, max_vertices_);
        return std::min<long>(cap, max_vertices_);
    }

    std::vector<VertexId> class_names(int c) const {
        if (c < view_.tor.threshold) return {c};
        for (std::size_t k = 0; k < view_.bigs.size(); ++k)
            if (view_.bigs[k] == c) {
                std::vector<VertexId> names;
                for (int i = 0; i < reps_[k]; ++i) names.push_back(c + i * view_.tor.period);
                return names;
            }
        return {};
    }

    void assign_class(std::size_t k, int budget_left) {
        if (k == view_.bigs.size()) {
            edges_.clear();
            choose_edges(0);
            return;
        }
        long cap = std::min<long>(rep_cap(k), budget_left);
        for (long n = 1; n <= cap; ++n) {
            reps_[k] = static_cast<int>(n);
            assign_class(k + 1, budget_left - static_cast<int>(n));
        }
        reps_[k] = 1;
    }

    void choose_edges(std::size_t e_idx) {
        if (e_idx == view_.edges.size()) {
            finish();
            return;
        }
        const auto& e = view_.edges[e_idx];
        std::vector<EdgePair> domain;
        for (VertexId u : class_names(e.c))
            for (VertexId v : class_names(e.d)) domain.push_back({u, v});

        if (edge_maximal_ && e.a.infinite) {
            std::size_t before = edges_.size();
            edges_.insert(edges_.end(), domain.begin(), domain.end());
            choose_edges(e_idx + 1);
            edges_.resize(before);
            return;
        }

        long max_take = e.a.infinite ? static_cast<long>(domain.size())
                                     : std::min<long>(e.a.count, domain.size());
        // all subsets of the domain with 1..max_take elements
        std::function<void(std::size_t, long)> pick = [&](std::size_t from, long taken) {
            if (taken >= 1) {
                spend();
                choose_edges(e_idx + 1);
            }
            if (taken == max_take) return;
            for (std::size_t i = from; i < domain.size(); ++i) {
                edges_.push_back(domain[i]);
                pick(i + 1, taken + 1);
                edges_.pop_back();
            }
        };
        pick(0, 0);
    }

    void finish() {
        spend();
        std::set<VertexId> covered;
        for (const auto& [u, v] : edges_) {
            covered.insert(u);
            covered.insert(v);
        }
        std::map<int, int> isolated_per_class;
        auto check_vertex = [&](VertexId name, int cls) {
            if (covered.count(name)) return true;
            const auto* vl = view_.vertex_letter(cls);
            if (!vl) return false;
            int& cnt = isolated_per_class[cls];
            ++cnt;
            return vl->a.infinite || cnt <= vl->a.count;
        };
        for (int c : view_.smalls)
            if (!check_vertex(c, c)) return;
        for (std::size_t k = 0; k < view_.bigs.size(); ++k)
            for (VertexId name : class_names(view_.bigs[k]))
                if (!check_vertex(name, view_.bigs[k])) return;

        Graph g;
        for (int c : view_.smalls) g.add_vertex(c);
        for (std::size_t k = 0; k < view_.bigs.size(); ++k)
            for (VertexId name : class_names(view_.bigs[k])) g.add_vertex(name);
        for (const auto& [u, v] : edges_) g.add_edge(u, v);
        sink_->insert(canonical_form(g, canonical_cap_));
    }

    const PieceView& view_;
    int max_vertices_;
    bool edge_maximal_;
    std::size_t budget_;
    std::size_t piece_idx_;
    std::vector<int> reps_;
    std::vector<EdgePair> edges_;
    std::set<Graph>* sink_ = nullptr;
    int canonical_cap_ = 10;
};

} // namespace

std::vector<Graph> enumerate_piece_members(const Analysis& a, std::size_t piece_idx,
                                           int max_vertices, bool edge_maximal,
                                           const Config& cfg) {
    std::set<Graph> sink;
    PieceView view = resolve(a.pieces[piece_idx], a.alphabet);
    int cap = std::max(cfg.canonical_vertex_cap, max_vertices);
    PieceEnumerator(view, max_vertices, edge_maximal, cfg.enumerate_budget, piece_idx)
        .run(sink, cap);
    return {sink.begin(), sink.end()};
}

std::vector<Graph> enumerate_family(const Analysis& a, int max_vertices, const Config& cfg) {
    std::set<Graph> sink;
    if (a.epsilon) sink.insert(Graph{});
    for (std::size_t i = 0; i < a.pieces.size(); ++i) {
        for (Graph& g : enumerate_piece_members(a, i, max_vertices, false, cfg))
            sink.insert(std::move(g));
    }
    return {sink.begin(), sink.end()};
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

namespace {

/// Finds an accepted letter word with the exact Parikh vector `target`.
std::optional<std::vector<std::size_t>> letter_word_with_parikh(const LetterDfa& ld,
                                                                const Vec& target) {
    if (ld.state_count() == 0) return std::nullopt;
    std::map<std::pair<int, Vec>, char> feasible;
    std::vector<std::size_t> path;

    std::function<bool(int, Vec&)> go = [&](int state, Vec& rem) -> bool {
        bool zero = std::all_of(rem.begin(), rem.end(), [](long x) { return x == 0; });
        if (zero) return ld.accepting[state] != 0;
        auto key = std::make_pair(state, rem);
        auto it = feasible.find(key);
        if (it != feasible.end() && !it->second) return false;
        for (std::size_t z = 0; z < rem.size(); ++z) {
            if (rem[z] == 0 || ld.next[state][z] < 0) continue;
            --rem[z];
            path.push_back(z);
            if (go(ld.next[state][z], rem)) return true;
            path.pop_back();
            ++rem[z];
        }
        feasible[key] = 0;
        return false;
    };

    Vec rem = target;
    if (!go(ld.start, rem)) return std::nullopt;
    return path;
}

struct AssignmentSearch {
    const Graph& g;
    const PieceView& view;
    const FamilyPiece& piece;
    const LetterAlphabet& alphabet;

    std::vector<VertexId> vert_names;
    std::vector<std::vector<std::pair<int, int>>> incident; // (neighbor idx, dir 0 out/1 in)
    std::vector<int> label;                                 // class value per vertex, -1 unset
    std::set<int> small_used;
    std::vector<int> values; // candidate class values

    explicit AssignmentSearch(const Graph& graph, const PieceView& v, const FamilyPiece& p,
                              const LetterAlphabet& A)
        : g(graph), view(v), piece(p), alphabet(A) {
        vert_names = g.vertices();
        incident.resize(vert_names.size());
        auto idx = [&](VertexId x) {
            return static_cast<int>(
                std::lower_bound(vert_names.begin(), vert_names.end(), x) - vert_names.begin());
        };
        for (const auto& [u, w] : g.edges()) {
            incident[idx(u)].push_back({idx(w), 0});
            incident[idx(w)].push_back({idx(u), 1});
        }
        for (int c : view.smalls) values.push_back(c);
        for (int c : view.bigs) values.push_back(c);
        label.assign(vert_names.size(), -1);
    }

    bool edge_letter_ok(int cu, int cv) const {
        for (const auto& e : view.edges)
            if (e.c == cu && e.d == cv) return true;
        return false;
    }

    bool search(std::size_t v) {
        if (v == vert_names.size()) return final_check();
        for (int c : values) {
            bool small = c < view.tor.threshold;
            if (small && small_used.count(c)) continue;
            label[v] = c;
            bool ok = true;
            for (const auto& [w, dir] : incident[v]) {
                if (label[w] < 0) continue;
                int cu = dir == 0 ? c : label[w];
                int cv = dir == 0 ? label[w] : c;
                if (!edge_letter_ok(cu, cv)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                if (small) small_used.insert(c);
                if (search(v + 1)) return true;
                if (small) small_used.erase(c);
            }
            label[v] = -1;
        }
        return false;
    }

    bool final_check() {
        // every edge letter witnessed within its bound
        std::map<std::pair<int, int>, long> edge_count;
        auto idx = [&](VertexId x) {
            return static_cast<int>(
                std::lower_bound(vert_names.begin(), vert_names.end(), x) - vert_names.begin());
        };
        for (const auto& [u, w] : g.edges())
            ++edge_count[{label[idx(u)], label[idx(w)]}];
        std::set<std::pair<int, int>> seen;
        for (const auto& [key, cnt] : edge_count) seen.insert(key);
        for (const auto& e : view.edges) {
            auto it = edge_count.find({e.c, e.d});
            if (it == edge_count.end()) return false; // q(z) >= 1 forces a witness
            if (!e.a.infinite && it->second > e.a.count) return false;
            seen.erase({e.c, e.d});
        }
        if (!seen.empty()) return false; // some edge reduces outside the alphabet

        // isolated vertices need vertex letters with enough multiplicity
        std::map<int, long> isolated;
        for (std::size_t v = 0; v < vert_names.size(); ++v)
            if (incident[v].empty()) ++isolated[label[v]];
        for (const auto& [cls, cnt] : isolated) {
            const auto* vl = view.vertex_letter(cls);
            if (!vl) return false;
            if (!vl->a.infinite && cnt > vl->a.count) return false;
        }
        // every vertex letter needs some vertex in its class
        for (const auto& vl : view.verts) {
            bool found = false;
            for (std::size_t v = 0; v < vert_names.size() && !found; ++v)
                if (label[v] == vl.c) found = true;
            if (!found) return false;
        }
        return true;
    }
};

} // namespace

MemberResult member(const Analysis& a, const Graph& g, const Config& cfg) {
    if (g.empty()) {
        if (a.epsilon) return {true, Word{}, 0};
        return {};
    }
    if (static_cast<int>(g.vertex_count()) > cfg.member_vertex_cap)
        throw ResourceError("member: graph exceeds the vertex cap");

    for (std::size_t pi = 0; pi < a.pieces.size(); ++pi) {
        const FamilyPiece& piece = a.pieces[pi];
        PieceView view = resolve(piece, a.alphabet);
        AssignmentSearch search(g, view, piece, a.alphabet);
        if (!search.search(0)) continue;

        // Concrete exponents: small labels keep their value, big-class labels
        // get distinct representatives c, c+p, c+2p in vertex order.
        const int t = piece.torsion.threshold, p = piece.torsion.period;
        std::map<int, int> next_rep;
        std::vector<long> concrete(search.vert_names.size());
        for (std::size_t v = 0; v < search.vert_names.size(); ++v) {
            int c = search.label[v];
            if (c < t)
                concrete[v] = c;
            else
                concrete[v] = c + p * next_rep[c]++;
        }
        auto vidx = [&](VertexId x) {
            return static_cast<std::size_t>(std::lower_bound(search.vert_names.begin(),
                                                             search.vert_names.end(), x) -
                                            search.vert_names.begin());
        };

        // Needed multiplicity per letter, then a containing member vector.
        Vec need(a.alphabet.size(), 0);
        std::map<std::size_t, std::vector<Word>> realizations;
        for (const auto& [u, w] : g.edges()) {
            int cu = search.label[vidx(u)], cv = search.label[vidx(w)];
            std::size_t z = *a.alphabet.index_of_edge(cu, cv);
            ++need[z];
            realizations[z].push_back(
                CodeLetter{true, static_cast<int>(concrete[vidx(u)]),
                           static_cast<int>(concrete[vidx(w)])}
                    .word());
        }
        for (const auto& vl : search.view.verts) {
            std::size_t z = *a.alphabet.index_of_vertex(vl.c);
            std::vector<Word>& slot = realizations[z];
            for (std::size_t v = 0; v < search.vert_names.size(); ++v)
                if (search.incident[v].empty() && search.label[v] == vl.c)
                    slot.push_back(CodeLetter{false, static_cast<int>(concrete[v]), 0}.word());
            if (slot.empty()) {
                for (std::size_t v = 0; v < search.vert_names.size(); ++v)
                    if (search.label[v] == vl.c) {
                        slot.push_back(CodeLetter{false, static_cast<int>(concrete[v]), 0}.word());
                        break;
                    }
            }
            need[z] = std::max<long>(need[z], static_cast<long>(slot.size()));
        }

        // m = q + K * (sum of periods) dominates the needed counts.
        Vec m(a.alphabet.size(), 0);
        for (std::size_t i = 0; i < piece.letters.size(); ++i) m[piece.letters[i]] = piece.base[i];
        long K = 0;
        for (std::size_t i = 0; i < piece.letters.size(); ++i) {
            long deficit = need[piece.letters[i]] - piece.base[i];
            if (deficit > 0) {
                long r = piece.period_sum[i];
                K = std::max(K, (deficit + r - 1) / r);
            }
        }
        for (std::size_t i = 0; i < piece.letters.size(); ++i)
            m[piece.letters[i]] += K * piece.period_sum[i];

        auto letter_word = letter_word_with_parikh(a.letter_dfa, m);
        if (!letter_word) continue; // m lies in the piece, so this cannot happen

        std::map<std::size_t, std::size_t> cursor;
        Word witness;
        for (std::size_t z : *letter_word) {
            const std::vector<Word>& slot = realizations[z];
            std::size_t& cur = cursor[z];
            // extra occurrences repeat the last realization; decode ignores them
            witness += slot[std::min(cur, slot.size() - 1)];
            ++cur;
        }
        return {true, std::move(witness), pi};
    }
    return {};
}

// ---------------------------------------------------------------------------
// Chromatic supremum
// ---------------------------------------------------------------------------

int chromatic_number(const Graph& g0) {
    Graph g = undirected_simplification(g0);
    const int n = static_cast<int>(g.vertex_count());
    if (n == 0) return 0;
    const auto& vs = g.vertices();
    auto idx = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : g.edges()) adj[idx(u)].push_back(idx(v));

    std::vector<int> color(n, -1);
    std::function<bool(int, int)> fill = [&](int v, int k) -> bool {
        if (v == n) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int w : adj[v])
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (fill(v + 1, k)) return true;
            color[v] = -1;
        }
        return false;
    };
    for (int k = 1; k <= n; ++k) {
        std::fill(color.begin(), color.end(), -1);
        if (fill(0, k)) return k;
    }
    return n;
}

ChromaticSup chromatic_sup(const Analysis& a, const Config& cfg) {
    ChromaticSup sup;
    for (std::size_t i = 0; i < a.pieces.size(); ++i) {
        if (piece_rank(a.pieces[i], a.alphabet) == 4) return {true, 0};
    }
    for (std::size_t i = 0; i < a.pieces.size(); ++i) {
        const FamilyPiece& piece = a.pieces[i];
        // Vertex bound: the base graph plus room for every finite big letter
        // to spread its multiplicity and for infinite letters to diversify.
        long bound = static_cast<long>(marked_graph(piece, a.alphabet).graph.vertex_count());
        for (std::size_t k = 0; k < piece.letters.size(); ++k) {
            const Letter& z = a.alphabet.letters[piece.letters[k]];
            if (!z.has_big_block(piece.torsion)) continue;
            if (piece.alpha[k].infinite)
                bound += 2;
            else
                bound += (z.is_edge ? 2 : 1) * std::min<long>(piece.alpha[k].count, 8);
        }
        bound = std::min<long>(bound, cfg.canonical_vertex_cap);
        for (const Graph& g :
             enumerate_piece_members(a, i, static_cast<int>(bound), false, cfg))
            sup.value = std::max<long>(sup.value, chromatic_number(g));
    }
    return sup;
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

Analysis analyze(std::string_view regex_text, const Config& cfg) {
    Analysis a;
    a.language = std::string(regex_text);
    Dfa given = compile_regex(regex_text);
    CodeIntersection ci = intersect_with_code(given);
    a.dfa = std::move(ci.dfa);
    a.intersection_shrunk = ci.shrunk;
    a.torsion = torsion_pair(a.dfa);
    auto [alphabet, ld] = build_letter_dfa(a.dfa, a.torsion);
    a.alphabet = std::move(alphabet);
    a.letter_dfa = std::move(ld);
    a.epsilon = a.letter_dfa.accepts_epsilon;
    a.parikh_raw = letter_parikh(a.letter_dfa, a.alphabet.size(), cfg.regex_node_cap,
                                 cfg.star_union_cap, cfg.piece_cap);
    a.parikh_normalized = consolidate(normalize(a.parikh_raw, cfg.piece_cap));
    a.pieces = build_pieces(a.parikh_normalized, a.alphabet);

    a.overall_rank = 1;
    for (const FamilyPiece& piece : a.pieces) {
        a.marked.push_back(marked_graph(piece, a.alphabet));
        a.ranks.push_back(piece_rank(piece, a.alphabet));
        a.widths.push_back(width_bounds(piece, a.alphabet));
        a.overall_rank = std::max(a.overall_rank, a.ranks.back());
    }

    ChromaticSup sup = chromatic_sup(a, cfg);
    a.chromatic_infinite = sup.infinite;
    a.chromatic = sup.value;

    if (a.overall_rank == 1) {
        // Complete finite families have a natural vertex bound: the small
        // vertices plus one slot per big-block occurrence. Report the count
        // only when that bound fits under the canonical cap.
        long bound = 0;
        for (std::size_t i = 0; i < a.pieces.size(); ++i) {
            PieceView view = resolve(a.pieces[i], a.alphabet);
            long b = static_cast<long>(view.smalls.size());
            for (int c : view.bigs) {
                for (const auto& e : view.edges) {
                    if (e.c == c) b += e.a.count;
                    if (e.d == c) b += e.a.count;
                }
                if (const auto* vl = view.vertex_letter(c)) b += vl->a.count;
            }
            bound = std::max(bound, b);
        }
        if (bound <= cfg.canonical_vertex_cap) {
            try {
                a.family_size = enumerate_family(a, static_cast<int>(bound), cfg).size();
            } catch (const ResourceError&) {
                a.family_size = std::nullopt;
            }
        }
    }
    return a;
}

} // namespace graphlang
