#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "graphlang/errors.hpp"
#include "graphlang/semilinear.hpp"

using namespace graphlang;

namespace {

// Brute-force members of a semilinear set within a box, straight from the
// definition: iterate period multiplicities up to the box bound.
std::set<Vec> brute_members(const SemilinearSet& s, long box) {
    std::set<Vec> out;
    for (const LinearPiece& p : s.pieces) {
        std::function<void(std::size_t, Vec)> go = [&](std::size_t idx, Vec v) {
            bool inside = true;
            for (long x : v)
                if (x > box) inside = false;
            if (inside) {
                if (idx == p.periods.size()) {
                    out.insert(v);
                    return;
                }
                Vec cur = v;
                for (;;) {
                    go(idx + 1, cur);
                    bool fits = true;
                    for (std::size_t i = 0; i < cur.size(); ++i) {
                        cur[i] += p.periods[idx][i];
                        if (cur[i] > box) fits = false;
                    }
                    if (!fits) break;
                }
            }
        };
        go(0, p.base);
    }
    return out;
}

std::vector<Vec> box_vectors(std::size_t dim, long box) {
    std::vector<Vec> out{Vec(dim, 0)};
    for (std::size_t d = 0; d < dim; ++d) {
        std::vector<Vec> next;
        for (const Vec& v : out)
            for (long x = 0; x <= box; ++x) {
                Vec w = v;
                w[d] = x;
                next.push_back(w);
            }
        out = std::move(next);
    }
    return out;
}

SemilinearSet random_set(std::mt19937& rng, std::size_t dim, int max_pieces) {
    SemilinearSet s{dim, {}};
    int pieces = 1 + static_cast<int>(rng() % max_pieces);
    for (int i = 0; i < pieces; ++i) {
        Vec base(dim);
        for (auto& x : base) x = static_cast<long>(rng() % 4);
        std::vector<Vec> periods;
        int np = static_cast<int>(rng() % 3);
        for (int k = 0; k < np; ++k) {
            Vec p(dim);
            for (auto& x : p) x = static_cast<long>(rng() % 3);
            periods.push_back(p);
        }
        s.pieces.emplace_back(std::move(base), std::move(periods));
    }
    return s;
}

} // namespace

TEST_CASE("sum and union fixed examples") {
    SemilinearSet a{2, {LinearPiece({1, 0}, {})}};
    SemilinearSet b{2, {LinearPiece({0, 1}, {})}};
    SemilinearSet s = sl_sum(a, b);
    REQUIRE(s.pieces.size() == 1);
    CHECK(s.pieces[0].base == Vec{1, 1});
    CHECK(s.pieces[0].periods.empty());

    SemilinearSet u = sl_union(a, a);
    CHECK(u.pieces.size() == 1); // identical pieces deduplicate

    SemilinearSet ap{2, {LinearPiece({1, 0}, {{1, 0}})}};
    SemilinearSet sum = sl_sum(ap, b);
    REQUIRE(sum.pieces.size() == 1);
    CHECK(sum.pieces[0].base == Vec{1, 1});
    CHECK(sum.pieces[0].periods == std::vector<Vec>{{1, 0}});
    // semantic check against enumeration
    auto members = brute_members(sum, 5);
    for (const Vec& v : box_vectors(2, 5))
        CHECK(sl_contains(sum, v) == (members.count(v) > 0));
}

TEST_CASE("star fixed examples") {
    SemilinearSet one{1, {LinearPiece({1}, {})}};
    SemilinearSet star1 = sl_star(one);
    for (long x = 0; x <= 10; ++x) CHECK(sl_contains(star1, {x}));

    SemilinearSet two{1, {LinearPiece({2}, {})}};
    SemilinearSet star2 = sl_star(two);
    for (long x = 0; x <= 10; ++x) CHECK(sl_contains(star2, {x}) == (x % 2 == 0));

    SemilinearSet units{2, {LinearPiece({1, 0}, {}), LinearPiece({0, 1}, {})}};
    SemilinearSet star3 = sl_star(units);
    for (const Vec& v : box_vectors(2, 4)) CHECK(sl_contains(star3, v));
}

TEST_CASE("star agrees with iterated sums") {
    // Inside a box, v lies in S* iff v is a finite sum of members of S; all
    // summands stay in the box, so saturating sums there is an exact oracle.
    std::mt19937 rng(5);
    const long box = 4;
    for (int round = 0; round < 30; ++round) {
        std::size_t dim = 1 + rng() % 2;
        SemilinearSet s = random_set(rng, dim, 2);
        SemilinearSet star = sl_star(s);
        std::set<Vec> members = brute_members(s, box);
        std::set<Vec> expect{Vec(dim, 0)};
        for (;;) {
            std::set<Vec> grown = expect;
            for (const Vec& v : expect)
                for (const Vec& m : members) {
                    Vec w(dim);
                    bool fits = true;
                    for (std::size_t i = 0; i < dim; ++i) {
                        w[i] = v[i] + m[i];
                        if (w[i] > box) fits = false;
                    }
                    if (fits) grown.insert(w);
                }
            if (grown == expect) break;
            expect = std::move(grown);
        }
        for (const Vec& v : box_vectors(dim, box)) {
            CAPTURE(sl_dump(s));
            CAPTURE(v);
            REQUIRE(sl_contains(star, v) == (expect.count(v) > 0));
        }
    }
}

TEST_CASE("containment fixed examples") {
    SemilinearSet s{1, {LinearPiece({1}, {{2}})}};
    CHECK(sl_contains(s, {3}));
    CHECK_FALSE(sl_contains(s, {2}));

    SemilinearSet t{2, {LinearPiece({1, 1}, {{1, 0}, {0, 1}})}};
    CHECK(sl_contains(t, {3, 2}));
    CHECK_FALSE(sl_contains(t, {0, 2}));
}

TEST_CASE("normalize establishes the base-dominance invariants") {
    std::mt19937 rng(9);
    for (int round = 0; round < 50; ++round) {
        std::size_t dim = 1 + rng() % 3;
        SemilinearSet s = random_set(rng, dim, 3);
        SemilinearSet n = normalize(s);
        for (const LinearPiece& p : n.pieces) {
            Vec sum = p.period_sum();
            for (std::size_t z = 0; z < dim; ++z) {
                CHECK(sum[z] <= p.base[z]); // also forces supp(p) within supp(q)
            }
        }
        for (const Vec& v : box_vectors(dim, 6)) {
            CAPTURE(sl_dump(s));
            CAPTURE(v);
            REQUIRE(sl_contains(s, v) == sl_contains(n, v));
        }
    }
}

TEST_CASE("normalize keeps already-normal pieces") {
    SemilinearSet s{2, {LinearPiece({2, 1}, {{1, 0}})}};
    SemilinearSet n = normalize(s);
    REQUIRE(n.pieces.size() == 1);
    CHECK(n.pieces[0].base == Vec{2, 1});
    CHECK(n.pieces[0].periods == std::vector<Vec>{{1, 0}});
}

TEST_CASE("normalize splits the support violation example") {
    // q=(0,1) with period (1,0): the period leaves the base support
    SemilinearSet s{2, {LinearPiece({0, 1}, {{1, 0}})}};
    SemilinearSet n = normalize(s);
    for (const LinearPiece& p : n.pieces) {
        Vec sum = p.period_sum();
        for (std::size_t z = 0; z < 2; ++z) CHECK(sum[z] <= p.base[z]);
    }
    for (const Vec& v : box_vectors(2, 4)) REQUIRE(sl_contains(s, v) == sl_contains(n, v));
}

TEST_CASE("duplicate and zero periods are removed eagerly") {
    LinearPiece p({1}, {{1}, {1}, {0}});
    CHECK(p.periods == std::vector<Vec>{{1}});
    // semantics unchanged: q=(1) with duplicated period (1) is 1 + N
    SemilinearSet s{1, {p}};
    for (long x = 0; x <= 8; ++x) CHECK(sl_contains(s, {x}) == (x >= 1));
}

TEST_CASE("consolidate undoes needless splits") {
    {
        // the split shape (q, {}) ∪ (q+p, {p}) fuses back into (q, {p})
        SemilinearSet s{1, {LinearPiece({1}, {}), LinearPiece({2}, {{1}})}};
        SemilinearSet c = consolidate(s);
        REQUIRE(c.pieces.size() == 1);
        CHECK(c.pieces[0].base == Vec{1});
        CHECK(c.pieces[0].periods == std::vector<Vec>{{1}});
    }
    {
        // contained pieces disappear
        SemilinearSet s{1, {LinearPiece({1}, {{1}}), LinearPiece({3}, {{1}})}};
        SemilinearSet c = consolidate(s);
        REQUIRE(c.pieces.size() == 1);
        CHECK(c.pieces[0].base == Vec{1});
    }
    {
        // a fuse that would break normalization is refused
        SemilinearSet s{2, {LinearPiece({0, 1}, {}), LinearPiece({1, 1}, {{1, 0}})}};
        SemilinearSet c = consolidate(s);
        CHECK(c.pieces.size() == 2);
    }
    std::mt19937 rng(31);
    for (int round = 0; round < 30; ++round) {
        std::size_t dim = 1 + rng() % 2;
        SemilinearSet s = normalize(random_set(rng, dim, 3));
        SemilinearSet c = consolidate(s);
        CHECK(c.pieces.size() <= s.pieces.size());
        for (const Vec& v : box_vectors(dim, 6)) REQUIRE(sl_contains(s, v) == sl_contains(c, v));
    }
}

TEST_CASE("dump format") {
    SemilinearSet s{2, {LinearPiece({1, 2}, {{1, 0}, {0, 1}})}};
    CHECK(sl_dump(s) == "q=1,2 P={0,1;1,0}\n");
}

TEST_CASE("star cap raises a resource error") {
    SemilinearSet s{1, {}};
    for (long i = 1; i <= 13; ++i) s.pieces.push_back(LinearPiece({i}, {}));
    CHECK_THROWS_AS(sl_star(s), ResourceError);
}
