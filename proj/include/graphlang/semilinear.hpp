#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace graphlang {

/// Vector over the naturals with a fixed dimension per analysis.
using Vec = std::vector<long>;

/// q + Σ_i ℕ p_i. Periods are kept sorted with zero vectors and duplicates
/// removed (both preserve the denoted set).
struct LinearPiece {
    Vec base;
    std::vector<Vec> periods;

    LinearPiece() = default;
    LinearPiece(Vec q, std::vector<Vec> ps);

    Vec period_sum() const;
    auto operator<=>(const LinearPiece&) const = default;
};

/// Finite union of linear pieces.
struct SemilinearSet {
    std::size_t dim = 0;
    std::vector<LinearPiece> pieces;
};

SemilinearSet sl_empty(std::size_t dim);
SemilinearSet sl_zero(std::size_t dim);               // {0}
SemilinearSet sl_unit(std::size_t dim, std::size_t i); // {e_i}

SemilinearSet sl_union(const SemilinearSet& a, const SemilinearSet& b,
                       std::size_t piece_cap = 10000);

/// Minkowski sum: (q1+P1) ⊕ (q2+P2) = (q1+q2, P1 ∪ P2), piecewise.
SemilinearSet sl_sum(const SemilinearSet& a, const SemilinearSet& b,
                     std::size_t piece_cap = 10000);

/// Parikh image of the Kleene star:
/// S* = {0} ∪ ⋃_{∅≠T⊆J} (Σ_{j∈T} q_j + Σ_{j∈T}(ℕ q_j + Σ_i ℕ p_{j,i})).
/// Throws ResourceError when S has more than `union_cap` pieces.
SemilinearSet sl_star(const SemilinearSet& s, int union_cap = 12,
                      std::size_t piece_cap = 10000);

bool sl_contains(const SemilinearSet& s, const Vec& v);
bool piece_contains(const LinearPiece& p, const Vec& v);

/// Splits pieces until every piece satisfies Σ_i p_i <= q componentwise and
/// supp(p_i) ⊆ supp(q), by repeatedly applying
///   q + Σ_I ℕp = (q + Σ_{I∖{1}} ℕp) ∪ (q + p_1 + Σ_I ℕp)
/// on a period with a positive entry in a deficit coordinate. The denoted set
/// is unchanged. Throws ResourceError past `piece_cap` pieces.
SemilinearSet normalize(const SemilinearSet& s, std::size_t piece_cap = 10000);

/// Undoes needless splits: drops pieces contained in another piece and fuses
/// pairs of the split shape (q, P∖{p}) ∪ (q+p, P) back into (q, P) whenever
/// the fused piece keeps the normalize invariants. Set semantics unchanged.
SemilinearSet consolidate(const SemilinearSet& s);

/// Debug dump: one piece per line, `q=<vec> P={<vec>;...}`, vectors as
/// comma-separated naturals in letter order.
std::string sl_dump(const SemilinearSet& s);

} // namespace graphlang
