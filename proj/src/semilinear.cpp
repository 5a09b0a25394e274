#include "graphlang/semilinear.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "graphlang/errors.hpp"

namespace graphlang {

namespace {

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

Vec add(const Vec& a, const Vec& b) {
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

void dedupe_pieces(std::vector<LinearPiece>& ps) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
}

void check_dim(const SemilinearSet& a, const SemilinearSet& b) {
    if (a.dim != b.dim) throw std::invalid_argument("semilinear dimension mismatch");
}

void check_cap(std::size_t count, std::size_t cap, const char* what) {
    if (count > cap)
        throw ResourceError(std::string(what) + ": piece count " + std::to_string(count) +
                            " exceeds cap " + std::to_string(cap));
}

} // namespace

LinearPiece::LinearPiece(Vec q, std::vector<Vec> ps) : base(std::move(q)) {
    for (Vec& p : ps)
        if (!is_zero(p)) periods.push_back(std::move(p));
    std::sort(periods.begin(), periods.end());
    periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
}

Vec LinearPiece::period_sum() const {
    Vec r(base.size(), 0);
    for (const Vec& p : periods) r = add(r, p);
    return r;
}

SemilinearSet sl_empty(std::size_t dim) { return {dim, {}}; }

SemilinearSet sl_zero(std::size_t dim) { return {dim, {LinearPiece(Vec(dim, 0), {})}}; }

SemilinearSet sl_unit(std::size_t dim, std::size_t i) {
    Vec e(dim, 0);
    e[i] = 1;
    return {dim, {LinearPiece(std::move(e), {})}};
}

SemilinearSet sl_union(const SemilinearSet& a, const SemilinearSet& b, std::size_t piece_cap) {
    check_dim(a, b);
    SemilinearSet out{a.dim, a.pieces};
    out.pieces.insert(out.pieces.end(), b.pieces.begin(), b.pieces.end());
    dedupe_pieces(out.pieces);
    check_cap(out.pieces.size(), piece_cap, "sl_union");
    return out;
}

SemilinearSet sl_sum(const SemilinearSet& a, const SemilinearSet& b, std::size_t piece_cap) {
    check_dim(a, b);
    SemilinearSet out{a.dim, {}};
    for (const LinearPiece& pa : a.pieces)
        for (const LinearPiece& pb : b.pieces) {
            std::vector<Vec> periods = pa.periods;
            periods.insert(periods.end(), pb.periods.begin(), pb.periods.end());
            out.pieces.emplace_back(add(pa.base, pb.base), std::move(periods));
            check_cap(out.pieces.size(), piece_cap, "sl_sum");
        }
    dedupe_pieces(out.pieces);
    return out;
}

SemilinearSet sl_star(const SemilinearSet& s, int union_cap, std::size_t piece_cap) {
    std::vector<LinearPiece> parts;
    for (const LinearPiece& p : s.pieces) {
        if (is_zero(p.base) && p.periods.empty()) continue; // {0} never changes a star
        parts.push_back(p);
    }
    dedupe_pieces(parts);
    const std::size_t j = parts.size();
    if (j > static_cast<std::size_t>(union_cap))
        throw ResourceError("sl_star: " + std::to_string(j) + " pieces exceed star cap " +
                            std::to_string(union_cap));

    SemilinearSet out = sl_zero(s.dim);
    for (std::size_t mask = 1; mask < (std::size_t{1} << j); ++mask) {
        Vec q(s.dim, 0);
        std::vector<Vec> periods;
        for (std::size_t k = 0; k < j; ++k) {
            if (!(mask & (std::size_t{1} << k))) continue;
            q = add(q, parts[k].base);
            periods.push_back(parts[k].base);
            periods.insert(periods.end(), parts[k].periods.begin(), parts[k].periods.end());
        }
        out.pieces.emplace_back(std::move(q), std::move(periods));
        check_cap(out.pieces.size(), piece_cap, "sl_star");
    }
    dedupe_pieces(out.pieces);
    return out;
}

bool piece_contains(const LinearPiece& p, const Vec& v) {
    Vec rest(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        rest[i] = v[i] - p.base[i];
        if (rest[i] < 0) return false;
    }

    // Bounded search over period multiplicities; each period with a positive
    // entry is bounded by the remaining budget in that coordinate.
    std::vector<const Vec*> useful;
    for (const Vec& per : p.periods) useful.push_back(&per);

    std::function<bool(std::size_t, Vec&)> go = [&](std::size_t idx, Vec& r) -> bool {
        if (is_zero(r)) return true;
        if (idx == useful.size()) return false;
        const Vec& per = *useful[idx];
        long max_k = -1;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (per[i] > 0) {
                long k = r[i] / per[i];
                max_k = max_k < 0 ? k : std::min(max_k, k);
            }
        if (max_k < 0) max_k = 0; // zero periods were removed, unreachable
        for (long k = 0; k <= max_k; ++k) {
            Vec r2(r.size());
            bool ok = true;
            for (std::size_t i = 0; i < r.size(); ++i) {
                r2[i] = r[i] - k * per[i];
                if (r2[i] < 0) ok = false;
            }
            if (ok && go(idx + 1, r2)) return true;
        }
        return false;
    };
    return go(0, rest);
}

bool sl_contains(const SemilinearSet& s, const Vec& v) {
    if (v.size() != s.dim) throw std::invalid_argument("semilinear dimension mismatch");
    for (const LinearPiece& p : s.pieces)
        if (piece_contains(p, v)) return true;
    return false;
}

SemilinearSet normalize(const SemilinearSet& s, std::size_t piece_cap) {
    SemilinearSet out{s.dim, {}};
    std::deque<LinearPiece> work(s.pieces.begin(), s.pieces.end());
    while (!work.empty()) {
        LinearPiece p = std::move(work.front());
        work.pop_front();

        // A coordinate is deficient when periods touch it more than the base
        // allows: either q(z)=0 under a positive period, or Σp(z) > q(z).
        Vec sum = p.period_sum();
        int deficit = -1;
        for (std::size_t z = 0; z < s.dim; ++z) {
            if (sum[z] > p.base[z]) {
                deficit = static_cast<int>(z);
                break;
            }
        }
        if (deficit < 0) {
            out.pieces.push_back(std::move(p));
            continue;
        }
        std::size_t split = 0;
        while (p.periods[split][deficit] == 0) ++split;
        std::vector<Vec> without = p.periods;
        without.erase(without.begin() + static_cast<long>(split));
        work.emplace_back(p.base, std::move(without));
        work.emplace_back(add(p.base, p.periods[split]), p.periods);
        check_cap(out.pieces.size() + work.size(), piece_cap, "normalize");
    }
    dedupe_pieces(out.pieces);
    return out;
}

SemilinearSet consolidate(const SemilinearSet& s) {
    std::vector<LinearPiece> ps = s.pieces;
    auto subset = [](const std::vector<Vec>& a, const std::vector<Vec>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    auto normal = [](const LinearPiece& p) {
        Vec sum = p.period_sum();
        for (std::size_t z = 0; z < p.base.size(); ++z)
            if (sum[z] > p.base[z]) return false;
        return true;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < ps.size() && !changed; ++i) {
            for (std::size_t j = 0; j < ps.size() && !changed; ++j) {
                if (i == j) continue;
                if (subset(ps[j].periods, ps[i].periods) && piece_contains(ps[i], ps[j].base)) {
                    ps.erase(ps.begin() + static_cast<long>(j));
                    changed = true;
                    break;
                }
                for (const Vec& p : ps[j].periods) {
                    Vec lifted = add(ps[i].base, p);
                    if (lifted != ps[j].base) continue;
                    std::vector<Vec> rest = ps[j].periods;
                    rest.erase(std::find(rest.begin(), rest.end(), p));
                    if (rest != ps[i].periods) continue;
                    LinearPiece fused(ps[i].base, ps[j].periods);
                    if (!normal(fused)) continue;
                    ps[i] = std::move(fused);
                    ps.erase(ps.begin() + static_cast<long>(j));
                    changed = true;
                    break;
                }
            }
        }
    }
    dedupe_pieces(ps);
    return {s.dim, std::move(ps)};
}

std::string sl_dump(const SemilinearSet& s) {
    auto vec_text = [](const Vec& v) {
        std::string t;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) t += ',';
            t += std::to_string(v[i]);
        }
        return t;
    };
    std::string out;
    for (const LinearPiece& p : s.pieces) {
        out += "q=" + vec_text(p.base) + " P={";
        for (std::size_t i = 0; i < p.periods.size(); ++i) {
            if (i) out += ';';
            out += vec_text(p.periods[i]);
        }
        out += "}\n";
    }
    return out;
}

} // namespace graphlang
