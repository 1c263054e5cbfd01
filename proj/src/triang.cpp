#include "tcr/triang.hpp"

#include <algorithm>

#include "tcr/qlin.hpp"

namespace tcr {

Triangulation::Triangulation(std::vector<Vec> points, std::map<Vec, Q64> heights)
    : points_(std::move(points)), heights_(std::move(heights)) {
    if (points_.empty()) fail(errc::validation, "triangulation: empty point set");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    rank_ = (int)points_[0].size();
    for (const auto& p : points_)
        if (!heights_.count(p))
            fail(errc::validation, "triangulation: missing height for " + vec_str(p));
}

const Q64& Triangulation::height(const Vec& p) const {
    auto it = heights_.find(p);
    if (it == heights_.end())
        fail(errc::validation, "triangulation: point not in configuration");
    return it->second;
}

LpResult Triangulation::solve_at(const Vec& x) const {
    // min sum lambda_i h_i  s.t.  sum lambda_i p_i = x, lambda >= 0.
    size_t n = points_.size();
    QMat a(rank_, QVec(n, Q64(0)));
    QVec b(rank_, Q64(0));
    for (size_t j = 0; j < n; ++j)
        for (int i = 0; i < rank_; ++i) a[i][j] = Q64(points_[j][i]);
    for (int i = 0; i < rank_; ++i) b[i] = Q64(x[i]);
    std::vector<LexVal> obj(n);
    for (size_t j = 0; j < n; ++j) obj[j] = LexVal{QVec{heights_.at(points_[j])}};
    return solve_lp(a, b, obj);
}

Q64 Triangulation::hull_value(const Vec& x) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = hull_memo_.find(x);
        if (it != hull_memo_.end()) return it->second;
    }
    LpResult r = solve_at(x);
    if (!r.feasible)
        fail(errc::validation, "hull_value: point outside the cone of the configuration");
    Q64 v = r.objective.parts[0];
    std::lock_guard<std::mutex> lock(mu_);
    hull_memo_[x] = v;
    return v;
}

bool Triangulation::same_cone(const Vec& x, const Vec& y) const {
    return hull_value(add(x, y)) == hull_value(x) + hull_value(y);
}

std::vector<int> Triangulation::cell_of(const Vec& x) const {
    // Tight set of the supporting functional: points whose height is attained
    // by the hull function, i.e. p with hull(x + p) = hull(x) + h(p).
    std::vector<int> out;
    for (size_t j = 0; j < points_.size(); ++j)
        if (hull_value(add(x, points_[j])) == hull_value(x) + heights_.at(points_[j]))
            out.push_back((int)j);
    return out;
}

const std::vector<std::vector<int>>& Triangulation::maximal_cells() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (cells_built_) return cells_;
    size_t n = points_.size();
    size_t k = (size_t)rank_;
    double total = 1;
    for (size_t i = 0; i < k; ++i) total *= (double)(n - i) / (i + 1);
    if (total > 200000)
        fail(errc::budget, "maximal_cells: configuration too large for brute-force listing");
    if (n < k) fail(errc::validation, "maximal_cells: too few points");

    // Lex-perturbed heights: component 0 is h, component 1+i is [point == i].
    size_t klex = 1 + n;
    std::vector<int> sel(k);
    for (size_t i = 0; i < k; ++i) sel[i] = (int)i;
    auto advance = [&]() {
        int i = (int)k - 1;
        while (i >= 0 && sel[i] == (int)(n - k + i)) --i;
        if (i < 0) return false;
        ++sel[i];
        for (size_t j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
        return true;
    };
    std::vector<std::vector<int>> cells;
    do {
        // Solve w . p_sel[i] = hhat_sel[i] per lex component; needs sel to be
        // linearly independent as cone generators.
        QMat m;
        for (size_t i = 0; i < k; ++i) {
            QVec row;
            for (int c = 0; c < rank_; ++c) row.push_back(Q64(points_[sel[i]][c]));
            m.push_back(std::move(row));
        }
        if (qrank(m) != (int)k) continue;
        // w is one rational functional per lex slot.
        std::vector<QVec> w(klex);
        bool ok = true;
        for (size_t slot = 0; slot < klex && ok; ++slot) {
            QVec rhs(k, Q64(0));
            for (size_t i = 0; i < k; ++i) {
                if (slot == 0)
                    rhs[i] = heights_.at(points_[sel[i]]);
                else
                    rhs[i] = Q64(slot - 1 == (size_t)sel[i] ? 1 : 0);
            }
            auto sol = qsolve(m, rhs);
            if (!sol) ok = false;
            else w[slot] = *sol;
        }
        if (!ok) continue;
        bool lower = true;
        for (size_t q = 0; q < n && lower; ++q) {
            if (std::find(sel.begin(), sel.end(), (int)q) != sel.end()) continue;
            // diff = hhat_q - w . p_q must be lex-positive.
            int sign = 0;
            for (size_t slot = 0; slot < klex && sign == 0; ++slot) {
                Q64 wq(0);
                for (int c = 0; c < rank_; ++c) wq += w[slot][c] * Q64(points_[q][c]);
                Q64 hq = slot == 0 ? heights_.at(points_[q]) : Q64(slot - 1 == q ? 1 : 0);
                sign = (hq - wq).sign();
            }
            if (sign <= 0) lower = false;
        }
        if (lower) cells.push_back(std::vector<int>(sel.begin(), sel.end()));
    } while (advance());
    cells_ = std::move(cells);
    cells_built_ = true;
    return cells_;
}

void Triangulation::validate() const {
    const auto& cells = maximal_cells();
    if (cells.empty()) fail(errc::internal, "triangulation: no maximal cells");
    // Exact cover: simplex volumes sum to the configuration's volume, which
    // equals the number of lattice level-1 ... we compare against the hull
    // volume computed from the full point set via its own maximal cells of a
    // trivial (zero) height function when heights are generic. Instead we use
    // the determinant sum against the zero-height fan of the same points.
    auto det_of = [&](const std::vector<int>& cell) {
        QMat m;
        for (int i : cell) {
            QVec row;
            for (int c = 0; c < rank_; ++c) row.push_back(Q64(points_[i][c]));
            m.push_back(std::move(row));
        }
        // integer determinant via fraction-free expansion on Q64
        // (k is small here).
        size_t k = cell.size();
        Q64 det(1);
        for (size_t col = 0; col < k; ++col) {
            size_t piv = col;
            while (piv < k && m[piv][col].is_zero()) ++piv;
            if (piv == k) return Q64(0);
            if (piv != col) {
                std::swap(m[piv], m[col]);
                det = -det;
            }
            det *= m[col][col];
            Q64 inv = Q64(1) / m[col][col];
            for (size_t r = col + 1; r < k; ++r) {
                Q64 f = m[r][col] * inv;
                if (f.is_zero()) continue;
                for (size_t c2 = col; c2 < k; ++c2) m[r][c2] -= f * m[col][c2];
            }
        }
        if (det.sign() < 0) det = -det;
        return det;
    };
    Q64 total(0);
    for (const auto& c : cells) total += det_of(c);
    // Volume of the whole configuration: triangulate with the zero height
    // (single cell = the hull; its cells via any generic heights). We use the
    // lattice-point count identity instead: the normalized volume equals the
    // h*-sum, which the caller checks; here we only verify agreement between
    // the cell sum and the hull volume computed from a fixed reference
    // triangulation (heights = 0 perturbed lexicographically).
    std::map<Vec, Q64> zero;
    for (const auto& p : points_) zero[p] = Q64(0);
    if (heights_ != zero) {
        Triangulation ref(points_, zero);
        Q64 ref_total(0);
        for (const auto& c : ref.maximal_cells()) {
            QMat m;
            (void)m;
            ref_total += det_of(c);
        }
        if (!(total == ref_total)) fail(errc::internal, "triangulation cells do not cover");
    }
}

uint64_t Triangulation::content_hash() const {
    uint64_t h = 0x7472696175ull;
    for (const auto& p : points_) {
        h = hash_combine(h, hash_vec(p));
        const Q64& q = heights_.at(p);
        h = hash_combine(h, (uint64_t)q.num);
        h = hash_combine(h, (uint64_t)q.den);
    }
    return h;
}

std::map<Vec, Q64> vertex_pull_heights(const std::vector<Vec>& points, const Vec& pulled,
                                       uint64_t seed) {
    std::map<Vec, Q64> h;
    bool found = false;
    for (const auto& p : points) {
        if (p == pulled) {
            h[p] = Q64(0);
            found = true;
        } else {
            // 1 + tiny seeded jitter, exact rationals
            int64_t jitter = (int64_t)(splitmix64(seed ^ hash_vec(p)) % 65536);
            h[p] = Q64(1) + Q64(jitter, 65536 * 1024);
        }
    }
    if (!found) fail(errc::validation, "vertex_pull_heights: pulled point not in configuration");
    return h;
}

std::map<Vec, Q64> seeded_heights(const std::vector<Vec>& points, uint64_t seed) {
    std::map<Vec, Q64> h;
    for (const auto& p : points)
        h[p] = Q64((int64_t)(splitmix64(seed ^ hash_vec(p)) % 65536));
    return h;
}

}  // namespace tcr
