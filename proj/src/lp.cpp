#include "tcr/lp.hpp"

#include <algorithm>

namespace tcr {

namespace {

// Dense exact simplex on the tableau [A | b], equality form, x >= 0.
// Phase I uses artificial variables; phase II minimizes the supplied
// lexicographic objective. Bland's rule throughout, so termination is
// guaranteed without any genericity assumption.
struct Tableau {
    QMat a;               // m x n
    QVec b;               // m
    std::vector<int> basis;  // m basic columns

    void pivot(size_t row, size_t col) {
        Q64 inv = Q64(1) / a[row][col];
        size_t n = a[row].size();
        for (size_t j = 0; j < n; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Q64 f = a[r][col];
            for (size_t j = 0; j < n; ++j) a[r][j] -= f * a[row][j];
            b[r] -= f * b[row];
        }
        basis[row] = (int)col;
    }

    // Minimizes sum over `cost` (LexVals); returns when no improving column.
    void run(const std::vector<LexVal>& cost, size_t ncols) {
        size_t m = a.size();
        size_t k = cost.empty() ? 0 : cost[0].parts.size();
        while (true) {
            // Reduced costs: c_j - c_B . A_j (A in basis-reduced form).
            int enter = -1;
            for (size_t j = 0; j < ncols; ++j) {
                bool basic = false;
                for (size_t r = 0; r < m; ++r)
                    if (basis[r] == (int)j) basic = true;
                if (basic) continue;
                LexVal red = cost[j];
                for (size_t r = 0; r < m; ++r) {
                    if (a[r][j].is_zero()) continue;
                    red = red - a[r][j] * cost[basis[r]];
                }
                (void)k;
                if (red.sign() < 0) {
                    enter = (int)j;
                    break;  // Bland: lowest improving index
                }
            }
            if (enter < 0) return;
            // Ratio test, Bland tie-break on basic variable index.
            int leave = -1;
            Q64 best;
            for (size_t r = 0; r < m; ++r) {
                if (a[r][enter].sign() <= 0) continue;
                Q64 ratio = b[r] / a[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    best = ratio;
                    leave = (int)r;
                }
            }
            if (leave < 0) fail(errc::internal, "unbounded LP in exact simplex");
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult solve_lp(const QMat& a_in, const QVec& b_in, const std::vector<LexVal>& obj) {
    size_t m = a_in.size();
    size_t n = m ? a_in[0].size() : obj.size();
    size_t klex = obj.empty() ? 1 : obj[0].parts.size();

    Tableau t;
    t.a = a_in;
    t.b = b_in;
    // Normalize rows to b >= 0, append identity of artificials.
    for (size_t r = 0; r < m; ++r) {
        if (t.b[r].sign() < 0) {
            t.b[r] = -t.b[r];
            for (auto& v : t.a[r]) v = -v;
        }
    }
    for (size_t r = 0; r < m; ++r) {
        for (size_t j = 0; j < m; ++j) t.a[r].push_back(Q64(j == r ? 1 : 0));
        t.basis.push_back((int)(n + r));
    }

    // Phase I: minimize the sum of artificials.
    std::vector<LexVal> phase1(n + m, LexVal::zeros(1));
    for (size_t j = n; j < n + m; ++j) phase1[j] = LexVal{QVec{Q64(1)}};
    t.run(phase1, n + m);

    LexVal p1val = LexVal::zeros(1);
    for (size_t r = 0; r < m; ++r)
        if (t.basis[r] >= (int)n) p1val = p1val + LexVal{QVec{t.b[r]}};
    LpResult res;
    if (p1val.sign() != 0) {
        res.feasible = false;
        return res;
    }
    // Drive remaining artificials out of the basis where possible.
    for (size_t r = 0; r < m; ++r) {
        if (t.basis[r] < (int)n) continue;
        size_t piv = n;
        for (size_t j = 0; j < n; ++j)
            if (!t.a[r][j].is_zero()) {
                piv = j;
                break;
            }
        if (piv < n) t.pivot(r, piv);
        // else: redundant row, harmless.
    }

    if (!obj.empty()) {
        std::vector<LexVal> phase2 = obj;
        // Artificial columns stay priced out with a huge-lex cost by simply
        // never letting them enter: zero their columns.
        for (size_t r = 0; r < m; ++r)
            for (size_t j = n; j < n + m; ++j) t.a[r][j] = Q64(0);
        for (size_t j = 0; j < m; ++j) phase2.push_back(LexVal::zeros(klex));
        t.run(phase2, n);
    }

    res.feasible = true;
    res.x.assign(n, Q64(0));
    for (size_t r = 0; r < m; ++r)
        if (t.basis[r] >= 0 && t.basis[r] < (int)n) res.x[t.basis[r]] = t.b[r];
    res.objective = LexVal::zeros(klex);
    if (!obj.empty())
        for (size_t j = 0; j < n; ++j)
            if (!res.x[j].is_zero()) res.objective = res.objective + res.x[j] * obj[j];
    res.basis = t.basis;
    return res;
}

bool in_convex_hull(const std::vector<Vec>& pts, const Vec& p) {
    if (pts.empty()) return false;
    size_t d = p.size();
    QMat a(d + 1, QVec(pts.size(), Q64(0)));
    QVec b(d + 1, Q64(0));
    for (size_t j = 0; j < pts.size(); ++j) {
        for (size_t i = 0; i < d; ++i) a[i][j] = Q64(pts[j][i]);
        a[d][j] = Q64(1);
    }
    for (size_t i = 0; i < d; ++i) b[i] = Q64(p[i]);
    b[d] = Q64(1);
    return solve_lp(a, b, {}).feasible;
}

}  // namespace tcr
