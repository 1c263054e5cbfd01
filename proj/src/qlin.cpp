#include "tcr/qlin.hpp"

#include <algorithm>

namespace tcr {

int qrank(QMat a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    for (size_t c = 0; c < cols && (size_t)rank < rows; ++c) {
        size_t piv = rows;
        for (size_t r = rank; r < rows; ++r)
            if (!a[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        Q64 inv = Q64(1) / a[rank][c];
        for (size_t j = c; j < cols; ++j) a[rank][j] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == (size_t)rank || a[r][c].is_zero()) continue;
            Q64 f = a[r][c];
            for (size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::optional<QVec> qsolve(QMat a, QVec b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col;
    int rank = 0;
    for (size_t c = 0; c < cols && (size_t)rank < rows; ++c) {
        size_t piv = rows;
        for (size_t r = rank; r < rows; ++r)
            if (!a[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        std::swap(b[rank], b[piv]);
        Q64 inv = Q64(1) / a[rank][c];
        for (size_t j = c; j < cols; ++j) a[rank][j] *= inv;
        b[rank] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == (size_t)rank || a[r][c].is_zero()) continue;
            Q64 f = a[r][c];
            for (size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
            b[r] -= f * b[rank];
        }
        pivot_col.push_back((int)c);
        ++rank;
    }
    for (size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero()) return std::nullopt;
    QVec x(cols, Q64(0));
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

std::vector<QVec> qnullspace(QMat a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_of_col(cols, -1);
    int rank = 0;
    for (size_t c = 0; c < cols && (size_t)rank < rows; ++c) {
        size_t piv = rows;
        for (size_t r = rank; r < rows; ++r)
            if (!a[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        Q64 inv = Q64(1) / a[rank][c];
        for (size_t j = c; j < cols; ++j) a[rank][j] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == (size_t)rank || a[r][c].is_zero()) continue;
            Q64 f = a[r][c];
            for (size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
        }
        pivot_of_col[c] = rank;
        ++rank;
    }
    std::vector<QVec> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        QVec v(cols, Q64(0));
        v[c] = Q64(1);
        for (size_t j = 0; j < cols; ++j)
            if (pivot_of_col[j] >= 0) v[j] = -a[pivot_of_col[j]][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

int affine_dim(const std::vector<Vec>& pts) {
    if (pts.empty()) return -1;
    QMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        QVec row;
        for (size_t j = 0; j < pts[0].size(); ++j) row.push_back(Q64(pts[i][j] - pts[0][j]));
        diffs.push_back(std::move(row));
    }
    return diffs.empty() ? 0 : qrank(diffs);
}

// Column-style Hermite reduction: returns (H, U) with A*U = H, U unimodular,
// H in column echelon form. Entries are guarded against 64-bit overflow.
namespace {

struct Hermite {
    std::vector<Vec> h;  // rows x cols
    std::vector<Vec> u;  // cols x cols, columns transform
};

int64_t mul_add_checked(int64_t a, int64_t b, int64_t c, int64_t d) {
    // a*b + c*d
    __int128 v = (__int128)a * b + (__int128)c * d;
    return Q64::checked(v);
}

Hermite hermite_cols(std::vector<Vec> a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<Vec> u(cols, Vec(cols, 0));
    for (size_t i = 0; i < cols; ++i) u[i][i] = 1;

    auto col_op = [&](size_t j, size_t k, int64_t p, int64_t q, int64_t r, int64_t s) {
        // (col_j, col_k) <- (p*col_j + q*col_k, r*col_j + s*col_k)
        for (size_t i = 0; i < rows; ++i) {
            int64_t nj = mul_add_checked(p, a[i][j], q, a[i][k]);
            int64_t nk = mul_add_checked(r, a[i][j], s, a[i][k]);
            a[i][j] = nj;
            a[i][k] = nk;
        }
        for (size_t i = 0; i < cols; ++i) {
            int64_t nj = mul_add_checked(p, u[i][j], q, u[i][k]);
            int64_t nk = mul_add_checked(r, u[i][j], s, u[i][k]);
            u[i][j] = nj;
            u[i][k] = nk;
        }
    };

    size_t lead = 0;
    for (size_t r = 0; r < rows && lead < cols; ++r) {
        // Eliminate row r across columns lead..cols-1 down to one pivot.
        for (size_t j = lead + 1; j < cols; ++j) {
            while (a[r][j] != 0) {
                if (a[r][lead] == 0) {
                    col_op(lead, j, 0, 1, 1, 0);
                    continue;
                }
                int64_t q = a[r][j] / a[r][lead];
                col_op(lead, j, 1, 0, -q, 1);
                if (a[r][j] != 0) col_op(lead, j, 0, 1, 1, 0);
            }
        }
        if (a[r][lead] != 0) {
            if (a[r][lead] < 0) col_op(lead, lead, -1, 0, 0, -1);
            ++lead;
        }
    }
    return Hermite{std::move(a), std::move(u)};
}

}  // namespace

std::vector<Vec> int_kernel(const std::vector<Vec>& rows_a) {
    if (rows_a.empty()) return {};
    size_t cols = rows_a[0].size();
    Hermite he = hermite_cols(rows_a);
    std::vector<Vec> basis;
    for (size_t j = 0; j < cols; ++j) {
        bool zero = true;
        for (size_t i = 0; i < rows_a.size() && zero; ++i)
            if (he.h[i][j] != 0) zero = false;
        if (!zero) continue;
        Vec v(cols);
        for (size_t i = 0; i < cols; ++i) v[i] = he.u[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> int_solve(const std::vector<Vec>& rows_a, const Vec& b) {
    if (rows_a.empty()) return Vec{};
    size_t rows = rows_a.size();
    size_t cols = rows_a[0].size();
    Hermite he = hermite_cols(rows_a);
    // Forward substitution through the column echelon of H.
    Vec y(cols, 0);
    Vec resid = b;
    size_t j = 0;
    for (size_t r = 0; r < rows && j < cols; ++r) {
        if (he.h[r][j] == 0) continue;
        if (resid[r] % he.h[r][j] != 0) {
            // May still be solvable through later pivots only if this row is
            // unreachable; our echelon pivots are the first nonzero per row,
            // so nondivisibility here means no integer solution.
            return std::nullopt;
        }
        int64_t c = resid[r] / he.h[r][j];
        y[j] = c;
        for (size_t i = 0; i < rows; ++i)
            resid[i] = Q64::checked((__int128)resid[i] - (__int128)c * he.h[i][j]);
        ++j;
    }
    for (size_t i = 0; i < rows; ++i)
        if (resid[i] != 0) return std::nullopt;
    Vec x(cols, 0);
    for (size_t i = 0; i < cols; ++i) {
        __int128 s = 0;
        for (size_t k = 0; k < cols; ++k) s += (__int128)he.u[i][k] * y[k];
        x[i] = Q64::checked(s);
    }
    return x;
}

}  // namespace tcr
