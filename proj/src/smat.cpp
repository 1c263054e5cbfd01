#include "tcr/smat.hpp"

#include <algorithm>

namespace tcr {

std::vector<std::vector<std::pair<int64_t, Q64>>> SparseMatrix::columns() const {
    std::vector<std::vector<std::pair<int64_t, Q64>>> cols_v((size_t)cols);
    for (const auto& e : entries) cols_v[e.c].emplace_back(e.r, e.v);
    for (auto& c : cols_v) {
        std::sort(c.begin(), c.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t i = 1; i < c.size(); ++i)
            if (c[i].first == c[i - 1].first)
                fail(errc::internal, "sparse matrix: duplicate entry");
    }
    return cols_v;
}

SparseMatrix SparseMatrix::hstack(const std::vector<SparseMatrix>& blocks) {
    SparseMatrix out;
    if (blocks.empty()) return out;
    out.rows = blocks[0].rows;
    for (const auto& b : blocks) {
        if (b.rows != out.rows) fail(errc::internal, "hstack: row mismatch");
        for (const auto& e : b.entries) out.entries.push_back({e.r, e.c + out.cols, e.v});
        out.cols += b.cols;
    }
    return out;
}

}  // namespace tcr
