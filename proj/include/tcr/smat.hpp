#ifndef TCR_SMAT_HPP
#define TCR_SMAT_HPP

#include <cstdint>
#include <vector>

#include "tcr/q64.hpp"

namespace tcr {

// Sparse rational matrix in triplet form. Entries with duplicate (row, col)
// are rejected at build time.
struct SparseMatrix {
    int64_t rows = 0;
    int64_t cols = 0;
    struct Entry {
        int64_t r, c;
        Q64 v;
    };
    std::vector<Entry> entries;

    void add(int64_t r, int64_t c, const Q64& v) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            fail(errc::internal, "sparse matrix index out of range");
        if (!v.is_zero()) entries.push_back({r, c, v});
    }

    // Column-major view: per-column vectors of (row, value).
    std::vector<std::vector<std::pair<int64_t, Q64>>> columns() const;

    // Stack matrices side by side (same row space).
    static SparseMatrix hstack(const std::vector<SparseMatrix>& blocks);
};

}  // namespace tcr

#endif
