#ifndef TCR_RANK_HPP
#define TCR_RANK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tcr/smat.hpp"

namespace tcr {

enum class RankMode { modular, exact };

RankMode parse_rank_mode(const std::string& s);

// Deterministic ~62-bit primes derived from a seed.
std::vector<uint64_t> seeded_primes(uint64_t seed, int count);
bool is_prime_u64(uint64_t n);

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p);
uint64_t invmod(uint64_t a, uint64_t p);
uint64_t q64_mod(const Q64& v, uint64_t p);

// Incremental column echelon over F_p. Columns are fed one at a time and
// reduced against the stored pivots; each new independent column contributes
// a pivot row. Pivot rows are chosen as the largest remaining row index, so
// callers control the staircase by their row numbering.
class ModEchelon {
  public:
    ModEchelon(uint64_t p, int64_t rows);

    // Returns true if the column increased the rank.
    bool add_column(const std::vector<std::pair<int64_t, uint64_t>>& col);
    bool add_column_q(const std::vector<std::pair<int64_t, Q64>>& col);

    int64_t rank() const { return (int64_t)cols_.size(); }
    const std::vector<int64_t>& pivot_rows() const { return pivot_rows_; }
    bool is_pivot_row(int64_t r) const { return pivot_of_row_[r] >= 0; }

    // Reduces `col` against the echelon without inserting; returns the
    // residual (empty iff col lies in the column span).
    std::vector<std::pair<int64_t, uint64_t>> reduce(
        const std::vector<std::pair<int64_t, uint64_t>>& col) const;

    uint64_t prime() const { return p_; }
    int64_t stored_nnz() const { return stored_nnz_; }

    uint64_t to_mod(const Q64& v) const;

  private:
    uint64_t p_;
    int64_t rows_;
    struct Col {
        int64_t piv;
        std::vector<std::pair<int64_t, uint64_t>> ent;  // includes (piv, 1)
    };
    std::vector<Col> cols_;
    std::vector<int64_t> pivot_rows_;
    std::vector<int32_t> pivot_of_row_;
    int64_t stored_nnz_ = 0;
    mutable std::vector<uint64_t> scratch_;
    mutable std::vector<int64_t> touched_;
};

struct RankStats {
    int primes_used = 0;
    bool escalated = false;
    bool fell_back_exact = false;
};

// Rank of a sparse rational matrix.
//  - modular: rank mod 3 seeded primes, escalating to 5; exact fallback on
//    persistent disagreement.
//  - exact: sparse elimination over arbitrary-precision rationals.
int64_t sparse_rank(const SparseMatrix& m, RankMode mode, uint64_t seed,
                    RankStats* stats = nullptr);

// Exact-rational elimination (certification path).
int64_t exact_rank(const SparseMatrix& m);

}  // namespace tcr

#endif
