#ifndef TCR_CHIRAL_HPP
#define TCR_CHIRAL_HPP

#include <map>
#include <optional>
#include <vector>

#include "tcr/quotient.hpp"

namespace tcr {

struct R1Space {
    int face_index = -1;
    int face_dim = 0;
    std::vector<int64_t> graded_dims;          // by level, starting at 0
    std::vector<std::vector<Vec>> rep_basis;   // representative interior points per level
    int64_t total = 0;
};

// Graded dimensions of R_1(theta, f): the image of the interior ideal of the
// face inside C[theta]/I_f. Degenerate restrictions raise errc::degenerate.
R1Space r1_dims(const GorensteinPair& pair, const Face& theta, const CoefficientFunction& f,
                int kmax, const RankConfig& cfg);

struct WTable {
    struct FaceEntry {
        int face_index;
        int dim;
        std::vector<int64_t> r1_f;  // graded dims on the theta side
        std::vector<int64_t> r1_g;  // graded dims on the dual side
        int64_t contribution;
    };
    std::vector<FaceEntry> faces;
    std::map<std::pair<int, int>, int64_t> bigraded;  // (a, b) -> dim
    int64_t total = 0;

    std::vector<int64_t> degree_aggregate() const;  // dims by a+b
};

WTable w_table(const GorensteinPair& pair, const CoefficientFunction& f,
               const CoefficientFunction& g, const RankConfig& cfg);

// Diagonal-ring data for the quintic: the field t^k corresponds to the
// interior point (k+1) n0, so C[t]/t^4 amounts to the classes of [k n0]
// being alive for k = 1..4 and [5 n0] falling into the ideal.
struct DiagonalRingReport {
    std::vector<bool> power_nonzero;      // [k n0] classes for k = 1..4
    bool top_power_vanishes = false;      // [5 n0] lies in I_g
    std::string discriminant_str;         // 1 + g0^5 / (5^5 g1..g5), exact
    int discriminant_sign = 0;
    bool nondegenerate = false;
    bool ring_is_truncated_polynomial = false;
};

// The quintic diagonal-ring verification: powers of [n0] in R_1(K*, g).
DiagonalRingReport quintic_diagonal_ring(const GorensteinPair& pair, const CoefficientFunction& g,
                                         const RankConfig& cfg);

}  // namespace tcr

#endif
