#ifndef TCR_QUOTIENT_HPP
#define TCR_QUOTIENT_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "tcr/coeffs.hpp"
#include "tcr/cone.hpp"
#include "tcr/rank.hpp"
#include "tcr/smat.hpp"
#include "tcr/triang.hpp"

namespace tcr {

struct RankConfig {
    RankMode mode = RankMode::modular;
    uint64_t seed = 1;
};

// Lattice functionals on span(theta): vectors of N whose restrictions form a
// basis of Hom(span(theta) cap M, Z), computed from a Hermite basis of the
// saturated span. For the full cone this is the standard basis of N.
std::vector<Vec> face_functionals(const GorensteinPair& pair, const Face& face);

// z_{n_i} restricted to C[theta], for the face functionals above.
std::vector<GradedElement> face_z_elements(const GorensteinPair& pair, const Face& face,
                                           const CoefficientFunction& f);

// Matrix of multiplication by a degree-1 element from the degree-k to the
// degree-(k+1) point basis of the face. With `phi`, entries whose two factors
// do not share a cell of the fan are dropped (partial semigroup product).
SparseMatrix multiplication_matrix(const GorensteinPair& pair, const Face& face,
                                   const GradedElement& e, int k,
                                   const Triangulation* phi = nullptr);

// Degree-by-degree echelon of the ideal (z_1, ..., z_t) C[theta] modulo one
// prime. Rows are indexed by the lex position of the degree-k points.
class FaceQuotient {
  public:
    FaceQuotient(const GorensteinPair& pair, const Face& face, const CoefficientFunction& f,
                 uint64_t prime, const Triangulation* phi = nullptr);

    int64_t ideal_rank(int k);
    int64_t quotient_dim(int k);
    // Does the monomial [pt] lie in the span of the degree-k ideal piece
    // (mod p)? Must not be called after r1_piece(k).
    bool in_ideal_span(int k, const Vec& pt);

    struct R1Piece {
        int64_t dim = 0;
        std::vector<Vec> reps;  // interior points whose classes form a basis
    };
    const R1Piece& r1_piece(int k);

    uint64_t prime() const { return prime_; }

  private:
    ModEchelon& echelon(int k);

    const GorensteinPair& pair_;
    Face face_;
    CoefficientFunction f_;
    std::vector<GradedElement> z_;
    uint64_t prime_;
    const Triangulation* phi_;
    std::map<int, std::unique_ptr<ModEchelon>> ech_;
    std::map<int, int64_t> ideal_rank_;
    std::map<int, R1Piece> r1_;
};

// Graded dimensions of C[theta]/I_f for degrees 0..kmax. In modular mode a
// single-prime result is accepted whenever it matches the h* lower bound
// (dims >= h* holds for every f by semicontinuity, and a modular rank never
// exceeds the rational rank); otherwise the 3-of-3 prime protocol applies
// with escalation to 5 and an exact fallback.
std::vector<int64_t> quotient_graded_dims(const GorensteinPair& pair, const Face& face,
                                          const CoefficientFunction& f, int kmax,
                                          const RankConfig& cfg,
                                          const Triangulation* phi = nullptr);

// Finite-dimensionality probe: the quotient must vanish at the two degrees
// past the h*-degree bound. Vanishing is a surjectivity statement, so a
// single full-rank prime certifies it; when the cone is generated in degree
// one, vanishing propagates upward and the second degree is implied.
bool is_nondegenerate(const GorensteinPair& pair, const Face& face, const CoefficientFunction& f,
                      const RankConfig& cfg, const Triangulation* phi = nullptr);

bool is_nondegenerate(const GorensteinPair& pair, int side, const CoefficientFunction& f,
                      const RankConfig& cfg);

}  // namespace tcr

#endif
