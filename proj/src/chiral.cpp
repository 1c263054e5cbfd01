#include "tcr/chiral.hpp"

#include <algorithm>

namespace tcr {

namespace {

// Degenerate-restriction guard. For every f the quotient dimensions dominate
// the h* coefficients (rank semicontinuity), and modular dimensions dominate
// the rational ones, so a single-prime match with h* certifies regularity
// degree by degree. The vanishing degree D+1 is checked directly whenever its
// point count is within budget; beyond that the Hilbert match across
// 0..D plus the palindromic socle is the operational check.
constexpr int64_t kWindowPointBudget = 4000;

void check_restriction_nondegenerate(const GorensteinPair& pair, const Face& face,
                                     const CoefficientFunction& f,
                                     const std::vector<std::vector<int64_t>>& dims_per_prime,
                                     const RankConfig& cfg) {
    if (face.dim == 0) return;
    const auto& h = pair.hstar(face);
    int d = pair.hstar_degree(face);
    for (int k = 0; k <= d; ++k) {
        bool ok = false;
        for (const auto& dims : dims_per_prime)
            if (dims[k] == h[k]) ok = true;
        if (!ok)
            fail(errc::degenerate, "degenerate coefficient restriction on a face of dim " +
                                       std::to_string(face.dim) + " (Hilbert mismatch at degree " +
                                       std::to_string(k) + ")");
    }
    if ((int64_t)pair.points(face, d + 1).size() <= kWindowPointBudget) {
        bool vanish = false;
        for (uint64_t p : seeded_primes(cfg.seed, 3)) {
            FaceQuotient q(pair, face, f, p);
            if (q.quotient_dim(d + 1) == 0) {
                vanish = true;
                break;
            }
        }
        if (!vanish)
            fail(errc::degenerate,
                 "degenerate coefficient restriction (no vanishing past the h* degree)");
    }
}

}  // namespace

R1Space r1_dims(const GorensteinPair& pair, const Face& theta, const CoefficientFunction& f,
                int kmax, const RankConfig& cfg) {
    if (kmax < 0) kmax = pair.hstar_degree(theta);
    int d = pair.hstar_degree(theta);
    auto primes = seeded_primes(cfg.seed, 5);
    int nprimes = cfg.mode == RankMode::exact ? 1 : 3;

    std::vector<std::vector<int64_t>> dims_per_prime;
    std::vector<std::vector<int64_t>> r1_per_prime;
    std::vector<std::vector<std::vector<Vec>>> reps_per_prime;
    for (int pi = 0; pi < nprimes; ++pi) {
        FaceQuotient q(pair, theta, f, primes[pi]);
        std::vector<int64_t> dims, r1v;
        std::vector<std::vector<Vec>> reps;
        for (int k = 0; k <= std::min(kmax, d); ++k) {
            dims.push_back(q.quotient_dim(k));
            const auto& piece = q.r1_piece(k);
            r1v.push_back(piece.dim);
            reps.push_back(piece.reps);
        }
        dims_per_prime.push_back(std::move(dims));
        r1_per_prime.push_back(std::move(r1v));
        reps_per_prime.push_back(std::move(reps));
    }
    check_restriction_nondegenerate(pair, theta, f, dims_per_prime, cfg);
    for (int pi = 1; pi < nprimes; ++pi)
        if (r1_per_prime[pi] != r1_per_prime[0])
            fail(errc::internal, "R1 modular disagreement across primes");

    R1Space out;
    out.face_index = theta.index;
    out.face_dim = theta.dim;
    out.graded_dims = r1_per_prime[0];
    out.graded_dims.resize(kmax + 1, 0);
    out.rep_basis = reps_per_prime[0];
    out.rep_basis.resize(kmax + 1);
    for (int64_t v : out.graded_dims) out.total += v;
    return out;
}

std::vector<int64_t> WTable::degree_aggregate() const {
    int maxdeg = 0;
    for (const auto& [ab, v] : bigraded) maxdeg = std::max(maxdeg, ab.first + ab.second);
    std::vector<int64_t> agg(maxdeg + 1, 0);
    for (const auto& [ab, v] : bigraded) agg[ab.first + ab.second] += v;
    return agg;
}

WTable w_table(const GorensteinPair& pair, const CoefficientFunction& f,
               const CoefficientFunction& g, const RankConfig& cfg) {
    WTable table;
    // R1 on each side, memoized by face index.
    std::map<int, R1Space> side_f, side_g;
    auto r1_of = [&](const Face& face, int side) -> const R1Space& {
        auto& memo = side == 0 ? side_f : side_g;
        auto it = memo.find(face.index);
        if (it != memo.end()) return it->second;
        const CoefficientFunction& c = side == 0 ? f : g;
        R1Space r;
        try {
            r = r1_dims(pair, face, c, -1, cfg);
        } catch (const error& e) {
            if (e.kind() == errc::degenerate)
                fail(errc::degenerate,
                     std::string(e.what()) + " [face index " + std::to_string(face.index) +
                         ", side " + (side == 0 ? std::string("K") : std::string("K*")) + "]");
            throw;
        }
        return memo[face.index] = std::move(r);
    };

    for (const auto& theta : pair.faces(0)) {
        const Face& dual = pair.dual_face(theta);
        const R1Space& rf = r1_of(theta, 0);
        const R1Space& rg = r1_of(dual, 1);
        WTable::FaceEntry e;
        e.face_index = theta.index;
        e.dim = theta.dim;
        e.r1_f = rf.graded_dims;
        e.r1_g = rg.graded_dims;
        e.contribution = rf.total * rg.total;
        table.faces.push_back(std::move(e));
        for (size_t a = 0; a < rf.graded_dims.size(); ++a) {
            if (!rf.graded_dims[a]) continue;
            for (size_t b = 0; b < rg.graded_dims.size(); ++b) {
                if (!rg.graded_dims[b]) continue;
                table.bigraded[{(int)a, (int)b}] += rf.graded_dims[a] * rg.graded_dims[b];
            }
        }
        table.total += rf.total * rg.total;
    }
    return table;
}

// Defined in exact_rank.cpp (arbitrary-precision arithmetic lives there).
std::pair<std::string, int> quintic_discriminant(const Q64& g0, const std::vector<Q64>& gv);

DiagonalRingReport quintic_diagonal_ring(const GorensteinPair& pair, const CoefficientFunction& g,
                                         const RankConfig& cfg) {
    if (pair.rank() != 5 || pair.points(1, 1).size() != 6 || pair.rays(1).size() != 5)
        fail(errc::validation, "quintic_diagonal_ring: pair is not quintic-shaped");
    const Vec n0 = pair.deg_star();
    DiagonalRingReport rep;

    Q64 g0 = g.value(n0);
    std::vector<Q64> gv;
    for (const auto& r : pair.rays(1)) gv.push_back(g.value(r));
    auto [dstr, dsign] = quintic_discriminant(g0, gv);
    rep.discriminant_str = dstr;
    rep.discriminant_sign = dsign;

    rep.nondegenerate = is_nondegenerate(pair, 1, g, cfg);
    if (!rep.nondegenerate) return rep;

    const Face& full = pair.full_face(1);
    auto primes = seeded_primes(cfg.seed, 3);
    std::vector<std::vector<bool>> alive_per_prime;
    for (uint64_t p : primes) {
        FaceQuotient q(pair, full, g, p);
        std::vector<bool> alive;
        for (int k = 1; k <= 5; ++k) {
            Vec pt = scale(k, n0);
            alive.push_back(!q.in_ideal_span(k, pt));
        }
        alive_per_prime.push_back(std::move(alive));
    }
    for (const auto& a : alive_per_prime)
        if (a != alive_per_prime[0])
            fail(errc::internal, "diagonal ring: modular disagreement across primes");
    rep.power_nonzero.assign(alive_per_prime[0].begin(), alive_per_prime[0].begin() + 4);
    rep.top_power_vanishes = !alive_per_prime[0][4];
    rep.ring_is_truncated_polynomial = rep.power_nonzero[0] && rep.power_nonzero[1] &&
                                       rep.power_nonzero[2] && rep.power_nonzero[3] &&
                                       rep.top_power_vanishes;
    return rep;
}

}  // namespace tcr
