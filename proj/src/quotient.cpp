#include "tcr/quotient.hpp"

#include <algorithm>

#include "tcr/qlin.hpp"

namespace tcr {

std::vector<Vec> face_functionals(const GorensteinPair& pair, const Face& face) {
    int rank = pair.rank();
    if (face.dim == 0) return {};
    if (face.dim == rank) {
        std::vector<Vec> out;
        for (int i = 0; i < rank; ++i) {
            Vec e = zero_vec(rank);
            e[i] = 1;
            out.push_back(std::move(e));
        }
        return out;
    }
    const auto& rays = pair.rays(face.side);
    std::vector<Vec> gens;
    for (int i : face.gens) gens.push_back(rays[i]);
    // theta-perp in the dual lattice, then the saturated span lattice.
    std::vector<Vec> perp = int_kernel(gens);
    std::vector<Vec> span_basis = int_kernel(perp);
    if ((int)span_basis.size() != face.dim)
        fail(errc::internal, "face_functionals: span basis rank mismatch");
    std::vector<Vec> out;
    for (int j = 0; j < face.dim; ++j) {
        Vec e = zero_vec(face.dim);
        e[j] = 1;
        auto n = int_solve(span_basis, e);
        if (!n) fail(errc::internal, "face_functionals: dual basis solve failed");
        out.push_back(*n);
    }
    return out;
}

std::vector<GradedElement> face_z_elements(const GorensteinPair& pair, const Face& face,
                                           const CoefficientFunction& f) {
    const auto& support = pair.points(face, 1);
    std::vector<GradedElement> out;
    for (const auto& n : face_functionals(pair, face)) {
        GradedElement z;
        z.degree = 1;
        for (const auto& m : support) {
            Q64 c = f.value(m) * Q64(dot(m, n));
            if (!c.is_zero()) z.terms[m] = c;
        }
        out.push_back(std::move(z));
    }
    return out;
}

SparseMatrix multiplication_matrix(const GorensteinPair& pair, const Face& face,
                                   const GradedElement& e, int k, const Triangulation* phi) {
    if (e.degree != 1) fail(errc::validation, "multiplication_matrix: element must have degree 1");
    const auto& src = pair.points(face, k);
    const auto& dst = pair.points(face, k + 1);
    SparseMatrix m;
    m.rows = (int64_t)dst.size();
    m.cols = (int64_t)src.size();
    for (int64_t c = 0; c < (int64_t)src.size(); ++c) {
        for (const auto& [t, coef] : e.terms) {
            if (phi && !phi->same_cone(t, src[c])) continue;
            int64_t r = pair.point_index(face, k + 1, add(t, src[c]));
            if (r < 0) fail(errc::internal, "multiplication_matrix: product point missing");
            m.add(r, c, coef);
        }
    }
    return m;
}

FaceQuotient::FaceQuotient(const GorensteinPair& pair, const Face& face,
                           const CoefficientFunction& f, uint64_t prime, const Triangulation* phi)
    : pair_(pair), face_(face), f_(f), prime_(prime), phi_(phi) {
    z_ = face_z_elements(pair, face, f);
}

ModEchelon& FaceQuotient::echelon(int k) {
    auto it = ech_.find(k);
    if (it != ech_.end()) return *it->second;
    const auto& dst = pair_.points(face_, k);
    auto ech = std::make_unique<ModEchelon>(prime_, (int64_t)dst.size());
    if (k >= 1) {
        const auto& src = pair_.points(face_, k - 1);
        // Pre-reduce the z coefficients once.
        std::vector<std::vector<std::pair<Vec, uint64_t>>> zmod;
        for (const auto& z : z_) {
            std::vector<std::pair<Vec, uint64_t>> zm;
            for (const auto& [t, coef] : z.terms) {
                uint64_t v = q64_mod(coef, prime_);
                if (v) zm.emplace_back(t, v);
            }
            zmod.push_back(std::move(zm));
        }
        // Staircase-friendly insertion order. Points are lex sorted and the
        // echelon pivots on the largest row, so the lead term of the column
        // for (m, z) is m + (lex-max support point of z). Feeding one z with
        // a nonzero coefficient at the lex-last level-1 point first, with m
        // lex descending, creates 10k+ pivot columns with no reduction work
        // at all and keeps them sparse forever.
        std::vector<int> zorder(zmod.size());
        for (size_t i = 0; i < zmod.size(); ++i) zorder[i] = (int)i;
        const auto& level1 = pair_.points(face_, 1);
        if (!level1.empty() && !phi_) {
            const Vec& lexmax = level1.back();
            for (size_t i = 0; i < zmod.size(); ++i) {
                bool has = false;
                for (const auto& [t, v] : zmod[i])
                    if (t == lexmax) has = true;
                if (has) {
                    std::swap(zorder[0], zorder[i]);
                    break;
                }
            }
        }
        std::vector<std::pair<int64_t, uint64_t>> col;
        bool full = false;
        for (int zi : zorder) {
            for (auto it = src.rbegin(); it != src.rend() && !full; ++it) {
                const Vec& m = *it;
                col.clear();
                for (const auto& [t, v] : zmod[zi]) {
                    if (phi_ && !phi_->same_cone(t, m)) continue;
                    int64_t r = pair_.point_index(face_, k, add(t, m));
                    if (r < 0) fail(errc::internal, "ideal echelon: product point missing");
                    col.emplace_back(r, v);
                }
                ech->add_column(col);
                if (ech->rank() == (int64_t)dst.size()) full = true;
            }
            if (full) break;
        }
    }
    ideal_rank_[k] = ech->rank();
    auto& slot = ech_[k];
    slot = std::move(ech);
    return *slot;
}

int64_t FaceQuotient::ideal_rank(int k) {
    echelon(k);
    return ideal_rank_.at(k);
}

int64_t FaceQuotient::quotient_dim(int k) {
    return (int64_t)pair_.points(face_, k).size() - ideal_rank(k);
}

bool FaceQuotient::in_ideal_span(int k, const Vec& pt) {
    if (r1_.count(k)) fail(errc::internal, "in_ideal_span called after r1_piece");
    ModEchelon& e = echelon(k);
    int64_t r = pair_.point_index(face_, k, pt);
    if (r < 0) fail(errc::validation, "in_ideal_span: point not at this degree");
    return e.reduce({{r, 1}}).empty();
}

const FaceQuotient::R1Piece& FaceQuotient::r1_piece(int k) {
    auto it = r1_.find(k);
    if (it != r1_.end()) return it->second;
    ModEchelon& e = echelon(k);
    R1Piece piece;
    if (k == 0) {
        // Interior of a positive-dimensional face misses the origin.
        if (face_.dim == 0) {
            piece.dim = 1;
            piece.reps.push_back(zero_vec(pair_.rank()));
        }
    } else {
        auto interior = pair_.interior_points(face_, k);
        for (const auto& pt : interior) {
            int64_t r = pair_.point_index(face_, k, pt);
            if (e.add_column({{r, 1}})) {
                ++piece.dim;
                piece.reps.push_back(pt);
            }
        }
    }
    return r1_[k] = std::move(piece);
}

namespace {

// One-prime graded dims for degrees 0..kmax.
std::vector<int64_t> dims_one_prime(const GorensteinPair& pair, const Face& face,
                                    const CoefficientFunction& f, int kmax, uint64_t prime,
                                    const Triangulation* phi) {
    FaceQuotient q(pair, face, f, prime, phi);
    std::vector<int64_t> dims;
    for (int k = 0; k <= kmax; ++k) dims.push_back(q.quotient_dim(k));
    return dims;
}

SparseMatrix stacked_ideal_matrix(const GorensteinPair& pair, const Face& face,
                                  const CoefficientFunction& f, int k, const Triangulation* phi) {
    std::vector<SparseMatrix> blocks;
    for (const auto& z : face_z_elements(pair, face, f))
        blocks.push_back(multiplication_matrix(pair, face, z, k - 1, phi));
    if (blocks.empty()) {
        SparseMatrix m;
        m.rows = (int64_t)pair.points(face, k).size();
        m.cols = 0;
        return m;
    }
    return SparseMatrix::hstack(blocks);
}

}  // namespace

std::vector<int64_t> quotient_graded_dims(const GorensteinPair& pair, const Face& face,
                                          const CoefficientFunction& f, int kmax,
                                          const RankConfig& cfg, const Triangulation* phi) {
    if (kmax < 0) fail(errc::validation, "quotient_graded_dims: negative kmax");
    if (cfg.mode == RankMode::exact) {
        std::vector<int64_t> dims;
        for (int k = 0; k <= kmax; ++k) {
            if (k == 0) {
                dims.push_back(1);
                continue;
            }
            auto m = stacked_ideal_matrix(pair, face, f, k, phi);
            dims.push_back(m.rows - exact_rank(m));
        }
        return dims;
    }
    auto primes = seeded_primes(cfg.seed, 5);
    auto dims = dims_one_prime(pair, face, f, kmax, primes[0], phi);
    const auto& h = pair.hstar(face);
    auto certified = [&](int k) {
        // dims_p(k) >= dims_Q(k) >= h*_k; equality certifies the prime.
        return k < (int)h.size() && dims[k] == h[k];
    };
    std::vector<int> open;
    for (int k = 0; k <= kmax; ++k)
        if (!certified(k)) open.push_back(k);
    if (open.empty()) return dims;
    // 3-prime agreement on the uncertified degrees, escalating to 5.
    std::vector<std::vector<int64_t>> runs{dims};
    auto all_agree = [&](int k) {
        for (const auto& r : runs)
            if (r[k] != runs[0][k]) return false;
        return true;
    };
    for (int stage = 1; stage < 5; ++stage) {
        runs.push_back(dims_one_prime(pair, face, f, kmax, primes[stage], phi));
        if ((int)runs.size() == 3 || (int)runs.size() == 5) {
            bool agree = true;
            for (int k : open)
                if (!all_agree(k)) agree = false;
            if (agree) {
                for (int k : open) dims[k] = runs[0][k];
                return dims;
            }
            if (runs.size() == 5) break;
        }
    }
    // Persistent disagreement: certify the open degrees exactly.
    for (int k : open) {
        auto m = stacked_ideal_matrix(pair, face, f, k, phi);
        dims[k] = m.rows - exact_rank(m);
    }
    return dims;
}

namespace {

// dims(k) == 0 is surjectivity of the ideal onto degree k; one full-rank
// prime certifies it.
bool vanishes_at(const GorensteinPair& pair, const Face& face, const CoefficientFunction& f,
                 int k, const RankConfig& cfg, const Triangulation* phi) {
    auto primes = seeded_primes(cfg.seed, 3);
    if (cfg.mode == RankMode::exact) {
        auto m = stacked_ideal_matrix(pair, face, f, k, phi);
        return exact_rank(m) == m.rows;
    }
    for (uint64_t p : primes) {
        FaceQuotient q(pair, face, f, p, phi);
        if (q.quotient_dim(k) == 0) return true;
    }
    return false;
}

}  // namespace

bool is_nondegenerate(const GorensteinPair& pair, const Face& face, const CoefficientFunction& f,
                      const RankConfig& cfg, const Triangulation* phi) {
    if (face.dim == 0) return true;
    if (f.is_zero()) return false;
    int d = pair.hstar_degree(face);
    if (!vanishes_at(pair, face, f, d + 1, cfg, phi)) return false;
    if (pair.generated_in_degree_one(face, d + 2)) return true;
    return vanishes_at(pair, face, f, d + 2, cfg, phi);
}

bool is_nondegenerate(const GorensteinPair& pair, int side, const CoefficientFunction& f,
                      const RankConfig& cfg) {
    return is_nondegenerate(pair, pair.full_face(side), f, cfg, nullptr);
}

}  // namespace tcr
