#ifndef TCR_CONE_HPP
#define TCR_CONE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "tcr/vec.hpp"

namespace tcr {

struct Limits {
    int max_hull_vertices = 14;   // brute-force facet search bound
    int max_face_rays = 12;       // face-lattice enumeration bound
    int64_t max_box_scan = 80'000'000;  // lattice-point scan budget
};

struct Polytope {
    std::vector<Vec> vertices;  // extreme points, lex sorted
    int dim = -1;

    size_t ambient() const { return vertices.empty() ? 0 : vertices[0].size(); }
};

// Drops non-extreme points, orders vertices lexicographically.
Polytope make_polytope(const std::vector<Vec>& rows);

// {y : x.y >= -1 for all x in P}; error if P is not reflexive.
Polytope polar_dual(const Polytope& p, const Limits& lim = {});

// Parse/serialize the polytope text format: "dim d" then one vertex per line.
Polytope read_polytope(const std::string& text);
std::string write_polytope(const Polytope& p);

// A face of K (or of K*), identified by the set of ray indices it contains.
struct Face {
    int side = 0;          // 0: face of K, 1: face of K*
    std::vector<int> gens; // sorted ray indices of the parent cone
    int dim = 0;
    int index = -1;        // position in the face lattice
    int dual_index = -1;   // position in the other side's face lattice
};

// Dual pair of reflexive Gorenstein cones with cached combinatorics.
// A pair is built either from a reflexive polytope (height-1 embedding,
// deg* = last coordinate functional), or from two explicit ray systems.
class GorensteinPair {
  public:
    static GorensteinPair from_polytope(const Polytope& delta, const Limits& lim = {});
    static GorensteinPair from_cones(std::vector<Vec> rays_k, std::vector<Vec> rays_kstar,
                                     const Limits& lim = {});
    // Block direct sum (used for index arithmetic tests).
    static GorensteinPair direct_sum(const GorensteinPair& a, const GorensteinPair& b);

    int rank() const { return rank_; }
    int index() const { return (int)dot(deg_, deg_star_); }
    const Vec& deg() const { return deg_; }
    const Vec& deg_star() const { return deg_star_; }
    const std::vector<Vec>& rays(int side) const { return side == 0 ? rays_k_ : rays_kstar_; }

    // Face lattices (computed on first use).
    const std::vector<Face>& faces(int side) const;
    const Face& full_face(int side) const;
    const Face& zero_face(int side) const;
    const Face& dual_face(const Face& f) const;
    const Face* find_face(int side, const std::vector<int>& gens) const;

    // Lattice points of cone(face) at pairing `k` with the side's degree
    // functional, lexicographically ordered; memoized.
    const std::vector<Vec>& points(const Face& f, int k) const;
    const std::vector<Vec>& points(int side, int k) const;  // full cone
    std::vector<Vec> interior_points(const Face& f, int k) const;

    int64_t point_index(const Face& f, int k, const Vec& v) const;  // -1 if absent
    bool in_cone(int side, const Vec& v) const;
    int level(int side, const Vec& v) const;  // pairing with the degree functional

    // Ehrhart data of a face: h*-coefficients (index 0..dim) and its degree.
    const std::vector<int64_t>& hstar(const Face& f) const;
    int hstar_degree(const Face& f) const;
    int64_t normalized_volume(const Face& f) const;

    // True if every point of cone(face) at levels 2..upto is a sum of a
    // level-1 and a lower-level point (degree-one generation check).
    bool generated_in_degree_one(const Face& f, int upto) const;

    GorensteinPair swapped() const;  // exchange the two sides

    const Limits& limits() const { return lim_; }

  private:
    GorensteinPair() = default;
    void init();

    int rank_ = 0;
    std::vector<Vec> rays_k_, rays_kstar_;
    Vec deg_, deg_star_;
    Limits lim_;

    // Derived combinatorics, shared between copies of the pair.
    struct Cache {
        std::mutex mu;
        std::vector<Face> faces[2];
        std::map<std::pair<std::vector<int>, int>, std::vector<Vec>> pts[2];
        std::map<std::pair<std::vector<int>, int>,
                 std::unordered_map<Vec, int64_t, VecHash>> pt_index[2];
        std::map<std::vector<int>, std::vector<int64_t>> hstar[2];
    };
    std::shared_ptr<Cache> cache_;

    void build_faces(int side) const;
};

// Solves for deg/deg* on explicit cones and returns (deg, deg*, index);
// errors when no integral Gorenstein structure exists or the cones are not
// mutually dual.
struct GorensteinData {
    Vec deg, deg_star;
    int index;
};
GorensteinData check_reflexive_gorenstein(const std::vector<Vec>& rays_k,
                                          const std::vector<Vec>& rays_kstar,
                                          const Limits& lim = {});

// Primitive ray generators of the dual cone {y : x.y >= 0 on K}, brute force
// over (rank-1)-subsets; used for duality verification and standalone cones.
std::vector<Vec> dual_cone_rays(const std::vector<Vec>& rays, const Limits& lim = {});

}  // namespace tcr

#endif
