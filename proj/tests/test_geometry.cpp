#include <algorithm>
#include <set>

#include "doctest.h"
#include "tcr/cone.hpp"
#include "tcr/lp.hpp"
#include "tcr/presets.hpp"

using namespace tcr;

namespace {
int64_t binom(int64_t n, int64_t k) {
    if (k < 0 || k > n) return 0;
    int64_t r = 1;
    for (int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace

TEST_CASE("make_polytope basics") {
    Polytope simplex = quintic_delta_star();
    CHECK(simplex.vertices.size() == 5);
    CHECK(simplex.dim == 4);

    Polytope pt = make_polytope({{0, 0}});
    CHECK(pt.vertices.size() == 1);
    CHECK(pt.dim == 0);

    // Interior point is not a vertex.
    Polytope tri = make_polytope({{1, 0}, {0, 1}, {-1, -1}, {0, 0}});
    CHECK(tri.vertices.size() == 3);
    CHECK(tri.dim == 2);

    CHECK_THROWS_AS(make_polytope({{1, 0}, {0, 1, 2}}), error);
    CHECK_THROWS_AS(make_polytope({}), error);
}

TEST_CASE("polar duality") {
    Polytope dstar = quintic_delta_star();
    Polytope d = polar_dual(dstar);
    std::set<Vec> expect = {{4, -1, -1, -1}, {-1, 4, -1, -1}, {-1, -1, 4, -1},
                            {-1, -1, -1, 4}, {-1, -1, -1, -1}};
    CHECK(std::set<Vec>(d.vertices.begin(), d.vertices.end()) == expect);

    // Involution.
    Polytope dd = polar_dual(d);
    CHECK(dd.vertices == dstar.vertices);

    // Hand-checked triangle dual.
    Polytope t = make_polytope({{1, 0}, {0, 1}, {-1, -1}});
    Polytope tdual = polar_dual(t);
    std::set<Vec> texpect = {{2, -1}, {-1, 2}, {-1, -1}};
    CHECK(std::set<Vec>(tdual.vertices.begin(), tdual.vertices.end()) == texpect);

    // Non-reflexive: dual vertices would be half-integral.
    Polytope sq = make_polytope({{2, 0}, {0, 2}, {-2, 0}, {0, -2}});
    CHECK_THROWS_AS(polar_dual(sq), error);
    // Origin not interior.
    Polytope off = make_polytope({{1, 0}, {2, 0}, {1, 1}});
    CHECK_THROWS_AS(polar_dual(off), error);
}

TEST_CASE("gorenstein pair from quintic") {
    GorensteinPair p = quintic_pair();
    CHECK(p.rank() == 5);
    CHECK(p.index() == 1);
    CHECK(p.rays(0).size() == 5);
    CHECK(p.rays(1).size() == 5);
    // Every ray sits at level 1.
    for (const auto& g : p.rays(0)) CHECK(dot(g, p.deg_star()) == 1);
    for (const auto& h : p.rays(1)) CHECK(dot(p.deg(), h) == 1);
    // m_i . n_j = 5 delta_ij on the ray systems, m_i . deg* = 1.
    for (const auto& g : p.rays(0)) {
        int fives = 0, zeros = 0;
        for (const auto& h : p.rays(1)) {
            int64_t s = dot(g, h);
            if (s == 5) ++fives;
            if (s == 0) ++zeros;
        }
        CHECK(fives == 1);
        CHECK(zeros == 4);
    }
    // n0 = deg* is a lattice point of Delta* but not a ray.
    CHECK(p.level(1, p.deg_star()) == 1);
    CHECK(p.in_cone(1, p.deg_star()));
}

TEST_CASE("check_reflexive_gorenstein") {
    GorensteinPair p = quintic_pair();
    auto g = check_reflexive_gorenstein(p.rays(0), p.rays(1));
    CHECK(g.index == 1);
    CHECK(g.deg == p.deg());
    CHECK(g.deg_star == p.deg_star());

    // Direct sum doubles the index.
    GorensteinPair p2 = GorensteinPair::direct_sum(p, p);
    CHECK(p2.index() == 2);
    CHECK(p2.rank() == 10);

    // Cone over a non-reflexive square: no integral degree.
    std::vector<Vec> sq = {{2, 0, 1}, {0, 2, 1}, {-2, 0, 1}, {0, -2, 1}};
    auto sqdual = dual_cone_rays(sq);
    CHECK_THROWS_AS(check_reflexive_gorenstein(sq, sqdual), error);

    // Not dual: mismatched cones.
    CHECK_THROWS_AS(check_reflexive_gorenstein(p.rays(0), p.rays(0)), error);
}

TEST_CASE("face lattices") {
    GorensteinPair p = quintic_pair();
    CHECK(p.faces(0).size() == 32);
    CHECK(p.faces(1).size() == 32);

    GorensteinPair tri = elliptic_pair();
    CHECK(tri.faces(0).size() == 8);

    GorensteinPair sq = GorensteinPair::from_polytope(
        make_polytope({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
    CHECK(sq.faces(0).size() == 10);

    // dual_face is an inclusion-reversing involution with complementary dims.
    for (const auto& f : p.faces(0)) {
        const Face& fd = p.dual_face(f);
        CHECK(f.dim + fd.dim == p.rank());
        CHECK(p.dual_face(fd).index == f.index);
    }
    CHECK(p.dual_face(p.zero_face(0)).gens == p.full_face(1).gens);
    CHECK(p.dual_face(p.full_face(0)).dim == 0);

    // Rays of K dualize to 4-dimensional faces of K*.
    for (const auto& f : p.faces(0))
        if (f.dim == 1) CHECK(p.dual_face(f).gens.size() == 4);
}

TEST_CASE("lattice point enumeration") {
    GorensteinPair p = quintic_pair();
    // Ehrhart counts of the quintic simplex: C(5k+4, 4).
    for (int k = 1; k <= 4; ++k)
        CHECK((int64_t)p.points(0, k).size() == binom(5 * k + 4, 4));
    CHECK(p.points(1, 1).size() == 6);
    CHECK(p.points(0, 0) == std::vector<Vec>{zero_vec(5)});

    // Interior points.
    auto int1 = p.interior_points(p.full_face(0), 1);
    REQUIRE(int1.size() == 1);
    CHECK(int1[0] == p.deg());
    auto istar = p.interior_points(p.full_face(1), 1);
    REQUIRE(istar.size() == 1);
    CHECK(istar[0] == p.deg_star());
    // k = 0: empty unless the face is {0}.
    CHECK(p.interior_points(p.full_face(0), 0).empty());
    CHECK(p.interior_points(p.zero_face(0), 0).size() == 1);
}

TEST_CASE("hstar oracle values") {
    GorensteinPair p = quintic_pair();
    auto h = p.hstar(p.full_face(0));
    CHECK(h == std::vector<int64_t>{1, 121, 381, 121, 1, 0});
    CHECK(p.hstar_degree(p.full_face(0)) == 4);
    CHECK(p.normalized_volume(p.full_face(0)) == 625);
    auto hstar_star = p.hstar(p.full_face(1));
    CHECK(hstar_star == std::vector<int64_t>{1, 1, 1, 1, 1, 0});

    GorensteinPair e = elliptic_pair();
    CHECK(e.hstar(e.full_face(0)) == std::vector<int64_t>{1, 7, 1, 0});
    CHECK(e.hstar(e.full_face(1)) == std::vector<int64_t>{1, 1, 1, 0});
    CHECK(e.normalized_volume(e.full_face(0)) == 9);

    CHECK(p.generated_in_degree_one(p.full_face(0), 4));
    CHECK(e.generated_in_degree_one(e.full_face(0), 4));
}

TEST_CASE("polytope file round trip") {
    Polytope d = quintic_delta_star();
    std::string text = write_polytope(d);
    Polytope back = read_polytope(text);
    CHECK(back.vertices == d.vertices);
    CHECK(write_polytope(back) == text);

    CHECK_THROWS_AS(read_polytope("dim 2\n1 0\nnot a number\n"), error);
    Polytope commented = read_polytope("# comment\ndim 2\n1 0\n0 1\n-1 -1 # vertex\n");
    CHECK(commented.vertices.size() == 3);
}

TEST_CASE("exact LP sanity") {
    CHECK(in_convex_hull({{0, 0}, {2, 0}, {0, 2}}, {1, 1}));
    CHECK(!in_convex_hull({{0, 0}, {2, 0}, {0, 2}}, {2, 2}));
    CHECK(in_convex_hull({{1, 1}}, {1, 1}));
}
