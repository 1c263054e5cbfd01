#include "tcr/cone.hpp"

#include <algorithm>
#include <sstream>

#include "tcr/lp.hpp"
#include "tcr/qlin.hpp"

namespace tcr {

Polytope make_polytope(const std::vector<Vec>& rows) {
    if (rows.empty()) fail(errc::validation, "make_polytope: empty input");
    size_t d = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != d) fail(errc::validation, "make_polytope: mixed row lengths");

    std::vector<Vec> pts = rows;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // A point is a vertex iff it is outside the hull of the others.
    std::vector<Vec> verts;
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<Vec> others;
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (others.empty() || !in_convex_hull(others, pts[i])) verts.push_back(pts[i]);
    }
    Polytope p;
    p.vertices = std::move(verts);
    p.dim = affine_dim(p.vertices);
    return p;
}

namespace {

// All facet hyperplanes (a, c), a.x <= c on P, c > 0, a primitive with the
// gcd of (a, c) divided out. Requires the origin in the interior.
std::vector<std::pair<Vec, int64_t>> facets_of(const Polytope& p, const Limits& lim) {
    size_t d = p.ambient();
    if ((int)p.dim != (int)d)
        fail(errc::validation, "polar_dual: polytope is not full-dimensional");
    if (!in_convex_hull(p.vertices, zero_vec(d)))
        fail(errc::validation, "polar_dual: origin is not inside the polytope");
    if ((int)p.vertices.size() > lim.max_hull_vertices)
        fail(errc::budget, "polar_dual: vertex count exceeds brute-force hull limit");

    std::vector<std::pair<Vec, int64_t>> out;
    size_t n = p.vertices.size();
    std::vector<int> idx(n, 0);
    // Enumerate d-subsets.
    std::vector<int> sel(d);
    for (size_t i = 0; i < d; ++i) sel[i] = (int)i;
    auto advance = [&]() {
        int i = (int)d - 1;
        while (i >= 0 && sel[i] == (int)(n - d + i)) --i;
        if (i < 0) return false;
        ++sel[i];
        for (size_t j = i + 1; j < d; ++j) sel[j] = sel[j - 1] + 1;
        return true;
    };
    if (n < d) fail(errc::validation, "polar_dual: too few vertices");
    do {
        // Hyperplane a.x = c through the selected vertices: nullspace of
        // rows (x_i, -1) applied to (a, c).
        QMat m;
        for (size_t i = 0; i < d; ++i) {
            QVec row;
            for (size_t j = 0; j < d; ++j) row.push_back(Q64(p.vertices[sel[i]][j]));
            row.push_back(Q64(-1));
            m.push_back(std::move(row));
        }
        auto ns = qnullspace(m);
        if (ns.size() != 1) continue;  // subset does not span a hyperplane
        // Clear denominators to a primitive integer (a, c).
        int64_t l = 1;
        for (const auto& q : ns[0]) l = l / gcd64(l, q.den) * q.den;
        Vec ac(d + 1);
        for (size_t j = 0; j <= d; ++j) ac[j] = ns[0][j].num * (l / ns[0][j].den);
        ac = primitive(ac);
        int64_t c = ac[d];
        if (c == 0) continue;  // passes through the origin
        if (c < 0) ac = scale(-1, ac), c = -c;
        Vec a(ac.begin(), ac.begin() + d);
        bool valid = true;
        for (const auto& v : p.vertices)
            if (dot(a, v) > c) {
                valid = false;
                break;
            }
        if (!valid) continue;
        out.emplace_back(a, c);
    } while (advance());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Polytope polar_dual(const Polytope& p, const Limits& lim) {
    auto facets = facets_of(p, lim);
    std::vector<Vec> dual_verts;
    for (const auto& [a, c] : facets) {
        Vec w(a.size());
        for (size_t j = 0; j < a.size(); ++j) {
            if (a[j] % c != 0)
                fail(errc::validation, "polar_dual: dual vertex is not integral (input not reflexive)");
            w[j] = -a[j] / c;
        }
        dual_verts.push_back(std::move(w));
    }
    return make_polytope(dual_verts);
}

Polytope read_polytope(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int d = -1;
    std::vector<Vec> rows;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (d < 0) {
            if (tok != "dim")
                fail(errc::validation, "polytope parse error at line " + std::to_string(lineno) +
                                           ": expected 'dim d'");
            if (!(ls >> d) || d <= 0)
                fail(errc::validation, "polytope parse error at line " + std::to_string(lineno) +
                                           ": bad dimension");
            continue;
        }
        Vec v;
        try {
            v.push_back(std::stoll(tok));
            while (ls >> tok) v.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            fail(errc::validation,
                 "polytope parse error at line " + std::to_string(lineno) + ": bad integer");
        }
        if ((int)v.size() != d)
            fail(errc::validation, "polytope parse error at line " + std::to_string(lineno) +
                                       ": expected " + std::to_string(d) + " coordinates");
        rows.push_back(std::move(v));
    }
    if (d < 0 || rows.empty()) fail(errc::validation, "polytope parse error: no data");
    return make_polytope(rows);
}

std::string write_polytope(const Polytope& p) {
    std::ostringstream out;
    out << "dim " << p.ambient() << "\n";
    for (const auto& v : p.vertices) {
        for (size_t j = 0; j < v.size(); ++j) out << (j ? " " : "") << v[j];
        out << "\n";
    }
    return out.str();
}

std::vector<Vec> dual_cone_rays(const std::vector<Vec>& rays, const Limits& lim) {
    if (rays.empty()) fail(errc::validation, "dual_cone_rays: empty cone");
    size_t d = rays[0].size();
    if ((int)rays.size() > lim.max_face_rays)
        fail(errc::budget, "dual_cone_rays: ray count over limit");
    {
        QMat m;
        for (const auto& r : rays) {
            QVec row;
            for (int64_t x : r) row.push_back(Q64(x));
            m.push_back(std::move(row));
        }
        if (qrank(m) != (int)d)
            fail(errc::validation, "dual_cone_rays: cone is not full-dimensional");
    }
    std::set<Vec> out;
    size_t n = rays.size();
    size_t k = d - 1;
    std::vector<int> sel(k);
    for (size_t i = 0; i < k; ++i) sel[i] = (int)i;
    auto advance = [&]() {
        if (k == 0) return false;
        int i = (int)k - 1;
        while (i >= 0 && sel[i] == (int)(n - k + i)) --i;
        if (i < 0) return false;
        ++sel[i];
        for (size_t j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
        return true;
    };
    do {
        QMat m;
        for (size_t i = 0; i < k; ++i) {
            QVec row;
            for (int64_t x : rays[sel[i]]) row.push_back(Q64(x));
            m.push_back(std::move(row));
        }
        auto ns = qnullspace(m);
        if (ns.size() != 1) continue;
        int64_t l = 1;
        for (const auto& q : ns[0]) l = l / gcd64(l, q.den) * q.den;
        Vec w(d);
        for (size_t j = 0; j < d; ++j) w[j] = ns[0][j].num * (l / ns[0][j].den);
        w = primitive(w);
        int sign = 0;
        bool valid = true;
        for (const auto& r : rays) {
            int64_t s = dot(w, r);
            if (s > 0) {
                if (sign < 0) { valid = false; break; }
                sign = 1;
            } else if (s < 0) {
                if (sign > 0) { valid = false; break; }
                sign = -1;
            }
        }
        if (!valid || sign == 0) continue;
        if (sign < 0) w = scale(-1, w);
        out.insert(w);
    } while (advance());
    return std::vector<Vec>(out.begin(), out.end());
}

GorensteinData check_reflexive_gorenstein(const std::vector<Vec>& rays_k,
                                          const std::vector<Vec>& rays_kstar,
                                          const Limits& lim) {
    // Mutual duality: the dual of K must have exactly the given rays.
    auto dk = dual_cone_rays(rays_k, lim);
    std::set<Vec> expect(dk.begin(), dk.end());
    std::set<Vec> given;
    for (const auto& r : rays_kstar) given.insert(primitive(r));
    if (expect != given) fail(errc::validation, "check_reflexive_gorenstein: cones are not dual");

    auto solve_degree = [&](const std::vector<Vec>& dual_rays, const char* what) -> Vec {
        QMat a;
        QVec b;
        for (const auto& r : dual_rays) {
            QVec row;
            for (int64_t x : r) row.push_back(Q64(x));
            a.push_back(std::move(row));
            b.push_back(Q64(1));
        }
        auto sol = qsolve(a, b);
        if (!sol) fail(errc::validation, std::string("no Gorenstein structure: ") + what);
        Vec v(sol->size());
        for (size_t i = 0; i < sol->size(); ++i) {
            if (!(*sol)[i].is_integer())
                fail(errc::validation, std::string("no integral Gorenstein degree: ") + what);
            v[i] = (*sol)[i].num;
        }
        return v;
    };
    GorensteinData g;
    g.deg = solve_degree(rays_kstar, "deg");       // deg pairs to 1 with K* rays
    g.deg_star = solve_degree(rays_k, "deg*");     // deg* pairs to 1 with K rays
    g.index = (int)dot(g.deg, g.deg_star);
    return g;
}

GorensteinPair GorensteinPair::from_polytope(const Polytope& delta, const Limits& lim) {
    Polytope dual = polar_dual(delta, lim);  // validates reflexivity
    GorensteinPair p;
    p.lim_ = lim;
    p.rank_ = delta.dim + 1;
    for (const auto& v : delta.vertices) {
        Vec r = v;
        r.push_back(1);
        p.rays_k_.push_back(std::move(r));
    }
    for (const auto& v : dual.vertices) {
        Vec r = v;
        r.push_back(1);
        p.rays_kstar_.push_back(std::move(r));
    }
    p.deg_ = zero_vec(p.rank_);
    p.deg_[p.rank_ - 1] = 1;
    p.deg_star_ = p.deg_;
    p.init();
    return p;
}

GorensteinPair GorensteinPair::from_cones(std::vector<Vec> rays_k, std::vector<Vec> rays_kstar,
                                          const Limits& lim) {
    GorensteinData g = check_reflexive_gorenstein(rays_k, rays_kstar, lim);
    GorensteinPair p;
    p.lim_ = lim;
    p.rank_ = (int)rays_k[0].size();
    p.rays_k_ = std::move(rays_k);
    p.rays_kstar_ = std::move(rays_kstar);
    for (auto& r : p.rays_k_) r = primitive(r);
    for (auto& r : p.rays_kstar_) r = primitive(r);
    p.deg_ = g.deg;
    p.deg_star_ = g.deg_star;
    p.init();
    return p;
}

GorensteinPair GorensteinPair::direct_sum(const GorensteinPair& a, const GorensteinPair& b) {
    auto block = [](const std::vector<Vec>& first, const std::vector<Vec>& second, int ra, int rb) {
        std::vector<Vec> out;
        for (const auto& v : first) {
            Vec w = v;
            w.resize(ra + rb, 0);
            out.push_back(std::move(w));
        }
        for (const auto& v : second) {
            Vec w = zero_vec(ra);
            w.insert(w.end(), v.begin(), v.end());
            out.push_back(std::move(w));
        }
        return out;
    };
    GorensteinPair p;
    p.lim_ = a.lim_;
    p.rank_ = a.rank_ + b.rank_;
    p.rays_k_ = block(a.rays_k_, b.rays_k_, a.rank_, b.rank_);
    p.rays_kstar_ = block(a.rays_kstar_, b.rays_kstar_, a.rank_, b.rank_);
    p.deg_ = a.deg_;
    p.deg_.insert(p.deg_.end(), b.deg_.begin(), b.deg_.end());
    p.deg_star_ = a.deg_star_;
    p.deg_star_.insert(p.deg_star_.end(), b.deg_star_.begin(), b.deg_star_.end());
    p.init();
    return p;
}

GorensteinPair GorensteinPair::swapped() const {
    GorensteinPair p;
    p.lim_ = lim_;
    p.rank_ = rank_;
    p.rays_k_ = rays_kstar_;
    p.rays_kstar_ = rays_k_;
    p.deg_ = deg_star_;
    p.deg_star_ = deg_;
    p.init();
    return p;
}

void GorensteinPair::init() {
    cache_ = std::make_shared<Cache>();
    // Gorenstein sanity: every ray pairs to 1 with the opposite degree.
    for (const auto& g : rays_k_)
        if (dot(g, deg_star_) != 1)
            fail(errc::validation, "Gorenstein pair: ray of K with deg* pairing != 1");
    for (const auto& g : rays_kstar_)
        if (dot(deg_, g) != 1)
            fail(errc::validation, "Gorenstein pair: ray of K* with deg pairing != 1");
    for (const auto& g : rays_k_)
        for (const auto& h : rays_kstar_)
            if (dot(g, h) < 0) fail(errc::validation, "Gorenstein pair: negative ray pairing");
    std::sort(rays_k_.begin(), rays_k_.end());
    std::sort(rays_kstar_.begin(), rays_kstar_.end());
}

void GorensteinPair::build_faces(int side) const {
    const auto& rays = side == 0 ? rays_k_ : rays_kstar_;
    const auto& dual = side == 0 ? rays_kstar_ : rays_k_;
    if ((int)rays.size() > lim_.max_face_rays)
        fail(errc::budget, "face enumeration: ray count over limit");

    // Faces of K are intersections of the facet zero sets {g : g.h = 0}.
    std::set<std::vector<int>> sets;
    std::vector<int> all(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) all[i] = (int)i;
    sets.insert(all);
    std::vector<std::vector<int>> zero_sets;
    for (const auto& h : dual) {
        std::vector<int> z;
        for (size_t i = 0; i < rays.size(); ++i)
            if (dot(rays[i], h) == 0) z.push_back((int)i);
        zero_sets.push_back(std::move(z));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(sets.begin(), sets.end());
        for (const auto& s : cur) {
            for (const auto& z : zero_sets) {
                std::vector<int> inter;
                std::set_intersection(s.begin(), s.end(), z.begin(), z.end(),
                                      std::back_inserter(inter));
                if (sets.insert(inter).second) grew = true;
            }
        }
    }

    std::vector<Face> faces;
    for (const auto& s : sets) {
        Face f;
        f.side = side;
        f.gens = s;
        if (s.empty()) {
            f.dim = 0;
        } else {
            QMat m;
            for (int i : s) {
                QVec row;
                for (int64_t x : rays[i]) row.push_back(Q64(x));
                m.push_back(std::move(row));
            }
            f.dim = qrank(m);
        }
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.gens < b.gens;
    });
    for (size_t i = 0; i < faces.size(); ++i) faces[i].index = (int)i;
    cache_->faces[side] = std::move(faces);
}

const std::vector<Face>& GorensteinPair::faces(int side) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->faces[side].empty()) {
        build_faces(side);
        if (cache_->faces[1 - side].empty()) build_faces(1 - side);
        // Link dual faces: theta* = rays of the other cone vanishing on theta.
        for (int s : {0, 1}) {
            const auto& rays = s == 0 ? rays_k_ : rays_kstar_;
            const auto& dual = s == 0 ? rays_kstar_ : rays_k_;
            for (auto& f : cache_->faces[s]) {
                std::vector<int> dg;
                for (size_t j = 0; j < dual.size(); ++j) {
                    bool zero = true;
                    for (int i : f.gens)
                        if (dot(rays[i], dual[j]) != 0) {
                            zero = false;
                            break;
                        }
                    if (zero) dg.push_back((int)j);
                }
                for (const auto& g : cache_->faces[1 - s])
                    if (g.gens == dg) {
                        f.dual_index = g.index;
                        break;
                    }
                if (f.dual_index < 0) fail(errc::internal, "face lattice: dual face not found");
            }
        }
    }
    return cache_->faces[side];
}

const Face& GorensteinPair::full_face(int side) const {
    const auto& fs = faces(side);
    return fs.back();
}

const Face& GorensteinPair::zero_face(int side) const {
    const auto& fs = faces(side);
    return fs.front();
}

const Face& GorensteinPair::dual_face(const Face& f) const {
    const auto& other = faces(1 - f.side);
    return other[f.dual_index];
}

const Face* GorensteinPair::find_face(int side, const std::vector<int>& gens) const {
    for (const auto& f : faces(side))
        if (f.gens == gens) return &f;
    return nullptr;
}

int GorensteinPair::level(int side, const Vec& v) const {
    return (int)dot(v, side == 0 ? deg_star_ : deg_);
}

bool GorensteinPair::in_cone(int side, const Vec& v) const {
    const auto& dual = side == 0 ? rays_kstar_ : rays_k_;
    for (const auto& h : dual)
        if (dot(v, h) < 0) return false;
    return true;
}

const std::vector<Vec>& GorensteinPair::points(const Face& f, int k) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto key = std::make_pair(f.gens, k);
    auto it = cache_->pts[f.side].find(key);
    if (it != cache_->pts[f.side].end()) return it->second;

    const auto& rays = f.side == 0 ? rays_k_ : rays_kstar_;
    const auto& dual = f.side == 0 ? rays_kstar_ : rays_k_;
    const Vec& degree = f.side == 0 ? deg_star_ : deg_;

    std::vector<Vec> out;
    if (k < 0) fail(errc::validation, "lattice_points: negative level");
    if (f.gens.empty() || k == 0) {
        if (k == 0) out.push_back(zero_vec(rank_));
    } else {
        // Zero set: dual rays vanishing on the whole face.
        std::vector<const Vec*> zero, pos;
        for (const auto& h : dual) {
            bool z = true;
            for (int i : f.gens)
                if (dot(rays[i], h) != 0) {
                    z = false;
                    break;
                }
            (z ? zero : pos).push_back(&h);
        }
        Vec lo(rank_), hi(rank_);
        for (int j = 0; j < rank_; ++j) {
            int64_t mn = rays[f.gens[0]][j], mx = mn;
            for (int i : f.gens) {
                mn = std::min(mn, rays[i][j]);
                mx = std::max(mx, rays[i][j]);
            }
            lo[j] = k * mn;
            hi[j] = k * mx;
        }
        __int128 total = 1;
        for (int j = 0; j < rank_; ++j) {
            total *= (hi[j] - lo[j] + 1);
            if (total > lim_.max_box_scan)
                fail(errc::budget, "lattice_points: bounding box scan over budget");
        }
        Vec v = lo;
        while (true) {
            if (dot(v, degree) == k) {
                bool ok = true;
                for (const Vec* h : zero)
                    if (dot(v, *h) != 0) {
                        ok = false;
                        break;
                    }
                for (const Vec* h : pos) {
                    if (!ok) break;
                    if (dot(v, *h) < 0) ok = false;
                }
                if (ok) out.push_back(v);
            }
            int j = rank_ - 1;
            while (j >= 0 && v[j] == hi[j]) {
                v[j] = lo[j];
                --j;
            }
            if (j < 0) break;
            ++v[j];
        }
        std::sort(out.begin(), out.end());
    }
    auto& slot = cache_->pts[f.side][key];
    slot = std::move(out);
    auto& index = cache_->pt_index[f.side][key];
    for (size_t i = 0; i < slot.size(); ++i) index[slot[i]] = (int64_t)i;
    return slot;
}

const std::vector<Vec>& GorensteinPair::points(int side, int k) const {
    return points(full_face(side), k);
}

std::vector<Vec> GorensteinPair::interior_points(const Face& f, int k) const {
    const auto& all = points(f, k);
    const auto& rays = f.side == 0 ? rays_k_ : rays_kstar_;
    const auto& dual = f.side == 0 ? rays_kstar_ : rays_k_;
    std::vector<const Vec*> strict;
    for (const auto& h : dual) {
        bool z = true;
        for (int i : f.gens)
            if (dot(rays[i], h) != 0) {
                z = false;
                break;
            }
        if (!z) strict.push_back(&h);
    }
    std::vector<Vec> out;
    for (const auto& v : all) {
        bool ok = true;
        for (const Vec* h : strict)
            if (dot(v, *h) <= 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(v);
    }
    return out;
}

int64_t GorensteinPair::point_index(const Face& f, int k, const Vec& v) const {
    points(f, k);  // ensure cached
    std::lock_guard<std::mutex> lock(cache_->mu);
    const auto& index = cache_->pt_index[f.side][std::make_pair(f.gens, k)];
    auto it = index.find(v);
    return it == index.end() ? -1 : it->second;
}

const std::vector<int64_t>& GorensteinPair::hstar(const Face& f) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->hstar[f.side].find(f.gens);
        if (it != cache_->hstar[f.side].end()) return it->second;
    }
    int t = f.dim;
    std::vector<int64_t> ell(t + 1);
    for (int k = 0; k <= t; ++k) ell[k] = (int64_t)points(f, k).size();
    std::vector<int64_t> h(t + 1, 0);
    std::vector<int64_t> binom(t + 1);
    binom[0] = 1;
    for (int j = 1; j <= t; ++j) binom[j] = binom[j - 1] * (t - j + 1) / j;
    for (int i = 0; i <= t; ++i) {
        int64_t s = 0;
        for (int j = 0; j <= i; ++j) s += (j % 2 ? -1 : 1) * binom[j] * ell[i - j];
        h[i] = s;
        if (s < 0) fail(errc::internal, "negative h* coefficient");
    }
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->hstar[f.side][f.gens] = std::move(h);
}

int GorensteinPair::hstar_degree(const Face& f) const {
    const auto& h = hstar(f);
    for (int i = (int)h.size() - 1; i >= 0; --i)
        if (h[i] != 0) return i;
    return 0;
}

int64_t GorensteinPair::normalized_volume(const Face& f) const {
    const auto& h = hstar(f);
    int64_t s = 0;
    for (int64_t x : h) s += x;
    return s;
}

bool GorensteinPair::generated_in_degree_one(const Face& f, int upto) const {
    const auto& level1 = points(f, 1);
    for (int k = 2; k <= upto; ++k) {
        const auto& pk = points(f, k);
        points(f, k - 1);  // warm the index
        for (const auto& v : pk) {
            bool ok = false;
            for (const auto& p : level1) {
                if (point_index(f, k - 1, sub(v, p)) >= 0) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
    }
    return true;
}

}  // namespace tcr
