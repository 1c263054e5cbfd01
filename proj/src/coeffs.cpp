#include "tcr/coeffs.hpp"

#include <set>
#include <sstream>

namespace tcr {

uint64_t CoefficientFunction::content_hash() const {
    uint64_t h = 0x5bf03635ull;
    for (const auto& [m, v] : values) {
        h = hash_combine(h, hash_vec(m));
        h = hash_combine(h, (uint64_t)v.num);
        h = hash_combine(h, (uint64_t)v.den);
    }
    return h;
}

CoefficientFunction sample_coefficients(const std::vector<Vec>& pts, uint64_t seed) {
    if (pts.empty()) fail(errc::validation, "sample_coefficients: empty point list");
    CoefficientFunction f;
    for (const auto& m : pts) {
        uint64_t h = splitmix64(seed ^ hash_vec(m));
        f.values[m] = Q64((int64_t)(1 + (h % (1ull << 20))));
    }
    return f;
}

CoefficientFunction fermat_coefficients(const std::vector<Vec>& pts,
                                        const std::vector<Vec>& vertices) {
    std::set<Vec> vset(vertices.begin(), vertices.end());
    CoefficientFunction f;
    for (const auto& m : pts) f.values[m] = Q64(vset.count(m) ? 1 : 0);
    return f;
}

CoefficientFunction parse_coefficients(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CoefficientFunction f;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        auto colon = std::find(toks.begin(), toks.end(), ":");
        if (colon == toks.end() || colon + 1 == toks.end() || colon == toks.begin())
            fail(errc::validation,
                 "coefficient parse error at line " + std::to_string(lineno) +
                     ": expected 'c1 .. cd : value'");
        Vec m;
        try {
            for (auto it = toks.begin(); it != colon; ++it) m.push_back(std::stoll(*it));
        } catch (const std::exception&) {
            fail(errc::validation,
                 "coefficient parse error at line " + std::to_string(lineno) + ": bad integer");
        }
        f.values[m] = parse_q64(*(colon + 1));
    }
    if (f.values.empty()) fail(errc::validation, "coefficient parse error: no data");
    return f;
}

std::string write_coefficients(const CoefficientFunction& f) {
    std::ostringstream out;
    for (const auto& [m, v] : f.values) {
        for (size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << m[i];
        out << " : " << v.str() << "\n";
    }
    return out.str();
}

GradedElement z_element(const CoefficientFunction& f, const Vec& n) {
    GradedElement z;
    z.degree = 1;
    for (const auto& [m, v] : f.values) {
        Q64 c = v * Q64(dot(m, n));
        if (!c.is_zero()) z.terms[m] = c;
    }
    return z;
}

}  // namespace tcr
