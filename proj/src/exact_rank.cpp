#include <algorithm>
#include <boost/multiprecision/gmp.hpp>
#include <unordered_map>

#include "tcr/rank.hpp"

namespace tcr {

// Exact elimination over Q, fraction-free within each column: columns are
// scaled to integer vectors and reduced with cross-multiplication, dividing
// out the content after each reduction to keep operands small.
namespace {

using Z = boost::multiprecision::mpz_int;

struct ZCol {
    int64_t piv;
    std::vector<std::pair<int64_t, Z>> ent;
};

}  // namespace

// 1 + g0^5 / (5^5 g1...g5) as an exact rational string and its sign.
std::pair<std::string, int> quintic_discriminant(const Q64& g0, const std::vector<Q64>& gv) {
    using QQ = boost::multiprecision::mpq_rational;
    auto to_q = [](const Q64& v) { return QQ(v.num) / v.den; };
    QQ num = to_q(g0);
    QQ p5 = 1;
    for (const auto& v : gv) {
        if (v.is_zero()) fail(errc::validation, "quintic discriminant: vertex coefficient is zero");
        p5 *= to_q(v);
    }
    QQ disc = 1 + num * num * num * num * num / (3125 * p5);
    std::string s = disc.str();
    return {s, disc == 0 ? 0 : (disc > 0 ? 1 : -1)};
}

int64_t exact_rank(const SparseMatrix& m) {
    auto cols = m.columns();
    // Work column by column, keep an echelon of integer pivot columns.
    std::vector<ZCol> ech;
    std::vector<int32_t> pivot_of_row(m.rows, -1);
    std::unordered_map<int64_t, Z> scratch;

    for (const auto& qc : cols) {
        if (qc.empty()) continue;
        scratch.clear();
        // Clear denominators of the incoming column.
        int64_t l = 1;
        for (const auto& [r, v] : qc) l = l / gcd64(l, v.den) * v.den;
        for (const auto& [r, v] : qc) scratch[r] = Z(v.num) * (l / v.den);

        // Reduce against pivots in insertion order (same invariant as the
        // modular echelon: no stored column touches earlier pivot rows).
        for (const auto& pc : ech) {
            auto it = scratch.find(pc.piv);
            if (it == scratch.end() || it->second == 0) continue;
            Z c = it->second;
            Z pv;
            for (const auto& [r, x] : pc.ent)
                if (r == pc.piv) pv = x;
            // col <- pv*col - c*pivcol  (keeps integrality)
            for (auto& [r, x] : scratch) x *= pv;
            for (const auto& [r, x] : pc.ent) {
                auto& slot = scratch[r];
                slot -= c * x;
            }
            // Divide out the content to control growth.
            Z g = 0;
            for (const auto& [r, x] : scratch)
                if (x != 0) g = boost::multiprecision::gcd(g, x);
            if (g > 1)
                for (auto& [r, x] : scratch) x /= g;
        }
        int64_t piv = -1;
        std::vector<std::pair<int64_t, Z>> ent;
        for (auto& [r, x] : scratch) {
            if (x == 0) continue;
            ent.emplace_back(r, x);
            piv = std::max(piv, r);
        }
        if (piv < 0) continue;
        std::sort(ent.begin(), ent.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        pivot_of_row[piv] = (int32_t)ech.size();
        ech.push_back(ZCol{piv, std::move(ent)});
        if ((int64_t)ech.size() == std::min(m.rows, m.cols)) break;
    }
    return (int64_t)ech.size();
}

}  // namespace tcr
