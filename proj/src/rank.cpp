#include "tcr/rank.hpp"

#include <algorithm>

#include "tcr/util.hpp"

namespace tcr {

RankMode parse_rank_mode(const std::string& s) {
    if (s == "modular") return RankMode::modular;
    if (s == "exact") return RankMode::exact;
    fail(errc::validation, "unknown rank mode '" + s + "' (expected modular|exact)");
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return (uint64_t)((unsigned __int128)a * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a % p, p - 2, p); }

uint64_t q64_mod(const Q64& v, uint64_t p) {
    uint64_t n = v.num >= 0 ? (uint64_t)v.num % p : p - (uint64_t)(-v.num) % p;
    n %= p;
    if (n == 0 || v.den == 1) return n;
    return mulmod(n, invmod((uint64_t)v.den % p, p), p);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // Deterministic witness set for 64-bit integers.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<uint64_t> seeded_primes(uint64_t seed, int count) {
    std::vector<uint64_t> out;
    uint64_t ctr = 0;
    while ((int)out.size() < count) {
        uint64_t c = splitmix64(seed * 0x9e3779b97f4a7c15ull + ++ctr);
        c |= (1ull << 61);     // ~62-bit magnitude
        c &= (1ull << 62) - 1;
        c |= 1;
        if (is_prime_u64(c) && std::find(out.begin(), out.end(), c) == out.end())
            out.push_back(c);
    }
    return out;
}

ModEchelon::ModEchelon(uint64_t p, int64_t rows) : p_(p), rows_(rows) {
    pivot_of_row_.assign(rows, -1);
    scratch_.assign(rows, 0);
}

uint64_t ModEchelon::to_mod(const Q64& v) const { return q64_mod(v, p_); }

bool ModEchelon::add_column_q(const std::vector<std::pair<int64_t, Q64>>& col) {
    std::vector<std::pair<int64_t, uint64_t>> c;
    c.reserve(col.size());
    for (const auto& [r, v] : col) {
        uint64_t x = to_mod(v);
        if (x) c.emplace_back(r, x);
    }
    return add_column(c);
}

bool ModEchelon::add_column(const std::vector<std::pair<int64_t, uint64_t>>& col) {
    // Scatter.
    touched_.clear();
    for (const auto& [r, v] : col) {
        if (v == 0) continue;
        if (scratch_[r] == 0) touched_.push_back(r);
        scratch_[r] = (scratch_[r] + v) % p_;
    }
    // Single pass in insertion order: stored column j has no entries at the
    // pivot rows of columns inserted before j, so this fully reduces.
    for (const auto& pc : cols_) {
        uint64_t v = scratch_[pc.piv];
        if (v == 0) continue;
        uint64_t neg = p_ - v;
        for (const auto& [r, x] : pc.ent) {
            uint64_t add = mulmod(neg, x, p_);
            if (add == 0) continue;
            if (scratch_[r] == 0) touched_.push_back(r);
            scratch_[r] = (scratch_[r] + add) % p_;
        }
    }
    // Gather and pick the largest nonzero row as pivot. `touched_` may hold
    // duplicates (a row can pass through zero and come back), so dedupe.
    std::sort(touched_.begin(), touched_.end());
    touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
    int64_t piv = -1;
    std::vector<std::pair<int64_t, uint64_t>> ent;
    for (int64_t r : touched_) {
        if (scratch_[r] == 0) continue;
        ent.emplace_back(r, scratch_[r]);
        if (r > piv) piv = r;
    }
    for (int64_t r : touched_) scratch_[r] = 0;
    if (piv < 0) return false;
    uint64_t pivval = 0;
    for (auto& [r, v] : ent)
        if (r == piv) pivval = v;
    uint64_t inv = invmod(pivval, p_);
    for (auto& [r, v] : ent) v = mulmod(v, inv, p_);
    stored_nnz_ += (int64_t)ent.size();
    if (stored_nnz_ > 220'000'000)
        fail(errc::budget, "modular echelon fill exceeds memory budget");
    pivot_of_row_[piv] = (int32_t)cols_.size();
    pivot_rows_.push_back(piv);
    cols_.push_back(Col{piv, std::move(ent)});
    return true;
}

std::vector<std::pair<int64_t, uint64_t>> ModEchelon::reduce(
    const std::vector<std::pair<int64_t, uint64_t>>& col) const {
    touched_.clear();
    for (const auto& [r, v] : col) {
        if (v == 0) continue;
        if (scratch_[r] == 0) touched_.push_back(r);
        scratch_[r] = (scratch_[r] + v) % p_;
    }
    for (const auto& pc : cols_) {
        uint64_t v = scratch_[pc.piv];
        if (v == 0) continue;
        uint64_t neg = p_ - v;
        for (const auto& [r, x] : pc.ent) {
            uint64_t add = mulmod(neg, x, p_);
            if (add == 0) continue;
            if (scratch_[r] == 0) touched_.push_back(r);
            scratch_[r] = (scratch_[r] + add) % p_;
        }
    }
    std::sort(touched_.begin(), touched_.end());
    touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
    std::vector<std::pair<int64_t, uint64_t>> out;
    for (int64_t r : touched_) {
        if (scratch_[r]) out.emplace_back(r, scratch_[r]);
        scratch_[r] = 0;
    }
    return out;
}

namespace {

int64_t modular_rank_once(const SparseMatrix& m, uint64_t p) {
    ModEchelon ech(p, m.rows);
    auto cols = m.columns();
    for (const auto& c : cols) {
        std::vector<std::pair<int64_t, uint64_t>> col;
        col.reserve(c.size());
        for (const auto& [r, v] : c) col.emplace_back(r, ech.to_mod(v));
        ech.add_column(col);
        if (ech.rank() == std::min(m.rows, m.cols)) break;
    }
    return ech.rank();
}

}  // namespace

int64_t sparse_rank(const SparseMatrix& m, RankMode mode, uint64_t seed, RankStats* stats) {
    RankStats local;
    RankStats& st = stats ? *stats : local;
    if (mode == RankMode::exact) {
        st.primes_used = 0;
        return exact_rank(m);
    }
    auto primes = seeded_primes(seed, 5);
    std::vector<int64_t> ranks;
    for (int i = 0; i < 3; ++i) ranks.push_back(modular_rank_once(m, primes[i]));
    st.primes_used = 3;
    if (ranks[0] == ranks[1] && ranks[1] == ranks[2]) return ranks[0];
    st.escalated = true;
    for (int i = 3; i < 5; ++i) ranks.push_back(modular_rank_once(m, primes[i]));
    st.primes_used = 5;
    bool all = true;
    for (int64_t r : ranks)
        if (r != ranks[0]) all = false;
    if (all) return ranks[0];
    st.fell_back_exact = true;
    return exact_rank(m);
}

}  // namespace tcr
