#pragma once

// Brute-force reference implementations shared by the unit tests. They are
// written independently of the library and favour obviousness over speed.

#include <pach/join_complex.hpp>

#include <algorithm>
#include <vector>

namespace oracle {

// Every face of dimension k of V_0 * ... * V_d, sorted by (part set, indices).
inline std::vector<std::vector<pach::Vertex>> faces(int d, int n, int k) {
    std::vector<std::vector<pach::Vertex>> out;
    const int parts = d + 1;
    for (int mask = 0; mask < (1 << parts); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != k + 1) continue;
        std::vector<int> ps;
        for (int p = 0; p < parts; ++p)
            if (mask >> p & 1) ps.push_back(p);
        std::vector<int> idx(ps.size(), 0);
        while (true) {
            std::vector<pach::Vertex> f;
            for (std::size_t i = 0; i < ps.size(); ++i) f.push_back({ps[i], idx[i]});
            out.push_back(f);
            std::size_t i = idx.size();
            while (i > 0 && ++idx[i - 1] == n) idx[--i] = 0;
            if (i == 0) break;
        }
    }
    auto key = [](const std::vector<pach::Vertex>& f) {
        std::vector<int> ps, is;
        for (const auto& v : f) {
            ps.push_back(v.part);
            is.push_back(v.index);
        }
        return std::make_pair(ps, is);
    };
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return out;
}

inline bool is_facet(const std::vector<pach::Vertex>& small, const std::vector<pach::Vertex>& big) {
    if (small.size() + 1 != big.size()) return false;
    return std::all_of(small.begin(), small.end(),
                       [&](const pach::Vertex& v) { return std::find(big.begin(), big.end(), v) != big.end(); });
}

// Rank over F2 of a dense 0/1 matrix.
inline std::size_t rank(std::vector<std::vector<int>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && m[i][c])
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return r;
}

}  // namespace oracle
