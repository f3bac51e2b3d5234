#pragma once

// Test-side reference implementations. Each one is written from the
// definitions without touching the library's algorithms, so agreement is
// evidence rather than a tautology. Only meant for small inputs.

#include "schurcoh/numeric.hpp"
#include "schurcoh/partitions.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace oracle {

using schurcoh::BigInt;
using schurcoh::Rational;
using schurcoh::Weight;

using Content = std::vector<int>;
using Character = std::map<Content, std::int64_t>;

// Every SSYT of `shape` with entries in 1..n, tallied by content.
inline Character ssyt_character(const std::vector<int>& shape, int n)
{
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < static_cast<int>(shape.size()); ++r)
        for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c)
            cells.emplace_back(r, c);
    std::vector<std::vector<int>> tab(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r)
        tab[r].assign(static_cast<std::size_t>(shape[r]), 0);

    Character out;
    Content content(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == cells.size()) {
            ++out[content];
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, tab[r][c - 1]);
        if (r > 0)
            lo = std::max(lo, tab[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            tab[r][c] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            fill(k + 1);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    fill(0);
    return out;
}

inline std::int64_t kostka(const std::vector<int>& shape, const Content& content)
{
    auto ch = ssyt_character(shape, static_cast<int>(content.size()));
    auto it = ch.find(content);
    return it == ch.end() ? 0 : it->second;
}

// weyl_dim as the number of SSYT with entries at most n
inline std::int64_t ssyt_count(const std::vector<int>& shape, int n)
{
    std::int64_t total = 0;
    for (const auto& [c, k] : ssyt_character(shape, n))
        total += k;
    return total;
}

// Weyl product with exact rationals, any dominant integer weight
inline BigInt weyl_product(const std::vector<int>& w)
{
    Rational p = 1;
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            p *= Rational(w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(j)] + j - i, j - i);
    p.canonicalize();
    return p.get_num();
}

// LR decomposition through characters: multiply, then peel off the largest
// dominant weight repeatedly. Nonnegative weights of length n only.
inline std::map<std::vector<int>, std::int64_t> lr_by_characters(const std::vector<int>& a,
                                                                 const std::vector<int>& b)
{
    const int n = static_cast<int>(a.size());
    Character ca = ssyt_character(a, n), cb = ssyt_character(b, n), prod;
    for (const auto& [x, kx] : ca)
        for (const auto& [y, ky] : cb) {
            Content z(x);
            for (int i = 0; i < n; ++i)
                z[static_cast<std::size_t>(i)] += y[static_cast<std::size_t>(i)];
            prod[z] += kx * ky;
        }
    std::map<std::vector<int>, std::int64_t> out;
    for (;;) {
        std::optional<Content> top;
        for (auto it = prod.rbegin(); it != prod.rend(); ++it)
            if (it->second != 0 && std::is_sorted(it->first.rbegin(), it->first.rend())) {
                top = it->first;
                break;
            }
        if (!top)
            break;
        const std::int64_t k = prod[*top];
        out[*top] = k;
        for (const auto& [x, kx] : ssyt_character(*top, n))
            prod[x] -= k * kx;
    }
    return out;
}

struct Bott {
    int degree = 0;
    std::vector<int> weight;
};

// Bott's algorithm with simple reflections: while some v_i < v_{i+1}, either
// v_{i+1} = v_i + 1 (acyclic) or replace the pair by (v_{i+1}-1, v_i+1).
inline std::optional<Bott> bott_by_reflections(const Weight& lambda, const Weight& mu)
{
    std::vector<int> v(lambda.vec());
    v.insert(v.end(), mu.vec().begin(), mu.vec().end());
    int steps = 0;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] >= v[i + 1])
                continue;
            if (v[i + 1] == v[i] + 1)
                return std::nullopt;
            const int a = v[i], b = v[i + 1];
            v[i] = b - 1;
            v[i + 1] = a + 1;
            ++steps;
            moved = true;
        }
    }
    return Bott{steps, v};
}

// Canonical (m,t,s) with 0 <= s <= t <= m, m >= t+s, m <= max_m.
inline std::vector<std::array<int, 3>> canonical_triples(int max_m, int min_m = 0)
{
    std::vector<std::array<int, 3>> out;
    for (int m = min_m; m <= max_m; ++m)
        for (int t = 0; t <= m; ++t)
            for (int s = 0; s <= t; ++s)
                if (t + s <= m)
                    out.push_back({m, t, s});
    return out;
}

// Partitions with at most `rows` parts and size at most `max_size`, padded.
inline std::vector<std::vector<int>> partitions_up_to(int max_size, int rows)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (static_cast<int>(cur.size()) == rows) {
            out.push_back(cur);
            return;
        }
        for (int v = std::min(left, cap); v >= 0; --v) {
            cur.push_back(v);
            rec(left - v, v);
            cur.pop_back();
        }
    };
    rec(max_size, max_size);
    return out;
}

} // namespace oracle
