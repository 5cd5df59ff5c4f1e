#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "invsemi/semigroup.hpp"

namespace invsemi {

/// The k-element chain under max: xy = max(x,y), x* = x. Element 0 is the
/// identity, element k-1 the zero.
inline SemigroupPtr chain_semilattice(int k) {
    if (k < 1) throw std::invalid_argument("chain_semilattice: k must be >= 1");
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    std::vector<std::string> names(k);
    for (int i = 0; i < k; ++i) {
        names[i] = std::to_string(i);
        for (int j = 0; j < k; ++j) table[i][j] = std::max(i, j);
    }
    return InverseSemigroup::validate_table(std::move(table), std::nullopt, std::move(names),
                                            "chain" + std::to_string(k));
}

/// Z_k, written additively.
inline SemigroupPtr cyclic_group(int k) {
    if (k < 1) throw std::invalid_argument("cyclic_group: k must be >= 1");
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    std::vector<std::string> names(k);
    for (int i = 0; i < k; ++i) {
        names[i] = std::to_string(i);
        for (int j = 0; j < k; ++j) table[i][j] = (i + j) % k;
    }
    return InverseSemigroup::validate_table(std::move(table), std::nullopt, std::move(names),
                                            "Z" + std::to_string(k));
}

/// Validate a table and additionally require it to be a group
/// (equivalently, for an inverse semigroup: a single idempotent).
inline SemigroupPtr group_from_table(std::vector<std::vector<int>> table,
                                     std::vector<std::string> names = {},
                                     std::string name = {}) {
    auto s = InverseSemigroup::validate_table(std::move(table), std::nullopt, std::move(names),
                                              std::move(name));
    if (!is_group(*s))
        throw NotAGroup("group_from_table: table has " +
                        std::to_string(s->idempotents().size()) + " idempotents");
    return s;
}

/// Componentwise product and star. Element (i,j) gets index i*|T| + j.
inline SemigroupPtr direct_product(const InverseSemigroup& s, const InverseSemigroup& t) {
    const int ns = s.size(), nt = t.size();
    const int n = ns * nt;
    auto idx = [nt](int i, int j) { return i * nt + j; };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<int> star(n);
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nt; ++j) {
            star[idx(i, j)] = idx(s.star(i), t.star(j));
            for (int k = 0; k < ns; ++k)
                for (int l = 0; l < nt; ++l)
                    table[idx(i, j)][idx(k, l)] = idx(s.product(i, k), t.product(j, l));
        }
    std::vector<std::string> names;
    if (s.has_names() && t.has_names()) {
        names.resize(n);
        for (int i = 0; i < ns; ++i)
            for (int j = 0; j < nt; ++j) names[idx(i, j)] = "(" + s.label(i) + "," + t.label(j) + ")";
    }
    std::string name;
    if (!s.name().empty() && !t.name().empty()) name = s.name() + "x" + t.name();
    return InverseSemigroup::validate_table(std::move(table), std::move(star), std::move(names),
                                            std::move(name));
}

inline SemigroupPtr direct_product(const SemigroupPtr& s, const SemigroupPtr& t) {
    return direct_product(*s, *t);
}

namespace detail {

/// Partial injective map on {0..k-1}: image of each point or -1.
using PartialBijection = std::vector<int>;

inline std::vector<PartialBijection> enumerate_partial_bijections(int k) {
    std::vector<PartialBijection> all;
    PartialBijection cur(k, -1);
    // Mixed-radix walk over {-1, 0..k-1}^k, keeping the injective ones.
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == k) {
            all.push_back(cur);
            return;
        }
        for (int img = -1; img < k; ++img) {
            if (img >= 0) {
                bool taken = false;
                for (int p = 0; p < pos; ++p)
                    if (cur[p] == img) taken = true;
                if (taken) continue;
            }
            cur[pos] = img;
            self(self, pos + 1);
        }
        cur[pos] = -1;
    };
    rec(rec, 0);
    return all;
}

inline PartialBijection compose(const PartialBijection& f, const PartialBijection& g) {
    // (f g)(x) = f(g(x)) where both steps are defined.
    PartialBijection h(f.size(), -1);
    for (std::size_t x = 0; x < g.size(); ++x)
        if (g[x] >= 0 && f[g[x]] >= 0) h[x] = f[g[x]];
    return h;
}

inline PartialBijection invert(const PartialBijection& f) {
    PartialBijection h(f.size(), -1);
    for (std::size_t x = 0; x < f.size(); ++x)
        if (f[x] >= 0) h[f[x]] = static_cast<int>(x);
    return h;
}

inline std::string bijection_label(const PartialBijection& f) {
    std::string s;
    for (int v : f) s += (v < 0) ? '-' : static_cast<char>('0' + v);
    return s;
}

} // namespace detail

/// The symmetric inverse monoid I_k: all partial bijections of {0..k-1}
/// under composition. |I_k| = sum_j C(k,j)^2 j!, so 7 for k=2 and 34 for
/// k=3; k > 4 is rejected.
inline SemigroupPtr symmetric_inverse_monoid(int k) {
    if (k < 0) throw std::invalid_argument("symmetric_inverse_monoid: k must be >= 0");
    if (k > 4)
        throw SizeLimit("symmetric_inverse_monoid: k = " + std::to_string(k) +
                        " exceeds the supported limit of 4");
    auto elems = detail::enumerate_partial_bijections(k);
    const int n = static_cast<int>(elems.size());
    auto index_of = [&](const detail::PartialBijection& f) {
        return static_cast<int>(std::find(elems.begin(), elems.end(), f) - elems.begin());
    };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<int> star(n);
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        names[i] = detail::bijection_label(elems[i]);
        star[i] = index_of(detail::invert(elems[i]));
        for (int j = 0; j < n; ++j) table[i][j] = index_of(detail::compose(elems[i], elems[j]));
    }
    return InverseSemigroup::validate_table(std::move(table), std::move(star), std::move(names),
                                            "I" + std::to_string(k));
}

} // namespace invsemi
