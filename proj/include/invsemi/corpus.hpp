#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "invsemi/generators.hpp"
#include "invsemi/io.hpp"
#include "invsemi/semigroup.hpp"

namespace invsemi {

namespace detail {

/// S_3 as a table: permutations of {0,1,2} in lexicographic one-line order,
/// composed as (p q)(x) = p(q(x)).
inline SemigroupPtr symmetric_group_3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int n = static_cast<int>(perms.size());
    auto index_of = [&](const std::array<int, 3>& q) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        names[i] = std::to_string(perms[i][0]) + std::to_string(perms[i][1]) +
                   std::to_string(perms[i][2]);
        for (int j = 0; j < n; ++j) {
            std::array<int, 3> comp;
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            table[i][j] = index_of(comp);
        }
    }
    return group_from_table(std::move(table), std::move(names), "S3");
}

} // namespace detail

/// The pinned verification corpus: chains, cyclic groups, S_3, two
/// zero-free group x chain products, and two symmetric inverse monoids.
inline std::vector<std::string> default_corpus_names() {
    return {"chain2", "chain3", "chain4",     "chain5",     "chain6", "Z2",
            "Z6",     "S3",     "Z3xchain2",  "Z2xchain3",  "I2",     "I3"};
}

/// Build a corpus member by name; returns nullptr for unknown names.
inline SemigroupPtr builtin_semigroup(const std::string& name) {
    if (name.rfind("chain", 0) == 0) {
        const int k = std::atoi(name.c_str() + 5);
        if (k >= 1 && k <= 64) return chain_semilattice(k);
    }
    if (name.rfind("Z", 0) == 0 && name.find('x') == std::string::npos) {
        const int k = std::atoi(name.c_str() + 1);
        if (k >= 1 && k <= 64) return cyclic_group(k);
    }
    if (name == "S3") return detail::symmetric_group_3();
    if (name == "Z3xchain2") return direct_product(cyclic_group(3), chain_semilattice(2));
    if (name == "Z2xchain3") return direct_product(cyclic_group(2), chain_semilattice(3));
    if (name.rfind("I", 0) == 0) {
        const int k = std::atoi(name.c_str() + 1);
        if (k >= 1 && k <= 4) return symmetric_inverse_monoid(k);
    }
    return nullptr;
}

/// Resolve a corpus selector: a builtin name, a path to a semigroup file,
/// or a bare name found as <name>.json in the directory given by the
/// INVSEMI_CORPUS_DIR environment variable.
inline SemigroupPtr resolve_semigroup(const std::string& selector) {
    if (auto s = builtin_semigroup(selector)) return s;
    namespace fs = std::filesystem;
    if (fs::exists(selector)) return load_semigroup(selector);
    if (const char* dir = std::getenv("INVSEMI_CORPUS_DIR")) {
        const fs::path candidate = fs::path(dir) / (selector + ".json");
        if (fs::exists(candidate)) return load_semigroup(candidate.string());
    }
    throw ParseError("unknown semigroup selector: " + selector);
}

} // namespace invsemi
