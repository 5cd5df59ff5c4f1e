#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsemi/errors.hpp"

namespace invsemi {

class InverseSemigroup;

/// Shared handle to an immutable semigroup. Everything downstream
/// (functions, operators, representations) keeps one of these.
using SemigroupPtr = std::shared_ptr<const InverseSemigroup>;

/// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<int>;

/// A finite inverse semigroup given by its multiplication table.
///
/// Elements are dense indices 0..n-1; table(i,j) is the index of x_i x_j and
/// star(i) the index of the unique generalized inverse x_i*. Construction
/// goes through validate_table(), which checks associativity and existence
/// and uniqueness of generalized inverses, then caches the idempotents, the
/// range/domain projections xx* and x*x, and the identity/zero elements if
/// present. Instances are immutable and safe to share across threads.
class InverseSemigroup {
public:
    /// Validate a multiplication table and build the semigroup.
    ///
    /// If `star` is absent it is derived by searching, for each x, the unique
    /// s with x s x = x and s x s = s. Throws ValidationError when the table
    /// is not associative, some element has no generalized inverse or more
    /// than one, or the supplied star violates the laws. Shape errors (ragged
    /// rows, out-of-range entries) throw std::invalid_argument.
    static SemigroupPtr validate_table(std::vector<std::vector<int>> table,
                                       std::optional<std::vector<int>> star = std::nullopt,
                                       std::vector<std::string> names = {},
                                       std::string name = {}) {
        const int n = static_cast<int>(table.size());
        if (n <= 0) throw std::invalid_argument("element count must be positive");
        std::vector<int> flat;
        flat.reserve(static_cast<std::size_t>(n) * n);
        for (const auto& row : table) {
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("table is not square");
            for (int v : row) {
                if (v < 0 || v >= n)
                    throw std::invalid_argument("table entry out of range");
                flat.push_back(v);
            }
        }
        if (!names.empty() && static_cast<int>(names.size()) != n)
            throw std::invalid_argument("names length must equal element count");
        if (star && static_cast<int>(star->size()) != n)
            throw std::invalid_argument("star length must equal element count");

        return SemigroupPtr(new InverseSemigroup(
            n, std::move(flat), std::move(star), std::move(names), std::move(name)));
    }

    int size() const { return n_; }

    int product(int i, int j) const { return table_[static_cast<std::size_t>(i) * n_ + j]; }

    int star(int i) const { return star_[i]; }

    /// xx*, the range projection of x.
    int range_projection(int x) const { return range_[x]; }

    /// x*x, the domain projection of x.
    int domain_projection(int x) const { return domain_[x]; }

    bool is_idempotent(int x) const { return product(x, x) == x; }

    /// All e with ee = e, ascending.
    const ElementSet& idempotents() const { return idempotents_; }

    /// {y : yy* = e}; empty unless e is idempotent.
    const std::vector<int>& range_class(int e) const { return range_class_[e]; }

    std::optional<int> identity() const { return identity_; }
    std::optional<int> zero() const { return zero_; }

    const std::string& name() const { return name_; }
    bool has_names() const { return !names_.empty(); }
    const std::vector<std::string>& names() const { return names_; }

    /// Display label of an element: its name if present, else its index.
    std::string label(int x) const {
        return names_.empty() ? std::to_string(x) : names_[x];
    }

    const std::vector<int>& flat_table() const { return table_; }
    const std::vector<int>& star_vector() const { return star_; }

private:
    InverseSemigroup(int n, std::vector<int> flat, std::optional<std::vector<int>> star,
                     std::vector<std::string> names, std::string name)
        : n_(n), table_(std::move(flat)), names_(std::move(names)), name_(std::move(name)) {
        check_associativity();
        derive_star(star);
        build_caches();
        cross_check();
    }

    void check_associativity() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                const int ij = product(i, j);
                for (int k = 0; k < n_; ++k)
                    if (product(ij, k) != product(i, product(j, k)))
                        throw ValidationError(
                            ValidationError::Kind::NotAssociative, {i, j, k},
                            "NotAssociative: (x" + std::to_string(i) + " x" + std::to_string(j) +
                                ") x" + std::to_string(k) + " != x" + std::to_string(i) + " (x" +
                                std::to_string(j) + " x" + std::to_string(k) + ")");
            }
    }

    // The generalized-inverse search doubles as the inverse-semigroup test:
    // every element must have exactly one s with xsx = x and sxs = s.
    void derive_star(const std::optional<std::vector<int>>& supplied) {
        star_.assign(n_, -1);
        for (int x = 0; x < n_; ++x) {
            int found = -1;
            for (int s = 0; s < n_; ++s) {
                if (product(product(x, s), x) == x && product(product(s, x), s) == s) {
                    if (found >= 0)
                        throw ValidationError(
                            ValidationError::Kind::InverseNotUnique, {x, found, s},
                            "InverseNotUnique: element " + std::to_string(x) +
                                " has generalized inverses " + std::to_string(found) + " and " +
                                std::to_string(s));
                    found = s;
                }
            }
            if (found < 0)
                throw ValidationError(ValidationError::Kind::NotRegular, {x, -1, -1},
                                      "NotRegular: element " + std::to_string(x) +
                                          " has no generalized inverse");
            star_[x] = found;
        }
        if (supplied) {
            for (int x = 0; x < n_; ++x)
                if ((*supplied)[x] != star_[x])
                    throw ValidationError(ValidationError::Kind::StarMismatch, {x, -1, -1},
                                          "StarMismatch: supplied star[" + std::to_string(x) +
                                              "] = " + std::to_string((*supplied)[x]) +
                                              " but the unique generalized inverse is " +
                                              std::to_string(star_[x]));
        }
    }

    void build_caches() {
        range_.resize(n_);
        domain_.resize(n_);
        range_class_.assign(n_, {});
        for (int x = 0; x < n_; ++x) {
            range_[x] = product(x, star_[x]);
            domain_[x] = product(star_[x], x);
        }
        for (int x = 0; x < n_; ++x)
            if (is_idempotent(x)) idempotents_.push_back(x);
        for (int y = 0; y < n_; ++y) range_class_[range_[y]].push_back(y);

        for (int e = 0; e < n_; ++e) {
            bool ident = true, zero = true;
            for (int x = 0; x < n_ && (ident || zero); ++x) {
                if (product(e, x) != x || product(x, e) != x) ident = false;
                if (product(e, x) != e || product(x, e) != e) zero = false;
            }
            if (ident && !identity_) identity_ = e;
            if (zero && !zero_) zero_ = e;
        }
    }

    // Consequences of the axioms, asserted as a guard against table or
    // indexing bugs: star is an involution, (xy)* = y*x*, and the
    // idempotents form a commutative subsemigroup.
    void cross_check() const {
        for (int x = 0; x < n_; ++x)
            if (star_[star_[x]] != x)
                throw ValidationError(ValidationError::Kind::StarMismatch, {x, -1, -1},
                                      "internal: star is not an involution at " +
                                          std::to_string(x));
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                if (star_[product(x, y)] != product(star_[y], star_[x]))
                    throw ValidationError(ValidationError::Kind::StarMismatch, {x, y, -1},
                                          "internal: (xy)* != y*x* at (" + std::to_string(x) +
                                              ", " + std::to_string(y) + ")");
        for (int e : idempotents_)
            for (int f : idempotents_) {
                const int ef = product(e, f);
                if (ef != product(f, e) || !is_idempotent(ef))
                    throw ValidationError(ValidationError::Kind::StarMismatch, {e, f, -1},
                                          "internal: idempotents do not commute at (" +
                                              std::to_string(e) + ", " + std::to_string(f) + ")");
            }
    }

    int n_;
    std::vector<int> table_;
    std::vector<int> star_;
    std::vector<std::string> names_;
    std::string name_;
    std::vector<int> range_, domain_;
    ElementSet idempotents_;
    std::vector<std::vector<int>> range_class_;
    std::optional<int> identity_, zero_;
};

/// Same element count, same table, same star. Names are ignored.
inline bool same_structure(const InverseSemigroup& a, const InverseSemigroup& b) {
    return a.size() == b.size() && a.flat_table() == b.flat_table() &&
           a.star_vector() == b.star_vector();
}

/// Two handles denote the same semigroup (pointer or structural equality).
inline bool same_base(const SemigroupPtr& a, const SemigroupPtr& b) {
    return a == b || (a && b && same_structure(*a, *b));
}

/// Natural partial order on idempotents: e <= f iff ef = e.
inline bool natural_order(const InverseSemigroup& s, int e, int f) {
    if (!s.is_idempotent(e))
        throw NotIdempotent("natural_order: element " + std::to_string(e) + " is not idempotent");
    if (!s.is_idempotent(f))
        throw NotIdempotent("natural_order: element " + std::to_string(f) + " is not idempotent");
    return s.product(e, f) == e;
}

/// The restricted product: xy when x*x = yy*, undefined otherwise.
inline std::optional<int> restricted_product(const InverseSemigroup& s, int x, int y) {
    if (s.domain_projection(x) != s.range_projection(y)) return std::nullopt;
    return s.product(x, y);
}

/// F • G = {st : s in F, t in G, s*s = tt*}.
inline ElementSet restricted_set_product(const InverseSemigroup& s, const ElementSet& f,
                                         const ElementSet& g) {
    auto in_range = [&](int x) { return x >= 0 && x < s.size(); };
    for (int a : f)
        if (!in_range(a)) throw std::invalid_argument("restricted_set_product: index out of range");
    for (int b : g)
        if (!in_range(b)) throw std::invalid_argument("restricted_set_product: index out of range");
    ElementSet out;
    for (int a : f)
        for (int b : g)
            if (auto p = restricted_product(s, a, b)) out.push_back(*p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// {s* : s in F}.
inline ElementSet star_set(const InverseSemigroup& s, const ElementSet& f) {
    ElementSet out;
    out.reserve(f.size());
    for (int a : f) out.push_back(s.star(a));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// The restricted semigroup S_r: the associated groupoid of S with a fresh
/// absorbing zero adjoined at index n, so that x • y = xy when x*x = yy* and
/// the new zero otherwise. A fresh zero is adjoined even if S already has
/// one. The result is validated like any other table.
inline SemigroupPtr restricted_semigroup(const InverseSemigroup& s) {
    const int n = s.size();
    const int z = n;
    std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1, z));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (auto p = restricted_product(s, x, y)) table[x][y] = *p;
    std::vector<int> star(n + 1);
    for (int x = 0; x < n; ++x) star[x] = s.star(x);
    star[z] = z;

    std::vector<std::string> names;
    if (s.has_names()) {
        names = s.names();
        std::string fresh = "0";
        while (std::find(names.begin(), names.end(), fresh) != names.end()) fresh += "'";
        names.push_back(fresh);
    }
    std::string name = s.name().empty() ? std::string{} : s.name() + "_r";

    auto sr = InverseSemigroup::validate_table(std::move(table), std::move(star),
                                               std::move(names), std::move(name));
    if (!sr->zero() || *sr->zero() != z)
        throw ValidationError(ValidationError::Kind::StarMismatch, {z, -1, -1},
                              "internal: adjoined element is not the zero of S_r");
    return sr;
}

/// True when `sr` is structurally the restricted semigroup of `s`
/// (fresh zero at index size(s)).
inline bool is_restricted_of(const InverseSemigroup& s, const InverseSemigroup& sr) {
    const int n = s.size();
    const int z = n;
    if (sr.size() != n + 1) return false;
    if (!sr.zero() || *sr.zero() != z) return false;
    if (sr.star(z) != z) return false;
    for (int x = 0; x < n; ++x) {
        if (sr.star(x) != s.star(x)) return false;
        if (sr.product(x, z) != z || sr.product(z, x) != z) return false;
        for (int y = 0; y < n; ++y) {
            auto p = restricted_product(s, x, y);
            if (sr.product(x, y) != (p ? *p : z)) return false;
        }
    }
    return true;
}

/// Exactly one idempotent, which is then the identity.
inline bool is_group(const InverseSemigroup& s) { return s.idempotents().size() == 1; }

/// Every element idempotent and the natural order total (a finite chain).
inline bool is_chain_semilattice(const InverseSemigroup& s) {
    if (static_cast<int>(s.idempotents().size()) != s.size()) return false;
    for (int e = 0; e < s.size(); ++e)
        for (int f = 0; f < s.size(); ++f) {
            const int ef = s.product(e, f);
            if (ef != e && ef != f) return false;
        }
    return true;
}

} // namespace invsemi
