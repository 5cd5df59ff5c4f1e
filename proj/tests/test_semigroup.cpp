#include <catch2/catch_amalgamated.hpp>

#include "invsemi/generators.hpp"
#include "invsemi/semigroup.hpp"

using namespace invsemi;

namespace {

// Independent counting oracle for |I_k|: sum over domain sizes j of
// C(k,j)^2 * j!.
long long partial_bijection_count(int k) {
    auto binom = [](int n, int r) {
        long long v = 1;
        for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
        return v;
    };
    long long total = 0;
    for (int j = 0; j <= k; ++j) {
        long long fact = 1;
        for (int i = 2; i <= j; ++i) fact *= i;
        total += binom(k, j) * binom(k, j) * fact;
    }
    return total;
}

} // namespace

TEST_CASE("validate_table accepts Z_2 and derives star", "[semigroup]") {
    auto s = InverseSemigroup::validate_table({{0, 1}, {1, 0}});
    REQUIRE(s->size() == 2);
    CHECK(s->star(0) == 0);
    CHECK(s->star(1) == 1);
    REQUIRE(s->identity().has_value());
    CHECK(*s->identity() == 0);
    CHECK_FALSE(s->zero().has_value());
}

TEST_CASE("validate_table accepts the 2-chain under max", "[semigroup]") {
    auto s = InverseSemigroup::validate_table({{0, 1}, {1, 1}});
    CHECK(s->star(0) == 0);
    CHECK(s->star(1) == 1);
    REQUIRE(s->identity().has_value());
    CHECK(*s->identity() == 0);
    REQUIRE(s->zero().has_value());
    CHECK(*s->zero() == 1);
}

TEST_CASE("validate_table rejects the null table as not regular", "[semigroup]") {
    // Exhaustive oracle: for element 1, s in {0,1} gives 1 s 1 = 0 != 1.
    try {
        InverseSemigroup::validate_table({{0, 0}, {0, 0}});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.kind == ValidationError::Kind::NotRegular);
        CHECK(e.witness[0] == 1);
    }
}

TEST_CASE("validate_table rejects non-associative tables with a witness", "[semigroup]") {
    // x*x = x+1 mod 3 style scramble; (0 0) 1 = 1 1 = ... constructed to break.
    std::vector<std::vector<int>> t = {{1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    try {
        InverseSemigroup::validate_table(t);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.kind == ValidationError::Kind::NotAssociative);
        const auto [i, j, k] = e.witness;
        CHECK(t[t[i][j]][k] != t[i][t[j][k]]);
    }
}

TEST_CASE("validate_table rejects a semilattice with a wrong star", "[semigroup]") {
    CHECK_THROWS_AS(InverseSemigroup::validate_table({{0, 1}, {1, 1}}, std::vector<int>{1, 0}),
                    ValidationError);
}

TEST_CASE("validate_table rejects non-unique inverses", "[semigroup]") {
    // Left-zero style table is its own pathology; a 2x2 band: xy = x.
    // Every s satisfies x s x = x and s x s = s, so inverses are not unique.
    try {
        InverseSemigroup::validate_table({{0, 0}, {1, 1}});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.kind == ValidationError::Kind::InverseNotUnique);
    }
}

TEST_CASE("validate_table rejects malformed shapes", "[semigroup]") {
    CHECK_THROWS_AS(InverseSemigroup::validate_table({{0, 1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(InverseSemigroup::validate_table({{0, 2}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(InverseSemigroup::validate_table({}), std::invalid_argument);
}

TEST_CASE("idempotents", "[semigroup]") {
    CHECK(cyclic_group(2)->idempotents() == ElementSet{0});
    CHECK(chain_semilattice(3)->idempotents() == ElementSet{0, 1, 2});

    // I_2: the idempotents are exactly the partial identities, one per
    // subset of {0,1}, i.e. 4 of them.
    auto i2 = symmetric_inverse_monoid(2);
    REQUIRE(i2->size() == 7);
    CHECK(i2->idempotents().size() == 4);
    for (int e : i2->idempotents()) CHECK(i2->star(e) == e);

    // Every ss* is idempotent.
    for (int x = 0; x < i2->size(); ++x)
        CHECK(i2->is_idempotent(i2->range_projection(x)));
}

TEST_CASE("natural order on idempotents", "[semigroup]") {
    auto c3 = chain_semilattice(3);
    CHECK(natural_order(*c3, 2, 0));  // max(2,0) = 2, so 2 <= 0 in the natural order
    CHECK_FALSE(natural_order(*c3, 0, 2));
    for (int e = 0; e < 3; ++e) CHECK(natural_order(*c3, e, e));

    auto z2 = cyclic_group(2);
    CHECK(natural_order(*z2, 0, 0));
    CHECK_THROWS_AS(natural_order(*z2, 1, 0), NotIdempotent);
}

TEST_CASE("restricted product", "[semigroup]") {
    auto z2 = cyclic_group(2);
    REQUIRE(restricted_product(*z2, 1, 1).has_value());
    CHECK(*restricted_product(*z2, 1, 1) == 0);

    auto c2 = chain_semilattice(2);
    CHECK_FALSE(restricted_product(*c2, 0, 1).has_value());
    REQUIRE(restricted_product(*c2, 1, 1).has_value());
    CHECK(*restricted_product(*c2, 1, 1) == 1);

    // Semilattice: defined iff x = y (oracle: x*x = x, yy* = y).
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            CHECK(restricted_product(*c2, x, y).has_value() == (x == y));
}

TEST_CASE("restricted set product", "[semigroup]") {
    auto z2 = cyclic_group(2);
    CHECK(restricted_set_product(*z2, {1}, {1}) == ElementSet{0});
    auto c2 = chain_semilattice(2);
    CHECK(restricted_set_product(*c2, {0}, {1}).empty());
    CHECK(restricted_set_product(*c2, {0, 1}, {}).empty());

    // Brute-force oracle on I_2: elementwise filter of the definition.
    auto i2 = symmetric_inverse_monoid(2);
    ElementSet f{0, 2, 5}, g{1, 3, 4, 6};
    ElementSet expect;
    for (int a : f)
        for (int b : g)
            if (i2->domain_projection(a) == i2->range_projection(b))
                expect.push_back(i2->product(a, b));
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    CHECK(restricted_set_product(*i2, f, g) == expect);
}

TEST_CASE("restricted semigroup of Z_2", "[semigroup]") {
    auto z2 = cyclic_group(2);
    auto sr = restricted_semigroup(*z2);
    REQUIRE(sr->size() == 3);
    REQUIRE(sr->zero().has_value());
    const int z = *sr->zero();
    CHECK(z == 2);
    // Group case: the restricted product is total on S.
    CHECK(sr->product(0, 0) == 0);
    CHECK(sr->product(0, 1) == 1);
    CHECK(sr->product(1, 1) == 0);
    CHECK(sr->product(1, z) == z);
    CHECK(sr->star(z) == z);
    CHECK(is_restricted_of(*z2, *sr));
}

TEST_CASE("restricted semigroup of a chain collapses cross terms", "[semigroup]") {
    auto c2 = chain_semilattice(2);
    auto sr = restricted_semigroup(*c2);
    REQUIRE(sr->size() == 3);
    const int z = *sr->zero();
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) CHECK(sr->product(x, y) == (x == y ? x : z));
}

TEST_CASE("restricted semigroup validates and keeps star across a corpus", "[semigroup]") {
    std::vector<SemigroupPtr> corpus = {
        cyclic_group(2),           cyclic_group(6),         chain_semilattice(4),
        symmetric_inverse_monoid(2), symmetric_inverse_monoid(3),
        direct_product(cyclic_group(3), chain_semilattice(2)),
    };
    for (const auto& s : corpus) {
        auto sr = restricted_semigroup(*s);
        REQUIRE(sr->size() == s->size() + 1);
        for (int x = 0; x < s->size(); ++x) CHECK(sr->star(x) == s->star(x));
        CHECK(is_restricted_of(*s, *sr));
        // A fresh zero is adjoined even when S already has one.
        if (s->zero()) CHECK(*sr->zero() == s->size());
    }
}

TEST_CASE("symmetric inverse monoid sizes match the counting oracle", "[generators]") {
    CHECK(symmetric_inverse_monoid(1)->size() == partial_bijection_count(1));
    CHECK(symmetric_inverse_monoid(2)->size() == 7);
    CHECK(symmetric_inverse_monoid(3)->size() == 34);
    CHECK(partial_bijection_count(2) == 7);
    CHECK(partial_bijection_count(3) == 34);
    CHECK(partial_bijection_count(4) == 209);
    CHECK_THROWS_AS(symmetric_inverse_monoid(5), SizeLimit);
}

TEST_CASE("I_k has an identity and a zero", "[generators]") {
    auto i3 = symmetric_inverse_monoid(3);
    REQUIRE(i3->identity().has_value());
    REQUIRE(i3->zero().has_value());
    CHECK(i3->label(*i3->identity()) == "012");
    CHECK(i3->label(*i3->zero()) == "---");
}

TEST_CASE("chain and cyclic generators", "[generators]") {
    auto c1 = chain_semilattice(1);
    CHECK(c1->size() == 1);
    CHECK(c1->identity() == c1->zero()); // the trivial semigroup has both

    auto z6 = cyclic_group(6);
    CHECK(z6->size() == 6);
    CHECK(is_group(*z6));
    for (int i = 0; i < 6; ++i) CHECK(z6->product(i, z6->star(i)) == 0);

    CHECK(is_chain_semilattice(*chain_semilattice(5)));
    CHECK_FALSE(is_chain_semilattice(*z6));
    CHECK_FALSE(is_group(*chain_semilattice(2)));
}

TEST_CASE("direct product of Z_3 and a 2-chain", "[generators]") {
    auto p = direct_product(cyclic_group(3), chain_semilattice(2));
    CHECK(p->size() == 6);
    CHECK(p->identity().has_value());
    // No zero: (g,c) absorbing would force gh = g for all h in Z_3.
    CHECK_FALSE(p->zero().has_value());
    CHECK_FALSE(is_group(*p));
    CHECK_FALSE(is_chain_semilattice(*p));
}

TEST_CASE("group_from_table enforces a single idempotent", "[generators]") {
    CHECK_THROWS_AS(group_from_table({{0, 1}, {1, 1}}), NotAGroup);
    auto z3 = group_from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK(is_group(*z3));
    CHECK(z3->star(1) == 2);
}

TEST_CASE("idempotent set is commutative and closed", "[semigroup][property]") {
    for (const auto& s : {symmetric_inverse_monoid(3),
                          direct_product(cyclic_group(2), chain_semilattice(3))}) {
        for (int e : s->idempotents())
            for (int f : s->idempotents()) {
                CHECK(s->product(e, f) == s->product(f, e));
                CHECK(s->is_idempotent(s->product(e, f)));
            }
    }
}
