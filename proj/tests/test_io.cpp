#include <catch2/catch_amalgamated.hpp>
#include <filesystem>

#include "invsemi/corpus.hpp"
#include "invsemi/generators.hpp"
#include "invsemi/io.hpp"
#include "invsemi/positive.hpp"

using namespace invsemi;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("invsemi_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("semigroup json roundtrip", "[io]") {
    auto i2 = symmetric_inverse_monoid(2);
    auto j = semigroup_to_json(*i2);
    auto back = semigroup_from_json(j);
    CHECK(same_structure(*i2, *back));
    CHECK(back->name() == "I2");
    CHECK(back->names() == i2->names());

    // star is optional on input.
    j.erase("star");
    CHECK(same_structure(*i2, *semigroup_from_json(j)));
}

TEST_CASE("semigroup json rejections", "[io]") {
    CHECK_THROWS_AS(semigroup_from_json(json{{"table", json::array()}}), ParseError);
    CHECK_THROWS_AS(semigroup_from_json(json::parse(R"({"table": [[0, 1], [1]]})")), ParseError);
    CHECK_THROWS_AS(semigroup_from_json(json::parse(R"({"table": [[0, 2], [1, 0]]})")), ParseError);
    CHECK_THROWS_AS(semigroup_from_json(json::parse(R"({"table": [[0.5, 0], [0, 0]]})")),
                    ParseError);
    CHECK_THROWS_AS(semigroup_from_json(json::parse(R"({"table": [[0,1],[1,0]], "star": [0]})")),
                    ParseError);
    // Well-formed but mathematically invalid: a different error class.
    CHECK_THROWS_AS(semigroup_from_json(json::parse(R"({"table": [[0, 0], [0, 0]]})")),
                    ValidationError);
}

TEST_CASE("function json roundtrip and validation", "[io]") {
    auto z2 = cyclic_group(2);
    SFunction f(z2, {Complex(1.5, -2.0), Complex(0, 3)});
    auto j = function_to_json(f);
    CHECK(j["semigroup"] == "Z2");
    auto back = function_from_json(j, z2);
    CHECK((back.values() - f.values()).cwiseAbs().maxCoeff() == 0.0);

    // Plain real arrays are accepted.
    auto real = function_from_json(json::parse(R"({"semigroup": "Z2", "values": [3, 4]})"), z2);
    CHECK(real(0) == Complex(3, 0));
    CHECK(real(1) == Complex(4, 0));

    CHECK_THROWS_AS(function_from_json(json::parse(R"({"semigroup": "Z3", "values": [1, 2]})"), z2),
                    BaseMismatch);
    CHECK_THROWS_AS(function_from_json(json::parse(R"({"semigroup": "Z2", "values": [1]})"), z2),
                    BaseMismatch);
    CHECK_THROWS_AS(function_from_json(json::parse(R"({"values": [1, "x"]})"), z2), ParseError);
}

TEST_CASE("representation json roundtrip", "[io]") {
    auto z2 = cyclic_group(2);
    auto lam = lambda_r(z2);
    auto j = representation_to_json(lam);
    auto back = representation_from_json(j, z2);
    for (int x = 0; x < 2; ++x)
        CHECK((back.matrix(x) - lam.matrix(x)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(is_restricted_representation(back).verdict);

    j["dim"] = 3;
    CHECK_THROWS_AS(representation_from_json(j, z2), ParseError);
}

TEST_CASE("check report json keys", "[io]") {
    auto c2 = chain_semilattice(2);
    auto good = report_to_json(is_extendible_rpd(SFunction::from_real(c2, {1, 1})));
    CHECK(good["check"] == "extendible");
    CHECK(good["verdict"] == true);
    CHECK(good["spectrum"].size() == 2);
    CHECK(good.contains("constant"));
    CHECK(good.contains("tolerance"));
    CHECK_FALSE(good.contains("witness"));

    auto bad = report_to_json(is_pd(SFunction::from_real(c2, {1, 2})));
    CHECK(bad["verdict"] == false);
    CHECK(bad.contains("witness"));
    CHECK(bad["witness"].size() == 2);
    CHECK(bad["witness"][0].size() == 2);
}

TEST_CASE("file save and load", "[io]") {
    TempDir tmp;
    auto s = direct_product(cyclic_group(3), chain_semilattice(2));
    save_json(semigroup_to_json(*s), tmp.file("p.json"));
    auto loaded = load_semigroup(tmp.file("p.json"));
    CHECK(same_structure(*s, *loaded));

    auto phi = random_rpd(s, 99);
    save_json(function_to_json(phi), tmp.file("phi.json"));
    auto phi2 = load_function(tmp.file("phi.json"), loaded);
    CHECK((phi2.values() - phi.values()).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(load_json(tmp.file("missing.json")), ParseError);
    {
        std::ofstream bad(tmp.file("bad.json"));
        bad << "{ not json";
    }
    CHECK_THROWS_AS(load_json(tmp.file("bad.json")), ParseError);
}

TEST_CASE("corpus resolution", "[io]") {
    CHECK(builtin_semigroup("chain4")->size() == 4);
    CHECK(builtin_semigroup("Z6")->size() == 6);
    CHECK(builtin_semigroup("S3")->size() == 6);
    CHECK(is_group(*builtin_semigroup("S3")));
    CHECK(builtin_semigroup("I3")->size() == 34);
    CHECK(builtin_semigroup("Z3xchain2")->size() == 6);
    CHECK(builtin_semigroup("nonsense") == nullptr);
    CHECK_THROWS_AS(resolve_semigroup("nonsense"), ParseError);

    // S_3 is nonabelian: pd checks see a genuinely noncommutative group.
    auto s3 = builtin_semigroup("S3");
    bool noncommutative = false;
    for (int a = 0; a < 6 && !noncommutative; ++a)
        for (int b = 0; b < 6; ++b)
            if (s3->product(a, b) != s3->product(b, a)) {
                noncommutative = true;
                break;
            }
    CHECK(noncommutative);

    TempDir tmp;
    save_json(semigroup_to_json(*cyclic_group(5)), tmp.file("z5.json"));
    CHECK(resolve_semigroup(tmp.file("z5.json"))->size() == 5);

    // Bare names fall back to INVSEMI_CORPUS_DIR.
    setenv("INVSEMI_CORPUS_DIR", tmp.path.string().c_str(), 1);
    CHECK(resolve_semigroup("z5")->size() == 5);
    unsetenv("INVSEMI_CORPUS_DIR");
}
