#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "invsemi/cli.hpp"
#include "invsemi/suite.hpp"

using namespace invsemi;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("invsemi_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

struct RunResult {
    int code;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

/// Run the built CLI binary and capture exit code + stdout.
RunResult run_cli(const TempDir& tmp, const std::string& args) {
    const std::string out_file = tmp.file("stdout.txt");
    const std::string cmd =
        std::string(INVSEMI_CLI_PATH) + " " + args + " > " + out_file + " 2> " +
        tmp.file("stderr.txt");
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out_file)};
}

} // namespace

TEST_CASE("suite registry covers every module invariant", "[suite]") {
    CHECK(suite_coverage_gaps().empty());
}

TEST_CASE("suite runs clean on a small corpus and is deterministic", "[suite]") {
    SuiteConfig cfg;
    cfg.corpus = {"Z2", "chain3", "I2"};
    cfg.trials = 25;
    cfg.seed = 7;
    auto a = run_suite(cfg);
    CHECK(a.exit_code == 0);
    CHECK(a.report["summary"]["fail"] == 0);
    CHECK(a.report["summary"]["all_pass"] == true);

    auto b = run_suite(cfg);
    CHECK(a.report.dump() == b.report.dump());

    cfg.seed = 8;
    auto c = run_suite(cfg);
    CHECK(c.exit_code == 0); // different seed still passes, bytes may differ
}

TEST_CASE("suite records invalid corpus entries and keeps going", "[suite]") {
    TempDir tmp;
    {
        std::ofstream bad(tmp.file("bad.json"));
        bad << R"({"table": [[0, 0], [0, 0]]})";
    }
    SuiteConfig cfg;
    cfg.corpus = {"Z2", tmp.file("bad.json")};
    cfg.trials = 5;
    auto run = run_suite(cfg);
    CHECK(run.exit_code == 2);
    CHECK(run.report["summary"]["invalid"] == 1);
    CHECK(run.report["summary"]["fail"] == 0);
    int z2_passes = 0;
    for (const auto& r : run.report["results"])
        if (r["semigroup"] == "Z2" && r["status"] == "pass") ++z2_passes;
    CHECK(z2_passes > 10);
}

TEST_CASE("cli validate", "[cli]") {
    TempDir tmp;
    save_json(semigroup_to_json(*cyclic_group(2)), tmp.file("z2.json"));
    auto ok = run_cli(tmp, "validate " + tmp.file("z2.json"));
    CHECK(ok.code == 0);
    auto rep = json::parse(ok.out);
    CHECK(rep["valid"] == true);
    CHECK(rep["identity"] == 0);
    CHECK(rep["zero"].is_null());
    CHECK(rep["idempotents"] == json::array({0}));

    {
        std::ofstream f(tmp.file("notregular.json"));
        f << R"({"table": [[0, 0], [0, 0]]})";
    }
    auto bad = run_cli(tmp, "validate " + tmp.file("notregular.json"));
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.out)["valid"] == false);

    {
        std::ofstream f(tmp.file("ragged.json"));
        f << R"({"table": [[0, 1], [1]]})";
    }
    CHECK(run_cli(tmp, "validate " + tmp.file("ragged.json")).code == 2);
    CHECK(run_cli(tmp, "validate " + tmp.file("missing.json")).code == 2);
}

TEST_CASE("cli build", "[cli]") {
    TempDir tmp;
    auto chain = run_cli(tmp, "build chain 5 --out " + tmp.file("c5.json"));
    CHECK(chain.code == 0);
    auto c5 = load_semigroup(tmp.file("c5.json"));
    CHECK(c5->size() == 5);
    REQUIRE(c5->zero().has_value());
    CHECK(*c5->zero() == 4);

    save_json(semigroup_to_json(*cyclic_group(2)), tmp.file("z2.json"));
    auto restricted = run_cli(tmp, "build restricted " + tmp.file("z2.json") + " --out " +
                                       tmp.file("z2r.json"));
    CHECK(restricted.code == 0);
    CHECK(load_semigroup(tmp.file("z2r.json"))->size() == 3);

    auto im = run_cli(tmp, "build inverse-monoid 3 --out " + tmp.file("i3.json"));
    CHECK(im.code == 0);
    CHECK(load_semigroup(tmp.file("i3.json"))->size() == 34);

    save_json(semigroup_to_json(*cyclic_group(3)), tmp.file("z3.json"));
    auto prod = run_cli(tmp, "build product " + tmp.file("z3.json") + " " + tmp.file("z2.json") +
                                 " --out " + tmp.file("z6p.json"));
    CHECK(prod.code == 0);
    CHECK(load_semigroup(tmp.file("z6p.json"))->size() == 6);

    CHECK(run_cli(tmp, "build inverse-monoid 9").code == 2);
    CHECK(run_cli(tmp, "build nonsense 3").code == 2);
    CHECK(run_cli(tmp, "build chain").code == 2);
}

TEST_CASE("cli check", "[cli]") {
    TempDir tmp;
    save_json(semigroup_to_json(*chain_semilattice(5)), tmp.file("c5.json"));
    save_json(json{{"semigroup", "chain5"}, {"values", {1, 1, 1, 1, 1}}}, tmp.file("ones.json"));
    auto ok = run_cli(tmp, "check " + tmp.file("c5.json") + " " + tmp.file("ones.json") +
                               " --which rpd");
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out)["verdict"] == true);

    save_json(semigroup_to_json(*chain_semilattice(2)), tmp.file("c2.json"));
    save_json(json{{"semigroup", "chain2"}, {"values", {1, 2}}}, tmp.file("inc.json"));
    auto bad = run_cli(tmp, "check " + tmp.file("c2.json") + " " + tmp.file("inc.json") +
                                " --which pd");
    CHECK(bad.code == 1);
    auto rep = json::parse(bad.out);
    CHECK(rep["verdict"] == false);
    CHECK(rep.contains("witness"));

    // Builtin names work as semigroup selectors too.
    auto builtin = run_cli(tmp, "check chain2 " + tmp.file("inc.json") + " --which rpd");
    CHECK(builtin.code == 0);

    // Mismatched function file is operational (exit 2).
    auto mismatch = run_cli(tmp, "check " + tmp.file("c5.json") + " " + tmp.file("inc.json") +
                                     " --which pd");
    CHECK(mismatch.code == 2);
}

TEST_CASE("cli factorize", "[cli]") {
    TempDir tmp;
    save_json(semigroup_to_json(*chain_semilattice(2)), tmp.file("c2.json"));
    save_json(json{{"semigroup", "chain2"}, {"values", {4, 1}}}, tmp.file("phi.json"));
    auto ok = run_cli(tmp, "factorize " + tmp.file("c2.json") + " " + tmp.file("phi.json") +
                               " --out " + tmp.file("xi.json"));
    CHECK(ok.code == 0);
    auto xi = load_function(tmp.file("xi.json"), chain_semilattice(2));
    CHECK(std::abs(xi(0) - Complex(2, 0)) < 1e-12);
    CHECK(std::abs(xi(1) - Complex(1, 0)) < 1e-12);
    CHECK(json::parse(ok.out)["reconstruction_error"].get<double>() <= 1e-8);

    save_json(json{{"semigroup", "chain2"}, {"values", {-1, 0}}}, tmp.file("neg.json"));
    auto bad = run_cli(tmp, "factorize " + tmp.file("c2.json") + " " + tmp.file("neg.json"));
    CHECK(bad.code == 1);
    auto rep = json::parse(bad.out);
    CHECK(rep["verdict"] == false);
    CHECK(rep.contains("witness"));

    // Group case: phi = 2 delta_0 on Z_2 factors through sqrt(2) delta_0.
    save_json(semigroup_to_json(*cyclic_group(2)), tmp.file("z2.json"));
    save_json(json{{"semigroup", "Z2"}, {"values", {2, 0}}}, tmp.file("two.json"));
    auto grp = run_cli(tmp, "factorize " + tmp.file("z2.json") + " " + tmp.file("two.json") +
                               " --out " + tmp.file("xi2.json"));
    CHECK(grp.code == 0);
    auto xi2 = load_function(tmp.file("xi2.json"), cyclic_group(2));
    CHECK(std::abs(xi2(0) - Complex(std::sqrt(2.0), 0)) < 1e-12);
    CHECK(std::abs(xi2(1)) < 1e-12);
}

TEST_CASE("cli random is seed-deterministic", "[cli]") {
    TempDir tmp;
    save_json(semigroup_to_json(*cyclic_group(6)), tmp.file("z6.json"));
    CHECK(run_cli(tmp, "random " + tmp.file("z6.json") + " --seed 5 --out " + tmp.file("a.json"))
              .code == 0);
    CHECK(run_cli(tmp, "random " + tmp.file("z6.json") + " --seed 5 --out " + tmp.file("b.json"))
              .code == 0);
    CHECK(run_cli(tmp, "random " + tmp.file("z6.json") + " --seed 6 --out " + tmp.file("c.json"))
              .code == 0);
    CHECK(slurp(tmp.file("a.json")) == slurp(tmp.file("b.json")));
    CHECK(slurp(tmp.file("a.json")) != slurp(tmp.file("c.json")));

    // The generated function is certified: check accepts it.
    CHECK(run_cli(tmp, "check " + tmp.file("z6.json") + " " + tmp.file("a.json") +
                           " --which extendible")
              .code == 0);
    CHECK(run_cli(tmp, "check " + tmp.file("z6.json") + " " + tmp.file("a.json") + " --which pd")
              .code == 0);
}

TEST_CASE("cli suite is byte-deterministic across processes", "[cli]") {
    TempDir tmp;
    const std::string args = "suite --corpus Z2 --corpus chain2 --trials 10 --seed 3 --out ";
    CHECK(run_cli(tmp, args + tmp.file("r1.json")).code == 0);
    CHECK(run_cli(tmp, args + tmp.file("r2.json")).code == 0);
    CHECK(slurp(tmp.file("r1.json")) == slurp(tmp.file("r2.json")));

    auto text = run_cli(tmp, "suite --corpus Z2 --trials 5 --format text");
    CHECK(text.code == 0);
    CHECK(text.out.find("[PASS]") != std::string::npos);
}

TEST_CASE("cli rejects unknown flags and missing subcommand", "[cli]") {
    TempDir tmp;
    CHECK(run_cli(tmp, "").code == 2);
    CHECK(run_cli(tmp, "frobnicate").code == 2);
    CHECK(run_cli(tmp, "--help").code == 0);
}
