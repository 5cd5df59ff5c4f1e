#pragma once

#include <functional>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "invsemi/corpus.hpp"
#include "invsemi/io.hpp"
#include "invsemi/positive.hpp"

// The reproducible verification suite: every module invariant, run against
// every corpus semigroup it applies to, with per-trial seeds derived from
// (master seed, property id, semigroup name, trial index) so the report is
// identical no matter how entries are scheduled.

namespace invsemi {

struct SuiteConfig {
    std::vector<std::string> corpus = default_corpus_names();
    int trials = 200;
    std::uint64_t seed = 1;
    std::optional<double> tolerance; // overrides the default numerical tolerances
    std::string format = "json";     // "json" or "text"
    std::string out_path;            // empty writes to stdout
};

namespace suite_detail {

struct Context {
    SemigroupPtr s;
    std::string semigroup_name;
    int trials = 200;
    std::uint64_t master_seed = 1;
    std::string property_id;
    std::optional<double> tol;

    std::uint64_t trial_seed(int t, std::uint64_t salt = 0) const {
        return derive_seed(master_seed ^ hash_string(property_id),
                           hash_string(semigroup_name) ^ salt, static_cast<std::uint64_t>(t));
    }
};

struct Outcome {
    bool pass = true;
    double max_residual = 0.0;
    long long checks = 0;
    std::string note;
    int current_trial = -1; // set by trial loops; frozen into fail_trial on failure
    int fail_trial = -1;
    json witness = nullptr;

    void residual(double r) { max_residual = std::max(max_residual, r); }
    void expect(bool ok, const std::string& what) { expect_with(ok, what, nullptr); }
    void expect_with(bool ok, const std::string& what, json w) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            note = what;
            fail_trial = current_trial;
            witness = std::move(w);
        }
    }
    void expect_verdict(const CheckReport& rep, bool want, const std::string& what) {
        expect_with(rep.verdict == want, what, report_to_json(rep));
    }
};

struct Property {
    std::string id;
    std::string description;
    bool per_semigroup = true;
    std::function<bool(const InverseSemigroup&)> applies; // null = always
    std::function<Outcome(const Context&)> run;
};

// ---- independent definitional forms (direct table loops; no Gram reuse) --

inline Complex def_form_pd(const InverseSemigroup& s, const Eigen::VectorXcd& u,
                           const std::vector<int>& xs, const std::vector<Complex>& c) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
            acc += std::conj(c[i]) * c[j] * u(s.product(s.star(xs[i]), xs[j]));
    return acc;
}

inline Complex def_form_rpd(const InverseSemigroup& s, const Eigen::VectorXcd& u,
                            const std::vector<int>& xs, const std::vector<Complex>& c) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (s.product(xs[i], s.star(xs[i])) == s.product(xs[j], s.star(xs[j])))
                acc += std::conj(c[i]) * c[j] * u(s.product(s.star(xs[i]), xs[j]));
    return acc;
}

// ---- properties ----------------------------------------------------------

inline Outcome run_star_restriction(const Context& ctx) {
    Outcome out;
    auto sr = restricted_semigroup(*ctx.s);
    for (int x = 0; x < ctx.s->size(); ++x)
        out.expect(sr->star(x) == ctx.s->star(x), "star of S_r disagrees on S at " +
                                                      ctx.s->label(x));
    out.expect(sr->star(ctx.s->size()) == ctx.s->size(), "adjoined zero is not self-adjoint");
    return out;
}

inline Outcome run_idempotents_commute(const Context& ctx) {
    Outcome out;
    for (int e : ctx.s->idempotents())
        for (int f : ctx.s->idempotents()) {
            out.expect(ctx.s->product(e, f) == ctx.s->product(f, e), "idempotents do not commute");
            out.expect(ctx.s->is_idempotent(ctx.s->product(e, f)),
                       "idempotent product not idempotent");
        }
    return out;
}

inline Outcome run_product_zero_free(const Context& ctx) {
    Outcome out;
    std::vector<SemigroupPtr> groups = {cyclic_group(2), cyclic_group(3), cyclic_group(5),
                                        detail::symmetric_group_3()};
    for (const auto& g : groups)
        for (int k = 2; k <= 4; ++k) {
            auto p = direct_product(*g, *chain_semilattice(k));
            out.expect(p->identity().has_value(), "product lost the identity");
            out.expect(!p->zero().has_value(), "group x chain unexpectedly has a zero");
        }
    return out;
}

inline Outcome run_product_matches_delta(const Context& ctx) {
    Outcome out;
    for (int x = 0; x < ctx.s->size(); ++x)
        for (int y = 0; y < ctx.s->size(); ++y) {
            auto d = restricted_convolve(SFunction::delta(ctx.s, x), SFunction::delta(ctx.s, y));
            auto p = restricted_product(*ctx.s, x, y);
            out.expect((norm_p(d, 1.0) != 0.0) == p.has_value(),
                       "delta product support disagrees with the partial product");
            auto expected = p ? SFunction::delta(ctx.s, *p) : SFunction::zero(ctx.s);
            out.expect((d.values() - expected.values()).cwiseAbs().maxCoeff() == 0.0,
                       "delta_x • delta_y differs from delta_{xy}");
        }
    return out;
}

inline Outcome run_restricted_validates(const Context& ctx) {
    Outcome out;
    auto sr = restricted_semigroup(*ctx.s); // validates internally
    out.expect(sr->zero().has_value() && *sr->zero() == ctx.s->size(),
               "fresh zero not detected as the zero of S_r");
    out.expect(is_restricted_of(*ctx.s, *sr), "structural check of S_r failed");
    return out;
}

inline Outcome run_bullet_associative(const Context& ctx) {
    Outcome out;
    for (int t = 0; t < ctx.trials; ++t) {
        out.current_trial = t;
        auto f = random_integer_function(ctx.s, ctx.trial_seed(t, 1), 2);
        auto g = random_integer_function(ctx.s, ctx.trial_seed(t, 2), 2);
        auto h = random_integer_function(ctx.s, ctx.trial_seed(t, 3), 2);
        const double r = (restricted_convolve(restricted_convolve(f, g), h).values() -
                          restricted_convolve(f, restricted_convolve(g, h)).values())
                             .cwiseAbs()
                             .maxCoeff();
        out.residual(r);
        out.expect(r == 0.0, "associativity fails on exact inputs");
    }
    return out;
}

inline Outcome run_tilde_antihomomorphism(const Context& ctx) {
    Outcome out;
    for (int t = 0; t < ctx.trials; ++t) {
        out.current_trial = t;
        auto f = random_integer_function(ctx.s, ctx.trial_seed(t, 1));
        auto g = random_integer_function(ctx.s, ctx.trial_seed(t, 2));
        const double r = (tilde_involution(restricted_convolve(f, g)).values() -
                          restricted_convolve(tilde_involution(g), tilde_involution(f)).values())
                             .cwiseAbs()
                             .maxCoeff();
        out.residual(r);
        out.expect(r == 0.0, "(f•g)~ != g~•f~ on exact inputs");
    }
    return out;
}

inline Outcome run_support_identity(const Context& ctx) {
    Outcome out;
    for (int t = 0; t < ctx.trials; ++t) {
        out.current_trial = t;
        // Exact direction: strictly positive integer values, no cancellation.
        auto f = random_positive_function(ctx.s, ctx.trial_seed(t, 1));
        auto g = random_positive_function(ctx.s, ctx.trial_seed(t, 2));
        auto lhs = support(restricted_convolve(f, tilde_involution(g)));
        auto rhs = restricted_set_product(*ctx.s, support(f), star_set(*ctx.s, support(g)));
        out.expect(lhs == rhs, "supp(f•g~) != supp(f)•supp(g)* on exact inputs");

        // Complex inputs: inclusion always; equality almost surely.
        auto fc = random_gaussian_function(ctx.s, ctx.trial_seed(t, 3));
        auto gc = random_gaussian_function(ctx.s, ctx.trial_seed(t, 4));
        auto lhs_c = support(restricted_convolve(fc, tilde_involution(gc)), 1e-12);
        auto rhs_c = restricted_set_product(*ctx.s, support(fc), star_set(*ctx.s, support(gc)));
        out.expect(std::includes(rhs_c.begin(), rhs_c.end(), lhs_c.begin(), lhs_c.end()),
                   "support inclusion fails on complex inputs");
        out.expect(lhs_c == rhs_c, "support equality fails on complex inputs");
    }
    return out;
}

inline Outcome run_polarization(const Context& ctx) {
    Outcome out;
    const double tol = ctx.tol.value_or(1e-12);
    for (int t = 0; t < ctx.trials; ++t) {
        out.current_trial = t;
        auto f = random_gaussian_function(ctx.s, ctx.trial_seed(t, 1));
        auto g = random_gaussian_function(ctx.s, ctx.trial_seed(t, 2));
        const double r =
            (polarization_rhs(f, g).values() -
             4.0 * restricted_convolve(f, tilde_involution(g)).values()).cwiseAbs().maxCoeff();
        out.residual(r);
        out.expect(r <= tol, "polarization identity residual " + std::to_string(r));
    }
    return out;
}

inline Outcome run_l1_submultiplicative(const Context& ctx) {
    Outcome out;
    const double tol = ctx.tol.value_or(1e-10);
    for (int t = 0; t < ctx.trials; ++t) {
        out.current_trial = t;
        auto f = random_gaussian_function(ctx.s, ctx.trial_seed(t, 1));
        auto g = random_gaussian_function(ctx.s, ctx.trial_seed(t, 2));
        const double slack =
            norm_p(f, 1.0) * norm_p(g, 1.0) - norm_p(restricted_convolve(f, g), 1.0);
        out.residual(std::max(0.0, -slack));
        out.expect(slack >= -tol, "l1 submultiplicativity violated");
    }
    return out;
}

inline Outcome run_commutation(const Context& ctx) {
    Outcome out;
    const double tol = ctx.tol.value_or(1e-10);
    for (int t = 0; t < ctx.trials; ++t) {
        out.current_trial = t;
        auto f = random_gaussian_function(ctx.s, ctx.trial_seed(t, 1));
        auto g = random_gaussian_function(ctx.s, ctx.trial_seed(t, 2));
        const Eigen::MatrixXcd a = lift_lambda(f).mat;
        const Eigen::MatrixXcd b = lift_rho(g).mat;
        const double r = (a * b - b * a).cwiseAbs().maxCoeff();
        out.residual(r);
        out.expect(r <= tol, "lambda and rho lifts do not commute, residual " + std::to_string(r));
    }
    return out;
}

inline Outcome run_rho_lift_positive(const Context& ctx) {
    Outcome out;
    for (int t = 0; t < ctx.trials; ++t) {
        out.current_trial = t;
        auto phi = random_rpd(ctx.s, ctx.trial_seed(t));
        const Eigen::MatrixXcd p = lift_rho(phi).mat;
        out.expect((p - gram_rpd(phi)).cwiseAbs().maxCoeff() == 0.0,
                   "lift_rho differs from the restricted gram matrix");
        auto rep = is_rpd(phi, ctx.tol);
        out.residual(std::max(0.0, -rep.spectrum.front()));
        out.expect_verdict(rep, true, "lift of a restricted-PD function is not PSD");
    }
    return out;
}

inline Outcome run_gram_identity(const Context& ctx) {
    Outcome out;
    for (int t = 0; t < std::max(1, ctx.trials / 10); ++t) {
        auto phi = random_integer_function(ctx.s, ctx.trial_seed(t));
        const Eigen::MatrixXcd p = lift_rho(phi).mat;
        for (int x = 0; x < ctx.s->size(); ++x)
            for (int y = 0; y < ctx.s->size(); ++y) {
                const Complex expect =
                    ctx.s->range_projection(x) == ctx.s->range_projection(y)
                        ? phi(ctx.s->product(ctx.s->star(y), x))
                        : Complex(0, 0);
                out.expect(p(y, x) == expect, "gram identity entry mismatch");
            }
    }
    return out;
}

inline Outcome run_lambda_lift_homomorphism(const Context& ctx) {
    Outcome out;
    for (int t = 0; t < ctx.trials; ++t) {
        out.current_trial = t;
        auto f = random_integer_function(ctx.s, ctx.trial_seed(t, 1), 2);
        auto g = random_integer_function(ctx.s, ctx.trial_seed(t, 2), 2);
        const double r = (lift_lambda(restricted_convolve(f, g)).mat -
                          lift_lambda(f).mat * lift_lambda(g).mat).cwiseAbs().maxCoeff();
        out.residual(r);
        out.expect(r == 0.0, "lift_lambda is not multiplicative for • on exact inputs");
    }
    return out;
}

inline Outcome run_regular_restricted(const Context& ctx) {
    Outcome out;
    out.expect(is_restricted_representation(lambda_r(ctx.s), ctx.tol).verdict,
               "lambda_r fails the restricted representation laws");
    out.expect(is_restricted_representation(rho_r(ctx.s), ctx.tol).verdict,
               "rho_r fails the restricted representation laws");
    return out;
}

inline Outcome run_extension_roundtrip(const Context& ctx) {
    Outcome out;
    auto pi = lambda_r(ctx.s);
    auto pi0 = extend_to_Sr(pi);
    out.expect(is_star_representation(pi0, ctx.tol).verdict,
               "extension of lambda_r is not a *-representation of S_r");
    auto back = restrict_from_Sr(pi0, ctx.s);
    for (int x = 0; x < ctx.s->size(); ++x)
        out.expect((back.matrix(x) - pi.matrix(x)).cwiseAbs().maxCoeff() == 0.0,
                   "restriction does not invert extension");
    auto again = extend_to_Sr(back);
    for (int x = 0; x < pi0.base()->size(); ++x)
        out.expect((again.matrix(x) - pi0.matrix(x)).cwiseAbs().maxCoeff() == 0.0,
                   "extension does not invert restriction");
    return out;
}

inline Outcome run_theorem_roundtrip(const Context& ctx) {
    Outcome out;
    for (int t = 0; t < ctx.trials; ++t) {
        out.current_trial = t;
        auto xi = random_gaussian_function(ctx.s, ctx.trial_seed(t, 1));
        auto phi = restricted_convolve(xi, tilde_involution(xi));
        out.expect_verdict(is_extendible_rpd(phi, ctx.tol), true,
                           "xi • xi~ is not certified extendible");
        auto fac = godement_factorize(phi, ctx.tol);
        out.residual(fac.reconstruction_error);
        out.expect(fac.reconstruction_error <= 1e-8, "factorization reconstruction too large");

        // Both routes must agree on a generic (almost surely non-PD) draw.
        auto u = random_gaussian_function(ctx.s, ctx.trial_seed(t, 2));
        bool fac_ok = true;
        try {
            godement_factorize(u, ctx.tol);
        } catch (const NotRPD&) {
            fac_ok = false;
        }
        out.expect(is_extendible_rpd(u, ctx.tol).verdict == fac_ok,
                   "extendibility and factorizability disagree");
    }
    return out;
}

inline Outcome run_finite_collapse(const Context& ctx) {
    Outcome out;
    for (int t = 0; t < ctx.trials; ++t) {
        out.current_trial = t;
        auto w = random_integer_function(ctx.s, ctx.trial_seed(t, 1));
        SFunction u = Complex(0.5, 0) * (w + tilde_involution(w));
        const double r = (gram_rpd(u) * algebra_identity(ctx.s).values() -
                          u.values().conjugate()).cwiseAbs().maxCoeff();
        out.residual(r);
        out.expect(r == 0.0, "M * indicator(E) != conj(u) for symmetric u");

        auto phi = random_rpd(ctx.s, ctx.trial_seed(t, 2));
        if (is_rpd(phi, ctx.tol).verdict)
            out.expect_verdict(is_extendible_rpd(phi, ctx.tol), true,
                               "restricted-PD input not extendible at finite scale");
    }
    return out;
}

inline Outcome run_group_coincidence(const Context& ctx) {
    Outcome out;
    for (int t = 0; t < ctx.trials; ++t) {
        out.current_trial = t;
        SFunction u = SFunction::zero(ctx.s);
        switch (t % 3) {
            case 0: u = random_gaussian_function(ctx.s, ctx.trial_seed(t)); break;
            case 1: {
                auto w = random_gaussian_function(ctx.s, ctx.trial_seed(t));
                u = Complex(0.5, 0) * (w + tilde_involution(w));
                break;
            }
            default: u = random_rpd(ctx.s, ctx.trial_seed(t));
        }
        auto rep_pd = is_pd(u, ctx.tol);
        auto rep_rpd = is_rpd(u, ctx.tol);
        out.expect_with(rep_pd.verdict == rep_rpd.verdict, "pd and rpd verdicts differ on a group",
                        json{{"pd", report_to_json(rep_pd)}, {"rpd", report_to_json(rep_rpd)}});
        out.expect((gram_pd(u) - gram_rpd(u)).cwiseAbs().maxCoeff() == 0.0,
                   "gram matrices differ on a group");
    }
    return out;
}

inline Outcome run_chain_characterization(const Context& ctx) {
    Outcome out;
    const int k = ctx.s->size();
    auto oracle = [&](const std::vector<double>& vals) {
        for (int i = 0; i < k; ++i) {
            if (vals[i] < 0.0) return false;
            if (i + 1 < k && vals[i] < vals[i + 1]) return false;
        }
        return true;
    };
    auto check_one = [&](const std::vector<double>& vals) {
        auto rep = is_pd(SFunction::from_real(ctx.s, vals), ctx.tol);
        out.expect_with(rep.verdict == oracle(vals),
                        "chain pd verdict disagrees with monotone oracle", report_to_json(rep));
    };
    const std::vector<double> grid = {-1.0, 0.0, 0.5, 1.0, 2.0};
    if (k <= 4) {
        std::vector<double> vals(k, 0.0);
        std::vector<int> digit(k, 0);
        while (true) {
            for (int i = 0; i < k; ++i) vals[i] = grid[digit[i]];
            check_one(vals);
            int pos = 0;
            while (pos < k && ++digit[pos] == static_cast<int>(grid.size())) digit[pos++] = 0;
            if (pos == k) break;
        }
    }
    for (int t = 0; t < ctx.trials; ++t) {
        out.current_trial = t;
        std::mt19937_64 rng(ctx.trial_seed(t));
        std::uniform_int_distribution<int> pick(0, static_cast<int>(grid.size()) - 1);
        std::vector<double> vals(k);
        for (auto& v : vals) v = grid[pick(rng)];
        if (t % 3 == 0) std::sort(vals.begin(), vals.end(), std::greater<>()); // decreasing draw
        check_one(vals);
    }
    out.expect(is_rpd(SFunction::from_real(ctx.s, std::vector<double>(k, 1.0)), ctx.tol).verdict,
               "constant 1 is not restricted positive definite on the chain");
    return out;
}

inline Outcome run_tau_isomorphism(const Context& ctx) {
    Outcome out;
    auto sr = restricted_semigroup(*ctx.s);
    for (int t = 0; t < ctx.trials; ++t) {
        out.current_trial = t;
        auto u = random_integer_function(ctx.s, ctx.trial_seed(t, 1));
        auto v = tau_extend(u, sr);
        out.expect(v(ctx.s->size()) == Complex(0, 0), "extension does not vanish at the zero");
        out.expect((tau_restrict(v, ctx.s).values() - u.values()).cwiseAbs().maxCoeff() == 0.0,
                   "tau restriction does not invert extension");

        // Affine on the cone, exact for dyadic coefficients.
        auto w = random_integer_function(ctx.s, ctx.trial_seed(t, 2));
        std::mt19937_64 rng(ctx.trial_seed(t, 3));
        std::uniform_int_distribution<int> eighth(0, 16);
        const Complex alpha(eighth(rng) / 8.0, 0.0), beta(eighth(rng) / 8.0, 0.0);
        const double r = (tau_extend(alpha * u + beta * w, sr).values() -
                          (alpha * tau_extend(u, sr) + beta * tau_extend(w, sr)).values())
                             .cwiseAbs()
                             .maxCoeff();
        out.expect(r == 0.0, "tau is not affine");

        // Quadratic-form identity, exact on integer data.
        std::uniform_int_distribution<int> coeff(-2, 2);
        std::vector<int> xs(sr->size());
        std::iota(xs.begin(), xs.end(), 0);
        std::vector<Complex> c(sr->size());
        for (auto& z : c) z = Complex(coeff(rng), coeff(rng));
        std::vector<int> xs_s(ctx.s->size());
        std::iota(xs_s.begin(), xs_s.end(), 0);
        const std::vector<Complex> c_s(c.begin(), c.end() - 1);
        const SFunction usym = Complex(0.5, 0) * (u + tilde_involution(u));
        const SFunction vsym = tau_extend(usym, sr);
        out.expect(def_form_pd(*sr, vsym.values(), xs, c) ==
                       def_form_rpd(*ctx.s, usym.values(), xs_s, c_s),
                   "quadratic forms of u and its extension differ");

        // Verdict identification on both positive and generic draws.
        SFunction probe = (t % 2 == 0) ? random_rpd(ctx.s, ctx.trial_seed(t, 4)) : usym;
        auto rep_s = is_rpd(probe, ctx.tol);
        auto rep_sr = is_pd(tau_extend(probe, sr), ctx.tol);
        out.expect_with(rep_s.verdict == rep_sr.verdict,
                        "rpd on S and pd-vanishing-at-zero on S_r disagree",
                        json{{"on_s", report_to_json(rep_s)}, {"on_sr", report_to_json(rep_sr)}});
    }
    return out;
}

inline Outcome run_tuple_oracle(const Context& ctx) {
    Outcome out;
    for (int t = 0; t < ctx.trials; ++t) {
        out.current_trial = t;
        SFunction u = (t % 2 == 0) ? random_rpd(ctx.s, ctx.trial_seed(t, 1))
                                   : random_gaussian_function(ctx.s, ctx.trial_seed(t, 2));
        std::mt19937_64 rng(ctx.trial_seed(t, 3));
        std::uniform_int_distribution<int> len(1, 6), el(0, ctx.s->size() - 1);
        std::normal_distribution<double> nd;
        const int m = len(rng);
        std::vector<int> xs(m);
        std::vector<Complex> c(m);
        Eigen::VectorXcd agg = Eigen::VectorXcd::Zero(ctx.s->size());
        for (int i = 0; i < m; ++i) {
            xs[i] = el(rng);
            c[i] = Complex(nd(rng), nd(rng));
            agg(xs[i]) += c[i];
        }
        const Complex direct = def_form_pd(*ctx.s, u.values(), xs, c);
        const Complex via_full = (agg.adjoint() * gram_pd(u) * agg)(0, 0);
        const double scale = std::max(1.0, std::abs(direct));
        out.residual(std::abs(direct - via_full) / scale);
        out.expect(std::abs(direct - via_full) <= 1e-10 * scale,
                   "tuple pd form differs from the aggregated full-gram form");

        const Complex direct_r = def_form_rpd(*ctx.s, u.values(), xs, c);
        const Complex via_full_r = (agg.adjoint() * gram_rpd(u) * agg)(0, 0);
        const double scale_r = std::max(1.0, std::abs(direct_r));
        out.expect(std::abs(direct_r - via_full_r) <= 1e-10 * scale_r,
                   "tuple rpd form differs from the aggregated full-gram form");

        if (is_pd(u, ctx.tol).verdict)
            out.expect(std::real(direct) >= -1e-8 * scale,
                       "pd verdict contradicts a sampled tuple form");
        auto ext = is_extendible_rpd(u, ctx.tol);
        if (ext.verdict) {
            Complex lhs = 0.0;
            for (int i = 0; i < m; ++i) lhs += c[i] * u(xs[i]);
            out.expect(std::norm(lhs) <=
                           *ext.constant * std::real(direct_r) + 1e-7 * std::max(1.0, std::norm(lhs)),
                       "extendibility constant fails a sampled tuple");
        }
    }
    return out;
}

inline Outcome run_determinism(const Context& ctx) {
    Outcome out;
    auto z6 = cyclic_group(6);
    auto once = [&] {
        auto phi = random_rpd(z6, derive_seed(ctx.master_seed, 0xd));
        return report_to_json(is_extendible_rpd(phi)).dump();
    };
    const std::string a = once(), b = once();
    out.expect(a == b, "identical seeds produced different report bytes");
    out.checks = 1;
    return out;
}

std::vector<std::string> coverage_gaps(); // defined after the registry

inline Outcome run_coverage(const Context&) {
    Outcome out;
    auto gaps = coverage_gaps();
    std::string missing;
    for (const auto& g : gaps) missing += g + " ";
    out.expect(gaps.empty(), "module invariants without a suite entry: " + missing);
    return out;
}

inline const std::vector<Property>& registry() {
    static const std::vector<Property> props = [] {
        auto zero_free = [](const InverseSemigroup& s) { return !s.zero().has_value(); };
        std::vector<Property> v;
        v.push_back({"semigroup.star_restriction",
                     "the involution of S_r restricted to S is the involution of S", true, nullptr,
                     run_star_restriction});
        v.push_back({"semigroup.idempotents_commute",
                     "idempotents form a commutative subsemigroup", true, nullptr,
                     run_idempotents_commute});
        v.push_back({"semigroup.group_chain_product_zero_free",
                     "group x chain products are zero-free with identity", false, nullptr,
                     run_product_zero_free});
        v.push_back({"semigroup.restricted_product_matches_delta",
                     "the partial product is defined exactly where delta_x • delta_y != 0", true,
                     nullptr, run_product_matches_delta});
        v.push_back({"semigroup.restricted_validates",
                     "S_r validates as an inverse semigroup with the fresh zero", true, nullptr,
                     run_restricted_validates});
        v.push_back({"functions.bullet_associative",
                     "the restricted convolution is associative", true, nullptr,
                     run_bullet_associative});
        v.push_back({"functions.tilde_antihomomorphism", "(f•g)~ = g~•f~", true, nullptr,
                     run_tilde_antihomomorphism});
        v.push_back({"functions.support_identity", "supp(f•g~) = supp(f)•supp(g)*", true, nullptr,
                     run_support_identity});
        v.push_back({"functions.polarization", "4 f•g~ equals the four-term polarization sum",
                     true, nullptr, run_polarization});
        v.push_back({"functions.l1_submultiplicative", "||f•g||_1 <= ||f||_1 ||g||_1", true,
                     nullptr, run_l1_submultiplicative});
        v.push_back({"representations.commutation",
                     "lambda lifts commute with rho lifts", true, nullptr, run_commutation});
        v.push_back({"representations.rho_lift_positive",
                     "rho lifts of restricted-PD functions are PSD", true, nullptr,
                     run_rho_lift_positive});
        v.push_back({"representations.gram_identity",
                     "<rho-lift(phi) delta_x, delta_y> = (lambda_r(y) phi)(x)", true, nullptr,
                     run_gram_identity});
        v.push_back({"representations.lambda_lift_homomorphism",
                     "lift_lambda(f•g) = lift_lambda(f) lift_lambda(g)", true, nullptr,
                     run_lambda_lift_homomorphism});
        v.push_back({"representations.regular_restricted",
                     "lambda_r and rho_r are restricted representations", true, nullptr,
                     run_regular_restricted});
        v.push_back({"representations.extension_roundtrip",
                     "extension to S_r and restriction back are mutually inverse", true, nullptr,
                     run_extension_roundtrip});
        v.push_back({"positive.theorem_roundtrip",
                     "phi is extendible restricted-PD iff phi = xi • xi~ for some xi", true,
                     nullptr, run_theorem_roundtrip});
        v.push_back({"positive.finite_collapse",
                     "at finite scale restricted-PD implies extendible", true, nullptr,
                     run_finite_collapse});
        v.push_back({"positive.group_coincidence", "pd and rpd coincide on groups", true,
                     [](const InverseSemigroup& s) { return is_group(s); },
                     run_group_coincidence});
        v.push_back({"positive.chain_characterization",
                     "on chains pd = nonnegative and decreasing; constant 1 is rpd", true,
                     [](const InverseSemigroup& s) { return is_chain_semilattice(s); },
                     run_chain_characterization});
        v.push_back({"positive.tau_isomorphism",
                     "extension by zero is an affine cone isomorphism onto the vanishing-at-zero"
                     " positive definite functions",
                     true, zero_free, run_tau_isomorphism});
        v.push_back({"positive.tuple_oracle",
                     "definitional tuple forms agree in sign with the full-gram decisions", true,
                     nullptr, run_tuple_oracle});
        v.push_back({"suite.determinism", "fixed seeds reproduce identical report bytes", false,
                     nullptr, run_determinism});
        v.push_back({"suite.coverage", "every module invariant has a suite entry", false, nullptr,
                     run_coverage});
        return v;
    }();
    return props;
}

/// The module invariants the suite must cover, by stable identifier.
inline const std::vector<std::string>& required_invariant_ids() {
    static const std::vector<std::string> ids = {
        "semigroup.star_restriction",
        "semigroup.idempotents_commute",
        "semigroup.group_chain_product_zero_free",
        "semigroup.restricted_product_matches_delta",
        "functions.bullet_associative",
        "functions.tilde_antihomomorphism",
        "functions.support_identity",
        "functions.polarization",
        "functions.l1_submultiplicative",
        "representations.commutation",
        "representations.rho_lift_positive",
        "representations.gram_identity",
        "representations.lambda_lift_homomorphism",
        "positive.theorem_roundtrip",
        "positive.finite_collapse",
        "positive.group_coincidence",
        "positive.chain_characterization",
        "positive.tau_isomorphism",
        "positive.tuple_oracle",
        "suite.determinism",
        "suite.coverage",
    };
    return ids;
}

inline std::vector<std::string> coverage_gaps() {
    std::set<std::string> have;
    for (const auto& p : registry()) have.insert(p.id);
    std::vector<std::string> gaps;
    for (const auto& id : required_invariant_ids())
        if (!have.count(id)) gaps.push_back(id);
    return gaps;
}

} // namespace suite_detail

inline std::vector<std::string> suite_coverage_gaps() { return suite_detail::coverage_gaps(); }

struct SuiteRun {
    json report;
    int exit_code = 0; // 0 all pass, 1 property failure, 2 corpus entry unusable
};

/// Run every applicable (property, semigroup) pair and assemble a
/// deterministic report. Corpus entries that fail to load or validate are
/// recorded as "invalid" and skipped; the remaining entries still run.
inline SuiteRun run_suite(SuiteConfig cfg) {
    cfg.trials = std::max(1, cfg.trials);
    SuiteRun run;
    json results = json::array();

    struct Entry {
        std::string selector;
        SemigroupPtr s;
        std::string error;
    };
    std::vector<Entry> entries;
    for (const auto& sel : cfg.corpus) {
        Entry e{sel, nullptr, {}};
        try {
            e.s = resolve_semigroup(sel);
        } catch (const std::exception& ex) {
            e.error = ex.what();
        }
        entries.push_back(std::move(e));
    }

    int pass = 0, fail = 0, skip = 0, invalid = 0;
    for (const auto& e : entries) {
        if (!e.s) {
            ++invalid;
            results.push_back({{"property", "corpus.load"},
                               {"semigroup", e.selector},
                               {"status", "invalid"},
                               {"note", e.error}});
        }
    }

    for (const auto& prop : suite_detail::registry()) {
        auto record = [&](const std::string& sg_name, const suite_detail::Outcome& out) {
            json r{{"property", prop.id},
                   {"semigroup", sg_name},
                   {"status", out.pass ? "pass" : "fail"},
                   {"checks", out.checks},
                   {"max_residual", out.max_residual}};
            if (!out.note.empty()) r["note"] = out.note;
            if (out.fail_trial >= 0) r["trial"] = out.fail_trial;
            if (!out.witness.is_null()) r["witness"] = out.witness;
            results.push_back(std::move(r));
            (out.pass ? pass : fail)++;
        };

        if (!prop.per_semigroup) {
            suite_detail::Context ctx{nullptr, "*", cfg.trials, cfg.seed, prop.id, cfg.tolerance};
            record("*", prop.run(ctx));
            continue;
        }
        for (const auto& e : entries) {
            if (!e.s) continue;
            if (prop.applies && !prop.applies(*e.s)) {
                ++skip;
                results.push_back({{"property", prop.id},
                                   {"semigroup", e.selector},
                                   {"status", "skip"}});
                continue;
            }
            suite_detail::Context ctx{e.s, e.selector, cfg.trials, cfg.seed, prop.id,
                                      cfg.tolerance};
            record(e.selector, prop.run(ctx));
        }
    }

    std::sort(results.begin(), results.end(), [](const json& a, const json& b) {
        const auto ka = std::pair<std::string, std::string>(a["property"], a["semigroup"]);
        const auto kb = std::pair<std::string, std::string>(b["property"], b["semigroup"]);
        return ka < kb;
    });

    run.report = json{{"config",
                       {{"corpus", cfg.corpus},
                        {"trials", cfg.trials},
                        {"seed", cfg.seed},
                        {"tolerance", cfg.tolerance ? json(*cfg.tolerance) : json(nullptr)}}},
                      {"results", std::move(results)},
                      {"summary",
                       {{"pass", pass},
                        {"fail", fail},
                        {"skip", skip},
                        {"invalid", invalid},
                        {"all_pass", fail == 0 && invalid == 0}}}};
    run.exit_code = invalid > 0 ? 2 : (fail > 0 ? 1 : 0);
    return run;
}

/// Text rendering of a suite report, derived from the JSON.
inline std::string render_suite_text(const json& report) {
    std::ostringstream os;
    for (const auto& r : report["results"]) {
        const std::string status = r["status"];
        std::string line = status == "pass"      ? "[PASS]"
                           : status == "fail"    ? "[FAIL]"
                           : status == "invalid" ? "[INVALID]"
                                                 : "[SKIP]";
        line += " " + r["property"].get<std::string>() + " @ " + r["semigroup"].get<std::string>();
        os << line;
        if (r.contains("max_residual")) {
            os.setf(std::ios::scientific);
            os << " (max residual " << std::setprecision(2) << r["max_residual"].get<double>()
               << ")";
            os.unsetf(std::ios::scientific);
        }
        if (r.contains("note")) os << " -- " << r["note"].get<std::string>();
        os << '\n';
    }
    const auto& s = report["summary"];
    os << "pass " << s["pass"] << ", fail " << s["fail"] << ", skip " << s["skip"]
       << ", invalid " << s["invalid"] << '\n';
    return os.str();
}

} // namespace invsemi
