#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <utility>

#include "invsemi/function.hpp"
#include "invsemi/report.hpp"
#include "invsemi/representation.hpp"

namespace invsemi {

/// Thrown by godement_factorize when the input is not restricted positive
/// definite; carries the failing check with its eigen-witness.
struct NotRPD : Error {
    CheckReport report;
    explicit NotRPD(CheckReport r) : Error("input is not restricted positive definite"),
                                     report(std::move(r)) {}
};

/// Gram matrix of plain positive definiteness over the full element list:
/// K[i][j] = u(x_i* x_j).
inline Eigen::MatrixXcd gram_pd(const SFunction& u) {
    const auto& s = *u.base();
    const int n = s.size();
    Eigen::MatrixXcd k(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) k(i, j) = u(s.product(s.star(i), j));
    return k;
}

/// Restricted Gram matrix: the same entry when x_i x_i* = x_j x_j*, else 0.
/// Coincides entrywise with lift_rho(u).
inline Eigen::MatrixXcd gram_rpd(const SFunction& u) {
    const auto& s = *u.base();
    const int n = s.size();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (s.range_projection(i) == s.range_projection(j))
                m(i, j) = u(s.product(s.star(i), j));
    return m;
}

namespace detail {

/// Coefficient vector demonstrating that a non-Hermitian Gram matrix has a
/// quadratic form with nonzero imaginary part. The candidates e_i, e_i+e_j
/// and e_i+i e_j cover every way hermiticity can fail at the worst pair.
inline Eigen::VectorXcd asymmetry_witness(const Eigen::MatrixXcd& k) {
    const int n = static_cast<int>(k.rows());
    int bi = 0, bj = 0;
    double worst = -1.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double d = std::abs(k(i, j) - std::conj(k(j, i)));
            if (d > worst) {
                worst = d;
                bi = i;
                bj = j;
            }
        }
    auto form = [&](const Eigen::VectorXcd& c) { return (c.adjoint() * k * c)(0, 0); };
    Eigen::VectorXcd best = Eigen::VectorXcd::Zero(n);
    best(bi) = 1.0;
    double score = std::abs(std::imag(form(best)));
    for (Complex w : {Complex(1, 0), Complex(0, 1)}) {
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n);
        c(bi) = 1.0;
        if (bj != bi) c(bj) = w;
        const double sc = std::abs(std::imag(form(c)));
        if (sc > score) {
            score = sc;
            best = c;
        }
    }
    return best;
}

/// Shared verdict logic: Hermitian within tol and smallest eigenvalue
/// >= -tol. No Hermitian-part symmetrization: an asymmetric Gram is a hard
/// failure, reported with a witness whose quadratic form is non-real.
inline CheckReport psd_verdict(std::string check, const Eigen::MatrixXcd& k,
                               std::optional<double> tol_opt) {
    CheckReport rep;
    rep.check = std::move(check);

    const double herm_dev = (k - k.adjoint()).cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        Eigen::MatrixXcd(0.5 * (k + k.adjoint())));
    const Eigen::VectorXd ev = es.eigenvalues();
    const double radius = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    rep.tolerance = tol_opt.value_or(1e-9 * std::max(1.0, radius));
    rep.spectrum.assign(ev.data(), ev.data() + ev.size());

    if (herm_dev > rep.tolerance) {
        rep.witness = asymmetry_witness(k);
        rep.detail = "gram matrix is not hermitian, deviation " + std::to_string(herm_dev);
    } else if (ev(0) < -rep.tolerance) {
        rep.witness = es.eigenvectors().col(0);
        rep.detail = "negative eigenvalue " + std::to_string(ev(0));
    } else {
        rep.verdict = true;
    }
    return rep;
}

struct Eigensystem {
    Eigen::MatrixXcd vectors;
    Eigen::VectorXd values;
};

inline Eigensystem hermitian_eigensystem(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        Eigen::MatrixXcd(0.5 * (m + m.adjoint())));
    return {es.eigenvectors(), es.eigenvalues()};
}

} // namespace detail

/// Decide u in P(S): the full Gram matrix must be Hermitian and positive
/// semidefinite. Positivity of the full-matrix form implies positivity for
/// every finite tuple with repetition, since a tuple's Gram is a selection
/// of the full Gram.
inline CheckReport is_pd(const SFunction& u, std::optional<double> tol = std::nullopt) {
    return detail::psd_verdict("pd", gram_pd(u), tol);
}

/// Decide u in P_r(S) via the restricted Gram matrix.
inline CheckReport is_rpd(const SFunction& u, std::optional<double> tol = std::nullopt) {
    return detail::psd_verdict("rpd", gram_rpd(u), tol);
}

/// Decide u in P_{r,e}(S): u = u~, the restricted Gram M is PSD, and
/// conj(u) lies in the column space of M. The quantified inequality
/// |sum c_i u(x_i)|^2 <= c * (restricted form) has a finite best constant
/// exactly when conj(u) is in range(M), and that constant is
/// conj(u)^H M^+ conj(u).
inline CheckReport is_extendible_rpd(const SFunction& u, std::optional<double> tol = std::nullopt) {
    const auto& s = *u.base();
    const Eigen::MatrixXcd m = gram_rpd(u);
    CheckReport rep = detail::psd_verdict("extendible", m, tol);

    double sym_dev = 0.0;
    int sym_worst = 0;
    for (int x = 0; x < s.size(); ++x) {
        const double d = std::abs(u(x) - std::conj(u(s.star(x))));
        if (d > sym_dev) {
            sym_dev = d;
            sym_worst = x;
        }
    }
    if (sym_dev > rep.tolerance) {
        rep.verdict = false;
        Eigen::VectorXcd w = Eigen::VectorXcd::Zero(s.size());
        w(sym_worst) = 1.0;
        rep.witness = w;
        rep.detail = "u differs from tilde(u) at " + s.label(sym_worst) + " by " +
                     std::to_string(sym_dev);
        return rep;
    }
    if (!rep.verdict) return rep;

    auto [vec, val] = detail::hermitian_eigensystem(m);
    const double cutoff = 1e-10 * std::max(val.maxCoeff(), 0.0);
    const Eigen::VectorXcd v = u.values().conjugate();
    Eigen::VectorXcd coords = vec.adjoint() * v;
    Eigen::VectorXcd in_range = Eigen::VectorXcd::Zero(v.size());
    Complex constant = 0.0;
    for (int i = 0; i < val.size(); ++i) {
        if (val(i) > cutoff) {
            in_range += coords(i) * vec.col(i);
            constant += std::norm(coords(i)) / val(i);
        }
    }
    const double residual = (in_range - v).norm();
    if (residual > 1e-8 * u.values().norm()) {
        rep.verdict = false;
        rep.witness = v - in_range; // in ker(M): the restricted form vanishes on it
        rep.detail = "conj(u) is not in the column space, residual " + std::to_string(residual);
        return rep;
    }
    rep.constant = std::real(constant);
    return rep;
}

/// Result of the constructive factorization phi = xi • xi~.
struct GodementFactorization {
    SFunction xi;
    double reconstruction_error;
};

/// Factor a restricted positive definite phi as xi • xi~ with
/// xi = conj(P^{1/2} e), where P = lift_rho(phi) and e is the exact
/// identity of the restricted convolution algebra. P commutes with every
/// lambda-lift, so <lambda_r(t*) P^{1/2} e, P^{1/2} e> collapses to
/// conj(phi)(t), making the reconstruction exact up to rounding.
inline GodementFactorization godement_factorize(const SFunction& phi,
                                                std::optional<double> tol = std::nullopt) {
    CheckReport check = is_rpd(phi, tol);
    if (!check.verdict) throw NotRPD(std::move(check));

    const LinearOperator p = lift_rho(phi);
    auto [vec, val] = detail::hermitian_eigensystem(p.mat);
    Eigen::VectorXd clipped = val;
    for (int i = 0; i < clipped.size(); ++i) {
        if (clipped(i) < -check.tolerance) throw NotRPD(std::move(check));
        clipped(i) = std::sqrt(std::max(clipped(i), 0.0));
    }
    const Eigen::MatrixXcd root =
        vec * clipped.asDiagonal() * vec.adjoint();

    const SFunction e = algebra_identity(phi.base());
    SFunction xi(phi.base(), Eigen::VectorXcd((root * e.values()).conjugate()));

    const SFunction recon = restricted_convolve(xi, tilde_involution(xi));
    const double err = (phi.values() - recon.values()).cwiseAbs().maxCoeff();
    if (err > 1e-8)
        throw ReconstructionFailed("godement_factorize: reconstruction error " +
                                   std::to_string(err));
    return {std::move(xi), err};
}

/// Extension by zero along S -> S_r.
inline SFunction tau_extend(const SFunction& u, const SemigroupPtr& sr) {
    if (!is_restricted_of(*u.base(), *sr))
        throw BaseMismatch("tau_extend: target is not the restricted semigroup of the base");
    Eigen::VectorXcd v(sr->size());
    v.head(u.size()) = u.values();
    v(u.size()) = 0.0;
    return SFunction(sr, std::move(v));
}

inline SFunction tau_extend(const SFunction& u) {
    return tau_extend(u, restricted_semigroup(*u.base()));
}

/// Restriction along S_r -> S (drops the adjoined zero coordinate).
inline SFunction tau_restrict(const SFunction& v, const SemigroupPtr& s) {
    if (!is_restricted_of(*s, *v.base()))
        throw BaseMismatch("tau_restrict: function does not live on the restricted semigroup of s");
    return SFunction(s, Eigen::VectorXcd(v.values().head(s->size())));
}

/// Seeded generator of certified extendible restricted positive definite
/// functions: phi = xi • xi~ for a complex Gaussian xi.
inline SFunction random_rpd(SemigroupPtr base, std::uint64_t seed) {
    SFunction xi = random_gaussian_function(std::move(base), seed);
    SFunction phi = restricted_convolve(xi, tilde_involution(xi));
    CheckReport cert = is_extendible_rpd(phi);
    if (!cert.verdict)
        throw ReconstructionFailed("random_rpd: generated function failed certification: " +
                                   cert.detail);
    return phi;
}

/// Sampled necessary condition for dual positivity: for random f, the
/// pairing sum_x (f~ • f)(x) u(x) equals the restricted quadratic form with
/// coefficients f, so it must be real and nonnegative when u is restricted
/// positive definite. Spectrum holds the sorted real parts of the sampled
/// pairings; a failing trial ships f as the witness.
inline CheckReport positive_functional_check(const SFunction& u, int trials, std::uint64_t seed,
                                             std::optional<double> tol_opt = std::nullopt) {
    CheckReport rep;
    rep.check = "positive_functional";
    rep.verdict = true;
    for (int t = 0; t < trials; ++t) {
        SFunction f = random_gaussian_function(u.base(), derive_seed(seed, 0x70f, t));
        SFunction h = restricted_convolve(tilde_involution(f), f);
        Complex pairing = 0.0;
        for (int x = 0; x < u.size(); ++x) pairing += h(x) * u(x);

        const double scale = norm_p(u, std::numeric_limits<double>::infinity()) *
                             norm_p(f, 1.0) * norm_p(f, 1.0);
        const double tol = tol_opt.value_or(1e-9 * std::max(1.0, scale));
        rep.tolerance = std::max(rep.tolerance, tol);
        rep.spectrum.push_back(std::real(pairing));
        if (std::real(pairing) < -tol || std::abs(std::imag(pairing)) > tol) {
            rep.verdict = false;
            rep.witness = f.values();
            rep.detail = "trial " + std::to_string(t) + " pairing " +
                         std::to_string(std::real(pairing)) + (std::abs(std::imag(pairing)) > tol
                         ? " with nonreal part" : "");
            break;
        }
    }
    std::sort(rep.spectrum.begin(), rep.spectrum.end());
    return rep;
}

} // namespace invsemi
