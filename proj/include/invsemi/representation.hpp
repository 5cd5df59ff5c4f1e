#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <utility>
#include <vector>

#include "invsemi/function.hpp"
#include "invsemi/report.hpp"
#include "invsemi/semigroup.hpp"

namespace invsemi {

/// A complex matrix acting on the function space of a semigroup.
struct LinearOperator {
    SemigroupPtr base;
    Eigen::MatrixXcd mat;

    int dim() const { return static_cast<int>(mat.rows()); }
};

/// One complex dim x dim matrix per element on a common space. Validators
/// decide whether the family is a *-representation or a restricted
/// representation; the container itself only enforces shape.
class Representation {
public:
    Representation(SemigroupPtr base, std::vector<Eigen::MatrixXcd> matrices)
        : base_(std::move(base)), mats_(std::move(matrices)) {
        if (static_cast<int>(mats_.size()) != base_->size())
            throw DimensionMismatch("Representation: expected one matrix per element");
        if (mats_.empty() || mats_[0].rows() == 0 || mats_[0].rows() != mats_[0].cols())
            throw DimensionMismatch("Representation: matrices must be square and nonempty");
        dim_ = static_cast<int>(mats_[0].rows());
        for (const auto& m : mats_)
            if (m.rows() != dim_ || m.cols() != dim_)
                throw DimensionMismatch("Representation: matrices must share one dimension");
    }

    const SemigroupPtr& base() const { return base_; }
    int dim() const { return dim_; }
    const Eigen::MatrixXcd& matrix(int x) const { return mats_[x]; }
    const std::vector<Eigen::MatrixXcd>& matrices() const { return mats_; }

private:
    SemigroupPtr base_;
    int dim_;
    std::vector<Eigen::MatrixXcd> mats_;
};

/// pi(x) = [1] for every x.
inline Representation trivial_representation(SemigroupPtr base) {
    std::vector<Eigen::MatrixXcd> mats(base->size(), Eigen::MatrixXcd::Ones(1, 1));
    return Representation(std::move(base), std::move(mats));
}

/// The restricted left regular representation on l^2(S):
/// lambda_r(s) delta_y = delta_{sy} when s*s = yy*, and 0 otherwise.
inline Representation lambda_r(SemigroupPtr base) {
    const auto& s = *base;
    const int n = s.size();
    std::vector<Eigen::MatrixXcd> mats(n, Eigen::MatrixXcd::Zero(n, n));
    for (int a = 0; a < n; ++a)
        for (int y : s.range_class(s.domain_projection(a))) mats[a](s.product(a, y), y) = 1.0;
    return Representation(base, std::move(mats));
}

/// The restricted right regular representation:
/// (rho_r(u) xi)(x) = xi(xu) when uu* = x*x, and 0 otherwise.
inline Representation rho_r(SemigroupPtr base) {
    const auto& s = *base;
    const int n = s.size();
    std::vector<Eigen::MatrixXcd> mats(n, Eigen::MatrixXcd::Zero(n, n));
    for (int u = 0; u < n; ++u)
        for (int x : s.range_class(s.range_projection(u))) {
            // x ranges over {x : x*x = uu*} = {x : (x*)(x*)* = uu*}.
            const int xs = s.star(x);
            mats[u](xs, s.product(xs, u)) = 1.0;
        }
    return Representation(base, std::move(mats));
}

/// Functional form of lambda_r: (lambda_r(a) f)(x) = f(a*x) when aa* = xx*.
inline SFunction apply_lambda_r(int a, const SFunction& f) {
    const auto& s = *f.base();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.size());
    for (int x = 0; x < s.size(); ++x)
        if (s.range_projection(a) == s.range_projection(x)) out(x) = f(s.product(s.star(a), x));
    return SFunction(f.base(), std::move(out));
}

/// Functional form of rho_r: (rho_r(u) f)(x) = f(xu) when uu* = x*x.
inline SFunction apply_rho_r(int u, const SFunction& f) {
    const auto& s = *f.base();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.size());
    for (int x = 0; x < s.size(); ++x)
        if (s.range_projection(u) == s.domain_projection(x)) out(x) = f(s.product(x, u));
    return SFunction(f.base(), std::move(out));
}

/// lambda-tilde_r(f) = sum_y f(y) lambda_r(y), assembled entrywise: the
/// (x,y) entry can only receive the single term s = x y*, since x = s y and
/// s*s = yy* force s = (sy)y* = xy*.
inline LinearOperator lift_lambda(const SFunction& f) {
    const auto& s = *f.base();
    const int n = s.size();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int a = s.product(x, s.star(y));
            if (s.product(a, y) == x && s.domain_projection(a) == s.range_projection(y))
                m(x, y) = f(a);
        }
    return {f.base(), std::move(m)};
}

/// rho-tilde_r(phi) = sum_z phi(z) rho_r(z); entrywise this is the
/// restricted Gram matrix phi(x* y) on pairs with xx* = yy*.
inline LinearOperator lift_rho(const SFunction& phi) {
    const auto& s = *phi.base();
    const int n = s.size();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (s.range_projection(x) == s.range_projection(y))
                m(x, y) = phi(s.product(s.star(x), y));
    return {phi.base(), std::move(m)};
}

/// sum_x f(x) pi(x) for an arbitrary representation.
inline LinearOperator lift(const Representation& pi, const SFunction& f) {
    if (!same_base(pi.base(), f.base()))
        throw BaseMismatch("lift: representation and function bases differ");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(pi.dim(), pi.dim());
    for (int x = 0; x < f.size(); ++x) m += f(x) * pi.matrix(x);
    return {pi.base(), std::move(m)};
}

namespace detail {

inline double operator_norm(const Eigen::MatrixXcd& m) {
    return m.jacobiSvd().singularValues()(0);
}

struct LawCheck {
    double residual = 0.0;
    int x = -1, y = -1;

    void update(double r, int a, int b) {
        if (r > residual) {
            residual = r;
            x = a;
            y = b;
        }
    }
};

} // namespace detail

/// Check pi(xy) = pi(x) pi(y), pi(x*) = pi(x)*, the partial isometry law
/// pi(x) pi(x)* pi(x) = pi(x), and the norm bound ||pi(x)|| <= 1. The detail
/// names the first law and witnessing pair that fails; spectrum holds the
/// ascending per-element operator norms.
inline CheckReport is_star_representation(const Representation& pi,
                                          std::optional<double> tol_opt = std::nullopt) {
    const auto& s = *pi.base();
    const int n = s.size();

    std::vector<double> norms(n);
    double max_norm = 0.0;
    for (int x = 0; x < n; ++x) {
        norms[x] = detail::operator_norm(pi.matrix(x));
        max_norm = std::max(max_norm, norms[x]);
    }
    const double tol = tol_opt.value_or(1e-9 * std::max(1.0, max_norm));

    CheckReport rep;
    rep.check = "star_representation";
    rep.tolerance = tol;
    rep.spectrum = norms;
    std::sort(rep.spectrum.begin(), rep.spectrum.end());

    detail::LawCheck mult, star, isom;
    for (int x = 0; x < n; ++x) {
        star.update((pi.matrix(s.star(x)) - pi.matrix(x).adjoint()).cwiseAbs().maxCoeff(), x, -1);
        isom.update((pi.matrix(x) * pi.matrix(x).adjoint() * pi.matrix(x) - pi.matrix(x))
                        .cwiseAbs()
                        .maxCoeff(),
                    x, -1);
        for (int y = 0; y < n; ++y)
            mult.update(
                (pi.matrix(x) * pi.matrix(y) - pi.matrix(s.product(x, y))).cwiseAbs().maxCoeff(),
                x, y);
    }

    if (mult.residual > tol)
        rep.detail = "product law fails at (" + s.label(mult.x) + ", " + s.label(mult.y) +
                     "), residual " + std::to_string(mult.residual);
    else if (star.residual > tol)
        rep.detail = "star law fails at " + s.label(star.x);
    else if (isom.residual > tol)
        rep.detail = "partial isometry law fails at " + s.label(isom.x);
    else if (max_norm > 1.0 + tol)
        rep.detail = "operator norm exceeds 1";
    else
        rep.verdict = true;
    return rep;
}

/// Check the two-branch law pi(x) pi(y) = pi(xy) when x*x = yy* and = 0
/// otherwise, plus the star law and the norm bound.
inline CheckReport is_restricted_representation(const Representation& pi,
                                                std::optional<double> tol_opt = std::nullopt) {
    const auto& s = *pi.base();
    const int n = s.size();

    std::vector<double> norms(n);
    double max_norm = 0.0;
    for (int x = 0; x < n; ++x) {
        norms[x] = detail::operator_norm(pi.matrix(x));
        max_norm = std::max(max_norm, norms[x]);
    }
    const double tol = tol_opt.value_or(1e-9 * std::max(1.0, max_norm));

    CheckReport rep;
    rep.check = "restricted_representation";
    rep.tolerance = tol;
    rep.spectrum = norms;
    std::sort(rep.spectrum.begin(), rep.spectrum.end());

    detail::LawCheck law, star;
    for (int x = 0; x < n; ++x) {
        star.update((pi.matrix(s.star(x)) - pi.matrix(x).adjoint()).cwiseAbs().maxCoeff(), x, -1);
        for (int y = 0; y < n; ++y) {
            const Eigen::MatrixXcd prod = pi.matrix(x) * pi.matrix(y);
            const double r = restricted_product(s, x, y)
                                 ? (prod - pi.matrix(s.product(x, y))).cwiseAbs().maxCoeff()
                                 : prod.cwiseAbs().maxCoeff();
            law.update(r, x, y);
        }
    }

    if (law.residual > tol)
        rep.detail = "restricted product law fails at (" + s.label(law.x) + ", " + s.label(law.y) +
                     "), residual " + std::to_string(law.residual);
    else if (star.residual > tol)
        rep.detail = "star law fails at " + s.label(star.x);
    else if (max_norm > 1.0 + tol)
        rep.detail = "operator norm exceeds 1";
    else
        rep.verdict = true;
    return rep;
}

/// Extend a restricted representation of S to a *-representation of S_r by
/// sending the adjoined zero to the zero operator.
inline Representation extend_to_Sr(const Representation& pi) {
    auto check = is_restricted_representation(pi);
    if (!check.verdict)
        throw NotRestricted("extend_to_Sr: " + check.detail);
    auto sr = restricted_semigroup(*pi.base());
    std::vector<Eigen::MatrixXcd> mats = pi.matrices();
    mats.push_back(Eigen::MatrixXcd::Zero(pi.dim(), pi.dim()));
    return Representation(std::move(sr), std::move(mats));
}

/// Inverse direction: drop the zero coordinate of a representation of S_r
/// that kills the zero. `s` must be the semigroup whose restricted semigroup
/// the input lives on.
inline Representation restrict_from_Sr(const Representation& pi0, SemigroupPtr s,
                                       double tol = 0.0) {
    if (!is_restricted_of(*s, *pi0.base()))
        throw BaseMismatch("restrict_from_Sr: base is not the restricted semigroup of s");
    const int z = s->size();
    if (pi0.matrix(z).cwiseAbs().maxCoeff() > tol)
        throw ZeroNotKilled("restrict_from_Sr: representation does not vanish on the zero");
    std::vector<Eigen::MatrixXcd> mats(pi0.matrices().begin(), pi0.matrices().end() - 1);
    return Representation(std::move(s), std::move(mats));
}

/// u(x) = <pi(x) xi, xi>.
inline SFunction coefficient_function(const Representation& pi, const Eigen::VectorXcd& xi) {
    if (xi.size() != pi.dim())
        throw DimensionMismatch("coefficient_function: vector length does not match dim");
    Eigen::VectorXcd out(pi.base()->size());
    for (int x = 0; x < pi.base()->size(); ++x) out(x) = xi.dot(pi.matrix(x) * xi);
    return SFunction(pi.base(), std::move(out));
}

} // namespace invsemi
