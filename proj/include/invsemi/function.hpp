#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include "invsemi/random.hpp"
#include "invsemi/semigroup.hpp"

namespace invsemi {

using Complex = std::complex<double>;

/// A complex-valued function on the element set of a semigroup; the finite
/// realization of the l^p spaces. Value type: copying is cheap at desk
/// scale and every operation below is pure.
class SFunction {
public:
    SFunction(SemigroupPtr base, Eigen::VectorXcd values)
        : base_(std::move(base)), values_(std::move(values)) {
        if (values_.size() != base_->size())
            throw DimensionMismatch("SFunction: value count " + std::to_string(values_.size()) +
                                    " does not match element count " +
                                    std::to_string(base_->size()));
    }

    SFunction(SemigroupPtr base, std::initializer_list<Complex> values)
        : SFunction(std::move(base),
                    Eigen::Map<const Eigen::VectorXcd>(values.begin(),
                                                       static_cast<Eigen::Index>(values.size()))) {}

    static SFunction zero(SemigroupPtr base) {
        const int n = base->size();
        return SFunction(std::move(base), Eigen::VectorXcd::Zero(n));
    }

    /// The point mass at x.
    static SFunction delta(SemigroupPtr base, int x) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(base->size());
        v(x) = 1.0;
        return SFunction(std::move(base), std::move(v));
    }

    static SFunction from_real(SemigroupPtr base, const std::vector<double>& values) {
        Eigen::VectorXcd v(static_cast<Eigen::Index>(values.size()));
        for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
        return SFunction(std::move(base), std::move(v));
    }

    const SemigroupPtr& base() const { return base_; }
    int size() const { return base_->size(); }
    const Eigen::VectorXcd& values() const { return values_; }
    Complex operator()(int x) const { return values_(x); }

    SFunction conjugate() const { return SFunction(base_, values_.conjugate()); }

    friend SFunction operator+(const SFunction& a, const SFunction& b) {
        require_same_base(a, b, "operator+");
        return SFunction(a.base_, a.values_ + b.values_);
    }
    friend SFunction operator-(const SFunction& a, const SFunction& b) {
        require_same_base(a, b, "operator-");
        return SFunction(a.base_, a.values_ - b.values_);
    }
    friend SFunction operator*(Complex c, const SFunction& f) {
        return SFunction(f.base_, c * f.values_);
    }

    static void require_same_base(const SFunction& a, const SFunction& b, const char* where) {
        if (!same_base(a.base_, b.base_))
            throw BaseMismatch(std::string(where) + ": functions live on different semigroups");
    }

private:
    SemigroupPtr base_;
    Eigen::VectorXcd values_;
};

/// Full semigroup convolution: (f*g)(x) = sum over st = x of f(s) g(t).
inline SFunction convolve(const SFunction& f, const SFunction& g) {
    SFunction::require_same_base(f, g, "convolve");
    const auto& s = *f.base();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.size());
    for (int a = 0; a < s.size(); ++a) {
        if (f(a) == 0.0) continue;
        for (int b = 0; b < s.size(); ++b) out(s.product(a, b)) += f(a) * g(b);
    }
    return SFunction(f.base(), std::move(out));
}

/// Restricted (groupoid) convolution:
/// (f • g)(x) = sum over y with x*x = yy* of f(xy) g(y*).
/// The sum runs over the precomputed class {y : yy* = x*x}.
inline SFunction restricted_convolve(const SFunction& f, const SFunction& g) {
    SFunction::require_same_base(f, g, "restricted_convolve");
    const auto& s = *f.base();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.size());
    for (int x = 0; x < s.size(); ++x) {
        Complex acc = 0.0;
        for (int y : s.range_class(s.domain_projection(x)))
            acc += f(s.product(x, y)) * g(s.star(y));
        out(x) = acc;
    }
    return SFunction(f.base(), std::move(out));
}

/// f-check: x -> f(x*).
inline SFunction check_involution(const SFunction& f) {
    const auto& s = *f.base();
    Eigen::VectorXcd out(s.size());
    for (int x = 0; x < s.size(); ++x) out(x) = f(s.star(x));
    return SFunction(f.base(), std::move(out));
}

/// f-tilde: x -> conj(f(x*)).
inline SFunction tilde_involution(const SFunction& f) {
    const auto& s = *f.base();
    Eigen::VectorXcd out(s.size());
    for (int x = 0; x < s.size(); ++x) out(x) = std::conj(f(s.star(x)));
    return SFunction(f.base(), std::move(out));
}

/// l^p norm for p in {1, 2, inf}.
inline double norm_p(const SFunction& f, double p) {
    if (p == 1.0) return f.values().cwiseAbs().sum();
    if (p == 2.0) return f.values().norm();
    if (std::isinf(p)) return f.values().size() ? f.values().cwiseAbs().maxCoeff() : 0.0;
    throw std::invalid_argument("norm_p: p must be 1, 2 or infinity");
}

/// <f,g> = sum f(x) conj(g(x)).
inline Complex inner_product(const SFunction& f, const SFunction& g) {
    SFunction::require_same_base(f, g, "inner_product");
    return g.values().dot(f.values());
}

/// {x : |f(x)| > tol}. The default tol = 0 keeps this a genuine set
/// identity for exactly-constructed inputs; callers doing floating
/// computation pass their own tolerance.
inline ElementSet support(const SFunction& f, double tol = 0.0) {
    ElementSet out;
    for (int x = 0; x < f.size(); ++x)
        if (std::abs(f(x)) > tol) out.push_back(x);
    return out;
}

/// The identity of the restricted convolution algebra: the indicator of the
/// idempotent set. (sum_e delta_e) • delta_t = delta_{(tt*)t} = delta_t.
inline SFunction algebra_identity(SemigroupPtr base) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(base->size());
    for (int e : base->idempotents()) v(e) = 1.0;
    return SFunction(std::move(base), std::move(v));
}

/// Right-hand side of the polarization identity:
/// (f+g)•(f+g)~ - (f-g)•(f-g)~ + i (f+ig)•(f+ig)~ - i (f-ig)•(f-ig)~,
/// which equals 4 f•g~.
inline SFunction polarization_rhs(const SFunction& f, const SFunction& g) {
    SFunction::require_same_base(f, g, "polarization_rhs");
    const Complex i(0.0, 1.0);
    auto sq = [](const SFunction& h) { return restricted_convolve(h, tilde_involution(h)); };
    SFunction a = sq(f + g);
    SFunction b = sq(f - g);
    SFunction c = sq(f + i * g);
    SFunction d = sq(f - i * g);
    return (a - b) + (i * (c - d));
}

/// Independent standard complex Gaussian entries, reproducible from `seed`.
inline SFunction random_gaussian_function(SemigroupPtr base, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0 / std::sqrt(2.0));
    Eigen::VectorXcd v(base->size());
    for (int x = 0; x < base->size(); ++x) {
        const double re = nd(rng);
        const double im = nd(rng);
        v(x) = Complex(re, im);
    }
    return SFunction(std::move(base), std::move(v));
}

/// Gaussian-integer entries with |re|,|im| <= bound: inputs for which the
/// convolution sums are exact in double precision.
inline SFunction random_integer_function(SemigroupPtr base, std::uint64_t seed, int bound = 3) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-bound, bound);
    Eigen::VectorXcd v(base->size());
    for (int x = 0; x < base->size(); ++x) v(x) = Complex(d(rng), d(rng));
    return SFunction(std::move(base), std::move(v));
}

/// Strictly positive integer values on a random support (possibly empty).
/// Every contributing convolution term is positive, so supports compose
/// without cancellation.
inline SFunction random_positive_function(SemigroupPtr base, std::uint64_t seed, int bound = 3) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> val(1, bound);
    std::bernoulli_distribution keep(0.6);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(base->size());
    for (int x = 0; x < base->size(); ++x)
        if (keep(rng)) v(x) = static_cast<double>(val(rng));
    return SFunction(std::move(base), std::move(v));
}

} // namespace invsemi
