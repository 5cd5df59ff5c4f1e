#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace invsemi {

/// Verdict plus numerical evidence from a decision procedure.
///
/// For Gram-based checks, `spectrum` holds the ascending real eigenvalues of
/// the Gram matrix (length n, or n+1 on S_r); for representation checks the
/// ascending per-element operator norms; for trial-based samplers the sorted
/// per-trial pairing values. A false verdict always carries a re-checkable
/// `witness`: a coefficient vector whose re-evaluated quadratic form (or
/// stated inequality) violates the property strictly beyond `tolerance`.
struct CheckReport {
    std::string check;
    bool verdict = false;
    std::vector<double> spectrum;
    std::optional<Eigen::VectorXcd> witness;
    std::optional<double> constant;
    double tolerance = 0.0;
    std::string detail;
};

} // namespace invsemi
