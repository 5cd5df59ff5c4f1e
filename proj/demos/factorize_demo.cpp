// Walk through the library on one semigroup: build Z_3 x chain(2), draw a
// certified restricted positive definite function, factor it as xi • xi~,
// and verify the reconstruction.

#include <iostream>

#include "invsemi/generators.hpp"
#include "invsemi/io.hpp"
#include "invsemi/positive.hpp"

using namespace invsemi;

int main() {
    auto s = direct_product(cyclic_group(3), chain_semilattice(2));
    std::cout << s->name() << " has " << s->size() << " elements, "
              << s->idempotents().size() << " idempotents\n";

    auto phi = random_rpd(s, 2024);
    auto report = is_extendible_rpd(phi);
    std::cout << "random phi is extendible restricted-PD with constant "
              << *report.constant << "\n";

    auto fac = godement_factorize(phi);
    std::cout << "factorized: ||phi - xi•xi~||_inf = " << fac.reconstruction_error << "\n";

    auto recon = restricted_convolve(fac.xi, tilde_involution(fac.xi));
    std::cout << "largest coefficient of xi: "
              << norm_p(fac.xi, std::numeric_limits<double>::infinity()) << "\n"
              << "report json:\n" << report_to_json(report).dump(2) << "\n";
    return 0;
}
