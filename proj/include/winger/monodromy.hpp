#pragma once

#include "winger/isotypic.hpp"

namespace winger {

enum class VanishingKind { truncation, edge };
const char* kind_name(VanishingKind k);

struct VanishingSet {
    Model model;
    VanishingKind kind;
    std::vector<IntVector> loops;    // chain coordinates, one per +- pair
    std::vector<IntVector> classes;  // H_1 class coordinates
};

VanishingSet vanishing_set(Model m, VanishingKind k);

// x + sum_l <x, l> l over the classes of the set.
IntVector picard_lefschetz(const VanishingSet& vs, const IntVector& x);
// Applied column by column to a map in class coordinates.
IntMatrix picard_lefschetz(const VanishingSet& vs, const IntMatrix& phi);

struct ExpressFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Column convention: T(U) = a U + c V, T(V) = b U + d V gives [[a, b], [c, d]].
OoMatrix local_monodromy(Model m, VanishingKind k, int basepoint_sign = 1);

OoMatrix basis_change_p();
OoMatrix third_generator();  // [[1, 0], [-X, 1]]
// inverse of rho_{Sigma,trc} * rho_{Sigma,edge} * third_generator()
OoMatrix rho_zero();
std::vector<OoMatrix> global_generators();

struct MonodromyReport {
    std::map<std::string, OoMatrix> local;  // "sigma.trc", ...
    OoMatrix p, p_conj_pi_trc, p_inv_conj_pi_trc, p_inv_conj_sigma_edge, rho0, rho0_inv;
    std::vector<Check> checks;
};
MonodromyReport monodromy_report();

}  // namespace winger
