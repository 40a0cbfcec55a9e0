#pragma once

#include "winger/check.hpp"
#include "winger/quad.hpp"
#include "winger/surface.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace winger {

// Free Z-module with an A5 action given on the three generators (matrices act on column coordinates).
struct ModuleAction {
    std::size_t rank = 0;
    std::array<IntMatrix, 3> gen;
    const IntMatrix& operator[](Gen g) const { return gen[static_cast<int>(g)]; }
};

struct NotEquivariant : std::logic_error {
    using std::logic_error::logic_error;
};

ModuleAction chain_action(const EquivariantComplex& c, int dim);
// Action on an invariant sublattice, in its basis coordinates; throws NotContained if not invariant.
ModuleAction restrict_action(const ModuleAction& m, const Sublattice& sub);
// Action on H_1 in the class coordinates of the homology basis.
ModuleAction homology_action(const EquivariantComplex& c, const HomologyBasis& h);

// An equivariant map E_o -> M is a rank(M) x 6 matrix whose column i is the image of b_i.
bool is_equivariant(const ModuleAction& m, const IntMatrix& phi);
IntMatrix precompose_x(const IntMatrix& phi);
// The map with b_i -> g_i * image_of_e, where g_i e = b_i; throws NotEquivariant if that is not a morphism.
IntMatrix equivariant_map(const ModuleAction& m, const IntVector& image_of_e);

struct HomLattice {
    ModuleAction target;
    std::vector<IntMatrix> basis;
    IntMatrix x_action;  // column k: coordinates of basis[k] o X

    std::size_t rank() const { return basis.size(); }
    std::optional<IntVector> coordinates(const IntMatrix& phi) const;
    IntMatrix combine(const IntVector& coords) const;
};

// Kernel of the stacked commutation constraints for s2 and s5, with s3 checked afterwards.
HomLattice hom_lattice(const ModuleAction& target);
// Intersection of the per-generator solution lattices over all three generators.
HomLattice hom_lattice_by_intersection(const ModuleAction& target);

// Express phi as an integer combination of gens, if possible.
std::optional<IntVector> express(const IntMatrix& phi, const std::vector<IntMatrix>& gens);

// Rewrite a map with values in the ambient lattice in the coordinates of sub; throws NotContained.
IntMatrix to_sublattice(const Sublattice& sub, const IntMatrix& phi);
// Push a map into Z_1 (chain coordinates) to H_1 class coordinates.
IntMatrix to_homology(const HomologyBasis& h, const IntMatrix& phi);

// The named structured chains turned into equivariant maps, in chain coordinates of C_1 or C_2.
struct NamedMaps {
    Model model;
    std::map<std::string, IntMatrix> maps;
    std::map<std::string, int> dim;
};
NamedMaps named_maps(const SurfaceModel& s, int basepoint_sign = 1);

struct SubmoduleLattices {
    Sublattice z_trc, z_edge;
};
SubmoduleLattices cycle_summands(const EquivariantComplex& c, const HomologyBasis& h);

struct StructureReport {
    Model model;
    std::map<std::string, std::size_t> ranks;  // C2, B1, Z_trc, Z_edge, Z1, H1
    bool two_methods_agree = false;
    std::vector<Integer> boundary_image_quotient;  // Hom(E_o, B1) / d2(Hom(E_o, C2))
    bool bound_prime_outside_image = false;
    bool z1_generated = false;  // by bound, bound', trc, trc', edge and sigma|pi
    std::vector<Check> checks;
};
StructureReport structure_report(Model m);

// form(phi, psi) = sum_i <phi(b_i), psi(b_i)> for maps in class coordinates.
Integer symplectic_form(const HomologyBasis& h, const IntMatrix& phi, const IntMatrix& psi);

struct HomologyGenerators {
    Model model;
    IntMatrix u, v;                  // class coordinates, 20 x 6
    std::array<IntMatrix, 4> zbasis;  // U, XU, V, XV
    IntMatrix form_gram;             // 4 x 4 on zbasis
    bool generates = false;          // Z-span of zbasis is all of Hom(E_o, H_1)
    bool generates_by_pairing = false;
    std::map<std::string, IntMatrix> images;  // p o (named map)

    // (a, b) with phi = a U + b V over O_o
    std::optional<std::array<OoElem, 2>> express(const IntMatrix& phi) const;
    IntMatrix from_oo(const OoElem& a, const OoElem& b) const;
};
HomologyGenerators homology_generators(Model m, int basepoint_sign = 1);

// Integer 4x4 matrix of multiplication by a 2x2 O_o matrix on (U, XU, V, XV) coordinates.
IntMatrix oo_matrix_on_zbasis(const OoMatrix& t);
// M^T F M == F for the Gram matrix F on (U, XU, V, XV).
bool preserves_form(const IntMatrix& form_gram, const OoMatrix& t);

}  // namespace winger
