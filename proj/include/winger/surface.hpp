#pragma once

#include "winger/lattice.hpp"
#include "winger/rep_a5.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace winger {

enum class Model { sigma, pi };
const char* model_name(Model m);

// The 12 vectors +-b_i of E_o, encoded as 2*i + (negative ? 1 : 0).
int signed_index(int basis, int sign);
int negate_signed(int s);
EoVector signed_vector(int s);
std::string signed_label(int s);

// Ring of the five vectors adjacent to v (s(Xv, w) = 1), counterclockwise.
const std::vector<std::vector<int>>& icosahedral_rings();

struct Polyhedron {
    std::vector<std::vector<int>> faces;  // counterclockwise vertex cycles
    std::vector<int> vertex_iota;
    std::array<std::vector<int>, 3> vertex_action;  // indexed by Gen
    std::vector<std::string> vertex_labels;
    std::vector<int> face_vector;  // signed index labelling each face
    std::size_t vertex_count() const { return vertex_iota.size(); }
    int face_of_vector(int s) const;
};

Polyhedron dodecahedron();
Polyhedron great_dodecahedron();

struct SignedCell {
    int cell = 0;
    int sign = 1;
    friend bool operator==(const SignedCell&, const SignedCell&) = default;
    friend auto operator<=>(const SignedCell&, const SignedCell&) = default;
};

struct SignedPermutation {
    std::vector<int> image;
    std::vector<int> sign;
    IntVector apply(const IntVector& chain) const;
    IntMatrix matrix() const;
};

enum class CellKind { edge, truncation };

struct Cell1 {
    CellKind kind;
    int start;
    int end;
    int dart;  // polyhedron dart with edge(dart) or seg(dart) = +this cell
};

using Dart = std::pair<int, int>;

class EquivariantComplex {
public:
    Model model;
    Polyhedron poly;

    std::vector<Dart> darts;  // sorted
    std::map<Dart, int> dart_index;
    std::vector<int> rho;       // rotation of the polyhedron at the initial vertex
    std::vector<int> zero_cell;  // per dart
    std::vector<SignedCell> edge_of, seg_of;  // per dart

    std::size_t n0 = 0, n1 = 0, n2 = 0;
    std::vector<Cell1> cells1;
    std::vector<std::vector<SignedCell>> face_boundary;  // oriented 1-cells in order
    IntMatrix boundary1, boundary2;
    std::vector<std::vector<SignedCell>> rotation;  // per 0-cell, outgoing half-edges, counterclockwise

    std::array<std::array<SignedPermutation, 3>, 3> action;  // [gen][dim]
    std::array<SignedPermutation, 3> iota;                 // [dim]

    long euler_characteristic() const { return long(n0) - long(n1) + long(n2); }
    std::size_t cell_count(int dim) const { return dim == 0 ? n0 : dim == 1 ? n1 : n2; }
    int dart(int from, int to) const;
    int reverse(int d) const { return dart(darts[d].second, darts[d].first); }
    int iota_dart(int d) const;
    int act_dart(Gen g, int d) const;

    IntVector act(Gen g, int dim, const IntVector& chain) const;
    IntVector act(const GroupElement& g, int dim, const IntVector& chain) const;
    IntVector apply_iota(int dim, const IntVector& chain) const;
};

EquivariantComplex truncate_and_glue(Model model, Polyhedron poly);
EquivariantComplex build_sigma();
EquivariantComplex build_pi();

struct OneCycle {
    Model model;
    IntVector coeffs;
};

struct UnknownLabel : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotDivisible : std::logic_error {
    using std::logic_error::logic_error;
};

enum class CycleKind { truncation, edge };
// truncation label: a polyhedron vertex label; edge label: "from>to"
OneCycle distinguished_cycle(const EquivariantComplex& c, CycleKind kind, const std::string& label);
OneCycle truncation_cycle(const EquivariantComplex& c, int vertex);
OneCycle edge_cycle(const EquivariantComplex& c, int dart);

struct HomologyBasis {
    Model model;
    std::size_t rank = 0;
    std::vector<IntVector> representatives;
    IntMatrix gram;
    Sublattice cycles;
    Sublattice boundaries;
    std::size_t boundary_rank = 0;
    IntMatrix transform;  // cycle coordinates (row) times transform = adapted coordinates
    std::size_t h0_rank = 0, h2_rank = 0;
    std::vector<Integer> h0_torsion, h1_torsion;

    IntVector class_of(const IntVector& cycle) const;
    Integer pairing(const IntVector& a, const IntVector& b) const;  // on class coordinates
};

HomologyBasis homology(const EquivariantComplex& c);

// Combinatorial intersection number of two 1-cycles.
Integer intersection(const EquivariantComplex& c, const IntVector& a, const IntVector& b);
Integer intersection(const EquivariantComplex& c, const OneCycle& a, const OneCycle& b);

// A class c with <c, l_k> = target_k for the given cycles l_k, if one exists.
std::optional<IntVector> dual_class(const HomologyBasis& h, const std::vector<IntVector>& cycles,
                                    const IntVector& target);
// The unique class with <c, rep_i> = target_i against the basis representatives.
IntVector dual_class(const HomologyBasis& h, const IntVector& target);

struct Chain {
    int dim = 1;
    IntVector coeffs;
};

struct NamedCycles {
    int basepoint = 0;                   // signed index of e (or of -e)
    std::vector<int> reps;               // signed indices of the E_o basis representatives
    std::vector<int> e_vertices;         // Sigma: vertices of face e; Pi: vertices of z_e
    std::vector<int> v_e;                // Sigma only
    std::vector<int> r0;                 // representatives of vertices modulo iota
    std::vector<int> e_prime_darts;      // Sigma: E'_e; Pi: darts from z_e to z_{-e}
    std::map<std::string, Chain> chains;  // cel, cel', bound, bound', trc, trc', edge, edge', sigma|pi
};

NamedCycles named_cycles(const EquivariantComplex& c, int basepoint_sign = 1);
Chain structured_cycle(const NamedCycles& n, const std::string& name);

// Loops of the two vanishing sets, one per +- class.
std::vector<IntVector> truncation_loops(const EquivariantComplex& c);
std::vector<IntVector> edge_loops(const EquivariantComplex& c);

struct SurfaceModel {
    EquivariantComplex complex;
    HomologyBasis homology;
    NamedCycles named;
};

const SurfaceModel& surface_model(Model m);

// Plain-text cell incidence dump.
std::string export_complex(const EquivariantComplex& c);

}  // namespace winger
