#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgelat/lattice.hpp"
#include "hodgelat/polynomial.hpp"

namespace hodgelat {

// A lattice together with a chosen generator of the rational endomorphism
// field E = Q(g) acting on L_Q. Irreducibility of the Hodge structure and
// K3-typeness are declared input assumptions, carried as flags.
struct HodgeLatticeModel {
    Lattice lattice;
    RatMatrix endo_generator;
    bool irreducible_flag;
    bool k3_type_flag;
    Poly generator_minpoly;  // monic, irreducible over Q

    int rank() const { return lattice.rank(); }
    int field_degree() const { return degree(generator_minpoly); }
    bool scalar_field() const { return field_degree() == 1; }
};

// Validates: the minimal polynomial of the generator is irreducible (E is a
// field), its degree divides the rank, and the Rosati adjoint of the
// generator lies back in Q(g).
HodgeLatticeModel make_hodge_model(const Lattice& lattice, const RatMatrix& endo_generator,
                                   bool irreducible = true, bool k3_type = true);

// convenience: E = Q, generator q * id
HodgeLatticeModel make_scalar_model(const Lattice& lattice, const Rat& q = Rat(1),
                                    bool irreducible = true, bool k3_type = true);

struct HodgeEndomorphism {
    RatMatrix matrix;
    Poly minimal_polynomial;
    bool rosati_invariant = false;
    bool maps_into_dual = false;
    bool twist_even = false;
};

// An isomorphism of the underlying Hodge data: unimodular over Z and
// intertwining the endomorphism generators.
struct HodgeIsomorphism {
    IntMatrix matrix;
};

HodgeIsomorphism make_hodge_isomorphism(const HodgeLatticeModel& from, const HodgeLatticeModel& to,
                                        const IntMatrix& f);

// adjoint with respect to the bilinear form: G^{-1} * phi^T * G
RatMatrix rosati_adjoint(const HodgeLatticeModel& t, const RatMatrix& phi);

// coordinates of phi in the power basis 1, g, ..., g^{deg-1}, if phi lies
// in the algebra Q(g)
std::optional<std::vector<Rat>> algebra_coordinates(const HodgeLatticeModel& t, const RatMatrix& phi);

// membership in the Rosati-invariant subfield; phi must lie in Q(g)
bool is_rosati_invariant(const HodgeLatticeModel& t, const RatMatrix& phi);

enum class TwistReject {
    None,
    NotInvertible,      // (a)
    OutsideAlgebra,     // (b)
    NotRosatiInvariant, // (c)
    NotIntegral,        // (d) phi^T * G must be integral (phi maps T into T*)
    NotEven,            // (e) the twisted form must stay even
};

const char* twist_reject_name(TwistReject r);

TwistReject classify_twist(const HodgeLatticeModel& t, const RatMatrix& phi);
std::optional<HodgeEndomorphism> try_admit_twist(const HodgeLatticeModel& t, const RatMatrix& phi);
HodgeEndomorphism admit_twist(const HodgeLatticeModel& t, const RatMatrix& phi);  // throws on rejection

// same underlying group and generator, bilinear form phi^T * G
HodgeLatticeModel twist(const HodgeLatticeModel& t, const HodgeEndomorphism& phi);

struct FieldNorm {
    Rat norm;            // norm over the full endomorphism field E
    int m;               // dim_E of the rational span, = rank / [E:Q]
    Rat subfield_norm;   // norm over Q(phi)
    int phi_degree;      // [Q(phi):Q]
};

FieldNorm field_norm(const HodgeLatticeModel& t, const HodgeEndomorphism& phi);

// both sides of disc(T_phi) = |N(phi)|^m * disc(T), computed independently
// (determinant route vs minimal-polynomial route) and checked
struct TwistDiscProof {
    Rat norm;
    int m;
    Int disc_before;
    Int disc_after;
    Rat predicted;       // |N|^m * disc_before
};

TwistDiscProof verify_twist_discriminant(const HodgeLatticeModel& t, const HodgeEndomorphism& phi);

// the endomorphism phi = G1^{-1} * f^T * G2 * f recovering T2 as a twist of
// T1 along the isomorphism f; postcondition: twist(T1, phi) has Gram
// f^T * G2 * f, so f is an isometry from it onto T2
HodgeEndomorphism pullback_twist(const HodgeLatticeModel& t1, const HodgeLatticeModel& t2,
                                 const HodgeIsomorphism& f);

// true iff f^T * G2 * f = G1
bool is_hodge_isometry(const HodgeLatticeModel& t1, const HodgeLatticeModel& t2,
                       const HodgeIsomorphism& f);

struct TwistEquivalence {
    enum class State { Equivalent, NotEquivalent, Unknown } state;
    std::optional<IntMatrix> witness;  // h with h^T (psi^T G) h = phi^T G, h g = g h
    std::string reason;
};

TwistEquivalence twists_equivalent(const HodgeLatticeModel& t, const HodgeEndomorphism& phi,
                                   const HodgeEndomorphism& psi, int search_bound);

// all rational q with q * id admissible and |q|^rank * disc(T) = target;
// requires a scalar endomorphism field
std::vector<Rat> enumerate_scalar_twists(const HodgeLatticeModel& t, const Int& target_disc);

}  // namespace hodgelat
