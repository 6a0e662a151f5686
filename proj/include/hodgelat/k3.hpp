#pragma once

#include <optional>
#include <string>

#include "hodgelat/hodge.hpp"
#include "hodgelat/lattice.hpp"

namespace hodgelat {

// Lattice-level model of a projective K3 surface: a unimodular ambient of
// rank 22 and signature (3,19), a primitive Neron-Severi sublattice, and the
// transcendental model on its orthogonal complement.
struct K3SurfaceModel {
    Lattice ambient;
    Sublattice ns_sub;
    Sublattice t_sub;
    HodgeLatticeModel t_model;
    int picard_rank = 0;
};

// Same shape for a hyperkahler manifold: the ambient carries a K3-type
// signature (3, rank-3) but need not be unimodular.
struct HyperkahlerModel {
    Lattice ambient;
    Sublattice ns_sub;
    Sublattice t_sub;
    HodgeLatticeModel t_model;
    int picard_rank = 0;
    int n = 2;  // labels the K3^[n] family; metadata only
};

// endo_generator acts on the complement; pass nullopt for the scalar model
K3SurfaceModel build_k3_model(const Lattice& ambient, const IntMatrix& ns_basis,
                              const std::optional<RatMatrix>& endo_generator = std::nullopt);

HyperkahlerModel build_hk_model(const Lattice& ambient, const IntMatrix& ns_basis,
                                const std::optional<RatMatrix>& endo_generator = std::nullopt,
                                int n = 2);

// conventional ambient for the K3^[n] family: LambdaK3 + <-2(n-1)>; the BBF
// form itself is caller-supplied data, this is just a convenience
Lattice hk_k3n_ambient(int n);

// |H / (S + T)| for orthogonal S, T of full combined rank: computed as the
// index of the stacked basis, re-derived from the elementary divisors, and
// checked against index^2 = disc(S) * disc(T) / disc(H)
Int glue_index(const Lattice& h, const Sublattice& s, const Sublattice& t);

struct DiscCheck {
    bool pass = false;
    Int disc_x;
    Int disc_y;
    // for hyperkahler inputs the equal-disc test is only a necessary
    // condition feeding the certifier, not a certified obstruction
    bool necessary_condition_only = false;
};

DiscCheck l_equivalence_disc_check(const K3SurfaceModel& x, const K3SurfaceModel& y);
DiscCheck l_equivalence_disc_check(const HyperkahlerModel& x, const HyperkahlerModel& y);

}  // namespace hodgelat
