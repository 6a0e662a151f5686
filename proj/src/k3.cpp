#include "hodgelat/k3.hpp"

#include "hodgelat/smith.hpp"

namespace hodgelat {

namespace {

struct Decomposition {
    Sublattice ns;
    Sublattice t;
    HodgeLatticeModel t_model;
    int rho;
};

Decomposition split(const Lattice& ambient, const IntMatrix& ns_basis,
                    const std::optional<RatMatrix>& endo_generator) {
    Sublattice ns = make_sublattice(ambient, ns_basis);
    if (!is_primitive(ns))
        fail(ErrorCode::NonPrimitiveSublattice,
             "NS must be primitive in the ambient lattice (it is not saturated)");
    if (determinant(ns.induced_gram()) == 0)
        fail(ErrorCode::DegenerateSublattice, "NS must be nondegenerate");
    Sublattice t = orthogonal_complement_sublattice(ns);
    Lattice t_lat = make_lattice(t.induced_gram());
    HodgeLatticeModel t_model =
        endo_generator ? make_hodge_model(t_lat, *endo_generator)
                       : make_scalar_model(t_lat);
    return {ns, t, t_model, ns.rank()};
}

void check_signatures(const Lattice& ambient, const Decomposition& d) {
    Inertia ns_sig = rational_inertia(to_rational(d.ns.induced_gram()));
    Inertia t_sig = d.t_model.lattice.signature();
    Inertia amb = ambient.signature();
    if (ns_sig.positive + t_sig.positive != amb.positive ||
        ns_sig.negative + t_sig.negative != amb.negative)
        fail(ErrorCode::InternalAssertion, "signature bookkeeping violated");
    if (ns_sig.positive != 1)
        fail(ErrorCode::SignatureViolation,
             "NS must have signature (1, rho-1); positive index is " +
                 std::to_string(ns_sig.positive));
    if (t_sig.positive != 2)
        fail(ErrorCode::SignatureViolation,
             "T must have signature (2, .); positive index is " + std::to_string(t_sig.positive));
}

}  // namespace

K3SurfaceModel build_k3_model(const Lattice& ambient, const IntMatrix& ns_basis,
                              const std::optional<RatMatrix>& endo_generator) {
    if (ambient.rank() != 22 || !ambient.is_unimodular())
        fail(ErrorCode::AmbientShape, "K3 ambient must be unimodular of rank 22");
    Inertia amb = ambient.signature();
    if (amb.positive != 3 || amb.negative != 19)
        fail(ErrorCode::AmbientShape, "K3 ambient must have signature (3,19)");
    Decomposition d = split(ambient, ns_basis, endo_generator);
    check_signatures(ambient, d);
    internal_check(d.rho + d.t_model.rank() == 22, "rank(NS) + rank(T) must be 22");
    return {ambient, d.ns, d.t, d.t_model, d.rho};
}

HyperkahlerModel build_hk_model(const Lattice& ambient, const IntMatrix& ns_basis,
                                const std::optional<RatMatrix>& endo_generator, int n) {
    Inertia amb = ambient.signature();
    if (amb.positive != 3)
        fail(ErrorCode::AmbientShape, "hyperkahler ambient must have K3-type signature (3, rank-3)");
    Decomposition d = split(ambient, ns_basis, endo_generator);
    check_signatures(ambient, d);
    return {ambient, d.ns, d.t, d.t_model, d.rho, n};
}

Lattice hk_k3n_ambient(int n) {
    if (n < 2) fail(ErrorCode::AmbientShape, "K3^[n] ambient needs n >= 2");
    IntMatrix tail(1, 1);
    tail.at(0, 0) = Int(-2 * (n - 1));
    return make_lattice(IntMatrix::block_diag(catalog(CatalogName::LambdaK3).gram(), tail));
}

Int glue_index(const Lattice& h, const Sublattice& s, const Sublattice& t) {
    if (s.ambient.gram() != h.gram() || t.ambient.gram() != h.gram())
        fail(ErrorCode::DimensionMismatch, "sublattices must live in the given ambient");
    IntMatrix cross = s.basis * h.gram() * t.basis.transpose();
    if (!cross.is_zero()) fail(ErrorCode::NotOrthogonal, "S and T must be orthogonal");
    if (s.rank() + t.rank() != h.rank())
        fail(ErrorCode::NotFiniteIndex, "S + T must have finite index in the ambient");

    IntMatrix stacked = IntMatrix::vstack(s.basis, t.basis);
    Int det = determinant(stacked);
    if (det == 0) fail(ErrorCode::NotFiniteIndex, "S + T must have finite index in the ambient");
    Int index = abs(det);

    // same count from the elementary divisors of the stacked basis
    Int coset_count(1);
    for (const Int& d : smith_normal_form(stacked).diagonal) coset_count *= d;
    internal_check(abs(coset_count) == index, "coset count disagrees with the stacked determinant");

    // index^2 * disc(H) = disc(S) * disc(T)
    Int disc_s = abs(determinant(s.induced_gram()));
    Int disc_t = abs(determinant(t.induced_gram()));
    internal_check(index * index * h.disc() == disc_s * disc_t,
                   "glue index identity violated");
    return index;
}

namespace {

DiscCheck run_check(const Lattice& tx, const Lattice& ty, bool hyperkahler) {
    DiscCheck out;
    out.disc_x = tx.disc();
    out.disc_y = ty.disc();
    out.pass = (out.disc_x == out.disc_y);
    out.necessary_condition_only = hyperkahler;
    return out;
}

}  // namespace

DiscCheck l_equivalence_disc_check(const K3SurfaceModel& x, const K3SurfaceModel& y) {
    return run_check(x.t_model.lattice, y.t_model.lattice, false);
}

DiscCheck l_equivalence_disc_check(const HyperkahlerModel& x, const HyperkahlerModel& y) {
    return run_check(x.t_model.lattice, y.t_model.lattice, true);
}

}  // namespace hodgelat
