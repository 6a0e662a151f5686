#include "hodgelat/certify.hpp"

#include <algorithm>

namespace hodgelat {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::DEquivalent: return "DEquivalent";
        case Verdict::HodgeIsometric: return "HodgeIsometric";
        case Verdict::AmbiguousTorTminus1: return "AmbiguousTorTminus1";
        case Verdict::TwistedDerivedEquivalent: return "TwistedDerivedEquivalent";
        case Verdict::Birational: return "Birational";
        case Verdict::ObstructedNotLEquivalent: return "ObstructedNotLEquivalent";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

std::optional<Verdict> verdict_from_name(const std::string& s) {
    for (Verdict v : {Verdict::DEquivalent, Verdict::HodgeIsometric, Verdict::AmbiguousTorTminus1,
                      Verdict::TwistedDerivedEquivalent, Verdict::Birational,
                      Verdict::ObstructedNotLEquivalent, Verdict::Unknown})
        if (s == verdict_name(v)) return v;
    return std::nullopt;
}

std::string fmt_signature(const Inertia& s) {
    return "(" + std::to_string(s.positive) + ", " + std::to_string(s.negative) + ")";
}

std::string fmt_set(const std::vector<Rat>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += to_string(values[i]);
    }
    return out.empty() ? "none" : out;
}

const Assumption kTorelli{
    "Mukai-Orlov derived Torelli theorem",
    "two K3 surfaces are derived equivalent exactly when their transcendental lattices are "
    "Hodge isometric"};

const Assumption kEndZ{
    "declared premise",
    "End(T(X)) = Z: the rational Hodge endomorphisms of T(X) are just the scalars"};

const Assumption kTEquiv{
    "declared premise",
    "the transcendental Hodge structures of X and Y are isomorphic (T-equivalence)"};

const Assumption kTwistCorrespondence{
    "endomorphism twist correspondence",
    "a Hodge-structure isomorphism onto T(Y) realizes T(Y), up to Hodge isometry, as the twist "
    "of T(X) by a Rosati-invariant rational endomorphism"};

const Assumption kLEquiv{"declared premise", "X and Y are L-equivalent"};

const Assumption kHodgeRealization{
    "Hodge realization of the Grothendieck ring",
    "L-equivalent smooth projective varieties have equal H^2 classes in the Grothendieck group "
    "of integral Hodge structures"};

const Assumption kEfimovTransfer{
    "Efimov transfer lemma",
    "L-equivalent hyperkahler manifolds with End(T(X)) = Z have isomorphic transcendental "
    "Hodge structures"};

const Assumption kUnimodularGlue{
    "Nikulin overlattice glue",
    "for a unimodular ambient the glue group H/(NS + T) is the discriminant group of T, so "
    "L-equivalence forces equal transcendental discriminants"};

const Assumption kPicardRank1{"declared premise", "X has Picard rank 1 with ample generator H"};

const Assumption kHodgeIsometryEstablished{
    "established upstream",
    "a Hodge isometry T(X) = T(Y) has been produced by the twist machinery"};

const Assumption kK3n2Criterion{
    "derived Torelli criterion for K3^[2]-type fourfolds",
    "Hodge-isometric transcendental lattices give a derived equivalence when g = 1 (mod 4), or "
    "8 | d, or div(H) = 2, and a twisted derived equivalence otherwise"};

const Assumption kModuliBirational{
    "moduli birationality criterion",
    "a Hodge isometry T(X) = T(M) with NS(S) unimodular makes X birational to the moduli space M"};

const Assumption kBirationalD{
    "birational hyperkahler manifolds are D-equivalent",
    "birational hyperkahler manifolds have equivalent bounded derived categories"};

// shared core of the T pipeline; both models already validated
struct TCore {
    Verdict verdict;
    std::vector<WitnessItem> chain;
};

TCore t_pipeline(const HodgeLatticeModel& tx, const HodgeLatticeModel& ty) {
    if (!tx.scalar_field())
        fail(ErrorCode::NonScalarGenerator,
             "the End(T(X)) = Z premise requires a scalar endomorphism generator on T(X)");
    if (tx.rank() != ty.rank())
        fail(ErrorCode::PremiseViolation,
             "transcendental ranks differ (" + std::to_string(tx.rank()) + " vs " +
                 std::to_string(ty.rank()) + "); no Hodge-structure isomorphism exists");
    const int rk = tx.rank();
    Inertia sx = tx.lattice.signature();
    Inertia sy = ty.lattice.signature();
    if (sx.positive != 2 || sx.negative != rk - 2)
        fail(ErrorCode::PremiseViolation,
             "T(X) must have K3-type signature (2, rank-2); found " + fmt_signature(sx));
    if (sy.positive != 2 || sy.negative != rk - 2)
        fail(ErrorCode::PremiseViolation,
             "T(Y) must have K3-type signature (2, rank-2); found " + fmt_signature(sy));
    Int dx = tx.lattice.disc();
    Int dy = ty.lattice.disc();
    if (dx != dy)
        fail(ErrorCode::PremiseViolation,
             "discriminants differ (" + to_string(dx) + " vs " + to_string(dy) +
                 "); L-equivalence forces equal transcendental discriminants");

    TCore out;
    out.chain.push_back({"disc(T(X)) = disc(T(Y))", to_string(dx), to_string(dy)});

    std::vector<Rat> candidates = enumerate_scalar_twists(tx, dx);
    out.chain.push_back({"scalar twists q with |q|^rank * disc(T(X)) = disc(T(Y))",
                         fmt_set(candidates), "-1, 1"});

    std::vector<Rat> survivors;
    for (const Rat& q : candidates) {
        RatMatrix scaled = to_rational(tx.lattice.gram());
        for (int i = 0; i < rk; ++i)
            for (int j = 0; j < rk; ++j) scaled.at(i, j) *= q;
        if (rational_inertia(scaled) == sy) survivors.push_back(q);
    }
    out.chain.push_back({"twist candidates matching the signature of T(Y)", fmt_set(survivors),
                         rk != 4 ? "1" : "-1, 1"});

    if (rk == 4) {
        internal_check(survivors.size() == 2, "rank-4 signature filter must keep both twists");
        out.verdict = Verdict::AmbiguousTorTminus1;
    } else {
        internal_check(survivors.size() == 1 && survivors[0] == 1,
                       "signature filter must single out q = 1 away from rank 4");
        out.verdict = (tx.k3_type_flag && ty.k3_type_flag) ? Verdict::DEquivalent
                                                           : Verdict::HodgeIsometric;
    }
    return out;
}

}  // namespace

EquivalenceCertificate certify_t_implies_d(const HodgeLatticeModel& tx,
                                           const HodgeLatticeModel& ty) {
    TCore core = t_pipeline(tx, ty);
    EquivalenceCertificate cert;
    cert.mode = "t";
    cert.verdict = core.verdict;
    cert.witness_chain = std::move(core.chain);
    cert.assumptions = {kTEquiv, kEndZ, kTwistCorrespondence};
    if (cert.verdict == Verdict::DEquivalent) cert.assumptions.push_back(kTorelli);
    if (cert.verdict == Verdict::AmbiguousTorTminus1)
        cert.reason = "rank 4: the signature cannot separate T(X) from its twist by -1";
    Json inputs;
    inputs["X"] = model_to_json_canonical(tx);
    inputs["Y"] = model_to_json_canonical(ty);
    cert.inputs = std::move(inputs);
    return cert;
}

EquivalenceCertificate certify_l_implies_d(const K3SurfaceModel& mx, const K3SurfaceModel& my) {
    if (mx.picard_rank == 18)
        fail(ErrorCode::PremiseViolation,
             "Picard rank 18 is excluded: the transcendental rank would be 4");
    if (!mx.t_model.scalar_field())
        fail(ErrorCode::NonScalarGenerator,
             "the End(T(X)) = Z premise requires a scalar endomorphism generator on T(X)");

    EquivalenceCertificate cert;
    cert.mode = "k3";
    Json inputs;
    inputs["X"] = k3_model_to_json_canonical(mx);
    inputs["Y"] = k3_model_to_json_canonical(my);
    cert.inputs = std::move(inputs);

    DiscCheck dc = l_equivalence_disc_check(mx, my);
    if (!dc.pass) {
        cert.verdict = Verdict::ObstructedNotLEquivalent;
        cert.reason = "transcendental discriminants differ, obstructing L-equivalence";
        cert.witness_chain.push_back(
            {"disc(T(X)) != disc(T(Y))", to_string(dc.disc_x), to_string(dc.disc_y)});
        cert.assumptions = {kHodgeRealization, kUnimodularGlue};
        return cert;
    }

    TCore core = t_pipeline(mx.t_model, my.t_model);
    cert.verdict = core.verdict;
    cert.witness_chain = std::move(core.chain);
    cert.assumptions = {kLEquiv, kHodgeRealization, kEfimovTransfer, kEndZ, kTwistCorrespondence};
    if (cert.verdict == Verdict::DEquivalent) cert.assumptions.push_back(kTorelli);
    if (cert.verdict == Verdict::AmbiguousTorTminus1)
        cert.reason = "rank 4: the signature cannot separate T(X) from its twist by -1";
    return cert;
}

EquivalenceCertificate certify_hk_fourfold(const HkFourfoldInputs& in) {
    if (in.g <= 0) fail(ErrorCode::PremiseViolation, "g must be positive");
    if (in.d <= 0) fail(ErrorCode::PremiseViolation, "d must be positive");
    if (static_cast<bool>(in.h_lattice) != static_cast<bool>(in.h_vector))
        fail(ErrorCode::PremiseViolation, "div(H) computation needs both a lattice and a vector");

    EquivalenceCertificate cert;
    cert.mode = "hk4";
    Json inputs;
    inputs["t_iso"] = in.t_iso;
    inputs["g"] = json_int(in.g);
    inputs["d"] = json_int(in.d);
    if (in.div_h) inputs["div_h"] = json_int(*in.div_h);
    if (in.h_lattice) {
        inputs["h_lattice"] = lattice_to_json_canonical(*in.h_lattice);
        Json vec = Json::array();
        for (const Int& v : *in.h_vector) vec.push_back(json_int(v));
        inputs["h_vector"] = vec;
    }
    cert.inputs = std::move(inputs);

    Int div;
    if (in.h_lattice) {
        div = divisibility(*in.h_vector, *in.h_lattice);
        if (in.div_h && *in.div_h != div)
            fail(ErrorCode::PremiseViolation,
                 "declared div(H) = " + to_string(*in.div_h) +
                     " disagrees with the computed divisibility " + to_string(div));
        cert.witness_chain.push_back({"div(H) = gcd of the pairings of H", to_string(div), to_string(div)});
    } else if (in.div_h) {
        if (*in.div_h <= 0) fail(ErrorCode::PremiseViolation, "div(H) must be positive");
        div = *in.div_h;
    } else {
        fail(ErrorCode::PremiseViolation, "div(H) is required, either declared or computable");
    }

    cert.assumptions = {kPicardRank1, kEndZ, kHodgeIsometryEstablished, kK3n2Criterion};
    if (!in.t_iso) {
        cert.verdict = Verdict::Unknown;
        cert.reason = "the Hodge isometry premise was not established";
        return cert;
    }

    Int g_mod = in.g % 4;
    if (g_mod < 0) g_mod += 4;
    Int d_mod = in.d % 8;
    if (d_mod < 0) d_mod += 8;
    cert.witness_chain.push_back({"g", to_string(in.g), to_string(in.g)});
    cert.witness_chain.push_back({"g mod 4", to_string(g_mod), to_string(g_mod)});
    cert.witness_chain.push_back({"d", to_string(in.d), to_string(in.d)});
    cert.witness_chain.push_back({"d mod 8", to_string(d_mod), to_string(d_mod)});
    cert.witness_chain.push_back({"div(H)", to_string(div), to_string(div)});

    const bool trigger = (g_mod == 1) || (d_mod == 0) || (div == 2);
    if (trigger) {
        cert.verdict = Verdict::DEquivalent;
        std::string why;
        if (g_mod == 1) why = "g = 1 (mod 4)";
        else if (d_mod == 0) why = "8 | d";
        else why = "div(H) = 2";
        cert.reason = "criterion met: " + why;
    } else {
        cert.verdict = Verdict::TwistedDerivedEquivalent;
        cert.reason = "no criterion met: g != 1 (mod 4), 8 does not divide d, div(H) != 2";
    }
    return cert;
}

EquivalenceCertificate certify_moduli_unimodular(const Lattice& s_ns, bool t_iso, int rank_t) {
    if (rank_t == 4)
        fail(ErrorCode::PremiseViolation,
             "transcendental rank 4 (Picard rank 18) is excluded");
    if (rank_t <= 0) fail(ErrorCode::PremiseViolation, "rank of T must be positive");

    EquivalenceCertificate cert;
    cert.mode = "moduli";
    Json inputs;
    inputs["ns"] = lattice_to_json_canonical(s_ns);
    inputs["t_iso"] = t_iso;
    inputs["rank_t"] = rank_t;
    cert.inputs = std::move(inputs);

    cert.assumptions = {kEndZ, kHodgeIsometryEstablished, kModuliBirational, kBirationalD};
    cert.witness_chain.push_back(
        {"rank(T)", std::to_string(rank_t), std::to_string(rank_t)});

    Int disc = s_ns.disc();
    cert.witness_chain.push_back({"disc(NS(S))", to_string(disc), to_string(disc)});

    if (!t_iso) {
        cert.verdict = Verdict::Unknown;
        cert.reason = "the Hodge isometry premise was not established";
        return cert;
    }
    if (disc != 1) {
        cert.verdict = Verdict::Unknown;
        cert.reason = "NS not unimodular";
        return cert;
    }
    cert.verdict = Verdict::Birational;
    cert.reason = "NS(S) is unimodular, so the manifolds are birational, hence D-equivalent";
    return cert;
}

Json certificate_to_json(const EquivalenceCertificate& c) {
    Json out;
    out["mode"] = c.mode;
    out["verdict"] = verdict_name(c.verdict);
    out["reason"] = c.reason;
    Json assumptions = Json::array();
    for (const Assumption& a : c.assumptions) {
        Json entry;
        entry["cite"] = a.cite;
        entry["quote"] = a.quote;
        assumptions.push_back(std::move(entry));
    }
    out["assumptions"] = assumptions;
    Json chain = Json::array();
    for (const WitnessItem& w : c.witness_chain) {
        Json entry;
        entry["claim"] = w.claim;
        entry["lhs"] = w.lhs;
        entry["rhs"] = w.rhs;
        chain.push_back(std::move(entry));
    }
    out["witness_chain"] = chain;
    out["inputs"] = c.inputs;
    return out;
}

namespace {

HkFourfoldInputs hk_inputs_from_json(const Json& j) {
    HkFourfoldInputs in;
    if (!j.is_object() || !j.contains("t_iso") || !j.contains("g") || !j.contains("d"))
        fail(ErrorCode::ParseError, "hk4 inputs need \"t_iso\", \"g\", and \"d\"");
    if (!j["t_iso"].is_boolean()) fail(ErrorCode::ParseError, "\"t_iso\" must be a boolean");
    in.t_iso = j["t_iso"].get<bool>();
    in.g = int_from_json(j["g"]);
    in.d = int_from_json(j["d"]);
    if (j.contains("div_h")) in.div_h = int_from_json(j["div_h"]);
    if (j.contains("h_lattice")) in.h_lattice = lattice_from_json(j["h_lattice"]);
    if (j.contains("h_vector")) in.h_vector = int_vector_from_json(j["h_vector"]);
    return in;
}

EquivalenceCertificate rerun_from_inputs(const std::string& mode, const Json& inputs) {
    if (mode == "t") {
        if (!inputs.is_object() || !inputs.contains("X") || !inputs.contains("Y"))
            fail(ErrorCode::ParseError, "t inputs need \"X\" and \"Y\"");
        return certify_t_implies_d(model_from_json(inputs["X"]), model_from_json(inputs["Y"]));
    }
    if (mode == "k3") {
        if (!inputs.is_object() || !inputs.contains("X") || !inputs.contains("Y"))
            fail(ErrorCode::ParseError, "k3 inputs need \"X\" and \"Y\"");
        return certify_l_implies_d(k3_model_from_json(inputs["X"]),
                                   k3_model_from_json(inputs["Y"]));
    }
    if (mode == "hk4") return certify_hk_fourfold(hk_inputs_from_json(inputs));
    if (mode == "moduli") {
        if (!inputs.is_object() || !inputs.contains("ns") || !inputs.contains("t_iso") ||
            !inputs.contains("rank_t"))
            fail(ErrorCode::ParseError, "moduli inputs need \"ns\", \"t_iso\", and \"rank_t\"");
        if (!inputs["t_iso"].is_boolean() || !inputs["rank_t"].is_number_integer())
            fail(ErrorCode::ParseError, "moduli input field types");
        return certify_moduli_unimodular(lattice_from_json(inputs["ns"]),
                                         inputs["t_iso"].get<bool>(),
                                         inputs["rank_t"].get<int>());
    }
    fail(ErrorCode::MalformedCertificate, "unknown certificate mode: " + mode);
}

bool values_equal(const std::string& a, const std::string& b) { return a == b; }

}  // namespace

bool replay_certificate(const Json& cert) {
    if (!cert.is_object() || !cert.contains("mode") || !cert.contains("verdict") ||
        !cert.contains("assumptions") || !cert.contains("witness_chain") ||
        !cert.contains("inputs") || !cert.contains("reason"))
        fail(ErrorCode::MalformedCertificate, "certificate is missing required fields");
    if (!cert["mode"].is_string() || !cert["verdict"].is_string() ||
        !cert["assumptions"].is_array() || !cert["witness_chain"].is_array() ||
        !cert["reason"].is_string())
        fail(ErrorCode::MalformedCertificate, "certificate field types are wrong");
    if (!verdict_from_name(cert["verdict"].get<std::string>()))
        fail(ErrorCode::MalformedCertificate,
             "unknown verdict: " + cert["verdict"].get<std::string>());

    // each witness identity must hold on its face
    for (const Json& item : cert["witness_chain"]) {
        if (!item.is_object() || !item.contains("claim") || !item.contains("lhs") ||
            !item.contains("rhs"))
            fail(ErrorCode::MalformedCertificate, "witness item is missing fields");
        if (!item["claim"].is_string() || !item["lhs"].is_string() || !item["rhs"].is_string())
            fail(ErrorCode::MalformedCertificate, "witness item fields must be strings");
        const std::string claim = item["claim"].get<std::string>();
        const bool eq = values_equal(item["lhs"].get<std::string>(), item["rhs"].get<std::string>());
        const bool want_eq = claim.find("!=") == std::string::npos;
        if (eq != want_eq) return false;
    }

    // deterministic re-derivation from the embedded inputs
    EquivalenceCertificate fresh;
    try {
        fresh = rerun_from_inputs(cert["mode"].get<std::string>(), cert["inputs"]);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::MalformedCertificate) throw;
        return false;  // tampered inputs no longer pass the pipeline's own checks
    }
    return certificate_to_json(fresh) == cert;
}

}  // namespace hodgelat
