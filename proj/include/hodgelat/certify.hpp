#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgelat/json_io.hpp"

namespace hodgelat {

enum class Verdict {
    DEquivalent,
    HodgeIsometric,
    AmbiguousTorTminus1,
    TwistedDerivedEquivalent,
    Birational,
    ObstructedNotLEquivalent,
    Unknown,
};

const char* verdict_name(Verdict v);

struct Assumption {
    std::string cite;
    std::string quote;
};

// Witness claims are exact identities. A claim containing "!=" asserts
// lhs != rhs; every other claim asserts lhs == rhs.
struct WitnessItem {
    std::string claim;
    std::string lhs;
    std::string rhs;
};

// A replayable verdict: the inputs are embedded in canonical form, and the
// whole certificate is a deterministic function of them.
struct EquivalenceCertificate {
    std::string mode;  // "t" | "k3" | "hk4" | "moduli"
    Verdict verdict = Verdict::Unknown;
    std::string reason;
    std::vector<Assumption> assumptions;
    std::vector<WitnessItem> witness_chain;
    Json inputs;
};

// T-equivalence with equal discriminants forces a Hodge isometry onto the
// twist by +1 or -1; the signature rules out -1 away from rank 4. Requires a
// scalar endomorphism field on T(X), equal ranks, equal discriminants, and
// K3-type signatures (2, rank-2) on both sides; violations are typed
// rejections.
EquivalenceCertificate certify_t_implies_d(const HodgeLatticeModel& tx,
                                           const HodgeLatticeModel& ty);

// Declared L-equivalence of two K3 models: a discriminant mismatch is a
// certified obstruction; otherwise the T pipeline runs on the transcendental
// models. Picard rank 18 is rejected.
EquivalenceCertificate certify_l_implies_d(const K3SurfaceModel& mx, const K3SurfaceModel& my);

struct HkFourfoldInputs {
    bool t_iso = false;  // Hodge isometry T(X) = T(Y) established upstream
    Int g;               // H^2 = 2g for the ample generator H
    Int d;               // auxiliary divisibility parameter, taken as given
    std::optional<Int> div_h;
    std::optional<Lattice> h_lattice;        // when present, div(H) is computed
    std::optional<std::vector<Int>> h_vector;
};

// K3^[2]-type fourfolds of Picard rank 1: D-equivalent when g = 1 (mod 4),
// or 8 | d, or div(H) = 2; twisted derived equivalent otherwise.
EquivalenceCertificate certify_hk_fourfold(const HkFourfoldInputs& in);

// Moduli of sheaves with unimodular NS(S): birational (hence D-equivalent)
// when disc(NS(S)) = 1; Unknown with a reason otherwise. rank_t = 4 rejected.
EquivalenceCertificate certify_moduli_unimodular(const Lattice& s_ns, bool t_iso, int rank_t);

Json certificate_to_json(const EquivalenceCertificate& c);

// Re-derives the certificate from its embedded inputs and compares every
// field; also re-checks each witness identity. False on any mismatch; throws
// MalformedCertificate when the document is not a certificate.
bool replay_certificate(const Json& cert);

}  // namespace hodgelat
