#pragma once

#include <stdexcept>
#include <string>

namespace hodgelat {

// Every distinct failure condition named by a module contract gets its own
// code; the CLI maps codes to exit statuses.
enum class ErrorCode {
    // exact-linalg
    DimensionMismatch,
    SingularMatrix,
    AsymmetricMatrix,
    // lattice-core
    DegenerateLattice,
    OddLattice,
    UnknownCatalogName,
    ZeroRescale,
    ZeroVector,
    DependentBasis,
    DegenerateSublattice,
    // hodge-twist
    OutsideEndomorphismAlgebra,
    ReducibleGenerator,
    GeneratorDegree,
    RosatiNotClosed,
    TwistNotInvertible,
    TwistOutsideAlgebra,
    TwistNotRosatiInvariant,
    TwistNotIntegral,
    TwistNotEven,
    InvalidIsomorphism,
    NonScalarGenerator,
    // k3-geometry
    NonPrimitiveSublattice,
    SignatureViolation,
    AmbientShape,
    NotOrthogonal,
    NotFiniteIndex,
    // equivalence-certifier
    PremiseViolation,
    MalformedCertificate,
    // interface plumbing
    ParseError,
    IoError,
    UsageError,
    InternalAssertion,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

// theorem-grade identities: a violation is a bug, not bad input
inline void internal_check(bool ok, const std::string& what) {
    if (!ok) fail(ErrorCode::InternalAssertion, what);
}

}  // namespace hodgelat
