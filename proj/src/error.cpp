#include "hodgelat/error.hpp"

namespace hodgelat {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "dimension_mismatch";
        case ErrorCode::SingularMatrix: return "singular_matrix";
        case ErrorCode::AsymmetricMatrix: return "asymmetric_matrix";
        case ErrorCode::DegenerateLattice: return "degenerate_lattice";
        case ErrorCode::OddLattice: return "odd_lattice";
        case ErrorCode::UnknownCatalogName: return "unknown_catalog_name";
        case ErrorCode::ZeroRescale: return "zero_rescale";
        case ErrorCode::ZeroVector: return "zero_vector";
        case ErrorCode::DependentBasis: return "dependent_basis";
        case ErrorCode::DegenerateSublattice: return "degenerate_sublattice";
        case ErrorCode::OutsideEndomorphismAlgebra: return "outside_endomorphism_algebra";
        case ErrorCode::ReducibleGenerator: return "reducible_generator";
        case ErrorCode::GeneratorDegree: return "generator_degree";
        case ErrorCode::RosatiNotClosed: return "rosati_not_closed";
        case ErrorCode::TwistNotInvertible: return "twist_not_invertible";
        case ErrorCode::TwistOutsideAlgebra: return "twist_outside_algebra";
        case ErrorCode::TwistNotRosatiInvariant: return "twist_not_rosati_invariant";
        case ErrorCode::TwistNotIntegral: return "twist_not_integral";
        case ErrorCode::TwistNotEven: return "twist_not_even";
        case ErrorCode::InvalidIsomorphism: return "invalid_isomorphism";
        case ErrorCode::NonScalarGenerator: return "non_scalar_generator";
        case ErrorCode::NonPrimitiveSublattice: return "non_primitive_sublattice";
        case ErrorCode::SignatureViolation: return "signature_violation";
        case ErrorCode::AmbientShape: return "ambient_shape";
        case ErrorCode::NotOrthogonal: return "not_orthogonal";
        case ErrorCode::NotFiniteIndex: return "not_finite_index";
        case ErrorCode::PremiseViolation: return "premise_violation";
        case ErrorCode::MalformedCertificate: return "malformed_certificate";
        case ErrorCode::ParseError: return "parse_error";
        case ErrorCode::IoError: return "io_error";
        case ErrorCode::UsageError: return "usage_error";
        case ErrorCode::InternalAssertion: return "internal_assertion";
    }
    return "unknown";
}

}  // namespace hodgelat
