#include "sysstruct/error.hpp"

namespace sysstruct {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::index_not_zero: return "IndexNotZero";
    case errc::no_manifest_outputs: return "NoManifestOutputs";
    case errc::inconsistent_component: return "InconsistentComponent";
    case errc::algebraic_loop: return "AlgebraicLoop";
    case errc::singular_loop: return "SingularLoop";
    case errc::bad_node: return "BadNode";
    case errc::aux_self_loop: return "AuxSelfLoop";
    case errc::parse_error: return "ParseError";
    case errc::not_applicable: return "NotApplicable";
  }
  return "UnknownError";
}

}  // namespace sysstruct
