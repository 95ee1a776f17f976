#include "mvdual/error.hpp"

namespace mvdual {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::not_in_chain: return "not-in-chain";
    case ErrorKind::chain_mismatch: return "chain-mismatch";
    case ErrorKind::duplicate_label: return "duplicate-label";
    case ErrorKind::invalid_chain_size: return "chain-size-error";
    case ErrorKind::algebra_mismatch: return "algebra-mismatch";
    case ErrorKind::unknown_label: return "unknown-label";
    case ErrorKind::infinite_chain_present: return "infinite-chain-present";
    case ErrorKind::bound_exceeded: return "bound-exceeded";
    case ErrorKind::too_large: return "too-large";
    case ErrorKind::not_maximal: return "not-maximal";
    case ErrorKind::divisibility_violation: return "divisibility-violation";
    case ErrorKind::non_total: return "non-total";
    case ErrorKind::boundary_mismatch: return "boundary-mismatch";
    case ErrorKind::invalid_index_map: return "invalid-index-map";
    case ErrorKind::not_boolean_algebra: return "not-boolean-algebra";
    case ErrorKind::f_below_g: return "f-below-g";
    case ErrorKind::no_l2_factor: return "no-L2-factor";
    case ErrorKind::psi_not_surjective: return "psi-not-surjective";
    case ErrorKind::zero_multiplicity: return "zero-multiplicity";
    case ErrorKind::syntax_error: return "syntax-error";
    case ErrorKind::unbound_variable: return "unbound-variable";
    case ErrorKind::invalid_json: return "invalid-json";
  }
  return "unknown";
}

}  // namespace mvdual
