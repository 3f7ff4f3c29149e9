#include "costas/error.hpp"

namespace costas {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kInvalidPermutation: return "invalid-permutation";
    case ErrorKind::kNotCostas: return "not-costas";
    case ErrorKind::kDuplicateRow: return "duplicate-row";
    case ErrorKind::kMixedOrder: return "mixed-order";
    case ErrorKind::kOrderTooLarge: return "order-too-large";
    case ErrorKind::kDegenerateOrder: return "degenerate-order";
    case ErrorKind::kColumnOutOfRange: return "column-out-of-range";
    case ErrorKind::kOrderMismatch: return "order-mismatch";
    case ErrorKind::kInconsistentUcfm: return "inconsistent-ucfm";
    case ErrorKind::kIncompleteUcfm: return "incomplete-ucfm";
    case ErrorKind::kParse: return "parse-error";
    case ErrorKind::kIo: return "io-error";
  }
  return "unknown";
}

}  // namespace costas
