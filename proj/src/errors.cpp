#include "dreduce/errors.hpp"

namespace dreduce {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NoLeader: return "NoLeader";
    case ErrorKind::UnknownIndeterminate: return "UnknownIndeterminate";
    case ErrorKind::DuplicateEntry: return "DuplicateEntry";
    case ErrorKind::InconsistentSystem: return "InconsistentSystem";
    case ErrorKind::UnsupportedCell: return "UnsupportedCell";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredSymbol: return "UndeclaredSymbol";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
  }
  return "Error";
}

}  // namespace dreduce
