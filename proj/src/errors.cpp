#include "xmodknot/errors.hpp"

namespace xmodknot {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NonComposable: return "NonComposable";
    case ErrorKind::XmodMismatch: return "XmodMismatch";
    case ErrorKind::KernelNotCentral: return "KernelNotCentral";
    case ErrorKind::NotASection: return "NotASection";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::InvalidAxioms: return "InvalidAxioms";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::WidthMismatch: return "WidthMismatch";
    case ErrorKind::OrientationMismatch: return "OrientationMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NonClosable: return "NonClosable";
    case ErrorKind::EnhancementMismatch: return "EnhancementMismatch";
    case ErrorKind::DiagramNotClosed: return "NotClosed";
    case ErrorKind::MultiComponent: return "MultiComponent";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::Io: return "Io";
  }
  return "Error";
}

}  // namespace xmodknot
