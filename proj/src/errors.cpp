#include "wsc/errors.hpp"

namespace wsc {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidVertex: return "InvalidVertex";
        case ErrorCode::VoidComplex: return "VoidComplex";
        case ErrorCode::NotAVertex: return "NotAVertex";
        case ErrorCode::InvalidDimension: return "InvalidDimension";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::DegenerateIdeal: return "DegenerateIdeal";
        case ErrorCode::InvalidExponent: return "InvalidExponent";
        case ErrorCode::InvalidWeight: return "InvalidWeight";
        case ErrorCode::InvalidEdge: return "InvalidEdge";
        case ErrorCode::InvalidCharacteristic: return "InvalidCharacteristic";
        case ErrorCode::ResourceLimit: return "ResourceLimit";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace wsc
