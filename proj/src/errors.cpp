#include "pctk/errors.hpp"

namespace pctk {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NonSquare: return "NonSquare";
        case Errc::NonPositiveEntry: return "NonPositiveEntry";
        case Errc::ReciprocityViolation: return "ReciprocityViolation";
        case Errc::DiagonalNotOne: return "DiagonalNotOne";
        case Errc::NonPositiveWeight: return "NonPositiveWeight";
        case Errc::OrderTooSmall: return "OrderTooSmall";
        case Errc::DegenerateX: return "DegenerateX";
        case Errc::BadPlacement: return "BadPlacement";
        case Errc::KTooLarge: return "KTooLarge";
        case Errc::OffsetsClash: return "OffsetsClash";
        case Errc::NoConvergence: return "NoConvergence";
        case Errc::OddOrder: return "OddOrder";
        case Errc::XNotAboveOne: return "XNotAboveOne";
        case Errc::BadOrder: return "BadOrder";
        case Errc::BadInput: return "BadInput";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace pctk
