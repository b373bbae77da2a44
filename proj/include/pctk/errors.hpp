#pragma once

#include <stdexcept>
#include <string>

namespace pctk {

/// Error taxonomy shared by validation, generators, solvers and IO.
enum class Errc {
    NonSquare,
    NonPositiveEntry,
    ReciprocityViolation,
    DiagonalNotOne,
    NonPositiveWeight,
    OrderTooSmall,
    DegenerateX,
    BadPlacement,
    KTooLarge,
    OffsetsClash,
    NoConvergence,
    OddOrder,
    XNotAboveOne,
    BadOrder,
    BadInput,
    ParseError,
};

const char* errc_name(Errc code) noexcept;

class PcError : public std::runtime_error {
  public:
    PcError(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw PcError(code, message);
}

}  // namespace pctk
