#ifndef NANOFET_ERRORS_HPP
#define NANOFET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nanofet {

// Base of all domain errors. name() is the stable machine-readable prefix
// the CLI prints ("error: StericClash: ...").
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(msg), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define NANOFET_ERROR_TYPE(NAME)                                         \
    class NAME : public Error {                                          \
    public:                                                              \
        explicit NAME(const std::string& msg) : Error(#NAME, msg) {}     \
    };

NANOFET_ERROR_TYPE(InvalidArgument)   // precondition or type-invariant violation
NANOFET_ERROR_TYPE(StericClash)       // passivation would place overlapping hydrogens
NANOFET_ERROR_TYPE(ComponentOverlap)  // assembled parts clash outside junction zones
NANOFET_ERROR_TYPE(DegenerateFit)     // fit input has no spread in the abscissa
NANOFET_ERROR_TYPE(NegativeGap)       // vdW-adjusted insulator gap closed to <= 0
NANOFET_ERROR_TYPE(NoVirtuals)        // spectrum has no unoccupied level above HOMO
NANOFET_ERROR_TYPE(ParseError)        // malformed XYZ/CSV input, message carries location
NANOFET_ERROR_TYPE(HeaderMismatch)    // CSV header differs from the expected schema
NANOFET_ERROR_TYPE(MissingData)       // bundled reference file absent

#undef NANOFET_ERROR_TYPE

} // namespace nanofet

#endif
