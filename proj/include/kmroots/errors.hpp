#pragma once
#include <stdexcept>
#include <string>

namespace kmroots {

// Every library failure derives from Error so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define KMROOTS_ERROR(Name)                                                   \
    struct Name : Error {                                                     \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

KMROOTS_ERROR(UnknownLabel);
KMROOTS_ERROR(DimensionMismatch);
KMROOTS_ERROR(BoundExceeded);
KMROOTS_ERROR(NotASublattice);
KMROOTS_ERROR(NotARealRoot);
KMROOTS_ERROR(ConditionViolated);
KMROOTS_ERROR(NotAffine);
KMROOTS_ERROR(IndefiniteType);
KMROOTS_ERROR(SearchCapExceeded);
KMROOTS_ERROR(OutOfTableRange);
KMROOTS_ERROR(NotUntwistedComponent);
KMROOTS_ERROR(NoAffineExtension);
KMROOTS_ERROR(NotEmbedded);
KMROOTS_ERROR(InvalidTuple);
KMROOTS_ERROR(UnknownFixture);
KMROOTS_ERROR(InvalidGCM);
KMROOTS_ERROR(NotHyperbolic);
KMROOTS_ERROR(InternalError);

#undef KMROOTS_ERROR

// Column is 1-based and points at the offending character.
struct ParseError : Error {
    ParseError(const std::string& what, int col)
        : Error("ParseError: " + what + " at column " + std::to_string(col)), column(col) {}
    int column;
};

}  // namespace kmroots
