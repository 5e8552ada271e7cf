#pragma once

#include <stdexcept>
#include <string>

namespace skewlr {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define SKEWLR_ERROR(name)                              \
    struct name : error {                               \
        explicit name(const std::string& what)          \
            : error(std::string(#name ": ") + what) {}  \
    }

SKEWLR_ERROR(InvalidPartition);
SKEWLR_ERROR(SizeMismatch);
SKEWLR_ERROR(NotComparable);
SKEWLR_ERROR(DoesNotFit);
SKEWLR_ERROR(NotContained);
SKEWLR_ERROR(NotBasic);
SKEWLR_ERROR(LengthExceeded);
SKEWLR_ERROR(NotRibbon);
SKEWLR_ERROR(EmptySubset);
SKEWLR_ERROR(HypothesisViolated);
SKEWLR_ERROR(OutOfRange);
SKEWLR_ERROR(ParseError);
SKEWLR_ERROR(Overflow);

#undef SKEWLR_ERROR

}  // namespace skewlr
