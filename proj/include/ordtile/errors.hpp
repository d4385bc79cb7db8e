#ifndef ORDTILE_ERRORS_HPP
#define ORDTILE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ordtile {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text or JSON input rejected; line is 1-based in the offending file.
struct ParseError : Error {
    int line;

    ParseError(const std::string & what, int line_) :
        Error{"line " + std::to_string(line_) + ": " + what},
        line(line_)
    {
    }
};

struct AlphaStarUndefined : Error {
    AlphaStarUndefined() : Error{"alpha* undefined: interval chromatic number is 1"} {}
};

struct ChiLtNotTwo : Error {
    explicit ChiLtNotTwo(int chi) :
        Error{"pattern has interval chromatic number " + std::to_string(chi) + ", need exactly 2"}
    {
    }
};

struct PropertyBRequired : Error {
    PropertyBRequired() : Error{"pattern lacks Property B: some interval cut is not crossed by an edge"} {}
};

struct PropertyCRequired : Error {
    PropertyCRequired() : Error{"neither endpoint vertex of the pattern has Property C"} {}
};

}

#endif
