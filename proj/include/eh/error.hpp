#ifndef EH_ERROR_HPP
#define EH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace eh {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Chain/morphism degrees do not line up. */
struct DegreeError : Error {
    explicit DegreeError(const std::string& msg) : Error(msg) {}
};

/* A chain or morphism is used over the wrong complex. */
struct MismatchError : Error {
    explicit MismatchError(const std::string& msg) : Error(msg) {}
};

/* A composite object (equivalence, SES, cone) is assembled from
   incompatible parts. */
struct StructureError : Error {
    explicit StructureError(const std::string& msg) : Error(msg) {}
};

/* A verified postcondition (reduction equations, chain-map property,
   d^2 = 0) failed to hold. */
struct VerifyError : Error {
    explicit VerifyError(const std::string& msg) : Error(msg) {}
};

/* Bad user-facing input: invalid simplicial data, unknown builder, ... */
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string& msg)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          line(line_), column(col_) {}
};

}  // namespace eh

#endif
