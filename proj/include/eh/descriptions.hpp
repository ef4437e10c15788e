#ifndef EH_DESCRIPTIONS_HPP
#define EH_DESCRIPTIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eh/pipeline.hpp"

namespace eh {

/* Space-description documents: one binding per line.

     # spaces
     space y  = circle 1
     space s2 = sphere 2
     space w  = wedge y s2          # optional base vertices after the names
     space jn = join y y
     space pr = product y s2
     space su = suspension s2

     # morphisms (explicit tables or builders)
     space c2 = circle 2
     space pt = point
     morphism f = degree_map c2 y
     morphism k = constant c2 pt v
     space cone = pushout f k
     morphism t = table c2 y {
       v0 -> v
       v1 -> v
       e0 -> s
       e1 -> s
     }

   Words on the right of a table arrow are "s3 s1 base": degeneracy
   operators outermost first, then the target simplex id. */

struct SpaceBinding {
    SpacePtr space;
    std::optional<Span> span;  // present when the space is pushout-backed
    std::string kind;
    std::vector<std::string> args;
};

struct MorphismBinding {
    SimplicialMorphism morphism;
    std::string kind;
    std::vector<std::string> args;
    // canonical table rows for kind == "table"
    std::vector<std::pair<std::string, std::string>> table_rows;
};

struct Description {
    std::map<std::string, SpaceBinding> spaces;
    std::map<std::string, MorphismBinding> morphisms;
    std::vector<std::string> binding_order;

    const SpaceBinding& space(const std::string& name) const;
    const MorphismBinding& morphism(const std::string& name) const;
};

/// Parses and evaluates a document.  Throws ParseError on syntax errors,
/// InputError on unknown names/builders, VerifyError when a morphism
/// table fails the face-commutation check.
Description parse_description(const std::string& text);

/// Canonical text form of a document; parse ∘ render is the identity on
/// rendered documents (round-trip tested).
std::string render_description(const Description& doc);

struct RunResult {
    std::string out;
    std::string err;
    int exit_code = 0;
};

/// The CLI driver behind `ehp <file> <command> ...`:
///   homology <name> <a..b>   homology report, one block per degree
///   verify <name>            verification suites, pass/fail lines
///   inspect <name>           basis counts and pipeline intermediates
/// Exit codes: 0 success, 1 verification failure, 2 parse/resolve errors.
RunResult run_command(const std::string& document_text, const std::vector<std::string>& args);

}  // namespace eh

#endif
