#ifndef CONELAB_PARSER_HPP
#define CONELAB_PARSER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conelab/polynomial.hpp"

namespace conelab {

// One parsed session file: a ring declaration, named bindings, and at most one
// command.  Grammar (# starts a line comment):
//
//   script    := ring-decl {binding} [command]
//   ring-decl := "ring" ident {"," ident} ";" ["param" ident ";"]
//                ["order" ("lex" | "grevlex") ";"]
//   binding   := ("poly" | "ideal") ident "=" poly-expr {"," poly-expr} ";"
//   command   := cmd-word arg {("," | " ") arg} ";"
//   poly-expr := ["+"|"-"] term {("+"|"-") term}
//   term      := factor {"*" factor}
//   factor    := rational | ident | factor "^" nat | "(" poly-expr ")"
//   rational  := nat | nat "/" nat
struct SessionScript {
    RingPtr ring;
    std::vector<std::pair<std::string, Polynomial>> polys;
    std::vector<std::pair<std::string, std::vector<Polynomial>>> ideals;
    std::optional<std::string> command;
    std::vector<std::string> command_args;

    const Polynomial* find_poly(const std::string& name) const;
    const std::vector<Polynomial>* find_ideal(const std::string& name) const;
};

SessionScript parse_script(const std::string& source);
SessionScript parse_script_file(const std::string& path);

// Stand-alone polynomial expression in an existing ring; used by tests, the
// CLI --poly flag, and report round-trips.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& source);

} // namespace conelab

#endif
