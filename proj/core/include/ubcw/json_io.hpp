// JSON serialization for complexes and chains.
//
// Complex: { "name": str, "regular": bool,
//            "degrees": [ { "q": int, "simplices": [id, ...] }, ... ],
//            "faces":   [ { "q": int, "simplex": id, "i": int, "face": id }, ... ] }
// Chain:   { "q": int, "coeffs": [ [id, "p/q"], ... ] } with rationals as
// lowest-terms strings.
#pragma once

#include <string>

#include "ubcw/chain.hpp"
#include "ubcw/semi_simplicial.hpp"

namespace ubcw {

std::string complex_to_json(const SemiSimplicialSet& X);
SemiSimplicialSet complex_from_json(const std::string& text);

std::string chain_to_json(const Chain& c);
Chain chain_from_json(const std::string& text);

// File helpers; throw PreconditionError with the path on I/O failure.
void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);

}  // namespace ubcw
