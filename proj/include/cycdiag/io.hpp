#ifndef CYCDIAG_IO_HPP
#define CYCDIAG_IO_HPP

#include <string>

#include "cycdiag/complex.hpp"

namespace cyd {

// Parses the JSON description of an augmented semi-simplicial set:
//   { "dims": {"-1": ["[]"], "0": ["a","b"], ...},
//     "faces": {"cell": ["face0","face1",...]},
//     "pointed": false }
// or the facet shorthand { "facets": [[0,1],[1,2],[0,2]] }
// or { "builder": "boundary(3)" }.
AugSimplicialSet complex_from_json_text(const std::string& text);

// Builder string ("simplex(n)", "boundary(n)", "rp2", "circle"), or a path
// to a JSON file, or inline JSON starting with '{'.
AugSimplicialSet load_complex(const std::string& spec);

}  // namespace cyd

#endif
