#pragma once

// JSON encodings shared by the command line and the fixtures.
//
// Scalars: an integer, a rational string "p/q", a float, or an object
// {"re": q, "im": q} optionally extended by {"s": {"re", "im"}, "m": m} for
// c0 + c1 sqrt(-i m). Exact parts are strings; float parts are numbers.
//
// Elements: [{"mono": ["beta", ...], "exp": {"a": -1}, "coef": scalar}, ...]
// over an algebra {"odd": [...], "even": [...], "star": bool,
// "odd_pairs": [[x, y]], "even_pairs": [[x, y]], "odd_star": {name: element},
// "even_star": {name: element}}.

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "spw/harmonic.hpp"
#include "spw/reps.hpp"
#include "spw/supergroup.hpp"

namespace spw {

using Json = nlohmann::ordered_json;

class JsonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const Algebra& alg);
Algebra algebra_from_json(const Json& j);

Json to_json(const GrassmannElement& x);
GrassmannElement element_from_json(const Algebra& alg, const Json& j);

/// {"algebra": ..., "a": ..., "beta": ..., "gamma": ..., "d": ...}
Json to_json(const GL11Point& g);
GL11Point gl11_point_from_json(const Json& j);

/// {"algebra": ..., "w": ..., "eta": ...}
Json to_json(const S11Point& p);
S11Point s11_point_from_json(const Json& j);

/// {"algebra": ..., "t": ..., "theta": ..., "eta": ...}
Json to_json(const FactorizationTriple& f);

/// {"algebra": "su11", "basis": [{"parity": 0, "weight": 2}], "generators": {"U": matrix, ...}}
Json to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

Json to_json(const DecompositionReport& r);

/// {"group": "su11", "terms": [{"m": 2, "mono": ["theta"], "coef": scalar}]}
Json to_json(const Section& s);
Section section_from_json(const Json& j);

Json to_json(const ExpansionResult& r);

/// Reads and parses a file; JsonError on I/O or syntax problems.
Json read_json_file(const std::string& path);

/// Converts every scalar of a representation to the requested field.
Representation converted(const Representation& rep, const FieldOptions& opts);

}  // namespace spw
