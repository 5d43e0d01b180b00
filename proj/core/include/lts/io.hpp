#ifndef LTS_IO_HPP
#define LTS_IO_HPP

#include <lts/linear_map.hpp>
#include <lts/representation.hpp>
#include <lts/triple_system.hpp>

#include <string>

/// \file io.hpp
/// JSON file formats for the exchange of algebras, linear maps and
/// representations.  All loaders throw InvalidInputError with a message
/// naming the offending field on any malformed input.
///
/// Algebra file (a triple system by structure constants):
///   {
///     "kind": "triple_system",
///     "dim": 2,
///     "field": "rational",
///     "basis": ["e1", "e2"],                  // optional labels
///     "brackets": [
///       {"args": [0, 1, 1], "value": {"0": "1"}},
///       {"args": [1, 0, 1], "value": {"0": "-1"}}
///     ]
///   }
/// Entries are 0-based; "value" maps output index to a rational literal.
/// Unlisted triples are zero.  No symmetry completion is applied: the
/// table means exactly what is listed.  Duplicate args entries are
/// rejected.
///
/// Map file (a linear map, column convention):
///   {
///     "kind": "linear_map",
///     "rows": 2,
///     "cols": 2,
///     "entries": [["0", "1"], ["0", "2"]]     // entries[i][j] = A(i,j)
///   }
///
/// Representation file (one carrier matrix per base pair):
///   {
///     "kind": "representation",
///     "base_dim": 2,
///     "carrier_dim": 2,
///     "field": "rational",
///     "entries": [
///       {"args": [0, 1], "matrix": [["0", "0"], ["1", "0"]]}
///     ]
///   }
/// Unlisted pairs are zero matrices.

namespace lts {

/// Parse from JSON text.
TripleSystem parse_algebra_json(const std::string& text);
LinearMap parse_map_json(const std::string& text);
Representation parse_representation_json(const std::string& text);

/// Load from a file path (InvalidInputError if unreadable).
TripleSystem load_algebra_file(const std::string& path);
LinearMap load_map_file(const std::string& path);
Representation load_representation_file(const std::string& path);

/// Serialize (used by the command-line driver's JSON output).
std::string algebra_to_json(const TripleSystem& t);

}  // namespace lts

#endif  // LTS_IO_HPP
