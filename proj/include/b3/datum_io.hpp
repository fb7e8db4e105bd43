#pragma once

#include <optional>

#include "b3/liftings.hpp"

namespace b3 {

/// A datum file: the Cartan datum plus an optional assignment of the
/// deformation parameters (rationals, keyed by root name).
struct DatumFile {
    Datum datum;
    std::optional<std::array<CycScalar, kNumRoots>> mu;

    /// File mu values when present (validated against the mask), fully
    /// symbolic parameters otherwise.
    MuFamily mu_family() const;
};

/// JSON schema (schema_version 1):
///   { "N": 3, "invariant_factors": [9,9,9],
///     "E": [[2,-1,0],[-1,2,-1],[0,-1,1]],
///     "g": [[1,0,0],[0,1,0],[0,0,1]],
///     "chi": [[...],[...],[...]],        // dual exponent vectors
///     "mu": {"a1": "1", "a21": "2/3"} }  // optional; integers or "p/q"
DatumFile parse_datum_json(const std::string& text);
DatumFile load_datum_file(const std::string& path);

std::string datum_to_json(const DatumFile& df);

}  // namespace b3
