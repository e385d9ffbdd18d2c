#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "equitree/decider.hpp"
#include "equitree/reductions.hpp"

namespace equitree {

// DIMACS-like text format:
//   c <comment>            (ignored on read, never written)
//   p edge <V> <E>
//   e <u> <v>              (1-based; written with u < v, edges sorted)
// The parser rejects self-loops, duplicate edges, out-of-range endpoints
// and edge-count mismatches; endpoint order is normalized on read.
Graph read_dimacs(std::istream& in);
std::string write_dimacs(const Graph& g);

// Coloring text format:
//   q <q> t <t|inf>
//   <vertex> <color>       (1-based, one line per vertex, sorted by vertex)
struct ColoringFile {
    Coloring coloring;
    DegreeBound t;
};

ColoringFile read_coloring_text(std::istream& in);
std::string write_coloring_text(const ColoringFile& file);

// JSON alternative: {"q": q, "t": t|"inf", "classes": [[1-based ids]...]}
nlohmann::ordered_json coloring_to_json(const ColoringFile& file);
ColoringFile coloring_from_json(const nlohmann::ordered_json& j);

// Certificate emitted by the decide command; field order is fixed:
// feasible, orientation, clause, a, r, k (when present), coloring (when
// requested and present, serialized in the JSON coloring form with the
// given degree bound).
nlohmann::ordered_json certificate_json(const Verdict& verdict,
                                        DegreeBound coloring_t,
                                        bool include_coloring);

// Region/provenance sidecar for the reduce command.
nlohmann::ordered_json gadget_sidecar_json(const GadgetOutput& gadget,
                                           GadgetKind kind, int q,
                                           std::optional<int> t);

std::string gadget_kind_str(GadgetKind kind);

}  // namespace equitree
