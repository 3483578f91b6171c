#pragma once

#include <string>

#include "loopkit/certificates.hpp"
#include "loopkit/properties.hpp"
#include "loopkit/subloops.hpp"

namespace loopkit {

enum class ReportFormat { Text, Structured };

// Renderers shared by the command-line tool and the tests. Text is for
// humans; Structured is JSON with a fixed key order, byte-identical across
// runs for the same input. Flag keys: associative, commutative, leftBol,
// rightBol, moufang, aip, bruck, bLoop, aLoop, powerAssociative, simple,
// solvable, nilpotent, weakLagrange, strongLagrange. Parameter keys:
// nilpotencyClass, derivedLength, exponent, mK (null when not applicable).
std::string report_properties(const PropertyReport& r, ReportFormat f);

// One line per subloop (order, sorted element list) plus containment edges
// as index pairs into the canonical subloop order. with_edges=false leaves
// the containment relation out entirely (list-only reports).
std::string report_lattice(const SubloopLattice& lat, ReportFormat f, bool with_edges = true);

// Text form delegates to serialize_certificate; Structured mirrors the tree
// as nested objects with keys kind, node, order, N, conclusion, witness,
// children.
std::string report_certificate(const Certificate& c, ReportFormat f);

}  // namespace loopkit
