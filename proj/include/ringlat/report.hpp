#pragma once

#include <iosfwd>

#include "ringlat/analysis.hpp"

namespace ringlat {

enum class ReportFormat { text, markdown };

void render_analysis(const AnalysisBundle& b, ReportFormat fmt, std::ostream& out);

// DOT digraph of the Hasse diagram: nodes carry the additive length and
// closure/atom flags, edges the r/d/i minimal-type letters. Byte-stable for
// a fixed input.
void render_dot(const IntervalLattice& L, std::ostream& out);

}  // namespace ringlat
