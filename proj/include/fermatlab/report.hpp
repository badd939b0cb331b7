#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermatlab/exactcore.hpp"
#include "fermatlab/explorer.hpp"
#include "fermatlab/geometry.hpp"

namespace fermatlab {

/// Single-instance probe: every applicable predicate's result for (a, b, c, n)
/// in one bundle. Construction failures are reported inside the bundle with
/// the violated assumption; only non-positive inputs throw.
nlohmann::json checkTriple(const Natural& a, const Natural& b, const Natural& c,
                           const Natural& n);

/// Plain-text rendering of a checkTriple bundle, one field per line.
std::string renderCheckText(const nlohmann::json& bundle);

/// CSV emitters: header row always, UTF-8, LF line endings, floats at 12
/// significant digits. All byte-deterministic for fixed inputs.
void writeGeometryCsv(std::ostream& out, const std::vector<SPoint>& points);
void writeLatticeCsv(std::ostream& out, unsigned long aMax, double nMin);
void writeNearMissCsv(std::ostream& out, const NearMissReport& report);
void writePythCsv(std::ostream& out, const std::vector<PythTriple>& triples);

/// JSON form of the integer-exponent experiment.
nlohmann::json conjecture1Json(const Conjecture1Report& report);

}  // namespace fermatlab
