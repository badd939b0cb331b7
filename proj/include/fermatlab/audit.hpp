#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace fermatlab {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// How a claim is substantiated. NarrativeUnchecked marks steps of the source
/// argument that no computation here can decide; they always stay Unchecked
/// so the report never overstates what was validated.
enum class ClaimKind { ExactTheorem, EmpiricalSweep, NarrativeUnchecked };

enum class Verdict { Verified, Falsified, Unchecked };

const char* kindName(ClaimKind k);
const char* verdictName(Verdict v);

/// One auditable claim: a stable id, the source citation with a verbatim
/// quote anchor, and the evidence gathered for this run.
struct ClaimRecord {
    std::string id;
    std::string paperRef;
    ClaimKind kind;
    Verdict verdict;
    nlohmann::json evidence;
};

/// Knobs for every evidence gatherer. Presets keep the audit at desk scale;
/// validate() rejects degenerate values, and gatherers skip (verdict
/// Unchecked) when a knob exceeds its documented hard cap.
struct AuditBounds {
    std::string preset = "default";

    unsigned long parityCMax = 100;        // exhaustive triple scans: c <= this
    unsigned long parityNMax = 6;          // ... exponents 3..this
    unsigned long trichotomySamples = 1000;
    unsigned long trichotomyAbMax = 100;
    unsigned long trichotomyDenomMax = 50;
    unsigned long pythHypMax = 1000;       // enumeration cap for parity-of-hypotenuse sweeps
    unsigned long powExpMax = 20;          // power-of-two even legs up to 2^this
    unsigned long qGridMax = 64;           // q grids for the case checks
    unsigned long minGapMax = 99;          // odd a < c <= this
    unsigned long minGapMMax = 6;
    unsigned long fracSamples = 1000;
    unsigned long fracAbMax = 99;
    unsigned long twoAdicKMax = 16;
    unsigned long twoAdicDMax = 99;
    unsigned long gridPoints = 1000;       // geometry sampling
    unsigned long latticeAMax = 10000;
    unsigned long fltAMax = 100;
    unsigned long fltNMax = 12;
    unsigned long conjAMax = 30;
    unsigned long conjNMax = 20;

    static AuditBounds forPreset(const std::string& name);

    /// Throws std::invalid_argument on degenerate values (usage error).
    void validate() const;

    nlohmann::json toJson() const;
};

struct AuditReport {
    std::string toolVersion;
    AuditBounds bounds;
    std::uint64_t seed;
    std::vector<ClaimRecord> claims;
    std::vector<std::pair<std::string, std::string>> dependencyEdges;

    const ClaimRecord* find(const std::string& id) const;

    /// Byte-deterministic given (bounds, seed): sorted object keys, claims in
    /// registry order, floats rendered at 12 significant digits.
    nlohmann::json toJson() const;
};

/// Runs every registered claim's evidence gatherer and fills verdicts.
AuditReport runAudit(const AuditBounds& bounds, std::uint64_t seed);

/// 0 = all non-narrative claims Verified; 1 = any Falsified; 4 = partial
/// (a non-narrative claim left Unchecked, e.g. a skipped oversized sweep).
int exitStatusFor(const AuditReport& report);

}  // namespace fermatlab
