#include <doctest.h>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fermatlab/audit.hpp"

using namespace fermatlab;

namespace {

AuditReport smallReport() {
    static const AuditReport report =
        runAudit(AuditBounds::forPreset("small"), kDefaultSeed);
    return report;
}

}  // namespace

TEST_CASE("registry shape: ids unique, kinds and verdicts populated") {
    const AuditReport rep = smallReport();
    CHECK(rep.claims.size() == 32);
    CHECK(rep.toolVersion == std::string(kToolVersion));
    std::set<std::string> ids;
    for (const auto& c : rep.claims) {
        CHECK(ids.insert(c.id).second);
        CHECK(!c.paperRef.empty());
        if (c.kind == ClaimKind::NarrativeUnchecked) {
            CHECK(c.verdict == Verdict::Unchecked);
        }
    }
    CHECK(rep.find("L1") != nullptr);
    CHECK(rep.find("NOPE") == nullptr);
}

TEST_CASE("every dependency edge endpoint exists and the spine is present") {
    const AuditReport rep = smallReport();
    std::set<std::string> ids;
    for (const auto& c : rep.claims) ids.insert(c.id);
    std::set<std::pair<std::string, std::string>> edges;
    for (const auto& [from, to] : rep.dependencyEdges) {
        CHECK(ids.count(from) == 1);
        CHECK(ids.count(to) == 1);
        edges.emplace(from, to);
    }
    CHECK(edges.count({"L1", "C2"}) == 1);
    CHECK(edges.count({"L3", "C4"}) == 1);
    CHECK(edges.count({"L5", "L6"}) == 1);
    CHECK(edges.count({"L6", "L8"}) == 1);
}

TEST_CASE("paperRef carries the verbatim quote anchors") {
    // Embedded anchor list: each claim's paperRef must contain its fragment.
    const std::vector<std::pair<std::string, std::string>> anchors = {
        {"L1", "a single element of the triple"},
        {"C2", "has one of the following three forms"},
        {"L3", "is not a fractional number"},
        {"C4", "the third element is not a fractional number"},
        {"L5", "the other element has the form $2^k$"},
        {"L5.case1", "contradicting the fact that $2^{kn/2}$ is even"},
        {"L5.case2.qeven1", "Suppose $q^2=2^{kn-2}$"},
        {"L5.case2.qeven2", "q^2\\mid 2^{kn-2}$ and $2^{kn-2}\\neq q^{2}"},
        {"L5.case2.qeven3", "$q^2\\nmid 2^{kn-2}$"},
        {"L5.case2.qodd1", "the minimum difference between them is $2$"},
        {"L5.case2.qodd2", "Assume $q$ is odd greater than $1$"},
        {"L5.case3", "using the commutative property of sum"},
        {"L5.narrative", "must be a Pythagorean triple"},
        {"HYP_ODD", "requires that the hypotenuse $2^{kn/2}$ is odd"},
        {"EQ12", "\\frac{2^{kn-2}}{q^2}+q^2"},
        {"PQ_DOM", "results that $2^{kn-2}>q^2$"},
        {"MIN_GAP", "Therefore $c^{n/2}-a^{n/2}>2$"},
        {"L6", "can be expressed as $2^{h}$"},
        {"L6.narrative", "with $c=2^{h}$ and $a,b\\in\\mathbb{Z}^{+}$"},
        {"L7", "a triple with three perfect square numbers"},
        {"L7.narrative", "is proved following a similar reasoning"},
        {"L8", "compare the arithmetical structures of both equations"},
        {"L8.narrative", "Pay attention to line F"},
        {"TABLE1", "The valid structure for Equation"},
        {"FRAC_ID", "(2^{h}d)^n=a^{n}+\\left[\\frac{b^2}{a}\\right]^n"},
        {"C_BOUNDS", "(a+1) \\leq c<a\\sqrt{2}"},
        {"A_EQ_B", "gives $c=a\\sqrt[n]{2}$"},
        {"THETA_BOUND", "$60$\\textdegree $<\\theta <90$\\textdegree"},
        {"REMARK_SHAPE", "then $\\Delta ABC$ is obtuse"},
        {"NOTE_DAGGER", "h\\leq \\lfloor a(\\sqrt[3]{2}-1)\\rfloor"},
        {"FLT_SWEEP", "there are no positive integers"},
        {"CONJ1", "Then, $n$ is irrational"},
    };
    const AuditReport rep = smallReport();
    CHECK(anchors.size() == rep.claims.size());
    for (const auto& [id, fragment] : anchors) {
        const ClaimRecord* claim = rep.find(id);
        REQUIRE_MESSAGE(claim != nullptr, id);
        CHECK_MESSAGE(claim->paperRef.find(fragment) != std::string::npos, id);
    }
}

TEST_CASE("exact and narrative verdicts land where the contract says") {
    const AuditReport rep = smallReport();
    unsigned narrative = 0;
    for (const auto& c : rep.claims) {
        if (c.kind == ClaimKind::NarrativeUnchecked) {
            ++narrative;
            CHECK_MESSAGE(c.verdict == Verdict::Unchecked, c.id);
        } else {
            CHECK_MESSAGE(c.verdict == Verdict::Verified, c.id);
        }
    }
    CHECK(narrative == 5);  // L5/L6/L7/L8 inference steps and Table 1
    CHECK(exitStatusFor(rep) == 0);
}

TEST_CASE("falsified and unchecked claims drive the exit status") {
    AuditReport rep = smallReport();
    CHECK(exitStatusFor(rep) == 0);

    AuditReport partial = rep;
    for (auto& c : partial.claims) {
        if (c.id == "L3") c.verdict = Verdict::Unchecked;
    }
    CHECK(exitStatusFor(partial) == 4);

    AuditReport falsified = rep;
    for (auto& c : falsified.claims) {
        if (c.id == "L1") c.verdict = Verdict::Falsified;
    }
    CHECK(exitStatusFor(falsified) == 1);
}

TEST_CASE("oversized bounds yield Unchecked evidence and partial status") {
    AuditBounds bounds = AuditBounds::forPreset("small");
    bounds.trichotomySamples = 200001;  // beyond the desk-scale cap
    const AuditReport rep = runAudit(bounds, kDefaultSeed);
    const ClaimRecord* l3 = rep.find("L3");
    REQUIRE(l3 != nullptr);
    CHECK(l3->verdict == Verdict::Unchecked);
    CHECK(l3->evidence.contains("skipped"));
    CHECK(exitStatusFor(rep) == 4);
}

TEST_CASE("report JSON is byte-deterministic and carries the schema header") {
    const AuditBounds bounds = AuditBounds::forPreset("small");
    const std::string one = runAudit(bounds, kDefaultSeed).toJson().dump(2);
    const std::string two = runAudit(bounds, kDefaultSeed).toJson().dump(2);
    CHECK(one == two);

    const auto j = runAudit(bounds, kDefaultSeed).toJson();
    CHECK(j.at("schemaVersion").get<int>() == 1);
    CHECK(j.at("toolVersion").get<std::string>() == "1.0.0");
    CHECK(j.at("parameters").at("seed").get<std::uint64_t>() == kDefaultSeed);
    CHECK(j.at("parameters").at("preset").get<std::string>() == "small");
    CHECK(j.at("claims").is_array());
    CHECK(j.at("dependencyEdges").is_array());
    CHECK(j.at("claims").size() == 32);
    for (const auto& c : j.at("claims")) {
        CHECK(c.contains("id"));
        CHECK(c.contains("paperRef"));
        CHECK(c.contains("kind"));
        CHECK(c.contains("verdict"));
        CHECK(c.contains("evidence"));
    }
}

TEST_CASE("the seed changes samples but not verdicts") {
    const AuditBounds bounds = AuditBounds::forPreset("small");
    const AuditReport other = runAudit(bounds, 42);
    CHECK(exitStatusFor(other) == 0);
    for (const auto& c : other.claims) {
        if (c.kind != ClaimKind::NarrativeUnchecked) {
            CHECK_MESSAGE(c.verdict == Verdict::Verified, c.id);
        }
    }
}

TEST_CASE("bounds presets validate and unknown names are rejected") {
    CHECK_NOTHROW(AuditBounds::forPreset("small").validate());
    CHECK_NOTHROW(AuditBounds::forPreset("default").validate());
    CHECK_NOTHROW(AuditBounds::forPreset("large").validate());
    CHECK_THROWS_AS(AuditBounds::forPreset("huge"), std::invalid_argument);

    AuditBounds bad = AuditBounds::forPreset("default");
    bad.parityCMax = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    AuditBounds evenGap = AuditBounds::forPreset("default");
    evenGap.minGapMax = 100;  // must stay odd
    CHECK_THROWS_AS(evenGap.validate(), std::invalid_argument);
}

TEST_CASE("enum names render stably") {
    CHECK(std::string(kindName(ClaimKind::ExactTheorem)) == "ExactTheorem");
    CHECK(std::string(kindName(ClaimKind::EmpiricalSweep)) == "EmpiricalSweep");
    CHECK(std::string(kindName(ClaimKind::NarrativeUnchecked)) == "NarrativeUnchecked");
    CHECK(std::string(verdictName(Verdict::Verified)) == "Verified");
    CHECK(std::string(verdictName(Verdict::Falsified)) == "Falsified");
    CHECK(std::string(verdictName(Verdict::Unchecked)) == "Unchecked");
}
