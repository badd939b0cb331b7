#include "fermatlab/report.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "fermatlab/lemma_lab.hpp"
#include "fermatlab/textfmt.hpp"
#include "fermatlab/triples.hpp"

namespace fermatlab {

namespace {

using nlohmann::json;

const char* parityName(ParityProfile p) {
    switch (p) {
        case ParityProfile::OneEven: return "OneEven";
        case ParityProfile::AllOdd: return "AllOdd";
        case ParityProfile::TwoEven: return "TwoEven";
        case ParityProfile::AllEven: return "AllEven";
    }
    return "?";
}

const char* variantName(FormVariant v) {
    switch (v) {
        case FormVariant::AEven: return "AEven";
        case FormVariant::BEven: return "BEven";
        case FormVariant::CEven: return "CEven";
    }
    return "?";
}

std::string signedDefect(const Natural& a, const Natural& b, const Natural& c,
                         const Natural& n) {
    const Natural sum = powBig(a, n) + powBig(b, n);
    const Natural cn = powBig(c, n);
    if (cn < sum) return "-" + (sum - cn).toString();
    return (cn - sum).toString();
}

}  // namespace

json checkTriple(const Natural& a, const Natural& b, const Natural& c, const Natural& n) {
    if (a.isZero() || b.isZero() || c.isZero() || n.isZero()) {
        throw std::invalid_argument("checkTriple: requires positive integers");
    }
    if (n.bitLength() > 16) {
        throw std::invalid_argument("checkTriple: exponent too large for a desk check");
    }

    json out;
    out["input"] = json{{"a", a.toString()},
                        {"b", b.toString()},
                        {"c", c.toString()},
                        {"n", n.toString()}};

    const ParityProfile profile = parityProfile(a, b, c);
    out["parityProfile"] = parityName(profile);
    out["parityConsistent"] = parityConsistent(a, b, c, n);
    out["pythagorean"] = isPythagorean(a, b, c);
    out["defect"] = signedDefect(a, b, c, n);
    out["cBounds"] = cBoundsHold(a < b ? b : a, c);

    const RealnessVerdict rv = rootVerdict(a, b, n);
    out["rootVerdict"] =
        json{{"kind", rv.isInteger() ? "IntegerValue" : "Irrational"},
             {"value", rv.isInteger() ? json(rv.value->toString()) : json(nullptr)}};

    out["constructed"] = false;
    out["error"] = nullptr;
    out["form"] = nullptr;
    out["twoAdic"] = nullptr;
    out["solved"] = nullptr;
    out["nearestInteger"] = nullptr;
    out["integerHit"] = nullptr;
    out["integerExclusion"] = nullptr;
    try {
        const FermatTriple t = makeFermatTriple(a, b, c);
        out["constructed"] = true;
        if (profile == ParityProfile::OneEven) {
            const FormTag tag = classifyForm(t);
            out["form"] = variantName(tag.variant);
            out["twoAdic"] = json{{"k", tag.twoAdic.k.toString()},
                                  {"d", tag.twoAdic.d.toString()}};
        }
        const ExponentSolution sol = solveExponent(t);
        out["solved"] = json{{"n", fmtSig(sol.n)},
                             {"residual", fmtSig(sol.residual)},
                             {"iterations", sol.iterations}};
        out["nearestInteger"] = std::lround(sol.n);
        const unsigned long scanTop = std::max<unsigned long>(n.toULong(), 16);
        const auto hit = firstIntegerHit(t, scanTop);
        out["integerHit"] = hit ? json(hit->toString()) : json(nullptr);
        out["integerExclusion"] = !hit.has_value();
        out["integerScanMax"] = scanTop;
    } catch (const std::domain_error& e) {
        out["error"] = e.what();
    }
    return out;
}

std::string renderCheckText(const json& bundle) {
    std::ostringstream os;
    const auto line = [&os](const char* key, const json& v) {
        os << key << ": ";
        if (v.is_null()) {
            os << "n/a";
        } else if (v.is_string()) {
            os << v.get<std::string>();
        } else {
            os << v.dump();
        }
        os << '\n';
    };
    const json& in = bundle.at("input");
    os << "triple (" << in.at("a").get<std::string>() << ", "
       << in.at("b").get<std::string>() << ", " << in.at("c").get<std::string>()
       << ") with n = " << in.at("n").get<std::string>() << '\n';
    line("parityProfile", bundle.at("parityProfile"));
    line("parityConsistent", bundle.at("parityConsistent"));
    line("pythagorean", bundle.at("pythagorean"));
    line("defect", bundle.at("defect"));
    line("cBounds", bundle.at("cBounds"));
    os << "rootVerdict: " << bundle.at("rootVerdict").at("kind").get<std::string>();
    if (!bundle.at("rootVerdict").at("value").is_null()) {
        os << " (" << bundle.at("rootVerdict").at("value").get<std::string>() << ")";
    }
    os << '\n';
    line("constructed", bundle.at("constructed"));
    if (!bundle.at("error").is_null()) line("error", bundle.at("error"));
    line("form", bundle.at("form"));
    if (!bundle.at("twoAdic").is_null()) {
        os << "twoAdic: 2^" << bundle.at("twoAdic").at("k").get<std::string>() << " * "
           << bundle.at("twoAdic").at("d").get<std::string>() << '\n';
    }
    if (!bundle.at("solved").is_null()) {
        os << "solved n: " << bundle.at("solved").at("n").get<std::string>()
           << " (residual " << bundle.at("solved").at("residual").get<std::string>()
           << ", " << bundle.at("solved").at("iterations").dump() << " iterations)\n";
        line("nearestInteger", bundle.at("nearestInteger"));
        line("integerHit", bundle.at("integerHit"));
        line("integerExclusion", bundle.at("integerExclusion"));
    }
    return os.str();
}

void writeGeometryCsv(std::ostream& out, const std::vector<SPoint>& points) {
    out << "a,b,n,c,theta_deg,shape,in_S\n";
    for (const SPoint& p : points) {
        out << fmtSig(p.a) << ',' << fmtSig(p.b) << ',' << fmtSig(p.n) << ','
            << fmtSig(p.c) << ',' << fmtSig(p.thetaDeg) << ',' << shapeName(p.shape)
            << ',' << (p.inS ? 1 : 0) << '\n';
    }
}

void writeLatticeCsv(std::ostream& out, unsigned long aMax, double nMin) {
    if (aMax == 0) throw std::invalid_argument("lattice sweep: requires aMax >= 1");
    out << "a,count,bound,sqrt2_count\n";
    for (unsigned long a = 1; a <= aMax; ++a) {
        const Natural na(a);
        const LatticeArc arc = latticeCountOnArc(na, nMin);
        out << a << ',' << arc.count.toString() << ',' << arc.bound.toString() << ','
            << sqrt2CountOnArc(na).toString() << '\n';
    }
}

void writeNearMissCsv(std::ostream& out, const NearMissReport& report) {
    out << "a,b,c,n,defect\n";
    for (const SearchHit& h : report.counterexamples) {
        out << h.triple.a().toString() << ',' << h.triple.b().toString() << ','
            << h.triple.c().toString() << ',' << h.n.toString() << ",0\n";
    }
    for (const NearMiss& m : report.misses) {
        out << m.triple.a().toString() << ',' << m.triple.b().toString() << ','
            << m.triple.c().toString() << ',' << m.n.toString() << ','
            << m.defect.toString() << '\n';
    }
}

void writePythCsv(std::ostream& out, const std::vector<PythTriple>& triples) {
    out << "leg1,leg2,hyp\n";
    for (const PythTriple& t : triples) {
        out << t.leg1.toString() << ',' << t.leg2.toString() << ','
            << t.hyp.toString() << '\n';
    }
}

nlohmann::json conjecture1Json(const Conjecture1Report& report) {
    json rows = json::array();
    for (const Conjecture1Row& r : report.rows) {
        rows.push_back(json{
            {"a", r.triple.a().toString()},
            {"b", r.triple.b().toString()},
            {"c", r.triple.c().toString()},
            {"solvedN", fmtSig(r.solved.n)},
            {"residual", fmtSig(r.solved.residual)},
            {"nearestInteger", r.nearestInteger},
            {"distanceToNearest", fmtSig(r.distanceToNearest)},
            {"integerHit", r.integerHit ? json(r.integerHit->toString()) : json(nullptr)}});
    }
    return json{{"aMax", report.aMax}, {"nMax", report.nMax}, {"rows", rows}};
}

}  // namespace fermatlab
