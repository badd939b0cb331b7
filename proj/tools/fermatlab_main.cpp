#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fermatlab/audit.hpp"
#include "fermatlab/explorer.hpp"
#include "fermatlab/geometry.hpp"
#include "fermatlab/report.hpp"
#include "fermatlab/textfmt.hpp"
#include "fermatlab/triples.hpp"

namespace {

using fermatlab::Natural;
using nlohmann::json;

// Subcommand with parent-option fallthrough, so global flags like --json or
// --bounds may appear before or after the verb.
CLI::App* addSub(CLI::App& parent, const std::string& name, const std::string& desc) {
    CLI::App* sub = parent.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
}

// Output destination: stdout, or --out PATH. Failure to open or flush is an
// I/O error (exit 3), distinct from usage errors (exit 2).
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) {
                throw std::ios_base::failure("cannot open for writing: " + path);
            }
        }
    }

    std::ostream& stream() { return file_ ? *file_ : std::cout; }

    void finish() {
        stream().flush();
        if (file_ && !*file_) throw std::ios_base::failure("write failed");
    }

  private:
    std::unique_ptr<std::ofstream> file_;
};

int runAuditCommand(const std::string& boundsName, std::uint64_t seed, bool jsonOut,
                    const std::string& outPath) {
    const auto bounds = fermatlab::AuditBounds::forPreset(boundsName);
    const fermatlab::AuditReport report = fermatlab::runAudit(bounds, seed);
    Sink sink(outPath);
    if (jsonOut) {
        sink.stream() << report.toJson().dump(2) << '\n';
    } else {
        for (const auto& c : report.claims) {
            sink.stream() << fermatlab::verdictName(c.verdict) << '\t'
                          << fermatlab::kindName(c.kind) << '\t' << c.id << '\t'
                          << c.paperRef << '\n';
        }
        sink.stream() << "claims: " << report.claims.size()
                      << ", edges: " << report.dependencyEdges.size()
                      << ", exit: " << exitStatusFor(report) << '\n';
    }
    sink.finish();
    return fermatlab::exitStatusFor(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fermatlab: exact-arithmetic probes for power-sum triples"};
    app.require_subcommand(1);

    bool jsonOut = false;
    std::string outPath;
    std::uint64_t seed = fermatlab::kDefaultSeed;
    std::string boundsName = "default";
    app.add_flag("--json", jsonOut, "emit JSON instead of text");
    app.add_option("--out", outPath, "write output to PATH instead of stdout");
    app.add_option("--seed", seed, "seed for randomized sampling");
    app.add_option("--bounds", boundsName, "bounds preset")
        ->check(CLI::IsMember({"small", "default", "large"}));

    auto* audit = addSub(app, "audit", "run the full claim registry");

    auto* check = addSub(app, "check", "probe one (a, b, c, n) instance");
    std::uint64_t ca = 0, cb = 0, cc = 0, cn = 0;
    check->add_option("a", ca, "first addend")->required();
    check->add_option("b", cb, "second addend")->required();
    check->add_option("c", cc, "candidate sum side")->required();
    check->add_option("n", cn, "integer exponent")->required();

    auto* pyth = addSub(app, "pyth", "enumerate primitive Pythagorean triples");
    std::uint64_t hypLimit = 100;
    pyth->add_option("--hyp-limit", hypLimit, "largest hypotenuse to include");

    auto* sweep = addSub(app, "sweep", "emit plot data or experiment results");
    sweep->require_subcommand(1);

    auto* geo = addSub(*sweep, "geometry", "points of the region S as CSV");
    double aLo = 1.0, aHi = 1.0, bLo = 1.0, bHi = 1.0, nLo = 2.1, nHi = 5.0, step = 0.1;
    geo->add_option("--a-lo", aLo);
    geo->add_option("--a-hi", aHi);
    geo->add_option("--b-lo", bLo);
    geo->add_option("--b-hi", bHi);
    geo->add_option("--n-lo", nLo);
    geo->add_option("--n-hi", nHi);
    geo->add_option("--step", step);

    auto* lattice = addSub(*sweep, "lattice", "integer points on the arc as CSV");
    std::uint64_t latticeAMax = 100;
    double latticeNMin = 3.0;
    lattice->add_option("--amax", latticeAMax, "largest leg a");
    lattice->add_option("--nmin", latticeNMin, "exponent defining the arc");

    auto* nearmiss = addSub(*sweep, "nearmiss", "small-defect triples as CSV");
    std::uint64_t nmAMax = 10;
    std::uint64_t nmCap = 1;
    std::vector<std::uint64_t> nmExponents{3};
    nearmiss->add_option("--amax", nmAMax, "largest addend");
    nearmiss->add_option("--n", nmExponents, "exponents to scan (repeatable)");
    nearmiss->add_option("--cap", nmCap, "largest defect to report");

    auto* conj = addSub(*sweep, "conjecture1", "solved-exponent experiment as JSON");
    std::uint64_t cjAMax = 30;
    std::uint64_t cjNMax = 20;
    conj->add_option("--amax", cjAMax, "largest addend");
    conj->add_option("--nmax", cjNMax, "largest integer exponent to exclude");

    auto* solve = addSub(app, "solve", "solve a^n + b^n = c^n for real n");
    std::uint64_t sa = 0, sb = 0, sc = 0;
    solve->add_option("a", sa, "first addend")->required();
    solve->add_option("b", sb, "second addend")->required();
    solve->add_option("c", sc, "sum side")->required();

    auto* brute = addSub(app, "bruteforce", "exact search for a^n + b^n = c^n");
    std::uint64_t bfAMax = 100;
    std::uint64_t bfNMax = 12;
    bool includeN2 = false;
    brute->add_option("--amax", bfAMax, "largest addend");
    brute->add_option("--nmax", bfNMax, "largest exponent");
    brute->add_flag("--include-n2", includeN2, "admit n = 2 (validation mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*audit) {
            return runAuditCommand(boundsName, seed, jsonOut, outPath);
        }
        if (*check) {
            const json bundle = fermatlab::checkTriple(Natural(ca), Natural(cb),
                                                       Natural(cc), Natural(cn));
            Sink sink(outPath);
            if (jsonOut) {
                sink.stream() << bundle.dump(2) << '\n';
            } else {
                sink.stream() << fermatlab::renderCheckText(bundle);
            }
            sink.finish();
            return 0;
        }
        if (*pyth) {
            const auto triples = fermatlab::enumPrimitivePythagorean(Natural(hypLimit));
            Sink sink(outPath);
            if (jsonOut) {
                json arr = json::array();
                for (const auto& t : triples) {
                    arr.push_back(json{{"leg1", t.leg1.toString()},
                                       {"leg2", t.leg2.toString()},
                                       {"hyp", t.hyp.toString()}});
                }
                sink.stream() << arr.dump(2) << '\n';
            } else {
                fermatlab::writePythCsv(sink.stream(), triples);
            }
            sink.finish();
            return 0;
        }
        if (*geo) {
            const auto points = fermatlab::sweepEmit({aLo, aHi}, {bLo, bHi}, {nLo, nHi}, step);
            Sink sink(outPath);
            fermatlab::writeGeometryCsv(sink.stream(), points);
            sink.finish();
            return 0;
        }
        if (*lattice) {
            Sink sink(outPath);
            fermatlab::writeLatticeCsv(sink.stream(), latticeAMax, latticeNMin);
            sink.finish();
            return 0;
        }
        if (*nearmiss) {
            std::vector<unsigned long> exps(nmExponents.begin(), nmExponents.end());
            const auto report = fermatlab::nearMissSearch(nmAMax, exps, nmCap);
            Sink sink(outPath);
            fermatlab::writeNearMissCsv(sink.stream(), report);
            sink.finish();
            return report.counterexamples.empty() ? 0 : 1;
        }
        if (*conj) {
            const auto report = fermatlab::conjecture1Experiment(cjAMax, cjNMax);
            Sink sink(outPath);
            sink.stream() << fermatlab::conjecture1Json(report).dump(2) << '\n';
            sink.finish();
            return 0;
        }
        if (*solve) {
            const auto t = fermatlab::makeFermatTriple(Natural(sa), Natural(sb), Natural(sc));
            const auto sol = fermatlab::solveExponent(t);
            Sink sink(outPath);
            if (jsonOut) {
                sink.stream() << json{{"n", fermatlab::fmtSig(sol.n)},
                                      {"residual", fermatlab::fmtSig(sol.residual)},
                                      {"iterations", sol.iterations}}
                                     .dump(2)
                              << '\n';
            } else {
                sink.stream() << "n = " << fermatlab::fmtSig(sol.n) << " (residual "
                              << fermatlab::fmtSig(sol.residual) << ", "
                              << sol.iterations << " iterations)\n";
            }
            sink.finish();
            return 0;
        }
        if (*brute) {
            const unsigned long nMin = includeN2 ? 2 : 3;
            const auto hits = fermatlab::fltBruteForce(bfAMax, bfNMax, nMin);
            Sink sink(outPath);
            if (jsonOut) {
                json arr = json::array();
                for (const auto& h : hits) {
                    arr.push_back(json{{"a", h.triple.a().toString()},
                                       {"b", h.triple.b().toString()},
                                       {"c", h.triple.c().toString()},
                                       {"n", h.n.toString()}});
                }
                sink.stream() << arr.dump(2) << '\n';
            } else {
                sink.stream() << "a,b,c,n\n";
                for (const auto& h : hits) {
                    sink.stream() << h.triple.a().toString() << ','
                                  << h.triple.b().toString() << ','
                                  << h.triple.c().toString() << ','
                                  << h.n.toString() << '\n';
                }
            }
            sink.finish();
            bool counterexample = false;
            for (const auto& h : hits) {
                if (h.n > Natural(2)) counterexample = true;
            }
            return counterexample ? 1 : 0;
        }
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
