#include "fermatlab/explorer.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace fermatlab {

namespace {

// Largest c with c^2 < 2*a^2, i.e. the open upper end of the c window.
std::uint64_t cWindowMax(std::uint64_t a) {
    const std::uint64_t t = 2 * a * a;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(t)));
    while ((r + 1) * (r + 1) <= t) ++r;
    while (r > 0 && r * r >= t) --r;
    return r;
}

// Dense table of v^n for v in [0, vMax], n in [nLo, nHi]. Sweeps touch the
// same powers millions of times, so they are computed once up front. Reads
// are const and safe to share across sweep threads.
class PowerTable {
  public:
    PowerTable(std::uint64_t vMax, unsigned long nLo, unsigned long nHi)
        : nLo_(nLo), nCount_(nHi - nLo + 1), cells_((vMax + 1) * nCount_) {
        mpz_class base;
        for (std::uint64_t v = 0; v <= vMax; ++v) {
            base = static_cast<unsigned long>(v);
            for (unsigned long j = 0; j < nCount_; ++j) {
                mpz_pow_ui(cells_[v * nCount_ + j].get_mpz_t(), base.get_mpz_t(),
                           nLo_ + j);
            }
        }
    }

    const mpz_class& at(std::uint64_t v, unsigned long n) const {
        return cells_[v * nCount_ + (n - nLo_)];
    }

  private:
    unsigned long nLo_;
    unsigned long nCount_;
    std::vector<mpz_class> cells_;
};

FermatTriple tripleOf(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return makeFermatTriple(Natural(a), Natural(b), Natural(c));
}

// Calls visit(a, b, c) for every primitive (gcd 1) combination with
// b <= a, aLo <= a <= aMax, stepping a by aStride, and a < c < a*sqrt(2).
template <typename Visit>
void forEachWindowTriple(std::uint64_t aLo, std::uint64_t aMax, std::uint64_t aStride,
                         Visit&& visit) {
    for (std::uint64_t a = aLo; a <= aMax; a += aStride) {
        const std::uint64_t cTop = cWindowMax(a);
        for (std::uint64_t b = 1; b <= a; ++b) {
            const std::uint64_t gAB = std::gcd(a, b);
            for (std::uint64_t c = a + 1; c <= cTop; ++c) {
                if (gAB != 1 && std::gcd(gAB, c) != 1) continue;
                visit(a, b, c);
            }
        }
    }
}

// Exact scan of one triple over [nMin, nMax]. The gap c^n - a^n - b^n grows
// strictly once positive (c > a and c > b), so the scan stops as soon as two
// consecutive gaps are positive and verified increasing.
template <typename OnExact>
void scanExponents(const PowerTable& pows, std::uint64_t a, std::uint64_t b,
                   std::uint64_t c, unsigned long nMin, unsigned long nMax,
                   OnExact&& onExact) {
    mpz_class sum;
    mpz_class gap;
    mpz_class prevGap;
    bool prevPositive = false;
    for (unsigned long n = nMin; n <= nMax; ++n) {
        sum = pows.at(a, n) + pows.at(b, n);
        const int rel = cmp(pows.at(c, n), sum);
        if (rel == 0) {
            onExact(n, mpz_class(0));
            prevPositive = false;
            continue;
        }
        if (rel > 0) {
            gap = pows.at(c, n) - sum;
            if (prevPositive && gap > prevGap) break;
            prevPositive = true;
            std::swap(prevGap, gap);
        } else {
            prevPositive = false;  // sum still ahead; the gap may flip sign later
        }
    }
}

void validateSweepBounds(unsigned long aMax, unsigned long nMax, unsigned long nMin) {
    if (aMax < 2) throw std::invalid_argument("sweep requires aMax >= 2");
    if (aMax > 100000000UL) throw std::invalid_argument("sweep aMax out of range");
    if (nMin < 2) throw std::invalid_argument("sweep requires nMin >= 2");
    if (nMax < nMin) throw std::invalid_argument("sweep requires nMax >= nMin");
}

}  // namespace

unsigned sweepThreadBudget() {
    if (const char* env = std::getenv("FERMATLAB_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(std::min(v, 256UL));
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

ExponentSolution solveExponent(const FermatTriple& t) {
    const double a = t.a().toDouble();
    const double b = t.b().toDouble();
    const double c = t.c().toDouble();
    const double ra = a / c;
    const double rb = b / c;
    const auto g = [&](double n) { return std::pow(ra, n) + std::pow(rb, n) - 1.0; };

    // g(0) = 1 and g is strictly decreasing, so double hi until the sign flips.
    double lo = 0.0;
    double hi = 1.0;
    while (g(hi) > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e9) throw std::logic_error("solveExponent failed to bracket");
    }

    int iterations = 0;
    while (hi - lo > 1e-14 && iterations < 200) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++iterations;
    }

    const double n = 0.5 * (lo + hi);
    double residual = std::pow(a, n) + std::pow(b, n) - std::pow(c, n);
    if (!std::isfinite(residual)) residual = g(n);  // powers overflow: report the scaled form
    return ExponentSolution{n, residual, iterations, lo, hi};
}

std::optional<Natural> firstIntegerHit(const FermatTriple& t, unsigned long nMax) {
    if (nMax < 1) throw std::invalid_argument("firstIntegerHit requires nMax >= 1");
    const mpz_class& a = t.a().raw();
    const mpz_class& b = t.b().raw();
    const mpz_class& c = t.c().raw();
    mpz_class an;
    mpz_class bn;
    mpz_class cn;
    mpz_class gap;
    mpz_class prevGap;
    bool prevPositive = false;
    for (unsigned long n = 1; n <= nMax; ++n) {
        mpz_pow_ui(an.get_mpz_t(), a.get_mpz_t(), n);
        mpz_pow_ui(bn.get_mpz_t(), b.get_mpz_t(), n);
        mpz_pow_ui(cn.get_mpz_t(), c.get_mpz_t(), n);
        gap = cn - an - bn;
        const int rel = sgn(gap);
        if (rel == 0) return Natural(n);
        if (rel > 0) {
            if (prevPositive && gap > prevGap) return std::nullopt;  // gap only grows now
            prevPositive = true;
            std::swap(prevGap, gap);
        } else {
            prevPositive = false;
        }
    }
    return std::nullopt;
}

bool integerExponentExclusion(const FermatTriple& t, unsigned long nMax) {
    if (nMax < 3) throw std::invalid_argument("integerExponentExclusion requires nMax >= 3");
    return !firstIntegerHit(t, nMax).has_value();
}

std::vector<SearchHit> fltBruteForce(unsigned long aMax, unsigned long nMax,
                                     unsigned long nMin) {
    validateSweepBounds(aMax, nMax, nMin);
    const PowerTable pows(cWindowMax(aMax), nMin, nMax);

    const auto scanStripe = [&](std::uint64_t aLo, std::uint64_t stride,
                                std::vector<SearchHit>& out) {
        forEachWindowTriple(aLo, aMax, stride, [&](std::uint64_t a, std::uint64_t b,
                                                   std::uint64_t c) {
            scanExponents(pows, a, b, c, nMin, nMax,
                          [&](unsigned long n, const mpz_class&) {
                              out.push_back(SearchHit{tripleOf(a, b, c), Natural(n)});
                          });
        });
    };

    std::vector<SearchHit> hits;
    const unsigned threads =
        static_cast<unsigned>(std::min<unsigned long>(sweepThreadBudget(), aMax - 1));
    if (threads <= 1) {
        scanStripe(2, 1, hits);
    } else {
        std::vector<std::vector<SearchHit>> parts(threads);
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(
                [&, t] { scanStripe(2 + t, threads, parts[t]); });
        }
        for (auto& th : pool) th.join();
        for (auto& part : parts) {
            hits.insert(hits.end(), part.begin(), part.end());
        }
    }

    std::sort(hits.begin(), hits.end(), [](const SearchHit& x, const SearchHit& y) {
        return std::tie(x.triple.a(), x.triple.b(), x.triple.c(), x.n) <
               std::tie(y.triple.a(), y.triple.b(), y.triple.c(), y.n);
    });
    return hits;
}

NearMissReport nearMissSearch(unsigned long aMax, const std::vector<unsigned long>& nSet,
                              const Natural& defectCap) {
    if (nSet.empty()) throw std::invalid_argument("nearMissSearch requires a nonempty nSet");
    std::vector<unsigned long> ns = nSet;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    if (ns.front() < 2) throw std::invalid_argument("nearMissSearch requires n >= 2");
    validateSweepBounds(aMax, ns.back(), ns.front());

    const PowerTable pows(cWindowMax(aMax), ns.front(), ns.back());
    const mpz_class& cap = defectCap.raw();

    NearMissReport report;
    mpz_class sum;
    mpz_class defect;
    forEachWindowTriple(2, aMax, 1, [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
        for (const unsigned long n : ns) {
            sum = pows.at(a, n) + pows.at(b, n);
            defect = pows.at(c, n) - sum;
            const int rel = sgn(defect);
            if (rel == 0) {
                report.counterexamples.push_back(SearchHit{tripleOf(a, b, c), Natural(n)});
                continue;
            }
            if (rel < 0) defect = -defect;
            if (defect <= cap) {
                report.misses.push_back(
                    NearMiss{tripleOf(a, b, c), Natural(n), Natural(defect)});
            }
        }
    });

    std::sort(report.misses.begin(), report.misses.end(),
              [](const NearMiss& x, const NearMiss& y) {
                  return std::tie(x.defect, x.triple.a(), x.triple.b(), x.triple.c(), x.n) <
                         std::tie(y.defect, y.triple.a(), y.triple.b(), y.triple.c(), y.n);
              });
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const SearchHit& x, const SearchHit& y) {
                  return std::tie(x.triple.a(), x.triple.b(), x.triple.c(), x.n) <
                         std::tie(y.triple.a(), y.triple.b(), y.triple.c(), y.n);
              });
    return report;
}

Conjecture1Report conjecture1Experiment(unsigned long aMax, unsigned long nMax) {
    validateSweepBounds(aMax, nMax, 3);
    Conjecture1Report report{aMax, nMax, {}};
    forEachWindowTriple(2, aMax, 1, [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
        const FermatTriple t = tripleOf(a, b, c);
        const ExponentSolution solved = solveExponent(t);
        const long nearest = std::lround(solved.n);
        report.rows.push_back(Conjecture1Row{
            t, solved, nearest, std::fabs(solved.n - static_cast<double>(nearest)),
            firstIntegerHit(t, nMax)});
    });
    return report;
}

}  // namespace fermatlab
