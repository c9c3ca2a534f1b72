// Acceptance suite: one line per criterion, measured values against pinned
// bounds. Exit status is the number of failing criteria, capped at 1.
//
// Criteria that pin idealized limiting constants can fail honestly on the
// finite windows used here; the line then shows the measured value so the
// gap is visible rather than hidden behind a loosened tolerance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "shiftlab/core.hpp"
#include "shiftlab/detect.hpp"
#include "shiftlab/dyn.hpp"
#include "shiftlab/freq.hpp"
#include "shiftlab/gen.hpp"
#include "shiftlab/seqcore.hpp"
#include "shiftlab/system.hpp"
#include "support/oracles.hpp"

using namespace shiftlab;

namespace {

constexpr double kGolden = 0.6180339887498949;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(6) << v;
    return ss.str();
}

Word word_from_code(int len, unsigned code) {
    std::vector<Bit> bits;
    bits.reserve(static_cast<std::size_t>(len));
    for (int b = len - 1; b >= 0; --b) bits.push_back(static_cast<Bit>((code >> b) & 1u));
    return Word(std::move(bits));
}

RelationMatrix matrix_from_code(int rows, int cols, unsigned code) {
    RelationMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.set(i, j, static_cast<Bit>((code >> (i * cols + j)) & 1u));
    return m;
}

// --- 1: the two occurrence routes agree ------------------------------------

Outcome criterion1() {
    std::mt19937_64 rng(101);
    const std::vector<Source> pool = {
        gen_champernowne(),
        gen_pnormal(0.3, 42),
        gen_periodic(Word("1101")),
        gen_sturmian(kGolden, 0.25),
    };
    const Index N = 5000;
    int mismatches = 0;
    for (int round = 0; round < 200; ++round) {
        const Source& J = pool[rng() % pool.size()];
        const int len = 1 + static_cast<int>(rng() % 6);
        std::vector<Bit> bits;
        for (int b = 0; b < len; ++b) bits.push_back(static_cast<Bit>(rng() & 1));
        const Word W(std::move(bits));
        if (occurrences(W, J, N).positions != intersect_shifts(W, J, N)) ++mismatches;
    }
    Outcome o;
    o.pass = mismatches == 0;
    o.detail = "direct scan vs set intersection over 200 random picks at radius 5000: " +
               std::to_string(mismatches) + " discrepancies (required 0)";
    return o;
}

// --- 2: equidistribution of the counting concatenation ---------------------

Outcome criterion2() {
    const Index N = 100000;
    const double tol = 0.02;
    const BitWindow win = gen_champernowne().window(-N, N);

    const double dns = window_density(win).point;
    bool ok = std::abs(dns - 0.5) <= tol;

    double worstDev = -1.0;
    std::string worstWord;
    for (int len = 1; len <= 6; ++len) {
        const double target = std::ldexp(1.0, -len);
        for (unsigned code = 0; code < (1u << len); ++code) {
            const Word W = word_from_code(len, code);
            const double est = occurrences(W, win).estimate.point;
            const double dev = std::abs(est - target);
            if (dev > worstDev) {
                worstDev = dev;
                worstWord = W.str();
            }
            if (dev > tol) ok = false;
        }
    }
    Outcome o;
    o.pass = ok;
    o.detail = "density=" + fmt(dns) + " (required 0.5±" + fmt(tol) + "); worst word " +
               worstWord + " off by " + fmt(worstDev) + " (required <=" + fmt(tol) +
               " for every word up to length 6)";
    return o;
}

// --- 3: shift gaps ----------------------------------------------------------

Outcome criterion3() {
    const Index N = 100000;
    const WidenessReport ch = epsilon_wide(gen_champernowne(), 0.24, 64, N, 0.0);
    double minGap = 1.0;
    Index minAt = 0;
    for (const auto& [n, gap] : ch.perShiftGap) {
        if (gap < minGap) {
            minGap = gap;
            minAt = n;
        }
    }
    const WidenessReport per = epsilon_wide(gen_periodic(Word("10")), 0.24, 64, N, 0.0);

    Outcome o;
    o.pass = ch.verdict && !per.verdict;
    o.detail = "counting rule min gap=" + fmt(minGap) + " at shift " + std::to_string(minAt) +
               " (required >=0.240000 for all |n|<=64); periodic verdict=" +
               (per.verdict ? "true" : "false") + " (required false)";
    return o;
}

// --- 4: almost periodicity --------------------------------------------------

Outcome criterion4() {
    const Index N = 100000;
    ShiftOrbitSystem perSys;
    perSys.register_set("A", gen_periodic(Word("10")));
    const CompactnessReport per = compact_check(perSys, 0, {"A"}, 0.2, 64, N);

    ShiftOrbitSystem chSys;
    chSys.register_set("J", gen_champernowne());
    const CompactnessReport ch = compact_check(chSys, 0, {"J"}, 0.2, 64, N);

    const bool perOk =
        per.verdict && per.perSet[0].symdiff == 0.0 && per.perSet[0].bestN == 2;
    const bool chOk = ch.perSet[0].symdiff >= 0.45;

    Outcome o;
    o.pass = perOk && chOk;
    o.detail = "periodic set returns exactly at n=" + std::to_string(per.perSet[0].bestN) +
               " with symdiff=" + fmt(per.perSet[0].symdiff) +
               " (required 0 at the period); counting rule min symdiff=" +
               fmt(ch.perSet[0].symdiff) + " at n=" + std::to_string(ch.perSet[0].bestN) +
               " (required >=0.450000 over n<=64)";
    return o;
}

// --- 5: entropy reference points ---------------------------------------------

Outcome criterion5() {
    const bool exactHalf = partition_entropy({0.5, 0.5}) == 1.0;

    std::mt19937_64 rng(55);
    bool bounded = true;
    for (int round = 0; round < 1000; ++round) {
        const int k = 2 + static_cast<int>(rng() % 7);
        std::vector<double> masses(static_cast<std::size_t>(k));
        double total = 0.0;
        for (double& m : masses) {
            m = static_cast<double>(rng() % 10000 + 1);
            total += m;
        }
        for (double& m : masses) m /= total;
        if (partition_entropy(masses) > std::log2(static_cast<double>(k)) + 1e-12)
            bounded = false;
    }

    const double chRate = block_entropy(gen_champernowne(), 6, 200000).rate;
    const double stRate = block_entropy(gen_sturmian(kGolden, 0.0), 8, 100000).rate;
    const EntropyEstimate per = block_entropy(gen_periodic(Word("10")), 8, 100000);

    Outcome o;
    o.pass = exactHalf && bounded && chRate >= 0.95 && stRate <= 0.44 && per.rate == 0.125;
    o.detail = std::string("even split entropy exact=") + (exactHalf ? "yes" : "no") +
               "; 1000 random masses bounded by log2(k)=" + (bounded ? "yes" : "no") +
               "; rates: counting@6=" + fmt(chRate) + " (>=0.95), rotation@8=" + fmt(stRate) +
               " (<=0.44), periodic@8=" + fmt(per.rate) + " (=0.125 exactly)";
    return o;
}

// --- 6: pushforward matches product masses ----------------------------------

Outcome criterion6() {
    const Index N = 100000;
    const double tol = 0.02;
    const std::pair<double, std::uint64_t> cases[] = {{0.5, 1}, {0.3, 42}};

    double worstDev = -1.0;
    std::string worstTag;
    bool ok = true;
    for (const auto& [p, seed] : cases) {
        ShiftOrbitSystem sys;
        sys.register_set("J", gen_pnormal(p, seed));
        for (int len = 1; len <= 5; ++len) {
            for (unsigned code = 0; code < (1u << len); ++code) {
                const Word W = word_from_code(len, code);
                const double est = pushforward_cylinder(sys, 0, "J", W, N).point;
                const double dev = std::abs(est - bernoulli_cylinder(p, W));
                if (dev > worstDev) {
                    worstDev = dev;
                    worstTag = W.str() + "@p=" + fmt(p);
                }
                if (dev > tol) ok = false;
            }
        }
    }
    Outcome o;
    o.pass = ok;
    o.detail = "all words up to length 5 for p in {0.5, 0.3}: worst deviation " + fmt(worstDev) +
               " (" + worstTag + ", required <=" + fmt(tol) + ")";
    return o;
}

// --- 7: symbolic image commutes with the successor ---------------------------

Outcome criterion7() {
    std::mt19937_64 rng(77);
    int exact = 0;
    const int rounds = 100;
    for (int round = 0; round < rounds; ++round) {
        Source src = gen_champernowne();
        switch (rng() % 4) {
            case 0: break;
            case 1: src = gen_pnormal(0.05 + 0.9 * (static_cast<double>(rng() % 1000) / 1000.0),
                                      rng());
                    break;
            case 2: {
                const int len = 1 + static_cast<int>(rng() % 8);
                std::vector<Bit> bits;
                for (int b = 0; b < len; ++b) bits.push_back(static_cast<Bit>(rng() & 1));
                src = gen_periodic(Word(std::move(bits)));
                break;
            }
            default: src = gen_sturmian(kGolden, static_cast<double>(rng() % 10000) / 10000.0);
        }
        ShiftOrbitSystem sys;
        sys.register_set("A", src);
        const Index a = static_cast<Index>(rng() % 40001) - 20000;

        const BitWindow after = xi(sys, a + 1, "A", 500);
        const BitWindow before = xi(sys, a, "A", 501);
        bool same = true;
        for (Index i = -500; i <= 500 && same; ++i) same = after.at(i) == before.at(i + 1);
        if (same) ++exact;
    }
    Outcome o;
    o.pass = exact == rounds;
    o.detail = "advancing the point equals shifting the image on [-500,500]: exact in " +
               std::to_string(exact) + "/" + std::to_string(rounds) + " random systems";
    return o;
}

// --- 8: the window metric is an ultrametric ----------------------------------

Outcome criterion8() {
    long long pairChecks = 0, tripleChecks = 0, violations = 0;

    for (Index L = 0; L <= 4; ++L) {
        const int n = static_cast<int>(2 * L + 1);
        const unsigned count = 1u << n;
        auto make = [&](unsigned mask) {
            std::vector<Bit> bits;
            bits.reserve(static_cast<std::size_t>(n));
            for (int t = 0; t < n; ++t) bits.push_back(static_cast<Bit>((mask >> t) & 1u));
            return BitWindow(-L, std::move(bits));
        };

        // pairs: symmetry, the agree state, and the disagreement index
        for (unsigned a = 0; a < count; ++a) {
            const BitWindow x = make(a);
            for (unsigned b = 0; b < count; ++b) {
                const BitWindow y = make(b);
                const CantorDistance d = cantor_distance(x, y, L);
                const CantorDistance r = cantor_distance(y, x, L);
                ++pairChecks;
                if (d.value() != r.value()) ++violations;
                if ((a == b) != d.agrees_to_window()) ++violations;
                if (a != b) {
                    Index expect = L + 1;
                    for (Index i = 0; i <= L; ++i) {
                        const unsigned diff = a ^ b;
                        const bool hit = ((diff >> (i + L)) & 1u) || ((diff >> (L - i)) & 1u);
                        if (hit) {
                            expect = i;
                            break;
                        }
                    }
                    if (!d.t.has_value() || *d.t != expect) ++violations;
                }
            }
        }

        // triples, reduced by xor-translation to a zero base point:
        // d(u, v) <= max(d(0, u), d(0, v)) over all u, v covers every triple
        // because xor by a fixed pattern preserves disagreement positions.
        const BitWindow zero = make(0);
        std::vector<double> fromZero(count);
        for (unsigned u = 0; u < count; ++u)
            fromZero[u] = cantor_distance(zero, make(u), L).value();
        for (unsigned u = 0; u < count; ++u) {
            const BitWindow wu = make(u);
            for (unsigned v = 0; v < count; ++v) {
                ++tripleChecks;
                const double duv = cantor_distance(wu, make(v), L).value();
                if (duv > std::max(fromZero[u], fromZero[v])) ++violations;
            }
        }

        // literal triples at the small lengths, no reduction involved
        if (L <= 2) {
            for (unsigned a = 0; a < count; ++a)
                for (unsigned b = 0; b < count; ++b)
                    for (unsigned c = 0; c < count; ++c) {
                        ++tripleChecks;
                        const double ac = cantor_distance(make(a), make(c), L).value();
                        const double ab = cantor_distance(make(a), make(b), L).value();
                        const double bc = cantor_distance(make(b), make(c), L).value();
                        if (ac > std::max(ab, bc)) ++violations;
                    }
        }
    }

    Outcome o;
    o.pass = violations == 0;
    o.detail = std::to_string(pairChecks) + " pair checks and " + std::to_string(tripleChecks) +
               " triangle checks over all centered windows up to length 9: " +
               std::to_string(violations) + " violations (required 0)";
    return o;
}

// --- 9: move-graph reachability ----------------------------------------------

Outcome criterion9() {
    const BitWindow start = gen_step(StepPolarity::OneZero).window(-16, 16);
    int reached = 0, replayed = 0, total = 0;
    std::size_t maxExpanded = 0;
    for (int len = 1; len <= 6; ++len) {
        for (unsigned code = 0; code < (1u << len); ++code) {
            ++total;
            const Word target = word_from_code(len, code);
            const SwReachResult r = sw_reach(start, target, 100000);
            if (r.status != SwReachStatus::Reached) continue;
            ++reached;
            maxExpanded = std::max(maxExpanded, r.expanded);
            const BitWindow end = apply_moves(start, r.moves);
            bool ok = true;
            for (Index j = 1; j <= target.length() && ok; ++j) ok = end.at(j) == target.at(j);
            if (ok) ++replayed;
        }
    }
    Outcome o;
    o.pass = reached == total && replayed == total;
    o.detail = std::to_string(reached) + "/" + std::to_string(total) +
               " targets up to length 6 reached from the step window on [-16,16] and " +
               std::to_string(replayed) + " replayed exactly; max nodes expanded " +
               std::to_string(maxExpanded) + " of budget 100000";
    return o;
}

// --- 10: detectors against brute force ----------------------------------------

Outcome criterion10() {
    long long checks = 0, disagreements = 0, badWitnesses = 0;

    auto audit = [&](const RelationMatrix& m, const std::vector<int>& ipSizes,
                     const std::vector<int>& opSizes, const std::vector<int>& sopSizes) {
        for (int n : ipSizes) {
            ++checks;
            const auto w = ip_witness(m, n);
            if (w.has_value() != oracles::has_ip(m, n)) ++disagreements;
            if (w && !verify_ip(m, *w)) ++badWitnesses;
        }
        for (int n : opSizes) {
            ++checks;
            const auto w = op_witness(m, n);
            if (w.has_value() != oracles::has_op(m, n)) ++disagreements;
            if (w && !verify_op(m, *w)) ++badWitnesses;
        }
        for (int k : sopSizes) {
            ++checks;
            const auto w = sop_witness(m, k);
            if (w.has_value() != oracles::has_sop(m, k)) ++disagreements;
            if (w && !verify_sop(m, *w)) ++badWitnesses;
        }
    };

    for (unsigned code = 0; code < 512; ++code)
        audit(matrix_from_code(3, 3, code), {2}, {2, 3}, {2, 3});

    std::mt19937_64 rng(202);
    for (int round = 0; round < 100000; ++round)
        audit(matrix_from_code(4, 4, static_cast<unsigned>(rng() & 0xFFFF)), {2, 3}, {2, 3, 4},
              {2, 3, 4});

    Outcome o;
    o.pass = disagreements == 0 && badWitnesses == 0;
    o.detail = "all 512 3x3 matrices plus 100000 sampled 4x4, " + std::to_string(checks) +
               " searches: " + std::to_string(disagreements) + " oracle disagreements, " +
               std::to_string(badWitnesses) + " witnesses failing re-verification (required 0/0)";
    return o;
}

// --- 11: the staircase dichotomy ------------------------------------------------

Outcome criterion11() {
    // Bound table first, by brute force alone: the largest staircase among
    // matrices of each shape with no size-2 shattering and no 3-chain.
    int bound[5][5] = {};
    for (int r = 1; r <= 4; ++r) {
        for (int c = 1; c <= 4; ++c) {
            int best = 0;
            const unsigned total = 1u << (r * c);
            for (unsigned code = 0; code < total; ++code) {
                const RelationMatrix m = matrix_from_code(r, c, code);
                if (oracles::has_ip(m, 2) || oracles::has_sop(m, 3)) continue;
                best = std::max(best, oracles::max_staircase(m));
            }
            bound[r][c] = best;
        }
    }

    // Every matrix whose staircase exceeds its shape's bound must decompose.
    long long exceeders = 0, decomposed = 0;
    for (int r = 1; r <= 4; ++r) {
        for (int c = 1; c <= 4; ++c) {
            const unsigned total = 1u << (r * c);
            for (unsigned code = 0; code < total; ++code) {
                const RelationMatrix m = matrix_from_code(r, c, code);
                const int stair = oracles::max_staircase(m);
                if (stair <= bound[r][c]) continue;
                ++exceeders;
                const auto opw = op_witness(m, stair);
                if (!opw || !verify_op(m, *opw)) continue;
                const auto res = shelah_decompose(m, *opw, 2, 3);
                if (!res) continue;
                const bool good = res->branch == ShelahResult::Branch::IP
                                      ? (res->ip && verify_ip(m, *res->ip))
                                      : (res->sop && verify_sop(m, *res->sop));
                if (good) ++decomposed;
            }
        }
    }

    // Named branch checks on canonical shapes.
    RelationMatrix lin(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) lin.set(i, j, i <= j ? 1 : 0);
    const auto linOp = op_witness(lin, 3);
    std::optional<ShelahResult> linRes;
    if (linOp) linRes = shelah_decompose(lin, *linOp, 2, 3);
    const bool linOk = linRes && linRes->branch == ShelahResult::Branch::SOP &&
                       linRes->sop->colSeq == std::vector<int>{0, 1, 2, 3, 4, 5};

    RelationMatrix shat(3, 8);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 8; ++j) shat.set(i, j, static_cast<Bit>((j >> i) & 1));
    const auto shatOp = op_witness(shat, 2);
    std::optional<ShelahResult> shatRes;
    if (shatOp) shatRes = shelah_decompose(shat, *shatOp, 2, 3);
    const bool shatOk = shatRes && shatRes->branch == ShelahResult::Branch::IP &&
                        shatRes->ip->rowSet == std::vector<int>{0, 1};

    std::ostringstream tab;
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c <= 4; ++c) tab << (r == 1 && c == 1 ? "" : ",") << bound[r][c];

    Outcome o;
    o.pass = exceeders > 0 && decomposed == exceeders && linOk && shatOk;
    o.detail = "brute-force staircase bounds (r,c<=4; no 2-shattering, no 3-chain): [" +
               tab.str() + "]; " + std::to_string(decomposed) + "/" + std::to_string(exceeders) +
               " exceeding matrices decomposed; linear order -> nested chain " +
               (linOk ? "ok" : "WRONG") + ", full shattering -> shattering " +
               (shatOk ? "ok" : "WRONG");
    return o;
}

// --- 12: block languages of orbit images ------------------------------------------

Outcome criterion12() {
    const RadoSystem rado = rado_cayley(gen_champernowne(), {-2, -1, 0, 1, 2});
    std::vector<RhoInput> rich;
    for (Index a = -2; a <= 2; ++a)
        rich.push_back(RhoInput{&rado.system, a, "U_" + std::to_string(a)});
    const RhoLanguage lang = rho_language(rich, 4, 1000);
    const bool richOk = lang.denseProxy && lang.words.size() == 16;

    ShiftOrbitSystem stepSys;
    stepSys.register_set("J", gen_step(StepPolarity::OneZero));
    std::vector<RhoInput> mono;
    for (Index a = -2; a <= 2; ++a) mono.push_back(RhoInput{&stepSys, a, "J"});
    const RhoLanguage monoLang = rho_language(mono, 4, 100);
    bool shapesOk = true;
    for (const Word& w : monoLang.words) {
        bool seenZero = false;
        for (Index j = 1; j <= w.length(); ++j) {
            if (w.at(j) == 0) seenZero = true;
            if (w.at(j) == 1 && seenZero) shapesOk = false;  // a 1 after a 0
        }
    }
    const SopImageReport img = sop_image_check(stepSys, "J", {-2, -1, 0, 1, 2}, 50);

    Outcome o;
    o.pass = richOk && shapesOk && img.shadow;
    o.detail = "neighbor sets of the counting rule: " + std::to_string(lang.words.size()) +
               "/16 words of length 4, dense=" + (lang.denseProxy ? "true" : "false") +
               "; step images: monotone blocks only=" + (shapesOk ? "true" : "false") +
               " (" + std::to_string(monoLang.words.size()) + " words), shadow=" +
               (img.shadow ? "true" : "false");
    return o;
}

// --- 13: separation of the translate family -----------------------------------------

Outcome criterion13() {
    ShiftOrbitSystem fam;
    std::vector<std::string> names;
    const Source ch = gen_champernowne();
    for (int j = 0; j < 16; ++j) {
        std::string name = "s" + std::string(j < 10 ? "0" : "") + std::to_string(j);
        fam.register_set(name, shift(ch, j));
        names.push_back(name);
    }
    const SeparationReport sep = separation_report(names, fam, 0, 100000, {0.45});
    double minDist = 1.0;
    int lag = 0;
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (sep.pairwiseDistances[i][j] < minDist) {
                minDist = sep.pairwiseDistances[i][j];
                lag = static_cast<int>(j - i);
            }
    const bool apartOk = minDist >= 0.45;

    ShiftOrbitSystem nest;
    std::vector<std::string> tnames;
    const Source step = gen_step(StepPolarity::OneZero);
    for (int k = 0; k < 16; ++k) {
        std::string name = "t" + std::string(k < 10 ? "0" : "") + std::to_string(k);
        nest.register_set(name, shift(step, k));
        tnames.push_back(name);
    }
    const SeparationReport nsep = separation_report(tnames, nest, 0, 1000, {0.1});
    const int net = nsep.netSizeAt[0].second;

    Outcome o;
    o.pass = apartOk && net <= 2;
    o.detail = "16 translates of the counting rule: min pairwise distance " + fmt(minDist) +
               " at lag " + std::to_string(lag) +
               " (required >=0.450000); nested half-line family: 0.1-net size " +
               std::to_string(net) + " (required <=2)";
    return o;
}

}  // namespace

int main() {
    struct Entry {
        int num;
        const char* title;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {1, "occurrence routes agree", criterion1},
        {2, "counting-rule equidistribution", criterion2},
        {3, "shift gaps", criterion3},
        {4, "almost periodicity", criterion4},
        {5, "entropy reference points", criterion5},
        {6, "pushforward product masses", criterion6},
        {7, "image/successor commutation", criterion7},
        {8, "ultrametric window distance", criterion8},
        {9, "move-graph reachability", criterion9},
        {10, "detectors vs brute force", criterion10},
        {11, "staircase dichotomy", criterion11},
        {12, "image block languages", criterion12},
        {13, "translate-family separation", criterion13},
    };

    int passed = 0, failed = 0;
    for (const Entry& e : entries) {
        const Outcome o = e.fn();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << e.num << " (" << e.title
                  << "): " << o.detail << "\n";
        (o.pass ? passed : failed) += 1;
        std::cout.flush();
    }
    std::cout << passed << " passed, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}
