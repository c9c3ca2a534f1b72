// shiftlab command-line tool: generators, density/entropy analyses,
// dynamical checks, and pattern detectors over text sequence/matrix files.
//
// Exit codes: 0 success, 1 check-verb negative verdict, 2 usage/data error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shiftlab/detect.hpp"
#include "shiftlab/dyn.hpp"
#include "shiftlab/freq.hpp"
#include "shiftlab/gen.hpp"
#include "shiftlab/seqcore.hpp"
#include "shiftlab/serde.hpp"
#include "shiftlab/system.hpp"

namespace {

using jout = nlohmann::ordered_json;
using namespace shiftlab;

// Raised for anything that should terminate with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// window arguments: "R" means [-R, R]; "a:b" means [a, b]

struct Span {
    Index lo = 0;
    Index hi = 0;
};

Index parse_index(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("bad " + what + ": \"" + text + "\" is not an integer");
    }
}

Span parse_window_arg(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) {
        const Index r = parse_index(text, "--window");
        if (r < 0) throw UsageError("--window radius must be >= 0");
        return {-r, r};
    }
    Span s{parse_index(text.substr(0, colon), "--window"),
           parse_index(text.substr(colon + 1), "--window")};
    if (s.lo > s.hi) throw UsageError("--window a:b requires a <= b");
    return s;
}

// Some verbs are defined over symmetric windows only.
Index parse_radius_arg(const std::string& text, const char* verb) {
    Span s = parse_window_arg(text);
    if (s.lo != -s.hi)
        throw UsageError(std::string(verb) + " uses symmetric windows; give --window R or -R:R");
    return s.hi;
}

std::string span_str(Index lo, Index hi) {
    return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

// ---------------------------------------------------------------------------
// file loading with path-qualified diagnostics

// Prefixes the path onto diagnostics that only carry a line number.
[[noreturn]] void rethrow_named(const std::string& path) {
    try {
        throw;
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

BitWindow load_window(const std::string& path) {
    try {
        return read_window_file(path);
    } catch (...) {
        rethrow_named(path);
    }
}

std::vector<BitWindow> load_windows(const std::string& path) {
    try {
        return read_windows_file(path);
    } catch (...) {
        rethrow_named(path);
    }
}

RelationMatrix load_matrix(const std::string& path) {
    try {
        return read_matrix_file(path);
    } catch (...) {
        rethrow_named(path);
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string system_kind(const std::string& path, const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
            throw UsageError(path + ": system file needs a string \"kind\" field");
        return j.at("kind").get<std::string>();
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(path + ": malformed JSON: " + std::string(e.what()));
    }
}

ShiftOrbitSystem load_zshift_system(const std::string& path) {
    const std::string text = slurp(path);
    const std::string kind = system_kind(path, text);
    if (kind != "zshift")
        throw UsageError(path + ": expected a system with \"kind\": \"zshift\", got \"" + kind +
                         "\"");
    try {
        return parse_zshift_system(text);
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

FinitePermSystem load_finite_system(const std::string& path) {
    const std::string text = slurp(path);
    const std::string kind = system_kind(path, text);
    if (kind != "finite")
        throw UsageError(path + ": expected a system with \"kind\": \"finite\", got \"" + kind +
                         "\"");
    try {
        return parse_finite_system(text);
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// source construction from flags

struct SourceFlags {
    std::string kind;
    std::string spec;
    std::string word;
    std::string polarity = "10";
    double p = 0.5;
    double alpha = 0.0;
    double rho = 0.0;
    std::uint64_t seed = 1;
    int bit = 1;

    bool given() const { return !kind.empty() || !spec.empty(); }

    Source build() const {
        if (!spec.empty()) {
            if (!kind.empty()) throw UsageError("give either --kind or --spec, not both");
            try {
                return parse_source_spec(slurp(spec));
            } catch (const UsageError&) {
                throw;
            } catch (const std::exception& e) {
                throw UsageError(spec + ": " + e.what());
            }
        }
        nlohmann::json j{{"kind", kind}};
        if (kind == "pnormal") {
            j["p"] = p;
            j["seed"] = seed;
        } else if (kind == "sturmian") {
            j["alpha"] = alpha;
            j["rho"] = rho;
        } else if (kind == "periodic") {
            if (word.empty()) throw UsageError("--kind periodic requires --word");
            j["word"] = word;
        } else if (kind == "step") {
            j["polarity"] = polarity;
        } else if (kind == "constant") {
            j["bit"] = bit;
        }
        try {
            return parse_source_spec(j.dump());
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }
};

// `occur` keeps --word for its search pattern, so its generator flags skip the
// periodic word parameter (use --spec there instead).
void add_source_flags(CLI::App* cmd, SourceFlags& sf, bool include_word = true) {
    cmd->add_option("--kind", sf.kind, "generator kind")
        ->check(CLI::IsMember({"champernowne", "pnormal", "sturmian", "periodic", "step",
                               "constant"}));
    cmd->add_option("--spec", sf.spec, "source spec JSON file (alternative to --kind)");
    cmd->add_option("--p", sf.p, "pnormal: digit probability in (0,1)");
    cmd->add_option("--seed", sf.seed, "pnormal: stream seed (default 1)");
    cmd->add_option("--alpha", sf.alpha, "sturmian: rotation in (0,1), non-dyadic");
    cmd->add_option("--rho", sf.rho, "sturmian: phase (default 0)");
    if (include_word) cmd->add_option("--word", sf.word, "periodic: repeating word over {0,1}");
    cmd->add_option("--polarity", sf.polarity, "step: \"10\" (1 on i<=0) or \"01\"")
        ->check(CLI::IsMember({"10", "01"}));
    cmd->add_option("--bit", sf.bit, "constant: 0 or 1")->check(CLI::Range(0, 1));
}

// A sequence verb reads either a positional file or a generated source.
struct ResolvedSeq {
    Source src;
    BitWindow win;
};

ResolvedSeq resolve_sequence(const std::string& file, const SourceFlags& sf,
                             const std::string& window_arg, Index default_radius) {
    if (!file.empty() && sf.given())
        throw UsageError("give either a sequence file or --kind/--spec, not both");
    if (file.empty() && !sf.given())
        throw UsageError("a sequence file or --kind/--spec is required");
    if (!file.empty()) {
        BitWindow w = load_window(file);
        Source src = from_window(w);
        if (!window_arg.empty()) {
            const Span s = parse_window_arg(window_arg);
            if (!w.covers(s.lo, s.hi))
                throw UsageError("requested window " + span_str(s.lo, s.hi) +
                                 " exceeds the file span " + span_str(w.lo(), w.hi()));
            w = src.window(s.lo, s.hi);
        }
        return {std::move(src), std::move(w)};
    }
    Source src = sf.build();
    const Span s = window_arg.empty() ? Span{-default_radius, default_radius}
                                      : parse_window_arg(window_arg);
    BitWindow w = src.window(s.lo, s.hi);
    return {std::move(src), std::move(w)};
}

// ---------------------------------------------------------------------------
// report serialization (JSON field names match the library types)

void emit(const jout& j) { std::cout << j.dump(2) << "\n"; }

jout freq_json(const FrequencyEstimate& e) {
    return jout{{"lower", round6(e.lower)},
                {"point", round6(e.point)},
                {"upper", round6(e.upper)},
                {"windowRadius", e.windowRadius}};
}

std::string freq_text(const FrequencyEstimate& e) {
    return "lower=" + format_fixed6(e.lower) + " point=" + format_fixed6(e.point) +
           " upper=" + format_fixed6(e.upper) + " windowRadius=" + std::to_string(e.windowRadius);
}

jout window_json(const BitWindow& w) { return jout{{"origin", w.lo()}, {"bits", w.str()}}; }

std::string window_text(const BitWindow& w) {
    return "origin=" + std::to_string(w.lo()) + " bits=" + w.str();
}

jout entropy_json(const EntropyEstimate& e) {
    return jout{{"blockLength", e.blockLength},
                {"blockEntropy", round6(e.blockEntropy)},
                {"rate", round6(e.rate)},
                {"distinctBlocks", e.distinctBlocks}};
}

std::string entropy_text(const EntropyEstimate& e) {
    return "blockLength=" + std::to_string(e.blockLength) +
           " blockEntropy=" + format_fixed6(e.blockEntropy) + " rate=" + format_fixed6(e.rate) +
           " distinctBlocks=" + std::to_string(e.distinctBlocks);
}

jout ip_json(const IPWitness& w) { return jout{{"rowSet", w.rowSet}, {"selectors", w.selectors}}; }

jout op_json(const OPWitness& w) { return jout{{"rowSeq", w.rowSeq}, {"colSeq", w.colSeq}}; }

jout sop_json(const SOPWitness& w) { return jout{{"colSeq", w.colSeq}}; }

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

std::string move_text(const SwMoveRef& m) {
    if (m.kind == SwMoveRef::Kind::Switch) return "switch@" + std::to_string(m.param);
    return m.param >= 0 ? "shift@+" + std::to_string(m.param) : "shift@" + std::to_string(m.param);
}

jout move_json(const SwMoveRef& m) {
    return jout{{"kind", m.kind == SwMoveRef::Kind::Switch ? "switch" : "shift"},
                {"param", m.param}};
}

std::optional<double> env_tolerance() {
    const char* env = std::getenv("SHIFTLAB_TOLERANCE");
    if (env == nullptr || *env == '\0') return std::nullopt;
    try {
        std::size_t used = 0;
        const double v = std::stod(env, &used);
        if (used != std::string(env).size() || v <= 0) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw UsageError("SHIFTLAB_TOLERANCE must be a positive number, got \"" +
                         std::string(env) + "\"");
    }
}

// ---------------------------------------------------------------------------
// verb runners

struct GenArgs {
    SourceFlags sf;
    std::string window = "1000";
    std::string output;
    std::string format = "text";
};

int run_gen(const GenArgs& a) {
    if (!a.sf.given()) throw UsageError("gen requires --kind or --spec");
    Source src = a.sf.build();
    const Span s = parse_window_arg(a.window);
    const BitWindow w = src.window(s.lo, s.hi);
    if (!a.output.empty()) {
        write_window_file(a.output, w);
        return 0;
    }
    if (a.format == "json") {
        emit(window_json(w));
    } else {
        write_window(std::cout, w);
    }
    return 0;
}

struct SeqVerbArgs {
    std::string file;
    SourceFlags sf;
    std::string window;
    std::string format = "text";
};

int run_density(const SeqVerbArgs& a) {
    const ResolvedSeq rs = resolve_sequence(a.file, a.sf, a.window, 1000);
    const FrequencyEstimate e = window_density(rs.win);
    if (a.format == "json")
        emit(freq_json(e));
    else
        std::cout << freq_text(e) << "\n";
    return 0;
}

struct OccurArgs {
    SeqVerbArgs seq;
    std::string word;
};

int run_occur(const OccurArgs& a) {
    const ResolvedSeq rs = resolve_sequence(a.seq.file, a.seq.sf, a.seq.window, 1000);
    const OccurrenceResult res = occurrences(Word(a.word), rs.win);
    if (a.seq.format == "json") {
        emit(jout{{"positions", res.positions}, {"estimate", freq_json(res.estimate)}});
        return 0;
    }
    std::cout << "count=" << res.positions.size() << "\n" << freq_text(res.estimate) << "\n";
    std::cout << "positions=";
    const std::size_t shown = std::min<std::size_t>(res.positions.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) {
        if (i) std::cout << ",";
        std::cout << res.positions[i];
    }
    if (res.positions.size() > shown) std::cout << ",...";
    std::cout << "\n";
    return 0;
}

struct WideArgs {
    std::string file;
    SourceFlags sf;
    std::string window;
    std::string format = "text";
    double epsilon = 0.25;
    Index maxShift = 64;
    double tolerance = -1.0;
    bool tolerance_set = false;
};

int run_wide(const WideArgs& a) {
    if (a.maxShift < 1) throw UsageError("--max-shift must be >= 1");
    std::optional<double> tol = a.tolerance_set ? std::optional<double>(a.tolerance)
                                                : env_tolerance();
    Source src = [&] {
        if (!a.file.empty() && a.sf.given())
            throw UsageError("give either a sequence file or --kind/--spec, not both");
        if (a.file.empty() && !a.sf.given())
            throw UsageError("a sequence file or --kind/--spec is required");
        return a.file.empty() ? a.sf.build() : from_window(load_window(a.file));
    }();
    Index N = 0;
    if (!a.file.empty()) {
        const BitWindow w = load_window(a.file);
        if (!a.window.empty()) {
            N = parse_radius_arg(a.window, "wide");
            if (!w.covers(-N - a.maxShift, N + a.maxShift))
                throw UsageError("wide needs the file to cover " +
                                 span_str(-N - a.maxShift, N + a.maxShift) + ", but its span is " +
                                 span_str(w.lo(), w.hi()));
        } else {
            N = std::min(-w.lo(), w.hi()) - a.maxShift;
            if (N < a.maxShift + 1)
                throw UsageError("file span too small for --max-shift " +
                                 std::to_string(a.maxShift));
        }
    } else {
        N = a.window.empty() ? 1000 : parse_radius_arg(a.window, "wide");
    }
    const WidenessReport rep = epsilon_wide(src, a.epsilon, a.maxShift, N, tol);
    if (a.format == "json") {
        jout gaps = jout::array();
        for (const auto& [n, g] : rep.perShiftGap) gaps.push_back(jout::array({n, round6(g)}));
        emit(jout{{"epsilon", round6(rep.epsilon)},
                  {"maxShift", rep.maxShift},
                  {"perShiftGap", gaps},
                  {"verdict", rep.verdict}});
    } else {
        std::cout << "verdict=" << (rep.verdict ? "true" : "false") << "\n"
                  << "epsilon=" << format_fixed6(rep.epsilon) << " maxShift=" << rep.maxShift
                  << "\n";
        for (const auto& [n, g] : rep.perShiftGap)
            std::cout << "n=" << n << " gap=" << format_fixed6(g) << "\n";
    }
    return rep.verdict ? 0 : 1;
}

struct EntropyArgs {
    std::string file;
    SourceFlags sf;
    std::string window;
    std::string format = "text";
    std::string system;
    std::vector<std::string> partition;
    Index block = 0;
};

int run_entropy(const EntropyArgs& a) {
    if (a.block < 1) throw UsageError("--block must be >= 1");
    EntropyEstimate e;
    if (!a.system.empty()) {
        if (!a.file.empty() || a.sf.given())
            throw UsageError("--system cannot be combined with a sequence input");
        if (a.partition.empty()) throw UsageError("--system requires --partition names");
        const FinitePermSystem sys = load_finite_system(a.system);
        e = finite_system_entropy(sys, a.partition, a.block);
    } else {
        const ResolvedSeq rs = resolve_sequence(a.file, a.sf, a.window, 1000);
        e = block_entropy(rs.win, a.block);
    }
    if (a.format == "json")
        emit(entropy_json(e));
    else
        std::cout << entropy_text(e) << "\n";
    return 0;
}

struct XiArgs {
    std::string system;
    Index point = 0;
    std::string set;
    std::string window;
    std::string output;
    std::string format = "text";
};

int run_xi(const XiArgs& a) {
    const ShiftOrbitSystem sys = load_zshift_system(a.system);
    const Index N = a.window.empty() ? 1000 : parse_radius_arg(a.window, "xi");
    const BitWindow w = xi(sys, a.point, a.set, N);
    if (!a.output.empty()) {
        write_window_file(a.output, w);
        return 0;
    }
    if (a.format == "json")
        emit(window_json(w));
    else
        write_window(std::cout, w);
    return 0;
}

struct PushforwardArgs {
    std::string file;  // optional sequence file, registered as set "J"
    std::string system;
    std::string set;
    Index point = 0;
    std::string word;
    std::string window;
    std::string format = "text";
};

int run_pushforward(const PushforwardArgs& a) {
    if (a.word.empty()) throw UsageError("--word is required");
    const Index N = a.window.empty() ? 1000 : parse_radius_arg(a.window, "pushforward");
    ShiftOrbitSystem sys;
    std::string set = a.set;
    if (!a.system.empty()) {
        if (!a.file.empty()) throw UsageError("give either a sequence file or --system, not both");
        if (set.empty()) throw UsageError("--system requires --set");
        sys = load_zshift_system(a.system);
    } else if (!a.file.empty()) {
        sys.register_set("J", from_window(load_window(a.file)));
        set = "J";
    } else {
        throw UsageError("a sequence file or --system is required");
    }
    const FrequencyEstimate e = pushforward_cylinder(sys, a.point, set, Word(a.word), N);
    if (a.format == "json")
        emit(freq_json(e));
    else
        std::cout << freq_text(e) << "\n";
    return 0;
}

struct CompactArgs {
    std::string file;
    std::string system;
    std::vector<std::string> sets;
    Index point = 0;
    double epsilon = 0.2;
    Index maxN = 64;
    std::string window;
    std::string format = "text";
};

int run_compact(const CompactArgs& a) {
    const Index N = a.window.empty() ? 1000 : parse_radius_arg(a.window, "compact");
    ShiftOrbitSystem sys;
    std::vector<std::string> sets = a.sets;
    if (!a.system.empty()) {
        if (!a.file.empty()) throw UsageError("give either a sequence file or --system, not both");
        sys = load_zshift_system(a.system);
    } else if (!a.file.empty()) {
        sys.register_set("J", from_window(load_window(a.file)));
        if (sets.empty()) sets = {"J"};
    } else {
        throw UsageError("a sequence file or --system is required");
    }
    if (sets.empty())
        for (const auto& [name, src] : sys.sets()) sets.push_back(name);
    const CompactnessReport rep = compact_check(sys, a.point, sets, a.epsilon, a.maxN, N);
    if (a.format == "json") {
        jout per = jout::array();
        for (const auto& r : rep.perSet)
            per.push_back(jout{{"name", r.name}, {"bestN", r.bestN}, {"symdiff", round6(r.symdiff)}});
        emit(jout{{"epsilon", round6(rep.epsilon)},
                  {"maxN", rep.maxN},
                  {"perSet", per},
                  {"verdict", rep.verdict}});
    } else {
        std::cout << "verdict=" << (rep.verdict ? "true" : "false") << "\n"
                  << "epsilon=" << format_fixed6(rep.epsilon) << " maxN=" << rep.maxN << "\n";
        for (const auto& r : rep.perSet)
            std::cout << "set=" << r.name << " bestN=" << r.bestN
                      << " symdiff=" << format_fixed6(r.symdiff) << "\n";
    }
    return rep.verdict ? 0 : 1;
}

int run_sw_closed(const std::string& path, std::size_t budget, const std::string& format) {
    const std::vector<BitWindow> windows = load_windows(path);
    const SwClosedReport rep = [&] {
        try {
            return sw_closed_check(windows, budget);
        } catch (const std::exception& e) {
            throw UsageError(path + ": " + e.what());
        }
    }();
    const char* verdict = rep.verdict == SwClosedReport::Verdict::Closed ? "closed"
                          : rep.verdict == SwClosedReport::Verdict::Counterexample
                              ? "counterexample"
                              : "budget_exhausted";
    if (format == "json") {
        jout j{{"verdict", verdict},
               {"member", rep.member ? window_json(*rep.member) : jout(nullptr)},
               {"move", rep.move ? move_json(*rep.move) : jout(nullptr)},
               {"result", rep.result ? window_json(*rep.result) : jout(nullptr)},
               {"edge_artifact", rep.edge_artifact},
               {"checked", rep.checked}};
        emit(j);
    } else {
        std::cout << "verdict=" << verdict << "\n"
                  << "edge_artifact=" << (rep.edge_artifact ? "true" : "false") << "\n"
                  << "checked=" << rep.checked << "\n";
        if (rep.member) std::cout << "member " << window_text(*rep.member) << "\n";
        if (rep.move) std::cout << "move=" << move_text(*rep.move) << "\n";
        if (rep.result) std::cout << "result " << window_text(*rep.result) << "\n";
    }
    return rep.verdict == SwClosedReport::Verdict::Closed ? 0 : 1;
}

struct ClosureArgs {
    std::string file;   // the ambient sequence J
    std::string point;  // the window x whose membership is tested
    Index resolution = 8;
    Index scan = 0;
    std::string format = "text";
};

int run_closure(const ClosureArgs& a) {
    if (a.resolution < 0) throw UsageError("--resolution must be >= 0");
    const BitWindow jw = load_window(a.file);
    const BitWindow xw = load_window(a.point);
    if (!xw.covers(-a.resolution, a.resolution))
        throw UsageError(a.point + ": window must cover " +
                         span_str(-a.resolution, a.resolution) + " at this --resolution");
    const Index scan = a.scan > 0 ? a.scan : std::min(-jw.lo(), jw.hi());
    if (!jw.covers(-scan, scan))
        throw UsageError(a.file + ": window must cover " + span_str(-scan, scan) +
                         " at this --scan");
    const bool contains = closure_contains(from_window(jw), xw, a.resolution, scan);
    if (a.format == "json")
        emit(jout{{"contains", contains}});
    else
        std::cout << "contains=" << (contains ? "true" : "false") << "\n";
    return contains ? 0 : 1;
}

struct DetectArgs {
    std::string input;
    std::string property;
    int n = -1;
    int k = 3;
    int ipSize = 2;
    int sopLen = 3;
    std::size_t budget = 100000;
    std::string set;
    std::string points = "-20:20";
    std::string window;
    std::string format = "text";
};

int detect_ip(const DetectArgs& a) {
    const RelationMatrix m = load_matrix(a.input);
    const int n = a.n < 0 ? 2 : a.n;
    const auto w = ip_witness(m, n);
    if (a.format == "json")
        emit(w ? ip_json(*w) : jout(nullptr));
    else if (w)
        std::cout << "rowSet=" << join_ints(w->rowSet) << "\n"
                  << "selectors=" << join_ints(w->selectors) << "\n";
    else
        std::cout << "witness=none\n";
    return w ? 0 : 1;
}

int detect_op(const DetectArgs& a) {
    const RelationMatrix m = load_matrix(a.input);
    const int n = a.n < 0 ? 3 : a.n;
    const auto w = op_witness(m, n);
    if (a.format == "json")
        emit(w ? op_json(*w) : jout(nullptr));
    else if (w)
        std::cout << "rowSeq=" << join_ints(w->rowSeq) << "\n"
                  << "colSeq=" << join_ints(w->colSeq) << "\n";
    else
        std::cout << "witness=none\n";
    return w ? 0 : 1;
}

int detect_sop(const DetectArgs& a) {
    const RelationMatrix m = load_matrix(a.input);
    const auto w = sop_witness(m, a.k);
    if (a.format == "json")
        emit(w ? sop_json(*w) : jout(nullptr));
    else if (w)
        std::cout << "colSeq=" << join_ints(w->colSeq) << "\n";
    else
        std::cout << "witness=none\n";
    return w ? 0 : 1;
}

int detect_shelah(const DetectArgs& a) {
    const RelationMatrix m = load_matrix(a.input);
    // Largest staircase the exhaustive search can certify, longest first.
    std::optional<OPWitness> stair;
    const int cap = std::min({m.rows(), m.cols(), 5});
    for (int n = cap; n >= 2 && !stair; --n) stair = op_witness(m, n);
    if (!stair) {
        if (a.format == "json")
            emit(jout(nullptr));
        else
            std::cout << "witness=none (no staircase of length >= 2)\n";
        return 1;
    }
    const auto res = shelah_decompose(m, *stair, a.ipSize, a.sopLen);
    if (a.format == "json") {
        if (!res) {
            emit(jout(nullptr));
        } else {
            emit(jout{{"branch", res->branch == ShelahResult::Branch::IP ? "IP" : "SOP"},
                      {"ip", res->ip ? ip_json(*res->ip) : jout(nullptr)},
                      {"sop", res->sop ? sop_json(*res->sop) : jout(nullptr)}});
        }
    } else if (res) {
        std::cout << "branch=" << (res->branch == ShelahResult::Branch::IP ? "IP" : "SOP") << "\n";
        if (res->ip)
            std::cout << "rowSet=" << join_ints(res->ip->rowSet) << "\n"
                      << "selectors=" << join_ints(res->ip->selectors) << "\n";
        if (res->sop) std::cout << "colSeq=" << join_ints(res->sop->colSeq) << "\n";
    } else {
        std::cout << "witness=none\n";
    }
    return res ? 0 : 1;
}

int detect_sopimage(const DetectArgs& a) {
    if (a.set.empty()) throw UsageError("--property sopimage requires --set");
    const ShiftOrbitSystem sys = load_zshift_system(a.input);
    const Span pts = parse_window_arg(a.points);
    std::vector<Index> points;
    for (Index p = pts.lo; p <= pts.hi; ++p) points.push_back(p);
    const Index N = a.window.empty() ? 50 : parse_radius_arg(a.window, "sopimage");
    const SopImageReport rep = sop_image_check(sys, a.set, points, N);
    if (a.format == "json") {
        jout violation(nullptr);
        if (rep.violation) violation = jout::array({rep.violation->first, rep.violation->second});
        emit(jout{{"containment", rep.containment},
                  {"strictness", rep.strictness},
                  {"shadow", rep.shadow},
                  {"violation", violation}});
    } else {
        std::cout << "containment=" << (rep.containment ? "true" : "false") << "\n"
                  << "strictness=" << (rep.strictness ? "true" : "false") << "\n"
                  << "shadow=" << (rep.shadow ? "true" : "false") << "\n";
        if (rep.violation)
            std::cout << "violation=" << rep.violation->first << "," << rep.violation->second
                      << "\n";
        else
            std::cout << "violation=none\n";
    }
    return rep.shadow ? 0 : 1;
}

int run_detect(const DetectArgs& a) {
    try {
        if (a.property == "ip") return detect_ip(a);
        if (a.property == "op") return detect_op(a);
        if (a.property == "sop") return detect_sop(a);
        if (a.property == "shelah") return detect_shelah(a);
        if (a.property == "swcheck") return run_sw_closed(a.input, a.budget, a.format);
        if (a.property == "sopimage") return detect_sopimage(a);
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        // size-cap refusals and malformed shapes are usage errors
        throw UsageError(e.what());
    }
    throw UsageError("unknown --property: " + a.property);
}

struct SeparationArgs {
    std::string system;
    std::vector<std::string> sets;
    Index point = 0;
    std::string window;
    std::vector<double> epsilons = {0.1, 0.2, 0.45};
    std::string format = "text";
};

int run_separation(const SeparationArgs& a) {
    const ShiftOrbitSystem sys = load_zshift_system(a.system);
    std::vector<std::string> sets = a.sets;
    if (sets.empty())
        for (const auto& [name, src] : sys.sets()) sets.push_back(name);
    const Index N = a.window.empty() ? 1000 : parse_radius_arg(a.window, "separation");
    const SeparationReport rep = separation_report(sets, sys, a.point, N, a.epsilons);
    if (a.format == "json") {
        jout dist = jout::array();
        for (const auto& row : rep.pairwiseDistances) {
            jout r = jout::array();
            for (double v : row) r.push_back(round6(v));
            dist.push_back(r);
        }
        jout nets = jout::array();
        for (const auto& [eps, size] : rep.netSizeAt)
            nets.push_back(jout::array({round6(eps), size}));
        emit(jout{{"pairwiseDistances", dist},
                  {"boundedAwayAt",
                   rep.boundedAwayAt ? jout(round6(*rep.boundedAwayAt)) : jout(nullptr)},
                  {"netSizeAt", nets}});
    } else {
        std::cout << "boundedAwayAt="
                  << (rep.boundedAwayAt ? format_fixed6(*rep.boundedAwayAt) : "none") << "\n";
        for (const auto& [eps, size] : rep.netSizeAt)
            std::cout << "net epsilon=" << format_fixed6(eps) << " size=" << size << "\n";
        for (std::size_t i = 0; i < rep.pairwiseDistances.size(); ++i) {
            std::cout << "pairwise[" << sets[i] << "]=";
            const auto& row = rep.pairwiseDistances[i];
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) std::cout << ",";
                std::cout << format_fixed6(row[j]);
            }
            std::cout << "\n";
        }
    }
    return 0;
}

struct RhoArgs {
    std::string system;
    std::vector<std::string> inputs;  // "point:SET" entries
    bool anchors = false;
    Index l = 4;
    std::string window;
    std::string format = "text";
};

int run_rho(const RhoArgs& a) {
    const ShiftOrbitSystem sys = load_zshift_system(a.system);
    std::vector<RhoInput> inputs;
    for (const std::string& item : a.inputs) {
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw UsageError("--input entries look like point:SET, got \"" + item + "\"");
        inputs.push_back({&sys, parse_index(item.substr(0, colon), "--input point"),
                          item.substr(colon + 1)});
    }
    if (a.anchors)
        for (const auto& [name, label] : sys.anchors())
            inputs.push_back({&sys, label, "U_" + std::to_string(label)});
    if (inputs.empty()) throw UsageError("rho needs --input point:SET entries or --anchors");
    const Index N = a.window.empty() ? 1000 : parse_radius_arg(a.window, "rho");
    const RhoLanguage lang = rho_language(inputs, a.l, N);
    if (a.format == "json") {
        jout words = jout::array();
        for (const Word& w : lang.words) words.push_back(w.str());
        emit(jout{{"words", words}, {"denseProxy", lang.denseProxy}});
    } else {
        std::cout << "denseProxy=" << (lang.denseProxy ? "true" : "false") << "\n"
                  << "count=" << lang.words.size() << "\n";
        for (const Word& w : lang.words) std::cout << "word=" << w.str() << "\n";
    }
    return 0;
}

void add_format_flag(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic sequence toolkit: generators, densities, entropy, orbit checks, "
                 "and combinatorial pattern detectors"};
    app.require_subcommand(1);
    int rc = 0;

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a sequence window");
    add_source_flags(gen, gen_args.sf);
    gen->add_option("--window", gen_args.window, "window radius R or span a:b (default 1000)");
    gen->add_option("-o,--output", gen_args.output, "output file (default: stdout)");
    add_format_flag(gen, gen_args.format);
    gen->callback([&] { rc = run_gen(gen_args); });

    SeqVerbArgs density_args;
    auto* density = app.add_subcommand("density", "density of 1s over a window");
    density->add_option("file", density_args.file, "sequence file");
    add_source_flags(density, density_args.sf);
    density->add_option("--window", density_args.window, "window radius R or span a:b");
    add_format_flag(density, density_args.format);
    density->callback([&] { rc = run_density(density_args); });

    OccurArgs occur_args;
    auto* occur = app.add_subcommand("occur", "occurrence positions and density of a word");
    occur->add_option("file", occur_args.seq.file, "sequence file");
    add_source_flags(occur, occur_args.seq.sf, /*include_word=*/false);
    occur->add_option("--word", occur_args.word, "pattern over {0,1}")->required();
    occur->add_option("--window", occur_args.seq.window, "window radius R or span a:b");
    add_format_flag(occur, occur_args.seq.format);
    occur->callback([&] { rc = run_occur(occur_args); });

    WideArgs wide_args;
    auto* wide = app.add_subcommand("wide", "check that every shift drops the density by epsilon");
    wide->add_option("file", wide_args.file, "sequence file");
    add_source_flags(wide, wide_args.sf);
    wide->add_option("--epsilon", wide_args.epsilon, "required density drop (default 0.25)");
    wide->add_option("--max-shift", wide_args.maxShift, "largest |shift| probed (default 64)");
    wide->add_option("--tolerance", wide_args.tolerance,
                     "verdict slack (default: SHIFTLAB_TOLERANCE or 6/sqrt(N))")
        ->check(CLI::PositiveNumber);
    wide->add_option("--window", wide_args.window, "window radius R");
    add_format_flag(wide, wide_args.format);
    wide->callback([&] {
        wide_args.tolerance_set = wide->count("--tolerance") > 0;
        rc = run_wide(wide_args);
    });

    EntropyArgs entropy_args;
    auto* entropy = app.add_subcommand("entropy", "empirical block entropy and rate");
    entropy->add_option("file", entropy_args.file, "sequence file");
    add_source_flags(entropy, entropy_args.sf);
    entropy->add_option("--block", entropy_args.block, "block length n")->required();
    entropy->add_option("--window", entropy_args.window, "window radius R or span a:b");
    entropy->add_option("--system", entropy_args.system, "finite permutation system JSON file");
    entropy->add_option("--partition", entropy_args.partition, "partition cell names")
        ->delimiter(',');
    add_format_flag(entropy, entropy_args.format);
    entropy->callback([&] { rc = run_entropy(entropy_args); });

    XiArgs xi_args;
    auto* xic = app.add_subcommand("xi", "symbolic image of a point through a named set");
    xic->add_option("--system", xi_args.system, "zshift system JSON file")->required();
    xic->add_option("--point", xi_args.point, "orbit point (default 0)");
    xic->add_option("--set", xi_args.set, "set name")->required();
    xic->add_option("--window", xi_args.window, "window radius R (default 1000)");
    xic->add_option("-o,--output", xi_args.output, "output file (default: stdout)");
    add_format_flag(xic, xi_args.format);
    xic->callback([&] { rc = run_xi(xi_args); });

    PushforwardArgs push_args;
    auto* push = app.add_subcommand("pushforward",
                                    "cylinder density in the symbolic image of a point");
    push->add_option("file", push_args.file, "sequence file (registered as set J)");
    push->add_option("--system", push_args.system, "zshift system JSON file");
    push->add_option("--set", push_args.set, "set name (with --system)");
    push->add_option("--point", push_args.point, "orbit point (default 0)");
    push->add_option("--word", push_args.word, "cylinder word over {0,1}")->required();
    push->add_option("--window", push_args.window, "window radius R (default 1000)");
    add_format_flag(push, push_args.format);
    push->callback([&] { rc = run_pushforward(push_args); });

    CompactArgs compact_args;
    auto* compact = app.add_subcommand("compact",
                                       "almost-periodicity probe over shifted set differences");
    compact->add_option("file", compact_args.file, "sequence file (registered as set J)");
    compact->add_option("--system", compact_args.system, "zshift system JSON file");
    compact->add_option("--sets", compact_args.sets, "set names (default: all)")->delimiter(',');
    compact->add_option("--point", compact_args.point, "orbit point (default 0)");
    compact->add_option("--epsilon", compact_args.epsilon, "return threshold (default 0.2)");
    compact->add_option("--max-n", compact_args.maxN, "largest return time probed (default 64)");
    compact->add_option("--window", compact_args.window, "window radius R (default 1000)");
    add_format_flag(compact, compact_args.format);
    compact->callback([&] { rc = run_compact(compact_args); });

    std::string swclose_file;
    std::size_t swclose_budget = 100000;
    std::string swclose_format = "text";
    auto* swclose = app.add_subcommand("swclose",
                                       "check a window family for switch/shift closure");
    swclose->add_option("file", swclose_file, "multi-window sequence file")->required();
    swclose->add_option("--budget", swclose_budget, "membership-test budget (default 100000)");
    add_format_flag(swclose, swclose_format);
    swclose->callback([&] { rc = run_sw_closed(swclose_file, swclose_budget, swclose_format); });

    ClosureArgs closure_args;
    auto* closure = app.add_subcommand(
        "closure", "test whether a window lies in a sequence's orbit closure");
    closure->add_option("file", closure_args.file, "ambient sequence file")->required();
    closure->add_option("point", closure_args.point, "window file to locate")->required();
    closure->add_option("--resolution", closure_args.resolution,
                        "central agreement radius (default 8)");
    closure->add_option("--scan", closure_args.scan, "ambient scan radius (default: file span)");
    add_format_flag(closure, closure_args.format);
    closure->callback([&] { rc = run_closure(closure_args); });

    DetectArgs detect_args;
    auto* detect = app.add_subcommand("detect", "pattern detectors over matrices and windows");
    detect->add_option("input", detect_args.input, "matrix, windows, or system file")->required();
    detect->add_option("--property", detect_args.property, "what to look for")
        ->required()
        ->check(CLI::IsMember({"ip", "op", "sop", "shelah", "swcheck", "sopimage"}));
    detect->add_option("--n", detect_args.n, "witness size (ip default 2, op default 3)");
    detect->add_option("--k", detect_args.k, "chain length for sop (default 3)");
    detect->add_option("--ip-size", detect_args.ipSize, "shelah: shattering size (default 2)");
    detect->add_option("--sop-len", detect_args.sopLen, "shelah: chain length (default 3)");
    detect->add_option("--budget", detect_args.budget,
                       "swcheck: membership-test budget (default 100000)");
    detect->add_option("--set", detect_args.set, "sopimage: set name");
    detect->add_option("--points", detect_args.points,
                       "sopimage: point range a:b (default -20:20)");
    detect->add_option("--window", detect_args.window, "sopimage: window radius (default 50)");
    add_format_flag(detect, detect_args.format);
    detect->callback([&] { rc = run_detect(detect_args); });

    SeparationArgs sep_args;
    auto* separation = app.add_subcommand(
        "separation", "pairwise measure-algebra distances and greedy nets for a set family");
    separation->add_option("--system", sep_args.system, "zshift system JSON file")->required();
    separation->add_option("--sets", sep_args.sets, "set names (default: all)")->delimiter(',');
    separation->add_option("--point", sep_args.point, "orbit point (default 0)");
    separation->add_option("--window", sep_args.window, "window radius R (default 1000)");
    separation->add_option("--epsilons", sep_args.epsilons,
                           "thresholds (default 0.1,0.2,0.45)")
        ->delimiter(',');
    add_format_flag(separation, sep_args.format);
    separation->callback([&] { rc = run_separation(sep_args); });

    RhoArgs rho_args;
    auto* rho = app.add_subcommand("rho", "union of block languages over symbolic images");
    rho->add_option("--system", rho_args.system, "zshift system JSON file")->required();
    rho->add_option("--input", rho_args.inputs, "point:SET entry (repeatable)");
    rho->add_flag("--anchors", rho_args.anchors, "add (a, U_a) for every registered anchor a");
    rho->add_option("--l", rho_args.l, "block length (default 4)");
    rho->add_option("--window", rho_args.window, "window radius R (default 1000)");
    add_format_flag(rho, rho_args.format);
    rho->callback([&] { rc = run_rho(rho_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
