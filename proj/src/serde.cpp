#include "shiftlab/serde.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace shiftlab {

using nlohmann::json;

ParseError::ParseError(int line_, const std::string& what_)
    : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}

namespace {

struct LineReader {
    explicit LineReader(std::istream& in) : in_(in) {}
    bool next(std::string& out) {
        if (!std::getline(in_, out)) return false;
        if (!out.empty() && out.back() == '\r') out.pop_back();
        ++line;
        return true;
    }
    std::istream& in_;
    int line = 0;
};

std::optional<Index> parse_origin_header(const std::string& line, int lineno) {
    if (line.rfind("# origin=", 0) != 0) return std::nullopt;
    const std::string value = line.substr(9);
    std::size_t used = 0;
    Index origin = 0;
    try {
        origin = std::stoll(value, &used);
    } catch (const std::exception&) {
        throw ParseError(lineno, "malformed origin header");
    }
    if (used != value.size()) throw ParseError(lineno, "malformed origin header");
    return origin;
}

std::optional<BitWindow> try_read_window(LineReader& reader) {
    Index origin = 0;
    std::string line;
    while (reader.next(line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (auto o = parse_origin_header(line, reader.line)) origin = *o;
            continue;
        }
        std::vector<Bit> bits;
        bits.reserve(line.size());
        for (char ch : line) {
            if (ch != '0' && ch != '1')
                throw ParseError(reader.line, "sequence lines may contain only 0 and 1");
            bits.push_back(static_cast<Bit>(ch - '0'));
        }
        return BitWindow(origin, std::move(bits));
    }
    return std::nullopt;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
}

}  // namespace

BitWindow read_window(std::istream& in) {
    LineReader reader(in);
    auto w = try_read_window(reader);
    if (!w) throw ParseError(reader.line, "no sequence data found");
    return *w;
}

BitWindow read_window_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_window(in);
}

void write_window(std::ostream& out, const BitWindow& w) {
    out << "# origin=" << w.lo() << "\n" << w.str() << "\n";
}

void write_window_file(const std::string& path, const BitWindow& w) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    write_window(out, w);
}

std::vector<BitWindow> read_windows(std::istream& in) {
    LineReader reader(in);
    std::vector<BitWindow> out;
    while (auto w = try_read_window(reader)) out.push_back(std::move(*w));
    if (out.empty()) throw ParseError(reader.line, "no sequence data found");
    return out;
}

std::vector<BitWindow> read_windows_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_windows(in);
}

RelationMatrix read_matrix(std::istream& in) {
    LineReader reader(in);
    std::string line;
    // header: "r c", skipping blank/comment lines
    int r = 0, c = 0;
    for (;;) {
        if (!reader.next(line)) throw ParseError(reader.line, "missing matrix header");
        if (line.empty() || line[0] == '#') continue;
        std::istringstream head(line);
        std::string extra;
        if (!(head >> r >> c) || (head >> extra))
            throw ParseError(reader.line, "matrix header must be two integers: rows cols");
        if (r < 1 || c < 1) throw ParseError(reader.line, "matrix shape must be positive");
        break;
    }
    std::vector<Bit> data;
    data.reserve(static_cast<std::size_t>(r) * static_cast<std::size_t>(c));
    int rows_read = 0;
    while (rows_read < r) {
        if (!reader.next(line)) throw ParseError(reader.line, "matrix has too few rows");
        if (line.empty() || line[0] == '#') continue;
        if (static_cast<int>(line.size()) != c)
            throw ParseError(reader.line, "matrix row has wrong length");
        for (char ch : line) {
            if (ch != '0' && ch != '1')
                throw ParseError(reader.line, "matrix entries must be 0 or 1");
            data.push_back(static_cast<Bit>(ch - '0'));
        }
        ++rows_read;
    }
    return RelationMatrix(r, c, std::move(data));
}

RelationMatrix read_matrix_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const RelationMatrix& m) {
    out << m.rows() << " " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) out << static_cast<char>('0' + m.at(i, j));
        out << "\n";
    }
}

namespace {

Source source_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw std::invalid_argument("source spec must be an object with a string \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "champernowne") return gen_champernowne();
        if (kind == "pnormal") {
            const double p = j.at("p").get<double>();
            const std::uint64_t seed = j.value("seed", std::uint64_t{1});
            return gen_pnormal(p, seed);
        }
        if (kind == "sturmian") {
            const double alpha = j.at("alpha").get<double>();
            const double rho = j.value("rho", 0.0);
            return gen_sturmian(alpha, rho);
        }
        if (kind == "periodic") return gen_periodic(Word(j.at("word").get<std::string>()));
        if (kind == "step") {
            const std::string polarity = j.at("polarity").get<std::string>();
            if (polarity == "10") return gen_step(StepPolarity::OneZero);
            if (polarity == "01") return gen_step(StepPolarity::ZeroOne);
            throw std::invalid_argument("polarity must be \"10\" or \"01\"");
        }
        if (kind == "constant") {
            const int bit = j.at("bit").get<int>();
            if (bit != 0 && bit != 1) throw std::invalid_argument("\"bit\" must be 0 or 1");
            return gen_constant(static_cast<Bit>(bit));
        }
        if (kind == "cayley") {
            // Neighbor-set predicate: member x iff x != anchor and
            // rule(|x - anchor|) = 1. The rule is itself a source spec.
            Source rule = source_from_json(j.at("rule"));
            const Index anchor = j.at("anchor").get<Index>();
            return make_predicate_source([rule, anchor](Index x) -> Bit {
                return x != anchor && rule(x > anchor ? x - anchor : anchor - x) == 1;
            });
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument("bad source spec for kind \"" + kind + "\": " + e.what());
    }
    throw std::invalid_argument("unknown source kind: " + kind);
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

Source parse_source_spec(const std::string& text) { return source_from_json(parse_json_text(text)); }

Source read_source_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_source_spec(buf.str());
}

ShiftOrbitSystem parse_zshift_system(const std::string& text) {
    const json j = parse_json_text(text);
    if (j.value("kind", "") != "zshift")
        throw std::invalid_argument("system kind must be \"zshift\"");
    ShiftOrbitSystem sys;
    if (j.contains("sets")) {
        if (!j.at("sets").is_object()) throw std::invalid_argument("\"sets\" must be an object");
        for (const auto& [name, spec] : j.at("sets").items())
            sys.register_set(name, source_from_json(spec));
    }
    if (j.contains("anchors")) {
        if (!j.at("anchors").is_object())
            throw std::invalid_argument("\"anchors\" must be an object");
        for (const auto& [name, label] : j.at("anchors").items()) {
            if (!label.is_number_integer())
                throw std::invalid_argument("anchor \"" + name + "\" must be an integer");
            sys.register_anchor(name, label.get<Index>());
        }
    }
    return sys;
}

FinitePermSystem parse_finite_system(const std::string& text) {
    const json j = parse_json_text(text);
    if (j.value("kind", "") != "finite")
        throw std::invalid_argument("system kind must be \"finite\"");
    try {
        auto perm = j.at("perm").get<std::vector<int>>();
        auto weights = j.at("weights").get<std::vector<double>>();
        const bool invariant = j.value("invariantWeights", true);
        FinitePermSystem sys(std::move(perm), std::move(weights), invariant);
        if (j.contains("sets")) {
            for (const auto& [name, members] : j.at("sets").items())
                sys.register_set(name, members.get<std::vector<int>>());
        }
        return sys;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad finite system spec: ") + e.what());
    }
}

std::string format_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::string(buf);
}

double round6(double v) { return std::round(v * 1e6) / 1e6; }

}  // namespace shiftlab
