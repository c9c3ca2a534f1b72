#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "shiftlab/core.hpp"
#include "shiftlab/detect.hpp"
#include "shiftlab/gen.hpp"
#include "shiftlab/system.hpp"

namespace shiftlab {

// Parse failure with 1-based line number and a short reason.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what);
    int line;
};

/*
 * Window text format:
 *   # origin=<lo>
 *   0110...
 * The single data line holds the bits left to right starting at index lo.
 * Blank lines and further '#' comment lines are ignored.
 */
BitWindow read_window(std::istream& in);
BitWindow read_window_file(const std::string& path);
void write_window(std::ostream& out, const BitWindow& w);
void write_window_file(const std::string& path, const BitWindow& w);

// A file may hold several windows back to back (each an optional origin
// header plus one bits line); used for window-set inputs.
std::vector<BitWindow> read_windows(std::istream& in);
std::vector<BitWindow> read_windows_file(const std::string& path);

/*
 * Matrix text format:
 *   r c
 *   r lines of c characters from {0,1}
 */
RelationMatrix read_matrix(std::istream& in);
RelationMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const RelationMatrix& m);

/*
 * Source description, JSON. "kind" selects the family; the other fields
 * apply per kind:
 *   champernowne : (none)
 *   pnormal      : p, seed
 *   sturmian     : alpha, rho
 *   periodic     : word
 *   step         : polarity ("10" | "01")
 *   constant     : bit (0 | 1)
 */
Source parse_source_spec(const std::string& json);
Source read_source_file(const std::string& path);

/*
 * System description, JSON. kind "zshift": {"sets": {name: source-spec},
 * "anchors": {name: int}}. kind "finite": {"perm": [..], "weights": [..],
 * "sets": {name: [indices]}}.
 */
ShiftOrbitSystem parse_zshift_system(const std::string& json);
FinitePermSystem parse_finite_system(const std::string& json);

// Round-trip helpers used by the CLI's --format json output. All densities,
// gaps, distances, and entropies are emitted with exactly six decimals so
// repeated runs diff cleanly.
std::string format_fixed6(double v);
double round6(double v);

}  // namespace shiftlab
