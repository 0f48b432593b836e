#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "packsep/packed.hpp"

namespace packsep {

enum class SegmentFormat { Plain, Polyline };

/// Malformed segment input. line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct ParseOptions {
    SegmentFormat format = SegmentFormat::Plain;
    /// Polyline lines carry k points of this dimension; plain lines carry
    /// their own dimension (half the value count).
    std::size_t polyline_dim = 2;
};

/// Reads segments. Blank lines and lines starting with '#' are skipped; the
/// dimension of the first data line is enforced on every later line.
SegmentSet parse_segments(std::istream& in, const ParseOptions& options = {});
SegmentSet parse_segments(const std::string& text, const ParseOptions& options = {});

/// Plain format, one segment per line, 17 significant digits per value.
void write_segments(std::ostream& out, const SegmentSet& set);
std::string format_segments(const SegmentSet& set);

std::string format_double(double v);

}  // namespace packsep
