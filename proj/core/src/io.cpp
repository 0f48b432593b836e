#include "packsep/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace packsep {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::vector<double> parse_values(std::string_view line, std::size_t line_no) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && is_space(line[pos])) ++pos;
        if (pos == line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && !is_space(line[end])) ++end;
        const std::string_view token = line.substr(pos, end - pos);
        double v = 0.0;
        const char* first = token.data();
        if (!token.empty() && token.front() == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError(line_no, "not a number: '" + std::string(token) + "'");
        if (!std::isfinite(v)) throw ParseError(line_no, "non-finite value: '" + std::string(token) + "'");
        values.push_back(v);
        pos = end;
    }
    return values;
}

Point point_at(const std::vector<double>& values, std::size_t offset, std::size_t dim) {
    return Point(std::vector<double>(values.begin() + static_cast<std::ptrdiff_t>(offset),
                                     values.begin() + static_cast<std::ptrdiff_t>(offset + dim)));
}

}  // namespace

SegmentSet parse_segments(std::istream& in, const ParseOptions& options) {
    std::vector<Segment> segments;
    std::size_t dim = options.format == SegmentFormat::Polyline ? options.polyline_dim : 0;
    if (options.format == SegmentFormat::Polyline && dim < 2)
        throw std::invalid_argument("polyline dimension must be at least 2");

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = 0;
        while (first < line.size() && is_space(line[first])) ++first;
        if (first == line.size() || line[first] == '#') continue;

        const std::vector<double> values = parse_values(line, line_no);
        if (options.format == SegmentFormat::Plain) {
            if (values.size() % 2 != 0) throw ParseError(line_no, "odd coordinate count");
            const std::size_t d = values.size() / 2;
            if (dim == 0) {
                if (d < 2) throw ParseError(line_no, "dimension must be at least 2");
                dim = d;
            } else if (d != dim) {
                throw ParseError(line_no, "dimension mismatch: expected " + std::to_string(dim) +
                                              " coordinates per point, got " + std::to_string(d));
            }
            Segment s{point_at(values, 0, dim), point_at(values, dim, dim)};
            if (!(length(s) > 0.0)) throw ParseError(line_no, "zero-length segment");
            segments.push_back(std::move(s));
        } else {
            if (dim == 2 && values.size() % 2 != 0) throw ParseError(line_no, "odd coordinate count");
            if (values.size() % dim != 0)
                throw ParseError(line_no, "dimension mismatch: value count is not a multiple of " + std::to_string(dim));
            const std::size_t k = values.size() / dim;
            if (k < 2) throw ParseError(line_no, "polyline needs at least two points");
            for (std::size_t i = 0; i + 1 < k; ++i) {
                Segment s{point_at(values, i * dim, dim), point_at(values, (i + 1) * dim, dim)};
                if (!(length(s) > 0.0)) throw ParseError(line_no, "zero-length segment");
                segments.push_back(std::move(s));
            }
        }
    }
    if (segments.empty()) throw ParseError(line_no, "no segments");
    return SegmentSet(std::move(segments));
}

SegmentSet parse_segments(const std::string& text, const ParseOptions& options) {
    std::istringstream in(text);
    return parse_segments(in, options);
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_segments(std::ostream& out, const SegmentSet& set) {
    for (const Segment& s : set.segments()) {
        bool first = true;
        for (const Point* p : {&s.a, &s.b}) {
            for (double v : p->coords()) {
                if (!first) out << ' ';
                out << format_double(v);
                first = false;
            }
        }
        out << '\n';
    }
}

std::string format_segments(const SegmentSet& set) {
    std::ostringstream out;
    write_segments(out, set);
    return out.str();
}

}  // namespace packsep
