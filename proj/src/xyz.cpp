#include "nanofet/xyz.hpp"

#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <sstream>
#include <vector>

#include "nanofet/errors.hpp"

namespace nanofet {

namespace {

void append_fixed6(std::string& out, double angstrom) {
    char buf[64];
    const int len = std::snprintf(buf, sizeof buf, "%.6f", angstrom);
    out.append(buf, static_cast<std::size_t>(len));
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

double parse_double(std::string_view token, int line_no, const char* what) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("line " + std::to_string(line_no) + ": " + what + " '" +
                         std::string(token) + "' is not a number");
    return value;
}

} // namespace

std::string write_xyz(const MolecularStructure& s, std::string_view comment) {
    std::string out;
    out.reserve(s.atoms.size() * 48 + 64);
    out += std::to_string(s.atoms.size());
    out += '\n';
    out += comment.empty() ? std::string_view(s.label) : comment;
    out += '\n';
    for (const auto& atom : s.atoms) {
        out += element_symbol(atom.element);
        out += ' ';
        append_fixed6(out, atom.position_nm.x * 10.0);
        out += ' ';
        append_fixed6(out, atom.position_nm.y * 10.0);
        out += ' ';
        append_fixed6(out, atom.position_nm.z * 10.0);
        out += '\n';
    }
    return out;
}

MolecularStructure read_xyz(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }

    if (lines.empty() || split_ws(lines[0]).empty())
        throw ParseError("line 1: missing atom count");
    const auto count_tokens = split_ws(lines[0]);
    long long count = -1;
    {
        const auto tok = count_tokens[0];
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), count);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || count < 0 || count_tokens.size() > 1)
            throw ParseError("line 1: malformed atom count '" + std::string(lines[0]) + "'");
    }
    if (lines.size() < 2) throw ParseError("line 2: missing comment line");

    MolecularStructure out;
    out.label = std::string(lines[1]);
    out.atoms.reserve(static_cast<std::size_t>(count));
    for (long long r = 0; r < count; ++r) {
        const int line_no = static_cast<int>(r) + 3;
        if (static_cast<std::size_t>(r) + 2 >= lines.size())
            throw ParseError("line " + std::to_string(line_no) + ": file claims " +
                             std::to_string(count) + " atoms but records end early");
        const auto tokens = split_ws(lines[static_cast<std::size_t>(r) + 2]);
        if (tokens.size() != 4)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'El x y z', got " +
                             std::to_string(tokens.size()) + " fields");
        const auto element = element_from_symbol(std::string(tokens[0]));
        if (!element)
            throw ParseError("line " + std::to_string(line_no) + ": unknown element symbol '" +
                             std::string(tokens[0]) + "'");
        const double x = parse_double(tokens[1], line_no, "x coordinate");
        const double y = parse_double(tokens[2], line_no, "y coordinate");
        const double z = parse_double(tokens[3], line_no, "z coordinate");
        out.atoms.push_back({*element, {x / 10.0, y / 10.0, z / 10.0}});
    }
    return out;
}

} // namespace nanofet
