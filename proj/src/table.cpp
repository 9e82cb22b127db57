#include "nanofet/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "nanofet/errors.hpp"

namespace nanofet {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        pos = nl + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return fields;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double parse_field(std::string_view field, std::size_t row_idx, std::size_t col_idx) {
    const std::string_view token = trim(field);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("row " + std::to_string(row_idx) + ", column " + std::to_string(col_idx + 1) +
                         ": '" + std::string(token) + "' is not a number");
    return value;
}

void append_g12(std::string& out, double value) {
    char buf[64];
    const int len = std::snprintf(buf, sizeof buf, "%.12g", value);
    out.append(buf, static_cast<std::size_t>(len));
}

} // namespace

TableDocument read_table(std::string_view text, const std::vector<std::string>* expected_header) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError("empty table: no header row");

    TableDocument doc;
    for (std::string_view field : split_commas(lines[0]))
        doc.header.emplace_back(trim(field));

    if (expected_header && doc.header != *expected_header) {
        std::string want;
        for (const auto& h : *expected_header) {
            if (!want.empty()) want += ',';
            want += h;
        }
        throw HeaderMismatch("expected header '" + want + "', got '" + std::string(lines[0]) + "'");
    }

    for (std::size_t r = 1; r < lines.size(); ++r) {
        if (trim(lines[r]).empty()) continue;
        const auto fields = split_commas(lines[r]);
        if (fields.size() != doc.header.size())
            throw ParseError("row " + std::to_string(r) + ": expected " +
                             std::to_string(doc.header.size()) + " fields, got " +
                             std::to_string(fields.size()));
        std::vector<double> row;
        row.reserve(fields.size());
        for (std::size_t c = 0; c < fields.size(); ++c)
            row.push_back(parse_field(fields[c], r, c));
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

std::string write_table(const TableDocument& doc) {
    std::string out;
    for (std::size_t c = 0; c < doc.header.size(); ++c) {
        if (c) out += ',';
        out += doc.header[c];
    }
    out += '\n';
    for (const auto& row : doc.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            append_g12(out, row[c]);
        }
        out += '\n';
    }
    return out;
}

LabeledTable read_labeled_table(std::string_view text,
                                const std::vector<std::string>* expected_header) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError("empty table: no header row");

    LabeledTable doc;
    for (std::string_view field : split_commas(lines[0]))
        doc.header.emplace_back(trim(field));
    if (expected_header && doc.header != *expected_header)
        throw HeaderMismatch("unexpected header '" + std::string(lines[0]) + "'");

    for (std::size_t r = 1; r < lines.size(); ++r) {
        if (trim(lines[r]).empty()) continue;
        const auto fields = split_commas(lines[r]);
        if (fields.size() != doc.header.size())
            throw ParseError("row " + std::to_string(r) + ": expected " +
                             std::to_string(doc.header.size()) + " fields, got " +
                             std::to_string(fields.size()));
        std::vector<double> values;
        for (std::size_t c = 1; c < fields.size(); ++c)
            values.push_back(parse_field(fields[c], r, c));
        doc.rows.emplace_back(std::string(trim(fields[0])), std::move(values));
    }
    return doc;
}

GapSeries gap_series_from_csv(std::string_view text, std::string label) {
    static const std::vector<std::string> header{"repeat_units", "gap_eV"};
    const TableDocument doc = read_table(text, &header);
    GapSeries series;
    series.label = std::move(label);
    for (const auto& row : doc.rows)
        series.observations.emplace_back(static_cast<int>(std::llround(row[0])), row[1]);
    return series;
}

std::vector<InteractionRow> interaction_rows_from_csv(std::string_view text) {
    static const std::vector<std::string> header{"units", "e_uncorrected", "e_dispersion"};
    const TableDocument doc = read_table(text, &header);
    std::vector<InteractionRow> rows;
    rows.reserve(doc.rows.size());
    for (const auto& row : doc.rows)
        rows.push_back({static_cast<int>(std::llround(row[0])), row[1], row[2]});
    return rows;
}

OrbitalSpectrum spectrum_from_csv(std::string_view text, std::string method_label) {
    OrbitalSpectrum spectrum;
    spectrum.method_label = std::move(method_label);
    spectrum.occupied_count = -1;

    std::string body;
    for (std::string_view line : split_lines(text)) {
        const std::string_view t = trim(line);
        if (!t.empty() && t.front() == '#') {
            const std::size_t eq = t.find('=');
            if (eq != std::string_view::npos &&
                trim(t.substr(1, eq - 1)) == "occupied_count") {
                const std::string_view v = trim(t.substr(eq + 1));
                int n = 0;
                const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
                if (ec != std::errc{} || ptr != v.data() + v.size())
                    throw ParseError("occupied_count directive: '" + std::string(v) +
                                     "' is not an integer");
                spectrum.occupied_count = n;
            }
            continue;
        }
        body += line;
        body += '\n';
    }
    if (spectrum.occupied_count < 0)
        throw ParseError("spectrum is missing the '# occupied_count = N' directive");

    static const std::vector<std::string> header{"energy_eV"};
    const TableDocument doc = read_table(body, &header);
    for (const auto& row : doc.rows) spectrum.energies_ev.push_back(row[0]);
    validate(spectrum);
    return spectrum;
}

std::string spectrum_to_csv(const OrbitalSpectrum& s) {
    std::string out = "# occupied_count = " + std::to_string(s.occupied_count) + "\nenergy_eV\n";
    for (double e : s.energies_ev) {
        append_g12(out, e);
        out += '\n';
    }
    return out;
}

std::string dos_to_csv(const std::vector<std::pair<double, double>>& curve) {
    std::string out = "energy_eV,dos\n";
    for (const auto& [e, d] : curve) {
        append_g12(out, e);
        out += ',';
        append_g12(out, d);
        out += '\n';
    }
    return out;
}

} // namespace nanofet
