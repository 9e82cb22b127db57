#ifndef NANOFET_TABLE_HPP
#define NANOFET_TABLE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nanofet/energetics.hpp"
#include "nanofet/fitting.hpp"

namespace nanofet {

/// Numeric CSV payload: one header row of column names, then rows of
/// doubles. Comma-delimited, '.' decimal point, no quoting.
struct TableDocument {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Parses CSV text. When `expected_header` is given, a differing header
/// throws HeaderMismatch. Row arity errors and bad numbers throw ParseError
/// with the offending row index.
TableDocument read_table(std::string_view text,
                         const std::vector<std::string>* expected_header = nullptr);

/// Deterministic CSV text, 12 significant digits per value.
std::string write_table(const TableDocument& doc);

/// CSV whose first column is a text label and the rest numeric. Carrier for
/// ingested reference records (method names, system labels).
struct LabeledTable {
    std::vector<std::string> header;
    std::vector<std::pair<std::string, std::vector<double>>> rows;
};

LabeledTable read_labeled_table(std::string_view text,
                                const std::vector<std::string>* expected_header = nullptr);

// --- typed loaders over the CSV carrier ---

/// Two columns: repeat_units, gap_eV.
GapSeries gap_series_from_csv(std::string_view text, std::string label);

/// Three columns: units, e_uncorrected, e_dispersion.
std::vector<InteractionRow> interaction_rows_from_csv(std::string_view text);

/// Spectrum format: "# occupied_count = N" directive line, then an
/// energy_eV header and one level per row.
OrbitalSpectrum spectrum_from_csv(std::string_view text, std::string method_label);
std::string spectrum_to_csv(const OrbitalSpectrum& s);

/// DoS curve as energy_eV,dos rows.
std::string dos_to_csv(const std::vector<std::pair<double, double>>& curve);

} // namespace nanofet

#endif
