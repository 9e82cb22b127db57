#ifndef NANOFET_REPRO_HPP
#define NANOFET_REPRO_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace nanofet {

/// One recomputed quantity compared against its published value.
struct ReproRow {
    std::string module;    // geometry | electronic | energetics | performance | io
    std::string quantity;
    std::string unit;
    double reference = 0.0;
    double computed = 0.0;
    double tolerance = 0.0;
    bool absolute_tolerance = false;  // else relative to the reference
    bool pass = false;
    std::string note;
};

struct ReproReport {
    std::vector<ReproRow> rows;
    std::vector<std::string> warnings;  // checksum mismatches and the like
    bool all_pass = false;
};

/// Recomputes every reproducible headline number of the reference design
/// from the bundled data files. `strict_ln` switches the capacitance row
/// from the published rounded ln(b/a) = 1.29 to the exact logarithm.
/// Throws MissingData when a required reference file is absent.
ReproReport run_paper_repro(const std::filesystem::path& data_dir, bool strict_ln = false);

/// Aligned text table, one line per row plus a footer.
std::string format_report(const ReproReport& report);

/// Resolution order: explicit path if non-empty, NANOFET_DATA_DIR, ./data.
std::filesystem::path resolve_data_dir(const std::string& explicit_dir);

} // namespace nanofet

#endif
