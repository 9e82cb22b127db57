#ifndef NANOFET_XYZ_HPP
#define NANOFET_XYZ_HPP

#include <string>
#include <string_view>

#include "nanofet/structure.hpp"

namespace nanofet {

/// Standard XYZ text: atom count, comment line, then "El x y z" records.
/// Coordinates on disk are Angstroms with exactly six decimals (nm * 10);
/// in memory everything stays nm. Atom order is preserved. Output is
/// byte-deterministic.
std::string write_xyz(const MolecularStructure& s, std::string_view comment = "");

/// Inverse of write_xyz on its image. Throws ParseError (message carries
/// the 1-based line number) on malformed counts, unknown element symbols,
/// non-numeric coordinates, or truncated record sections.
MolecularStructure read_xyz(std::string_view text);

} // namespace nanofet

#endif
