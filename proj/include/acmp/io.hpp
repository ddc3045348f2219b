#pragma once

#include "acmp/grid.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace acmp {

/// Rows of '0'/'1' characters, first row at j = 0. A single row gives a 1-d mask.
Mask read_mask(std::istream& in);
Mask read_mask_file(const std::string& path);

/**
 * Field dump, one row per in-set node:
 *   i[,j],x[,y],u0,...,u{m-1}
 * Doubles are written in shortest round-trip form.
 */
void write_field_csv(const VectorField& field, std::ostream& out);
void write_field_csv_file(const VectorField& field, const std::string& path);

/**
 * Rebuilds a field (and its masked domain) from a dump written by
 * write_field_csv. The spacing is inferred from the coordinates unless `h`
 * is given; single-node-wide dumps need it.
 */
VectorField read_field_csv(std::istream& in, std::optional<double> h = std::nullopt);
VectorField read_field_csv_file(const std::string& path, std::optional<double> h = std::nullopt);

/// iteration,energy
void write_history_csv(const std::vector<double>& history, std::ostream& out);

} // namespace acmp
