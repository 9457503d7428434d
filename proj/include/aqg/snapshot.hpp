#pragma once

#include <string>

#include "aqg/field.hpp"

namespace aqg {

/// Field snapshot file: 32-byte header (magic "AQGF", version u32, n1 u32,
/// n2 u32, l1 f64, l2 f64, little-endian) followed by n1*n2 f64 physical
/// values, row-major with x2 fastest.
void write_snapshot(const std::string& path, const PhysicalField& f);
PhysicalField read_snapshot(const std::string& path);

inline constexpr unsigned snapshot_version = 1;

}  // namespace aqg
