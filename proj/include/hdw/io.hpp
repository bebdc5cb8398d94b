#pragma once

#include <iosfwd>
#include <string>

#include "hdw/fields.hpp"

namespace hdw::io {

// Binary field dump. Header: magic "HDW1", u32 n, u32 N, f64 L,
// u32 components; then one plane per component, row-major over grid points
// (axis 0 slowest), each sample a little-endian (re, im) f64 pair.
void write_field(const std::string& path, const SpinorField& f);
void write_field(const std::string& path, const ScalarField& f);
SpinorField read_field(const std::string& path);

// CSV of a 1D field: x, then re/im per component.
void write_field_csv_1d(std::ostream& os, const SpinorField& f);
void write_field_csv_1d(std::ostream& os, const ScalarField& f);

}  // namespace hdw::io
