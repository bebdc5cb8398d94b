#include "hdw/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace hdw::io {

namespace {

constexpr char kMagic[4] = {'H', 'D', 'W', '1'};

void write_raw(std::ofstream& os, const void* p, std::size_t n) {
  os.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

void write_header(std::ofstream& os, const Grid& g, std::uint32_t comps) {
  write_raw(os, kMagic, 4);
  const std::uint32_t n = static_cast<std::uint32_t>(g.n);
  const std::uint32_t npts = static_cast<std::uint32_t>(g.npts);
  const double length = g.length;
  write_raw(os, &n, 4);
  write_raw(os, &npts, 4);
  write_raw(os, &length, 8);
  write_raw(os, &comps, 4);
}

void write_plane(std::ofstream& os, const std::vector<cplx>& v) {
  write_raw(os, v.data(), v.size() * sizeof(cplx));
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("write_field: cannot open " + path);
  return os;
}

}  // namespace

void write_field(const std::string& path, const SpinorField& f) {
  std::ofstream os = open_out(path);
  write_header(os, f.grid, static_cast<std::uint32_t>(f.ncomp()));
  for (const auto& c : f.comp) write_plane(os, c);
  if (!os) throw std::runtime_error("write_field: write failure on " + path);
}

void write_field(const std::string& path, const ScalarField& f) {
  std::ofstream os = open_out(path);
  write_header(os, f.grid, 1);
  write_plane(os, f.v);
  if (!os) throw std::runtime_error("write_field: write failure on " + path);
}

SpinorField read_field(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_field: cannot open " + path);

  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("read_field: bad magic in " + path);

  std::uint32_t n = 0, npts = 0, comps = 0;
  double length = 0.0;
  is.read(reinterpret_cast<char*>(&n), 4);
  is.read(reinterpret_cast<char*>(&npts), 4);
  is.read(reinterpret_cast<char*>(&length), 8);
  is.read(reinterpret_cast<char*>(&comps), 4);
  if (!is) throw std::runtime_error("read_field: truncated header in " + path);

  const Grid g = make_grid(static_cast<int>(n), length, static_cast<int>(npts));
  SpinorField f(g, static_cast<int>(comps));
  for (auto& c : f.comp) {
    is.read(reinterpret_cast<char*>(c.data()),
            static_cast<std::streamsize>(c.size() * sizeof(cplx)));
  }
  if (!is) throw std::runtime_error("read_field: truncated data in " + path);
  return f;
}

namespace {

void write_csv_1d(std::ostream& os, const Grid& g, const std::vector<const std::vector<cplx>*>& comps) {
  if (g.n != 1) throw std::invalid_argument("write_field_csv_1d: requires a 1D field");
  os << "x";
  for (std::size_t c = 0; c < comps.size(); ++c) os << ",re" << c << ",im" << c;
  os << "\n";
  char buf[64];
  for (int i = 0; i < g.npts; ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", g.coord(i));
    os << buf;
    for (const auto* v : comps) {
      const cplx z = (*v)[static_cast<std::size_t>(i)];
      std::snprintf(buf, sizeof(buf), ",%.17g,%.17g", z.real(), z.imag());
      os << buf;
    }
    os << "\n";
  }
}

}  // namespace

void write_field_csv_1d(std::ostream& os, const SpinorField& f) {
  std::vector<const std::vector<cplx>*> comps;
  for (const auto& c : f.comp) comps.push_back(&c);
  write_csv_1d(os, f.grid, comps);
}

void write_field_csv_1d(std::ostream& os, const ScalarField& f) {
  write_csv_1d(os, f.grid, {&f.v});
}

}  // namespace hdw::io
