#include "aqg/snapshot.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace aqg {

static_assert(std::endian::native == std::endian::little,
              "snapshot io assumes a little-endian host");

namespace {

constexpr char magic[4] = {'A', 'Q', 'G', 'F'};

struct Header {
    char magic[4];
    std::uint32_t version;
    std::uint32_t n1;
    std::uint32_t n2;
    double l1;
    double l2;
};
static_assert(sizeof(Header) == 32);

}  // namespace

void write_snapshot(const std::string& path, const PhysicalField& f) {
    for (double v : f.values)
        if (!std::isfinite(v)) throw std::invalid_argument("write_snapshot: non-finite value");
    Header h{};
    std::memcpy(h.magic, magic, 4);
    h.version = snapshot_version;
    h.n1 = static_cast<std::uint32_t>(f.grid->n1);
    h.n2 = static_cast<std::uint32_t>(f.grid->n2);
    h.l1 = f.grid->l1;
    h.l2 = f.grid->l2;

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("write_snapshot: cannot open " + path);
    out.write(reinterpret_cast<const char*>(&h), sizeof(h));
    out.write(reinterpret_cast<const char*>(f.values.data()),
              static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    if (!out) throw std::runtime_error("write_snapshot: write failed for " + path);
}

PhysicalField read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_snapshot: cannot open " + path);
    Header h{};
    in.read(reinterpret_cast<char*>(&h), sizeof(h));
    if (!in || std::memcmp(h.magic, magic, 4) != 0)
        throw std::runtime_error("read_snapshot: bad magic in " + path);
    if (h.version != snapshot_version)
        throw std::runtime_error("read_snapshot: unsupported version in " + path);

    auto grid = make_grid(static_cast<int>(h.n1), static_cast<int>(h.n2), h.l1, h.l2);
    std::vector<double> values(static_cast<size_t>(h.n1) * h.n2);
    in.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(values.size() * sizeof(double)));
    if (!in) throw std::runtime_error("read_snapshot: truncated data in " + path);
    for (double v : values)
        if (!std::isfinite(v)) throw std::runtime_error("read_snapshot: non-finite value in " + path);
    return PhysicalField(std::move(grid), std::move(values));
}

}  // namespace aqg
