#include "qgabor/qf2_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace qgabor {

namespace {

constexpr char kMagic[4] = {'Q', 'F', '2', '\0'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    char b[4];
    for (int k = 0; k < 4; ++k) b[k] = static_cast<char>((v >> (8 * k)) & 0xff);
    os.write(b, 4);
}

void put_u64(std::ostream& os, std::uint64_t v) {
    char b[8];
    for (int k = 0; k < 8; ++k) b[k] = static_cast<char>((v >> (8 * k)) & 0xff);
    os.write(b, 8);
}

void put_f64(std::ostream& os, double d) { put_u64(os, std::bit_cast<std::uint64_t>(d)); }

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw std::runtime_error("QF2: truncated file");
    std::uint32_t v = 0;
    for (int k = 3; k >= 0; --k) v = (v << 8) | b[k];
    return v;
}

std::uint64_t get_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (!is) throw std::runtime_error("QF2: truncated file");
    std::uint64_t v = 0;
    for (int k = 7; k >= 0; --k) v = (v << 8) | b[k];
    return v;
}

double get_f64(std::istream& is) { return std::bit_cast<double>(get_u64(is)); }

}  // namespace

void write_qf2(const std::string& path, const QField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("QF2: cannot open for writing: " + path);
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    put_u64(os, static_cast<std::uint64_t>(f.n1()));
    put_u64(os, static_cast<std::uint64_t>(f.n2()));
    put_f64(os, f.grid().x1_min);
    put_f64(os, f.grid().x2_min);
    put_f64(os, f.grid().dx1);
    put_f64(os, f.grid().dx2);
    for (const Quaternion& q : f.data()) {
        put_f64(os, q.w);
        put_f64(os, q.x);
        put_f64(os, q.y);
        put_f64(os, q.z);
    }
    if (!os) throw std::runtime_error("QF2: write failed: " + path);
}

QField read_qf2(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("QF2: cannot open: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("QF2: bad magic in " + path);
    const std::uint32_t version = get_u32(is);
    if (version != kVersion)
        throw std::runtime_error("QF2: unsupported version " + std::to_string(version) + " in " +
                                 path + " (expected 1)");
    Grid2 g;
    g.n1 = static_cast<std::int64_t>(get_u64(is));
    g.n2 = static_cast<std::int64_t>(get_u64(is));
    g.x1_min = get_f64(is);
    g.x2_min = get_f64(is);
    g.dx1 = get_f64(is);
    g.dx2 = get_f64(is);
    g.validate();
    QField f(g);
    for (Quaternion& q : f.data()) {
        q.w = get_f64(is);
        q.x = get_f64(is);
        q.y = get_f64(is);
        q.z = get_f64(is);
    }
    if (!is) throw std::runtime_error("QF2: truncated file: " + path);
    if (!f.all_finite()) throw std::runtime_error("QF2: non-finite values in " + path);
    return f;
}

}  // namespace qgabor
