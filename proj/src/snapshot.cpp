#include "nls/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace nls {

namespace {

constexpr char kMagic[4] = {'N', 'L', 'S', '2'};
constexpr std::uint32_t kLayoutKSpaceRowMajor = 0;

static_assert(std::endian::native == std::endian::little,
              "snapshot I/O assumes a little-endian host");

void put_u32(std::ostream& os, std::uint32_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t get_u32(std::istream& is) {
    std::uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

} // namespace

void write_snapshot(const std::filesystem::path& path, const SpectralField& f) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open snapshot for writing: " + path.string());
    os.write(kMagic, sizeof kMagic);
    put_u32(os, static_cast<std::uint32_t>(f.grid.size()));
    put_u32(os, kLayoutKSpaceRowMajor);
    os.write(reinterpret_cast<const char*>(f.coeffs.data()),
             static_cast<std::streamsize>(f.coeffs.size() * sizeof(Complex)));
    if (!os) throw std::runtime_error("short write to snapshot: " + path.string());
}

SpectralField read_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open snapshot: " + path.string());
    char magic[4];
    is.read(magic, sizeof magic);
    if (!is || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
        throw std::runtime_error("not an NLS2 snapshot: " + path.string());
    const std::uint32_t m = get_u32(is);
    const std::uint32_t layout = get_u32(is);
    if (layout != kLayoutKSpaceRowMajor)
        throw std::runtime_error("unsupported snapshot layout tag " + std::to_string(layout));
    SpectralField f{Grid2D(static_cast<int>(m))};
    is.read(reinterpret_cast<char*>(f.coeffs.data()),
            static_cast<std::streamsize>(f.coeffs.size() * sizeof(Complex)));
    if (!is) throw std::runtime_error("truncated snapshot: " + path.string());
    return f;
}

namespace {

std::filesystem::path temp_sibling(const std::filesystem::path& path) {
    auto tmp = path;
    tmp += ".tmp";
    return tmp;
}

} // namespace

void write_snapshot_atomic(const std::filesystem::path& path, const SpectralField& f) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const auto tmp = temp_sibling(path);
    write_snapshot(tmp, f);
    std::filesystem::rename(tmp, path);
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const auto tmp = temp_sibling(path);
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open for writing: " + tmp.string());
        os << content;
        if (!os) throw std::runtime_error("short write: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace nls
