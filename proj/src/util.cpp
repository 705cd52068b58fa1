#include "toplabel/util.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace toplabel {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double clip_probability(double p, double eps) {
    return std::clamp(p, eps, 1.0 - eps);
}

int half_open_bin_index(double lo, double hi, int n_bins, double s) {
    if (s <= lo)
        return 0;
    if (s >= hi)
        return n_bins - 1;
    const double width = (hi - lo) / n_bins;
    // Candidate from arithmetic, then nudge so that bin edges land on the
    // half-open side: bin i covers (lo + i*w, lo + (i+1)*w].
    int idx = static_cast<int>((s - lo) / width);
    idx = std::clamp(idx, 0, n_bins - 1);
    auto edge = [&](int i) { return i == n_bins ? hi : lo + i * width; };
    while (idx > 0 && s <= edge(idx))
        --idx;
    while (idx < n_bins - 1 && s > edge(idx + 1))
        ++idx;
    return idx;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out)
            throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void Fnv1a::update(const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        state_ ^= bytes[i];
        state_ *= 0x100000001b3ULL;
    }
}

void Fnv1a::update_u64(std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = static_cast<unsigned char>(v >> (8 * i));
    update(b, 8);
}

void Fnv1a::update_double(double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    update_u64(bits);
}

std::string Fnv1a::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 0; i < 16; ++i)
        out[15 - i] = digits[(state_ >> (4 * i)) & 0xf];
    return out;
}

} // namespace toplabel
