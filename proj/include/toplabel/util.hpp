#pragma once

#include <filesystem>
#include <string>

namespace toplabel {

// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

// Clip a probability into [eps, 1-eps] so log stays finite.
double clip_probability(double p, double eps = 1e-6);

// Index of the half-open bin (e_i, e_{i+1}] containing s for n equal-width
// bins over [lo, hi]. s == lo maps to bin 0; out-of-range values clamp.
int half_open_bin_index(double lo, double hi, int n_bins, double s);

// Write via a temp file in the same directory, then rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// FNV-1a 64-bit, used for dataset fingerprints.
class Fnv1a {
public:
    void update(const void* data, std::size_t len);
    void update(const std::string& s) { update(s.data(), s.size()); }
    void update_u64(std::uint64_t v);
    void update_double(double v);
    std::string hex() const;

private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

} // namespace toplabel
