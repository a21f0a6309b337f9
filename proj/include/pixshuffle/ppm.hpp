#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "pixshuffle/image.hpp"

namespace pixshuffle {

/// Decodes a binary PPM ("P6", maxval 255). Header fields may be separated by
/// any whitespace and '#' comments. Bytes after the payload are ignored.
/// Throws FormatError naming the offending field.
ImageMatrix read_ppm(std::span<const std::uint8_t> bytes);

/// Canonical encoding: "P6\n<width> <height>\n255\n" followed by the samples.
std::vector<std::uint8_t> write_ppm(const ImageMatrix& img);

/// Throws FormatError on decode failure and std::system_error on I/O failure.
ImageMatrix load_ppm(const std::filesystem::path& path);
void save_ppm(const std::filesystem::path& path, const ImageMatrix& img);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace pixshuffle
