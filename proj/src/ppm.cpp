#include "pixshuffle/ppm.hpp"

#include <cerrno>
#include <fstream>
#include <iterator>
#include <string>
#include <system_error>

#include "pixshuffle/errors.hpp"

namespace pixshuffle {

namespace {

using Kind = FormatError::Kind;

// Largest accepted width or height.
constexpr std::uint64_t kMaxDimension = 1u << 24;

bool is_space(std::uint8_t ch) {
  return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\v' || ch == '\f';
}

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_separators() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t number(const char* field) {
    const std::size_t before = pos_;
    skip_separators();
    if (pos_ == before) {
      throw FormatError(Kind::malformed_header, field, "missing separator");
    }
    if (pos_ >= bytes_.size()) throw FormatError(Kind::malformed_header, field, "missing");
    std::uint64_t value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 0xFFFFFFFFu) throw FormatError(Kind::malformed_header, field, "too large");
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw FormatError(Kind::malformed_header, field, "not a decimal number");
    return value;
  }

  std::size_t position() const noexcept { return pos_; }
  void advance() noexcept { ++pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;
};

}  // namespace

ImageMatrix read_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') {
    throw FormatError(Kind::malformed_header, "magic", "expected P6");
  }
  if (bytes[1] != '6') {
    throw FormatError(Kind::unsupported_format, "magic",
                      std::string("P") + static_cast<char>(bytes[1]) + " is not a binary RGB pixmap");
  }
  HeaderReader header(bytes);
  const std::uint64_t width = header.number("width");
  const std::uint64_t height = header.number("height");
  const std::uint64_t maxval = header.number("maxval");
  if (width == 0 || width > kMaxDimension) {
    throw FormatError(Kind::malformed_header, "width", std::to_string(width));
  }
  if (height == 0 || height > kMaxDimension) {
    throw FormatError(Kind::malformed_header, "height", std::to_string(height));
  }
  if (maxval == 0 || maxval > 65535) {
    throw FormatError(Kind::malformed_header, "maxval", std::to_string(maxval));
  }
  if (maxval != 255) throw FormatError(Kind::unsupported_maxval, "maxval", std::to_string(maxval));

  const std::size_t end_of_header = header.position();
  if (end_of_header >= bytes.size() || !is_space(bytes[end_of_header])) {
    throw FormatError(Kind::malformed_header, "maxval", "no whitespace before payload");
  }
  const std::size_t offset = end_of_header + 1;
  const std::uint64_t needed = width * height * 3;
  const std::uint64_t available = bytes.size() - offset;
  if (available < needed) {
    throw FormatError(Kind::truncated_payload, "payload",
                      std::to_string(available) + " of " + std::to_string(needed) + " bytes");
  }
  return {static_cast<Index>(height), static_cast<Index>(width),
          bytes.subspan(offset, static_cast<std::size_t>(needed))};
}

std::vector<std::uint8_t> write_ppm(const ImageMatrix& img) {
  const std::string header =
      "P6\n" + std::to_string(img.cols()) + " " + std::to_string(img.rows()) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + img.samples().size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), img.samples().begin(), img.samples().end());
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::system_error(errno, std::generic_category(), "cannot open " + path.string());
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::system_error(errno, std::generic_category(), "cannot write " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw std::system_error(errno, std::generic_category(), "write failed for " + path.string());
  }
}

ImageMatrix load_ppm(const std::filesystem::path& path) { return read_ppm(read_file(path)); }

void save_ppm(const std::filesystem::path& path, const ImageMatrix& img) {
  write_file(path, write_ppm(img));
}

}  // namespace pixshuffle
