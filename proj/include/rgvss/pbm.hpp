#pragma once

// Portable bitmap (PBM) I/O. P1 is ASCII; P4 packs each row MSB-first into
// ceil(width/8) bytes, 1 = black. Padding bits are ignored on read and
// written as zero.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rgvss/bitmap.hpp"

namespace rgvss::pbm {

class PbmError : public std::runtime_error {
 public:
  PbmError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

enum class Format { kAscii, kBinary };

Bitmap read(std::istream& in);
Bitmap read(const std::filesystem::path& path);
Bitmap parse(const std::string& bytes);

void write(std::ostream& out, const Bitmap& image, Format format = Format::kBinary);
void write(const std::filesystem::path& path, const Bitmap& image,
           Format format = Format::kBinary);
std::string serialize(const Bitmap& image, Format format = Format::kBinary);

}  // namespace rgvss::pbm
