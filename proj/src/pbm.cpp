#include "rgvss/pbm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <vector>

namespace rgvss::pbm {
namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& bytes) : s_(bytes) {}

  std::size_t offset() const { return pos_; }
  bool done() const { return pos_ >= s_.size(); }
  unsigned char peek() const { return static_cast<unsigned char>(s_[pos_]); }
  unsigned char take() { return static_cast<unsigned char>(s_[pos_++]); }
  std::size_t remaining() const { return s_.size() - pos_; }

  // Whitespace and '#' comments (to end of line).
  void skip_blank() {
    while (!done()) {
      if (std::isspace(peek())) {
        ++pos_;
      } else if (peek() == '#') {
        while (!done() && peek() != '\n' && peek() != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  int header_int(const char* what) {
    skip_blank();
    const std::size_t start = pos_;
    if (done() || !std::isdigit(peek())) {
      throw PbmError(std::string("expected ") + what, pos_);
    }
    long long v = 0;
    while (!done() && std::isdigit(peek())) {
      v = v * 10 + (take() - '0');
      if (v > std::numeric_limits<int>::max()) throw PbmError(std::string(what) + " too large", start);
    }
    if (v <= 0) throw PbmError(std::string(what) + " must be positive", start);
    return static_cast<int>(v);
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Bitmap parse(const std::string& bytes) {
  Cursor cur(bytes);
  if (cur.remaining() < 2 || cur.take() != 'P') throw PbmError("missing PBM magic", 0);
  const unsigned char kind = cur.take();
  if (kind != '1' && kind != '4') throw PbmError("unsupported magic (want P1 or P4)", 1);
  const int width = cur.header_int("width");
  const int height = cur.header_int("height");
  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<Pixel> px;
  px.reserve(count);

  if (kind == '1') {
    while (px.size() < count) {
      cur.skip_blank();
      if (cur.done()) {
        throw PbmError("truncated P1 raster: " + std::to_string(px.size()) + " of " +
                           std::to_string(count) + " pixels",
                       cur.offset());
      }
      const unsigned char c = cur.peek();
      if (c != '0' && c != '1') throw PbmError("invalid P1 pixel character", cur.offset());
      cur.take();
      px.push_back(to_pixel(c == '1'));
    }
  } else {
    if (cur.done() || !std::isspace(cur.peek())) {
      throw PbmError("expected single whitespace before P4 raster", cur.offset());
    }
    cur.take();
    const std::size_t row_bytes = (static_cast<std::size_t>(width) + 7) / 8;
    const std::size_t need = row_bytes * static_cast<std::size_t>(height);
    if (cur.remaining() < need) {
      throw PbmError("truncated P4 raster: need " + std::to_string(need) + " bytes, have " +
                         std::to_string(cur.remaining()),
                     cur.offset());
    }
    for (int y = 0; y < height; ++y) {
      std::size_t x = 0;
      for (std::size_t b = 0; b < row_bytes; ++b) {
        const unsigned char byte = cur.take();
        for (int bit = 7; bit >= 0 && x < static_cast<std::size_t>(width); --bit, ++x) {
          px.push_back(to_pixel((byte >> bit) & 1));
        }
      }
    }
  }
  return Bitmap(width, height, std::move(px));
}

Bitmap read(std::istream& in) {
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse(bytes);
}

Bitmap read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read(in);
}

std::string serialize(const Bitmap& image, Format format) {
  std::string out;
  const int w = image.width();
  const int h = image.height();
  if (format == Format::kAscii) {
    out = "P1\n" + std::to_string(w) + " " + std::to_string(h) + "\n";
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        if (x) out += ' ';
        out += image.at(x, y) == Pixel::kBlack ? '1' : '0';
      }
      out += '\n';
    }
    return out;
  }
  out = "P4\n" + std::to_string(w) + " " + std::to_string(h) + "\n";
  const std::size_t row_bytes = (static_cast<std::size_t>(w) + 7) / 8;
  out.reserve(out.size() + row_bytes * static_cast<std::size_t>(h));
  for (int y = 0; y < h; ++y) {
    for (std::size_t b = 0; b < row_bytes; ++b) {
      unsigned char byte = 0;
      for (int bit = 0; bit < 8; ++bit) {
        const auto x = static_cast<int>(b * 8) + bit;
        if (x < w && image.at(x, y) == Pixel::kBlack) byte |= static_cast<unsigned char>(0x80U >> bit);
      }
      out += static_cast<char>(byte);
    }
  }
  return out;
}

void write(std::ostream& out, const Bitmap& image, Format format) {
  const std::string bytes = serialize(image, format);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void write(const std::filesystem::path& path, const Bitmap& image, Format format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write(out, image, format);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace rgvss::pbm
