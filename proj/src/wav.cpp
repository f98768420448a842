#include "tcgabor/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace tcgabor {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t read_u32(const unsigned char* p) {
  return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 | std::uint32_t(p[2]) << 16 |
         std::uint32_t(p[3]) << 24;
}

std::uint16_t read_u16(const unsigned char* p) {
  return std::uint16_t(p[0]) | std::uint16_t(p[1]) << 8;
}

}  // namespace

AudioBuffer read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_wav: cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw std::runtime_error("read_wav: not a RIFF/WAVE file: " + path);
  }

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* data = nullptr;
  std::uint32_t data_len = 0;
  bool have_fmt = false;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::uint32_t len = read_u32(chunk + 4);
    const unsigned char* body = chunk + 8;
    if (pos + 8 + len > bytes.size()) throw std::runtime_error("read_wav: truncated chunk");
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (len < 16) throw std::runtime_error("read_wav: malformed fmt chunk");
      format = read_u16(body);
      channels = read_u16(body + 2);
      rate = read_u32(body + 4);
      bits = read_u16(body + 14);
      if (format == kFormatExtensible) {
        if (len < 40) throw std::runtime_error("read_wav: malformed extensible fmt chunk");
        format = read_u16(body + 24);  // first two bytes of the subformat GUID
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = body;
      data_len = len;
    }
    pos += 8 + len + (len & 1);  // chunks are word-aligned
  }

  if (!have_fmt) throw std::runtime_error("read_wav: missing fmt chunk");
  if (data == nullptr || data_len == 0) throw std::runtime_error("read_wav: empty data chunk");
  if (channels == 0 || rate == 0) throw std::runtime_error("read_wav: malformed header");

  const bool is_float = format == kFormatFloat;
  if (format != kFormatPcm && !is_float) {
    throw std::runtime_error("read_wav: unsupported codec (only PCM and float)");
  }
  if (is_float && bits != 32) throw std::runtime_error("read_wav: only 32-bit float supported");
  if (!is_float && bits != 16 && bits != 24 && bits != 32) {
    throw std::runtime_error("read_wav: only 16/24/32-bit PCM supported");
  }

  const std::size_t bytes_per_sample = bits / 8;
  const std::size_t frame_size = bytes_per_sample * channels;
  const std::size_t frames = data_len / frame_size;
  if (frames == 0) throw std::runtime_error("read_wav: data chunk holds no full frame");

  AudioBuffer out;
  out.sample_rate = double(rate);
  out.samples.resize(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (std::size_t ch = 0; ch < channels; ++ch) {
      const unsigned char* p = data + f * frame_size + ch * bytes_per_sample;
      double v = 0.0;
      if (is_float) {
        float raw;
        std::memcpy(&raw, p, 4);
        v = double(raw);
      } else if (bits == 16) {
        const auto raw = static_cast<std::int16_t>(read_u16(p));
        v = double(raw) / 32768.0;
      } else if (bits == 24) {
        std::int32_t raw = std::int32_t(p[0]) | std::int32_t(p[1]) << 8 | std::int32_t(p[2]) << 16;
        if (raw & 0x800000) raw |= ~0xFFFFFF;  // sign extension
        v = double(raw) / 8388608.0;
      } else {
        const auto raw = static_cast<std::int32_t>(read_u32(p));
        v = double(raw) / 2147483648.0;
      }
      acc += v;
    }
    const double mixed = acc / double(channels);
    if (!std::isfinite(mixed)) throw std::runtime_error("read_wav: non-finite sample");
    out.samples[f] = mixed;
  }
  return out;
}

namespace {

void append_u32(std::vector<unsigned char>& v, std::uint32_t x) {
  v.push_back(x & 0xFF);
  v.push_back((x >> 8) & 0xFF);
  v.push_back((x >> 16) & 0xFF);
  v.push_back((x >> 24) & 0xFF);
}

void append_u16(std::vector<unsigned char>& v, std::uint16_t x) {
  v.push_back(x & 0xFF);
  v.push_back((x >> 8) & 0xFF);
}

}  // namespace

void write_wav(const std::string& path, const AudioBuffer& audio, WavFormat format) {
  if (audio.samples.empty()) throw std::invalid_argument("write_wav: empty buffer");
  if (!(audio.sample_rate > 0.0)) throw std::invalid_argument("write_wav: bad sample rate");
  const bool is_float = format == WavFormat::float32;
  const std::uint16_t bits = is_float ? 32 : 16;
  const std::uint32_t rate = static_cast<std::uint32_t>(std::llround(audio.sample_rate));
  const std::uint32_t data_len =
      static_cast<std::uint32_t>(audio.samples.size() * (bits / 8));

  std::vector<unsigned char> out;
  out.reserve(44 + data_len);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  append_u32(out, 36 + data_len);
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  append_u32(out, 16);
  append_u16(out, is_float ? kFormatFloat : kFormatPcm);
  append_u16(out, 1);  // mono
  append_u32(out, rate);
  append_u32(out, rate * (bits / 8));
  append_u16(out, bits / 8);
  append_u16(out, bits);
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  append_u32(out, data_len);
  for (double s : audio.samples) {
    if (is_float) {
      const float f = float(s);
      unsigned char b[4];
      std::memcpy(b, &f, 4);
      out.insert(out.end(), b, b + 4);
    } else {
      const double clamped = std::clamp(s, -1.0, 1.0);
      const auto raw = static_cast<std::int16_t>(std::lround(clamped * 32767.0));
      append_u16(out, static_cast<std::uint16_t>(raw));
    }
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_wav: cannot open " + path);
  f.write(reinterpret_cast<const char*>(out.data()), std::streamsize(out.size()));
  if (!f) throw std::runtime_error("write_wav: write failed for " + path);
}

}  // namespace tcgabor
