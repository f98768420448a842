#pragma once

#include <string>
#include <vector>

namespace tcgabor {

/// Mono audio in [-1, 1]. Multi-channel files are mixed down by averaging;
/// integer formats are normalized by their full negative range.
struct AudioBuffer {
  std::vector<double> samples;
  double sample_rate = 0.0;
};

/// Reads a RIFF/WAVE file: PCM 16/24/32 bit or 32-bit float, any channel
/// count. Throws std::runtime_error on unsupported codecs, truncated files,
/// empty data chunks, or non-finite samples.
AudioBuffer read_wav(const std::string& path);

enum class WavFormat { pcm16, float32 };

void write_wav(const std::string& path, const AudioBuffer& audio,
               WavFormat format = WavFormat::float32);

}  // namespace tcgabor
