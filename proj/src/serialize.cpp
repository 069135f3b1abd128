#include "batchhl/serialize.hpp"

#include <cstring>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>

namespace batchhl {

namespace {

constexpr std::uint8_t kMagic[4] = {'B', 'H', 'L', '1'};

class Writer {
 public:
  void u32(std::uint32_t x) {
    for (int s = 0; s < 32; s += 8) bytes_.push_back(static_cast<std::uint8_t>(x >> s));
  }
  void u64(std::uint64_t x) {
    for (int s = 0; s < 64; s += 8) bytes_.push_back(static_cast<std::uint8_t>(x >> s));
  }
  void raw(std::span<const std::uint8_t> b) { bytes_.insert(bytes_.end(), b.begin(), b.end()); }
  std::vector<std::uint8_t>& bytes() { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
};

class Reader {
 public:
  Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint32_t u32() {
    need(4);
    std::uint32_t x = 0;
    for (int s = 0; s < 4; ++s) x |= static_cast<std::uint32_t>(bytes_[pos_ + s]) << (8 * s);
    pos_ += 4;
    return x;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t x = 0;
    for (int s = 0; s < 8; ++s) x |= static_cast<std::uint64_t>(bytes_[pos_ + s]) << (8 * s);
    pos_ += 8;
    return x;
  }
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }
  void skip(std::size_t k) { need(k); pos_ += k; }

 private:
  void need(std::size_t k) const {
    if (remaining() < k) throw LabellingFormatError(FormatError::Truncated);
  }
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

struct Parsed {
  HighwayCoverLabelling gamma;
  std::string problem;  // non-empty if structurally invalid
};

// Parses the body (everything before the checksum). Throws Truncated if it runs off
// the end; semantic problems are reported through Parsed::problem so the caller can
// prefer a checksum diagnosis.
Parsed parse_body(std::span<const std::uint8_t> body) {
  Reader in(body);
  in.skip(4);
  const std::uint32_t n = in.u32();
  const std::uint32_t k = in.u32();
  if (static_cast<std::uint64_t>(k) * 4 > in.remaining()) throw LabellingFormatError(FormatError::Truncated);
  std::vector<Vertex> ids(k);
  for (auto& id : ids) id = in.u32();

  Parsed out;
  auto fail = [&out](std::string why) {
    if (out.problem.empty()) out.problem = std::move(why);
  };
  LandmarkSet landmarks;
  try {
    landmarks = LandmarkSet(ids, n);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
    landmarks = LandmarkSet({}, n);
  }
  const bool landmarks_ok = landmarks.size() == k;

  if (static_cast<std::uint64_t>(k) * k * 4 > in.remaining()) throw LabellingFormatError(FormatError::Truncated);
  std::vector<Dist> highway(static_cast<std::size_t>(k) * k);
  for (auto& d : highway) d = in.u32();

  HighwayCoverLabelling gamma(landmarks, landmarks_ok ? n : 0);
  if (landmarks_ok) {
    for (LandmarkIndex i = 0; i < k; ++i) {
      if (highway[static_cast<std::size_t>(i) * k + i] != 0) fail("nonzero highway diagonal");
      for (LandmarkIndex j = i + 1; j < k; ++j) {
        const Dist d = highway[static_cast<std::size_t>(i) * k + j];
        if (d != highway[static_cast<std::size_t>(j) * k + i]) fail("asymmetric highway");
        gamma.set_highway(i, j, d);
      }
    }
  }

  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint32_t count = in.u32();
    if (static_cast<std::uint64_t>(count) * 8 > in.remaining()) throw LabellingFormatError(FormatError::Truncated);
    std::int64_t prev = -1;
    for (std::uint32_t e = 0; e < count; ++e) {
      const LandmarkIndex idx = in.u32();
      const Dist d = in.u32();
      if (idx >= k || static_cast<std::int64_t>(idx) <= prev || !is_finite(d) ||
          landmarks.contains(v) || count > k) {
        fail("bad label entry at vertex " + std::to_string(v));
        continue;
      }
      prev = idx;
      if (landmarks_ok) gamma.set_label(v, idx, d);
    }
  }
  if (in.remaining() != 0) fail("trailing bytes");
  out.gamma = std::move(gamma);
  return out;
}

}  // namespace

const char* to_string(FormatError e) noexcept {
  switch (e) {
    case FormatError::BadMagic: return "bad magic";
    case FormatError::Truncated: return "truncated stream";
    case FormatError::ChecksumMismatch: return "checksum mismatch";
    case FormatError::Malformed: return "malformed labelling";
  }
  return "unknown";
}

LabellingFormatError::LabellingFormatError(FormatError code, const std::string& detail)
    : std::runtime_error(detail.empty() ? std::string(to_string(code))
                                        : std::string(to_string(code)) + ": " + detail),
      code_(code) {}

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) noexcept {
  std::uint64_t h = 14695981039346656037ull;
  for (auto b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::uint8_t> serialize(const HighwayCoverLabelling& gamma) {
  Writer out;
  out.raw(kMagic);
  const auto k = static_cast<std::uint32_t>(gamma.num_landmarks());
  out.u32(static_cast<std::uint32_t>(gamma.num_vertices()));
  out.u32(k);
  for (Vertex r : gamma.landmarks().vertices()) out.u32(r);
  for (LandmarkIndex i = 0; i < k; ++i) {
    for (Dist d : gamma.highway_row(i)) out.u32(d);
  }
  for (Vertex v = 0; v < gamma.num_vertices(); ++v) {
    auto entries = gamma.label(v);
    out.u32(static_cast<std::uint32_t>(entries.size()));
    for (const auto& e : entries) {
      out.u32(e.landmark);
      out.u32(e.distance);
    }
  }
  out.u64(fnv1a64(out.bytes()));
  return std::move(out.bytes());
}

HighwayCoverLabelling deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4) throw LabellingFormatError(FormatError::Truncated);
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw LabellingFormatError(FormatError::BadMagic);
  if (bytes.size() < 4 + 8 + 8) throw LabellingFormatError(FormatError::Truncated);

  const auto body = bytes.first(bytes.size() - 8);
  Reader trailer(bytes.last(8));
  const bool checksum_ok = trailer.u64() == fnv1a64(body);

  Parsed parsed;
  try {
    parsed = parse_body(body);
  } catch (const LabellingFormatError& e) {
    // A corrupted count can also run past the end; only call it truncation when the
    // trailer cannot vouch for the content.
    if (checksum_ok) throw LabellingFormatError(FormatError::Malformed, "inconsistent counts");
    throw;
  }
  if (!checksum_ok) throw LabellingFormatError(FormatError::ChecksumMismatch);
  if (!parsed.problem.empty()) throw LabellingFormatError(FormatError::Malformed, parsed.problem);
  return std::move(parsed.gamma);
}

void write_labelling(std::ostream& out, const HighwayCoverLabelling& gamma) {
  const auto bytes = serialize(gamma);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

HighwayCoverLabelling read_labelling(std::istream& in) {
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return deserialize(bytes);
}

}  // namespace batchhl
