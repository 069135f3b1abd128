#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "batchhl/labelling.hpp"

namespace batchhl {

// Binary labelling format, all integers little-endian:
//   "BHL1" | u32 n | u32 k | k x u32 landmark id | k*k x u32 highway (row-major,
//   0xFFFFFFFF = unreachable) | per vertex: u32 count, count x (u32 landmark index,
//   u32 distance) | u64 FNV-1a of every preceding byte.

enum class FormatError { BadMagic, Truncated, ChecksumMismatch, Malformed };

const char* to_string(FormatError e) noexcept;

class LabellingFormatError : public std::runtime_error {
 public:
  explicit LabellingFormatError(FormatError code, const std::string& detail = {});
  FormatError code() const noexcept { return code_; }

 private:
  FormatError code_;
};

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) noexcept;

std::vector<std::uint8_t> serialize(const HighwayCoverLabelling& gamma);
HighwayCoverLabelling deserialize(std::span<const std::uint8_t> bytes);

void write_labelling(std::ostream& out, const HighwayCoverLabelling& gamma);
HighwayCoverLabelling read_labelling(std::istream& in);

}  // namespace batchhl
