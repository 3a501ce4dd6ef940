#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "melharm/encoding.hpp"
#include "melharm/leadsheet.hpp"

namespace melharm {

/// Recorded in every artifact the tools write: who produced it and from
/// which inputs, without timestamps so reruns are byte-identical.
struct Provenance {
  std::string tool_version;
  std::string config_hash;
  std::map<std::string, std::string> input_hashes;  ///< label -> fnv1a hex
  std::map<std::string, std::string> config;        ///< effective settings
};

/// Native JSON form of a lead sheet (field names mirror LeadSheet).
/// Deterministic: keys sorted, two-space indent, trailing newline.
std::string leadsheet_to_json(const LeadSheet& ls,
                              const Provenance* provenance = nullptr);
LeadSheet leadsheet_from_json(const std::string& json_text);

/// Cached frame encoding: the four integer arrays plus the vocabulary hash.
std::string encoding_to_json(const FrameEncoding& enc);
FrameEncoding encoding_from_json(const std::string& json_text);

/// FNV-1a 64 over raw bytes, as a 16-digit hex string.
std::string fnv1a_hex(const std::string& bytes);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

/// Load a lead sheet from either the native JSON form or a MusicXML file,
/// decided by extension (.json vs .xml/.musicxml).
LeadSheet load_leadsheet_file(const std::filesystem::path& path);

}  // namespace melharm
