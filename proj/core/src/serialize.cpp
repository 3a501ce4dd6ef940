#include "melharm/serialize.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "melharm/errors.hpp"
#include "melharm/musicxml.hpp"

namespace melharm {

using nlohmann::json;

namespace {

json provenance_to_json(const Provenance& p) {
  json j;
  j["tool_version"] = p.tool_version;
  j["config_hash"] = p.config_hash;
  j["input_hashes"] = p.input_hashes;
  j["config"] = p.config;
  return j;
}

}  // namespace

std::string leadsheet_to_json(const LeadSheet& ls,
                              const Provenance* provenance) {
  json j;
  j["title"] = ls.title;
  j["total_frames"] = ls.total_frames;
  j["pickup_frames"] = ls.pickup_frames;
  j["melody"] = json::array();
  for (const auto& ev : ls.melody)
    j["melody"].push_back(
        {{"onset", ev.onset}, {"duration", ev.duration}, {"pitch", ev.pitch}});
  j["chord_regions"] = json::array();
  for (const auto& cr : ls.chord_regions)
    j["chord_regions"].push_back(
        {{"onset", cr.onset}, {"chord", cr.chord.text}});
  j["time_regions"] = json::array();
  for (const auto& tr : ls.time_regions)
    j["time_regions"].push_back({{"onset", tr.onset},
                                 {"numerator", tr.time.numerator},
                                 {"denominator", tr.time.denominator}});
  j["key_regions"] = json::array();
  for (const auto& kr : ls.key_regions)
    j["key_regions"].push_back(
        {{"onset", kr.onset}, {"fifths", kr.key.fifths}});
  if (provenance) j["provenance"] = provenance_to_json(*provenance);
  return j.dump(2) + "\n";
}

LeadSheet leadsheet_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid lead sheet JSON: ") + e.what());
  }
  try {
    LeadSheet ls;
    ls.title = j.at("title").get<std::string>();
    ls.total_frames = j.at("total_frames").get<Frame>();
    ls.pickup_frames = j.at("pickup_frames").get<Frame>();
    for (const auto& ev : j.at("melody"))
      ls.melody.push_back({ev.at("onset").get<Frame>(),
                           ev.at("duration").get<Frame>(),
                           ev.at("pitch").get<int>()});
    for (const auto& cr : j.at("chord_regions"))
      ls.chord_regions.push_back(
          {cr.at("onset").get<Frame>(),
           parse_chord_symbol(cr.at("chord").get<std::string>())});
    for (const auto& tr : j.at("time_regions"))
      ls.time_regions.push_back({tr.at("onset").get<Frame>(),
                                 {tr.at("numerator").get<int>(),
                                  tr.at("denominator").get<int>()}});
    for (const auto& kr : j.at("key_regions"))
      ls.key_regions.push_back(
          {kr.at("onset").get<Frame>(), {kr.at("fifths").get<int>()}});
    return ls;
  } catch (const json::exception& e) {
    throw ParseError(std::string("lead sheet JSON misses a field: ") +
                     e.what());
  }
}

std::string encoding_to_json(const FrameEncoding& enc) {
  json j;
  j["melody"] = enc.melody;
  j["beat"] = enc.beat;
  j["key"] = enc.key;
  j["chord"] = enc.chord;
  std::ostringstream hash;
  hash << std::hex << enc.vocab_hash;
  j["vocab_hash"] = hash.str();
  return j.dump(2) + "\n";
}

FrameEncoding encoding_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
    FrameEncoding enc;
    enc.melody = j.at("melody").get<std::vector<int>>();
    enc.beat = j.at("beat").get<std::vector<int>>();
    enc.key = j.at("key").get<std::vector<int>>();
    enc.chord = j.at("chord").get<std::vector<int>>();
    enc.vocab_hash =
        std::stoull(j.at("vocab_hash").get<std::string>(), nullptr, 16);
    return enc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid encoding JSON: ") + e.what());
  }
}

std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << bytes;
  if (!out) throw IoError("short write to " + path.string());
}

LeadSheet load_leadsheet_file(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(c));
  std::string bytes = read_file(path);
  if (ext == ".json") return leadsheet_from_json(bytes);
  if (ext == ".xml" || ext == ".musicxml") return parse_musicxml(bytes);
  throw IoError("unsupported lead sheet extension '" + ext + "' for " +
                path.string());
}

}  // namespace melharm
