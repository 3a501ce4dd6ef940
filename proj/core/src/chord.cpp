#include "melharm/chord.hpp"

#include <map>
#include <utility>

#include "melharm/errors.hpp"

namespace melharm {

namespace {

// Quality table: canonical suffix and semitone offsets above the root.
// Longest-suffix match resolves ambiguity (so "maj7" is not "m" + "aj7").
struct QualitySpec {
  ChordQuality quality;
  const char* suffix;
  std::vector<int> intervals;
};

const std::vector<QualitySpec>& quality_table() {
  static const std::vector<QualitySpec> table = {
      {ChordQuality::Major, "", {0, 4, 7}},
      {ChordQuality::Minor, "m", {0, 3, 7}},
      {ChordQuality::Diminished, "dim", {0, 3, 6}},
      {ChordQuality::Augmented, "aug", {0, 4, 8}},
      {ChordQuality::Sus2, "sus2", {0, 2, 7}},
      {ChordQuality::Sus4, "sus4", {0, 5, 7}},
      {ChordQuality::Sixth, "6", {0, 4, 7, 9}},
      {ChordQuality::MinorSixth, "m6", {0, 3, 7, 9}},
      {ChordQuality::Dominant7, "7", {0, 4, 7, 10}},
      {ChordQuality::Major7, "maj7", {0, 4, 7, 11}},
      {ChordQuality::Minor7, "m7", {0, 3, 7, 10}},
      {ChordQuality::HalfDiminished7, "m7b5", {0, 3, 6, 10}},
      {ChordQuality::Diminished7, "dim7", {0, 3, 6, 9}},
      {ChordQuality::Dominant9, "9", {0, 2, 4, 7, 10}},
      {ChordQuality::Major9, "maj9", {0, 2, 4, 7, 11}},
      {ChordQuality::Minor9, "m9", {0, 2, 3, 7, 10}},
      {ChordQuality::Add9, "add9", {0, 2, 4, 7}},
      {ChordQuality::Dominant7Sus4, "7sus4", {0, 5, 7, 10}},
  };
  return table;
}

const QualitySpec& spec_for(ChordQuality q) {
  for (const auto& spec : quality_table())
    if (spec.quality == q) return spec;
  throw ContractViolation("no quality spec for rest chord");
}

constexpr int kStepPitchClass[7] = {9, 11, 0, 2, 4, 5, 7};  // A..G

// Parses a note name like "Bb" or "F#". Returns pitch class and the number
// of consumed characters, or nullopt if `text` does not start with a note.
std::optional<std::pair<int, size_t>> parse_note_name(const std::string& text,
                                                      size_t pos) {
  if (pos >= text.size()) return std::nullopt;
  char step = text[pos];
  if (step < 'A' || step > 'G') return std::nullopt;
  int pc = kStepPitchClass[step - 'A'];
  size_t used = 1;
  if (pos + 1 < text.size()) {
    if (text[pos + 1] == '#') {
      pc = (pc + 1) % 12;
      used = 2;
    } else if (text[pos + 1] == 'b') {
      pc = (pc + 11) % 12;
      used = 2;
    }
  }
  return std::make_pair(pc, used);
}

const char* kSharpNames[12] = {"C",  "C#", "D",  "D#", "E",  "F",
                               "F#", "G",  "G#", "A",  "A#", "B"};

}  // namespace

std::string quality_suffix(ChordQuality q) {
  if (q == ChordQuality::Rest) return "";
  return spec_for(q).suffix;
}

const std::vector<int>& quality_intervals(ChordQuality q) {
  static const std::vector<int> empty;
  if (q == ChordQuality::Rest) return empty;
  return spec_for(q).intervals;
}

ChordSymbol ChordSymbol::rest() {
  ChordSymbol c;
  c.text = "N.C.";
  c.quality = ChordQuality::Rest;
  return c;
}

ChordSymbol parse_chord_symbol(const std::string& text) {
  if (text.empty()) throw ParseError("empty chord symbol");
  if (text == "N.C." || text == "NC") return ChordSymbol::rest();

  auto root = parse_note_name(text, 0);
  if (!root)
    throw ParseError("chord symbol '" + text + "': malformed root '" +
                     text.substr(0, 1) + "'");

  std::string rest_of = text.substr(root->second);
  std::string bass_text;
  if (auto slash = rest_of.rfind('/'); slash != std::string::npos) {
    bass_text = rest_of.substr(slash + 1);
    rest_of = rest_of.substr(0, slash);
  }

  const QualitySpec* match = nullptr;
  for (const auto& spec : quality_table()) {
    if (rest_of == spec.suffix &&
        (!match || std::string(spec.suffix).size() >
                       std::string(match->suffix).size()))
      match = &spec;
  }
  if (!match)
    throw ParseError("chord symbol '" + text + "': unknown quality suffix '" +
                     rest_of + "'");

  ChordSymbol chord;
  chord.root = root->first;
  chord.quality = match->quality;
  for (int iv : match->intervals) chord.pitch_classes.set(root->first + iv);

  std::string canonical = text.substr(0, root->second) + match->suffix;
  if (!bass_text.empty()) {
    auto bass = parse_note_name(bass_text, 0);
    if (!bass || bass->second != bass_text.size())
      throw ParseError("chord symbol '" + text + "': malformed bass '" +
                       bass_text + "'");
    chord.bass = bass->first;
    chord.pitch_classes.set(bass->first);
    canonical += "/" + bass_text;
  }
  chord.text = canonical;
  return chord;
}

std::array<double, 12> chord_to_pcp(const ChordSymbol& chord) {
  return chord.pitch_classes.to_pcp();
}

ChordSymbol transpose_chord(const ChordSymbol& chord, int k) {
  if (chord.is_rest()) return chord;
  ChordSymbol out;
  out.quality = chord.quality;
  out.root = ((*chord.root + k) % 12 + 12) % 12;
  out.pitch_classes = chord.pitch_classes.transposed(k);
  out.text = std::string(kSharpNames[*out.root]) + quality_suffix(out.quality);
  if (chord.bass) {
    out.bass = ((*chord.bass + k) % 12 + 12) % 12;
    out.text += std::string("/") + kSharpNames[*out.bass];
  }
  return out;
}

}  // namespace melharm
