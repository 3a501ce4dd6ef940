#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace melharm {

/// Set of pitch classes, indexed 0..11 with C = 0.
class PitchClassSet {
 public:
  PitchClassSet() = default;
  explicit PitchClassSet(std::initializer_list<int> pcs) {
    for (int pc : pcs) set(pc);
  }

  void set(int pc) { bits_.set(static_cast<size_t>(((pc % 12) + 12) % 12)); }
  bool contains(int pc) const {
    return bits_.test(static_cast<size_t>(((pc % 12) + 12) % 12));
  }
  size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  /// Rotate every member up by k semitones (mod 12).
  PitchClassSet transposed(int k) const {
    PitchClassSet out;
    for (int pc = 0; pc < 12; ++pc)
      if (bits_.test(static_cast<size_t>(pc))) out.set(pc + k);
    return out;
  }

  /// Binary indicator vector over the 12 pitch classes.
  std::array<double, 12> to_pcp() const {
    std::array<double, 12> pcp{};
    for (int pc = 0; pc < 12; ++pc)
      pcp[static_cast<size_t>(pc)] = bits_.test(static_cast<size_t>(pc)) ? 1.0 : 0.0;
    return pcp;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int pc = 0; pc < 12; ++pc)
      if (bits_.test(static_cast<size_t>(pc))) out.push_back(pc);
    return out;
  }

  bool operator==(const PitchClassSet&) const = default;

 private:
  std::bitset<12> bits_;
};

/// Chord kind. The inventory spans the qualities found in typical lead
/// sheet corpora; `Rest` stands for "no chord".
enum class ChordQuality {
  Rest,
  Major,
  Minor,
  Diminished,
  Augmented,
  Sus2,
  Sus4,
  Sixth,
  MinorSixth,
  Dominant7,
  Major7,
  Minor7,
  HalfDiminished7,  // m7b5
  Diminished7,
  Dominant9,
  Major9,
  Minor9,
  Add9,
  Dominant7Sus4,
};

/// Canonical suffix for a quality ("" for major, "m7" for minor seventh...).
std::string quality_suffix(ChordQuality q);

/// Semitone offsets above the root for a quality (empty for Rest).
const std::vector<int>& quality_intervals(ChordQuality q);

/// A parsed chord symbol. Equality covers text, root, quality, bass and the
/// pitch-class set, so a symbol round-trips through the parser to an equal
/// value.
struct ChordSymbol {
  std::string text;               ///< canonical symbol, e.g. "Dm7" or "C/E"
  std::optional<int> root;        ///< pitch class 0..11, nullopt for rest
  ChordQuality quality = ChordQuality::Rest;
  std::optional<int> bass;        ///< slash-bass pitch class, if any
  PitchClassSet pitch_classes;

  bool is_rest() const { return !root.has_value(); }
  bool operator==(const ChordSymbol&) const = default;

  /// The rest ("no chord") symbol.
  static ChordSymbol rest();
};

/// Parse a chord symbol: root [A-G](#|b)? + quality suffix + optional
/// "/" bass. "N.C." (or "NC") is the rest chord. Root spelling is kept in
/// the canonical text; pitch-class arithmetic is mod 12.
/// Throws ParseError naming the offending substring.
ChordSymbol parse_chord_symbol(const std::string& text);

/// 12-dim binary indicator vector of the chord's pitch classes.
/// The rest chord maps to the all-zero vector.
std::array<double, 12> chord_to_pcp(const ChordSymbol& chord);

/// Same symbol with root, bass and pitch classes moved up k semitones.
/// Spelling of the transposed root uses sharps. Rest transposes to itself.
ChordSymbol transpose_chord(const ChordSymbol& chord, int k);

}  // namespace melharm
