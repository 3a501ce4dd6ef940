#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "melharm/leadsheet.hpp"

namespace melharm {

struct Corpus;

/// Bijection between canonical chord texts and dense indices.
/// Index 0 is always the rest token; the remaining symbols are sorted
/// lexicographically so indices are stable across runs.
class ChordVocab {
 public:
  ChordVocab();
  explicit ChordVocab(std::vector<std::string> symbols);

  size_t size() const { return symbols_.size(); }
  const std::string& symbol(int index) const;
  /// Index of a canonical symbol; throws EncodingError when absent.
  int index(const std::string& symbol) const;
  /// Index of a canonical symbol, or -1 when absent.
  int find(const std::string& symbol) const;
  const std::vector<std::string>& symbols() const { return symbols_; }

  /// FNV-1a hash over the symbol list; identifies the vocabulary in
  /// weights files and cached encodings.
  uint64_t hash() const;

  bool operator==(const ChordVocab&) const = default;

  static const std::string& rest_symbol();

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, int> index_;
};

/// Rest at index 0, then every distinct canonical chord text in the corpus,
/// sorted lexicographically.
ChordVocab build_vocab(const Corpus& corpus);

/// The four aligned per-frame sequences: melody index (0 = rest, else MIDI
/// pitch), beat strength 0..3, key fifths -7..7, chord vocabulary index.
struct FrameEncoding {
  std::vector<int> melody;
  std::vector<int> beat;
  std::vector<int> key;
  std::vector<int> chord;
  uint64_t vocab_hash = 0;

  size_t frames() const { return melody.size(); }
  bool operator==(const FrameEncoding&) const = default;
};

/// Metrical weight of a frame: 3 strong (downbeat), 2 medium-weight,
/// 1 weak beat, 0 non-beat. The downbeat of each bar is 3; in meters with
/// an even number of beats the midpoint beat is 2; other beat onsets are 1.
/// Simple meters count the denominator note as the beat; compound meters
/// (numerator divisible by 3 over 8) count the dotted quarter.
int beat_strength(const TimeSignature& ts, Frame frame_in_bar);

/// Encode a lead sheet against a vocabulary. Frames before the first chord
/// onset carry the rest chord index. Throws EncodingError naming any
/// out-of-vocabulary symbol.
FrameEncoding encode(const LeadSheet& ls, const ChordVocab& vocab);

/// Encode with out-of-vocabulary chords mapped to rest instead of throwing.
/// `oov_frames`, when given, receives the number of frames so mapped.
FrameEncoding encode_lenient(const LeadSheet& ls, const ChordVocab& vocab,
                             int64_t* oov_frames);

/// Run-length collapse of a chord index sequence: a region starts at frame 0
/// and wherever the index changes; rest runs yield no region.
std::vector<ChordRegion> decode_chords(const std::vector<int>& chord_frames,
                                       const ChordVocab& vocab);

/// decode_chords, then merge adjacent regions with an equal symbol (they
/// arise when a rest run separates two runs of the same chord, which the
/// region representation cannot keep apart).
std::vector<ChordRegion> decode_chords_merged(
    const std::vector<int>& chord_frames, const ChordVocab& vocab);

/// Bars recovered from a beat sequence alone: a bar starts at every
/// strength-3 frame; frames before the first are the pickup.
struct BeatBar {
  Frame start = 0;
  Frame end = 0;  ///< exclusive
  bool is_pickup = false;
};
std::vector<BeatBar> bars_from_beat(const std::vector<int>& beat);

}  // namespace melharm
