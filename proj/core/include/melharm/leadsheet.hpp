#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "melharm/chord.hpp"

namespace melharm {

/// One sixteenth note is one frame; all positions and durations count frames.
using Frame = int64_t;

struct TimeSignature {
  int numerator = 4;
  int denominator = 4;  // power of two

  bool operator==(const TimeSignature&) const = default;
};

/// Frames in one bar: numerator x (16 / denominator).
/// Throws QuantizationError for denominators below the sixteenth grid
/// (32nd and finer) and ContractViolation for non-positive or
/// non-power-of-two signatures.
Frame frames_per_bar(const TimeSignature& ts);

struct KeySignature {
  int fifths = 0;  ///< -7..-1 flats, 0 none, 1..7 sharps

  bool operator==(const KeySignature&) const = default;

  /// Pitch class of the major-mode tonic (C=0 for fifths 0, G=7 for 1, ...).
  int tonic_pitch_class() const { return ((fifths * 7) % 12 + 12) % 12; }
};

/// One melody event: a note or an explicit rest (pitch 0).
struct MelodyEvent {
  Frame onset = 0;
  Frame duration = 0;
  int pitch = 0;  ///< 0 = rest, otherwise MIDI pitch 1..127

  bool is_rest() const { return pitch == 0; }
  bool operator==(const MelodyEvent&) const = default;
};

struct ChordRegion {
  Frame onset = 0;
  ChordSymbol chord;

  bool operator==(const ChordRegion&) const = default;
};

struct TimeRegion {
  Frame onset = 0;
  TimeSignature time;

  bool operator==(const TimeRegion&) const = default;
};

struct KeyRegion {
  Frame onset = 0;
  KeySignature key;

  bool operator==(const KeyRegion&) const = default;
};

/// A parsed score: a monophonic melody that tiles [0, total_frames) with
/// explicit rests, plus chord / time-signature / key-signature regions.
/// Pickup bars occupy the first `pickup_frames` frames and count beat
/// positions backwards from the first barline.
struct LeadSheet {
  std::string title;
  std::vector<MelodyEvent> melody;
  std::vector<ChordRegion> chord_regions;
  std::vector<TimeRegion> time_regions;
  std::vector<KeyRegion> key_regions;
  Frame total_frames = 0;
  Frame pickup_frames = 0;

  bool operator==(const LeadSheet&) const = default;
};

/// One bar of the piece. A pickup bar is partial: its frames map to the
/// trailing beat positions of a nominal bar.
struct Bar {
  Frame start = 0;
  Frame length = 0;          ///< frames actually present
  Frame nominal_length = 0;  ///< frames_per_bar of the active time signature
  bool is_pickup = false;

  /// Beat position of an absolute frame inside this bar.
  Frame frame_in_bar(Frame frame) const {
    return frame - start + (nominal_length - length);
  }
};

/// Lay out bars from the time regions: the pickup bar first (if any), then
/// full bars under the active time signature. Time-signature changes take
/// effect at the bar where they occur. A trailing partial bar is included
/// with length < nominal_length.
std::vector<Bar> bar_map(const LeadSheet& ls);

/// One broken invariant, as data.
struct Violation {
  std::string invariant;  ///< short machine-readable name
  Frame frame = 0;        ///< position of the breach
  std::string detail;
};

/// Empty iff all LeadSheet invariants hold. Violations name the invariant
/// and the frame where it is broken.
std::vector<Violation> validate_leadsheet(const LeadSheet& ls);

/// Active time signature at a frame (regions cover from their onset).
const TimeSignature& time_at(const LeadSheet& ls, Frame frame);
/// Active key signature at a frame.
const KeySignature& key_at(const LeadSheet& ls, Frame frame);
/// Active chord at a frame; rest before the first chord onset.
ChordSymbol chord_at(const LeadSheet& ls, Frame frame);

}  // namespace melharm
