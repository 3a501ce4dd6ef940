#include "melharm/leadsheet.hpp"

#include <algorithm>

#include "melharm/errors.hpp"

namespace melharm {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

template <typename Region>
const Region* active_region(const std::vector<Region>& regions, Frame frame) {
  const Region* active = nullptr;
  for (const auto& r : regions) {
    if (r.onset <= frame) active = &r;
    else break;
  }
  return active;
}

}  // namespace

Frame frames_per_bar(const TimeSignature& ts) {
  if (ts.numerator <= 0 || !is_power_of_two(ts.denominator))
    throw ContractViolation("invalid time signature " +
                            std::to_string(ts.numerator) + "/" +
                            std::to_string(ts.denominator));
  if (16 % ts.denominator != 0)
    throw QuantizationError(
        "unsupported resolution: denominator " +
        std::to_string(ts.denominator) +
        " is finer than the sixteenth-note grid");
  return static_cast<Frame>(ts.numerator) * (16 / ts.denominator);
}

std::vector<Bar> bar_map(const LeadSheet& ls) {
  std::vector<Bar> bars;
  if (ls.time_regions.empty() || ls.total_frames <= 0) return bars;

  size_t ts_index = 0;
  Frame pos = 0;
  if (ls.pickup_frames > 0) {
    Bar pickup;
    pickup.start = 0;
    pickup.length = std::min(ls.pickup_frames, ls.total_frames);
    pickup.nominal_length = frames_per_bar(ls.time_regions[0].time);
    pickup.is_pickup = true;
    bars.push_back(pickup);
    pos = pickup.length;
  }
  while (pos < ls.total_frames) {
    while (ts_index + 1 < ls.time_regions.size() &&
           ls.time_regions[ts_index + 1].onset <= pos)
      ++ts_index;
    Bar bar;
    bar.start = pos;
    bar.nominal_length = frames_per_bar(ls.time_regions[ts_index].time);
    bar.length = std::min(bar.nominal_length, ls.total_frames - pos);
    bars.push_back(bar);
    pos += bar.length;
  }
  return bars;
}

std::vector<Violation> validate_leadsheet(const LeadSheet& ls) {
  std::vector<Violation> out;
  auto add = [&out](std::string invariant, Frame frame, std::string detail) {
    out.push_back({std::move(invariant), frame, std::move(detail)});
  };

  if (ls.total_frames <= 0)
    add("empty-piece", 0, "total_frames must be positive");
  if (ls.time_regions.empty() || ls.time_regions[0].onset != 0)
    add("time-regions-start", 0, "time regions must begin at frame 0");
  if (ls.key_regions.empty() || ls.key_regions[0].onset != 0)
    add("key-regions-start", 0, "key regions must begin at frame 0");

  for (size_t i = 1; i < ls.time_regions.size(); ++i)
    if (ls.time_regions[i].onset <= ls.time_regions[i - 1].onset)
      add("time-regions-sorted", ls.time_regions[i].onset,
          "time region onsets must strictly increase");
  for (size_t i = 1; i < ls.key_regions.size(); ++i)
    if (ls.key_regions[i].onset <= ls.key_regions[i - 1].onset)
      add("key-regions-sorted", ls.key_regions[i].onset,
          "key region onsets must strictly increase");

  for (const auto& kr : ls.key_regions)
    if (kr.key.fifths < -7 || kr.key.fifths > 7)
      add("key-fifths-range", kr.onset,
          "fifths " + std::to_string(kr.key.fifths) + " outside [-7, 7]");

  for (const auto& tr : ls.time_regions) {
    try {
      frames_per_bar(tr.time);
    } catch (const Error& e) {
      add("time-signature-grid", tr.onset, e.what());
    }
  }
  if (!out.empty()) return out;  // bar walk needs sane time regions

  // Melody must tile [0, total_frames) with no gap or overlap.
  Frame pos = 0;
  for (const auto& ev : ls.melody) {
    if (ev.onset != pos) {
      add(ev.onset > pos ? "melody-gap" : "melody-overlap", pos,
          "expected event at frame " + std::to_string(pos) + ", got onset " +
              std::to_string(ev.onset));
      pos = ev.onset;
    }
    if (ev.duration <= 0)
      add("melody-empty-event", ev.onset, "event duration must be positive");
    if (ev.pitch < 0 || ev.pitch > 127)
      add("melody-pitch-range", ev.onset,
          "pitch " + std::to_string(ev.pitch) + " outside 0..127");
    pos = ev.onset + ev.duration;
  }
  if (pos != ls.total_frames)
    add(pos < ls.total_frames ? "melody-gap" : "melody-overlap", pos,
        "melody covers " + std::to_string(pos) + " of " +
            std::to_string(ls.total_frames) + " frames");

  // Chord regions: strictly increasing onsets, no consecutive duplicates,
  // no rest regions (a rest is the absence of a region).
  for (size_t i = 0; i < ls.chord_regions.size(); ++i) {
    const auto& cr = ls.chord_regions[i];
    if (cr.onset < 0 || cr.onset >= ls.total_frames)
      add("chord-region-range", cr.onset, "onset outside the piece");
    if (cr.chord.is_rest())
      add("rest-chord-region", cr.onset,
          "chord regions may not carry the rest chord");
    if (i > 0) {
      if (cr.onset <= ls.chord_regions[i - 1].onset)
        add("chord-regions-sorted", cr.onset,
            "chord onsets must strictly increase");
      if (cr.chord == ls.chord_regions[i - 1].chord)
        add("duplicate-chord-region", cr.onset,
            "consecutive regions carry an equal chord symbol");
    }
  }

  // Bar structure: pickup shorter than the first bar, time changes on bar
  // boundaries, and bars tiling total_frames exactly.
  if (ls.pickup_frames < 0)
    add("pickup-range", 0, "pickup_frames must be nonnegative");
  else if (ls.pickup_frames >= frames_per_bar(ls.time_regions[0].time))
    add("pickup-range", 0, "pickup must be shorter than the first full bar");

  auto bars = bar_map(ls);
  for (const auto& tr : ls.time_regions) {
    if (tr.onset == 0) continue;
    bool on_boundary = std::any_of(
        bars.begin(), bars.end(),
        [&tr](const Bar& b) { return b.start == tr.onset && !b.is_pickup; });
    if (!on_boundary)
      add("time-change-mid-bar", tr.onset,
          "time-signature change must start a bar");
  }
  if (!bars.empty()) {
    const Bar& last = bars.back();
    if (!last.is_pickup && last.length != last.nominal_length)
      add("truncated-final-bar", last.start,
          "final bar has " + std::to_string(last.length) + " of " +
              std::to_string(last.nominal_length) + " frames");
  }

  return out;
}

const TimeSignature& time_at(const LeadSheet& ls, Frame frame) {
  const TimeRegion* r = active_region(ls.time_regions, frame);
  if (!r) throw ContractViolation("no time signature at frame " +
                                  std::to_string(frame));
  return r->time;
}

const KeySignature& key_at(const LeadSheet& ls, Frame frame) {
  const KeyRegion* r = active_region(ls.key_regions, frame);
  if (!r) throw ContractViolation("no key signature at frame " +
                                  std::to_string(frame));
  return r->key;
}

ChordSymbol chord_at(const LeadSheet& ls, Frame frame) {
  const ChordRegion* r = active_region(ls.chord_regions, frame);
  return r ? r->chord : ChordSymbol::rest();
}

}  // namespace melharm
