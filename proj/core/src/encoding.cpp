#include "melharm/encoding.hpp"

#include <algorithm>
#include <set>

#include "melharm/corpus.hpp"
#include "melharm/errors.hpp"

namespace melharm {

namespace {

constexpr uint64_t kFnvOffset = 1469598103934665603ull;
constexpr uint64_t kFnvPrime = 1099511628211ull;

uint64_t fnv1a(uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  h ^= static_cast<unsigned char>('\n');
  h *= kFnvPrime;
  return h;
}

}  // namespace

ChordVocab::ChordVocab() : ChordVocab(std::vector<std::string>{}) {}

ChordVocab::ChordVocab(std::vector<std::string> symbols) {
  symbols_.push_back(rest_symbol());
  for (auto& s : symbols) {
    if (s == rest_symbol()) continue;
    symbols_.push_back(std::move(s));
  }
  std::sort(symbols_.begin() + 1, symbols_.end());
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()),
                 symbols_.end());
  for (size_t i = 0; i < symbols_.size(); ++i)
    index_[symbols_[i]] = static_cast<int>(i);
}

const std::string& ChordVocab::rest_symbol() {
  static const std::string rest = "N.C.";
  return rest;
}

const std::string& ChordVocab::symbol(int index) const {
  if (index < 0 || static_cast<size_t>(index) >= symbols_.size())
    throw ContractViolation("chord index " + std::to_string(index) +
                            " outside vocabulary of size " +
                            std::to_string(symbols_.size()));
  return symbols_[static_cast<size_t>(index)];
}

int ChordVocab::index(const std::string& symbol) const {
  int i = find(symbol);
  if (i < 0)
    throw EncodingError("chord symbol '" + symbol +
                        "' is not in the vocabulary");
  return i;
}

int ChordVocab::find(const std::string& symbol) const {
  auto it = index_.find(symbol);
  return it == index_.end() ? -1 : it->second;
}

uint64_t ChordVocab::hash() const {
  uint64_t h = kFnvOffset;
  for (const auto& s : symbols_) h = fnv1a(h, s);
  return h;
}

ChordVocab build_vocab(const Corpus& corpus) {
  std::set<std::string> symbols;
  for (const auto& piece : corpus.pieces)
    for (const auto& cr : piece.sheet.chord_regions)
      if (!cr.chord.is_rest()) symbols.insert(cr.chord.text);
  return ChordVocab(std::vector<std::string>(symbols.begin(), symbols.end()));
}

int beat_strength(const TimeSignature& ts, Frame frame_in_bar) {
  Frame bar_len = frames_per_bar(ts);
  if (frame_in_bar < 0 || frame_in_bar >= bar_len)
    throw ContractViolation("frame_in_bar " + std::to_string(frame_in_bar) +
                            " outside bar of " + std::to_string(bar_len) +
                            " frames");

  bool compound = ts.numerator % 3 == 0 && ts.numerator > 3 &&
                  ts.denominator == 8;
  Frame frames_per_beat = compound ? 6 : 16 / ts.denominator;
  int beats = compound ? ts.numerator / 3 : ts.numerator;

  if (frame_in_bar % frames_per_beat != 0) return 0;
  Frame beat_index = frame_in_bar / frames_per_beat;
  if (beat_index == 0) return 3;
  if (beats % 2 == 0 && beat_index == beats / 2) return 2;
  return 1;
}

namespace {

FrameEncoding encode_impl(const LeadSheet& ls, const ChordVocab& vocab,
                          bool lenient, int64_t* oov_frames) {
  FrameEncoding enc;
  size_t total = static_cast<size_t>(ls.total_frames);
  enc.melody.assign(total, 0);
  enc.beat.assign(total, 0);
  enc.key.assign(total, 0);
  enc.chord.assign(total, 0);
  enc.vocab_hash = vocab.hash();

  for (const auto& ev : ls.melody)
    for (Frame f = ev.onset; f < ev.onset + ev.duration; ++f)
      if (f >= 0 && f < ls.total_frames)
        enc.melody[static_cast<size_t>(f)] = ev.pitch;

  for (const auto& bar : bar_map(ls)) {
    const TimeSignature& ts = time_at(ls, bar.start);
    for (Frame f = bar.start; f < bar.start + bar.length; ++f)
      enc.beat[static_cast<size_t>(f)] =
          beat_strength(ts, bar.frame_in_bar(f));
  }

  size_t key_idx = 0;
  for (Frame f = 0; f < ls.total_frames; ++f) {
    while (key_idx + 1 < ls.key_regions.size() &&
           ls.key_regions[key_idx + 1].onset <= f)
      ++key_idx;
    enc.key[static_cast<size_t>(f)] = ls.key_regions.empty()
                                          ? 0
                                          : ls.key_regions[key_idx].key.fifths;
  }

  if (oov_frames) *oov_frames = 0;
  for (size_t i = 0; i < ls.chord_regions.size(); ++i) {
    const auto& cr = ls.chord_regions[i];
    int idx;
    if (lenient) {
      idx = cr.chord.is_rest() ? 0 : vocab.find(cr.chord.text);
      if (idx < 0) idx = 0;
    } else {
      idx = cr.chord.is_rest() ? 0 : vocab.index(cr.chord.text);
    }
    Frame end = i + 1 < ls.chord_regions.size() ? ls.chord_regions[i + 1].onset
                                                : ls.total_frames;
    for (Frame f = cr.onset; f < end; ++f) {
      if (f < 0 || f >= ls.total_frames) continue;
      enc.chord[static_cast<size_t>(f)] = idx;
      if (oov_frames && idx == 0 && !cr.chord.is_rest()) ++*oov_frames;
    }
  }
  return enc;
}

}  // namespace

FrameEncoding encode(const LeadSheet& ls, const ChordVocab& vocab) {
  return encode_impl(ls, vocab, /*lenient=*/false, nullptr);
}

FrameEncoding encode_lenient(const LeadSheet& ls, const ChordVocab& vocab,
                             int64_t* oov_frames) {
  return encode_impl(ls, vocab, /*lenient=*/true, oov_frames);
}

std::vector<ChordRegion> decode_chords(const std::vector<int>& chord_frames,
                                       const ChordVocab& vocab) {
  std::vector<ChordRegion> regions;
  int prev = -1;
  for (size_t f = 0; f < chord_frames.size(); ++f) {
    int idx = chord_frames[f];
    if (idx != prev) {
      if (idx != 0)
        regions.push_back({static_cast<Frame>(f),
                           parse_chord_symbol(vocab.symbol(idx))});
      prev = idx;
    }
  }
  return regions;
}

std::vector<ChordRegion> decode_chords_merged(
    const std::vector<int>& chord_frames, const ChordVocab& vocab) {
  auto regions = decode_chords(chord_frames, vocab);
  std::vector<ChordRegion> merged;
  for (auto& r : regions) {
    if (!merged.empty() && merged.back().chord == r.chord) continue;
    merged.push_back(std::move(r));
  }
  return merged;
}

std::vector<BeatBar> bars_from_beat(const std::vector<int>& beat) {
  std::vector<BeatBar> bars;
  size_t first_downbeat = beat.size();
  for (size_t f = 0; f < beat.size(); ++f) {
    if (beat[f] == 3) {
      first_downbeat = f;
      break;
    }
  }
  if (first_downbeat > 0 && !beat.empty())
    bars.push_back({0, static_cast<Frame>(
                           std::min(first_downbeat, beat.size())),
                    true});
  for (size_t f = first_downbeat; f < beat.size(); ++f) {
    if (beat[f] == 3) {
      if (!bars.empty() && !bars.back().is_pickup)
        bars.back().end = static_cast<Frame>(f);
      bars.push_back({static_cast<Frame>(f), static_cast<Frame>(beat.size()),
                      false});
    }
  }
  return bars;
}

}  // namespace melharm
