#include "melharm/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "melharm/errors.hpp"

namespace melharm {

const char* filter_reason_name(FilterReason reason) {
  switch (reason) {
    case FilterReason::kNoChords:
      return "no-chords";
    case FilterReason::kStaticHarmony:
      return "static-harmony";
  }
  return "unknown";
}

namespace {

bool has_static_window(const LeadSheet& ls) {
  std::vector<Bar> bars = bar_map(ls);
  std::vector<Bar> full;
  for (const auto& b : bars)
    if (!b.is_pickup) full.push_back(b);
  if (full.size() < 4) return false;

  for (size_t w = 0; w + 4 <= full.size(); ++w) {
    Frame start = full[w].start;
    Frame end = full[w + 3].start + full[w + 3].length;
    bool switched = std::any_of(
        ls.chord_regions.begin(), ls.chord_regions.end(),
        [start, end](const ChordRegion& cr) {
          return cr.onset > start && cr.onset < end;
        });
    if (!switched) return true;
  }
  return false;
}

}  // namespace

FilterOutcome corpus_filter_detailed(const Corpus& corpus) {
  FilterOutcome outcome;
  for (const auto& piece : corpus.pieces) {
    bool any_chord = std::any_of(
        piece.sheet.chord_regions.begin(), piece.sheet.chord_regions.end(),
        [](const ChordRegion& cr) { return !cr.chord.is_rest(); });
    if (!any_chord) {
      outcome.removed.emplace_back(piece.id, FilterReason::kNoChords);
      continue;
    }
    if (has_static_window(piece.sheet)) {
      outcome.removed.emplace_back(piece.id, FilterReason::kStaticHarmony);
      continue;
    }
    outcome.kept.pieces.push_back(piece);
    auto it = corpus.provenance.find(piece.id);
    if (it != corpus.provenance.end())
      outcome.kept.provenance[piece.id] = it->second;
  }
  return outcome;
}

Corpus corpus_filter(const Corpus& corpus) {
  return corpus_filter_detailed(corpus).kept;
}

std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus,
                                       double train_fraction, uint64_t seed) {
  if (corpus.pieces.size() < 2)
    throw ContractViolation("cannot split a corpus of " +
                            std::to_string(corpus.pieces.size()) + " pieces");
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw ContractViolation("train_fraction must lie in (0, 1)");

  std::vector<size_t> order(corpus.pieces.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  // Fisher-Yates with a pinned update rule; std::shuffle is
  // implementation-defined and would break cross-platform determinism.
  std::mt19937_64 rng(seed);
  for (size_t i = order.size() - 1; i > 0; --i) {
    size_t j = static_cast<size_t>(rng() % (i + 1));
    std::swap(order[i], order[j]);
  }

  size_t n = corpus.pieces.size();
  auto n_train = static_cast<size_t>(
      std::llround(train_fraction * static_cast<double>(n)));
  n_train = std::clamp<size_t>(n_train, 1, n - 1);

  std::pair<Corpus, Corpus> split;
  for (size_t k = 0; k < n; ++k) {
    const auto& piece = corpus.pieces[order[k]];
    Corpus& side = k < n_train ? split.first : split.second;
    side.pieces.push_back(piece);
    auto it = corpus.provenance.find(piece.id);
    if (it != corpus.provenance.end())
      side.provenance[piece.id] = it->second;
  }
  return split;
}

}  // namespace melharm
