#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "melharm/leadsheet.hpp"

namespace melharm {

struct CorpusPiece {
  std::string id;
  LeadSheet sheet;

  bool operator==(const CorpusPiece&) const = default;
};

/// An ordered collection of lead sheets with unique ids and a record of
/// where each piece came from.
struct Corpus {
  std::vector<CorpusPiece> pieces;
  std::map<std::string, std::string> provenance;  ///< id -> source path

  bool operator==(const Corpus&) const = default;
};

/// Why corpus_filter dropped a piece.
enum class FilterReason {
  kNoChords,       ///< no non-rest chord region at all
  kStaticHarmony,  ///< some 4-bar window with no chord switch
};

struct FilterOutcome {
  Corpus kept;
  std::vector<std::pair<std::string, FilterReason>> removed;
};

const char* filter_reason_name(FilterReason reason);

/// Keep exactly the pieces that (a) contain at least one chord region and
/// (b) switch chords within every window of 4 consecutive full bars (no
/// window may lack a chord onset after its first frame).
FilterOutcome corpus_filter_detailed(const Corpus& corpus);
Corpus corpus_filter(const Corpus& corpus);

/// Deterministic seeded shuffle, then split: the first
/// round(train_fraction x N) pieces (clamped so both sides are non-empty)
/// form the training corpus. Throws ContractViolation for corpora with
/// fewer than 2 pieces or a fraction outside (0, 1).
std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus,
                                       double train_fraction, uint64_t seed);

}  // namespace melharm
