#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "melharm/corpus.hpp"
#include "melharm/leadsheet.hpp"

namespace melharm {

/// Parse a MusicXML document from the supported subset into a lead sheet:
/// one monophonic part; divisions, key (fifths), time (beats/beat-type),
/// note (pitch, duration, rest, tie) and harmony (root + kind + optional
/// bass) elements. Durations are snapped to the sixteenth-note grid, tied
/// notes merge into one event, and consecutive equal harmony symbols
/// collapse into one region.
///
/// Grace notes, lyrics, repeats and other out-of-subset features are
/// skipped with a warning. Polyphony (chorded notes, backup, extra parts)
/// raises UnsupportedContentError; off-grid durations raise
/// QuantizationError naming the measure.
LeadSheet parse_musicxml(const std::string& document,
                         std::vector<std::string>* warnings = nullptr);

struct IngestOutcome {
  Corpus corpus;
  /// (file stem, error message) for files that failed to parse.
  std::vector<std::pair<std::string, std::string>> failures;
  std::vector<std::string> warnings;
};

/// Parse every .xml/.musicxml/.json lead sheet in a directory (sorted by
/// name; the file stem becomes the piece id).
IngestOutcome ingest_directory(const std::filesystem::path& dir);

}  // namespace melharm
