#pragma once

#include <string>

#include "fcgram/convergence.hpp"

namespace fcgram {

/// JSON manifest for a study configuration. Lossless round-trip: b is kept
/// as an exact "p/q" string, n_list as integers; no timestamps or seeds, so
/// identical configs serialize byte-identically.
std::string study_to_json(const StudyConfig& cfg);
StudyConfig study_from_json(const std::string& text);

void save_manifest(const std::string& path, const StudyConfig& cfg);
StudyConfig load_manifest(const std::string& path);

}  // namespace fcgram
