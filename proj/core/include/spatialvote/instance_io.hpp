#pragma once

#include <string>
#include <vector>

#include "spatialvote/election.hpp"

namespace spatialvote {

/// Bipolar constraint matrix plus threshold, the input of the feasibility
/// reduction.
struct FlsInput {
  std::vector<std::vector<int>> rows;
  int k = 0;
};

/// Instance files are JSON objects {"d", "p", "voters", "candidates"} with
/// every coordinate either a JSON integer or an exact "num/den" string.
/// Floating point values are rejected. Unknown keys are ignored so annotated
/// files (e.g. reduction output carrying "k") still load.
ElectionInstance parse_instance_json(const std::string& text);
ElectionInstance load_instance(const std::string& path);
std::string instance_to_json(const ElectionInstance& inst);
void save_instance(const ElectionInstance& inst, const std::string& path);

/// Scoring files: {"q": [[int, ...], ...]}, one row per voter.
ScoringMatrix parse_scoring_json(const std::string& text);
ScoringMatrix load_scoring(const std::string& path);

/// Reduction matrix files: {"A": [[1, -1, ...], ...], "k": int}.
FlsInput parse_fls_json(const std::string& text);
FlsInput load_fls(const std::string& path);

/// Instance serialization with the reduction threshold alongside, still
/// loadable as a plain instance.
std::string fls_instance_to_json(const ElectionInstance& inst, int k);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace spatialvote
