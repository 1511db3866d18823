#pragma once

// Subcommands of the placeone tool. Each returns a report envelope and the
// process exit code: 0 complete, 2 input rejected, 3 a checked statement
// failed, 4 resource cap exceeded.

#include <functional>
#include <string>
#include <vector>

#include "placeone/report.hpp"

namespace placeone {

inline constexpr const char* kToolName = "placeone";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { exit_ok = 0, exit_input = 2, exit_violation = 3, exit_cap = 4 };

struct CommandOptions {
  EngineOptions engine;
  bool timing = false;  // timing is omitted by default so output is reproducible
  int jobs = 1;
};

struct CommandResult {
  Json envelope;
  int exit_code = exit_ok;
};

CommandResult cmd_analyze(const std::string& input, const CommandOptions& opt = {});
CommandResult cmd_pencil(const std::string& input, const CommandOptions& opt = {});
CommandResult cmd_census(const std::string& input, const CommandOptions& opt = {});
CommandResult cmd_implicitize(const std::string& xt, const std::string& yt, const CommandOptions& opt = {});
CommandResult cmd_pair(const std::string& f, const std::string& g, const CommandOptions& opt = {});
CommandResult cmd_lemma(const std::string& H, const CommandOptions& opt = {});
/// Compares the main intersection routes with the oracles, at the given
/// point or at every rational common zero.
CommandResult cmd_verify(const std::string& f, const std::string& g,
                         const std::optional<std::pair<std::string, std::string>>& at = std::nullopt,
                         const CommandOptions& opt = {});

struct CorpusSpec {
  int a_min = 2, a_max = 7;  // degree of x(t); y(t) has degree b < a with gcd(a, b) = 1
  int coeff_bound = 3;
  long count = 100;
  unsigned seed = 0;
};

/// Parametrization t -> (x(t), y(t)) of candidate k of the stream.
struct CorpusCandidate {
  long candidate = 0;
  int a = 0, b = 0;
  QPoly x_of_t, y_of_t;
};

CorpusCandidate corpus_candidate(const CorpusSpec& spec, long k);

/// Analyzes one candidate; nullopt when it is discarded.
std::optional<CorpusMemberRecord> corpus_member(const CorpusCandidate& c, const EngineOptions& opt);

struct CorpusResult {
  std::vector<CorpusMemberRecord> members;
  CorpusSummaryRecord summary;
  int exit_code = exit_ok;
};

/// Runs the corpus. `emit` receives one envelope per accepted member in
/// order and finally the summary envelope.
CorpusResult cmd_corpus(const CorpusSpec& spec, const CommandOptions& opt = {},
                        const std::function<void(const Json&)>& emit = {});

/// The summary as an aligned table for stderr.
std::string corpus_table(const CorpusSummaryRecord& s);

}  // namespace placeone
