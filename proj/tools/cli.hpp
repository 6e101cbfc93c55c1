#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "permldpc/girth_oracle.hpp"
#include "permldpc/proto_matrix.hpp"
#include "permldpc/residue_set.hpp"

namespace permldpc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvariant = 2,
  kDisagreement = 3,
};

enum class Mode { build, analyze, search, export_alist };

enum class Strategy { greedy_b2, exhaustive, random };

struct JobConfig {
  Mode mode = Mode::build;
  std::string generator;                 // cycle notation, cycle:<n> or id:<n>
  std::optional<std::size_t> domain;     // n, when the notation leaves it open
  std::string coefficients = "{0, 1}";   // A
  std::string exponents;                 // I
  std::vector<ColumnExtension> extensions;
  std::string output;
  std::string proto_path;                // analyze/export a stored proto-matrix
  std::string alist_path;                // analyze an external matrix (oracle only)
};

struct SearchSpec {
  std::uint64_t modulus = 0;
  std::size_t target_girth = 12;
  std::size_t max_set_size = 5;
  std::size_t rows = 2;
  Strategy strategy = Strategy::greedy_b2;
  std::uint64_t seed = 0;
  std::size_t samples = 200;      // random strategy
  std::size_t limit = 20000;      // exhaustive strategy
  std::size_t top = 10;
  std::size_t jobs = 1;
  std::optional<std::string> coefficients;
};

struct Candidate {
  std::size_t index = 0;
  ResidueSet coefficients;
  ResidueSet exponents;
  Girth girth;
  CodeParameters code;
};

struct SearchResult {
  std::vector<Candidate> candidates;
  std::vector<std::string> notes;
  // Candidates where the closed-form classification and the oracle differ.
  std::vector<std::size_t> disagreements;
};

/// Parses `row:exp,row:exp`. Throws ParseError.
std::vector<ColumnExtension> parse_extensions(std::string_view text);

struct ConfigEntry {
  std::string key;
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;  // of the value's first character
};

/// Reads `key = value` lines (`#` comments). Keys use the long flag names.
/// Throws ParseError with the line and column of the offending token.
std::vector<ConfigEntry> parse_config(std::string_view text);

/// The proto-matrix described by `config`: a stored proto file, or the
/// regular construction from (f, A, I) followed by any extensions.
ProtoMatrix make_proto(const JobConfig& config);

SearchResult run_search(const SearchSpec& spec);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permldpc::cli
