#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "permldpc/binary_matrix.hpp"
#include "permldpc/cycle_analysis.hpp"
#include "permldpc/error.hpp"
#include "permldpc/permutation.hpp"

namespace permldpc::cli {

namespace {

// Bad flag combinations or values that are not a parse of some literal.
class UsageError : public Error {
 public:
  using Error::Error;
};

const std::vector<std::string> kKeys = {
    "mode", "f",    "n",    "A",        "I",         "extend",       "out",
    "proto", "alist", "m",  "target-girth", "max-set-size", "rows", "strategy",
    "seed", "samples", "limit", "top",   "jobs",
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

struct Setting {
  std::string value;
  // Position of the value in the config file; unset for command-line flags.
  std::size_t line = 0;
  std::size_t column = 0;
};

// Runs `fn(value)`, re-anchoring parse errors at the setting's origin.
template <class F>
auto interpret(const std::string& key, const Setting& s, F fn) -> decltype(fn(s.value)) {
  try {
    return fn(s.value);
  } catch (const ParseError& e) {
    if (s.line == 0) throw ParseError("--" + key + ": " + e.detail(), e.line(), e.column());
    throw ParseError(key + ": " + e.detail(), s.line, s.column + e.column() - 1);
  }
}

std::uint64_t parse_unsigned(std::string_view text) {
  const std::string_view t = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw ParseError("expected a non-negative integer, got '" + std::string(text) + "'", 1, 1);
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

Mode parse_mode(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "build") return Mode::build;
  if (t == "analyze") return Mode::analyze;
  if (t == "search") return Mode::search;
  if (t == "export") return Mode::export_alist;
  throw ParseError("unknown mode '" + std::string(t) + "' (build|analyze|search|export)", 1, 1);
}

Strategy parse_strategy(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "greedy_b2") return Strategy::greedy_b2;
  if (t == "exhaustive") return Strategy::exhaustive;
  if (t == "random") return Strategy::random;
  throw ParseError("unknown strategy '" + std::string(t) + "' (greedy_b2|exhaustive|random)", 1, 1);
}

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::greedy_b2: return "greedy_b2";
    case Strategy::exhaustive: return "exhaustive";
    case Strategy::random: return "random";
  }
  return "?";
}

Permutation make_generator(const JobConfig& c) {
  if (c.generator.empty()) throw UsageError("missing --f (the generator permutation)");
  return parse_permutation(c.generator, c.domain);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string oracle_cycles(const TannerGraph& g) {
  std::string out = "oracle cycles:";
  for (std::size_t len = 4; len <= 12; len += 2)
    out += " " + std::to_string(len) + "=" + yes_no(oracle::has_cycle_of_length(g, len));
  return out;
}

std::string describe(const CodeParameters& p) {
  return "n=" + std::to_string(p.length) + " k=" + std::to_string(p.dimension) +
         " rate=" + to_string(p.rate);
}

int cmd_build(const JobConfig& config, std::ostream& out) {
  const ProtoMatrix p = make_proto(config);
  const BinaryMatrix h = expand(p);
  out << "proto: " << p.block_rows() << "x" << p.block_cols() << " blocks, lift " << p.lift() << '\n';
  out << describe(code_parameters(h)) << '\n';
  if (!config.output.empty()) {
    write_file(config.output + ".proto", format_proto(p));
    write_file(config.output + ".alist", to_alist(h));
    out << "wrote " << config.output << ".proto\n";
    out << "wrote " << config.output << ".alist\n";
  }
  return kOk;
}

int cmd_analyze(const JobConfig& config, std::ostream& out) {
  if (!config.alist_path.empty()) {
    const TannerGraph g(parse_alist(read_file(config.alist_path)));
    out << "theorem: not applicable (no proto-matrix)\n";
    out << "oracle girth: " << to_string(oracle::girth(g)) << '\n';
    out << oracle_cycles(g) << '\n';
    return kOk;
  }
  const ProtoMatrix p = make_proto(config);
  const CycleReport report = classify(p);
  const TannerGraph g(expand(p));
  const Girth truth = oracle::girth(g);
  bool agree = report.girth == truth;
  for (const auto& [len, present] : report.present)
    agree = agree && present == oracle::has_cycle_of_length(g, len);
  out << report.to_text();
  out << "oracle girth: " << to_string(truth) << '\n';
  out << oracle_cycles(g) << '\n';
  out << "agreement: " << yes_no(agree) << '\n';
  return agree ? kOk : kDisagreement;
}

int cmd_export(const JobConfig& config, std::ostream& out) {
  const std::string text = to_alist(expand(make_proto(config)));
  if (config.output.empty()) {
    out << text;
  } else {
    write_file(config.output, text);
    out << "wrote " << config.output << '\n';
  }
  return kOk;
}

int cmd_search(const SearchSpec& spec, std::ostream& out) {
  const SearchResult result = run_search(spec);
  out << "search m=" << spec.modulus << " target=" << spec.target_girth
      << " strategy=" << to_string(spec.strategy) << " rows=" << spec.rows << " seed=" << spec.seed
      << '\n';
  for (const std::string& note : result.notes) out << "note: " << note << '\n';
  if (result.candidates.empty()) out << "no candidates\n";
  std::size_t rank = 0;
  for (const Candidate& c : result.candidates) {
    if (rank == spec.top) break;
    out << '#' << ++rank << " A=" << to_string(c.coefficients) << " I=" << to_string(c.exponents)
        << " girth=" << to_string(c.girth) << ' ' << describe(c.code) << '\n';
  }
  for (std::size_t index : result.disagreements)
    out << "disagreement: candidate " << index << " classified differently by the oracle\n";
  return result.disagreements.empty() ? kOk : kDisagreement;
}

// Lexicographic (size-1)-subsets of 1..m-1, each extended by 0.
std::vector<ResidueSet> exhaustive_sets(std::uint64_t m, std::size_t size, std::size_t limit,
                                        bool& capped) {
  std::vector<ResidueSet> out;
  capped = false;
  if (size == 0 || size > m) return out;
  const std::size_t k = size - 1;
  std::vector<Residue> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i + 1;
  while (true) {
    if (out.size() == limit) {
      capped = true;
      return out;
    }
    std::vector<Residue> elems{0};
    elems.insert(elems.end(), pick.begin(), pick.end());
    out.push_back(ResidueSet::collect(m, elems));
    std::size_t pos = k;
    while (pos > 0 && pick[pos - 1] == m - 1 - (k - pos)) --pos;
    if (pos == 0) return out;
    ++pick[pos - 1];
    for (std::size_t i = pos; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
}

std::vector<ResidueSet> random_sets(std::uint64_t m, std::size_t size, std::size_t samples,
                                    std::uint64_t seed) {
  std::vector<ResidueSet> out;
  if (size == 0 || size > m) return out;
  std::mt19937_64 rng(seed);
  std::vector<Residue> pool(m - 1);
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i + 1;
  std::set<std::vector<Residue>> seen;
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i + 1 < size; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    std::vector<Residue> elems(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size - 1));
    elems.push_back(0);
    const ResidueSet set = ResidueSet::collect(m, elems);
    const std::vector<Residue> key(set.elements().begin(), set.elements().end());
    if (seen.insert(key).second) out.push_back(set);
  }
  return out;
}

bool rate_greater(const Rational& a, const Rational& b) {
  return static_cast<unsigned __int128>(a.num) * b.den > static_cast<unsigned __int128>(b.num) * a.den;
}

}  // namespace

std::vector<ColumnExtension> parse_extensions(std::string_view text) {
  std::vector<ColumnExtension> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t column = pos + 1;
    const std::string_view t = trim(item);
    if (t.empty()) {
      if (end == text.size() && out.empty() && trim(text).empty()) break;
      throw ParseError("empty extension entry", 1, column);
    }
    const std::size_t colon = t.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected row:exponent", 1, column);
    const std::string_view row = trim(t.substr(0, colon));
    const std::string_view exp = trim(t.substr(colon + 1));
    ColumnExtension e;
    auto r1 = std::from_chars(row.data(), row.data() + row.size(), e.block_row);
    auto r2 = std::from_chars(exp.data(), exp.data() + exp.size(), e.exponent);
    if (row.empty() || r1.ec != std::errc() || r1.ptr != row.data() + row.size())
      throw ParseError("bad block row '" + std::string(row) + "'", 1, column);
    if (exp.empty() || r2.ec != std::errc() || r2.ptr != exp.data() + exp.size())
      throw ParseError("bad exponent '" + std::string(exp) + "'", 1, column);
    out.push_back(e);
    pos = end + 1;
  }
  return out;
}

std::vector<ConfigEntry> parse_config(std::string_view text) {
  std::vector<ConfigEntry> out;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    ++line_no;
    begin = end + 1;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    const std::size_t eq = line.find('=');
    const std::size_t key_col = line.find_first_not_of(" \t") + 1;
    if (eq == std::string_view::npos) throw ParseError("expected key = value", line_no, key_col);
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ParseError("missing key before '='", line_no, key_col);
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
      throw ParseError("unknown key '" + key + "'", line_no, key_col);
    std::size_t start = line.find_first_not_of(" \t", eq + 1);
    if (start == std::string_view::npos) start = line.size();
    std::string_view value = trim(line.substr(start));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
      ++start;
    }
    out.push_back(ConfigEntry{key, std::string(value), line_no, start + 1});
  }
  return out;
}

ProtoMatrix make_proto(const JobConfig& c) {
  const Permutation f = make_generator(c);
  if (!c.proto_path.empty()) {
    const ProtoMatrix p = parse_proto(read_file(c.proto_path), f);
    return extend_irregular(p, c.extensions);
  }
  if (c.exponents.empty()) throw UsageError("missing --I (the exponent set)");
  const std::uint64_t m = f.order();
  const ResidueSet a = parse_residue_set(c.coefficients, m);
  const ResidueSet i = parse_residue_set(c.exponents, m);
  return extend_irregular(build_regular(f, a, i), c.extensions);
}

SearchResult run_search(const SearchSpec& spec) {
  if (spec.modulus < 2) throw UsageError("search needs --m of at least 2");
  if (spec.target_girth < 4 || spec.target_girth > 12 || spec.target_girth % 2 != 0)
    throw UsageError("--target-girth must be one of 4, 6, 8, 10, 12; these constructions have girth at most 12");
  if (spec.max_set_size == 0) throw UsageError("--max-set-size must be positive");
  const std::uint64_t m = spec.modulus;
  const Permutation f = Permutation::m_cycle(m);
  SearchResult result;

  ResidueSet a;
  if (spec.coefficients) {
    a = parse_residue_set(*spec.coefficients, m);
  } else if (spec.rows <= 2) {
    a = ResidueSet(m, {0, 1});
  } else {
    const GreedyB2 g = greedy_b2(spec.rows);
    try {
      a = g.reduce(m);
    } catch (const MalformedSetError&) {
      std::vector<std::int64_t> consecutive(spec.rows);
      for (std::size_t k = 0; k < spec.rows; ++k) consecutive[k] = static_cast<std::int64_t>(k);
      a = ResidueSet(m, consecutive);
    }
  }
  if (a.size() > 2 && spec.target_girth == 12) {
    result.notes.push_back("with more than two block rows, girth 12 requires A to be a B2 set as well");
    if (!is_bt_set(a, 2)) {
      result.notes.push_back("A = " + to_string(a) + " is not a B2 set mod " + std::to_string(m) +
                             ", so every candidate has an 8-cycle");
      return result;
    }
  }

  std::vector<ResidueSet> sets;
  switch (spec.strategy) {
    case Strategy::greedy_b2:
      for (std::size_t size = std::min<std::size_t>(spec.max_set_size, 62); size >= 1; --size) {
        const GreedyB2 g = greedy_b2(size);
        try {
          sets.push_back(g.reduce(m));
        } catch (const MalformedSetError&) {
          result.notes.push_back("greedy set of size " + std::to_string(size) + " collides mod " +
                                 std::to_string(m));
          continue;
        }
        if (m < g.min_odd_modulus || m % 2 == 0)
          result.notes.push_back("greedy set of size " + std::to_string(size) +
                                 " is only guaranteed B2 for odd m >= " +
                                 std::to_string(g.min_odd_modulus));
      }
      break;
    case Strategy::exhaustive: {
      bool capped = false;
      sets = exhaustive_sets(m, spec.max_set_size, spec.limit, capped);
      if (capped) result.notes.push_back("exhaustive enumeration stopped after " + std::to_string(spec.limit) + " sets");
      break;
    }
    case Strategy::random:
      sets = random_sets(m, spec.max_set_size, spec.samples, spec.seed);
      break;
  }
  if (sets.empty()) {
    result.notes.push_back("no exponent sets of the requested size exist mod " + std::to_string(m));
    return result;
  }

  struct Evaluation {
    bool keep = false;
    bool disagree = false;
    Candidate candidate;
  };
  std::vector<Evaluation> evals(sets.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < sets.size(); k = next++) {
      const ProtoMatrix p = build_regular(f, a, sets[k]);
      const Girth claimed = classify(p).girth;
      Evaluation& e = evals[k];
      if (claimed < Girth(spec.target_girth)) continue;
      const BinaryMatrix h = expand(p);
      const Girth verified = oracle::girth(h);
      e.disagree = verified != claimed;
      e.keep = !e.disagree;
      e.candidate = Candidate{k, a, sets[k], verified, code_parameters(h)};
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(spec.jobs, sets.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (std::size_t k = 0; k < evals.size(); ++k) {
    if (evals[k].disagree) result.disagreements.push_back(k);
    if (evals[k].keep) result.candidates.push_back(std::move(evals[k].candidate));
  }
  std::stable_sort(result.candidates.begin(), result.candidates.end(),
                   [](const Candidate& x, const Candidate& y) { return rate_greater(x.code.rate, y.code.rate); });
  if (result.candidates.empty())
    result.notes.push_back("no candidate reaches girth " + std::to_string(spec.target_girth));
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Permutation-based LDPC constructions with girth analysis", "permldpc");
  std::map<std::string, std::string> flags;
  std::string config_path;
  app.add_option("--config", config_path, "key = value file; flags override it");
  auto flag = [&](const std::string& key, const std::string& help) {
    const std::string names = key.size() == 1 ? "-" + key + ",--" + key : "--" + key;
    return app.add_option(names, flags[key], help);
  };
  flag("mode", "build | analyze | search | export");
  flag("f", "generator: \"(0 1 2)(3 4)\", cycle:<n> or id:<n>");
  flag("n", "domain size when the cycle notation leaves fixed points implicit");
  flag("A", "coefficient set, default {0, 1}");
  flag("I", "exponent set, e.g. {0, 1, 4, 6, 13}");
  flag("extend", "appended column blocks, row:exp,row:exp");
  flag("out", "output path (build: prefix for .proto/.alist; export: alist file)");
  flag("proto", "read the proto-matrix from this file instead of (A, I)");
  flag("alist", "analyze an alist matrix with the oracle only");
  flag("m", "search: modulus (the generator is the m-cycle)");
  flag("target-girth", "search: required girth, at most 12");
  flag("max-set-size", "search: largest |I|");
  flag("rows", "search: number of block rows |A|");
  flag("strategy", "search: greedy_b2 | exhaustive | random");
  flag("seed", "search: random seed");
  flag("samples", "search: random sets to draw");
  flag("limit", "search: cap on exhaustively enumerated sets");
  flag("top", "search: candidates to print");
  flag("jobs", "search: worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    std::map<std::string, Setting> settings;
    if (!config_path.empty())
      for (ConfigEntry& e : parse_config(read_file(config_path)))
        settings[e.key] = Setting{std::move(e.value), e.line, e.column};
    for (const std::string& key : kKeys)
      if (app.count("--" + key) > 0) settings[key] = Setting{flags[key], 0, 0};

    auto has = [&](const std::string& key) { return settings.count(key) > 0; };
    auto text_of = [&](const std::string& key) { return settings.at(key).value; };
    auto number = [&](const std::string& key) {
      return interpret(key, settings.at(key), [](const std::string& v) { return parse_unsigned(v); });
    };

    if (!has("mode")) throw UsageError("missing --mode (build|analyze|search|export)");
    const Mode mode = interpret("mode", settings.at("mode"), [](const std::string& v) { return parse_mode(v); });

    if (mode == Mode::search) {
      SearchSpec spec;
      if (!has("m")) throw UsageError("search needs --m");
      spec.modulus = number("m");
      if (has("target-girth")) spec.target_girth = number("target-girth");
      if (has("max-set-size")) spec.max_set_size = number("max-set-size");
      if (has("rows")) spec.rows = number("rows");
      if (has("seed")) spec.seed = number("seed");
      if (has("samples")) spec.samples = number("samples");
      if (has("limit")) spec.limit = number("limit");
      if (has("top")) spec.top = number("top");
      if (has("jobs")) spec.jobs = number("jobs");
      if (has("strategy"))
        spec.strategy = interpret("strategy", settings.at("strategy"),
                                  [](const std::string& v) { return parse_strategy(v); });
      if (has("A")) {
        spec.coefficients = text_of("A");
        interpret("A", settings.at("A"), [&](const std::string& v) { return parse_residue_set(v, spec.modulus); });
      }
      return cmd_search(spec, out);
    }

    JobConfig config;
    config.mode = mode;
    if (has("f")) config.generator = text_of("f");
    if (has("n")) config.domain = number("n");
    if (has("A")) config.coefficients = text_of("A");
    if (has("I")) config.exponents = text_of("I");
    if (has("out")) config.output = text_of("out");
    if (has("proto")) config.proto_path = text_of("proto");
    if (has("alist")) config.alist_path = text_of("alist");
    if (has("extend"))
      config.extensions = interpret("extend", settings.at("extend"),
                                    [](const std::string& v) { return parse_extensions(v); });
    // Surface literal errors at their source before building anything.
    if (!config.generator.empty())
      interpret("f", settings.at("f"), [&](const std::string& v) { return parse_permutation(v, config.domain); });
    if (!config.generator.empty() && config.proto_path.empty()) {
      const std::uint64_t m = parse_permutation(config.generator, config.domain).order();
      if (has("A")) interpret("A", settings.at("A"), [&](const std::string& v) { return parse_residue_set(v, m); });
      if (has("I")) interpret("I", settings.at("I"), [&](const std::string& v) { return parse_residue_set(v, m); });
    }

    switch (mode) {
      case Mode::build: return cmd_build(config, out);
      case Mode::analyze: return cmd_analyze(config, out);
      case Mode::export_alist: return cmd_export(config, out);
      case Mode::search: break;
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvariant;
  }
}

}  // namespace permldpc::cli
