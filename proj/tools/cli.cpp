#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "pnw/analysis.hpp"
#include "pnw/errors.hpp"
#include "pnw/generators.hpp"
#include "pnw/jumbled_index.hpp"

namespace pnw::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Where a command reads its word from: a builtin infinite word, a literal or
// a file. Exactly one must be given.
struct SourceOptions {
  std::string builtin;
  std::string word;
  std::string file;
  std::optional<std::size_t> length;
  bool upper = false;
  bool lower = false;
  std::string slope;
  std::string intercept = "0";
  std::string seed = "1";
  std::string alpha;
  std::string a1;
  std::uint64_t prepend_ones = 0;
};

struct ResolvedWord {
  FiniteWord word;
  bool from_stream = false;
};

void add_source_options(CLI::App* cmd, SourceOptions& opt, bool with_prepend) {
  cmd->add_option("builtin", opt.builtin,
                  "builtin word: fibonacci, thue-morse, paperfolding, champernowne, mechanical, "
                  "characteristic, flipext-omega, lazy-flipext-omega, aperiodic-density");
  cmd->add_option("--word", opt.word, "literal bitstring");
  cmd->add_option("--file", opt.file, "file holding a bitstring");
  cmd->add_option("-n,--length", opt.length, "prefix length");
  cmd->add_flag("--upper", opt.upper, "mechanical: upper (ceiling) word");
  cmd->add_flag("--lower", opt.lower, "mechanical: lower (floor) word (default)");
  cmd->add_option("--slope", opt.slope, "slope as p/q or (a+b*sqrt(d))/c");
  cmd->add_option("--intercept", opt.intercept, "intercept as p/q (default 0)");
  cmd->add_option("--seed", opt.seed, "seed word for the extension operators (default 1)");
  cmd->add_option("--alpha", opt.alpha, "aperiodic-density: target minimum density p/q");
  cmd->add_option("--a1", opt.a1, "aperiodic-density: first sequence value p/q");
  if (with_prepend) cmd->add_option("--prepend-ones", opt.prepend_ones, "prefix the word with this many 1s");
}

FiniteWord parse_word_text(const std::string& text, const std::string& what) {
  try {
    return FiniteWord::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(what + " must be a bitstring over {0,1}");
  }
}

FiniteWord read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string text, line;
  while (std::getline(in, line)) {
    for (char ch : line) {
      if (ch == '0' || ch == '1') {
        text += ch;
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        throw IoError(path + ": not a bitstring");
      }
    }
  }
  return FiniteWord::parse(text);
}

SlopeSpec parse_slope(const std::string& text) {
  if (text.empty()) throw UsageError("--slope is required for this builtin");
  try {
    return SlopeSpec::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Rational parse_rational(const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + " is required for this builtin");
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

StreamPtr make_builtin(const SourceOptions& opt) {
  const std::string& name = opt.builtin;
  if (name == "fibonacci") return make_morphic_stream(MorphismSpec::fibonacci());
  if (name == "thue-morse") return make_morphic_stream(MorphismSpec::thue_morse());
  if (name == "paperfolding") return make_paperfolding_stream();
  if (name == "champernowne") return make_champernowne_stream();
  if (name == "mechanical") {
    if (opt.upper && opt.lower) throw UsageError("--upper and --lower are exclusive");
    return make_mechanical_stream(parse_slope(opt.slope), parse_rational(opt.intercept, "--intercept"), opt.upper);
  }
  if (name == "characteristic") return make_characteristic_stream(parse_slope(opt.slope));
  if (name == "flipext-omega") return make_flipext_stream(parse_word_text(opt.seed, "--seed"));
  if (name == "lazy-flipext-omega")
    return make_lazy_alpha_flipext_stream(parse_word_text(opt.seed, "--seed"), parse_slope(opt.slope));
  if (name == "aperiodic-density") {
    Rational alpha = parse_rational(opt.alpha, "--alpha");
    Rational a1 = parse_rational(opt.a1, "--a1");
    if (a1 <= alpha || a1 >= Rational(1) || alpha.sign() <= 0) throw UsageError("need 0 < alpha < a1 < 1");
    auto stream = std::make_unique<AperiodicDensityStream>(QuadraticNumber(alpha), [alpha, a1](std::size_t i) {
      return alpha + (a1 - alpha) / Rational(BigInt(1) << (i - 1));
    });
    return stream;
  }
  throw UsageError("unknown builtin '" + name + "'");
}

ResolvedWord resolve(const SourceOptions& opt) {
  const int given = !opt.builtin.empty() + !opt.word.empty() + !opt.file.empty();
  if (given != 1) throw UsageError("give exactly one of: builtin name, --word, --file");
  if (opt.length && *opt.length > kMaxMaterialization)
    throw UsageError("length exceeds the cap of " + std::to_string(kMaxMaterialization));

  ResolvedWord r;
  if (!opt.builtin.empty()) {
    if (!opt.length) throw UsageError("-n is required for builtin words");
    StreamPtr s;
    try {
      s = make_builtin(opt);
    } catch (const std::logic_error& e) {  // invalid_argument, out_of_range, unsupported
      throw UsageError(e.what());
    }
    r.word = s->prefix(*opt.length);
    r.from_stream = true;
  } else {
    r.word = opt.word.empty() ? read_word_file(opt.file) : parse_word_text(opt.word, "--word");
    if (opt.length) {
      if (*opt.length > r.word.size()) throw UsageError("-n exceeds the length of the given word");
      r.word = r.word.prefix(*opt.length);
    }
  }
  if (opt.prepend_ones > 0) r.word = FiniteWord::repeat(1, opt.prepend_ones) + r.word;
  return r;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text, std::size_t limit) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--range must look like a..b");
  std::size_t lo = 0, hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stoull(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("range");
    std::string rest = text.substr(dots + 2);
    hi = std::stoull(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("range");
  } catch (const std::logic_error&) {
    throw UsageError("--range must look like a..b");
  }
  if (lo < 1 || lo > hi || hi > limit)
    throw UsageError("--range must satisfy 1 <= a <= b <= " + std::to_string(limit));
  return {lo, hi};
}

std::int64_t walk_height(std::uint64_t ones, std::size_t n) {
  return 2 * static_cast<std::int64_t>(ones) - static_cast<std::int64_t>(n);
}

// --- subcommands ------------------------------------------------------------

int cmd_generate(const SourceOptions& opt, std::ostream& out) {
  out << resolve(opt).word << '\n';
  return kOk;
}

int cmd_check(const SourceOptions& opt, bool zero, std::ostream& out) {
  FiniteWord w = resolve(opt).word;
  PNVerdict v = zero ? is_prefix_normal_0(w) : is_prefix_normal_1(w);
  if (v.normal()) {
    out << "NORMAL\n";
    return kOk;
  }
  out << "VIOLATION " << v.violation()->to_string() << '\n';
  return kNegative;
}

int cmd_pnf(const SourceOptions& opt, std::ostream& out) {
  ResolvedWord r = resolve(opt);
  if (r.word.empty()) throw UsageError("cannot take the prefix normal forms of the empty word");
  PrefixProfile profile = compute_profile(r.word);
  out << pnf1(profile) << '\n' << pnf0(profile) << '\n';
  if (r.from_stream) out << "# reliable window: 1.." << r.word.size() / 4 << " of " << r.word.size() << '\n';
  return kOk;
}

int cmd_abelian(const SourceOptions& opt, const std::string& range, std::ostream& out) {
  FiniteWord w = resolve(opt).word;
  if (w.empty()) throw UsageError("cannot analyse the empty word");
  auto [lo, hi] = range.empty() ? std::pair<std::size_t, std::size_t>{1, w.size()} : parse_range(range, w.size());
  PrefixProfile profile = compute_profile(w);
  for (std::size_t n = lo; n <= hi; ++n) out << n << '\t' << abelian_complexity(profile, n) << '\n';
  return kOk;
}

int cmd_density(const SourceOptions& opt, const std::string& period, std::ostream& out) {
  if (!period.empty()) {
    if (!opt.word.empty() || !opt.file.empty() || !opt.builtin.empty())
      throw UsageError("--period excludes other word sources");
    auto comma = period.find(',');
    if (comma == std::string::npos) throw UsageError("--period must look like u,x");
    FiniteWord u = parse_word_text(period.substr(0, comma), "preperiod");
    FiniteWord x = parse_word_text(period.substr(comma + 1), "period");
    if (x.empty()) throw UsageError("period must be non-empty");
    out << min_density_up(UltimatelyPeriodicWord(u, x)) << '\n';
    return kOk;
  }
  FiniteWord w = resolve(opt).word;
  if (w.empty()) throw UsageError("minimum density of the empty word is undefined");
  MinDensityReport rep = min_density(w);
  out << rep.delta << ' ' << rep.iota << ' ' << rep.kappa << '\n';
  return kOk;
}

int cmd_index_build(const SourceOptions& opt, const std::string& path, std::ostream& out) {
  FiniteWord w = resolve(opt).word;
  if (w.empty()) throw UsageError("cannot index the empty word");
  auto bytes = JumbledIndex::build(w).serialize();
  if (path.empty() || path == "-") {
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    return kOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw IoError("failed writing " + path);
  return kOk;
}

JumbledIndex load_index(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return JumbledIndex::deserialize(bytes);
}

int cmd_index_query(const std::string& path, const std::string& input, bool strict, std::istream& in,
                    std::ostream& out) {
  JumbledIndex ix = load_index(path);
  std::ifstream file;
  std::istream* src = &in;
  if (!input.empty() && input != "-") {
    file.open(input);
    if (!file) throw IoError("cannot open " + input);
    src = &file;
  }
  bool missed = false;
  std::string line;
  while (std::getline(*src, line)) {
    std::istringstream fields(line);
    std::string extra;
    long long zeros = 0, ones = 0;
    if (!(fields >> zeros)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw IoError("malformed query line: '" + line + "'");
    }
    if (!(fields >> ones) || (fields >> extra) || zeros < 0 || ones < 0)
      throw IoError("malformed query line: '" + line + "'");
    bool hit = ix.query(static_cast<std::uint64_t>(zeros), static_cast<std::uint64_t>(ones));
    missed |= !hit;
    out << (hit ? "yes" : "no") << '\n';
  }
  return strict && missed ? kNegative : kOk;
}

int cmd_plotdata(const SourceOptions& opt, bool with_pnf, std::ostream& out) {
  FiniteWord w = resolve(opt).word;
  std::optional<PrefixProfile> profile;
  if (with_pnf && !w.empty()) profile = compute_profile(w);
  out << (with_pnf ? "0\t0\t0\t0\n" : "0\t0\n");
  std::uint64_t ones = 0;
  for (std::size_t n = 1; n <= w.size(); ++n) {
    ones += w[n - 1];
    out << n << '\t' << walk_height(ones, n);
    if (with_pnf) out << '\t' << walk_height(profile->max_ones(n), n) << '\t' << walk_height(profile->min_ones(n), n);
    out << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prefix normal words: generation, checking, normal forms and jumbled indexing", "pnw"};
  app.require_subcommand(1);

  SourceOptions gen_opt, check_opt, pnf_opt, abel_opt, dens_opt, build_opt, plot_opt;
  bool zero = false, with_pnf = false, strict = false;
  std::string range, period, index_out, index_path, query_input;

  auto* gen = app.add_subcommand("generate", "print a prefix of a word");
  add_source_options(gen, gen_opt, false);
  auto* check = app.add_subcommand("check", "test prefix normality");
  add_source_options(check, check_opt, true);
  check->add_flag("--zero", zero, "check 0-prefix normality");
  auto* pnf = app.add_subcommand("pnf", "print both prefix normal forms");
  add_source_options(pnf, pnf_opt, true);
  auto* abel = app.add_subcommand("abelian", "tabulate abelian complexity");
  add_source_options(abel, abel_opt, false);
  abel->add_option("--range", range, "lengths a..b (default 1..L)");
  auto* dens = app.add_subcommand("density", "minimum density, its least index and weight");
  add_source_options(dens, dens_opt, false);
  dens->add_option("--period", period, "ultimately periodic word u x^omega given as u,x");
  auto* index = app.add_subcommand("index", "build or query a jumbled pattern matching index");
  index->require_subcommand(1);
  auto* build = index->add_subcommand("build", "serialize the index of a word");
  add_source_options(build, build_opt, false);
  build->add_option("-o,--output", index_out, "output file ('-' for stdout)")->required();
  auto* query = index->add_subcommand("query", "answer 'zeros ones' queries, one per line");
  query->add_option("index", index_path, "index file")->required();
  query->add_option("--input", query_input, "query file (default stdin)");
  query->add_flag("--strict", strict, "exit 1 if any query misses");
  auto* plot = app.add_subcommand("plotdata", "TSV of the walk height P(n) - (n - P(n))");
  add_source_options(plot, plot_opt, false);
  plot->add_flag("--pnf", with_pnf, "add columns for both prefix normal forms");

  std::vector<const char*> argv{"pnw"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_generate(gen_opt, out);
    if (*check) return cmd_check(check_opt, zero, out);
    if (*pnf) return cmd_pnf(pnf_opt, out);
    if (*abel) return cmd_abelian(abel_opt, range, out);
    if (*dens) return cmd_density(dens_opt, period, out);
    if (*build) return cmd_index_build(build_opt, index_out, out);
    if (*query) return cmd_index_query(index_path, query_input, strict, in, out);
    if (*plot) return cmd_plotdata(plot_opt, with_pnf, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFormat;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFormat;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pnw::cli
