#include "hartman/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hartman/cantor.hpp"
#include "hartman/complexity.hpp"
#include "hartman/density.hpp"
#include "hartman/finite_dynamics.hpp"
#include "hartman/json_io.hpp"
#include "hartman/parallel.hpp"
#include "hartman/sequence.hpp"

namespace hartman::cli {

using nlohmann::json;

namespace {

struct OptionSpec {
  const char* name;
  const char* help;
};

// Sources shared by the sequence-consuming subcommands.
const std::vector<OptionSpec> kSourceOptions = {
    {"spec", "compactification JSON file"},
    {"window-file", "window JSON file (used with --spec)"},
    {"sturmian", "rotation number of a Sturmian sequence, decimal or p/q"},
    {"lacunary", "comma-separated strictly increasing positive integers"},
};

const std::map<std::string, std::vector<OptionSpec>>& subcommand_options() {
  static const std::map<std::string, std::vector<OptionSpec>> options = [] {
    std::map<std::string, std::vector<OptionSpec>> m;
    m["generate"] = kSourceOptions;
    m["generate"].push_back({"window", "window JSON file (used with --spec)"});
    m["generate"].push_back({"start", "first index (default 0)"});
    m["generate"].push_back({"len", "number of terms"});

    m["density"] = kSourceOptions;
    m["density"].push_back({"input", "CSV file with rows k,value"});
    m["density"].push_back({"window", "window length N"});
    m["density"].push_back({"scan", "window starts range over [-K, K]"});
    m["density"].push_back({"schedule", "comma-separated increasing window lengths"});
    m["density"].push_back({"tol", "almost-convergence tolerance (default 1e-3)"});

    m["complexity"] = kSourceOptions;
    m["complexity"].push_back({"input", "CSV file with rows k,value"});
    m["complexity"].push_back({"start", "first index (default 0)"});
    m["complexity"].push_back({"len", "number of terms"});
    m["complexity"].push_back({"nmax", "largest block length"});

    m["finite"] = {{"map", "comma-separated images T(0),T(1),..."},
                   {"f", "comma-separated function values (integers or p/q)"}};

    m["cantor"] = {{"n", "truncation depth"}, {"kmax", "emit f_n(k) for k in [0, kmax) (default 3^n)"}};

    for (auto& [name, opts] : m) opts.push_back({"output", "write the payload here instead of stdout"});
    return m;
  }();
  return options;
}

const char* subcommand_help(const std::string& name) {
  if (name == "generate") return "emit a Hartman, Sturmian or lacunary 0-1 sequence as CSV";
  if (name == "density") return "lower/upper Banach density estimates along a window schedule";
  if (name == "finite") return "cycles, basins and invariant means of a finite self-map";
  if (name == "complexity") return "subword complexity and entropy profile";
  return "truncated Cantor products f_n and their period mean";
}

// --- value parsing -------------------------------------------------------

const std::string& require(const RunConfig& c, const std::string& name) {
  auto it = c.flags.find(name);
  if (it == c.flags.end()) throw ConfigError(c.subcommand + ": missing required flag --" + name);
  return it->second;
}

std::optional<std::string> flag(const RunConfig& c, const std::string& name) {
  auto it = c.flags.find(name);
  if (it == c.flags.end()) return std::nullopt;
  return it->second;
}

std::int64_t parse_int(std::string_view text, const std::string& what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("--" + what + ": expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

double parse_double(std::string_view text, const std::string& what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigError("--" + what + ": expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    auto next = text.find(sep, pos);
    parts.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

std::vector<std::int64_t> parse_int_list(std::string_view text, const std::string& what) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  for (auto part : split(text, ',')) out.push_back(parse_int(part, what));
  return out;
}

Rational parse_rational(std::string_view text, const std::string& what) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, what));
  const auto den = parse_int(text.substr(slash + 1), what);
  if (den == 0) throw ConfigError("--" + what + ": zero denominator");
  return Rational(parse_int(text.substr(0, slash), what), den);
}

RotationNumber parse_rotation(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return RotationNumber::from_double(parse_double(text, "sturmian"));
  return RotationNumber::from_rational(parse_int(text.substr(0, slash), "sturmian"),
                                       parse_int(text.substr(slash + 1), "sturmian"));
}

// --- formatting ----------------------------------------------------------

std::string fmt(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string fmt(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json provenance(const RunConfig& c) {
  json flags = json::object();
  for (const auto& [k, v] : c.flags) {
    if (k != "output") flags[k] = v;
  }
  return json{{"command", c.subcommand}, {"flags", flags}};
}

// --- inputs --------------------------------------------------------------

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed JSON in " + path + " (byte " + std::to_string(e.byte) + "): " + e.what());
  }
}

SequenceSlice read_csv_slice(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  SequenceSlice slice;
  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;
  bool all_bits = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#' || line.rfind("k,", 0) == 0) continue;
    auto fields = split(line, ',');
    if (fields.size() != 2) throw ConfigError(path + ":" + std::to_string(line_no) + ": expected k,value");
    const auto k = parse_int(fields[0], "input");
    const auto v = parse_double(fields[1], "input");
    if (first_row) {
      slice.start = k;
      first_row = false;
    } else if (k != slice.end()) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": indices must be consecutive");
    }
    all_bits = all_bits && (v == 0.0 || v == 1.0);
    slice.values.push_back(v);
  }
  if (slice.values.empty()) throw ConfigError(path + ": no data rows");
  slice.bits = all_bits;
  slice.descriptor = {{"family", "input"}, {"path", path}};
  return slice;
}

// A sequence defined on all of Z plus its provenance.
struct Source {
  IntegerFunction f;
  json descriptor;
};

std::optional<Source> function_source(const RunConfig& c, const std::string& window_flag) {
  const int chosen = static_cast<int>(c.spec_path.has_value()) + static_cast<int>(c.flags.count("sturmian")) +
                     static_cast<int>(c.flags.count("lacunary")) + static_cast<int>(c.flags.count("input"));
  if (chosen != 1) {
    throw ConfigError(c.subcommand + ": choose exactly one sequence source "
                      "(--spec with a window, --sturmian, --lacunary or --input)");
  }
  if (c.spec_path) {
    auto window_path = flag(c, window_flag);
    if (!window_path) throw ConfigError(c.subcommand + ": --spec needs --" + window_flag);
    auto spec = spec_from_json(read_json_file(*c.spec_path));
    auto window = window_from_json(spec, read_json_file(*window_path));
    json d = {{"family", "hartman"}, {"spec", spec_to_json(spec)}, {"window", window_to_json(window)},
              {"haar_measure", window.haar_measure()}};
    return Source{[spec, window](std::int64_t k) { return contains_unchecked(window, iota(spec, k)) ? 1.0 : 0.0; },
                  d};
  }
  if (auto a = flag(c, "sturmian")) {
    const auto alpha = parse_rotation(*a);
    if (!(alpha.value() > 0.0)) throw ConfigError("--sturmian: rotation number must lie in (0,1)");
    const auto spec = CompactificationSpec::torus({alpha});
    const auto window = Window::arcs(spec, {Arc(alpha.value(), 1.0)});
    json d = {{"family", "sturmian"}, {"spec", spec_to_json(spec)}, {"window", window_to_json(window)}};
    return Source{[spec, window](std::int64_t k) { return contains_unchecked(window, iota(spec, k)) ? 1.0 : 0.0; },
                  d};
  }
  if (auto l = flag(c, "lacunary")) {
    auto ts = parse_int_list(*l, "lacunary");
    lacunary_bits(ts, 1, 1);  // validates ordering and positivity
    json d = {{"family", "lacunary"}, {"terms", ts}};
    return Source{[ts](std::int64_t k) { return std::binary_search(ts.begin(), ts.end(), k) ? 1.0 : 0.0; }, d};
  }
  return std::nullopt;  // --input
}

SequenceSlice slice_source(const RunConfig& c, const std::string& window_flag) {
  auto source = function_source(c, window_flag);
  if (!source) return read_csv_slice(require(c, "input"));
  const auto start = c.flags.count("start") ? parse_int(c.flags.at("start"), "start") : 0;
  const auto len = parse_int(require(c, "len"), "len");
  if (len < 1) throw ConfigError("--len must be >= 1");
  SequenceSlice slice;
  slice.start = start;
  slice.bits = true;
  slice.values.resize(static_cast<std::size_t>(len));
  parallel_chunks(slice.values.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) slice.values[i] = source->f(start + static_cast<std::int64_t>(i));
  });
  slice.descriptor = source->descriptor;
  return slice;
}

// --- subcommands -----------------------------------------------------------

void run_generate(const RunConfig& c, std::ostream& out) {
  if (c.flags.count("input")) throw ConfigError("generate: --input is not a generator");
  const auto slice = slice_source(c, c.flags.count("window") ? "window" : "window-file");
  auto header = provenance(c);
  header["sequence"] = slice.descriptor;
  out << "# " << header.dump() << "\n";
  out << "k,value\n";
  for (std::size_t i = 0; i < slice.values.size(); ++i) {
    out << slice.start + static_cast<std::int64_t>(i) << "," << fmt(slice.values[i]) << "\n";
  }
}

void run_density(const RunConfig& c, std::ostream& out) {
  std::vector<std::int64_t> schedule;
  if (auto s = flag(c, "schedule")) schedule = parse_int_list(*s, "schedule");
  if (auto w = flag(c, "window")) schedule.push_back(parse_int(*w, "window"));
  if (schedule.empty()) throw ConfigError("density: give --window N and/or --schedule");
  std::sort(schedule.begin(), schedule.end());
  schedule.erase(std::unique(schedule.begin(), schedule.end()), schedule.end());
  if (schedule.front() < 1) throw ConfigError("density: window lengths must be >= 1");
  const double tol = c.flags.count("tol") ? parse_double(c.flags.at("tol"), "tol") : kDefaultAlmostConvergenceTolerance;
  if (!(tol > 0.0)) throw ConfigError("--tol must be positive");

  DensityReport report;
  json descriptor;
  if (auto source = function_source(c, "window-file")) {
    const auto K = parse_int(require(c, "scan"), "scan");
    if (K < 0) throw ConfigError("--scan must be >= 0");
    report = banach_density(source->f, schedule, K);
    descriptor = source->descriptor;
  } else {
    const auto slice = read_csv_slice(require(c, "input"));
    report = c.flags.count("scan") ? banach_density(slice, schedule, parse_int(c.flags.at("scan"), "scan"))
                                   : banach_density(slice, schedule);
    descriptor = slice.descriptor;
  }
  auto header = provenance(c);
  header["sequence"] = descriptor;
  header["scan_range"] = {report.scan_first, report.scan_last};
  header["lower_estimate"] = report.lower_estimate;
  header["upper_estimate"] = report.upper_estimate;
  header["almost_convergent"] = report.upper_estimate - report.lower_estimate <= tol;
  out << "# " << header.dump() << "\n";
  out << "N,inf,sup\n";
  for (const auto& w : report.per_window) {
    out << w.window_length << "," << fmt(w.inf) << "," << fmt(w.sup) << "\n";
  }
}

void run_complexity(const RunConfig& c, std::ostream& out) {
  const auto nmax = parse_int(require(c, "nmax"), "nmax");
  if (nmax < 1 || nmax > kMaxBlockLength) {
    throw ConfigError("--nmax must lie in [1, " + std::to_string(kMaxBlockLength) + "]");
  }
  const auto slice = slice_source(c, "window-file");
  if (!slice.bits) throw ConfigError("complexity: the sequence must be 0-1 valued");
  const auto profile = subword_complexity(slice, static_cast<int>(nmax));
  const auto entropy = entropy_profile(profile);
  auto header = provenance(c);
  header["sequence"] = slice.descriptor;
  header["sample_length"] = profile.sample_length;
  out << "# " << header.dump() << "\n";
  out << "n,p,entropy\n";
  for (std::size_t i = 0; i < profile.counts.size(); ++i) {
    out << profile.n_values[i] << "," << profile.counts[i] << "," << fmt(entropy[i]) << "\n";
  }
}

void run_finite(const RunConfig& c, std::ostream& out) {
  std::vector<std::size_t> map;
  for (auto v : parse_int_list(require(c, "map"), "map")) {
    if (v < 0) throw ConfigError("--map entries must be non-negative");
    map.push_back(static_cast<std::size_t>(v));
  }
  const FiniteSystem sys(std::move(map));
  const auto dec = decompose(sys);
  const auto means = invariant_mean_simplex(sys);

  out << "# " << provenance(c).dump() << "\n";
  out << "cycles:";
  for (const auto& cyc : dec.cycles) {
    out << " [";
    for (std::size_t i = 0; i < cyc.size(); ++i) out << (i ? "," : "") << cyc[i];
    out << "]";
  }
  out << "\nbasins: ";
  for (std::size_t x = 0; x < dec.basin_of.size(); ++x) out << (x ? "," : "") << dec.basin_of[x];
  out << "\n";
  for (std::size_t i = 0; i < means.cycle_means.size(); ++i) {
    out << "mean[" << i << "]: ";
    const auto& w = means.cycle_means[i];
    for (std::size_t x = 0; x < w.size(); ++x) out << (x ? "," : "") << fmt(w[x]);
    out << "\n";
  }
  if (auto fs = flag(c, "f")) {
    std::vector<Rational> f;
    if (!fs->empty()) {
      for (auto part : split(*fs, ',')) f.push_back(parse_rational(part, "f"));
    }
    if (f.size() != sys.size()) {
      throw ConfigError("--f has " + std::to_string(f.size()) + " values, --map has " +
                        std::to_string(sys.size()));
    }
    out << "cycle_values: ";
    for (std::size_t i = 0; i < means.cycle_means.size(); ++i) {
      out << (i ? "," : "") << fmt(apply_mean(means.cycle_means[i], f));
    }
    const auto interval = value_interval(sys, f);
    out << "\ninterval: [" << fmt(interval.lower) << ", " << fmt(interval.upper) << "]\n";
    out << "almost_convergent: " << (interval.almost_convergent() ? "true" : "false") << "\n";
  }
}

void run_cantor(const RunConfig& c, std::ostream& out) {
  const auto n = parse_int(require(c, "n"), "n");
  if (n < 0 || n > 20) throw ConfigError("--n must lie in [0, 20]");
  const auto depth = static_cast<int>(n);
  const auto kmax = c.flags.count("kmax") ? parse_int(c.flags.at("kmax"), "kmax") : pow3(depth);
  if (kmax < 0) throw ConfigError("--kmax must be >= 0");
  out << "# " << provenance(c).dump() << "\n";
  out << "k,f_n\n";
  for (std::int64_t k = 0; k < kmax; ++k) out << k << "," << fmt(f_n(depth, k)) << "\n";
  const double mean = period_mean(depth);
  const double expected = std::ldexp(1.0, -depth);
  out << "n,period_mean,expected,abs_err\n";
  out << depth << "," << fmt(mean) << "," << fmt(expected) << "," << fmt(std::abs(mean - expected)) << "\n";
}

}  // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Hartman sequences, Banach densities, finite invariant means and Cantor products",
               "hartmanlab"};
  app.require_subcommand(1);
  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, opts] : subcommand_options()) {
    auto* sub = app.add_subcommand(name, subcommand_help(name));
    subs[name] = sub;
    for (const auto& o : opts) sub->add_option(std::string("--") + o.name, values[name][o.name], o.help);
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    RunConfig config;
    config.subcommand = name;
    for (const auto& o : subcommand_options().at(name)) {
      if (sub->count(std::string("--") + o.name) > 0) config.flags[o.name] = values[name][o.name];
    }
    if (auto s = config.flags.find("spec"); s != config.flags.end()) config.spec_path = s->second;
    if (auto o = config.flags.find("output"); o != config.flags.end()) config.output_path = o->second;
    return config;
  }
  throw ConfigError("no subcommand given");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::ostringstream payload;
    if (config.subcommand == "generate") {
      run_generate(config, payload);
    } else if (config.subcommand == "density") {
      run_density(config, payload);
    } else if (config.subcommand == "finite") {
      run_finite(config, payload);
    } else if (config.subcommand == "complexity") {
      run_complexity(config, payload);
    } else if (config.subcommand == "cantor") {
      run_cantor(config, payload);
    } else {
      throw ConfigError("unknown subcommand '" + config.subcommand + "'");
    }
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file) throw ConfigError("cannot write " + *config.output_path);
      file << payload.str();
      if (!file) throw ConfigError("write to " + *config.output_path + " failed");
    } else {
      out << payload.str();
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "hartmanlab: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    // SpecError, ShapeMismatch and argument validation in the library
    err << "hartmanlab: " << config.subcommand << ": " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "hartmanlab: " << config.subcommand << ": " << e.what() << "\n";
    return kExitFailure;
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (const char* env = std::getenv("HARTMANLAB_THREADS")) {
    if (!parse_thread_count(env)) {
      err << "hartmanlab: HARTMANLAB_THREADS must be a positive integer\n";
      return kExitConfig;
    }
  }
  std::optional<RunConfig> config;
  try {
    config = parse_args(args, out);
  } catch (const ConfigError& e) {
    err << "hartmanlab: " << e.what() << "\n";
    return kExitConfig;
  }
  if (!config) return kExitOk;
  return run(*config, out, err);
}

}  // namespace hartman::cli
