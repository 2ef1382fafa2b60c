// unicomp command line front end.
// Exit codes: 0 ok, 1 I/O, 2 usage, 3 validation.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "unicomp/complex_matrix.h"
#include "unicomp/decompose.h"
#include "unicomp/error.h"
#include "unicomp/generators.h"
#include "unicomp/group.h"
#include "unicomp/haar.h"
#include "unicomp/haar_stream.h"
#include "unicomp/integrate.h"
#include "unicomp/json_io.h"
#include "unicomp/twirl.h"

#ifndef UNICOMP_VERSION
#define UNICOMP_VERSION "dev"
#endif

namespace {

using namespace unicomp;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return ss.str();
}

// Writes to a file or, for "" / "-", to stdout.
class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw IoError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    stream().flush();
    if (!stream()) throw IoError("write failed: " + (file_ ? path_ : "stdout"));
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
};

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, where + ": " + e.what());
  }
}

// One JSON document, or JSON lines.
std::vector<Json> parse_records(const std::string& text, const std::string& where) {
  if (Json::accept(text)) {
    Json j = Json::parse(text);
    if (j.is_array() && !j.empty() && j.front().is_object()) {
      return std::vector<Json>(j.begin(), j.end());
    }
    return {j};
  }
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_json(line, where + ":" + std::to_string(lineno)));
  }
  return out;
}

bool is_header(const Json& j) {
  return j.is_object() && j.contains("type") && j.at("type") == "header";
}

struct Manifest {
  std::string command_line;
  std::string start = utc_now();
  Json extra = Json::object();
  std::vector<std::string> outputs;

  void write(const std::string& path, std::optional<std::uint64_t> seed,
             std::optional<std::uint64_t> stream) const {
    if (path.empty()) return;
    Json j;
    j["command_line"] = command_line;
    if (seed) j["seed"] = *seed;
    if (stream) j["stream"] = *stream;
    j["rng"] = "splitmix64-counter";
    j["version"] = UNICOMP_VERSION;
    j["start"] = start;
    j["end"] = utc_now();
    j["outputs"] = outputs;
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    Output out(path);
    out.stream() << dump_json(j) << '\n';
    out.close();
  }
};

std::string join_argv(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void require_dim(int d) {
  if (d < 2) throw UsageError("dim must be >= 2");
}

Group group_flag(const std::string& tag) {
  try {
    return parse_group(tag);
  } catch (const Error&) {
    throw UsageError("group must be U or SU, got '" + tag + "'");
  }
}

// ---- sample ----

struct SampleArgs {
  std::string group = "U";
  int dim = 0;
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string emit = "params";
  std::string format = "jsonl";
  std::string out;
  std::string manifest;
};

int run_sample(const SampleArgs& a, Manifest& manifest) {
  require_dim(a.dim);
  const Group group = group_flag(a.group);
  const bool want_params = a.emit != "matrices";
  const bool want_matrix = a.emit != "params";

  Json header;
  header["type"] = "header";
  header["tool"] = "unicomp";
  header["version"] = UNICOMP_VERSION;
  header["command"] = "sample";
  header["group"] = std::string(group_tag(group));
  header["d"] = a.dim;
  header["count"] = a.count;
  header["seed"] = a.seed;
  header["stream"] = a.stream;
  header["rng"] = "splitmix64-counter";
  header["emit"] = a.emit;

  Output out(a.out);
  std::ostream& os = out.stream();
  HaarStream stream(a.seed, a.stream);
  const int d = a.dim;

  if (a.format == "csv") {
    os << "# " << dump_json(header) << '\n';
    std::string cols = "i";
    if (want_params)
      for (int m = 1; m <= d; ++m)
        for (int n = 1; n <= d; ++n)
          cols += ",l_" + std::to_string(m) + "_" + std::to_string(n);
    if (want_matrix) {
      for (const char* part : {"re", "im"})
        for (int r = 1; r <= d; ++r)
          for (int c = 1; c <= d; ++c)
            cols += std::string(",") + part + "_" + std::to_string(r) + "_" +
                    std::to_string(c);
    }
    os << cols << '\n';
  } else {
    os << dump_json(header) << '\n';
  }

  for (std::uint64_t i = 0; i < a.count; ++i) {
    const ParamMatrix p = sample(d, group, stream);
    std::optional<ComplexMatrix> u;
    if (want_matrix) u = build_unitary(p);
    if (a.format == "csv") {
      std::string row = std::to_string(i);
      if (want_params)
        for (int m = 1; m <= d; ++m)
          for (int n = 1; n <= d; ++n) row += "," + fmt17(p(m, n));
      if (u) {
        for (int part = 0; part < 2; ++part)
          for (int r = 1; r <= d; ++r)
            for (int c = 1; c <= d; ++c)
              row += "," + fmt17(part == 0 ? (*u)(r, c).real() : (*u)(r, c).imag());
      }
      os << row << '\n';
    } else {
      Json rec;
      rec["i"] = i;
      if (want_params) rec["lambda"] = to_json(p).at("lambda");
      if (u) rec["matrix"] = to_json_entries(*u);
      os << dump_json(rec) << '\n';
    }
  }
  out.close();
  if (!a.out.empty() && a.out != "-") manifest.outputs.push_back(a.out);
  manifest.extra["header"] = header;
  manifest.write(a.manifest, a.seed, a.stream);
  return kExitOk;
}

// ---- decompose / build ----

struct DecomposeArgs {
  std::string in;
  std::string group = "U";
  std::string out;
  std::string manifest;
};

ComplexMatrix matrix_of_record(const Json& j) {
  if (j.is_object() && j.contains("matrix")) return complex_matrix_from_json(j.at("matrix"));
  return complex_matrix_from_json(j);
}

int run_decompose(const DecomposeArgs& a, Manifest& manifest) {
  const Group group = group_flag(a.group);
  const auto records = parse_records(read_file(a.in), a.in);
  Output out(a.out);
  double max_err = 0.0;
  std::uint64_t count = 0;
  for (const auto& rec : records) {
    if (is_header(rec)) continue;
    const ComplexMatrix u = matrix_of_record(rec);
    const ParamMatrix p = decompose(u, group);
    max_err = std::max(max_err, frobenius_distance(build_unitary(p), u));
    Json j = to_json(p);
    if (rec.is_object() && rec.contains("i")) j["i"] = rec.at("i");
    out.stream() << dump_json(j) << '\n';
    ++count;
  }
  out.close();
  std::cerr << "decomposed " << count << " matrices, roundtrip max error "
            << fmt17(max_err) << '\n';
  if (!a.out.empty() && a.out != "-") manifest.outputs.push_back(a.out);
  manifest.extra["count"] = count;
  manifest.extra["roundtrip_max_error"] = max_err;
  manifest.write(a.manifest, std::nullopt, std::nullopt);
  return kExitOk;
}

struct BuildArgs {
  std::string in;
  std::string group;
  std::string out;
  std::string manifest;
};

int run_build(const BuildArgs& a, Manifest& manifest) {
  const auto records = parse_records(read_file(a.in), a.in);
  std::optional<Group> default_group;
  std::optional<int> default_dim;
  if (!a.group.empty()) default_group = group_flag(a.group);
  Output out(a.out);
  std::uint64_t count = 0;
  for (const auto& rec : records) {
    if (is_header(rec)) {
      if (!default_group && rec.contains("group"))
        default_group = parse_group(rec.at("group").get<std::string>());
      if (rec.contains("d")) default_dim = rec.at("d").get<int>();
      continue;
    }
    Json pj = rec;
    if (pj.is_object() && !pj.contains("group") && default_group)
      pj["group"] = std::string(group_tag(*default_group));
    if (pj.is_object() && !pj.contains("d") && default_dim) pj["d"] = *default_dim;
    const ParamMatrix p = param_matrix_from_json(pj);
    std::vector<std::string> warnings;
    const ComplexMatrix u = build_unitary(p, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    Json j = to_json(u);
    if (rec.contains("i")) j["i"] = rec.at("i");
    out.stream() << dump_json(j) << '\n';
    ++count;
  }
  out.close();
  if (!a.out.empty() && a.out != "-") manifest.outputs.push_back(a.out);
  manifest.extra["count"] = count;
  manifest.write(a.manifest, std::nullopt, std::nullopt);
  return kExitOk;
}

// ---- moment / design-check ----

int run_moment(int dim, int power, int row, int col) {
  require_dim(dim);
  if (row < 1 || row > dim || col < 1 || col > dim)
    throw UsageError("row and col must lie in 1..dim");
  const MomentResult r = moment_abs_entry(dim, power, row, col);
  Json j;
  j["exact"] = to_string(r.exact);
  j["approx"] = r.approx;
  std::cout << dump_json(j) << '\n';
  return kExitOk;
}

int run_design_check(const std::string& in, int t, double tol) {
  if (t < 1) throw UsageError("t must be >= 1");
  const Json j = parse_json(read_file(in), in);
  const auto set = weighted_set_from_json(j);
  const DesignReport report = design_check(set, t, tol);
  std::cout << dump_json(to_json(report)) << '\n';
  return kExitOk;
}

// ---- twirl / concurrence ----

struct McArgs {
  std::string mode = "exact";
  std::uint64_t n = 100000;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

Json mc_json(const McEstimate& e) {
  Json j;
  j["mean"] = e.mean.real();
  j["std_error"] = e.std_error;
  j["n"] = e.n_samples;
  j["seed"] = e.seed;
  j["stream"] = e.stream_index;
  return j;
}

int run_twirl(const std::string& in, int local_dim, const McArgs& mc,
              const std::string& group_tag_flag, int threads) {
  require_dim(local_dim);
  const Json j = parse_json(read_file(in), in);
  const DensityMatrix rho(complex_matrix_from_json(j));
  TwirlMode mode = ExactSmall{};
  if (mc.mode == "mc") {
    MonteCarloTwirl m;
    m.samples = mc.n;
    m.stream = HaarStream(mc.seed, mc.stream);
    m.group = group_flag(group_tag_flag);
    m.threads = threads;
    mode = m;
  }
  const TwirlResult r = twirl(rho, local_dim, mode);
  Json out;
  out["mode"] = mc.mode;
  out["local_dim"] = local_dim;
  out["beta"] = r.beta;
  out["fit_residual"] = r.fit_residual;
  out["state"] = to_json(r.state);
  if (r.provenance) {
    Json p = mc_json(*r.provenance);
    p["group"] = group_tag_flag;
    p["mean_is"] = "Tr(SWAP state)";
    p["std_error_is"] = "max entrywise";
    out["mc"] = p;
  }
  std::cout << dump_json(out) << '\n';
  return kExitOk;
}

int run_concurrence(int local_dim, const McArgs& mc, bool table, int threads) {
  if (table) {
    std::cout << "d,exact,approx";
    if (mc.mode == "mc") std::cout << ",mc_mean,mc_std_error";
    std::cout << '\n';
    for (int d = 2; d <= 12; ++d) {
      const MomentResult r = avg_concurrence_exact(d);
      std::cout << d << ',' << to_string(r.exact) << ',' << fmt17(r.approx);
      if (mc.mode == "mc") {
        const McEstimate e = avg_concurrence_mc(
            d, mc.n, HaarStream(mc.seed, mc.stream).substream(d), {threads});
        std::cout << ',' << fmt17(e.mean.real()) << ',' << fmt17(e.std_error);
      }
      std::cout << '\n';
    }
    return kExitOk;
  }
  require_dim(local_dim);
  Json out;
  if (mc.mode == "mc") {
    const McEstimate e =
        avg_concurrence_mc(local_dim, mc.n, HaarStream(mc.seed, mc.stream), {threads});
    out = mc_json(e);
  } else {
    out["exact"] = to_string(avg_concurrence_exact(local_dim).exact);
  }
  std::cout << dump_json(out) << '\n';
  return kExitOk;
}

// ---- check-haar ----

struct CheckHaarArgs {
  int dim = 0;
  std::string group = "U";
  std::uint64_t n = 200000;
  int points = 12;
  std::uint64_t seed = 0;
};

int run_check_haar(const CheckHaarArgs& a) {
  require_dim(a.dim);
  const Group group = group_flag(a.group);
  HaarStream stream(a.seed, 0);
  HaarStream mc_stream = stream.substream(0);
  HaarStream jac_stream = stream.substream(1);

  Json integral;
  bool integral_ok = false;
  if (a.dim <= 3) {
    const double v = density_integral_tensor(a.dim, group);
    integral["method"] = "gauss-legendre";
    integral["value"] = v;
    integral["abs_error"] = std::abs(v - 1.0);
    integral_ok = std::abs(v - 1.0) < 1e-8;
  } else {
    const auto [v, se] = density_integral_mc(a.dim, group, a.n, mc_stream);
    integral["method"] = "monte-carlo";
    integral["value"] = v;
    integral["std_error"] = se;
    integral["n"] = a.n;
    integral_ok = std::abs(v - 1.0) <= 5.0 * se;
  }
  integral["pass"] = integral_ok;

  const JacobianSurvey s = jacobian_survey(a.dim, group, a.points, jac_stream);
  Json jac;
  jac["points"] = a.points;
  jac["mean_ratio"] = s.mean_ratio;
  jac["relative_std_dev"] = s.relative_std_dev;
  jac["pass"] = s.constant;
  if (!s.diagnostic.empty()) jac["diagnostic"] = s.diagnostic;

  const PiMultiple norm = normalization(a.dim, group);
  Json out;
  out["d"] = a.dim;
  out["group"] = std::string(group_tag(group));
  out["seed"] = a.seed;
  out["normalization"] = norm.to_string();
  out["normalization_approx"] = norm.value();
  out["integral"] = integral;
  out["jacobian"] = jac;
  const bool pass = integral_ok && s.constant;
  out["pass"] = pass;
  std::cout << dump_json(out) << '\n';
  return pass ? kExitOk : kExitValidation;
}

int default_threads() {
  if (const char* env = std::getenv("UNICOMP_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
    std::cerr << "warning: ignoring UNICOMP_THREADS=" << env << '\n';
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Composite parameterization toolkit for U(d) and SU(d)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string("unicomp ") + UNICOMP_VERSION);
  int threads = default_threads();
  app.add_option("--threads", threads, "Worker threads (env UNICOMP_THREADS)")
      ->check(CLI::Range(1, 1024));

  const auto groups = CLI::IsMember({"U", "SU"});

  SampleArgs sa;
  auto* sample_cmd = app.add_subcommand("sample", "Draw Haar-random parameter sets");
  sample_cmd->add_option("--group", sa.group)->check(groups);
  sample_cmd->add_option("--dim", sa.dim)->required();
  sample_cmd->add_option("--count", sa.count);
  sample_cmd->add_option("--seed", sa.seed);
  sample_cmd->add_option("--stream", sa.stream);
  sample_cmd->add_option("--emit", sa.emit)->check(CLI::IsMember({"params", "matrices", "both"}));
  sample_cmd->add_option("--format", sa.format)->check(CLI::IsMember({"jsonl", "csv"}));
  sample_cmd->add_option("--out", sa.out);
  sample_cmd->add_option("--manifest", sa.manifest, "Write a run manifest JSON here");

  DecomposeArgs da;
  auto* decompose_cmd = app.add_subcommand("decompose", "Matrix -> parameters");
  decompose_cmd->add_option("--in", da.in)->required();
  decompose_cmd->add_option("--group", da.group)->check(groups);
  decompose_cmd->add_option("--out", da.out);
  decompose_cmd->add_option("--manifest", da.manifest);

  BuildArgs ba;
  auto* build_cmd = app.add_subcommand("build", "Parameters -> matrix");
  build_cmd->add_option("--in", ba.in)->required();
  build_cmd->add_option("--group", ba.group, "Group for records without one")->check(groups);
  build_cmd->add_option("--out", ba.out);
  build_cmd->add_option("--manifest", ba.manifest);

  int m_dim = 0, m_power = 0, m_row = 1, m_col = 1;
  auto* moment_cmd = app.add_subcommand("moment", "Exact |<k|U|l>|^p over U(d)");
  moment_cmd->add_option("--dim", m_dim)->required();
  moment_cmd->add_option("--power", m_power)->required();
  moment_cmd->add_option("--row", m_row);
  moment_cmd->add_option("--col", m_col);

  std::string dc_in;
  int dc_t = 1;
  double dc_tol = 1e-10;
  auto* design_cmd = app.add_subcommand("design-check", "Moment test for a weighted unitary set");
  design_cmd->add_option("--in", dc_in)->required();
  design_cmd->add_option("--t", dc_t)->required();
  design_cmd->add_option("--tol", dc_tol);

  std::string tw_in, tw_group = "U";
  int tw_dim = 0;
  McArgs tw_mc;
  auto* twirl_cmd = app.add_subcommand("twirl", "Bilateral U (x) U twirl of a state");
  twirl_cmd->add_option("--in", tw_in)->required();
  twirl_cmd->add_option("--local-dim", tw_dim)->required();
  twirl_cmd->add_option("--mode", tw_mc.mode)->check(CLI::IsMember({"exact", "mc"}));
  twirl_cmd->add_option("--n", tw_mc.n);
  twirl_cmd->add_option("--seed", tw_mc.seed);
  twirl_cmd->add_option("--stream", tw_mc.stream);
  twirl_cmd->add_option("--group", tw_group)->check(groups);

  int c_dim = 0;
  bool c_table = false;
  McArgs c_mc;
  auto* conc_cmd = app.add_subcommand("concurrence", "Average squared concurrence");
  conc_cmd->add_option("--local-dim", c_dim);
  conc_cmd->add_option("--mode", c_mc.mode)->check(CLI::IsMember({"exact", "mc"}));
  conc_cmd->add_option("--n", c_mc.n);
  conc_cmd->add_option("--seed", c_mc.seed);
  conc_cmd->add_option("--stream", c_mc.stream);
  conc_cmd->add_flag("--table", c_table, "CSV for d = 2..12");

  CheckHaarArgs ch;
  auto* check_cmd = app.add_subcommand("check-haar", "Normalization and Jacobian self-check");
  check_cmd->add_option("--dim", ch.dim)->required();
  check_cmd->add_option("--group", ch.group)->check(groups);
  check_cmd->add_option("--n", ch.n, "Monte Carlo draws for d > 2");
  check_cmd->add_option("--points", ch.points, "Jacobian sample points");
  check_cmd->add_option("--seed", ch.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  Manifest manifest;
  manifest.command_line = join_argv(argc, argv);
  try {
    if (*sample_cmd) return run_sample(sa, manifest);
    if (*decompose_cmd) return run_decompose(da, manifest);
    if (*build_cmd) return run_build(ba, manifest);
    if (*moment_cmd) return run_moment(m_dim, m_power, m_row, m_col);
    if (*design_cmd) return run_design_check(dc_in, dc_t, dc_tol);
    if (*twirl_cmd) return run_twirl(tw_in, tw_dim, tw_mc, tw_group, threads);
    if (*conc_cmd) {
      if (!c_table && c_dim == 0) throw UsageError("--local-dim is required");
      return run_concurrence(c_dim, c_mc, c_table, threads);
    }
    if (*check_cmd) return run_check_haar(ch);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what();
    if (e.norm() != 0.0) std::cerr << " (norm " << fmt17(e.norm()) << ")";
    std::cerr << '\n';
    if (e.code() == ErrorCode::kInvalidArgument || e.code() == ErrorCode::kUnsupportedMoment)
      return kExitUsage;
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}
