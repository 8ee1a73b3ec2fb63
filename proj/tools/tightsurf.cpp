// tightsurf: build, verify and export tight polyhedral surfaces.
//
// exit codes: 0 ok, 1 a check failed, 2 usage error, 3 unreadable input

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tightsurf/tightsurf.hpp"

namespace {

using namespace tightsurf;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kParse = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t oracle_seed() {
  const char* env = std::getenv("TIGHTSURF_SEED");
  if (!env || !*env) return OracleOptions{}.seed;
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(env, &pos, 0);
    if (env[pos] != '\0') throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("TIGHTSURF_SEED is not an integer: ") + env);
  }
}

Embedding load(const std::string& path) {
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    try {
      return embedding_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& err) {
      throw ParseError(err.what(), 0);
    }
  }
  return read_pec_file(path);
}

// Writes to `path`, or standard output when it is empty or "-".
template <class F>
void emit(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  write(out);
}

int cmd_build(const std::string& name, const std::string& out) {
  const auto names = catalog_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw UsageError("unknown catalog name '" + name + "' (see 'tightsurf list')");
  const auto b = build_catalog(name);
  std::ostringstream labels;
  for (std::size_t i = 0; i < b.entry.labels.size(); ++i) labels << (i ? " " : "") << b.entry.labels[i];
  const std::vector<std::string> comments{
      b.entry.name + ": " + describe(b.entry.expected),
      b.entry.recipe,
      "c0 = " + std::to_string(b.entry.c0) + ", labels: " + labels.str(),
  };
  emit(out, [&](std::ostream& os) { write_pec(os, b.embedding, comments); });
  if (!out.empty() && out != "-")
    std::cerr << name << ": " << b.embedding.surface.num_vertices << " vertices in R^" << b.embedding.dimension << " -> " << out << "\n";
  return kOk;
}

int cmd_verify(const std::string& in, bool with_oracle) {
  const Embedding e = load(in);
  VerifyOptions opt;
  opt.with_oracle = with_oracle;
  opt.oracle.seed = oracle_seed();
  const auto res = verify_embedding(e, opt);
  std::cout << res.report.dump(2) << "\n";
  return res.ok ? kOk : kCheckFailed;
}

int cmd_chromatic(bool orientable, std::optional<int> genus, std::optional<int> crosscaps, int p) {
  if (orientable == crosscaps.has_value()) throw UsageError("give either --orientable --genus G or --crosscaps K");
  if (orientable && !genus) throw UsageError("--orientable needs --genus");
  if (!orientable && genus) throw UsageError("--genus goes with --orientable");
  if (p < 1) throw UsageError("-p must be at least 1");
  const ClosedSurfaceId s = orientable ? ClosedSurfaceId{true, *genus} : ClosedSurfaceId{false, *crosscaps};
  try {
    s.check();
  } catch (const PreconditionError& err) {
    throw UsageError(err.what());
  }
  const auto a = relative_chromatic(s, p);
  const char* src = a.source == ChromaticSource::Table ? "table" : "theorem";
  if (a.exact)
    std::cout << "exact " << *a.exact << " (" << src << ")\n";
  else
    std::cout << "bounds [" << a.lower << "," << a.upper << "] (" << src << ")\n";
  return kOk;
}

std::vector<int> parse_axes(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad projection axis '" + tok + "'");
    }
  }
  return out;
}

int cmd_export(const std::string& in, const std::string& format, int precision, const std::string& project, const std::string& out) {
  const Embedding e = load(in);
  if (format == "json") {
    emit(out, [&](std::ostream& os) { os << embedding_to_json(e).dump(2) << "\n"; });
    return kOk;
  }
  const auto axes = project.empty() ? std::vector<int>{} : parse_axes(project);
  if (axes.empty() && e.dimension > 3) throw UsageError("dimension " + std::to_string(e.dimension) + " > 3: pass --project");
  std::ostringstream buf;
  try {
    write_off(buf, e, precision, axes);
  } catch (const PreconditionError& err) {
    throw UsageError(err.what());
  }
  emit(out, [&](std::ostream& os) { os << buf.str(); });
  return kOk;
}

int cmd_list() {
  for (const auto& n : catalog_names()) std::cout << n << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tight polyhedral embeddings of bordered surfaces"};
  app.require_subcommand(1);

  std::string build_name, build_out;
  auto* build = app.add_subcommand("build", "write a catalog surface as a PEC file");
  build->add_option("name", build_name, "catalog name, e.g. P2_1")->required();
  build->add_option("-o,--output", build_out, "output path (default: stdout)");

  std::string verify_in;
  bool verify_oracle = false;
  auto* verify = app.add_subcommand("verify", "check an embedding and print a JSON report");
  verify->add_option("input", verify_in, "PEC (or .json) file")->required();
  verify->add_flag("--oracle", verify_oracle, "also run the two-piece oracle");

  bool chrom_orientable = false;
  std::optional<int> chrom_genus, chrom_crosscaps;
  int chrom_p = 0;
  auto* chromatic = app.add_subcommand("chromatic", "relative chromatic number of a surface with p holes");
  chromatic->add_flag("--orientable", chrom_orientable);
  chromatic->add_option("--genus", chrom_genus, "number of handles");
  chromatic->add_option("--crosscaps", chrom_crosscaps, "number of crosscaps (non-orientable)");
  chromatic->add_option("-p", chrom_p, "number of boundary components")->required();

  std::string exp_in, exp_format = "off", exp_project, exp_out;
  int exp_precision = 12;
  auto* exp = app.add_subcommand("export", "export to OFF (decimal) or JSON (exact)");
  exp->add_option("input", exp_in)->required();
  exp->add_option("--format", exp_format)->check(CLI::IsMember({"off", "json"}));
  exp->add_option("--precision", exp_precision, "significant digits for OFF")->check(CLI::Range(1, 60));
  exp->add_option("--project", exp_project, "comma-separated coordinates kept in OFF, e.g. 0,1,2");
  exp->add_option("-o,--output", exp_out);

  auto* list = app.add_subcommand("list", "print the catalog names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) return cmd_build(build_name, build_out);
    if (*verify) return cmd_verify(verify_in, verify_oracle);
    if (*chromatic) return cmd_chromatic(chrom_orientable, chrom_genus, chrom_crosscaps, chrom_p);
    if (*exp) return cmd_export(exp_in, exp_format, exp_precision, exp_project, exp_out);
    if (*list) return cmd_list();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
