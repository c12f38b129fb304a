// hermspec-cli: spectra of Hermitian adjacency matrices of digraphs, bound
// verification, generators and exhaustive searches. Talks to the library
// only through the C API in hermspec.h.
//
// Exit codes: 0 success, 2 input or usage error, 3 numerical failure,
// 4 a verified bound failed, 5 search budget exceeded.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hermspec/hermspec.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_numerical = 3;
constexpr int exit_violation = 4;
constexpr int exit_budget = 5;

// Thrown for a failed C call; carries the exit code.
struct CliError {
  int code;
  std::string message;
};

int exit_code_for(hs_status status) {
  switch (status) {
    case HS_OK: return exit_ok;
    case HS_ERR_INVALID_ARGUMENT:
    case HS_ERR_PARSE: return exit_input;
    case HS_ERR_BOUND_VIOLATED: return exit_violation;
    case HS_ERR_BUDGET_EXCEEDED: return exit_budget;
    default: return exit_numerical;
  }
}

void check(hs_status status) {
  if (status != HS_OK) throw CliError{exit_code_for(status), hs_last_error()};
}

struct DigraphDeleter {
  void operator()(hs_digraph* g) const { hs_digraph_free(g); }
};
using DigraphPtr = std::unique_ptr<hs_digraph, DigraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { hs_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char* raw) {
  OwnedString owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

DigraphPtr load(const std::string& path) {
  hs_digraph* g = nullptr;
  check(hs_digraph_load(path.c_str(), &g));
  return DigraphPtr(g);
}

hs_alpha parse_alpha(const std::string& text) {
  hs_alpha alpha{};
  check(hs_alpha_parse(text.c_str(), &alpha));
  return alpha;
}

std::string alpha_label(const std::string& text) {
  return text == "w" ? "omega" : text;
}

// Grid entries are comma separated; a numeric pair is written a:b.
std::vector<hs_alpha> parse_alpha_grid(const std::string& text) {
  std::vector<hs_alpha> grid;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (auto colon = token.find(':'); colon != std::string::npos) token[colon] = ',';
    grid.push_back(parse_alpha(token));
  }
  if (grid.empty()) throw CliError{exit_input, "empty alpha grid"};
  return grid;
}

std::vector<double> parse_coefficients(const std::string& text) {
  std::vector<double> coeffs;
  std::string cleaned = text;
  for (char& c : cleaned) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(cleaned);
  std::string token;
  while (in >> token) {
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0') {
      throw CliError{exit_input, "bad coefficient '" + token + "'"};
    }
    coeffs.push_back(value);
  }
  return coeffs;
}

// 12 significant digits; values negligible against `scale` print as 0.
std::string display(double x, double scale) {
  if (std::abs(x) <= 1e-10 * std::max(1.0, scale)) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double max_abs(const std::vector<double>& values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{exit_input, "cannot write '" + path + "'"};
  out << text;
}

// --- subcommands --------------------------------------------------------------

struct SpectrumArgs {
  std::string input;
  std::string alpha = "omega";
  std::string format = "text";
  bool charpoly = false;
};

int run_spectrum(const SpectrumArgs& args) {
  const DigraphPtr g = load(args.input);
  const hs_alpha alpha = parse_alpha(args.alpha);
  const std::size_t n = hs_digraph_order(g.get());
  std::vector<double> values(n);
  check(hs_spectrum(g.get(), alpha, values.data(), values.size()));
  std::vector<double> coeffs;
  if (args.charpoly) {
    coeffs.resize(n + 1);
    check(hs_char_poly(g.get(), alpha, coeffs.data(), coeffs.size()));
  }

  if (args.format == "json") {
    nlohmann::json doc;
    doc["schema"] = "hermspec/1";
    doc["command"] = "spectrum";
    doc["input_digest"] = take([&] {
      char* s = nullptr;
      check(hs_digraph_digest(g.get(), &s));
      return s;
    }());
    doc["n"] = n;
    doc["alpha"] = alpha_label(args.alpha);
    doc["eigenvalues"] = values;
    if (args.charpoly) doc["charpoly"] = coeffs;
    std::cout << doc.dump(2) << '\n';
  } else if (args.format == "csv") {
    const double rho = max_abs(values);
    std::cout << "kind,index,value\n";
    for (std::size_t j = 0; j < n; ++j) {
      std::cout << "eigenvalue," << j + 1 << ',' << display(values[j], rho) << '\n';
    }
    const double cscale = max_abs(coeffs);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      std::cout << "coefficient," << k << ',' << display(coeffs[k], cscale) << '\n';
    }
  } else {
    const double rho = max_abs(values);
    for (std::size_t j = 0; j < n; ++j) std::cout << (j ? " " : "") << display(values[j], rho);
    std::cout << '\n';
    if (args.charpoly) {
      const double cscale = max_abs(coeffs);
      for (std::size_t k = 0; k < coeffs.size(); ++k) std::cout << (k ? " " : "") << display(coeffs[k], cscale);
      std::cout << '\n';
    }
  }
  return exit_ok;
}

int run_matrix(const std::string& input, const std::string& alpha_text) {
  const DigraphPtr g = load(input);
  char* raw = nullptr;
  check(hs_matrix_json(g.get(), parse_alpha(alpha_text), &raw));
  std::cout << take(raw) << '\n';
  return exit_ok;
}

struct VerifyArgs {
  std::string input;
  std::string alpha = "omega";
  std::optional<std::size_t> random_n;
  std::uint64_t seed = 1;
  double zero_tol = 0.0;
};

int run_verify(const VerifyArgs& args) {
  DigraphPtr g;
  if (args.random_n) {
    hs_digraph* raw = nullptr;
    check(hs_digraph_random(*args.random_n, 0.3, 0.1, 1, args.seed, &raw));
    g.reset(raw);
  } else if (!args.input.empty()) {
    g = load(args.input);
  } else {
    throw CliError{exit_input, "verify needs an input file or --random N"};
  }
  char* raw = nullptr;
  const hs_status status = hs_verify(g.get(), parse_alpha(args.alpha), args.zero_tol, &raw);
  const std::string report = take(raw);
  if (!report.empty()) std::cout << report << '\n';
  if (status == HS_ERR_BOUND_VIOLATED) return exit_violation;
  check(status);
  return exit_ok;
}

struct GenerateArgs {
  std::string kind;
  std::vector<std::string> params;
  std::string output;
  std::uint64_t seed = 1;
  double arc_p = 0.3;
  double edge_p = 0.1;
  std::uint32_t max_mult = 1;
};

std::size_t parse_size(const std::string& text, const char* what) {
  char* end = nullptr;
  errno = 0;
  const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0' || errno != 0 || text[0] == '-') {
    throw CliError{exit_input, std::string("bad ") + what + " '" + text + "'"};
  }
  return static_cast<std::size_t>(value);
}

int run_generate(const GenerateArgs& args) {
  hs_digraph* raw = nullptr;
  const auto& p = args.params;
  auto need = [&](std::size_t count, const char* usage) {
    if (p.size() < count) throw CliError{exit_input, std::string("usage: generate ") + usage};
  };
  if (args.kind == "cycle") {
    need(1, "cycle <n>");
    check(hs_digraph_directed_cycle(parse_size(p[0], "length"), &raw));
  } else if (args.kind == "circulant") {
    need(1, "circulant <n> <offset[:mult]>...");
    std::vector<hs_jump> jumps;
    for (std::size_t i = 1; i < p.size(); ++i) {
      const auto colon = p[i].find(':');
      hs_jump j{};
      j.offset = parse_size(p[i].substr(0, colon), "offset");
      j.mult = colon == std::string::npos
                   ? 1
                   : static_cast<std::uint32_t>(parse_size(p[i].substr(colon + 1), "multiplicity"));
      jumps.push_back(j);
    }
    check(hs_digraph_circulant(parse_size(p[0], "order"), jumps.data(), jumps.size(), &raw));
  } else if (args.kind == "product") {
    need(2, "product <a.el> <b.el>");
    const DigraphPtr a = load(p[0]);
    const DigraphPtr b = load(p[1]);
    check(hs_digraph_product(a.get(), b.get(), &raw));
  } else if (args.kind == "random") {
    need(1, "random <n>");
    check(hs_digraph_random(parse_size(p[0], "order"), args.arc_p, args.edge_p, args.max_mult,
                            args.seed, &raw));
  } else {
    throw CliError{exit_input, "unknown generator '" + args.kind + "' (cycle, circulant, product, random)"};
  }
  const DigraphPtr g(raw);
  char* text = nullptr;
  check(hs_digraph_serialize(g.get(), &text));
  write_text(args.output, take(text));
  return exit_ok;
}

struct SearchCharpolyArgs {
  std::size_t n = 0;
  std::string coefficients;
  bool nonbipartite = false;
  std::size_t jobs = 1;
  std::string out_dir;
  bool timing = false;
};

int run_search_charpoly(const SearchCharpolyArgs& args) {
  const std::vector<double> target = parse_coefficients(args.coefficients);
  char* raw = nullptr;
  check(hs_search_charpoly(args.n, target.data(), target.size(), args.nonbipartite ? 1 : 0, args.jobs,
                           args.timing ? 1 : 0, &raw));
  const std::string manifest = take(raw);
  std::cout << manifest << '\n';
  if (!args.out_dir.empty()) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(args.out_dir, ec);
    if (ec) throw CliError{exit_input, "cannot create '" + args.out_dir + "'"};
    write_text((fs::path(args.out_dir) / "manifest.json").string(), manifest + "\n");
    const auto doc = nlohmann::json::parse(manifest);
    for (const auto& match : doc["matches"]) {
      const std::string name = "witness_" + std::to_string(match["index"].get<std::uint64_t>()) + ".el";
      write_text((fs::path(args.out_dir) / name).string(), match["edge_list"].get<std::string>());
    }
  }
  return exit_ok;
}

struct SearchOrientationArgs {
  std::string input;
  std::string grid;
  bool oriented_only = false;
  std::uint64_t seed = 1;
};

int run_search_orientation(const SearchOrientationArgs& args) {
  const DigraphPtr g = load(args.input);
  std::vector<hs_alpha> grid;
  if (!args.grid.empty()) grid = parse_alpha_grid(args.grid);
  char* raw = nullptr;
  check(hs_search_orientation(g.get(), grid.data(), grid.size(), args.oriented_only ? 0 : 1, args.seed, &raw));
  std::cout << take(raw) << '\n';
  return exit_ok;
}

struct SearchCirculantArgs {
  std::size_t n = 5;
  std::uint32_t max_mult = 3;
  std::vector<std::string> targets;
  double tol = 5e-4;
};

int run_search_circulant(const SearchCirculantArgs& args) {
  std::vector<double> targets;
  for (const std::string& t : args.targets) {
    const auto pair = parse_coefficients(t);
    if (pair.size() != 2) throw CliError{exit_input, "target must be 'mu1,mu_n'"};
    targets.insert(targets.end(), pair.begin(), pair.end());
  }
  char* raw = nullptr;
  check(hs_search_circulant(args.n, args.max_mult, targets.data(), targets.size() / 2, args.tol, &raw));
  std::cout << take(raw) << '\n';
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian adjacency spectra of digraphs and mixed graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hs_version()));

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "Print the eigenvalues of N^alpha(D)");
  spectrum->add_option("input", spectrum_args.input, "Edge-list file")->required();
  spectrum->add_option("--alpha", spectrum_args.alpha, "omega, i, 1 or a,b");
  spectrum->add_option("--format", spectrum_args.format)->check(CLI::IsMember({"text", "csv", "json"}));
  spectrum->add_flag("--charpoly", spectrum_args.charpoly, "Also print characteristic polynomial coefficients");

  std::string matrix_input;
  std::string matrix_alpha = "omega";
  auto* matrix = app.add_subcommand("matrix", "Dump N^alpha(D) as JSON");
  matrix->add_option("input", matrix_input, "Edge-list file")->required();
  matrix->add_option("--alpha", matrix_alpha, "omega, i, 1 or a,b");

  VerifyArgs verify_args;
  std::size_t random_n = 0;
  auto* verify = app.add_subcommand("verify", "Check the spectral bounds and emit a JSON report");
  verify->add_option("input", verify_args.input, "Edge-list file");
  auto* random_opt = verify->add_option("--random", random_n, "Verify a seeded random digraph on N vertices");
  verify->add_option("--seed", verify_args.seed);
  verify->add_option("--alpha", verify_args.alpha, "omega, i, 1 or a,b");
  verify->add_option("--zero-tol", verify_args.zero_tol, "Override the eigenvalue zero band");

  GenerateArgs generate_args;
  auto* generate = app.add_subcommand("generate", "Write a generated digraph as an edge list");
  generate->add_option("kind", generate_args.kind, "cycle | circulant | product | random")->required();
  generate->add_option("params", generate_args.params, "Generator parameters");
  generate->add_option("-o,--output", generate_args.output, "Output file (default stdout)");
  generate->add_option("--seed", generate_args.seed);
  generate->add_option("--arc-p", generate_args.arc_p);
  generate->add_option("--edge-p", generate_args.edge_p);
  generate->add_option("--max-mult", generate_args.max_mult);

  auto* search = app.add_subcommand("search", "Exhaustive searches");
  search->require_subcommand(1);

  SearchCharpolyArgs charpoly_args;
  auto* charpoly = search->add_subcommand("charpoly", "Digraphs with a given second-kind characteristic polynomial");
  charpoly->add_option("n", charpoly_args.n, "Order (at most 5)")->required();
  charpoly->add_option("coefficients", charpoly_args.coefficients, "c_0 ... c_n")->required();
  charpoly->add_flag("--nonbipartite", charpoly_args.nonbipartite);
  charpoly->add_option("--jobs", charpoly_args.jobs);
  charpoly->add_option("--out", charpoly_args.out_dir, "Directory for manifest.json and witness edge lists");
  charpoly->add_flag("--timing", charpoly_args.timing, "Record wall-clock runtime in the manifest");

  SearchOrientationArgs orientation_args;
  auto* orientation = search->add_subcommand("orientation", "Best eta bound over mixed orientations");
  orientation->add_option("input", orientation_args.input, "Undirected graph as an edge list")->required();
  orientation->add_option("--alpha-grid", orientation_args.grid, "Comma separated; numeric pairs as a:b");
  orientation->add_flag("--oriented-only", orientation_args.oriented_only, "Two states per edge, no digons");
  orientation->add_option("--seed", orientation_args.seed, "Seed for sampled (non-exhaustive) searches");

  SearchCirculantArgs circulant_args;
  auto* circ = search->add_subcommand("circulant", "Extreme eigenvalues over circulant jump sets");
  circ->add_option("n", circulant_args.n)->required();
  circ->add_option("--max-mult", circulant_args.max_mult);
  circ->add_option("--target", circulant_args.targets, "mu1,mu_n pair; repeatable");
  circ->add_option("--tol", circulant_args.tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(spectrum_args);
    if (matrix->parsed()) return run_matrix(matrix_input, matrix_alpha);
    if (verify->parsed()) {
      if (random_opt->count() > 0) verify_args.random_n = random_n;
      return run_verify(verify_args);
    }
    if (generate->parsed()) return run_generate(generate_args);
    if (charpoly->parsed()) return run_search_charpoly(charpoly_args);
    if (orientation->parsed()) return run_search_orientation(orientation_args);
    if (circ->parsed()) return run_search_circulant(circulant_args);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_numerical;
  }
  return exit_input;
}
