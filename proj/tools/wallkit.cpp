// wallkit: small cancellation checks, Cayley balls, walls and separation
// sweeps from the command line.
//
// Exit codes: 0 pass, 1 condition failure, 2 input error, 3 budget.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wallkit/builders.hpp"
#include "wallkit/cayley_ball.hpp"
#include "wallkit/cell_pieces.hpp"
#include "wallkit/complex_io.hpp"
#include "wallkit/dehn.hpp"
#include "wallkit/errors.hpp"
#include "wallkit/examples.hpp"
#include "wallkit/pieces.hpp"
#include "wallkit/report.hpp"
#include "wallkit/separation.hpp"
#include "wallkit/walls.hpp"

namespace fs = std::filesystem;
using namespace wallkit;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2, kBudget = 3 };

// Exceptions that carry an exit code of their own.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
}

std::vector<unsigned> parse_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ParseError("bad list entry '" + item + "'");
    out.push_back(static_cast<unsigned>(v));
  }
  if (out.empty()) throw ParseError("empty list '" + text + "'");
  return out;
}

// WALLKIT_BUDGET replaces every budget (ball vertices, shortlex candidates).
std::optional<std::size_t> env_budget() {
  const char* v = std::getenv("WALLKIT_BUDGET");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw ParseError(std::string("WALLKIT_BUDGET must be a positive integer, got '") + v + "'");
  return static_cast<std::size_t>(n);
}

// Where the input comes from: a file or a built-in.
struct Source {
  std::string file;
  std::string family;   // tv | pride | rips | none
  std::string example;  // example1 | example2
  std::string I = "1,2";
  unsigned k = 7;
  unsigned n_max = 1;
  unsigned scale = 80;
  unsigned j_max = 1;
  unsigned gens = 2;
  std::string n = "1,2,3";
  unsigned x = 2;
  unsigned half_r = 14;

  void add_presentation_options(CLI::App* app, bool with_file = true) {
    if (with_file) app->add_option("file", file, "presentation file");
    app->add_option("--family", family, "built-in presentation: tv, pride, rips or none")
        ->check(CLI::IsMember({"tv", "pride", "rips", "none"}));
    app->add_option("--I", I, "tv: comma separated exponents n");
    app->add_option("--k", k, "tv: power of each relator");
    app->add_option("--n-max", n_max, "pride: number of relator pairs");
    app->add_option("--scale", scale, "rips: block scale");
    app->add_option("--j-max", j_max, "rips: number of relators");
    app->add_option("--gens", gens, "none: number of generators");
  }
  void add_example_options(CLI::App* app) {
    app->add_option("--example", example, "built-in complex: example1 or example2")
        ->check(CLI::IsMember({"example1", "example2"}));
    app->add_option("--n", n, "example1: comma separated theta indices");
    app->add_option("--x", x, "example2: shared segment length");
    app->add_option("--half-r", half_r, "example2: half the cell length");
  }

  bool has_presentation() const { return !file.empty() || !family.empty(); }

  Presentation presentation(std::vector<std::string>* warnings = nullptr) const {
    if (!file.empty() && !family.empty()) throw ParseError("give a file or --family, not both");
    if (!file.empty()) return parse_presentation(read_file(file));
    if (family == "none") {
      std::vector<std::string> names;
      for (unsigned g = 0; g < gens; ++g) names.push_back(gens <= 26 ? std::string(1, char('a' + g)) : "g" + std::to_string(g + 1));
      return Presentation(names, {});
    }
    GeneratedExample ex = [&] {
      if (family == "tv") return gen_example(TvParams{parse_list(I), k});
      if (family == "pride") return gen_example(PrideParams{n_max});
      if (family == "rips") {
        RipsParams p;
        p.scale = scale;
        p.j_max = j_max;
        return gen_example(p);
      }
      throw ParseError("no input: give a presentation file, --family or --example");
    }();
    for (const auto& w : ex.warnings) {
      if (warnings) warnings->push_back(w);
      std::cerr << "warning: " << w << '\n';
    }
    return ex.presentation;
  }

  Complex built_example() const {
    if (example == "example1") {
      auto ns = parse_list(n);
      return build_example1({ns.begin(), ns.end()});
    }
    return build_example2(x, half_r);
  }
};

DehnOptions dehn_options() {
  DehnOptions o;
  if (auto b = env_budget()) o.node_budget = *b;
  return o;
}

BallOptions ball_options() {
  BallOptions o;
  if (auto b = env_budget()) o.vertex_budget = *b;
  return o;
}

int cmd_check(const Source& src, const std::optional<std::string>& lambda_text, bool json) {
  Presentation p = src.presentation();
  Rational lambda = lambda_text ? parse_rational(*lambda_text) : p.lambda();
  if (lambda <= Rational(0) || lambda >= Rational(1)) throw ParseError("lambda must lie in (0,1)");
  PieceIndex index = compute_pieces(p);
  MetricReport m = check_small_cancellation(index, lambda);
  if (json) std::cout << metric_json(m, index).dump(2) << '\n';
  else std::cout << metric_text(m, index);
  return m.pass ? kPass : kFail;
}

int cmd_word(const Source& src, const std::string& word_text) {
  Presentation p = src.presentation();
  DehnMachine m(p, dehn_options());
  if (!m.small_cancellation()) {
    std::cout << "not C'(1/6): the word problem needs a C'(1/6) presentation\n";
    return kFail;
  }
  Word w = parse_word(word_text, p.generators());
  Word reduced = dehn_reduce(w, m);
  std::cout << "word      " << p.format(w) << '\n';
  std::cout << "dehn      " << p.format(reduced) << '\n';
  Word form = shortlex_normal_form(w, m);
  std::cout << "shortlex  " << p.format(form) << '\n';
  std::cout << (reduced.empty() ? "trivial" : "non-trivial") << '\n';
  return kPass;
}

struct Built {
  Complex complex;
  std::optional<Presentation> presentation;
  std::optional<std::uint32_t> radius;
};

Built build_input(const Source& src, std::optional<std::uint32_t> radius, const std::string& complex_file) {
  int sources = src.has_presentation() + !src.example.empty() + !complex_file.empty();
  if (sources == 0) throw ParseError("no input: give a presentation file, --family, --example or --complex");
  if (sources > 1) throw ParseError("give exactly one input");
  if (!complex_file.empty()) return {load_complex(complex_file), std::nullopt, std::nullopt};
  if (!src.example.empty()) return {src.built_example(), std::nullopt, std::nullopt};
  if (!radius) throw ParseError("--radius is required for Cayley balls");
  if (*radius < 1) throw ParseError("--radius must be at least 1");
  Presentation p = src.presentation();
  DehnMachine m(p, dehn_options());
  if (!m.small_cancellation()) {
    auto report = check_small_cancellation(p, p.lambda());
    throw Failure("presentation is not C'(1/6) (max piece ratio " + to_string(report.max_ratio) + ")");
  }
  return {build_cayley_ball(m, *radius, ball_options()), p, radius};
}

struct SeparationArgs {
  std::optional<std::uint32_t> radius;
  std::string complex_file;
  std::string lambda = "1/6";
  bool observe = false;
  unsigned jobs = 0;
  std::string out = "wallkit-out";
  bool dot = false;
  std::string rule = "automatic";
  std::string region = "default";
};

int cmd_separation(const Source& src, const SeparationArgs& a) {
  const fs::path out(a.out);
  Rational lambda = parse_rational(a.lambda);
  if (lambda <= Rational(0) || lambda >= Rational(1)) throw ParseError("lambda must lie in (0,1)");
  WallOptions wo;
  wo.rule = parse_settled_rule(a.rule);
  if (a.region != "default" && a.region != "all") throw ParseError("--region must be default or all");

  Built b;
  try {
    b = build_input(src, a.radius, a.complex_file);
  } catch (const BudgetExceeded& e) {
    nlohmann::json j{{"error", "budget"}, {"message", e.what()}};
    write_file(out / "summary.json", j.dump(2) + "\n");
    throw;
  }
  WallSystem ws = build_walls(b.complex, wo);

  SeparationOptions o;
  o.lambda = lambda;
  o.mode = a.observe ? SeparationMode::Observe : SeparationMode::Verify;
  o.jobs = a.jobs;
  if (a.region == "all") {
    for (VertexId v = 0; v < b.complex.vertex_count(); ++v) o.region.push_back(v);
  }
  // the pairs the built-in examples are about
  if (src.example == "example1") {
    for (unsigned n : parse_list(src.n)) {
      o.anchors.push_back({*b.complex.find_vertex("a" + std::to_string(n)), *b.complex.find_vertex("e" + std::to_string(n))});
    }
  } else if (src.example == "example2") {
    o.anchors.push_back({*b.complex.find_vertex("p'"), *b.complex.find_vertex("p''")});
  }
  SeparationReport r = verify_linear_separation(ws, o);

  nlohmann::json j = separation_json(r, b.complex);
  j["vertices"] = b.complex.vertex_count();
  j["edges"] = b.complex.edge_count();
  j["cells"] = b.complex.cell_count();
  if (b.radius) j["radius"] = *b.radius;
  std::string csv = separation_csv(r, b.complex);
  if (!r.anchors.empty()) {
    // anchors outside the region are appended after the region pairs
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& x : r.pairs) seen.insert({std::min(x.p, x.q), std::max(x.p, x.q)});
    SeparationReport anchors;
    for (const auto& x : r.anchors) {
      if (seen.insert({std::min(x.p, x.q), std::max(x.p, x.q)}).second) anchors.pairs.push_back(x);
    }
    std::string rows = separation_csv(anchors, b.complex);
    csv += rows.substr(rows.find('\n') + 1);
  }
  write_file(out / "separation.csv", csv);
  write_file(out / "summary.json", j.dump(2) + "\n");
  if (a.dot) write_file(out / "walls.dot", walls_dot(ws, true));
  std::cout << j.dump(2) << '\n';
  if (a.observe) return kPass;
  return r.pass ? kPass : kFail;
}

int cmd_walls_dump(const Source& src, std::optional<std::uint32_t> radius, const std::string& complex_file,
                   const std::string& rule, const std::string& dot, std::optional<EdgeId> hyper,
                   const std::string& hyper_dot) {
  WallOptions wo;
  wo.rule = parse_settled_rule(rule);
  Built b = build_input(src, radius, complex_file);
  WallSystem ws = build_walls(b.complex, wo);
  std::cout << dump_walls(ws);
  if (!dot.empty()) write_file(dot, walls_dot(ws, false));
  if (hyper) {
    auto w = ws.find_wall(*hyper);
    if (!w) throw ParseError("no wall with id " + std::to_string(*hyper));
    std::string text = hypergraph_dot(ws, *w);
    if (hyper_dot.empty()) std::cout << text;
    else write_file(hyper_dot, text);
  }
  return kPass;
}

const char* kExampleList =
    "presentations (wallkit examples <name> [options] prints a .pres file):\n"
    "  tv        (a^n b^n)^k for n in --I, power --k\n"
    "  pride     a (a^n b^n)^10, b (a^n b^2n)^10 for n = 1..--n-max\n"
    "  rips      blocks of (xy)^m x y^2 tied to conjugates of a (--scale, --j-max)\n"
    "  none      free group on --gens generators\n"
    "complexes (printed in the complex file format):\n"
    "  example1  theta complexes for --n with d_W(a_n,e_n) = 6\n"
    "  example2  two cells of length 2*--half-r sharing a segment of length --x\n";

int cmd_examples(Source src, const std::string& name) {
  if (name.empty()) {
    std::cout << kExampleList;
    return kPass;
  }
  if (name == "example1" || name == "example2") {
    src.example = name;
    std::cout << write_complex(src.built_example());
    return kPass;
  }
  if (name != "tv" && name != "pride" && name != "rips" && name != "none") {
    throw ParseError("unknown example '" + name + "'");
  }
  src.family = name;
  std::cout << src.presentation().to_text();
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wallkit: small cancellation complexes, walls and linear separation"};
  app.require_subcommand(1);

  Source check_src;
  std::optional<std::string> check_lambda;
  bool check_json = false;
  auto* check = app.add_subcommand("check", "check C'(lambda) for a presentation");
  check_src.add_presentation_options(check);
  check->add_option("--lambda", check_lambda, "rational, e.g. 1/6 (default: the file's, else 1/6)");
  check->add_flag("--json", check_json, "JSON report");

  Source sep_src;
  SeparationArgs sep;
  auto* separation = app.add_subcommand("separation", "compare wall and path metrics on a ball or example");
  sep_src.add_presentation_options(separation);
  sep_src.add_example_options(separation);
  separation->add_option("--complex", sep.complex_file, "complex file");
  separation->add_option("--radius", sep.radius, "Cayley ball radius");
  separation->add_option("--lambda", sep.lambda, "lambda for the constant (default 1/6)");
  separation->add_flag("--observe", sep.observe, "record ratios without a verdict");
  separation->add_option("--jobs", sep.jobs, "worker threads (default: all cores)");
  separation->add_option("--out", sep.out, "output directory (default wallkit-out)");
  separation->add_flag("--dot", sep.dot, "also write walls.dot");
  separation->add_option("--settled-rule", sep.rule, "automatic, margin, intrinsic or all");
  separation->add_option("--region", sep.region, "default or all");

  Source word_src;
  std::vector<std::string> word_args;
  auto* word = app.add_subcommand("word", "solve the word problem for one word");
  word->alias("word-problem");
  word_src.add_presentation_options(word, false);
  word->add_option("args", word_args, "[presentation file] word")->expected(1, 2)->required();

  Source dump_src;
  std::optional<std::uint32_t> dump_radius;
  std::string dump_complex, dump_rule = "automatic", dump_dot, hyper_dot;
  std::optional<EdgeId> hyper;
  auto* dump = app.add_subcommand("walls-dump", "list walls with their edges and hyperedges");
  dump_src.add_presentation_options(dump);
  dump_src.add_example_options(dump);
  dump->add_option("--complex", dump_complex, "complex file");
  dump->add_option("--radius", dump_radius, "Cayley ball radius");
  dump->add_option("--settled-rule", dump_rule, "automatic, margin, intrinsic or all");
  dump->add_option("--dot", dump_dot, "write the 1-skeleton coloured by wall to this file");
  dump->add_option("--hypergraph", hyper, "wall id whose hypergraph is emitted as DOT");
  dump->add_option("--hypergraph-dot", hyper_dot, "file for --hypergraph (default stdout)");

  Source ex_src;
  std::string ex_name;
  auto* examples = app.add_subcommand("examples", "list or print built-in examples");
  examples->add_option("name", ex_name, "example to print");
  ex_src.add_presentation_options(examples, false);
  examples->add_option("--n", ex_src.n, "example1: comma separated theta indices");
  examples->add_option("--x", ex_src.x, "example2: shared segment length");
  examples->add_option("--half-r", ex_src.half_r, "example2: half the cell length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*check) return cmd_check(check_src, check_lambda, check_json);
    if (*separation) return cmd_separation(sep_src, sep);
    if (*word) {
      if (word_args.size() == 2) word_src.file = word_args[0];
      return cmd_word(word_src, word_args.back());
    }
    if (*dump) return cmd_walls_dump(dump_src, dump_radius, dump_complex, dump_rule, dump_dot, hyper, hyper_dot);
    if (*examples) return cmd_examples(ex_src, ex_name);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const Failure& e) {
    std::cerr << e.what() << '\n';
    return kFail;
  } catch (const NotSmallCancellation& e) {
    std::cerr << e.what() << '\n';
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
