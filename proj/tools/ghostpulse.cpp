// Copyright 2026 The ghostpulse Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ghostpulse command-line front end.
//
// Exit codes: 0 success, 1 domain error, 2 usage or parse error,
// 3 search budget exceeded. Results go to stdout, diagnostics to stderr.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ghostpulse.hpp"
#include "ghostpulse/graph_io.hpp"

namespace gp = ghostpulse;

namespace {

struct Output {
  int precision = 4;

  std::string fixed(double v) const {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << v;
    return os.str();
  }
};

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gp::ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_all(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gp::Error("cannot write " + path);
  out << data;
}

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

gp::BinaryWord bits_from_bytes(const std::string& bytes) {
  gp::BinaryWord w;
  for (unsigned char c : bytes) {
    for (int i = 7; i >= 0; --i) w.push_back((c >> i) & 1);
  }
  return w;
}

std::string bytes_from_bits(const gp::BinaryWord& w) {
  if (w.size() % 8 != 0) throw gp::DomainError("payload is not a whole number of bytes");
  std::string out;
  for (std::size_t i = 0; i < w.size(); i += 8) {
    unsigned v = 0;
    for (std::size_t k = 0; k < 8; ++k) v = (v << 1) | static_cast<unsigned>(w[i + k]);
    out.push_back(static_cast<char>(v));
  }
  return out;
}

gp::Window window_of(int t) { return t > 0 ? gp::Window::of(t) : gp::Window::unbounded(); }

// ---------------------------------------------------------------------------

struct CheckArgs {
  bool bgp = false, tgp = false, tgp1 = false, tgp2 = false, b3 = false;
  int bgpt = 0, tgpt = 0, rll = -1, b3t = 0;
  std::string word;
  std::string file;
};

std::string check_one(const CheckArgs& a, const std::string& text) {
  auto triple = [](const std::optional<gp::Triple>& v) {
    if (!v) return std::string("true");
    return "false (" + std::to_string(v->k) + "," + std::to_string(v->l) + "," + std::to_string(v->m) + "," +
           std::to_string(v->target) + ")";
  };
  if (a.bgp || a.bgpt > 0) {
    return triple(gp::find_violation(gp::BinaryWord::parse(text), window_of(a.bgpt)));
  }
  if (a.tgp || a.tgpt > 0 || a.tgp1 || a.tgp2) {
    const int t = a.tgp1 ? 1 : a.tgp2 ? 2 : a.tgpt;
    return triple(gp::find_violation(gp::TernaryWord::parse(text), window_of(t)));
  }
  if (a.rll >= 0) return gp::check_rll(gp::BinaryWord::parse(text), a.rll) ? "true" : "false";
  if (a.b3 || a.b3t > 0) {
    auto x = gp::in_b3_membership(gp::BinaryWord::parse(text), window_of(a.b3t));
    return x ? "true " + x->str() : "false";
  }
  throw CLI::ValidationError("check", "choose a constraint flag");
}

int cmd_check(const CheckArgs& a) {
  std::vector<std::string> inputs;
  if (!a.file.empty()) {
    std::istringstream in(read_all(a.file));
    for (std::string line; std::getline(in, line);) {
      const std::string w = strip(line);
      if (!w.empty()) inputs.push_back(w);
    }
  } else if (!a.word.empty()) {
    inputs.push_back(a.word);
  }
  if (inputs.empty()) throw gp::ParseError("no word given");
  for (const auto& w : inputs) std::cout << check_one(a, w) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct TableArgs {
  std::string which;
  int tmax = 20;
  int nmax = 16;
  int window = 0;
  unsigned threads = 1;
  std::uint64_t budget = 1'000'000'000ull;
};

int cmd_tables(const TableArgs& a, const Output& out) {
  if (a.which == "table1") {
    std::cout << "t,capacity\n";
    for (int t = 1; t <= a.tmax; ++t) std::cout << t << ',' << out.fixed(gp::h2(t)) << '\n';
    return 0;
  }
  gp::SearchOptions opt;
  opt.node_budget = a.budget;
  opt.threads = a.threads;
  std::cerr << "searching lengths 1.." << a.nmax << "\n";
  const gp::CountTable table = gp::b3_table(a.nmax, window_of(a.window), opt);
  if (a.which == "table2") {
    gp::write_csv(std::cout, table);
  } else {
    gp::write_csv(std::cout, gp::rate_series(table), out.precision);
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct CapacityArgs {
  int bgpt = 0;
  bool tgp1 = false, tgp2 = false;
  int tgpt_prime = 0;
  std::string route = "gf";
};

int cmd_capacity(const CapacityArgs& a, const Output& out) {
  if (a.bgpt > 0) {
    std::cout << out.fixed(gp::h2(a.bgpt)) << '\n';
  } else if (a.tgp1) {
    std::cout << out.fixed(gp::h3_1()) << '\n';
  } else if (a.tgp2) {
    const gp::H32Report r = gp::h3_2_report();
    if (a.route == "gf") {
      std::cout << out.fixed(r.gf_capacity) << '\n';
    } else if (a.route == "cover") {
      std::cout << out.fixed(r.cover_capacity) << '\n';
    } else {
      std::cout << "route,root,capacity\n"
                << "gf," << out.fixed(r.gf_root) << ',' << out.fixed(r.gf_capacity) << '\n'
                << "cover," << out.fixed(r.cover_root) << ',' << out.fixed(r.cover_capacity) << '\n';
    }
  } else if (a.tgpt_prime > 0) {
    std::cout << out.fixed(gp::h_prime_3(a.tgpt_prime)) << '\n';
  } else {
    throw CLI::ValidationError("capacity", "choose --bgpt, --tgp1, --tgp2 or --tgpt-prime");
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  std::string what;
  int n = 1;
  int q = 3;
  int window = 0;
};

int cmd_enumerate(const EnumerateArgs& a) {
  if (a.what == "b2") {
    for (const auto& w : gp::enum_b2(a.n)) std::cout << w.str() << '\n';
  } else if (a.what == "count-b2") {
    std::cout << gp::count_b2_closed(a.n) << '\n';
  } else if (a.what == "count-b3") {
    std::cout << gp::count_b3(a.n, window_of(a.window)) << '\n';
  } else if (a.what == "brute") {
    std::cout << gp::count_by_brute_force(gp::ConstraintSpec(a.q, window_of(a.window)), a.n) << '\n';
  } else if (a.what == "f2-series") {
    gp::write_csv(std::cout, gp::gf_series(gp::f2_generating_function(), a.n));
  } else {
    throw CLI::ValidationError("enumerate", "unknown target " + a.what);
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct CodecArgs {
  std::string scheme;
  std::string input;
  std::string output;
  std::string format = "ascii";  // payload format: ascii bits or raw bytes
  int n = 16;
  int t = 1;
  int p = 4;
  int q = 7;
  bool no_transform = false;
  double bias = 0.0;
};

gp::StuffConfig stuff_config(const CodecArgs& a) {
  gp::StuffConfig cfg = gp::StuffConfig::optimal(a.t);
  if (a.bias > 0.0) cfg.bias = a.bias;
  cfg.transform = !a.no_transform;
  return cfg;
}

gp::BinaryWord read_payload(const CodecArgs& a) {
  const std::string data = read_all(a.input);
  return a.format == "raw" ? bits_from_bytes(data) : gp::BinaryWord::parse(strip(data));
}

void write_payload(const CodecArgs& a, const gp::BinaryWord& w) {
  write_all(a.output, a.format == "raw" ? bytes_from_bits(w) : w.str() + "\n");
}

int cmd_encode(const CodecArgs& a) {
  const gp::BinaryWord payload = read_payload(a);
  std::string word;
  if (a.scheme == "bgp-enum") {
    const gp::BgpEnumCodec codec(a.n);
    word = codec.encode(gp::frame_payload(payload, codec.payload_bits())).str();
  } else if (a.scheme == "rll-stuff") {
    word = gp::bit_stuff_encode(payload, stuff_config(a)).str();
  } else if (a.scheme == "rll-block") {
    const auto enc = gp::build_block_encoder(gp::rll_presentation(a.t), a.p, a.q);
    word = enc.encode(gp::frame_payload(payload, a.p)).str();
  } else if (a.scheme == "tgp1") {
    word = gp::tgp1_encode(payload).str();
  } else if (a.scheme == "tgp2") {
    const auto& codec = gp::default_tgp2_codec();
    word = codec.encode(gp::frame_payload(payload, codec.p())).str();
  } else {
    throw CLI::ValidationError("encode", "unknown scheme " + a.scheme);
  }
  write_all(a.output, word + "\n");
  return 0;
}

int cmd_decode(const CodecArgs& a) {
  const std::string text = strip(read_all(a.input));
  gp::BinaryWord payload;
  if (a.scheme == "bgp-enum") {
    payload = gp::unframe_payload(gp::BgpEnumCodec(a.n).decode(gp::BinaryWord::parse(text)));
  } else if (a.scheme == "rll-stuff") {
    payload = gp::bit_stuff_decode(gp::BinaryWord::parse(text), stuff_config(a));
  } else if (a.scheme == "rll-block") {
    const auto enc = gp::build_block_encoder(gp::rll_presentation(a.t), a.p, a.q);
    payload = gp::unframe_payload(enc.decode(gp::BinaryWord::parse(text)));
  } else if (a.scheme == "tgp1") {
    payload = gp::tgp1_decode(gp::TernaryWord::parse(text));
  } else if (a.scheme == "tgp2") {
    payload = gp::unframe_payload(gp::default_tgp2_codec().decode(gp::TernaryWord::parse(text)));
  } else {
    throw CLI::ValidationError("decode", "unknown scheme " + a.scheme);
  }
  write_payload(a, payload);
  return 0;
}

// ---------------------------------------------------------------------------

struct GraphArgs {
  std::string source;
  std::vector<std::string> params;
  std::string import_json;
  bool trim = false, project = false, determinize = false, minimize = false, pipeline = false;
  bool spectral = false, char_poly = false;
  std::string export_dot, export_json;
  std::size_t max_states = 2'000'000;
};

gp::LabeledGraph graph_source(const GraphArgs& a) {
  auto int_param = [&](const char* what) {
    if (a.params.size() != 1) throw gp::ParseError(std::string(what) + " takes one integer parameter");
    try {
      return std::stoi(a.params[0]);
    } catch (const std::exception&) {
      throw gp::ParseError("not an integer: " + a.params[0]);
    }
  };
  if (a.source == "build-g3t") return gp::build_g3t(int_param("build-g3t"));
  if (a.source == "rll") return gp::rll_presentation(int_param("rll")).graph();
  if (a.source == "forbidden") {
    std::vector<gp::BinaryWord> blocks;
    for (const auto& s : a.params) blocks.push_back(gp::BinaryWord::parse(s));
    return gp::forbidden_block_presentation(blocks).graph();
  }
  if (a.source == "f2") return gp::forbidden_block_presentation(gp::f2_blocks()).graph();
  if (a.source == "import") return gp::graph_from_json(read_all(a.import_json));
  throw CLI::ValidationError("graph", "unknown source " + a.source);
}

int cmd_graph(const GraphArgs& a, const Output& out) {
  gp::LabeledGraph g = graph_source(a);
  const bool all = a.pipeline;
  if (a.trim || all) g = gp::trim_essential(g);
  if ((a.project || all) && g.alphabet_size() == 3) g = gp::project_abs(g);
  if (a.determinize || all) g = gp::determinize(g, {.max_states = a.max_states, .trim = true}).graph();
  if (a.minimize || all) g = gp::minimize(gp::DetGraph(g)).graph();
  bool printed = false;
  if (!a.export_dot.empty()) write_all(a.export_dot, gp::to_dot(g));
  if (!a.export_json.empty()) write_all(a.export_json, gp::to_json(g).dump(2) + "\n");
  if (a.spectral) {
    const double lambda = gp::spectral_radius(g);
    std::cout << "spectral_radius,capacity\n"
              << out.fixed(lambda) << ',' << out.fixed(lambda > 0 ? std::log2(lambda) : 0.0) << '\n';
    printed = true;
  }
  if (a.char_poly) {
    std::cout << gp::char_poly(gp::adjacency(g)).str() << '\n';
    printed = true;
  }
  if (!printed && a.export_dot != "-" && a.export_json != "-") {
    std::cout << "vertices,edges,deterministic\n"
              << g.vertex_count() << ',' << g.edge_count() << ',' << (g.is_deterministic() ? "true" : "false") << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct SimArgs {
  std::string word;
  int window = 0;
  int rounds = 1;
};

int cmd_sim(const SimArgs& a) {
  const std::string text = strip(a.word);
  gp::BinaryWord b;
  if (text.find_first_of("+-") != std::string::npos) {
    b = gp::abs_project(gp::TernaryWord::parse(text));
  } else {
    b = gp::BinaryWord::parse(text);
  }
  const gp::ChannelTrace tr = gp::simulate_ghost_pulses(b, {window_of(a.window), a.rounds});
  std::cout << "round,flips,word\n0,0," << b.str() << '\n';
  for (std::size_t i = 0; i < tr.rounds.size(); ++i) {
    std::cout << i + 1 << ',' << tr.rounds[i].flips << ',' << tr.rounds[i].word.str() << '\n';
  }
  std::cout << "fixed_point," << (tr.fixed_point ? "true" : "false") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ghost-pulse constrained coding toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--precision", out.precision, "Decimal places for real-valued output")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Test a word against a constraint");
  c->add_flag("--bgp", check.bgp, "Binary ghost-pulse constraint");
  c->add_option("--bgpt", check.bgpt, "Binary constraint with window t")->check(CLI::PositiveNumber);
  c->add_flag("--tgp", check.tgp, "Ternary ghost-pulse constraint");
  c->add_option("--tgpt", check.tgpt, "Ternary constraint with window t")->check(CLI::PositiveNumber);
  c->add_flag("--tgp1", check.tgp1, "Ternary constraint, window 1");
  c->add_flag("--tgp2", check.tgp2, "Ternary constraint, window 2");
  c->add_option("--rll", check.rll, "(t,inf) run-length constraint")->check(CLI::NonNegativeNumber);
  c->add_flag("--b3", check.b3, "Binary word admits a ternary sign assignment");
  c->add_option("--b3t", check.b3t, "As --b3 with window t")->check(CLI::PositiveNumber);
  c->add_option("word", check.word, "Word in ASCII form");
  c->add_option("--file", check.file, "File with one word per line ('-' for stdin)");

  TableArgs tables;
  auto* tb = app.add_subcommand("tables", "Reproduce capacity and count tables as CSV");
  tb->add_option("which", tables.which, "table1 | table2 | fig4")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "fig4"}));
  tb->add_option("--tmax", tables.tmax, "Largest t for table1")->check(CLI::Range(1, 64))->capture_default_str();
  tb->add_option("--nmax", tables.nmax, "Largest n for table2/fig4")->check(CLI::Range(1, 60))->capture_default_str();
  tb->add_option("--window", tables.window, "Window t (0 = unbounded)")->check(CLI::NonNegativeNumber);
  tb->add_option("--threads", tables.threads, "Search threads")->check(CLI::Range(1, 256));
  tb->add_option("--budget", tables.budget, "Search node budget")->capture_default_str();

  CapacityArgs cap;
  auto* cp = app.add_subcommand("capacity", "Print a capacity value");
  cp->add_option("--bgpt", cap.bgpt, "Binary constraint with window t")->check(CLI::PositiveNumber);
  cp->add_flag("--tgp1", cap.tgp1, "Ternary constraint, window 1");
  cp->add_flag("--tgp2", cap.tgp2, "Ternary constraint, window 2");
  cp->add_option("--route", cap.route, "For --tgp2: gf | cover | both")
      ->check(CLI::IsMember({"gf", "cover", "both"}))
      ->capture_default_str();
  cp->add_option("--tgpt-prime", cap.tgpt_prime, "Capacity of the extendable projections, window t")
      ->check(CLI::PositiveNumber);

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "Count or list constrained words");
  e->add_option("what", en.what, "b2 | count-b2 | count-b3 | brute | f2-series")
      ->required()
      ->check(CLI::IsMember({"b2", "count-b2", "count-b3", "brute", "f2-series"}));
  e->add_option("n", en.n, "Word length")->required()->check(CLI::NonNegativeNumber);
  e->add_option("--q", en.q, "Alphabet size for brute")->check(CLI::IsMember({2, 3}))->capture_default_str();
  e->add_option("--window", en.window, "Window t (0 = unbounded)")->check(CLI::NonNegativeNumber);

  CodecArgs enc_args, dec_args;
  auto add_codec = [](CLI::App* sub, CodecArgs& a) {
    sub->add_option("--scheme", a.scheme, "bgp-enum | rll-stuff | rll-block | tgp1 | tgp2")
        ->required()
        ->check(CLI::IsMember({"bgp-enum", "rll-stuff", "rll-block", "tgp1", "tgp2"}));
    sub->add_option("-i,--input", a.input, "Input file ('-' or omitted for stdin)");
    sub->add_option("-o,--output", a.output, "Output file ('-' or omitted for stdout)");
    sub->add_option("--format", a.format, "Payload format: ascii | raw")
        ->check(CLI::IsMember({"ascii", "raw"}))
        ->capture_default_str();
    sub->add_option("--n", a.n, "Block length for bgp-enum")->check(CLI::Range(2, 4096))->capture_default_str();
    sub->add_option("--t", a.t, "Run-length parameter for rll schemes")->check(CLI::Range(1, 32))->capture_default_str();
    sub->add_option("--p", a.p, "Input bits per block for rll-block")->check(CLI::Range(1, 20))->capture_default_str();
    sub->add_option("--q", a.q, "Output bits per block for rll-block")->check(CLI::Range(1, 62))->capture_default_str();
    sub->add_flag("--no-transform", a.no_transform, "rll-stuff: stuff the payload directly");
    sub->add_option("--bias", a.bias, "rll-stuff: probability of zero (default optimal)");
  };
  auto* enc = app.add_subcommand("encode", "Encode a payload into constrained words");
  add_codec(enc, enc_args);
  auto* dec = app.add_subcommand("decode", "Decode constrained words back to the payload");
  add_codec(dec, dec_args);

  GraphArgs ga;
  auto* gr = app.add_subcommand("graph", "Build and transform labeled-graph presentations");
  gr->add_option("source", ga.source, "build-g3t T | rll T | forbidden B... | f2 | import")
      ->required()
      ->check(CLI::IsMember({"build-g3t", "rll", "forbidden", "f2", "import"}));
  gr->add_option("params", ga.params, "Source parameters");
  gr->add_option("--json", ga.import_json, "JSON file for the import source");
  gr->add_flag("--trim", ga.trim, "Keep only the essential part");
  gr->add_flag("--project", ga.project, "Replace ternary labels by absolute values");
  gr->add_flag("--determinize", ga.determinize, "Subset construction");
  gr->add_flag("--minimize", ga.minimize, "Merge states with equal follower sets");
  gr->add_flag("--pipeline", ga.pipeline, "Trim, project, determinize and minimize");
  gr->add_flag("--spectral", ga.spectral, "Print spectral radius and log2 of it");
  gr->add_flag("--char-poly", ga.char_poly, "Print the characteristic polynomial");
  gr->add_option("--export-dot", ga.export_dot, "Write DOT ('-' for stdout)");
  gr->add_option("--export-json", ga.export_json, "Write JSON ('-' for stdout)");
  gr->add_option("--max-states", ga.max_states, "Subset construction state budget")->capture_default_str();

  SimArgs sim;
  auto* s = app.add_subcommand("sim", "Run the ghost-pulse channel on a word");
  s->add_option("word", sim.word, "Binary or ternary word")->required();
  s->add_option("--window", sim.window, "Window t (0 = unbounded)")->check(CLI::NonNegativeNumber);
  s->add_option("--rounds", sim.rounds, "Maximum rounds")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c) return cmd_check(check);
    if (*tb) return cmd_tables(tables, out);
    if (*cp) return cmd_capacity(cap, out);
    if (*e) return cmd_enumerate(en);
    if (*enc) return cmd_encode(enc_args);
    if (*dec) return cmd_decode(dec_args);
    if (*gr) return cmd_graph(ga, out);
    if (*s) return cmd_sim(sim);
  } catch (const CLI::Error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  } catch (const gp::ParseError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  } catch (const gp::BudgetExceeded& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 3;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 2;
}
