// Command-line front end: generate models, encode them, run queries, verify
// against the brute-force intersection oracle, report space, and run the
// counting-structure distinctness check.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or format error.

#include "chordal/encoded_graph.hpp"
#include "chordal/generator.hpp"
#include "chordal/lower_bound.hpp"
#include "chordal/oracle.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

namespace {

using namespace chordal;

std::vector<std::uint8_t> read_blob(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open blob file: " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_blob(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open output file: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

std::uint64_t seed_from_env(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("CHORDAL_SEED")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    throw std::invalid_argument("CHORDAL_SEED is not an integer");
  }
  return flag_seed;
}

OddMode parse_odd_mode(const std::string& s) {
  if (s == "root-pair") return OddMode::kRootPair;
  if (s == "augment") return OddMode::kAugment;
  throw std::invalid_argument("--odd-mode must be root-pair or augment");
}

void print_space(const SpaceReport& r) {
  std::cout << "n=" << r.n << " k=" << r.k << " tree_nodes=" << r.tree_nodes
            << " stored_paths=" << r.stored_paths << '\n';
  std::cout << "tree_bits=" << r.tree_bits << " store_endpoint_bits=" << r.store_endpoint_bits
            << " path_count_bits=" << r.path_count_bits << " first_pos_bits=" << r.first_pos_bits
            << " owner_bits=" << r.owner_bits << " perm_bits=" << r.perm_bits
            << " connector_flag_bits=" << r.connector_flag_bits
            << " first_flag_bits=" << r.first_flag_bits
            << " apex_record_bits=" << r.apex_record_bits << '\n';
  std::cout << "total_bits=" << r.total_bits << " reference_bits=" << r.reference_bits << '\n';
}

int cmd_gen(std::uint32_t n, std::uint32_t k, std::uint32_t t, std::uint64_t seed,
            double singleton_frac, double kleaf_frac, const std::string& out) {
  GenParams p;
  p.n = n;
  p.k = k;
  p.tree_nodes = t;
  p.seed = seed_from_env(seed);
  p.singleton_frac = singleton_frac;
  p.kleaf_frac = kleaf_frac;
  TreeModel m = gen_model(p);
  m.write_file(out);
  std::cout << "wrote " << out << " n=" << m.vertex_count() << " k=" << m.k
            << " tree_nodes=" << m.tree_nodes << " seed=" << p.seed << '\n';
  return 0;
}

int cmd_encode(const std::string& model_path, const std::string& out,
               const std::string& odd_mode) {
  TreeModel m = TreeModel::parse_file(model_path);
  EncodedGraph g = EncodedGraph::build(m, parse_odd_mode(odd_mode));
  write_blob(out, g.serialize());
  print_space(g.space_report());
  return 0;
}

int cmd_stats(const std::string& blob_path) {
  EncodedGraph g = EncodedGraph::deserialize(read_blob(blob_path));
  print_space(g.space_report());
  return 0;
}

int cmd_query(const std::string& blob_path, const std::string& op,
              const std::vector<std::uint64_t>& args) {
  EncodedGraph g = EncodedGraph::deserialize(read_blob(blob_path));
  auto vertex_arg = [&](std::size_t idx) {
    if (idx >= args.size()) throw std::invalid_argument("missing vertex argument");
    std::uint64_t v = args[idx];
    if (v < 1 || v > g.vertex_count()) throw std::out_of_range("vertex index out of range");
    return g.internal_of(static_cast<Vertex>(v));
  };
  if (op == "adj") {
    if (args.size() != 2) throw std::invalid_argument("adj needs two vertex arguments");
    std::cout << (g.adjacent(vertex_arg(0), vertex_arg(1)) ? "true" : "false") << '\n';
  } else if (op == "nbh") {
    if (args.size() != 1) throw std::invalid_argument("nbh needs one vertex argument");
    std::vector<Vertex> orig;
    for (Vertex v : g.neighbourhood(vertex_arg(0))) orig.push_back(g.original_of(v));
    std::sort(orig.begin(), orig.end());
    for (std::size_t i = 0; i < orig.size(); ++i) std::cout << orig[i] << (i + 1 == orig.size() ? "" : " ");
    std::cout << '\n';
  } else if (op == "deg") {
    if (args.size() != 1) throw std::invalid_argument("deg needs one vertex argument");
    std::cout << g.degree(vertex_arg(0)) << '\n';
  } else {
    throw std::invalid_argument("unknown query op: " + op + " (use adj|nbh|deg)");
  }
  return 0;
}

int cmd_verify(const std::string& model_path, const std::string& odd_mode) {
  TreeModel m = TreeModel::parse_file(model_path);
  OracleGraph oracle = oracle_graph(m);
  EncodedGraph g = EncodedGraph::build(m, parse_odd_mode(odd_mode));
  std::uint32_t n = g.vertex_count();
  std::uint64_t pairs = 0;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = 1; b <= n; ++b) {
      if (a == b) continue;
      bool got = g.adjacent(g.internal_of(a), g.internal_of(b));
      bool expected = oracle.adjacent(a, b);
      ++pairs;
      if (got != expected) {
        std::cout << "FAIL adjacency " << a << ' ' << b << " expected "
                  << (expected ? "true" : "false") << " got " << (got ? "true" : "false") << '\n';
        return 1;
      }
    }
  }
  for (Vertex a = 1; a <= n; ++a) {
    std::vector<Vertex> got;
    for (Vertex v : g.neighbourhood(g.internal_of(a))) got.push_back(g.original_of(v));
    std::sort(got.begin(), got.end());
    std::vector<Vertex> expected = oracle.neighbourhood(a);
    if (got != expected) {
      std::cout << "FAIL neighbourhood " << a << " expected {";
      for (auto v : expected) std::cout << v << ' ';
      std::cout << "} got {";
      for (auto v : got) std::cout << v << ' ';
      std::cout << "}\n";
      return 1;
    }
  }
  std::cout << "PASS n=" << n << " pairs=" << pairs << " neighbourhoods=" << n << '\n';
  return 0;
}

int cmd_lbcheck(std::uint32_t m, std::uint32_t k, std::uint32_t dep, std::uint64_t cap,
                std::uint64_t seed, const std::string& csv_path) {
  LBInstance inst{m, k, dep};
  inst.validate();
  DistinctnessReport rep = lb_distinctness(inst, cap, seed_from_env(seed));
  std::cout << "m=" << m << " k=" << k << " dep=" << dep
            << " fixed=" << inst.fixed_dependents() << " structures=" << rep.structures
            << " distinct=" << rep.distinct << " exhaustive=" << (rep.exhaustive ? 1 : 0)
            << " all_distinct=" << (rep.all_distinct ? "true" : "false") << '\n';
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw FormatError("cannot open csv file: " + csv_path);
    csv << "m,k,dep,structures,distinct,all_distinct\n"
        << m << ',' << k << ',' << dep << ',' << rep.structures << ',' << rep.distinct << ','
        << (rep.all_distinct ? "true" : "false") << '\n';
  }
  if (rep.witness) {
    auto print_tuple = [](const std::vector<NodeSet>& tup) {
      for (const auto& s : tup) {
        std::cout << '{';
        for (std::size_t i = 0; i < s.size(); ++i) std::cout << s[i] << (i + 1 == s.size() ? "" : ",");
        std::cout << '}';
      }
    };
    std::cout << "witness ";
    print_tuple(rep.witness->first);
    std::cout << " vs ";
    print_tuple(rep.witness->second);
    std::cout << " span identical node sets\n";
  }
  return rep.all_distinct ? 0 : 1;
}

int cmd_bench(const std::string& blob_path, std::uint64_t queries, std::uint64_t seed) {
  EncodedGraph g = EncodedGraph::deserialize(read_blob(blob_path));
  std::mt19937_64 rng(seed_from_env(seed));
  std::uniform_int_distribution<Vertex> pick(1, g.vertex_count());
  using clock = std::chrono::steady_clock;

  std::uint64_t hits = 0;
  auto t0 = clock::now();
  for (std::uint64_t q = 0; q < queries; ++q) {
    Vertex a = pick(rng), b = pick(rng);
    if (a == b) continue;
    hits += g.adjacent(a, b) ? 1 : 0;
  }
  auto t1 = clock::now();
  std::uint64_t total_nbh = 0;
  for (std::uint64_t q = 0; q < queries; ++q) total_nbh += g.neighbourhood(pick(rng)).size();
  auto t2 = clock::now();

  auto us = [](auto d) { return std::chrono::duration_cast<std::chrono::microseconds>(d).count(); };
  std::cout << "queries=" << queries << " adjacency_us=" << us(t1 - t0)
            << " neighbourhood_us=" << us(t2 - t1) << " adj_hits=" << hits
            << " nbh_sum=" << total_nbh << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"succinct chordal-graph encoder over tree models"};
  app.require_subcommand(1);

  std::uint32_t n = 1, k = 2, t = 1, m = 7, dep = 1;
  std::uint64_t seed = 0, cap = 1'000'000, queries = 10'000;
  double singleton_frac = 0.20, kleaf_frac = 0.20;
  std::string model_path, blob_path, out_path, csv_path, odd_mode = "root-pair", op;
  std::vector<std::uint64_t> qargs;

  auto* gen = app.add_subcommand("gen", "generate a random model file");
  gen->add_option("-n", n, "graph vertices")->required();
  gen->add_option("-k", k, "leaf bound")->required();
  gen->add_option("-t", t, "tree nodes")->required();
  gen->add_option("--seed", seed, "rng seed (CHORDAL_SEED overrides)");
  gen->add_option("--singleton-frac", singleton_frac, "fraction of single-node subtrees");
  gen->add_option("--kleaf-frac", kleaf_frac, "fraction of subtrees saturating the leaf bound");
  gen->add_option("-o,--out", out_path, "output model path")->required();

  auto* enc = app.add_subcommand("encode", "encode a model into a blob");
  enc->add_option("model", model_path, "model file")->required();
  enc->add_option("-o,--out", out_path, "output blob path")->required();
  enc->add_option("--odd-mode", odd_mode, "root-pair|augment");

  auto* st = app.add_subcommand("stats", "print the space report of a blob");
  st->add_option("blob", blob_path, "encoded blob")->required();

  auto* qu = app.add_subcommand("query", "run adj|nbh|deg against a blob");
  qu->add_option("blob", blob_path, "encoded blob")->required();
  qu->add_option("op", op, "adj|nbh|deg")->required();
  qu->add_option("args", qargs, "vertex arguments");

  auto* ver = app.add_subcommand("verify", "encode and compare against the oracle");
  ver->add_option("model", model_path, "model file")->required();
  ver->add_option("--odd-mode", odd_mode, "root-pair|augment");

  auto* lb = app.add_subcommand("lbcheck", "distinctness check of the counting structures");
  lb->add_option("-m", m, "basis tree nodes (2^h - 1)")->required();
  lb->add_option("-k", k, "leaf bound")->required();
  lb->add_option("--dep", dep, "free dependent vertices");
  lb->add_option("--cap", cap, "exhaustive limit / sample size");
  lb->add_option("--seed", seed, "sampling seed (CHORDAL_SEED overrides)");
  lb->add_option("--csv", csv_path, "also write a one-line csv report");

  auto* be = app.add_subcommand("bench", "time random queries against a blob");
  be->add_option("blob", blob_path, "encoded blob")->required();
  be->add_option("--queries", queries, "query count");
  be->add_option("--seed", seed, "rng seed (CHORDAL_SEED overrides)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(n, k, t, seed, singleton_frac, kleaf_frac, out_path);
    if (enc->parsed()) return cmd_encode(model_path, out_path, odd_mode);
    if (st->parsed()) return cmd_stats(blob_path);
    if (qu->parsed()) return cmd_query(blob_path, op, qargs);
    if (ver->parsed()) return cmd_verify(model_path, odd_mode);
    if (lb->parsed()) return cmd_lbcheck(m, k, dep, cap, seed, csv_path);
    if (be->parsed()) return cmd_bench(blob_path, queries, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
