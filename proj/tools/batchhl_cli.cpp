// Command-line front end: build, update, query, bench, generate.
//
// A labelling file <L> is accompanied by <L>.ids, the external id of every dense
// vertex id in order, so later commands can map graph and batch files onto it.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "batchhl/dynamizer.hpp"
#include "batchhl/graph.hpp"
#include "batchhl/labelling.hpp"
#include "batchhl/query.hpp"
#include "batchhl/serialize.hpp"
#include "batchhl/workload.hpp"

using namespace batchhl;
using Clock = std::chrono::steady_clock;

namespace {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::ifstream open_in(const std::string& path, bool binary = false) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw CliError("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream out(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
  if (!out) throw CliError("cannot write " + path);
  return out;
}

std::string ids_path(const std::string& labels) { return labels + ".ids"; }

LoadedGraph load_graph(const std::string& path, IdMap seed = {}) {
  auto in = open_in(path);
  try {
    return load_edge_list(in, std::move(seed));
  } catch (const ParseError& e) {
    throw CliError(path + ": " + e.what());
  }
}

IdMap read_ids(const std::string& path) {
  auto in = open_in(path);
  std::vector<std::int64_t> ext;
  std::int64_t x;
  while (in >> x) ext.push_back(x);
  if (!in.eof()) throw CliError(path + ": malformed id list");
  return IdMap(std::move(ext));
}

void write_ids(const std::string& path, const IdMap& ids) {
  auto out = open_out(path);
  for (auto x : ids.externals()) out << x << '\n';
}

void save_labelling(const std::string& path, const HighwayCoverLabelling& gamma, const IdMap& ids) {
  auto out = open_out(path, true);
  write_labelling(out, gamma);
  write_ids(ids_path(path), ids);
}

HighwayCoverLabelling load_labelling(const std::string& path) {
  auto in = open_in(path, true);
  try {
    return read_labelling(in);
  } catch (const LabellingFormatError& e) {
    throw CliError(path + ": " + e.what());
  }
}

/// Graph and labelling loaded together, with the graph's ids continuing the sidecar.
struct Indexed {
  LoadedGraph loaded;
  HighwayCoverLabelling gamma;
};

Indexed load_indexed(const std::string& graph_path, const std::string& labels_path) {
  auto gamma = load_labelling(labels_path);
  auto ids = read_ids(ids_path(labels_path));
  if (ids.size() != gamma.num_vertices()) {
    throw CliError("consistency error: " + ids_path(labels_path) + " lists " + std::to_string(ids.size()) +
                   " ids but the labelling has " + std::to_string(gamma.num_vertices()) + " vertices");
  }
  auto loaded = load_graph(graph_path, std::move(ids));
  if (loaded.graph.num_vertices() != gamma.num_vertices()) {
    throw CliError("consistency error: graph has " + std::to_string(loaded.graph.num_vertices()) +
                   " vertices, labelling has " + std::to_string(gamma.num_vertices()));
  }
  // Cheap spot check: the first landmark's decoded distances must match a BFS.
  if (gamma.num_landmarks() > 0) {
    const auto& g = loaded.graph;
    std::vector<Dist> dist(g.num_vertices(), kInfDist);
    std::vector<Vertex> frontier{gamma.landmarks()[0]};
    dist[frontier[0]] = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const Vertex v = frontier[head];
      for (Vertex w : g.adjacency(v)) {
        if (dist[w] == kInfDist) {
          dist[w] = dist[v] + 1;
          frontier.push_back(w);
        }
      }
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (label_distance(gamma, 0, v) != dist[v]) {
        throw CliError("consistency error: labelling does not match " + graph_path);
      }
    }
  }
  return {std::move(loaded), std::move(gamma)};
}

LandmarkSet read_landmarks(const std::string& path, const IdMap& ids, std::size_t n) {
  auto in = open_in(path);
  std::vector<Vertex> vs;
  std::string tok;
  while (in >> tok) {
    std::int64_t ext;
    try {
      std::size_t used = 0;
      ext = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw CliError(path + ": bad landmark id '" + tok + "'");
    }
    const auto v = ids.find(ext);
    if (!v) throw CliError(path + ": unknown landmark id " + tok);
    vs.push_back(*v);
  }
  return LandmarkSet(std::move(vs), n);
}

std::vector<EdgeUpdate> load_batch(const std::string& path, IdMap& ids) {
  auto in = open_in(path);
  try {
    return read_batch(in, ids);
  } catch (const ParseError& e) {
    throw CliError(path + ": " + e.what());
  }
}

SearchVariant parse_variant(const std::string& s) {
  if (s == "basic") return SearchVariant::Basic;
  if (s == "improved") return SearchVariant::Improved;
  throw CliError("unknown variant " + s);
}

std::string hex64(std::uint64_t x) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << x;
  return out.str();
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string graph, landmarks_file, out;
  std::size_t k = 20;
  unsigned workers = 1;
};

void cmd_build(const BuildArgs& a) {
  auto [g, ids] = load_graph(a.graph);
  const auto t0 = Clock::now();
  const auto landmarks = a.landmarks_file.empty() ? select_landmarks(g, a.k)
                                                   : read_landmarks(a.landmarks_file, ids, g.num_vertices());
  const auto gamma = build(g, landmarks, a.workers);
  const double secs = seconds_since(t0);
  save_labelling(a.out, gamma, ids);
  std::cerr << "n=" << g.num_vertices() << " m=" << g.num_edges() << " landmarks=" << landmarks.size()
            << " labelling_size=" << labelling_size(gamma) << " seconds=" << secs << '\n';
}

struct UpdateArgs {
  std::string graph, labels, batch, out, out_graph, variant = "improved";
  unsigned workers = 1;
};

void cmd_update(const UpdateArgs& a) {
  auto [loaded, gamma] = load_indexed(a.graph, a.labels);
  auto& [g, ids] = loaded;
  const auto raw = load_batch(a.batch, ids);
  const auto variant = parse_variant(a.variant);

  const auto t0 = Clock::now();
  const auto batch = normalize_batch(g, raw);
  g.apply(batch);
  BatchUpdater updater({variant, a.workers});
  const auto report = updater.apply(g, batch, gamma);
  const double secs = seconds_since(t0);

  save_labelling(a.out, gamma, ids);
  if (!a.out_graph.empty()) {
    auto out = open_out(a.out_graph);
    write_edge_list(out, g, ids);
  }
  std::cerr << "variant=" << to_string(variant) << " workers=" << a.workers << " updates=" << batch.size()
            << " affected=";
  for (LandmarkIndex r = 0; r < report.affected.size(); ++r) {
    std::cerr << (r ? "," : "") << ids.external(gamma.landmarks()[r]) << ':' << report.affected[r];
  }
  std::cerr << " total_affected=" << report.total_affected() << " seconds=" << secs << '\n';
}

struct QueryArgs {
  std::string graph, labels, pairs, out;
};

void cmd_query(const QueryArgs& a) {
  const auto [loaded, gamma] = load_indexed(a.graph, a.labels);
  auto in = open_in(a.pairs);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  try {
    pairs = read_pairs(in, loaded.ids);
  } catch (const ParseError& e) {
    throw CliError(a.pairs + ": " + e.what());
  }
  std::ofstream file;
  if (!a.out.empty()) file = open_out(a.out);
  std::ostream& out = a.out.empty() ? std::cout : file;

  QueryEngine engine(loaded.graph, gamma);
  const auto t0 = Clock::now();
  for (auto [s, t] : pairs) {
    const Dist d = engine.query(s, t).distance;
    if (is_finite(d)) {
      out << d << '\n';
    } else {
      out << "-1\n";
    }
  }
  std::cerr << "queries=" << pairs.size() << " seconds=" << seconds_since(t0) << '\n';
}

struct BenchArgs {
  std::string graph, out;
  std::vector<std::string> batches;
  std::vector<std::size_t> sizes;
  std::vector<unsigned> workers{1};
  std::vector<std::string> variants{"basic", "improved"};
  std::size_t k = 20, pairs = 1000;
  std::uint64_t seed = 1;
};

void cmd_bench(const BenchArgs& a) {
  auto [g, ids] = load_graph(a.graph);
  const auto landmarks = select_landmarks(g, a.k);
  const auto gamma = build(g, landmarks);
  auto csv = open_out(a.out);
  csv << "batch_file,variant,workers,batch_size,affected_total,update_seconds,mean_query_us,labelling_size,"
         "labelling_hash\n";

  for (const auto& batch_path : a.batches) {
    auto batch_ids = ids;
    const auto raw = load_batch(batch_path, batch_ids);
    std::vector<std::size_t> sizes = a.sizes;
    if (sizes.empty()) sizes.push_back(raw.size());
    for (std::size_t size : sizes) {
      if (size > raw.size()) throw CliError(batch_path + " has fewer than " + std::to_string(size) + " updates");
      const std::span<const EdgeUpdate> prefix(raw.data(), size);
      const auto batch = normalize_batch(g, prefix);
      const auto updated = apply_batch(g, batch);
      workload::Rng rng(a.seed);
      const auto pairs = workload::random_pairs(updated.num_vertices(), a.pairs, rng);
      for (const auto& vname : a.variants) {
        const auto variant = parse_variant(vname);
        for (unsigned w : a.workers) {
          auto next = gamma;
          BatchUpdater updater({variant, w});
          const auto t0 = Clock::now();
          const auto report = updater.apply(updated, batch, next);
          const double secs = seconds_since(t0);

          QueryEngine engine(updated, next);
          const auto q0 = Clock::now();
          for (auto [s, t] : pairs) engine.query(s, t);
          const double mean_us = pairs.empty() ? 0.0 : seconds_since(q0) * 1e6 / pairs.size();

          csv << batch_path << ',' << vname << ',' << w << ',' << batch.size() << ',' << report.total_affected()
              << ',' << secs << ',' << mean_us << ',' << labelling_size(next) << ','
              << hex64(fnv1a64(serialize(next))) << '\n';
          std::cerr << batch_path << " size=" << batch.size() << ' ' << vname << " workers=" << w
                    << " affected=" << report.total_affected() << " seconds=" << secs << '\n';
        }
      }
    }
  }
}

struct GenerateArgs {
  std::string model = "pa", out_graph, out_batch;
  std::size_t n = 1000, attach = 4, batch_size = 0;
  double p = 0.01;
  std::uint64_t seed = 1;
};

void cmd_generate(const GenerateArgs& a) {
  workload::Rng rng(a.seed);
  Graph g;
  if (a.model == "pa") {
    g = workload::preferential_attachment(a.n, a.attach, rng);
  } else if (a.model == "er") {
    g = workload::erdos_renyi(a.n, a.p, rng);
  } else {
    throw CliError("unknown model " + a.model);
  }
  std::vector<std::int64_t> ext(g.num_vertices());
  for (std::size_t v = 0; v < ext.size(); ++v) ext[v] = static_cast<std::int64_t>(v);
  const IdMap ids(ext);

  if (a.batch_size > 0) {
    if (a.out_batch.empty()) throw CliError("--batch-size needs --out-batch");
    auto work = workload::fully_dynamic(g, a.batch_size, rng);
    g = std::move(work.base);
    auto out = open_out(a.out_batch);
    for (const auto& up : work.updates) out << (up.deleted() ? "- " : "+ ") << up.u << ' ' << up.v << '\n';
  }
  auto out = open_out(a.out_graph);
  write_edge_list(out, g, ids);
  std::cerr << "n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Batch-dynamic highway cover labelling for exact distance queries"};
  app.require_subcommand(1);

  BuildArgs build_args;
  auto* build_cmd = app.add_subcommand("build", "Build a labelling from an edge list");
  build_cmd->add_option("--graph", build_args.graph, "Edge list")->required()->check(CLI::ExistingFile);
  build_cmd->add_option("--k", build_args.k, "Number of landmarks (highest degree)")->check(CLI::PositiveNumber);
  build_cmd->add_option("--landmarks-file", build_args.landmarks_file, "Explicit landmark ids, overriding --k")
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--workers", build_args.workers, "Worker threads")->check(CLI::PositiveNumber);
  build_cmd->add_option("--out", build_args.out, "Output labelling file")->required();

  UpdateArgs update_args;
  auto* update_cmd = app.add_subcommand("update", "Apply a batch of edge updates to a labelling");
  update_cmd->add_option("--graph", update_args.graph, "Edge list the labelling was built on")
      ->required()
      ->check(CLI::ExistingFile);
  update_cmd->add_option("--labels", update_args.labels, "Labelling file")->required()->check(CLI::ExistingFile);
  update_cmd->add_option("--batch", update_args.batch, "Batch file of '+ u v' / '- u v' lines")
      ->required()
      ->check(CLI::ExistingFile);
  update_cmd->add_option("--variant", update_args.variant, "Search variant")
      ->check(CLI::IsMember({"basic", "improved"}));
  update_cmd->add_option("--workers", update_args.workers, "Worker threads")->check(CLI::PositiveNumber);
  update_cmd->add_option("--out-graph", update_args.out_graph, "Write the updated edge list here");
  update_cmd->add_option("--out", update_args.out, "Output labelling file")->required();

  QueryArgs query_args;
  auto* query_cmd = app.add_subcommand("query", "Answer distance queries");
  query_cmd->add_option("--graph", query_args.graph, "Edge list")->required()->check(CLI::ExistingFile);
  query_cmd->add_option("--labels", query_args.labels, "Labelling file")->required()->check(CLI::ExistingFile);
  query_cmd->add_option("--pairs", query_args.pairs, "File of 'u v' lines")->required()->check(CLI::ExistingFile);
  query_cmd->add_option("--out", query_args.out, "Output file (default: standard output)");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time batch updates and queries, write CSV");
  bench_cmd->add_option("--graph", bench_args.graph, "Edge list")->required()->check(CLI::ExistingFile);
  bench_cmd->add_option("--batches", bench_args.batches, "Batch files")->required()->check(CLI::ExistingFile);
  bench_cmd->add_option("--sizes", bench_args.sizes, "Use only the first N updates of each batch file");
  bench_cmd->add_option("--workers", bench_args.workers, "Worker counts to sweep");
  bench_cmd->add_option("--variants", bench_args.variants, "Search variants to sweep")
      ->check(CLI::IsMember({"basic", "improved"}));
  bench_cmd->add_option("--k", bench_args.k, "Number of landmarks")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--pairs", bench_args.pairs, "Sampled query pairs per row");
  bench_cmd->add_option("--seed", bench_args.seed, "Seed for query sampling");
  bench_cmd->add_option("--out", bench_args.out, "CSV output")->required();

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic graph and optional fully dynamic batch");
  gen_cmd->add_option("--model", gen_args.model, "pa (preferential attachment) or er (Erdos-Renyi)")
      ->check(CLI::IsMember({"pa", "er"}));
  gen_cmd->add_option("--n", gen_args.n, "Vertices");
  gen_cmd->add_option("--attach", gen_args.attach, "Edges per new vertex (pa)");
  gen_cmd->add_option("--p", gen_args.p, "Edge probability (er)");
  gen_cmd->add_option("--seed", gen_args.seed, "Random seed");
  gen_cmd->add_option("--batch-size", gen_args.batch_size,
                      "Sample this many edges; remove half from the graph and emit a batch re-inserting "
                      "them and deleting the rest");
  gen_cmd->add_option("--out-batch", gen_args.out_batch, "Batch output file");
  gen_cmd->add_option("--out-graph", gen_args.out_graph, "Edge list output")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build_cmd) cmd_build(build_args);
    if (*update_cmd) cmd_update(update_args);
    if (*query_cmd) cmd_query(query_args);
    if (*bench_cmd) cmd_bench(bench_args);
    if (*gen_cmd) cmd_generate(gen_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
