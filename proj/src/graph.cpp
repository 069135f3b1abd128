#include "batchhl/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_set>

namespace batchhl {

namespace {

std::uint64_t edge_key(Vertex u, Vertex v) noexcept {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool skippable(const std::vector<std::string_view>& tokens) {
  return tokens.empty() || tokens.front().front() == '#';
}

std::int64_t parse_id(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected integer vertex id, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::size_t Batch::count(UpdateKind kind) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      updates.begin(), updates.end(), [kind](const EdgeUpdate& u) { return u.kind == kind; }));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= adj_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                            std::to_string(adj_.size()) + ")");
  }
  return adj_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) return false;
  grow(static_cast<std::size_t>(std::max(u, v)) + 1);
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edges_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  if (u == v || u >= adj_.size() || v >= adj_.size()) return false;
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it == au.end() || *it != v) return false;
  au.erase(it);
  auto& av = adj_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  --edges_;
  return true;
}

void Graph::grow(std::size_t n) {
  if (n > adj_.size()) adj_.resize(n);
}

void Graph::apply(const Batch& batch) {
  for (const auto& up : batch.updates) {
    const bool changed = up.deleted() ? remove_edge(up.u, up.v) : add_edge(up.u, up.v);
    if (!changed) throw std::logic_error("apply: batch is not normalized against this graph");
  }
}

void Graph::validate() const {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < adj_.size(); ++v) {
    const auto& nb = adj_[v];
    degree_sum += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] == v) throw std::logic_error("self-loop at " + std::to_string(v));
      if (nb[i] >= adj_.size()) throw std::logic_error("dangling neighbour");
      if (i > 0 && nb[i - 1] >= nb[i]) throw std::logic_error("adjacency not strictly sorted");
      const auto& back = adj_[nb[i]];
      if (!std::binary_search(back.begin(), back.end(), v)) {
        throw std::logic_error("asymmetric edge " + std::to_string(v) + "-" +
                               std::to_string(nb[i]));
      }
    }
  }
  if (degree_sum != 2 * edges_) throw std::logic_error("edge count mismatch");
}

IdMap::IdMap(std::vector<std::int64_t> externals) {
  for (auto ext : externals) {
    if (find(ext)) throw std::invalid_argument("duplicate external id " + std::to_string(ext));
    intern(ext);
  }
}

Vertex IdMap::intern(std::int64_t ext) {
  auto [it, inserted] = to_dense_.try_emplace(ext, static_cast<Vertex>(to_external_.size()));
  if (inserted) to_external_.push_back(ext);
  return it->second;
}

std::optional<Vertex> IdMap::find(std::int64_t ext) const {
  auto it = to_dense_.find(ext);
  if (it == to_dense_.end()) return std::nullopt;
  return it->second;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

LoadedGraph load_edge_list(std::istream& in, IdMap seed) {
  LoadedGraph out{Graph(seed.size()), std::move(seed)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split_tokens(line);
    if (skippable(tokens)) continue;
    if (tokens.size() < 2) throw ParseError(lineno, "expected two vertex ids");
    const auto a = parse_id(tokens[0], lineno);
    const auto b = parse_id(tokens[1], lineno);
    const Vertex u = out.ids.intern(a);
    const Vertex v = out.ids.intern(b);
    out.graph.grow(out.ids.size());
    out.graph.add_edge(u, v);
  }
  return out;
}

void write_edge_list(std::ostream& out, const Graph& g, const IdMap& ids) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.adjacency(u)) {
      if (u < v) out << ids.external(u) << ' ' << ids.external(v) << '\n';
    }
  }
}

std::vector<EdgeUpdate> read_batch(std::istream& in, IdMap& ids) {
  std::vector<EdgeUpdate> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split_tokens(line);
    if (skippable(tokens)) continue;
    if (tokens.size() != 3 || (tokens[0] != "+" && tokens[0] != "-")) {
      throw ParseError(lineno, "expected '+ u v' or '- u v'");
    }
    const auto a = parse_id(tokens[1], lineno);
    const auto b = parse_id(tokens[2], lineno);
    if (tokens[0] == "+") {
      raw.push_back({ids.intern(a), ids.intern(b), UpdateKind::Insert});
    } else {
      auto u = ids.find(a);
      auto v = ids.find(b);
      if (u && v) raw.push_back({*u, *v, UpdateKind::Delete});
    }
  }
  return raw;
}

std::vector<std::pair<Vertex, Vertex>> read_pairs(std::istream& in, const IdMap& ids) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split_tokens(line);
    if (skippable(tokens)) continue;
    if (tokens.size() != 2) throw ParseError(lineno, "expected 'u v'");
    Vertex ends[2];
    for (int k = 0; k < 2; ++k) {
      const auto ext = parse_id(tokens[k], lineno);
      auto v = ids.find(ext);
      if (!v) throw ParseError(lineno, "unknown vertex id " + std::to_string(ext));
      ends[k] = *v;
    }
    pairs.emplace_back(ends[0], ends[1]);
  }
  return pairs;
}

Batch normalize_batch(const Graph& g, std::span<const EdgeUpdate> raw) {
  constexpr std::uint8_t kSawInsert = 1, kSawDelete = 2;
  std::unordered_map<std::uint64_t, std::uint8_t> seen;
  for (const auto& up : raw) {
    if (up.u == up.v) continue;
    seen[edge_key(up.u, up.v)] |= up.deleted() ? kSawDelete : kSawInsert;
  }

  Batch batch;
  std::unordered_set<std::uint64_t> emitted;
  for (const auto& up : raw) {
    if (up.u == up.v) continue;
    const auto key = edge_key(up.u, up.v);
    if (seen[key] == (kSawInsert | kSawDelete)) continue;
    if (g.has_edge(up.u, up.v) != up.deleted()) continue;
    if (!emitted.insert(key).second) continue;
    batch.updates.push_back(up);
  }
  return batch;
}

Graph apply_batch(const Graph& g, const Batch& batch) {
  Graph out = g;
  out.apply(batch);
  return out;
}

Batch inverse(const Batch& batch) {
  Batch out = batch;
  for (auto& up : out.updates) {
    up.kind = up.deleted() ? UpdateKind::Insert : UpdateKind::Delete;
  }
  return out;
}

}  // namespace batchhl
