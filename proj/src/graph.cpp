#include "cograph/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cograph/errors.hpp"

namespace cograph {

BitMatrix::BitMatrix(std::size_t n) : n_(n), words_(bitrow::words_for(n)), bits_(n * words_, 0), valid_(words_, 0) {
  for (std::size_t j = 0; j < n; ++j) valid_[j >> 6] |= bitrow::Word{1} << (j & 63);
}

void BitMatrix::set_range(std::size_t i, std::size_t first, std::size_t last) {
  if (first >= last) return;
  bitrow::Word* r = row(i);
  const std::size_t fw = first >> 6;
  const std::size_t lw = (last - 1) >> 6;
  const bitrow::Word head = ~bitrow::Word{0} << (first & 63);
  const bitrow::Word tail = ~bitrow::Word{0} >> (63 - ((last - 1) & 63));
  if (fw == lw) {
    r[fw] |= head & tail;
    return;
  }
  r[fw] |= head;
  for (std::size_t w = fw + 1; w < lw; ++w) r[w] = ~bitrow::Word{0};
  r[lw] |= tail;
}

Graph::Graph(std::size_t n) : adj_(n) {
  if (n > kDenseLimit) throw LimitExceeded("dense graph with " + std::to_string(n) + " vertices exceeds the cap");
}

Graph::Graph(BitMatrix adjacency) : adj_(std::move(adjacency)) {
  const std::size_t n = adj_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (adj_.test(i, i)) throw InvalidArgument("adjacency matrix has a loop at vertex " + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j)
      if (adj_.test(i, j) != adj_.test(j, i)) throw InvalidArgument("adjacency matrix is not symmetric");
  }
}

Graph::Graph(std::size_t n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n)
      throw InvalidArgument("edge endpoint out of range");
    if (i == j) throw InvalidArgument("self loop at vertex " + std::to_string(i));
    adj_.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    adj_.set(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
  }
}

std::size_t Graph::degree(std::size_t v) const { return bitrow::popcount(adj_.row(v), adj_.words_per_row()); }

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t v = 0; v < size(); ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  const std::size_t words = adj_.words_per_row();
  for (std::size_t i = 0; i < size(); ++i) {
    const bitrow::Word* r = adj_.row(i);
    for (std::size_t w = i >> 6; w < words; ++w) {
      bitrow::Word bits = r[w];
      if (w == (i >> 6)) bits &= ~bitrow::Word{0} << (i & 63) << 1;
      while (bits) {
        const auto j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
        bits &= bits - 1;
      }
    }
  }
  return out;
}

Graph complete_graph(std::size_t n) { return complement(Graph(n)); }
Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path_graph(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return Graph(n, e);
}

namespace {

BitMatrix block_union(const Graph& g1, const Graph& g2, bool cross) {
  const std::size_t n1 = g1.size();
  const std::size_t n = n1 + g2.size();
  if (n > Graph::kDenseLimit) throw LimitExceeded("graph operation result exceeds the dense cap");
  BitMatrix m(n);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      if (g1.adjacent(i, j)) m.set(i, j);
  for (std::size_t i = 0; i < g2.size(); ++i)
    for (std::size_t j = 0; j < g2.size(); ++j)
      if (g2.adjacent(i, j)) m.set(n1 + i, n1 + j);
  if (cross) {
    for (std::size_t i = 0; i < n1; ++i) m.set_range(i, n1, n);
    for (std::size_t i = n1; i < n; ++i) m.set_range(i, 0, n1);
  }
  return m;
}

}  // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) { return Graph(block_union(g1, g2, false)); }
Graph join(const Graph& g1, const Graph& g2) { return Graph(block_union(g1, g2, true)); }

Graph complement(const Graph& g) {
  const std::size_t n = g.size();
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    bitrow::complement(m.row(i), g.matrix().row(i), m.valid_mask(), m.words_per_row());
    m.reset(i, i);
  }
  return Graph(std::move(m));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const std::size_t n = g.size();
  const std::size_t words = g.matrix().words_per_row();
  std::vector<bitrow::Word> unvisited(g.matrix().valid_mask(), g.matrix().valid_mask() + words);
  std::vector<bitrow::Word> fresh(words);
  std::vector<std::vector<int>> parts;
  std::vector<int> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (!((unvisited[s >> 6] >> (s & 63)) & 1U)) continue;
    unvisited[s >> 6] &= ~(bitrow::Word{1} << (s & 63));
    queue.assign(1, static_cast<int>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto v = static_cast<std::size_t>(queue[head]);
      if (!bitrow::and_into(fresh.data(), g.matrix().row(v), unvisited.data(), words)) continue;
      bitrow::andnot_assign(unvisited.data(), fresh.data(), words);
      for (std::size_t w = 0; w < words; ++w)
        for (bitrow::Word bits = fresh[w]; bits; bits &= bits - 1)
          queue.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
    std::sort(queue.begin(), queue.end());
    parts.push_back(queue);
  }
  return parts;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, std::span<const int> tuple) {
  for (int v : tuple)
    if (v < 0 || static_cast<std::size_t>(v) >= g.size())
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  const std::size_t k = tuple.size();
  BitMatrix m(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (tuple[a] != tuple[b] && g.adjacent(static_cast<std::size_t>(tuple[a]), static_cast<std::size_t>(tuple[b]))) {
        m.set(a, b);
        m.set(b, a);
      }
  return Graph(std::move(m));
}

Graph permute(const Graph& g, std::span<const int> perm) {
  const std::size_t n = g.size();
  if (perm.size() != n) throw InvalidArgument("permutation size mismatch");
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)])
      throw InvalidArgument("not a permutation");
    seen[static_cast<std::size_t>(p)] = 1;
  }
  BitMatrix m(n);
  for (auto [i, j] : g.edges()) {
    m.set(static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]), static_cast<std::size_t>(perm[static_cast<std::size_t>(j)]));
    m.set(static_cast<std::size_t>(perm[static_cast<std::size_t>(j)]), static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]));
  }
  return Graph(std::move(m));
}

namespace {

// Branch and bound over vertex orders. Position p contributes the column
// (0,p), (1,p), ..., (p-1,p), so a partial order fixes a prefix of the string.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.size()), order_(n_), used_(n_, 0) {}

  std::string run() {
    current_.reserve(n_ * (n_ - 1) / 2);
    descend(0, false);
    return best_;
  }

 private:
  void descend(std::size_t depth, bool already_smaller) {
    if (depth == n_) {
      best_ = current_;
      have_best_ = true;
      return;
    }
    const std::size_t offset = current_.size();
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      for (std::size_t i = 0; i < depth; ++i) current_.push_back(g_.adjacent(order_[i], v) ? '1' : '0');
      bool smaller = already_smaller || !have_best_;
      bool prune = false;
      if (!smaller) {
        const int cmp = current_.compare(offset, depth, best_, offset, depth);
        if (cmp > 0) prune = true;
        if (cmp < 0) smaller = true;
      }
      if (!prune) {
        used_[v] = 1;
        order_[depth] = v;
        descend(depth + 1, smaller);
        used_[v] = 0;
      }
      current_.resize(offset);
      // A strictly smaller prefix found deeper replaces best_, so later
      // siblings compare against the new best.
      already_smaller = false;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<char> used_;
  std::string current_;
  std::string best_;
  bool have_best_ = false;
};

}  // namespace

std::string canonical_form_small(const Graph& g) {
  if (g.size() > kCanonicalFormLimit)
    throw LimitExceeded("canonical_form_small supports at most 10 vertices, got " + std::to_string(g.size()));
  std::string key(1, static_cast<char>(g.size()));
  if (g.size() > 1) key += CanonicalSearch(g).run();
  return key;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.size() << '\n';
  for (auto [i, j] : g.edges()) out << i << ' ' << j << '\n';
}

Graph read_edge_list(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 0) throw ParseError("edge list: expected a vertex count");
  std::vector<std::pair<int, int>> edges;
  long long i = 0;
  long long j = 0;
  while (in >> i) {
    if (!(in >> j)) throw ParseError("edge list: dangling vertex id");
    if (i < 0 || j < 0 || i >= n || j >= n) throw ParseError("edge list: vertex id out of range");
    if (i == j) throw ParseError("edge list: self loop");
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  if (!in.eof()) throw ParseError("edge list: unexpected token");
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace cograph
