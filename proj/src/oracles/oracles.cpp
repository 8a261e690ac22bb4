#include "cograph/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "cograph/errors.hpp"

namespace cograph::oracles {

namespace {

Decoration flip(Decoration d) { return d == Decoration::One ? Decoration::Zero : Decoration::One; }

char digit(Decoration d) { return d == Decoration::One ? '1' : '0'; }

// Text of every canonical cotree on the given labels with root decoration d.
std::vector<std::string> canonical_texts(const std::vector<int>& labels, Decoration d) {
  if (labels.size() == 1) return {std::to_string(labels[0])};
  std::vector<std::string> out;
  for (const auto& partition : set_partitions(labels)) {
    if (partition.size() < 2) continue;
    std::vector<std::vector<std::string>> options;
    for (const auto& block : partition) options.push_back(canonical_texts(block, flip(d)));
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
      std::string s = "(";
      s.push_back(digit(d));
      for (std::size_t i = 0; i < options.size(); ++i) s += " " + options[i][pick[i]];
      s += ")";
      out.push_back(std::move(s));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return out;
}

std::vector<int> iota_labels(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

// Leaf set (as vertex ids) below every node.
std::vector<std::vector<int>> leaf_sets(const Cotree& t) {
  std::vector<std::vector<int>> sets(t.node_count());
  for (NodeId leaf : t.leaves()) {
    const int v = static_cast<int>(t.vertex_of(leaf));
    for (NodeId a = leaf; a != kNoNode; a = t.parent(a)) sets[static_cast<std::size_t>(a)].push_back(v);
  }
  for (auto& s : sets) std::sort(s.begin(), s.end());
  return sets;
}

bool fixes(const std::vector<int>& sigma, const std::vector<int>& set) {
  std::vector<int> image;
  image.reserve(set.size());
  for (int v : set) image.push_back(sigma[static_cast<std::size_t>(v)]);
  std::sort(image.begin(), image.end());
  return image == set;
}

std::vector<NodeId> path_to_root(const Cotree& t, NodeId v) {
  std::vector<NodeId> path;
  for (; v != kNoNode; v = t.parent(v)) path.push_back(v);
  return path;
}

NodeId naive_fca(const Cotree& t, NodeId a, NodeId b) {
  const auto pa = path_to_root(t, a);
  const auto pb = path_to_root(t, b);
  for (NodeId x : pa)
    if (std::find(pb.begin(), pb.end(), x) != pb.end()) return x;
  return t.root();
}

// Calls f(tuple) for every k-tuple of distinct leaves.
void for_each_tuple(const Cotree& t, std::size_t k, const std::function<void(const std::vector<NodeId>&)>& f) {
  const auto leaves = t.leaves();
  std::vector<NodeId> tuple;
  std::vector<char> used(leaves.size(), 0);
  std::function<void()> rec = [&] {
    if (tuple.size() == k) {
      f(tuple);
      return;
    }
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (used[i]) continue;
      used[i] = 1;
      tuple.push_back(leaves[i]);
      rec();
      tuple.pop_back();
      used[i] = 0;
    }
  };
  rec();
}

}  // namespace

std::vector<std::vector<std::vector<int>>> set_partitions(const std::vector<int>& items) {
  if (items.empty()) return {{}};
  const int first = items[0];
  const std::vector<int> rest(items.begin() + 1, items.end());
  std::vector<std::vector<std::vector<int>>> out;
  for (auto partition : set_partitions(rest)) {
    for (std::size_t i = 0; i < partition.size(); ++i) {
      auto p = partition;
      p[i].insert(p[i].begin(), first);
      out.push_back(std::move(p));
    }
    partition.insert(partition.begin(), std::vector<int>{first});
    out.push_back(std::move(partition));
  }
  return out;
}

std::vector<Cotree> labeled_canonical_cotrees(int n, Decoration root) {
  std::vector<Cotree> out;
  for (const auto& s : canonical_texts(iota_labels(n), root)) out.push_back(parse_cotree(s));
  return out;
}

std::vector<Cotree> labeled_canonical_cotrees(int n) {
  auto out = labeled_canonical_cotrees(n, Decoration::Zero);
  if (n >= 2) {
    auto ones = labeled_canonical_cotrees(n, Decoration::One);
    out.insert(out.end(), std::make_move_iterator(ones.begin()), std::make_move_iterator(ones.end()));
  }
  return out;
}

std::vector<std::string> unlabeled_tree_shapes(int n) {
  // by_size[s] lists shapes with s leaves in a fixed order; children of a node
  // are chosen as a non-increasing sequence of (size, index).
  std::vector<std::vector<std::string>> by_size(static_cast<std::size_t>(n) + 1);
  if (n >= 1) by_size[1] = {"*"};
  for (int s = 2; s <= n; ++s) {
    std::vector<std::string>& out = by_size[static_cast<std::size_t>(s)];
    std::vector<std::string> kids;
    std::function<void(int, int, std::size_t)> rec = [&](int remaining, int max_size, std::size_t max_index) {
      if (remaining == 0) {
        if (kids.size() < 2) return;
        std::string t = "(";
        for (std::size_t i = 0; i < kids.size(); ++i) t += (i ? " " : "") + kids[i];
        out.push_back(t + ")");
        return;
      }
      for (int size = std::min(remaining, max_size); size >= 1; --size) {
        const auto& shapes = by_size[static_cast<std::size_t>(size)];
        const std::size_t top = size == max_size ? max_index : shapes.size() - 1;
        for (std::size_t i = 0; i <= top && i < shapes.size(); ++i) {
          kids.push_back(shapes[i]);
          rec(remaining - size, size, i);
          kids.pop_back();
        }
      }
    };
    // A single child of size s is excluded by the arity check above.
    rec(s, s - 1, by_size[static_cast<std::size_t>(s - 1)].size() - 1);
  }
  return n >= 1 ? by_size[static_cast<std::size_t>(n)] : std::vector<std::string>{};
}

std::vector<Cotree> unlabeled_canonical_cotrees(int n) {
  std::vector<Cotree> out;
  for (const auto& shape : unlabeled_tree_shapes(n)) {
    for (Decoration root : {Decoration::Zero, Decoration::One}) {
      if (n == 1 && root == Decoration::One) break;
      // Depth parity decides each decoration.
      std::string text;
      std::vector<Decoration> stack{flip(root)};
      for (char c : shape) {
        if (c == '(') {
          const Decoration d = flip(stack.back());
          stack.push_back(d);
          text += "(";
          text.push_back(digit(d));
          text += " ";
        } else if (c == ')') {
          stack.pop_back();
          if (text.back() == ' ') text.pop_back();
          text += ") ";
        } else if (c == '*') {
          text += "* ";
        }
      }
      while (!text.empty() && text.back() == ' ') text.pop_back();
      out.push_back(parse_cotree(text));
    }
  }
  return out;
}

std::vector<std::vector<int>> automorphisms(const Cotree& t) {
  const Graph g = cograph_of(t);
  const std::size_t n = g.size();
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        ok = g.adjacent(i, j) ==
             g.adjacent(static_cast<std::size_t>(sigma[i]), static_cast<std::size_t>(sigma[j]));
    if (ok) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Cotree induced_cotree_naive(const Cotree& t, const std::vector<NodeId>& marked) {
  std::set<NodeId> nodes(marked.begin(), marked.end());
  for (std::size_t i = 0; i < marked.size(); ++i)
    for (std::size_t j = i + 1; j < marked.size(); ++j) nodes.insert(naive_fca(t, marked[i], marked[j]));
  std::map<NodeId, NodeId> parent_of;
  NodeId top = kNoNode;
  for (NodeId v : nodes) {
    NodeId p = kNoNode;
    for (NodeId a = t.parent(v); a != kNoNode; a = t.parent(a))
      if (nodes.count(a)) {
        p = a;
        break;
      }
    parent_of[v] = p;
    if (p == kNoNode) top = v;
  }
  std::map<NodeId, int> label;
  for (std::size_t i = 0; i < marked.size(); ++i) label[marked[i]] = static_cast<int>(i + 1);
  std::function<std::string(NodeId)> text = [&](NodeId v) -> std::string {
    if (t.is_leaf(v)) return std::to_string(label.at(v));
    std::string s = "(";
    s.push_back(digit(t.decoration(v)));
    for (NodeId c : nodes)
      if (parent_of[c] == v) s += " " + text(c);
    return s + ")";
  };
  return parse_cotree(text(top));
}

BlossomCounts labeled_blossom_counts(int n) {
  BlossomCounts c;
  const int blossom = n + 1;
  for (const Cotree& t : labeled_canonical_cotrees(n + 1, Decoration::One)) {
    for (NodeId leaf : t.leaves()) {
      if (t.label(leaf) != blossom) continue;
      ++c.total;
      ++(t.depth(leaf) % 2 == 0 ? c.even : c.odd);
    }
  }
  return c;
}

BlossomCounts fixed_blossom_counts(int n) {
  BlossomCounts c;
  const auto blossom_vertex = n;
  for (const Cotree& t : labeled_canonical_cotrees(n + 1, Decoration::One)) {
    NodeId b = kNoNode;
    for (NodeId leaf : t.leaves())
      if (static_cast<int>(t.vertex_of(leaf)) == blossom_vertex) b = leaf;
    for (const auto& sigma : automorphisms(t)) {
      if (sigma[static_cast<std::size_t>(blossom_vertex)] != blossom_vertex) continue;
      ++c.total;
      ++(t.depth(b) % 2 == 0 ? c.even : c.odd);
    }
  }
  return c;
}

std::int64_t tree_automorphism_pairs(int n) {
  std::int64_t total = 0;
  for (const Cotree& t : labeled_canonical_cotrees(n, Decoration::One))
    total += static_cast<std::int64_t>(automorphisms(t).size());
  return total;
}

std::int64_t no_fixed_root_child_pairs(int n) {
  if (n < 2) return 0;
  std::int64_t total = 0;
  for (const Cotree& t : labeled_canonical_cotrees(n, Decoration::One)) {
    const auto sets = leaf_sets(t);
    for (const auto& sigma : automorphisms(t)) {
      bool moved_all = true;
      for (NodeId c : t.children(t.root()))
        if (fixes(sigma, sets[static_cast<std::size_t>(c)])) moved_all = false;
      if (moved_all) ++total;
    }
  }
  return total;
}

std::int64_t marked_tuples_inducing(const Cotree& t0, int n) {
  const std::string key = canonical_encoding(t0, true);
  std::int64_t count = 0;
  for (const Cotree& t : labeled_canonical_cotrees(n))
    for_each_tuple(t, t0.size(), [&](const std::vector<NodeId>& tuple) {
      if (canonical_encoding(induced_cotree_naive(t, tuple), true) == key) ++count;
    });
  return count;
}

std::int64_t fixed_marked_tuples_inducing(const Cotree& t0, int n) {
  const std::string key = canonical_encoding(t0, true);
  std::int64_t count = 0;
  for (const Cotree& t : labeled_canonical_cotrees(n)) {
    const auto sets = leaf_sets(t);
    const auto autos = automorphisms(t);
    for_each_tuple(t, t0.size(), [&](const std::vector<NodeId>& tuple) {
      if (canonical_encoding(induced_cotree_naive(t, tuple), true) != key) return;
      // Nodes that must be fixed: each pairwise fca and its children towards
      // the two marked leaves.
      std::set<NodeId> must;
      for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j) {
          const NodeId v = naive_fca(t, tuple[i], tuple[j]);
          must.insert(v);
          for (NodeId leaf : {tuple[i], tuple[j]}) {
            NodeId c = leaf;
            while (t.parent(c) != v) c = t.parent(c);
            must.insert(c);
          }
        }
      for (const auto& sigma : autos) {
        bool ok = true;
        for (NodeId v : must) ok = ok && fixes(sigma, sets[static_cast<std::size_t>(v)]);
        if (ok) ++count;
      }
    });
  }
  return count;
}

int min_vertex_cut(const Graph& g) {
  const auto n = static_cast<int>(g.size());
  if (n > 20) throw LimitExceeded("min_vertex_cut: brute force needs n <= 20");
  int best = std::max(0, n - 1);
  for (std::uint32_t removed = 0; removed < (1U << n); ++removed) {
    const int r = std::popcount(removed);
    if (r >= best || n - r < 2) continue;
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (!((removed >> v) & 1U)) keep.push_back(v);
    if (!is_connected(induced_subgraph(g, keep))) best = r;
  }
  return best;
}

bool is_p4_free(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> p(4);
  for (p[0] = 0; p[0] < n; ++p[0])
    for (p[1] = 0; p[1] < n; ++p[1])
      for (p[2] = 0; p[2] < n; ++p[2])
        for (p[3] = 0; p[3] < n; ++p[3]) {
          if (p[0] == p[1] || p[0] == p[2] || p[0] == p[3] || p[1] == p[2] || p[1] == p[3] || p[2] == p[3]) continue;
          if (g.adjacent(p[0], p[1]) && g.adjacent(p[1], p[2]) && g.adjacent(p[2], p[3]) && !g.adjacent(p[0], p[2]) &&
              !g.adjacent(p[0], p[3]) && !g.adjacent(p[1], p[3]))
            return false;
        }
  return true;
}

std::vector<std::string> decorated_plane_binary_trees(int k) {
  // Shapes with leaves as '#' and internal nodes as '(' d l r ')', where the
  // decoration is filled in later.
  std::function<std::vector<std::string>(int)> shapes = [&](int leaves) -> std::vector<std::string> {
    if (leaves == 1) return {"#"};
    std::vector<std::string> out;
    for (int left = 1; left < leaves; ++left)
      for (const auto& a : shapes(left))
        for (const auto& b : shapes(leaves - left)) out.push_back("(@ " + a + " " + b + ")");
    return out;
  };
  std::vector<std::string> out;
  std::vector<int> labels = iota_labels(k);
  for (const auto& shape : shapes(k)) {
    do {
      for (std::uint32_t decorations = 0; decorations < (1U << (k - 1)); ++decorations) {
        std::string s;
        std::size_t leaf = 0;
        int internal = 0;
        for (char c : shape) {
          if (c == '#')
            s += std::to_string(labels[leaf++]);
          else if (c == '@')
            s.push_back(((decorations >> internal++) & 1U) ? '1' : '0');
          else
            s.push_back(c);
        }
        out.push_back(s);
      }
    } while (std::next_permutation(labels.begin(), labels.end()));
    std::sort(labels.begin(), labels.end());
  }
  return out;
}

}  // namespace cograph::oracles
