#include "cograph/cotree.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

#include "cograph/errors.hpp"
#include "cograph/rng.hpp"

namespace cograph {

std::size_t Cotree::child_count(NodeId v) const {
  std::size_t c = 0;
  for (NodeId ch = first_child(v); ch != kNoNode; ch = next_sibling(ch)) ++c;
  return c;
}

bool Cotree::is_ancestor(NodeId a, NodeId v) const {
  const std::size_t fa = first_leaf_position(a);
  const std::size_t fv = first_leaf_position(v);
  return fa <= fv && fv + leaf_count(v) <= fa + leaf_count(a) && depth(a) <= depth(v);
}

std::size_t Cotree::vertex_of(NodeId leaf) const {
  return labeled_ ? static_cast<std::size_t>(label(leaf) - 1) : first_leaf_position(leaf);
}

std::vector<NodeId> Cotree::vertex_leaves() const {
  std::vector<NodeId> out(size());
  for (NodeId leaf : leaves_) out[vertex_of(leaf)] = leaf;
  return out;
}

void Cotree::finalize() {
  const std::size_t count = decoration_.size();
  depth_.assign(count, 0);
  leaf_count_.assign(count, 0);
  first_leaf_.assign(count, 0);
  for (std::size_t v = 1; v < count; ++v) depth_[v] = depth_[idx(parent_[v])] + 1;
  for (std::size_t v = count; v-- > 0;) {
    if (decoration_[v] == Decoration::Leaf) leaf_count_[v] = 1;
    if (v > 0) leaf_count_[idx(parent_[v])] += leaf_count_[v];
  }
  leaves_.clear();
  leaves_.reserve(static_cast<std::size_t>(leaf_count_[0]));
  std::vector<NodeId> stack{0};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    first_leaf_[idx(v)] = static_cast<std::int32_t>(leaves_.size());
    if (decoration_[idx(v)] == Decoration::Leaf) {
      leaves_.push_back(v);
      continue;
    }
    const std::size_t mark = stack.size();
    for (NodeId c = first_child_[idx(v)]; c != kNoNode; c = next_sibling_[idx(c)]) stack.push_back(c);
    std::reverse(stack.begin() + static_cast<std::ptrdiff_t>(mark), stack.end());
  }
}

Cotree::Builder::Builder(std::size_t reserve_nodes) {
  tree_.decoration_.reserve(reserve_nodes);
  tree_.parent_.reserve(reserve_nodes);
  tree_.first_child_.reserve(reserve_nodes);
  tree_.next_sibling_.reserve(reserve_nodes);
  tree_.label_.reserve(reserve_nodes);
  last_child_.reserve(reserve_nodes);
}

NodeId Cotree::Builder::add(NodeId parent, Decoration d, int label) {
  const auto id = static_cast<NodeId>(tree_.decoration_.size());
  if (parent == kNoNode) {
    if (id != 0) throw InvalidArgument("cotree builder: root already exists");
  } else {
    if (parent < 0 || parent >= id) throw InvalidArgument("cotree builder: unknown parent");
    if (tree_.decoration_[idx(parent)] == Decoration::Leaf) throw InvalidArgument("cotree builder: leaf cannot have children");
  }
  if (d == Decoration::Leaf ? label < 0 : label != 0) throw InvalidArgument("cotree builder: bad label");
  tree_.decoration_.push_back(d);
  tree_.parent_.push_back(parent);
  tree_.first_child_.push_back(kNoNode);
  tree_.next_sibling_.push_back(kNoNode);
  tree_.label_.push_back(label);
  last_child_.push_back(kNoNode);
  if (parent != kNoNode) {
    NodeId& last = last_child_[idx(parent)];
    if (last == kNoNode)
      tree_.first_child_[idx(parent)] = id;
    else
      tree_.next_sibling_[idx(last)] = id;
    last = id;
  }
  return id;
}

Cotree Cotree::Builder::build() && {
  Cotree& t = tree_;
  if (t.decoration_.empty()) throw InvalidArgument("cotree builder: empty tree");
  std::size_t leaves = 0;
  std::size_t labeled = 0;
  for (std::size_t v = 0; v < t.decoration_.size(); ++v) {
    if (t.decoration_[v] == Decoration::Leaf) {
      ++leaves;
      if (t.label_[v] > 0) ++labeled;
    } else if (t.first_child_[v] == kNoNode || t.next_sibling_[idx(t.first_child_[v])] == kNoNode) {
      throw InvalidArgument("cotree: internal node " + std::to_string(v) + " has fewer than two children");
    }
  }
  if (labeled != 0 && labeled != leaves) throw InvalidArgument("cotree: leaves must be all labeled or all unlabeled");
  if (labeled == leaves) {
    std::vector<char> seen(leaves + 1, 0);
    for (std::size_t v = 0; v < t.decoration_.size(); ++v) {
      if (t.decoration_[v] != Decoration::Leaf) continue;
      const int l = t.label_[v];
      if (l < 1 || static_cast<std::size_t>(l) > leaves || seen[static_cast<std::size_t>(l)])
        throw InvalidArgument("cotree: labels must be a bijection onto 1..n");
      seen[static_cast<std::size_t>(l)] = 1;
    }
  }
  t.labeled_ = labeled == leaves;
  t.finalize();
  return std::move(t);
}

Cotree single_leaf(int label) {
  Cotree::Builder b;
  b.add_root(Decoration::Leaf, label);
  return std::move(b).build();
}

bool is_canonical(const Cotree& t) {
  for (std::size_t v = 1; v < t.node_count(); ++v) {
    const auto id = static_cast<NodeId>(v);
    if (!t.is_leaf(id) && t.decoration(id) == t.decoration(t.parent(id))) return false;
  }
  return true;
}

std::string to_string(const Cotree& t) {
  std::string out;
  // Frames: (node, next child to print)
  std::vector<std::pair<NodeId, NodeId>> stack;
  auto open = [&](NodeId v) {
    if (!out.empty() && out.back() != '(') out.push_back(' ');
    if (t.is_leaf(v)) {
      if (t.is_labeled())
        out += std::to_string(t.label(v));
      else
        out.push_back('*');
      return;
    }
    out.push_back('(');
    out.push_back(t.decoration(v) == Decoration::One ? '1' : '0');
    stack.emplace_back(v, t.first_child(v));
  };
  open(t.root());
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next == kNoNode) {
      out.push_back(')');
      stack.pop_back();
      continue;
    }
    const NodeId c = next;
    next = t.next_sibling(c);
    open(c);
  }
  return out;
}

Cotree parse_cotree(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("cotree parse error at offset " + std::to_string(pos) + ": " + what);
  };
  Cotree::Builder b;
  std::vector<NodeId> open;
  bool done = false;
  auto parent = [&] { return open.empty() ? kNoNode : open.back(); };
  skip();
  while (pos < text.size()) {
    if (done) throw fail("trailing input");
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      skip();
      if (pos >= text.size() || (text[pos] != '0' && text[pos] != '1')) throw fail("expected decoration 0 or 1");
      const Decoration d = text[pos] == '1' ? Decoration::One : Decoration::Zero;
      ++pos;
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '(')
        throw fail("decoration must be a single digit");
      open.push_back(b.add_child(parent(), d));
    } else if (c == ')') {
      if (open.empty()) throw fail("unbalanced ')'");
      ++pos;
      open.pop_back();
      if (open.empty()) done = true;
    } else if (c == '*' || std::isdigit(static_cast<unsigned char>(c))) {
      int label = 0;
      if (c == '*') {
        ++pos;
      } else {
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          value = value * 10 + (text[pos] - '0');
          if (value > 1'000'000'000) throw fail("label too large");
          ++pos;
        }
        if (value == 0) throw fail("labels start at 1");
        label = static_cast<int>(value);
      }
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ')' && text[pos] != '(')
        throw fail("malformed leaf");
      b.add_child(parent(), Decoration::Leaf, label);
      if (open.empty()) done = true;
    } else {
      throw fail(std::string("unexpected character '") + c + "'");
    }
    skip();
  }
  if (!open.empty()) throw fail("missing ')'");
  if (b.node_count() == 0) throw fail("empty input");
  try {
    return std::move(b).build();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string canonical_encoding(const Cotree& t, bool with_labels) {
  const bool labels = with_labels && t.is_labeled();
  std::vector<std::string> enc(t.node_count());
  std::vector<std::string> parts;
  for (std::size_t i = t.node_count(); i-- > 0;) {
    const auto v = static_cast<NodeId>(i);
    if (t.is_leaf(v)) {
      enc[i] = labels ? std::to_string(t.label(v)) : "*";
      continue;
    }
    parts.clear();
    for (NodeId c : t.children(v)) parts.push_back(std::move(enc[static_cast<std::size_t>(c)]));
    std::sort(parts.begin(), parts.end());
    std::string& s = enc[i];
    s = t.decoration(v) == Decoration::One ? "(1" : "(0";
    for (const auto& p : parts) {
      s.push_back(' ');
      s += p;
    }
    s.push_back(')');
  }
  return enc[0];
}

namespace {

// Copies t top-down; `label_of(leaf)` gives the new label.
template <typename LabelFn>
Cotree copy_with(const Cotree& t, LabelFn label_of) {
  Cotree::Builder b(t.node_count());
  std::vector<NodeId> map(t.node_count(), kNoNode);
  for (std::size_t i = 0; i < t.node_count(); ++i) {
    const auto v = static_cast<NodeId>(i);
    const NodeId p = t.parent(v) == kNoNode ? kNoNode : map[static_cast<std::size_t>(t.parent(v))];
    map[i] = b.add_child(p, t.decoration(v), t.is_leaf(v) ? label_of(v) : 0);
  }
  return std::move(b).build();
}

}  // namespace

Cotree without_labels(const Cotree& t) {
  return copy_with(t, [](NodeId) { return 0; });
}

Cotree with_labels(const Cotree& t, std::span<const int> labels) {
  if (labels.size() != t.size()) throw InvalidArgument("label vector size mismatch");
  return copy_with(t, [&](NodeId leaf) { return labels[t.vertex_of(leaf)]; });
}

Graph cograph_in_dfs_order(const Cotree& t) {
  const std::size_t n = t.size();
  if (n > Graph::kDenseLimit) throw LimitExceeded("cograph_of: too many vertices for a dense matrix");
  BitMatrix m(n);
  for (NodeId leaf : t.leaves()) {
    const std::size_t p = t.first_leaf_position(leaf);
    NodeId child = leaf;
    for (NodeId a = t.parent(leaf); a != kNoNode; child = a, a = t.parent(a)) {
      if (t.decoration(a) != Decoration::One) continue;
      const std::size_t fa = t.first_leaf_position(a);
      const std::size_t fc = t.first_leaf_position(child);
      m.set_range(p, fa, fc);
      m.set_range(p, fc + t.leaf_count(child), fa + t.leaf_count(a));
    }
  }
  return Graph(std::move(m));
}

Graph cograph_of(const Cotree& t) {
  Graph dfs = cograph_in_dfs_order(t);
  if (!t.is_labeled()) return dfs;
  std::vector<int> perm(t.size());
  for (NodeId leaf : t.leaves()) perm[t.first_leaf_position(leaf)] = t.label(leaf) - 1;
  bool identity = true;
  for (std::size_t i = 0; i < perm.size(); ++i) identity &= perm[i] == static_cast<int>(i);
  return identity ? dfs : permute(dfs, perm);
}

NodeId first_common_ancestor(const Cotree& t, NodeId u, NodeId v) {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= t.node_count() || static_cast<std::size_t>(v) >= t.node_count())
    throw InvalidArgument("first_common_ancestor: node out of range");
  while (t.depth(u) > t.depth(v)) u = t.parent(u);
  while (t.depth(v) > t.depth(u)) v = t.parent(v);
  while (u != v) {
    u = t.parent(u);
    v = t.parent(v);
  }
  return u;
}

Cotree canonical_cotree_of(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0) throw InvalidArgument("canonical_cotree_of: empty graph");
  const std::size_t words = g.matrix().words_per_row();
  Cotree::Builder b(2 * n);
  struct Task {
    NodeId parent;
    std::vector<int> vertices;
  };
  std::vector<Task> tasks;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  tasks.push_back({kNoNode, std::move(all)});

  std::vector<bitrow::Word> unvisited(words);
  std::vector<bitrow::Word> fresh(words);
  // Components of the subgraph on `vs`, in g itself or in its complement.
  auto components = [&](const std::vector<int>& vs, bool in_complement) {
    std::fill(unvisited.begin(), unvisited.end(), 0);
    for (int v : vs) unvisited[static_cast<std::size_t>(v) >> 6] |= bitrow::Word{1} << (v & 63);
    std::vector<std::vector<int>> parts;
    for (int s : vs) {
      if (!((unvisited[static_cast<std::size_t>(s) >> 6] >> (s & 63)) & 1U)) continue;
      unvisited[static_cast<std::size_t>(s) >> 6] &= ~(bitrow::Word{1} << (s & 63));
      std::vector<int> part{s};
      for (std::size_t head = 0; head < part.size(); ++head) {
        const bitrow::Word* row = g.matrix().row(static_cast<std::size_t>(part[head]));
        const bool any = in_complement ? bitrow::andnot_into(fresh.data(), unvisited.data(), row, words)
                                       : bitrow::and_into(fresh.data(), row, unvisited.data(), words);
        if (!any) continue;
        bitrow::andnot_assign(unvisited.data(), fresh.data(), words);
        for (std::size_t w = 0; w < words; ++w)
          for (bitrow::Word bits = fresh[w]; bits; bits &= bits - 1)
            part.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      }
      std::sort(part.begin(), part.end());
      parts.push_back(std::move(part));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
  };

  while (!tasks.empty()) {
    Task task = std::move(tasks.back());
    tasks.pop_back();
    if (task.vertices.size() == 1) {
      b.add_child(task.parent, Decoration::Leaf, task.vertices[0] + 1);
      continue;
    }
    auto parts = components(task.vertices, false);
    Decoration d = Decoration::Zero;
    if (parts.size() == 1) {
      parts = components(task.vertices, true);
      d = Decoration::One;
      if (parts.size() == 1) throw NotACograph(std::move(task.vertices));
    }
    const NodeId node = b.add_child(task.parent, d);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) tasks.push_back({node, std::move(*it)});
  }
  return std::move(b).build();
}

Cotree canonicalize(const Cotree& t) {
  Cotree::Builder b(t.node_count());
  struct Task {
    NodeId source;
    NodeId parent;
  };
  std::vector<Task> tasks{{t.root(), kNoNode}};
  std::vector<NodeId> expand;
  std::vector<NodeId> merged;
  while (!tasks.empty()) {
    const Task task = tasks.back();
    tasks.pop_back();
    const NodeId v = task.source;
    if (t.is_leaf(v)) {
      b.add_child(task.parent, Decoration::Leaf, t.label(v));
      continue;
    }
    const NodeId node = b.add_child(task.parent, t.decoration(v));
    // Children after contracting same-decoration descendants, in plane order.
    merged.clear();
    expand.assign(1, v);
    while (!expand.empty()) {
      const NodeId x = expand.back();
      expand.pop_back();
      std::vector<NodeId> kids(t.children(x).begin(), t.children(x).end());
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        if (!t.is_leaf(*it) && t.decoration(*it) == t.decoration(v))
          expand.push_back(*it);
        else
          merged.push_back(*it);
      }
    }
    for (NodeId c : merged) tasks.push_back({c, node});
  }
  return std::move(b).build();
}

Cotree induced_cotree(const Cotree& t, std::span<const NodeId> leaves) {
  const std::size_t k = leaves.size();
  if (k == 0) throw InvalidArgument("induced_cotree: empty leaf tuple");
  std::vector<NodeId> nodes;
  nodes.reserve(2 * k);
  {
    std::vector<char> seen(t.node_count(), 0);
    for (NodeId l : leaves) {
      if (l < 0 || static_cast<std::size_t>(l) >= t.node_count() || !t.is_leaf(l))
        throw InvalidArgument("induced_cotree: id " + std::to_string(l) + " is not a leaf");
      if (seen[static_cast<std::size_t>(l)]) throw InvalidArgument("induced_cotree: repeated leaf " + std::to_string(l));
      seen[static_cast<std::size_t>(l)] = 1;
      nodes.push_back(l);
    }
  }
  auto dfs_less = [&](NodeId a, NodeId b) {
    const auto fa = t.first_leaf_position(a);
    const auto fb = t.first_leaf_position(b);
    if (fa != fb) return fa < fb;
    return t.depth(a) < t.depth(b);
  };
  std::vector<NodeId> marked(nodes);
  std::sort(marked.begin(), marked.end(), dfs_less);
  for (std::size_t i = 0; i + 1 < marked.size(); ++i) nodes.push_back(first_common_ancestor(t, marked[i], marked[i + 1]));
  std::sort(nodes.begin(), nodes.end(), dfs_less);
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  std::vector<int> new_label(t.node_count(), 0);
  for (std::size_t i = 0; i < k; ++i) new_label[static_cast<std::size_t>(leaves[i])] = static_cast<int>(i + 1);

  Cotree::Builder b(nodes.size());
  std::vector<std::pair<NodeId, NodeId>> stack;  // (source node, new id)
  for (NodeId v : nodes) {
    while (!stack.empty() && !t.is_ancestor(stack.back().first, v)) stack.pop_back();
    const NodeId parent = stack.empty() ? kNoNode : stack.back().second;
    const NodeId id = b.add_child(parent, t.decoration(v), t.is_leaf(v) ? new_label[static_cast<std::size_t>(v)] : 0);
    stack.emplace_back(v, id);
  }
  return std::move(b).build();
}

std::vector<std::int64_t> degree_vector(const Cotree& t) {
  std::vector<std::int64_t> acc(t.node_count(), 0);
  std::vector<std::int64_t> out(t.size(), 0);
  for (std::size_t i = 1; i < t.node_count(); ++i) {
    const auto v = static_cast<NodeId>(i);
    const NodeId p = t.parent(v);
    acc[i] = acc[static_cast<std::size_t>(p)];
    if (t.decoration(p) == Decoration::One)
      acc[i] += static_cast<std::int64_t>(t.leaf_count(p)) - static_cast<std::int64_t>(t.leaf_count(v));
  }
  for (NodeId leaf : t.leaves()) out[t.vertex_of(leaf)] = acc[static_cast<std::size_t>(leaf)];
  return out;
}

std::vector<NodeId> leaf_dfs_order(const Cotree& t, std::optional<std::uint64_t> seed) {
  std::vector<int> min_label(t.node_count(), 0);
  if (t.is_labeled() && !seed) {
    for (std::size_t i = t.node_count(); i-- > 0;) {
      const auto v = static_cast<NodeId>(i);
      if (t.is_leaf(v)) min_label[i] = t.label(v);
      if (i > 0) {
        int& pm = min_label[static_cast<std::size_t>(t.parent(v))];
        pm = pm == 0 ? min_label[i] : std::min(pm, min_label[i]);
      }
    }
  }
  std::optional<Rng> rng;
  if (seed) rng.emplace(*seed);
  std::vector<NodeId> out;
  out.reserve(t.size());
  std::vector<NodeId> stack{t.root()};
  std::vector<NodeId> kids;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (t.is_leaf(v)) {
      out.push_back(v);
      continue;
    }
    kids.assign(t.children(v).begin(), t.children(v).end());
    if (rng) {
      for (std::size_t i = kids.size(); i > 1; --i) std::swap(kids[i - 1], kids[rng->below(i)]);
    } else if (t.is_labeled()) {
      std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
        return min_label[static_cast<std::size_t>(a)] < min_label[static_cast<std::size_t>(b)];
      });
    }
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

EdgeProfile edge_profile(const Cotree& t) {
  EdgeProfile p;
  p.leaves = t.size();
  p.internal_nodes = t.internal_count();
  for (std::size_t i = 1; i < t.node_count(); ++i) {
    const auto v = static_cast<NodeId>(i);
    if (t.is_leaf(v)) continue;
    if (t.decoration(v) == t.decoration(t.parent(v)))
      ++p.equal_edges;
    else
      ++p.unequal_edges;
  }
  return p;
}

NotACograph::NotACograph(std::vector<int> vertices)
    : Error([&] {
        std::ostringstream msg;
        msg << "not a cograph: vertex set {";
        for (std::size_t i = 0; i < vertices.size(); ++i) msg << (i ? "," : "") << vertices[i];
        msg << "} induces a graph whose complement is also connected";
        return msg.str();
      }()),
      vertices_(std::move(vertices)) {}

}  // namespace cograph
