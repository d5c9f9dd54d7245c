#include "tancurve/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <type_traits>

namespace tancurve {

bool Box::overlaps_inflated(const Box& other, double margin) const {
  const Vec2 lo{min.x - margin, min.y - margin};
  const Vec2 hi{min.x + width + margin, min.y + width + margin};
  const Vec2 olo = other.min;
  const Vec2 ohi = other.max();
  return olo.x <= hi.x && ohi.x >= lo.x && olo.y <= hi.y && ohi.y >= lo.y;
}

QuadTree::QuadTree(std::span<const TangentSample> samples, double rho_max, double lambda,
                   std::size_t max_depth)
    : max_depth_(max_depth), lambda_(lambda), min_split_width_(std::numeric_limits<double>::infinity()) {
  if (samples.empty()) throw InvalidInput("quadtree needs at least one sample");
  if (!(rho_max > 0.0) || !std::isfinite(rho_max)) throw InvalidInput("rho_max must be > 0");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidInput("lambda must be > 0");

  const double raw = std::ceil(rho_max * lambda * lambda);
  threshold_ = raw < 1.0 ? 1 : static_cast<std::size_t>(std::min(raw, 1e18));

  Vec2 lo = samples.front().pos;
  Vec2 hi = lo;
  for (const auto& s : samples) {
    lo = {std::min(lo.x, s.pos.x), std::min(lo.y, s.pos.y)};
    hi = {std::max(hi.x, s.pos.x), std::max(hi.y, s.pos.y)};
  }
  const double half = 0.5 * std::max(hi.x - lo.x, hi.y - lo.y) + lambda;
  const Vec2 c{0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y)};

  order_.resize(samples.size());
  for (Index i = 0; i < order_.size(); ++i) order_[i] = i;

  nodes_.reserve(2 * samples.size() / threshold_ + 16);
  Node root;
  root.box = Box{{c.x - half, c.y - half}, 2.0 * half};
  root.begin = 0;
  root.end = static_cast<std::uint32_t>(order_.size());
  nodes_.push_back(root);
  split(0, samples);
  points_.reserve(order_.size());
  for (Index i : order_) points_.push_back(samples[i].pos);
  buffer_ = {};
  scratch_ = {};
}

void QuadTree::split(std::size_t node_index, std::span<const TangentSample> samples) {
  const Node node = nodes_[node_index];
  if (node.size() <= threshold_) return;
  if (node.depth >= max_depth_) {
    throw QuadTreeDepthError("quadtree leaf at depth " + std::to_string(node.depth) + " holds " +
                             std::to_string(node.size()) + " samples (threshold " +
                             std::to_string(threshold_) + "); density bound violated");
  }
  min_split_width_ = std::min(min_split_width_, node.box.width);

  const Vec2 mid = node.box.center();
  auto quadrant = [&](Index i) {
    const Vec2 p = samples[i].pos;
    return (p.x >= mid.x ? 1 : 0) + (p.y >= mid.y ? 2 : 0);
  };
  // Stable counting partition into the four quadrants.
  std::array<std::uint32_t, 5> start{};
  scratch_.resize(node.size());
  for (std::uint32_t k = node.begin; k < node.end; ++k) {
    const int q = quadrant(order_[k]);
    scratch_[k - node.begin] = static_cast<std::uint8_t>(q);
    ++start[static_cast<std::size_t>(q) + 1];
  }
  for (std::size_t q = 0; q < 4; ++q) start[q + 1] += start[q];
  buffer_.resize(node.size());
  std::array<std::uint32_t, 4> fill{start[0], start[1], start[2], start[3]};
  for (std::uint32_t k = node.begin; k < node.end; ++k) buffer_[fill[scratch_[k - node.begin]]++] = order_[k];
  std::copy(buffer_.begin(), buffer_.begin() + node.size(), order_.begin() + node.begin);

  const double hw = 0.5 * node.box.width;
  std::array<std::int32_t, 4> children{};
  for (int q = 0; q < 4; ++q) {
    Node child;
    child.box = Box{{node.box.min.x + ((q & 1) ? hw : 0.0), node.box.min.y + ((q & 2) ? hw : 0.0)},
                    hw};
    child.depth = node.depth + 1;
    child.begin = node.begin + start[static_cast<std::size_t>(q)];
    child.end = node.begin + start[static_cast<std::size_t>(q) + 1];
    children[q] = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(child);
  }
  nodes_[node_index].children = children;
  for (std::int32_t child : children) split(static_cast<std::size_t>(child), samples);
}

std::span<const Index> QuadTree::leaf_samples(const Node& leaf) const {
  return std::span<const Index>(order_).subspan(leaf.begin, leaf.size());
}

std::span<const Vec2> QuadTree::leaf_points(const Node& leaf) const {
  return std::span<const Vec2>(points_).subspan(leaf.begin, leaf.size());
}

std::vector<std::size_t> QuadTree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].is_leaf()) out.push_back(i);
  }
  return out;
}

void QuadTree::leaves_near(const Box& box, double margin, std::vector<std::size_t>& out) const {
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t n = stack.back();
    stack.pop_back();
    const Node& node = nodes_[n];
    if (!box.overlaps_inflated(node.box, margin)) continue;
    if (node.is_leaf()) {
      out.push_back(n);
    } else {
      for (std::int32_t c : node.children) stack.push_back(static_cast<std::size_t>(c));
    }
  }
}

double estimate_rho_max(std::span<const TangentSample> samples, double lambda) {
  if (!(lambda > 0.0)) throw InvalidInput("lambda must be > 0");
  if (samples.empty()) return 2.0 / (lambda * lambda);
  Vec2 lo = samples.front().pos;
  Vec2 hi = lo;
  for (const auto& s : samples) {
    lo = {std::min(lo.x, s.pos.x), std::min(lo.y, s.pos.y)};
    hi = {std::max(hi.x, s.pos.x), std::max(hi.y, s.pos.y)};
  }
  const double nx = std::floor((hi.x - lo.x) / lambda) + 1.0;
  const double ny = std::floor((hi.y - lo.y) / lambda) + 1.0;
  auto cell = [&](Vec2 p) {
    return std::pair{static_cast<std::uint64_t>(std::floor((p.x - lo.x) / lambda)),
                     static_cast<std::uint64_t>(std::floor((p.y - lo.y) / lambda))};
  };
  std::size_t worst = 0;
  if (nx * ny <= 16.0 * static_cast<double>(samples.size()) + 4096.0) {
    // Dense counting when the grid is small relative to the input.
    const auto w = static_cast<std::uint64_t>(nx);
    std::vector<std::uint32_t> counts(static_cast<std::size_t>(nx * ny), 0);
    for (const auto& s : samples) {
      const auto [cx, cy] = cell(s.pos);
      worst = std::max<std::size_t>(worst, ++counts[static_cast<std::size_t>(cy * w + cx)]);
    }
  } else {
    std::vector<std::uint64_t> keys;
    keys.reserve(samples.size());
    for (const auto& s : samples) {
      const auto [cx, cy] = cell(s.pos);
      keys.push_back((cx << 32) ^ (cy & 0xffffffffULL));
    }
    std::sort(keys.begin(), keys.end());
    for (std::size_t a = 0; a < keys.size();) {
      std::size_t b = a;
      while (b < keys.size() && keys[b] == keys[a]) ++b;
      worst = std::max(worst, b - a);
      a = b;
    }
  }
  return 2.0 * static_cast<double>(std::max<std::size_t>(worst, 1)) / (lambda * lambda);
}

QuadTree build_quadtree(std::span<const TangentSample> samples, double rho_max, double lambda,
                        std::size_t max_depth) {
  return QuadTree(samples, rho_max, lambda, max_depth);
}

namespace {

double pair_margin(double lambda) {
  // Widened slightly so rounding in the box arithmetic cannot drop a pair at
  // exactly lambda.
  return lambda * (1.0 + 1e-9) + 1e-12;
}

// Dual traversal over node pairs whose boxes are within the margin. Small
// nodes are handed to `visit` whole (a subtree's samples are contiguous), so
// each unordered sample pair is offered exactly once.
template <class Visit>
class NodePairWalker {
 public:
  static constexpr std::size_t kBlock = 8;

  NodePairWalker(const QuadTree& tree, double margin, Visit& visit)
      : nodes_(tree.nodes()), margin_(margin), visit_(visit) {}

  void within(std::size_t n) {
    const auto& node = nodes_[n];
    if (node.size() == 0) return;
    if (node.is_leaf() || node.size() <= kBlock) {
      visit_(node, node);
      return;
    }
    const auto& c = node.children;
    for (std::size_t i = 0; i < 4; ++i) within(static_cast<std::size_t>(c[i]));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) across(static_cast<std::size_t>(c[i]), static_cast<std::size_t>(c[j]));
    }
  }

 private:
  void across(std::size_t a, std::size_t b) {
    const auto& na = nodes_[a];
    const auto& nb = nodes_[b];
    if (na.size() == 0 || nb.size() == 0 || !na.box.overlaps_inflated(nb.box, margin_)) return;
    if ((na.is_leaf() && nb.is_leaf()) || na.size() * nb.size() <= kBlock * kBlock) {
      visit_(na, nb);
    } else if (nb.is_leaf() || (!na.is_leaf() && na.box.width >= nb.box.width)) {
      for (std::int32_t c : na.children) across(static_cast<std::size_t>(c), b);
    } else {
      for (std::int32_t c : nb.children) across(a, static_cast<std::size_t>(c));
    }
  }

  const std::vector<QuadTree::Node>& nodes_;
  double margin_;
  Visit& visit_;
};

template <class Visit>
void visit_node_pairs(const QuadTree& tree, double lambda, Visit&& visit) {
  NodePairWalker<std::remove_reference_t<Visit>> walker(tree, pair_margin(lambda), visit);
  walker.within(0);
}

}  // namespace

void for_each_neighbor_pair(const QuadTree& tree, double lambda,
                            const std::function<void(Index, Index)>& visit) {
  visit_node_pairs(tree, lambda, [&](const QuadTree::Node& a, const QuadTree::Node& b) {
    const auto sa = tree.leaf_samples(a);
    const auto sb = tree.leaf_samples(b);
    for (std::size_t x = 0; x < sa.size(); ++x) {
      for (std::size_t y = (&a == &b ? x + 1 : 0); y < sb.size(); ++y) visit(sa[x], sb[y]);
    }
  });
}

std::vector<Edge> neighbor_pairs(const QuadTree& tree, double lambda) {
  const double r2 = pair_margin(lambda) * pair_margin(lambda);
  std::vector<Edge> out;
  out.reserve(4 * tree.sample_count());
  visit_node_pairs(tree, lambda, [&](const QuadTree::Node& a, const QuadTree::Node& b) {
    const auto sa = tree.leaf_samples(a), sb = tree.leaf_samples(b);
    const auto pa = tree.leaf_points(a), pb = tree.leaf_points(b);
    for (std::size_t x = 0; x < sa.size(); ++x) {
      for (std::size_t y = (&a == &b ? x + 1 : 0); y < sb.size(); ++y) {
        if ((pa[x] - pb[y]).norm2() <= r2) out.push_back(Edge::make(sa[x], sb[y]));
      }
    }
  });
  return out;
}

namespace {

double box_distance2(const Box& b, Vec2 p) {
  const Vec2 hi = b.max();
  const double dx = std::max({b.min.x - p.x, 0.0, p.x - hi.x});
  const double dy = std::max({b.min.y - p.y, 0.0, p.y - hi.y});
  return dx * dx + dy * dy;
}

}  // namespace

std::vector<Index> k_nearest(const QuadTree& tree, std::span<const TangentSample> samples, Index i,
                             std::size_t k) {
  using Item = std::pair<double, std::size_t>;
  const Vec2 p = samples[i].pos;
  // Best-first over nodes; `best` is a max-heap of the current k winners.
  std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
  std::priority_queue<std::pair<double, Index>> best;
  frontier.emplace(box_distance2(tree.root().box, p), 0);
  const auto& nodes = tree.nodes();
  while (!frontier.empty()) {
    const auto [d2, n] = frontier.top();
    frontier.pop();
    if (best.size() == k && d2 > best.top().first) break;
    const auto& node = nodes[n];
    if (node.is_leaf()) {
      for (Index j : tree.leaf_samples(node)) {
        if (j == i) continue;
        const std::pair<double, Index> cand{(samples[j].pos - p).norm2(), j};
        if (best.size() < k) {
          best.push(cand);
        } else if (cand < best.top()) {
          best.pop();
          best.push(cand);
        }
      }
    } else {
      for (std::int32_t c : node.children)
        frontier.emplace(box_distance2(nodes[static_cast<std::size_t>(c)].box, p), static_cast<std::size_t>(c));
    }
  }
  std::vector<Index> out(best.size());
  for (std::size_t r = out.size(); r-- > 0;) {
    out[r] = best.top().second;
    best.pop();
  }
  return out;
}

PolyGraph k_nearest_graph(std::span<const TangentSample> samples, std::size_t k) {
  PolyGraph g(samples.size());
  if (samples.size() < 2 || k == 0) return g;
  // Leaves of about eight samples; lambda only pads the root box here.
  Vec2 lo = samples.front().pos, hi = lo;
  for (const auto& s : samples) {
    lo = {std::min(lo.x, s.pos.x), std::min(lo.y, s.pos.y)};
    hi = {std::max(hi.x, s.pos.x), std::max(hi.y, s.pos.y)};
  }
  const double lambda = std::max({hi.x - lo.x, hi.y - lo.y, 1e-9}) * 1e-3;
  const QuadTree tree(samples, 8.0 / (lambda * lambda), lambda, 64);
  std::vector<Edge> edges;
  edges.reserve(samples.size() * k);
  for (Index i = 0; i < samples.size(); ++i) {
    for (Index j : k_nearest(tree, samples, i, k)) edges.push_back(Edge::make(i, j));
  }
  return PolyGraph(samples.size(), std::move(edges));
}

PolyGraph fast_candidate_graph(std::span<const TangentSample> samples, const ZoneParams& zp,
                               Mode mode, std::optional<double> rho_max) {
  return build_candidate_graph(samples, zp, mode, PairSource::quadtree, rho_max);
}

}  // namespace tancurve
