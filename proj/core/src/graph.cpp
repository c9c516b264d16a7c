#include "faultpath/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace faultpath {

namespace {

constexpr int64_t kMaxScaledWeight = int64_t(1) << 62;
constexpr uint64_t kKeyMask = (uint64_t(1) << 61) - 1;

int128 gcd128(int128 a, int128 b) {
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

struct Rational {
  int128 num = 0;
  int128 den = 1;
};

bool parse_uint(std::string_view s, int128& out) {
  if (s.empty() || s.size() > 30) return false;
  int128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

// Accepts "123", "1.5" (up to 9 fractional digits) and "p/q".
bool parse_weight_token(std::string_view s, Rational& out) {
  size_t slash = s.find('/');
  if (slash != std::string_view::npos) {
    int128 p, q;
    if (!parse_uint(s.substr(0, slash), p)) return false;
    if (!parse_uint(s.substr(slash + 1), q)) return false;
    if (q == 0) return false;
    out = {p, q};
  } else {
    size_t dot = s.find('.');
    if (dot == std::string_view::npos) {
      int128 p;
      if (!parse_uint(s, p)) return false;
      out = {p, 1};
    } else {
      std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
      if (fp.empty() || fp.size() > 9) return false;
      int128 i, f;
      if (!parse_uint(ip, i) || !parse_uint(fp, f)) return false;
      int128 den = 1;
      for (size_t k = 0; k < fp.size(); ++k) den *= 10;
      out = {i * den + f, den};
    }
  }
  int128 g = gcd128(out.num, out.den);
  if (g > 1) {
    out.num /= g;
    out.den /= g;
  }
  return true;
}

}  // namespace

uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string to_string_int128(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  std::string s;
  while (u != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

std::string ExtDist::str() const {
  if (is_infinite()) return "inf";
  return to_string_int128(main_) + "#" + to_string_int128(tiebreak());
}

WeightedGraph::WeightedGraph(NodeId node_count,
                             std::vector<std::tuple<NodeId, NodeId, int64_t>> raw,
                             int64_t denominator, uint64_t seed, NodeId s, NodeId t)
    : node_count_(node_count), denominator_(denominator), seed_(seed), s_(s), t_(t) {
  if (node_count < 0) throw ParseError("negative node count");
  if (denominator <= 0) throw ParseError("non-positive denominator");
  edges_.reserve(raw.size());
  std::unordered_set<uint64_t> seen_pairs;
  std::unordered_set<uint64_t> seen_keys;
  uint64_t state = seed;
  for (auto& [u, v, w] : raw) {
    if (u < 0 || u >= node_count || v < 0 || v >= node_count)
      throw ParseError("node index out of range");
    if (u == v) throw ParseError("self-loop rejected");
    if (w <= 0) throw ParseError("non-positive weight");
    NodeId a = std::min(u, v), b = std::max(u, v);
    uint64_t code = (static_cast<uint64_t>(a) << 32) | static_cast<uint64_t>(b);
    if (!seen_pairs.insert(code).second) throw ParseError("duplicate edge rejected");
    uint64_t key;
    do {
      key = splitmix64(state) & kKeyMask;
    } while (key == 0 || !seen_keys.insert(key).second);
    edges_.push_back(Edge{a, b, w, key});
  }
  adj_offsets_.assign(static_cast<size_t>(node_count) + 1, 0);
  for (const Edge& e : edges_) {
    ++adj_offsets_[static_cast<size_t>(e.u) + 1];
    ++adj_offsets_[static_cast<size_t>(e.v) + 1];
  }
  for (size_t i = 1; i < adj_offsets_.size(); ++i) adj_offsets_[i] += adj_offsets_[i - 1];
  adj_.resize(edges_.size() * 2);
  std::vector<size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
  for (EdgeId i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[static_cast<size_t>(i)];
    adj_[cursor[static_cast<size_t>(e.u)]++] = {e.v, i};
    adj_[cursor[static_cast<size_t>(e.v)]++] = {e.u, i};
  }
}

EdgeId WeightedGraph::find_edge(NodeId u, NodeId v) const {
  for (auto [nbr, e] : neighbors(u))
    if (nbr == v) return e;
  return kNoEdge;
}

std::string WeightedGraph::serialize() const {
  std::ostringstream out;
  out << node_count_ << ' ' << edge_count() << ' ' << s_ << ' ' << t_ << ' ' << seed_ << '\n';
  for (const Edge& e : edges_) {
    int128 num = e.weight;
    int64_t den = denominator_;
    int128 g = gcd128(num, den);
    num /= g;
    den = static_cast<int64_t>(den / g);
    out << e.u << ' ' << e.v << ' ' << to_string_int128(num);
    if (den != 1) out << '/' << den;
    out << '\n';
  }
  return out.str();
}

WeightedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty graph file");
  std::istringstream hs(header);
  long long n, m, s, t;
  unsigned long long seed = 0;
  if (!(hs >> n >> m >> s >> t)) throw ParseError("malformed header");
  hs >> seed;  // optional
  if (n < 0 || m < 0) throw ParseError("malformed header");
  if (s < 0 || s >= n || t < 0 || t >= n) throw ParseError("node index out of range");

  std::vector<std::tuple<NodeId, NodeId, Rational>> raw;
  raw.reserve(static_cast<size_t>(m));
  int128 lcm = 1;
  for (long long i = 0; i < m; ++i) {
    std::string line;
    do {
      if (!std::getline(in, line)) throw ParseError("unexpected end of file");
    } while (line.find_first_not_of(" \t\r") == std::string::npos);
    std::istringstream ls(line);
    long long u, v;
    std::string wtok;
    if (!(ls >> u >> v >> wtok)) throw ParseError("malformed edge line: " + line);
    Rational w;
    if (!parse_weight_token(wtok, w)) throw ParseError("malformed weight: " + wtok);
    if (w.num <= 0) throw ParseError("non-positive weight");
    int128 g = gcd128(lcm, w.den);
    lcm = lcm / g * w.den;
    if (lcm > kMaxScaledWeight) throw ParseError("weight denominators too large");
    raw.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v), w);
  }

  std::vector<std::tuple<NodeId, NodeId, int64_t>> scaled;
  scaled.reserve(raw.size());
  for (auto& [u, v, w] : raw) {
    int128 sw = w.num * (lcm / w.den);
    if (sw > kMaxScaledWeight) throw ParseError("weight too large after scaling");
    scaled.emplace_back(u, v, static_cast<int64_t>(sw));
  }
  return WeightedGraph(static_cast<NodeId>(n), std::move(scaled), static_cast<int64_t>(lcm),
                       seed, static_cast<NodeId>(s), static_cast<NodeId>(t));
}

GraphView GraphView::without_edges(std::span<const EdgeId> ids) const {
  GraphView v = *this;
  if (v.edge_removed_.empty())
    v.edge_removed_.assign(static_cast<size_t>(g_->edge_count()), 0);
  for (EdgeId e : ids) {
    if (e < 0 || e >= g_->edge_count()) throw std::out_of_range("invalid edge id");
    v.edge_removed_[static_cast<size_t>(e)] = 1;
  }
  return v;
}

GraphView GraphView::without_links(std::span<const std::pair<EdgeId, NodeId>> links) const {
  GraphView v = *this;
  for (auto [link, far] : links) {
    if (is_virtual_link(link)) {
      Hub& hub = v.hubs_[static_cast<size_t>(virtual_hub_index(link))];
      if (hub.removed.empty()) hub.removed.assign(static_cast<size_t>(node_count()), 0);
      hub.removed[static_cast<size_t>(far)] = 1;
    } else {
      if (v.edge_removed_.empty())
        v.edge_removed_.assign(static_cast<size_t>(g_->edge_count()), 0);
      v.edge_removed_[static_cast<size_t>(link)] = 1;
    }
  }
  return v;
}

GraphView GraphView::induced(const std::vector<uint8_t>& keep) const {
  GraphView v = *this;
  if (v.node_mask_.empty()) {
    v.node_mask_ = keep;
  } else {
    for (size_t i = 0; i < v.node_mask_.size(); ++i)
      v.node_mask_[i] = v.node_mask_[i] && keep[i];
  }
  return v;
}

GraphView GraphView::with_hub(const ShortcutWeights& w) const {
  GraphView v = *this;
  if (v.hubs_.size() >= 2) throw std::invalid_argument("at most two virtual hubs");
  v.hubs_.push_back(Hub{w.hub, &w, {}});
  return v;
}

std::vector<EdgeId> cut_edges(const WeightedGraph& g, const std::vector<uint8_t>& in_a) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if ((in_a[static_cast<size_t>(ed.u)] != 0) != (in_a[static_cast<size_t>(ed.v)] != 0))
      out.push_back(e);
  }
  return out;
}

std::string format_rational(int128 num, int64_t den) {
  int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den = static_cast<int64_t>(den / g);
  }
  if (den == 1) return to_string_int128(num);
  // den = 2^a * 5^b * r; exact decimal iff r == 1.
  int64_t r = den;
  int a = 0, b = 0;
  while (r % 2 == 0) {
    r /= 2;
    ++a;
  }
  while (r % 5 == 0) {
    r /= 5;
    ++b;
  }
  if (r != 1) return to_string_int128(num) + "/" + std::to_string(den);
  int digits = std::max(a, b);
  int128 pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  int128 scaled = num * (pow10 / den);
  std::string whole = to_string_int128(scaled / pow10);
  std::string frac = to_string_int128(scaled % pow10);
  frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return frac.empty() ? whole : whole + "." + frac;
}

}  // namespace faultpath
