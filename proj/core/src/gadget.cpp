#include "faultpath/gadget.hpp"

#include <sstream>
#include <stdexcept>

#include "faultpath/validation.hpp"

namespace faultpath {

namespace {

struct Builder {
  int32_t n_nodes = 0;
  std::vector<std::tuple<NodeId, NodeId, int64_t>> edges;

  NodeId fresh() { return n_nodes++; }
  void edge(NodeId u, NodeId v, int64_t w) { edges.emplace_back(u, v, w); }

  // A path of `len` edges between u and v (len - 1 fresh interior nodes).
  void chain(NodeId u, NodeId v, int64_t len, int64_t w) {
    NodeId prev = u;
    for (int64_t i = 1; i < len; ++i) {
      NodeId nxt = fresh();
      edge(prev, nxt, w);
      prev = nxt;
    }
    edge(prev, v, w);
  }
};

GadgetGraph build_common(const TriangleInstance& inst, uint64_t seed, bool weighted) {
  if (inst.a_count <= 0) throw std::invalid_argument("gadget: empty A part");
  if (inst.bc_count <= 0) throw std::invalid_argument("gadget: empty B/C parts");
  const int32_t l = inst.a_count;
  const int32_t n = inst.bc_count;
  const int64_t m1 = weighted ? inst.max_weight + 1 : 1;  // structural weight / denominator
  if (weighted) {
    for (auto w : inst.w_ab)
      if (w <= 0 || w > inst.max_weight) throw std::invalid_argument("gadget: bad weight");
    for (auto w : inst.w_bc)
      if (w <= 0 || w > inst.max_weight) throw std::invalid_argument("gadget: bad weight");
    for (auto w : inst.w_ca)
      if (w <= 0 || w > inst.max_weight) throw std::invalid_argument("gadget: bad weight");
  }

  Builder b;
  std::vector<NodeId> a(l), bs(n), cs(n), a2(l), xs(l + 1), ys(l + 1);
  for (auto& v : a) v = b.fresh();
  for (auto& v : bs) v = b.fresh();
  for (auto& v : cs) v = b.fresh();
  for (auto& v : a2) v = b.fresh();
  for (auto& v : xs) v = b.fresh();
  for (auto& v : ys) v = b.fresh();

  auto part_weight = [&](const std::vector<int64_t>& w, size_t i) {
    return weighted ? m1 + w[i] : int64_t(1);
  };
  for (size_t i = 0; i < inst.edges_ab.size(); ++i) {
    auto [ai, bi] = inst.edges_ab[i];
    b.edge(a[static_cast<size_t>(ai)], bs[static_cast<size_t>(bi)],
           part_weight(inst.w_ab, i));
  }
  for (size_t i = 0; i < inst.edges_bc.size(); ++i) {
    auto [bi, ci] = inst.edges_bc[i];
    b.edge(bs[static_cast<size_t>(bi)], cs[static_cast<size_t>(ci)],
           part_weight(inst.w_bc, i));
  }
  for (size_t i = 0; i < inst.edges_ca.size(); ++i) {
    auto [ci, ai] = inst.edges_ca[i];
    b.edge(cs[static_cast<size_t>(ci)], a2[static_cast<size_t>(ai)],
           part_weight(inst.w_ca, i));
  }
  for (int32_t i = 0; i + 1 <= l; ++i) {
    b.edge(xs[static_cast<size_t>(i)], xs[static_cast<size_t>(i) + 1], m1);
    b.edge(ys[static_cast<size_t>(i)], ys[static_cast<size_t>(i) + 1], m1);
  }
  std::vector<GadgetGraph::Threshold> thresholds;
  for (int32_t i = 1; i <= l; ++i) {
    // Chain length so the designated route meets the published threshold.
    int64_t len = weighted ? 2 * (int64_t(n) - i + 1) : 4 * (int64_t(n) - i + 1) + 1;
    b.chain(xs[static_cast<size_t>(i - 1)], a[static_cast<size_t>(i - 1)], len, m1);
    b.chain(a2[static_cast<size_t>(i - 1)], ys[static_cast<size_t>(i - 1)], len, m1);
    int128 structural =
        weighted ? int128(5 + 4 * int64_t(n) - 2 * i) : int128(11 + 8 * int64_t(n) - 6 * i);
    thresholds.push_back(GadgetGraph::Threshold{structural * m1, m1});
  }

  GadgetGraph gg{WeightedGraph(b.n_nodes, std::move(b.edges), m1, seed,
                               xs[0], ys[0]),
                 xs[0],
                 ys[0],
                 l,
                 n,
                 weighted,
                 std::move(xs),
                 std::move(ys),
                 std::move(a),
                 std::move(a2),
                 std::move(thresholds)};
  return gg;
}

}  // namespace

EdgeId GadgetGraph::fault_x(int32_t i) const {
  EdgeId e = graph.find_edge(x_nodes[static_cast<size_t>(i - 1)],
                             x_nodes[static_cast<size_t>(i)]);
  validate(e != kNoEdge, "gadget: missing designated fault");
  return e;
}

EdgeId GadgetGraph::fault_y(int32_t i) const {
  EdgeId e = graph.find_edge(y_nodes[static_cast<size_t>(i - 1)],
                             y_nodes[static_cast<size_t>(i)]);
  validate(e != kNoEdge, "gadget: missing designated fault");
  return e;
}

std::string GadgetGraph::sidecar() const {
  std::ostringstream out;
  for (int32_t i = 1; i <= a_count; ++i) {
    out << i << ' ' << x_nodes[static_cast<size_t>(i - 1)] << ' '
        << y_nodes[static_cast<size_t>(i - 1)] << ' ' << a_nodes[static_cast<size_t>(i - 1)]
        << ' ' << a2_nodes[static_cast<size_t>(i - 1)] << ' '
        << to_string_int128(thresholds[static_cast<size_t>(i - 1)].num) << ' '
        << thresholds[static_cast<size_t>(i - 1)].den << '\n';
  }
  out << (a_count + 1) << ' ' << x_nodes[static_cast<size_t>(a_count)] << ' '
      << y_nodes[static_cast<size_t>(a_count)] << " -1 -1 0 1\n";
  return out.str();
}

GadgetGraph build_gadget_unweighted(const TriangleInstance& inst, uint64_t seed) {
  if (inst.weighted()) throw std::invalid_argument("gadget: weighted instance");
  return build_common(inst, seed, false);
}

GadgetGraph build_gadget_weighted(const TriangleInstance& inst, uint64_t seed) {
  if (!inst.weighted()) throw std::invalid_argument("gadget: unweighted instance");
  return build_common(inst, seed, true);
}

GadgetDecode decode_values(const std::vector<GadgetGraph::Threshold>& thresholds,
                           const std::vector<RationalValue>& values) {
  GadgetDecode out;
  const size_t l = thresholds.size();
  out.exists.assign(l, 0);
  out.min_sum.assign(l, 0);
  for (size_t i = 0; i < l; ++i) {
    const RationalValue& v = values[i];
    if (!v.finite) continue;  // no block route at all
    const auto& th = thresholds[i];
    // excess = value - structural part, exact: excess * (den * th.den)
    int128 excess_scaled = v.num * th.den - th.num * v.den;
    if (th.den == 1) {
      out.exists[i] = excess_scaled == 0;
      out.min_sum[i] = 3;
    } else {
      if (excess_scaled % v.den != 0) continue;  // not a designated route
      int128 excess = excess_scaled / v.den;
      if (excess > 0 && excess <= th.den + 2) {
        out.exists[i] = 1;
        out.min_sum[i] = static_cast<int64_t>(excess);
      }
    }
  }
  return out;
}

namespace {

GadgetDecode decode_impl(const std::vector<NodeId>& xs, const std::vector<NodeId>& ys,
                         const std::vector<GadgetGraph::Threshold>& thresholds,
                         const WeightedGraph& g, const Frp2Table& frp) {
  std::vector<RationalValue> values;
  for (size_t i = 1; i <= thresholds.size(); ++i) {
    EdgeId ex = g.find_edge(xs[i - 1], xs[i]);
    EdgeId ey = g.find_edge(ys[i - 1], ys[i]);
    validate(ex != kNoEdge && ey != kNoEdge, "gadget decode: missing fault edge");
    ExtDist d = frp.query(ex, ey);
    values.push_back(d.is_infinite()
                         ? RationalValue{}
                         : RationalValue{true, d.main(), g.denominator()});
  }
  return decode_values(thresholds, values);
}

}  // namespace

RationalValue parse_rational_field(const std::string& field) {
  if (field == "inf") return {};
  auto digits = [](const std::string& s) {
    int128 v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw ParseError("bad distance field: " + s);
      v = v * 10 + (c - '0');
    }
    return v;
  };
  size_t slash = field.find('/');
  if (slash != std::string::npos) {
    int128 den = digits(field.substr(slash + 1));
    return {true, digits(field.substr(0, slash)), static_cast<int64_t>(den)};
  }
  size_t dot = field.find('.');
  if (dot == std::string::npos) return {true, digits(field), 1};
  std::string frac = field.substr(dot + 1);
  int64_t den = 1;
  for (size_t i = 0; i < frac.size(); ++i) den *= 10;
  return {true, digits(field.substr(0, dot)) * den + digits(frac), den};
}

GadgetDecode decode_gadget(const GadgetGraph& gg, const Frp2Table& frp) {
  return decode_impl(gg.x_nodes, gg.y_nodes, gg.thresholds, gg.graph, frp);
}

GadgetSidecar parse_sidecar(const std::string& text) {
  GadgetSidecar sc;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    long long i, x, y, a, a2, den;
    std::string num;
    if (!(ls >> i >> x >> y >> a >> a2 >> num >> den))
      throw ParseError("malformed sidecar line: " + line);
    sc.x_nodes.push_back(static_cast<NodeId>(x));
    sc.y_nodes.push_back(static_cast<NodeId>(y));
    if (a >= 0) {
      sc.a_nodes.push_back(static_cast<NodeId>(a));
      sc.a2_nodes.push_back(static_cast<NodeId>(a2));
      int128 v = 0;
      for (char c : num) {
        if (c < '0' || c > '9') throw ParseError("malformed sidecar threshold");
        v = v * 10 + (c - '0');
      }
      sc.thresholds.push_back(GadgetGraph::Threshold{v, den});
    }
  }
  return sc;
}

GadgetDecode decode_from_sidecar(const GadgetSidecar& sc, const WeightedGraph& g,
                                 const Frp2Table& frp) {
  return decode_impl(sc.x_nodes, sc.y_nodes, sc.thresholds, g, frp);
}

}  // namespace faultpath
