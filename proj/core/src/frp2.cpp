#include "faultpath/frp2.hpp"

#include <algorithm>
#include <sstream>

#include "faultpath/frp2_offpath.hpp"
#include "faultpath/rp_sweep.hpp"
#include "faultpath/validation.hpp"

namespace faultpath {

bool Frp2Table::on_path(EdgeId e) const {
  return e >= 0 && e < edge_count && path_index_[static_cast<size_t>(e)] >= 0;
}

ExtDist Frp2Table::query(EdgeId e, EdgeId f) const {
  if (e < 0 || e >= edge_count || f < 0 || f >= edge_count)
    throw std::out_of_range("query: invalid edge id");
  int32_t pe = path_index_[static_cast<size_t>(e)];
  int32_t pf = path_index_[static_cast<size_t>(f)];
  if (e == f) return pe >= 0 ? single_fault[static_cast<size_t>(pe)] : nofault;
  if (pe < 0 && pf < 0) return nofault;
  auto key = std::minmax(e, f);
  auto it = pair_values.find(std::make_pair(key.first, key.second));
  if (it != pair_values.end()) return it->second;
  // Exactly one fault on the path and the other off its replacement path.
  return single_fault[static_cast<size_t>(pe >= 0 ? pe : pf)];
}

std::string Frp2Table::to_csv(const WeightedGraph& g) const {
  struct Row {
    NodeId eu, ev, fu, fv;
    ExtDist v;
  };
  std::vector<Row> rows;
  auto add = [&](EdgeId e, EdgeId f, const ExtDist& v) {
    EdgeRef a = g.edge_ref(std::min(e, f));
    EdgeRef b = g.edge_ref(std::max(e, f));
    rows.push_back(Row{a.u, a.v, b.u, b.v, v});
  };
  for (size_t i = 0; i < path_edges.size(); ++i)
    add(path_edges[i], path_edges[i], single_fault[i]);
  for (auto& [key, v] : pair_values) add(key.first, key.second, v);
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.eu, a.ev, a.fu, a.fv) < std::tie(b.eu, b.ev, b.fu, b.fv);
  });
  std::ostringstream out;
  out << "eu,ev,fu,fv,dist\n";
  for (const Row& r : rows) {
    out << r.eu << ',' << r.ev << ',' << r.fu << ',' << r.fv << ',';
    if (r.v.is_infinite()) {
      out << "inf";
    } else {
      out << format_rational(r.v.main(), g.denominator());
    }
    out << '\n';
  }
  return out.str();
}

Frp2Table solve_2frp(const GraphView& g, NodeId s, NodeId t, const SsrpSolver& base) {
  Frp2Table table;
  table.s = s;
  table.t = t;
  table.edge_count = g.graph().edge_count();
  table.path_index_.assign(static_cast<size_t>(table.edge_count), -1);

  SpTree from_s = dijkstra(g, s);
  if (!from_s.reachable(t)) return table;  // every query answers infinity
  SpTree from_t = dijkstra(g, t);
  table.nofault = from_s.dist[static_cast<size_t>(t)];

  SsrpTable ssrp_s = base(g, s, nullptr);
  SsrpTable ssrp_t = base(g, t, nullptr);
  RpResult rp_s = rp_sweep(g, s, t, from_s, from_t, ssrp_t);
  RpResult rp_t = rp_sweep(g, t, s, from_t, from_s, ssrp_s);
  const size_t hops = rp_s.path.hops();
  validate(rp_t.path.hops() == hops, "asymmetric canonical path");

  table.path_edges = rp_s.path_edges;
  table.single_fault = rp_s.dist;
  table.replacement = rp_s.replacement;
  for (size_t i = 0; i < hops; ++i)
    table.path_index_[static_cast<size_t>(table.path_edges[i])] =
        static_cast<int32_t>(i);
  // Map a path edge id to its index in the reversed sweep.
  std::vector<size_t> rev_index(hops);
  for (size_t i = 0; i < hops; ++i) {
    EdgeId e = rp_t.path_edges[i];
    rev_index[static_cast<size_t>(
        table.path_index_[static_cast<size_t>(e)])] = i;
  }
  if (validation_enabled()) {
    for (size_t i = 0; i < hops; ++i) {
      size_t j = rev_index[i];
      validate(same_value(rp_t.dist[j], rp_s.dist[i]), "sweep distance asymmetry");
    }
  }

  // On-path pairs.
  OnPathTable onpath = solve_onpath(g, s, t, base);
  for (size_t i = 0; i < hops; ++i) {
    for (size_t j = i + 1; j < hops; ++j) {
      auto key = std::minmax(table.path_edges[i], table.path_edges[j]);
      table.pair_values.emplace(std::make_pair(key.first, key.second), onpath.at(i, j));
    }
  }

  // Off-path pairs: classify each replacement-path edge per fault.
  Orientation os{s, t,       &from_s, &from_t, &ssrp_t, rp_s.path.nodes,
                 rp_s.path_edges, deepest_path_ancestor(from_s, rp_s.path.nodes)};
  Orientation ot{t, s,       &from_t, &from_s, &ssrp_s, rp_t.path.nodes,
                 rp_t.path_edges, deepest_path_ancestor(from_t, rp_t.path.nodes)};

  std::vector<OffPair> detour_s, detour_t, tree_s, tree_t;
  std::map<std::pair<EdgeId, EdgeId>, ExtDist> off_values;
  for (size_t i = 0; i < hops; ++i) {
    for (EdgeId e2 : table.replacement[i]) {
      if (table.path_index_[static_cast<size_t>(e2)] >= 0) continue;  // on-path pair
      EdgeId e = table.path_edges[i];
      PlacementTag tag = classify(os, ot, i, g.graph().edge_ref(e2));
      auto key = std::minmax(e, e2);
      switch (tag.placement) {
        case OffPathCase::kCrossNear:
          if (validation_enabled())
            validate(rp_s.crossing[i] == e2, "cross edge does not match sweep");
          off_values.emplace(std::make_pair(key.first, key.second), rp_s.dual[i]);
          break;
        case OffPathCase::kCrossFar: {
          size_t j = rev_index[i];
          if (validation_enabled())
            validate(rp_t.crossing[j] == e2, "cross edge does not match reverse sweep");
          off_values.emplace(std::make_pair(key.first, key.second), rp_t.dual[j]);
          break;
        }
        case OffPathCase::kDetourNear:
          detour_s.push_back(OffPair{i, e2});
          break;
        case OffPathCase::kDetourFar:
          detour_t.push_back(OffPair{rev_index[i], e2});
          break;
        case OffPathCase::kTreeTree:
          if (tag.near_witness) {
            tree_s.push_back(OffPair{i, e2});
          } else {
            tree_t.push_back(OffPair{rev_index[i], e2});
          }
          break;
      }
    }
  }

  auto merge = [&](const std::map<std::pair<EdgeId, EdgeId>, ExtDist>& vals) {
    for (auto& [ef, v] : vals) {
      auto key = std::minmax(ef.first, ef.second);
      off_values.emplace(std::make_pair(key.first, key.second), v);
    }
  };
  merge(solve_case_detour(g, os, detour_s));
  merge(solve_case_detour(g, ot, detour_t));
  if (!tree_s.empty()) {
    NeighborMin nm(g, from_s);
    merge(solve_case_tree(g, os, nm, tree_s));
  }
  if (!tree_t.empty()) {
    NeighborMin nm(g, from_t);
    merge(solve_case_tree(g, ot, nm, tree_t));
  }
  for (auto& [key, v] : off_values) table.pair_values.emplace(key, v);
  return table;
}

}  // namespace faultpath
