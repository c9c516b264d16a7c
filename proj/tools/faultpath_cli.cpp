// Command line front end: solvers over graph files, CSV tables, gadget
// generation and decoding, oracle diffs, and a scaling benchmark.

#include <array>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "faultpath/frp2.hpp"
#include "faultpath/gadget.hpp"
#include "faultpath/generate.hpp"
#include "faultpath/oracle.hpp"
#include "faultpath/rp_sweep.hpp"
#include "faultpath/validation.hpp"

namespace {

using namespace faultpath;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

WeightedGraph load_graph(const std::string& path, int64_t seed_override) {
  std::string text = read_file(path);
  if (seed_override < 0) return parse_graph(text);
  // Re-seed by rewriting the header field.
  WeightedGraph g = parse_graph(text);
  std::istringstream in(g.serialize());
  std::string header, rest;
  std::getline(in, header);
  std::ostringstream patched;
  long long n, m, s, t;
  std::istringstream hs(header);
  hs >> n >> m >> s >> t;
  patched << n << ' ' << m << ' ' << s << ' ' << t << ' ' << seed_override << '\n';
  while (std::getline(in, rest)) patched << rest << '\n';
  return parse_graph(patched.str());
}

std::string dist_field(const ExtDist& d, int64_t den) {
  return d.is_infinite() ? "inf" : format_rational(d.main(), den);
}

int cmd_rp(const WeightedGraph& g, const std::string& out) {
  GraphView view(g);
  SpTree fs = dijkstra(view, g.source());
  std::ostringstream csv;
  csv << "eu,ev,dist\n";
  if (fs.reachable(g.target())) {
    SpTree ft = dijkstra(view, g.target());
    SsrpTable far = ssrp_naive(view, g.target());
    RpResult rp = rp_sweep(view, g.source(), g.target(), fs, ft, far);
    for (size_t i = 0; i < rp.path_edges.size(); ++i) {
      EdgeRef e = g.edge_ref(rp.path_edges[i]);
      csv << e.u << ',' << e.v << ',' << dist_field(rp.dist[i], g.denominator())
          << '\n';
    }
  }
  emit(out, csv.str());
  return 0;
}

int cmd_ssrp(const WeightedGraph& g, const std::string& out) {
  GraphView view(g);
  SsrpTable table = ssrp_naive(view, g.source());
  std::vector<EdgeId> edges;
  for (auto& [e, row] : table.rows) edges.push_back(e);
  std::sort(edges.begin(), edges.end());
  std::ostringstream csv;
  csv << "eu,ev,v,dist\n";
  for (EdgeId e : edges) {
    EdgeRef r = g.edge_ref(e);
    for (NodeId x = 0; x < g.node_count(); ++x)
      csv << r.u << ',' << r.v << ',' << x << ','
          << dist_field(table.query(e, x), g.denominator()) << '\n';
  }
  emit(out, csv.str());
  return 0;
}

int cmd_frp2(const WeightedGraph& g, const std::string& out) {
  Frp2Table table = solve_2frp(GraphView(g), g.source(), g.target());
  emit(out, table.to_csv(g));
  return 0;
}

int cmd_oracle_diff(const WeightedGraph& g) {
  GraphView view(g);
  Frp2Table table = solve_2frp(view, g.source(), g.target());
  Brute2Frp brute(view, g.source(), g.target());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (EdgeId f = e; f < g.edge_count(); ++f) {
      if (!same_value(table.query(e, f), brute.query(e, f))) {
        EdgeRef a = g.edge_ref(e), b = g.edge_ref(f);
        std::cout << "mismatch at ({" << a.u << ',' << a.v << "},{" << b.u << ','
                  << b.v << "}): solver "
                  << dist_field(table.query(e, f), g.denominator()) << " oracle "
                  << dist_field(brute.query(e, f), g.denominator()) << '\n';
        return 1;
      }
    }
  }
  std::cout << "ok: " << g.edge_count() << " edges, "
            << (static_cast<long long>(g.edge_count()) * (g.edge_count() + 1)) / 2
            << " pairs agree\n";
  return 0;
}

int cmd_gen_gadget(int32_t l, int32_t n, bool weighted, int64_t max_w, uint64_t seed,
                   double density, const std::string& out_prefix) {
  TriangleInstance inst = random_triangle_instance(l, n, density, weighted ? max_w : 0,
                                                   seed ^ 0xabcdef12ULL);
  GadgetGraph gg = build_gadget(inst, seed);
  write_file(out_prefix + ".graph", gg.graph.serialize());
  write_file(out_prefix + ".map", gg.sidecar());
  std::cout << "gadget: " << gg.graph.node_count() << " nodes, " << gg.graph.edge_count()
            << " edges, s=" << gg.s << " t=" << gg.t << '\n';
  return 0;
}

int cmd_decode_gadget(const std::string& prefix, const std::string& csv_path) {
  WeightedGraph g = parse_graph(read_file(prefix + ".graph"));
  GadgetSidecar sc = parse_sidecar(read_file(prefix + ".map"));

  // Index the CSV rows by their normalized endpoint quadruple.
  std::map<std::array<NodeId, 4>, RationalValue> rows;
  {
    std::istringstream in(read_file(csv_path));
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::array<NodeId, 4> key{};
      std::string field;
      std::istringstream ls(line);
      for (int k = 0; k < 4; ++k) {
        std::getline(ls, field, ',');
        key[static_cast<size_t>(k)] = static_cast<NodeId>(std::stol(field));
      }
      std::getline(ls, field);
      rows[key] = parse_rational_field(field);
    }
  }
  // Unlisted pairs follow the table's fallback rules; the last resort is the
  // fault-free distance.
  SpTree base = dijkstra(GraphView(g), g.source());
  RationalValue nofault;
  if (base.reachable(g.target()))
    nofault = RationalValue{true, base.dist[static_cast<size_t>(g.target())].main(),
                            g.denominator()};
  auto lookup = [&](NodeId au, NodeId av, NodeId bu, NodeId bv) {
    auto it = rows.find({au, av, bu, bv});
    if (it == rows.end()) it = rows.find({bu, bv, au, av});
    return it == rows.end() ? std::optional<RationalValue>{} : std::make_optional(it->second);
  };
  std::vector<RationalValue> values;
  for (size_t i = 0; i + 1 < sc.x_nodes.size() && i < sc.thresholds.size(); ++i) {
    auto ex = std::minmax(sc.x_nodes[i], sc.x_nodes[i + 1]);
    auto ey = std::minmax(sc.y_nodes[i], sc.y_nodes[i + 1]);
    auto v = lookup(ex.first, ex.second, ey.first, ey.second);
    if (!v) v = lookup(ex.first, ex.second, ex.first, ex.second);  // single fault
    values.push_back(v.value_or(nofault));
  }
  GadgetDecode dec = decode_values(sc.thresholds, values);
  for (size_t i = 0; i < dec.exists.size(); ++i) {
    std::cout << (i + 1) << ' ' << (dec.exists[i] ? "triangle" : "none");
    if (dec.exists[i] && g.denominator() > 1) std::cout << " min-sum " << dec.min_sum[i];
    std::cout << '\n';
  }
  return 0;
}

int worker_count() {
  if (const char* env = std::getenv("FAULTPATH_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int cmd_bench(const std::string& family, const std::vector<int64_t>& sizes,
              uint64_t seed) {
  std::cout << "family,size,nodes,edges,millis\n";
  for (int64_t size : sizes) {
    auto t0 = std::chrono::steady_clock::now();
    NodeId n = 0;
    EdgeId m = 0;
    if (family == "random") {
      WeightedGraph g =
          random_sparse_graph(static_cast<NodeId>(size), 4.0, 10, seed + size);
      n = g.node_count();
      m = g.edge_count();
      solve_2frp(GraphView(g), g.source(), g.target());
    } else if (family == "gadget") {
      int32_t bc = static_cast<int32_t>(size);
      TriangleInstance inst = random_triangle_instance(
          std::max(1, bc / 8), bc, 0.2, 0, seed + size);
      GadgetGraph gg = build_gadget(inst, seed);
      n = gg.graph.node_count();
      m = gg.graph.edge_count();
      solve_2frp(GraphView(gg.graph), gg.s, gg.t);
    } else {
      std::cerr << "unknown family: " << family << '\n';
      return 2;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << family << ',' << size << ',' << n << ',' << m << ',' << ms << '\n'
              << std::flush;
  }
  (void)worker_count();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"replacement-path and dual-fault distance tables"};
  app.require_subcommand(1);

  std::string graph_path, out_path, family = "random", prefix = "gadget", csv_path;
  int64_t seed_override = -1;
  uint64_t gen_seed = 0;
  int64_t gl = 2, gn = 10, gmax = 1;
  bool weighted = false;
  double density = 0.3;
  std::vector<int64_t> sizes{200, 400, 800};
  bool check = false;

  auto add_graph_cmd = [&](const char* name, const char* desc) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->add_option("graph", graph_path, "graph file")->required();
    c->add_option("--out", out_path, "write CSV here instead of stdout");
    c->add_option("--seed", seed_override, "override the tiebreak seed");
    return c;
  };
  CLI::App* rp = add_graph_cmd("rp", "single-fault replacement distances");
  CLI::App* ssrp = add_graph_cmd("ssrp", "single-source fault distance table");
  CLI::App* frp2 = add_graph_cmd("frp2", "dual-fault distance table");

  CLI::App* diff = app.add_subcommand("oracle-diff", "compare against brute force");
  diff->add_option("graph", graph_path, "graph file")->required();
  diff->add_option("--seed", seed_override, "override the tiebreak seed");
  diff->add_flag("--validate", check, "enable structural validation");

  CLI::App* gen = app.add_subcommand("gen-gadget", "emit a triangle-detection bundle");
  gen->add_option("--l", gl, "size of the small part")->required();
  gen->add_option("--n", gn, "size of the large parts")->required();
  gen->add_flag("--weighted", weighted, "weighted variant");
  gen->add_option("--max-w", gmax, "largest triangle edge weight");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--density", density, "edge probability per pair");
  gen->add_option("--out", prefix, "bundle prefix (.graph/.map)");

  CLI::App* dec = app.add_subcommand("decode-gadget", "read verdicts off a bundle");
  dec->add_option("bundle", prefix, "bundle prefix")->required();
  dec->add_option("csv", csv_path, "dual-fault CSV for the bundle graph")->required();

  CLI::App* bench = app.add_subcommand("bench", "timing table over instance sizes");
  bench->add_option("--family", family, "random|gadget");
  bench->add_option("--sizes", sizes, "instance sizes");
  bench->add_option("--seed", gen_seed, "generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rp->parsed()) return cmd_rp(load_graph(graph_path, seed_override), out_path);
    if (ssrp->parsed()) return cmd_ssrp(load_graph(graph_path, seed_override), out_path);
    if (frp2->parsed()) return cmd_frp2(load_graph(graph_path, seed_override), out_path);
    if (diff->parsed()) {
      ScopedValidation v(check);
      return cmd_oracle_diff(load_graph(graph_path, seed_override));
    }
    if (gen->parsed())
      return cmd_gen_gadget(static_cast<int32_t>(gl), static_cast<int32_t>(gn), weighted,
                            gmax, gen_seed, density, prefix);
    if (dec->parsed()) return cmd_decode_gadget(prefix, csv_path);
    if (bench->parsed()) return cmd_bench(family, sizes, gen_seed);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
