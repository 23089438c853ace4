#include "tablog/reduction.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "tablog/morphism.hpp"

namespace tablog {

std::optional<Vertex> PosLabeling::vertex_of(Element x) const {
  auto it = std::find(vertex.begin(), vertex.end(), x);
  if (it == vertex.end()) return std::nullopt;
  return static_cast<Vertex>(it - vertex.begin());
}

namespace {

std::string edge_suffix(const Graph& g, std::size_t e) {
  auto [u, v] = g.edges()[e];
  return g.name(u) + "|" + g.name(v);
}

// Names and covers of Pos(G) for a given orientation, plus the labeling
// under the resulting declaration order.
struct Blueprint {
  std::vector<std::string> names;
  std::vector<std::pair<Element, Element>> covers;
  PosLabeling labeling;
};

Blueprint blueprint(const Graph& g, bool rooted, const std::vector<int>& orientation) {
  Blueprint b;
  auto add = [&](std::string name) {
    b.names.push_back(std::move(name));
    return b.names.size() - 1;
  };
  PosLabeling& lab = b.labeling;
  for (Vertex v = 0; v < g.size(); ++v) {
    lab.vertex.push_back(add("V:" + g.name(v)));
    lab.vertex_a.push_back(add("Va:" + g.name(v)));
    lab.vertex_b.push_back(add("Vb:" + g.name(v)));
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    Element first = add("E1:" + edge_suffix(g, e));
    Element second = add("E2:" + edge_suffix(g, e));
    lab.edge_copies.push_back({first, second});
  }
  lab.a_side_copy = orientation;
  lab.inf_a = add("INFA");
  lab.inf_b = add("INFB");
  lab.top1 = add("TOP1");
  lab.top2 = add("TOP2");
  if (rooted) lab.bottom = add("BOT");

  auto& c = b.covers;
  for (Vertex v = 0; v < g.size(); ++v) {
    c.emplace_back(lab.vertex[v], lab.vertex_a[v]);
    c.emplace_back(lab.vertex[v], lab.vertex_b[v]);
    c.emplace_back(lab.vertex_a[v], lab.inf_a);
    c.emplace_back(lab.vertex_b[v], lab.inf_b);
    if (g.degree(v) == 0) {
      for (Element top : {lab.top1, lab.top2}) {
        c.emplace_back(lab.vertex_a[v], top);
        c.emplace_back(lab.vertex_b[v], top);
      }
    }
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    auto [u, v] = g.edges()[e];
    const Element above_ua = lab.edge_copies[e][orientation[e]];
    const Element above_ub = lab.edge_copies[e][1 - orientation[e]];
    c.emplace_back(lab.vertex_a[u], above_ua);
    c.emplace_back(lab.vertex_b[v], above_ua);
    c.emplace_back(lab.vertex_b[u], above_ub);
    c.emplace_back(lab.vertex_a[v], above_ub);
    for (Element copy : lab.edge_copies[e]) {
      c.emplace_back(copy, lab.top1);
      c.emplace_back(copy, lab.top2);
    }
  }
  if (rooted) {
    if (g.empty()) {
      for (Element s : {lab.inf_a, lab.inf_b, lab.top1, lab.top2}) c.emplace_back(*lab.bottom, s);
    } else {
      for (Element v : lab.vertex) c.emplace_back(*lab.bottom, v);
    }
  }
  return b;
}

}  // namespace

PosConstruction build_pos(const Graph& g, bool rooted) {
  Blueprint b = blueprint(g, rooted, std::vector<int>(g.edges().size(), 0));
  PosConstruction out;
  out.poset = Poset::from_relation(std::move(b.names), b.covers);
  out.labeling = std::move(b.labeling);
  out.degenerate = g.empty();
  return out;
}

RecoveredPos recover_pos(const Poset& p) {
  auto fail = [](const std::string& why) -> ValidationError {
    return ValidationError("not a Pos(G) poset: " + why);
  };
  auto element = [&](const std::string& name) {
    if (auto x = p.find(name)) return *x;
    throw fail("missing element " + name);
  };

  std::vector<std::string> vertices;
  std::unordered_map<std::string, Vertex> vindex;
  for (const auto& n : p.names()) {
    if (n.starts_with("V:")) {
      vindex.emplace(n.substr(2), vertices.size());
      vertices.push_back(n.substr(2));
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::string> edge_names;
  for (const auto& n : p.names()) {
    if (!n.starts_with("E1:")) continue;
    const std::string rest = n.substr(3);
    bool split = false;
    for (std::size_t bar = rest.find('|'); bar != std::string::npos; bar = rest.find('|', bar + 1)) {
      auto u = vindex.find(rest.substr(0, bar));
      auto v = vindex.find(rest.substr(bar + 1));
      if (u != vindex.end() && v != vindex.end()) {
        edges.emplace_back(u->second, v->second);
        edge_names.push_back(rest);
        split = true;
        break;
      }
    }
    if (!split) throw fail("cannot split edge element " + n);
  }
  Graph g = Graph::from_edges(vertices, edges);
  if (g.edges().size() != edges.size()) throw fail("repeated edge");

  const bool rooted = p.find("BOT").has_value();
  RecoveredPos out{g, {p, {}, g.empty()}};
  PosLabeling& lab = out.construction.labeling;
  for (Vertex v = 0; v < g.size(); ++v) {
    lab.vertex.push_back(element("V:" + g.name(v)));
    lab.vertex_a.push_back(element("Va:" + g.name(v)));
    lab.vertex_b.push_back(element("Vb:" + g.name(v)));
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    lab.edge_copies.push_back({element("E1:" + edge_names[e]), element("E2:" + edge_names[e])});
    auto [u, v] = g.edges()[e];
    const Element c0 = lab.edge_copies[e][0];
    lab.a_side_copy.push_back(p.less(lab.vertex_a[u], c0) && p.less(lab.vertex_b[v], c0) ? 0 : 1);
  }
  lab.inf_a = element("INFA");
  lab.inf_b = element("INFB");
  lab.top1 = element("TOP1");
  lab.top2 = element("TOP2");
  if (rooted) lab.bottom = element("BOT");

  // Compare against the construction under the recovered orientation.
  Blueprint expect = blueprint(g, rooted, lab.a_side_copy);
  if (expect.names.size() != p.size()) throw fail("unexpected extra elements");
  std::set<std::pair<std::string, std::string>> want, have;
  for (auto [a, b] : expect.covers) want.emplace(expect.names[a], expect.names[b]);
  for (auto [a, b] : p.covers()) have.emplace(p.name(a), p.name(b));
  if (want != have) throw fail("cover relation differs from the construction");
  return out;
}

ElementMap restrict_pmorphism(const Graph& g, const PosConstruction& pos_g, const Graph& h,
                              const PosConstruction& pos_h, std::span<const Element> map) {
  if (auto v = verify_pmorphism(pos_g.poset, pos_h.poset, map, true); !v) {
    throw ValidationError("not a surjective p-morphism: " + v.violation);
  }
  ElementMap out(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    auto w = pos_h.labeling.vertex_of(map[pos_g.labeling.vertex[v]]);
    if (!w) {
      throw IntegrityError("vertex " + g.name(v) + " is sent to " +
                           pos_h.poset.name(map[pos_g.labeling.vertex[v]]) +
                           ", outside the vertex layer");
    }
    out[v] = *w;
  }
  if (auto v = verify_lshom(g, h, out, true); !v) {
    throw IntegrityError("restriction is not a surjective locally surjective homomorphism: " +
                         v.violation);
  }
  return out;
}

ElementMap lift_homomorphism(const Graph& g, const PosConstruction& pos_g, const Graph& h,
                             const PosConstruction& pos_h, std::span<const Vertex> map) {
  if (h.empty()) throw ValidationError("target graph has no vertices");
  if (auto v = verify_lshom(g, h, map, true); !v) {
    throw ValidationError("not a surjective locally surjective homomorphism: " + v.violation);
  }
  const PosLabeling& from = pos_g.labeling;
  const PosLabeling& to = pos_h.labeling;
  if (from.bottom.has_value() != to.bottom.has_value()) {
    throw ValidationError("cannot lift between rooted and unrooted constructions");
  }

  ElementMap out(pos_g.poset.size());
  out[from.top1] = to.top1;
  out[from.top2] = to.top2;
  out[from.inf_a] = to.inf_a;
  out[from.inf_b] = to.inf_b;
  if (from.bottom) out[*from.bottom] = *to.bottom;
  for (Vertex u = 0; u < g.size(); ++u) {
    out[from.vertex[u]] = to.vertex[map[u]];
    out[from.vertex_a[u]] = to.vertex_a[map[u]];
    out[from.vertex_b[u]] = to.vertex_b[map[u]];
  }
  // Copy of the H-edge xy lying above x_a and y_b.
  auto copy_above = [&](Vertex x, Vertex y) {
    std::size_t f = *h.edge_index(x, y);
    int c = to.a_side_copy[f];
    if (h.edges()[f].first != x) c = 1 - c;
    return to.edge_copies[f][c];
  };
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    auto [u, v] = g.edges()[e];
    const int c = from.a_side_copy[e];
    out[from.edge_copies[e][c]] = copy_above(map[u], map[v]);
    out[from.edge_copies[e][1 - c]] = copy_above(map[v], map[u]);
  }

  if (auto v = verify_pmorphism(pos_g.poset, pos_h.poset, out, true); !v) {
    throw IntegrityError("lifted map is not a surjective p-morphism: " + v.violation);
  }
  return out;
}

CorrespondenceReport theorem3_check(const Graph& g, const Graph& h, bool rooted) {
  if (h.empty()) throw ValidationError("target graph has no vertices");
  CorrespondenceReport report;
  report.lshom_witness = lshom_brute(g, h, true);
  report.spmorph_witness = spmorph_brute(build_pos(g, rooted).poset, build_pos(h, rooted).poset);
  return report;
}

DegreeReport check_degree_bounds(const Graph& g, bool rooted) {
  const PosConstruction pos = build_pos(g, rooted);
  DegreeReport r;
  r.k = std::max<std::size_t>(2, g.max_degree());
  r.immediate_bound = r.k + 1;
  r.successor_bound = 2 * r.k + 6;
  for (Element x = 0; x < pos.poset.size(); ++x) {
    if (pos.labeling.bottom == x) continue;
    r.max_immediate = std::max(r.max_immediate, pos.poset.upper_covers(x).size());
    r.max_successors = std::max(r.max_successors, pos.poset.upset_size(x) - 1);
  }
  return r;
}

TransformedDecomposition transform_pathdecomp(const Graph& g, const PathDecomposition& d,
                                              bool rooted) {
  if (auto v = validate_decomposition(g, d); !v) {
    throw ValidationError("invalid path decomposition: " + v.violation);
  }
  TransformedDecomposition out;
  out.pos = build_pos(g, rooted);
  out.source_width = decomposition_width(d);
  const PosLabeling& lab = out.pos.labeling;

  // Edge bags to insert after each original bag, in edge order.
  std::vector<std::vector<std::size_t>> after(d.bags.size());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    auto [u, v] = g.edges()[e];
    for (std::size_t i = 0; i < d.bags.size(); ++i) {
      const auto& bag = d.bags[i];
      if (std::binary_search(bag.begin(), bag.end(), u) &&
          std::binary_search(bag.begin(), bag.end(), v)) {
        after[i].push_back(e);
        break;
      }
    }
  }

  auto lift_bag = [&](const std::vector<std::size_t>& bag, std::optional<Element> extra) {
    std::vector<std::size_t> out_bag;
    for (Vertex v : bag) {
      out_bag.push_back(lab.vertex[v]);
      out_bag.push_back(lab.vertex_a[v]);
      out_bag.push_back(lab.vertex_b[v]);
    }
    if (extra) out_bag.push_back(*extra);
    for (Element s : {lab.top1, lab.top2, lab.inf_a, lab.inf_b}) out_bag.push_back(s);
    if (lab.bottom) out_bag.push_back(*lab.bottom);
    std::sort(out_bag.begin(), out_bag.end());
    return out_bag;
  };
  for (std::size_t i = 0; i < d.bags.size(); ++i) {
    out.decomposition.bags.push_back(lift_bag(d.bags[i], std::nullopt));
    for (std::size_t e : after[i]) {
      out.decomposition.bags.push_back(lift_bag(d.bags[i], lab.edge_copies[e][0]));
      out.decomposition.bags.push_back(lift_bag(d.bags[i], lab.edge_copies[e][1]));
    }
  }
  if (out.decomposition.bags.empty()) {
    out.decomposition.bags.push_back(lift_bag({}, std::nullopt));
  }
  out.width = decomposition_width(out.decomposition);
  out.bound = 3 * out.source_width + 7 + (rooted ? 1 : 0);
  return out;
}

}  // namespace tablog
