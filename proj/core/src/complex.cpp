#include "hexmetric/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "hexmetric/errors.hpp"

namespace hexmetric {

namespace {

constexpr int mod6(int p) { return ((p % 6) + 6) % 6; }

int slot_key(const SlotRef& s) { return s.hex * 6 + s.pos; }

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::string to_string(const SlotRef& s) {
  std::ostringstream os;
  os << "(" << s.hex << "," << s.pos << ")";
  return os.str();
}

std::vector<int> EdgeCycle::multiplicities(int edge_count) const {
  std::vector<int> count(edge_count, 0);
  for (int e : edges) ++count.at(e);
  return count;
}

bool EdgeCycle::is_fundamental(int edge_count) const {
  const auto count = multiplicities(edge_count);
  return std::all_of(count.begin(), count.end(), [](int c) { return c <= 2; });
}

HexComplex HexComplex::build(const ComplexSpec& spec, const BuildOptions& options) {
  const int n = spec.hexagons;
  if (n <= 0) throw ValidationError("hexagon count must be positive, got " + std::to_string(n));
  if (n % 2 != 0) throw ValidationError("hexagon count must be even, got " + std::to_string(n));
  const std::size_t expected = static_cast<std::size_t>(3 * n / 2);
  if (spec.gluings.size() != expected) {
    throw ValidationError("expected " + std::to_string(expected) + " gluing pairs, got " +
                          std::to_string(spec.gluings.size()));
  }
  if (!spec.labels.empty() && spec.labels.size() != spec.gluings.size()) {
    throw ValidationError("labels must name every edge");
  }

  HexComplex cx;
  cx.n_ = n;
  cx.slot_edge_.assign(static_cast<std::size_t>(6 * n), -1);

  auto check_slot = [&](const SlotRef& s) {
    if (s.hex < 0 || s.hex >= n || s.pos < 0 || s.pos > 5) {
      throw ValidationError("slot " + to_string(s) + " out of range");
    }
    if (!s.is_y()) throw ValidationError("x-slot " + to_string(s) + " cannot be glued");
    if (cx.slot_edge_[slot_key(s)] != -1) {
      throw ValidationError("y-slot " + to_string(s) + " glued more than once");
    }
  };

  std::set<std::string> seen_labels;
  for (std::size_t i = 0; i < spec.gluings.size(); ++i) {
    const Gluing& g = spec.gluings[i];
    check_slot(g.a);
    cx.slot_edge_[slot_key(g.a)] = static_cast<int>(i);
    check_slot(g.b);
    cx.slot_edge_[slot_key(g.b)] = static_cast<int>(i);
    std::string label = spec.labels.empty() ? "e" + std::to_string(i) : spec.labels[i];
    if (label.empty() || !seen_labels.insert(label).second) {
      throw ValidationError("edge label '" + label + "' is empty or duplicated");
    }
    cx.edges_.push_back(Edge{g.a, g.b, g.reversed, std::move(label)});
  }
  for (int h = 0; h < n; ++h) {
    for (int p = 1; p < 6; p += 2) {
      if (cx.slot_edge_[h * 6 + p] == -1) {
        throw ValidationError("y-slot " + to_string({h, p}) + " is not glued");
      }
    }
  }

  DisjointSets sets(n);
  for (const Edge& e : cx.edges_) sets.unite(e.a.hex, e.b.hex);
  for (int h = 1; h < n; ++h) {
    if (sets.find(h) != sets.find(0)) cx.connected_ = false;
  }
  if (!cx.connected_ && !options.allow_disconnected) {
    throw ValidationError("complex is disconnected");
  }

  cx.derive_boundary();
  return cx;
}

int HexComplex::edge_index(const std::string& label) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].label == label) return static_cast<int>(i);
  }
  return -1;
}

int HexComplex::edge_of(const SlotRef& y_slot) const {
  if (!y_slot.is_y() || y_slot.hex < 0 || y_slot.hex >= n_) {
    throw ValidationError("not a y-slot: " + to_string(y_slot));
  }
  return slot_edge_[slot_key(y_slot)];
}

SlotRef HexComplex::partner(const SlotRef& y_slot) const {
  const Edge& e = edges_[edge_of(y_slot)];
  return e.a == y_slot ? e.b : e.a;
}

bool HexComplex::reversed_at(const SlotRef& y_slot) const {
  return edges_[edge_of(y_slot)].reversed;
}

int HexComplex::xarc_id(const SlotRef& x_slot) {
  if (!x_slot.is_x()) throw ValidationError("not an x-slot: " + to_string(x_slot));
  return x_slot.hex * 3 + x_slot.pos / 2;
}

SlotRef HexComplex::xarc_slot(int arc) { return SlotRef{arc / 3, 2 * (arc % 3)}; }

SlotRef HexComplex::opposite_x_slot(const SlotRef& y_slot) {
  if (!y_slot.is_y()) throw ValidationError("expected a y-slot, got " + to_string(y_slot));
  return SlotRef{y_slot.hex, mod6(y_slot.pos + 3)};
}

SlotRef HexComplex::opposite_y_slot(const SlotRef& x_slot) {
  if (!x_slot.is_x()) throw ValidationError("expected an x-slot, got " + to_string(x_slot));
  return SlotRef{x_slot.hex, mod6(x_slot.pos + 3)};
}

std::pair<int, int> HexComplex::facing_arcs(int e) const {
  const Edge& edge = edges_.at(e);
  return {xarc_id(opposite_x_slot(edge.a)), xarc_id(opposite_x_slot(edge.b))};
}

std::pair<int, int> HexComplex::facing_edge(int arc) const {
  const SlotRef y = opposite_y_slot(xarc_slot(arc));
  const int e = edge_of(y);
  return {e, edges_[e].a == y ? 0 : 1};
}

std::array<int, 4> HexComplex::adjacent_arcs(int e) const {
  const Edge& edge = edges_.at(e);
  return {xarc_id({edge.a.hex, mod6(edge.a.pos - 1)}), xarc_id({edge.a.hex, mod6(edge.a.pos + 1)}),
          xarc_id({edge.b.hex, mod6(edge.b.pos - 1)}), xarc_id({edge.b.hex, mod6(edge.b.pos + 1)})};
}

int HexComplex::corner_arc(int hex, int y_pos1, int y_pos2) {
  if (y_pos1 % 2 == 0 || y_pos2 % 2 == 0 || y_pos1 == y_pos2) {
    throw ValidationError("corner needs two distinct y-slots");
  }
  // The x-slot adjacent to both; for {1,3} it is 2, {3,5} -> 4, {5,1} -> 0.
  const int lo = std::min(y_pos1, y_pos2);
  const int hi = std::max(y_pos1, y_pos2);
  const int pos = (lo == 1 && hi == 5) ? 0 : lo + 1;
  return xarc_id({hex, pos});
}

std::array<int, 3> HexComplex::cell_edges(int hex) const {
  return {edge_of({hex, 1}), edge_of({hex, 3}), edge_of({hex, 5})};
}

std::array<int, 3> HexComplex::cell_arcs(int hex) { return {3 * hex, 3 * hex + 1, 3 * hex + 2}; }

void HexComplex::derive_boundary() {
  // Walk state: an x-slot and the end we leave it through (+1 = its
  // counterclockwise end, which is the start of y-slot pos + 1; -1 = its start,
  // the end of y-slot pos - 1).
  arc_boundary_.assign(static_cast<std::size_t>(xarc_count()), -1);
  boundary_.clear();
  for (int first = 0; first < xarc_count(); ++first) {
    if (arc_boundary_[first] != -1) continue;
    const int component = static_cast<int>(boundary_.size());
    BoundaryCycle bc;
    SlotRef slot = xarc_slot(first);
    int dir = +1;
    do {
      const int arc = xarc_id(slot);
      arc_boundary_[arc] = component;
      bc.arcs.push_back(arc);
      const SlotRef out{slot.hex, mod6(slot.pos + dir)};
      const SlotRef in = partner(out);
      const int e = edge_of(out);
      bc.cycle.steps.push_back(CycleStep{slot.hex, mod6(slot.pos - dir), out.pos});
      bc.cycle.edges.push_back(e);
      if (!edges_[e].reversed) {
        // start ~ end: the vertex keeps its role relative to the walk.
        slot = SlotRef{in.hex, mod6(in.pos + dir)};
      } else {
        slot = SlotRef{in.hex, mod6(in.pos - dir)};
        dir = -dir;
      }
    } while (!(xarc_id(slot) == first && dir == +1) && arc_boundary_[xarc_id(slot)] == -1);
    boundary_.push_back(std::move(bc));
  }
}

std::optional<std::vector<EdgeCycle>> HexComplex::normal_curves(
    const std::vector<int>& y) const {
  if (y.size() != edges_.size()) throw ValidationError("intersection vector has wrong length");
  // corner[h][c]: number of arcs around x-slot 2c of hexagon h.
  std::vector<std::array<int, 3>> corner(static_cast<std::size_t>(n_));
  for (int h = 0; h < n_; ++h) {
    const int c1 = y[edge_of({h, 1})];
    const int c3 = y[edge_of({h, 3})];
    const int c5 = y[edge_of({h, 5})];
    if (c1 < 0 || c3 < 0 || c5 < 0) return std::nullopt;
    if ((c1 + c3 + c5) % 2 != 0) return std::nullopt;
    const int around0 = c5 + c1 - c3;
    const int around2 = c1 + c3 - c5;
    const int around4 = c3 + c5 - c1;
    if (around0 < 0 || around2 < 0 || around4 < 0) return std::nullopt;
    corner[h] = {around0 / 2, around2 / 2, around4 / 2};
  }

  // Points on y-slot p are indexed from its counterclockwise start. The arcs
  // around x-slot p + 1 join the last points of p to the first points of p + 2,
  // innermost (nearest the x-arc) first.
  auto count_on = [&](int hex, int pos) { return y[edge_of({hex, pos})]; };
  auto corner_partner = [&](int hex, int pos, int idx) -> std::pair<int, int> {
    const int c = count_on(hex, pos);
    const int toward_next = corner[hex][mod6(pos + 1) / 2];
    if (idx >= c - toward_next) {
      const int j = c - 1 - idx;
      return {mod6(pos + 2), j};
    }
    // idx lies among the first points, joined to the last points of pos - 2.
    const int prev = mod6(pos - 2);
    return {prev, count_on(hex, prev) - 1 - idx};
  };

  std::vector<EdgeCycle> curves;
  std::unordered_set<long long> visited;
  const long long stride = *std::max_element(y.begin(), y.end()) + 1LL;
  auto key = [stride](int hex, int pos, int idx) {
    return (static_cast<long long>(hex) * 6 + pos) * stride + idx;
  };
  for (int h = 0; h < n_; ++h) {
    for (int p = 1; p < 6; p += 2) {
      for (int i = 0; i < count_on(h, p); ++i) {
        if (visited.count(key(h, p, i))) continue;
        EdgeCycle cycle;
        int hex = h, pos = p, idx = i;
        do {
          visited.insert(key(hex, pos, idx));
          const auto [out_pos, out_idx] = corner_partner(hex, pos, idx);
          visited.insert(key(hex, out_pos, out_idx));
          cycle.steps.push_back(CycleStep{hex, pos, out_pos});
          const SlotRef out{hex, out_pos};
          const int e = edge_of(out);
          cycle.edges.push_back(e);
          const SlotRef in = partner(out);
          const int c = y[e];
          idx = edges_[e].reversed ? out_idx : c - 1 - out_idx;
          hex = in.hex;
          pos = in.pos;
        } while (!(hex == h && pos == p && idx == i));
        curves.push_back(std::move(cycle));
      }
    }
  }
  return curves;
}

FundamentalCycles HexComplex::enumerate_fundamental_cycles(std::size_t limit) const {
  FundamentalCycles result;
  const int m = edge_count();
  std::vector<int> y(static_cast<std::size_t>(m), 0);

  // Hexagons whose last edge (in edge order) is e; checked once e is assigned.
  std::vector<std::vector<int>> closes(static_cast<std::size_t>(m));
  for (int h = 0; h < n_; ++h) {
    const auto es = cell_edges(h);
    closes[*std::max_element(es.begin(), es.end())].push_back(h);
  }
  auto cell_ok = [&](int h) {
    const auto es = cell_edges(h);
    const int a = y[es[0]], b = y[es[1]], c = y[es[2]];
    return (a + b + c) % 2 == 0 && a + b >= c && b + c >= a && a + c >= b;
  };

  bool stop = false;
  auto recurse = [&](auto&& self, int e) -> void {
    if (stop) return;
    if (e == m) {
      if (std::all_of(y.begin(), y.end(), [](int v) { return v == 0; })) return;
      const auto curves = normal_curves(y);
      if (!curves || curves->size() != 1) return;
      if (result.cycles.size() == limit) {
        result.truncated = true;
        stop = true;
        return;
      }
      result.cycles.push_back(curves->front());
      return;
    }
    for (int v = 0; v <= 2 && !stop; ++v) {
      y[e] = v;
      if (std::all_of(closes[e].begin(), closes[e].end(), cell_ok)) self(self, e + 1);
    }
    y[e] = 0;
  };
  recurse(recurse, 0);
  return result;
}

}  // namespace hexmetric
