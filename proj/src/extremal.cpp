#include "pctree/extremal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "pctree/errors.hpp"
#include "pctree/rng.hpp"

namespace pctree {

std::string family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::G1: return "G1";
    case FamilyTag::G2: return "G2";
    case FamilyTag::G3: return "G3";
    case FamilyTag::G4: return "G4";
    case FamilyTag::G5: return "G5";
    case FamilyTag::G6: return "G6";
  }
  return "?";
}

std::optional<FamilyTag> family_tag_from_name(const std::string& name) {
  for (FamilyTag tag : {FamilyTag::G1, FamilyTag::G2, FamilyTag::G3, FamilyTag::G4,
                        FamilyTag::G5, FamilyTag::G6})
    if (family_tag_name(tag) == name) return tag;
  return std::nullopt;
}

namespace {

// Proper edge coloring of K_q by the circle method. color[i][j] in 1..q-1 for
// even q, 1..q for odd q.
std::vector<std::vector<int>> round_robin_coloring(int q) {
  std::vector<std::vector<int>> color(static_cast<size_t>(q), std::vector<int>(static_cast<size_t>(q), 0));
  if (q < 2) return color;
  const int players = q % 2 == 0 ? q : q + 1;
  const int wheel = players - 1;
  auto assign = [&](int a, int b, int c) {
    if (a >= q || b >= q) return;  // dummy seat for odd q
    color[static_cast<size_t>(a)][static_cast<size_t>(b)] = c;
    color[static_cast<size_t>(b)][static_cast<size_t>(a)] = c;
  };
  for (int r = 0; r < wheel; ++r) {
    assign(players - 1, r, r + 1);
    for (int i = 1; i <= players / 2 - 1; ++i)
      assign((r + i) % wheel, (r - i + wheel) % wheel, r + 1);
  }
  return color;
}

std::vector<int> identity_or_permuted(std::mt19937_64* rng, int n) {
  std::vector<int> labels(static_cast<size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  if (rng) shuffle_vec(*rng, labels);
  return labels;
}

struct Builder {
  std::vector<int> labels;  // role position -> vertex id
  std::vector<Edge> edges;
  void add(int pos_a, int pos_b, int color) {
    edges.push_back({labels[static_cast<size_t>(pos_a)], labels[static_cast<size_t>(pos_b)], color});
  }
};

GeneratedFamily generate_g1(int m, int k, std::mt19937_64* rng) {
  if (m < 3 || m % 2 == 0) throw InvalidParametersError("G1 needs odd m >= 3");
  if (k < 2) throw InvalidParametersError("G1 needs k >= 2");
  const int n = m + k;
  Builder b{identity_or_permuted(rng, n), {}};

  FamilyInstance inst;
  inst.tag = FamilyTag::G1;
  inst.m = m;
  inst.k = k;
  for (int i = 0; i < m; ++i) {
    inst.clique.push_back(b.labels[static_cast<size_t>(i)]);
    inst.class_colors.push_back(i + 1);
  }
  for (int j = 0; j < k; ++j) inst.indep.push_back(b.labels[static_cast<size_t>(m + j)]);

  // circulant regular tournament: arc i -> j iff (j - i) mod m in [1, (m-1)/2]
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int tail = ((j - i) % m) <= (m - 1) / 2 ? i : j;
      inst.tournament.emplace_back(tail, tail == i ? j : i);
      b.add(i, j, inst.class_colors[static_cast<size_t>(tail)]);
    }

  for (int j = 0; j < k; ++j) {
    std::vector<int> attach(static_cast<size_t>(m));
    std::iota(attach.begin(), attach.end(), 0);
    if (rng) {
      int size = uniform_int(*rng, (m + 1) / 2, m);
      shuffle_vec(*rng, attach);
      attach.resize(static_cast<size_t>(size));
      std::sort(attach.begin(), attach.end());
    }
    for (int pos : attach) b.add(pos, m + j, inst.class_colors[static_cast<size_t>(pos)]);
    inst.attach_sets.push_back(std::move(attach));
  }
  return {EdgeColoredGraph(n, std::move(b.edges)), std::move(inst)};
}

GeneratedFamily generate_g2(int k, std::mt19937_64* rng) {
  if (k < 3) throw InvalidParametersError("G2 needs k >= 3");
  const int n = k + 2;
  Builder b{identity_or_permuted(rng, n), {}};

  FamilyInstance inst;
  inst.tag = FamilyTag::G2;
  inst.m = 0;
  inst.k = k;
  inst.clique = {b.labels[0], b.labels[1]};
  for (int i = 0; i < k; ++i) inst.indep.push_back(b.labels[static_cast<size_t>(2 + i)]);
  const int c1 = 1, c1p = 2, c2 = 3;
  inst.class_colors = {c1, c1p, c2};

  int prime_size = rng ? uniform_int(*rng, 1, k) : 1;
  std::vector<int> order(static_cast<size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  if (rng) shuffle_vec(*rng, order);
  std::vector<bool> in_prime(static_cast<size_t>(k), false);
  for (int i = 0; i < prime_size; ++i) in_prime[static_cast<size_t>(order[static_cast<size_t>(k - 1 - i)])] = true;

  b.add(0, 1, c1);
  for (int i = 0; i < k; ++i) b.add(1, 2 + i, c2);
  for (int i = 0; i < k; ++i) {
    b.add(0, 2 + i, in_prime[static_cast<size_t>(i)] ? c1p : c1);
    if (!in_prime[static_cast<size_t>(i)]) inst.v1_part.push_back(inst.indep[static_cast<size_t>(i)]);
  }
  return {EdgeColoredGraph(n, std::move(b.edges)), std::move(inst)};
}

// Shared by G3/G4 (with hub w and non-attached v_0) and G5/G6.
GeneratedFamily generate_split(FamilyTag tag, int m, int k, std::mt19937_64* rng) {
  if (m < 1 || k < 1) throw InvalidParametersError("family needs m >= 1 and k >= 1");
  const bool has_w = tag == FamilyTag::G3 || tag == FamilyTag::G4;
  const bool rainbow_clique = tag == FamilyTag::G4 || tag == FamilyTag::G6;
  const int clique_size = has_w ? m + 1 : m;
  const int indep_size = m + k;
  const int n = clique_size + (has_w ? 1 : 0) + indep_size;
  Builder b{identity_or_permuted(rng, n), {}};

  FamilyInstance inst;
  inst.tag = tag;
  inst.m = m;
  inst.k = k;
  for (int i = 0; i < clique_size; ++i) inst.clique.push_back(b.labels[static_cast<size_t>(i)]);
  const int w_pos = clique_size;
  if (has_w) inst.w = b.labels[static_cast<size_t>(w_pos)];
  const int indep_base = clique_size + (has_w ? 1 : 0);
  for (int j = 0; j < indep_size; ++j)
    inst.indep.push_back(b.labels[static_cast<size_t>(indep_base + j)]);

  int palette = 0;
  if (clique_size >= 2) {
    if (rainbow_clique) {
      for (int i = 0; i < clique_size; ++i)
        for (int j = i + 1; j < clique_size; ++j) b.add(i, j, ++palette);
    } else {
      auto rr = round_robin_coloring(clique_size);
      for (int i = 0; i < clique_size; ++i)
        for (int j = i + 1; j < clique_size; ++j) {
          b.add(i, j, rr[static_cast<size_t>(i)][static_cast<size_t>(j)]);
          palette = std::max(palette, rr[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
    }
  }

  if (has_w) {
    const int c = ++palette;
    inst.class_colors.push_back(c);
    b.add(0, w_pos, c);  // v_0 w
    for (int j = 0; j < indep_size; ++j) b.add(w_pos, indep_base + j, c);
    for (int i = 1; i < clique_size; ++i) {
      const int ci = ++palette;
      inst.class_colors.push_back(ci);
      b.add(i, w_pos, ci);
      for (int j = 0; j < indep_size; ++j) b.add(i, indep_base + j, ci);
    }
  } else {
    for (int i = 0; i < clique_size; ++i) {
      const int ci = ++palette;
      inst.class_colors.push_back(ci);
      for (int j = 0; j < indep_size; ++j) b.add(i, indep_base + j, ci);
    }
  }
  return {EdgeColoredGraph(n, std::move(b.edges)), std::move(inst)};
}

}  // namespace

GeneratedFamily generate_family(FamilyTag tag, int m, int k, uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::mt19937_64* rng = seed == 0 ? nullptr : &engine;
  GeneratedFamily out = [&] {
    switch (tag) {
      case FamilyTag::G1: return generate_g1(m, k, rng);
      case FamilyTag::G2: return generate_g2(k, rng);
      default: return generate_split(tag, m, k, rng);
    }
  }();
  if (!verify_membership(out.graph, out.inst))
    throw InternalGuaranteeViolation("generated family instance fails self-verification");
  return out;
}

namespace {

// Edge lookup that marks consumption, for exact template comparison.
class EdgeLedger {
 public:
  explicit EdgeLedger(const EdgeColoredGraph& g) {
    for (int id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edge(id);
      map_.emplace(std::minmax(e.u, e.v), e.color);
    }
  }
  // Consumes (u, v) expecting an exact color.
  bool expect(int u, int v, int color) {
    auto it = map_.find(std::minmax(u, v));
    if (it == map_.end() || it->second != color) return false;
    map_.erase(it);
    return true;
  }
  // Consumes (u, v) with any color, reporting it.
  std::optional<int> take(int u, int v) {
    auto it = map_.find(std::minmax(u, v));
    if (it == map_.end()) return std::nullopt;
    int c = it->second;
    map_.erase(it);
    return c;
  }
  bool exhausted() const { return map_.empty(); }

 private:
  std::map<std::pair<int, int>, int> map_;
};

bool roles_partition_vertices(const EdgeColoredGraph& g, const FamilyInstance& inst) {
  std::vector<int> all(inst.clique);
  all.insert(all.end(), inst.indep.begin(), inst.indep.end());
  if (inst.w >= 0) all.push_back(inst.w);
  if (static_cast<int>(all.size()) != g.vertex_count()) return false;
  std::sort(all.begin(), all.end());
  if (std::unique(all.begin(), all.end()) != all.end()) return false;
  return all.front() == 0 && all.back() == g.vertex_count() - 1;
}

bool distinct_colors(const std::vector<int>& colors) {
  std::set<int> s(colors.begin(), colors.end());
  return s.size() == colors.size();
}

bool verify_g1(const EdgeColoredGraph& g, const FamilyInstance& inst) {
  const int m = inst.m, k = inst.k;
  if (m < 3 || m % 2 == 0 || k < 2) return false;
  if (static_cast<int>(inst.clique.size()) != m || static_cast<int>(inst.indep.size()) != k)
    return false;
  if (static_cast<int>(inst.class_colors.size()) != m || !distinct_colors(inst.class_colors))
    return false;
  if (static_cast<int>(inst.attach_sets.size()) != k) return false;
  if (static_cast<int>(inst.tournament.size()) != m * (m - 1) / 2) return false;
  if (!roles_partition_vertices(g, inst)) return false;

  std::vector<int> outdeg(static_cast<size_t>(m), 0);
  std::set<std::pair<int, int>> covered;
  EdgeLedger ledger(g);
  for (auto [tail, head] : inst.tournament) {
    if (tail < 0 || tail >= m || head < 0 || head >= m || tail == head) return false;
    if (!covered.insert(std::minmax(tail, head)).second) return false;
    ++outdeg[static_cast<size_t>(tail)];
    if (!ledger.expect(inst.clique[static_cast<size_t>(tail)], inst.clique[static_cast<size_t>(head)],
                       inst.class_colors[static_cast<size_t>(tail)]))
      return false;
  }
  for (int d : outdeg)
    if (d != (m - 1) / 2) return false;

  for (int j = 0; j < k; ++j) {
    const auto& attach = inst.attach_sets[static_cast<size_t>(j)];
    if (static_cast<int>(attach.size()) < (m + 1) / 2) return false;
    std::set<int> seen;
    for (int pos : attach) {
      if (pos < 0 || pos >= m || !seen.insert(pos).second) return false;
      if (!ledger.expect(inst.clique[static_cast<size_t>(pos)], inst.indep[static_cast<size_t>(j)],
                         inst.class_colors[static_cast<size_t>(pos)]))
        return false;
    }
  }
  return ledger.exhausted();
}

bool verify_g2(const EdgeColoredGraph& g, const FamilyInstance& inst) {
  const int k = inst.k;
  if (k < 3 || inst.m != 0) return false;
  if (inst.clique.size() != 2 || static_cast<int>(inst.indep.size()) != k) return false;
  if (inst.class_colors.size() != 3 || !distinct_colors(inst.class_colors)) return false;
  if (!roles_partition_vertices(g, inst)) return false;
  const int u1 = inst.clique[0], u2 = inst.clique[1];
  const int c1 = inst.class_colors[0], c1p = inst.class_colors[1], c2 = inst.class_colors[2];

  std::set<int> v1(inst.v1_part.begin(), inst.v1_part.end());
  std::set<int> indep(inst.indep.begin(), inst.indep.end());
  for (int v : v1)
    if (!indep.count(v)) return false;
  if (v1.size() == indep.size()) return false;  // V_1' must be nonempty

  EdgeLedger ledger(g);
  if (!ledger.expect(u1, u2, c1)) return false;
  for (int v : inst.indep) {
    if (!ledger.expect(u2, v, c2)) return false;
    if (!ledger.expect(u1, v, v1.count(v) ? c1 : c1p)) return false;
  }
  return ledger.exhausted();
}

bool verify_split(const EdgeColoredGraph& g, const FamilyInstance& inst) {
  const int m = inst.m, k = inst.k;
  const bool has_w = inst.tag == FamilyTag::G3 || inst.tag == FamilyTag::G4;
  const bool rainbow_clique = inst.tag == FamilyTag::G4 || inst.tag == FamilyTag::G6;
  if (m < 1 || k < 1) return false;
  const int clique_size = has_w ? m + 1 : m;
  if (static_cast<int>(inst.clique.size()) != clique_size) return false;
  if (static_cast<int>(inst.indep.size()) != m + k) return false;
  if (has_w != (inst.w >= 0)) return false;
  if (static_cast<int>(inst.class_colors.size()) != (has_w ? m + 1 : m)) return false;
  if (!distinct_colors(inst.class_colors)) return false;
  if (!roles_partition_vertices(g, inst)) return false;

  EdgeLedger ledger(g);

  // spoke stars with prescribed colors
  if (has_w) {
    const int c = inst.class_colors[0];
    if (!ledger.expect(inst.clique[0], inst.w, c)) return false;
    for (int u : inst.indep)
      if (!ledger.expect(inst.w, u, c)) return false;
    for (int i = 1; i <= m; ++i) {
      const int ci = inst.class_colors[static_cast<size_t>(i)];
      if (!ledger.expect(inst.clique[static_cast<size_t>(i)], inst.w, ci)) return false;
      for (int u : inst.indep)
        if (!ledger.expect(inst.clique[static_cast<size_t>(i)], u, ci)) return false;
    }
  } else {
    for (int i = 0; i < m; ++i)
      for (int u : inst.indep)
        if (!ledger.expect(inst.clique[static_cast<size_t>(i)], u,
                           inst.class_colors[static_cast<size_t>(i)]))
          return false;
  }

  // clique edges: colors free but constrained
  std::vector<std::set<int>> at(static_cast<size_t>(clique_size));
  std::vector<int> all_colors;
  for (int i = 0; i < clique_size; ++i)
    for (int j = i + 1; j < clique_size; ++j) {
      auto c = ledger.take(inst.clique[static_cast<size_t>(i)], inst.clique[static_cast<size_t>(j)]);
      if (!c) return false;
      if (!at[static_cast<size_t>(i)].insert(*c).second) return false;  // properly colored
      if (!at[static_cast<size_t>(j)].insert(*c).second) return false;
      all_colors.push_back(*c);
    }
  if (rainbow_clique) {
    if (!distinct_colors(all_colors)) return false;
    for (int c : all_colors)
      for (int spoke : inst.class_colors)
        if (c == spoke) return false;
  } else {
    // c absent at v_0 (G3 only), c_i absent at v_i
    if (has_w) {
      if (at[0].count(inst.class_colors[0])) return false;
      for (int i = 1; i <= m; ++i)
        if (at[static_cast<size_t>(i)].count(inst.class_colors[static_cast<size_t>(i)])) return false;
    } else {
      for (int i = 0; i < m; ++i)
        if (at[static_cast<size_t>(i)].count(inst.class_colors[static_cast<size_t>(i)])) return false;
    }
  }
  return ledger.exhausted();
}

}  // namespace

bool verify_membership(const EdgeColoredGraph& g, const FamilyInstance& inst) {
  switch (inst.tag) {
    case FamilyTag::G1: return verify_g1(g, inst);
    case FamilyTag::G2: return verify_g2(g, inst);
    default: return verify_split(g, inst);
  }
}

namespace {

std::vector<int> vertices_with_degree(const EdgeColoredGraph& g, int deg) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == deg) out.push_back(v);
  return out;
}

bool independent_set(const EdgeColoredGraph& g, const std::vector<int>& verts) {
  std::unordered_set<int> set(verts.begin(), verts.end());
  for (int v : verts)
    for (const Incidence& inc : g.incident(v))
      if (set.count(inc.to)) return false;
  return true;
}

// Common color of all v -> targets edges, if the edges exist and agree.
std::optional<int> uniform_color_towards(const EdgeColoredGraph& g, int v,
                                         const std::vector<int>& targets) {
  std::optional<int> color;
  for (int t : targets) {
    auto id = g.find_edge(v, t);
    if (!id) return std::nullopt;
    int c = g.edge(*id).color;
    if (color && *color != c) return std::nullopt;
    color = c;
  }
  return color;
}

std::optional<FamilyInstance> recognize_g1(const EdgeColoredGraph& g) {
  const int n = g.vertex_count();
  auto comps = monochromatic_components(g);
  std::set<int> colors;
  for (const auto& c : comps) colors.insert(c.color);
  const int m = static_cast<int>(colors.size());
  if (static_cast<int>(comps.size()) != m) return std::nullopt;  // one star per color
  if (m < 3 || m % 2 == 0 || n - m < 2) return std::nullopt;

  // Star centers; single-edge classes are ambiguous, try both endpoints.
  std::vector<std::vector<int>> candidates;
  for (const auto& comp : comps) {
    StarCheck sc = is_star(g, comp.edges);
    if (!sc.star) return std::nullopt;
    if (sc.alt_center >= 0)
      candidates.push_back({sc.center, sc.alt_center});
    else
      candidates.push_back({sc.center});
  }
  uint64_t combos = 1;
  for (const auto& c : candidates) {
    combos *= c.size();
    if (combos > 256) return std::nullopt;  // only m = 3 templates are ambiguous
  }

  for (uint64_t pick = 0; pick < combos; ++pick) {
    uint64_t rest = pick;
    std::vector<int> center(comps.size());
    std::map<int, int> color_of_center;
    bool ok = true;
    for (size_t i = 0; i < comps.size(); ++i) {
      const auto& c = candidates[i];
      center[i] = c[rest % c.size()];
      rest /= c.size();
      if (!color_of_center.emplace(center[i], comps[i].color).second) ok = false;
    }
    if (!ok || static_cast<int>(color_of_center.size()) != m) continue;

    std::vector<int> clique;
    for (const auto& [v, c] : color_of_center) clique.push_back(v);
    std::vector<int> indep;
    std::unordered_set<int> in_clique(clique.begin(), clique.end());
    for (int v = 0; v < n; ++v)
      if (!in_clique.count(v)) indep.push_back(v);

    FamilyInstance inst;
    inst.tag = FamilyTag::G1;
    inst.m = m;
    inst.k = n - m;
    inst.clique = clique;
    inst.indep = indep;
    for (int v : clique) inst.class_colors.push_back(color_of_center.at(v));

    std::map<int, int> pos_of;
    for (int i = 0; i < m; ++i) pos_of[clique[static_cast<size_t>(i)]] = i;
    ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = i + 1; j < m && ok; ++j) {
        auto id = g.find_edge(clique[static_cast<size_t>(i)], clique[static_cast<size_t>(j)]);
        if (!id) {
          ok = false;
          break;
        }
        int c = g.edge(*id).color;
        if (c == inst.class_colors[static_cast<size_t>(i)])
          inst.tournament.emplace_back(i, j);
        else if (c == inst.class_colors[static_cast<size_t>(j)])
          inst.tournament.emplace_back(j, i);
        else
          ok = false;
      }
    if (!ok) continue;

    for (int u : indep) {
      std::vector<int> attach;
      for (const Incidence& inc : g.incident(u)) {
        auto it = pos_of.find(inc.to);
        if (it == pos_of.end()) {
          ok = false;
          break;
        }
        attach.push_back(it->second);
      }
      if (!ok) break;
      std::sort(attach.begin(), attach.end());
      inst.attach_sets.push_back(std::move(attach));
    }
    if (!ok) continue;

    if (verify_membership(g, inst)) return inst;
  }
  return std::nullopt;
}

std::optional<FamilyInstance> recognize_g2(const EdgeColoredGraph& g) {
  const int n = g.vertex_count();
  if (n < 5) return std::nullopt;
  auto hubs = vertices_with_degree(g, n - 1);
  if (hubs.size() != 2) return std::nullopt;
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != hubs[0] && v != hubs[1]) rest.push_back(v);

  for (auto [u1, u2] : {std::pair{hubs[0], hubs[1]}, std::pair{hubs[1], hubs[0]}}) {
    auto bridge = g.find_edge(u1, u2);
    if (!bridge) continue;
    const int c1 = g.edge(*bridge).color;
    auto c2 = uniform_color_towards(g, u2, rest);
    if (!c2 || *c2 == c1) continue;

    std::set<int> side_colors;
    for (int v : rest) {
      auto id = g.find_edge(u1, v);
      if (!id) break;
      side_colors.insert(g.edge(*id).color);
    }
    std::set<int> extra(side_colors);
    extra.erase(c1);
    if (extra.size() != 1) continue;
    const int c1p = *extra.begin();
    if (c1p == *c2) continue;

    FamilyInstance inst;
    inst.tag = FamilyTag::G2;
    inst.m = 0;
    inst.k = static_cast<int>(rest.size());
    inst.clique = {u1, u2};
    inst.indep = rest;
    inst.class_colors = {c1, c1p, *c2};
    for (int v : rest) {
      auto id = g.find_edge(u1, v);
      if (id && g.edge(*id).color == c1) inst.v1_part.push_back(v);
    }
    if (verify_membership(g, inst)) return inst;
  }
  return std::nullopt;
}

std::optional<FamilyInstance> recognize_split(const EdgeColoredGraph& g, FamilyTag tag) {
  const bool has_w = tag == FamilyTag::G3 || tag == FamilyTag::G4;
  const int n = g.vertex_count();
  auto full = vertices_with_degree(g, n - 1);

  if (!has_w) {
    const int m = static_cast<int>(full.size());
    if (m < 1 || n - 2 * m < 1) return std::nullopt;
    std::vector<int> indep;
    std::unordered_set<int> in_full(full.begin(), full.end());
    for (int v = 0; v < n; ++v)
      if (!in_full.count(v)) indep.push_back(v);
    if (!independent_set(g, indep)) return std::nullopt;

    FamilyInstance inst;
    inst.tag = tag;
    inst.m = m;
    inst.k = n - 2 * m;
    inst.clique = full;
    inst.indep = indep;
    for (int v : full) {
      auto c = uniform_color_towards(g, v, indep);
      if (!c) return std::nullopt;
      inst.class_colors.push_back(*c);
    }
    if (verify_membership(g, inst)) return inst;
    return std::nullopt;
  }

  const int m = static_cast<int>(full.size()) - 1;
  if (m < 1) return std::nullopt;
  const int k = n - 2 * m - 2;
  if (k < 1) return std::nullopt;
  std::vector<int> low;
  std::unordered_set<int> in_full(full.begin(), full.end());
  for (int v = 0; v < n; ++v)
    if (!in_full.count(v)) low.push_back(v);
  if (!independent_set(g, low)) return std::nullopt;

  for (int v0 : low) {
    std::vector<int> indep;
    for (int v : low)
      if (v != v0) indep.push_back(v);
    for (int w : full) {
      std::vector<int> targets(indep);
      targets.push_back(v0);
      auto c = uniform_color_towards(g, w, targets);
      if (!c) continue;

      FamilyInstance inst;
      inst.tag = tag;
      inst.m = m;
      inst.k = k;
      inst.w = w;
      inst.clique.push_back(v0);
      inst.class_colors.push_back(*c);
      bool ok = true;
      for (int v : full) {
        if (v == w) continue;
        auto ci = uniform_color_towards(g, v, indep);
        auto cw = g.find_edge(v, w);
        if (!ci || !cw || g.edge(*cw).color != *ci) {
          ok = false;
          break;
        }
        inst.clique.push_back(v);
        inst.class_colors.push_back(*ci);
      }
      if (!ok) continue;
      inst.indep = indep;
      if (verify_membership(g, inst)) return inst;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<FamilyInstance> recognize_family(const EdgeColoredGraph& g,
                                               const std::vector<FamilyTag>& tags) {
  if (!is_connected(g)) return std::nullopt;
  auto wanted = [&](FamilyTag tag) {
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
  };
  if (wanted(FamilyTag::G1))
    if (auto inst = recognize_g1(g)) return inst;
  if (wanted(FamilyTag::G2))
    if (auto inst = recognize_g2(g)) return inst;
  for (FamilyTag tag : {FamilyTag::G3, FamilyTag::G4, FamilyTag::G5, FamilyTag::G6})
    if (wanted(tag))
      if (auto inst = recognize_split(g, tag)) return inst;
  return std::nullopt;
}

std::string family_to_json(const FamilyInstance& inst) {
  nlohmann::ordered_json j;
  j["tag"] = family_tag_name(inst.tag);
  j["m"] = inst.m;
  j["k"] = inst.k;
  j["clique"] = inst.clique;
  j["indep"] = inst.indep;
  if (inst.w >= 0) j["w"] = inst.w;
  j["class_colors"] = inst.class_colors;
  if (!inst.tournament.empty()) {
    auto arcs = nlohmann::ordered_json::array();
    for (auto [tail, head] : inst.tournament) arcs.push_back({tail, head});
    j["tournament"] = arcs;
  }
  if (!inst.attach_sets.empty()) j["attach_sets"] = inst.attach_sets;
  if (inst.tag == FamilyTag::G2) j["v1_part"] = inst.v1_part;
  return j.dump(2) + "\n";
}

}  // namespace pctree
