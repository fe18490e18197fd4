#include "treecover/treenum.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "treecover/dsu.hpp"

namespace tc {

namespace {

std::vector<int> residual_edges(const Element& r) {
  std::vector<int> es = r.spine_edges;
  for (const Chord& c : r.chords) es.push_back(c.edge);
  return es;
}

int chord_index_at(const Element& r, int pos) {
  for (size_t i = 0; i < r.chords.size(); ++i)
    if (r.chords[i].a == pos || r.chords[i].b == pos) return (int)i;
  return -1;
}

// T1 = spine edges walking forward from position a to b; feasible when the rest
// of the residual (T2) is a single tree and T1 is nonempty
bool doubling_ok(const Element& r, int a, int b) {
  int k = r.k_edges();
  int n = r.n_spine();
  if (a == b) return false;
  std::vector<char> seg(k, 0);
  int segcnt = 0;
  if (r.closed) {
    for (int i = a; i != b; i = (i + 1) % n) seg[i] = 1, ++segcnt;
  } else {
    if (a > b) return false;
    for (int i = a; i < b; ++i) seg[i] = 1, ++segcnt;
  }
  int rest = k - segcnt + (int)r.chords.size();
  if (segcnt == 0 || rest == 0) return false;
  DsuUndo d(n);
  std::set<int> touched;
  auto eat = [&](int pu, int pv) {
    touched.insert(pu);
    touched.insert(pv);
    return d.unite(pu, pv);
  };
  for (int i = 0; i < k; ++i) {
    if (seg[i]) continue;
    auto [pu, pv] = r.spine_edge_ends_pos(i);
    if (!eat(pu, pv)) return false;  // cycle in T2
  }
  for (const Chord& c : r.chords)
    if (!eat(c.a, c.b)) return false;
  int comps = 0;
  for (int v : touched)
    if (d.find(v) == v) ++comps;
  return comps == 1;
}

struct GreedyPick {
  int sum = 0;
  std::vector<int> sites;  // site indexes, best feasible serve set
};

// ---------------------------------------------------------------------------
// residual 2-coloring
// ---------------------------------------------------------------------------

struct ColorGoal {
  std::vector<int> serve_pos;
  bool want_ends = false;    // open residuals: keep the two ends apart
  bool want_anchor = false;  // closed residuals: cover position 0 twice
};

struct Colorer {
  const Element& r;
  const ColorGoal& goal;
  int n, k, nc;
  std::vector<int> parent;                 // per chord; -1 = base region
  std::vector<std::map<int, int>> starts;  // per owner (+1 shift): a -> chord
  std::map<int, int> base_starts;
  std::vector<int> color;  // item id: 0..k-1 spine edge, k+j chord j
  DsuUndo d0, d1;
  std::vector<int> trail;

  struct Item {
    int id, pu, pv;
  };

  Colorer(const Element& re, const ColorGoal& go)
      : r(re), goal(go), n(re.n_spine()), k(re.k_edges()),
        nc((int)re.chords.size()), d0(re.n_spine()), d1(re.n_spine()) {
    parent.assign(nc, -1);
    for (int i = 0; i < nc; ++i) {
      int best = -1, blen = n + 1;
      for (int j = 0; j < nc; ++j) {
        if (j == i) continue;
        const Chord &ci = r.chords[i], &cj = r.chords[j];
        bool inside = cj.a <= ci.a && ci.b <= cj.b &&
                      (cj.b - cj.a > ci.b - ci.a);
        if (inside && cj.b - cj.a < blen) best = j, blen = cj.b - cj.a;
      }
      parent[i] = best;
    }
    starts.assign(nc, {});
    for (int i = 0; i < nc; ++i) {
      auto& m = parent[i] < 0 ? base_starts : starts[parent[i]];
      m[r.chords[i].a] = i;  // siblings never share a start
    }
  }

  std::vector<Item> walk(int owner) const {
    std::vector<Item> items;
    const std::map<int, int>* st = owner < 0 ? &base_starts : &starts[owner];
    int p, stop;
    bool cyc = owner < 0 && r.closed;
    if (owner < 0) {
      p = 0;
      stop = cyc ? 0 : n - 1;
    } else {
      p = r.chords[owner].a;
      stop = r.chords[owner].b;
    }
    int guard = 0;
    do {
      auto it = st->find(p);
      if (it != st->end()) {
        int c = it->second;
        items.push_back({k + c, p, r.chords[c].b});
        p = r.chords[c].b;
      } else {
        int q = cyc ? (p + 1) % n : p + 1;
        items.push_back({p, p, q});
        p = q;
      }
      if (++guard > n + nc + 2) throw InternalInvariant("region walk ran away");
    } while (p != stop || (cyc && items.empty()));
    return items;
  }

  bool put(int id, int pu, int pv, int prefer) {
    DsuUndo* ds[2] = {&d0, &d1};
    for (int t = 0; t < 2; ++t) {
      int c = t == 0 ? prefer : 1 - prefer;
      if (ds[c]->unite(pu, pv)) {
        color[id] = c;
        trail.push_back(id);
        return true;
      }
    }
    return false;
  }

  struct Mark {
    size_t m0, m1, tr;
  };
  Mark mark() { return {d0.mark(), d1.mark(), trail.size()}; }
  void rollback(const Mark& m) {
    d0.rollback(m.m0);
    d1.rollback(m.m1);
    while (trail.size() > m.tr) {
      color[trail.back()] = -1;
      trail.pop_back();
    }
  }

  bool assign_walk(const std::vector<Item>& items, int start,
                   const std::set<int>& toggles) {
    int cur = start;
    for (size_t i = 0; i < items.size(); ++i) {
      if (i > 0 && toggles.count(items[i].pu)) cur ^= 1;
      if (!put(items[i].id, items[i].pu, items[i].pv, cur)) return false;
      cur = color[items[i].id];
    }
    return true;
  }

  bool doubled_locally(const std::vector<Item>& items, int w) const {
    int seen = -1;
    for (const Item& it : items) {
      if (it.pu != w && it.pv != w) continue;
      if (color[it.id] < 0) continue;
      if (seen < 0)
        seen = color[it.id];
      else if (seen != color[it.id])
        return true;
    }
    return false;
  }

  // try one orientation variant of a region; false leaves state untouched
  bool try_region(int c, int variant) {
    int x = color[k + c];
    auto items = walk(c);
    std::vector<int> serves;
    for (int w : goal.serve_pos) {
      if (w == r.chords[c].a || w == r.chords[c].b) continue;
      for (size_t i = 1; i < items.size(); ++i)
        if (items[i].pu == w) serves.push_back(w);
    }
    bool use_serves = variant < 2;
    int start = (variant % 2 == 0) ? 1 - x : x;
    std::set<int> tg;
    if (use_serves) tg.insert(serves.begin(), serves.end());
    Mark m = mark();
    if (!assign_walk(items, start, tg)) {
      rollback(m);
      return false;
    }
    if (use_serves) {
      for (int w : serves)
        if (!doubled_locally(items, w)) {
          rollback(m);
          return false;
        }
    }
    return true;
  }

  bool attempt(const std::set<int>& base_toggles) {
    color.assign(k + nc, -1);
    d0 = DsuUndo(n);
    d1 = DsuUndo(n);
    trail.clear();
    auto base = walk(-1);
    if (!assign_walk(base, 0, base_toggles)) return false;
    // regions in BFS order from the base
    std::vector<int> order, q;
    for (int i = 0; i < nc; ++i)
      if (parent[i] < 0) q.push_back(i);
    while (!q.empty()) {
      std::vector<int> nx;
      for (int c : q) {
        order.push_back(c);
        for (auto& [a, ch] : starts[c]) nx.push_back(ch);
      }
      q = nx;
    }
    // depth-first search over region orientations; a locally fine choice can
    // strand a color class, so global validation drives backtracking
    int nr = (int)order.size();
    std::vector<int> var(nr, 0);
    std::vector<Mark> marks(nr);
    int at = 0, visits = 0;
    const int visit_cap = 20000;
    while (true) {
      if (at == nr) {
        if (validate()) return true;
        if (nr == 0) return false;
        --at;
        rollback(marks[at]);
        ++var[at];
      }
      if (++visits > visit_cap) return false;
      while (at >= 0 && var[at] >= 4) {
        var[at] = 0;
        --at;
        if (at < 0) return false;
        rollback(marks[at]);
        ++var[at];
      }
      if (at < 0) return false;
      marks[at] = mark();
      if (try_region(order[at], var[at])) {
        ++at;
      } else {
        ++var[at];
      }
    }
  }

  std::vector<int> colors_at(int pos) const {
    std::vector<int> out;
    auto push = [&](int id) {
      if (color[id] >= 0) out.push_back(color[id]);
    };
    if (r.closed) {
      push((pos - 1 + n) % n);
      push(pos);
    } else {
      if (pos > 0) push(pos - 1);
      if (pos < k) push(pos);
    }
    for (int j = 0; j < nc; ++j)
      if (r.chords[j].a == pos || r.chords[j].b == pos) push(k + j);
    return out;
  }

  bool both_colors_at(int pos) const {
    auto cs = colors_at(pos);
    bool c0 = false, c1 = false;
    for (int c : cs) (c == 0 ? c0 : c1) = true;
    return c0 && c1;
  }

  bool validate() const {
    int cnt[2] = {0, 0};
    for (int c : color) {
      if (c < 0) return false;
      ++cnt[c];
    }
    if (cnt[0] == 0 || cnt[1] == 0) return false;
    for (int cl = 0; cl < 2; ++cl) {
      DsuUndo d(n);
      std::set<int> touched;
      auto eat = [&](int id, int pu, int pv) {
        if (color[id] != cl) return true;
        touched.insert(pu);
        touched.insert(pv);
        return d.unite(pu, pv);
      };
      for (int i = 0; i < k; ++i) {
        auto [pu, pv] = r.spine_edge_ends_pos(i);
        if (!eat(i, pu, pv)) return false;
      }
      for (int j = 0; j < nc; ++j)
        if (!eat(k + j, r.chords[j].a, r.chords[j].b)) return false;
      int comps = 0;
      for (int v : touched)
        if (d.find(v) == v) ++comps;
      if (comps != 1) return false;
    }
    for (int w : goal.serve_pos)
      if (!both_colors_at(w)) return false;
    if (goal.want_anchor && !both_colors_at(0)) return false;
    if (goal.want_ends) {
      auto cu = colors_at(0), cv = colors_at(k);
      bool u0 = false, u1 = false, v0 = false, v1 = false;
      for (int c : cu) (c == 0 ? u0 : u1) = true;
      for (int c : cv) (c == 0 ? v0 : v1) = true;
      bool u_only0 = u0 && !u1, u_only1 = u1 && !u0;
      bool v_only0 = v0 && !v1, v_only1 = v1 && !v0;
      if ((u_only0 && v_only0) || (u_only1 && v_only1)) return false;
    }
    return true;
  }
};

bool color_residual(const Element& r, const std::set<int>& sites_pos,
                    const ColorGoal& goal, std::vector<int>& spine_color,
                    std::vector<int>& chord_color) {
  Colorer col(r, goal);
  auto base = col.walk(-1);
  std::vector<int> bpos;
  std::set<int> on_base;
  for (auto& it : base)
    if (on_base.insert(it.pu).second) bpos.push_back(it.pu);

  // serves on the base walk: degree-2 ones can only be doubled by a base
  // toggle; chord-incident ones may instead be doubled from a region side
  std::vector<int> S_must, S_opt;
  std::set<int> sset(goal.serve_pos.begin(), goal.serve_pos.end());
  if (goal.want_anchor) sset.insert(0);
  for (int p : bpos) {
    if (!sset.count(p)) continue;
    (chord_index_at(r, p) < 0 ? S_must : S_opt).push_back(p);
  }
  if ((int)S_opt.size() > 6) S_opt.resize(6);

  std::set<int> junction;  // chord endpoints on the base walk: free toggles
  for (auto& it : base)
    if (it.id >= r.k_edges()) {
      junction.insert(it.pu);
      junction.insert(it.pv);
    }
  std::vector<int> fillers;
  auto add_filler = [&](int p) {
    if (sset.count(p)) return;
    if (std::find(fillers.begin(), fillers.end(), p) == fillers.end())
      fillers.push_back(p);
  };
  for (int p : bpos)
    if (junction.count(p)) add_filler(p);
  for (int p : bpos)
    if (!junction.count(p) && !r.is_synthetic(r.spine[p]) &&
        !sites_pos.count(p))
      add_filler(p);
  for (int p : bpos)
    if (!junction.count(p) && !r.is_synthetic(r.spine[p])) add_filler(p);
  for (int p : bpos) add_filler(p);

  std::vector<std::set<int>> variants;
  auto padded = [&](const std::set<int>& base_t, int extra, int skip) {
    std::set<int> t = base_t;
    int got = 0, idx = 0;
    for (int f : fillers) {
      if (got >= extra) break;
      if (idx++ == skip) continue;
      if (t.insert(f).second) ++got;
    }
    return t;
  };
  // subset masks of S_opt, larger subsets first
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << S_opt.size()); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return __builtin_popcount(a) > __builtin_popcount(b);
  });
  for (unsigned m : masks) {
    if ((int)variants.size() >= 40) break;
    std::set<int> t0(S_must.begin(), S_must.end());
    for (size_t i = 0; i < S_opt.size(); ++i)
      if (m >> i & 1) t0.insert(S_opt[i]);
    if (r.closed) {
      int need = std::max(0, 2 - (int)t0.size());
      if (((int)t0.size() + need) % 2) ++need;
      for (int skip = -1;
           skip < (int)fillers.size() && (int)variants.size() < 40; ++skip) {
        auto t = padded(t0, need, skip);
        if ((int)t.size() >= 2 && t.size() % 2 == 0) variants.push_back(t);
      }
      auto t2 = padded(t0, need + 2, -1);
      if ((int)t2.size() >= 2 && t2.size() % 2 == 0) variants.push_back(t2);
    } else {
      variants.push_back(t0);
      for (int f : fillers) {
        if ((int)variants.size() >= 40) break;
        auto t = t0;
        t.insert(f);
        variants.push_back(t);
      }
    }
  }
  // dedupe
  std::vector<std::set<int>> uniq;
  for (auto& v : variants)
    if (std::find(uniq.begin(), uniq.end(), v) == uniq.end()) uniq.push_back(v);

  for (auto& t : uniq) {
    if (col.attempt(t)) {
      spine_color.assign(col.color.begin(), col.color.begin() + r.k_edges());
      chord_color.assign(col.color.begin() + r.k_edges(), col.color.end());
      return true;
    }
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// analysis
// ---------------------------------------------------------------------------

ElementReport analyze_element(const Ctx& ctx, const Element& e) {
  ElementReport rep;
  rep.elem = e;
  rep.cands = direct_subcands(ctx, e);
  if (rep.cands.empty()) {
    rep.simple = true;
    rep.residual = e;
    rep.residual_chords = (int)e.chords.size();
    rep.residual_tau = (e.closed || !e.chords.empty()) ? 2 : 1;
    rep.tau = rep.residual_tau;
    rep.tau_literal = rep.tau;
    rep.proper = e.closed || !e.chords.empty();
    return rep;
  }
  rep.simple = false;
  rep.n = (int)rep.cands.size();
  for (const SubCand& c : rep.cands)
    rep.children.push_back(analyze_element(ctx, child_element(ctx, e, c)));
  ContractResult cr = contract(ctx, e, rep.cands);
  rep.residual = cr.residual;
  rep.site_vertex = cr.site_vertex;
  const Element& r = rep.residual;
  rep.residual_chords = (int)r.chords.size();
  bool chordless_open = !r.closed && r.chords.empty();
  rep.residual_tau = chordless_open ? 1 : 2;

  // sites: one per distinct residual vertex carrying candidates
  std::map<int, int> site_of_vertex;
  rep.cand_site.assign(rep.n, -1);
  for (int i = 0; i < rep.n; ++i) {
    int v = rep.site_vertex[i];
    auto it = site_of_vertex.find(v);
    int s;
    if (it == site_of_vertex.end()) {
      s = (int)rep.sites.size();
      site_of_vertex[v] = s;
      Site st;
      st.vertex = v;
      st.pos = r.pos_of_vertex(v);
      if (st.pos < 0) throw InternalInvariant("site vertex missing in residual");
      st.chord_incident = r.chord_at(st.pos);
      rep.sites.push_back(st);
    } else {
      s = it->second;
    }
    rep.cand_site[i] = s;
    if (rep.children[i].proper) rep.sites[s].gain += 1;
  }
  std::map<std::pair<int, int>, int> group_of;  // fitness path key -> group id
  int ngroups = 0;
  for (Site& st : rep.sites) {
    if (st.chord_incident) {
      st.fit = true;
    } else {
      st.fit = is_fit(r, st.pos);
      FitnessPath fp = fitness_path(r, st.pos);
      auto key = fp.closed ? std::make_pair(-1, -1)
                           : std::make_pair(fp.lo, fp.hi);
      auto it = group_of.find(key);
      if (it == group_of.end()) group_of[key] = ngroups++;
      st.group = group_of[key];
    }
    st.eligible = st.fit && st.gain > 0;
  }

  int budget = chordless_open
                   ? 0
                   : rep.residual_chords + (r.closed ? 2 : 1);

  std::set<int> sites_pos;
  for (const Site& st : rep.sites) sites_pos.insert(st.pos);
  // serving claims are only as good as a cover realizing them; test them
  auto set_feasible = [&](const std::vector<int>& chosen, bool want_anchor,
                          bool want_ends) -> bool {
    if (chordless_open) return chosen.empty();
    ColorGoal goal;
    for (int s : chosen) goal.serve_pos.push_back(rep.sites[s].pos);
    goal.want_anchor = want_anchor;
    goal.want_ends = want_ends;
    std::vector<int> sc, cc;
    return color_residual(r, sites_pos, goal, sc, cc);
  };

  // candidate pool: every eligible chord-incident site plus the two best
  // sites of each fitness group (positions matter, not just gains)
  std::vector<int> pool;
  {
    std::map<int, std::vector<int>> by_group;
    for (int s = 0; s < (int)rep.sites.size(); ++s) {
      const Site& st = rep.sites[s];
      if (!st.eligible) continue;
      if (st.chord_incident)
        pool.push_back(s);
      else
        by_group[st.group].push_back(s);
    }
    for (auto& [grp, lst] : by_group) {
      std::sort(lst.begin(), lst.end(), [&](int a, int b) {
        if (rep.sites[a].gain != rep.sites[b].gain)
          return rep.sites[a].gain > rep.sites[b].gain;
        return rep.sites[a].vertex < rep.sites[b].vertex;
      });
      for (int t = 0; t < (int)lst.size() && t < 2; ++t)
        pool.push_back(lst[t]);
    }
    std::sort(pool.begin(), pool.end(), [&](int a, int b) {
      if (rep.sites[a].gain != rep.sites[b].gain)
        return rep.sites[a].gain > rep.sites[b].gain;
      return rep.sites[a].vertex < rep.sites[b].vertex;
    });
    if ((int)pool.size() > 14) pool.resize(14);
  }
  // all serve sets over the pool: <= budget sites, <= 1 per group,
  // tried in decreasing total gain
  std::vector<std::pair<int, std::vector<int>>> serve_sets;
  {
    int p = (int)pool.size();
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
      int val = 0, cnt = 0;
      bool ok = true;
      std::set<int> used_groups;
      std::vector<int> chosen;
      for (int i = 0; i < p && ok; ++i) {
        if (!(mask >> i & 1)) continue;
        const Site& st = rep.sites[pool[i]];
        if (++cnt > budget) ok = false;
        if (!st.chord_incident && !used_groups.insert(st.group).second)
          ok = false;
        val += st.gain;
        chosen.push_back(pool[i]);
      }
      if (ok && cnt <= budget) serve_sets.push_back({val, chosen});
    }
    std::stable_sort(serve_sets.begin(), serve_sets.end(),
                     [](const auto& a, const auto& b) {
                       if (a.first != b.first) return a.first > b.first;
                       return a.second.size() < b.second.size();
                     });
    if ((int)serve_sets.size() > 220) serve_sets.resize(220);
    bool have_empty = false;
    for (auto& [val, chosen] : serve_sets)
      if (chosen.empty()) have_empty = true;
    if (!have_empty) serve_sets.push_back({0, {}});
  }
  GreedyPick greedy;
  for (auto& [val, chosen] : serve_sets) {
    if (val <= greedy.sum) break;
    if (set_feasible(chosen, false, false)) {
      greedy.sum = val;
      greedy.sites = chosen;
      break;
    }
  }

  // doubling: two degree-2 sites whose spine segment leaves a tree behind
  int best_double = 0;
  int dbl_a = -1, dbl_b = -1, dseg_lo = -1, dseg_hi = -1;
  {
    std::vector<int> cand_sites;
    for (int s = 0; s < (int)rep.sites.size(); ++s)
      if (rep.sites[s].eligible && !rep.sites[s].chord_incident)
        cand_sites.push_back(s);
    std::sort(cand_sites.begin(), cand_sites.end(), [&](int a, int b) {
      if (rep.sites[a].gain != rep.sites[b].gain)
        return rep.sites[a].gain > rep.sites[b].gain;
      return rep.sites[a].vertex < rep.sites[b].vertex;
    });
    if ((int)cand_sites.size() > 24) cand_sites.resize(24);
    for (size_t i = 0; i < cand_sites.size(); ++i)
      for (size_t j = i + 1; j < cand_sites.size(); ++j) {
        int sa = cand_sites[i], sb = cand_sites[j];
        int val = rep.sites[sa].gain + rep.sites[sb].gain;
        if (val <= best_double) continue;
        int pa = rep.sites[sa].pos, pb = rep.sites[sb].pos;
        int lo = -1, hi = -1;
        if (doubling_ok(r, pa, pb))
          lo = pa, hi = pb;
        else if (doubling_ok(r, pb, pa))
          lo = pb, hi = pa;
        if (lo < 0) continue;
        best_double = val;
        dbl_a = sa;
        dbl_b = sb;
        dseg_lo = lo;
        dseg_hi = hi;
      }
  }

  rep.extra = std::max(greedy.sum, best_double);
  if (best_double > greedy.sum) {
    rep.plan.doubling = true;
    rep.plan.seg_lo = dseg_lo;
    rep.plan.seg_hi = dseg_hi;
    rep.plan.served_sites = {dbl_a, dbl_b};
  } else {
    rep.plan.doubling = false;
    rep.plan.served_sites = greedy.sites;
  }

  long long child_sum = 0, child_sum_lit = 0;
  for (const ElementReport& ch : rep.children) {
    child_sum += ch.tau;
    child_sum_lit += ch.tau_literal;
  }
  rep.tau = (int)(rep.residual_tau + child_sum - rep.n - rep.extra);
  if (rep.tau < 2) throw InternalInvariant("tree number fell below two");

  // the uncapped per-group sum, with the single-chord second-serve bonus
  {
    long long lit = 0;
    int deg2_groups = 0, chord_sites = 0;
    std::map<int, std::vector<int>> members;
    for (int s = 0; s < (int)rep.sites.size(); ++s) {
      const Site& st = rep.sites[s];
      if (!st.eligible) continue;
      if (st.chord_incident) {
        lit += st.gain;
        ++chord_sites;
      } else {
        members[st.group].push_back(st.gain);
      }
    }
    for (auto& [grp, gains] : members) {
      std::sort(gains.begin(), gains.end(), std::greater<int>());
      lit += gains[0];
      ++deg2_groups;
    }
    if (rep.residual_chords == 1 && chord_sites == 0 && deg2_groups == 1) {
      auto& gains = members.begin()->second;
      if (gains.size() >= 2) lit += gains[1];
    }
    rep.extra_literal = lit;
    rep.tau_literal = rep.residual_tau + child_sum_lit - rep.n - lit;
  }

  // properness of the element's own minimum covers
  if (chordless_open) {
    rep.proper = false;
    for (int i = 0; i < rep.n; ++i)
      if (rep.children[i].proper) {
        rep.proper = true;
        rep.chain_split_child = i;
        break;
      }
    if (rep.proper) {
      rep.has_proper_plan = true;
      rep.proper_plan = rep.plan;
    }
  } else {
    // a proper cover must still realize the full extra while doubling the
    // anchor (closed) or keeping the two spine ends apart (open)
    rep.proper = false;
    bool anchor = r.closed;
    for (auto& [val, chosen] : serve_sets) {
      if (val != rep.extra) continue;
      if (set_feasible(chosen, anchor, !anchor)) {
        rep.proper = true;
        rep.has_proper_plan = true;
        rep.proper_plan.doubling = false;
        rep.proper_plan.served_sites = chosen;
        if (anchor) rep.proper_plan.forced_vertices = {r.spine[0]};
        break;
      }
    }
    if (!rep.proper && r.closed) {
      // a doubling pair with one endpoint at the anchor
      int anchor_site = -1;
      for (int s = 0; s < (int)rep.sites.size(); ++s)
        if (rep.sites[s].pos == 0) anchor_site = s;
      int base = (anchor_site >= 0 && rep.sites[anchor_site].eligible)
                     ? rep.sites[anchor_site].gain
                     : 0;
      for (int s = 0; s < (int)rep.sites.size() && !rep.proper; ++s) {
        const Site& st = rep.sites[s];
        if (!st.eligible || st.chord_incident || st.pos == 0) continue;
        if (base + st.gain != rep.extra) continue;
        int lo = -1, hi = -1;
        if (doubling_ok(r, 0, st.pos))
          lo = 0, hi = st.pos;
        else if (doubling_ok(r, st.pos, 0))
          lo = st.pos, hi = 0;
        if (lo < 0) continue;
        rep.proper = true;
        rep.has_proper_plan = true;
        rep.proper_plan.doubling = true;
        rep.proper_plan.seg_lo = lo;
        rep.proper_plan.seg_hi = hi;
        rep.proper_plan.served_sites = {s};
        if (anchor_site >= 0) rep.proper_plan.served_sites.push_back(anchor_site);
      }
    }
  }
  return rep;
}

ElementReport analyze_graph(const Ctx& ctx) {
  return analyze_element(ctx, graph_as_element(ctx));
}

int tree_number(const Graph& g) {
  Ctx ctx = build_ctx(g);
  return analyze_graph(ctx).tau;
}

// ---------------------------------------------------------------------------
// witness construction
// ---------------------------------------------------------------------------

namespace {

struct PartSet {
  struct P {
    std::vector<int> edges;
    std::set<int> verts;
    bool alive = true;
  };
  const Graph& g;
  std::vector<P> ps;
  std::map<int, int> of_edge;

  explicit PartSet(const Graph& gr) : g(gr) {}

  int add(const std::vector<int>& es) {
    P p;
    p.edges = es;
    for (int e : es) {
      p.verts.insert(g.edges[e].first);
      p.verts.insert(g.edges[e].second);
      of_edge[e] = (int)ps.size();
    }
    ps.push_back(std::move(p));
    return (int)ps.size() - 1;
  }
  int part_of(int e) const {
    auto it = of_edge.find(e);
    if (it == of_edge.end()) throw InternalInvariant("edge not in any part");
    return it->second;
  }
  void absorb(int a, int b) {
    if (a == b) throw InternalInvariant("merging a part with itself");
    for (int e : ps[b].edges) {
      ps[a].edges.push_back(e);
      of_edge[e] = a;
    }
    ps[a].verts.insert(ps[b].verts.begin(), ps[b].verts.end());
    ps[b].edges.clear();
    ps[b].verts.clear();
    ps[b].alive = false;
  }
  std::vector<int> with_vertex(int v) const {
    std::vector<int> out;
    for (int i = 0; i < (int)ps.size(); ++i)
      if (ps[i].alive && ps[i].verts.count(v)) out.push_back(i);
    return out;
  }
};

// split an edge set into connected components over the real graph
std::vector<std::vector<int>> real_components(const Graph& g,
                                              const std::vector<int>& es) {
  DsuUndo d(g.vertex_count);
  for (int e : es) d.unite(g.edges[e].first, g.edges[e].second);
  std::map<int, std::vector<int>> by_root;
  for (int e : es) by_root[d.find(g.edges[e].first)].push_back(e);
  std::vector<std::vector<int>> out;
  for (auto& [rt, lst] : by_root) out.push_back(lst);
  return out;
}

bool part_is_tree(const Graph& g, const std::vector<int>& es) {
  if (es.empty()) return false;
  DsuUndo d(g.vertex_count);
  for (int e : es)
    if (!d.unite(g.edges[e].first, g.edges[e].second)) return false;
  int root = d.find(g.edges[es[0]].first);
  for (int e : es)
    if (d.find(g.edges[e].first) != root) return false;
  return true;
}

}  // namespace

TreeCover construct_cover_element(const Ctx& ctx, const ElementReport& rep,
                                  bool want_proper) {
  const Element& el = rep.elem;
  const Element& r = rep.residual;
  if (want_proper && !rep.proper)
    throw InternalInvariant("proper cover requested but none exists");
  const Plan& pl =
      want_proper && rep.has_proper_plan ? rep.proper_plan : rep.plan;

  // residual color classes
  std::vector<std::vector<int>> classes;
  if (rep.residual_tau == 1) {
    classes.push_back(residual_edges(r));
  } else if (pl.doubling) {
    int n = r.n_spine();
    std::vector<int> t1, t2;
    std::vector<char> seg(r.k_edges(), 0);
    if (r.closed)
      for (int i = pl.seg_lo; i != pl.seg_hi; i = (i + 1) % n) seg[i] = 1;
    else
      for (int i = pl.seg_lo; i < pl.seg_hi; ++i) seg[i] = 1;
    for (int i = 0; i < r.k_edges(); ++i)
      (seg[i] ? t1 : t2).push_back(r.spine_edges[i]);
    for (const Chord& c : r.chords) t2.push_back(c.edge);
    classes.push_back(t1);
    classes.push_back(t2);
  } else {
    ColorGoal goal;
    std::set<int> sites_pos;
    for (const Site& st : rep.sites) sites_pos.insert(st.pos);
    for (int s : pl.served_sites) {
      int p = r.pos_of_vertex(rep.sites[s].vertex);
      if (p < 0) throw InternalInvariant("served site left the residual");
      goal.serve_pos.push_back(p);
    }
    for (int v : pl.forced_vertices) {
      int p = r.pos_of_vertex(v);
      if (p >= 0) goal.serve_pos.push_back(p);
    }
    if (want_proper) {
      if (r.closed)
        goal.want_anchor = true;
      else
        goal.want_ends = true;
    }
    std::vector<int> sc, cc;
    if (!color_residual(r, sites_pos, goal, sc, cc))
      throw InternalInvariant("residual 2-coloring failed");
    std::vector<int> c0, c1;
    for (int i = 0; i < r.k_edges(); ++i)
      (sc[i] == 0 ? c0 : c1).push_back(r.spine_edges[i]);
    for (size_t j = 0; j < r.chords.size(); ++j)
      (cc[j] == 0 ? c0 : c1).push_back(r.chords[j].edge);
    classes.push_back(c0);
    classes.push_back(c1);
  }

  PartSet parts(ctx.g);
  for (auto& cl : classes)
    for (auto& comp : real_components(ctx.g, cl)) parts.add(comp);

  int cs = -1;  // chain-split child for proper covers of path residuals
  if (want_proper && rep.residual_tau == 1) cs = rep.chain_split_child;

  // a proper cover of a path residual splits the single chain at a bundle site
  if (cs >= 0 && !rep.cands[cs].is_run) {
    int x = rep.site_vertex[cs];
    int pos = r.pos_of_vertex(x);
    if (pos <= 0 || pos >= r.n_spine() - 1)
      throw InternalInvariant("chain split at a path end");
    int el_ = r.spine_edges[pos - 1], er_ = r.spine_edges[pos];
    int pa = parts.part_of(el_), pb = parts.part_of(er_);
    if (pa == pb) {
      std::map<int, int> idx_of;
      for (int i = 0; i < r.k_edges(); ++i) idx_of[r.spine_edges[i]] = i;
      std::vector<int> left, right;
      for (int e : parts.ps[pa].edges)
        (idx_of[e] < pos ? left : right).push_back(e);
      parts.ps[pa].edges = left;
      parts.ps[pa].verts.clear();
      for (int e : left) {
        parts.ps[pa].verts.insert(ctx.g.edges[e].first);
        parts.ps[pa].verts.insert(ctx.g.edges[e].second);
        parts.of_edge[e] = pa;
      }
      parts.add(right);
    }
  }

  std::set<int> served(pl.served_sites.begin(), pl.served_sites.end());
  for (int i = 0; i < rep.n; ++i) {
    const SubCand& cd = rep.cands[i];
    bool is_served = served.count(rep.cand_site[i]) || i == cs;
    bool cw = is_served && rep.children[i].proper;
    TreeCover sub = construct_cover_element(ctx, rep.children[i], cw);
    if (!cd.is_run) {
      int x = rep.site_vertex[i];
      auto at = parts.with_vertex(x);
      if (at.empty()) throw InternalInvariant("bundle site vanished");
      std::vector<int> c_at, c_rest;
      for (int j = 0; j < (int)sub.parts.size(); ++j) {
        bool has = false;
        for (int e : sub.parts[j])
          if (ctx.g.edges[e].first == x || ctx.g.edges[e].second == x)
            has = true;
        (has ? c_at : c_rest).push_back(j);
      }
      if (c_at.empty()) throw InternalInvariant("child misses its anchor");
      int take = (cw && at.size() >= 2 && c_at.size() >= 2) ? 2 : 1;
      for (int t = 0; t < take; ++t)
        parts.absorb(at[t], parts.add(sub.parts[c_at[t]]));
      for (int t = take; t < (int)c_at.size(); ++t)
        parts.add(sub.parts[c_at[t]]);
      for (int j : c_rest) parts.add(sub.parts[j]);
    } else {
      int m = rep.site_vertex[i];
      int pm = r.pos_of_vertex(m);
      if (pm < 0) throw InternalInvariant("run site vanished");
      int n = r.n_spine();
      int e_in = r.spine_edges[(pm - 1 + n) % n];
      int e_out = r.spine_edges[pm];
      int p1 = parts.part_of(e_in), p2 = parts.part_of(e_out);
      if (p1 == p2) throw InternalInvariant("run attachments in one part");
      const Element& ce = rep.children[i].elem;
      int u = ce.spine.front(), v = ce.spine.back();
      std::vector<char> has_u(sub.parts.size(), 0), has_v(sub.parts.size(), 0);
      for (int j = 0; j < (int)sub.parts.size(); ++j)
        for (int e : sub.parts[j]) {
          if (ctx.g.edges[e].first == u || ctx.g.edges[e].second == u)
            has_u[j] = 1;
          if (ctx.g.edges[e].first == v || ctx.g.edges[e].second == v)
            has_v[j] = 1;
        }
      int cu = -1, cv = -1;
      for (int a = 0; a < (int)sub.parts.size(); ++a)
        for (int b = 0; b < (int)sub.parts.size(); ++b)
          if (has_u[a] && has_v[b] && a != b && cu < 0) cu = a, cv = b;
      if (cu < 0)  // every u-part is the lone v-part too
        for (int a = 0; a < (int)sub.parts.size(); ++a)
          if (has_u[a] && has_v[a] && cu < 0) cu = cv = a;
      if (cu < 0) throw InternalInvariant("run child misses an end");
      if (cu != cv) {
        parts.absorb(p1, parts.add(sub.parts[cu]));
        parts.absorb(p2, parts.add(sub.parts[cv]));
        for (int j = 0; j < (int)sub.parts.size(); ++j)
          if (j != cu && j != cv) parts.add(sub.parts[j]);
      } else {
        // child's cover keeps u and v together: the chain P1 - child - P2
        // collapses into a single tree
        parts.absorb(p1, parts.add(sub.parts[cu]));
        parts.absorb(p1, p2);
        for (int j = 0; j < (int)sub.parts.size(); ++j)
          if (j != cu) parts.add(sub.parts[j]);
      }
    }
  }

  TreeCover out;
  for (auto& p : parts.ps)
    if (p.alive) {
      std::vector<int> es = p.edges;
      std::sort(es.begin(), es.end());
      out.parts.push_back(es);
    }
  std::sort(out.parts.begin(), out.parts.end());
  if ((int)out.parts.size() != rep.tau)
    throw InternalInvariant("cover size disagrees with the tree number");
  if (!validate_cover(ctx.g, element_edges(ctx, el), out))
    throw InternalInvariant("constructed cover is not a tree partition");

  // end nodes in different trees?
  int eu = el.spine[el.end_u_pos()], ev = el.spine[el.end_v_pos()];
  std::vector<int> pu, pv;
  for (int j = 0; j < (int)out.parts.size(); ++j)
    for (int e : out.parts[j]) {
      if (ctx.g.edges[e].first == eu || ctx.g.edges[e].second == eu)
        if (pu.empty() || pu.back() != j) pu.push_back(j);
      if (ctx.g.edges[e].first == ev || ctx.g.edges[e].second == ev)
        if (pv.empty() || pv.back() != j) pv.push_back(j);
    }
  if (eu == ev) {
    out.proper = pu.size() >= 2;
  } else {
    out.proper = !(pu.size() == 1 && pv.size() == 1 && pu[0] == pv[0]);
  }
  if (want_proper && !out.proper)
    throw InternalInvariant("cover came out improper");
  return out;
}

TreeCover construct_cover(const Ctx& ctx) {
  return construct_cover_element(ctx, analyze_graph(ctx), false);
}

bool validate_cover(const Graph& g, const std::vector<int>& edge_set,
                    const TreeCover& cover) {
  std::vector<int> all;
  for (const auto& p : cover.parts) {
    if (!part_is_tree(g, p)) return false;
    all.insert(all.end(), p.begin(), p.end());
  }
  std::sort(all.begin(), all.end());
  std::vector<int> want = edge_set;
  std::sort(want.begin(), want.end());
  return all == want;
}

int arboricity_class(const Graph& g) {
  DsuUndo d(g.vertex_count);
  for (auto& [u, v] : g.edges)
    if (!d.unite(u, v)) return 2;
  return 1;
}

}  // namespace tc
