#include "cx/indexcat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace cx {

namespace {

// Offset of each component's block inside the join, and -1-terminated use of
// augmented components: a component of dimension -1 occupies no positions.
std::vector<int> block_offsets(const std::vector<int>& ks) {
  std::vector<int> off(ks.size());
  int pos = 0;
  for (size_t c = 0; c < ks.size(); ++c) {
    off[c] = pos;
    pos += ks[c] + 1;
  }
  return off;
}

int op_component(const IxObj& x) { return x.is_pair() ? 0 : 1; }

// All monotone maps [m] -> [n].
void all_monos(int m, int n, const std::function<void(const Mono&)>& emit) {
  Mono f(m + 1);
  std::function<void(int, int)> rec = [&](int p, int lo) {
    if (p > m) {
      emit(f);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      f[p] = v;
      rec(p + 1, v);
    }
  };
  rec(0, 0);
}

// Block-respecting monotone maps of joins commuting with the structure maps.
// Every componentwise morphism induces one and vice versa (reversing the op
// block twice preserves monotonicity), so morphisms are enumerated as totals.
void search_totals(const IxObj& x, const IxObj& y,
                   const std::function<bool(const Mono&)>& emit) {
  std::vector<int> offx = block_offsets(x.ks), offy = block_offsets(y.ks);
  int tx = x.total_dim();
  Mono total(tx + 1);
  bool stop = false;
  std::function<void(size_t, int, int)> rec = [&](size_t c, int j, int prev) {
    if (stop) return;
    if (c == x.ks.size()) {
      if (!emit(total)) stop = true;
      return;
    }
    if (x.ks[c] < 0) {
      rec(c + 1, 0, prev);
      return;
    }
    if (j > x.ks[c]) {
      rec(c + 1, 0, prev);
      return;
    }
    if (y.ks[c] < 0) return;  // nonempty component into an empty one
    int p = offx[c] + j;
    int lo = std::max(offy[c], prev), hi = offy[c] + y.ks[c];
    for (int q = lo; q <= hi; ++q) {
      if (y.f[q] != x.f[p]) continue;
      total[p] = q;
      rec(c, j + 1, q);
      if (stop) return;
    }
  };
  rec(0, 0, 0);
}

std::vector<Mono> comps_of_total(const IxObj& x, const IxObj& y, const Mono& total) {
  std::vector<int> offx = block_offsets(x.ks), offy = block_offsets(y.ks);
  int opc = op_component(x);
  std::vector<Mono> comps(x.ks.size());
  for (size_t c = 0; c < x.ks.size(); ++c) {
    if (x.ks[c] < 0) continue;
    Mono& m = comps[c];
    m.resize(x.ks[c] + 1);
    for (int i = 0; i <= x.ks[c]; ++i) {
      if ((int)c == opc)
        m[i] = y.ks[c] - (total[offx[c] + x.ks[c] - i] - offy[c]);
      else
        m[i] = total[offx[c] + i] - offy[c];
    }
  }
  return comps;
}

// Objects over [n] with all components bounded by B.
std::vector<IxObj> enumerate_objects(int n, int B, bool pairs) {
  std::vector<IxObj> out;
  std::vector<std::vector<int>> shapes;
  if (pairs) {
    for (int k0 = 0; k0 <= B; ++k0)
      for (int k1 = -1; k1 <= B; ++k1) shapes.push_back({k0, k1});
  } else {
    for (int k0 = -1; k0 <= B; ++k0)
      for (int k1 = 0; k1 <= B; ++k1)
        for (int k2 = -1; k2 <= B; ++k2) shapes.push_back({k0, k1, k2});
  }
  for (const auto& ks : shapes) {
    IxObj x;
    x.ks = ks;
    all_monos(x.total_dim(), n, [&](const Mono& f) {
      x.f = f;
      out.push_back(x);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

IndexCat build_cat(int n, int B, bool pairs) {
  IndexCat C;
  C.n = n;
  C.B = B;
  C.pairs = pairs;
  C.obs = enumerate_objects(n, B, pairs);
  std::map<IxObj, int> index;
  for (size_t i = 0; i < C.obs.size(); ++i) index[C.obs[i]] = (int)i;

  for (size_t i = 0; i < C.obs.size(); ++i) {
    const IxObj& x = C.obs[i];
    for (size_t c = 0; c < x.ks.size(); ++c) {
      int k = x.ks[c];
      // elementary maps out of component c: target dimension and the map
      std::vector<std::pair<int, Mono>> steps;
      std::vector<std::string> labels;
      if (k < 0) {
        steps.push_back({0, {}});
        labels.push_back("c" + std::to_string(c) + ":aug");
      } else {
        for (int j = 0; j + 1 <= k; ++j) {
          steps.push_back({k - 1, mono_sigma(j, k - 1)});
          labels.push_back("c" + std::to_string(c) + ":s^" + std::to_string(j));
        }
        if (k + 1 <= B)
          for (int j = 0; j <= k + 1; ++j) {
            steps.push_back({k + 1, mono_delta(j, k + 1)});
            labels.push_back("c" + std::to_string(c) + ":d^" + std::to_string(j));
          }
      }
      for (size_t s = 0; s < steps.size(); ++s) {
        IxObj y;
        y.ks = x.ks;
        y.ks[c] = steps[s].first;
        std::vector<Mono> comps(x.ks.size());
        for (size_t c2 = 0; c2 < x.ks.size(); ++c2)
          comps[c2] = x.ks[c2] < 0 ? Mono{} : mono_id(x.ks[c2]);
        comps[c] = steps[s].second;
        Mono total = ix_total(x, y, comps);
        // structure map of the target: determined on the image of the total,
        // free on the missed positions
        int ty = y.total_dim();
        Mono fy(ty + 1, -1);
        bool ok = true;
        for (int p = 0; p <= x.total_dim() && ok; ++p) {
          int q = total[p];
          if (fy[q] >= 0 && fy[q] != x.f[p]) ok = false;
          fy[q] = x.f[p];
        }
        if (!ok) continue;
        std::vector<int> free_pos;
        for (int q = 0; q <= ty; ++q)
          if (fy[q] < 0) free_pos.push_back(q);
        std::function<void(size_t)> fill = [&](size_t fi) {
          if (fi == free_pos.size()) {
            y.f = fy;
            auto it = index.find(y);
            if (it != index.end())
              C.arrs.push_back({(int)i, it->second, comps, labels[s]});
            return;
          }
          int q = free_pos[fi];
          int lo = q == 0 ? 0 : fy[q - 1];
          int hi = q == ty ? n : fy[q + 1];
          if (hi < 0) throw std::logic_error("adjacent free positions");
          for (int v = lo; v <= hi; ++v) {
            fy[q] = v;
            fill(fi + 1);
          }
          fy[q] = -1;
        };
        fill(0);
      }
    }
  }
  return C;
}

std::string obj_str(const IxObj& x) {
  std::string s = "(";
  for (size_t c = 0; c < x.ks.size(); ++c)
    s += (c ? "," : "") + std::to_string(x.ks[c]);
  s += ")|";
  for (int v : x.f) s += std::to_string(v);
  return s;
}

}  // namespace

int IxObj::total_dim() const {
  int t = -1;
  for (int k : ks) t += k + 1;
  return t;
}

Mono ix_total(const IxObj& x, const IxObj& y, const std::vector<Mono>& comps) {
  std::vector<int> offx = block_offsets(x.ks), offy = block_offsets(y.ks);
  int opc = op_component(x);
  Mono total(x.total_dim() + 1);
  for (size_t c = 0; c < x.ks.size(); ++c) {
    if (x.ks[c] < 0) continue;
    if (y.ks[c] < 0) throw std::invalid_argument("ix_total: map into empty factor");
    for (int i = 0; i <= x.ks[c]; ++i) {
      int v = comps[c][i];
      if ((int)c == opc)
        total[offx[c] + x.ks[c] - i] = offy[c] + y.ks[c] - v;
      else
        total[offx[c] + i] = offy[c] + v;
    }
  }
  return total;
}

std::vector<std::vector<Mono>> ix_homs(const IxObj& x, const IxObj& y) {
  std::vector<std::vector<Mono>> out;
  search_totals(x, y, [&](const Mono& t) {
    out.push_back(comps_of_total(x, y, t));
    return true;
  });
  return out;
}

size_t ix_hom_count(const IxObj& x, const IxObj& y, size_t cap) {
  size_t n = 0;
  search_totals(x, y, [&](const Mono&) {
    ++n;
    return cap == 0 || n < cap;
  });
  return n;
}

int IndexCat::find(const IxObj& x) const {
  auto it = std::lower_bound(obs.begin(), obs.end(), x);
  if (it == obs.end() || !(*it == x)) return -1;
  return (int)(it - obs.begin());
}

IndexCat build_delta3_over(int n, int B) {
  if (B < n) throw std::invalid_argument("build_delta3_over: B < n");
  return build_cat(n, B, false);
}

IndexCat build_delta2_over(int n, int B) {
  if (B < n) throw std::invalid_argument("build_delta2_over: B < n");
  return build_cat(n, B, true);
}

bool PinnedGraph::valid() const {
  for (const PinnedArrow& a : arrows) {
    if (a.src < 0 || a.src >= (int)nodes.size()) return false;
    if (a.dst < 0 || a.dst >= (int)nodes.size()) return false;
    if (!is_monotone(a.total)) return false;
    const IxObj& s = nodes[a.src];
    const IxObj& d = nodes[a.dst];
    if ((int)a.total.size() != s.total_dim() + 1) return false;
    for (int p = 0; p <= s.total_dim(); ++p) {
      if (a.total[p] > d.total_dim()) return false;
      if (d.f[a.total[p]] != s.f[p]) return false;
    }
  }
  return true;
}

PinnedGraph distinguished_delta3_1() {
  PinnedGraph G;
  G.n = 1;
  auto node = [&](const std::string& name, std::vector<int> ks, Mono f) {
    G.names.push_back(name);
    G.nodes.push_back({std::move(ks), std::move(f)});
  };
  node("[0]*[0]op*[0]", {0, 0, 0}, {0, 0, 1});   // 0
  node("[0]*[1]op*[0]", {0, 1, 0}, {0, 0, 1, 1});// 1
  node("[0]*[0]op*[0]", {0, 0, 0}, {0, 1, 1});   // 2
  node("[0]*[0]op*[1]", {0, 0, 1}, {0, 0, 0, 1});// 3
  node("[1]", {-1, 1, -1}, {0, 1});              // 4 (bare middle)
  node("[1]*[0]op*[0]", {1, 0, 0}, {0, 1, 1, 1});// 5
  node("[0]*[0]op*[0]", {0, 0, 0}, {0, 0, 0});   // 6
  node("[0]*[0]op*[0]", {0, 0, 0}, {1, 1, 1});   // 7
  G.arrows = {
      {7, 5, "d^0", {1, 2, 3}},
      {6, 3, "d^3", {0, 1, 2}},
      {0, 3, "d^2", {0, 1, 3}},
      {2, 1, "d^1", {0, 2, 3}},
      {0, 1, "d^2", {0, 1, 3}},
      {1, 4, "s^0s^2", {0, 0, 1, 1}},
      {2, 5, "d^1", {0, 2, 3}},
      {2, 4, "s^1", {0, 1, 1}},
      {7, 4, "d^0s^0s^1", {1, 1, 1}},
      {5, 4, "s^1s^2", {0, 1, 1, 1}},
      {0, 4, "s^0", {0, 0, 1}},
      {3, 4, "s^0s^0", {0, 0, 0, 1}},
      {6, 4, "d^1s^0s^1", {0, 0, 0}},
  };
  return G;
}

PinnedGraph distinguished_delta2_1() {
  PinnedGraph G;
  G.n = 1;
  auto node = [&](const std::string& name, std::vector<int> ks, Mono f) {
    G.names.push_back(name);
    G.nodes.push_back({std::move(ks), std::move(f)});
  };
  node("[0]op*[0]", {0, 0}, {0, 1});   // 0
  node("[1]op*[0]", {1, 0}, {0, 1, 1});// 1
  node("[0]op*[0]", {0, 0}, {1, 1});   // 2
  node("[0]op*[1]", {0, 1}, {0, 0, 1});// 3
  node("[1]", {1, -1}, {0, 1});        // 4 (bare op factor)
  node("[0]op*[0]", {0, 0}, {0, 0});   // 5
  G.arrows = {
      {5, 3, "d^2", {0, 1}},
      {0, 3, "d^2", {0, 2}},
      {2, 1, "d^1", {1, 2}},
      {0, 1, "d^1", {0, 2}},
      {1, 4, "s^1", {0, 1, 1}},
      {2, 4, "d^0s^0", {1, 1}},
      {0, 4, "id", {0, 1}},
      {3, 4, "s^0", {0, 0, 1}},
      {5, 4, "d^1s^0", {0, 0}},
  };
  return G;
}

int degree(const IxObj& x) {
  if (x.is_pair()) throw std::invalid_argument("degree: triple expected");
  int k0 = x.ks[0], k1 = x.ks[1];
  if (k1 <= 0) return 0;
  return x.f[k0 + 1 + k1] - x.f[k0 + 1];
}

std::vector<Regular> regular_elements(int n, int d) {
  if (d < 0 || d > n) throw std::invalid_argument("regular_elements: 0 <= d <= n");
  std::vector<Regular> out;
  for (int k0 = 0; k0 <= n - d; ++k0) {
    int k2 = n - d - k0;
    Regular r;
    r.x.ks = {k0, d, k2};
    int t = n + 2;
    r.x.f.resize(t + 1);
    for (int l = 0; l <= t; ++l)
      r.x.f[l] = l <= k0 ? l : (l <= k0 + d + 1 ? l - 1 : l - 2);
    r.section.resize(n + 1);
    for (int m = 0; m <= n; ++m)
      for (int l = 0; l <= t; ++l)
        if (r.x.f[l] == m && l != k0 + 1 && l != k0 + d + 1) {
          r.section[m] = l;
          break;
        }
    out.push_back(std::move(r));
  }
  return out;
}

FinalityReport finality_check(int n, int d, int B) {
  if (B < n + 2) throw std::invalid_argument("finality_check: B < n + 2");
  FinalityReport rep;
  std::vector<Regular> regs = regular_elements(n, d);
  for (const IxObj& x : enumerate_objects(n, B, false)) {
    if (degree(x) != d) continue;
    ++rep.checked;
    int receivers = 0;
    size_t count_at_receiver = 0;
    for (const Regular& r : regs) {
      size_t c = ix_hom_count(x, r.x, 2);
      if (c > 0) {
        ++receivers;
        count_at_receiver = c;
      }
    }
    if (receivers != 1 || count_at_receiver != 1) {
      rep.pass = false;
      rep.violations.push_back(obj_str(x) + " receivers=" +
                               std::to_string(receivers) + " homs=" +
                               std::to_string(count_at_receiver));
    }
  }
  return rep;
}

PiCat build_pi_k(int n, int k, int B) {
  PiCat P;
  P.n = n;
  P.k = k;
  P.B = B;
  std::vector<std::vector<IxObj>> chains;
  for (const IxObj& x : enumerate_objects(n, B, true)) chains.push_back({x});
  for (int level = 1; level <= k; ++level) {
    std::vector<std::vector<IxObj>> next;
    for (const auto& ch : chains) {
      int base = ch.back().ks[1] + 1;
      for (const IxObj& x : enumerate_objects(base, B, true)) {
        auto ext = ch;
        ext.push_back(x);
        next.push_back(std::move(ext));
      }
    }
    chains = std::move(next);
  }
  P.obs = std::move(chains);
  return P;
}

}  // namespace cx
