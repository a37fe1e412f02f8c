#include "catpascal/partitions.hpp"

#include "catpascal/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace catpascal {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

int to_int(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw DomainError("expected a number, got '" + s + "'");
  return std::stoi(s);
}

constexpr std::string_view kEmpty = "∅";

void sort_blocks(PlainPartition& p) {
  for (auto& b : p) std::sort(b.begin(), b.end());
  std::sort(p.begin(), p.end());
}

std::string blocks_str(const PlainPartition& p) {
  if (p.empty()) return std::string(kEmpty);
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    s += i ? "|{" : "{";
    for (std::size_t j = 0; j < p[i].size(); ++j) s += (j ? "," : "") + std::to_string(p[i][j]);
    s += "}";
  }
  return s;
}

PlainPartition parse_blocks(const std::string& s) {
  PlainPartition p;
  if (s == kEmpty) return p;
  for (auto& part : split(s, '|')) {
    if (part.size() < 2 || part.front() != '{' || part.back() != '}')
      throw DomainError("bad block '" + part + "'");
    Block b;
    auto inner = part.substr(1, part.size() - 2);
    if (!trim(inner).empty())
      for (auto& x : split(inner, ',')) b.push_back(to_int(x));
    if (b.empty()) throw DomainError("empty block");
    p.push_back(std::move(b));
  }
  sort_blocks(p);
  return p;
}

// Calls emit with the block assignment (restricted growth string) of every
// set partition of n points.
void growth_strings(int n, const std::function<void(const std::vector<int>&, int)>& emit) {
  std::vector<int> a(at(n), 0);
  std::function<void(int, int)> go = [&](int i, int blocks) {
    if (i == n) {
      emit(a, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[at(i)] = b;
      go(i + 1, std::max(blocks, b + 1));
    }
  };
  go(0, 0);
}

}  // namespace

// ---------------------------------------------------------------- plain partitions

std::vector<PlainPartition> enum_set_partitions(int n) {
  if (n < 0) throw DomainError("negative size");
  std::vector<PlainPartition> out;
  growth_strings(n, [&](const std::vector<int>& a, int blocks) {
    PlainPartition p(at(blocks));
    for (int i = 0; i < n; ++i) p[at(a[at(i)])].push_back(i + 1);
    out.push_back(std::move(p));
  });
  return out;
}

BigInt bell(int n) {
  if (n < 0) throw DomainError("negative size");
  std::vector<BigInt> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> next{row.back()};
    for (auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

std::vector<PlainPartition> enum_pair_partitions(int n) {
  std::vector<PlainPartition> out;
  if (n < 0 || n % 2) return out;
  PlainPartition cur;
  std::vector<bool> used(at(n) + 1, false);
  std::function<void()> go = [&] {
    int first = 1;
    while (first <= n && used[at(first)]) ++first;
    if (first > n) {
      out.push_back(cur);
      return;
    }
    used[at(first)] = true;
    for (int j = first + 1; j <= n; ++j) {
      if (used[at(j)]) continue;
      used[at(j)] = true;
      cur.push_back({first, j});
      go();
      cur.pop_back();
      used[at(j)] = false;
    }
    used[at(first)] = false;
  };
  go();
  return out;
}

// ---------------------------------------------------------------- two-row partitions

TwoRowPartition canonical(TwoRowPartition p) {
  for (auto& b : p) std::sort(b.begin(), b.end());
  std::sort(p.begin(), p.end());
  return p;
}

std::string partition_str(const TwoRowPartition& p) {
  if (p.empty()) return std::string(kEmpty);
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    s += i ? "|{" : "{";
    for (std::size_t j = 0; j < p[i].size(); ++j)
      s += (j ? "," : "") + std::to_string(p[i][j].v) + (p[i][j].primed ? "'" : "");
    s += "}";
  }
  return s;
}

TwoRowPartition parse_partition(std::string_view text) {
  TwoRowPartition p;
  auto t = trim(text);
  if (t == kEmpty) return p;
  for (auto& part : split(t, '|')) {
    if (part.size() < 2 || part.front() != '{' || part.back() != '}')
      throw DomainError("bad block '" + part + "'");
    std::vector<Pt> b;
    for (auto x : split(part.substr(1, part.size() - 2), ',')) {
      bool primed = !x.empty() && x.back() == '\'';
      if (primed) x.pop_back();
      b.push_back({primed, to_int(x)});
    }
    p.push_back(std::move(b));
  }
  return canonical(p);
}

namespace {

// Partitions of an arbitrary list of "atoms", each atom standing for a group
// of points.
std::vector<TwoRowPartition> partitions_of_atoms(const std::vector<std::vector<Pt>>& atoms) {
  std::vector<TwoRowPartition> out;
  growth_strings(static_cast<int>(atoms.size()), [&](const std::vector<int>& a, int blocks) {
    TwoRowPartition p(at(blocks));
    for (std::size_t i = 0; i < atoms.size(); ++i)
      for (auto& x : atoms[i]) p[at(a[i])].push_back(x);
    out.push_back(canonical(std::move(p)));
  });
  return out;
}

std::vector<std::vector<Pt>> two_rows(int n) {
  std::vector<std::vector<Pt>> atoms;
  for (int i = 1; i <= n; ++i) atoms.push_back({{false, i}});
  for (int i = 1; i <= n; ++i) atoms.push_back({{true, i}});
  return atoms;
}

}  // namespace

std::vector<TwoRowPartition> enum_cp(int n) { return partitions_of_atoms(two_rows(n)); }

std::vector<TwoRowPartition> enum_cp_plus(int n) {
  auto atoms = two_rows(n);
  atoms.push_back({{false, n + 1}, {true, n + 1}});
  return partitions_of_atoms(atoms);
}

std::vector<TwoRowPartition> enum_cbr(int n) {
  auto atoms = two_rows(n);
  std::vector<TwoRowPartition> out;
  for (auto& pp : enum_pair_partitions(2 * n)) {
    TwoRowPartition p;
    for (auto& b : pp) p.push_back({atoms[at(b[0] - 1)][0], atoms[at(b[1] - 1)][0]});
    out.push_back(canonical(std::move(p)));
  }
  return out;
}

// ---------------------------------------------------------------- tableaux

Shape shape_of(const Tableau& t) {
  Shape s;
  for (auto& r : t) s.push_back(static_cast<int>(r.size()));
  return s;
}

bool is_standard_tableau(const Tableau& t) {
  std::vector<int> all;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (t[r].empty()) return false;
    if (r && t[r].size() > t[r - 1].size()) return false;
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      if (c && t[r][c] <= t[r][c - 1]) return false;
      if (r && t[r][c] <= t[r - 1][c]) return false;
      all.push_back(t[r][c]);
    }
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::vector<int> row_word(const Tableau& t) {
  std::vector<int> w;
  for (auto& r : t) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::vector<Tableau> enum_syt(const Shape& s) {
  const int total = std::accumulate(s.begin(), s.end(), 0);
  std::vector<Tableau> out;
  Tableau t;
  for (int len : s) t.push_back(std::vector<int>(at(len), 0));
  Shape rem = s;
  // place total, total-1, ... into removable corners
  std::function<void(int)> go = [&](int k) {
    if (k == 0) {
      out.push_back(t);
      return;
    }
    for (std::size_t r = 0; r < rem.size(); ++r) {
      if (rem[r] == 0) continue;
      if (r + 1 < rem.size() && rem[r + 1] == rem[r]) continue;
      t[r][at(rem[r] - 1)] = k;
      --rem[r];
      go(k - 1);
      ++rem[r];
    }
  };
  go(total);
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return row_word(a) < row_word(b); });
  return out;
}

std::vector<Shape> partitions_of(int n, int max_rows) {
  std::vector<Shape> out;
  Shape cur;
  std::function<void(int, int)> go = [&](int left, int largest) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (max_rows >= 0 && static_cast<int>(cur.size()) == max_rows) return;
    for (int p = std::min(left, largest); p >= 1; --p) {
      cur.push_back(p);
      go(left - p, p);
      cur.pop_back();
    }
  };
  go(n, n);
  return out;
}

BigInt hook_dim(const Shape& s) {
  long total = 0;
  BigInt hooks = 1;
  for (std::size_t r = 0; r < s.size(); ++r) {
    if (r && s[r] > s[r - 1]) throw DomainError("shape is not a partition");
    for (int c = 0; c < s[r]; ++c) {
      long below = 0;
      for (std::size_t q = r + 1; q < s.size() && s[q] > c; ++q) ++below;
      hooks *= (s[r] - c - 1) + below + 1;
      ++total;
    }
  }
  return factorial(total) / hooks;
}

std::string tableau_str(const Tableau& t) {
  if (t.empty()) return std::string(kEmpty);
  std::string s;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (r) s += "/";
    for (std::size_t c = 0; c < t[r].size(); ++c) s += (c ? "," : "") + std::to_string(t[r][c]);
  }
  return s;
}

Tableau parse_tableau(std::string_view text) {
  Tableau t;
  auto s = trim(text);
  if (s == kEmpty) return t;
  for (auto& row : split(s, '/')) {
    std::vector<int> r;
    for (auto& x : split(row, ',')) r.push_back(to_int(x));
    t.push_back(std::move(r));
  }
  if (!is_standard_tableau(t)) throw DomainError("not a standard tableau: " + s);
  return t;
}

std::pair<Tableau, Tableau> rs_insert(const Permutation& p) {
  Tableau P, Q;
  for (std::size_t i = 0; i < p.size(); ++i) {
    int x = p[i];
    for (std::size_t r = 0;; ++r) {
      if (r == P.size()) {
        P.push_back({x});
        Q.push_back({static_cast<int>(i) + 1});
        break;
      }
      auto it = std::upper_bound(P[r].begin(), P[r].end(), x);
      if (it == P[r].end()) {
        P[r].push_back(x);
        Q[r].push_back(static_cast<int>(i) + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {P, Q};
}

Permutation rs_inverse(const Tableau& P_in, const Tableau& Q_in) {
  if (shape_of(P_in) != shape_of(Q_in)) throw DomainError("tableaux of different shapes");
  Tableau P = P_in, Q = Q_in;
  const int l = static_cast<int>(row_word(P).size());
  Permutation p(at(l));
  for (int i = l; i >= 1; --i) {
    std::size_t r = 0;
    while (r < Q.size() && Q[r].back() != i) ++r;
    if (r == Q.size()) throw DomainError("recording tableau is not standard");
    Q[r].pop_back();
    int x = P[r].back();
    P[r].pop_back();
    if (P[r].empty()) {
      P.pop_back();
      Q.pop_back();
    }
    for (std::size_t rr = r; rr-- > 0;) {
      auto it = std::lower_bound(P[rr].begin(), P[rr].end(), x);
      --it;  // largest entry smaller than x
      std::swap(x, *it);
    }
    p[at(i - 1)] = x;
  }
  return p;
}

// ---------------------------------------------------------------- branching

BranchingBijection::BranchingBijection(Shape nu) : nu_(std::move(nu)) {
  const int l = std::accumulate(nu_.begin(), nu_.end(), 0) + 1;
  auto us = enum_syt(nu_);
  for (int k = 1; k <= l; ++k)
    for (auto& u : us) left_.push_back({k, u});
  std::vector<Shape> covers;
  for (std::size_t r = 0; r <= nu_.size(); ++r) {
    Shape s = nu_;
    if (r == s.size()) s.push_back(0);
    if (r > 0 && s[r] == s[r - 1]) continue;
    ++s[r];
    covers.push_back(s);
  }
  std::sort(covers.begin(), covers.end(), std::greater<>());
  for (auto& s : covers)
    for (auto& t : enum_syt(s)) right_.push_back(t);
  if (left_.size() != right_.size()) throw InternalError("branching rule sizes differ");
}

Tableau BranchingBijection::forward(int k, const Tableau& U) const {
  auto key = std::make_pair(k, row_word(U));
  auto it = std::lower_bound(left_.begin(), left_.end(), key, [](const auto& e, const auto& kk) {
    return std::make_pair(e.first, row_word(e.second)) < kk;
  });
  if (it == left_.end() || it->first != k || it->second != U)
    throw DomainError("(k, U) outside the branching domain");
  return right_[static_cast<std::size_t>(it - left_.begin())];
}

std::pair<int, Tableau> BranchingBijection::backward(const Tableau& T) const {
  auto it = std::find(right_.begin(), right_.end(), T);
  if (it == right_.end()) throw DomainError("tableau does not cover the branching shape");
  return left_[static_cast<std::size_t>(it - right_.begin())];
}

std::shared_ptr<const BranchingBijection> branching_bijection(const Shape& nu) {
  static std::mutex lock;
  static std::map<Shape, std::shared_ptr<const BranchingBijection>> cache;
  std::lock_guard<std::mutex> g(lock);
  auto& slot = cache[nu];
  if (!slot) slot = std::make_shared<const BranchingBijection>(nu);
  return slot;
}

// ---------------------------------------------------------------- half partitions

int ground_size(const HalfPartition& h) {
  int n = 0;
  for (auto& b : h.nonprop) n += static_cast<int>(b.size());
  for (auto& b : h.prop) n += static_cast<int>(b.size());
  return n;
}

void normalize(HalfPartition& h) {
  sort_blocks(h.nonprop);
  sort_blocks(h.prop);
}

std::string half_str(const HalfElement& e) {
  return blocks_str(e.sigma.nonprop) + " ; " + blocks_str(e.sigma.prop) + " ; " +
         tableau_str(e.T);
}

HalfElement parse_half(std::string_view text) {
  auto parts = split(text, ';');
  if (parts.size() != 3) throw DomainError("expected '<blocks> ; <blocks> ; <tableau>'");
  HalfElement e{{parse_blocks(parts[0]), parse_blocks(parts[1])}, parse_tableau(parts[2])};
  const int g = ground_size(e.sigma);
  std::vector<int> seen;
  for (auto* list : {&e.sigma.nonprop, &e.sigma.prop})
    for (auto& b : *list) seen.insert(seen.end(), b.begin(), b.end());
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < g; ++i)
    if (seen[at(i)] != i + 1) throw DomainError("blocks do not partition 1.." + std::to_string(g));
  return e;
}

namespace {

int tableau_size(const Tableau& t) { return static_cast<int>(row_word(t).size()); }

Tableau add_box(const Tableau& t, const Shape& target) {
  Tableau r = t;
  auto s = shape_of(t);
  const int label = tableau_size(t) + 1;
  for (std::size_t i = 0; i < target.size(); ++i) {
    const int have = i < s.size() ? s[i] : 0;
    if (target[i] == have + 1) {
      if (i == r.size()) r.push_back({});
      r[i].push_back(label);
      if (shape_of(r) != target) break;
      return r;
    }
  }
  throw DomainError("target shape does not add one box");
}

bool removes_box(const Shape& from, const Shape& to) {
  long a = std::accumulate(from.begin(), from.end(), 0L);
  long b = std::accumulate(to.begin(), to.end(), 0L);
  if (a != b + 1 || to.size() > from.size()) return false;
  for (std::size_t i = 0; i < from.size(); ++i) {
    const int t = i < to.size() ? to[i] : 0;
    if (t > from[i]) return false;
  }
  return true;
}

std::size_t block_holding(const PlainPartition& p, int x) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (std::find(p[i].begin(), p[i].end(), x) != p[i].end()) return i;
  return p.size();
}

// Propagating blocks in order with the given block (if any) left out.
std::vector<Block> ordinary_props(const HalfPartition& h, std::size_t skip) {
  std::vector<Block> out;
  for (std::size_t i = 0; i < h.prop.size(); ++i)
    if (i != skip) out.push_back(h.prop[i]);
  return out;
}

// Every half partition of 1..n: a set partition with a chosen subset of
// propagating blocks; `forced` points must lie in a propagating block.
void half_partitions(int n, int forced, const std::function<void(const HalfPartition&)>& emit) {
  for (auto& p : enum_set_partitions(n)) {
    const std::size_t b = p.size();
    for (unsigned long mask = 0; mask < (1UL << b); ++mask) {
      HalfPartition h;
      bool ok = true;
      for (std::size_t i = 0; i < b; ++i) {
        const bool prop = (mask >> i) & 1UL;
        if (!prop && forced > 0 && std::find(p[i].begin(), p[i].end(), forced) != p[i].end())
          ok = false;
        (prop ? h.prop : h.nonprop).push_back(p[i]);
      }
      if (ok) emit(h);
    }
  }
}

void with_tableaux(const HalfPartition& h, int l, std::vector<HalfElement>& out) {
  for (auto& s : partitions_of(l))
    for (auto& t : enum_syt(s)) out.push_back({h, t});
}

}  // namespace

VertexLabel bell_vertex(const HalfElement& e, int* layer) {
  if (!is_standard_tableau(e.T)) throw DomainError("not a standard tableau");
  const int g = ground_size(e.sigma);
  const int s = tableau_size(e.T);
  const int l = static_cast<int>(e.sigma.prop.size());
  if (l == s) {
    if (layer) *layer = 2 * g;
    return VertexLabel::partition(shape_of(e.T));
  }
  if (l == s + 1 && block_holding(e.sigma.prop, g) < e.sigma.prop.size()) {
    if (layer) *layer = 2 * g - 1;
    return VertexLabel::partition(shape_of(e.T), true);
  }
  throw DomainError("propagating blocks do not match the tableau");
}

HalfElement bell_edge(const VertexLabel& from, const VertexLabel& to, const HalfElement& e) {
  int layer = 0;
  if (bell_vertex(e, &layer) != from) throw DomainError("element does not lie over the source vertex");
  const int g = ground_size(e.sigma);
  HalfElement r = e;
  if (!from.marked()) {
    if (!to.marked()) throw DomainError("not an edge of the doubled Young graph");
    if (to.data() == from.data()) {
      r.sigma.prop.push_back({g + 1});
    } else {
      if (!removes_box(from.data(), to.data())) throw DomainError("not an edge of the doubled Young graph");
      auto [k, U] = branching_bijection(to.data())->backward(e.T);
      r.sigma.prop[at(k - 1)].push_back(g + 1);
      r.T = U;
    }
  } else {
    if (to.marked()) throw DomainError("not an edge of the doubled Young graph");
    if (to.data() == from.data()) {
      auto d = block_holding(r.sigma.prop, g);
      r.sigma.nonprop.push_back(r.sigma.prop[d]);
      r.sigma.prop.erase(r.sigma.prop.begin() + static_cast<long>(d));
    } else {
      if (!removes_box(to.data(), from.data())) throw DomainError("not an edge of the doubled Young graph");
      r.T = add_box(e.T, to.data());
    }
  }
  normalize(r.sigma);
  return r;
}

std::vector<HalfElement> enum_bell_layer(int m) {
  std::vector<HalfElement> out;
  if (m % 2 == 0) {
    half_partitions(m / 2, 0, [&](const HalfPartition& h) {
      with_tableaux(h, static_cast<int>(h.prop.size()), out);
    });
  } else {
    const int g = (m + 1) / 2;
    half_partitions(g, g, [&](const HalfPartition& h) {
      with_tableaux(h, static_cast<int>(h.prop.size()) - 1, out);
    });
  }
  return out;
}

namespace {

struct Halves {
  HalfPartition first, second;
  Permutation perm;  // over the ordinary propagating blocks
};

// Splits a two-row partition along the rows; a part meeting both rows
// becomes a propagating block on each side.  `distinguished` (if positive)
// names a point whose part is kept out of the permutation.
Halves split_rows(const TwoRowPartition& p, int distinguished) {
  Halves h;
  std::vector<std::pair<Block, Block>> through;
  std::pair<Block, Block> special;
  bool have_special = false;
  for (auto& b : p) {
    Block top, bottom;
    for (auto& x : b) (x.primed ? bottom : top).push_back(x.v);
    if (bottom.empty()) {
      h.first.nonprop.push_back(top);
    } else if (top.empty()) {
      h.second.nonprop.push_back(bottom);
    } else if (distinguished > 0 && top.back() == distinguished &&
               std::find(bottom.begin(), bottom.end(), distinguished) != bottom.end()) {
      special = {top, bottom};
      have_special = true;
    } else {
      through.push_back({top, bottom});
    }
  }
  if (distinguished > 0 && !have_special) throw DomainError("the last points are not joined");
  std::sort(through.begin(), through.end());
  std::vector<Block> bottoms;
  for (auto& [t, b] : through) {
    h.first.prop.push_back(t);
    bottoms.push_back(b);
  }
  std::vector<Block> sorted = bottoms;
  std::sort(sorted.begin(), sorted.end());
  for (auto& b : bottoms)
    h.perm.push_back(static_cast<int>(std::find(sorted.begin(), sorted.end(), b) - sorted.begin()) + 1);
  h.second.prop = sorted;
  if (have_special) {
    h.first.prop.push_back(special.first);
    h.second.prop.push_back(special.second);
  }
  normalize(h.first);
  normalize(h.second);
  return h;
}

TwoRowPartition glue(const HalfElement& bra, const HalfElement& ket, int distinguished) {
  if (shape_of(bra.T) != shape_of(ket.T)) throw DomainError("halves lie over different vertices");
  auto perm = rs_inverse(bra.T, ket.T);
  const std::size_t skip1 = distinguished > 0 ? block_holding(bra.sigma.prop, distinguished)
                                              : bra.sigma.prop.size();
  const std::size_t skip2 = distinguished > 0 ? block_holding(ket.sigma.prop, distinguished)
                                              : ket.sigma.prop.size();
  if (distinguished > 0 && (skip1 == bra.sigma.prop.size() || skip2 == ket.sigma.prop.size()))
    throw DomainError("halves are missing the distinguished block");
  auto tops = ordinary_props(bra.sigma, skip1);
  auto bottoms = ordinary_props(ket.sigma, skip2);
  if (tops.size() != perm.size() || bottoms.size() != perm.size())
    throw DomainError("propagating blocks do not match the tableaux");
  TwoRowPartition p;
  auto joined = [](const Block& t, const Block& b) {
    std::vector<Pt> out;
    for (int x : t) out.push_back({false, x});
    for (int x : b) out.push_back({true, x});
    return out;
  };
  for (auto& b : bra.sigma.nonprop) p.push_back(joined(b, {}));
  for (auto& b : ket.sigma.nonprop) p.push_back(joined({}, b));
  for (std::size_t i = 0; i < perm.size(); ++i) p.push_back(joined(tops[i], bottoms[at(perm[i] - 1)]));
  if (distinguished > 0) p.push_back(joined(bra.sigma.prop[skip1], ket.sigma.prop[skip2]));
  return canonical(p);
}

}  // namespace

std::pair<HalfElement, HalfElement> bell_braket(int m, const TwoRowPartition& p) {
  const int distinguished = m % 2 ? (m + 1) / 2 : 0;
  auto h = split_rows(p, distinguished);
  auto [P, Q] = rs_insert(h.perm);
  return {{h.first, P}, {h.second, Q}};
}

TwoRowPartition bell_compose(int m, const HalfElement& bra, const HalfElement& ket) {
  return glue(bra, ket, m % 2 ? (m + 1) / 2 : 0);
}

VertexLabel brauer_vertex(const HalfElement& e, int* layer) {
  if (!is_standard_tableau(e.T)) throw DomainError("not a standard tableau");
  for (auto& b : e.sigma.nonprop)
    if (b.size() != 2) throw DomainError("non-propagating parts must be pairs");
  for (auto& b : e.sigma.prop)
    if (b.size() != 1) throw DomainError("propagating parts must be singletons");
  if (static_cast<int>(e.sigma.prop.size()) != tableau_size(e.T))
    throw DomainError("singletons do not match the tableau");
  if (layer) *layer = ground_size(e.sigma);
  return VertexLabel::partition(shape_of(e.T));
}

HalfElement brauer_edge(const VertexLabel& from, const VertexLabel& to, const HalfElement& e) {
  int layer = 0;
  if (brauer_vertex(e, &layer) != from) throw DomainError("element does not lie over the source vertex");
  HalfElement r = e;
  if (removes_box(to.data(), from.data())) {
    r.sigma.prop.push_back({layer + 1});
    r.T = add_box(e.T, to.data());
  } else if (removes_box(from.data(), to.data())) {
    auto [k, U] = branching_bijection(to.data())->backward(e.T);
    Block pair = r.sigma.prop[at(k - 1)];
    pair.push_back(layer + 1);
    r.sigma.prop.erase(r.sigma.prop.begin() + (k - 1));
    r.sigma.nonprop.push_back(pair);
    r.T = U;
  } else {
    throw DomainError("not an edge of the Young graph");
  }
  normalize(r.sigma);
  return r;
}

std::vector<HalfElement> enum_brauer_layer(int n) {
  std::vector<HalfElement> out;
  // partial matchings of 1..n
  HalfPartition cur;
  std::vector<bool> used(at(n) + 2, false);
  std::function<void(int)> go = [&](int i) {
    while (i <= n && used[at(i)]) ++i;
    if (i > n) {
      HalfPartition h = cur;
      normalize(h);
      with_tableaux(h, static_cast<int>(h.prop.size()), out);
      return;
    }
    used[at(i)] = true;
    cur.prop.push_back({i});
    go(i + 1);
    cur.prop.pop_back();
    for (int j = i + 1; j <= n; ++j) {
      if (used[at(j)]) continue;
      used[at(j)] = true;
      cur.nonprop.push_back({i, j});
      go(i + 1);
      cur.nonprop.pop_back();
      used[at(j)] = false;
    }
    used[at(i)] = false;
  };
  go(1);
  return out;
}

std::pair<HalfElement, HalfElement> brauer_braket(int, const TwoRowPartition& p) {
  for (auto& b : p)
    if (b.size() != 2) throw DomainError("not a pair partition");
  auto h = split_rows(p, 0);
  auto [P, Q] = rs_insert(h.perm);
  return {{h.first, P}, {h.second, Q}};
}

TwoRowPartition brauer_compose(int, const HalfElement& bra, const HalfElement& ket) {
  return glue(bra, ket, 0);
}

// ---------------------------------------------------------------- families

namespace {

using VertexFn = VertexLabel (*)(const HalfElement&, int*);
using EdgeFn = HalfElement (*)(const VertexLabel&, const VertexLabel&, const HalfElement&);
using LayerFn = std::vector<HalfElement> (*)(int);

std::string render_half(const HalfElement& e) {
  std::ostringstream os;
  os << "non-propagating: " << blocks_str(e.sigma.nonprop) << "\n"
     << "propagating:     " << blocks_str(e.sigma.prop) << "\n";
  if (e.T.empty()) {
    os << "tableau: " << kEmpty << "\n";
  } else {
    os << "tableau:\n";
    for (auto& r : e.T) {
      os << " ";
      for (int x : r) os << " " << x;
      os << "\n";
    }
  }
  return os.str();
}

class HalfFamily : public PascalFamily {
 public:
  HalfFamily(std::string id, RootedGraph g, int cap, VertexFn v, EdgeFn e, LayerFn l)
      : id_(std::move(id)), g_(std::move(g)), cap_(cap), vertex_(v), edge_(e), layer_(l) {}

  std::string id() const override { return id_; }
  const RootedGraph& graph() const override { return g_; }
  int cap() const override { return cap_; }
  Element origin() const override { return wrap(HalfElement{}); }

  std::vector<Element> enumerate_layer(int m) const override {
    std::vector<Element> out;
    for (auto& e : layer_(m)) out.push_back(wrap(e));
    return out;
  }

  Element edge_map(const VertexLabel& source, int key, const Element& x) const override {
    return wrap(edge_(source, g_.target(source, key), parse_half(x.payload)));
  }

  std::pair<int, VertexLabel> classify(const std::string& payload) const override {
    int layer = 0;
    auto v = vertex_(parse_half(payload), &layer);
    return {layer, v};
  }

  std::string render(const Element& x) const override { return render_half(parse_half(x.payload)); }

  Element wrap(const HalfElement& e) const {
    int layer = 0;
    auto v = vertex_(e, &layer);
    return Element{id_, layer, v, half_str(e)};
  }

 private:
  std::string id_;
  RootedGraph g_;
  int cap_;
  VertexFn vertex_;
  EdgeFn edge_;
  LayerFn layer_;
};

using BraketFn = std::pair<HalfElement, HalfElement> (*)(int, const TwoRowPartition&);
using ComposeFn = TwoRowPartition (*)(int, const HalfElement&, const HalfElement&);

class HalfSequence : public CatalanSequence {
 public:
  HalfSequence(std::shared_ptr<const HalfFamily> f, int cap,
               std::function<std::vector<TwoRowPartition>(int)> members, BraketFn b, ComposeFn c)
      : f_(std::move(f)), cap_(cap), members_(std::move(members)), braket_(b), compose_(c) {}

  std::string id() const override { return f_->id(); }
  const PascalFamily& bra() const override { return *f_; }
  const PascalFamily& ket() const override { return *f_; }
  int cap() const override { return cap_; }
  std::vector<std::string> members(int n) const override {
    std::vector<std::string> out;
    for (auto& p : members_(n)) out.push_back(partition_str(p));
    return out;
  }
  std::pair<Element, Element> decompose(int n, const std::string& m) const override {
    auto [a, b] = braket_(n, parse_partition(m));
    return {f_->wrap(a), f_->wrap(b)};
  }
  std::string compose(int n, const Element& bra, const Element& ket) const override {
    return partition_str(compose_(n, parse_half(bra.payload), parse_half(ket.payload)));
  }

 private:
  std::shared_ptr<const HalfFamily> f_;
  int cap_;
  std::function<std::vector<TwoRowPartition>(int)> members_;
  BraketFn braket_;
  ComposeFn compose_;
};

std::shared_ptr<const HalfFamily> bell_half_family() {
  static const auto f = std::make_shared<const HalfFamily>("bell", double_young(), 12,
                                                           bell_vertex, bell_edge, enum_bell_layer);
  return f;
}

std::shared_ptr<const HalfFamily> brauer_half_family() {
  static const auto f = std::make_shared<const HalfFamily>("brauer", young(), 10, brauer_vertex,
                                                           brauer_edge, enum_brauer_layer);
  return f;
}

}  // namespace

std::shared_ptr<const PascalFamily> bell_family() { return bell_half_family(); }
std::shared_ptr<const PascalFamily> brauer_family() { return brauer_half_family(); }

std::shared_ptr<const CatalanSequence> bell_sequence() {
  static const auto s = std::make_shared<const HalfSequence>(
      bell_half_family(), 9,
      [](int n) { return n % 2 ? enum_cp_plus((n - 1) / 2) : enum_cp(n / 2); }, bell_braket,
      bell_compose);
  return s;
}

std::shared_ptr<const CatalanSequence> brauer_sequence() {
  static const auto s = std::make_shared<const HalfSequence>(brauer_half_family(), 6, enum_cbr,
                                                             brauer_braket, brauer_compose);
  return s;
}

// ---------------------------------------------------------------- weight lattice

bool WeightDimReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const WeightDimRow& r) { return r.walks == r.hooks; });
}

WeightDimReport weight_dim_check(int n) {
  WeightDimReport rep;
  rep.n = n;
  auto counts = layer_counts(weight_plus(3), n);
  for (auto& s : partitions_of(n, 3)) {
    Shape full = s;
    full.resize(3, 0);
    WeightDimRow row;
    row.lambda = s;
    row.vertex = VertexLabel::weight({full[0] - full[2], full[1] - full[2]});
    row.walks = counts.at(n, row.vertex);
    row.hooks = hook_dim(s);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace catpascal
