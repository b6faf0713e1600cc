#include "soplab/groups/todd_coxeter.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

#include "soplab/error.hpp"

namespace soplab::groups {

namespace {

using ColWord = std::vector<int>;

// Coset table under construction. Dead cosets keep their `next_` pointer so a
// scan positioned on a coset that dies can still find its successor; their
// indices are only recycled once the scan has moved past them.
class Enumerator {
 public:
  Enumerator(int ncols, std::size_t max_cosets) : ncols_(ncols), max_(max_cosets) {}

  int ncols() const { return ncols_; }
  bool alive(int c) const { return alive_[static_cast<std::size_t>(c)] != 0; }
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * ncols_ + x]; }
  std::size_t live() const { return live_; }
  std::size_t total_defined() const { return total_; }
  std::size_t max_live() const { return max_live_; }
  std::size_t modifications() const { return mods_; }
  std::size_t capacity() const { return alive_.size(); }

  void track_deductions() { track_ = true; }
  std::vector<std::pair<int, int>>& deductions() { return deductions_; }

  int new_coset() {
    if (live_ >= max_) return -1;
    int idx;
    if (!free_.empty()) {
      idx = free_.top();
      free_.pop();
    } else {
      idx = static_cast<int>(alive_.size());
      alive_.push_back(0);
      parent_.push_back(0);
      next_.push_back(-1);
      prev_.push_back(-1);
      table_.resize(table_.size() + static_cast<std::size_t>(ncols_));
    }
    auto const u = static_cast<std::size_t>(idx);
    std::fill_n(table_.begin() + static_cast<std::ptrdiff_t>(u * ncols_), ncols_, -1);
    alive_[u] = 1;
    parent_[u] = idx;
    next_[u] = -1;
    prev_[u] = last_;
    if (last_ >= 0) next_[static_cast<std::size_t>(last_)] = idx;
    last_ = idx;
    ++live_;
    ++total_;
    max_live_ = std::max(max_live_, live_);
    return idx;
  }

  bool define(int c, int x) {
    int const d = new_coset();
    if (d < 0) return false;
    set(c, x, d);
    return true;
  }

  // First live coset after c in definition order (c may be dead).
  int next_live(int c) const {
    int d = next_[static_cast<std::size_t>(c)];
    while (d >= 0 && !alive(d)) d = next_[static_cast<std::size_t>(d)];
    return d;
  }

  void release_pending() {
    for (int e : pending_) free_.push(e);
    pending_.clear();
  }

  // Returns false when a definition was needed but the table is full.
  bool scan_and_fill(int c, ColWord const& w) { return scan_impl(c, w, true); }
  void scan(int c, ColWord const& w) { scan_impl(c, w, false); }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int const e = queue[i];
      unlink(e);
      for (int x = 0; x < ncols_; ++x) {
        int const f = at(e, x);
        if (f < 0) continue;
        at(f, x ^ 1) = -1;
        int const e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, x ^ 1) >= 0) {
          merge(e1, at(f1, x ^ 1), queue);
        } else {
          set(e1, x, f1);
        }
      }
      pending_.push_back(e);
    }
    ++mods_;
  }

  // Live cosets in definition order.
  std::vector<int> live_list() const {
    std::vector<int> out;
    for (int c = 0; c >= 0; c = next_[static_cast<std::size_t>(c)]) out.push_back(c);
    return out;
  }

 private:
  void set(int c, int x, int d) {
    at(c, x) = d;
    at(d, x ^ 1) = c;
    ++mods_;
    if (track_) deductions_.emplace_back(c, x);
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      int const up = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = up;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    int const ra = rep(a), rb = rep(b);
    if (ra == rb) return;
    int const lo = std::min(ra, rb), hi = std::max(ra, rb);
    parent_[static_cast<std::size_t>(hi)] = lo;
    queue.push_back(hi);
  }

  void unlink(int e) {
    auto const u = static_cast<std::size_t>(e);
    alive_[u] = 0;
    --live_;
    int const p = prev_[u], n = next_[u];
    next_[static_cast<std::size_t>(p)] = n;  // coset 0 never dies, so p exists
    if (n >= 0)
      prev_[static_cast<std::size_t>(n)] = p;
    else
      last_ = p;
  }

  bool scan_impl(int c, ColWord const& w, bool fill) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && at(b, w[j] ^ 1) >= 0) b = at(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        set(f, w[i], b);
        return true;
      }
      if (!fill) return true;
      if (!define(f, w[i])) return false;
    }
  }

  int ncols_;
  std::size_t max_;
  std::vector<int> table_;
  std::vector<char> alive_;
  std::vector<int> parent_, next_, prev_;
  std::priority_queue<int, std::vector<int>, std::greater<int>> free_;
  std::vector<int> pending_;
  int last_ = -1;
  std::size_t live_ = 0, total_ = 0, max_live_ = 0, mods_ = 0;
  bool track_ = false;
  std::vector<std::pair<int, int>> deductions_;
};

ColWord to_cols(GroupWord const& w, std::map<GenSymbol, int> const& col) {
  ColWord out;
  for (auto const& l : w.letters()) out.push_back(col.at(l.gen) * 2 + (l.exp < 0 ? 1 : 0));
  return out;
}

struct Problem {
  std::vector<ColWord> relators;
  std::vector<ColWord> subgroup;
};

// Scans every relator at every live coset without defining anything.
void lookahead(Enumerator& e, Problem const& p) {
  for (auto const& s : p.subgroup) e.scan(0, s);
  for (int c = 0; c >= 0; c = e.next_live(c))
    for (auto const& r : p.relators) {
      if (!e.alive(c)) break;
      e.scan(c, r);
    }
}

// Fills with lookahead whenever the table is full; false means overflow.
bool fill(Enumerator& e, Problem const& p, int c, ColWord const& w) {
  while (!e.scan_and_fill(c, w)) {
    std::size_t const before = e.live();
    lookahead(e, p);
    if (e.live() >= before) return false;
    if (!e.alive(c)) return true;
  }
  return true;
}

bool complete(Enumerator& e, Problem const& p) {
  for (int c : e.live_list()) {
    for (int x = 0; x < e.ncols(); ++x)
      if (e.at(c, x) < 0) return false;
    for (auto const& r : p.relators) {
      int d = c;
      for (int x : r) d = e.at(d, x);
      if (d != c) return false;
    }
  }
  for (auto const& s : p.subgroup) {
    int d = 0;
    for (int x : s) d = e.at(d, x);
    if (d != 0) return false;
  }
  return true;
}

bool run_hlt(Enumerator& e, Problem const& p) {
  e.new_coset();
  do {
    for (auto const& s : p.subgroup)
      if (!fill(e, p, 0, s)) return false;
    for (int c = 0; c >= 0;) {
      for (auto const& r : p.relators) {
        if (!fill(e, p, c, r)) return false;
        if (!e.alive(c)) break;
      }
      for (int x = 0; x < e.ncols() && e.alive(c); ++x)
        if (e.at(c, x) < 0 && !fill(e, p, c, ColWord{x, x ^ 1})) return false;
      c = e.next_live(c);
      e.release_pending();
    }
  } while (!complete(e, p));
  return true;
}

bool run_felsch(Enumerator& e, Problem const& p) {
  // Cyclic rotations of every relator and its inverse, keyed by first letter.
  std::vector<std::vector<ColWord>> rotations(static_cast<std::size_t>(e.ncols()));
  for (auto const& r : p.relators) {
    ColWord inv_tmp;
    for (auto it = r.rbegin(); it != r.rend(); ++it) inv_tmp.push_back(*it ^ 1);
    ColWord const inv = std::move(inv_tmp);
    for (auto const* w : {&r, &inv})
      for (std::size_t i = 0; i < w->size(); ++i) {
        ColWord rot(w->begin() + static_cast<std::ptrdiff_t>(i), w->end());
        rot.insert(rot.end(), w->begin(), w->begin() + static_cast<std::ptrdiff_t>(i));
        auto& bucket = rotations[static_cast<std::size_t>(rot[0])];
        if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) bucket.push_back(rot);
      }
  }
  e.track_deductions();
  e.new_coset();
  auto process = [&] {
    auto& stack = e.deductions();
    while (!stack.empty()) {
      auto const [a, x] = stack.back();
      stack.pop_back();
      if (!e.alive(a)) continue;
      for (auto const& rot : rotations[static_cast<std::size_t>(x)]) {
        if (!e.alive(a)) break;
        e.scan(a, rot);
      }
      if (!e.alive(a)) continue;
      int const b = e.at(a, x);
      if (b < 0) continue;
      for (auto const& rot : rotations[static_cast<std::size_t>(x ^ 1)]) {
        if (!e.alive(b)) break;
        e.scan(b, rot);
      }
    }
    for (auto const& s : p.subgroup) e.scan(0, s);
  };
  for (auto const& s : p.subgroup)
    if (!fill(e, p, 0, s)) return false;
  int c = 0;
  while (true) {
    process();
    e.release_pending();
    if (c < 0 || !e.alive(c)) c = 0;
    int x = -1;
    for (; c >= 0; c = e.next_live(c)) {
      for (int y = 0; y < e.ncols(); ++y)
        if (e.at(c, y) < 0) {
          x = y;
          break;
        }
      if (x >= 0) break;
    }
    if (c < 0) {
      std::size_t const mods = e.modifications();
      lookahead(e, p);
      process();
      if (e.modifications() == mods && complete(e, p)) return true;
      c = 0;
      continue;
    }
    if (!e.define(c, x)) {
      lookahead(e, p);
      process();
      e.release_pending();
      if (!e.alive(c) || e.at(c, x) >= 0) continue;
      if (!e.define(c, x)) return false;
    }
  }
}

}  // namespace

int CosetTable::trace(int coset, GroupWord const& w) const {
  std::map<GenSymbol, int> col;
  for (std::size_t g = 0; g < generators.size(); ++g) col[generators[g]] = static_cast<int>(g);
  for (auto const& l : w.letters()) {
    if (coset < 0 || static_cast<std::size_t>(coset) >= rows.size()) return -1;
    auto it = col.find(l.gen);
    if (it == col.end()) return -1;
    coset = rows[static_cast<std::size_t>(coset)]
                [static_cast<std::size_t>(it->second * 2 + (l.exp < 0))];
  }
  return coset;
}

std::string CosetTable::status_text() const {
  return closed() ? "Closed(" + std::to_string(index) + ")"
                  : "Overflow(" + std::to_string(limit) + ")";
}

CosetTable todd_coxeter(Presentation const& pres, std::vector<GroupWord> const& subgroup,
                        std::size_t max_cosets, Strategy strategy) {
  if (max_cosets == 0) fail(ErrorKind::Range, "max_cosets must be at least 1");
  pres.validate();
  std::map<GenSymbol, int> col;
  for (std::size_t g = 0; g < pres.generators.size(); ++g)
    col[pres.generators[g]] = static_cast<int>(g);

  Problem p;
  for (auto const& r : pres.relators) {
    auto const c = cyclic_reduce(r);
    if (!c.empty()) p.relators.push_back(to_cols(c, col));
  }
  for (auto const& s : subgroup) {
    for (auto const& l : s.letters())
      if (!col.contains(l.gen))
        fail(ErrorKind::Structural, "subgroup generator uses undeclared generator " + l.gen);
    auto const r = free_reduce(s);
    if (!r.empty()) p.subgroup.push_back(to_cols(r, col));
  }

  int const ncols = static_cast<int>(pres.generators.size()) * 2;
  Enumerator e(ncols, max_cosets);
  bool const closed = strategy == Strategy::Hlt ? run_hlt(e, p) : run_felsch(e, p);

  CosetTable t;
  t.limit = max_cosets;
  t.generators = pres.generators;
  t.total_defined = e.total_defined();
  t.max_live = e.max_live();
  if (!closed) return t;

  // Standardize by breadth-first numbering from coset 0.
  std::map<int, int> number{{0, 0}};
  std::vector<int> order{0};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int x = 0; x < ncols; ++x) {
      int const d = e.at(order[i], x);
      if (number.emplace(d, static_cast<int>(order.size())).second) order.push_back(d);
    }
  t.status = TableStatus::Closed;
  t.index = order.size();
  t.rows.assign(order.size(), std::vector<int>(static_cast<std::size_t>(ncols)));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int x = 0; x < ncols; ++x)
      t.rows[i][static_cast<std::size_t>(x)] = number.at(e.at(order[i], x));

  if (auto const defect = verify_coset_table(t, pres, subgroup); !defect.empty())
    fail(ErrorKind::Consistency, "coset table failed verification: " + defect);
  return t;
}

std::string verify_coset_table(CosetTable const& table, Presentation const& pres,
                               std::vector<GroupWord> const& subgroup) {
  if (!table.closed()) return "table is not closed";
  auto const n = table.rows.size();
  auto const ncols = pres.generators.size() * 2;
  if (n != table.index || n == 0) return "index does not match row count";
  if (table.generators != pres.generators) return "generator lists differ";
  for (std::size_t c = 0; c < n; ++c) {
    if (table.rows[c].size() != ncols) return "row " + std::to_string(c) + " has wrong width";
    for (std::size_t x = 0; x < ncols; ++x) {
      int const d = table.rows[c][x];
      if (d < 0 || static_cast<std::size_t>(d) >= n)
        return "entry out of range at coset " + std::to_string(c);
      if (table.rows[static_cast<std::size_t>(d)][x ^ 1] != static_cast<int>(c))
        return "columns not inverse at coset " + std::to_string(c);
    }
  }
  for (std::size_t c = 0; c < n; ++c)
    for (auto const& r : pres.relators)
      if (table.trace(static_cast<int>(c), r) != static_cast<int>(c))
        return "relator " + to_string(r) + " does not close at coset " + std::to_string(c);
  for (auto const& s : subgroup)
    if (table.trace(0, s) != 0) return "subgroup generator " + to_string(s) + " moves coset 0";
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    auto const c = stack.back();
    stack.pop_back();
    for (int d : table.rows[c])
      if (!seen[static_cast<std::size_t>(d)]) {
        seen[static_cast<std::size_t>(d)] = 1;
        stack.push_back(static_cast<std::size_t>(d));
      }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return "unreachable coset";
  return {};
}

}  // namespace soplab::groups
