#include "lrdraw/star_strong.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "layouts.hpp"
#include "lrdraw/lr_opt.hpp"
#include "lrdraw/star_weak.hpp"

namespace lrdraw {

int choose_A(int n) {
  if (n <= 1) return 1;
  const double e = std::sqrt(2.0 * std::log2(static_cast<double>(n)));
  const double a = std::floor(static_cast<double>(n) / std::exp2(e));
  return std::max(1, static_cast<int>(a));
}

namespace {

// Spine nodes with a dummy at index 0 so that v[i] is v_i.
struct Spine {
  std::vector<int> v;
  int k() const { return static_cast<int>(v.size()) - 1; }
};

Dir step(TreeView view, const Spine& sp, int i) { return view.left(sp.v[i]) == sp.v[i + 1] ? Dir::Left : Dir::Right; }

// Switch positions i >= a (1-based), each a triple (v_i, v_{i+1}, v_{i+2}).
std::vector<int> switches_from(TreeView view, const Spine& sp, int a) {
  std::vector<int> out;
  for (int i = a; i + 2 <= sp.k(); ++i)
    if (step(view, sp, i) != step(view, sp, i + 1)) out.push_back(i);
  return out;
}

int off_child(TreeView view, const Spine& sp, int i) { return view.child(sp.v[i], opposite(step(view, sp, i))); }

Spine suffix(const Spine& sp, int a) {
  Spine s;
  s.v.push_back(kNone);
  s.v.insert(s.v.end(), sp.v.begin() + a, sp.v.end());
  return s;
}

Spine heavy_spine(TreeView view, const std::vector<int>& size, int v, int A) {
  const int n = size[v];
  Spine sp;
  sp.v = {kNone, v};
  for (int u = v;;) {
    const int l = view.left(u), r = view.right(u);
    const int ls = l == kNone ? 0 : size[l], rs = r == kNone ? 0 : size[r];
    const bool lok = l != kNone && ls >= n - A, rok = r != kNone && rs >= n - A;
    int next = kNone;
    if (lok && rok)
      next = ls > rs ? l : r;
    else if (lok)
      next = l;
    else if (rok)
      next = r;
    if (next == kNone) break;
    sp.v.push_back(next);
    u = next;
  }
  return sp;
}

struct Collector {
  int A;
  std::int64_t small = 0;
  std::int64_t all = 0;
  void add(int n, std::int64_t w) {
    all = std::max(all, w);
    if (n <= A) small = std::max(small, w);
  }
};

class Builder {
 public:
  Builder(const Tree& t, std::vector<StrongCall>* trace)
      : t_(t), size_(t.subtree_sizes()), scratch_(t.size(), kNone), trace_(trace) {
    rules_.rule.assign(t.size(), Rule::Left);
    rules_.left_width.assign(t.size(), 0);
    rules_.right_width.assign(t.size(), 0);
  }

  Piece flat(TreeView view, int v, int thr) {
    const int n = size_[v];
    StrongCall rec{n, 0, 0, "flat", "weak", 0, 0, 0, 0};
    Piece p;
    if (n <= kStrongFloor) {
      prepare_weak(v);
      p = weak_flat_piece(rules_, view, v);
      rec.bound = 4LL * rules_.width(v);
    } else {
      const int A = n > thr ? thr : choose_A(n);
      const Spine sp = heavy_spine(view, size_, v, A);
      const auto sw = switches_from(view, sp, 1);
      Collector col{A};
      rec.A = A;
      rec.s = static_cast<int>(sw.size());
      if (sw.size() <= 7) {
        p = zigzag(view, sp, 1, A, col);
        rec.construction = "zigzag";
        rec.bound = 8 + col.all;
      } else {
        p = flat_cd(view, sp, sw.front(), A, col);
        rec.construction = std::string("cd-") + last_case_;
        rec.bound = 5 + std::max(2 * col.small, col.all);
      }
      rec.max_small = col.small;
      rec.max_all = col.all;
    }
    rec.width = p.width();
    if (trace_) trace_->push_back(rec);
    return p;
  }

  Piece bell(TreeView view, int v, int thr) {
    const int n = size_[v];
    StrongCall rec{n, 0, 0, "bell", "weak", 0, 0, 0, 0};
    Piece p;
    if (n <= kStrongFloor) {
      prepare_weak(v);
      p = weak_bell_piece(rules_, view, v);
      rec.bound = 4LL * rules_.width(v) - 2;
    } else {
      const int A = n > thr ? thr : choose_A(n);
      const Spine sp = heavy_spine(view, size_, v, A);
      const auto sw = switches_from(view, sp, 1);
      Collector col{A};
      rec.A = A;
      rec.s = static_cast<int>(sw.size());
      if (sw.size() <= 4) {
        p = bell_stack(view, sp, A, col);
        rec.construction = "stack";
        rec.bound = 5 + col.all;
      } else {
        p = two_column(view, sp, A, col);
        rec.construction = std::string("two-column-") + last_case_;
        rec.bound = 3 + std::max(2 * col.small, col.all);
      }
      rec.max_small = col.small;
      rec.max_all = col.all;
    }
    rec.width = p.width();
    if (trace_) trace_->push_back(rec);
    return p;
  }

 private:
  Piece fresh_flat(TreeView view, int c, int A, Collector& col) {
    Piece p = flat(view, c, A);
    col.add(size_[c], p.width());
    return p;
  }
  Piece fresh_bell(TreeView view, int c, int A, Collector& col) {
    Piece p = bell(view, c, A);
    col.add(size_[c], p.width());
    return p;
  }

  // Optimal LR rules for v's subtree, written into the shared per-node arrays.
  void prepare_weak(int v) {
    std::vector<int> order;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      scratch_[u] = static_cast<int>(order.size());
      order.push_back(u);
      if (t_.right(u) != kNone) stack.push_back(t_.right(u));
      if (t_.left(u) != kNone) stack.push_back(t_.left(u));
    }
    std::vector<Node> nodes(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int l = t_.left(order[i]), r = t_.right(order[i]);
      nodes[i] = {l == kNone ? kNone : scratch_[l], r == kNone ? kNone : scratch_[r]};
    }
    const LrDrawing lr = optimal_lr_drawing(Tree(std::move(nodes), 0));
    for (std::size_t i = 0; i < order.size(); ++i) {
      rules_.rule[order[i]] = lr.rule[i];
      rules_.left_width[order[i]] = lr.left_width[i];
      rules_.right_width[order[i]] = lr.right_width[i];
      scratch_[order[i]] = kNone;
    }
  }

  // Flat zig-zag drawing of the subtree at v_a, reusing the spine from v_a.
  Piece zigzag(TreeView view, const Spine& sp, int a, int A, Collector& col) {
    const auto sw = switches_from(view, sp, a);
    const int special = sw.empty() ? kNone : sp.v[sw.front() + 2];
    const int next = sw.empty() ? 0 : sw.front() + 2;
    return layout::flat_stack(view, sp.v[a], [&](int c) {
      return c == special ? zigzag(view, sp, next, A, col) : fresh_flat(view, c, A, col);
    });
  }

  Piece bell_stack(TreeView view, const Spine& sp, int A, Collector& col) {
    const int v = sp.v[1];
    Dir d;
    if (sp.k() == 1) {
      const int l = view.left(v), r = view.right(v);
      d = (l == kNone ? 0 : size_[l]) > (r == kNone ? 0 : size_[r]) ? Dir::Left : Dir::Right;
    } else {
      d = step(view, sp, 1);
    }
    const TreeView w = d == Dir::Left ? view : view.flipped();
    const auto sw = switches_from(w, sp, 1);
    const int special = sw.empty() ? kNone : sp.v[sw.front() + 2];
    const int next = sw.empty() ? 0 : sw.front() + 2;
    Piece top;
    if (w.right(v) != kNone) top = fresh_bell(w, w.right(v), A, col);
    Piece p = layout::bell_stack_left(w, v, std::move(top), [&](int c) {
      return c == special ? zigzag(w, sp, next, A, col) : fresh_flat(w, c, A, col);
    });
    if (w.mirrored != view.mirrored) p.reflect_x();
    return p;
  }

  Piece flat_cd(TreeView view, const Spine& sp, int pi1, int A, Collector& col) {
    const TreeView w = step(view, sp, 1) == Dir::Left ? view : view.flipped();
    const int v = sp.v[1];
    const int mid = sp.v[pi1 + 2];
    const int x_root = sp.v[pi1 + 3];
    const Spine xs = suffix(sp, pi1 + 3);
    if (switches_from(w, xs, 1).size() < 5) throw std::logic_error("strong flat: spine suffix has fewer than 5 switches");
    auto draw = [&](int c) -> Piece {
      if (c == kNone) return {};
      if (c == x_root) return two_column(w, xs, A, col);
      return fresh_bell(w, c, A, col);
    };
    Piece c = draw(w.left(mid));
    Piece d = draw(w.right(mid));
    Piece p = layout::flat_cd_layout(w, v, pi1 + 1, std::move(c), std::move(d),
                                     [&](int ch) { return fresh_flat(w, ch, A, col); });
    if (w.mirrored != view.mirrored) p.reflect_y();
    return p;
  }

  // Bell-like drawing along a spine with at least 5 switches: two columns up
  // to the last switch, then the tail on a single column.
  Piece two_column(TreeView view, const Spine& sp, int A, Collector& col) {
    const int K = sp.k();
    const TreeView w = step(view, sp, K - 1) == Dir::Right ? view : view.flipped();
    const auto sw = switches_from(w, sp, 1);
    const int s = static_cast<int>(sw.size());
    if (s < 5) throw std::logic_error("two-column construction needs at least 5 switches");
    auto pi = [&](int i) { return sw[i - 1]; };
    const int ps = pi(s);
    const bool case_a = pi(s - 1) < ps - 1;
    const int detached = case_a ? ps - 1 : pi(s - 2);
    last_case_ = case_a ? 'a' : 'b';

    std::vector<Piece> sub(K);
    std::vector<bool> is_bell(K, false);
    std::int64_t omega = 0;
    for (int i = 1; i <= K - 1; ++i) {
      const int c = off_child(w, sp, i);
      if (c == kNone) continue;
      is_bell[i] = i == 1 || i == pi(1) + 1 || i == ps || i == ps + 1;
      sub[i] = is_bell[i] ? fresh_bell(w, c, A, col) : fresh_flat(w, c, A, col);
      omega = std::max(omega, sub[i].width());
    }

    auto node_x = [&](int i) { return step(w, sp, i) == Dir::Right ? -omega - 2 : -omega - 1; };
    // Subtree of v_i placed beside the two spine columns.
    auto place_side = [&](int i, bool tied) {
      Piece p = std::move(sub[i]);
      if (p.empty()) return p;
      const bool right_side = step(w, sp, i) == Dir::Left;
      if (!is_bell[i] && !right_side) p.rot180();
      if (right_side)
        p.left_at(-omega);
      else
        p.right_at(-omega - 3);
      if (tied) {
        if (is_bell[i])
          p.top_at(-1);
        else
          p.root_row_at(0);
      }
      return p;
    };
    auto block = [&](int i) {
      Piece b = Piece::point(sp.v[i], {node_x(i), 0});
      b.append(place_side(i, true));
      return b;
    };

    std::vector<Piece> blocks;
    auto push_range = [&](int from, int to) {
      for (int i = from; i <= to; ++i) blocks.push_back(block(i));
    };
    Piece last = std::move(sub[ps]);
    if (!last.empty()) last.rot180().left_at(-omega);

    if (case_a) {
      push_range(1, pi(s - 1) - 1);
      push_range(pi(s - 1) + 1, ps - 2);
      blocks.push_back(place_side(detached, false));
      blocks.push_back(std::move(last));
      Piece row = Piece::point(sp.v[ps - 1], {node_x(ps - 1), 0});
      row.add(sp.v[ps], {0, 0});
      blocks.push_back(std::move(row));
      blocks.push_back(block(pi(s - 1)));
    } else {
      push_range(1, detached - 1);
      blocks.push_back(place_side(detached, false));
      blocks.push_back(std::move(last));
      blocks.push_back(Piece::point(sp.v[detached], {node_x(detached), 0}));
      push_range(detached + 1, pi(s - 1) - 1);
      Piece row = block(pi(s - 1));
      row.add(sp.v[ps], {0, 0});
      blocks.push_back(std::move(row));
    }

    // Tail on column -1 with its left subtrees right-aligned at -2.
    auto tail_block = [&](int u, Piece p, bool bell_below) {
      Piece b = Piece::point(u, {-1, 0});
      if (!p.empty()) {
        if (bell_below) {
          p.right_at(-2).top_at(-1);
        } else {
          p.rot180().right_at(-2).root_row_at(0);
        }
        b.append(p);
      }
      return b;
    };
    blocks.push_back(tail_block(sp.v[ps + 1], std::move(sub[ps + 1]), true));
    for (int i = ps + 2; i <= K - 1; ++i) blocks.push_back(tail_block(sp.v[i], std::move(sub[i]), false));
    for (int u = sp.v[K]; u != kNone; u = w.right(u)) {
      Piece p;
      if (w.left(u) != kNone) p = fresh_flat(w, w.left(u), A, col);
      blocks.push_back(tail_block(u, std::move(p), false));
    }

    Piece out = stack_down(std::move(blocks));
    out.set_root(sp.v[1]);
    if (w.mirrored != view.mirrored) out.reflect_x();
    return out;
  }

  const Tree& t_;
  std::vector<int> size_;
  std::vector<int> scratch_;
  LrRules rules_;
  std::vector<StrongCall>* trace_;
  char last_case_ = 'a';  // sub-case of the latest two-column layout
};

void check_bounds(const std::vector<StrongCall>* trace) {
  if (!trace) return;
  for (const auto& c : *trace)
    if (c.width > c.bound)
      throw std::logic_error("strong " + c.kind + " (" + c.construction + ", n=" + std::to_string(c.n) +
                             "): width " + std::to_string(c.width) + " exceeds " + std::to_string(c.bound));
}

}  // namespace

SpineDecomposition spine(const Tree& t, int A) {
  if (A < 1 || A >= t.size()) throw std::invalid_argument("spine: need 1 <= A < n");
  const TreeView view{&t, false};
  const Spine sp = heavy_spine(view, t.subtree_sizes(), t.root(), A);
  SpineDecomposition out;
  for (int i = 1; i <= sp.k(); ++i) {
    out.spine.nodes.push_back(sp.v[i]);
    if (i < sp.k()) {
      out.spine.dirs.push_back(step(view, sp, i));
      out.off_subtrees.push_back(off_child(view, sp, i));
    }
  }
  for (int u = sp.v[sp.k()]; u != kNone; u = t.right(u)) {
    if (!out.right_tail.nodes.empty()) out.right_tail.dirs.push_back(Dir::Right);
    out.right_tail.nodes.push_back(u);
    out.tail_subtrees.push_back(t.left(u));
  }
  out.switches = switches_from(view, sp, 1);
  return out;
}

int count_switches(const SpineDecomposition& sp) {
  int s = 0;
  for (std::size_t i = 0; i + 1 < sp.spine.dirs.size(); ++i) s += sp.spine.dirs[i] != sp.spine.dirs[i + 1];
  return s;
}

std::string strong_trace_csv(const std::vector<StrongCall>& calls) {
  std::ostringstream os;
  os << "n,A,s,kind,case,width,bound\n";
  for (const auto& c : calls)
    os << c.n << ',' << c.A << ',' << c.s << ',' << c.kind << ',' << c.construction << ',' << c.width << ','
       << c.bound << '\n';
  return os.str();
}

GridDrawing strong_flat(const Tree& t, int threshold, std::vector<StrongCall>* trace) {
  if (threshold <= 0) threshold = choose_A(t.size());
  std::vector<StrongCall> local;
  auto* tr = trace ? trace : &local;
  Builder b(t, tr);
  auto d = finish_drawing(b.flat(TreeView{&t, false}, t.root(), threshold), t.size(), DrawingKind::Flat);
  check_bounds(tr);
  return d;
}

GridDrawing strong_bell(const Tree& t, int threshold, std::vector<StrongCall>* trace) {
  if (threshold <= 0) threshold = choose_A(t.size());
  std::vector<StrongCall> local;
  auto* tr = trace ? trace : &local;
  Builder b(t, tr);
  auto d = finish_drawing(b.bell(TreeView{&t, false}, t.root(), threshold), t.size(), DrawingKind::BellLike);
  check_bounds(tr);
  return d;
}

}  // namespace lrdraw
