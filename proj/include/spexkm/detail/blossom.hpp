#pragma once

#include <algorithm>
#include <span>
#include <vector>

namespace spexkm::detail {

/// Edmonds' blossom algorithm, O(n^3). `Adjacency` must provide
/// `int order() const` and `template <class F> void for_each_neighbor(int v, F f) const`.
/// The workspace is reusable: `grow` accepts a valid matching and augments it
/// to a maximum one in place.
template <typename Adjacency>
class Blossom {
 public:
  /// Augments `mate` (mate[v] == -1 when v is exposed) until maximum; returns its size.
  int grow(const Adjacency& adj, std::span<int> mate) {
    n_ = adj.order();
    resize();
    for (int v = 0; v < n_; ++v) {
      if (mate[v] != -1) continue;
      int end = find_path(adj, mate, v);
      while (end != -1) {
        const int pv = parent_[end];
        const int next = mate[pv];
        mate[end] = pv;
        mate[pv] = end;
        end = next;
      }
    }
    int size = 0;
    for (int v = 0; v < n_; ++v)
      if (mate[v] > v) ++size;
    return size;
  }

  /// Maximum matching from scratch, seeded greedily.
  int maximum(const Adjacency& adj, std::vector<int>& mate) {
    const int n = adj.order();
    mate.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
      if (mate[v] != -1) continue;
      adj.for_each_neighbor(v, [&](int w) {
        if (mate[v] == -1 && mate[w] == -1 && w != v) {
          mate[v] = w;
          mate[w] = v;
        }
      });
    }
    return grow(adj, std::span<int>(mate));
  }

 private:
  void resize() {
    const auto n = static_cast<std::size_t>(n_);
    parent_.assign(n, -1);
    base_.assign(n, 0);
    queue_.assign(n, 0);
    used_.assign(n, 0);
    in_blossom_.assign(n, 0);
    seen_.assign(n, 0);
  }

  int lca(std::span<const int> mate, int a, int b) {
    std::fill(seen_.begin(), seen_.end(), 0);
    for (;;) {
      a = base_[a];
      seen_[a] = 1;
      if (mate[a] == -1) break;
      a = parent_[mate[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen_[b]) return b;
      b = parent_[mate[b]];
    }
  }

  void mark_path(std::span<const int> mate, int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate[v]]] = 1;
      parent_[v] = child;
      child = mate[v];
      v = parent_[mate[v]];
    }
  }

  int find_path(const Adjacency& adj, std::span<const int> mate, int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    int head = 0;
    int tail = 0;
    queue_[tail++] = root;
    while (head < tail) {
      const int v = queue_[head++];
      int found = -1;
      adj.for_each_neighbor(v, [&](int to) {
        if (found != -1) return;
        if (base_[v] == base_[to] || mate[v] == to) return;
        if (to == root || (mate[to] != -1 && parent_[mate[to]] != -1)) {
          const int cur = lca(mate, v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(mate, v, cur, to);
          mark_path(mate, to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              queue_[tail++] = i;
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate[to] == -1) {
            found = to;
            return;
          }
          used_[mate[to]] = 1;
          queue_[tail++] = mate[to];
        }
      });
      if (found != -1) return found;
    }
    return -1;
  }

  int n_ = 0;
  std::vector<int> parent_, base_, queue_;
  std::vector<char> used_, in_blossom_, seen_;
};

}  // namespace spexkm::detail
