#include "dpl/todd_coxeter.hpp"

#include "dpl/error.hpp"

#include <deque>
#include <string>

namespace dpl {

namespace {

// Coset enumeration over the trivial subgroup, HLT strategy with
// coincidence processing.
class Enumerator {
 public:
  Enumerator(int generators, std::size_t limit) : columns_(2 * generators), limit_(limit) { add_row(); }

  void run(const std::vector<Word>& relators) {
    for (std::size_t c = 0; c < table_.size(); ++c) {
      for (const Word& w : relators) {
        if (!live(c)) break;
        scan_and_fill(c, w);
      }
      for (int x = 0; x < columns_ && live(c); ++x) {
        if (table_[c][x] < 0) define(c, x);
      }
    }
  }

  std::vector<std::vector<std::size_t>> compact() {
    std::vector<long> number(table_.size(), -1);
    std::vector<std::size_t> order{0};
    number[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int x = 0; x < columns_; ++x) {
        const long t = rep(table_[order[i]][x]);
        if (number[t] < 0) {
          number[t] = static_cast<long>(order.size());
          order.push_back(static_cast<std::size_t>(t));
        }
      }
    }
    std::vector<std::vector<std::size_t>> out(order.size(), std::vector<std::size_t>(columns_));
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int x = 0; x < columns_; ++x) out[i][x] = static_cast<std::size_t>(number[rep(table_[order[i]][x])]);
    }
    return out;
  }

 private:
  static int inv(int x) { return x ^ 1; }
  bool live(std::size_t c) const { return parent_[c] == static_cast<long>(c); }

  void add_row() {
    if (table_.size() >= limit_) {
      throw Error(ErrorKind::BadParameter, "coset enumeration exceeded " + std::to_string(limit_) + " cosets");
    }
    table_.emplace_back(columns_, -1);
    parent_.push_back(static_cast<long>(table_.size() - 1));
  }

  void define(long c, int x) {
    add_row();
    const long n = static_cast<long>(table_.size() - 1);
    table_[c][x] = n;
    table_[n][inv(x)] = c;
  }

  long rep(long k) {
    long r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      long next = parent_[k];
      parent_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(long k, long l, std::deque<long>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }

  void coincidence(long a, long b) {
    std::deque<long> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const long e = queue.front();
      queue.pop_front();
      for (int x = 0; x < columns_; ++x) {
        const long f = table_[e][x];
        if (f < 0) continue;
        table_[f][inv(x)] = -1;
        const long e1 = rep(e);
        const long f1 = rep(f);
        if (table_[e1][x] >= 0) {
          merge(f1, table_[e1][x], queue);
        } else if (table_[f1][inv(x)] >= 0) {
          merge(e1, table_[f1][inv(x)], queue);
        } else {
          table_[e1][x] = f1;
          table_[f1][inv(x)] = e1;
        }
      }
    }
  }

  void scan_and_fill(long c, const Word& w) {
    long f = c, b = c;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inv(w[j])] >= 0) b = table_[b][inv(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inv(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int columns_;
  std::size_t limit_;
  std::vector<std::vector<long>> table_;
  std::vector<long> parent_;
};

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_cosets(int generators, const std::vector<Word>& relators,
                                                       std::size_t max_cosets) {
  Enumerator e(generators, max_cosets);
  e.run(relators);
  return e.compact();
}

}  // namespace dpl
