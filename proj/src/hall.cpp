#include "freelie/hall.hpp"

#include <algorithm>

#include <gmpxx.h>

namespace freelie {

MonomialPool::MonomialPool(int rank) : rank_(rank) {
  if (rank < 1) raise(ErrorCode::rank, "rank must be at least 1");
  nodes_.reserve(64);
  for (int i = 0; i < rank; ++i) {
    Node n;
    n.gen = i;
    n.degree = 1;
    n.multideg.assign(static_cast<size_t>(rank), 0);
    n.multideg[static_cast<size_t>(i)] = 1;
    nodes_.push_back(std::move(n));
  }
  slices_.resize(2);
  slices_[1].resize(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) slices_[1][static_cast<size_t>(i)] = i;
}

MonoId MonomialPool::generator(int index) const {
  if (index < 0 || index >= rank_)
    raise(ErrorCode::domain, "generator index " + std::to_string(index) + " out of range for rank " + std::to_string(rank_));
  return index;
}

int MonomialPool::gen_index(MonoId m) const {
  if (!is_leaf(m)) raise(ErrorCode::invalid, "not a generator");
  return nodes_[m].gen;
}

MonoId MonomialPool::left(MonoId m) const {
  if (is_leaf(m)) raise(ErrorCode::invalid, "leaf has no left factor");
  return nodes_[m].left;
}

MonoId MonomialPool::right(MonoId m) const {
  if (is_leaf(m)) raise(ErrorCode::invalid, "leaf has no right factor");
  return nodes_[m].right;
}

int MonomialPool::compare(MonoId x, MonoId y) const {
  if (x == y) return 0;
  const Node& nx = nodes_[check(x)];
  const Node& ny = nodes_[check(y)];
  if (nx.degree != ny.degree) return nx.degree < ny.degree ? -1 : 1;
  bool lx = nx.gen >= 0, ly = ny.gen >= 0;
  if (lx && ly) return nx.gen < ny.gen ? -1 : 1;
  if (lx != ly) return lx ? -1 : 1;
  if (int c = compare(nx.left, ny.left)) return c;
  return compare(nx.right, ny.right);
}

bool MonomialPool::is_hall_pair(MonoId e, MonoId f) const {
  if (compare(e, f) <= 0) return false;
  return is_leaf(e) || compare(right(e), f) <= 0;
}

MonoId MonomialPool::make_node(MonoId l, MonoId r) {
  auto key = std::make_pair(l, r);
  if (auto it = intern_.find(key); it != intern_.end()) return it->second;
  if (!is_hall_pair(l, r)) raise(ErrorCode::invalid, "make_node: [" + str(l) + "," + str(r) + "] is not Hall");
  Node n;
  n.left = l;
  n.right = r;
  n.degree = nodes_[l].degree + nodes_[r].degree;
  n.multideg = nodes_[l].multideg;
  for (size_t i = 0; i < n.multideg.size(); ++i) n.multideg[i] += nodes_[r].multideg[i];
  MonoId id = static_cast<MonoId>(nodes_.size());
  nodes_.push_back(std::move(n));
  intern_.emplace(key, id);
  return id;
}

const std::vector<MonoId>& MonomialPool::degree_slice(int n) {
  if (n < 1) raise(ErrorCode::invalid, "degree must be positive");
  while (static_cast<int>(slices_.size()) <= n) {
    int m = static_cast<int>(slices_.size());
    std::vector<MonoId> out;
    for (int q = 1; q < m; ++q) {
      int p = m - q;
      if (p < q) break;  // e > f forces deg e >= deg f
      for (MonoId e : slices_[static_cast<size_t>(p)])
        for (MonoId f : slices_[static_cast<size_t>(q)])
          if (is_hall_pair(e, f)) out.push_back(make_node(e, f));
    }
    std::sort(out.begin(), out.end(), [this](MonoId a, MonoId b) { return compare(a, b) < 0; });
    slices_.push_back(std::move(out));
  }
  return slices_[static_cast<size_t>(n)];
}

std::vector<MonoId> MonomialPool::basis_up_to(int max_degree) {
  std::vector<MonoId> out;
  for (int n = 1; n <= max_degree; ++n) {
    const auto& s = degree_slice(n);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

const std::vector<MonoId>& MonomialPool::multidegree_slice(const std::vector<std::int32_t>& mdeg) {
  if (static_cast<int>(mdeg.size()) != rank_)
    raise(ErrorCode::invalid, "multidegree length does not match the rank");
  int total = 0;
  for (std::int32_t d : mdeg) {
    if (d < 0) raise(ErrorCode::invalid, "negative multidegree entry");
    total += d;
  }
  if (total < 1) raise(ErrorCode::invalid, "multidegree must have positive total degree");
  if (auto it = mslices_.find(mdeg); it != mslices_.end()) return it->second;

  std::vector<MonoId> out;
  if (total == 1) {
    for (int i = 0; i < rank_; ++i)
      if (mdeg[static_cast<size_t>(i)] == 1) out.push_back(i);
  } else {
    // enumerate splits mdeg = m1 + m2 with deg(m1) >= deg(m2) >= 1; a Hall
    // node [e, f] arises from exactly one split, so no deduplication needed
    std::vector<std::int32_t> m1(static_cast<size_t>(rank_), 0);
    for (;;) {
      // odometer over the box [0, mdeg]
      int i = 0;
      while (i < rank_ && m1[static_cast<size_t>(i)] == mdeg[static_cast<size_t>(i)]) {
        m1[static_cast<size_t>(i)] = 0;
        ++i;
      }
      if (i == rank_) break;
      ++m1[static_cast<size_t>(i)];

      int s1 = 0;
      for (std::int32_t d : m1) s1 += d;
      int s2 = total - s1;
      if (s2 < 1 || s1 < s2) continue;
      std::vector<std::int32_t> m2(static_cast<size_t>(rank_));
      for (int j = 0; j < rank_; ++j)
        m2[static_cast<size_t>(j)] = mdeg[static_cast<size_t>(j)] - m1[static_cast<size_t>(j)];
      const std::vector<MonoId>& es = multidegree_slice(m1);
      if (es.empty()) continue;
      const std::vector<MonoId>& fs = multidegree_slice(m2);
      for (MonoId e : es)
        for (MonoId f : fs)
          if (is_hall_pair(e, f)) out.push_back(make_node(e, f));
    }
    std::sort(out.begin(), out.end(), [this](MonoId a, MonoId b) { return compare(a, b) < 0; });
  }
  return mslices_.emplace(mdeg, std::move(out)).first->second;
}

std::string MonomialPool::str(MonoId m) const {
  if (is_leaf(m)) return gen_name(nodes_[m].gen);
  return "[" + str(nodes_[m].left) + "," + str(nodes_[m].right) + "]";
}

std::string MonomialPool::gen_name(int index) const {
  static const char* kFirst[3] = {"a", "b", "c"};
  if (index < 3) return kFirst[index];
  return "a" + std::to_string(index - 2);
}

int MonomialPool::gen_index_by_name(const std::string& name) const {
  for (int i = 0; i < rank_; ++i)
    if (gen_name(i) == name) return i;
  return -1;
}

BracketTree BracketTree::leaf(int gen) {
  BracketTree t;
  t.gen = gen;
  return t;
}

BracketTree BracketTree::node(BracketTree l, BracketTree r) {
  BracketTree t;
  t.left = std::make_unique<BracketTree>(std::move(l));
  t.right = std::make_unique<BracketTree>(std::move(r));
  return t;
}

std::optional<MonoId> to_hall(MonomialPool& pool, const BracketTree& t) {
  if (t.is_leaf()) return pool.generator(t.gen);
  auto l = to_hall(pool, *t.left);
  if (!l) return std::nullopt;
  auto r = to_hall(pool, *t.right);
  if (!r) return std::nullopt;
  if (!pool.is_hall_pair(*l, *r)) return std::nullopt;
  return pool.make_node(*l, *r);
}

bool is_hall(MonomialPool& pool, const BracketTree& t) { return to_hall(pool, t).has_value(); }

namespace {

int mobius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

std::uint64_t witt_dimension(int rank, int n) {
  if (rank < 1 || n < 1) raise(ErrorCode::invalid, "witt_dimension needs rank >= 1, n >= 1");
  mpz_class acc = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(rank), static_cast<unsigned long>(n / d));
    acc += mobius(d) * term;
  }
  mpz_class q = acc / n;
  if (q * n != acc) raise(ErrorCode::internal_check, "Witt formula did not divide evenly");
  return q.get_ui();
}

}  // namespace freelie
