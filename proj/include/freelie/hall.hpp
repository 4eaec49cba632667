#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "freelie/error.hpp"

namespace freelie {

using MonoId = std::int32_t;

// Interned Hall monomials over a fixed ordered generating set
// a < b < c < a1 < a2 < ... Ids [0, rank) are the generators; composite
// monomials are created through make_node and deduplicated, so equal ids
// mean equal monomials.
//
// Order: degree first; within a degree leaves by generator index, leaf
// before node, nodes lexicographically by (left, right).
class MonomialPool {
 public:
  explicit MonomialPool(int rank);

  int rank() const { return rank_; }
  MonoId generator(int index) const;

  bool is_leaf(MonoId m) const { return nodes_[check(m)].gen >= 0; }
  int gen_index(MonoId m) const;
  MonoId left(MonoId m) const;
  MonoId right(MonoId m) const;
  int degree(MonoId m) const { return nodes_[check(m)].degree; }
  const std::vector<std::int32_t>& multidegree(MonoId m) const { return nodes_[check(m)].multideg; }

  int compare(MonoId x, MonoId y) const;  // -1, 0, 1

  // True iff [e, f] is itself a Hall monomial: e > f, and e is a leaf or
  // right(e) <= f.
  bool is_hall_pair(MonoId e, MonoId f) const;
  // Interns the node [l, r]; requires is_hall_pair(l, r).
  MonoId make_node(MonoId l, MonoId r);

  // All Hall monomials of the given degree, sorted; built inductively and
  // cached.
  const std::vector<MonoId>& degree_slice(int n);
  // Degrees 1..max_degree concatenated (ascending order overall).
  std::vector<MonoId> basis_up_to(int max_degree);
  // All Hall monomials of one multidegree, sorted; built over the sub-lattice
  // below mdeg only, so narrow cells stay cheap at high degree.
  const std::vector<MonoId>& multidegree_slice(const std::vector<std::int32_t>& mdeg);

  std::string str(MonoId m) const;  // nested brackets, e.g. [[b,a],b]
  std::string gen_name(int index) const;
  int gen_index_by_name(const std::string& name) const;  // -1 if unknown

 private:
  struct Node {
    int gen = -1;  // >= 0 for leaves
    MonoId left = -1, right = -1;
    std::int32_t degree = 0;
    std::vector<std::int32_t> multideg;
  };

  MonoId check(MonoId m) const {
    if (m < 0 || m >= static_cast<MonoId>(nodes_.size())) raise(ErrorCode::invalid, "bad monomial id");
    return m;
  }

  int rank_;
  std::vector<Node> nodes_;
  std::map<std::pair<MonoId, MonoId>, MonoId> intern_;
  std::vector<std::vector<MonoId>> slices_;  // slices_[n] = H_n once built
  std::map<std::vector<std::int32_t>, std::vector<MonoId>> mslices_;
};

// Unvalidated bracket tree, the input form for Hall recognition.
struct BracketTree {
  int gen = -1;
  std::unique_ptr<BracketTree> left, right;

  static BracketTree leaf(int gen);
  static BracketTree node(BracketTree l, BracketTree r);
  bool is_leaf() const { return gen >= 0; }
};

// Checks the Hall conditions recursively at every node; returns the interned
// monomial on success.
std::optional<MonoId> to_hall(MonomialPool& pool, const BracketTree& t);
bool is_hall(MonomialPool& pool, const BracketTree& t);

// Dimension of the degree-n homogeneous component of a free Lie algebra of
// the given rank: (1/n) sum_{d|n} mu(d) rank^{n/d}.
std::uint64_t witt_dimension(int rank, int n);

}  // namespace freelie
