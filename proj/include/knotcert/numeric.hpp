#ifndef KNOTCERT_NUMERIC_HPP
#define KNOTCERT_NUMERIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace knotcert {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// "1e-30", "2.5e-3", "3/4", "-7", "0.125"
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

Integer binomial(long n, long k);
// Generalized binomial C(q, k) = q(q-1)...(q-k+1)/k! for rational q.
Rational rational_binomial(const Rational& q, long k);

Rational pow_rational(const Rational& base, long exp);

// floor(sqrt(z)), z >= 0
Integer isqrt_floor(const Integer& z);

struct UnionFind {
  explicit UnionFind(int n) : parent(n), size_(n, 1), groups(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent[b] = a;
    size_[a] += size_[b];
    --groups;
    return true;
  }
  std::vector<int> parent;
  std::vector<int> size_;
  int groups;
};

// Fraction-free determinant of an integer matrix (Bareiss). Empty matrix -> 1.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

// Signature data of a symmetric rational matrix under congruence.
struct SymmetricSignature {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  int signature() const { return positives - negatives; }
};
SymmetricSignature symmetric_signature(std::vector<std::vector<Rational>> m);

// Spanning trees of an undirected multigraph on n vertices (Matrix-Tree).
// Edges as (u, v) pairs; n == 0 -> 1 (empty product), disconnected -> 0.
Integer spanning_tree_count(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace knotcert

#endif
