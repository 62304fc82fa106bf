#pragma once

// Finite fields and dense linear algebra for the modular rank engine.
//
// Both fields use 32-bit element handles so kernel bases can be stored
// without templates. PrimeField holds residues directly; ExtensionField
// holds discrete logarithms with respect to a primitive element (Zech
// logarithm representation), which makes every operation a table lookup.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace orbitlab::oracle {

using Elem = std::uint32_t;

/// Z/p for a prime p < 2^32, Barrett reduction.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : static_cast<Elem>(a + p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : static_cast<Elem>(p_ - a); }
  Elem mul(Elem a, Elem b) const { return reduce(std::uint64_t(a) * b); }
  Elem inv(Elem a) const;
  Elem from_int(std::int64_t n) const;
  Elem random(std::mt19937_64& rng) const { return static_cast<Elem>(rng() % p_); }

  /// dst[k] -= f * src[k] for k in [0, n).
  void row_sub(Elem* dst, const Elem* src, Elem f, std::size_t n) const;

  std::uint64_t characteristic() const { return p_; }
  std::uint64_t size() const { return p_; }
  std::string name() const { return "F_" + std::to_string(p_); }

 private:
  Elem reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    return static_cast<Elem>(r >= p_ ? r - p_ : r);
  }
  std::uint64_t p_;
  std::uint64_t barrett_;  // floor(2^64 / p)
};

/// GF(p^k) with Zech logarithm tables. Construction enumerates the powers of
/// a primitive element, so it costs O(p^k); tables are shared per (p, k).
class ExtensionField {
 public:
  ExtensionField(std::uint64_t p, int k);
  /// Smallest k with p^k >= min_size.
  static ExtensionField with_min_size(std::uint64_t p, std::uint64_t min_size);

  Elem zero() const { return zero_; }
  Elem one() const { return 0; }
  bool is_zero(Elem a) const { return a == zero_; }
  Elem mul(Elem a, Elem b) const {
    if (a == zero_ || b == zero_) return zero_;
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Elem>(s >= order_ ? s - order_ : s);
  }
  Elem add(Elem a, Elem b) const {
    if (a == zero_) return b;
    if (b == zero_) return a;
    // g^a + g^b = g^a (1 + g^(b-a))
    Elem t = b >= a ? b - a : static_cast<Elem>(b + order_ - a);
    Elem z = tables_->zech[t];
    return z == zero_ ? zero_ : mul(a, z);
  }
  Elem neg(Elem a) const { return mul(a, minus_one_); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem inv(Elem a) const;
  Elem from_int(std::int64_t n) const;
  Elem random(std::mt19937_64& rng) const;

  void row_sub(Elem* dst, const Elem* src, Elem f, std::size_t n) const;

  std::uint64_t characteristic() const { return p_; }
  std::uint64_t size() const { return order_ + 1; }
  int degree() const { return k_; }
  std::string name() const { return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")"; }

  /// Base-p digit encoding of an element (digit i = coefficient of x^i).
  std::uint32_t encode(Elem a) const { return a == zero_ ? 0 : tables_->exp[a]; }
  Elem decode(std::uint32_t code) const { return tables_->log[code]; }

 private:
  struct Tables {
    std::vector<std::uint32_t> exp;   // log -> encoding
    std::vector<Elem> log;            // encoding -> log (zero -> zero handle)
    std::vector<Elem> zech;           // n -> log(1 + g^n)
  };
  static std::shared_ptr<const Tables> build(std::uint64_t p, int k);

  std::uint64_t p_;
  int k_;
  std::uint32_t order_;  // p^k - 1
  Elem zero_;            // == order_
  Elem minus_one_;
  std::shared_ptr<const Tables> tables_;
};

// -- dense linear algebra ----------------------------------------------------

/// Basis of the right kernel of a rows x cols row-major matrix, which is
/// destroyed. Basis vector for free column f has x_f = 1 and zeros at every
/// other free column.
template <class Field>
std::vector<std::vector<Elem>> nullspace(const Field& F, std::vector<Elem>& a, std::size_t rows,
                                         std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && F.is_zero(a[piv * cols + c])) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = c; k < cols; ++k) std::swap(a[piv * cols + k], a[r * cols + k]);
    Elem* prow = &a[r * cols];
    const Elem scale = F.inv(prow[c]);
    for (std::size_t k = c; k < cols; ++k) prow[k] = F.mul(prow[k], scale);
    for (std::size_t i = r + 1; i < rows; ++i) {
      Elem* row = &a[i * cols];
      if (!F.is_zero(row[c])) F.row_sub(row + c, prow + c, row[c], cols - c);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  const std::size_t rank = pivot_cols.size();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Elem>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Elem> x(cols, F.zero());
    x[f] = F.one();
    for (std::size_t i = rank; i-- > 0;) {
      const Elem* row = &a[i * cols];
      Elem acc = row[f];
      for (std::size_t j = i + 1; j < rank; ++j) {
        const std::size_t pc = pivot_cols[j];
        if (!F.is_zero(row[pc]) && !F.is_zero(x[pc])) acc = F.add(acc, F.mul(row[pc], x[pc]));
      }
      x[pivot_cols[i]] = F.neg(acc);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Rank of a rows x cols row-major matrix (destroyed).
template <class Field>
std::size_t rank(const Field& F, std::vector<Elem>& a, std::size_t rows, std::size_t cols) {
  return cols - nullspace(F, a, rows, cols).size();
}

/// Incrementally maintained row echelon basis of a subspace of F^n.
template <class Field>
class RowEchelon {
 public:
  RowEchelon(const Field& F, std::size_t n) : F_(F), n_(n) {}

  /// Adds v to the span; returns true if the rank grew.
  bool insert(std::vector<Elem> v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem f = v[pivots_[i]];
      if (!F_.is_zero(f)) F_.row_sub(v.data(), rows_[i].data(), f, n_);
    }
    std::size_t c = 0;
    while (c < n_ && F_.is_zero(v[c])) ++c;
    if (c == n_) return false;
    const Elem scale = F_.inv(v[c]);
    for (std::size_t k = c; k < n_; ++k) v[k] = F_.mul(v[k], scale);
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  const Field& F_;
  std::size_t n_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace orbitlab::oracle
