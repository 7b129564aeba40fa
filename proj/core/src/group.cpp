#include "wavepart/group.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include <fmt/format.h>

#include "wavepart/errors.hpp"

namespace wavepart {
namespace {

constexpr std::size_t kExhaustiveLimit = 64;
constexpr std::uint64_t kSamplingSeed = 0x9e3779b97f4a7c15ULL;

using Axiom = GroupAxiomError::Axiom;

// Calls fn(a, b, c) for every triple when n is small, otherwise for
// 10 n^2 triples drawn from a fixed-seed generator.
template <typename Fn>
bool for_triples(std::size_t n, Fn&& fn) {
  if (n <= kExhaustiveLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!fn(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(kSamplingSeed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < 10 * n * n; ++i) {
    std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (!fn(a, b, c)) return false;
  }
  return true;
}

template <typename Fn>
bool for_pairs(std::size_t n, Fn&& fn) {
  if (n <= kExhaustiveLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!fn(a, b)) return false;
    return true;
  }
  std::mt19937_64 rng(kSamplingSeed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < 10 * n * n; ++i)
    if (!fn(pick(rng), pick(rng))) return false;
  return true;
}

}  // namespace

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

std::vector<std::vector<std::size_t>> FiniteGroup::cayley_table() const {
  std::vector<std::vector<std::size_t>> rows(order_, std::vector<std::size_t>(order_));
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) rows[a][b] = multiply(a, b);
  return rows;
}

FiniteGroup group_from_cayley(const std::vector<std::vector<std::int64_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupAxiomError(Axiom::kNotSquare, "cayley table is empty");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      throw GroupAxiomError(Axiom::kNotSquare,
                            fmt::format("cayley row {} has {} entries, expected {}", r, table[r].size(), n));
  }
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw InvalidArgument("group order exceeds index range");

  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::int64_t v = table[a][b];
      if (v < 0 || static_cast<std::uint64_t>(v) >= n)
        throw GroupAxiomError(Axiom::kEntryOutOfRange,
                              fmt::format("cayley[{}][{}] = {} is outside 0..{}", a, b, v, n - 1));
      g.table_[a * n + b] = static_cast<std::uint32_t>(v);
    }
  }

  std::vector<std::size_t> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t b = 0; b < n; ++b) {
      auto v = g.multiply(a, b);
      if (seen[v] != n)
        throw GroupAxiomError(Axiom::kNotLatinSquare,
                              fmt::format("row {} repeats element {} (columns {} and {})", a, v, seen[v], b));
      seen[v] = b;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t a = 0; a < n; ++a) {
      auto v = g.multiply(a, b);
      if (seen[v] != n)
        throw GroupAxiomError(Axiom::kNotLatinSquare,
                              fmt::format("column {} repeats element {} (rows {} and {})", b, v, seen[v], a));
      seen[v] = a;
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = g.multiply(e, x) == x && g.multiply(x, e) == x;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw GroupAxiomError(Axiom::kNoIdentity, "no two-sided identity element");

  std::size_t ba = 0, bb = 0, bc = 0;
  bool assoc = for_triples(n, [&](std::size_t a, std::size_t b, std::size_t c) {
    if (g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c))) return true;
    ba = a, bb = b, bc = c;
    return false;
  });
  if (!assoc)
    throw GroupAxiomError(Axiom::kNotAssociative,
                          fmt::format("(a*b)*c != a*(b*c) for a={}, b={}, c={}", ba, bb, bc));

  // Latin rows give a unique right inverse; associativity makes it two-sided.
  g.inverse_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (g.multiply(x, y) == g.identity_) {
        g.inverse_[x] = y;
        break;
      }
    }
    if (g.multiply(g.inverse_[x], x) != g.identity_)
      throw GroupAxiomError(Axiom::kNotAssociative,
                            fmt::format("element {} has no two-sided inverse", x));
  }
  g.label_ = fmt::format("cayley({})", n);
  return g;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic_group: n must be >= 1");
  std::vector<std::vector<std::int64_t>> t(n, std::vector<std::int64_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<std::int64_t>((a + b) % n);
  FiniteGroup g = group_from_cayley(t);
  g.label_ = fmt::format("Z_{}", n);
  return g;
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 3) throw InvalidArgument(fmt::format("dihedral_group: n must be >= 3, got {}", n));
  const std::size_t order = 2 * n;
  std::vector<std::vector<std::int64_t>> t(order, std::vector<std::int64_t>(order));
  // (r^k1 f^s1)(r^k2 f^s2) = r^(k1 + (-1)^s1 k2) f^(s1 + s2)
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t s1 = x / n, k1 = x % n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t s2 = y / n, k2 = y % n;
      const std::size_t k = s1 == 0 ? (k1 + k2) % n : (k1 + n - k2) % n;
      const std::size_t s = (s1 + s2) % 2;
      t[x][y] = static_cast<std::int64_t>(s * n + k);
    }
  }
  FiniteGroup g = group_from_cayley(t);
  g.label_ = fmt::format("D_{}", n);
  return g;
}

void check_working_set(std::size_t order, std::size_t dim) {
  if (dim == 0) throw InvalidArgument("representation dimension must be >= 1");
  if (dim > kMaxDim)
    throw InvalidArgument(fmt::format("dimension {} exceeds the supported maximum {}", dim, kMaxDim));
  if (order > kMaxWorkingSet / (dim * dim))
    throw InvalidArgument(fmt::format("|G| * D^2 = {} * {}^2 exceeds the working-set limit {}", order, dim,
                                      kMaxWorkingSet));
}

UnitaryRep::UnitaryRep(std::shared_ptr<const FiniteGroup> group, std::vector<Matrix> matrices)
    : group_(std::move(group)), dim_(matrices.front().rows()), matrices_(std::move(matrices)) {}

UnitaryRep regular_representation(const FiniteGroup& group) {
  const std::size_t n = group.order();
  check_working_set(n, n);
  std::vector<Matrix> mats(n, Matrix::Zero(n, n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) mats[g](group.multiply(g, h), h) = 1.0;
  return UnitaryRep(std::make_shared<const FiniteGroup>(group), std::move(mats));
}

UnitaryRep rep_from_matrices(const FiniteGroup& group, std::vector<Matrix> matrices) {
  using Kind = RepError::Kind;
  const std::size_t n = group.order();
  if (matrices.size() != n)
    throw RepError(Kind::kShape, fmt::format("expected {} matrices (one per element), got {}", n, matrices.size()));
  const auto dim = static_cast<std::size_t>(matrices.front().rows());
  for (std::size_t g = 0; g < n; ++g) {
    if (static_cast<std::size_t>(matrices[g].rows()) != dim || static_cast<std::size_t>(matrices[g].cols()) != dim)
      throw RepError(Kind::kShape,
                     fmt::format("matrix {} is {}x{}, expected {}x{}", g, matrices[g].rows(), matrices[g].cols(), dim, dim),
                     g);
  }
  check_working_set(n, dim);

  const Matrix id = Matrix::Identity(dim, dim);
  for (std::size_t g = 0; g < n; ++g) {
    const double dev = (matrices[g].adjoint() * matrices[g] - id).norm();
    if (dev > tol::kRep)
      throw RepError(Kind::kNonUnitary, fmt::format("T_{} is not unitary (||T^dag T - I||_F = {:.3e})", g, dev), g);
  }
  const double id_dev = (matrices[group.identity()] - id).norm();
  if (id_dev > tol::kRep)
    throw RepError(Kind::kIdentityMismatch,
                   fmt::format("identity element {} maps to a non-identity matrix (deviation {:.3e})",
                               group.identity(), id_dev),
                   group.identity());

  std::size_t bad_g = 0, bad_h = 0;
  double bad_dev = 0.0;
  bool ok = for_pairs(n, [&](std::size_t g, std::size_t h) {
    const double dev = (matrices[g] * matrices[h] - matrices[group.multiply(g, h)]).norm();
    if (dev <= tol::kRep) return true;
    bad_g = g, bad_h = h, bad_dev = dev;
    return false;
  });
  if (!ok)
    throw RepError(Kind::kNonHomomorphism,
                   fmt::format("T_{} T_{} != T_{} (deviation {:.3e})", bad_g, bad_h, group.multiply(bad_g, bad_h),
                               bad_dev),
                   bad_g, bad_h);
  return UnitaryRep(std::make_shared<const FiniteGroup>(group), std::move(matrices));
}

}  // namespace wavepart
