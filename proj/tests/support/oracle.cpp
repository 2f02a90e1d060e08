#include "oracle.hpp"

#include <map>
#include <stdexcept>

namespace oracle {

std::vector<Monomial> slice_monomials(BiDegree d) {
  std::vector<Monomial> out;
  if (d.first < 0 || d.second < 0) return out;
  for (int i = 0; i <= d.first; ++i)
    for (int j = 0; j <= d.second; ++j)
      out.emplace_back(i, d.first - i, j, d.second - j);
  return out;
}

int rank(std::vector<std::vector<Rational>> rows) {
  std::vector<std::pair<std::vector<Rational>, std::size_t>> pivots;
  int r = 0;
  for (auto& row : rows) {
    for (const auto& [prow, pcol] : pivots) {
      if (row[pcol] == 0) continue;
      const Rational factor = row[pcol];
      for (std::size_t c = 0; c < row.size(); ++c) row[c] -= factor * prow[c];
    }
    std::size_t pc = row.size();
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) {
        pc = c;
        break;
      }
    if (pc == row.size()) continue;
    const Rational inv = Rational(1) / row[pc];
    for (auto& v : row) v *= inv;
    pivots.emplace_back(std::move(row), pc);
    ++r;
  }
  return r;
}

namespace {

// Index of every (slot, monomial) position of the slice.
struct SliceBasis {
  std::vector<std::vector<Monomial>> per_slot;
  std::vector<std::size_t> offsets;
  std::size_t dim = 0;

  SliceBasis(const std::vector<BiDegree>& twists, BiDegree at) {
    for (const auto& tw : twists) {
      offsets.push_back(dim);
      per_slot.push_back(slice_monomials(at + tw));
      dim += per_slot.back().size();
    }
  }

  std::vector<Rational> vectorize(const FreeModuleElement& x) const {
    std::vector<Rational> v(dim, Rational(0));
    for (std::size_t slot = 0; slot < per_slot.size(); ++slot) {
      std::map<Monomial, std::size_t, bisyz::MonomialGreater> index;
      for (std::size_t k = 0; k < per_slot[slot].size(); ++k)
        index.emplace(per_slot[slot][k], k);
      for (const auto& [m, c] : x.components[slot].terms()) {
        auto it = index.find(m);
        if (it == index.end())
          throw std::runtime_error("element does not live in the slice");
        v[offsets[slot] + it->second] = c;
      }
    }
    return v;
  }
};

std::vector<std::vector<Rational>> generator_multiples(
    const std::vector<FreeModuleElement>& gens, BiDegree at,
    const SliceBasis& basis) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const BiDegree d = g.module_bidegree();
    const BiDegree shift = at - d;
    for (const auto& m : slice_monomials(shift))
      rows.push_back(basis.vectorize(g.times_term(m, 1)));
  }
  return rows;
}

}  // namespace

long module_slice_dim(const std::vector<FreeModuleElement>& gens,
                      const std::vector<BiDegree>& twists, BiDegree at) {
  const SliceBasis basis(twists, at);
  if (basis.dim == 0) return 0;
  return rank(generator_multiples(gens, at, basis));
}

long ideal_slice_dim(const std::vector<BiPoly>& gens, BiDegree at) {
  std::vector<FreeModuleElement> elems;
  for (const auto& g : gens)
    if (!g.is_zero()) elems.push_back(FreeModuleElement::from_poly(g));
  return module_slice_dim(elems, {BiDegree{0, 0}}, at);
}

bool slice_member(const FreeModuleElement& x,
                  const std::vector<FreeModuleElement>& gens,
                  const std::vector<BiDegree>& twists) {
  if (x.is_zero()) return true;
  const BiDegree at = x.module_bidegree();
  const SliceBasis basis(twists, at);
  auto rows = generator_multiples(gens, at, basis);
  const int base_rank = rank(rows);
  rows.push_back(basis.vectorize(x));
  return rank(rows) == base_rank;
}

bool slice_member(const BiPoly& x, const std::vector<BiPoly>& gens) {
  std::vector<FreeModuleElement> elems;
  for (const auto& g : gens)
    if (!g.is_zero()) elems.push_back(FreeModuleElement::from_poly(g));
  return slice_member(FreeModuleElement::from_poly(x), elems,
                      {BiDegree{0, 0}});
}

long syzygy_slice_dim(const std::vector<BiPoly>& gens, BiDegree at) {
  std::vector<BiDegree> twists;
  for (const auto& g : gens) twists.push_back(-g.bidegree());
  const SliceBasis domain(twists, at);
  if (domain.dim == 0) return 0;
  const std::vector<Monomial> target = slice_monomials(at);
  std::map<Monomial, std::size_t, bisyz::MonomialGreater> tindex;
  for (std::size_t k = 0; k < target.size(); ++k) tindex.emplace(target[k], k);

  std::vector<std::vector<Rational>> rows;
  for (std::size_t slot = 0; slot < gens.size(); ++slot)
    for (const auto& m : domain.per_slot[slot]) {
      std::vector<Rational> row(target.size(), Rational(0));
      const BiPoly prod = gens[slot].times_term(m, 1);
      for (const auto& [mono, c] : prod.terms()) row[tindex.at(mono)] = c;
      rows.push_back(std::move(row));
    }
  return static_cast<long>(domain.dim) - rank(std::move(rows));
}

long conormal_slice_dim(const std::vector<BiPoly>& gens, BiDegree at) {
  std::vector<BiDegree> twists;
  for (const auto& g : gens) twists.push_back(-g.bidegree());
  const SliceBasis basis(twists, at);
  if (basis.dim == 0) return 0;

  // Nullspace basis of the multiplication map = the syzygy slice.
  const std::vector<Monomial> target = slice_monomials(at);
  std::map<Monomial, std::size_t, bisyz::MonomialGreater> tindex;
  for (std::size_t k = 0; k < target.size(); ++k) tindex.emplace(target[k], k);

  std::vector<std::vector<Rational>> mat;
  for (std::size_t slot = 0; slot < gens.size(); ++slot)
    for (const auto& m : basis.per_slot[slot]) {
      std::vector<Rational> row(target.size(), Rational(0));
      const BiPoly prod = gens[slot].times_term(m, 1);
      for (const auto& [mono, c] : prod.terms()) row[tindex.at(mono)] = c;
      mat.push_back(std::move(row));
    }
  // Augment with the identity to harvest kernel combinations.
  const std::size_t n = mat.size();
  const std::size_t w = target.size();
  for (std::size_t k = 0; k < n; ++k) {
    mat[k].resize(w + n, Rational(0));
    mat[k][w + k] = 1;
  }
  std::vector<std::pair<std::vector<Rational>, std::size_t>> pivots;
  std::vector<std::vector<Rational>> span;
  for (auto& row : mat) {
    for (const auto& [prow, pcol] : pivots) {
      if (row[pcol] == 0) continue;
      const Rational factor = row[pcol];
      for (std::size_t c = 0; c < row.size(); ++c) row[c] -= factor * prow[c];
    }
    std::size_t pc = w;
    for (std::size_t c = 0; c < w; ++c)
      if (row[c] != 0) {
        pc = c;
        break;
      }
    if (pc == w) {
      span.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(w),
                        row.end());
    } else {
      const Rational inv = Rational(1) / row[pc];
      for (auto& v : row) v *= inv;
      pivots.emplace_back(std::move(row), pc);
    }
  }

  // (I·F) slice: f_j placed in slot i, multiplied into the slice.
  for (std::size_t slot = 0; slot < gens.size(); ++slot)
    for (const auto& f : gens) {
      FreeModuleElement e = FreeModuleElement::zero(twists);
      e.components[slot] = f;
      const BiDegree shift = at - e.module_bidegree();
      for (const auto& m : slice_monomials(shift))
        span.push_back(basis.vectorize(e.times_term(m, 1)));
    }

  return static_cast<long>(basis.dim) - rank(std::move(span));
}

long quotient_slice_dim(const std::vector<BiPoly>& gens, BiDegree at) {
  const long full = static_cast<long>(at.first + 1) * (at.second + 1);
  return full - ideal_slice_dim(gens, at);
}

namespace {

// Basis of the kernel of the multiplication map (q_i) -> sum q_i f_i on the
// bidegree-`at` slice, as vectors in the F-slice coordinates of `basis`.
std::vector<std::vector<Rational>> syzygy_slice_kernel(
    const std::vector<BiPoly>& gens, BiDegree at, const SliceBasis& basis) {
  const std::vector<Monomial> target = slice_monomials(at);
  std::map<Monomial, std::size_t, bisyz::MonomialGreater> tindex;
  for (std::size_t k = 0; k < target.size(); ++k) tindex.emplace(target[k], k);

  std::vector<std::vector<Rational>> mat;
  for (std::size_t slot = 0; slot < gens.size(); ++slot)
    for (const auto& m : basis.per_slot[slot]) {
      std::vector<Rational> row(target.size(), Rational(0));
      const BiPoly prod = gens[slot].times_term(m, 1);
      for (const auto& [mono, c] : prod.terms()) row[tindex.at(mono)] = c;
      mat.push_back(std::move(row));
    }
  const std::size_t n = mat.size();
  const std::size_t w = target.size();
  for (std::size_t k = 0; k < n; ++k) {
    mat[k].resize(w + n, Rational(0));
    mat[k][w + k] = 1;
  }
  std::vector<std::pair<std::vector<Rational>, std::size_t>> pivots;
  std::vector<std::vector<Rational>> kernel;
  for (auto& row : mat) {
    for (const auto& [prow, pcol] : pivots) {
      if (row[pcol] == 0) continue;
      const Rational factor = row[pcol];
      for (std::size_t c = 0; c < row.size(); ++c) row[c] -= factor * prow[c];
    }
    std::size_t pc = w;
    for (std::size_t c = 0; c < w; ++c)
      if (row[c] != 0) {
        pc = c;
        break;
      }
    if (pc == w) {
      kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(w),
                          row.end());
    } else {
      const Rational inv = Rational(1) / row[pc];
      for (auto& v : row) v *= inv;
      pivots.emplace_back(std::move(row), pc);
    }
  }
  return kernel;
}

}  // namespace

long vanishing_syzygy_slice_dim(const std::vector<BiPoly>& gens,
                                const std::vector<BiPoly>& jgens,
                                BiDegree at) {
  std::vector<BiDegree> twists;
  for (const auto& g : gens) twists.push_back(-g.bidegree());
  const SliceBasis basis(twists, at);
  if (basis.dim == 0) return 0;

  const std::vector<std::vector<Rational>> kernel =
      syzygy_slice_kernel(gens, at, basis);

  // ⊕_i J(-d_i) slice: multiples of every J-generator in every slot.
  std::vector<std::vector<Rational>> j_rows;
  for (std::size_t slot = 0; slot < gens.size(); ++slot)
    for (const auto& f : jgens) {
      if (f.is_zero()) continue;
      FreeModuleElement e = FreeModuleElement::zero(twists);
      e.components[slot] = f;
      const BiDegree shift = at - e.module_bidegree();
      for (const auto& m : slice_monomials(shift))
        j_rows.push_back(basis.vectorize(e.times_term(m, 1)));
    }

  const long dim_a = static_cast<long>(kernel.size());
  const long dim_b = rank(j_rows);
  std::vector<std::vector<Rational>> stacked = kernel;
  for (auto& r : j_rows) stacked.push_back(std::move(r));
  const long dim_sum = rank(std::move(stacked));
  return dim_a + dim_b - dim_sum;
}

}  // namespace oracle
