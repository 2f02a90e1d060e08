#include "bisyz/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <utility>

namespace bisyz {

namespace {

// Lead term over all slots; element must be nonzero.
ModuleTerm lead_term_impl(const FreeModuleElement& x) {
  std::optional<ModuleTerm> best;
  for (int i = 0; i < x.rank(); ++i) {
    const auto& comp = x.components[static_cast<std::size_t>(i)];
    if (comp.is_zero()) continue;
    ModuleTerm t{i, comp.lead_monomial()};
    if (!best || compare(t, *best) > 0) best = t;
  }
  if (!best) throw ZeroPolynomialError();
  return *best;
}

Rational coeff_at(const FreeModuleElement& x, const ModuleTerm& t) {
  const auto& terms = x.components[static_cast<std::size_t>(t.slot)].terms();
  auto it = terms.find(t.mono);
  return it == terms.end() ? Rational(0) : it->second;
}

// One basis entry during Buchberger: a monic element together with its
// representation over the original generators.
struct WorkElem {
  FreeModuleElement elem;
  std::vector<BiPoly> rep;
  ModuleTerm lead;
};

struct Pair {
  int i, j;
  Monomial lcm;
};

struct Engine {
  std::vector<BiDegree> ambient;
  std::vector<FreeModuleElement> input;  // original generators, as given
  std::vector<WorkElem> basis;
  bool track_syzygies = false;
  // Syzygies of the working basis, sparse over basis indices.
  std::vector<std::map<int, BiPoly>> schreyer;
  // Generators that were zero on input contribute unit syzygies.
  std::vector<int> zero_input_slots;

  explicit Engine(const SubmodulePresentation& gens)
      : ambient(gens.ambient_twists) {
    input.reserve(gens.generators.size());
    for (const auto& g : gens.generators) {
      if (g.twists != ambient) throw AmbientMismatchError();
      input.push_back(g);
    }
  }

  void seed() {
    for (std::size_t i = 0; i < input.size(); ++i) {
      if (input[i].is_zero()) {
        zero_input_slots.push_back(static_cast<int>(i));
        continue;
      }
      WorkElem w;
      const ModuleTerm lt = lead_term_impl(input[i]);
      const Rational lc = coeff_at(input[i], lt);
      w.elem = input[i];
      w.elem *= Rational(1) / lc;
      w.rep.assign(input.size(), BiPoly());
      w.rep[i] = BiPoly::constant(Rational(1) / lc);
      w.lead = lt;
      basis.push_back(std::move(w));
    }
  }

  // Full division of x by the current basis. Appends cofactors (over basis
  // indices) to q; returns the remainder, every term of which is
  // irreducible against the basis lead terms.
  FreeModuleElement divide(FreeModuleElement p, std::vector<BiPoly>& q) const {
    q.assign(basis.size(), BiPoly());
    FreeModuleElement r = FreeModuleElement::zero(ambient);
    while (!p.is_zero()) {
      const ModuleTerm lt = lead_term_impl(p);
      const Rational lc = coeff_at(p, lt);
      bool reduced = false;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& b = basis[k];
        if (b.lead.slot != lt.slot || !b.lead.mono.divides(lt.mono)) continue;
        const Monomial factor = lt.mono.quotient_by(b.lead.mono);
        p -= b.elem.times_term(factor, lc);
        q[k].add_term(factor, lc);
        reduced = true;
        break;
      }
      if (!reduced) {
        r.components[static_cast<std::size_t>(lt.slot)].add_term(lt.mono, lc);
        p.components[static_cast<std::size_t>(lt.slot)].add_term(lt.mono, -lc);
      }
    }
    return r;
  }

  void run() {
    seed();
    std::vector<Pair> pairs;
    auto push_pairs_for = [&](int j) {
      for (int i = 0; i < j; ++i) {
        if (basis[static_cast<std::size_t>(i)].lead.slot !=
            basis[static_cast<std::size_t>(j)].lead.slot)
          continue;
        pairs.push_back(
            {i, j,
             Monomial::lcm(basis[static_cast<std::size_t>(i)].lead.mono,
                           basis[static_cast<std::size_t>(j)].lead.mono)});
      }
    };
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) push_pairs_for(j);

    const bool rank_one = ambient.size() == 1;
    while (!pairs.empty()) {
      // Normal strategy: smallest lcm first, ties broken by (i, j).
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        const int c = compare(pairs[k].lcm, pairs[best].lcm);
        if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                                 (pairs[k].i == pairs[best].i &&
                                  pairs[k].j < pairs[best].j))))
          best = k;
      }
      const Pair pr = pairs[best];
      pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

      const WorkElem& a = basis[static_cast<std::size_t>(pr.i)];
      const WorkElem& b = basis[static_cast<std::size_t>(pr.j)];
      // Coprime-lead criterion, ideal case only, and only when the Schreyer
      // syzygies are not being collected (a skipped pair is a skipped
      // syzygy generator).
      if (rank_one && !track_syzygies &&
          Monomial::coprime(a.lead.mono, b.lead.mono))
        continue;

      const Monomial fa = pr.lcm.quotient_by(a.lead.mono);
      const Monomial fb = pr.lcm.quotient_by(b.lead.mono);
      FreeModuleElement s = a.elem.times_term(fa, 1);
      s -= b.elem.times_term(fb, 1);
      std::vector<BiPoly> q;
      const FreeModuleElement r = divide(std::move(s), q);

      if (r.is_zero()) {
        if (track_syzygies) {
          std::map<int, BiPoly> z;
          z[pr.i].add_term(fa, 1);
          z[pr.j].add_term(fb, -1);
          for (std::size_t k = 0; k < q.size(); ++k)
            if (!q[k].is_zero()) {
              z[static_cast<int>(k)] -= q[k];
              if (z[static_cast<int>(k)].is_zero())
                z.erase(static_cast<int>(k));
            }
          if (!z.empty()) schreyer.push_back(std::move(z));
        }
        continue;
      }

      WorkElem w;
      const ModuleTerm lt = lead_term_impl(r);
      const Rational lc = coeff_at(r, lt);
      w.elem = r;
      w.elem *= Rational(1) / lc;
      w.lead = lt;
      w.rep.assign(input.size(), BiPoly());
      for (std::size_t i = 0; i < input.size(); ++i) {
        BiPoly acc = a.rep[i].times_term(fa, 1) - b.rep[i].times_term(fb, 1);
        for (std::size_t k = 0; k < q.size(); ++k)
          if (!q[k].is_zero())
            acc -= q[k] * basis[k].rep[i];
        acc *= Rational(1) / lc;
        w.rep[i] = std::move(acc);
      }
      basis.push_back(std::move(w));
      push_pairs_for(static_cast<int>(basis.size()) - 1);
    }
  }

  // Reduced basis with cofactors over the input generators.
  GroebnerBasis reduced() const {
    GroebnerBasis gb;
    gb.ambient_twists = ambient;
    // Minimalize: drop any element whose lead is divisible by the lead of a
    // kept element; scanning by ascending lead keeps the minimal leads.
    std::vector<int> order(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      const int c = compare(basis[static_cast<std::size_t>(x)].lead,
                            basis[static_cast<std::size_t>(y)].lead);
      return c != 0 ? c < 0 : x < y;
    });
    std::vector<int> kept;
    for (int idx : order) {
      const auto& cand = basis[static_cast<std::size_t>(idx)];
      bool divisible = false;
      for (int kidx : kept) {
        const auto& k = basis[static_cast<std::size_t>(kidx)];
        if (k.lead.slot == cand.lead.slot && k.lead.mono.divides(cand.lead.mono)) {
          divisible = true;
          break;
        }
      }
      if (!divisible) kept.push_back(idx);
    }

    // Tail-reduce each kept element against the others.
    struct Final {
      FreeModuleElement elem;
      std::vector<BiPoly> rep;
      ModuleTerm lead;
    };
    std::vector<Final> fin;
    for (int idx : kept) {
      const auto& self = basis[static_cast<std::size_t>(idx)];
      FreeModuleElement p = self.elem;
      std::vector<BiPoly> rep = self.rep;
      FreeModuleElement r = FreeModuleElement::zero(ambient);
      while (!p.is_zero()) {
        const ModuleTerm lt = lead_term_impl(p);
        const Rational lc = coeff_at(p, lt);
        bool reduced_term = false;
        for (int kidx : kept) {
          if (kidx == idx) continue;
          const auto& other = basis[static_cast<std::size_t>(kidx)];
          if (other.lead.slot != lt.slot || !other.lead.mono.divides(lt.mono))
            continue;
          const Monomial factor = lt.mono.quotient_by(other.lead.mono);
          p -= other.elem.times_term(factor, lc);
          for (std::size_t i = 0; i < rep.size(); ++i)
            rep[i] -= other.rep[i].times_term(factor, lc);
          reduced_term = true;
          break;
        }
        if (!reduced_term) {
          r.components[static_cast<std::size_t>(lt.slot)].add_term(lt.mono, lc);
          p.components[static_cast<std::size_t>(lt.slot)].add_term(lt.mono, -lc);
        }
      }
      if (r.is_zero()) continue;  // fully reducible; redundant
      const ModuleTerm lt = lead_term_impl(r);
      const Rational lc = coeff_at(r, lt);
      Final f;
      f.elem = r;
      f.elem *= Rational(1) / lc;
      for (auto& rp : rep) rp *= Rational(1) / lc;
      f.rep = std::move(rep);
      f.lead = lt;
      fin.push_back(std::move(f));
    }

    std::sort(fin.begin(), fin.end(), [](const Final& x, const Final& y) {
      return compare(x.lead, y.lead) > 0;
    });
    for (auto& f : fin) {
      gb.elements.push_back(std::move(f.elem));
      gb.leads.push_back(f.lead);
      gb.cofactors.push_back(std::move(f.rep));
    }
    return gb;
  }
};

}  // namespace

ModuleTerm lead_term(const FreeModuleElement& x) {
  if (x.is_zero()) throw ZeroPolynomialError();
  return lead_term_impl(x);
}

bool GroebnerBasis::is_unit_ideal() const {
  if (rank() != 1) return false;
  for (const auto& e : elements) {
    const auto& p = e.components[0];
    if (!p.is_zero() && p.lead_monomial().is_one()) return true;
  }
  return false;
}

GroebnerBasis groebner_basis(const SubmodulePresentation& gens) {
  Engine e(gens);
  e.run();
  return e.reduced();
}

GroebnerBasis groebner_basis(const std::vector<BiPoly>& ideal_gens) {
  return groebner_basis(SubmodulePresentation::ideal(ideal_gens));
}

NormalFormResult normal_form(const FreeModuleElement& x,
                             const GroebnerBasis& gb) {
  if (x.twists != gb.ambient_twists) throw AmbientMismatchError();
  NormalFormResult out;
  out.cofactors.assign(gb.elements.size(), BiPoly());
  FreeModuleElement p = x;
  FreeModuleElement r = FreeModuleElement::zero(gb.ambient_twists);
  while (!p.is_zero()) {
    const ModuleTerm lt = lead_term_impl(p);
    const Rational lc = [&] {
      const auto& terms = p.components[static_cast<std::size_t>(lt.slot)].terms();
      return terms.find(lt.mono)->second;
    }();
    bool reduced = false;
    for (std::size_t k = 0; k < gb.elements.size(); ++k) {
      if (gb.leads[k].slot != lt.slot || !gb.leads[k].mono.divides(lt.mono))
        continue;
      const Monomial factor = lt.mono.quotient_by(gb.leads[k].mono);
      p -= gb.elements[k].times_term(factor, lc);
      out.cofactors[k].add_term(factor, lc);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.components[static_cast<std::size_t>(lt.slot)].add_term(lt.mono, lc);
      p.components[static_cast<std::size_t>(lt.slot)].add_term(lt.mono, -lc);
    }
  }
  out.remainder = std::move(r);
  return out;
}

BiPoly normal_form(const BiPoly& x, const GroebnerBasis& gb) {
  return normal_form(FreeModuleElement::from_poly(x), gb)
      .remainder.components[0];
}

bool in_submodule(const FreeModuleElement& x, const GroebnerBasis& gb) {
  return normal_form(x, gb).remainder.is_zero();
}

bool in_ideal(const BiPoly& x, const GroebnerBasis& gb) {
  return in_submodule(FreeModuleElement::from_poly(x), gb);
}

SubmodulePresentation syzygy_module(const SubmodulePresentation& gens) {
  Engine e(gens);
  e.track_syzygies = true;
  e.run();

  // Ambient of the syzygies: one slot per input generator, twisted by its
  // module bidegree when defined.
  std::vector<BiDegree> twists(gens.generators.size(), BiDegree{0, 0});
  bool graded = true;
  for (const auto& g : gens.generators)
    if (g.is_zero() || !g.is_bihomogeneous()) graded = false;
  if (graded)
    for (std::size_t i = 0; i < gens.generators.size(); ++i)
      twists[i] = -gens.generators[i].module_bidegree();

  SubmodulePresentation syz(twists);
  for (int slot : e.zero_input_slots)
    syz.add_generator(FreeModuleElement::basis(twists, slot));
  for (const auto& z : e.schreyer) {
    FreeModuleElement v = FreeModuleElement::zero(twists);
    for (const auto& [k, poly] : z) {
      const auto& rep = e.basis[static_cast<std::size_t>(k)].rep;
      for (std::size_t i = 0; i < rep.size(); ++i)
        v.components[i] += poly * rep[i];
    }
    if (!v.is_zero()) syz.add_generator(std::move(v));
  }

  // Canonicalize the presentation: the reduced basis of the syzygy module.
  if (!syz.generators.empty()) {
    GroebnerBasis gb = groebner_basis(syz);
    SubmodulePresentation out(twists);
    for (auto& el : gb.elements) out.add_generator(std::move(el));
    return out;
  }
  return syz;
}

SubmodulePresentation syzygy_module(const std::vector<BiPoly>& ideal_gens) {
  return syzygy_module(SubmodulePresentation::ideal(ideal_gens));
}

SubmodulePresentation eliminate_aux(const SubmodulePresentation& gens) {
  GroebnerBasis gb = groebner_basis(gens);
  SubmodulePresentation out(gens.ambient_twists);
  for (auto& el : gb.elements)
    if (!el.has_aux()) out.add_generator(std::move(el));
  return out;
}

SubmodulePresentation submodule_intersect(const SubmodulePresentation& m,
                                          const SubmodulePresentation& n) {
  require_same_ambient(m, n);
  // Over R[w]: w·M + (1-w)·N meets the w-free part in M ∩ N.
  const BiPoly w = BiPoly::term(Monomial::aux(), 1);
  const BiPoly one_minus_w = BiPoly::one() - w;
  SubmodulePresentation mixed(m.ambient_twists);
  for (const auto& g : m.generators) mixed.add_generator(g.times_poly(w));
  for (const auto& g : n.generators)
    mixed.add_generator(g.times_poly(one_minus_w));
  return eliminate_aux(mixed);
}

bool submodule_contains(const GroebnerBasis& big,
                        const SubmodulePresentation& small) {
  for (const auto& g : small.generators)
    if (!in_submodule(g, big)) return false;
  return true;
}

bool modules_equal(const SubmodulePresentation& a,
                   const SubmodulePresentation& b) {
  require_same_ambient(a, b);
  const GroebnerBasis ga = groebner_basis(a);
  const GroebnerBasis gb = groebner_basis(b);
  return submodule_contains(ga, b) && submodule_contains(gb, a);
}

bool spairs_reduce_to_zero(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
      if (gb.leads[i].slot != gb.leads[j].slot) continue;
      const Monomial l = Monomial::lcm(gb.leads[i].mono, gb.leads[j].mono);
      FreeModuleElement s =
          gb.elements[i].times_term(l.quotient_by(gb.leads[i].mono), 1);
      s -= gb.elements[j].times_term(l.quotient_by(gb.leads[j].mono), 1);
      if (!normal_form(s, gb).remainder.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace bisyz
