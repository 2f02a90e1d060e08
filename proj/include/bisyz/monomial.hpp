#pragma once

#include <array>
#include <algorithm>
#include <cassert>
#include <compare>
#include <string>

namespace bisyz {

// Bidegree (d, d') in the grading deg s = deg u = (1,0), deg t = deg v = (0,1).
// Negative entries are meaningful (module twists), and the componentwise
// order is partial; callers compare components explicitly.
struct BiDegree {
  int first = 0;
  int second = 0;

  friend bool operator==(const BiDegree&, const BiDegree&) = default;

  BiDegree operator+(const BiDegree& o) const {
    return {first + o.first, second + o.second};
  }
  BiDegree operator-(const BiDegree& o) const {
    return {first - o.first, second - o.second};
  }
  BiDegree operator-() const { return {-first, -second}; }

  bool componentwise_leq(const BiDegree& o) const {
    return first <= o.first && second <= o.second;
  }
  bool is_nonnegative() const { return first >= 0 && second >= 0; }

  std::string to_string() const {
    return "(" + std::to_string(first) + "," + std::to_string(second) + ")";
  }
};

inline constexpr int kVarCount = 4;
inline constexpr std::array<char, kVarCount> kVarNames = {'s', 'u', 't', 'v'};
inline constexpr int kVarS = 0;
inline constexpr int kVarU = 1;
inline constexpr int kVarT = 2;
inline constexpr int kVarV = 3;

// Power product in s, u, t, v plus one auxiliary exponent slot used
// internally by elimination (intersection, saturation). The auxiliary
// variable never appears in parsed or serialized data and carries no
// bidegree.
class Monomial {
 public:
  Monomial() = default;
  Monomial(int es, int eu, int et, int ev, int eaux = 0)
      : e_{es, eu, et, ev, eaux} {
    assert(es >= 0 && eu >= 0 && et >= 0 && ev >= 0 && eaux >= 0);
  }

  static Monomial one() { return {}; }
  static Monomial variable(int index, int power = 1) {
    assert(index >= 0 && index < kVarCount);
    Monomial m;
    m.e_[static_cast<std::size_t>(index)] = power;
    return m;
  }
  static Monomial aux(int power = 1) {
    Monomial m;
    m.e_[kVarCount] = power;
    return m;
  }

  int exponent(int index) const { return e_[static_cast<std::size_t>(index)]; }
  int aux_exponent() const { return e_[kVarCount]; }
  bool has_aux() const { return e_[kVarCount] > 0; }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
  }

  // Total degree in s, u, t, v; the auxiliary slot does not count.
  int total_degree() const { return e_[0] + e_[1] + e_[2] + e_[3]; }
  BiDegree bidegree() const { return {e_[0] + e_[1], e_[2] + e_[3]}; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // Pre: o divides *this.
  Monomial quotient_by(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      assert(e_[i] >= o.e_[i]);
      r.e_[i] = e_[i] - o.e_[i];
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<int, kVarCount + 1> e_{};
};

enum class MonomialOrder { kDegRevLex };

// Fixed global order: degrevlex with s > u > t > v. The auxiliary variable,
// when present, dominates everything (a block order), so one comparison
// function serves both ordinary and elimination computations.
// Returns <0, 0, >0 for a < b, a == b, a > b.
inline int compare(const Monomial& a, const Monomial& b,
                   MonomialOrder = MonomialOrder::kDegRevLex) {
  if (a.aux_exponent() != b.aux_exponent())
    return a.aux_exponent() < b.aux_exponent() ? -1 : 1;
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  // Equal total degree: the last nonzero entry of a - b decides,
  // negative meaning a > b.
  for (int i = kVarCount - 1; i >= 0; --i) {
    const int d = a.exponent(i) - b.exponent(i);
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
};

}  // namespace bisyz
