#pragma once

#include <array>

namespace canondeg {

/// Exponents of the 2x3 matrix
///
///     ( X^a1  Y^b1  Z^c1 )
///     ( Y^b2  Z^c2  X^a2 )
///
/// whose 2x2 minors define k[[t^a, t^b, t^c]] for a non-symmetric <a,b,c>,
/// with X, Y, Z mapped to t^a, t^b, t^c in the order given by `order`.
struct HerzogMatrix {
  std::array<int, 3> order{};
  int a1 = 0, a2 = 0;
  int b1 = 0, b2 = 0;
  int c1 = 0, c2 = 0;

  std::array<int, 3> top_row() const { return {a1, b1, c1}; }
  std::array<int, 3> bottom_row() const { return {b2, c2, a2}; }

  friend bool operator==(const HerzogMatrix&, const HerzogMatrix&) = default;
};

/// Throws NotThreeGenerated when <a,b,c> is not minimally 3-generated (or
/// gcd != 1 via GcdNotOne), GorensteinCase when it is symmetric.
HerzogMatrix herzog_matrix(int a, int b, int c);

/// a1 b1 c1 if b b2 > a a1, a2 b2 c2 if b b2 < a a1. Throws DegenerateSign on equality.
int cdeg_closed_form(const HerzogMatrix& m);

/// min(a1,a2) min(b1,b2) min(c1,c2)
int bideg_closed_form(const HerzogMatrix& m);

struct AglPattern {
  bool is_agl = false;
  bool is_2agl = false;
};

/// Matrix shapes that characterize AGL and 2-AGL rings, tested up to
/// relabeling of the generators.
AglPattern agl_from_matrix(const HerzogMatrix& m);

/// Two matrix shapes conjectured to relate to 3-AGL rings; reported, not
/// asserted. `cube_top`: a row (3,1,1) whose 3 sits on a variable with
/// other exponent >= 3. `square_top_unit`: a row (2,1,1) whose 2 sits on a
/// variable with other exponent 1.
struct ThreeAglProbe {
  bool cube_top = false;
  bool square_top_unit = false;
};

ThreeAglProbe three_agl_patterns(const HerzogMatrix& m);

}  // namespace canondeg
