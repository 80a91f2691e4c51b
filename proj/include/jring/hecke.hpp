#pragma once

#include <map>

#include "jring/coxeter.hpp"
#include "jring/laurent.hpp"

namespace jring {

// Finite A-linear combination of standard basis elements T_w; zero
// coefficients are never stored.
using HeckeVector = std::map<ElementIndex, LaurentPoly>;

void hecke_add(HeckeVector& acc, ElementIndex w, const LaurentPoly& c);

HeckeVector t_basis(ElementIndex w);

// T_s * vec and vec * T_s by the quadratic rule
//   T_s T_w = T_{sw}                            if sw > w
//           = T_{sw} + (v - v^{-1}) T_w         if sw < w
HeckeVector left_gen_mul(const CoxeterGroup& g, int s, const HeckeVector& vec);
HeckeVector right_gen_mul(const CoxeterGroup& g, const HeckeVector& vec, int s);
// vec * T_s^{-1}, with T_s^{-1} = T_s - (v - v^{-1}) T_e
HeckeVector right_gen_inv_mul(const CoxeterGroup& g, const HeckeVector& vec, int s);

// T_x T_y expanded in the T-basis; the coefficient of T_z is f_{x,y,z}
HeckeVector t_multiply(const CoxeterGroup& g, ElementIndex x, ElementIndex y);

// F_{x,y,z} = v^{l(x)+l(y)-l(z)} f_{x,y,z}
LaurentPoly f_rescaled(const CoxeterGroup& g, ElementIndex x, ElementIndex y,
                       ElementIndex z, const LaurentPoly& f);

// bar(sum a_w T_w) = sum bar(a_w) bar(T_w) with bar(T_w) = T_{w^{-1}}^{-1}
HeckeVector hecke_bar(const CoxeterGroup& g, const HeckeVector& vec);

}  // namespace jring
