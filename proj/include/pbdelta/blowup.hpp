#pragma once

#include "pbdelta/bundle.hpp"
#include "pbdelta/rational.hpp"

namespace pbd {

/// Class h*H + f*F + e*D on the blowup of the projectivized bundle along the
/// projectivized quotient: H, F are the pullbacks of the tautological and
/// fiber classes, D is the exceptional divisor.
struct blowup_class {
  rational h;
  rational f;
  rational e;
};

/// Top intersection number H^h_exp . F^f_exp . D^e_exp (exponents summing to
/// the dimension n) on the blowup determined by the bundle's destabilizing
/// step, or by its declared equal-slope sub_rank in the semistable case.
rational triple_power(long h_exp, long f_exp, long e_exp, const bundle& e);

/// (h*H + f*F + e*D)^n via multinomial expansion over triple_power.
rational eval_power(const blowup_class& c, const bundle& e);

}  // namespace pbd
