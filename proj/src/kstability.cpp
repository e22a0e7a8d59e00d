#include "pbdelta/kstability.hpp"

#include "pbdelta/error.hpp"

namespace pbd {

ksufficient_report ksemistable_sufficient(const divisor_class& l, const rational& delta_lower,
                                          const bundle& e) {
  if (!is_ample(l, e))
    fail(errc::not_ample, "ksemistable_sufficient needs an ample class");
  if (delta_lower.sign() <= 0)
    fail(errc::invalid_argument,
         "ksemistable_sufficient needs a positive delta lower bound, got " + delta_lower.str());

  long n = e.rank();
  divisor_class k = canonical_class(e);
  rational kl = pair_with_power(k, l, e);
  rational ln = eval_top_power(l, e);
  rational coef = rational(n) * kl / ln + delta_lower;

  ksufficient_report rep;
  rep.witness_first = delta_lower * l + k;
  rep.witness_second = coef * l - rational(n - 1) * k;

  cone_region first = cone_position(rep.witness_first, e);
  cone_region second = cone_position(rep.witness_second, e);
  rep.first_nef = first == cone_region::ample || first == cone_region::nef_not_ample;
  rep.second_nef = second == cone_region::ample || second == cone_region::nef_not_ample;
  rep.passes = rep.first_nef && rep.second_nef;
  if (rep.passes && (first == cone_region::nef_not_ample || second == cone_region::nef_not_ample))
    rep.note = "a witness lies on the boundary of the nef cone";
  return rep;
}

const char* polarization_class_name(polarization_class value) {
  switch (value) {
    case polarization_class::all_kpolystable: return "all_ample_kpolystable";
    case polarization_class::all_ksemistable_not_poly:
      return "all_ample_ksemistable_not_polystable";
    case polarization_class::none_ksemistable: return "none_ksemistable";
  }
  return "unknown";
}

polarization_class classify_polarizations(const bundle& e) {
  switch (e.stability()) {
    case stability_flag::stable:
    case stability_flag::polystable:
      return polarization_class::all_kpolystable;
    case stability_flag::strictly_semistable:
      return polarization_class::all_ksemistable_not_poly;
    case stability_flag::unstable_one_step:
      return polarization_class::none_ksemistable;
  }
  fail(errc::invalid_argument, "unknown stability flag");
}

}  // namespace pbd
