#pragma once

#include <string>

#include "pbdelta/bundle.hpp"
#include "pbdelta/divisor.hpp"
#include "pbdelta/rational.hpp"

namespace pbd {

/// Outcome of the sufficient K-semistability test for (P(E), L) given a
/// positive lower bound delta_lower <= delta(L): the pair passes when both
///   witness_first  = delta_lower * L + K   and
///   witness_second = (n * (K . L^(n-1)) / L^n + delta_lower) * L - (n-1) * K
/// are nef.
struct ksufficient_report {
  bool first_nef = false;
  bool second_nef = false;
  bool passes = false;
  divisor_class witness_first;
  divisor_class witness_second;
  std::string note;
};

ksufficient_report ksemistable_sufficient(const divisor_class& l, const rational& delta_lower,
                                          const bundle& e);

enum class polarization_class {
  all_kpolystable,            // every ample L gives a K-polystable pair
  all_ksemistable_not_poly,   // K-semistable but never K-polystable
  none_ksemistable,           // no ample L gives a K-semistable pair
};

const char* polarization_class_name(polarization_class value);

/// Classification of all ample polarizations by the bundle's stability type:
/// stable or polystable bundles give K-polystable pairs, strictly semistable
/// ones K-semistable-never-polystable pairs, unstable ones nothing.
polarization_class classify_polarizations(const bundle& e);

}  // namespace pbd
