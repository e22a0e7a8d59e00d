#include "pbdelta/verify.hpp"

#include <functional>
#include <string>

#include "pbdelta/blowup.hpp"
#include "pbdelta/combinatorics.hpp"
#include "pbdelta/delta.hpp"
#include "pbdelta/divisor.hpp"
#include "pbdelta/error.hpp"
#include "pbdelta/sampling.hpp"
#include "pbdelta/volume.hpp"

namespace pbd {

rational segre_triple_power(long h_exp, long f_exp, long e_exp, const bundle& e) {
  long n = e.rank();
  if (h_exp < 0 || f_exp < 0 || e_exp < 0 || h_exp + f_exp + e_exp != n)
    fail(errc::invalid_argument,
         "segre_triple_power needs nonnegative exponents summing to " + std::to_string(n));
  long r = e.blowup_rank();

  if (e_exp == 0) {
    if (f_exp >= 2) return rational(0);
    return f_exp == 0 ? rational(e.degree()) : rational(1);
  }

  long k = e_exp - r;  // Segre degree of the normal bundle contribution
  if (k < 0) return rational(0);

  // Top intersections on the blowup center, a projective bundle of rank
  // n - r over the curve: h^(n-r) = (n-r) mu_min, h^(n-r-1) f = 1, f^2 = 0.
  auto center = [&](long alpha, long beta) -> rational {
    if (beta == 0 && alpha == n - r) return rational(n - r) * e.slope_min();
    if (beta == 1 && alpha == n - r - 1) return rational(1);
    return rational(0);
  };

  // s(N) for the twisted normal bundle truncates after two terms because the
  // base is a curve: s_k = (-1)^k C(r+k-1,k) h^k + (-1)^(k-1) C(r+k-1,k-1) d1 h^(k-1) f,
  // and the blowup pushforward of D^c carries (-1)^(c-1).
  rational d1 = rational(r) * e.slope_max();
  rational term1 = rational(binom(r + k - 1, k)) * center(h_exp + k, f_exp);
  rational term2 = rational(binom(r + k - 1, k - 1)) * d1 * center(h_exp + k - 1, f_exp + 1);
  if (k % 2 != 0) term1 = -term1;
  if ((k - 1) % 2 != 0) term2 = -term2;
  rational sum = term1 + term2;
  if ((e_exp - 1) % 2 != 0) sum = -sum;
  return sum;
}

namespace {

struct checker {
  std::vector<verify_item> items;
  void add(const std::string& name, bool pass, const std::string& detail) {
    items.push_back({name, pass, detail});
  }
  /// Runs `body` as a counting check: body calls yield(lhs == rhs) per case.
  void sweep(const std::string& name, const std::function<void(const std::function<void(bool)>&)>& body) {
    long total = 0, failed = 0;
    body([&](bool ok) {
      ++total;
      if (!ok) ++failed;
    });
    add(name, failed == 0 && total > 0,
        std::to_string(total) + " cases, " + std::to_string(failed) + " failures");
  }
};

}  // namespace

std::vector<verify_item> run_verification(const verify_options& options) {
  if (options.nmax < 4)
    fail(errc::invalid_argument, "verification needs nmax >= 4");
  if (options.instances < 1)
    fail(errc::invalid_argument, "verification needs at least one instance");

  checker out;
  long nmax = options.nmax;

  out.sweep("identity-main", [&](auto&& yield) {
    for (long n = 2; n <= nmax; ++n)
      for (long r = 1; r < n; ++r) {
        auto sides = identity_main(n, r);
        yield(sides.lhs == sides.rhs);
      }
  });

  out.sweep("identity-aux-n-minus-r", [&](auto&& yield) {
    for (long n = 3; n <= nmax; ++n)
      for (long r = 1; r <= n - 2; ++r) {
        auto sides = identity_aux(aux_identity::sum_is_n_minus_r, n, r);
        yield(sides.lhs == sides.rhs);
      }
  });

  out.sweep("identity-aux-one", [&](auto&& yield) {
    for (long n = 4; n <= nmax; ++n)
      for (long r = 1; r <= n - 3; ++r) {
        auto sides = identity_aux(aux_identity::sum_is_one, n, r);
        yield(sides.lhs == sides.rhs);
      }
  });

  out.sweep("identity-aux-zero", [&](auto&& yield) {
    for (long n = 1; n <= nmax; ++n)
      for (long r = 0; r < n; ++r) {
        auto sides = identity_aux(aux_identity::sum_is_zero, n, r);
        yield(sides.lhs == sides.rhs);
      }
  });

  out.sweep("binomial-pascal", [&](auto&& yield) {
    long cap = nmax < 60 ? nmax : 60;
    for (long n = 1; n <= cap; ++n)
      for (long k = 0; k <= n; ++k) {
        yield(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
        yield(binom(n, k) == binom(n, n - k));
      }
  });

  instance_sampler sampler(options.seed);
  std::vector<bundle> bundles;
  std::vector<divisor_class> classes;
  for (int i = 0; i < options.instances; ++i) {
    bundles.push_back(sampler.random_two_step(6));
    classes.push_back(sampler.random_ample(bundles.back()));
  }

  out.sweep("segre-vs-case-table", [&](auto&& yield) {
    for (const bundle& e : bundles) {
      long n = e.rank();
      for (long i = 0; i <= n; ++i)
        for (long j = 0; i + j <= n; ++j)
          yield(triple_power(i, j, n - i - j, e) == segre_triple_power(i, j, n - i - j, e));
    }
  });

  out.sweep("pullback-top-power", [&](auto&& yield) {
    for (int i = 0; i < options.instances; ++i)
      yield(eval_power({classes[i].a, classes[i].b, rational(0)}, bundles[i]) ==
            eval_top_power(classes[i], bundles[i]));
  });

  out.sweep("fiber-closed-form-vs-integral", [&](auto&& yield) {
    for (int i = 0; i < options.instances; ++i) {
      rational vol = eval_top_power(classes[i], bundles[i]);
      yield(s_fiber(classes[i], bundles[i]) * vol ==
            integral_volume(classes[i], axis::fiber, bundles[i]));
    }
  });

  out.sweep("exceptional-closed-form-vs-integral", [&](auto&& yield) {
    for (int i = 0; i < options.instances; ++i) {
      rational vol = eval_top_power(classes[i], bundles[i]);
      yield(s_exceptional(classes[i], bundles[i]) * vol ==
            integral_volume(classes[i], axis::exceptional, bundles[i]));
    }
  });

  out.sweep("chamber-wall-continuity", [&](auto&& yield) {
    for (int i = 0; i < options.instances; ++i) {
      auto profile = chamber_profile(classes[i], axis::fiber, bundles[i]);
      for (size_t c = 0; c + 1 < profile.size(); ++c) {
        yield(profile[c].hi == profile[c + 1].lo);
        yield(profile[c].poly(profile[c].hi) == profile[c + 1].poly(profile[c + 1].lo));
      }
    }
  });

  out.sweep("threshold-vanishing", [&](auto&& yield) {
    for (int i = 0; i < options.instances; ++i) {
      for (axis ax : {axis::fiber, axis::exceptional}) {
        auto profile = chamber_profile(classes[i], ax, bundles[i]);
        rational tau = pseff_threshold(classes[i], ax, bundles[i]);
        yield(profile.back().hi == tau);
        yield(profile.back().poly(tau).is_zero());
      }
    }
  });

  out.sweep("degenerate-slopes-collapse", [&](auto&& yield) {
    for (int i = 0; i < options.instances; ++i) {
      long n = sampler.uniform(2, 6);
      long r = sampler.uniform(1, n - 1);
      rational mu = sampler.random_rational(-6, 6, 6);
      rational a = sampler.random_rational(1, 12, 12);
      rational b = -a * mu + sampler.random_rational(1, 12, 12);
      yield(s_fiber_formula(n, r, mu, mu, a, b) == (a * mu + b) / rational(2));
      yield(s_exceptional_formula(n, r, mu, mu, a, b) == rational(r) * a / rational(n));
    }
  });

  out.sweep("scaling-covariance", [&](auto&& yield) {
    for (int i = 0; i < options.instances; ++i) {
      rational lambda = sampler.random_rational(1, 9, 9);
      delta_report rep = delta_for(classes[i], bundles[i]);
      delta_report scaled = delta_for(lambda * classes[i], bundles[i]);
      yield(scaled.s_fiber == lambda * rep.s_fiber);
      yield(scaled.s_exceptional.value() == lambda * rep.s_exceptional.value());
      yield(scaled.lower * lambda == rep.lower);
      yield(scaled.upper * lambda == rep.upper);
      yield(scaled.exact == rep.exact);
    }
  });

  return out.items;
}

bool all_pass(const std::vector<verify_item>& items) {
  for (const auto& item : items)
    if (!item.pass) return false;
  return !items.empty();
}

string_table verification_table(const std::vector<verify_item>& items) {
  string_table table;
  table.columns = {"item", "pass", "detail"};
  for (const auto& item : items)
    table.rows.push_back({item.name, item.pass ? "true" : "false", item.detail});
  return table;
}

}  // namespace pbd
