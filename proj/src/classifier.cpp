#include "pacurve/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pacurve/twist.hpp"

namespace pacurve {

namespace {

Rational abs_q(const Rational& x) { return x < 0 ? Rational(-x) : x; }

DilatationEstimate summarize(std::vector<Weight> totals) {
  DilatationEstimate est;
  const int n = static_cast<int>(totals.size()) - 1;
  est.iterations = n;
  auto ratio = [&](int k) {
    Rational r(totals[k], totals[k - 1]);
    r.canonicalize();
    return r;
  };
  est.lambda = ratio(n);
  est.residual = 0;
  for (int k = std::max(1, n - 3); k < n; ++k) {
    Rational dev = abs_q(ratio(k) - est.lambda) / est.lambda;
    if (dev > est.residual) est.residual = dev;
  }
  est.monotone = true;
  for (int k = 1; k <= n; ++k) est.monotone = est.monotone && totals[k] >= totals[k - 1];
  est.exponential = n >= 10 && totals[n] >= 2 * totals[n - 10];
  est.totals = std::move(totals);
  return est;
}

void extend(const Encoding& e, Multicurve& current, std::vector<Weight>& totals, int upto) {
  while (static_cast<int>(totals.size()) <= upto) {
    current = e.act(current);
    Weight w = current.total();
    if (w == 0) throw std::logic_error("dilatation estimate: essential seed mapped to zero weight");
    totals.push_back(std::move(w));
  }
}

Weight isqrt(const Weight& x) {
  Weight r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

}  // namespace

int default_order_bound(const Triangulation& t) { return 4 * t.genus() + (t.punctures() == 0 ? 2 : 4); }

std::optional<int> periodic_check(const Encoding& e, int order_bound, const std::vector<Multicurve>& probes) {
  if (order_bound < 1) throw std::invalid_argument("periodic_check: order bound must be positive");
  const auto& base = probes.empty() ? probe_curves(e.source_ptr()) : probes;
  std::vector<Multicurve> cur = base;
  for (int p = 1; p <= order_bound; ++p) {
    bool all = true;
    for (size_t i = 0; i < cur.size(); ++i) {
      cur[i] = e.act(cur[i]);
      all = all && cur[i] == base[i];
    }
    if (all) return p;
  }
  return std::nullopt;
}

std::optional<InvariantSearchResult> invariant_multicurve_search(const Encoding& e, int depth, int weight_cap,
                                                                 const std::vector<Multicurve>& extra_seeds) {
  if (depth < 1 || weight_cap < 1) throw std::invalid_argument("invariant search: depth and weight cap must be positive");
  auto seeds = enumerate_curves(e.source_ptr(), weight_cap);
  seeds.insert(seeds.end(), extra_seeds.begin(), extra_seeds.end());
  std::optional<InvariantSearchResult> fallback;
  for (const auto& seed : seeds) {
    InvariantSearchResult r;
    r.orbit.push_back(seed);
    Multicurve x = e.act(seed);
    for (int p = 1; p <= depth; ++p) {
      if (x == seed) {
        r.period = p;
        break;
      }
      r.orbit.push_back(x);
      x = e.act(x);
    }
    if (r.period == 0) continue;
    r.disjoint = true;
    for (size_t i = 0; i < r.orbit.size() && r.disjoint; ++i) {
      for (size_t j = i + 1; j < r.orbit.size() && r.disjoint; ++j) r.disjoint = are_disjoint(r.orbit[i], r.orbit[j]);
    }
    if (r.disjoint) return r;
    if (!fallback) fallback = std::move(r);
  }
  return fallback;
}

DilatationEstimate dilatation_estimate(const Encoding& e, const Multicurve& seed, int iters) {
  if (iters < 3) throw std::invalid_argument("dilatation estimate needs at least 3 iterations");
  if (seed.total() == 0) throw std::invalid_argument("dilatation estimate needs a nonempty seed");
  Multicurve cur = seed;
  std::vector<Weight> totals{seed.total()};
  extend(e, cur, totals, iters);
  return summarize(std::move(totals));
}

double QuadraticNumber::to_double() const {
  return a.get_d() + b.get_d() * std::sqrt(d.get_d());
}

std::string QuadraticNumber::to_decimal(int digits) const {
  // b sqrt(d) = sign(b) sqrt(p^2 d 10^(2k)) / (q 10^k), truncated.
  Weight scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Weight p = b.get_num(), q = b.get_den();
  Weight root = isqrt(p * p * d * scale * scale);
  Rational irr(p < 0 ? Weight(-root) : root, q * scale);
  irr.canonicalize();
  return pacurve::to_decimal(a + irr, digits);
}

std::string QuadraticNumber::to_string() const {
  if (b == 0) return a.get_str();
  return a.get_str() + " + " + b.get_str() + "*sqrt(" + d.get_str() + ")";
}

OracleResult two_twist_oracle(const std::vector<std::pair<char, long>>& word, long i_ab) {
  if (word.empty()) throw std::invalid_argument("two_twist_oracle: empty word");
  if (i_ab <= 0) throw std::invalid_argument("two_twist_oracle: intersection number must be positive");
  std::array<Weight, 4> m = {1, 0, 0, 1};
  for (auto [letter, p] : word) {
    std::array<Weight, 4> g;
    if (letter == 'a') {
      g = {1, Weight(p * i_ab), 0, 1};
    } else if (letter == 'b') {
      g = {1, 0, Weight(-p * i_ab), 1};
    } else {
      throw std::invalid_argument("two_twist_oracle: letters must be a or b");
    }
    m = {m[0] * g[0] + m[1] * g[2], m[0] * g[1] + m[1] * g[3], m[2] * g[0] + m[3] * g[2], m[2] * g[1] + m[3] * g[3]};
  }
  OracleResult r;
  r.matrix = m;
  r.trace = m[0] + m[3];
  Weight t = abs(r.trace);
  if (t < 2) {
    r.type = OracleType::Periodic;
  } else if (t == 2) {
    r.type = OracleType::Reducible;
  } else {
    r.type = OracleType::PseudoAnosov;
    // lambda = (t + sqrt(t^2 - 4)) / 2 with t^2 - 4 = s^2 d, d squarefree.
    Weight disc = t * t - 4;
    Weight s = 1;
    for (Weight f = 2; f * f <= disc && f < 1'000'000; ++f) {
      while (disc % (f * f) == 0) {
        disc /= f * f;
        s *= f;
      }
    }
    if (mpz_perfect_square_p(disc.get_mpz_t())) {
      Weight root = isqrt(disc);
      s *= root;
      disc = 1;
    }
    QuadraticNumber q;
    q.a = Rational(t, 2);
    q.b = Rational(s, 2);
    q.a.canonicalize();
    q.b.canonicalize();
    q.d = disc;
    if (disc == 1) {
      q.a += q.b;
      q.b = 0;
    }
    r.dilatation = q;
  }
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Periodic:
      return "Periodic";
    case Verdict::ReducibleEvidence:
      return "ReducibleEvidence";
    case Verdict::PseudoAnosovEvidence:
      return "PseudoAnosovEvidence";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

std::vector<Multicurve> dilatation_seeds(const HostPtr& host, int count) {
  auto probes = probe_curves(host);
  if (static_cast<int>(probes.size()) > count) probes.erase(probes.begin() + count, probes.end());
  return probes;
}

ClassificationReport classify(const Encoding& e, const ClassifierParams& params,
                              const std::vector<Multicurve>& extra_seeds) {
  ClassificationReport rep;
  rep.params = params;
  rep.order_bound_used = params.order_bound > 0 ? params.order_bound : default_order_bound(e.source());

  rep.order = periodic_check(e, rep.order_bound_used);
  if (rep.order) {
    rep.verdict = Verdict::Periodic;
    return rep;
  }

  rep.invariant = invariant_multicurve_search(e, params.search_depth, params.weight_cap, extra_seeds);
  if (rep.invariant) {
    if (rep.invariant->disjoint) {
      rep.verdict = Verdict::ReducibleEvidence;
    } else {
      rep.verdict = Verdict::Inconclusive;
      rep.diagnostics.push_back("finite orbit of intersecting curves; not pseudo-Anosov");
    }
    return rep;
  }

  auto seeds = dilatation_seeds(e.source_ptr(), params.seeds);
  if (seeds.size() < 2) {
    rep.diagnostics.push_back("fewer than two seed curves");
    return rep;
  }
  const Rational tol(params.tolerance);
  const Rational min_lambda(params.min_dilatation);
  bool all_ok = true;
  for (const auto& seed : seeds) {
    Multicurve cur = seed;
    std::vector<Weight> totals{seed.total()};
    int n = std::max(params.iterations, 11);
    DilatationEstimate est;
    while (true) {
      extend(e, cur, totals, n);
      est = summarize(totals);
      if ((est.exponential && est.residual <= tol) || n >= params.max_iterations) break;
      n = std::min(2 * n, params.max_iterations);
    }
    bool ok = est.exponential && est.residual <= tol && est.lambda >= min_lambda;
    if (!est.exponential) rep.diagnostics.push_back("seed growth is not exponential");
    if (est.residual > tol) rep.diagnostics.push_back("ratio residual above tolerance");
    all_ok = all_ok && ok;
    rep.seed_runs.push_back(std::move(est));
  }
  if (all_ok) {
    const Rational& ref = rep.seed_runs.front().lambda;
    for (const auto& run : rep.seed_runs) {
      if (abs_q(run.lambda - ref) / ref > tol) {
        all_ok = false;
        rep.diagnostics.push_back("seeds disagree on the dilatation");
        break;
      }
    }
  }
  if (all_ok) {
    rep.verdict = Verdict::PseudoAnosovEvidence;
    rep.lambda = rep.seed_runs.front().lambda;
  }
  return rep;
}

}  // namespace pacurve
