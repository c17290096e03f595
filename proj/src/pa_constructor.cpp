#include "pacurve/pa_constructor.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "pacurve/surface.hpp"
#include "pacurve/twist.hpp"

namespace pacurve {

namespace {

bool off_system(const Multicurve& image, const CurveSystem& sys) {
  for (const auto& c : sys.curves) {
    if (image == c) return false;
  }
  return true;
}

std::string fresh_name(const CurveSystem& sys) {
  for (int i = 1;; ++i) {
    std::string n = "m" + std::to_string(i);
    if (sys.index_of(n) < 0) return n;
  }
}

bool disjoint_from_all(const Multicurve& c, const CurveSystem& sys) {
  for (const auto& s : sys.curves) {
    if (c == s || !are_disjoint(c, s)) return false;
  }
  return true;
}

// First (c', c'', k) found with curves up to total weight `cap`.
std::optional<MaximalizeStep> find_step(const CurveSystem& sys, const Encoding& f, int cap, long max_power) {
  auto pool = enumerate_curves(sys.host, cap);
  std::vector<Multicurve> free;
  for (const auto& c : pool) {
    if (disjoint_from_all(c, sys)) free.push_back(c);
  }
  // Non-isolating twist curves first: their twists are single annulus blocks.
  std::vector<Multicurve> twisters;
  for (const auto& c : free) {
    if (!is_isolating(c)) twisters.push_back(c);
  }
  for (const auto& c : free) {
    if (is_isolating(c)) twisters.push_back(c);
  }
  for (const auto& c1 : free) {
    auto extended = sys.with_curve(fresh_name(sys), c1);
    if (!check_independent(extended).independent) continue;
    for (const auto& c2 : twisters) {
      if (c2 == c1 || are_disjoint(c1, c2) || !intersects(c1, c2)) continue;
      auto unit = twist(c2, 1);
      Multicurve x = c1;
      for (long k = 1; k <= max_power; ++k) {
        x = unit.act(x);
        if (off_system(f.act(x), extended)) return MaximalizeStep{extended.names.back(), c1, c2, k};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<long>> sweep_vectors(size_t reps, bool independent, long level) {
  std::vector<std::vector<long>> out;
  if (!independent) {
    out.push_back(std::vector<long>(reps, level));
    return out;
  }
  // All vectors in {1..level}^reps whose largest entry is `level`, lexicographically.
  std::vector<long> v(reps, 1);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == reps) {
      if (std::find(v.begin(), v.end(), level) != v.end()) out.push_back(v);
      return;
    }
    for (long x = 1; x <= level; ++x) {
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

MaximalizeResult maximalize(const CurveSystem& sys, const Encoding& f, const MaximalizeParams& params) {
  auto rep = check_independent(sys);
  if (!rep.independent) throw std::invalid_argument("maximalize: system is not independent: " + rep.problems.front());
  if (find_orbit(build_gamma(sys.with_map(f)))) throw std::invalid_argument("maximalize: system contains an orbit");

  MaximalizeResult out{CurveSystem(sys.host, sys.names, sys.curves), f, {}};
  const size_t bound = static_cast<size_t>(max_independent_curves(*sys.host));
  while (!check_maximal(out.system)) {
    if (out.system.size() >= bound) throw std::logic_error("maximalize: curve bound reached before pants decomposition");
    std::optional<MaximalizeStep> step;
    for (int cap = params.weight_cap; cap <= 2 * params.weight_cap && !step; cap += 4) {
      step = find_step(out.system, out.f, cap, params.max_power);
    }
    if (!step) throw std::runtime_error("maximalize: no curve pair found within the candidate budget");
    out.system = out.system.with_curve(step->name, step->added);
    out.f = out.f.compose(twist(step->twist_curve, step->power));
    out.steps.push_back(std::move(*step));
  }
  out.system = out.system.with_map(out.f);
  return out;
}

Encoding realize_family(const Encoding& f, const std::vector<Multicurve>& curves, const std::vector<long>& exponents) {
  if (curves.size() != exponents.size()) throw std::invalid_argument("realize_family: one exponent per curve");
  for (size_t i = 0; i < curves.size(); ++i) {
    for (size_t j = i + 1; j < curves.size(); ++j) {
      if (!are_disjoint(curves[i], curves[j])) throw TopologyError("realize_family: curves are not disjoint");
    }
  }
  Encoding e = f;
  for (size_t i = 0; i < curves.size(); ++i) {
    if (exponents[i] != 0) e = e.compose(twist(curves[i], exponents[i]));
  }
  return e;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Refused:
      return "refused";
    case SearchStatus::Accepted:
      return "accepted";
    case SearchStatus::Exhausted:
      return "exhausted";
  }
  return "exhausted";
}

SearchResult theorem1_search(const CurveSystem& sys, const Encoding& f, const SearchSchedule& sched) {
  auto start = std::chrono::steady_clock::now();
  SearchResult res;
  auto finish = [&]() {
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
  };

  auto rep = check_independent(sys);
  if (!rep.independent) throw std::invalid_argument("theorem1_search: system is not independent: " + rep.problems.front());
  auto gamma = build_gamma(sys.with_map(f));
  if (auto orbit = find_orbit(gamma)) {
    res.status = SearchStatus::Refused;
    OrbitWitness w;
    w.period = static_cast<int>(orbit->size());
    for (int v : *orbit) w.orbit.push_back(sys.names[static_cast<size_t>(v)]);
    w.exponents.assign(sys.size(), 1);
    Encoding g = realize_family(f, sys.curves, w.exponents);
    w.holds = true;
    for (int v : *orbit) {
      Multicurve x = sys.curves[static_cast<size_t>(v)];
      for (int i = 0; i < w.period; ++i) x = g.act(x);
      w.holds = w.holds && x == sys.curves[static_cast<size_t>(v)];
    }
    res.witness = std::move(w);
    return finish();
  }

  res.maximal = maximalize(sys, f, sched.maximalize);
  const CurveSystem& full = res.maximal->system;
  const Encoding& fp = res.maximal->f;
  res.chains = chain_decomposition(build_gamma(full));

  for (long level = 1; level <= sched.k_max; ++level) {
    for (const auto& rv : sweep_vectors(res.chains.size(), sched.independent, level)) {
      CandidateReport cand;
      cand.exponents.assign(full.size(), 0);
      for (size_t i = 0; i < res.chains.size(); ++i) {
        cand.exponents[static_cast<size_t>(res.chains[i].representative())] = rv[i];
      }
      Encoding g = realize_family(fp, full.curves, cand.exponents);
      cand.lemma4_1_check = true;
      for (size_t i = 0; i < full.size(); ++i) {
        cand.lemma4_1_check = cand.lemma4_1_check && g.act(full.curves[i]) == full.images[i];
      }
      cand.report = classify(g, sched.classifier, full.curves);
      bool accepted = cand.report.verdict == Verdict::PseudoAnosovEvidence;
      res.candidates.push_back(std::move(cand));
      if (accepted) {
        res.status = SearchStatus::Accepted;
        res.accepted = res.candidates.size() - 1;
        return finish();
      }
    }
  }
  res.status = SearchStatus::Exhausted;
  return finish();
}

}  // namespace pacurve
