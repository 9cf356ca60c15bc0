#include "ramid/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ramid/errors.hpp"
#include "ramid/parallel.hpp"

namespace ramid {

namespace {

// A^2 / (A^2 - 1)
Rational a_factor(const Integer& A) {
  const Integer sq = A * A;
  return Rational(sq, sq - 1);
}

// (v + 1) / (v - 1)
Rational v_factor(const Integer& v) { return Rational(v + 1, v - 1); }

Integer isqrt_floor(const Rational& q) {
  Integer n = q.floor();
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Smallest A >= 2 with a_factor(A) < s, for s > 1.
Integer smallest_A_below(const Rational& s) { return std::max(Integer(2), Integer(isqrt_floor(s / (s - 1)) + 1)); }

// Largest A >= 1 with a_factor(A) >= g, for g > 1 (1 means none).
Integer largest_A_at_least(const Rational& g) { return isqrt_floor(g / (g - 1)); }

struct CellResult {
  std::vector<IdentityTuple> found;
  std::uint64_t examined = 0;
};

EnumerationReport finish(std::vector<CellResult>& cells, std::chrono::steady_clock::time_point start) {
  EnumerationReport report;
  for (auto& c : cells) {
    report.candidates_examined += c.examined;
    report.identities.insert(report.identities.end(), c.found.begin(), c.found.end());
  }
  std::sort(report.identities.begin(), report.identities.end());
  report.identities.erase(std::unique(report.identities.begin(), report.identities.end()), report.identities.end());
  for (const auto& id : report.identities) {
    if (!verify_tuple(id)) throw std::logic_error("enumeration produced unverified tuple " + id.to_string());
  }
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

std::pair<std::int64_t, std::int64_t> t_sweep(const EnumerationOptions& options, std::int64_t default_max) {
  if (options.t_min < 1) throw ConfigError("enumeration: t_min must be positive");
  const std::int64_t t_max = options.t_max == 0 ? default_max : options.t_max;
  return {options.t_min, t_max};
}

}  // namespace

std::optional<Integer> solve_z(const Rational& t, const Integer& A, const Integer& x, const Integer& y) {
  if (A < 2 || x < 2 || y < 2) throw PreconditionError("solve_z: A, x, y must be at least 2");
  const Rational r = t / (a_factor(A) * v_factor(x) * v_factor(y));
  if (r <= Rational(1)) return std::nullopt;
  const Rational z = Rational(1) + Rational(2) / (r - 1);
  if (!z.is_integer()) return std::nullopt;
  return z.numerator();
}

EnumerationReport enumerate_super_perfect(const EnumerationOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto [t_min, t_max] = t_sweep(options, 6);

  // One cell per (t, A). Cells with no admissible x are never created:
  // x > A gives t < b(A) c(x)^3 <= b(A) c(A+1)^3, which decreases in A.
  std::vector<std::pair<Integer, Integer>> cells;
  for (std::int64_t tv = t_min; tv <= t_max; ++tv) {
    const Rational t(tv);
    for (Integer A = std::max<std::int64_t>(tv + 1, 2); a_factor(A) * v_factor(A + 1).pow(3) > t; ++A) {
      cells.emplace_back(Integer(tv), A);
    }
  }

  std::vector<CellResult> results(cells.size());
  parallel_for(cells.size(), resolve_threads(options.threads), [&](std::size_t i) {
    const auto& [tv, A] = cells[i];
    const Rational t(tv);
    const Rational a = a_factor(A);
    CellResult& out = results[i];
    for (Integer x = A + 1;; ++x) {
      const Rational cx = v_factor(x);
      // c(y), c(z) < c(x) and both exceed 1.
      if (a * cx.pow(3) <= t) break;
      const Rational ax = a * cx;
      if (ax >= t) continue;
      for (Integer y = x + 1;; ++y) {
        const Rational cy = v_factor(y);
        if (ax * cy.square() <= t) break;
        if (ax * cy >= t) continue;
        ++out.examined;
        if (auto z = solve_z(t, A, x, y); z && *z > y) {
          out.found.push_back({t, Rational(A), Rational(x), Rational(y), Rational(*z)});
        }
      }
    }
  });
  return finish(results, start);
}

EnumerationReport enumerate_perfect(const EnumerationOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto [t_min, t_max] = t_sweep(options, 36);
  const Rational max_a(4, 3);  // a_factor(2)

  // One cell per (t, x). x <= y <= z and A >= 2 give t <= (4/3) c(x)^3.
  std::vector<std::pair<Integer, Integer>> cells;
  for (std::int64_t tv = t_min; tv <= t_max; ++tv) {
    for (Integer x = 2; max_a * v_factor(x).pow(3) >= Rational(tv); ++x) cells.emplace_back(Integer(tv), x);
  }

  std::vector<CellResult> results(cells.size());
  parallel_for(cells.size(), resolve_threads(options.threads), [&](std::size_t i) {
    const auto& [tv, x] = cells[i];
    const Rational t(tv);
    const Rational cx = v_factor(x);
    CellResult& out = results[i];
    // b(A) c(y) c(z) = s with every factor > 1.
    const Rational s = t / cx;
    if (s <= Rational(1)) return;
    // b(A) is largest at the smallest A with b(A) < s, so c(y)^2 >= c(y) c(z) >= s / b(that A).
    const Rational s_min = s / a_factor(smallest_A_below(s));
    for (Integer y = x; v_factor(y).square() >= s_min; ++y) {
      const Rational c = s / v_factor(y);  // b(A) c(z) = c
      if (c <= Rational(1)) continue;
      // z(A) = 1 + 2 / (c / b(A) - 1) decreases in A towards 1 + 2 / (c - 1).
      const Rational limit = Rational(1) + Rational(2) / (c - 1);
      const Integer z_lo = std::max(Integer(limit.floor() + 1), y);
      const Integer A_lo = smallest_A_below(c);
      const Integer A_hi = largest_A_at_least(c / v_factor(z_lo));
      if (A_hi < A_lo) continue;
      const Integer z_hi = (Rational(1) + Rational(2) / (c / a_factor(A_lo) - 1)).floor();
      if (A_hi - A_lo <= z_hi - z_lo) {
        for (Integer A = A_lo; A <= A_hi; ++A) {
          ++out.examined;
          if (auto z = solve_z(t, A, x, y); z && *z >= y) {
            out.found.push_back({t, Rational(A), Rational(x), Rational(y), Rational(*z)});
          }
        }
      } else {
        for (Integer z = z_lo; z <= z_hi; ++z) {
          ++out.examined;
          const Rational cz = v_factor(z);
          if (cz >= c) continue;
          // b(A) = c / c(z)  =>  A^2 = c / (c - c(z))
          const Rational a2 = c / (c - cz);
          if (!a2.is_integer()) continue;
          const Integer sq = a2.numerator();
          if (!mpz_perfect_square_p(sq.get_mpz_t())) continue;
          Integer A;
          mpz_sqrt(A.get_mpz_t(), sq.get_mpz_t());
          if (A >= 2) out.found.push_back({t, Rational(A), Rational(x), Rational(y), Rational(z)});
        }
      }
    }
  });
  return finish(results, start);
}

EnumerationReport prime_filter(const EnumerationReport& report) {
  EnumerationReport out;
  out.candidates_examined = report.candidates_examined;
  out.wall_time = report.wall_time;
  for (const auto& id : report.identities) {
    const bool all_prime = id.A.is_integer() && id.x.is_integer() && id.y.is_integer() && id.z.is_integer() &&
                           is_prime(id.A.numerator()) && is_prime(id.x.numerator()) && is_prime(id.y.numerator()) &&
                           is_prime(id.z.numerator());
    if (all_prime) out.identities.push_back(id);
  }
  return out;
}

}  // namespace ramid
