// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Usage: acceptance_test [suite-executable ...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "theta/braid.hpp"
#include "theta/sl2.hpp"
#include "theta/symplectic.hpp"
#include "theta/theta_suite.hpp"

namespace {

using namespace theta;
using braid::BraidWord;
using sl2::UniMatrix2;
using symplectic::SurfaceModel;

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<bool(std::string&)> body;
};

BraidWord w4(std::vector<int> letters) { return BraidWord::from_signed(4, letters); }

IntMatrix m2(long t1, long t2, long t3, long t4) {
  return IntMatrix(2, 2, {t1, t2, t3, t4});
}

bool half_twist_identities(std::string& detail) {
  const BraidWord a = w4({1}), b = w4({2}), c = w4({3});
  const BraidWord delta = BraidWord::half_twist(4);
  const auto cab2 = braid::left_normal_form((c * a * b).power(2));
  const auto abc4 = braid::left_normal_form((a * b * c).power(4));
  const bool ok = cab2.infimum == 1 && cab2.factors.empty() &&
                  abc4.infimum == 2 && abc4.factors.empty() &&
                  !braid::equals((a * b * c).power(2), delta) &&
                  braid::equals((a * b * c).power(2), c.inverse() * delta * c) &&
                  braid::equals_mod_center((a * b * c).power(4), BraidWord(4));
  detail = "(cab)^2 -> " + braid::to_string(cab2) + ", (abc)^4 -> " +
           braid::to_string(abc4);
  return ok;
}

bool genus_two_calibration(std::string& detail) {
  const SurfaceModel model(2, 1);
  const IntMatrix A = m2(1, 1, 0, 1), A_inv = m2(1, -1, 0, 1);
  const IntMatrix B = m2(1, 0, -1, 1), B_inv = m2(1, 0, 1, 1);
  auto psi = [&](std::vector<int> w) {
    return symplectic::evaluate_word(model, w4(w));
  };
  const bool ok =
      symplectic::generator_image(model, 1) == IntMatrix::block_diagonal({A_inv, A}) &&
      symplectic::generator_image(model, 2) == IntMatrix::block_diagonal({B_inv, B}) &&
      psi({1, 2, 1}) == psi({2, 1, 2}) &&
      symplectic::evaluate_word(model, w4({1, 2}).power(6)).is_identity() &&
      symplectic::evaluate_word(model, w4({1, 2, 1}).power(2)) == -IntMatrix::identity(4);
  detail = "Psi(f1) = " + to_string(symplectic::generator_image(model, 1));
  return ok;
}

bool hyperelliptic_law(std::string& detail) {
  for (int n = 1; n <= 6; ++n) {
    const SurfaceModel model(n, 1);
    const IntMatrix image = symplectic::evaluate_word(model, w4({1, 2, 3}).power(2));
    if (image != -IntMatrix::identity(2 * static_cast<std::size_t>(n))) {
      detail = "n = " + std::to_string(n) + ": " + to_string(image);
      return false;
    }
  }
  detail = "n = 1..6";
  return true;
}

bool root_census(std::string& detail) {
  const UniMatrix2 R = sl2::quarter_turn();
  const UniMatrix2 E = sl2::sixth_turn();
  std::map<UniMatrix2, std::size_t> counts;
  for (int power : {2, 3}) {
    const auto census = suite::root_census(power, 50);
    if (!census.residue.empty()) {
      detail = "nonempty residue";
      return false;
    }
    for (const auto& bucket : census.buckets) {
      for (const auto& cert : bucket.members) {
        if (!cert.verify() || cert.input.power(power) != UniMatrix2::minus_identity()) {
          detail = "bad certificate for " + sl2::to_string(cert.input);
          return false;
        }
        const bool allowed =
            power == 2 ? (cert.canonical == R || cert.canonical == R.inverse())
                       : (cert.canonical == E || cert.canonical == E.inverse() ||
                          cert.canonical == UniMatrix2::minus_identity());
        if (!allowed) {
          detail = sl2::to_string(cert.input) + " reduced to " +
                   sl2::to_string(cert.canonical);
          return false;
        }
        ++counts[cert.canonical];
      }
    }
  }
  for (long m = 1; m <= 20; ++m) {
    for (bool inverse : {false, true}) {
      UniMatrix2 member(-m, m * m + 1, -1, m);
      if (inverse) member = member.inverse();
      const auto cert = sl2::reduce_elliptic(member);
      if (!cert.verify() || cert.canonical != (inverse ? R.inverse() : R)) {
        detail = "family member m = " + std::to_string(m);
        return false;
      }
    }
  }
  // Orbit-closure oracle for small bounds.
  for (int power : {2, 3}) {
    for (long bound = 1; bound <= 3; ++bound) {
      const auto roots = sl2::roots_of_minus_identity(power, bound);
      std::vector<oracle::Quad> seeds;
      for (const auto& m : roots) {
        seeds.push_back({m.t1().get_si(), m.t2().get_si(), m.t3().get_si(),
                         m.t4().get_si()});
      }
      const auto components = oracle::conjugation_components(seeds, 12);
      std::map<int, UniMatrix2> by_component;
      std::map<UniMatrix2, int> by_class;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        const UniMatrix2 canonical = sl2::reduce_elliptic(roots[i]).canonical;
        const auto [c, c_new] = by_component.emplace(components[i], canonical);
        const auto [k, k_new] = by_class.emplace(canonical, components[i]);
        if (c->second != canonical || k->second != components[i]) {
          detail = "oracle disagrees at " + sl2::to_string(roots[i]);
          return false;
        }
      }
    }
  }
  detail = "R: " + std::to_string(counts[R]) + ", R^-1: " +
           std::to_string(counts[R.inverse()]) + ", E: " + std::to_string(counts[E]) +
           ", E^-1: " + std::to_string(counts[E.inverse()]) +
           ", -Id: " + std::to_string(counts[UniMatrix2::minus_identity()]);
  return true;
}

bool square_root_family(std::string& detail) {
  const BraidWord a = w4({1}), b = w4({2}), c = w4({3});
  const BraidWord delta = BraidWord::half_twist(4);
  for (bool inverse : {false, true}) {
    std::vector<BraidWord> family;
    for (int m = -10; m <= 10; ++m) {
      BraidWord h = b.power(m) * c * a * b * b.power(-m);
      if (inverse) h = h.inverse();
      if (!braid::equals(h.power(2), inverse ? delta.inverse() : delta)) {
        detail = "h_" + std::to_string(m) + "^2 != Delta";
        return false;
      }
      family.push_back(h);
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (braid::equals_mod_center(family[i], family[j])) {
          detail = "collision in family";
          return false;
        }
      }
    }
  }
  detail = "21 + 21 classes pairwise distinct";
  return true;
}

bool relation_suites(std::string& detail) {
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const SurfaceModel model(n, k);
      std::vector<IntMatrix> f;
      for (int i = 1; i <= model.chain_length(); ++i) {
        f.push_back(symplectic::generator_image(model, i));
      }
      for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
          const bool ok = j == i + 1 ? f[i] * f[j] * f[i] == f[j] * f[i] * f[j]
                                     : f[i] * f[j] == f[j] * f[i];
          if (!ok) {
            detail = "(n,k) = (" + std::to_string(n) + "," + std::to_string(k) + ")";
            return false;
          }
          ++checked;
        }
      }
      if (n >= 2) {
        BraidWord chain(2 * k + 2);
        for (int i = 1; i <= 2 * k + 1; ++i) chain.append({i, false});
        if (!symplectic::evaluate_word(model, chain.power(2 * k + 2)).is_identity()) {
          detail = "center relator fails at (" + std::to_string(n) + "," +
                   std::to_string(k) + ")";
          return false;
        }
        ++checked;
      }
    }
  }
  detail = std::to_string(checked) + " relators";
  return true;
}

bool separation(std::string& detail) {
  for (int k : {1, 2}) {
    const SurfaceModel model(2, k);
    BraidWord chain(2 * k + 2);
    for (int i = 1; i <= 2 * k; ++i) chain.append({i, false});
    const BraidWord word = chain.power(4 * k + 2);
    if (!symplectic::evaluate_word(model, word).is_identity() ||
        braid::equals_mod_center(word, BraidWord(2 * k + 2))) {
      detail = "k = " + std::to_string(k);
      return false;
    }
  }
  detail = "(f1f2)^6 and (f1f2f3f4)^10";
  return true;
}

bool oracle_soundness(std::string& detail) {
  std::mt19937_64 rng(20240601);
  int pairs = 0, equal = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const int n = 2 + trial % 4;
    const BraidWord u = oracle::random_word(rng, n, 12);
    const BraidWord v = trial % 2 == 0 ? oracle::scramble(rng, u, 12, 12)
                                       : oracle::random_word(rng, n, 12);
    const bool engine = braid::equals(u, v);
    if (engine != (braid::artin_action(u) == braid::artin_action(v))) {
      detail = "discrepancy: " + braid::to_string(u) + " | " + braid::to_string(v);
      return false;
    }
    ++pairs;
    equal += engine;
  }
  detail = std::to_string(pairs) + " pairs, " + std::to_string(equal) +
           " equal, 0 discrepancies";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> suites(argv + 1, argv + argc);

  std::vector<Criterion> criteria{
      {1, "half-twist identities in B_4", 1.0, half_twist_identities},
      {2, "genus-2 calibration", 1.0, genus_two_calibration},
      {3, "hyperelliptic law, n = 1..6", 1.0, hyperelliptic_law},
      {4, "root census to bound 50 with oracle cross-check", 60.0, root_census},
      {5, "h_m square-root family, |m| <= 10", 5.0, square_root_family},
      {6, "relation suites, n <= 4, k <= 3", 30.0, relation_suites},
      {7, "separation of Theta_2^1 and Theta_2^2", 10.0, separation},
      {8, "normal forms agree with the Artin action", 30.0, oracle_soundness},
      {9, "property suites run headless", 600.0,
       [&suites](std::string& detail) {
         if (suites.empty()) {
           detail = "no suite executables given";
           return false;
         }
         for (const std::string& exe : suites) {
           const std::string command = "\"" + exe + "\" > /dev/null 2>&1";
           if (std::system(command.c_str()) != 0) {
             detail = exe + " failed";
             return false;
           }
         }
         detail = std::to_string(suites.size()) + " suites exit 0";
         return true;
       }},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && seconds > criterion.limit_seconds) {
      ok = false;
      detail += " (over time limit)";
    }
    failures += !ok;
    std::printf("%s  %d  %-50s %8.3f s  %s\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.title.c_str(), seconds, detail.c_str());
  }
  std::printf("%s: %d of %zu criteria passed\n", failures ? "FAILED" : "ACCEPTED",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
