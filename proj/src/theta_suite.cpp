#include "theta/theta_suite.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "theta/symplectic.hpp"

namespace theta::suite {

using braid::BraidWord;

namespace {

// f_from f_{from+1} ... f_to
BraidWord chain_word(int strands, int from, int to) {
  std::vector<int> indices;
  for (int i = from; i <= to; ++i) indices.push_back(i);
  return BraidWord::from_signed(strands, indices);
}

std::string chain_name(int from, int to) {
  std::ostringstream os;
  for (int i = from; i <= to; ++i) os << (i == from ? "" : " ") << 'f' << i;
  return os.str();
}

std::vector<Relator> artin_relators(int strands, int generators) {
  std::vector<Relator> out;
  for (int i = 1; i < generators; ++i) {
    const std::string a = "f" + std::to_string(i);
    const std::string b = "f" + std::to_string(i + 1);
    out.push_back({a + " " + b + " " + a + " = " + b + " " + a + " " + b,
                   BraidWord::from_signed(strands, {i, i + 1, i}),
                   BraidWord::from_signed(strands, {i + 1, i, i + 1})});
  }
  for (int i = 1; i <= generators; ++i) {
    for (int j = i + 2; j <= generators; ++j) {
      const std::string a = "f" + std::to_string(i);
      const std::string b = "f" + std::to_string(j);
      out.push_back({a + " " + b + " = " + b + " " + a,
                     BraidWord::from_signed(strands, {i, j}),
                     BraidWord::from_signed(strands, {j, i})});
    }
  }
  return out;
}

Relator power_relator(int strands, int from, int to, long exponent) {
  return {"(" + chain_name(from, to) + ")^" + std::to_string(exponent) + " = 1",
          chain_word(strands, from, to).power(exponent), BraidWord(strands)};
}

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json form_json(const BraidWord& w) {
  return Json(braid::to_string(braid::left_normal_form(w)));
}

}  // namespace

// --- Presentations ----------------------------------------------------------

std::string to_string(Tag tag) {
  switch (tag) {
    case Tag::Blue: return "SL2(Z)";
    case Tag::Orange: return "B_{2k+2}/Z";
    case Tag::Green: return "SMod(S_k)";
    case Tag::Purple: return "Mod(S_2)";
    case Tag::Unknown: return "unknown";
  }
  return "unknown";
}

Tag lattice_tag(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("n and k must be >= 1");
  if (n >= 3) return Tag::Orange;
  if (k == 1) return Tag::Blue;
  if (n == 1) return k == 2 ? Tag::Purple : Tag::Green;
  return Tag::Unknown;
}

Presentation presentation_for(int n, int k) {
  const Tag tag = lattice_tag(n, k);
  const int strands = 2 * k + 2;
  const int generators = 2 * k + 1;
  Presentation p{n, k, generators, tag, {}};

  switch (tag) {
    case Tag::Blue:
      // a = f1 = f3, b = f2
      p.generator_count = 2;
      p.relators.push_back({"a b a = b a b",
                            BraidWord::from_signed(strands, {1, 2, 1}),
                            BraidWord::from_signed(strands, {2, 1, 2})});
      p.relators.push_back({"(a b)^6 = 1",
                            BraidWord::from_signed(strands, {1, 2}).power(6),
                            BraidWord(strands)});
      break;
    case Tag::Orange:
      p.relators = artin_relators(strands, generators);
      p.relators.push_back(power_relator(strands, 1, generators, 2 * k + 2));
      break;
    case Tag::Green:
    case Tag::Purple: {
      // Partial list: chain relations and the hyperelliptic involution
      // f_{2k+1} ... f_1 f_1 ... f_{2k+1} squaring to 1.
      p.relators = artin_relators(strands, generators);
      p.relators.push_back(power_relator(strands, 1, generators, 2 * k + 2));
      const BraidWord odd_chain = chain_word(strands, 1, 2 * k - 1).power(2 * k);
      const BraidWord last_squared =
          BraidWord::generator(strands, generators).power(2);
      p.relators.push_back({"(" + chain_name(1, 2 * k - 1) + ")^" +
                                std::to_string(2 * k) + " = f" +
                                std::to_string(generators) + "^2",
                            odd_chain, last_squared});
      const BraidWord up = chain_word(strands, 1, generators);
      BraidWord involution(strands);
      for (int i = generators; i >= 1; --i) involution.append({i, false});
      involution = involution * up;
      p.relators.push_back({"(f" + std::to_string(generators) +
                                " ... f1 f1 ... f" +
                                std::to_string(generators) + ")^2 = 1",
                            involution.power(2), BraidWord(strands)});
      break;
    }
    case Tag::Unknown:
      p.relators = artin_relators(strands, 2 * k + 1);
      p.relators.push_back(power_relator(strands, 1, 2 * k, 4 * k + 2));
      break;
  }
  return p;
}

// --- Reports ----------------------------------------------------------------

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "fail";
}

Status worst(Status lhs, Status rhs) {
  auto rank = [](Status s) {
    switch (s) {
      case Status::Pass: return 0;
      case Status::Inconclusive: return 1;
      case Status::Fail: return 2;
    }
    return 2;
  };
  return rank(lhs) >= rank(rhs) ? lhs : rhs;
}

Status Report::status() const {
  Status out = Status::Pass;
  for (const auto& check : checks) out = worst(out, check.status);
  return out;
}

void Report::add(std::string name, Status status, Json witness) {
  checks.push_back({std::move(name), status, std::move(witness)});
}

void Report::add(std::string name, bool passed, Json witness) {
  add(std::move(name), passed ? Status::Pass : Status::Fail,
      std::move(witness));
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const sl2::UniMatrix2& m) { return to_json(m.to_int_matrix()); }

Json to_json(const Report& report) {
  Json checks = Json::array();
  for (const auto& check : report.checks) {
    checks.push_back(Json{{"name", check.name},
                          {"status", to_string(check.status)},
                          {"witness", check.witness}});
  }
  return Json{{"experiment", report.experiment},
              {"params", report.params},
              {"checks", std::move(checks)},
              {"engine", report.engine},
              {"artifact_version", kArtifactVersion}};
}

// --- Relation checks --------------------------------------------------------

Report check_relations(const Engine& engine, int n, int k) {
  const Presentation presentation = presentation_for(n, k);
  Report report;
  report.experiment = "theta-verify";
  report.params = Json{{"n", n}, {"k", k}, {"tag", to_string(presentation.tag)}};

  if (const auto* sym = std::get_if<SymplecticEngine>(&engine)) {
    if (sym->n != n || sym->k != k) {
      throw std::invalid_argument("symplectic engine model does not match (n, k)");
    }
    report.engine = "symplectic";
    const symplectic::SurfaceModel model(n, k);
    for (const auto& relator : presentation.relators) {
      const IntMatrix lhs = symplectic::evaluate_word(model, relator.lhs);
      const IntMatrix rhs = symplectic::evaluate_word(model, relator.rhs);
      const IntMatrix quotient = lhs * symplectic::symplectic_inverse(model, rhs);
      report.add(relator.name, quotient.is_identity(),
                 Json{{"lhs_rhs_inverse", to_json(quotient)}});
    }
    return report;
  }

  const auto& br = std::get<BraidEngine>(engine);
  if (br.strands != 2 * k + 2) {
    throw std::invalid_argument("braid engine needs 2k+2 = " +
                                std::to_string(2 * k + 2) + " strands, got " +
                                std::to_string(br.strands));
  }
  report.engine = "braid";
  const bool modulo_center = presentation.tag == Tag::Orange;
  report.params["modulo_center"] = modulo_center;
  for (const auto& relator : presentation.relators) {
    const BraidWord quotient = relator.lhs * relator.rhs.inverse();
    Json witness{{"normal_form", form_json(quotient)}};
    Status status;
    if (braid::equals(relator.lhs, relator.rhs)) {
      status = Status::Pass;
    } else if (modulo_center) {
      status = braid::equals_mod_center(relator.lhs, relator.rhs)
                   ? Status::Pass
                   : Status::Fail;
    } else {
      status = Status::Inconclusive;
    }
    report.add(relator.name, status, std::move(witness));
  }
  return report;
}

// --- Hyperelliptic involutions ----------------------------------------------

Report hyperelliptic_experiment(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Report report;
  report.experiment = "hyperelliptic";
  report.params = Json{{"n", n}, {"k", 1}};
  report.engine = n >= 3 ? "symplectic+braid" : "symplectic+sl2";

  const symplectic::SurfaceModel model(n, 1);
  const BraidWord abc = BraidWord::from_signed(4, {1, 2, 3});
  const BraidWord cab = BraidWord::from_signed(4, {3, 1, 2});
  const IntMatrix tau = symplectic::evaluate_word(model, abc.power(2));
  report.add("Psi((f1 f2 f3)^2) = -Id_" + std::to_string(2 * n),
             symplectic::is_hyperelliptic_image(tau),
             Json{{"image", to_json(tau)}});
  const IntMatrix tau_cab = symplectic::evaluate_word(model, cab.power(2));
  report.add("Psi((f3 f1 f2)^2) = -Id_" + std::to_string(2 * n),
             symplectic::is_hyperelliptic_image(tau_cab),
             Json{{"image", to_json(tau_cab)}});

  if (n <= 2) {
    const auto aba = sl2::generator_a() * sl2::generator_b() * sl2::generator_a();
    const auto square = aba.power(2);
    report.add("(A B A)^2 = -Id_2", square == sl2::UniMatrix2::minus_identity(),
               Json{{"ABA", to_json(aba)}, {"square", to_json(square)}});
    return report;
  }

  const BraidWord delta = BraidWord::half_twist(4);
  const BraidWord c = BraidWord::generator(4, 3);
  const BraidWord cab_squared = cab.power(2);
  const BraidWord abc_squared = abc.power(2);
  report.add("(c a b)^2 = Delta in B_4", braid::equals(cab_squared, delta),
             Json{{"normal_form", form_json(cab_squared)}});
  report.add("(a b c)^2 != Delta in B_4", !braid::equals(abc_squared, delta),
             Json{{"normal_form", form_json(abc_squared)}});
  report.add("(a b c)^2 = c^-1 Delta c in B_4",
             braid::equals(abc_squared, c.inverse() * delta * c),
             Json{{"conjugator", "c"}});
  report.add("(c a b)^4 = 1 in B_4/Z", braid::equals_mod_center(cab.power(4), BraidWord(4)),
             Json{{"normal_form", form_json(cab.power(4))}});
  report.add("(a b c)^4 = 1 in B_4/Z", braid::equals_mod_center(abc.power(4), BraidWord(4)),
             Json{{"normal_form", form_json(abc.power(4))}});
  return report;
}

// --- Square-root family -----------------------------------------------------

Report square_root_family(int m_max) {
  if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
  Report report;
  report.experiment = "square-root-family";
  report.params = Json{{"m_max", m_max}};
  report.engine = "braid";

  const BraidWord b = BraidWord::generator(4, 2);
  const BraidWord c = BraidWord::generator(4, 3);
  const BraidWord abc = BraidWord::from_signed(4, {1, 2, 3});
  const BraidWord cab = BraidWord::from_signed(4, {3, 1, 2});
  const BraidWord delta = BraidWord::half_twist(4);
  const long expected = 2L * m_max + 1;

  report.add("c a b = c (a b c) c^-1", braid::equals(cab, c * abc * c.inverse()),
             Json{{"conjugator", "c"}});

  for (const bool inverse_family : {false, true}) {
    const std::string h = inverse_family ? "h_m^-1" : "h_m";
    const BraidWord target = inverse_family ? delta.inverse() : delta;
    Json failures = Json::array();
    Json conjugators = Json::array();
    std::set<std::string> classes;
    std::vector<braid::CanonicalForm> keys;
    for (int m = -m_max; m <= m_max; ++m) {
      const BraidWord conj = b.power(m);
      BraidWord root = conj * cab * conj.inverse();
      if (inverse_family) root = root.inverse();
      if (!braid::equals(root.power(2), target)) failures.push_back(m);
      const auto key = braid::center_class_key(root);
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        keys.push_back(key);
      }
      conjugators.push_back("b^" + std::to_string(m));
    }
    report.add(h + "^2 = " + (inverse_family ? "Delta^-1" : "Delta") +
                   " for |m| <= " + std::to_string(m_max),
               failures.empty(),
               Json{{"failures", failures}, {"conjugators", conjugators}});
    report.add(h + " pairwise distinct in B_4/Z",
               static_cast<long>(keys.size()) == expected,
               Json{{"distinct_classes", keys.size()}, {"expected", expected}});
  }
  return report;
}

// --- SL_2(Z) root census ----------------------------------------------------

std::size_t RootCensus::total() const {
  std::size_t count = residue.size();
  for (const auto& bucket : buckets) count += bucket.members.size();
  return count;
}

RootCensus root_census(int power, long bound) {
  RootCensus census;
  census.power = power;
  census.bound = bound;

  std::vector<sl2::UniMatrix2> expected;
  if (power == 2) {
    expected = {sl2::quarter_turn(), sl2::quarter_turn().inverse()};
  } else {
    expected = {sl2::UniMatrix2::minus_identity(), sl2::sixth_turn(),
                sl2::sixth_turn().inverse()};
  }
  for (const auto& rep : sl2::canonical_representatives()) {
    if (std::find(expected.begin(), expected.end(), rep) != expected.end()) {
      census.buckets.push_back({rep, {}});
    }
  }

  for (const auto& root : sl2::roots_of_minus_identity(power, bound)) {
    bool placed = false;
    if (root.power(power) == sl2::UniMatrix2::minus_identity()) {
      const auto cert = sl2::reduce_elliptic(root);
      if (cert.verify()) {
        for (auto& bucket : census.buckets) {
          if (bucket.canonical == cert.canonical) {
            bucket.members.push_back(cert);
            placed = true;
            break;
          }
        }
      }
    }
    if (!placed) census.residue.push_back(root);
  }
  return census;
}

Json to_json(const RootCensus& census) {
  Json classes = Json::array();
  for (const auto& bucket : census.buckets) {
    classes.push_back(Json{{"canonical", to_json(bucket.canonical)},
                           {"count", bucket.members.size()}});
  }
  Json residue = Json::array();
  for (const auto& m : census.residue) residue.push_back(to_json(m));
  return Json{{"power", census.power},
              {"bound", census.bound},
              {"total", census.total()},
              {"classes", std::move(classes)},
              {"residue", std::move(residue)}};
}

Report sl2_root_experiment(long bound, int family_max) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  Report report;
  report.experiment = "sl2-roots";
  report.params = Json{{"bound", bound}, {"family_max", family_max}};
  report.engine = "sl2";

  const auto a = sl2::generator_a();
  const auto b = sl2::generator_b();
  const auto aba = a * b * a;
  const auto ab = a * b;
  const auto minus_id = sl2::UniMatrix2::minus_identity();
  report.add("A B A = [[0,1],[-1,0]]", aba == sl2::quarter_turn(),
             Json{{"ABA", to_json(aba)}});
  report.add("A B = [[0,1],[-1,1]]", ab == sl2::sixth_turn(),
             Json{{"AB", to_json(ab)}});
  report.add("(A B A)^2 = -Id", aba.power(2) == minus_id, Json::object());
  report.add("(A B)^3 = -Id", ab.power(3) == minus_id, Json::object());

  for (const int power : {2, 3}) {
    const RootCensus census = root_census(power, bound);
    const std::string label = power == 2 ? "square" : "cubic";
    report.add("every " + label + " root of -Id with entries in [-" +
                   std::to_string(bound) + "," + std::to_string(bound) +
                   "] is classified",
               census.residue.empty(), to_json(census));
  }

  Json failures = Json::array();
  for (int m = 1; m <= family_max; ++m) {
    const Integer mm(m);
    const sl2::UniMatrix2 member(-mm, mm * mm + 1, -1, mm);
    for (const int sign : {1, -1}) {
      const auto rep = sign == 1 ? sl2::quarter_turn() : sl2::quarter_turn().inverse();
      const auto expected_member = sign == 1 ? member : member.inverse();
      const auto produced = sl2::conjugate_family(rep, mm);
      const auto cert = sl2::reduce_elliptic(produced);
      if (!(produced == expected_member) || !cert.verify() ||
          !(cert.canonical == rep)) {
        failures.push_back(Json{{"m", m}, {"sign", sign}});
      }
    }
  }
  report.add("T^m R^(+-1) T^-m = [[-m,m^2+1],[-1,m]]^(+-1) reduces to R^(+-1) for 1 <= m <= " +
                 std::to_string(family_max),
             failures.empty(), Json{{"failures", failures}});
  return report;
}

// --- Separation evidence ----------------------------------------------------

Report separation_evidence(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  Report report;
  report.experiment = "separation";
  report.params = Json{{"k", k}};
  report.engine = "symplectic+braid";

  const int strands = 2 * k + 2;
  const symplectic::SurfaceModel model(2, k);
  const BraidWord even_chain = chain_word(strands, 1, 2 * k).power(4 * k + 2);
  const std::string even_name =
      "(" + chain_name(1, 2 * k) + ")^" + std::to_string(4 * k + 2);

  const IntMatrix image = symplectic::evaluate_word(model, even_chain);
  report.add("Psi(" + even_name + ") = Id in model (2," + std::to_string(k) + ")",
             image.is_identity(), Json{{"image", to_json(image)}});

  report.add(even_name + " != 1 in B_" + std::to_string(strands) + "/Z",
             !braid::equals_mod_center(even_chain, BraidWord(strands)),
             Json{{"normal_form", form_json(even_chain)}});

  const BraidWord odd_chain = chain_word(strands, 1, 2 * k - 1).power(2 * k);
  const BraidWord last_squared =
      BraidWord::generator(strands, 2 * k + 1).power(2);
  const IntMatrix lhs = symplectic::evaluate_word(model, odd_chain);
  const IntMatrix rhs = symplectic::evaluate_word(model, last_squared);
  // Differing images would show the relation fails in Θ_2^k; equal images say
  // nothing either way.
  report.add("Psi((" + chain_name(1, 2 * k - 1) + ")^" + std::to_string(2 * k) +
                 ") vs Psi(f" + std::to_string(2 * k + 1) + "^2) in model (2," +
                 std::to_string(k) + ")",
             lhs == rhs ? Status::Inconclusive : Status::Pass,
             Json{{"images_equal", lhs == rhs}});
  return report;
}

}  // namespace theta::suite
