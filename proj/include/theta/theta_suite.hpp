#pragma once

// Experiments on the groups Θ_n^k generated by f_1..f_{2k+1}:
// presentations per the classification lattice, relation checks against the
// symplectic and braid engines, hyperelliptic identities, root families and
// separation evidence for Θ_2^k.

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "theta/braid.hpp"
#include "theta/int_matrix.hpp"
#include "theta/sl2.hpp"

namespace theta::suite {

using Json = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "0.1.0";

enum class Tag { Blue, Orange, Green, Purple, Unknown };

std::string to_string(Tag tag);
Tag lattice_tag(int n, int k);

/// lhs = rhs, as words in f_1..f_{2k+1} (letter s_i stands for f_i).
struct Relator {
  std::string name;
  braid::BraidWord lhs;
  braid::BraidWord rhs;
};

struct Presentation {
  int n = 1;
  int k = 1;
  int generator_count = 0;
  Tag tag = Tag::Unknown;
  std::vector<Relator> relators;
};

/// Throws std::invalid_argument unless n, k >= 1.
Presentation presentation_for(int n, int k);

enum class Status { Pass, Fail, Inconclusive };

std::string to_string(Status status);
/// Fail dominates Inconclusive, which dominates Pass.
Status worst(Status lhs, Status rhs);

struct Check {
  std::string name;
  Status status = Status::Pass;
  Json witness;
};

struct Report {
  std::string experiment;
  Json params = Json::object();
  std::string engine;
  std::vector<Check> checks;

  Status status() const;
  void add(std::string name, Status status, Json witness);
  void add(std::string name, bool passed, Json witness);
};

struct SymplecticEngine {
  int n;
  int k;
};
struct BraidEngine {
  int strands;
};
using Engine = std::variant<SymplecticEngine, BraidEngine>;

/// Evaluates every relator of presentation_for(n, k) in the engine. The braid
/// engine works in B_{2k+2}, modulo the center when the tag is Orange; outside
/// the Orange region a braid-level failure is only inconclusive. Throws
/// std::invalid_argument if the engine parameters disagree with (n, k).
Report check_relations(const Engine& engine, int n, int k);

/// k = 1: Ψ((f_1 f_2 f_3)^2) = -Id_{2n}, plus the braid-side half-twist
/// identities in B_4 when n >= 3.
Report hyperelliptic_experiment(int n);

/// h_m = b^m (c a b) b^{-m} in B_4 / Z(B_4) for |m| <= m_max, and the inverse
/// family.
Report square_root_family(int m_max);

struct CensusBucket {
  sl2::UniMatrix2 canonical;
  std::vector<sl2::ReductionCertificate> members;
};

struct RootCensus {
  int power = 2;
  long bound = 0;
  std::vector<CensusBucket> buckets;  // canonical_representatives() order
  std::vector<sl2::UniMatrix2> residue;

  std::size_t total() const;
};

/// Enumerates roots of -Id with entries in [-bound, bound] and sorts them
/// into conjugacy classes.
RootCensus root_census(int power, long bound);
Json to_json(const RootCensus& census);

/// Square and cubic root censuses plus the infinite family
/// T^m R^{±1} T^{-m} for 1 <= m <= family_max.
Report sl2_root_experiment(long bound, int family_max = 20);

/// Θ_2^k exclusions: the relator (f_1..f_{2k})^{4k+2} holds symplectically
/// in model (2,k) but not in B_{2k+2}/Z; and the homology images of
/// (f_1..f_{2k-1})^{2k} and f_{2k+1}^2 compared.
Report separation_evidence(int k);

Json to_json(const Report& report);
Json to_json(const IntMatrix& m);
Json to_json(const sl2::UniMatrix2& m);

}  // namespace theta::suite
