#pragma once

// Exact arithmetic in SL_2(Z): trace classification, enumeration of square and
// cubic roots of -Id, reduction of elliptic elements to canonical conjugacy
// representatives, and decomposition into the generators A, B.

#include <string>
#include <vector>

#include "theta/braid.hpp"
#include "theta/int_matrix.hpp"

namespace theta::sl2 {

/// [[t1, t2], [t3, t4]] with t1*t4 - t2*t3 = 1.
class UniMatrix2 {
 public:
  /// Throws std::domain_error if the determinant is not 1.
  UniMatrix2(Integer t1, Integer t2, Integer t3, Integer t4);

  static UniMatrix2 identity();
  static UniMatrix2 minus_identity();

  const Integer& t1() const { return t1_; }
  const Integer& t2() const { return t2_; }
  const Integer& t3() const { return t3_; }
  const Integer& t4() const { return t4_; }

  Integer trace() const { return t1_ + t4_; }
  UniMatrix2 inverse() const;
  UniMatrix2 transpose() const;
  UniMatrix2 power(long exponent) const;
  UniMatrix2 operator-() const;
  IntMatrix to_int_matrix() const;

  friend UniMatrix2 operator*(const UniMatrix2& lhs, const UniMatrix2& rhs);
  friend bool operator==(const UniMatrix2& lhs, const UniMatrix2& rhs);
  /// Lexicographic in (t1, t2, t3, t4).
  friend bool operator<(const UniMatrix2& lhs, const UniMatrix2& rhs);

 private:
  struct Unchecked {};
  UniMatrix2(Unchecked, Integer t1, Integer t2, Integer t3, Integer t4);

  Integer t1_, t2_, t3_, t4_;
};

/// "[[t1,t2],[t3,t4]]".
std::string to_string(const UniMatrix2& m);

// Named elements.
UniMatrix2 generator_a();       // [[1,1],[0,1]]
UniMatrix2 generator_b();       // [[1,0],[-1,1]]
UniMatrix2 translation(const Integer& k);  // [[1,k],[0,1]]
UniMatrix2 inversion();         // [[0,-1],[1,0]]
UniMatrix2 quarter_turn();      // R = [[0,1],[-1,0]]
UniMatrix2 sixth_turn();        // E = [[0,1],[-1,1]]

enum class Kind { Identity, MinusIdentity, Elliptic, Parabolic, Hyperbolic };

struct EllipticClass {
  Kind kind = Kind::Identity;
  int order = 0;  // 3, 4 or 6 for elliptic elements; 0 otherwise

  friend bool operator==(const EllipticClass&, const EllipticClass&) = default;
};

std::string to_string(const EllipticClass& c);

EllipticClass classify(const UniMatrix2& m);

/// All M with every entry in [-bound, bound] and M^power = -Id, sorted
/// lexicographically. `power` must be 2 or 3.
std::vector<UniMatrix2> roots_of_minus_identity(int power, long bound);

/// conjugator * input * conjugator^{-1} == canonical.
struct ReductionCertificate {
  UniMatrix2 input;
  UniMatrix2 canonical;
  UniMatrix2 conjugator;

  bool verify() const;
};

/// -Id, R, R^{-1}, E, E^{-1}, E^2, E^{-2}.
const std::vector<UniMatrix2>& canonical_representatives();

/// Conjugates an elliptic element (or -Id) to its canonical representative.
/// Throws std::invalid_argument for other inputs.
ReductionCertificate reduce_elliptic(const UniMatrix2& m);

/// T^m · canonical · T^{-m} with T = [[1,1],[0,1]].
UniMatrix2 conjugate_family(const UniMatrix2& canonical, const Integer& m);

/// Word in B_3 letters read as s1 -> A, s2 -> B (A B A = B A B holds in SL_2(Z)).
braid::BraidWord word_from_matrix(const UniMatrix2& m);
UniMatrix2 evaluate(const braid::BraidWord& word);

/// Formats a word from word_from_matrix in the letters A, B, a, b.
std::string to_ab_string(const braid::BraidWord& word);

}  // namespace theta::sl2
