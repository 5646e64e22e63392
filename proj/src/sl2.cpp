#include "theta/sl2.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace theta::sl2 {

// --- UniMatrix2 -------------------------------------------------------------

UniMatrix2::UniMatrix2(Integer t1, Integer t2, Integer t3, Integer t4)
    : t1_(std::move(t1)), t2_(std::move(t2)), t3_(std::move(t3)),
      t4_(std::move(t4)) {
  if (t1_ * t4_ - t2_ * t3_ != 1) {
    throw std::domain_error("determinant of " + to_string(*this) +
                            " is not 1");
  }
}

UniMatrix2::UniMatrix2(Unchecked, Integer t1, Integer t2, Integer t3,
                       Integer t4)
    : t1_(std::move(t1)), t2_(std::move(t2)), t3_(std::move(t3)),
      t4_(std::move(t4)) {}

UniMatrix2 UniMatrix2::identity() { return {1, 0, 0, 1}; }
UniMatrix2 UniMatrix2::minus_identity() { return {-1, 0, 0, -1}; }

UniMatrix2 UniMatrix2::inverse() const {
  return UniMatrix2(Unchecked{}, t4_, -t2_, -t3_, t1_);
}

UniMatrix2 UniMatrix2::transpose() const {
  return UniMatrix2(Unchecked{}, t1_, t3_, t2_, t4_);
}

UniMatrix2 UniMatrix2::power(long exponent) const {
  UniMatrix2 base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  UniMatrix2 out = identity();
  while (e != 0) {
    if (e & 1UL) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

UniMatrix2 UniMatrix2::operator-() const {
  return UniMatrix2(Unchecked{}, -t1_, -t2_, -t3_, -t4_);
}

IntMatrix UniMatrix2::to_int_matrix() const {
  return IntMatrix(2, 2, {t1_, t2_, t3_, t4_});
}

UniMatrix2 operator*(const UniMatrix2& lhs, const UniMatrix2& rhs) {
  return UniMatrix2(UniMatrix2::Unchecked{},
                    lhs.t1_ * rhs.t1_ + lhs.t2_ * rhs.t3_,
                    lhs.t1_ * rhs.t2_ + lhs.t2_ * rhs.t4_,
                    lhs.t3_ * rhs.t1_ + lhs.t4_ * rhs.t3_,
                    lhs.t3_ * rhs.t2_ + lhs.t4_ * rhs.t4_);
}

bool operator==(const UniMatrix2& lhs, const UniMatrix2& rhs) {
  return lhs.t1_ == rhs.t1_ && lhs.t2_ == rhs.t2_ && lhs.t3_ == rhs.t3_ &&
         lhs.t4_ == rhs.t4_;
}

bool operator<(const UniMatrix2& lhs, const UniMatrix2& rhs) {
  if (lhs.t1_ != rhs.t1_) return lhs.t1_ < rhs.t1_;
  if (lhs.t2_ != rhs.t2_) return lhs.t2_ < rhs.t2_;
  if (lhs.t3_ != rhs.t3_) return lhs.t3_ < rhs.t3_;
  return lhs.t4_ < rhs.t4_;
}

std::string to_string(const UniMatrix2& m) {
  std::ostringstream os;
  os << "[[" << m.t1() << ',' << m.t2() << "],[" << m.t3() << ',' << m.t4()
     << "]]";
  return os.str();
}

UniMatrix2 generator_a() { return {1, 1, 0, 1}; }
UniMatrix2 generator_b() { return {1, 0, -1, 1}; }
UniMatrix2 translation(const Integer& k) { return {1, k, 0, 1}; }
UniMatrix2 inversion() { return {0, -1, 1, 0}; }
UniMatrix2 quarter_turn() { return {0, 1, -1, 0}; }
UniMatrix2 sixth_turn() { return {0, 1, -1, 1}; }

// --- Classification ---------------------------------------------------------

std::string to_string(const EllipticClass& c) {
  switch (c.kind) {
    case Kind::Identity: return "identity";
    case Kind::MinusIdentity: return "minus-identity";
    case Kind::Elliptic: return "elliptic(" + std::to_string(c.order) + ")";
    case Kind::Parabolic: return "parabolic";
    case Kind::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

EllipticClass classify(const UniMatrix2& m) {
  if (m == UniMatrix2::identity()) return {Kind::Identity, 1};
  if (m == UniMatrix2::minus_identity()) return {Kind::MinusIdentity, 2};
  const Integer tr = m.trace();
  if (tr == 0) return {Kind::Elliptic, 4};
  if (tr == 1) return {Kind::Elliptic, 6};
  if (tr == -1) return {Kind::Elliptic, 3};
  if (abs(tr) == 2) return {Kind::Parabolic, 0};
  return {Kind::Hyperbolic, 0};
}

// --- Root enumeration -------------------------------------------------------

std::vector<UniMatrix2> roots_of_minus_identity(int power, long bound) {
  if (power != 2 && power != 3) {
    throw std::invalid_argument("power must be 2 or 3");
  }
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");

  // Square roots have trace 0, cubic roots other than -Id have trace 1; in
  // both cases det = 1 fixes q*r = p*s - 1.
  std::vector<UniMatrix2> roots;
  if (power == 3 && bound >= 1) roots.push_back(UniMatrix2::minus_identity());
  for (long p = -bound; p <= bound; ++p) {
    const long s = power == 2 ? -p : 1 - p;
    if (s < -bound || s > bound) continue;
    const Integer product = Integer(p) * s - 1;
    for (long q = -bound; q <= bound; ++q) {
      if (q == 0) continue;
      if (product % q != 0) continue;
      const Integer r = product / q;
      if (abs(r) > bound) continue;
      roots.emplace_back(Integer(p), Integer(q), r, Integer(s));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// --- Reduction --------------------------------------------------------------

bool ReductionCertificate::verify() const {
  return conjugator * input * conjugator.inverse() == canonical;
}

const std::vector<UniMatrix2>& canonical_representatives() {
  static const std::vector<UniMatrix2> reps = [] {
    const UniMatrix2 r = quarter_turn();
    const UniMatrix2 e = sixth_turn();
    return std::vector<UniMatrix2>{UniMatrix2::minus_identity(), r, r.inverse(),
                                   e, e.inverse(), e.power(2), e.power(-2)};
  }();
  return reps;
}

namespace {

bool is_canonical(const UniMatrix2& m) {
  const auto& reps = canonical_representatives();
  return std::find(reps.begin(), reps.end(), m) != reps.end();
}

// Fixed points of order-3 and order-6 elements lie on the boundary of the
// fundamental domain, where the pointwise reduction leaves one of four
// candidates. A short breadth-first search over conjugation by T, T^{-1}, S
// settles which canonical representative the candidate belongs to.
ReductionCertificate settle_on_boundary(const UniMatrix2& input,
                                        const UniMatrix2& reduced,
                                        const UniMatrix2& conjugator) {
  constexpr int kMaxDepth = 4;
  const std::vector<UniMatrix2> steps = {translation(1), translation(-1),
                                         inversion()};
  struct Node {
    UniMatrix2 matrix;
    UniMatrix2 conjugator;
    int depth;
  };
  std::deque<Node> queue{{reduced, conjugator, 0}};
  std::vector<UniMatrix2> seen{reduced};
  while (!queue.empty()) {
    Node node = queue.front();
    queue.pop_front();
    if (is_canonical(node.matrix)) {
      return {input, node.matrix, node.conjugator};
    }
    if (node.depth == kMaxDepth) continue;
    for (const auto& step : steps) {
      UniMatrix2 next = step * node.matrix * step.inverse();
      if (std::find(seen.begin(), seen.end(), next) != seen.end()) continue;
      seen.push_back(next);
      queue.push_back({next, step * node.conjugator, node.depth + 1});
    }
  }
  throw std::logic_error("reduction did not reach a canonical representative: " +
                         to_string(reduced));
}

}  // namespace

ReductionCertificate reduce_elliptic(const UniMatrix2& m) {
  const EllipticClass cls = classify(m);
  if (cls.kind == Kind::MinusIdentity) {
    return {m, m, UniMatrix2::identity()};
  }
  if (cls.kind != Kind::Elliptic) {
    throw std::invalid_argument("reduce_elliptic: " + to_string(m) + " is " +
                                to_string(cls));
  }

  UniMatrix2 current = m;
  UniMatrix2 conjugator = UniMatrix2::identity();
  auto conjugate_by = [&](const UniMatrix2& c) {
    current = c * current * c.inverse();
    conjugator = c * conjugator;
  };

  // The fixed point w of [[p,q],[r,s]] has Re(w) = (p-s)/(2r) and
  // |w|^2 = -q/r; r != 0 for elliptic elements.
  for (;;) {
    const Integer& p = current.t1();
    const Integer& r = current.t3();
    const Integer& s = current.t4();
    Integer shift;
    const Integer numerator = p - s + r;
    const Integer denominator = 2 * r;
    mpz_fdiv_q(shift.get_mpz_t(), numerator.get_mpz_t(),
               denominator.get_mpz_t());
    if (shift != 0) conjugate_by(translation(-shift));

    mpq_class modulus_squared(-current.t2(), current.t3());
    modulus_squared.canonicalize();
    if (modulus_squared >= 1) break;
    conjugate_by(inversion());
  }
  return settle_on_boundary(m, current, conjugator);
}

UniMatrix2 conjugate_family(const UniMatrix2& canonical, const Integer& m) {
  return translation(m) * canonical * translation(-m);
}

// --- Words in A, B ----------------------------------------------------------

braid::BraidWord word_from_matrix(const UniMatrix2& m) {
  using braid::BraidWord;
  using braid::Letter;

  Integer a = m.t1();
  Integer b = m.t2();
  Integer c = m.t3();
  Integer d = m.t4();

  // Left-multiply by powers of A and B until the lower-left entry vanishes,
  // recording the inverse of each step.
  std::vector<Letter> letters;
  auto emit = [&letters](int index, const Integer& exponent) {
    const bool inverse = exponent < 0;
    for (Integer e = abs(exponent); e > 0; --e) {
      letters.push_back({index, inverse});
    }
  };

  while (c != 0) {
    if (a == 0) {
      a += c;
      b += d;
      emit(1, Integer(-1));  // A·M, undone by A^{-1}
    } else if (abs(c) >= abs(a)) {
      const Integer q = c / a;  // truncating
      c -= q * a;
      d -= q * b;
      emit(2, -q);  // B^{q}·M, undone by B^{-q}
    } else {
      const Integer q = a / c;
      a -= q * c;
      b -= q * d;
      emit(1, q);  // A^{-q}·M, undone by A^{q}
    }
  }
  // Now [[a,b],[0,d]] with a = d = ±1.
  if (a == 1) {
    emit(1, b);
  } else {
    // [[-1,b],[0,-1]] = (A B A)^2 · A^{-b}
    for (int rep = 0; rep < 2; ++rep) {
      letters.push_back({1, false});
      letters.push_back({2, false});
      letters.push_back({1, false});
    }
    emit(1, -b);
  }

  // Free reduction of adjacent inverse pairs.
  std::vector<Letter> reduced;
  for (const auto& letter : letters) {
    if (!reduced.empty() && reduced.back().index == letter.index &&
        reduced.back().inverse != letter.inverse) {
      reduced.pop_back();
    } else {
      reduced.push_back(letter);
    }
  }
  return BraidWord(3, std::move(reduced));
}

UniMatrix2 evaluate(const braid::BraidWord& word) {
  const UniMatrix2 a = generator_a();
  const UniMatrix2 b = generator_b();
  const UniMatrix2 a_inv = a.inverse();
  const UniMatrix2 b_inv = b.inverse();
  UniMatrix2 out = UniMatrix2::identity();
  for (const auto& letter : word.letters()) {
    if (letter.index == 1) {
      out = out * (letter.inverse ? a_inv : a);
    } else if (letter.index == 2) {
      out = out * (letter.inverse ? b_inv : b);
    } else {
      throw std::invalid_argument("SL_2(Z) words use only s1 (A) and s2 (B)");
    }
  }
  return out;
}

std::string to_ab_string(const braid::BraidWord& word) {
  std::ostringstream os;
  bool first = true;
  for (const auto& letter : word.letters()) {
    if (!first) os << ' ';
    os << (letter.index == 1 ? 'A' : 'B') << (letter.inverse ? "^-1" : "");
    first = false;
  }
  return os.str();
}

}  // namespace theta::sl2
