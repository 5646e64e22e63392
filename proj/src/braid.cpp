#include "theta/braid.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace theta::braid {

namespace {

constexpr int kMaxStrands = 64;

void check_strands(int strands) {
  if (strands < 2 || strands > kMaxStrands) {
    throw std::invalid_argument("braid strand count must be in [2, 64], got " +
                                std::to_string(strands));
  }
}

void check_letter(int strands, const Letter& letter) {
  if (letter.index < 1 || letter.index > strands - 1) {
    throw std::invalid_argument("generator index " +
                                std::to_string(letter.index) +
                                " out of range for B_" + std::to_string(strands));
  }
}

void check_same_strands(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw std::invalid_argument("strand-count mismatch: B_" +
                                std::to_string(u.strands()) + " vs B_" +
                                std::to_string(v.strands()));
  }
}

// Δ·X·Δ^{-1} on a permutation braid: conjugation by the reversal.
Permutation flip_factor(const Permutation& p) {
  const int n = p.size();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    images[static_cast<std::size_t>(j)] = n - 1 - p(n - 1 - j);
  }
  return Permutation(std::move(images));
}

// Moves generators from the head of `right` to the tail of `left` until
// S(right) ⊆ F(left). Returns true if anything moved.
bool make_left_weighted(Permutation& left, Permutation& right) {
  bool changed = false;
  for (;;) {
    const std::uint64_t movable = right.starting_set() & ~left.finishing_set();
    if (movable == 0) return changed;
    const int index = std::countr_zero(movable) + 1;
    const auto s = Permutation::transposition(left.size(), index);
    left = left * s;
    right = s * right;
    changed = true;
  }
}

void absorb_and_trim(CanonicalForm& form) {
  auto first_proper = std::find_if_not(
      form.factors.begin(), form.factors.end(),
      [](const Permutation& p) { return p.is_reversal(); });
  form.infimum += first_proper - form.factors.begin();
  form.factors.erase(form.factors.begin(), first_proper);
  while (!form.factors.empty() && form.factors.back().is_identity()) {
    form.factors.pop_back();
  }
}

FreeWord substitute(const FreeWord& word, int index, bool inverse) {
  // s_i:      x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i
  // s_i^{-1}: x_i -> x_{i+1},               x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
  const FreeWord low = inverse ? FreeWord{index + 1}
                               : FreeWord{index, index + 1, -index};
  const FreeWord high = inverse ? FreeWord{-(index + 1), index, index + 1}
                                : FreeWord{index};
  FreeWord out;
  out.reserve(word.size() * 2);
  auto push = [&out](int x) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  };
  for (int x : word) {
    const int base = std::abs(x);
    const FreeWord* image = nullptr;
    if (base == index) image = &low;
    if (base == index + 1) image = &high;
    if (image == nullptr) {
      push(x);
    } else if (x > 0) {
      for (int y : *image) push(y);
    } else {
      for (auto it = image->rbegin(); it != image->rend(); ++it) push(-*it);
    }
  }
  return out;
}

}  // namespace

// --- BraidWord --------------------------------------------------------------

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands);
  for (const auto& letter : letters_) check_letter(strands_, letter);
}

BraidWord BraidWord::from_signed(int strands, const std::vector<int>& indices) {
  std::vector<Letter> letters;
  letters.reserve(indices.size());
  for (int i : indices) letters.push_back({std::abs(i), i < 0});
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::half_twist(int strands) {
  check_strands(strands);
  return Permutation::reversal(strands).reduced_word();
}

BraidWord BraidWord::generator(int strands, int index, bool inverse) {
  return BraidWord(strands, {Letter{index, inverse}});
}

void BraidWord::append(Letter letter) {
  check_letter(strands_, letter);
  letters_.push_back(letter);
}

BraidWord BraidWord::inverse() const {
  BraidWord out(strands_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back({it->index, !it->inverse});
  }
  return out;
}

BraidWord BraidWord::power(long exponent) const {
  if (exponent < 0) return inverse().power(-exponent);
  BraidWord out(strands_);
  out.letters_.reserve(letters_.size() * static_cast<std::size_t>(exponent));
  for (long e = 0; e < exponent; ++e) {
    out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
  }
  return out;
}

BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs) {
  check_same_strands(lhs, rhs);
  BraidWord out = lhs;
  out.letters_.insert(out.letters_.end(), rhs.letters_.begin(),
                      rhs.letters_.end());
  return out;
}

std::string to_string(const BraidWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& letter : w.letters()) {
    if (!first) os << ' ';
    os << (letter.inverse ? 'S' : 's') << letter.index;
    first = false;
  }
  return os.str();
}

// --- Permutation ------------------------------------------------------------

Permutation::Permutation(int size) : images_(static_cast<std::size_t>(size)) {
  for (int j = 0; j < size; ++j) images_[static_cast<std::size_t>(j)] = j;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::from_one_line(const std::vector<int>& one_line) {
  std::vector<int> images;
  images.reserve(one_line.size());
  for (int x : one_line) images.push_back(x - 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int size, int index) {
  Permutation p(size);
  std::swap(p.images_[static_cast<std::size_t>(index - 1)],
            p.images_[static_cast<std::size_t>(index)]);
  return p;
}

Permutation Permutation::reversal(int size) {
  Permutation p(size);
  std::reverse(p.images_.begin(), p.images_.end());
  return p;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (int x : images_) out.push_back(x + 1);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) {
    inv[static_cast<std::size_t>(images_[j])] = static_cast<int>(j);
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (images_[j] != static_cast<int>(j)) return false;
  }
  return true;
}

bool Permutation::is_reversal() const {
  const int n = size();
  for (int j = 0; j < n; ++j) {
    if ((*this)(j) != n - 1 - j) return false;
  }
  return true;
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++count;
    }
  }
  return count;
}

std::uint64_t Permutation::finishing_set() const {
  std::uint64_t mask = 0;
  for (int i = 1; i < size(); ++i) {
    if ((*this)(i - 1) > (*this)(i)) mask |= std::uint64_t{1} << (i - 1);
  }
  return mask;
}

std::uint64_t Permutation::starting_set() const {
  return inverse().finishing_set();
}

BraidWord Permutation::reduced_word() const {
  Permutation p = *this;
  std::vector<Letter> reversed;
  for (;;) {
    const std::uint64_t descents = p.finishing_set();
    if (descents == 0) break;
    const int index = std::countr_zero(descents) + 1;
    reversed.push_back({index, false});
    std::swap(p.images_[static_cast<std::size_t>(index - 1)],
              p.images_[static_cast<std::size_t>(index)]);
  }
  std::reverse(reversed.begin(), reversed.end());
  return BraidWord(std::max(size(), 2), std::move(reversed));
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size()) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<int> images(lhs.images_.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    images[j] = lhs(rhs(static_cast<int>(j)));
  }
  return Permutation(std::move(images));
}

// --- Normal forms -----------------------------------------------------------

BraidWord CanonicalForm::to_word() const {
  BraidWord out = BraidWord::half_twist(strands).power(infimum);
  for (const auto& factor : factors) out = out * factor.reduced_word();
  return out;
}

std::string to_string(const CanonicalForm& form) {
  std::ostringstream os;
  os << "Δ^" << form.infimum;
  for (const auto& factor : form.factors) {
    os << " · [";
    const auto line = factor.one_line();
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (j != 0) os << ',';
      os << line[j];
    }
    os << ']';
  }
  return os.str();
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p(w.strands());
  std::vector<int> images = p.images();
  for (const auto& letter : w.letters()) {
    std::swap(images[static_cast<std::size_t>(letter.index - 1)],
              images[static_cast<std::size_t>(letter.index)]);
  }
  return Permutation(std::move(images));
}

CanonicalForm left_normal_form(const BraidWord& w) {
  const int n = w.strands();
  const auto reversal = Permutation::reversal(n);
  CanonicalForm form{n, 0, {}};
  auto& factors = form.factors;

  for (const auto& letter : w.letters()) {
    const auto s = Permutation::transposition(n, letter.index);
    if (letter.inverse) {
      // s_i^{-1} = Δ^{-1} · (Δ s_i^{-1}); push Δ^{-1} through to the front.
      --form.infimum;
      for (auto& f : factors) f = flip_factor(f);
      factors.push_back(reversal * s);
    } else {
      factors.push_back(s);
    }
    for (std::size_t j = factors.size() - 1; j > 0; --j) {
      if (!make_left_weighted(factors[j - 1], factors[j])) break;
    }
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 1; j < factors.size(); ++j) {
      changed = make_left_weighted(factors[j - 1], factors[j]) || changed;
    }
  }
  absorb_and_trim(form);
  return form;
}

bool equals(const BraidWord& u, const BraidWord& v) {
  check_same_strands(u, v);
  return left_normal_form(u) == left_normal_form(v);
}

bool equals_mod_center(const BraidWord& u, const BraidWord& v) {
  check_same_strands(u, v);
  if (u.strands() == 2) return true;  // B_2 is abelian
  return left_normal_form(u * v.inverse()).is_central_power();
}

BraidWord flip(const BraidWord& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (const auto& letter : w.letters()) {
    letters.push_back({w.strands() - letter.index, letter.inverse});
  }
  return BraidWord(w.strands(), std::move(letters));
}

CanonicalForm center_class_key(const BraidWord& w) {
  if (w.strands() == 2) return CanonicalForm{2, 0, {}};
  CanonicalForm form = left_normal_form(w);
  form.infimum = ((form.infimum % 2) + 2) % 2;
  return form;
}

// --- Artin action -----------------------------------------------------------

FreeGroupEndomorphism artin_action(const BraidWord& w) {
  FreeGroupEndomorphism phi;
  phi.images.reserve(static_cast<std::size_t>(w.strands()));
  for (int j = 1; j <= w.strands(); ++j) phi.images.push_back({j});
  for (const auto& letter : w.letters()) {
    for (auto& image : phi.images) {
      image = substitute(image, letter.index, letter.inverse);
    }
  }
  return phi;
}

}  // namespace theta::braid
