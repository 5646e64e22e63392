#pragma once

// Integral homology of the genus n*k surface built from n blocks of genus k,
// Dehn twists as symplectic transvections, and the images of the alternating
// twist products f_1..f_{2k+1} under the symplectic representation.

#include <string>
#include <vector>

#include "theta/braid.hpp"
#include "theta/int_matrix.hpp"

namespace theta::symplectic {

/// Coordinates over the basis a_{1,1}, b_{1,1}, a_{1,2}, b_{1,2}, ...
using HomologyClass = std::vector<Integer>;

enum class Direction { Left, Right };

class SurfaceModel {
 public:
  /// Throws std::invalid_argument unless n >= 1 and k >= 1.
  SurfaceModel(int blocks, int block_genus);

  int blocks() const { return blocks_; }
  int block_genus() const { return block_genus_; }
  int genus() const { return blocks_ * block_genus_; }
  std::size_t dimension() const { return 2 * static_cast<std::size_t>(genus()); }
  int chain_length() const { return 2 * block_genus_ + 1; }

  /// Coordinate index of a_{l,j} (1-based block and handle); b_{l,j} is +1.
  std::size_t a_index(int block, int handle) const;
  std::size_t b_index(int block, int handle) const;
  std::string basis_label(std::size_t index) const;

  HomologyClass zero() const;
  HomologyClass a(int block, int handle) const;
  HomologyClass b(int block, int handle) const;

  /// Chain class c_{l,i}, 1 <= i <= 2k+1.
  const HomologyClass& chain_class(int block, int position) const;

  /// Block-diagonal with blocks [[0,1],[-1,0]].
  const IntMatrix& intersection_form() const { return form_; }
  Integer pairing(const HomologyClass& x, const HomologyClass& y) const;

 private:
  int blocks_;
  int block_genus_;
  IntMatrix form_;
  std::vector<std::vector<HomologyClass>> chains_;  // [block][position]
};

/// Left twist x -> x - <x,c> c; the right twist is its inverse.
IntMatrix twist_matrix(const SurfaceModel& model, const HomologyClass& curve,
                       Direction direction);

/// Product over blocks l of the twist about c_{l,i}, right-handed on odd
/// blocks and left-handed on even blocks. Throws std::out_of_range unless
/// 1 <= i <= 2k+1.
IntMatrix generator_image(const SurfaceModel& model, int index);

/// Matrix product of generator images along the word (letter s_i stands for
/// f_i). Throws std::out_of_range on an index outside 1..2k+1.
IntMatrix evaluate_word(const SurfaceModel& model, const braid::BraidWord& w);

bool is_symplectic(const SurfaceModel& model, const IntMatrix& m);
bool is_hyperelliptic_image(const IntMatrix& m);

/// Inverse of a symplectic matrix: J^{-1} M^T J.
IntMatrix symplectic_inverse(const SurfaceModel& model, const IntMatrix& m);

}  // namespace theta::symplectic
