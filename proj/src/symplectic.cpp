#include "theta/symplectic.hpp"

#include <stdexcept>

namespace theta::symplectic {

SurfaceModel::SurfaceModel(int blocks, int block_genus)
    : blocks_(blocks), block_genus_(block_genus) {
  if (blocks < 1 || block_genus < 1) {
    throw std::invalid_argument("surface model needs n >= 1 and k >= 1");
  }
  const std::size_t dim = dimension();
  form_ = IntMatrix(dim, dim);
  for (std::size_t i = 0; i < dim; i += 2) {
    form_(i, i + 1) = 1;
    form_(i + 1, i) = -1;
  }

  // Chain per block: a_1, b_1, a_1 + a_2, b_2, ..., a_{k-1} + a_k, b_k, a_k.
  const int k = block_genus_;
  chains_.resize(static_cast<std::size_t>(blocks_));
  for (int l = 1; l <= blocks_; ++l) {
    auto& chain = chains_[static_cast<std::size_t>(l - 1)];
    chain.push_back(a(l, 1));
    for (int i = 1; i <= k; ++i) {
      chain.push_back(b(l, i));
      if (i < k) {
        HomologyClass c = a(l, i);
        c[a_index(l, i + 1)] += 1;
        chain.push_back(std::move(c));
      }
    }
    chain.push_back(a(l, k));
  }
}

std::size_t SurfaceModel::a_index(int block, int handle) const {
  if (block < 1 || block > blocks_ || handle < 1 || handle > block_genus_) {
    throw std::out_of_range("basis label out of range");
  }
  return 2 * (static_cast<std::size_t>(block - 1) *
                  static_cast<std::size_t>(block_genus_) +
              static_cast<std::size_t>(handle - 1));
}

std::size_t SurfaceModel::b_index(int block, int handle) const {
  return a_index(block, handle) + 1;
}

std::string SurfaceModel::basis_label(std::size_t index) const {
  const std::size_t handle_slot = index / 2;
  const auto block = handle_slot / static_cast<std::size_t>(block_genus_) + 1;
  const auto handle = handle_slot % static_cast<std::size_t>(block_genus_) + 1;
  return std::string(index % 2 == 0 ? "a" : "b") + "_{" +
         std::to_string(block) + "," + std::to_string(handle) + "}";
}

HomologyClass SurfaceModel::zero() const {
  return HomologyClass(dimension(), Integer(0));
}

HomologyClass SurfaceModel::a(int block, int handle) const {
  HomologyClass x = zero();
  x[a_index(block, handle)] = 1;
  return x;
}

HomologyClass SurfaceModel::b(int block, int handle) const {
  HomologyClass x = zero();
  x[b_index(block, handle)] = 1;
  return x;
}

const HomologyClass& SurfaceModel::chain_class(int block, int position) const {
  if (block < 1 || block > blocks_ || position < 1 ||
      position > chain_length()) {
    throw std::out_of_range("chain class c_{" + std::to_string(block) + "," +
                            std::to_string(position) + "} out of range");
  }
  return chains_[static_cast<std::size_t>(block - 1)]
                [static_cast<std::size_t>(position - 1)];
}

Integer SurfaceModel::pairing(const HomologyClass& x,
                              const HomologyClass& y) const {
  Integer total = 0;
  for (std::size_t i = 0; i < dimension(); i += 2) {
    total += x[i] * y[i + 1] - x[i + 1] * y[i];
  }
  return total;
}

IntMatrix twist_matrix(const SurfaceModel& model, const HomologyClass& curve,
                       Direction direction) {
  const std::size_t dim = model.dimension();
  if (curve.size() != dim) {
    throw std::invalid_argument("homology class has wrong dimension");
  }
  // Column j is e_j -+ <e_j, c> c, and <e_j, c> = (J c)_j.
  std::vector<Integer> j_curve(dim);
  const IntMatrix& form = model.intersection_form();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t t = 0; t < dim; ++t) j_curve[i] += form(i, t) * curve[t];
  }
  IntMatrix m = IntMatrix::identity(dim);
  const int sign = direction == Direction::Left ? -1 : 1;
  for (std::size_t r = 0; r < dim; ++r) {
    if (curve[r] == 0) continue;
    for (std::size_t c = 0; c < dim; ++c) {
      m(r, c) += sign * j_curve[c] * curve[r];
    }
  }
  return m;
}

IntMatrix generator_image(const SurfaceModel& model, int index) {
  if (index < 1 || index > model.chain_length()) {
    throw std::out_of_range("generator f_" + std::to_string(index) +
                            " out of range 1.." +
                            std::to_string(model.chain_length()));
  }
  IntMatrix out = IntMatrix::identity(model.dimension());
  for (int l = 1; l <= model.blocks(); ++l) {
    const Direction dir = l % 2 == 1 ? Direction::Right : Direction::Left;
    out = out * twist_matrix(model, model.chain_class(l, index), dir);
  }
  return out;
}

IntMatrix symplectic_inverse(const SurfaceModel& model, const IntMatrix& m) {
  const IntMatrix& form = model.intersection_form();
  return -form * m.transpose() * form;
}

IntMatrix evaluate_word(const SurfaceModel& model, const braid::BraidWord& w) {
  const int generators = model.chain_length();
  std::vector<IntMatrix> images;
  std::vector<IntMatrix> inverses;
  images.reserve(static_cast<std::size_t>(generators));
  for (int i = 1; i <= generators; ++i) {
    images.push_back(generator_image(model, i));
    inverses.push_back(symplectic_inverse(model, images.back()));
  }
  IntMatrix out = IntMatrix::identity(model.dimension());
  for (const auto& letter : w.letters()) {
    if (letter.index > generators) {
      throw std::out_of_range("generator f_" + std::to_string(letter.index) +
                              " out of range 1.." +
                              std::to_string(generators));
    }
    const auto slot = static_cast<std::size_t>(letter.index - 1);
    out = out * (letter.inverse ? inverses[slot] : images[slot]);
  }
  return out;
}

bool is_symplectic(const SurfaceModel& model, const IntMatrix& m) {
  const IntMatrix& form = model.intersection_form();
  return m.rows() == model.dimension() && m.cols() == model.dimension() &&
         m.transpose() * form * m == form;
}

bool is_hyperelliptic_image(const IntMatrix& m) {
  return m.rows() == m.cols() && (-m).is_identity();
}

}  // namespace theta::symplectic
