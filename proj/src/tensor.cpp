#include "gaudin/tensor.hpp"

#include <stdexcept>

namespace gaudin {

Index chain_dim(int sites) {
  if (sites < 0 || sites > 19) throw std::invalid_argument("chain_dim: sites out of range");
  Index dim = 1;
  for (int i = 0; i < sites; ++i) dim *= 3;
  return dim;
}

int sites_of_dim(Index dim) {
  int sites = 0;
  Index d = 1;
  while (d < dim) {
    d *= 3;
    ++sites;
  }
  if (d != dim) throw std::invalid_argument("sites_of_dim: not a power of 3");
  return sites;
}

Index basis_index(std::span<const int> digits) {
  Index index = 0;
  for (int d : digits) {
    if (d < 0 || d > 2) throw std::invalid_argument("basis_index: digit out of range");
    index = index * 3 + d;
  }
  return index;
}

std::vector<int> basis_digits(Index index, int sites) {
  if (index < 0 || index >= chain_dim(sites)) {
    throw std::invalid_argument("basis_digits: index out of range");
  }
  std::vector<int> digits(sites);
  for (int s = sites - 1; s >= 0; --s) {
    digits[s] = static_cast<int>(index % 3);
    index /= 3;
  }
  return digits;
}

Parity basis_parity(Index index, int sites) {
  int fermions = 0;
  for (int s = 0; s < sites; ++s) {
    if (index % 3 == 1) ++fermions;
    index /= 3;
  }
  return static_cast<Parity>(fermions % 2);
}

Parity tensor_degree(std::span<const Parity> parities) {
  Parity total = Parity::even;
  for (Parity p : parities) total = parity_sum(total, p);
  return total;
}

GradedMatrix site_generator(GeneratorName g) {
  // digit -> (e1,e2,e3) position: 0 -> e2, 1 -> e3, 2 -> e1
  static constexpr int to_digit[3] = {2, 0, 1};
  const GradedMatrix reference = generator(g);
  std::vector<Triplet> t;
  for (Index k = 0; k < reference.matrix.outerSize(); ++k) {
    for (SparseMat::InnerIterator it(reference.matrix, k); it; ++it) {
      t.emplace_back(to_digit[it.row()], to_digit[it.col()], it.value());
    }
  }
  return {from_triplets(3, 3, t), reference.parity};
}

GradedMatrix chain_identity(int sites) {
  return {identity(chain_dim(sites)), Parity::even};
}

GradedMatrix parity_operator(int sites) {
  const Index dim = chain_dim(sites);
  std::vector<Triplet> t;
  t.reserve(dim);
  for (Index i = 0; i < dim; ++i) {
    t.emplace_back(i, i, basis_parity(i, sites) == Parity::odd ? Rational(-1) : Rational(1));
  }
  return {from_triplets(dim, dim, t), Parity::even};
}

GradedMatrix graded_kron(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.matrix.rows() != a.matrix.cols() || b.matrix.rows() != b.matrix.cols()) {
    throw std::invalid_argument("graded_kron: operators must be square");
  }
  const int sites_a = sites_of_dim(a.matrix.rows());
  const Index dim_b = b.matrix.rows();

  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(a.matrix.nonZeros()) * b.matrix.nonZeros());
  for (Index ka = 0; ka < a.matrix.outerSize(); ++ka) {
    for (SparseMat::InnerIterator ia(a.matrix, ka); ia; ++ia) {
      // Koszul sign: odd b picks up the parity of the column state of a
      const bool flip = b.parity == Parity::odd &&
                        basis_parity(ia.col(), sites_a) == Parity::odd;
      const Rational va = flip ? -ia.value() : ia.value();
      for (Index kb = 0; kb < b.matrix.outerSize(); ++kb) {
        for (SparseMat::InnerIterator ib(b.matrix, kb); ib; ++ib) {
          t.emplace_back(ia.row() * dim_b + ib.row(), ia.col() * dim_b + ib.col(),
                         va * ib.value());
        }
      }
    }
  }
  return {from_triplets(a.matrix.rows() * dim_b, a.matrix.rows() * dim_b, t),
          parity_sum(a.parity, b.parity)};
}

GradedMatrix embed_at_site(const GradedMatrix& x, int site, int sites) {
  if (site < 1 || site > sites) throw std::invalid_argument("embed_at_site: site out of range");
  if (x.matrix.rows() != 3 || x.matrix.cols() != 3) {
    throw std::invalid_argument("embed_at_site: expected a single-site operator");
  }
  // the left factor is even, so the parity string on sites < site comes out
  // of the Koszul sign in graded_kron
  return graded_kron(graded_kron(chain_identity(site - 1), x),
                     chain_identity(sites - site));
}

}  // namespace gaudin
