#pragma once

#include <string>
#include <vector>

#include "grh/algebra.hpp"

namespace grh {

// Index parities for the supported sizes: for dimension 2, p(1)=even, p(2)=odd;
// for 4 and 8 the parity of a composite index is the sum of its 2-index parts.
Parity index_parity(int dim, int i);

enum class EmbedSlot { S12, S13, S23 };
enum class EmbedConvention { Ungraded, Graded };

// Rectangular matrix of Elements over one alphabet. Matrix products never
// insert signs; all grading lives in entry arithmetic plus embedding factors.
class SuperMatrix {
 public:
  SuperMatrix(int rows, int cols, AlphabetPtr alph);
  static SuperMatrix identity(int n, AlphabetPtr alph);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const AlphabetPtr& alphabet() const { return alph_; }

  // 1-based access, matching the printed displays
  const Element& at(int r, int c) const;
  Element& at(int r, int c);

  SuperMatrix operator*(const SuperMatrix& o) const;
  SuperMatrix operator+(const SuperMatrix& o) const;
  SuperMatrix operator-(const SuperMatrix& o) const;
  SuperMatrix scaled(const Scalar& s) const;
  bool operator==(const SuperMatrix& o) const;
  bool operator!=(const SuperMatrix& o) const { return !(*this == o); }

  SuperMatrix normalized(const RewriteSystem& sys) const;
  SuperMatrix substituted(const std::vector<std::optional<Element>>& images) const;
  SuperMatrix map_to(const AlphabetPtr& target) const;
  SuperMatrix limit_at_one() const;
  bool is_zero() const;
  int nonzero_count() const;

  std::string grid_str() const;   // aligned text grid
  std::string json_str() const;   // array of arrays of printed Elements

 private:
  int rows_, cols_;
  AlphabetPtr alph_;
  std::vector<Element> e_;
};

// The 2 -> 4 embeddings with the sign convention
//   (T1)^{ij}_{kl} = (-1)^{p(k)(p(j)+p(l))} M^i_k d^j_l
//   (T2)^{ij}_{kl} = (-1)^{p(i)(p(j)+p(l))} M^j_l d^i_k
// with row (ij) and column (kl) ordered 11, 12, 21, 22.
SuperMatrix embed_T1(const SuperMatrix& m);
SuperMatrix embed_T2(const SuperMatrix& m);

// The 4 -> 8 leg embeddings. Slot 12 is R (x) I2 and slot 23 is I2 (x) R under
// both conventions; slot 13 leaves the middle factor untouched and, under the
// graded convention, inserts (-1)^{p(j)(p(k)+p(n))} for the leg crossing it.
SuperMatrix embed_R(const SuperMatrix& r, EmbedSlot slot, EmbedConvention conv);

enum class MatrixName {
  T_GrQ, T_GrH, T_generic, g, g_inv, G_h, G_minus_h,
  R_q, R_q1, R_q2, R_h, R_minus_h, I2, I4, I8
};

const std::vector<MatrixName>& all_matrices();
const std::string& matrix_id(MatrixName m);
MatrixName matrix_from_id(const std::string& id);

// Bit-exact constructors for every matrix appearing in the theory. Matrices
// whose entries need h live over the Gr_h alphabet; T_GrQ over GrQ's;
// T_generic over the generic composite's.
SuperMatrix build_matrix(MatrixName name);

}  // namespace grh
