#include "grh/supermatrix.hpp"

#include <json.hpp>
#include <sstream>

#include "grh/parser.hpp"
#include "grh/presets.hpp"

namespace grh {

Parity index_parity(int dim, int i) {
  // i is 1-based; base parities p(1)=0, p(2)=1, composite indices add mod 2
  switch (dim) {
    case 2:
      return i == 2 ? Parity::Odd : Parity::Even;
    case 4: {
      int a = (i - 1) / 2 + 1, b = (i - 1) % 2 + 1;
      return index_parity(2, a) + index_parity(2, b);
    }
    case 8: {
      int a = (i - 1) / 4 + 1, bc = (i - 1) % 4 + 1;
      return index_parity(2, a) + index_parity(4, bc);
    }
    default:
      throw DimensionMismatch("index parity defined for dimensions 2, 4, 8");
  }
}

SuperMatrix::SuperMatrix(int rows, int cols, AlphabetPtr alph)
    : rows_(rows), cols_(cols), alph_(std::move(alph)) {
  if (rows_ <= 0 || cols_ <= 0) throw DimensionMismatch("matrix dimensions must be positive");
  e_.assign(static_cast<size_t>(rows_) * cols_, Element::zero(alph_));
}

SuperMatrix SuperMatrix::identity(int n, AlphabetPtr alph) {
  SuperMatrix m(n, n, alph);
  for (int i = 1; i <= n; ++i) m.at(i, i) = Element::unit(m.alph_);
  return m;
}

const Element& SuperMatrix::at(int r, int c) const {
  if (r < 1 || r > rows_ || c < 1 || c > cols_)
    throw DimensionMismatch("matrix index out of range");
  return e_[static_cast<size_t>(r - 1) * cols_ + (c - 1)];
}

Element& SuperMatrix::at(int r, int c) {
  if (r < 1 || r > rows_ || c < 1 || c > cols_)
    throw DimensionMismatch("matrix index out of range");
  return e_[static_cast<size_t>(r - 1) * cols_ + (c - 1)];
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  SuperMatrix r(rows_, o.cols_, alph_);
  for (int i = 1; i <= rows_; ++i) {
    for (int k = 1; k <= cols_; ++k) {
      const Element& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 1; j <= o.cols_; ++j) {
        const Element& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

SuperMatrix SuperMatrix::operator+(const SuperMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
  SuperMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

SuperMatrix SuperMatrix::operator-(const SuperMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix diff shape");
  SuperMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

SuperMatrix SuperMatrix::scaled(const Scalar& s) const {
  SuperMatrix r = *this;
  for (auto& x : r.e_) x = x.scaled(s);
  return r;
}

bool SuperMatrix::operator==(const SuperMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

SuperMatrix SuperMatrix::normalized(const RewriteSystem& sys) const {
  SuperMatrix r(rows_, cols_, sys.alphabet());
  Rewriter rw(sys);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j)
      r.at(i, j) = rw.normal_form(at(i, j).map_to(sys.alphabet()));
  return r;
}

SuperMatrix SuperMatrix::substituted(const std::vector<std::optional<Element>>& images) const {
  SuperMatrix r = *this;
  for (auto& x : r.e_) x = x.substitute(images, alph_);
  return r;
}

SuperMatrix SuperMatrix::map_to(const AlphabetPtr& target) const {
  SuperMatrix r(rows_, cols_, target);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].map_to(target);
  return r;
}

SuperMatrix SuperMatrix::limit_at_one() const {
  SuperMatrix r = *this;
  for (auto& x : r.e_) x = x.limit_at_one();
  return r;
}

bool SuperMatrix::is_zero() const { return nonzero_count() == 0; }

int SuperMatrix::nonzero_count() const {
  int n = 0;
  for (const auto& x : e_)
    if (!x.is_zero()) ++n;
  return n;
}

std::string SuperMatrix::grid_str() const {
  std::vector<std::string> txt(e_.size());
  std::vector<size_t> width(cols_, 0);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      txt[i * cols_ + j] = e_[i * cols_ + j].str();
      width[j] = std::max(width[j], txt[i * cols_ + j].size());
    }
  }
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[ ";
    for (int j = 0; j < cols_; ++j) {
      const std::string& s = txt[i * cols_ + j];
      os << s << std::string(width[j] - s.size(), ' ');
      os << (j + 1 == cols_ ? " ]" : "  ");
    }
    os << "\n";
  }
  return os.str();
}

std::string SuperMatrix::json_str() const {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 1; i <= rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 1; k <= cols_; ++k) row.push_back(at(i, k).str());
    j.push_back(row);
  }
  return j.dump(2);
}

namespace {
Scalar sign_scalar(int s) { return s < 0 ? Scalar(-1) : Scalar(1); }
}  // namespace

SuperMatrix embed_T1(const SuperMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DimensionMismatch("embed_T1 expects 2x2");
  SuperMatrix r(4, 4, m.alphabet());
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) {
          if (j != l) continue;
          Parity pj = index_parity(2, j), pl = index_parity(2, l), pk = index_parity(2, k);
          int s = (pk == Parity::Odd && (pj + pl) == Parity::Odd) ? -1 : 1;
          r.at((i - 1) * 2 + j, (k - 1) * 2 + l) = m.at(i, k).scaled(sign_scalar(s));
        }
  return r;
}

SuperMatrix embed_T2(const SuperMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DimensionMismatch("embed_T2 expects 2x2");
  SuperMatrix r(4, 4, m.alphabet());
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) {
          if (i != k) continue;
          Parity pi = index_parity(2, i), pj = index_parity(2, j), pl = index_parity(2, l);
          int s = (pi == Parity::Odd && (pj + pl) == Parity::Odd) ? -1 : 1;
          r.at((i - 1) * 2 + j, (k - 1) * 2 + l) = m.at(j, l).scaled(sign_scalar(s));
        }
  return r;
}

SuperMatrix embed_R(const SuperMatrix& r, EmbedSlot slot, EmbedConvention conv) {
  if (r.rows() != 4 || r.cols() != 4) throw DimensionMismatch("embed_R expects 4x4");
  SuperMatrix out(8, 8, r.alphabet());
  auto p2 = [](int i) { return index_parity(2, i); };
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n) {
              int row = (i - 1) * 4 + (j - 1) * 2 + k;
              int col = (l - 1) * 4 + (m - 1) * 2 + n;
              switch (slot) {
                case EmbedSlot::S12:
                  if (k != n) continue;
                  out.at(row, col) += r.at((i - 1) * 2 + j, (l - 1) * 2 + m);
                  break;
                case EmbedSlot::S23:
                  if (i != l) continue;
                  out.at(row, col) += r.at((j - 1) * 2 + k, (m - 1) * 2 + n);
                  break;
                case EmbedSlot::S13: {
                  if (j != m) continue;
                  int s = 1;
                  if (conv == EmbedConvention::Graded)
                    s = (p2(j) == Parity::Odd && (p2(k) + p2(n)) == Parity::Odd) ? -1 : 1;
                  out.at(row, col) +=
                      r.at((i - 1) * 2 + k, (l - 1) * 2 + n).scaled(sign_scalar(s));
                  break;
                }
              }
            }
  return out;
}

// ---------------------------------------------------------------- builders

const std::vector<MatrixName>& all_matrices() {
  static const std::vector<MatrixName> kAll = {
      MatrixName::T_GrQ, MatrixName::T_GrH, MatrixName::T_generic, MatrixName::g,
      MatrixName::g_inv, MatrixName::G_h,   MatrixName::G_minus_h, MatrixName::R_q,
      MatrixName::R_q1,  MatrixName::R_q2,  MatrixName::R_h,       MatrixName::R_minus_h,
      MatrixName::I2,    MatrixName::I4,    MatrixName::I8};
  return kAll;
}

const std::string& matrix_id(MatrixName m) {
  static const std::vector<std::string> kIds = {
      "T_GrQ", "T_GrH", "T_generic", "g", "g_inv", "G_h", "G_minus_h",
      "R_q",   "R_q1",  "R_q2",      "R_h", "R_minus_h", "I2", "I4", "I8"};
  return kIds[static_cast<int>(m)];
}

MatrixName matrix_from_id(const std::string& id) {
  for (MatrixName m : all_matrices()) {
    if (matrix_id(m) == id) return m;
  }
  throw UnknownGenerator("unknown matrix '" + id + "'");
}

namespace {

SuperMatrix from_texts(const AlphabetPtr& a, int n,
                       const std::vector<std::vector<std::string>>& rows) {
  SuperMatrix m(n, n, a);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.at(i, j) = parse_element(rows[i - 1][j - 1], a);
  return m;
}

SuperMatrix build_T(const AlphabetPtr& a, const std::string& a11, const std::string& a12,
                    const std::string& a21, const std::string& a22) {
  return from_texts(a, 2, {{a11, a12}, {a21, a22}});
}

const AlphabetPtr& grh_alphabet() {
  return build(PresetName::GrH).alphabet();
}

SuperMatrix build_g() {
  return build_T(grh_alphabet(), "1", "0", "(1/(q - 1))*h", "1");
}

SuperMatrix build_g_inv() {
  return build_T(grh_alphabet(), "1", "0", "-(1/(q - 1))*h", "1");
}

SuperMatrix build_G_h() {
  const RewriteSystem& grh = build(PresetName::GrH);
  SuperMatrix gh = embed_T1(build_g()) * embed_T2(build_g_inv());
  return gh.normalized(grh);
}

SuperMatrix build_R_q() {
  return from_texts(grh_alphabet(), 4,
                    {{"q + q^-1", "0", "0", "0"},
                     {"0", "-2", "q^-1 - q", "0"},
                     {"0", "q - q^-1", "-2", "0"},
                     {"0", "0", "0", "q + q^-1"}});
}

SuperMatrix build_R_q1() {
  return from_texts(grh_alphabet(), 4,
                    {{"q", "0", "0", "0"},
                     {"0", "-1", "0", "0"},
                     {"0", "q - q^-1", "-1", "0"},
                     {"0", "0", "0", "q^-1"}});
}

SuperMatrix build_R_q2() {
  return from_texts(grh_alphabet(), 4,
                    {{"q^-1", "0", "0", "0"},
                     {"0", "-1", "q^-1 - q", "0"},
                     {"0", "0", "-1", "0"},
                     {"0", "0", "0", "q"}});
}

SuperMatrix build_R_h() {
  return from_texts(grh_alphabet(), 4,
                    {{"1", "0", "0", "0"},
                     {"-h", "-1", "0", "0"},
                     {"-h", "0", "-1", "0"},
                     {"0", "h", "-h", "1"}});
}

std::vector<std::optional<Element>> h_negation_images(const AlphabetPtr& a) {
  std::vector<std::optional<Element>> images(a->size());
  int h = a->require("h");
  for (int i = 0; i < a->size(); ++i)
    images[i] = i == h ? -Element::letter(a, i) : Element::letter(a, i);
  return images;
}

}  // namespace

SuperMatrix build_matrix(MatrixName name) {
  switch (name) {
    case MatrixName::T_GrQ: {
      const AlphabetPtr& a = build(PresetName::GrQ).alphabet();
      return build_T(a, "alpha", "b", "c", "delta");
    }
    case MatrixName::T_GrH:
      return build_T(grh_alphabet(), "alpha", "b", "c", "delta");
    case MatrixName::T_generic: {
      const AlphabetPtr& a = build(PresetName::Generic_x_Plane).alphabet();
      return build_T(a, "t11", "t12", "t21", "t22");
    }
    case MatrixName::g:
      return build_g();
    case MatrixName::g_inv:
      return build_g_inv();
    case MatrixName::G_h:
      return build_G_h();
    case MatrixName::G_minus_h:
      return build_G_h().substituted(h_negation_images(grh_alphabet()));
    case MatrixName::R_q:
      return build_R_q();
    case MatrixName::R_q1:
      return build_R_q1();
    case MatrixName::R_q2:
      return build_R_q2();
    case MatrixName::R_h:
      return build_R_h();
    case MatrixName::R_minus_h:
      return build_R_h().substituted(h_negation_images(grh_alphabet()));
    case MatrixName::I2:
      return SuperMatrix::identity(2, grh_alphabet());
    case MatrixName::I4:
      return SuperMatrix::identity(4, grh_alphabet());
    case MatrixName::I8:
      return SuperMatrix::identity(8, grh_alphabet());
  }
  throw UnknownGenerator("unknown matrix");
}

}  // namespace grh
