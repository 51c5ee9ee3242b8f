#include "okit/matrix.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

#include "okit/error.hpp"

namespace okit {

MultMatrix::MultMatrix(const Group* g, std::vector<std::uint32_t> index)
    : g_(g), index_(std::move(index)) {
  if (!std::is_sorted(index_.begin(), index_.end()))
    fail(Errc::InvariantBreach, "matrix index list must follow the element order");
  if (std::adjacent_find(index_.begin(), index_.end()) != index_.end())
    fail(Errc::InvariantBreach, "matrix index list has duplicates");
  m_.assign(index_.size() * index_.size(), LaurentPoly());
}

std::size_t MultMatrix::pos(std::uint32_t x) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), x);
  if (it == index_.end() || *it != x)
    fail(Errc::NotInIndexSet, "element " + g_->word_str(x) + " not in the matrix index");
  return static_cast<std::size_t>(it - index_.begin());
}

bool MultMatrix::contains(std::uint32_t x) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), x);
  return it != index_.end() && *it == x;
}

MultMatrix MultMatrix::transpose_times(const MultMatrix& other) const {
  if (index_ != other.index_) fail(Errc::BlockMismatch, "index lists differ");
  MultMatrix r(g_, index_);
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly acc;
      for (std::size_t k = 0; k < n; ++k) acc += at(k, i) * other.at(k, j);
      r.at(i, j) = std::move(acc);
    }
  return r;
}

MultMatrix MultMatrix::times(const MultMatrix& other) const {
  if (index_ != other.index_) fail(Errc::BlockMismatch, "index lists differ");
  MultMatrix r(g_, index_);
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly acc;
      for (std::size_t k = 0; k < n; ++k) acc += at(i, k) * other.at(k, j);
      r.at(i, j) = std::move(acc);
    }
  return r;
}

MultMatrix MultMatrix::submatrix(const std::vector<std::uint32_t>& sub) const {
  MultMatrix r(g_, sub);
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = 0; j < sub.size(); ++j) r.at(i, j) = at(pos(sub[i]), pos(sub[j]));
  return r;
}

MultMatrix MultMatrix::subst_neg() const {
  MultMatrix r(g_, index_);
  for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] = m_[i].subst_neg();
  return r;
}

bool MultMatrix::is_identity() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool MultMatrix::is_symmetric() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool MultMatrix::operator==(const MultMatrix& o) const {
  return index_ == o.index_ && m_ == o.m_;
}

MultMatrix MultMatrix::inverse_unitriangular() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!at(i, i).is_one()) fail(Errc::NonInvertible, "diagonal entry is not 1");
    for (std::size_t j = 0; j < i; ++j)
      if (!at(i, j).is_zero()) fail(Errc::NonInvertible, "matrix is not upper unitriangular");
  }
  MultMatrix x(g_, index_);
  for (std::size_t j = 0; j < n; ++j) {
    x.at(j, j) = LaurentPoly(1);
    for (std::size_t i = j; i-- > 0;) {
      LaurentPoly acc;
      for (std::size_t k = i + 1; k <= j; ++k) acc += at(i, k) * x.at(k, j);
      x.at(i, j) = -acc;
    }
  }
  return x;
}

MultMatrix MultMatrix::inverse_unipotent_at_zero() const {
  const std::size_t n = dim();
  // Constant terms must form the identity.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Coeff c0 = at(i, j).coeff(0);
      if ((i == j && c0 != 1) || (i != j && c0 != 0) ||
          (!at(i, j).is_zero() && at(i, j).min_exp() < 0))
        fail(Errc::NonInvertible, "matrix is not unipotent at v=0");
    }

  int maxdeg = 0;
  for (const auto& p : m_)
    if (!p.is_zero()) maxdeg = std::max(maxdeg, p.max_exp());

  // N := M - I has strictly positive minimal exponents, so the geometric
  // series for (I+N)^{-1} stabilizes degree by degree.  Truncate, then
  // validate the candidate exactly; widen the window if validation fails.
  for (int bound = maxdeg + 2;; bound *= 2) {
    MultMatrix nmat(g_, index_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        nmat.at(i, j) = at(i, j);
        if (i == j) nmat.at(i, j) -= LaurentPoly(1);
      }
    MultMatrix x(g_, index_);
    MultMatrix term(g_, index_);
    for (std::size_t i = 0; i < n; ++i) {
      x.at(i, i) = LaurentPoly(1);
      term.at(i, i) = LaurentPoly(1);
    }
    int sign = -1;
    for (int k = 1; k <= bound; ++k) {
      term = term.times(nmat);
      bool all_zero = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          term.at(i, j) = term.at(i, j).truncate_above(bound);
          if (!term.at(i, j).is_zero()) all_zero = false;
        }
      if (all_zero) break;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (sign > 0)
            x.at(i, j) += term.at(i, j);
          else
            x.at(i, j) -= term.at(i, j);
        }
      sign = -sign;
    }
    if (times(x).is_identity()) return x;
    if (bound > 64 * (maxdeg + 1))
      fail(Errc::NonInvertible, "geometric-series inversion failed to validate");
  }
}

nlohmann::json MultMatrix::to_json() const {
  nlohmann::json j;
  j["index"] = nlohmann::json::array();
  for (auto x : index_) j["index"].push_back(g_->word_str(x));
  j["rows"] = nlohmann::json::array();
  for (std::size_t i = 0; i < dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t jj = 0; jj < dim(); ++jj) {
      nlohmann::json entry = nlohmann::json::array();
      for (auto [e, c] : at(i, jj).pairs()) entry.push_back({e, c});
      row.push_back(entry);
    }
    j["rows"].push_back(row);
  }
  return j;
}

std::string MultMatrix::to_csv(std::string_view var) const {
  std::ostringstream out;
  out << "index";
  for (auto x : index_) out << ",\"" << g_->word_str(x) << '"';
  out << '\n';
  for (std::size_t i = 0; i < dim(); ++i) {
    out << '"' << g_->word_str(index_[i]) << '"';
    for (std::size_t j = 0; j < dim(); ++j) out << ',' << at(i, j).str(var);
    out << '\n';
  }
  return out.str();
}

std::string MultMatrix::to_table(std::string_view var) const {
  const std::size_t n = dim();
  std::vector<std::string> labels(n);
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  std::size_t lw = 0;
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = g_->word_str(index_[i]);
    if (labels[i].empty()) labels[i] = "e";
    lw = std::max(lw, labels[i].size());
  }
  std::vector<std::size_t> cw(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    cw[j] = labels[j].size();
    for (std::size_t i = 0; i < n; ++i) {
      cells[i][j] = at(i, j).str(var);
      cw[j] = std::max(cw[j], cells[i][j].size());
    }
  }
  std::ostringstream out;
  out << std::string(lw, ' ');
  for (std::size_t j = 0; j < n; ++j)
    out << "  " << labels[j] << std::string(cw[j] - labels[j].size(), ' ');
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out << labels[i] << std::string(lw - labels[i].size(), ' ');
    for (std::size_t j = 0; j < n; ++j)
      out << "  " << cells[i][j] << std::string(cw[j] - cells[i][j].size(), ' ');
    out << '\n';
  }
  return out.str();
}

}  // namespace okit
