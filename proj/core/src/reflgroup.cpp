#include "symsing/reflgroup.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace symsing {

namespace {

std::string matrix_key(const Matrix& m) {
  std::ostringstream os;
  for (const auto& row : m) {
    for (const auto& e : row) os << e.to_string() << ';';
    os << '|';
  }
  return os.str();
}

}  // namespace

GroupTable GroupTable::generate(
    const std::vector<std::pair<std::string, Matrix>>& generators,
    size_t max_order) {
  if (generators.empty()) throw std::runtime_error("GroupTable: no generators");
  const size_t n = generators[0].second.size();
  for (const auto& [name, m] : generators) {
    if (m.size() != n || m[0].size() != n)
      throw std::runtime_error("GroupTable: generator shape mismatch");
    if (det(m).is_zero())
      throw std::runtime_error("GroupTable: singular generator " + name);
  }

  GroupTable g;
  std::unordered_map<std::string, size_t> index;
  auto add = [&](Matrix m, std::string w) -> size_t {
    std::string key = matrix_key(m);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (g.elems_.size() >= max_order)
      throw std::runtime_error("GroupTable: closure exceeds max_order");
    g.elems_.push_back(std::move(m));
    g.words_.push_back(std::move(w));
    index.emplace(std::move(key), g.elems_.size() - 1);
    return g.elems_.size() - 1;
  };

  add(identity_matrix(n), "e");
  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    size_t k = queue.front();
    queue.pop_front();
    for (const auto& [name, m] : generators) {
      Matrix prod = mat_mul(g.elems_[k], m);
      size_t before = g.elems_.size();
      size_t idx = add(std::move(prod), g.words_[k] == "e" ? name
                                                           : g.words_[k] + name);
      if (idx == before) queue.push_back(idx);
    }
  }

  const size_t order = g.elems_.size();
  g.id_ = 0;
  g.prod_.assign(order, std::vector<size_t>(order));
  for (size_t i = 0; i < order; ++i)
    for (size_t j = 0; j < order; ++j) {
      auto it = index.find(matrix_key(mat_mul(g.elems_[i], g.elems_[j])));
      if (it == index.end())
        throw std::runtime_error("GroupTable: set not closed under product");
      g.prod_[i][j] = it->second;
    }
  g.inv_.assign(order, 0);
  for (size_t i = 0; i < order; ++i) {
    bool found = false;
    for (size_t j = 0; j < order; ++j)
      if (g.prod_[i][j] == g.id_) {
        g.inv_[i] = j;
        found = true;
        break;
      }
    if (!found) throw std::runtime_error("GroupTable: element without inverse");
  }
  return g;
}

bool GroupTable::contains(const Matrix& m) const {
  for (const auto& e : elems_)
    if (mat_eq(e, m)) return true;
  return false;
}

size_t GroupTable::find(const Matrix& m) const {
  for (size_t i = 0; i < elems_.size(); ++i)
    if (mat_eq(elems_[i], m)) return i;
  throw std::runtime_error("GroupTable: matrix not in group");
}

size_t GroupTable::element_order(size_t i) const {
  size_t k = i, ord = 1;
  while (k != id_) {
    k = prod_[k][i];
    ++ord;
    if (ord > order()) throw std::logic_error("GroupTable: order overflow");
  }
  return ord;
}

std::vector<std::vector<size_t>> GroupTable::conjugacy_classes() const {
  std::vector<bool> seen(order(), false);
  std::vector<std::vector<size_t>> classes;
  for (size_t i = 0; i < order(); ++i) {
    if (seen[i]) continue;
    std::set<size_t> cls;
    for (size_t h = 0; h < order(); ++h)
      cls.insert(prod_[prod_[h][i]][inv_[h]]);
    std::vector<size_t> v(cls.begin(), cls.end());
    for (size_t k : v) seen[k] = true;
    classes.push_back(std::move(v));
  }
  return classes;
}

Matrix cotangent_lift(const Matrix& m) {
  const size_t n = m.size();
  auto minv = inverse(m);
  if (!minv) throw std::runtime_error("cotangent_lift: singular matrix");
  Matrix dual = transpose(*minv);
  Matrix out(2 * n, std::vector<Cyclo>(2 * n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      out[i][j] = m[i][j];
      out[n + i][n + j] = dual[i][j];
    }
  // Symplectic form J pairing x_i with x_{n+i}: check out^T J out == J.
  Matrix jj(2 * n, std::vector<Cyclo>(2 * n));
  for (size_t i = 0; i < n; ++i) {
    jj[i][n + i] = Cyclo(1);
    jj[n + i][i] = Cyclo(-1);
  }
  if (!mat_eq(mat_mul(transpose(out), mat_mul(jj, out)), jj))
    throw std::logic_error("cotangent_lift: symplectic form not preserved");
  return out;
}

std::vector<Matrix> cotangent_lifts(const std::vector<Matrix>& ms) {
  std::vector<Matrix> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(cotangent_lift(m));
  return out;
}

Polynomial apply_linear(const Polynomial& p, const Matrix& m) {
  if (p.is_zero()) return p;
  Ring r{p.vars(), p.ord()};
  if (m.size() != r.nvars() || m[0].size() != r.nvars())
    throw std::runtime_error("apply_linear: matrix size != variable count");
  std::vector<Polynomial> images;
  images.reserve(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    Polynomial img = r.zero();
    for (size_t j = 0; j < m.size(); ++j)
      if (!m[i][j].is_zero()) img += r.var(j) * m[i][j];
    images.push_back(std::move(img));
  }
  return p.substitute(r, images);
}

Matrix dual_matrix(const Matrix& m) {
  auto minv = inverse(m);
  if (!minv) throw std::runtime_error("dual_matrix: singular matrix");
  return transpose(*minv);
}

Polynomial dual_action(const Polynomial& p, const Matrix& m) {
  return apply_linear(p, dual_matrix(m));
}

bool is_invariant(const Polynomial& p, const GroupTable& g) {
  for (const auto& m : g.elements())
    if (dual_action(p, m) != p) return false;
  return true;
}

std::vector<size_t> rank_two_motion_indices(const std::vector<Matrix>& mats) {
  std::vector<size_t> out;
  for (size_t k = 0; k < mats.size(); ++k) {
    Matrix diff = mat_sub(mats[k], identity_matrix(mats[k].size()));
    if (rank(diff) == 2) out.push_back(k);
  }
  return out;
}

RatFun molien_series(const std::vector<Matrix>& mats) {
  if (mats.empty()) throw std::runtime_error("molien_series: empty set");
  RatFun sum;
  for (const auto& m : mats) sum += RatFun(UniPoly(1), det_one_minus_t(m));
  RatFun scale(UniPoly(Cyclo(Rational(1, static_cast<long>(mats.size())))));
  return sum * scale;
}

}  // namespace symsing
