#include "lambda/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lb {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m{n, std::vector<long>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c{a.n, std::vector<long>(a.n * a.n, 0)};
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t k = 0; k < a.n; ++k) {
      const long aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Root apply(const IntMatrix& m, const Root& v) {
  Root out(m.n, 0);
  for (std::size_t i = 0; i < m.n; ++i) {
    long s = 0;
    for (std::size_t j = 0; j < m.n; ++j) s += m(i, j) * v[j];
    out[i] = static_cast<int>(s);
  }
  return out;
}

RootType parse_root_type(const std::string& letter) {
  if (letter == "A") return RootType::A;
  if (letter == "B") return RootType::B;
  if (letter == "C") return RootType::C;
  if (letter == "D") return RootType::D;
  if (letter == "G") return RootType::G;
  throw std::invalid_argument("unsupported root system type '" + letter + "'");
}

std::string to_string(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::G: return "G";
  }
  return "?";
}

RootSystem::RootSystem(RootType type, std::size_t rank) : type_(type), rank_(rank) {
  bool ok = false;
  switch (type) {
    case RootType::A: ok = rank >= 1 && rank <= 4; break;
    case RootType::B:
    case RootType::C: ok = rank >= 2 && rank <= 4; break;
    case RootType::D: ok = rank >= 3 && rank <= 4; break;
    case RootType::G: ok = rank == 2; break;
  }
  if (!ok) throw std::invalid_argument("unsupported root system " + to_string(type) + std::to_string(rank));
  build_cartan();
  build_roots();
  build_coroots();
  build_group();
}

std::string RootSystem::label() const { return to_string(type_) + std::to_string(rank_); }

void RootSystem::build_cartan() {
  const std::size_t n = rank_;
  cartan_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) cartan_[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) { cartan_[i][j] = cartan_[j][i] = -1; };
  switch (type_) {
    case RootType::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case RootType::B:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      cartan_[n - 2][n - 1] = -2;  // α_n short
      break;
    case RootType::C:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      cartan_[n - 1][n - 2] = -2;  // α_n long
      break;
    case RootType::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case RootType::G:
      cartan_[0][1] = -1;
      cartan_[1][0] = -3;  // α_1 short, α_2 long
      break;
  }
}

void RootSystem::build_roots() {
  const std::size_t n = rank_;
  std::set<Root> seen;
  std::deque<Root> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Root e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Root beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int p = 0;
      for (std::size_t j = 0; j < n; ++j) p += beta[j] * cartan_[j][i];
      Root image = beta;
      image[i] -= p;
      if (seen.insert(image).second) queue.push_back(image);
    }
  }
  std::vector<Root> positive;
  for (const auto& r : seen) {
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) positive.push_back(r);
  }
  std::sort(positive.begin(), positive.end(), [](const Root& a, const Root& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (positive.size() * 2 != seen.size()) throw std::logic_error("root system is not symmetric");
  roots_ = positive;
  for (const auto& r : positive) {
    Root neg = r;
    for (auto& c : neg) c = -c;
    roots_.push_back(neg);
  }
  for (std::size_t i = 0; i < roots_.size(); ++i) root_lookup_[roots_[i]] = i;
}

void RootSystem::build_coroots() {
  const std::size_t n = rank_;
  // Symmetrizer d_i = (α_i, α_i)/2 from A_ij d_j = A_ji d_i.
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const auto i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || cartan_[i][j] == 0 || d[j] != 0) continue;
      d[j] = Rational(cartan_[j][i]) * d[i] / Rational(cartan_[i][j]);
      queue.push_back(j);
    }
  }
  auto form = [&](const std::vector<Rational>& x, const Root& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += x[i] * y[j] * cartan_[i][j] * d[j];
    return s;
  };
  functionals_.clear();
  coroots_.clear();
  for (const auto& beta : roots_) {
    std::vector<Rational> bq(beta.begin(), beta.end());
    const Rational norm = form(bq, beta);
    std::vector<int> functional(n), expansion(n);
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Rational> ek(n, Rational(0));
      ek[k] = 1;
      Rational v = 2 * form(ek, beta) / norm;
      if (v.get_den() != 1) throw std::logic_error("non-integral Cartan pairing");
      functional[k] = static_cast<int>(v.get_num().get_si());
      Rational c = Rational(beta[k]) * d[k] * 2 / norm;
      if (c.get_den() != 1) throw std::logic_error("non-integral coroot coefficient");
      expansion[k] = static_cast<int>(c.get_num().get_si());
    }
    functionals_.push_back(std::move(functional));
    coroots_.push_back(std::move(expansion));
  }
  // Fundamental weights: solve Aᵀ x = e_i by Gauss-Jordan over ℚ.
  weights_.assign(n, std::vector<Rational>(n, Rational(0)));
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = cartan_[c][r];
    aug[r][n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (aug[pivot][col] == 0) ++pivot;
    std::swap(aug[pivot], aug[col]);
    const Rational inv = 1 / aug[col][col];
    for (auto& v : aug[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const Rational f = aug[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) weights_[i][k] = aug[k][n + i];
}

void RootSystem::build_group() {
  const std::size_t n = rank_;
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= cartan_[j][i];
    gens.push_back(s);
  }
  group_.push_back({IntMatrix::identity(n), {}});
  group_lookup_[group_[0].matrix] = 0;
  for (std::size_t head = 0; head < group_.size(); ++head) {
    for (std::size_t i = 0; i < n; ++i) {
      IntMatrix m = group_[head].matrix * gens[i];
      if (group_lookup_.count(m)) continue;
      auto word = group_[head].word;
      word.push_back(i);
      group_lookup_[m] = group_.size();
      group_.push_back({std::move(m), std::move(word)});
    }
  }
  const std::size_t size = group_.size();
  simple_reflections_.resize(n);
  for (std::size_t i = 0; i < n; ++i) simple_reflections_[i] = group_lookup_.at(gens[i]);
  product_.assign(size, std::vector<std::size_t>(size));
  inverse_.assign(size, 0);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      product_[a][b] = group_lookup_.at(group_[a].matrix * group_[b].matrix);
      if (product_[a][b] == 0) inverse_[a] = b;
    }
  action_.assign(size, std::vector<std::size_t>(roots_.size()));
  for (std::size_t w = 0; w < size; ++w)
    for (std::size_t r = 0; r < roots_.size(); ++r) {
      const auto img = root_index(lb::apply(group_[w].matrix, roots_[r]));
      if (!img) throw std::logic_error("Weyl element does not permute the roots");
      action_[w][r] = *img;
    }
  longest_ = 0;
  for (std::size_t w = 0; w < size; ++w)
    if (group_[w].word.size() > group_[longest_].word.size()) longest_ = w;
  opposition_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto img = action_[longest_][simple_root_index(i)];
    opposition_[i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (img == negative(simple_root_index(j))) opposition_[i] = j;
  }
  parabolic_.resize(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < parabolic_.size(); ++mask) {
    std::vector<std::size_t> members{0};
    std::set<std::size_t> seen{0};
    for (std::size_t head = 0; head < members.size(); ++head)
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask & (std::uint32_t{1} << i))) continue;
        const auto next = product_[members[head]][simple_reflections_[i]];
        if (seen.insert(next).second) members.push_back(next);
      }
    parabolic_[mask].assign(seen.begin(), seen.end());
  }
  reflections_.resize(roots_.size());
  for (std::size_t r = 0; r < roots_.size(); ++r) {
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) -= static_cast<long>(functionals_[r][j]) * roots_[r][k];
    reflections_[r] = group_lookup_.at(m);
  }
}

std::optional<std::size_t> RootSystem::root_index(const Root& r) const {
  const auto it = root_lookup_.find(r);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::simple_root_index(std::size_t i) const {
  Root e(rank_, 0);
  e.at(i) = 1;
  return root_lookup_.at(e);
}

std::size_t RootSystem::negative(std::size_t root_index) const {
  const std::size_t p = positive_count();
  return root_index < p ? root_index + p : root_index - p;
}

Rational RootSystem::pairing(const std::vector<Rational>& x, std::size_t root_index) const {
  Rational s = 0;
  const auto& f = functionals_.at(root_index);
  for (std::size_t j = 0; j < rank_; ++j) s += x[j] * f[j];
  return s;
}

std::optional<std::size_t> RootSystem::index_of(const IntMatrix& m) const {
  const auto it = group_lookup_.find(m);
  if (it == group_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::element_from_word(const std::vector<std::size_t>& word) const {
  std::size_t w = 0;
  for (const auto i : word) {
    if (i >= rank_) throw std::invalid_argument("simple reflection index out of range");
    w = product_[w][simple_reflections_[i]];
  }
  return w;
}

std::size_t RootSystem::reflection(std::size_t root_index) const { return reflections_.at(root_index); }

std::size_t RootSystem::act(std::size_t w, std::size_t root_index) const { return action_[w][root_index]; }

bool is_positive_after(const RootSystem& rs, std::size_t w, std::size_t root_index) {
  return rs.is_positive(rs.act(rs.inverse(w), root_index));
}

}  // namespace lb
