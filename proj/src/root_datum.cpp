#include "iwahori/root_datum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace iwahori {

namespace {

void fill_block(IMat& c, int off, TypeLabel t, int rank) {
  auto at = [&](int i, int j) -> long long& { return c(off + i, off + j); };
  for (int i = 0; i < rank; ++i) at(i, i) = 2;
  auto chain = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
  switch (t) {
    case TypeLabel::A:
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      break;
    case TypeLabel::B:
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      at(rank - 1, rank - 2) = -2;  // <alpha_{n-1}, alpha_n^vee> = -2
      break;
    case TypeLabel::C:
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      at(rank - 2, rank - 1) = -2;  // <alpha_n, alpha_{n-1}^vee> = -2
      break;
    case TypeLabel::D:
      for (int i = 0; i + 2 < rank; ++i) chain(i, i + 1);
      chain(rank - 3, rank - 1);
      break;
    case TypeLabel::E:
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4.
      chain(0, 2);
      chain(1, 3);
      for (int i = 2; i + 1 < rank; ++i) chain(i, i + 1);
      break;
    case TypeLabel::F:
      chain(0, 1); chain(1, 2); chain(2, 3);
      at(2, 1) = -2;  // <alpha_2, alpha_3^vee> = -2
      break;
    case TypeLabel::G:
      at(0, 1) = -3;  // <alpha_2, alpha_1^vee> = -3 (alpha_1 short)
      at(1, 0) = -1;
      break;
  }
}

void check_type_rank(TypeLabel t, int rank) {
  if (rank <= 0) throw std::invalid_argument("root datum: nonpositive rank");
  bool ok = true;
  switch (t) {
    case TypeLabel::A: ok = rank >= 1; break;
    case TypeLabel::B: ok = rank >= 2; break;
    case TypeLabel::C: ok = rank >= 2; break;
    case TypeLabel::D: ok = rank >= 3; break;
    case TypeLabel::E: ok = rank >= 6 && rank <= 8; break;
    case TypeLabel::F: ok = rank == 4; break;
    case TypeLabel::G: ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok)
    throw std::invalid_argument("root datum: invalid rank for type " +
                                std::string(1, static_cast<char>(t)));
}

}  // namespace

std::string WeylElt::str() const {
  if (word_.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (k) s += "*";
    s += "s" + std::to_string(word_[k] + 1);
  }
  return s;
}

RootDatum::RootDatum(std::vector<std::pair<TypeLabel, int>> comps,
                     RMat basis, int central_rank)
    : central_rank_(central_rank), basis_(std::move(basis)) {
  if (comps.empty()) throw std::invalid_argument("root datum: no components");
  if (central_rank < 0)
    throw std::invalid_argument("root datum: negative central rank");
  int off = 0;
  for (auto& [t, r] : comps) {
    check_type_rank(t, r);
    components_.push_back({t, r, off});
    off += r;
  }
  ss_rank_ = off;
  int d = dim();
  if (basis_.rows() != static_cast<std::size_t>(d) ||
      basis_.cols() != static_cast<std::size_t>(d))
    throw std::invalid_argument("root datum: lattice basis must be square of "
                                "size ss_rank + central_rank");
  build_cartan();
  build_lattice_data();
  close_roots();
  build_inner_product();
}

RootDatum RootDatum::simply_connected(
    std::vector<std::pair<TypeLabel, int>> comps) {
  int n = 0;
  for (auto& [t, r] : comps) { check_type_rank(t, r); n += r; }
  return RootDatum(std::move(comps), RMat::identity(n), 0);
}

RootDatum RootDatum::adjoint(std::vector<std::pair<TypeLabel, int>> comps) {
  // X_*(T_ad) = P^vee: rows of the inverse Cartan matrix.
  int n = 0;
  IMat cartan;
  {
    std::vector<Component> tmp;
    int off = 0;
    for (auto& [t, r] : comps) { check_type_rank(t, r); off += r; }
    n = off;
    cartan = IMat(n, n);
    off = 0;
    for (auto& [t, r] : comps) { fill_block(cartan, off, t, r); off += r; }
  }
  RMat cq(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cq(i, j) = Rat(cartan(i, j));
  return RootDatum(std::move(comps), rmat_inverse(cq), 0);
}

void RootDatum::build_cartan() {
  cartan_ = IMat(ss_rank_, ss_rank_);
  for (const auto& c : components_)
    fill_block(cartan_, c.node_offset, c.type, c.rank);
}

void RootDatum::build_lattice_data() {
  int d = dim();
  basis_inv_ = rmat_inverse(basis_);

  // pairing_(j,i) = <alpha_i, b_j>; b_j in ambient coords pairs through the
  // Cartan matrix (<alpha_i, alpha_k^vee> = cartan(k,i)), central coords
  // pair to zero.
  pairing_ = IMat(d, ss_rank_);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < ss_rank_; ++i) {
      Rat p(0);
      for (int k = 0; k < ss_rank_; ++k)
        p += basis_(j, k) * Rat(cartan_(k, i));
      if (!p.is_integer())
        throw std::invalid_argument(
            "root datum: lattice not contained in P^vee + central block");
      pairing_(j, i) = p.to_int();
    }

  // lattice coordinates of the simple coroots; requires Z Phi^vee <= X_*(T)
  simple_coroot_.resize(ss_rank_);
  for (int i = 0; i < ss_rank_; ++i) {
    RVec amb(d, Rat(0));
    amb[i] = Rat(1);
    auto c = from_ambient(amb);
    if (!c)
      throw std::invalid_argument(
          "root datum: lattice does not contain the coroot lattice");
    simple_coroot_[i] = *c;
  }

  // s_i on lattice coordinates: c |-> c - <alpha_i, c> q_i
  refl_lattice_.resize(ss_rank_);
  for (int i = 0; i < ss_rank_; ++i) {
    IMat m = IMat::identity(d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        m(j, k) -= pairing_(j, i) * simple_coroot_[i][k];
    refl_lattice_[i] = m;
  }

  // regular dominant coweight (sum of fundamental coweights), lattice coords
  RMat cq(ss_rank_, ss_rank_);
  for (int i = 0; i < ss_rank_; ++i)
    for (int j = 0; j < ss_rank_; ++j) cq(i, j) = Rat(cartan_(i, j));
  RMat cinv = rmat_inverse(cq);
  RVec rho_amb(d, Rat(0));
  for (int i = 0; i < ss_rank_; ++i)
    for (int k = 0; k < ss_rank_; ++k) rho_amb[k] += cinv(i, k);
  rho_check_lattice_ = vec_mat(rho_amb, basis_inv_);

  identity_.word_.clear();
  identity_.action_ = IMat::identity(d);
}

void RootDatum::close_roots() {
  std::map<IVec, IVec> seen;  // root -> coroot (lattice coords)
  std::vector<IVec> frontier;
  for (int i = 0; i < ss_rank_; ++i) {
    IVec r(ss_rank_, 0);
    r[i] = 1;
    seen[r] = simple_coroot_[i];
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<IVec> next;
    for (const auto& r : frontier) {
      const IVec& cr = seen[r];
      for (int j = 0; j < ss_rank_; ++j) {
        long long p = 0;
        for (int k = 0; k < ss_rank_; ++k) p += r[k] * cartan_(j, k);
        IVec r2 = r;
        r2[j] -= p;
        if (seen.count(r2)) continue;
        IVec cr2 = vec_mat(cr, refl_lattice_[j]);
        seen[r2] = cr2;
        next.push_back(r2);
      }
    }
    frontier = std::move(next);
  }
  simple_pos_index_.assign(ss_rank_, -1);
  for (auto& [r, cr] : seen) {
    if (!root_is_positive(r)) continue;
    PosRoot pr;
    pr.root = r;
    pr.coroot = cr;
    pr.component = -1;
    for (int k = 0; k < ss_rank_; ++k)
      if (r[k] != 0) { pr.component = component_of_node(k); break; }
    pos_roots_.push_back(std::move(pr));
  }
  std::sort(pos_roots_.begin(), pos_roots_.end(),
            [](const PosRoot& a, const PosRoot& b) { return a.root < b.root; });
  for (std::size_t idx = 0; idx < pos_roots_.size(); ++idx) {
    const IVec& r = pos_roots_[idx].root;
    long long ht = 0;
    int nz = -1, cnt = 0;
    for (int k = 0; k < ss_rank_; ++k) {
      ht += r[k];
      if (r[k] != 0) { nz = k; ++cnt; }
    }
    if (ht == 1 && cnt == 1) simple_pos_index_[nz] = static_cast<int>(idx);
  }
  highest_.resize(components_.size());
  highest_coroot_.resize(components_.size());
  for (std::size_t c = 0; c < components_.size(); ++c) {
    long long best = -1;
    for (const auto& pr : pos_roots_) {
      if (pr.component != static_cast<int>(c)) continue;
      long long ht = 0;
      for (auto x : pr.root) ht += x;
      if (ht > best) {
        best = ht;
        highest_[c] = pr.root;
        highest_coroot_[c] = pr.coroot;
      }
    }
  }
  for (const auto& pr : pos_roots_) s2_.add(F2Vec::from_ivec(pr.coroot));
}

void RootDatum::build_inner_product() {
  root_len2_.assign(ss_rank_, Rat(0));
  for (const auto& comp : components_) {
    int off = comp.node_offset, r = comp.rank;
    std::vector<Rat> len(r, Rat(0));
    len[0] = Rat(1);
    // propagate: a_ij * L_i = a_ji * L_j
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          if (i == j || cartan_(off + i, off + j) == 0) continue;
          if (!len[i].is_zero() && len[j].is_zero()) {
            len[j] = len[i] * Rat(cartan_(off + i, off + j)) /
                     Rat(cartan_(off + j, off + i));
            changed = true;
          }
        }
    }
    Rat mx = len[0];
    for (const Rat& l : len) if (mx < l) mx = l;
    for (int i = 0; i < r; ++i)
      root_len2_[off + i] = len[i] * Rat(2) / mx;
  }
}

int RootDatum::component_of_node(int i) const {
  for (std::size_t c = 0; c < components_.size(); ++c)
    if (i >= components_[c].node_offset &&
        i < components_[c].node_offset + components_[c].rank)
      return static_cast<int>(c);
  throw std::out_of_range("component_of_node");
}

long long RootDatum::weyl_order() const {
  auto fact = [](long long n) {
    long long f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
  };
  long long total = 1;
  for (const auto& c : components_) {
    long long n = c.rank, o = 1;
    switch (c.type) {
      case TypeLabel::A: o = fact(n + 1); break;
      case TypeLabel::B:
      case TypeLabel::C: o = fact(n) << n; break;
      case TypeLabel::D: o = fact(n) << (n - 1); break;
      case TypeLabel::E: o = n == 6 ? 51840 : (n == 7 ? 2903040LL : 696729600LL); break;
      case TypeLabel::F: o = 1152; break;
      case TypeLabel::G: o = 12; break;
    }
    total *= o;
  }
  return total;
}

long long RootDatum::pair_simple(int i, const IVec& x) const {
  long long p = 0;
  for (int j = 0; j < dim(); ++j) p += x[j] * pairing_(j, i);
  return p;
}

Rat RootDatum::pair_simple(int i, const RVec& x) const {
  Rat p(0);
  for (int j = 0; j < dim(); ++j) p += x[j] * Rat(pairing_(j, i));
  return p;
}

long long RootDatum::pair_root(const IVec& b, const IVec& x) const {
  long long p = 0;
  for (int i = 0; i < ss_rank_; ++i)
    if (b[i] != 0) p += b[i] * pair_simple(i, x);
  return p;
}

Rat RootDatum::pair_root(const IVec& b, const RVec& x) const {
  Rat p(0);
  for (int i = 0; i < ss_rank_; ++i)
    if (b[i] != 0) p += Rat(b[i]) * pair_simple(i, x);
  return p;
}

bool RootDatum::root_is_positive(const IVec& b) const {
  for (auto x : b) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

IVec RootDatum::coroot_of(const IVec& b) const {
  bool pos = root_is_positive(b);
  IVec key = pos ? b : ivec_neg(b);
  for (const auto& pr : pos_roots_)
    if (pr.root == key) return pos ? pr.coroot : ivec_neg(pr.coroot);
  throw std::invalid_argument("coroot_of: not a root");
}

WeylElt RootDatum::from_action(const IMat& m) const {
  WeylElt w;
  w.action_ = m;
  IMat cur = m;
  RVec v = vec_mat(rho_check_lattice_, cur);
  std::size_t guard = pos_roots_.size() + 1;
  for (;;) {
    int desc = -1;
    for (int i = 0; i < ss_rank_; ++i)
      if (pair_simple(i, v) < Rat(0)) { desc = i; break; }
    if (desc < 0) break;
    if (w.word_.size() > guard)
      throw std::logic_error("from_action: not a Weyl group element");
    w.word_.push_back(desc);
    cur = cur * refl_lattice_[desc];
    v = vec_mat(rho_check_lattice_, cur);
  }
  if (cur != IMat::identity(dim()))
    throw std::invalid_argument("from_action: matrix is not in W");
  return w;
}

WeylElt RootDatum::simple_reflection(int i) const {
  return normal_form({i});
}

WeylElt RootDatum::reflection(const IVec& root) const {
  IVec beta = coroot_of(root);
  int d = dim();
  IMat m = IMat::identity(d);
  for (int j = 0; j < d; ++j) {
    IVec ej(d, 0);
    ej[j] = 1;
    long long p = pair_root(root, ej);
    for (int k = 0; k < d; ++k) m(j, k) -= p * beta[k];
  }
  return from_action(m);
}

WeylElt RootDatum::normal_form(const std::vector<int>& word) const {
  IMat m = IMat::identity(dim());
  for (int i : word) {
    if (i < 0 || i >= ss_rank_)
      throw std::out_of_range("normal_form: bad generator index");
    m = refl_lattice_[i] * m;
  }
  return from_action(m);
}

WeylElt RootDatum::multiply(const WeylElt& a, const WeylElt& b) const {
  return from_action(b.action_ * a.action_);
}

WeylElt RootDatum::inverse(const WeylElt& a) const {
  IMat m = IMat::identity(dim());
  for (int i : a.word_) m = m * refl_lattice_[i];
  return from_action(m);
}

IVec RootDatum::act(const WeylElt& w, const IVec& v) const {
  return vec_mat(v, w.action_);
}

RVec RootDatum::act(const WeylElt& w, const RVec& v) const {
  return vec_mat(v, w.action_);
}

RVec RootDatum::act_ambient(const WeylElt& w, const RVec& v) const {
  RVec x = v;
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
    int i = *it;
    Rat p(0);
    for (int k = 0; k < ss_rank_; ++k) p += x[k] * Rat(cartan_(k, i));
    x[i] -= p;
  }
  return x;
}

IVec RootDatum::act_root(const WeylElt& w, const IVec& b) const {
  IVec r = b;
  for (auto it = w.word_.rbegin(); it != w.word_.rend(); ++it) {
    int j = *it;
    long long p = 0;
    for (int k = 0; k < ss_rank_; ++k) p += r[k] * cartan_(j, k);
    r[j] -= p;
  }
  return r;
}

F2Vec RootDatum::act_f2(const WeylElt& w, const F2Vec& e) const {
  IVec v(dim(), 0);
  for (int i = 0; i < dim(); ++i) v[i] = e.get(i) ? 1 : 0;
  return F2Vec::from_ivec(act(w, v));
}

WeylElt RootDatum::longest_element(const std::vector<int>& nodes) const {
  WeylElt w = identity_;
  for (;;) {
    int asc = -1;
    for (int i : nodes) {
      IVec ai(ss_rank_, 0);
      ai[i] = 1;
      if (root_is_positive(act_root(w, ai))) { asc = i; break; }
    }
    if (asc < 0) break;
    std::vector<int> word = w.word_;
    word.push_back(asc);
    w = normal_form(word);
  }
  return w;
}

int RootDatum::braid_order(int i, int j) const {
  if (i == j) return 1;
  switch (cartan_(i, j) * cartan_(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw std::logic_error("braid_order: bad Cartan product");
  }
}

std::vector<IVec> RootDatum::inversion_set(const WeylElt& w) const {
  std::vector<IVec> out;
  for (const auto& pr : pos_roots_)
    if (!root_is_positive(act_root(w, pr.root))) out.push_back(pr.root);
  return out;
}

std::vector<WeylElt> RootDatum::enumerate_weyl(std::size_t limit) const {
  std::set<std::vector<int>> seen;
  std::vector<WeylElt> out{identity_};
  seen.insert(identity_.word_);
  std::vector<WeylElt> frontier{identity_};
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (const auto& w : frontier)
      for (int i = 0; i < ss_rank_; ++i) {
        std::vector<int> word = w.word_;
        word.push_back(i);
        WeylElt w2 = normal_form(word);
        if (seen.insert(w2.word_).second) {
          if (out.size() >= limit)
            throw std::length_error("enumerate_weyl: limit exceeded");
          out.push_back(w2);
          next.push_back(w2);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeylElt RootDatum::y_paren(int i) const {
  const Component& c = components_[component_of_node(i)];
  std::vector<int> all, minus;
  for (int k = c.node_offset; k < c.node_offset + c.rank; ++k) {
    all.push_back(k);
    if (k != i) minus.push_back(k);
  }
  return multiply(longest_element(minus), longest_element(all));
}

bool RootDatum::minuscule(int i) const {
  int c = component_of_node(i);
  return highest_[c][i] == 1;
}

RVec RootDatum::fundamental_coweight(int i) const {
  RMat cq(ss_rank_, ss_rank_);
  for (int a = 0; a < ss_rank_; ++a)
    for (int b = 0; b < ss_rank_; ++b) cq(a, b) = Rat(cartan_(a, b));
  RMat cinv = rmat_inverse(cq);
  RVec amb(dim(), Rat(0));
  for (int k = 0; k < ss_rank_; ++k) amb[k] = cinv(i, k);
  return amb;
}

RVec RootDatum::to_ambient(const IVec& lattice) const {
  return vec_mat(to_rvec(lattice), basis_);
}

RVec RootDatum::to_ambient(const RVec& lattice) const {
  return vec_mat(lattice, basis_);
}

std::optional<IVec> RootDatum::from_ambient(const RVec& ambient) const {
  RVec c = vec_mat(ambient, basis_inv_);
  IVec out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_integer()) return std::nullopt;
    out[i] = c[i].num();
  }
  return out;
}

RVec RootDatum::from_ambient_q(const RVec& ambient) const {
  return vec_mat(ambient, basis_inv_);
}

Rat RootDatum::inner_root(const IVec& a, const IVec& b) const {
  // <alpha_i, alpha_j> = cartan(i,j) * len2_i / 2
  Rat s(0);
  for (int i = 0; i < ss_rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < ss_rank_; ++j) {
      if (b[j] == 0) continue;
      s += Rat(a[i]) * Rat(b[j]) * Rat(cartan_(i, j)) * root_len2_[i] / Rat(2);
    }
  }
  return s;
}

Rat RootDatum::inner_cochar(const RVec& x, const RVec& y) const {
  // <alpha_i^vee, alpha_j^vee> = 2 cartan(i,j) / len2_j ; central block
  // orthonormal and orthogonal to the semisimple block.
  Rat s(0);
  for (int i = 0; i < ss_rank_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < ss_rank_; ++j) {
      if (y[j].is_zero()) continue;
      s += x[i] * y[j] * Rat(2 * cartan_(i, j)) / root_len2_[j];
    }
  }
  for (int k = ss_rank_; k < dim(); ++k) s += x[k] * y[k];
  return s;
}

std::string RootDatum::describe_type() const {
  std::string s;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (c) s += "x";
    s += static_cast<char>(components_[c].type);
    s += std::to_string(components_[c].rank);
  }
  if (central_rank_ > 0) s += "+Z^" + std::to_string(central_rank_);
  return s;
}

}  // namespace iwahori
