#include <stdexcept>

#include "iwahori/finite_tits.hpp"

namespace iwahori {

namespace {

// exponent vector of the model cocharacter e_i on the K diagonal slots
IVec model_e(TypeLabel t, int rank, int i) {
  int K = 0;
  switch (t) {
    case TypeLabel::A: K = rank + 1; break;
    case TypeLabel::B: K = 2 * rank + 1; break;
    case TypeLabel::C:
    case TypeLabel::D: K = 2 * rank; break;
    default:
      throw std::domain_error("signed_matrix: unsupported type");
  }
  IVec v(K, 0);
  if (t == TypeLabel::A) {
    v[i] = 1;
  } else {
    v[i] = 1;
    v[K - 1 - i] = -1;
  }
  return v;
}

IVec model_coroot(TypeLabel t, int rank, int i) {
  // alpha_i^vee in the model coordinates (0-indexed node i)
  auto e = [&](int k) { return model_e(t, rank, k); };
  auto add = [](IVec a, const IVec& b, long long f) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += f * b[k];
    return a;
  };
  switch (t) {
    case TypeLabel::A:
      return add(e(i), e(i + 1), -1);
    case TypeLabel::B:
      if (i < rank - 1) return add(e(i), e(i + 1), -1);
      return add(e(rank - 1), e(rank - 1), 1);  // 2 e_n
    case TypeLabel::C:
      if (i < rank - 1) return add(e(i), e(i + 1), -1);
      return e(rank - 1);
    case TypeLabel::D:
      if (i < rank - 1) return add(e(i), e(i + 1), -1);
      return add(e(rank - 2), e(rank - 1), 1);  // e_{n-1} + e_n
    default:
      throw std::domain_error("signed_matrix: unsupported type");
  }
}

void put_block(IMat& m, int a, int b) {
  // [[0,1],[-1,0]] on slots (a, b)
  m(a, a) = 0;
  m(b, b) = 0;
  m(a, b) = 1;
  m(b, a) = -1;
}

IMat generator_matrix(TypeLabel t, int rank, int i, int K) {
  IMat m = IMat::identity(K);
  switch (t) {
    case TypeLabel::A:
      put_block(m, i, i + 1);
      break;
    case TypeLabel::B:
      if (i < rank - 1) {
        put_block(m, i, i + 1);
        put_block(m, K - 2 - i, K - 1 - i);
      } else {
        int c = rank - 1;  // slots (c, c+1, c+2), middle slot is K's center
        m(c, c) = 0; m(c + 2, c + 2) = 0;
        m(c, c + 2) = 1; m(c + 2, c) = 1;
        m(c + 1, c + 1) = -1;
      }
      break;
    case TypeLabel::C:
      if (i < rank - 1) {
        put_block(m, i, i + 1);
        put_block(m, K - 2 - i, K - 1 - i);
      } else {
        put_block(m, rank - 1, rank);
      }
      break;
    case TypeLabel::D:
      if (i < rank - 1) {
        put_block(m, i, i + 1);
        put_block(m, K - 2 - i, K - 1 - i);
      } else {
        put_block(m, rank - 2, rank);
        put_block(m, rank - 1, rank + 1);
      }
      break;
    default:
      throw std::domain_error("signed_matrix: unsupported type");
  }
  return m;
}

}  // namespace

SignedMatrixModel::SignedMatrixModel(const RootDatum& rd) : rd_(rd) {
  if (rd.components().size() != 1 || rd.central_rank() != 0)
    throw std::domain_error(
        "signed_matrix: single semisimple component required");
  TypeLabel t = rd.components()[0].type;
  int rank = rd.components()[0].rank;
  if (t == TypeLabel::E || t == TypeLabel::F || t == TypeLabel::G)
    throw std::domain_error("signed_matrix: unsupported type " +
                            std::string(1, static_cast<char>(t)));
  std::size_t K = model_coroot(t, rank, 0).size();
  size_ = K;
  for (int i = 0; i < rank; ++i)
    gens_.push_back(generator_matrix(t, rank, i, static_cast<int>(K)));

  // lattice basis row -> diagonal exponents; must be integral, i.e. the
  // cocharacter lattice embeds into the model lattice
  exponents_ = IMat(rd.dim(), K);
  for (int j = 0; j < rd.dim(); ++j) {
    IVec ej(rd.dim(), 0);
    ej[j] = 1;
    RVec amb = rd.to_ambient(ej);
    RVec exps(K, Rat(0));
    for (int i = 0; i < rank; ++i) {
      IVec mc = model_coroot(t, rank, i);
      for (std::size_t k = 0; k < K; ++k) exps[k] += amb[i] * Rat(mc[k]);
    }
    for (std::size_t k = 0; k < K; ++k) {
      if (!exps[k].is_integer())
        throw std::domain_error(
            "signed_matrix: lattice does not embed in the model lattice");
      exponents_(j, k) = exps[k].to_int();
    }
  }

  // the embedding must stay faithful mod 2, or the diagonal realization of
  // X/2X collapses (e.g. Spin_8 in the SO_8 model)
  {
    F2Span span;
    unsigned rank = 0;
    for (int j = 0; j < rd.dim(); ++j)
      if (span.add(F2Vec::from_ivec(exponents_.row(j)))) ++rank;
    if (rank != static_cast<unsigned>(rd.dim()))
      throw std::domain_error(
          "signed_matrix: lattice does not embed mod-2-faithfully in the "
          "model lattice");
  }
}

IMat SignedMatrixModel::matrix(const TitsFinElt& x) const {
  IMat m = IMat::identity(size_);
  for (std::size_t k = 0; k < size_; ++k) {
    long long e = 0;
    for (int j = 0; j < rd_.dim(); ++j)
      if (x.eps.get(j)) e += exponents_(j, k);
    if (e % 2 != 0) m(k, k) = -1;
  }
  for (int i : x.w.word()) m = m * gens_[i];
  return m;
}

}  // namespace iwahori
