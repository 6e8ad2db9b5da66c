#include "oracle.hpp"

namespace oracle {

namespace {

using compalg::CompatibleAlgebra;
using compalg::CompatibleBimodule;

// Raw structure constants in flat arrays with local index arithmetic.
struct Data {
  int da = 0, dm = 0;
  // mu[(s*da + i)*da + j] = coefficient of e_s in e_i * e_j
  std::vector<mpq_class> mu1, mu2;
  // l[(k*da + a)*dm + m] = coefficient of e_k in a . m
  std::vector<mpq_class> l1, l2;
  // r[(k*dm + m)*da + a] = coefficient of e_k in m . a
  std::vector<mpq_class> r1, r2;
};

mpq_class q(const compalg::Rational& r) { return mpq_class(r.str()); }

Data extract(const CompatibleAlgebra& a, const CompatibleBimodule& mod) {
  Data d;
  d.da = a.dim;
  d.dm = mod.dim_m;
  d.mu1.assign(static_cast<size_t>(d.da) * d.da * d.da, 0);
  d.mu2 = d.mu1;
  d.l1.assign(static_cast<size_t>(d.dm) * d.da * d.dm, 0);
  d.l2 = d.l1;
  d.r1.assign(static_cast<size_t>(d.dm) * d.dm * d.da, 0);
  d.r2 = d.r1;
  for (int s = 0; s < d.da; ++s)
    for (int i = 0; i < d.da; ++i)
      for (int j = 0; j < d.da; ++j) {
        d.mu1[(static_cast<size_t>(s) * d.da + i) * d.da + j] =
            q(a.mu1.at(s, {i, j}));
        d.mu2[(static_cast<size_t>(s) * d.da + i) * d.da + j] =
            q(a.mu2.at(s, {i, j}));
      }
  for (int k = 0; k < d.dm; ++k)
    for (int i = 0; i < d.da; ++i)
      for (int m = 0; m < d.dm; ++m) {
        d.l1[(static_cast<size_t>(k) * d.da + i) * d.dm + m] =
            q(mod.act1.l(k, i, m));
        d.l2[(static_cast<size_t>(k) * d.da + i) * d.dm + m] =
            q(mod.act2.l(k, i, m));
        d.r1[(static_cast<size_t>(k) * d.dm + m) * d.da + i] =
            q(mod.act1.r(k, m, i));
        d.r2[(static_cast<size_t>(k) * d.dm + m) * d.da + i] =
            q(mod.act2.r(k, m, i));
      }
  return d;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int tup(const std::vector<int>& t, int da) {
  int f = 0;
  for (int v : t) f = f * da + v;
  return f;
}

void decode(int flat, int da, std::vector<int>& t) {
  for (int p = static_cast<int>(t.size()) - 1; p >= 0; --p) {
    t[p] = flat % da;
    flat /= da;
  }
}

// Hochschild coboundary over Hom(A^n, M) built column by column from
// the indicator cochain at (out = o, inputs = mm):
// (delta f)(a_1..a_{n+1}) = a_1 f(a_2..) + sum (-1)^i f(.. a_i a_{i+1} ..)
//                           + (-1)^{n+1} f(a_1..a_n) a_{n+1}
QMat hdelta(const Data& d, int which, int n) {
  const std::vector<mpq_class>& mu = which == 1 ? d.mu1 : d.mu2;
  const std::vector<mpq_class>& la = which == 1 ? d.l1 : d.l2;
  const std::vector<mpq_class>& ra = which == 1 ? d.r1 : d.r2;
  int tlow = ipow(d.da, n), thigh = ipow(d.da, n + 1);
  QMat m(static_cast<size_t>(d.dm) * thigh,
         std::vector<mpq_class>(static_cast<size_t>(d.dm) * tlow, 0));
  std::vector<int> t(n + 1, 0);
  for (int tf = 0; tf < thigh; ++tf) {
    decode(tf, d.da, t);
    std::vector<int> rest(t.begin() + 1, t.end());
    int restf = tup(rest, d.da);
    for (int o = 0; o < d.dm; ++o)
      for (int k = 0; k < d.dm; ++k) {
        const mpq_class& c =
            la[(static_cast<size_t>(k) * d.da + t[0]) * d.dm + o];
        if (c != 0) m[static_cast<size_t>(k) * thigh + tf]
                     [static_cast<size_t>(o) * tlow + restf] += c;
      }
    for (int i = 1; i <= n; ++i) {
      for (int s = 0; s < d.da; ++s) {
        const mpq_class& c =
            mu[(static_cast<size_t>(s) * d.da + t[i - 1]) * d.da + t[i]];
        if (c == 0) continue;
        std::vector<int> mm;
        for (int p = 0; p < i - 1; ++p) mm.push_back(t[p]);
        mm.push_back(s);
        for (int p = i + 1; p <= n; ++p) mm.push_back(t[p]);
        int mmf = tup(mm, d.da);
        mpq_class sc = (i % 2 == 0) ? c : -c;
        for (int o = 0; o < d.dm; ++o)
          m[static_cast<size_t>(o) * thigh + tf]
           [static_cast<size_t>(o) * tlow + mmf] += sc;
      }
    }
    std::vector<int> head(t.begin(), t.end() - 1);
    int headf = tup(head, d.da);
    bool neg = (n + 1) % 2 != 0;
    for (int o = 0; o < d.dm; ++o)
      for (int k = 0; k < d.dm; ++k) {
        const mpq_class& c =
            ra[(static_cast<size_t>(k) * d.dm + o) * d.da + t[n]];
        if (c != 0) m[static_cast<size_t>(k) * thigh + tf]
                     [static_cast<size_t>(o) * tlow + headf] += neg ? -c : c;
      }
  }
  return m;
}

// Compatible coboundary at degree n >= 1: (n+1) x n blocks, (j,j) = d1
// and (j,j-1) = d2.
QMat delta_c(const Data& d, int n) {
  QMat d1 = hdelta(d, 1, n), d2 = hdelta(d, 2, n);
  size_t br = d1.size(), bc = d1[0].size();
  QMat m((n + 1) * br, std::vector<mpq_class>(n * bc, 0));
  for (int blk = 0; blk <= n; ++blk)
    for (size_t r = 0; r < br; ++r)
      for (size_t c = 0; c < bc; ++c) {
        if (blk < n && d1[r][c] != 0) m[blk * br + r][blk * bc + c] += d1[r][c];
        if (blk > 0 && d2[r][c] != 0)
          m[blk * br + r][(blk - 1) * bc + c] += d2[r][c];
      }
  return m;
}

// Face-sum boundary over C_n = M (x) A^n, n >= 1: faces are the right
// action on a_1, the interior products, and the left action by a_n, with
// alternating signs.
QMat bdry(const Data& d, int which, int n) {
  const std::vector<mpq_class>& mu = which == 1 ? d.mu1 : d.mu2;
  const std::vector<mpq_class>& la = which == 1 ? d.l1 : d.l2;
  const std::vector<mpq_class>& ra = which == 1 ? d.r1 : d.r2;
  int tn = ipow(d.da, n), tlow = ipow(d.da, n - 1);
  QMat m(static_cast<size_t>(d.dm) * tlow,
         std::vector<mpq_class>(static_cast<size_t>(d.dm) * tn, 0));
  std::vector<int> t(n, 0);
  for (int tf = 0; tf < tn; ++tf) {
    decode(tf, d.da, t);
    for (int mi = 0; mi < d.dm; ++mi) {
      size_t col = static_cast<size_t>(mi) * tn + tf;
      std::vector<int> rest(t.begin() + 1, t.end());
      int rf = tup(rest, d.da);
      for (int k = 0; k < d.dm; ++k) {
        const mpq_class& c =
            ra[(static_cast<size_t>(k) * d.dm + mi) * d.da + t[0]];
        if (c != 0) m[static_cast<size_t>(k) * tlow + rf][col] += c;
      }
      for (int i = 1; i <= n - 1; ++i) {
        for (int s = 0; s < d.da; ++s) {
          const mpq_class& c =
              mu[(static_cast<size_t>(s) * d.da + t[i - 1]) * d.da + t[i]];
          if (c == 0) continue;
          std::vector<int> mm;
          for (int p = 0; p < i - 1; ++p) mm.push_back(t[p]);
          mm.push_back(s);
          for (int p = i + 1; p < n; ++p) mm.push_back(t[p]);
          int mmf = tup(mm, d.da);
          m[static_cast<size_t>(mi) * tlow + mmf][col] +=
              (i % 2 != 0) ? -c : c;
        }
      }
      std::vector<int> head(t.begin(), t.end() - 1);
      int hf = tup(head, d.da);
      for (int k = 0; k < d.dm; ++k) {
        const mpq_class& c =
            la[(static_cast<size_t>(k) * d.da + t[n - 1]) * d.dm + mi];
        if (c != 0)
          m[static_cast<size_t>(k) * tlow + hf][col] += (n % 2 != 0) ? -c : c;
      }
    }
  }
  return m;
}

// Compatible block boundary at level n >= 2: (n-1) x n blocks, (i,i) = b1
// and (i,i+1) = b2.
QMat compat_bdry(const Data& d, int n) {
  QMat b1 = bdry(d, 1, n), b2 = bdry(d, 2, n);
  size_t br = b1.size(), bc = b1[0].size();
  QMat m((n - 1) * br, std::vector<mpq_class>(n * bc, 0));
  for (int i = 0; i <= n - 2; ++i)
    for (size_t r = 0; r < br; ++r)
      for (size_t c = 0; c < bc; ++c) {
        if (b1[r][c] != 0) m[i * br + r][i * bc + c] += b1[r][c];
        if (b2[r][c] != 0) m[i * br + r][(i + 1) * bc + c] += b2[r][c];
      }
  return m;
}

QMat hcat(const QMat& a, const QMat& b) {
  QMat m = a;
  for (size_t r = 0; r < m.size(); ++r)
    m[r].insert(m[r].end(), b[r].begin(), b[r].end());
  return m;
}

QMat vcat(const QMat& a, const QMat& b) {
  QMat m = a;
  m.insert(m.end(), b.begin(), b.end());
  return m;
}

QMat subm(const QMat& a, const QMat& b) {
  QMat m = a;
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < m[r].size(); ++c) m[r][c] -= b[r][c];
  return m;
}

}  // namespace

int rank(QMat m) {
  if (m.empty() || m[0].empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int p = -1;
    for (int r = rk; r < rows; ++r)
      if (m[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[rk], m[p]);
    for (int r = 0; r < rows; ++r) {
      if (r == rk || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rk][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rk][cc];
    }
    ++rk;
  }
  return rk;
}

std::vector<int64_t> cohomology_dims(const CompatibleAlgebra& a,
                                     const CompatibleBimodule& mod,
                                     int n_max) {
  Data d = extract(a, mod);
  std::vector<int64_t> out;

  // Degree 0. C^0_c solves (a .1 m - m .1 a) = (a .2 m - m .2 a); the
  // kernel of delta on it additionally solves a .1 m - m .1 a = 0.
  QMat cond(static_cast<size_t>(d.da) * d.dm,
            std::vector<mpq_class>(d.dm, 0));
  QMat commute1 = cond;
  for (int i = 0; i < d.da; ++i)
    for (int k = 0; k < d.dm; ++k)
      for (int mm = 0; mm < d.dm; ++mm) {
        mpq_class c1 =
            d.l1[(static_cast<size_t>(k) * d.da + i) * d.dm + mm] -
            d.r1[(static_cast<size_t>(k) * d.dm + mm) * d.da + i];
        mpq_class c2 =
            d.l2[(static_cast<size_t>(k) * d.da + i) * d.dm + mm] -
            d.r2[(static_cast<size_t>(k) * d.dm + mm) * d.da + i];
        cond[static_cast<size_t>(i) * d.dm + k][mm] = c1 - c2;
        commute1[static_cast<size_t>(i) * d.dm + k][mm] = c1;
      }
  int rank_cond = rank(cond);
  int rank_stack = rank(vcat(cond, commute1));
  int64_t h0 = d.dm - rank_stack;
  out.push_back(h0);
  if (n_max == 0) return out;
  // rank of delta restricted to C^0_c
  int64_t rank_prev = (d.dm - rank_cond) - h0;

  for (int n = 1; n <= n_max; ++n) {
    QMat dn = delta_c(d, n);
    int64_t dom = static_cast<int64_t>(dn[0].size());
    int64_t rk = rank(dn);
    out.push_back(dom - rk - rank_prev);
    rank_prev = rk;
  }
  return out;
}

std::vector<int64_t> homology_dims(const CompatibleAlgebra& a,
                                   const CompatibleBimodule& mod, int n_max) {
  Data d = extract(a, mod);
  std::vector<int64_t> out;

  // Degree 0 quotient (C^c)_0 = C_0 / im(bd1 - bd2); boundaries from
  // degree 1 add im(bd1), so H_0 drops the rank of both together.
  QMat b11 = bdry(d, 1, 1);
  QMat diff1 = subm(b11, bdry(d, 2, 1));
  int rank_diff = rank(diff1);
  int rank_joint = rank(hcat(b11, diff1));
  out.push_back(d.dm - rank_joint);
  if (n_max == 0) return out;

  // Degree 1 cycles: kernel of the projected bd1, whose rank is
  // rank[bd1 | diff] - rank[diff].
  int64_t dim_c1 = static_cast<int64_t>(d.dm) * d.da;
  int64_t cycles = dim_c1 - (rank_joint - rank_diff);
  for (int n = 1; n <= n_max; ++n) {
    QMat next = compat_bdry(d, n + 1);
    int64_t rk_next = rank(next);
    out.push_back(cycles - rk_next);
    if (n + 1 <= n_max) {
      int64_t dom = static_cast<int64_t>(next[0].size());
      cycles = dom - rk_next;
    }
  }
  return out;
}

}  // namespace oracle
