#include <lts/cochain.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace lts {

// ---------------------------------------------------------------------------
// Cochain storage
// ---------------------------------------------------------------------------

namespace {

std::size_t pow_st(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

}  // namespace

Cochain::Cochain(int dim, int degree) : m_dim(dim), m_degree(degree) {
  if (dim < 1) throw InvalidInputError("cochain dimension must be >= 1");
  if (degree < 0) throw InvalidInputError("cochain degree must be >= 0");
  m_tuples = pow_st(dim, arity());
  m_c.resize(m_tuples * static_cast<std::size_t>(dim));
  m_nz.assign(m_tuples, 0);
}

std::size_t Cochain::tuple_index(const int* args) const {
  std::size_t ti = 0;
  for (int a = 0; a < arity(); ++a) {
    ti = ti * static_cast<std::size_t>(m_dim) + static_cast<std::size_t>(args[a]);
  }
  return ti;
}

void Cochain::unpack_tuple(std::size_t ti, int* args) const {
  for (int a = arity() - 1; a >= 0; --a) {
    args[a] = static_cast<int>(ti % static_cast<std::size_t>(m_dim));
    ti /= static_cast<std::size_t>(m_dim);
  }
}

void Cochain::set_value(const int* args, int out, const Rational& v) {
  std::size_t ti = tuple_index(args);
  m_c[ti * m_dim + out] = v;
  if (!lts::is_zero(v)) m_nz[ti] = 1;
}

void Cochain::set_values(const int* args, const Vec& v) {
  if (static_cast<int>(v.size()) != m_dim) {
    throw InvalidInputError("cochain value has wrong dimension");
  }
  std::size_t ti = tuple_index(args);
  bool nz = false;
  for (int o = 0; o < m_dim; ++o) {
    m_c[ti * m_dim + o] = v[o];
    nz = nz || !lts::is_zero(v[o]);
  }
  m_nz[ti] = nz ? 1 : 0;
}

void Cochain::refresh_zero_flags() {
  for (std::size_t ti = 0; ti < m_tuples; ++ti) {
    bool nz = false;
    for (int o = 0; o < m_dim && !nz; ++o) {
      nz = !lts::is_zero(m_c[ti * m_dim + o]);
    }
    m_nz[ti] = nz ? 1 : 0;
  }
}

bool Cochain::is_zero() const {
  for (std::size_t ti = 0; ti < m_tuples; ++ti) {
    if (!m_nz[ti]) continue;
    for (int o = 0; o < m_dim; ++o) {
      if (!lts::is_zero(m_c[ti * m_dim + o])) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> Cochain::first_nonzero_tuple() const {
  // Flat index order is lexicographic tuple order.
  for (std::size_t ti = 0; ti < m_tuples; ++ti) {
    if (!m_nz[ti]) continue;
    for (int o = 0; o < m_dim; ++o) {
      if (!lts::is_zero(m_c[ti * m_dim + o])) {
        std::vector<int> args(arity());
        unpack_tuple(ti, args.data());
        return args;
      }
    }
  }
  return std::nullopt;
}

Cochain Cochain::operator+(const Cochain& other) const {
  Cochain r = *this;
  r.add_scaled(other, 1);
  return r;
}

Cochain Cochain::operator-(const Cochain& other) const {
  Cochain r = *this;
  r.add_scaled(other, -1);
  return r;
}

Cochain Cochain::scaled(const Rational& s) const {
  Cochain r = *this;
  if (lts::is_zero(s)) {
    std::fill(r.m_c.begin(), r.m_c.end(), Rational(0));
    std::fill(r.m_nz.begin(), r.m_nz.end(), 0);
    return r;
  }
  for (std::size_t ti = 0; ti < m_tuples; ++ti) {
    if (!r.m_nz[ti]) continue;
    for (int o = 0; o < m_dim; ++o) r.m_c[ti * m_dim + o] *= s;
  }
  return r;
}

Cochain& Cochain::add_scaled(const Cochain& other, const Rational& s) {
  if (other.m_dim != m_dim || other.m_degree != m_degree) {
    throw InvalidInputError("cochain shape mismatch in addition");
  }
  if (lts::is_zero(s)) return *this;
  for (std::size_t ti = 0; ti < m_tuples; ++ti) {
    if (!other.m_nz[ti]) continue;
    for (int o = 0; o < m_dim; ++o) {
      m_c[ti * m_dim + o] += s * other.m_c[ti * m_dim + o];
    }
    m_nz[ti] = 1;  // conservative
  }
  return *this;
}

bool Cochain::operator==(const Cochain& other) const {
  if (m_dim != other.m_dim || m_degree != other.m_degree) return false;
  return m_c == other.m_c;
}

// ---------------------------------------------------------------------------
// Conversions with TripleSystem
// ---------------------------------------------------------------------------

Cochain structure_cochain(const TripleSystem& t) {
  const int n = t.dim();
  Cochain c(n, 1);
  int args[3];
  for (args[0] = 0; args[0] < n; ++args[0]) {
    for (args[1] = 0; args[1] < n; ++args[1]) {
      for (args[2] = 0; args[2] < n; ++args[2]) {
        const Rational* b = t.bracket_basis(args[0], args[1], args[2]);
        for (int o = 0; o < n; ++o) {
          if (!is_zero(b[o])) c.set_value(args, o, b[o]);
        }
      }
    }
  }
  return c;
}

TripleSystem cochain_to_system(const Cochain& c) {
  if (c.degree() != 1) {
    throw InvalidInputError("only a degree-1 cochain is a triple bracket");
  }
  const int n = c.dim();
  TripleSystem t(n);
  int args[3];
  Vec v = zero_vec(n);
  for (args[0] = 0; args[0] < n; ++args[0]) {
    for (args[1] = 0; args[1] < n; ++args[1]) {
      for (args[2] = 0; args[2] < n; ++args[2]) {
        const Rational* b = c.eval(args);
        if (!b) continue;
        for (int o = 0; o < n; ++o) v[o] = b[o];
        t.set_bracket(args[0], args[1], args[2], v);
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Shuffle enumeration
// ---------------------------------------------------------------------------

namespace {

struct Shuffle {
  std::vector<int> first;   // ascending positions handed to the first block
  std::vector<int> second;  // ascending positions handed to the second block
  int sign = 1;             // (-1)^(inversions between the blocks)
};

/// All (a, b)-shuffles of {0, ..., a+b-1}, ordered lexicographically by
/// the ascending index set of the first block.
std::vector<Shuffle> make_shuffles(int a, int b) {
  const int n = a + b;
  std::vector<Shuffle> out;
  std::vector<int> pick(a);
  for (int i = 0; i < a; ++i) pick[i] = i;
  while (true) {
    Shuffle sh;
    sh.first = pick;
    sh.second.reserve(b);
    for (int x = 0, pi = 0; x < n; ++x) {
      if (pi < a && pick[pi] == x) {
        ++pi;
      } else {
        sh.second.push_back(x);
      }
    }
    int inversions = 0;
    for (int x : sh.first) {
      for (int y : sh.second) {
        if (x > y) ++inversions;
      }
    }
    sh.sign = (inversions % 2 == 0) ? 1 : -1;
    out.push_back(std::move(sh));
    // Advance to the next combination in lexicographic order.
    int i = a - 1;
    while (i >= 0 && pick[i] == n - a + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < a; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

const std::vector<Shuffle>& shuffles(int a, int b) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Shuffle>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(a, b);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, make_shuffles(a, b)).first;
  }
  return it->second;
}

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

// ---------------------------------------------------------------------------
// Circle product (dense gather form)
// ---------------------------------------------------------------------------

namespace {

/// Accumulate sign * qmid * pblock into acc.
void accumulate(Vec& acc, int sign, const Rational& qmid,
                const Rational* pblock, int dim) {
  for (int o = 0; o < dim; ++o) {
    if (is_zero(pblock[o])) continue;
    if (sign > 0) {
      acc[o] += qmid * pblock[o];
    } else {
      acc[o] -= qmid * pblock[o];
    }
  }
}

/// Point evaluation of (P o Q) at output tuple t (length 2(p+q)+1),
/// accumulated into acc (length dim, caller-zeroed).
///
/// Argument bookkeeping: the output arguments form pairs
/// X_i = (t[2i], t[2i+1]) for i = 0..r-1 plus the final argument t[2r].
void circ_at(const Cochain& P, const Cochain& Q, const int* t, Vec& acc) {
  const int p = P.degree();
  const int q = Q.degree();
  const int r = p + q;
  const int dim = P.dim();

  int qargs[32];
  int pargs[32];

  // Groups 1 and 2: for k = 1..p the inner map consumes a shuffled
  // selection of the first k-1+q pairs plus one half of pair m = k-1+q;
  // its output replaces that half as an argument of the outer map.
  // Sign: (-1)^((k-1) q) times the shuffle signature.
  for (int k = 1; k <= p; ++k) {
    const int m = k - 1 + q;
    const int base_sign = parity_sign((k - 1) * q);
    for (const Shuffle& sh : shuffles(k - 1, q)) {
      const int sign = base_sign * sh.sign;
      for (int grp = 0; grp < 2; ++grp) {
        // Q arguments: pairs indexed by sh.second, then the x-half
        // (grp 0) or y-half (grp 1) of pair m.
        int qi = 0;
        for (int b : sh.second) {
          qargs[qi++] = t[2 * b];
          qargs[qi++] = t[2 * b + 1];
        }
        qargs[qi++] = grp == 0 ? t[2 * m] : t[2 * m + 1];
        const Rational* qv = Q.eval(qargs);
        if (!qv) continue;

        // P arguments: pairs indexed by sh.first, then the modified pair
        // (mid, t[2m+1]) or (t[2m], mid), then pairs m+1..r-1, then t[2r].
        // The contracted slot position inside pargs:
        const int cpos = 2 * (k - 1) + (grp == 0 ? 0 : 1);
        int pi = 0;
        for (int a : sh.first) {
          pargs[pi++] = t[2 * a];
          pargs[pi++] = t[2 * a + 1];
        }
        if (grp == 0) {
          pargs[pi++] = -1;  // placeholder for mid
          pargs[pi++] = t[2 * m + 1];
        } else {
          pargs[pi++] = t[2 * m];
          pargs[pi++] = -1;  // placeholder for mid
        }
        for (int a = m + 1; a < r; ++a) {
          pargs[pi++] = t[2 * a];
          pargs[pi++] = t[2 * a + 1];
        }
        pargs[pi++] = t[2 * r];

        for (int mid = 0; mid < dim; ++mid) {
          if (is_zero(qv[mid])) continue;
          pargs[cpos] = mid;
          const Rational* pv = P.eval(pargs);
          if (!pv) continue;
          accumulate(acc, sign, qv[mid], pv, dim);
        }
      }
    }
  }

  // Group 3: the inner map consumes a shuffled selection of q pairs plus
  // the final argument; its output becomes the final argument of the
  // outer map.  Sign: (-1)^(pq) times the shuffle signature.
  {
    const int base_sign = parity_sign(p * q);
    for (const Shuffle& sh : shuffles(p, q)) {
      const int sign = base_sign * sh.sign;
      int qi = 0;
      for (int b : sh.second) {
        qargs[qi++] = t[2 * b];
        qargs[qi++] = t[2 * b + 1];
      }
      qargs[qi++] = t[2 * r];
      const Rational* qv = Q.eval(qargs);
      if (!qv) continue;

      int pi = 0;
      for (int a : sh.first) {
        pargs[pi++] = t[2 * a];
        pargs[pi++] = t[2 * a + 1];
      }
      const int cpos = pi;
      pargs[pi++] = -1;  // placeholder for mid

      for (int mid = 0; mid < dim; ++mid) {
        if (is_zero(qv[mid])) continue;
        pargs[cpos] = mid;
        const Rational* pv = P.eval(pargs);
        if (!pv) continue;
        accumulate(acc, sign, qv[mid], pv, dim);
      }
    }
  }
}

}  // namespace

Cochain circle_product(const Cochain& p, const Cochain& q) {
  if (p.dim() != q.dim()) {
    throw InvalidInputError("cochain dimension mismatch in circle product");
  }
  const int r = p.degree() + q.degree();
  Cochain out(p.dim(), r);
  const int ar = out.arity();
  std::vector<int> t(ar);
  Vec acc = zero_vec(p.dim());
  for (std::size_t ti = 0; ti < out.tuple_count(); ++ti) {
    out.unpack_tuple(ti, t.data());
    for (Rational& v : acc) v = 0;
    circ_at(p, q, t.data(), acc);
    if (!is_zero_vec(acc)) out.set_values(t.data(), acc);
  }
  return out;
}

Cochain graded_bracket(const Cochain& p, const Cochain& q) {
  Cochain pq = circle_product(p, q);
  Cochain qp = circle_product(q, p);
  pq.add_scaled(qp, Rational(-parity_sign(p.degree() * q.degree())));
  return pq;
}

// ---------------------------------------------------------------------------
// Constrained subspace
// ---------------------------------------------------------------------------

SubcomplexReport is_lts_cochain(const Cochain& p) {
  SubcomplexReport rep;
  rep.ok = true;
  const int ar = p.arity();
  if (ar < 3) return rep;  // degree 0: no constraints
  const int n = p.dim();
  const int a3 = ar - 3;
  const int a2 = ar - 2;
  const int a1 = ar - 1;

  std::vector<int> t(ar), s(ar);

  // Antisymmetry in the last pair: F(.., a, b, z) + F(.., b, a, z) = 0.
  for (std::size_t ti = 0; ti < p.tuple_count(); ++ti) {
    p.unpack_tuple(ti, t.data());
    s = t;
    std::swap(s[a3], s[a2]);
    Vec defect = zero_vec(n);
    const Rational* va = p.eval_flat(ti);
    const Rational* vb = p.eval(s.data());
    if (!va && !vb) continue;
    bool nz = false;
    for (int o = 0; o < n; ++o) {
      if (va) defect[o] += va[o];
      if (vb) defect[o] += vb[o];
      nz = nz || !is_zero(defect[o]);
    }
    if (nz) {
      rep.ok = false;
      rep.constraint = "antisymmetry";
      rep.tuple = t;
      rep.defect = std::move(defect);
      return rep;
    }
  }

  // Cyclic sum over the last three slots vanishes.
  for (std::size_t ti = 0; ti < p.tuple_count(); ++ti) {
    p.unpack_tuple(ti, t.data());
    Vec defect = zero_vec(n);
    bool any = false;
    s = t;
    for (int rot = 0; rot < 3; ++rot) {
      const Rational* v = rot == 0 ? p.eval_flat(ti) : p.eval(s.data());
      if (v) {
        any = true;
        for (int o = 0; o < n; ++o) defect[o] += v[o];
      }
      // Rotate (a3, a2, a1) -> (a2, a1, a3) for the next term.
      int tmp = s[a3];
      s[a3] = s[a2];
      s[a2] = s[a1];
      s[a1] = tmp;
    }
    if (any && !is_zero_vec(defect)) {
      rep.ok = false;
      rep.constraint = "cyclic";
      rep.tuple = t;
      rep.defect = std::move(defect);
      return rep;
    }
  }

  return rep;
}

Cochain lts_project(const Cochain& p) {
  const int ar = p.arity();
  if (ar < 3) return p;
  const int n = p.dim();
  const int a3 = ar - 3;
  const int a2 = ar - 2;
  const int a1 = ar - 1;

  // Step 1: antisymmetrize the last pair, A(F)(t) = (F(t) - F(swap t))/2.
  Cochain a(n, p.degree());
  std::vector<int> t(ar), s(ar);
  Vec val = zero_vec(n);
  const Rational half(1, 2);
  for (std::size_t ti = 0; ti < p.tuple_count(); ++ti) {
    p.unpack_tuple(ti, t.data());
    s = t;
    std::swap(s[a3], s[a2]);
    const Rational* va = p.eval_flat(ti);
    const Rational* vb = p.eval(s.data());
    if (!va && !vb) continue;
    bool nz = false;
    for (int o = 0; o < n; ++o) {
      val[o] = 0;
      if (va) val[o] += va[o];
      if (vb) val[o] -= vb[o];
      val[o] *= half;
      nz = nz || !is_zero(val[o]);
    }
    if (nz) a.set_values(t.data(), val);
  }

  // Step 2: subtract one third of the cyclic sum over the last three
  // slots, Pi(F) = A(F) - C(A(F))/3.
  Cochain out(n, p.degree());
  const Rational third(1, 3);
  for (std::size_t ti = 0; ti < a.tuple_count(); ++ti) {
    a.unpack_tuple(ti, t.data());
    Vec cyc = zero_vec(n);
    s = t;
    for (int rot = 0; rot < 3; ++rot) {
      const Rational* v = rot == 0 ? a.eval_flat(ti) : a.eval(s.data());
      if (v) {
        for (int o = 0; o < n; ++o) cyc[o] += v[o];
      }
      int tmp = s[a3];
      s[a3] = s[a2];
      s[a2] = s[a1];
      s[a1] = tmp;
    }
    const Rational* base = a.eval_flat(ti);
    bool nz = false;
    for (int o = 0; o < n; ++o) {
      val[o] = base ? base[o] : Rational(0);
      val[o] -= third * cyc[o];
      nz = nz || !is_zero(val[o]);
    }
    if (nz) out.set_values(t.data(), val);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lifts
// ---------------------------------------------------------------------------

Cochain lift_linear_map(const LinearMap& h, const SplitContext& ctx) {
  if (h.rows() != ctx.n1 || h.cols() != ctx.n2) {
    throw InvalidInputError("lifted map must have shape n1 x n2");
  }
  const int N = ctx.total();
  Cochain c(N, 0);
  int args[1];
  for (int u = 0; u < ctx.n2; ++u) {
    args[0] = ctx.n1 + u;
    for (int o = 0; o < ctx.n1; ++o) {
      const Rational& v = h.at(o, u);
      if (!is_zero(v)) c.set_value(args, o, v);
    }
  }
  return c;
}

Cochain lift_component(const std::vector<int>& blocks, int target,
                       const std::vector<Rational>& tensor,
                       const SplitContext& ctx) {
  const int ar = static_cast<int>(blocks.size());
  if (ar < 1 || ar % 2 == 0) {
    throw InvalidInputError("component arity must be odd");
  }
  if (target != 0 && target != 1) {
    throw InvalidInputError("component target block must be 0 or 1");
  }
  for (int b : blocks) {
    if (b != 0 && b != 1) {
      throw InvalidInputError("component argument block must be 0 or 1");
    }
  }
  const int N = ctx.total();
  const int out_dim = target == 0 ? ctx.n1 : ctx.n2;
  const int out_off = target == 0 ? 0 : ctx.n1;
  std::size_t tuples = 1;
  std::vector<int> adim(ar);
  for (int a = 0; a < ar; ++a) {
    adim[a] = blocks[a] == 0 ? ctx.n1 : ctx.n2;
    tuples *= static_cast<std::size_t>(adim[a]);
  }
  if (tensor.size() != tuples * static_cast<std::size_t>(out_dim)) {
    throw InvalidInputError("component tensor has wrong size");
  }

  Cochain c(N, (ar - 1) / 2);
  std::vector<int> j(ar, 0), args(ar);
  for (std::size_t ti = 0; ti < tuples; ++ti) {
    // Unpack ti into the component tuple j (row-major).
    std::size_t rest = ti;
    for (int a = ar - 1; a >= 0; --a) {
      j[a] = static_cast<int>(rest % static_cast<std::size_t>(adim[a]));
      rest /= static_cast<std::size_t>(adim[a]);
    }
    for (int a = 0; a < ar; ++a) {
      args[a] = blocks[a] == 0 ? j[a] : ctx.n1 + j[a];
    }
    const Rational* v = tensor.data() + ti * static_cast<std::size_t>(out_dim);
    for (int o = 0; o < out_dim; ++o) {
      if (!is_zero(v[o])) c.set_value(args.data(), out_off + o, v[o]);
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Bidegrees
// ---------------------------------------------------------------------------

BidegreeResult bidegree_of(const Cochain& p, const SplitContext& ctx) {
  if (ctx.total() != p.dim()) {
    throw InvalidInputError("splitting does not match cochain dimension");
  }
  const int ar = p.arity();
  std::vector<int> t(ar);
  bool seen = false;
  int l = 0;
  // Every nonzero coefficient pins l exactly: a g1-valued coefficient on
  // a tuple with c1 arguments from g1 forces l = c1 - 1, a g2-valued one
  // forces l = c1.
  for (std::size_t ti = 0; ti < p.tuple_count(); ++ti) {
    const Rational* v = p.eval_flat(ti);
    if (!v) continue;
    p.unpack_tuple(ti, t.data());
    int c1 = 0;
    for (int a = 0; a < ar; ++a) {
      if (!ctx.in_second(t[a])) ++c1;
    }
    for (int o = 0; o < p.dim(); ++o) {
      if (is_zero(v[o])) continue;
      const int pinned = ctx.in_second(o) ? c1 : c1 - 1;
      if (!seen) {
        seen = true;
        l = pinned;
      } else if (l != pinned) {
        return {BidegreeKind::Inhomogeneous, {}};
      }
    }
  }
  if (!seen) return {BidegreeKind::Indeterminate, {}};
  return {BidegreeKind::Homogeneous, {l, 2 * p.degree() - l}};
}

Cochain ThetaComponents::sum() const {
  Cochain s = phi1;
  s.add_scaled(mu1, 1);
  s.add_scaled(psi, 1);
  s.add_scaled(mu2, 1);
  s.add_scaled(phi2, 1);
  return s;
}

ThetaComponents decompose_theta(const Cochain& theta,
                                const SplitContext& ctx) {
  if (theta.degree() != 1) {
    throw InvalidInputError("component decomposition needs a degree-1 cochain");
  }
  if (ctx.total() != theta.dim()) {
    throw InvalidInputError("splitting does not match cochain dimension");
  }
  const int N = theta.dim();
  ThetaComponents comps{Cochain(N, 1), Cochain(N, 1), Cochain(N, 1),
                        Cochain(N, 1), Cochain(N, 1)};
  int t[3];
  for (std::size_t ti = 0; ti < theta.tuple_count(); ++ti) {
    const Rational* v = theta.eval_flat(ti);
    if (!v) continue;
    theta.unpack_tuple(ti, t);
    int c2 = 0;
    for (int a = 0; a < 3; ++a) {
      if (ctx.in_second(t[a])) ++c2;
    }
    // Output split: indices < n1 are the g1-valued part, >= n1 the
    // g2-valued part.  Routing by (c2, part):
    //   c2=0: g1 -> mu1,  g2 -> phi1      c2=1: g1 -> psi,  g2 -> mu1
    //   c2=2: g1 -> mu2,  g2 -> psi       c2=3: g1 -> phi2, g2 -> mu2
    Cochain* dest_g1 = nullptr;
    Cochain* dest_g2 = nullptr;
    switch (c2) {
      case 0: dest_g1 = &comps.mu1;  dest_g2 = &comps.phi1; break;
      case 1: dest_g1 = &comps.psi;  dest_g2 = &comps.mu1;  break;
      case 2: dest_g1 = &comps.mu2;  dest_g2 = &comps.psi;  break;
      default: dest_g1 = &comps.phi2; dest_g2 = &comps.mu2; break;
    }
    for (int o = 0; o < N; ++o) {
      if (is_zero(v[o])) continue;
      Cochain* dest = ctx.in_second(o) ? dest_g2 : dest_g1;
      dest->set_value(t, o, v[o]);
    }
  }
  return comps;
}

std::optional<Bidegree> bidegree_bracket_law(const Cochain& f,
                                             const Cochain& g,
                                             const SplitContext& ctx) {
  BidegreeResult bf = bidegree_of(f, ctx);
  BidegreeResult bg = bidegree_of(g, ctx);
  if (bf.kind == BidegreeKind::Inhomogeneous ||
      bg.kind == BidegreeKind::Inhomogeneous) {
    throw InvalidInputError("bracket law needs homogeneous cochains");
  }
  Cochain br = graded_bracket(f, g);
  if (br.is_zero()) return std::nullopt;
  if (bf.kind == BidegreeKind::Indeterminate ||
      bg.kind == BidegreeKind::Indeterminate) {
    // A zero factor forces a zero bracket; reaching here is impossible.
    throw InternalError("zero cochain produced a nonzero bracket");
  }
  BidegreeResult bb = bidegree_of(br, ctx);
  if (bb.kind != BidegreeKind::Homogeneous ||
      bb.value.l != bf.value.l + bg.value.l ||
      bb.value.k != bf.value.k + bg.value.k) {
    throw InternalError("bidegree addition law violated by a bracket");
  }
  return bb.value;
}

}  // namespace lts
