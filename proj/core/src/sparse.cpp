#include <lts/detail/sparse.hpp>

namespace lts::detail {

namespace {

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

struct Shuffle {
  std::vector<int> first;
  std::vector<int> second;
  int sign = 1;
};

/// Same enumeration as the dense implementation, re-derived here on
/// purpose: the two products are meant to be independent of each other.
std::vector<Shuffle> make_shuffles(int a, int b) {
  const int n = a + b;
  std::vector<Shuffle> out;
  std::vector<int> pick(a);
  for (int i = 0; i < a; ++i) pick[i] = i;
  while (true) {
    Shuffle sh;
    sh.first = pick;
    for (int x = 0, pi = 0; x < n; ++x) {
      if (pi < a && pick[pi] == x) {
        ++pi;
      } else {
        sh.second.push_back(x);
      }
    }
    int inv = 0;
    for (int x : sh.first) {
      for (int y : sh.second) {
        if (x > y) ++inv;
      }
    }
    sh.sign = parity_sign(inv);
    out.push_back(std::move(sh));
    int i = a - 1;
    while (i >= 0 && pick[i] == n - a + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < a; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

/// One nonzero entry of a sparse cochain, with unpacked arguments.
struct Entry {
  std::vector<int> args;
  const Vec* value;
};

std::vector<Entry> unpack_entries(const SparseCochain& c) {
  std::vector<Entry> out;
  out.reserve(c.entries.size());
  for (const auto& [ti, vec] : c.entries) {
    if (is_zero_vec(vec)) continue;
    Entry e;
    e.args.resize(c.arity());
    c.unpack_tuple(ti, e.args.data());
    e.value = &vec;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::size_t SparseCochain::tuple_index(const int* args) const {
  std::size_t ti = 0;
  for (int a = 0; a < arity(); ++a) {
    ti = ti * static_cast<std::size_t>(dim) + static_cast<std::size_t>(args[a]);
  }
  return ti;
}

void SparseCochain::unpack_tuple(std::size_t ti, int* args) const {
  for (int a = arity() - 1; a >= 0; --a) {
    args[a] = static_cast<int>(ti % static_cast<std::size_t>(dim));
    ti /= static_cast<std::size_t>(dim);
  }
}

Vec& SparseCochain::slot(const int* args) {
  auto [it, inserted] = entries.try_emplace(tuple_index(args));
  if (inserted) it->second = zero_vec(dim);
  return it->second;
}

bool SparseCochain::is_zero() const {
  for (const auto& [ti, vec] : entries) {
    if (!is_zero_vec(vec)) return false;
  }
  return true;
}

std::optional<std::vector<int>> SparseCochain::first_nonzero_tuple() const {
  // std::map iterates keys in increasing flat-index order, which is
  // lexicographic tuple order.
  for (const auto& [ti, vec] : entries) {
    if (is_zero_vec(vec)) continue;
    std::vector<int> args(arity());
    unpack_tuple(ti, args.data());
    return args;
  }
  return std::nullopt;
}

SparseCochain& SparseCochain::add_scaled(const SparseCochain& other,
                                         const Rational& s) {
  if (other.dim != dim || other.degree != degree) {
    throw InvalidInputError("sparse cochain shape mismatch in addition");
  }
  if (lts::is_zero(s)) return *this;
  for (const auto& [ti, vec] : other.entries) {
    auto [it, inserted] = entries.try_emplace(ti);
    if (inserted) it->second = zero_vec(dim);
    for (int o = 0; o < dim; ++o) it->second[o] += s * vec[o];
  }
  return *this;
}

SparseCochain to_sparse(const Cochain& c) {
  SparseCochain s;
  s.dim = c.dim();
  s.degree = c.degree();
  std::vector<int> args(c.arity());
  for (std::size_t ti = 0; ti < c.tuple_count(); ++ti) {
    const Rational* v = c.eval_flat(ti);
    if (!v) continue;
    bool nz = false;
    for (int o = 0; o < c.dim() && !nz; ++o) nz = !is_zero(v[o]);
    if (!nz) continue;
    Vec& vec = s.entries[ti];
    vec = zero_vec(c.dim());
    for (int o = 0; o < c.dim(); ++o) vec[o] = v[o];
  }
  return s;
}

Cochain to_dense(const SparseCochain& c) {
  Cochain d(c.dim, c.degree);
  std::vector<int> args(c.arity());
  for (const auto& [ti, vec] : c.entries) {
    c.unpack_tuple(ti, args.data());
    d.set_values(args.data(), vec);
  }
  d.refresh_zero_flags();
  return d;
}

SparseCochain circle_product_sparse(const SparseCochain& p,
                                    const SparseCochain& q) {
  if (p.dim != q.dim) {
    throw InvalidInputError("cochain dimension mismatch in circle product");
  }
  const int dp = p.degree;
  const int dq = q.degree;
  const int r = dp + dq;
  const int dim = p.dim;

  SparseCochain out;
  out.dim = dim;
  out.degree = r;

  const std::vector<Entry> pe = unpack_entries(p);
  const std::vector<Entry> qe = unpack_entries(q);
  if (pe.empty() || qe.empty()) return out;

  std::vector<int> t(2 * r + 1);

  // Scatter form of the same three groups as the dense product: for each
  // nonzero tuple of the outer map P and of the inner map Q, the output
  // tuple is the merge of P's arguments (minus the contracted slot) with
  // Q's arguments, placed according to the shuffle, and the contribution
  // is sign * Q_value[contracted index] * P_value.

  // Groups 1 and 2.
  for (int k = 1; k <= dp; ++k) {
    const int m = k - 1 + dq;
    const int base_sign = parity_sign((k - 1) * dq);
    for (const Shuffle& sh : make_shuffles(k - 1, dq)) {
      const int sign = base_sign * sh.sign;
      for (int grp = 0; grp < 2; ++grp) {
        for (const Entry& ep : pe) {
          const int mid = grp == 0 ? ep.args[2 * (k - 1)]
                                   : ep.args[2 * (k - 1) + 1];
          for (const Entry& eq : qe) {
            const Rational& scale = (*eq.value)[mid];
            if (is_zero(scale)) continue;
            // Output pairs A <- P pairs 0..k-2, pairs B <- Q pairs.
            for (int a = 0; a < k - 1; ++a) {
              t[2 * sh.first[a]] = ep.args[2 * a];
              t[2 * sh.first[a] + 1] = ep.args[2 * a + 1];
            }
            for (int b = 0; b < dq; ++b) {
              t[2 * sh.second[b]] = eq.args[2 * b];
              t[2 * sh.second[b] + 1] = eq.args[2 * b + 1];
            }
            // Pair m mixes Q's final argument with the surviving half of
            // P's consumed pair.
            if (grp == 0) {
              t[2 * m] = eq.args[2 * dq];
              t[2 * m + 1] = ep.args[2 * (k - 1) + 1];
            } else {
              t[2 * m] = ep.args[2 * (k - 1)];
              t[2 * m + 1] = eq.args[2 * dq];
            }
            // Trailing pairs and the final argument come from P.
            for (int a = k; a < dp; ++a) {
              t[2 * (m + 1 + a - k)] = ep.args[2 * a];
              t[2 * (m + 1 + a - k) + 1] = ep.args[2 * a + 1];
            }
            t[2 * r] = ep.args[2 * dp];

            Vec& acc = out.slot(t.data());
            const Vec& pv = *ep.value;
            for (int o = 0; o < dim; ++o) {
              if (is_zero(pv[o])) continue;
              if (sign > 0) {
                acc[o] += scale * pv[o];
              } else {
                acc[o] -= scale * pv[o];
              }
            }
          }
        }
      }
    }
  }

  // Group 3.
  {
    const int base_sign = parity_sign(dp * dq);
    for (const Shuffle& sh : make_shuffles(dp, dq)) {
      const int sign = base_sign * sh.sign;
      for (const Entry& ep : pe) {
        const int mid = ep.args[2 * dp];
        for (const Entry& eq : qe) {
          const Rational& scale = (*eq.value)[mid];
          if (is_zero(scale)) continue;
          for (int a = 0; a < dp; ++a) {
            t[2 * sh.first[a]] = ep.args[2 * a];
            t[2 * sh.first[a] + 1] = ep.args[2 * a + 1];
          }
          for (int b = 0; b < dq; ++b) {
            t[2 * sh.second[b]] = eq.args[2 * b];
            t[2 * sh.second[b] + 1] = eq.args[2 * b + 1];
          }
          t[2 * r] = eq.args[2 * dq];

          Vec& acc = out.slot(t.data());
          const Vec& pv = *ep.value;
          for (int o = 0; o < dim; ++o) {
            if (is_zero(pv[o])) continue;
            if (sign > 0) {
              acc[o] += scale * pv[o];
            } else {
              acc[o] -= scale * pv[o];
            }
          }
        }
      }
    }
  }

  return out;
}

SparseCochain graded_bracket_sparse(const SparseCochain& p,
                                    const SparseCochain& q) {
  SparseCochain pq = circle_product_sparse(p, q);
  SparseCochain qp = circle_product_sparse(q, p);
  pq.add_scaled(qp, Rational(-parity_sign(p.degree * q.degree)));
  return pq;
}

}  // namespace lts::detail
