// Copyright 2026 The hocpm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hocpm/theory.hpp"

#include <functional>
#include <map>
#include <set>

namespace hocpm {

namespace {

using SparseVector = std::vector<std::pair<std::size_t, SemiringValue>>;

SparseVector sparse_column(const Matrix& f, std::size_t j) {
  SparseVector out;
  for (std::size_t i = 0; i < f.rows(); ++i) {
    if (!f(i, j).is_zero()) out.emplace_back(i, f(i, j));
  }
  return out;
}

SparseVector sparse_kron(const SparseVector& a, std::size_t b_len, const SparseVector& b) {
  SparseVector out;
  for (const auto& [i, x] : a) {
    for (const auto& [k, y] : b) out.emplace_back(i * b_len + k, x * y);
  }
  return out;
}

/** Rational value of x if it lies in the rational part of a number-like semiring. */
std::optional<mpq_class> rational_part(const SemiringValue& x) {
  switch (x.descriptor().kind()) {
    case SemiringKind::Natural: return mpq_class(x.as_natural());
    case SemiringKind::Rational: return x.as_rational();
    case SemiringKind::GaussianRational:
    case SemiringKind::SplitComplexRational:
      if (x.as_quadratic().im != 0) return std::nullopt;
      return x.as_quadratic().re;
    default: return std::nullopt;
  }
}

SemiringValue sum_of_norms(const FoldContext& ctx, const std::vector<SemiringValue>& terms) {
  SemiringValue total = SemiringValue::zero(ctx.semiring());
  for (const auto& t : terms) total += scalar_norm(ctx.action(), t);
  return total;
}

std::optional<std::vector<SemiringValue>> finite_witness(const FoldContext& ctx, const SemiringValue& x,
                                                         std::size_t bound) {
  const SemiringDescriptor sr = ctx.semiring();
  std::map<std::string, SemiringValue> norms;  // norm -> preimage
  for (const auto& y : enumerate_elements(sr)) norms.emplace(scalar_norm(ctx.action(), y).to_string(), y);
  struct Reach {
    SemiringValue value;
    std::vector<SemiringValue> witness;
  };
  std::map<std::string, Reach> reached;
  reached.emplace(SemiringValue::zero(sr).to_string(), Reach{SemiringValue::zero(sr), {}});
  std::vector<Reach> frontier{reached.begin()->second};
  for (std::size_t level = 1; level <= bound && !frontier.empty(); ++level) {
    std::vector<Reach> next;
    for (const auto& r : frontier) {
      for (const auto& [key, y] : norms) {
        Reach s{r.value + scalar_norm(ctx.action(), y), r.witness};
        s.witness.push_back(y);
        if (s.value == x) return s.witness;
        const std::string k = s.value.to_string();
        if (reached.count(k)) continue;
        reached.emplace(k, s);
        next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

/** Smallest c > 0 with q | c^d, or 0 if q has a prime factor too large to find. */
mpz_class scale_for(mpz_class q, std::size_t d) {
  mpz_class c = 1;
  for (mpz_class p = 2; p * p <= q; ++p) {
    if (p > 100000) return 0;
    std::size_t e = 0;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    for (std::size_t k = 0; k < (e + d - 1) / d; ++k) c *= p;
  }
  return c * q;
}

/** 0, 1, -1, 2, -2, ... up to radius (nonnegative only if signed is false). */
std::vector<long> small_integers(long radius, bool signed_values) {
  std::vector<long> out{0};
  for (long a = 1; a <= radius; ++a) {
    out.push_back(a);
    if (signed_values) out.push_back(-a);
  }
  return out;
}

std::optional<std::vector<SemiringValue>> numeric_witness(const FoldContext& ctx, const SemiringValue& x,
                                                          std::size_t bound) {
  const SemiringDescriptor sr = ctx.semiring();
  const auto r = rational_part(x);
  if (!r) return std::nullopt;
  const std::size_t d = ctx.legs();
  // witnesses are z / c for integral z, so the integral target is x * c^d
  const mpz_class c = scale_for(r->get_den(), d);
  if (c == 0) return std::nullopt;
  mpz_class cd = 1;
  for (std::size_t i = 0; i < d; ++i) cd *= c;
  const mpz_class N = r->get_num() * (cd / r->get_den());
  const mpz_class absN = abs(N);
  if (absN > 1000000) return std::nullopt;

  mpz_class root;
  mpz_root(root.get_mpz_t(), absN.get_mpz_t(), d);
  const long target = N.get_si();
  const bool quadratic = sr.kind() == SemiringKind::GaussianRational || sr.kind() == SemiringKind::SplitComplexRational;
  long radius = root.get_si() + 2;
  std::vector<SemiringValue> candidates;
  if (quadratic) {
    // past a small box only a ≥ b ≥ 0 is scanned
    const bool full = radius <= 30;
    radius = std::min<long>(radius, 400);
    const auto steps = small_integers(radius, full);
    for (long a : steps)
      for (long b : steps)
        if (full || b <= a) candidates.push_back(SemiringValue::quadratic(sr, a, b));
    if (sr.kind() == SemiringKind::SplitComplexRational) {
      // (a+bj)(a-bj) = (a-b)(a+b) reaches v directly for v odd or divisible by 4
      for (long v : {target, target - 1, target + 1, 1L, -1L}) {
        if (v % 2 != 0) {
          candidates.push_back(SemiringValue::quadratic(sr, (v + 1) / 2, (v - 1) / 2));
        } else if (v % 4 == 0) {
          candidates.push_back(SemiringValue::quadratic(sr, v / 4 + 1, v / 4 - 1));
        }
      }
    }
  } else {
    for (long a : small_integers(std::min<long>(radius, 2000), sr.kind() != SemiringKind::Natural)) {
      candidates.push_back(SemiringValue::from_integer(sr, a));
    }
  }
  std::map<long, SemiringValue> norms;
  bool nonnegative = true;
  for (const auto& z : candidates) {
    const auto n = rational_part(scalar_norm(ctx.action(), z));
    if (!n || n->get_den() != 1) continue;
    const mpz_class& v = n->get_num();
    if (abs(v) > absN + 1000) continue;
    norms.emplace(v.get_si(), z);
    nonnegative = nonnegative && v >= 0;
  }

  std::optional<std::vector<long>> found;
  if (target == 0) found = std::vector<long>{0};
  if (!found && nonnegative && target > 0) {
    // depth-first from the largest norm down, remembering dead ends
    std::set<std::pair<long, std::size_t>> dead;
    std::size_t budget = 2000000;
    std::vector<long> path;
    std::function<bool(long, std::size_t)> search = [&](long t, std::size_t k) -> bool {
      if (t == 0) return true;
      if (k == 0 || dead.count({t, k}) || budget == 0) return false;
      if (norms.count(t)) {
        path.push_back(t);
        return true;
      }
      for (auto it = norms.upper_bound(t); it != norms.begin();) {
        --it;
        const long v = it->first;
        if (v <= 0 || v * static_cast<long>(k) < t) break;
        if (budget-- == 0) return false;
        path.push_back(v);
        if (search(t - v, k - 1)) return true;
        path.pop_back();
      }
      dead.insert({t, k});
      return false;
    };
    if (search(target, bound)) found = path;
  } else if (!found) {
    // signed norms: breadth-first over partial sums in a window
    long max_norm = 0;
    for (const auto& [v, z] : norms) max_norm = std::max(max_norm, std::labs(v));
    const long window = std::labs(target) + max_norm;
    std::map<long, std::vector<long>> reached{{0, {}}};
    std::vector<long> frontier{0};
    std::size_t budget = 2000000;
    for (std::size_t level = 1; level <= bound && !found && !frontier.empty(); ++level) {
      std::vector<long> next;
      for (long s : frontier) {
        for (const auto& [v, z] : norms) {
          if (budget-- == 0) return std::nullopt;
          const long t = s + v;
          if (std::labs(t) > window || reached.count(t)) continue;
          auto w = reached[s];
          w.push_back(v);
          if (t == target) {
            found = w;
            break;
          }
          reached.emplace(t, std::move(w));
          next.push_back(t);
          if (reached.size() > 200000) return std::nullopt;
        }
        if (found) break;
      }
      frontier = std::move(next);
    }
  }
  if (!found) return std::nullopt;
  if (sr.kind() == SemiringKind::Natural && c != 1) return std::nullopt;
  const SemiringValue scale =
      sr.kind() == SemiringKind::Natural ? SemiringValue::one(sr) : SemiringValue::rational(sr, mpq_class(1, c));
  std::vector<SemiringValue> out;
  for (long v : *found) out.push_back((v == 0 ? SemiringValue::zero(sr) : norms.at(v)) * scale);
  if (!(sum_of_norms(ctx, out) == x)) return std::nullopt;
  return out;
}

}  // namespace

Matrix copy_map(SemiringDescriptor sr, std::size_t n) {
  Matrix out(sr, n * n, n);
  for (std::size_t j = 0; j < n; ++j) out.set(j * n + j, j, SemiringValue::one(sr));
  return out;
}

DecoherenceMap decoherence(const FoldContext& ctx, std::size_t n) {
  const SemiringDescriptor sr = ctx.semiring();
  const std::size_t fn = fold_object(ctx, n);
  Matrix direct(sr, fn, fn);
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix proj = compose(Matrix::basis_state(sr, n, j), Matrix::basis_effect(sr, n, j));
    direct = mat_add(direct, fold_morphism(ctx, proj));
  }

  // (id ⊠ trace_n) ∘ fold(copy_n), one column at a time.
  const Matrix copy = copy_map(sr, n);
  std::vector<Matrix> twisted;
  for (std::size_t g = 0; g < ctx.legs(); ++g) twisted.push_back(apply_entrywise(ctx.action().automorphism_at(g), copy));
  const Matrix trace = discard_effect(ctx, n);
  const auto P = pi_index_map(ctx, n, n);
  std::vector<std::size_t> P_inv(P.size());
  for (std::size_t c = 0; c < P.size(); ++c) P_inv[P[c]] = c;
  Matrix via_copy(sr, fn, fn);
  const std::vector<std::size_t> dims(ctx.legs(), n);
  for (std::size_t x = 0; x < fn; ++x) {
    const auto digits = unflatten(x, dims);
    SparseVector v{{0, SemiringValue::one(sr)}};
    for (std::size_t g = 0; g < ctx.legs(); ++g) v = sparse_kron(v, n * n, sparse_column(twisted[g], digits[g]));
    // pi^{-1} sends the entry at P[c] back to c; then apply id ⊗ trace.
    for (const auto& [idx, val] : v) {
      const std::size_t c = P_inv[idx];
      const std::size_t r = c / fn, c2 = c % fn;
      if (!trace(0, c2).is_zero()) via_copy.accumulate(r, x, val * trace(0, c2));
    }
  }
  if (!(direct == via_copy)) throw InternalError("decoherence: copy-then-discard and projector sum disagree");
  return DecoherenceMap{n, std::move(direct)};
}

TestFamily::TestFamily(const FoldContext& ctx, std::size_t n, std::vector<Matrix> effects)
    : n_(n), effects_(std::move(effects)) {
  Matrix total(ctx.semiring(), 1, fold_object(ctx, n));
  for (const auto& a : effects_) {
    if (a.rows() != 1 || a.cols() != total.cols()) throw InvalidTestError("test effect has the wrong shape");
    total = mat_add(total, a);
  }
  if (!(total == discard_effect(ctx, n))) throw InvalidTestError("test effects do not sum to trace_n");
}

TestFamily TestFamily::sharp(const FoldContext& ctx, std::size_t n) {
  std::vector<Matrix> effects;
  for (std::size_t j = 0; j < n; ++j) effects.push_back(fold_morphism(ctx, Matrix::basis_effect(ctx.semiring(), n, j)));
  return TestFamily(ctx, n, std::move(effects));
}

NormalizationReport normalize_check(const FoldContext& ctx, const Matrix& psi) {
  if (psi.cols() != 1) throw ShapeMismatchError("normalize_check expects a state (n x 1)");
  const std::size_t n = psi.rows();
  const SemiringValue via_trace = compose(discard_effect(ctx, n), fold_morphism(ctx, psi))(0, 0);
  SemiringValue direct = SemiringValue::zero(ctx.semiring());
  for (std::size_t j = 0; j < n; ++j) direct += scalar_norm(ctx.action(), psi(j, 0));
  if (!(via_trace == direct)) throw InternalError("normalize_check: trace and direct sum disagree");
  return NormalizationReport{direct.is_one(), direct};
}

SemiringValue born_probability(const FoldContext& ctx, const TestFamily& test, const Matrix& psi, std::size_t i) {
  if (i >= test.outcomes()) throw InvalidTestError("outcome index out of range");
  if (psi.cols() != 1 || psi.rows() != test.n()) throw ShapeMismatchError("state does not match the test");
  return compose(test.effects()[i], fold_morphism(ctx, psi))(0, 0);
}

BornReport born_report(const FoldContext& ctx, const TestFamily& test, const Matrix& psi) {
  BornReport out{{}, false, SemiringValue::zero(ctx.semiring())};
  const Matrix folded = fold_morphism(ctx, psi);
  for (std::size_t i = 0; i < test.outcomes(); ++i) {
    out.probabilities.push_back(compose(test.effects()[i], folded)(0, 0));
  }
  const auto norm = normalize_check(ctx, psi);
  out.normalized = norm.normalized;
  out.total = norm.total;
  return out;
}

std::optional<std::vector<SemiringValue>> membership_witness(const FoldContext& ctx, const SemiringValue& x,
                                                             std::size_t bound) {
  if (!(x.descriptor() == ctx.semiring())) throw MixedSemiringError("membership_witness over a different semiring");
  if (ctx.action().group().is_trivial()) return std::vector<SemiringValue>{x};
  if (ctx.semiring().is_finite()) return finite_witness(ctx, x, bound);
  return numeric_witness(ctx, x, bound);
}

std::vector<SemiringValue> require_witness(const FoldContext& ctx, const SemiringValue& x, std::size_t bound) {
  auto w = membership_witness(ctx, x, bound);
  if (!w) throw NoWitnessFoundError("no representation of " + x.to_string() + " as a sum of norms found");
  return *w;
}

std::vector<SemiringValue> enumerate_scalars(const FoldContext& ctx) {
  const SemiringDescriptor sr = ctx.semiring();
  if (!sr.is_finite()) throw NotFiniteError(sr.name() + " is infinite");
  const auto elements = enumerate_elements(sr);
  std::set<std::string> norms;
  std::vector<SemiringValue> norm_values;
  for (const auto& y : elements) {
    SemiringValue v = scalar_norm(ctx.action(), y);
    if (norms.insert(v.to_string()).second) norm_values.push_back(v);
  }
  std::set<std::string> closure{SemiringValue::zero(sr).to_string()};
  std::vector<SemiringValue> frontier{SemiringValue::zero(sr)};
  while (!frontier.empty()) {
    std::vector<SemiringValue> next;
    for (const auto& s : frontier) {
      for (const auto& v : norm_values) {
        SemiringValue t = s + v;
        if (closure.insert(t.to_string()).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  std::vector<SemiringValue> out;
  for (const auto& y : elements) {
    if (closure.count(y.to_string())) out.push_back(y);
  }
  return out;
}

CpmMorphism classical_embed(const EnvStructure& env, const Matrix& M,
                            const std::vector<std::vector<SemiringValue>>& witnesses) {
  const FoldContext& ctx = env.context();
  const SemiringDescriptor sr = ctx.semiring();
  const std::size_t m = M.rows(), n = M.cols();
  if (witnesses.size() != m * n) throw ShapeMismatchError("one witness list per matrix entry is required");
  std::size_t E = 0;
  for (std::size_t k = 0; k < m * n; ++k) {
    if (!(sum_of_norms(ctx, witnesses[k]) == M.entries()[k])) {
      throw NoWitnessFoundError("witness for entry " + std::to_string(k) + " does not sum to " + M.entries()[k].to_string());
    }
    E += witnesses[k].size();
  }
  if (E == 0) E = 1;
  Matrix f(sr, m * E, n);
  std::size_t e = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& x : witnesses[i * n + j]) f.set(i * E + e++, j, x);
    }
  }
  return make_cpm_morphism(env, f, m, E, discard_effect(ctx, E));
}

CpmMorphism classical_embed(const EnvStructure& env, const Matrix& M, std::size_t bound) {
  std::vector<std::vector<SemiringValue>> witnesses;
  for (const auto& x : M.entries()) {
    if (x.is_zero()) {
      witnesses.emplace_back();
    } else {
      witnesses.push_back(require_witness(env.context(), x, bound));
    }
  }
  return classical_embed(env, M, witnesses);
}

bool is_classical(const FoldContext& ctx, const Matrix& F, std::size_t n, std::size_t m) {
  if (F.cols() != fold_object(ctx, n) || F.rows() != fold_object(ctx, m)) {
    throw NotAFoldedShapeError("matrix does not map fold(n) to fold(m)");
  }
  return compose(decoherence(ctx, m).matrix, compose(F, decoherence(ctx, n).matrix)) == F;
}

Matrix classical_extract(const FoldContext& ctx, const Matrix& F, std::size_t n, std::size_t m) {
  if (!is_classical(ctx, F, n, m)) throw NotClassicalError("matrix is not absorbed by decoherence");
  const SemiringDescriptor sr = ctx.semiring();
  Matrix out(sr, m, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix column = compose(F, fold_morphism(ctx, Matrix::basis_state(sr, n, j)));
    for (std::size_t i = 0; i < m; ++i) {
      out.set(i, j, compose(fold_morphism(ctx, Matrix::basis_effect(sr, m, i)), column)(0, 0));
    }
  }
  return out;
}

}  // namespace hocpm
