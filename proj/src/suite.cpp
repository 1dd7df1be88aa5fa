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

#include "hocpm/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hocpm/presets.hpp"
#include "hocpm/random.hpp"
#include "hocpm/theory.hpp"

namespace hocpm {

namespace {

// folded instances are kept at or below this many entries
constexpr std::size_t kBudget = 4096;

using Labelled = std::vector<std::pair<std::string, GroupAction>>;
using LabelledEnvs = std::vector<std::pair<std::string, EnvStructure>>;

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t out = 1;
  while (e--) {
    out *= base;
    if (out > (std::size_t{1} << 40)) break;
  }
  return out;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

Rng rng_for(const SuiteOptions& o, const std::string& law, const std::string& instance) {
  return Rng(o.seed, fnv1a(law + "/" + instance));
}

/** count dims in [1, max_dim], shrunk until (product)^legs fits the budget. */
std::vector<std::size_t> draw_dims(Rng& rng, std::size_t count, std::size_t max_dim, std::size_t legs,
                                   std::size_t budget = kBudget) {
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < count; ++i) dims.push_back(static_cast<std::size_t>(rng.range(1, static_cast<long>(max_dim))));
  auto product = [&dims] {
    std::size_t p = 1;
    for (auto d : dims) p *= d;
    return p;
  };
  while (ipow(product(), legs) > budget) {
    auto it = std::max_element(dims.begin(), dims.end());
    if (*it == 1) break;
    --*it;
  }
  return dims;
}

class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  void check(const std::string& law, const std::string& instance, bool ok, const std::string& lhs = "",
             const std::string& rhs = "") {
    SuiteEntry& e = entry(law, instance);
    ++e.checks;
    if (!ok && e.pass) {
      e.pass = false;
      e.lhs = lhs;
      e.rhs = rhs;
    }
  }

  void equal(const std::string& law, const std::string& instance, const Matrix& lhs, const Matrix& rhs) {
    if (lhs == rhs) {
      check(law, instance, true);
    } else {
      check(law, instance, false, lhs.compact(), rhs.compact());
    }
  }

  void equal(const std::string& law, const std::string& instance, const SemiringValue& lhs, const SemiringValue& rhs) {
    check(law, instance, lhs == rhs, lhs.to_string(), rhs.to_string());
  }

  /** Runs body; a library error counts as a failure of law. */
  void guard(const std::string& law, const std::string& instance, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& err) {
      check(law, instance, false, std::string("error: ") + err.what(), "");
    }
  }

 private:
  SuiteEntry& entry(const std::string& law, const std::string& instance) {
    const std::string key = law + '\x1f' + instance;
    auto it = index_.find(key);
    if (it != index_.end()) return report_.entries[it->second];
    index_.emplace(key, report_.entries.size());
    SuiteEntry e;
    e.law = law;
    e.instance = instance;
    report_.entries.push_back(e);
    return report_.entries.back();
  }

  SuiteReport& report_;
  std::map<std::string, std::size_t> index_;
};

GroupAction z2_conj() {
  return GroupAction({2}, SemiringDescriptor::gaussian_rational(), {Automorphism::involution()});
}

// ---------------------------------------------------------------------------
// smat-laws

void smat_laws(Recorder& rec, const SuiteOptions& o, const Labelled& actions) {
  const std::size_t samples = o.samples ? o.samples : 50;
  for (const auto& [label, action] : actions) {
    const SemiringDescriptor sr = action.semiring();
    Rng rng = rng_for(o, "smat", label);
    const auto elements = action.group().enumerate();
    for (std::size_t t = 0; t < samples; ++t) {
      rec.guard("smat", label, [&] {
        const auto dims = draw_dims(rng, 4, o.max_dim, 1);
        const std::size_t a = dims[0], b = dims[1], c = dims[2], d = dims[3];
        const Matrix f = random_matrix(rng, sr, b, a), g = random_matrix(rng, sr, c, b), h = random_matrix(rng, sr, d, c);
        const Matrix k = random_matrix(rng, sr, d, c), f2 = random_matrix(rng, sr, b, a);
        const Matrix k0 = random_matrix(rng, sr, c, a);
        rec.equal("compose_associative", label, compose(h, compose(g, f)), compose(compose(h, g), f));
        rec.check("compose_unit", label,
                  compose(Matrix::identity(sr, b), f) == f && compose(f, Matrix::identity(sr, a)) == f);
        rec.equal("compose_bilinear", label, compose(g, mat_add(f, f2)), mat_add(compose(g, f), compose(g, f2)));
        rec.equal("kron_associative", label, kron(kron(f, g), h), kron(f, kron(g, h)));
        rec.equal("kron_bifunctorial", label, compose(kron(g, h), kron(f, k0)), kron(compose(g, f), compose(h, k0)));
        rec.equal("symmetry_natural", label, compose(symmetry(sr, b, d), kron(f, k)), compose(kron(k, f), symmetry(sr, a, c)));
        rec.equal("symmetry_involutive", label, compose(symmetry(sr, b, a), symmetry(sr, a, b)),
                  Matrix::identity(sr, a * b));
        rec.equal("snake", label, compose(kron(cap(sr, a), Matrix::identity(sr, a)), kron(Matrix::identity(sr, a), cup(sr, a))),
                  Matrix::identity(sr, a));
        rec.equal("dagger_contravariant", label, dagger(compose(g, f)), compose(dagger(f), dagger(g)));
        rec.equal("dagger_involutive", label, dagger(dagger(f)), f);
        for (const auto& gamma : elements) {
          rec.equal("action_functorial", label, entrywise_action(action, gamma, compose(g, f)),
                    compose(entrywise_action(action, gamma, g), entrywise_action(action, gamma, f)));
          rec.equal("action_monoidal", label, entrywise_action(action, gamma, kron(f, k)),
                    kron(entrywise_action(action, gamma, f), entrywise_action(action, gamma, k)));
        }
      });
    }
  }
}

// ---------------------------------------------------------------------------
// fold-laws

void fold_laws(Recorder& rec, const SuiteOptions& o, const Labelled& actions) {
  const std::size_t samples = o.samples ? o.samples : 200;
  for (const auto& [label, action] : actions) {
    const FoldContext ctx(action);
    const SemiringDescriptor sr = action.semiring();
    const std::size_t legs = ctx.legs();
    const auto& G = action.group();
    Rng rng = rng_for(o, "fold", label);
    for (std::size_t t = 0; t < samples; ++t) {
      rec.guard("fold", label, [&] {
        const auto dims = draw_dims(rng, 3, o.max_dim, legs);
        const std::size_t a = dims[0], b = dims[1], c = dims[2];
        const Matrix f = random_matrix(rng, sr, b, a), g = random_matrix(rng, sr, c, b);
        const Matrix Ff = fold_morphism(ctx, f);
        rec.equal("fold_compose", label, fold_morphism(ctx, compose(g, f)), compose(fold_morphism(ctx, g), Ff));
        rec.equal("fold_identity", label, fold_morphism(ctx, Matrix::identity(sr, a)),
                  Matrix::identity(sr, fold_object(ctx, a)));
        auto xy = draw_dims(rng, 2, o.max_dim, legs, kBudget / ipow(a * b, legs));
        const std::size_t x = xy[0], y = xy[1];
        if (ipow(a * b * x * y, legs) <= kBudget) {
          const Matrix h = random_matrix(rng, sr, y, x);
          const Matrix Fh = fold_morphism(ctx, h);
          const Matrix box = boxtimes(ctx, Ff, Fh, a, x, b, y);
          rec.equal("fold_tensor", label, fold_morphism(ctx, kron(f, h)), box);
          // the materialized route is slow; a quarter of the instances is plenty
          if (t % 4 == 0 && ipow(a * x, legs) <= 256 && ipow(b * y, legs) <= 256) rec.equal("pi_conjugation", label, boxtimes_via_pi(ctx, Ff, Fh, a, x, b, y), box);
        }
        const auto violation = g_invariance_violation(ctx, Ff, a, b);
        rec.check("tau_invariance", label, !violation.has_value(),
                  violation ? "fails at " + violation->to_string() : "", "");
        const SemiringValue s = random_value(rng, sr);
        const SemiringValue norm = scalar_norm(action, s);
        bool fixed = true;
        for (std::size_t i = 0; i < legs; ++i) fixed = fixed && apply_automorphism(action.automorphism_at(i), norm) == norm;
        rec.equal("fold_scalar_norm", label, fold_morphism(ctx, Matrix::scalar(s)), Matrix::scalar(norm));
        rec.check("scalars_fixed", label, fixed, norm.to_string(), "");
      });
    }
    rec.guard("tau_regular", label, [&] {
      for (std::size_t n = 1; n <= 2 && ipow(n, legs) <= 256; ++n) {
        rec.equal("tau_regular", label, tau(ctx, n, G.identity()), Matrix::identity(sr, fold_object(ctx, n)));
        for (const auto& g : ctx.order())
          for (const auto& h : ctx.order()) {
            rec.equal("tau_regular", label, compose(tau(ctx, n, g), tau(ctx, n, h)), tau(ctx, n, G.op(g, h)));
          }
      }
    });
    rec.guard("pi_coherence", label, [&] {
      if (ipow(4, legs) > 256) return;
      const std::size_t a = 2, b = 1, c = 2;
      const auto lhs = compose(pi(ctx, a * b, c), kron(pi(ctx, a, b), Matrix::identity(sr, fold_object(ctx, c))));
      const auto rhs = compose(pi(ctx, a, b * c), kron(Matrix::identity(sr, fold_object(ctx, a)), pi(ctx, b, c)));
      rec.equal("pi_coherence", label, lhs, rhs);
    });
  }
}

// ---------------------------------------------------------------------------
// env-axioms and cpm-invariance share the list of structures

LabelledEnvs structures(const SuiteOptions& o, const Labelled& actions) {
  LabelledEnvs out;
  if (!o.only_given_envs) {
    for (const auto& [label, action] : actions) out.emplace_back("standard-trace " + label, EnvStructure::standard_trace(action));
    const auto z2 = z2_conj();
    const auto zz = action_product(z2, z2);
    out.emplace_back("caps z2-conj-gaussian", EnvStructure::caps(z2, 1));
    out.emplace_back("caps z2xz2-conj-gaussian", EnvStructure::caps(zz, 2));
    out.emplace_back("double-dilation", env_product(EnvStructure::caps(z2, 1), EnvStructure::caps(z2, 1)));
    out.emplace_back("double-mixing", double_mixing(z2, z2));
  }
  for (const auto& e : o.envs) out.push_back(e);
  return out;
}

void env_axioms(Recorder& rec, const SuiteOptions& o, const Labelled& actions) {
  for (const auto& [label, env] : structures(o, actions)) {
    rec.guard("env_axioms", label, [&] {
      for (const auto& e : verify_env_axioms(env, o.max_dim)) {
        rec.check("env_" + e.condition, label, e.pass, "at " + e.object + " gamma " + e.gamma + ": " + e.lhs, e.rhs);
      }
    });
  }
}

void cpm_invariance(Recorder& rec, const SuiteOptions& o, const Labelled& actions) {
  const std::size_t samples = o.samples ? o.samples : 30;
  for (const auto& [label, env] : structures(o, actions)) {
    const FoldContext& ctx = env.context();
    const SemiringDescriptor sr = ctx.semiring();
    const std::size_t legs = ctx.legs();
    Rng rng = rng_for(o, "cpm", label);
    // ancilla sizes with at least one effect
    std::vector<std::size_t> ancillas;
    for (std::size_t E = 1; E <= o.max_dim; ++E) {
      try {
        if (ipow(E, legs) <= 256 && !env.effects(E).empty()) ancillas.push_back(E);
      } catch (const Error&) {
      }
    }
    auto draw = [&](std::size_t A, std::size_t B) {
      std::size_t E = ancillas[rng.below(ancillas.size())];
      while (E > 1 && ipow(A * B * E, legs) > kBudget) E = 1;
      const auto& effects = env.effects(E);
      const Matrix effect = effects[rng.below(effects.size())];
      return make_cpm_morphism(env, random_matrix(rng, sr, B * E, A), B, E, effect);
    };
    for (std::size_t t = 0; t < samples && !ancillas.empty(); ++t) {
      rec.guard("cpm", label, [&] {
        const auto dims = draw_dims(rng, 3, std::min<std::size_t>(o.max_dim, 2), legs, 4096);
        const std::size_t A = dims[0], B = dims[1], C = dims[2];
        const CpmMorphism m1 = draw(A, B);
        rec.check("cpm_normal_form", label, m1.consistent());
        const auto violation = g_invariance_violation(ctx, m1.realized, A, B);
        rec.check("cpm_invariance", label, !violation.has_value(),
                  violation ? "fails at " + violation->to_string() + " for " + m1.realized.compact() : "", "");
        rec.check("folded_invariance", label, check_g_invariance(ctx, fold_morphism(ctx, m1.f), A, B * m1.E));
        const CpmMorphism m2 = draw(B, C);
        if (ipow(A * C * m1.E * m2.E, legs) <= kBudget) {
          rec.guard("cpm_composition", label, [&] {
            const CpmMorphism m = compose_cpm(m2, m1);
            rec.equal("cpm_composition", label, m.realized, compose(m2.realized, m1.realized));
          });
        }
        if (legs <= 2 && A * B * C <= 4) {
          rec.guard("cpm_interchange", label, [&] {
            const CpmMorphism n1 = draw(A, B), n2 = draw(B, C);
            const Matrix lhs = compose(boxtimes(ctx, m2.realized, n2.realized, B, B, C, C),
                                       boxtimes(ctx, m1.realized, n1.realized, A, A, B, B));
            const Matrix rhs = boxtimes(ctx, compose(m2.realized, m1.realized), compose(n2.realized, n1.realized), A, A, C, C);
            rec.equal("cpm_interchange", label, lhs, rhs);
            rec.equal("cpm_boxtimes", label, boxtimes_cpm(m1, n1).realized, boxtimes(ctx, m1.realized, n1.realized, A, A, B, B));
          });
        }
      });
    }
  }
  if (!o.only_given_envs) {
    const auto z2 = z2_conj();
    const FoldContext ctx(z2);
    const SemiringDescriptor Cq = z2.semiring();
    const Matrix i = Matrix::from_strings(Cq, 1, 1, {"i"});
    rec.check("invariance_detects_violation", "z2-conj-gaussian", !check_g_invariance(ctx, i, 1, 1));
    const auto caps = EnvStructure::caps(z2, 1);
    Rng rng = rng_for(o, "positivity", "z2-conj-gaussian");
    const std::size_t count = o.samples ? o.samples : 100;
    for (std::size_t t = 0; t < count; ++t) {
      rec.guard("cpm_positivity", "caps z2-conj-gaussian", [&] {
        const std::size_t E = static_cast<std::size_t>(rng.range(1, 3));
        const Matrix g = random_matrix(rng, Cq, 2, E);
        Matrix f(Cq, 2 * E, 1);
        for (std::size_t b = 0; b < 2; ++b)
          for (std::size_t e = 0; e < E; ++e) f.set(b * E + e, 0, g(b, e));
        const CpmMorphism m = make_cpm_morphism(caps, f, 2, E, cap(Cq, E));
        const Matrix expected = compose(g, dagger(g));
        Matrix reshaped(Cq, 2, 2);
        for (std::size_t r = 0; r < 2; ++r)
          for (std::size_t c = 0; c < 2; ++c) reshaped.set(r, c, m.realized(r * 2 + c, 0));
        rec.equal("cpm_positivity", "caps z2-conj-gaussian", reshaped, expected);
      });
    }
  }
}

// ---------------------------------------------------------------------------
// monad-laws

void monad_laws(Recorder& rec, const SuiteOptions& o, const Labelled& actions, bool default_actions) {
  const std::size_t samples = o.samples ? o.samples : 100;
  std::vector<std::pair<std::string, std::pair<GroupAction, GroupAction>>> pairs;
  if (default_actions) {
    pairs = preset_action_pairs();
  } else {
    for (const auto& [label, action] : actions) pairs.push_back({label + " ⊙ " + label, {action, action}});
  }
  for (const auto& [label, pair] : pairs) {
    const auto& [phi, phi_prime] = pair;
    const std::size_t legs = phi.group().size() * phi_prime.group().size();
    Rng rng = rng_for(o, "monad", label);
    for (std::size_t t = 0; t < samples; ++t) {
      rec.guard("fold_composition", label, [&] {
        const auto dims = draw_dims(rng, 2, o.max_dim, legs);
        const Matrix f = random_matrix(rng, phi.semiring(), dims[0], dims[1]);
        rec.check("fold_composition", label, fold_composition_check(phi, phi_prime, f), f.compact(), "");
      });
    }
  }
  for (const auto& [label, action] : actions) {
    rec.guard("unit", label, [&] {
      const GroupAction unit = GroupAction::trivial(action.semiring());
      rec.check("action_unit", label, action_product(unit, action) == action && action_product(action, unit) == action);
      const EnvStructure env = EnvStructure::standard_trace(action);
      const EnvStructure trivial = EnvStructure::trivial(action.semiring());
      for (std::size_t n = 1; n <= o.max_dim && ipow(n, action.group().size()) <= 4096; ++n) {
        rec.check("env_unit", label,
                  env_product(env, trivial).effects(n) == env.effects(n) &&
                      env_product(trivial, env).effects(n) == env.effects(n));
      }
    });
  }
  rec.guard("env_product_associative", "z2-conj-gaussian", [&] {
    const auto z2 = z2_conj();
    const auto a = EnvStructure::caps(z2, 1), b = EnvStructure::standard_trace(z2);
    const auto c = EnvStructure::standard_trace(GroupAction({2}, z2.semiring(), {Automorphism::identity()}));
    const auto left = env_product(env_product(a, b), c), right = env_product(a, env_product(b, c));
    rec.check("env_product_associative", "z2-conj-gaussian", left.action() == right.action());
    for (std::size_t n = 1; n <= 2; ++n) {
      std::set<std::string> l, r;
      for (const auto& x : left.effects(n)) l.insert(x.compact());
      for (const auto& x : right.effects(n)) r.insert(x.compact());
      rec.check("env_product_associative", "z2-conj-gaussian", l == r);
    }
  });
}

// ---------------------------------------------------------------------------
// theory-laws

struct Witnessed {
  Matrix M;
  std::vector<std::vector<SemiringValue>> witnesses;
  std::size_t terms = 0;
};

Witnessed random_witnessed(Rng& rng, const GroupAction& action, std::size_t m, std::size_t n) {
  const SemiringDescriptor sr = action.semiring();
  Witnessed out{Matrix(sr, m, n), {}, 0};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<SemiringValue> w;
      if (rng.below(3) != 0) w.push_back(random_value(rng, sr));
      SemiringValue v = SemiringValue::zero(sr);
      for (const auto& x : w) v += scalar_norm(action, x);
      out.M.set(i, j, v);
      out.terms += w.size();
      out.witnesses.push_back(std::move(w));
    }
  return out;
}

/** Witnesses of M2 * M1: norms are multiplicative. */
Witnessed witnessed_product(const Witnessed& w2, const Witnessed& w1) {
  const std::size_t k = w2.M.rows(), m = w2.M.cols(), n = w1.M.cols();
  Witnessed out{compose(w2.M, w1.M), {}, 0};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<SemiringValue> w;
      for (std::size_t l = 0; l < m; ++l)
        for (const auto& y : w2.witnesses[i * m + l])
          for (const auto& x : w1.witnesses[l * n + j]) w.push_back(y * x);
      out.terms += w.size();
      out.witnesses.push_back(std::move(w));
    }
  return out;
}

void theory_laws(Recorder& rec, const SuiteOptions& o, const Labelled& actions) {
  const std::size_t samples = o.samples ? o.samples : 20;
  for (const auto& [label, action] : actions) {
    const EnvStructure env = EnvStructure::standard_trace(action);
    const FoldContext& ctx = env.context();
    const SemiringDescriptor sr = action.semiring();
    const std::size_t legs = ctx.legs();
    rec.guard("decoherence_idempotent", label, [&] {
      for (std::size_t n = 1; n <= std::max<std::size_t>(o.max_dim, 4) && ipow(n, legs) <= 256; ++n) {
        const Matrix d = decoherence(ctx, n).matrix;
        rec.equal("decoherence_idempotent", label, compose(d, d), d);
      }
    });
    Rng rng = rng_for(o, "theory", label);
    for (std::size_t t = 0; t < samples; ++t) {
      rec.guard("born", label, [&] {
        const std::size_t n = draw_dims(rng, 1, o.max_dim, legs, 256)[0];
        const Matrix psi = random_matrix(rng, sr, n, 1);
        const BornReport born = born_report(ctx, TestFamily::sharp(ctx, n), psi);
        SemiringValue sum = SemiringValue::zero(sr);
        for (std::size_t i = 0; i < n; ++i) {
          rec.equal("born_sharp_norm", label, born.probabilities[i], scalar_norm(action, psi(i, 0)));
          sum += born.probabilities[i];
        }
        rec.equal("born_total", label, sum, born.total);
      });
      rec.guard("karoubi", label, [&] {
        auto dims = draw_dims(rng, 3, o.max_dim, legs, 4096);
        const std::size_t n = dims[0], m = dims[1], k = dims[2];
        const Witnessed w1 = random_witnessed(rng, action, m, n), w2 = random_witnessed(rng, action, k, m);
        const Witnessed w21 = witnessed_product(w2, w1);
        auto fits = [&](const Witnessed& w) {
          return ipow(w.M.rows() * std::max<std::size_t>(w.terms, 1) * w.M.cols(), legs) <= (std::size_t{1} << 18);
        };
        if (!fits(w1) || !fits(w2) || !fits(w21)) return;
        const CpmMorphism e1 = classical_embed(env, w1.M, w1.witnesses);
        const CpmMorphism e2 = classical_embed(env, w2.M, w2.witnesses);
        rec.equal("karoubi_roundtrip", label, classical_extract(ctx, e1.realized, n, m), w1.M);
        rec.equal("karoubi_functorial", label, compose(e2.realized, e1.realized),
                  classical_embed(env, w21.M, w21.witnesses).realized);
        rec.equal("karoubi_identity", label, classical_embed(env, Matrix::identity(sr, n)).realized,
                  decoherence(ctx, n).matrix);
      });
      rec.guard("decohered_classical", label, [&] {
        const std::size_t n = draw_dims(rng, 1, std::min<std::size_t>(o.max_dim, 2), legs, 16)[0];
        const CpmMorphism m = make_cpm_morphism(env, random_matrix(rng, sr, n * n, n), n, n, discard_effect(ctx, n));
        const Matrix d = decoherence(ctx, n).matrix;
        const Matrix F = compose(d, compose(m.realized, d));
        rec.check("decohered_classical", label, is_classical(ctx, F, n, n));
        if (sr.is_finite()) {
          bool all = true;
          const Matrix R = classical_extract(ctx, F, n, n);
          for (const auto& x : R.entries()) all = all && membership_witness(ctx, x, 4).has_value();
          rec.check("extracted_in_scalars", label, all);
        }
      });
    }
    if (sr.is_finite()) {
      rec.guard("scalars_closed", label, [&] {
        const auto R = enumerate_scalars(ctx);
        std::set<std::string> keys;
        for (const auto& x : R) keys.insert(x.to_string());
        bool ok = true;
        for (const auto& y : enumerate_elements(sr)) ok = ok && keys.count(scalar_norm(action, y).to_string());
        for (const auto& x : R)
          for (const auto& y : R) ok = ok && keys.count((x + y).to_string());
        rec.check("scalars_closed", label, ok);
      });
    }
  }
  rec.guard("scalars_gf4", "zk-frobenius-gf(2^2)", [&] {
    const FoldContext gf4(action_preset("zk-frobenius-gf(2^2)"));
    std::vector<std::string> r;
    for (const auto& x : enumerate_scalars(gf4)) r.push_back(x.to_string());
    rec.check("scalars_gf4", "zk-frobenius-gf(2^2)", r == std::vector<std::string>{"0", "1"}, "", "");
  });
  rec.guard("born_traditional", "z2-conj-gaussian", [&] {
    const FoldContext z2(z2_conj());
    const SemiringDescriptor C = z2.semiring();
    const BornReport born = born_report(z2, TestFamily::sharp(z2, 2), Matrix::from_strings(C, 2, 1, {"3/5", "4/5i"}));
    rec.check("born_traditional", "z2-conj-gaussian",
              born.normalized && born.probabilities[0].to_string() == "9/25" && born.probabilities[1].to_string() == "16/25");
  });
}

}  // namespace

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.pass; }));
}

std::size_t SuiteReport::failed() const { return entries.size() - passed(); }

std::vector<std::string> suite_names() {
  return {"smat-laws", "fold-laws", "env-axioms", "cpm-invariance", "monad-laws", "theory-laws", "all"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw ParseError("unknown suite '" + name + "'");
  SuiteReport report;
  report.suite = name;
  report.seed = options.seed;
  report.max_dim = options.max_dim;
  const bool default_actions = options.actions.empty();
  const Labelled actions = default_actions ? default_action_matrix() : options.actions;
  Recorder rec(report);
  const bool all = name == "all";
  if (all || name == "smat-laws") smat_laws(rec, options, actions);
  if (all || name == "fold-laws") fold_laws(rec, options, actions);
  if (all || name == "env-axioms") env_axioms(rec, options, actions);
  if (all || name == "cpm-invariance") cpm_invariance(rec, options, actions);
  if (all || name == "monad-laws") monad_laws(rec, options, actions, default_actions);
  if (all || name == "theory-laws") theory_laws(rec, options, actions);
  return report;
}

json suite_report_to_json(const SuiteReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json j{{"law", e.law}, {"instance", e.instance}, {"checks", e.checks}, {"pass", e.pass}};
    if (!e.pass) {
      j["lhs"] = e.lhs;
      j["rhs"] = e.rhs;
    }
    entries.push_back(std::move(j));
  }
  return json{{"suite", report.suite},
              {"seed", report.seed},
              {"max_dim", report.max_dim},
              {"entries", std::move(entries)},
              {"summary", {{"passed", report.passed()}, {"failed", report.failed()}, {"total", report.entries.size()}}}};
}

}  // namespace hocpm
