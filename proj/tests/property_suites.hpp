#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hermitia/builders.hpp"
#include "hermitia/manifest.hpp"

namespace properties {

using namespace hermitia;

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double seconds = 0.0;
};

struct Fixture {
  const LieAlgebra* g;
  const ComplexStructure* j;  // may be null
};

/// Random form with up to `terms` monomials of degree <= max_degree and small Gaussian-integer coefficients.
inline Form random_form(std::mt19937_64& rng, const LieAlgebra& g, unsigned terms, unsigned max_degree,
                        int fixed_degree = -1) {
  const unsigned n = g.dim();
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<unsigned> idx(0, n - 1);
  Form f(g.space());
  const Scalar iu = Scalar::imaginary_unit();
  for (unsigned t = 0; t < terms; ++t) {
    const unsigned k = fixed_degree >= 0 ? static_cast<unsigned>(fixed_degree) : deg(rng);
    Blade b = 0;
    while (blade_degree(b) < k) b |= Blade(1) << idx(rng);
    const Scalar c = Scalar(static_cast<long>(coef(rng))) + iu * Scalar(static_cast<long>(coef(rng)));
    if (!c.is_zero()) f += Form::monomial(g.space(), b, c);
  }
  return f;
}

inline Form homogeneous_component(const Form& a, unsigned k) { return a.component(k); }

/// Runs `body` on `cases` seeded draws, counting false results and exceptions as failures.
inline Outcome run(const std::string& name, std::size_t cases, std::uint64_t seed,
                   const std::function<bool(std::mt19937_64&, std::size_t)>& body) {
  Outcome o{name, cases, 0, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    try {
      if (!body(rng, c)) ++o.failures;
    } catch (const std::exception&) {
      ++o.failures;
    }
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

/// Builtin algebras with their integrable structures plus the suspension model.
class Fixtures {
 public:
  Fixtures() : suspension_(sasaki_kahler_suspension(4)) {
    for (const char* name : {"AT4", "fp_solv8", "pseudoHK12"}) models_.push_back(std::make_unique<Model>(builtin(name)));
    suspension_j_ = std::make_unique<ComplexStructure>(suspension_.algebra, "I", suspension_.structure);
    fixtures_.push_back({&models_[0]->algebra(), &models_[0]->structure("J")});
    fixtures_.push_back({&models_[1]->algebra(), &models_[1]->structure("I")});
    fixtures_.push_back({&models_[2]->algebra(), &models_[2]->structure("I")});
    fixtures_.push_back({&models_[2]->algebra(), &models_[2]->structure("J")});
    fixtures_.push_back({&suspension_.algebra, suspension_j_.get()});
  }
  const std::vector<Fixture>& all() const { return fixtures_; }
  const Fixture& pick(std::mt19937_64& rng) const { return fixtures_[rng() % fixtures_.size()]; }

 private:
  std::vector<std::unique_ptr<Model>> models_;
  SuspensionModel suspension_;
  std::unique_ptr<ComplexStructure> suspension_j_;
  std::vector<Fixture> fixtures_;
};

inline std::vector<Outcome> run_all(std::size_t cases, std::uint64_t seed) {
  Fixtures fx;
  std::vector<Outcome> out;

  out.push_back(run("d^2 = 0", cases, seed, [&](std::mt19937_64& rng, std::size_t) {
    const Fixture& f = fx.pick(rng);
    const Form a = random_form(rng, *f.g, 3, 4);
    return f.g->d(f.g->d(a)).is_zero();
  }));

  out.push_back(run("Leibniz", cases, seed + 1, [&](std::mt19937_64& rng, std::size_t) {
    const Fixture& f = fx.pick(rng);
    const unsigned p = static_cast<unsigned>(rng() % 3), q = static_cast<unsigned>(rng() % 3);
    const Form a = random_form(rng, *f.g, 2, 0, static_cast<int>(p));
    const Form b = random_form(rng, *f.g, 2, 0, static_cast<int>(q));
    const Form lhs = f.g->d(wedge(a, b));
    const Form rhs = wedge(f.g->d(a), b) + wedge(a, f.g->d(b)).scaled(Scalar(p % 2 ? -1L : 1L));
    return lhs == rhs;
  }));

  out.push_back(run("del^2 = delbar^2 = del delbar + delbar del = 0", cases, seed + 2,
                    [&](std::mt19937_64& rng, std::size_t) {
                      const Fixture& f = fx.pick(rng);
                      const ComplexStructure& j = *f.j;
                      const Form a = random_form(rng, *f.g, 2, 3);
                      const Form da = j.del(a), ba = j.delbar(a);
                      return j.del(da).is_zero() && j.delbar(ba).is_zero() && (j.del(ba) + j.delbar(da)).is_zero() &&
                             da + ba == f.g->d(a);
                    }));

  out.push_back(run("bidegree components sum back", cases, seed + 3, [&](std::mt19937_64& rng, std::size_t) {
    const Fixture& f = fx.pick(rng);
    const Form a = random_form(rng, *f.g, 3, 4);
    Form sum(a.space());
    for (const auto& [bd, c] : f.j->bidegree(a)) {
      if (!f.j->is_pure(c, bd.first, bd.second)) return false;
      sum += c;
    }
    return sum == a;
  }));

  out.push_back(run("conjugation is an involution swapping (p,q) and (q,p)", cases, seed + 4,
                    [&](std::mt19937_64& rng, std::size_t) {
                      const Fixture& f = fx.pick(rng);
                      const Form a = random_form(rng, *f.g, 3, 4);
                      if (a.conj().conj() != a) return false;
                      const auto parts = f.j->bidegree(a);
                      const auto conj_parts = f.j->bidegree(a.conj());
                      if (parts.size() != conj_parts.size()) return false;
                      for (const auto& [bd, c] : parts) {
                        auto it = conj_parts.find({bd.second, bd.first});
                        if (it == conj_parts.end() || it->second != c.conj()) return false;
                      }
                      return true;
                    }));
  return out;
}

/// Further identities; not part of the fixed acceptance list.
inline std::vector<Outcome> run_extra(std::size_t cases, std::uint64_t seed) {
  Fixtures fx;
  std::vector<Outcome> out;
  out.push_back(run("wedge associativity and graded commutativity", cases, seed, [&](std::mt19937_64& rng,
                                                                                     std::size_t) {
    const Fixture& f = fx.pick(rng);
    const unsigned p = static_cast<unsigned>(rng() % 3), q = static_cast<unsigned>(rng() % 3);
    const Form a = random_form(rng, *f.g, 2, 0, static_cast<int>(p));
    const Form b = random_form(rng, *f.g, 2, 0, static_cast<int>(q));
    const Form c = random_form(rng, *f.g, 2, 3);
    return wedge(wedge(a, b), c) == wedge(a, wedge(b, c)) &&
           wedge(a, b) == wedge(b, a).scaled(Scalar((p * q) % 2 ? -1L : 1L));
  }));
  out.push_back(run("dd^c = 2i del delbar and d dc = -dc d", cases, seed + 1, [&](std::mt19937_64& rng, std::size_t) {
    const Fixture& f = fx.pick(rng);
    const ComplexStructure& j = *f.j;
    const Form a = random_form(rng, *f.g, 2, 3);
    const Form ddc = f.g->d(j.dc(a));
    return ddc == j.del(j.delbar(a)).scaled(Scalar::imaginary_unit() * Scalar(2L)) && ddc == -j.dc(f.g->d(a));
  }));
  out.push_back(run("dc is real on real forms", cases, seed + 2, [&](std::mt19937_64& rng, std::size_t) {
    const Fixture& f = fx.pick(rng);
    const Form a = random_form(rng, *f.g, 2, 3);
    const Form r = a + a.conj();
    const Form x = f.j->dc(r);
    return x.conj() == x;
  }));
  out.push_back(run("top coefficient is linear", cases, seed + 3, [&](std::mt19937_64& rng, std::size_t) {
    const Fixture& f = fx.pick(rng);
    const unsigned n = f.g->dim();
    const Form vol = Form::monomial(f.g->space(), n == 64 ? ~Blade(0) : (Blade(1) << n) - 1, Scalar(1L));
    const Form a = random_form(rng, *f.g, 2, 0, static_cast<int>(n)) + random_form(rng, *f.g, 2, 3);
    const Form b = random_form(rng, *f.g, 2, 0, static_cast<int>(n));
    const Scalar s = Scalar(static_cast<long>(rng() % 7) - 3);
    return top_coefficient(a + b.scaled(s), vol) == top_coefficient(a, vol) + s * top_coefficient(b, vol);
  }));
  return out;
}

}  // namespace properties
