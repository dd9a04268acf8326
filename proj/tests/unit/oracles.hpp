#pragma once

// Reference computations used to cross-check the library. They share only
// the basic data types (Rational, Generator, Vector) and the defining
// bracket with the code under test.

#include "hv/induced.hpp"
#include "hv/zoo.hpp"

#include <algorithm>
#include <deque>
#include <vector>

namespace oracle {

using hv::Generator;
using hv::Rational;

/// Dense coefficient vector, index = exponent.
using Dense = std::vector<Rational>;

inline void trim(Dense& f) {
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}

inline Dense mul(const Dense& f, const Dense& g) {
  if (f.empty() || g.empty())
    return {};
  Dense out(f.size() + g.size() - 1, Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] += f[i] * g[j];
  trim(out);
  return out;
}

inline Dense add(Dense f, const Dense& g) {
  if (f.size() < g.size())
    f.resize(g.size(), Rational(0));
  for (std::size_t i = 0; i < g.size(); ++i)
    f[i] += g[i];
  trim(f);
  return f;
}

inline Dense scale(Dense f, const Rational& c) {
  for (auto& x : f)
    x *= c;
  trim(f);
  return f;
}

/// f(t - m) by Horner's rule in the linear polynomial t - m.
inline Dense shift(const Dense& f, long m) {
  Dense out;
  const Dense lin{Rational(-m), Rational(1)};
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    out = add(mul(out, lin), Dense{*it});
  trim(out);
  return out;
}

inline Rational eval(const Dense& f, const Rational& c) {
  Rational acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    acc = acc * c + *it;
  return acc;
}

inline Rational power(const Rational& x, long m) {
  Rational out = 1;
  for (long i = 0; i < (m < 0 ? -m : m); ++i)
    out *= x;
  return m < 0 ? Rational(1 / out) : out;
}

inline hv::Polynomial to_poly(const Dense& f) {
  hv::Polynomial p;
  for (std::size_t i = 0; i < f.size(); ++i)
    p.add(static_cast<long>(i), f[i]);
  return p;
}

inline Dense from_poly(const hv::Polynomial& p) {
  Dense out;
  for (const auto& [e, c] : p) {
    if (out.size() <= static_cast<std::size_t>(e))
      out.resize(static_cast<std::size_t>(e) + 1, Rational(0));
    out[static_cast<std::size_t>(e)] = c;
  }
  return out;
}

/// L_m f = lambda^m (t - m alpha) f(t - m), I_m f = lambda^m beta f(t - m), C_k f = 0.
inline Dense omega_act(const hv::OmegaParams& p, const Generator& g, const Dense& f) {
  if (g.kind == hv::GenKind::C)
    return {};
  const Dense sh = shift(f, g.index);
  const Rational lm = power(p.lambda, g.index);
  if (g.kind == hv::GenKind::L)
    return scale(mul(Dense{-Rational(g.index) * p.alpha, Rational(1)}, sh), lm);
  return scale(sh, lm * p.beta);
}

/// Coefficient and target index of a generator on v_n in A(lambda, alpha, beta).
inline std::pair<Rational, long> a_series_act(const hv::ASeriesParams& p, const Generator& g, long n) {
  if (g.kind == hv::GenKind::C)
    return {Rational(0), n};
  if (g.kind == hv::GenKind::L)
    return {p.lambda + n + Rational(g.index) * p.alpha, n + g.index};
  return {p.beta, n + g.index};
}

// ---------------------------------------------------------------------------
// Naive PBW rewriting: move S-letters to the right end (one transposition at
// a time), evaluate them on the cyclic vector, and bubble-sort free letters.

using Word = std::vector<Generator>;

inline hv::Label canonical_label(const Word& sorted) {
  hv::PBWMonomial mono;
  for (const auto& g : sorted) {
    if (!mono.factors.empty() && mono.factors.back().first == g)
      ++mono.factors.back().second;
    else
      mono.factors.push_back({g, 1});
  }
  return mono.to_label();
}

inline hv::Vector naive_apply(const hv::InducedModule& m, const Word& word, const Rational& coeff = 1) {
  const auto& split = m.split();
  auto is_free = [&](const Generator& g) {
    if (g.kind == hv::GenKind::C)
      return false;
    if (g == Generator::I(0) && split.central.i0)
      return false;
    return split.is_free(g);
  };
  std::deque<std::pair<Word, Rational>> work{{word, coeff}};
  hv::Vector out;
  auto push_swap = [&](const Word& w, std::size_t j, const Rational& c) {
    Word swapped = w;
    std::swap(swapped[j], swapped[j + 1]);
    work.emplace_back(swapped, c);
    const hv::Element br = hv::bracket(hv::Element(w[j]), hv::Element(w[j + 1]));
    for (const auto& [g, k] : br.terms()) {
      Word shorter(w.begin(), w.begin() + static_cast<long>(j));
      shorter.push_back(g);
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(j) + 2, w.end());
      work.emplace_back(shorter, c * k);
    }
  };
  while (!work.empty()) {
    auto [w, c] = work.front();
    work.pop_front();
    if (c == 0)
      continue;
    std::optional<std::size_t> bound;
    for (std::size_t j = w.size(); j-- > 0;)
      if (!is_free(w[j])) {
        bound = j;
        break;
      }
    if (bound) {
      const std::size_t j = *bound;
      if (j + 1 < w.size()) {
        push_swap(w, j, c);
        continue;
      }
      const Generator g = w.back();
      Word rest(w.begin(), w.end() - 1);
      if (g.kind == hv::GenKind::C) {
        work.emplace_back(rest, c * split.central.value(g.index));
      } else if (g == Generator::I(0) && split.central.i0) {
        work.emplace_back(rest, c * *split.central.i0);
      } else {
        const hv::GeneratorSplit s = split.resolve(g);
        work.emplace_back(rest, c * s.character);
        for (const auto& [f, k] : s.free_part.terms()) {
          Word longer = rest;
          longer.push_back(f);
          work.emplace_back(longer, c * k);
        }
      }
      continue;
    }
    std::optional<std::size_t> inversion;
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
      if (w[j + 1] < w[j]) {
        inversion = j;
        break;
      }
    if (inversion)
      push_swap(w, *inversion, c);
    else
      out.add(canonical_label(w), c);
  }
  return out;
}

/// Word of a PBW monomial in left-to-right order.
inline Word word_of(const hv::PBWMonomial& mono) {
  Word w;
  for (const auto& [g, e] : mono.factors)
    for (unsigned i = 0; i < e; ++i)
      w.push_back(g);
  return w;
}

/// g applied to the monomial, computed by naive rewriting of g * word.
inline hv::Vector naive_act(const hv::InducedModule& m, const Generator& g, const hv::PBWMonomial& mono) {
  Word w{g};
  const Word tail = word_of(mono);
  w.insert(w.end(), tail.begin(), tail.end());
  return naive_apply(m, w);
}

} // namespace oracle
