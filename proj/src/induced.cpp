#include "hv/induced.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace hv {

GeneratorSplit resolve_element(const SplitDatum& split, const Element& x) {
  GeneratorSplit out;
  for (const auto& [g, c] : x) {
    if (split.is_free(g)) {
      out.free_part.add(g, c);
      continue;
    }
    GeneratorSplit s = split.resolve(g);
    out.free_part += c * s.free_part;
    out.character += c * s.character;
  }
  return out;
}

CheckReport validate_character(const SplitDatum& split, long max_mode) {
  nlohmann::json params = {{"split", split.name}, {"max_mode", max_mode}};
  const auto basis = split.subalgebra_basis(max_mode);
  for (const auto& x : basis) {
    GeneratorSplit s = resolve_element(split, x);
    for (const auto& [g, c] : s.free_part)
      if (!split.is_free(g))
        return CheckReport::fail("character", params,
                                 {{"kind", "resolution not free"}, {"element", to_string(x)}});
  }
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      Element br = bracket(basis[a], basis[b]);
      GeneratorSplit s = resolve_element(split, br);
      if (!s.free_part.is_zero())
        return CheckReport::fail("character", params,
                                 {{"kind", "not closed"},
                                  {"pair", {to_string(basis[a]), to_string(basis[b])}},
                                  {"free_part", to_string(s.free_part)}});
      if (s.character != 0)
        return CheckReport::fail("character", params,
                                 {{"kind", "character nonzero on bracket"},
                                  {"pair", {to_string(basis[a]), to_string(basis[b])}},
                                  {"value", to_string(s.character)}});
    }
  return CheckReport::pass("character", params);
}

// ---------------------------------------------------------------------------

PBWMonomial PBWMonomial::from_label(const Label& label) {
  if (label.size() % 3 != 0)
    throw LabelSchemeMismatch("PBW label length must be a multiple of 3");
  PBWMonomial m;
  for (std::size_t i = 0; i < label.size(); i += 3) {
    if (label[i] != static_cast<long>(GenKind::I) && label[i] != static_cast<long>(GenKind::L))
      throw LabelSchemeMismatch("PBW label has a non L/I factor");
    if (label[i + 2] <= 0)
      throw LabelSchemeMismatch("PBW label has a nonpositive exponent");
    m.factors.push_back({Generator{static_cast<GenKind>(label[i]), label[i + 1]},
                         static_cast<unsigned>(label[i + 2])});
  }
  return m;
}

Label PBWMonomial::to_label() const {
  Label out;
  out.reserve(factors.size() * 3);
  for (const auto& [g, e] : factors) {
    out.push_back(static_cast<long>(g.kind));
    out.push_back(g.index);
    out.push_back(static_cast<long>(e));
  }
  return out;
}

long PBWMonomial::degree() const {
  long d = 0;
  for (const auto& [g, e] : factors)
    d += static_cast<long>(e) * (1 + std::labs(g.index));
  return d;
}

bool PBWMonomial::is_canonical() const {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].second == 0 || factors[i].first.kind == GenKind::C)
      return false;
    if (i > 0 && !(factors[i - 1].first < factors[i].first))
      return false;
  }
  return true;
}

std::string to_string(const PBWMonomial& m) {
  if (m.factors.empty())
    return "1";
  std::string out;
  for (const auto& [g, e] : m.factors) {
    if (!out.empty())
      out += ' ';
    out += to_string(g);
    if (e != 1)
      out += "^" + std::to_string(e);
  }
  return out;
}

PBWMonomial parse_monomial(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  PBWMonomial m;
  std::vector<std::string> toks;
  while (in >> tok)
    toks.push_back(tok);
  if (toks.size() == 1 && toks[0] == "1")
    return m;
  if (toks.empty())
    throw ParseError("empty monomial");
  for (const auto& t : toks) {
    auto caret = t.find('^');
    Generator g = parse_generator(t.substr(0, caret));
    unsigned e = 1;
    if (caret != std::string::npos) {
      const std::string ex = t.substr(caret + 1);
      if (ex.empty() || !std::all_of(ex.begin(), ex.end(), [](unsigned char ch) { return std::isdigit(ch); }))
        throw ParseError("bad exponent in monomial factor '" + t + "'");
      e = static_cast<unsigned>(std::stoul(ex));
    }
    if (e == 0)
      continue;
    if (!m.factors.empty() && m.factors.back().first == g)
      m.factors.back().second += e;
    else
      m.factors.push_back({g, e});
  }
  if (!m.is_canonical())
    throw ParseError("monomial '" + std::string(text) + "' is not in canonical order");
  return m;
}

std::size_t default_rewrite_budget() {
  constexpr std::size_t kDefault = 1'000'000;
  const char* env = std::getenv("HV_REWRITE_BUDGET");
  if (!env || !*env)
    return kDefault;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0)
    return kDefault;
  return static_cast<std::size_t>(v);
}

// ---------------------------------------------------------------------------

InducedModule::InducedModule(SplitDatum split, std::size_t rewrite_budget, long validation_modes)
    : Module(split.central), split_(std::move(split)), budget_(rewrite_budget) {
  CheckReport rep = validate_character(split_, validation_modes);
  if (!rep.passed())
    throw std::invalid_argument("split datum " + split_.name + " is not a character: " + rep.witness.dump());
}

bool InducedModule::valid_label(const Label& label) const {
  if (label.size() % 3 != 0)
    return false;
  try {
    PBWMonomial m = PBWMonomial::from_label(label);
    if (!m.is_canonical())
      return false;
    return std::all_of(m.factors.begin(), m.factors.end(), [&](const auto& f) { return split_.is_free(f.first); });
  } catch (const LabelSchemeMismatch&) {
    return false;
  }
}

std::string InducedModule::format_label(const Label& label) const { return to_string(PBWMonomial::from_label(label)); }

Vector InducedModule::apply_monomial(const Module& m, const PBWMonomial& mono, const Vector& target) {
  Vector v = target;
  for (auto it = mono.factors.rbegin(); it != mono.factors.rend(); ++it)
    for (unsigned e = 0; e < it->second; ++e)
      v = m.act(it->first, v);
  return v;
}

long InducedModule::top_free_mode(GenKind kind, long window) const {
  long top = -window - 1;
  for (long m = -window; m <= window; ++m) {
    if (!split_.is_free(Generator{kind, m}))
      break;
    top = m;
  }
  return top;
}

void InducedModule::check_budget(std::size_t& steps) const {
  if (++steps > budget_)
    throw RewriteBudgetExceeded("rewrite budget of " + std::to_string(budget_) + " steps exceeded");
}

InducedModule::WordVector InducedModule::straighten(const Generator& g, const Word& w, std::size_t& steps) const {
  auto key = std::make_pair(g, w);
  {
    std::lock_guard lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end())
      return it->second;
  }
  check_budget(steps);

  WordVector out;
  auto add = [&out](const Word& word, const Rational& c) {
    if (c == 0)
      return;
    auto [it, inserted] = out.try_emplace(word, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        out.erase(it);
    }
  };
  auto add_all = [&](const WordVector& v, const Rational& c) {
    for (const auto& [word, x] : v)
      add(word, c * x);
  };

  const bool free = split_.is_free(g);
  if (!free && g.is_central()) {
    add(w, split_.resolve(g).character);
  } else if (w.empty()) {
    if (free) {
      add(Word{g}, 1);
    } else {
      GeneratorSplit s = split_.resolve(g);
      add(Word{}, s.character);
      for (const auto& [f, c] : s.free_part)
        add(Word{f}, c);
    }
  } else if (free && !(w.front() < g)) {
    Word word;
    word.reserve(w.size() + 1);
    word.push_back(g);
    word.insert(word.end(), w.begin(), w.end());
    add(word, 1);
  } else {
    const Generator head = w.front();
    const Word rest(w.begin() + 1, w.end());
    for (const auto& [u, c] : straighten(g, rest, steps))
      add_all(straighten(head, u, steps), c);
    for (const auto& [h, c] : bracket(g, head))
      add_all(straighten(h, rest, steps), c);
  }

  std::lock_guard lock(memo_mutex_);
  memo_.try_emplace(std::move(key), out);
  return out;
}

Vector InducedModule::act_basis(const Generator& g, const Label& label) const {
  Word w;
  for (const auto& [f, e] : PBWMonomial::from_label(label).factors)
    w.insert(w.end(), e, f);
  std::size_t steps = 0;
  WordVector straightened;
  try {
    straightened = straighten(g, w, steps);
  } catch (const RewriteBudgetExceeded& e) {
    throw RewriteBudgetExceeded(std::string(e.what()) + " while applying " + to_string(g) + " to " +
                                format_label(label) + " in " + split_.name);
  }
  Vector out;
  for (const auto& [word, c] : straightened) {
    PBWMonomial m;
    for (const auto& f : word) {
      if (!m.factors.empty() && m.factors.back().first == f)
        ++m.factors.back().second;
      else
        m.factors.push_back({f, 1});
    }
    out.add(m.to_label(), c);
  }
  return out;
}

std::vector<PBWMonomial> graded_basis(const InducedModule& m, long degree_cap) {
  std::vector<Generator> free_gens;
  for (GenKind kind : {GenKind::I, GenKind::L})
    for (long mode = -(degree_cap - 1); mode <= degree_cap - 1; ++mode) {
      Generator g{kind, mode};
      if (m.split().is_free(g))
        free_gens.push_back(g);
    }
  std::vector<PBWMonomial> out;
  PBWMonomial cur;
  auto rec = [&](auto&& self, std::size_t idx, long budget) -> void {
    if (idx == free_gens.size()) {
      out.push_back(cur);
      return;
    }
    self(self, idx + 1, budget);
    const long cost = 1 + std::labs(free_gens[idx].index);
    for (unsigned e = 1; static_cast<long>(e) * cost <= budget; ++e) {
      cur.factors.push_back({free_gens[idx], e});
      self(self, idx + 1, budget - static_cast<long>(e) * cost);
      cur.factors.pop_back();
    }
  };
  if (degree_cap >= 0)
    rec(rec, 0, degree_cap);
  std::sort(out.begin(), out.end(), [](const PBWMonomial& a, const PBWMonomial& b) {
    long da = a.degree(), db = b.degree();
    if (da != db)
      return da < db;
    return a.to_label() < b.to_label();
  });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Rational central_value(const CentralTuple& c, long k) {
  switch (k) {
  case 1:
    return c.c1;
  case 2:
    return c.c2;
  default:
    return c.c3;
  }
}

void push_central(std::vector<Element>& out) {
  for (long k = 1; k <= 3; ++k)
    out.push_back(Generator::C(k));
}

std::string tuple_text(const CentralTuple& c) {
  return to_string(c.c0) + "," + to_string(c.c1) + "," + to_string(c.c2) + "," + to_string(c.c3);
}

} // namespace

InducedHandle verma(const Rational& h, const CentralTuple& d, std::size_t budget) {
  SplitDatum s;
  s.name = "verma(h=" + to_string(h) + ", d=" + tuple_text(d) + ")";
  s.is_free = [](const Generator& g) { return g.kind != GenKind::C && g.index < 0; };
  s.resolve = [h, d](const Generator& g) -> GeneratorSplit {
    if (g.kind == GenKind::C)
      return {{}, central_value(d, g.index)};
    if (g.index > 0)
      return {};
    return {{}, g.kind == GenKind::L ? h : d.c0};
  };
  s.subalgebra_basis = [](long max_mode) {
    std::vector<Element> out;
    for (long m = 0; m <= max_mode; ++m) {
      out.push_back(Generator::L(m));
      out.push_back(Generator::I(m));
    }
    push_central(out);
    return out;
  };
  s.central = CentralCharacter{d.c0, d.c1, d.c2, d.c3};
  return std::make_shared<InducedModule>(std::move(s), budget);
}

InducedHandle whittaker(const Rational& l1, const Rational& l2, const Rational& mu1, const CentralTuple& e,
                        std::size_t budget) {
  SplitDatum s;
  s.name = "whittaker(lambda1=" + to_string(l1) + ", lambda2=" + to_string(l2) + ", mu1=" + to_string(mu1) +
           ", e=" + tuple_text(e) + ")";
  s.is_free = [](const Generator& g) {
    return (g.kind == GenKind::L && g.index <= 0) || (g.kind == GenKind::I && g.index < 0);
  };
  s.resolve = [l1, l2, mu1, e](const Generator& g) -> GeneratorSplit {
    if (g.kind == GenKind::C)
      return {{}, central_value(e, g.index)};
    if (g.kind == GenKind::L)
      return {{}, g.index == 1 ? l1 : g.index == 2 ? l2 : Rational(0)};
    return {{}, g.index == 0 ? e.c0 : g.index == 1 ? mu1 : Rational(0)};
  };
  s.subalgebra_basis = [](long max_mode) {
    std::vector<Element> out;
    for (long m = 0; m <= max_mode; ++m) {
      if (m > 0)
        out.push_back(Generator::L(m));
      out.push_back(Generator::I(m));
    }
    push_central(out);
    return out;
  };
  s.central = CentralCharacter{e.c0, e.c1, e.c2, e.c3};
  return std::make_shared<InducedModule>(std::move(s), budget);
}

Rational rs_character(const Rational& lambda, const RSParams& rs, long m) {
  if (m == 1)
    return rs.r1;
  if (m == 2)
    return rs.r2;
  return int_power(lambda, m - 2) * (m - 1) * rs.r2 - int_power(lambda, m - 1) * (m - 2) * rs.r1;
}

Rational rs_i_character(const Rational& lambda, const RSParams& rs, long m) {
  if (m == 0)
    return rs.s0;
  return int_power(lambda, m - 1) * rs.s1;
}

Rational pq_character(const Rational& lambda, const PQParams& pq, long m) {
  if (m == 2)
    return pq.p2;
  if (m == 3)
    return pq.p3;
  if (m == 4)
    return pq.p4;
  return int_power(lambda, m - 4) * (m - 3) * pq.p4 - int_power(lambda, m - 3) * (m - 4) * pq.p3;
}

Rational pq_i_character(const Rational& lambda, const PQParams& pq, long m) {
  if (m == 1)
    return pq.q1;
  return int_power(lambda, m - 2) * pq.q2;
}

InducedHandle ind_lambda0(const Rational& lambda, const RSParams& rs, const CentralTuple& y, std::size_t budget) {
  if (lambda == 0)
    throw std::invalid_argument("ind_lambda0 requires lambda != 0");
  SplitDatum s;
  s.name = "ind_lambda0(lambda=" + to_string(lambda) + ", r1=" + to_string(rs.r1) + ", r2=" + to_string(rs.r2) +
           ", s0=" + to_string(rs.s0) + ", s1=" + to_string(rs.s1) + ", y=" + to_string(y.c1) + "," +
           to_string(y.c2) + "," + to_string(y.c3) + ")";
  s.is_free = [](const Generator& g) {
    return (g.kind == GenKind::L && g.index <= 0) || (g.kind == GenKind::I && g.index < 0);
  };
  s.resolve = [lambda, rs, y](const Generator& g) -> GeneratorSplit {
    if (g.kind == GenKind::C)
      return {{}, central_value(y, g.index)};
    if (g.kind == GenKind::I)
      return {{}, rs_i_character(lambda, rs, g.index)};
    return {Element(Generator::L(0), int_power(lambda, g.index)), rs_character(lambda, rs, g.index)};
  };
  s.subalgebra_basis = [lambda](long max_mode) {
    std::vector<Element> out;
    for (long m = 0; m <= max_mode; ++m) {
      if (m > 0)
        out.push_back(Element(Generator::L(m)) - int_power(lambda, m) * Element(Generator::L(0)));
      out.push_back(Generator::I(m));
    }
    push_central(out);
    return out;
  };
  s.central = CentralCharacter{rs.s0, y.c1, y.c2, y.c3};
  return std::make_shared<InducedModule>(std::move(s), budget);
}

InducedHandle ind_lambda1(const Rational& lambda, const PQParams& pq, const CentralTuple& z, std::size_t budget) {
  if (lambda == 0)
    throw std::invalid_argument("ind_lambda1 requires lambda != 0");
  SplitDatum s;
  s.name = "ind_lambda1(lambda=" + to_string(lambda) + ", p=" + to_string(pq.p2) + "," + to_string(pq.p3) + "," +
           to_string(pq.p4) + ", q=" + to_string(pq.q1) + "," + to_string(pq.q2) + ", z=" + tuple_text(z) + ")";
  s.is_free = [](const Generator& g) {
    return (g.kind == GenKind::L && g.index <= 1) || (g.kind == GenKind::I && g.index < 0);
  };
  s.resolve = [lambda, pq, z](const Generator& g) -> GeneratorSplit {
    if (g.kind == GenKind::C)
      return {{}, central_value(z, g.index)};
    if (g.kind == GenKind::I)
      return {{}, g.index == 0 ? z.c0 : pq_i_character(lambda, pq, g.index)};
    return {Element(Generator::L(1), int_power(lambda, g.index - 1)), pq_character(lambda, pq, g.index)};
  };
  s.subalgebra_basis = [lambda](long max_mode) {
    std::vector<Element> out;
    for (long m = 1; m <= max_mode; ++m) {
      if (m > 1)
        out.push_back(Element(Generator::L(m)) - int_power(lambda, m - 1) * Element(Generator::L(1)));
      out.push_back(Generator::I(m));
    }
    out.push_back(Generator::I(0));
    push_central(out);
    return out;
  };
  s.central = CentralCharacter{z.c0, z.c1, z.c2, z.c3};
  return std::make_shared<InducedModule>(std::move(s), budget);
}

} // namespace hv
