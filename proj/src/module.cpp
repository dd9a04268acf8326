#include "hv/module.hpp"

#include <algorithm>

namespace hv {

Vector Vector::basis(Label label, const Rational& c) {
  Vector v;
  v.add(label, c);
  return v;
}

void Vector::add(const Label& label, const Rational& c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(label, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Vector& Vector::operator+=(const Vector& other) {
  for (const auto& [l, c] : other.terms_)
    add(l, c);
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  for (const auto& [l, c] : other.terms_)
    add(l, -c);
  return *this;
}

Vector& Vector::operator*=(const Rational& c) {
  if (c == 0)
    terms_.clear();
  for (auto& [l, v] : terms_)
    v *= c;
  return *this;
}

void Vector::add_scaled(const Vector& other, const Rational& c) {
  if (c == 0)
    return;
  for (const auto& [l, v] : other.terms_)
    add(l, c * v);
}

Rational Vector::coeff(const Label& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? Rational(0) : it->second;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator*(const Rational& c, Vector v) { return v *= c; }

// ---------------------------------------------------------------------------

Vector Module::act(const Generator& g, const Label& label) const {
  if (!valid_label(label))
    throw LabelSchemeMismatch("label does not belong to module " + name());
  if (g.kind == GenKind::C) {
    Rational c = central_.value(g.index);
    return Vector::basis(label, c);
  }
  return act_basis(g, label);
}

Vector Module::act(const Generator& g, const Vector& v) const {
  Vector out;
  for (const auto& [label, c] : v)
    out.add_scaled(act(g, label), c);
  return out;
}

Vector Module::act(const Element& x, const Vector& v) const {
  Vector out;
  for (const auto& [g, c] : x)
    out.add_scaled(act(g, v), c);
  return out;
}

Vector commutator_defect(const Module& m, const Element& x, const Element& y, const Vector& v) {
  Vector out = m.act(bracket(x, y), v);
  out -= m.act(x, m.act(y, v));
  out += m.act(y, m.act(x, v));
  return out;
}

std::string to_string(const Module& m, const Vector& v) {
  if (v.is_zero())
    return "0";
  std::string out;
  for (const auto& [l, c] : v) {
    if (!out.empty())
      out += " + ";
    out += to_string(c) + "*[" + m.format_label(l) + "]";
  }
  return out;
}

nlohmann::json to_json(const Module& m, const Vector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [l, c] : v)
    arr.push_back({{"label", m.format_label(l)}, {"coefficient", to_string(c)}});
  return arr;
}

// ---------------------------------------------------------------------------

Label tensor_label(const Label& a, const Label& b) {
  Label out;
  out.reserve(a.size() + b.size() + 1);
  out.push_back(static_cast<long>(a.size()));
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::pair<Label, Label> split_tensor_label(const Label& label) {
  if (label.empty() || label[0] < 0 || static_cast<std::size_t>(label[0]) + 1 > label.size())
    throw LabelSchemeMismatch("malformed tensor label");
  auto cut = label.begin() + 1 + label[0];
  return {Label(label.begin() + 1, cut), Label(cut, label.end())};
}

namespace {

CentralCharacter sum_central(const CentralCharacter& a, const CentralCharacter& b) {
  CentralCharacter out;
  if (a.i0 && b.i0)
    out.i0 = *a.i0 + *b.i0;
  out.c1 = a.c1 + b.c1;
  out.c2 = a.c2 + b.c2;
  out.c3 = a.c3 + b.c3;
  return out;
}

} // namespace

TensorModule::TensorModule(ModuleHandle left, ModuleHandle right)
    : Module(sum_central(left->central(), right->central()),
             {left->flags().is_weight_module && right->flags().is_weight_module, false}),
      left_(std::move(left)), right_(std::move(right)) {}

std::string TensorModule::name() const { return "(" + left_->name() + ") ⊗ (" + right_->name() + ")"; }

bool TensorModule::valid_label(const Label& label) const {
  if (label.empty() || label[0] < 0 || static_cast<std::size_t>(label[0]) + 1 > label.size())
    return false;
  auto [a, b] = split_tensor_label(label);
  return left_->valid_label(a) && right_->valid_label(b);
}

std::string TensorModule::format_label(const Label& label) const {
  auto [a, b] = split_tensor_label(label);
  return left_->format_label(a) + " ⊗ " + right_->format_label(b);
}

Vector TensorModule::pure(const Vector& u, const Vector& w) {
  Vector out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : w)
      out.add(tensor_label(a, b), ca * cb);
  return out;
}

Vector TensorModule::act_basis(const Generator& g, const Label& label) const {
  auto [a, b] = split_tensor_label(label);
  Vector out;
  for (const auto& [la, c] : left_->act(g, a))
    out.add(tensor_label(la, b), c);
  for (const auto& [lb, c] : right_->act(g, b))
    out.add(tensor_label(a, lb), c);
  return out;
}

ModuleHandle tensor(ModuleHandle a, ModuleHandle b) {
  return std::make_shared<TensorModule>(std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------

Vector SubspaceBasis::reduce(Vector v) const {
  for (const auto& row : rows_) {
    if (v.is_zero())
      break;
    const Label& pivot = row.begin()->first;
    Rational c = v.coeff(pivot);
    if (c != 0)
      v.add_scaled(row, -c);
  }
  return v;
}

bool SubspaceBasis::insert(const Vector& v) {
  Vector r = reduce(v);
  if (r.is_zero())
    return false;
  const Label pivot = r.begin()->first;
  r *= 1 / r.begin()->second;
  for (auto& row : rows_) {
    Rational c = row.coeff(pivot);
    if (c != 0)
      row.add_scaled(r, -c);
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                              [](const Vector& row, const Label& p) { return row.begin()->first < p; });
  rows_.insert(pos, std::move(r));
  return true;
}

SubspaceBasis span_closure(const Module& m, const std::vector<Vector>& seeds, ModeRange modes,
                           const std::set<Label>& ambient, std::size_t max_dim) {
  if (ambient.size() > max_dim * 64)
    throw AmbientTooLarge("ambient has " + std::to_string(ambient.size()) + " labels, limit " +
                          std::to_string(max_dim * 64));
  SubspaceBasis basis;
  auto restrict = [&](const Vector& v) {
    Vector out;
    for (const auto& [l, c] : v) {
      if (ambient.count(l))
        out.add(l, c);
      else
        basis.mark_leaked();
    }
    return out;
  };

  std::vector<Vector> work;
  for (const auto& s : seeds) {
    Vector r = restrict(s);
    if (basis.dimension() < max_dim && basis.insert(r))
      work.push_back(std::move(r));
  }
  const auto gens = generators_in(modes);
  while (!work.empty() && basis.dimension() < max_dim) {
    Vector v = std::move(work.back());
    work.pop_back();
    for (const auto& g : gens) {
      Vector w = restrict(m.act(g, v));
      if (basis.insert(w)) {
        work.push_back(std::move(w));
        if (basis.dimension() >= max_dim)
          break;
      }
    }
  }
  return basis;
}

CheckReport invariance_check(const Module& m, const Membership& member, const std::vector<Vector>& samples,
                             ModeRange modes, std::string name) {
  nlohmann::json params = {{"module", m.name()}, {"modes", {modes.lo, modes.hi}}, {"samples", samples.size()}};
  for (const auto& s : samples)
    if (!member(s))
      throw std::invalid_argument("invariance_check: sample " + to_string(m, s) + " is not in the subspace");
  for (const auto& s : samples)
    for (const auto& g : generators_in(modes)) {
      Vector image = m.act(g, s);
      if (!member(image))
        return CheckReport::fail(std::move(name), params,
                                 {{"generator", to_string(g)}, {"sample", to_json(m, s)}, {"image", to_json(m, image)}});
    }
  return CheckReport::pass(std::move(name), params);
}

} // namespace hv
