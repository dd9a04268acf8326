#include "hv/zoo.hpp"

namespace hv {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0)
      return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  for (std::size_t k = 0; k < data_.size(); ++k)
    data_[k] += o.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  for (std::size_t k = 0; k < data_.size(); ++k)
    data_[k] -= o.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& c) {
  for (auto& x : data_)
    x *= c;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
RationalMatrix operator*(const Rational& c, RationalMatrix a) { return a *= c; }

// ---------------------------------------------------------------------------

HbarModule::HbarModule(QuotientShape shape, std::size_t dim, std::map<Generator, RationalMatrix> matrices)
    : shape_(shape), dim_(dim), matrices_(std::move(matrices)), zero_(dim, dim) {
  if (dim == 0)
    throw std::invalid_argument("HbarModule dimension must be positive");
  for (const auto& [g, m] : matrices_) {
    if (!shape_.contains(g))
      throw std::invalid_argument(to_string(g) + " is not a generator of the quotient shape");
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("matrix for " + to_string(g) + " is not " + std::to_string(dim) + "x" +
                                  std::to_string(dim));
  }
  const auto basis = shape_.basis();
  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (!(a < b))
        continue;
      RationalMatrix lhs = matrix(a) * matrix(b) - matrix(b) * matrix(a);
      RationalMatrix rhs(dim, dim);
      QuotientElement br = quotient_bracket(QuotientElement(shape_, a), QuotientElement(shape_, b));
      for (const auto& [g, c] : br.terms())
        rhs += c * matrix(g);
      if (!(lhs == rhs))
        throw RelationViolation("relation [" + to_string(a) + ", " + to_string(b) + "] violated");
    }
  for (unsigned j = shape_.r + 1; j-- > 0;)
    if (!matrix(Generator::I(static_cast<long>(j + shape_.d))).is_zero()) {
      r_prime_ = j;
      break;
    }
}

const RationalMatrix& HbarModule::matrix(const Generator& g) const {
  auto it = matrices_.find(g);
  return it == matrices_.end() ? zero_ : it->second;
}

RationalMatrix HbarModule::l_operator(long m) const {
  RationalMatrix out(dim_, dim_);
  for (unsigned i = 0; i <= shape_.r; ++i) {
    const auto& mat = matrix(Generator::L(i));
    if (!mat.is_zero())
      out += (int_power(Rational(m), i + 1) / factorial(i + 1)) * mat;
  }
  return out;
}

RationalMatrix HbarModule::i_operator(long m) const {
  RationalMatrix out(dim_, dim_);
  for (unsigned i = 0; i <= shape_.r; ++i) {
    const unsigned k = i + shape_.d;
    const auto& mat = matrix(Generator::I(k));
    if (!mat.is_zero())
      out += (int_power(Rational(m), k) / factorial(k)) * mat;
  }
  return out;
}

HbarModule hbar_module(QuotientShape shape, std::size_t dim, std::map<Generator, RationalMatrix> matrices) {
  return HbarModule(shape, dim, std::move(matrices));
}

HbarModule one_dim_V(const Rational& sigma, const Rational& tau, QuotientShape shape) {
  if (shape.d == 1 && tau != 0)
    throw std::invalid_argument("one_dim_V: tau must be 0 when d = 1");
  std::map<Generator, RationalMatrix> mats;
  RationalMatrix s(1, 1);
  s(0, 0) = sigma;
  mats.emplace(Generator::L(0), s);
  if (shape.d == 0) {
    RationalMatrix t(1, 1);
    t(0, 0) = tau;
    mats.emplace(Generator::I(0), t);
  }
  return HbarModule(shape, 1, std::move(mats));
}

HbarModule two_dim_fixture(const Rational& tau) {
  RationalMatrix l0(2, 2);
  l0(0, 1) = 1;
  return HbarModule(QuotientShape(1, 0), 2,
                    {{Generator::L(0), l0}, {Generator::I(0), tau * RationalMatrix::identity(2)}});
}

// ---------------------------------------------------------------------------

Vector poly_to_vector(const Polynomial& f) {
  Vector v;
  for (const auto& [e, c] : f)
    v.add({e}, c);
  return v;
}

Polynomial vector_to_poly(const Vector& v) {
  Polynomial f;
  for (const auto& [l, c] : v) {
    if (l.size() != 1)
      throw LabelSchemeMismatch("not a polynomial label");
    f.add(l[0], c);
  }
  return f;
}

namespace {

std::string params_string(const Rational& a, const Rational& b, const Rational& c) {
  return to_string(a) + ", " + to_string(b) + ", " + to_string(c);
}

// lambda^m (t - m alpha) (t - m)^k, the Omega action of L_m on t^k
Polynomial omega_l(const OmegaParams& p, long m, long k) {
  Polynomial lin = Polynomial::t();
  lin.add(0, -Rational(m) * p.alpha);
  return int_power(p.lambda, m) * poly_mul(lin, shift(Polynomial::monomial(k), m));
}

// lambda^m (t - m)^k
Polynomial omega_shift(const OmegaParams& p, long m, long k) {
  return int_power(p.lambda, m) * shift(Polynomial::monomial(k), m);
}

std::string v_index(long i) { return "e" + std::to_string(i); }

Vector matrix_column(const RationalMatrix& mat, long col, const std::function<Label(long)>& label_of) {
  Vector v;
  for (std::size_t r = 0; r < mat.rows(); ++r)
    v.add(label_of(static_cast<long>(r)), mat(r, static_cast<std::size_t>(col)));
  return v;
}

} // namespace

OmegaModule::OmegaModule(OmegaParams p) : Module(CentralCharacter{p.beta, 0, 0, 0}), p_(std::move(p)) {
  if (p_.lambda == 0)
    throw ZeroLambda("Omega requires lambda != 0");
}

std::string OmegaModule::name() const { return "Omega(" + params_string(p_.lambda, p_.alpha, p_.beta) + ")"; }

bool OmegaModule::valid_label(const Label& label) const { return label.size() == 1 && label[0] >= 0; }

std::string OmegaModule::format_label(const Label& label) const {
  if (label[0] == 0)
    return "1";
  if (label[0] == 1)
    return "t";
  return "t^" + std::to_string(label[0]);
}

Vector OmegaModule::act_basis(const Generator& g, const Label& label) const {
  const long m = g.index;
  if (g.kind == GenKind::L)
    return poly_to_vector(omega_l(p_, m, label[0]));
  return poly_to_vector(p_.beta * omega_shift(p_, m, label[0]));
}

IntermediateSeriesModule::IntermediateSeriesModule(ASeriesParams p)
    : Module(CentralCharacter{p.beta, 0, 0, 0}, {true, false}), p_(std::move(p)) {}

std::string IntermediateSeriesModule::name() const {
  return "A(" + params_string(p_.lambda, p_.alpha, p_.beta) + ")";
}

bool IntermediateSeriesModule::valid_label(const Label& label) const { return label.size() == 1; }

std::string IntermediateSeriesModule::format_label(const Label& label) const {
  return "v(" + std::to_string(label[0]) + ")";
}

Vector IntermediateSeriesModule::act_basis(const Generator& g, const Label& label) const {
  const long m = g.index;
  const long n = label[0];
  if (g.kind == GenKind::L)
    return Vector::basis({m + n}, p_.lambda + n + Rational(m) * p_.alpha);
  return Vector::basis({m + n}, p_.beta);
}

// ---------------------------------------------------------------------------

namespace {

std::optional<Rational> scalar_i0(const HbarModule& v, const Rational& beta) {
  if (v.shape().d == 1)
    return Rational(0);
  const auto& m = v.matrix(Generator::I(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? m(0, 0) : Rational(0)))
        return std::nullopt;
  return beta * m(0, 0);
}

} // namespace

CalMOmegaModule::CalMOmegaModule(HbarModule v, OmegaParams p)
    : Module(CentralCharacter{scalar_i0(v, p.beta), 0, 0, 0}), v_(std::move(v)), p_(std::move(p)) {
  if (p_.lambda == 0)
    throw ZeroLambda("M(V, Omega) requires lambda != 0");
}

std::string CalMOmegaModule::name() const {
  return "M(V[dim " + std::to_string(v_.dim()) + "], Omega(" + params_string(p_.lambda, p_.alpha, p_.beta) + "))";
}

bool CalMOmegaModule::valid_label(const Label& label) const {
  return label.size() == 2 && label[0] >= 0 && static_cast<std::size_t>(label[0]) < v_.dim() && label[1] >= 0;
}

std::string CalMOmegaModule::format_label(const Label& label) const {
  return v_index(label[0]) + "⊗" + (label[1] == 0 ? std::string("1") : "t^" + std::to_string(label[1]));
}

Vector CalMOmegaModule::act_basis(const Generator& g, const Label& label) const {
  const long m = g.index;
  const long i = label[0];
  const long k = label[1];
  Vector out;
  auto put = [&](const Vector& vpart, const Polynomial& f) {
    for (const auto& [vl, vc] : vpart)
      for (const auto& [e, fc] : f)
        out.add({vl[0], e}, vc * fc);
  };
  auto single = [](long r) { return Label{r}; };
  if (g.kind == GenKind::L) {
    put(Vector::basis({i}), omega_l(p_, m, k));
    put(matrix_column(v_.l_operator(m), i, single), omega_shift(p_, m, k));
  } else {
    put(matrix_column(v_.i_operator(m), i, single), p_.beta * omega_shift(p_, m, k));
  }
  return out;
}

CalMAModule::CalMAModule(HbarModule v, ASeriesParams p)
    : Module(CentralCharacter{scalar_i0(v, p.beta), 0, 0, 0}, {true, false}), v_(std::move(v)), p_(std::move(p)) {}

std::string CalMAModule::name() const {
  return "M(V[dim " + std::to_string(v_.dim()) + "], A(" + params_string(p_.lambda, p_.alpha, p_.beta) + "))";
}

bool CalMAModule::valid_label(const Label& label) const {
  return label.size() == 2 && label[0] >= 0 && static_cast<std::size_t>(label[0]) < v_.dim();
}

std::string CalMAModule::format_label(const Label& label) const {
  return v_index(label[0]) + "⊗v(" + std::to_string(label[1]) + ")";
}

Vector CalMAModule::act_basis(const Generator& g, const Label& label) const {
  const long m = g.index;
  const long i = label[0];
  const long n = label[1];
  auto target = [&](long r) { return Label{r, m + n}; };
  if (g.kind == GenKind::L) {
    Vector out = matrix_column(v_.l_operator(m), i, target);
    out.add({i, m + n}, Rational(n) + p_.lambda + p_.alpha * m);
    return out;
  }
  return p_.beta * matrix_column(v_.i_operator(m), i, target);
}

// ---------------------------------------------------------------------------

GammaTwistModule::GammaTwistModule(ModuleHandle base, LaurentPolynomial gamma)
    : Module(CentralCharacter{base->central().i0, 0, 0, 0},
             {base->flags().is_weight_module && (gamma.is_zero() || (gamma.terms().size() == 1 &&
                                                                     gamma.terms().begin()->first == 0)),
              base->flags().supports_negative_t_exponents}),
      base_(std::move(base)), gamma_(std::move(gamma)) {
  const auto& c = base_->central();
  if (c.c1 != 0 || c.c2 != 0 || c.c3 != 0)
    throw NonzeroCentralCharge("gamma_twist requires C_1, C_2, C_3 to act as zero on " + base_->name());
}

std::string GammaTwistModule::name() const { return "twist(" + base_->name() + ", " + to_string(gamma_) + ")"; }

Vector GammaTwistModule::act_basis(const Generator& g, const Label& label) const {
  Vector out = base_->act(g, label);
  if (g.kind == GenKind::L)
    for (const auto& [i, c] : gamma_)
      out.add_scaled(base_->act(Generator::I(g.index + i), label), c);
  return out;
}

ModuleHandle omega(OmegaParams p) { return std::make_shared<OmegaModule>(std::move(p)); }
ModuleHandle intermediate_series(ASeriesParams p) { return std::make_shared<IntermediateSeriesModule>(std::move(p)); }
ModuleHandle calM_omega(HbarModule v, OmegaParams p) {
  return std::make_shared<CalMOmegaModule>(std::move(v), std::move(p));
}
ModuleHandle calM_A(HbarModule v, ASeriesParams p) { return std::make_shared<CalMAModule>(std::move(v), std::move(p)); }
ModuleHandle gamma_twist(ModuleHandle base, LaurentPolynomial gamma) {
  return std::make_shared<GammaTwistModule>(std::move(base), std::move(gamma));
}

} // namespace hv
