#include "spa/freemod.hpp"

#include <algorithm>
#include <stdexcept>

#include "spa/error.hpp"

namespace spa {

ModuleOrderPtr ModuleOrder::top() {
  static const ModuleOrderPtr instance(new ModuleOrder(Kind::TOP));
  return instance;
}

ModuleOrderPtr ModuleOrder::pot() {
  static const ModuleOrderPtr instance(new ModuleOrder(Kind::POT));
  return instance;
}

ModuleOrderPtr ModuleOrder::schreyer(ModuleOrderPtr base, std::vector<ModuleMonomial> leads) {
  if (!base) throw Error("Schreyer ordering needs a base ordering");
  auto order = std::shared_ptr<ModuleOrder>(new ModuleOrder(Kind::Schreyer));
  order->base_ = std::move(base);
  order->leads_ = std::move(leads);
  return order;
}

std::strong_ordering ModuleOrder::compare(const MonomialOrder& ring, const Monomial& a,
                                          std::size_t i, const Monomial& b,
                                          std::size_t j) const {
  switch (kind_) {
    case Kind::TOP:
      if (auto c = ring.compare(a, b); c != 0) return c;
      return i <=> j;
    case Kind::POT:
      if (i != j) return i <=> j;
      return ring.compare(a, b);
    case Kind::Schreyer: {
      const ModuleMonomial& li = leads_.at(i);
      const ModuleMonomial& lj = leads_.at(j);
      if (auto c = base_->compare(ring, a + li.mono, li.index, b + lj.mono, lj.index); c != 0)
        return c;
      return i <=> j;
    }
  }
  return std::strong_ordering::equal;
}

const ModuleTerm& ModuleElement::lead() const {
  if (terms_.empty()) throw ZeroElement();
  return terms_.front();
}

FreeModule::FreeModule(AlgebraPtr algebra, std::vector<Degree> shifts, ModuleOrderPtr order)
    : algebra_(std::move(algebra)), shifts_(std::move(shifts)), order_(std::move(order)) {
  if (!algebra_) throw Error("free module needs an algebra");
  if (!order_) order_ = ModuleOrder::top();
  if (order_->kind() == ModuleOrder::Kind::Schreyer && order_->leads().size() != rank())
    throw ShapeError("Schreyer ordering needs one leading monomial per basis element");
}

FreeModule FreeModule::induced(std::span<const ModuleElement> gens) const {
  std::vector<Degree> shifts;
  std::vector<ModuleMonomial> leads;
  for (const ModuleElement& g : gens) {
    leads.push_back(g.lead().monomial());
    shifts.push_back(degree(g));
  }
  return FreeModule(algebra_, std::move(shifts), ModuleOrder::schreyer(order_, std::move(leads)));
}

std::strong_ordering FreeModule::compare(const ModuleMonomial& u, const ModuleMonomial& v) const {
  return order_->compare(algebra_->order(), u.mono, u.index, v.mono, v.index);
}

bool FreeModule::greater(const ModuleTerm& a, const ModuleTerm& b) const {
  return order_->compare(algebra_->order(), a.mono, a.index, b.mono, b.index) > 0;
}

bool FreeModule::divides(const ModuleMonomial& u, const ModuleMonomial& v) {
  return u.index == v.index && u.mono.divides(v.mono);
}

void FreeModule::check(const ModuleElement& x) const {
  for (const ModuleTerm& t : x) {
    if (t.index >= rank())
      throw ModuleMismatch("component index " + std::to_string(t.index + 1) +
                           " exceeds module rank " + std::to_string(rank()));
    if (t.mono.size() != algebra_->num_gens())
      throw ModuleMismatch("module term has wrong arity");
  }
}

ModuleElement FreeModule::canonical(std::vector<ModuleTerm> terms) const {
  std::sort(terms.begin(), terms.end(),
            [&](const ModuleTerm& a, const ModuleTerm& b) { return greater(a, b); });
  std::vector<ModuleTerm> out;
  out.reserve(terms.size());
  for (ModuleTerm& t : terms) {
    if (!out.empty() && out.back().index == t.index && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  return ModuleElement(std::move(out));
}

ModuleElement FreeModule::basis(std::size_t i) const {
  if (i >= rank()) throw ModuleMismatch("basis index out of range");
  return ModuleElement({ModuleTerm{algebra_->field().one(), Monomial(algebra_->num_gens()), i}});
}

ModuleElement FreeModule::from_terms(std::vector<ModuleTerm> terms) const {
  ModuleElement x = canonical(std::move(terms));
  check(x);
  return x;
}

ModuleElement FreeModule::from_components(const std::vector<Polynomial>& components) const {
  if (components.size() != rank())
    throw ShapeError("expected " + std::to_string(rank()) + " components, got " +
                     std::to_string(components.size()));
  std::vector<ModuleTerm> terms;
  for (std::size_t i = 0; i < components.size(); ++i)
    for (const Term& t : components[i]) terms.push_back(ModuleTerm{t.coef, t.mono, i});
  return canonical(std::move(terms));
}

ModuleElement FreeModule::embed(const Polynomial& f, std::size_t i) const {
  if (i >= rank()) throw ModuleMismatch("basis index out of range");
  std::vector<ModuleTerm> terms;
  for (const Term& t : f) terms.push_back(ModuleTerm{t.coef, t.mono, i});
  return canonical(std::move(terms));
}

Polynomial FreeModule::component(const ModuleElement& x, std::size_t i) const {
  std::vector<Term> terms;
  for (const ModuleTerm& t : x)
    if (t.index == i) terms.push_back(Term{t.coef, t.mono});
  return algebra_->from_terms(std::move(terms));
}

std::vector<Polynomial> FreeModule::components(const ModuleElement& x) const {
  std::vector<std::vector<Term>> parts(rank());
  for (const ModuleTerm& t : x) parts.at(t.index).push_back(Term{t.coef, t.mono});
  std::vector<Polynomial> out;
  out.reserve(rank());
  for (auto& p : parts) out.push_back(algebra_->from_terms(std::move(p)));
  return out;
}

ModuleElement FreeModule::add(const ModuleElement& x, const ModuleElement& y) const {
  std::vector<ModuleTerm> out;
  out.reserve(x.size() + y.size());
  auto a = x.begin(), b = y.begin();
  while (a != x.end() && b != y.end()) {
    auto c = order_->compare(algebra_->order(), a->mono, a->index, b->mono, b->index);
    if (c > 0) {
      out.push_back(*a++);
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      Coefficient s = a->coef + b->coef;
      if (!s.is_zero()) out.push_back(ModuleTerm{std::move(s), a->mono, a->index});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, x.end());
  out.insert(out.end(), b, y.end());
  return ModuleElement(std::move(out));
}

ModuleElement FreeModule::neg(const ModuleElement& x) const {
  std::vector<ModuleTerm> out;
  out.reserve(x.size());
  for (const ModuleTerm& t : x) out.push_back(ModuleTerm{-t.coef, t.mono, t.index});
  return ModuleElement(std::move(out));
}

ModuleElement FreeModule::sub(const ModuleElement& x, const ModuleElement& y) const {
  return add(x, neg(y));
}

ModuleElement FreeModule::scale(const Coefficient& c, const ModuleElement& x) const {
  if (c.is_zero()) return {};
  std::vector<ModuleTerm> out;
  out.reserve(x.size());
  for (const ModuleTerm& t : x) out.push_back(ModuleTerm{c * t.coef, t.mono, t.index});
  return ModuleElement(std::move(out));
}

ModuleElement FreeModule::multiply_term(const Coefficient& c, const Monomial& alpha,
                                        const ModuleElement& x) const {
  if (c.is_zero() || x.is_zero()) return {};
  if (alpha.is_one()) return scale(c, x);
  std::vector<ModuleTerm> acc;
  acc.reserve(x.size());
  for (const ModuleTerm& t : x) {
    const Polynomial p = algebra_->normalize_product(alpha, t.mono);
    for (const Term& u : p) acc.push_back(ModuleTerm{c * t.coef * u.coef, u.mono, t.index});
  }
  return canonical(std::move(acc));
}

ModuleElement FreeModule::multiply(const Polynomial& f, const ModuleElement& x) const {
  if (f.is_zero() || x.is_zero()) return {};
  std::vector<ModuleTerm> acc;
  for (const Term& s : f)
    for (const ModuleTerm& t : x) {
      const Polynomial p = algebra_->normalize_product(s.mono, t.mono);
      for (const Term& u : p) acc.push_back(ModuleTerm{s.coef * t.coef * u.coef, u.mono, t.index});
    }
  return canonical(std::move(acc));
}

ModuleElement FreeModule::combine(const ModuleElement& row,
                                  std::span<const ModuleElement> gens) const {
  std::vector<ModuleTerm> acc;
  for (const ModuleTerm& t : row) {
    if (t.index >= gens.size())
      throw ShapeError("row index " + std::to_string(t.index + 1) + " has no generator (" +
                       std::to_string(gens.size()) + " available)");
    for (const ModuleTerm& g : gens[t.index]) {
      const Polynomial p = algebra_->normalize_product(t.mono, g.mono);
      for (const Term& u : p) acc.push_back(ModuleTerm{t.coef * g.coef * u.coef, u.mono, g.index});
    }
  }
  ModuleElement r = canonical(std::move(acc));
  check(r);
  return r;
}

Degree FreeModule::degree(const ModuleMonomial& u) const {
  return algebra_->degree(u.mono) + shift(u.index);
}

Degree FreeModule::degree(const ModuleElement& x) const {
  if (x.is_zero()) throw ZeroElement();
  Degree d = degree(x.lead().monomial());
  for (const ModuleTerm& t : x) d = std::max(d, degree(t.monomial()));
  return d;
}

bool FreeModule::is_homogeneous(const ModuleElement& x) const {
  if (x.is_zero()) return true;
  const Degree d = degree(x.lead().monomial());
  return std::all_of(x.begin(), x.end(),
                     [&](const ModuleTerm& t) { return degree(t.monomial()) == d; });
}

DivisionResult FreeModule::divide(const ModuleElement& x,
                                  std::span<const ModuleElement> divisors) const {
  check(x);
  for (const ModuleElement& d : divisors) {
    if (d.is_zero()) throw ZeroElement();
    check(d);
  }
  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  std::vector<ModuleTerm> remainder;
  // Terms of work[pos..] are still to be reduced; the rest is settled.
  std::vector<ModuleTerm> work = x.terms();
  std::size_t pos = 0;
  std::optional<ModuleMonomial> previous;
  while (pos < work.size()) {
    const ModuleTerm& lt = work[pos];
    if (previous && compare(lt.monomial(), *previous) >= 0)
      throw std::logic_error("division step did not decrease the leading monomial");
    previous = lt.monomial();

    std::size_t hit = divisors.size();
    for (std::size_t j = 0; j < divisors.size(); ++j)
      if (divides(divisors[j].lead().monomial(), lt.monomial())) {
        hit = j;
        break;
      }
    if (hit == divisors.size()) {
      remainder.push_back(std::move(work[pos++]));
      continue;
    }
    const ModuleElement& d = divisors[hit];
    const Monomial alpha = d.lead().mono.cofactor_in(lt.mono);
    const ModuleElement shifted = multiply_term(algebra_->field().one(), alpha, d);
    if (shifted.lead().monomial() != lt.monomial())
      throw std::logic_error("division step did not cancel the leading monomial");
    const Coefficient c = lt.coef / shifted.lead().coef;
    quotient_terms[hit].push_back(Term{c, alpha});

    // work[pos+1..] - c * shifted[1..]; the leading terms cancel exactly.
    std::vector<ModuleTerm> next;
    next.reserve(work.size() - pos + shifted.size());
    auto a = work.begin() + static_cast<std::ptrdiff_t>(pos) + 1;
    auto b = shifted.begin() + 1;
    while (a != work.end() && b != shifted.end()) {
      const auto cmp = order_->compare(algebra_->order(), a->mono, a->index, b->mono, b->index);
      if (cmp > 0) {
        next.push_back(std::move(*a++));
      } else if (cmp < 0) {
        next.push_back(ModuleTerm{-(c * b->coef), b->mono, b->index});
        ++b;
      } else {
        Coefficient v = a->coef - c * b->coef;
        if (!v.is_zero()) next.push_back(ModuleTerm{std::move(v), a->mono, a->index});
        ++a;
        ++b;
      }
    }
    for (; a != work.end(); ++a) next.push_back(std::move(*a));
    for (; b != shifted.end(); ++b) next.push_back(ModuleTerm{-(c * b->coef), b->mono, b->index});
    work = std::move(next);
    pos = 0;
  }
  DivisionResult result;
  result.quotients.reserve(divisors.size());
  for (auto& q : quotient_terms) result.quotients.push_back(algebra_->from_terms(std::move(q)));
  result.remainder = ModuleElement(std::move(remainder));
  return result;
}

std::optional<SPolynomial> FreeModule::s_polynomial_parts(const ModuleElement& x,
                                                          const ModuleElement& y) const {
  if (x.is_zero() || y.is_zero()) throw ZeroElement();
  const ModuleTerm& lx = x.lead();
  const ModuleTerm& ly = y.lead();
  if (lx.index != ly.index) return std::nullopt;
  const Monomial gamma = lx.mono.lcm(ly.mono);
  SPolynomial s;
  s.left_mono = lx.mono.cofactor_in(gamma);
  s.right_mono = ly.mono.cofactor_in(gamma);
  const Coefficient one = algebra_->field().one();
  const ModuleElement px = multiply_term(one, s.left_mono, x);
  const ModuleElement py = multiply_term(one, s.right_mono, y);
  s.left_coef = px.lead().coef.inverse();
  s.right_coef = py.lead().coef.inverse();
  s.value = sub(scale(s.left_coef, px), scale(s.right_coef, py));
  s.degree = algebra_->degree(gamma) + shift(lx.index);
  return s;
}

ModuleElement FreeModule::s_polynomial(const ModuleElement& x, const ModuleElement& y) const {
  auto s = s_polynomial_parts(x, y);
  return s ? s->value : ModuleElement();
}

std::string FreeModule::render(const ModuleElement& x) const {
  std::string out = "[";
  const auto parts = components(x);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += algebra_->render(parts[i]);
  }
  return out + "]";
}

}  // namespace spa
