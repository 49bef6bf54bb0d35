#include "bimon/bimodcat.hpp"

namespace bimon {

namespace {

LinMap id_of(std::size_t n) { return LinMap::identity({n, ""}); }

std::string word_key(const Obj& x) {
  std::string key;
  for (const auto& f : x.factors()) {
    key += f.label;
    key += '\x1f';
  }
  return key;
}

void require_shape(const LinMap& f, std::size_t rows, std::size_t cols, const std::string& what) {
  if (f.rows() != rows || f.cols() != cols)
    throw DimensionMismatch(what + " must be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                            std::to_string(f.rows()) + "x" + std::to_string(f.cols()));
}

std::size_t product_dim(const std::vector<Bimodule>& word, std::size_t from, std::size_t to) {
  std::size_t d = 1;
  for (std::size_t i = from; i < to; ++i) d *= word[i].carrier.dim;
  return d;
}

}  // namespace

BaseRing make_base_ring(const LinMap& mul, const LinMap& unit) {
  const std::size_t n = unit.rows();
  require_shape(unit, n, 1, "ring unit");
  require_shape(mul, n, n * n, "ring multiplication");
  return {mul.relabeled("R⊗R", "R"), unit.relabeled("𝕜", "R")};
}

Bimodule regular_bimodule(const BaseRing& r) { return {r.module(), r.mul, r.mul}; }

CheckOutcome check_base_ring(const BaseRing& r) {
  const std::size_t n = r.dim();
  if (n == 0) throw DimensionMismatch("base ring must have positive dimension");
  require_shape(r.unit, n, 1, "ring unit");
  require_shape(r.mul, n, n * n, "ring multiplication");
  const LinMap id = id_of(n);
  CheckOutcome out;
  out.add(compare_maps("associativity: m∘(m⊗R) = m∘(R⊗m)", compose(r.mul, tensor_map(r.mul, id)),
                       compose(r.mul, tensor_map(id, r.mul))));
  out.add(compare_maps("left unit: m∘(u⊗R) = R", compose(r.mul, tensor_map(r.unit, id)), id));
  out.add(compare_maps("right unit: m∘(R⊗u) = R", compose(r.mul, tensor_map(id, r.unit)), id));
  return out;
}

CheckOutcome check_bimodule(const BaseRing& r, const Bimodule& m) {
  const std::size_t n = r.dim(), d = m.carrier.dim;
  require_shape(m.lact, d, n * d, "left action");
  require_shape(m.ract, d, d * n, "right action");
  const LinMap idr = id_of(n), idm = id_of(d);
  const auto& l = m.lact;
  const auto& q = m.ract;
  CheckOutcome out;
  out.add(compare_maps("left associativity: l∘(m⊗M) = l∘(R⊗l)", compose(l, tensor_map(r.mul, idm)),
                       compose(l, tensor_map(idr, l))));
  out.add(compare_maps("left unit: l∘(u⊗M) = M", compose(l, tensor_map(r.unit, idm)), idm));
  out.add(compare_maps("right associativity: r∘(M⊗m) = r∘(r⊗R)", compose(q, tensor_map(idm, r.mul)),
                       compose(q, tensor_map(q, idr))));
  out.add(compare_maps("right unit: r∘(M⊗u) = M", compose(q, tensor_map(idm, r.unit)), idm));
  out.add(compare_maps("commutation: r∘(l⊗R) = l∘(R⊗r)", compose(q, tensor_map(l, idr)),
                       compose(l, tensor_map(idr, q))));
  return out;
}

FlatTensor flatten(const BaseRing& r, const std::vector<Bimodule>& word) {
  const std::size_t n = r.dim();
  FlatTensor t;
  t.factors = word;
  if (word.empty()) {
    t.full = r.module();
    t.quotient = r.module();
    t.proj = LinMap::identity(t.full);
    t.sect = t.proj;
    for (std::size_t i = 0; i < n; ++i) t.basis.push_back(i);
    t.induced = regular_bimodule(r);
    return t;
  }

  std::string label;
  for (std::size_t i = 0; i < word.size(); ++i) label += (i ? "⊗" : "") + word[i].carrier.label;
  const std::size_t full_dim = product_dim(word, 0, word.size());
  t.full = {full_dim, label};

  // Relations (x·r)⊗y − x⊗(r·y) only touch the two factors at a junction, so
  // build a reduced local span there and pad with prefix/suffix basis vectors.
  std::vector<Vector> relations;
  for (std::size_t p = 0; p + 1 < word.size(); ++p) {
    const auto& left = word[p];
    const auto& right = word[p + 1];
    const std::size_t dl = left.carrier.dim, dr = right.carrier.dim;
    std::vector<Vector> local;
    for (std::size_t ri = 0; ri < n; ++ri)
      for (std::size_t mi = 0; mi < dl; ++mi)
        for (std::size_t ni = 0; ni < dr; ++ni) {
          Vector v(dl * dr);
          for (std::size_t a = 0; a < dl; ++a) v[a * dr + ni] += left.ract(a, mi * n + ri);
          for (std::size_t b = 0; b < dr; ++b) v[mi * dr + b] -= right.lact(b, ri * dr + ni);
          local.push_back(std::move(v));
        }
    const auto local_span = row_reduce(std::move(local), dl * dr);
    const std::size_t pre = product_dim(word, 0, p), post = product_dim(word, p + 2, word.size());
    for (std::size_t a = 0; a < pre; ++a)
      for (const auto& lv : local_span.rows)
        for (std::size_t b = 0; b < post; ++b) {
          Vector v(full_dim);
          for (std::size_t k = 0; k < lv.size(); ++k)
            if (sgn(lv[k]) != 0) v[(a * dl * dr + k) * post + b] = lv[k];
          relations.push_back(std::move(v));
        }
  }
  auto ech = row_reduce(std::move(relations), full_dim);

  std::vector<bool> pivot(full_dim, false);
  for (auto c : ech.pivots) pivot[c] = true;
  for (std::size_t c = 0; c < full_dim; ++c)
    if (!pivot[c]) t.basis.push_back(c);
  t.quotient = {t.basis.size(), label};
  t.proj = LinMap(t.full, t.quotient);
  t.sect = LinMap(t.quotient, t.full);
  for (std::size_t k = 0; k < t.basis.size(); ++k) {
    t.proj(k, t.basis[k]) = 1;
    t.sect(t.basis[k], k) = 1;
  }
  // A pivot coordinate equals minus the non-pivot tail of its row modulo relations.
  for (std::size_t row = 0; row < ech.rows.size(); ++row)
    for (std::size_t k = 0; k < t.basis.size(); ++k) {
      const auto& e = ech.rows[row][t.basis[k]];
      if (sgn(e) != 0) t.proj(k, ech.pivots[row]) = -e;
    }
  t.relations = std::move(ech.rows);

  const LinMap idr = id_of(n);
  const std::size_t rest_front = product_dim(word, 1, word.size());
  const std::size_t rest_back = product_dim(word, 0, word.size() - 1);
  const LinMap lfull = tensor_map(word.front().lact, id_of(rest_front));
  const LinMap rfull = tensor_map(id_of(rest_back), word.back().ract);
  t.induced.carrier = t.quotient;
  t.induced.lact = compose(t.proj, compose(lfull, tensor_map(idr, t.sect)));
  t.induced.ract = compose(t.proj, compose(rfull, tensor_map(t.sect, idr)));
  return t;
}

RTensor r_tensor(const BaseRing& r, const Bimodule& m, const Bimodule& n) { return flatten(r, {m, n}); }

LinMap induced_map(const FlatTensor& t, const FlatTensor& t2, const LinMap& f) {
  if (f.cols() != t.full.dim || f.rows() != t2.full.dim)
    throw DimensionMismatch("induced_map: map does not act between the full tensor spaces");
  const LinMap pf = compose(t2.proj, f);
  for (const auto& rel : t.relations) {
    const auto image = pf.apply(rel);
    for (const auto& e : image)
      if (sgn(e) != 0) throw NotBalanced("map does not descend to " + t.quotient.label + " → " + t2.quotient.label);
  }
  return compose(pf, t.sect);
}

BimoduleCategory::BimoduleCategory(BaseRing r) : base_(std::move(r)) {
  atoms_.emplace("R", regular_bimodule(base_));
}

void BimoduleCategory::add_bimodule(const std::string& name, Bimodule m) {
  if (name == "R") throw PreconditionFailed("atom name R is reserved for the regular bimodule");
  m.carrier.label = name;
  const auto outcome = check_bimodule(base_, m);
  if (!outcome.passed())
    throw PreconditionFailed("bimodule " + name + " fails " + outcome.failed_names().front());
  atoms_.insert_or_assign(name, std::move(m));
}

const Bimodule& BimoduleCategory::bimodule(const std::string& name) const {
  auto it = atoms_.find(name);
  if (it == atoms_.end()) throw DimensionMismatch("unknown bimodule '" + name + "'");
  return it->second;
}

Obj BimoduleCategory::atom(const std::string& name) const { return Obj(bimodule(name).carrier); }

std::vector<Bimodule> BimoduleCategory::word_bimodules(const Obj& x) const {
  std::vector<Bimodule> word;
  for (const auto& f : x.factors()) {
    const auto& b = bimodule(f.label);
    if (b.carrier.dim != f.dim) throw DimensionMismatch("atom '" + f.label + "' used with the wrong dimension");
    word.push_back(b);
  }
  return word;
}

const FlatTensor& BimoduleCategory::realize(const Obj& x) const {
  const auto key = word_key(x);
  {
    std::lock_guard lock(cache_mutex_);
    auto it = flat_cache_.find(key);
    if (it != flat_cache_.end()) return *it->second;
  }
  auto t = std::make_shared<const FlatTensor>(flatten(base_, word_bimodules(x)));
  std::lock_guard lock(cache_mutex_);
  return *flat_cache_.emplace(key, std::move(t)).first->second;
}

std::size_t BimoduleCategory::dim(const Obj& x) const { return realize(x).quotient.dim; }

std::string BimoduleCategory::basis_label(const Obj& x, std::size_t i) const {
  const auto& t = realize(x);
  if (x.is_unit()) return "r" + std::to_string(i);
  return kronecker_basis_label(x.factors(), t.basis.at(i));
}

const BimoduleCategory::Junction& BimoduleCategory::junction(const Obj& a, const Obj& b) const {
  const auto key = word_key(a) + '\x1e' + word_key(b);
  {
    std::lock_guard lock(cache_mutex_);
    auto it = junction_cache_.find(key);
    if (it != junction_cache_.end()) return *it->second;
  }
  const auto& ta = realize(a);
  const auto& tb = realize(b);
  const auto& tab = realize(a * b);
  const std::size_t va = ta.full.dim, vb = tb.full.dim;
  auto j = std::make_shared<Junction>();
  LinMap sigma;
  if (!a.is_unit() && !b.is_unit()) {
    j->kappa = id_of(va * vb);
    sigma = j->kappa;
  } else if (a.is_unit() && !b.is_unit()) {
    const auto word = word_bimodules(b);
    j->kappa = bimon::tensor_map(word.front().lact, id_of(vb / word.front().carrier.dim));
    sigma = bimon::tensor_map(base_.unit, id_of(vb));
  } else if (!a.is_unit()) {
    const auto word = word_bimodules(a);
    j->kappa = bimon::tensor_map(id_of(va / word.back().carrier.dim), word.back().ract);
    sigma = bimon::tensor_map(id_of(va), base_.unit);
  } else {
    j->kappa = base_.mul;
    sigma = bimon::tensor_map(base_.unit, id_of(va));
  }
  j->lift = bimon::compose(sigma, tab.sect);
  j->kernel = kernel_basis(bimon::compose(tab.proj, j->kappa));
  std::lock_guard lock(cache_mutex_);
  return *junction_cache_.emplace(key, std::move(j)).first->second;
}

Morphism BimoduleCategory::tensor(const Morphism& f, const Morphism& g) const {
  const auto& ta = realize(f.dom);
  const auto& ta2 = realize(f.cod);
  const auto& tb = realize(g.dom);
  const auto& tb2 = realize(g.cod);
  const LinMap lf = bimon::compose(ta2.sect, bimon::compose(f.map, ta.proj));
  const LinMap lg = bimon::compose(tb2.sect, bimon::compose(g.map, tb.proj));
  const Obj dom = f.dom * g.dom;
  const Obj cod = f.cod * g.cod;
  const auto& out = junction(f.cod, g.cod);
  const auto& in = junction(f.dom, g.dom);
  const LinMap lifted = bimon::compose(realize(cod).proj, bimon::compose(out.kappa, bimon::tensor_map(lf, lg)));
  for (const auto& v : in.kernel) {
    const auto image = lifted.apply(v);
    for (const auto& e : image)
      if (sgn(e) != 0)
        throw NotBalanced("tensor of " + f.dom.label() + " → " + f.cod.label() + " and " + g.dom.label() + " → " +
                          g.cod.label() + " is not well defined over R");
  }
  return make(dom, cod, bimon::compose(lifted, in.lift));
}

Morphism BimoduleCategory::descend(const Obj& dom, const Obj& cod, const LinMap& full_map) const {
  return make(dom, cod, induced_map(realize(dom), realize(cod), full_map));
}

LinMap BimoduleCategory::left_action(const Obj& x) const { return realize(x).induced.lact; }

LinMap BimoduleCategory::right_action(const Obj& x) const { return realize(x).induced.ract; }

CheckOutcome BimoduleCategory::check_bilinear(const Morphism& f) const {
  const LinMap idr = id_of(base_.dim());
  CheckOutcome out;
  out.add(compare_maps("left R-linear: f∘l = l∘(R⊗f)", bimon::compose(f.map, left_action(f.dom)),
                       bimon::compose(left_action(f.cod), bimon::tensor_map(idr, f.map))));
  out.add(compare_maps("right R-linear: f∘r = r∘(f⊗R)", bimon::compose(f.map, right_action(f.dom)),
                       bimon::compose(right_action(f.cod), bimon::tensor_map(f.map, idr))));
  return out;
}

}  // namespace bimon
