#include "symsing/groebner.hpp"

#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace symsing {

namespace {

// Full normal form against a fixed list of monic reducers. Every reduction of
// a single term counts one step against the budget.
Polynomial reduce_full(Polynomial p, const std::vector<const Polynomial*>& red, size_t* steps,
                       size_t max_steps) {
  if (p.is_zero()) return p;
  std::vector<Term> out;
  while (!p.is_zero()) {
    const Term lt = p.lead();
    bool reduced = false;
    for (const Polynomial* g : red) {
      if (!g || g->is_zero()) continue;
      if (!g->lead_mono().divides(lt.mono)) continue;
      auto m = Monomial::div(lt.mono, g->lead_mono());
      p.add_scaled(-lt.coef, *m, *g);
      if (steps && ++*steps > max_steps) throw BudgetExceeded(*steps);
      reduced = true;
      break;
    }
    if (!reduced) {
      out.push_back(lt);
      p.drop_lead();
    }
  }
  return Polynomial::from_terms(p.vars(), p.ord(), std::move(out));
}

struct Pair {
  size_t i, j;
  Monomial lcm;
  long wdeg;
};

// Pair bookkeeping in the style of Gebauer and Moeller: new pairs against h
// are pruned by the divisibility and coprimality criteria, old pairs by the
// chain criterion.
void update_pairs(std::vector<Polynomial>& basis, std::vector<Pair>& pairs, Polynomial h,
                  const std::vector<long>& weights) {
  const size_t t = basis.size();
  const Monomial& lth = h.lead_mono();

  struct Cand {
    size_t i;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Cand> cands;
  cands.reserve(t);
  for (size_t i = 0; i < t; ++i)
    cands.push_back(
        {i, Monomial::lcm(basis[i].lead_mono(), lth), basis[i].lead_mono().coprime(lth)});

  std::vector<Cand> kept;
  for (size_t a = 0; a < cands.size(); ++a) {
    const Cand& c = cands[a];
    bool keep = c.coprime;
    if (!keep) {
      bool dominated = false;
      for (size_t b = a + 1; b < cands.size() && !dominated; ++b)
        if (cands[b].lcm.divides(c.lcm)) dominated = true;
      for (size_t b = 0; b < kept.size() && !dominated; ++b)
        if (kept[b].lcm.divides(c.lcm)) dominated = true;
      keep = !dominated;
    }
    if (keep) kept.push_back(c);
  }

  std::vector<Pair> next;
  next.reserve(pairs.size() + kept.size());
  for (Pair& pr : pairs) {
    if (!lth.divides(pr.lcm) || Monomial::lcm(basis[pr.i].lead_mono(), lth) == pr.lcm ||
        Monomial::lcm(basis[pr.j].lead_mono(), lth) == pr.lcm)
      next.push_back(std::move(pr));
  }
  for (Cand& c : kept)
    if (!c.coprime) next.push_back(Pair{c.i, t, c.lcm, c.lcm.weighted_degree(weights)});
  pairs = std::move(next);
  basis.push_back(std::move(h));
}

size_t select_pair(const std::vector<Pair>& pairs) {
  size_t best = 0;
  for (size_t k = 1; k < pairs.size(); ++k) {
    const Pair& a = pairs[k];
    const Pair& b = pairs[best];
    if (a.wdeg != b.wdeg) {
      if (a.wdeg < b.wdeg) best = k;
      continue;
    }
    int c = Monomial::lex_cmp(a.lcm, b.lcm);
    if (c != 0) {
      if (c < 0) best = k;
      continue;
    }
    if (a.i != b.i ? a.i < b.i : a.j < b.j) best = k;
  }
  return best;
}

std::vector<const Polynomial*> pointers(const std::vector<Polynomial>& v, size_t skip = SIZE_MAX) {
  std::vector<const Polynomial*> out;
  out.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    if (i != skip) out.push_back(&v[i]);
  return out;
}

std::string fresh_name(const VarTable& t, const std::string& base) {
  std::string name = base;
  while (t.index_of(name)) name += '_';
  return name;
}

uint64_t fnv64(const std::string& s) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

GroebnerBasis GroebnerBasis::compute(const Ring& ring, std::vector<Polynomial> gens,
                                     const GroebnerOptions& opt) {
  GBStats stats;
  std::string key;
  if (opt.cache && opt.cache->enabled()) {
    key = GBCache::key_for(ring, gens);
    if (auto cached = opt.cache->load(ring, key)) {
      stats.from_cache = true;
      return GroebnerBasis(ring, std::move(*cached), stats);
    }
  }

  const std::vector<long>& weights = ring.vars->weights();
  std::vector<Polynomial> basis;
  std::vector<Pair> pairs;
  bool unit = false;

  auto insert = [&](Polynomial h) {
    h = reduce_full(std::move(h), pointers(basis), &stats.steps, opt.max_steps);
    if (h.is_zero()) return;
    if (h.lead_mono().is_one()) {
      unit = true;
      return;
    }
    h.make_monic();
    ++stats.nonzero_reductions;
    update_pairs(basis, pairs, std::move(h), weights);
  };

  for (Polynomial& g : gens) {
    if (unit) break;
    Polynomial h = g.with_order(ring.ord);
    insert(std::move(h));
  }

  while (!unit && !pairs.empty()) {
    size_t k = select_pair(pairs);
    Pair pr = std::move(pairs[k]);
    pairs[k] = std::move(pairs.back());
    pairs.pop_back();
    ++stats.pairs_processed;

    Polynomial s = Polynomial::from_terms(ring.vars, ring.ord, {});
    s.add_scaled(Cyclo(1), *Monomial::div(pr.lcm, basis[pr.i].lead_mono()), basis[pr.i]);
    s.add_scaled(Cyclo(-1), *Monomial::div(pr.lcm, basis[pr.j].lead_mono()), basis[pr.j]);
    insert(std::move(s));
  }

  if (unit) {
    basis.assign(1, ring.one().with_order(ring.ord));
    pairs.clear();
  } else {
    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<size_t> order(basis.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return ring.ord->less(basis[a].lead_mono(), basis[b].lead_mono());
    });
    std::vector<Polynomial> minimal;
    for (size_t idx : order) {
      bool redundant = false;
      for (const Polynomial& kept : minimal)
        if (kept.lead_mono().divides(basis[idx].lead_mono())) {
          redundant = true;
          break;
        }
      if (!redundant) minimal.push_back(basis[idx]);
    }
    // tail-reduce each element against the others
    for (size_t i = 0; i < minimal.size(); ++i) {
      Polynomial h =
          reduce_full(minimal[i], pointers(minimal, i), &stats.steps, opt.max_steps);
      h.make_monic();
      minimal[i] = std::move(h);
    }
    basis = std::move(minimal);
  }

  if (opt.cache && opt.cache->enabled() && !stats.from_cache) opt.cache->store(key, basis);
  return GroebnerBasis(ring, std::move(basis), stats);
}

bool GroebnerBasis::is_unit_ideal() const {
  return g_.size() == 1 && !g_[0].is_zero() && g_[0].lead_mono().is_one();
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  Polynomial q = p.with_order(ring_.ord);
  return reduce_full(std::move(q), pointers(g_), nullptr, 0);
}

Polynomial inject(const Polynomial& p, const Ring& target, size_t offset) {
  const VarTable& src = *p.vars();
  const VarTable& dst = *target.vars;
  if (offset + src.size() > dst.size()) throw std::invalid_argument("inject: block out of range");
  for (size_t i = 0; i < src.size(); ++i)
    if (src.name(i) != dst.name(offset + i))
      throw std::invalid_argument("inject: variable names do not line up");
  std::vector<Term> terms;
  terms.reserve(p.nterms());
  for (const Term& t : p.terms()) {
    Monomial m(dst.size());
    for (size_t i = 0; i < src.size(); ++i) m.set_exp(offset + i, t.mono.exp(i));
    terms.push_back({std::move(m), t.coef});
  }
  return Polynomial::from_terms(target.vars, target.ord, std::move(terms));
}

std::optional<Polynomial> project(const Polynomial& p, const Ring& target, size_t offset) {
  const VarTable& src = *p.vars();
  const VarTable& dst = *target.vars;
  if (offset + dst.size() > src.size()) throw std::invalid_argument("project: block out of range");
  for (size_t i = 0; i < dst.size(); ++i)
    if (dst.name(i) != src.name(offset + i))
      throw std::invalid_argument("project: variable names do not line up");
  std::vector<Term> terms;
  terms.reserve(p.nterms());
  for (const Term& t : p.terms()) {
    Monomial m(dst.size());
    for (size_t i = 0; i < src.size(); ++i) {
      int32_t e = t.mono.exp(i);
      if (e == 0) continue;
      if (i < offset || i >= offset + dst.size()) return std::nullopt;
      m.set_exp(i - offset, e);
    }
    terms.push_back({std::move(m), t.coef});
  }
  return Polynomial::from_terms(target.vars, target.ord, std::move(terms));
}

Ring prepend_vars(const Ring& r, const std::vector<std::string>& names,
                  const std::vector<long>& weights) {
  if (names.size() != weights.size()) throw std::invalid_argument("prepend_vars arity");
  std::vector<std::string> all = names;
  std::vector<long> w = weights;
  for (size_t i = 0; i < r.nvars(); ++i) {
    all.push_back(r.vars->name(i));
    w.push_back(r.vars->weight(i));
  }
  return Ring::make(VarTable(std::move(all), std::move(w)));
}

namespace {

// Basis of the ideal under a front-block elimination order, filtered to the
// polynomials avoiding the first k variables; results stay in the block ring.
std::vector<Polynomial> elim_front_block(const Ring& ext, std::vector<Polynomial> gens, size_t k,
                                         const GroebnerOptions& opt) {
  Ring br = ext.with_order(MonomialOrder::block_elim(k, ext.nvars()));
  auto gb = GroebnerBasis::compute(br, std::move(gens), opt);
  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.gens()) {
    bool touches = false;
    for (size_t v = 0; v < k && !touches; ++v)
      if (g.lead_mono().exp(v) > 0) touches = true;
    if (touches) continue;
    // the elimination property guarantees the tail avoids the block as well
    for (const Term& t : g.terms())
      for (size_t v = 0; v < k; ++v)
        if (t.mono.exp(v) > 0) throw std::logic_error("elimination property violated");
    out.push_back(g);
  }
  return out;
}

}  // namespace

std::pair<Ring, std::vector<Polynomial>> eliminate(const Ring& ring,
                                                   const std::vector<Polynomial>& gens,
                                                   size_t nelim, const GroebnerOptions& opt) {
  if (nelim > ring.nvars()) throw std::invalid_argument("eliminate: too many variables");
  std::vector<std::string> names;
  std::vector<long> w;
  for (size_t i = nelim; i < ring.nvars(); ++i) {
    names.push_back(ring.vars->name(i));
    w.push_back(ring.vars->weight(i));
  }
  Ring small = Ring::make(VarTable(std::move(names), std::move(w)));
  std::vector<Polynomial> kept = elim_front_block(ring, gens, nelim, opt);
  std::vector<Polynomial> out;
  for (const Polynomial& g : kept) {
    auto q = project(g, small, nelim);
    if (!q) throw std::logic_error("eliminate: projection failed");
    out.push_back(std::move(*q));
  }
  return {std::move(small), std::move(out)};
}

std::vector<Polynomial> saturate(const Ring& ring, const std::vector<Polynomial>& gens,
                                 const Polynomial& f, const GroebnerOptions& opt) {
  std::string tname = fresh_name(*ring.vars, "t_sat");
  Ring ext = prepend_vars(ring, {tname}, {1});
  std::vector<Polynomial> egens;
  for (const Polynomial& g : gens) egens.push_back(inject(g, ext, 1));
  egens.push_back(ext.one() - ext.var(size_t{0}) * inject(f, ext, 1));
  std::vector<Polynomial> kept = elim_front_block(ext, std::move(egens), 1, opt);
  std::vector<Polynomial> out;
  for (const Polynomial& g : kept) {
    auto q = project(g, ring, 1);
    if (!q) throw std::logic_error("saturate: projection failed");
    out.push_back(std::move(*q));
  }
  return out;
}

bool in_radical(const Ring& ring, const std::vector<Polynomial>& gens, const Polynomial& f,
                const GroebnerOptions& opt) {
  std::string tname = fresh_name(*ring.vars, "t_rad");
  Ring ext = prepend_vars(ring, {tname}, {1});
  std::vector<Polynomial> egens;
  for (const Polynomial& g : gens) egens.push_back(inject(g, ext, 1));
  egens.push_back(ext.one() - ext.var(size_t{0}) * inject(f, ext, 1));
  return GroebnerBasis::compute(ext, std::move(egens), opt).is_unit_ideal();
}

std::vector<Polynomial> ideal_quotient(const Ring& ring, const std::vector<Polynomial>& gens,
                                       const Polynomial& f, const GroebnerOptions& opt) {
  if (f.is_zero()) return {ring.one()};
  std::string tname = fresh_name(*ring.vars, "t_quo");
  Ring ext = prepend_vars(ring, {tname}, {1});
  Polynomial t = ext.var(size_t{0});
  std::vector<Polynomial> egens;
  for (const Polynomial& g : gens) egens.push_back(t * inject(g, ext, 1));
  egens.push_back((ext.one() - t) * inject(f, ext, 1));
  std::vector<Polynomial> kept = elim_front_block(ext, std::move(egens), 1, opt);
  std::vector<Polynomial> out;
  for (const Polynomial& g : kept) {
    auto q = project(g, ring, 1);
    if (!q) throw std::logic_error("ideal quotient: projection failed");
    auto d = divide_exact(*q, f.with_order(ring.ord));
    if (!d) throw std::logic_error("ideal quotient: intersection element not divisible");
    out.push_back(std::move(*d));
  }
  return out;
}

bool is_regular_sequence(const Ring& ring, std::vector<Polynomial> gens,
                         const std::vector<Polynomial>& fs, const GroebnerOptions& opt) {
  GroebnerBasis current = GroebnerBasis::compute(ring, std::move(gens), opt);
  for (const Polynomial& f : fs) {
    if (current.is_unit_ideal()) return false;
    std::vector<Polynomial> colon = ideal_quotient(ring, current.gens(), f, opt);
    GroebnerBasis colon_gb = GroebnerBasis::compute(ring, std::move(colon), opt);
    if (!(colon_gb.gens() == current.gens())) return false;
    std::vector<Polynomial> next = current.gens();
    next.push_back(f.with_order(ring.ord));
    current = GroebnerBasis::compute(ring, std::move(next), opt);
  }
  return !current.is_unit_ideal();
}

namespace {

Polynomial det_laplace(const Ring& ring, const std::vector<std::vector<Polynomial>>& m) {
  const size_t n = m.size();
  if (n == 0) return ring.one();
  if (n == 1) return m[0][0];
  Polynomial acc = ring.zero();
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    sub.reserve(n - 1);
    for (size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * det_laplace(ring, sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Advances idx to the next k-subset of {0..limit-1} in lexicographic order.
bool next_subset(std::vector<size_t>& idx, size_t limit) {
  const size_t k = idx.size();
  for (size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < limit) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool jacobian_smoothness(const Ring& ring, const std::vector<Polynomial>& gens, long codim,
                         const GroebnerOptions& opt) {
  if (codim < 0) throw std::invalid_argument("jacobian_smoothness: negative codimension");
  const size_t k = static_cast<size_t>(codim);
  const size_t nrows = gens.size();
  const size_t ncols = ring.nvars();
  if (k > nrows || k > ncols)
    throw std::invalid_argument("jacobian_smoothness: codimension exceeds the Jacobian size");

  std::vector<std::vector<Polynomial>> jac;
  jac.reserve(nrows);
  for (const Polynomial& g : gens) {
    std::vector<Polynomial> row;
    row.reserve(ncols);
    for (size_t v = 0; v < ncols; ++v) row.push_back(g.derivative(v));
    jac.push_back(std::move(row));
  }

  std::vector<Polynomial> aug = gens;
  std::vector<size_t> rows(k), cols(k);
  for (size_t i = 0; i < k; ++i) rows[i] = i;
  do {
    for (size_t i = 0; i < k; ++i) cols[i] = i;
    do {
      std::vector<std::vector<Polynomial>> sub;
      sub.reserve(k);
      for (size_t r : rows) {
        std::vector<Polynomial> row;
        row.reserve(k);
        for (size_t c : cols) row.push_back(jac[r][c]);
        sub.push_back(std::move(row));
      }
      Polynomial minor = det_laplace(ring, sub);
      if (!minor.is_zero()) aug.push_back(std::move(minor));
    } while (next_subset(cols, ncols));
  } while (next_subset(rows, nrows));

  return GroebnerBasis::compute(ring, std::move(aug), opt).is_unit_ideal();
}

std::optional<std::pair<size_t, size_t>> linear_elimination_witness(
    const Ring& ring, const std::vector<Polynomial>& rels, size_t var) {
  if (var >= ring.nvars()) throw std::invalid_argument("linear_elimination_witness: bad variable");
  for (size_t ri = 0; ri < rels.size(); ++ri) {
    std::optional<size_t> partner;
    bool qualifies = true;
    size_t linear_terms = 0;
    for (const Term& t : rels[ri].terms()) {
      const long e = t.mono.exp(var);
      if (e == 0) continue;
      if (e > 1) {
        qualifies = false;
        break;
      }
      // the var-linear part must be a single term var * partner
      if (++linear_terms > 1 || t.mono.total_degree() != 2) {
        qualifies = false;
        break;
      }
      for (size_t v = 0; v < ring.nvars(); ++v)
        if (v != var && t.mono.exp(v) == 1) partner = v;
    }
    if (qualifies && linear_terms == 1 && partner) return std::make_pair(ri, *partner);
  }
  return std::nullopt;
}

long krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return -1;
  const size_t n = gb.ring().nvars();
  if (n > 20) throw std::invalid_argument("dimension search too large");
  std::vector<Monomial> leads;
  for (const Polynomial& g : gb.gens())
    if (!g.is_zero()) leads.push_back(g.lead_mono());
  long best = 0;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    long size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const Monomial& m : leads) {
      bool supported = true;
      for (size_t v = 0; v < n && supported; ++v)
        if (m.exp(v) > 0 && !(mask & (1u << v))) supported = false;
      if (supported) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return Monomial::lex_cmp(a, b) < 0;
  });
  std::vector<Monomial> out;
  for (Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(m));
  }
  return out;
}

std::string mono_key(const std::vector<Monomial>& gens) {
  std::ostringstream os;
  for (const Monomial& m : gens) {
    for (size_t i = 0; i < m.nvars(); ++i) os << m.exp(i) << ',';
    os << ';';
  }
  return os.str();
}

UniPoly hilb_num(std::vector<Monomial> gens, const std::vector<long>& w,
                 std::map<std::string, UniPoly>& memo) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return UniPoly(Cyclo(1));
  if (gens.front().is_one()) return UniPoly();

  const size_t n = gens.front().nvars();
  std::vector<int> occurs(n, 0);
  for (const Monomial& m : gens)
    for (size_t v = 0; v < n; ++v)
      if (m.exp(v) > 0) ++occurs[v];
  size_t pivot = 0;
  int best = 0;
  for (size_t v = 0; v < n; ++v)
    if (occurs[v] > best) {
      best = occurs[v];
      pivot = v;
    }
  if (best <= 1) {
    // pairwise coprime generators
    UniPoly prod(Cyclo(1));
    for (const Monomial& m : gens)
      prod *= UniPoly(Cyclo(1)) - UniPoly::t(m.weighted_degree(w));
    return prod;
  }

  std::string key = mono_key(gens);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // split on the pivot variable x: N(M) = N(M + <x>) + t^w(x) N(M : x)
  std::vector<Monomial> plus;
  plus.push_back(Monomial::var(n, pivot));
  for (const Monomial& m : gens)
    if (m.exp(pivot) == 0) plus.push_back(m);
  std::vector<Monomial> colon;
  for (const Monomial& m : gens) {
    Monomial q = m;
    if (q.exp(pivot) > 0) q.set_exp(pivot, q.exp(pivot) - 1);
    colon.push_back(std::move(q));
  }
  UniPoly res = hilb_num(std::move(plus), w, memo) +
                UniPoly::t(w[pivot]) * hilb_num(std::move(colon), w, memo);
  memo.emplace(std::move(key), res);
  return res;
}

}  // namespace

HilbertSeries hilbert_series(const GroebnerBasis& gb) {
  const std::vector<long>& w = gb.ring().vars->weights();
  std::vector<Monomial> leads;
  for (const Polynomial& g : gb.gens())
    if (!g.is_zero()) leads.push_back(g.lead_mono());
  std::map<std::string, UniPoly> memo;
  UniPoly num = hilb_num(std::move(leads), w, memo);
  return HilbertSeries{std::move(num), w};
}

GBCache::GBCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string GBCache::key_for(const Ring& ring, const std::vector<Polynomial>& gens) {
  std::ostringstream os;
  os << "vars";
  for (size_t i = 0; i < ring.nvars(); ++i)
    os << ' ' << ring.vars->name(i) << ':' << ring.vars->weight(i);
  os << '\n' << "order " << ring.ord->descriptor() << '\n';
  std::vector<std::string> lines;
  for (const Polynomial& g : gens) lines.push_back(g.to_string());
  std::sort(lines.begin(), lines.end());
  for (const std::string& s : lines) os << s << '\n';
  return os.str();
}

std::optional<std::vector<Polynomial>> GBCache::load(const Ring& ring,
                                                     const std::string& key) const {
  if (!enabled()) return std::nullopt;
  char name[32];
  std::snprintf(name, sizeof name, "gb-%016llx.txt",
                static_cast<unsigned long long>(fnv64(key)));
  std::ifstream in(dir_ / name);
  if (!in) return std::nullopt;
  try {
    std::string line;
    if (!std::getline(in, line) || line != "symsing gb cache v1") return std::nullopt;
    if (!std::getline(in, line) || line.rfind("keylen ", 0) != 0) return std::nullopt;
    size_t klen = std::stoul(line.substr(7));
    if (klen > (64u << 20)) return std::nullopt;
    std::string stored(klen, '\0');
    if (!in.read(stored.data(), static_cast<std::streamsize>(klen))) return std::nullopt;
    if (stored != key) return std::nullopt;  // hash collision or stale file
    if (!std::getline(in, line)) return std::nullopt;  // end the key block line
    if (!std::getline(in, line) || line.rfind("count ", 0) != 0) return std::nullopt;
    size_t count = std::stoul(line.substr(6));
    std::vector<Polynomial> basis;
    basis.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!std::getline(in, line)) return std::nullopt;
      basis.push_back(ring.parse(line));
    }
    return basis;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void GBCache::store(const std::string& key, const std::vector<Polynomial>& basis) const {
  if (!enabled()) return;
  char name[32];
  std::snprintf(name, sizeof name, "gb-%016llx.txt",
                static_cast<unsigned long long>(fnv64(key)));
  std::random_device rd;
  std::filesystem::path tmp =
      dir_ / ("tmp-" + std::to_string(rd()) + "-" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << "symsing gb cache v1\n";
    out << "keylen " << key.size() << '\n';
    out << key << '\n';
    out << "count " << basis.size() << '\n';
    for (const Polynomial& g : basis) out << g.to_string() << '\n';
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, dir_ / name, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace symsing
