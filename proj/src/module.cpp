#include "hecke/module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hecke {

bool ModuleRep::is_combinatorial() const {
  for (const auto& a : act)
    for (const auto& c : a.col) {
      if (c.e.size() > 1) return false;
      if (c.e.size() == 1 && c.e[0].second != 1) return false;
    }
  return true;
}

bool is_intertwiner(const ModuleMap& f) {
  for (int i = 0; i < f.src->n - 1; ++i) {
    if (mul(f.mat, f.src->act[i]) != mul(f.tgt->act[i], f.mat)) return false;
  }
  return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (g.src != f.tgt) throw std::invalid_argument("compose: chain mismatch");
  return ModuleMap{f.src, g.tgt, mul(g.mat, f.mat)};
}

SrtModule projective_module(const GeneralizedComposition& gc) {
  SrtModule out{RibbonShape(gc), {}, {}, nullptr};
  out.tabs = enumerate_srt(out.shape);
  for (size_t i = 0; i < out.tabs.size(); ++i)
    out.index[out.tabs[i]] = static_cast<int>(i);
  auto rep = std::make_shared<ModuleRep>();
  rep->n = out.shape.n;
  for (const auto& t : out.tabs) rep->basis.push_back(to_string(out.shape, t));
  const int d = static_cast<int>(out.tabs.size());
  for (int i = 1; i <= rep->n - 1; ++i) {
    SparseMat a = SparseMat::zero(d, d);
    for (int c = 0; c < d; ++c) {
      auto r = pi_on_srt(out.shape, i, out.tabs[c]);
      switch (r.kind) {
        case PiKind::Zero: break;
        case PiKind::Fixed: a.col[c] = SparseVec::unit(c); break;
        case PiKind::Moved: a.col[c] = SparseVec::unit(out.index.at(r.moved)); break;
      }
    }
    rep->act.push_back(std::move(a));
  }
  out.rep = rep;
  return out;
}

SrtModule projective_module(const Composition& a) {
  if (a.empty()) return projective_module(GeneralizedComposition{});
  return projective_module(GeneralizedComposition{a});
}

SitModule dual_immaculate_module(const Composition& a) {
  SitModule out{a, enumerate_sit(a), {}, nullptr};
  for (size_t i = 0; i < out.tabs.size(); ++i)
    out.index[out.tabs[i]] = static_cast<int>(i);
  auto rep = std::make_shared<ModuleRep>();
  rep->n = a.size();
  for (const auto& t : out.tabs) rep->basis.push_back(to_string(t));
  const int d = static_cast<int>(out.tabs.size());
  for (int i = 1; i <= rep->n - 1; ++i) {
    SparseMat m = SparseMat::zero(d, d);
    for (int c = 0; c < d; ++c) {
      auto r = pi_on_sit(a, i, out.tabs[c]);
      switch (r.kind) {
        case PiKind::Zero: break;
        case PiKind::Fixed: m.col[c] = SparseVec::unit(c); break;
        case PiKind::Moved: m.col[c] = SparseVec::unit(out.index.at(r.moved)); break;
      }
    }
    rep->act.push_back(std::move(m));
  }
  out.rep = rep;
  return out;
}

ModulePtr simple_module(const Composition& beta) {
  auto rep = std::make_shared<ModuleRep>();
  rep->n = beta.size();
  rep->basis = {"v_" + to_string(beta)};
  auto des = descent_set(beta);
  for (int i = 1; i <= rep->n - 1; ++i) {
    SparseMat a = SparseMat::zero(1, 1);
    if (!des.count(i)) a.col[0] = SparseVec::unit(0);
    rep->act.push_back(std::move(a));
  }
  return rep;
}

RegularModule regular_module(int n) {
  RegularModule out;
  out.perms = all_permutations(n);
  std::sort(out.perms.begin(), out.perms.end());
  for (size_t i = 0; i < out.perms.size(); ++i)
    out.index[out.perms[i]] = static_cast<int>(i);
  auto rep = std::make_shared<ModuleRep>();
  rep->n = n;
  for (const auto& p : out.perms) rep->basis.push_back(to_string(p));
  const int d = static_cast<int>(out.perms.size());
  for (int i = 1; i <= n - 1; ++i) {
    SparseMat a = SparseMat::zero(d, d);
    auto si = Permutation::simple(i, n);
    for (int c = 0; c < d; ++c) {
      auto prod = si * out.perms[c];
      if (length(prod) > length(out.perms[c]))
        a.col[c] = SparseVec::unit(out.index.at(prod));
      else
        a.col[c] = SparseVec::unit(c);
    }
    rep->act.push_back(std::move(a));
  }
  out.rep = rep;
  return out;
}

DirectSum direct_sum(const std::vector<ModulePtr>& parts) {
  DirectSum out;
  out.parts = parts;
  auto rep = std::make_shared<ModuleRep>();
  rep->n = parts.empty() ? 0 : parts[0]->n;
  int total = 0;
  for (const auto& p : parts) {
    if (p->n != rep->n) throw std::invalid_argument("direct_sum: rank mismatch");
    out.offset.push_back(total);
    total += p->dim();
  }
  for (size_t k = 0; k < parts.size(); ++k)
    for (const auto& b : parts[k]->basis)
      rep->basis.push_back("#" + std::to_string(k) + ":" + b);
  for (int i = 0; i < rep->n - 1; ++i) {
    SparseMat a = SparseMat::zero(total, total);
    for (size_t k = 0; k < parts.size(); ++k) {
      int off = out.offset[k];
      const auto& blk = parts[k]->act[i];
      for (int c = 0; c < blk.cols; ++c)
        for (const auto& [r, v] : blk.col[c].e)
          a.col[off + c].e.emplace_back(off + r, v);
    }
    rep->act.push_back(std::move(a));
  }
  out.rep = rep;
  return out;
}

SparseVec apply_word(const ModuleRep& m, const std::vector<int>& word,
                     const SparseVec& v) {
  SparseVec cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = mul(m.act[*it - 1], cur);
  return cur;
}

SparseVec apply_pibar(const ModuleRep& m, int i, const SparseVec& v) {
  return axpy(mul(m.act[i - 1], v), Rat(-1), v);
}

SparseVec apply_pibar_word(const ModuleRep& m, const std::vector<int>& word,
                           const SparseVec& v) {
  SparseVec cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = apply_pibar(m, *it, cur);
  return cur;
}

std::vector<ModuleMap> hom_space(const ModulePtr& m, const ModulePtr& n) {
  const int dm = m->dim(), dn = n->dim();
  const int unknowns = dm * dn;  // X[r][c] -> r*dm + c
  std::vector<SparseVec> rows;
  for (int i = 0; i < m->n - 1; ++i) {
    const auto& am = m->act[i];
    const auto& an = n->act[i];
    auto an_rows = to_rows(an);
    for (int r = 0; r < dn; ++r) {
      for (int c = 0; c < dm; ++c) {
        std::map<int, Rat> terms;
        for (const auto& [k, a] : am.col[c].e) terms[r * dm + k] += a;
        for (const auto& [k, b] : an_rows[r].e) terms[k * dm + c] -= b;
        SparseVec row;
        for (auto& [idx, v] : terms)
          if (v != 0) row.e.emplace_back(idx, std::move(v));
        if (!row.zero()) rows.push_back(std::move(row));
      }
    }
  }
  auto ker = kernel(from_rows(rows, static_cast<int>(rows.size()), unknowns));
  std::vector<ModuleMap> out;
  for (const auto& x : ker) {
    SparseMat mat = SparseMat::zero(dn, dm);
    for (const auto& [idx, v] : x.e) mat.col[idx % dm].e.emplace_back(idx / dm, v);
    out.push_back(ModuleMap{m, n, std::move(mat)});
  }
  return out;
}

int hom_dim(const ModulePtr& m, const ModulePtr& n) {
  return static_cast<int>(hom_space(m, n).size());
}

std::vector<ModuleMap> hom_from_generators(const ModulePtr& m,
                                           const std::vector<int>& gens,
                                           const ModulePtr& n) {
  const int dm = m->dim(), dn = n->dim();
  const int unknowns = static_cast<int>(gens.size()) * dn;
  // X[c] maps the unknown vector to the image of basis element c; columns of
  // X[c] are sparse vectors in N.
  std::vector<std::vector<SparseVec>> X(dm);
  std::vector<bool> visited(dm, false);
  std::vector<int> queue;
  for (size_t g = 0; g < gens.size(); ++g) {
    int c = gens[g];
    if (visited[c]) continue;  // reachable from an earlier generator
    visited[c] = true;
    X[c].assign(unknowns, SparseVec{});
    for (int r = 0; r < dn; ++r)
      X[c][static_cast<int>(g) * dn + r] = SparseVec::unit(r);
    queue.push_back(c);
  }
  std::vector<SparseVec> rows;
  auto apply_block = [&](const SparseMat& a, const std::vector<SparseVec>& xc) {
    std::vector<SparseVec> out(unknowns);
    for (int u = 0; u < unknowns; ++u) out[u] = mul(a, xc[u]);
    return out;
  };
  // rows of (lhs - rhs) as covectors over the unknowns, one per N-coordinate
  auto add_rows = [&](const std::vector<SparseVec>& lhs,
                      const std::vector<SparseVec>* rhs) {
    std::vector<std::map<int, Rat>> byrow(dn);
    for (int u = 0; u < unknowns; ++u) {
      for (const auto& [r, v] : lhs[u].e) byrow[r][u] += v;
      if (rhs)
        for (const auto& [r, v] : (*rhs)[u].e) byrow[r][u] -= v;
    }
    for (int r = 0; r < dn; ++r) {
      SparseVec row;
      for (auto& [u, v] : byrow[r])
        if (v != 0) row.e.emplace_back(u, v);
      if (!row.zero()) rows.push_back(std::move(row));
    }
  };
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int c = queue[qi];
    for (int i = 0; i < m->n - 1; ++i) {
      const auto& col = m->act[i].col[c];
      auto img = apply_block(n->act[i], X[c]);
      if (col.zero()) {
        add_rows(img, nullptr);  // A^N x_c = 0
      } else {
        int t = col.e[0].first;
        if (t == c) {
          add_rows(img, &X[c]);  // A^N x_c = x_c
        } else if (!visited[t]) {
          visited[t] = true;
          X[t] = std::move(img);
          queue.push_back(t);
        } else {
          add_rows(img, &X[t]);  // A^N x_c = x_t
        }
      }
    }
  }
  for (int c = 0; c < dm; ++c)
    if (!visited[c])
      throw std::invalid_argument("hom_from_generators: generators do not generate");
  auto ker = kernel(from_rows(rows, static_cast<int>(rows.size()), unknowns));
  std::vector<ModuleMap> out;
  for (const auto& x : ker) {
    SparseMat mat = SparseMat::zero(dn, dm);
    for (int c = 0; c < dm; ++c) {
      SparseVec v;
      for (const auto& [u, coef] : x.e) v = axpy(v, coef, X[c][u]);
      mat.col[c] = std::move(v);
    }
    out.push_back(ModuleMap{m, n, std::move(mat)});
  }
  return out;
}

CoordSubmodule coordinate_submodule(const ModulePtr& m, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  std::vector<int> pos(m->dim(), -1);
  for (size_t k = 0; k < keep.size(); ++k) pos[keep[k]] = static_cast<int>(k);
  auto rep = std::make_shared<ModuleRep>();
  rep->n = m->n;
  const int d = static_cast<int>(keep.size());
  for (int k = 0; k < d; ++k) rep->basis.push_back(m->basis[keep[k]]);
  for (const auto& a : m->act) {
    SparseMat c = SparseMat::zero(d, d);
    for (int k = 0; k < d; ++k) {
      for (const auto& [r, v] : a.col[keep[k]].e) {
        if (pos[r] < 0)
          throw std::invalid_argument("coordinate_submodule: not action-closed");
        c.col[k].e.emplace_back(pos[r], v);
      }
    }
    rep->act.push_back(std::move(c));
  }
  SparseMat inc = SparseMat::zero(m->dim(), d);
  for (int k = 0; k < d; ++k) inc.col[k] = SparseVec::unit(keep[k]);
  CoordSubmodule out;
  out.inclusion = ModuleMap{rep, m, std::move(inc)};
  out.rep = rep;
  out.parent_index = std::move(keep);
  return out;
}

ModulePtr zero_module(int n) {
  auto rep = std::make_shared<ModuleRep>();
  rep->n = n;
  for (int i = 0; i < n - 1; ++i) rep->act.push_back(SparseMat::zero(0, 0));
  return rep;
}

std::vector<SparseVec> simple_covectors(const ModuleRep& m, const Composition& beta) {
  if (beta.size() != m.n) throw std::invalid_argument("simple_covectors: size");
  auto des = descent_set(beta);
  std::vector<SparseVec> rows;
  for (int i = 1; i <= m.n - 1; ++i) {
    Rat chi = des.count(i) ? 0 : 1;
    // f A_i = chi f: one equation per column
    for (int c = 0; c < m.dim(); ++c) {
      SparseVec row = m.act[i - 1].col[c];
      if (chi != 0) row = axpy(row, -chi, SparseVec::unit(c));
      if (!row.zero()) rows.push_back(std::move(row));
    }
  }
  return kernel(from_rows(rows, static_cast<int>(rows.size()), m.dim()));
}

std::vector<SparseVec> socle_pattern(const ModuleRep& m, const Composition& beta) {
  if (beta.size() != m.n) throw std::invalid_argument("socle_pattern: size");
  auto des = descent_set(beta);
  std::vector<SparseVec> rows;
  for (int i = 1; i <= m.n - 1; ++i) {
    Rat chi = des.count(i) ? 0 : 1;
    auto arows = to_rows(m.act[i - 1]);
    for (int r = 0; r < m.dim(); ++r) {
      SparseVec row = arows[r];
      if (chi != 0) row = axpy(row, -chi, SparseVec::unit(r));
      if (!row.zero()) rows.push_back(std::move(row));
    }
  }
  return kernel(from_rows(rows, static_cast<int>(rows.size()), m.dim()));
}

namespace {

struct SignedUnionFind {
  std::vector<int> parent, rnk, par;  // par = parity to parent
  std::vector<char> dead;
  explicit SignedUnionFind(int n)
      : parent(n), rnk(n, 0), par(n, 0), dead(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [r, p] = find(parent[x]);
    parent[x] = r;
    par[x] ^= p;
    return {r, par[x]};
  }
  void kill(int x) { dead[find(x).first] = 1; }
  void unite(int a, int b, int parity) {  // v_a = (-1)^parity v_b
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != parity) dead[ra] = 1;  // v = -v forces 0
      return;
    }
    char d = dead[ra] | dead[rb];
    if (rnk[ra] < rnk[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent[rb] = ra;
    par[rb] = pa ^ pb ^ parity;
    if (rnk[ra] == rnk[rb]) ++rnk[ra];
    dead[ra] = d;
  }
};

}  // namespace

namespace {

SignedUnionFind socle_union_find(const ModuleRep& m, const Composition& beta);

}  // namespace

int socle_pattern_dim_fast(const ModuleRep& m, const Composition& beta) {
  auto uf = socle_union_find(m, beta);
  const int d = m.dim();
  int dim = 0;
  for (int x = 0; x < d; ++x) {
    auto [r, p] = uf.find(x);
    (void)p;
    if (r == x && !uf.dead[r]) ++dim;
  }
  return dim;
}

std::vector<SparseVec> socle_pattern_fast(const ModuleRep& m,
                                          const Composition& beta) {
  auto uf = socle_union_find(m, beta);
  const int d = m.dim();
  std::map<int, SparseVec> by_root;
  for (int x = 0; x < d; ++x) {
    auto [r, p] = uf.find(x);
    if (uf.dead[r]) continue;
    by_root[r].e.emplace_back(x, p ? Rat(-1) : Rat(1));
  }
  std::vector<SparseVec> out;
  for (auto& [r, v] : by_root) out.push_back(std::move(v));
  return out;
}

namespace {

SignedUnionFind socle_union_find(const ModuleRep& m, const Composition& beta) {
  if (!m.is_combinatorial())
    throw std::invalid_argument("socle fast path: not combinatorial");
  auto des = descent_set(beta);
  const int d = m.dim();
  SignedUnionFind uf(d);
  for (int i = 1; i <= m.n - 1; ++i) {
    const auto& a = m.act[i - 1];
    bool chi_one = !des.count(i);
    for (int c = 0; c < d; ++c) {
      const auto& col = a.col[c];
      bool zero = col.zero();
      bool fixed = !zero && col.e[0].first == c;
      int target = zero ? -1 : col.e[0].first;
      if (chi_one) {
        if (zero || (!fixed)) uf.kill(c);  // zeros and moved sources die
      } else {
        if (fixed) {
          // is c the target of a moved source? coefficient v_c + v_s
          // handled below from the source side; the pure-fixed constraint
          // v_c = 0 must only fire when no source maps onto c
        } else if (!zero) {
          // moved source c -> target: contributes to the target's equation
          uf.unite(c, target, 1);
        }
      }
    }
    if (!chi_one) {
      // kill fixed columns that are not move targets
      std::vector<char> is_target(d, 0);
      for (int c = 0; c < d; ++c) {
        const auto& col = a.col[c];
        if (!col.zero() && col.e[0].first != c) is_target[col.e[0].first] = 1;
      }
      for (int c = 0; c < d; ++c) {
        const auto& col = a.col[c];
        if (!col.zero() && col.e[0].first == c && !is_target[c]) uf.kill(c);
      }
    }
  }
  return uf;
}

}  // namespace

Span radical(const ModuleRep& m) {
  std::vector<SparseVec> covecs;
  for (const auto& beta : compositions_of(m.n)) {
    auto v = simple_covectors(m, beta);
    covecs.insert(covecs.end(), v.begin(), v.end());
  }
  auto ker = kernel(from_rows(covecs, static_cast<int>(covecs.size()), m.dim()));
  return Span(std::move(ker), m.dim());
}

std::vector<std::pair<Composition, std::vector<SparseVec>>> socle(const ModuleRep& m) {
  std::vector<std::pair<Composition, std::vector<SparseVec>>> out;
  const bool fast = m.is_combinatorial();
  for (const auto& beta : compositions_of(m.n)) {
    auto v = fast ? socle_pattern_fast(m, beta) : socle_pattern(m, beta);
    if (!v.empty()) out.emplace_back(beta, std::move(v));
  }
  return out;
}

Span socle_span(const ModuleRep& m) {
  std::vector<SparseVec> vecs;
  for (auto& [beta, vs] : socle(m))
    vecs.insert(vecs.end(), vs.begin(), vs.end());
  return Span(std::move(vecs), m.dim());
}

Character socle_character(const ModuleRep& m) {
  Character out;
  if (m.is_combinatorial()) {
    for (const auto& beta : compositions_of(m.n)) {
      int d = socle_pattern_dim_fast(m, beta);
      if (d) out[beta] = d;
    }
  } else {
    for (auto& [beta, vs] : socle(m)) out[beta] = static_cast<int>(vs.size());
  }
  return out;
}

SubModule submodule(const ModulePtr& m, std::vector<SparseVec> gens) {
  Span span(std::move(gens), m->dim());
  // close under the action
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<SparseVec> extra;
    for (const auto& b : span.rows)
      for (const auto& a : m->act) {
        auto w = mul(a, b);
        if (!span.contains(w)) extra.push_back(std::move(w));
      }
    if (!extra.empty()) {
      grew = true;
      auto rows = span.rows;
      rows.insert(rows.end(), extra.begin(), extra.end());
      span = Span(std::move(rows), m->dim());
    }
  }
  auto rep = std::make_shared<ModuleRep>();
  rep->n = m->n;
  const int d = span.dim();
  for (int k = 0; k < d; ++k) rep->basis.push_back("s" + std::to_string(k));
  for (const auto& a : m->act) {
    SparseMat c = SparseMat::zero(d, d);
    for (int k = 0; k < d; ++k) {
      auto w = mul(a, span.rows[k]);
      auto coords = span.coordinates(w);
      for (int t = 0; t < d; ++t)
        if (coords[t] != 0) c.col[k].e.emplace_back(t, coords[t]);
    }
    rep->act.push_back(std::move(c));
  }
  SparseMat inc = SparseMat::zero(m->dim(), d);
  for (int k = 0; k < d; ++k) inc.col[k] = span.rows[k];
  ModuleMap incl{rep, m, std::move(inc)};
  return SubModule{rep, std::move(incl), std::move(span)};
}

QuotientModule quotient(const ModulePtr& m, const Span& sub) {
  const int d = m->dim();
  std::vector<bool> is_pivot(d, false);
  for (int p : sub.pivots) is_pivot[p] = true;
  std::vector<int> keep;  // quotient coordinates
  for (int c = 0; c < d; ++c)
    if (!is_pivot[c]) keep.push_back(c);
  const int q = static_cast<int>(keep.size());
  std::vector<int> pos(d, -1);
  for (int k = 0; k < q; ++k) pos[keep[k]] = k;

  auto project = [&](const SparseVec& v) {
    SparseVec r = sub.reduce(v);
    SparseVec out;
    for (const auto& [i, x] : r.e) out.e.emplace_back(pos[i], x);
    return out;
  };

  auto rep = std::make_shared<ModuleRep>();
  rep->n = m->n;
  for (int k = 0; k < q; ++k) rep->basis.push_back("q" + std::to_string(k));
  for (const auto& a : m->act) {
    SparseMat c = SparseMat::zero(q, q);
    for (int k = 0; k < q; ++k) c.col[k] = project(mul(a, SparseVec::unit(keep[k])));
    rep->act.push_back(std::move(c));
  }
  SparseMat proj = SparseMat::zero(q, d);
  for (int c = 0; c < d; ++c) proj.col[c] = project(SparseVec::unit(c));
  ModuleMap pr{m, rep, std::move(proj)};
  return QuotientModule{rep, std::move(pr)};
}

SubModule kernel_module(const ModuleMap& f) {
  return submodule(f.src, kernel(f.mat));
}

SubModule image_module(const ModuleMap& f) {
  std::vector<SparseVec> cols(f.mat.col.begin(), f.mat.col.end());
  return submodule(f.tgt, std::move(cols));
}

QuotientModule cokernel_module(const ModuleMap& f) {
  Span im(std::vector<SparseVec>(f.mat.col.begin(), f.mat.col.end()),
          f.mat.rows);
  return quotient(f.tgt, im);
}

Character composition_multiplicities(const ModulePtr& m) {
  Character out;
  ModulePtr cur = m;
  while (cur->dim() > 0) {
    auto rad = radical(*cur);
    auto layer = quotient(cur, rad);
    for (const auto& beta : compositions_of(cur->n)) {
      int d = static_cast<int>(socle_pattern(*layer.rep, beta).size());
      if (d) out[beta] += d;
    }
    if (rad.dim() == 0) break;
    cur = submodule(cur, rad.rows).rep;
  }
  return out;
}

std::vector<Character> radical_filtration(const ModulePtr& m) {
  std::vector<Character> out;
  ModulePtr cur = m;
  while (cur->dim() > 0) {
    auto rad = radical(*cur);
    auto layer = quotient(cur, rad);
    Character ch;
    for (const auto& beta : compositions_of(cur->n)) {
      int d = static_cast<int>(socle_pattern(*layer.rep, beta).size());
      if (d) ch[beta] += d;
    }
    out.push_back(std::move(ch));
    if (rad.dim() == 0) break;
    cur = submodule(cur, rad.rows).rep;
  }
  return out;
}

std::vector<std::string> check_relations(const ModuleRep& m) {
  std::vector<std::string> bad;
  const int g = m.n - 1;
  for (int i = 0; i < g; ++i) {
    if (mul(m.act[i], m.act[i]) != m.act[i])
      bad.push_back("pi_" + std::to_string(i + 1) + " not idempotent");
  }
  for (int i = 0; i + 1 < g; ++i) {
    auto lhs = mul(m.act[i], mul(m.act[i + 1], m.act[i]));
    auto rhs = mul(m.act[i + 1], mul(m.act[i], m.act[i + 1]));
    if (lhs != rhs)
      bad.push_back("braid relation fails at i=" + std::to_string(i + 1));
  }
  for (int i = 0; i < g; ++i)
    for (int j = i + 2; j < g; ++j) {
      if (mul(m.act[i], m.act[j]) != mul(m.act[j], m.act[i]))
        bad.push_back("commutation fails at (" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + ")");
    }
  return bad;
}

std::string module_to_json(const ModuleRep& m) {
  nlohmann::json j;
  j["n"] = m.n;
  j["basis"] = m.basis;
  auto acts = nlohmann::json::array();
  for (int i = 0; i < m.n - 1; ++i) {
    auto trip = nlohmann::json::array();
    auto rows = to_rows(m.act[i]);
    for (int r = 0; r < m.act[i].rows; ++r)
      for (const auto& [c, v] : rows[r].e)
        trip.push_back({r, c, v.get_str()});
    acts.push_back(trip);
  }
  j["actions"] = acts;
  return j.dump(2);
}

}  // namespace hecke
