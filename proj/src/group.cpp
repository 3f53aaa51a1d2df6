#include "pgroups/group.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pgroups {

namespace {

// Echelon basis of a subspace of F_2^k, k <= 64.
struct Echelon {
  std::array<std::uint64_t, 64> basis{};
  int rank = 0;

  std::uint64_t reduce(std::uint64_t v) const {
    for (int b = 63; b >= 0 && v; --b)
      if (((v >> b) & 1) && basis[b]) v ^= basis[b];
    return v;
  }
  bool insert(std::uint64_t v) {
    v = reduce(v);
    if (v == 0) return false;
    basis[63 - std::countl_zero(v)] = v;
    ++rank;
    return true;
  }
};

struct UnionFind {
  std::vector<std::uint64_t> parent;
  explicit UnionFind(std::uint64_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint64_t find(std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint64_t a, std::uint64_t b) { parent[find(a)] = find(b); }
};

std::int64_t nonzero_orbits(int dim, const std::vector<LinearMap>& maps) {
  const std::uint64_t q = std::uint64_t{1} << dim;
  UnionFind uf(q);
  for (const auto& M : maps)
    for (std::uint64_t x = 1; x < q; ++x) uf.unite(x, M.apply(static_cast<Vec>(x)));
  std::int64_t count = 0;
  for (std::uint64_t x = 1; x < q; ++x)
    if (uf.find(x) == x) ++count;
  return count;
}

std::string word(Vec v, int n) {
  std::string out;
  for (int k = 0; k < n; ++k) {
    if (!((v >> k) & 1)) continue;
    if (!out.empty()) out += "*";
    out += "y" + std::to_string(k + 1);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

GroupSpec::GroupSpec(int m_, int n_)
    : m(m_), n(n_), sigma(m_, 0), pi(static_cast<std::size_t>(m_) * m_, 0) {}

Group::Group(GroupSpec spec) : spec_(std::move(spec)) {
  const int m = spec_.m, n = spec_.n;
  if (m < 0 || n < 0 || m + n > 40) throw std::invalid_argument("group dimensions out of range");
  if (static_cast<int>(spec_.sigma.size()) != m ||
      spec_.pi.size() != static_cast<std::size_t>(m) * m)
    throw std::invalid_argument("structure constant sizes");
  const Vec vmask = n >= 32 ? ~Vec{0} : (Vec{1} << n) - 1;
  for (Vec s : spec_.sigma)
    if (s & ~vmask) throw std::invalid_argument("sigma entry exceeds n bits");
  for (Vec p : spec_.pi)
    if (p & ~vmask) throw std::invalid_argument("pi entry exceeds n bits");
  umask_ = (GElem{1} << m) - 1;
  if (m <= 8) {
    const std::size_t q = std::size_t{1} << m;
    table_.resize(q * q);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b)
        table_[a | (b << m)] = cocycle_direct(static_cast<Vec>(a), static_cast<Vec>(b));
  }
}

Vec Group::cocycle_direct(Vec u1, Vec u2) const {
  Vec acc = 0;
  const int m = spec_.m;
  for (int i = 0; i < m; ++i) {
    if (!((u2 >> i) & 1)) continue;
    if ((u1 >> i) & 1) acc ^= spec_.sigma[i];
    for (int j = i + 1; j < m; ++j)
      if ((u1 >> j) & 1) acc ^= spec_.pi_at(i, j);
  }
  return acc;
}

Vec Group::cocycle(Vec u1, Vec u2) const {
  if (!table_.empty()) return table_[u1 | (std::size_t{u2} << spec_.m)];
  return cocycle_direct(u1, u2);
}

GElem Group::multiply(GElem a, GElem b) const {
  const Vec ua = u_of(a), ub = u_of(b);
  return pack(ua ^ ub, v_of(a) ^ v_of(b) ^ cocycle(ua, ub));
}

GElem Group::inverse(GElem a) const {
  const Vec u = u_of(a);
  return pack(u, v_of(a) ^ cocycle(u, u));
}

GElem Group::square(GElem a) const {
  const Vec u = u_of(a);
  return pack(0, cocycle(u, u));
}

GElem Group::commutator(GElem a, GElem b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

int Group::element_order(GElem a) const {
  if (a == 0) return 1;
  const GElem s = square(a);
  if (s == 0) return 2;
  if (square(s) != 0) throw std::logic_error("element order exceeds 4");
  return 4;
}

GroupSpec from_squaring(const Squaring& sq) {
  if (sq.table.empty() || sq.table[0] != 0) throw std::invalid_argument("sigma(0) must be 0");
  if (!is_biadditive(sq)) throw std::invalid_argument("induced form is not biadditive");
  GroupSpec spec(sq.m, sq.n);
  for (int i = 0; i < sq.m; ++i) spec.sigma[i] = sq.table[Vec{1} << i];
  for (int i = 0; i < sq.m; ++i)
    for (int j = i + 1; j < sq.m; ++j)
      spec.set_pi(i, j, induced_form(sq, Vec{1} << i, Vec{1} << j));
  return spec;
}

Squaring squaring_of_group(const GroupSpec& spec) {
  const Group G(spec);
  Squaring sq{spec.m, spec.n, std::vector<Vec>(std::size_t{1} << spec.m)};
  for (std::size_t u = 0; u < sq.table.size(); ++u)
    sq.table[u] = G.v_of(G.square(G.pack(static_cast<Vec>(u), 0)));
  return sq;
}

AutPairGroup aut_pair_group(const GroupSpec& spec) {
  const Squaring sq = squaring_of_group(spec);
  auto res = automorphism_pairs(sq);
  AutPairGroup out;
  out.nodes = res.nodes;
  out.pairs = std::move(res.pairs);
  for (const auto& p : out.pairs) {
    out.a_proj.push_back(p.T);
    out.b_proj.push_back(p.U);
  }
  auto by_cols = [](const LinearMap& a, const LinearMap& b) { return a.cols < b.cols; };
  std::sort(out.a_proj.begin(), out.a_proj.end(), by_cols);
  if (std::adjacent_find(out.a_proj.begin(), out.a_proj.end()) != out.a_proj.end())
    throw std::logic_error("first coordinate does not determine the pair");
  std::sort(out.b_proj.begin(), out.b_proj.end(), by_cols);
  out.b_proj.erase(std::unique(out.b_proj.begin(), out.b_proj.end()), out.b_proj.end());
  return out;
}

OrbitCount orbit_count(const GroupSpec& spec) {
  const AutPairGroup S = aut_pair_group(spec);
  OrbitCount r;
  r.pair_group_order = S.pairs.size();
  r.a_orbits = nonzero_orbits(spec.m, S.a_proj);
  r.b_orbits = nonzero_orbits(spec.n, S.b_proj);
  r.orbits = 1 + r.a_orbits + r.b_orbits;
  return r;
}


BruteForceOrbits brute_force_orbits(const GroupSpec& spec, int max_bits) {
  if (spec.m + spec.n > max_bits)
    throw std::runtime_error("group too large for the brute-force oracle");
  const Group G(spec);
  const int m = spec.m, n = spec.n;
  const std::uint64_t N = G.order();

  // Phi(G) = {0} x V, V spanned by squares and commutators of the x_i
  Echelon V;
  for (int i = 0; i < m; ++i) V.insert(spec.sigma[i]);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) V.insert(spec.pi_at(i, j));
  std::vector<Vec> complement;
  {
    Echelon full = V;
    for (int k = 0; k < n; ++k)
      if (full.insert(Vec{1} << k)) complement.push_back(Vec{1} << k);
  }
  // e_k = vpart_k + sum of complement vectors in cmask_k, vpart_k in V
  std::vector<Vec> vpart(n);
  std::vector<std::uint32_t> cmask(n);
  for (int k = 0; k < n; ++k) {
    Vec e = Vec{1} << k;
    Vec r = static_cast<Vec>(V.reduce(e));
    std::uint32_t tags = 0;
    for (std::size_t c = 0; c < complement.size(); ++c)
      if (r & complement[c]) {
        tags |= 1u << c;
        r ^= complement[c];
      }
    if (r != 0) throw std::logic_error("complement does not span");
    Vec comp = 0;
    for (std::size_t c = 0; c < complement.size(); ++c)
      if ((tags >> c) & 1) comp ^= complement[c];
    vpart[k] = e ^ comp;
    cmask[k] = tags;
  }

  std::vector<GElem> gens;
  for (int i = 0; i < m; ++i) gens.push_back(G.pack(Vec{1} << i, 0));
  for (Vec c : complement) gens.push_back(G.pack(0, c));
  const int K = static_cast<int>(gens.size());

  auto frattini_class = [&](GElem g) {
    return std::uint64_t{G.u_of(g)} | (V.reduce(G.v_of(g)) << m);
  };
  auto central = [&](GElem z) {
    for (int i = 0; i < m; ++i)
      if (G.commutator(z, gens[i]) != 0) return false;
    return true;
  };
  std::vector<std::vector<GElem>> candidates(K);
  for (int i = 0; i < K; ++i) {
    const int ord = G.element_order(gens[i]);
    for (GElem g = 1; g < N; ++g)
      if (G.element_order(g) == ord && (i < m || central(g))) candidates[i].push_back(g);
  }

  // partial linear map L: V -> F_2^n, key-echelon with injectivity
  struct Rows {
    std::array<Vec, 32> key{};
    std::array<Vec, 32> val{};
    std::array<Vec, 32> vkey{};  // value echelon for injectivity
    bool add(Vec k, Vec v) {
      Vec kk = k, vv = v;
      for (int b = 31; b >= 0 && kk; --b)
        if (((kk >> b) & 1) && key[b]) {
          kk ^= key[b];
          vv ^= val[b];
        }
      if (kk == 0) return vv == 0;
      Vec w = v;
      for (int b = 31; b >= 0 && w; --b)
        if (((w >> b) & 1) && vkey[b]) w ^= vkey[b];
      if (w == 0) return false;
      vkey[31 - std::countl_zero(w)] = w;
      key[31 - std::countl_zero(kk)] = kk;
      val[31 - std::countl_zero(kk)] = vv;
      return true;
    }
    Vec eval(Vec k) const {
      Vec out = 0;
      for (int b = 31; b >= 0 && k; --b)
        if (((k >> b) & 1) && key[b]) {
          k ^= key[b];
          out ^= val[b];
        }
      if (k != 0) throw std::logic_error("key outside the span");
      return out;
    }
  };

  using Perm = std::vector<GElem>;
  std::vector<GElem> h(K);

  auto leaf = [&](const Rows& rows, Perm& phi) {
    std::vector<GElem> W(std::size_t{1} << m), Y(std::size_t{1} << n);
    W[0] = 0;
    for (std::size_t u = 1; u < W.size(); ++u) {
      const int top = 63 - std::countl_zero(std::uint64_t{u});
      W[u] = G.multiply(W[u ^ (std::size_t{1} << top)], h[top]);
    }
    std::vector<GElem> yimg(n);
    for (int k = 0; k < n; ++k) {
      GElem g = G.pack(0, rows.eval(vpart[k]));
      for (std::size_t c = 0; c < complement.size(); ++c)
        if ((cmask[k] >> c) & 1) g = G.multiply(g, h[m + c]);
      yimg[k] = g;
    }
    Y[0] = 0;
    for (std::size_t v = 1; v < Y.size(); ++v) {
      const int top = 63 - std::countl_zero(std::uint64_t{v});
      Y[v] = G.multiply(Y[v ^ (std::size_t{1} << top)], yimg[top]);
    }
    phi.assign(N, 0);
    std::vector<char> hit(N, 0);
    for (GElem x = 0; x < N; ++x) {
      const GElem y = G.multiply(W[G.u_of(x)], Y[G.v_of(x)]);
      if (hit[y]) return false;
      hit[y] = 1;
      phi[x] = y;
    }
    for (int i = 0; i < K; ++i)
      for (GElem x = 0; x < N; ++x)
        if (phi[G.multiply(gens[i], x)] != G.multiply(phi[gens[i]], phi[x])) return false;
    return true;
  };

  std::function<bool(int, Rows, Echelon, Perm&)> dfs = [&](int i, Rows rows, Echelon q,
                                                            Perm& phi) -> bool {
    if (i == K) return leaf(rows, phi);
    for (GElem c : candidates[i]) {
      Echelon q2 = q;
      if (!q2.insert(frattini_class(c))) continue;
      Rows r2 = rows;
      bool ok = true;
      if (i < m) {
        ok = r2.add(spec.sigma[i], G.v_of(G.square(c)));
        for (int j = 0; ok && j < i; ++j)
          ok = r2.add(spec.pi_at(j, i), G.v_of(G.commutator(h[j], c)));
      }
      if (!ok) continue;
      h[i] = c;
      if (dfs(i + 1, r2, q2, phi)) return true;
    }
    return false;
  };

  // stabilizer chain, deepest level first so later levels reuse generators
  std::vector<Perm> strong;
  unsigned __int128 aut = 1;
  for (int level = K - 1; level >= 0; --level) {
    Rows base;
    Echelon q;
    bool ok = true;
    for (int j = 0; j < level && ok; ++j) {
      h[j] = gens[j];
      ok = q.insert(frattini_class(gens[j]));
      if (j < m) {
        ok = ok && base.add(spec.sigma[j], spec.sigma[j]);
        for (int i = 0; ok && i < j; ++i) ok = base.add(spec.pi_at(i, j), spec.pi_at(i, j));
      }
    }
    if (!ok) throw std::logic_error("identity prefix rejected");
    std::set<GElem> orbit{gens[level]};
    auto close = [&]() {
      std::vector<GElem> queue(orbit.begin(), orbit.end());
      while (!queue.empty()) {
        const GElem x = queue.back();
        queue.pop_back();
        for (const Perm& p : strong)
          if (orbit.insert(p[x]).second) queue.push_back(p[x]);
      }
    };
    close();
    for (GElem c : candidates[level]) {
      if (orbit.count(c)) continue;
      Echelon q2 = q;
      if (!q2.insert(frattini_class(c))) continue;
      Rows r2 = base;
      bool fine = true;
      if (level < m) {
        fine = r2.add(spec.sigma[level], G.v_of(G.square(c)));
        for (int j = 0; fine && j < level; ++j)
          fine = r2.add(spec.pi_at(j, level), G.v_of(G.commutator(h[j], c)));
      }
      if (!fine) continue;
      h[level] = c;
      Perm phi;
      if (dfs(level + 1, r2, q2, phi)) {
        strong.push_back(std::move(phi));
        close();
      }
    }
    aut *= orbit.size();
  }

  BruteForceOrbits out;
  if (aut > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("automorphism group order exceeds 64 bits");
  out.aut_order = static_cast<std::uint64_t>(aut);
  out.generators = strong.size();
  UnionFind uf(N);
  for (const Perm& p : strong)
    for (GElem x = 0; x < N; ++x) uf.unite(x, p[x]);
  for (GElem x = 0; x < N; ++x)
    if (uf.find(x) == x) ++out.orbits;
  return out;
}

InvariantProfile invariant_profile(const GroupSpec& spec) {
  const Group G(spec);
  const int m = spec.m, n = spec.n;
  const std::uint64_t qm = std::uint64_t{1} << m, qn = std::uint64_t{1} << n;
  InvariantProfile p;
  p.order = G.order();

  auto comm = [&](Vec a, Vec b) { return G.cocycle(a, b) ^ G.cocycle(b, a); };
  std::vector<std::uint64_t> commuting(qm, 0);
  Echelon derived;
  for (std::uint64_t a = 0; a < qm; ++a)
    for (std::uint64_t b = 0; b < qm; ++b) {
      const Vec c = comm(static_cast<Vec>(a), static_cast<Vec>(b));
      if (c == 0) ++commuting[a];
      else derived.insert(c);
    }
  p.derived_size = std::uint64_t{1} << derived.rank;
  for (std::uint64_t a = 0; a < qm; ++a) {
    const std::uint64_t cent = commuting[a] * qn;
    p.centralizer_histogram[cent] += qn;
    p.commuting_pairs += commuting[a] * qn * qn;
    if (commuting[a] == qm) p.center_size += qn;
    const int ord = G.element_order(G.pack(static_cast<Vec>(a), 0));
    // (a, v) has the same order as (a, 0) apart from the identity coset
    if (a == 0) {
      p.order_histogram[1] += 1;
      if (qn > 1) p.order_histogram[2] += qn - 1;
    } else {
      p.order_histogram[ord] += qn;
    }
  }

  Echelon frattini;
  for (std::uint64_t a = 0; a < qm; ++a) frattini.insert(G.cocycle(static_cast<Vec>(a), static_cast<Vec>(a)));
  for (std::uint64_t a = 0; a < qm; ++a)
    for (std::uint64_t b = 0; b < qm; ++b) frattini.insert(comm(static_cast<Vec>(a), static_cast<Vec>(b)));
  if (frattini.rank == n && m <= 6) {
    // isotropic subspaces of F_2^m as membership masks over 2^m <= 64 points
    std::vector<std::set<std::uint64_t>> layers(1);
    layers[0].insert(1);  // {0}
    for (int d = 0; !layers[d].empty(); ++d) {
      std::set<std::uint64_t> next;
      for (std::uint64_t S : layers[d])
        for (std::uint64_t w = 1; w < qm; ++w) {
          if ((S >> w) & 1) continue;
          bool iso = true;
          for (std::uint64_t s = 0; s < qm && iso; ++s)
            if (((S >> s) & 1) && comm(static_cast<Vec>(s), static_cast<Vec>(w)) != 0) iso = false;
          if (!iso) continue;
          std::uint64_t T = S;
          for (std::uint64_t s = 0; s < qm; ++s)
            if ((S >> s) & 1) T |= std::uint64_t{1} << (s ^ w);
          next.insert(T);
        }
      layers.push_back(std::move(next));
    }
    for (std::size_t d = 0; d < layers.size(); ++d)
      if (!layers[d].empty()) p.abelian_over_frattini[static_cast<int>(d)] = layers[d].size();
  }
  return p;
}

std::string to_string(const InvariantProfile& p) {
  std::ostringstream os;
  os << "order=" << p.order << " orders={";
  for (auto [k, v] : p.order_histogram) os << k << ":" << v << ",";
  os << "} center=" << p.center_size << " derived=" << p.derived_size
     << " commuting_pairs=" << p.commuting_pairs << " centralizers={";
  for (auto [k, v] : p.centralizer_histogram) os << k << ":" << v << ",";
  os << "} abelian_over_frattini={";
  for (auto [k, v] : p.abelian_over_frattini) os << k << ":" << v << ",";
  os << "}";
  return os.str();
}

std::string export_pc_presentation(const GroupSpec& spec) {
  std::ostringstream os;
  os << "generators";
  for (int i = 1; i <= spec.m; ++i) os << " x" << i;
  for (int k = 1; k <= spec.n; ++k) os << " y" << k;
  os << "\n";
  for (int i = 0; i < spec.m; ++i) os << "x" << i + 1 << "^2 = " << word(spec.sigma[i], spec.n) << "\n";
  for (int i = 0; i < spec.m; ++i)
    for (int j = i + 1; j < spec.m; ++j)
      os << "[x" << i + 1 << ",x" << j + 1 << "] = " << word(spec.pi_at(i, j), spec.n) << "\n";
  for (int i = 1; i <= spec.m; ++i)
    for (int k = 1; k <= spec.n; ++k) os << "[x" << i << ",y" << k << "] = 1\n";
  for (int k = 1; k <= spec.n; ++k) os << "y" << k << "^2 = 1\n";
  for (int k = 1; k <= spec.n; ++k)
    for (int l = k + 1; l <= spec.n; ++l) os << "[y" << k << ",y" << l << "] = 1\n";
  return os.str();
}

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// "x3" or "y2" -> ('x', 2)
std::pair<char, int> parse_gen(const std::string& t, int m, int n) {
  if (t.size() < 2 || (t[0] != 'x' && t[0] != 'y'))
    throw std::invalid_argument("bad generator '" + t + "'");
  int idx = 0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw std::invalid_argument("bad generator '" + t + "'");
    idx = idx * 10 + (t[i] - '0');
    if (idx > 64) throw std::invalid_argument("generator index too large");
  }
  const int limit = t[0] == 'x' ? m : n;
  if (idx < 1 || idx > limit) throw std::invalid_argument("generator out of range '" + t + "'");
  return {t[0], idx - 1};
}

Vec parse_word(const std::string& w, int m, int n) {
  if (w == "1") return 0;
  Vec v = 0;
  std::size_t pos = 0;
  while (pos <= w.size()) {
    const std::size_t star = w.find('*', pos);
    const std::string tok = w.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    auto [kind, idx] = parse_gen(tok, m, n);
    if (kind != 'y') throw std::invalid_argument("relation right-hand side must be central");
    v ^= Vec{1} << idx;
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return v;
}

}  // namespace

GroupSpec parse_pc_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int m = -1, n = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head != "generators") throw std::invalid_argument("expected 'generators' line");
    m = n = 0;
    std::string t;
    while (ls >> t) {
      if (t.size() >= 2 && t[0] == 'x' && n == 0 && t == "x" + std::to_string(m + 1)) ++m;
      else if (t.size() >= 2 && t[0] == 'y' && t == "y" + std::to_string(n + 1)) ++n;
      else throw std::invalid_argument("generators must be x1..xm y1..yn in order");
    }
    break;
  }
  if (m < 0) throw std::invalid_argument("missing 'generators' line");
  if (m + n > 40) throw std::invalid_argument("too many generators");
  GroupSpec spec(m, n);
  std::vector<char> seen_sq(m, 0), seen_comm(static_cast<std::size_t>(m) * m, 0);
  while (std::getline(in, line)) {
    const std::string s = strip(line);
    if (s.empty()) continue;
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("relation without '=': " + line);
    const std::string lhs = s.substr(0, eq), rhs = s.substr(eq + 1);
    const Vec value = parse_word(rhs, m, n);
    if (lhs.size() > 2 && lhs.substr(lhs.size() - 2) == "^2") {
      auto [kind, idx] = parse_gen(lhs.substr(0, lhs.size() - 2), m, n);
      if (kind == 'y') {
        if (value != 0) throw std::invalid_argument("y generators must be involutions");
        continue;
      }
      if (seen_sq[idx]++) throw std::invalid_argument("repeated relation: " + line);
      spec.sigma[idx] = value;
    } else if (lhs.size() > 4 && lhs.front() == '[' && lhs.back() == ']') {
      const std::string inner = lhs.substr(1, lhs.size() - 2);
      const std::size_t comma = inner.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("bad commutator: " + line);
      auto [k1, a] = parse_gen(inner.substr(0, comma), m, n);
      auto [k2, b] = parse_gen(inner.substr(comma + 1), m, n);
      if (k1 == 'y' || k2 == 'y') {
        if (value != 0) throw std::invalid_argument("y generators must be central");
        continue;
      }
      if (a == b) throw std::invalid_argument("commutator of a generator with itself");
      const int i = std::min(a, b), j = std::max(a, b);
      if (seen_comm[static_cast<std::size_t>(i) * m + j]++)
        throw std::invalid_argument("repeated relation: " + line);
      spec.set_pi(i, j, value);
    } else {
      throw std::invalid_argument("unrecognised relation: " + line);
    }
  }
  for (int i = 0; i < m; ++i)
    if (!seen_sq[i]) throw std::invalid_argument("missing relation for x" + std::to_string(i + 1) + "^2");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!seen_comm[static_cast<std::size_t>(i) * m + j])
        throw std::invalid_argument("missing commutator relation");
  return spec;
}

}  // namespace pgroups
