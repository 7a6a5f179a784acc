#include "radgeo/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace radgeo {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Simplex normalized(Simplex s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw ComplexError("simplex has a repeated vertex");
  return s;
}

}  // namespace

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::uint64_t h = s.size();
  for (auto v : s) h = mix64(h ^ v);
  return static_cast<std::size_t>(h);
}

int TypedComplex::add_type(const std::string& name) {
  auto it = std::find(type_names_.begin(), type_names_.end(), name);
  if (it != type_names_.end()) return static_cast<int>(it - type_names_.begin());
  type_names_.push_back(name);
  return static_cast<int>(type_names_.size() - 1);
}

VertexId TypedComplex::add_vertex(int type) {
  if (type < 0 || static_cast<std::size_t>(type) >= type_names_.size())
    throw ComplexError("unknown vertex type tag");
  vertex_type_.push_back(type);
  return static_cast<VertexId>(vertex_type_.size() - 1);
}

SimplexId TypedComplex::add_simplex(Simplex s) {
  if (s.empty()) throw ComplexError("empty simplex");
  s = normalized(std::move(s));
  for (auto v : s)
    if (v >= vertex_type_.size()) throw ComplexError("simplex uses an unknown vertex");
  return insert_closed(s);
}

SimplexId TypedComplex::insert_closed(const Simplex& s) {
  auto it = index_.find(s);
  if (it != index_.end() && alive_[it->second]) return it->second;
  // recursion below may rehash index_, so keep the id rather than the iterator
  const bool existed = it != index_.end();
  const SimplexId existing = existed ? it->second : 0;
  std::vector<SimplexId> faces;
  if (s.size() > 1) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      Simplex f;
      f.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != k) f.push_back(s[j]);
      faces.push_back(insert_closed(f));
    }
  }
  SimplexId id;
  if (existed) {
    id = existing;
  } else {
    id = static_cast<SimplexId>(simplices_.size());
    simplices_.push_back(s);
    alive_.push_back(false);
    coface_count_.push_back(0);
    cofaces_.emplace_back();
    index_.emplace(s, id);
    for (auto f : faces) cofaces_[f].push_back(id);
  }
  alive_[id] = true;
  ++alive_count_;
  for (auto f : faces) ++coface_count_[f];
  return id;
}

std::optional<SimplexId> TypedComplex::find(const Simplex& s) const {
  Simplex t = s;
  std::sort(t.begin(), t.end());
  auto it = index_.find(t);
  if (it == index_.end() || !alive_[it->second]) return std::nullopt;
  return it->second;
}

bool TypedComplex::contains(const Simplex& s) const { return find(s).has_value(); }

int TypedComplex::dimension() const {
  int d = -1;
  for (SimplexId i = 0; i < simplices_.size(); ++i)
    if (alive_[i]) d = std::max(d, static_cast<int>(simplices_[i].size()) - 1);
  return d;
}

std::vector<SimplexId> TypedComplex::alive_cofaces(SimplexId id) const {
  std::vector<SimplexId> out;
  for (auto c : cofaces_[id])
    if (alive_[c]) out.push_back(c);
  return out;
}

std::vector<SimplexId> TypedComplex::all_cofaces(SimplexId id) const {
  std::vector<SimplexId> out;
  std::set<SimplexId> seen;
  std::vector<SimplexId> frontier{id};
  while (!frontier.empty()) {
    std::vector<SimplexId> next;
    for (auto s : frontier)
      for (auto c : cofaces_[s])
        if (alive_[c] && seen.insert(c).second) {
          out.push_back(c);
          next.push_back(c);
        }
    frontier.swap(next);
  }
  return out;
}

std::vector<SimplexId> TypedComplex::alive_ids() const {
  std::vector<SimplexId> out;
  for (SimplexId i = 0; i < simplices_.size(); ++i)
    if (alive_[i]) out.push_back(i);
  return out;
}

std::vector<Simplex> TypedComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (SimplexId i = 0; i < simplices_.size(); ++i)
    if (is_maximal(i)) out.push_back(simplices_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> TypedComplex::alive_vertices() const {
  std::vector<VertexId> out;
  for (SimplexId i = 0; i < simplices_.size(); ++i)
    if (alive_[i] && simplices_[i].size() == 1) out.push_back(simplices_[i][0]);
  std::sort(out.begin(), out.end());
  return out;
}

void TypedComplex::remove(SimplexId id) {
  if (!alive_[id]) throw ComplexError("simplex already removed");
  if (coface_count_[id] != 0) throw ComplexError("cannot remove a simplex with alive cofaces");
  alive_[id] = false;
  --alive_count_;
  const auto& s = simplices_[id];
  if (s.size() > 1) {
    Simplex f(s.size() - 1);
    for (std::size_t k = 0; k < s.size(); ++k) {
      std::size_t t = 0;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != k) f[t++] = s[j];
      --coface_count_[index_.at(f)];
    }
  }
}

TypedComplex TypedComplex::star(VertexId v) const {
  TypedComplex out;
  out.type_names_ = type_names_;
  out.vertex_type_ = vertex_type_;
  auto root = find({v});
  if (!root) throw ComplexError("vertex " + std::to_string(v) + " is not in the complex");
  out.add_simplex({v});
  for (auto c : all_cofaces(*root)) out.add_simplex(simplices_[c]);
  return out;
}

TypedComplex TypedComplex::residue(VertexId v) const {
  TypedComplex out;
  out.type_names_ = type_names_;
  out.vertex_type_ = vertex_type_;
  auto root = find({v});
  if (!root) throw ComplexError("vertex " + std::to_string(v) + " is not in the complex");
  for (auto c : all_cofaces(*root)) {
    Simplex s;
    for (auto x : simplices_[c])
      if (x != v) s.push_back(x);
    out.add_simplex(std::move(s));
  }
  return out;
}

std::optional<VertexId> TypedComplex::is_cone() const {
  auto maxes = maximal_simplices();
  if (maxes.empty()) return std::nullopt;
  std::vector<VertexId> common = maxes.front();
  for (const auto& m : maxes) {
    std::vector<VertexId> next;
    std::set_intersection(common.begin(), common.end(), m.begin(), m.end(), std::back_inserter(next));
    common.swap(next);
    if (common.empty()) return std::nullopt;
  }
  return common.front();
}

std::vector<std::size_t> TypedComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (SimplexId i = 0; i < simplices_.size(); ++i) {
    if (!alive_[i]) continue;
    const auto d = simplices_[i].size() - 1;
    if (f.size() <= d) f.resize(d + 1, 0);
    ++f[d];
  }
  return f;
}

long long TypedComplex::euler_reduced() const {
  long long chi = -1;
  const auto f = f_vector();
  for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<long long>(f[d]);
  return chi;
}

BettiResult TypedComplex::betti() const {
  const auto f = f_vector();
  std::vector<std::unordered_map<SimplexId, std::uint32_t>> local(f.size());
  std::vector<std::vector<SimplexId>> by_dim(f.size());
  for (SimplexId i = 0; i < simplices_.size(); ++i) {
    if (!alive_[i]) continue;
    const auto d = simplices_[i].size() - 1;
    local[d].emplace(i, static_cast<std::uint32_t>(by_dim[d].size()));
    by_dim[d].push_back(i);
  }
  std::vector<std::vector<SparseColumn>> boundaries;
  for (std::size_t d = 1; d < f.size(); ++d) {
    std::vector<SparseColumn> cols;
    cols.reserve(by_dim[d].size());
    for (auto id : by_dim[d]) {
      const auto& s = simplices_[id];
      SparseColumn col;
      Simplex face(s.size() - 1);
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::size_t t = 0;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != k) face[t++] = s[j];
        col.push_back(local[d - 1].at(index_.at(face)));
      }
      std::sort(col.begin(), col.end());
      cols.push_back(std::move(col));
    }
    boundaries.push_back(std::move(cols));
  }
  return betti_f2_sparse(f, boundaries, false);
}

bool TypedComplex::is_flag_typed() const {
  for (SimplexId i = 0; i < simplices_.size(); ++i) {
    if (!alive_[i]) continue;
    std::set<int> types;
    for (auto v : simplices_[i])
      if (!types.insert(vertex_type_[v]).second) return false;
  }
  return true;
}

std::uint64_t TypedComplex::content_hash() const {
  std::uint64_t h = mix64(alive_count_);
  SimplexHash sh;
  for (SimplexId i = 0; i < simplices_.size(); ++i)
    if (alive_[i]) h += mix64(sh(simplices_[i]));
  return mix64(h);
}

void TypedComplex::dump(std::ostream& out) const {
  out << "complex v1\n";
  out << "types";
  for (const auto& t : type_names_) out << ' ' << t;
  out << '\n';
  for (VertexId v = 0; v < vertex_type_.size(); ++v)
    out << "vertex " << v << ' ' << type_names_[vertex_type_[v]] << '\n';
  out << "simplices\n";
  std::vector<Simplex> all;
  for (SimplexId i = 0; i < simplices_.size(); ++i)
    if (alive_[i]) all.push_back(simplices_[i]);
  std::sort(all.begin(), all.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& s : all) {
    for (std::size_t k = 0; k < s.size(); ++k) out << (k ? " " : "") << s[k];
    out << '\n';
  }
}

TypedComplex TypedComplex::parse(std::istream& in) {
  TypedComplex c;
  std::string line;
  bool in_body = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head)) continue;
    auto fail = [&](const std::string& why) {
      throw ComplexError("complex dump line " + std::to_string(lineno) + ": " + why);
    };
    if (!in_body) {
      if (head == "complex") continue;
      if (head == "types") {
        std::string t;
        while (ss >> t) c.add_type(t);
      } else if (head == "vertex") {
        std::size_t id;
        std::string t;
        if (!(ss >> id >> t)) fail("expected 'vertex <id> <type>'");
        if (id != c.vertex_count()) fail("vertex ids must be consecutive from 0");
        auto it = std::find(c.type_names_.begin(), c.type_names_.end(), t);
        if (it == c.type_names_.end()) fail("unknown type " + t);
        c.add_vertex(static_cast<int>(it - c.type_names_.begin()));
      } else if (head == "simplices") {
        in_body = true;
      } else {
        fail("unexpected header line");
      }
      continue;
    }
    Simplex s;
    std::istringstream body(line);
    long long v;
    while (body >> v) {
      if (v < 0 || static_cast<std::size_t>(v) >= c.vertex_count()) fail("vertex id out of range");
      s.push_back(static_cast<VertexId>(v));
    }
    if (!body.eof()) fail("bad vertex id");
    c.add_simplex(std::move(s));
  }
  return c;
}

std::size_t Poset::add_element(int tag) {
  for (auto& row : less_) row.push_back(false);
  less_.emplace_back(less_.size() + 1, false);
  tags_.push_back(tag);
  return less_.size() - 1;
}

void Poset::close() {
  const auto n = size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (less_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (less_[k][j]) less_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (less_[i][i]) throw ComplexError("poset relation has a cycle");
  }
}

TypedComplex order_complex(const Poset& p) {
  TypedComplex c;
  int max_tag = 0;
  for (std::size_t i = 0; i < p.size(); ++i) max_tag = std::max(max_tag, p.tag(i));
  for (int t = 0; t <= max_tag; ++t)
    c.add_type(static_cast<std::size_t>(t) < p.tag_names.size() ? p.tag_names[t]
                                                                 : "t" + std::to_string(t));
  for (std::size_t i = 0; i < p.size(); ++i) c.add_vertex(p.tag(i));
  // maximal chains by depth-first extension from minimal elements
  Simplex chain;
  auto extend = [&](auto&& self, std::size_t top) -> void {
    bool extended = false;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!p.less(top, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < p.size() && cover; ++k)
        if (p.less(top, k) && p.less(k, j)) cover = false;
      if (!cover) continue;
      extended = true;
      chain.push_back(static_cast<VertexId>(j));
      self(self, j);
      chain.pop_back();
    }
    if (!extended) c.add_simplex(chain);
  };
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool minimal = true;
    for (std::size_t k = 0; k < p.size() && minimal; ++k)
      if (p.less(k, i)) minimal = false;
    if (!minimal) continue;
    chain.assign(1, static_cast<VertexId>(i));
    extend(extend, i);
  }
  return c;
}

bool is_simplicial_action(const TypedComplex& c, const VertexPermutation& g) {
  if (g.size() != c.vertex_count()) return false;
  for (VertexId v = 0; v < g.size(); ++v)
    if (g[v] >= g.size() || c.vertex_type(g[v]) != c.vertex_type(v)) return false;
  for (auto id : c.alive_ids()) {
    Simplex img;
    for (auto v : c.simplex(id)) img.push_back(g[v]);
    if (!c.contains(img)) return false;
  }
  return true;
}

AdmissibilityReport check_admissible(const TypedComplex& c, const VertexPermutation& g) {
  AdmissibilityReport r;
  for (auto id : c.alive_ids()) {
    const auto& s = c.simplex(id);
    Simplex img;
    for (auto v : s) img.push_back(g[v]);
    std::sort(img.begin(), img.end());
    if (img != s) continue;
    for (auto v : s)
      if (g[v] != v) {
        r.admissible = false;
        r.witness = s;
        return r;
      }
  }
  return r;
}

TypedComplex fixed_subcomplex(const TypedComplex& c, const VertexPermutation& g) {
  if (!is_simplicial_action(c, g)) throw ComplexError("map is not a type-preserving simplicial automorphism");
  const auto adm = check_admissible(c, g);
  if (!adm.admissible) {
    std::string w;
    for (auto v : *adm.witness) w += (w.empty() ? "" : " ") + std::to_string(v);
    throw ComplexError("action is not admissible: simplex {" + w + "} is fixed setwise only");
  }
  TypedComplex out;
  for (const auto& t : c.type_names()) out.add_type(t);
  for (VertexId v = 0; v < c.vertex_count(); ++v) out.add_vertex(c.vertex_type(v));
  for (auto id : c.alive_ids()) {
    const auto& s = c.simplex(id);
    if (std::all_of(s.begin(), s.end(), [&](VertexId v) { return g[v] == v; })) out.add_simplex(s);
  }
  return out;
}

__int128 euler_by_orbit_counting(const std::vector<FlagTypeStabilizer>& flags, Order group_order) {
  __int128 chi = -1;
  for (const auto& f : flags) {
    if (f.stabilizer_order == 0 || group_order % f.stabilizer_order != 0)
      throw ComplexError("stabilizer order of " + f.name + " does not divide the group order");
    const auto orbit = static_cast<__int128>(group_order / f.stabilizer_order);
    chi += (f.flag_size % 2 == 1) ? orbit : -orbit;
  }
  return chi;
}

int two_adic_valuation(__int128 n) {
  if (n == 0) throw ComplexError("valuation of zero");
  if (n < 0) n = -n;
  int k = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++k;
  }
  return k;
}

std::string int128_to_string(__int128 n) {
  if (n < 0) return "-" + to_string(static_cast<Order>(-n));
  return to_string(static_cast<Order>(n));
}

}  // namespace radgeo
