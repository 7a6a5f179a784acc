#include "radgeo/morse.hpp"

#include <algorithm>
#include <iomanip>
#include <queue>
#include <set>
#include <sstream>

namespace radgeo {

namespace {

bool is_subset(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Simplex sorted(Simplex s) {
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

bool is_free_pair(const TypedComplex& c, const Simplex& big_in, const Simplex& small_in) {
  const Simplex big = sorted(big_in), small = sorted(small_in);
  auto b = c.find(big);
  auto s = c.find(small);
  if (!b || !s) throw ComplexError("is_free_pair: simplex not in complex");
  if (small.size() >= big.size() || !is_subset(small, big)) return false;
  if (!c.is_maximal(*b)) return false;
  for (auto t : c.all_cofaces(*s))
    if (!is_subset(c.simplex(t), big)) return false;
  return true;
}

std::size_t apply_collapse(TypedComplex& c, const Simplex& big_in, const Simplex& small_in) {
  const Simplex big = sorted(big_in), small = sorted(small_in);
  if (!is_free_pair(c, big, small)) throw ComplexError("apply_collapse: pair is not free");
  const auto s = *c.find(small);
  auto interval = c.all_cofaces(s);
  interval.push_back(s);
  // remove from the top down so every removal sees no alive cofaces
  std::sort(interval.begin(), interval.end(), [&](SimplexId x, SimplexId y) {
    return c.simplex(x).size() > c.simplex(y).size();
  });
  for (auto id : interval) c.remove(id);
  return interval.size();
}

VertexId remove_star_if_cone(TypedComplex& c, VertexId v) {
  auto root = c.find({v});
  if (!root) throw ComplexError("remove_star_if_cone: vertex not in complex");
  const auto apex = c.residue(v).is_cone();
  if (!apex)
    throw ComplexError("residue of vertex " + std::to_string(v) + " is not certified contractible");
  auto star = c.all_cofaces(*root);
  star.push_back(*root);
  std::sort(star.begin(), star.end(), [&](SimplexId x, SimplexId y) {
    return c.simplex(x).size() > c.simplex(y).size();
  });
  for (auto id : star) c.remove(id);
  return *apex;
}

GreedyResult greedy_collapse(TypedComplex& c) {
  GreedyResult r;
  r.certificate.initial_hash = c.content_hash();
  using Key = std::pair<std::size_t, Simplex>;
  std::priority_queue<std::pair<Key, SimplexId>, std::vector<std::pair<Key, SimplexId>>,
                      std::greater<>>
      heap;
  auto consider = [&](SimplexId id) {
    if (!c.alive(id) || c.alive_coface_count(id) != 1) return;
    heap.push({{c.simplex(id).size(), c.simplex(id)}, id});
  };
  for (auto id : c.alive_ids()) consider(id);
  while (c.size() > 1 && !heap.empty()) {
    const auto [key, sid] = heap.top();
    heap.pop();
    if (!c.alive(sid) || c.alive_coface_count(sid) != 1) continue;
    const auto cof = c.alive_cofaces(sid);
    const auto bid = cof.front();
    if (!c.is_maximal(bid)) continue;
    const Simplex big = c.simplex(bid);
    const Simplex small = c.simplex(sid);
    c.remove(bid);
    c.remove(sid);
    r.certificate.steps.push_back({CollapseStep::Kind::collapse, big, small, 0, {}});
    // faces of the removed pair may have become free
    for (const Simplex* s : {&big, &small}) {
      if (s->size() < 2) continue;
      for (std::size_t k = 0; k < s->size(); ++k) {
        Simplex f;
        for (std::size_t j = 0; j < s->size(); ++j)
          if (j != k) f.push_back((*s)[j]);
        if (auto id = c.find(f)) {
          consider(*id);
          // a face that just became maximal frees its own faces
          if (c.is_maximal(*id) && f.size() > 1)
            for (std::size_t q = 0; q < f.size(); ++q) {
              Simplex g;
              for (std::size_t j = 0; j < f.size(); ++j)
                if (j != q) g.push_back(f[j]);
              if (auto gid = c.find(g)) consider(*gid);
            }
        }
      }
    }
  }
  r.reached_point = c.size() == 1;
  r.certificate.terminal_hash = c.content_hash();
  r.certificate.terminal_size = c.size();
  return r;
}

CollapseCertificate replay_schedule(TypedComplex& c, const std::vector<CollapseStep>& steps) {
  CollapseCertificate cert;
  cert.initial_hash = c.content_hash();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& st = steps[i];
    if (st.kind == CollapseStep::Kind::star) {
      if (!c.find({st.vertex})) throw CollapseError(i, "vertex already removed");
      try {
        remove_star_if_cone(c, st.vertex);
      } catch (const ComplexError& e) {
        throw CollapseError(i, e.what());
      }
    } else {
      if (!c.find(st.big) || !c.find(st.small))
        throw CollapseError(i, "references a simplex that is not present");
      if (!is_free_pair(c, st.big, st.small)) throw CollapseError(i, "pair is not free");
      apply_collapse(c, st.big, st.small);
    }
    cert.steps.push_back(st);
  }
  cert.terminal_hash = c.content_hash();
  cert.terminal_size = c.size();
  return cert;
}

std::vector<CollapseStep> parse_schedule(std::istream& in, std::optional<std::uint64_t>* hash) {
  std::vector<CollapseStep> steps;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head)) continue;
    auto fail = [&](const std::string& why) {
      throw ComplexError("schedule line " + std::to_string(lineno) + ": " + why);
    };
    if (head == "star") {
      long long v;
      if (!(ss >> v) || v < 0) fail("expected 'star <vertex id>'");
      CollapseStep st;
      st.kind = CollapseStep::Kind::star;
      st.vertex = static_cast<VertexId>(v);
      steps.push_back(st);
    } else if (head == "collapse") {
      CollapseStep st;
      std::string tok;
      bool over = false;
      while (ss >> tok) {
        if (tok == "over") {
          if (over) fail("repeated 'over'");
          over = true;
          continue;
        }
        if (tok.find_first_not_of("0123456789") != std::string::npos) fail("bad vertex id " + tok);
        (over ? st.small : st.big).push_back(static_cast<VertexId>(std::stoul(tok)));
      }
      if (!over || st.big.empty() || st.small.empty()) fail("expected 'collapse <ids> over <ids>'");
      st.big = sorted(st.big);
      st.small = sorted(st.small);
      steps.push_back(st);
    } else if (head == "hash") {
      std::string hex;
      if (!(ss >> hex)) fail("expected 'hash <hex>'");
      if (hash) *hash = std::stoull(hex, nullptr, 16);
    } else {
      fail("unknown directive " + head);
    }
  }
  return steps;
}

void write_certificate(std::ostream& out, const CollapseCertificate& cert) {
  for (const auto& st : cert.steps) {
    if (st.kind == CollapseStep::Kind::star) {
      out << "star " << st.vertex << '\n';
      continue;
    }
    out << "collapse";
    for (auto v : st.big) out << ' ' << v;
    out << " over";
    for (auto v : st.small) out << ' ' << v;
    out << '\n';
  }
  std::ostringstream h;
  h << std::hex << std::setw(16) << std::setfill('0') << cert.terminal_hash;
  out << "hash " << h.str() << '\n';
}

}  // namespace radgeo
