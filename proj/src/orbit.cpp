#include "lcq/orbit.hpp"

#include <algorithm>
#include <map>

namespace lcq {

bool Orbit::contains(const Graph& g) const { return find(g) != kNoParent; }

std::size_t Orbit::find(const Graph& g) const {
  const auto it = index.find(canonical_key(g));
  return it == index.end() ? kNoParent : it->second;
}

LcSequence Orbit::path_to(std::size_t i) const {
  if (parent.empty()) throw UnsupportedError("orbit was enumerated without parent tracking");
  if (i >= members.size()) throw InvalidSpecError("orbit member index out of range");
  LcSequence f;
  while (parent[i].first != kNoParent) {
    f.steps.push_back(parent[i].second);
    i = parent[i].first;
  }
  std::reverse(f.steps.begin(), f.steps.end());
  return f;
}

namespace {

// Shared BFS driver; `stop` is consulted after each insertion and can end the
// search early (used by the equivalence query).
template <typename Stop>
Orbit closure(const Graph& g, std::size_t limit, bool keep_parents, Stop&& stop) {
  if (g.n() < 1) throw InvalidSpecError("orbit enumeration requires at least one vertex");
  if (limit < 1) throw InvalidSpecError("orbit budget must be at least 1");
  Orbit o;
  o.base = g;
  o.members.push_back(g);
  o.index.emplace(canonical_key(g), 0);
  if (keep_parents) o.parent.emplace_back(Orbit::kNoParent, 0);
  if (stop(o, 0)) return o;
  for (std::size_t head = 0; head < o.members.size(); ++head) {
    for (Vertex v = 1; v <= g.n(); ++v) {
      // Copy before complementing: push_back may reallocate members.
      Graph next = local_complement(o.members[head], v);
      auto [it, inserted] = o.index.emplace(canonical_key(next), o.members.size());
      if (!inserted) continue;
      if (o.members.size() + 1 > limit) throw BudgetExceededError(o.members.size(), limit);
      o.members.push_back(std::move(next));
      if (keep_parents) o.parent.emplace_back(head, v);
      if (stop(o, it->second)) return o;
    }
  }
  return o;
}

}  // namespace

Orbit enumerate_orbit(const Graph& g, std::size_t limit, bool keep_parents) {
  return closure(g, limit, keep_parents, [](const Orbit&, std::size_t) { return false; });
}

Equivalence are_lc_equivalent(const Graph& g, const Graph& h, std::size_t limit) {
  if (g.n() != h.n()) return Equivalence::NotEquivalent;
  const std::string target = canonical_key(h);
  bool found = false;
  try {
    closure(g, limit, false, [&](const Orbit& o, std::size_t i) {
      found = canonical_key(o.members[i]) == target;
      return found;
    });
  } catch (const BudgetExceededError&) {
    return Equivalence::Indeterminate;
  }
  return found ? Equivalence::Equivalent : Equivalence::NotEquivalent;
}

LcSequence transformation_between(const Graph& g, const Graph& h, std::size_t limit) {
  if (g.n() != h.n()) throw NotEquivalentError("graphs have different vertex counts");
  const std::string target = canonical_key(h);
  std::size_t hit = Orbit::kNoParent;
  const Orbit o = closure(g, limit, true, [&](const Orbit& orb, std::size_t i) {
    if (canonical_key(orb.members[i]) == target) hit = i;
    return hit != Orbit::kNoParent;
  });
  if (hit == Orbit::kNoParent) throw NotEquivalentError("graphs are not locally equivalent");
  return o.path_to(hit);
}

std::vector<IsoClass> orbit_iso_classes(const Orbit& o) {
  // Bucket by a cheap invariant (sorted degree sequence) before the
  // backtracking test, so each member is compared only within its bucket.
  std::vector<IsoClass> classes;
  std::map<std::vector<int>, std::vector<std::size_t>> buckets;
  for (const Graph& g : o.members) {
    std::vector<int> degs;
    for (Vertex v = 1; v <= g.n(); ++v) degs.push_back(degree(g, v));
    std::sort(degs.begin(), degs.end());
    auto& bucket = buckets[degs];
    bool placed = false;
    for (std::size_t ci : bucket) {
      if (is_isomorphic(classes[ci].representative, g)) {
        ++classes[ci].multiplicity;
        placed = true;
        break;
      }
    }
    if (!placed) {
      bucket.push_back(classes.size());
      classes.push_back(IsoClass{g, 1});
    }
  }
  return classes;
}

namespace {

template <typename Metric>
MemberMetric min_member(const Orbit& o, Metric&& metric) {
  if (o.members.empty()) throw InvalidSpecError("empty orbit");
  MemberMetric best{o.members[0], metric(o.members[0])};
  std::string best_key = canonical_key(best.graph);
  for (const Graph& g : o.members) {
    const int value = metric(g);
    if (value > best.value) continue;
    std::string key = canonical_key(g);
    if (value < best.value || key < best_key) {
      best = MemberMetric{g, value};
      best_key = std::move(key);
    }
  }
  return best;
}

}  // namespace

MemberMetric min_edge_member(const Orbit& o) {
  return min_member(o, [](const Graph& g) { return edge_count(g); });
}

MemberMetric min_max_degree_member(const Orbit& o) {
  return min_member(o, [](const Graph& g) { return max_degree(g); });
}

std::vector<Graph> sorted_members(const Orbit& o) {
  std::vector<std::pair<std::string, std::size_t>> keyed;
  keyed.reserve(o.members.size());
  for (std::size_t i = 0; i < o.members.size(); ++i) keyed.emplace_back(canonical_key(o.members[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (const auto& [key, i] : keyed) out.push_back(o.members[i]);
  return out;
}

}  // namespace lcq
