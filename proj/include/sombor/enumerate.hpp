#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "sombor/bounds.hpp"
#include "sombor/error.hpp"
#include "sombor/generate.hpp"
#include "sombor/graph.hpp"
#include "sombor/graph6.hpp"

namespace sombor {

struct EnumSpec {
  std::size_t n = 0;
  bool connected_only = true;
  std::optional<std::size_t> max_count;
  // n = 7 and 8 (2^21 and 2^28 masks) must be requested explicitly.
  bool allow_large = false;
};

inline constexpr std::size_t enum_min_n = 2;
inline constexpr std::size_t enum_max_n = 8;
inline constexpr std::size_t enum_default_max_n = 6;

inline std::size_t pair_count(std::size_t n) noexcept { return n * (n - 1) / 2; }
inline std::uint64_t mask_count(std::size_t n) noexcept { return std::uint64_t{1} << pair_count(n); }

inline void validate(const EnumSpec& spec) {
  if (spec.n < enum_min_n || spec.n > enum_max_n)
    throw input_error("enumeration supports 2 <= n <= 8, got n = " + std::to_string(spec.n));
  if (spec.n > enum_default_max_n && !spec.allow_large)
    throw input_error("n = " + std::to_string(spec.n) + " exceeds the default guard n <= 6; set allow_large");
}

// Bit k of mask is pair k in graph6 column-major order (0,1),(0,2),(1,2),(0,3),...
class MaskDecoder {
 public:
  explicit MaskDecoder(std::size_t n) : n_(n) {
    for (std::size_t v = 1; v < n; ++v)
      for (std::size_t u = 0; u < v; ++u) pairs_.push_back({Vertex(u), Vertex(v)});
    // lexicographic emission order: for each u, v ascending
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) lex_bits_.push_back(v * (v - 1) / 2 + u);
  }

  bool connected(std::uint32_t mask) const {
    std::uint32_t adj[enum_max_n] = {};
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (mask >> k & 1u) {
        adj[pairs_[k].u] |= 1u << pairs_[k].v;
        adj[pairs_[k].v] |= 1u << pairs_[k].u;
      }
    }
    const std::uint32_t all = (1u << n_) - 1;
    std::uint32_t reach = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[__builtin_ctz(f)];
      frontier = next & ~reach;
      reach |= next;
    }
    return reach == all;
  }

  Graph decode(std::uint32_t mask) const {
    std::vector<Edge> edges;
    for (std::size_t bit : lex_bits_)
      if (mask >> bit & 1u) edges.push_back(pairs_[bit]);
    return Graph::from_sorted_edges_unchecked(n_, std::move(edges));
  }

 private:
  std::size_t n_;
  std::vector<Edge> pairs_;
  std::vector<std::size_t> lex_bits_;
};

// Calls fn(mask, graph) for each qualifying mask in [begin, end), ascending.
// fn may return bool; false stops the scan. Returns the number of graphs visited.
template <class Fn>
std::size_t for_each_labeled(const EnumSpec& spec, Fn&& fn, std::uint64_t begin = 0,
                             std::optional<std::uint64_t> end = std::nullopt) {
  validate(spec);
  const MaskDecoder dec(spec.n);
  const std::uint64_t stop = std::min(end.value_or(mask_count(spec.n)), mask_count(spec.n));
  std::size_t visited = 0;
  for (std::uint64_t mask = begin; mask < stop; ++mask) {
    if (spec.max_count && visited >= *spec.max_count) break;
    const auto m32 = static_cast<std::uint32_t>(mask);
    if (spec.connected_only && !dec.connected(m32)) continue;
    ++visited;
    const Graph g = dec.decode(m32);
    if constexpr (std::is_same_v<std::invoke_result_t<Fn, std::uint64_t, const Graph&>, bool>) {
      if (!fn(mask, g)) break;
    } else {
      fn(mask, g);
    }
  }
  return visited;
}

// Pull-style enumerator over the same order as for_each_labeled.
class LabeledEnumerator {
 public:
  explicit LabeledEnumerator(const EnumSpec& spec) : spec_((validate(spec), spec)), dec_(spec.n) {}

  std::optional<Graph> next() {
    const std::uint64_t total = mask_count(spec_.n);
    while (mask_ < total) {
      if (spec_.max_count && emitted_ >= *spec_.max_count) return std::nullopt;
      const auto m32 = static_cast<std::uint32_t>(mask_++);
      if (spec_.connected_only && !dec_.connected(m32)) continue;
      ++emitted_;
      return dec_.decode(m32);
    }
    return std::nullopt;
  }

 private:
  EnumSpec spec_;
  MaskDecoder dec_;
  std::uint64_t mask_ = 0;
  std::size_t emitted_ = 0;
};

inline std::vector<Graph> enumerate_labeled(const EnumSpec& spec) {
  std::vector<Graph> out;
  for_each_labeled(spec, [&](std::uint64_t, const Graph& g) { out.push_back(g); });
  return out;
}

// Inclusive integer range, written "lo..hi" or a single value.
struct IntRange {
  std::size_t lo = 0;
  std::size_t hi = 0;

  static IntRange parse(std::string_view s) {
    auto num = [&](std::string_view t) {
      std::size_t v = 0;
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (t.empty() || ec != std::errc() || p != t.data() + t.size())
        throw input_error("bad range '" + std::string(s) + "'");
      return v;
    };
    IntRange r;
    if (auto dots = s.find(".."); dots != std::string_view::npos) {
      r.lo = num(s.substr(0, dots));
      r.hi = num(s.substr(dots + 2));
    } else {
      r.lo = r.hi = num(s);
    }
    if (r.lo > r.hi) throw input_error("empty range '" + std::string(s) + "'");
    return r;
  }
};

struct HuntSpec {
  Family family = Family::complete_bipartite;
  IntRange n{3, 3};  // path, cycle, complete, star, gnp
  IntRange a{1, 1};  // complete_bipartite
  IntRange b{1, 1};
  double p = 0.5;
  std::uint64_t seed = 1;
  std::size_t trials = 1;  // gnp graphs per n, seeds seed, seed+1, ...
  std::vector<BoundId> bounds;
  Mode mode = Mode::plain;
  EvalOptions eval;
};

struct HuntHit {
  FamilySpec params;
  std::string graph_id;
  std::string certificate;  // graph6
  BoundReport report;
};

// Family members in scan order.
inline std::vector<FamilySpec> hunt_members(const HuntSpec& spec) {
  std::vector<FamilySpec> out;
  if (spec.family == Family::complete_bipartite) {
    for (std::size_t a = spec.a.lo; a <= spec.a.hi; ++a)
      for (std::size_t b = spec.b.lo; b <= spec.b.hi; ++b) {
        FamilySpec f;
        f.family = spec.family;
        f.a = a;
        f.b = b;
        out.push_back(f);
      }
    return out;
  }
  for (std::size_t n = spec.n.lo; n <= spec.n.hi; ++n) {
    const std::size_t reps = spec.family == Family::gnp ? spec.trials : 1;
    for (std::size_t t = 0; t < reps; ++t) {
      FamilySpec f;
      f.family = spec.family;
      f.n = n;
      f.p = spec.p;
      f.seed = spec.seed + t;
      out.push_back(f);
    }
  }
  return out;
}

// Scans the family and returns only violated reports, each with a graph6 certificate.
template <class OnHit>
std::size_t hunt_family(const HuntSpec& spec, OnHit&& on_hit) {
  const std::vector<BoundId> ids =
      spec.bounds.empty() ? parse_bound_list("all") : spec.bounds;
  std::size_t hits = 0;
  for (const auto& member : hunt_members(spec)) {
    const Graph g = generate(member);
    std::optional<std::string> cert;
    for (auto& r : evaluate_selected(g, spec.mode, ids, spec.eval)) {
      if (r.holds) continue;
      if (!cert) cert = graph6::write(g);
      ++hits;
      on_hit(HuntHit{member, describe(member), *cert, std::move(r)});
    }
  }
  return hits;
}

inline std::vector<HuntHit> hunt_family(const HuntSpec& spec) {
  std::vector<HuntHit> out;
  hunt_family(spec, [&](HuntHit h) { out.push_back(std::move(h)); });
  return out;
}

}  // namespace sombor
