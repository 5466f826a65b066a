#include "permrep/families.hpp"

#include <deque>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace permrep {

namespace {

// Uniform integer in [0, bound) by rejection from the top 2^64 range, so
// results depend only on the seed and not on the standard library's
// distribution internals.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

Perm cycle_perm(const std::vector<int>& cycle, int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
  return Perm(std::move(images));
}

std::string images_key(const Perm& p, int degree) {
  std::string key;
  key.reserve(static_cast<std::size_t>(degree) * sizeof(int));
  for (int i = 1; i <= degree; ++i) {
    const int v = p.apply(i);
    key.append(reinterpret_cast<const char*>(&v), sizeof(int));
  }
  return key;
}

}  // namespace

GeneratorSet doubling_cycle_perm(int h, bool relabeled) {
  if (h < 2) throw std::invalid_argument("doubling_cycle_perm: h must be >= 2");
  const int n = (1 << h) - 2;
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  int body_start = 1;
  for (int i = 1; i <= h - 1; ++i) {
    const int len = 1 << (h - i);  // cycle length, longest first
    // closer for cycle i: n-i+1 in the plain labeling, n-h+1+i relabeled
    const int closer = relabeled ? (n - h + 1 + i) : (n - i + 1);
    std::vector<int> cycle;
    cycle.reserve(len);
    for (int b = 0; b < len - 1; ++b) cycle.push_back(body_start + b);
    body_start += len - 1;
    cycle.push_back(closer);
    for (std::size_t c = 0; c < cycle.size(); ++c)
      images[cycle[c] - 1] = cycle[(c + 1) % cycle.size()];
  }
  GeneratorSet out;
  out.degree = n;
  out.perms.push_back(Perm(std::move(images)));
  out.label = std::string(relabeled ? "doubling-relabeled" : "doubling") +
              ":h=" + std::to_string(h);
  return out;
}

GeneratorSet staircase_family(int n, StaircaseKind kind, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("staircase_family: n must be >= 2");
  GeneratorSet out;
  out.degree = n;
  std::mt19937_64 rng(seed);
  for (int k = 2; k <= n; ++k) {
    switch (kind) {
      case StaircaseKind::AdjacentTransposition:
        out.perms.push_back(cycle_perm({k - 1, k}, k));
        break;
      case StaircaseKind::DescendingCycle: {
        std::vector<int> cycle(k);
        for (int i = 0; i < k; ++i) cycle[i] = k - i;
        out.perms.push_back(cycle_perm(cycle, k));
        break;
      }
      case StaircaseKind::Random: {
        // Uniform bijection {1..k-1} -> {1..k} \ {k-1} via Fisher-Yates,
        // then k -> k-1.
        std::vector<int> targets;
        targets.reserve(k - 1);
        for (int x = 1; x <= k; ++x)
          if (x != k - 1) targets.push_back(x);
        for (std::size_t i = targets.size() - 1; i > 0; --i) {
          const std::size_t j =
              static_cast<std::size_t>(uniform_below(rng, i + 1));
          std::swap(targets[i], targets[j]);
        }
        std::vector<int> images(k);
        for (int i = 1; i <= k - 1; ++i) images[i - 1] = targets[i - 1];
        images[k - 1] = k - 1;
        out.perms.push_back(Perm(std::move(images)));
        break;
      }
    }
  }
  switch (kind) {
    case StaircaseKind::AdjacentTransposition:
      out.label = "stairs-adjacent:n=" + std::to_string(n);
      break;
    case StaircaseKind::DescendingCycle:
      out.label = "stairs-cycle:n=" + std::to_string(n);
      break;
    case StaircaseKind::Random:
      out.label = "stairs-random:n=" + std::to_string(n) +
                  ",seed=" + std::to_string(seed);
      break;
  }
  return out;
}

GeneratorSet two_generator_family(int n) {
  if (n < 2) throw std::invalid_argument("two_generator_family: n must be >= 2");
  std::vector<int> full(n);
  for (int i = 0; i < n; ++i) full[i] = i + 1;
  GeneratorSet out;
  out.degree = n;
  out.perms.push_back(cycle_perm(full, n));
  out.perms.push_back(cycle_perm({n - 1, n}, n));
  out.label = "two-gen:n=" + std::to_string(n);
  return out;
}

GeneratorSet transposition_products_family(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument(
        "transposition_products_family: n must be even and >= 2");
  const int pairs = n / 2;
  GeneratorSet out;
  out.degree = n;
  for (int i = 1; i <= pairs; ++i) {
    std::vector<int> images(n);
    for (int x = 0; x < n; ++x) images[x] = x + 1;
    for (int p = pairs - i; p < pairs; ++p) {
      images[2 * p] = 2 * p + 2;
      images[2 * p + 1] = 2 * p + 1;
    }
    out.perms.push_back(Perm(std::move(images)));
  }
  out.label = "transposition-products:n=" + std::to_string(n);
  return out;
}

GeneratorSet sims_example() {
  GeneratorSet out;
  out.degree = 7;
  out.perms.push_back(Perm({2, 4, 6, 5, 7, 1, 3}));
  out.perms.push_back(parse_cycles("[2,4][3,5]", 7));
  out.label = "sims-example";
  return out;
}

std::vector<Perm> brute_force_closure(const GeneratorSet& gens,
                                      std::size_t cap) {
  const int n = gens.degree;
  std::vector<int> id_images(n);
  for (int i = 0; i < n; ++i) id_images[i] = i + 1;
  const Perm id(std::move(id_images));

  std::vector<Perm> elements;
  std::unordered_set<std::string> seen;
  std::deque<std::size_t> frontier;

  elements.push_back(id);
  seen.insert(images_key(id, n));
  frontier.push_back(0);

  while (!frontier.empty()) {
    const Perm current = elements[frontier.front()];
    frontier.pop_front();
    for (const Perm& g : gens.perms) {
      Perm next = compose(current, g);
      if (seen.insert(images_key(next, n)).second) {
        if (elements.size() >= cap)
          throw std::length_error("brute_force_closure: cap exceeded");
        elements.push_back(std::move(next));
        frontier.push_back(elements.size() - 1);
      }
    }
  }
  return elements;
}

namespace {

// "key=value,key=value" parameter block after the family name.
std::unordered_map<std::string, long long> parse_params(
    const std::string& text) {
  std::unordered_map<std::string, long long> params;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eq = text.find('=', pos);
    if (eq == std::string::npos)
      throw std::invalid_argument("family spec: expected key=value in '" +
                                  text + "'");
    const std::string key = text.substr(pos, eq - pos);
    std::size_t end = text.find(',', eq + 1);
    if (end == std::string::npos) end = text.size();
    const std::string value = text.substr(eq + 1, end - eq - 1);
    try {
      params[key] = std::stoll(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("family spec: bad number '" + value + "'");
    }
    pos = end < text.size() ? end + 1 : end;
  }
  return params;
}

long long require_param(const std::unordered_map<std::string, long long>& params,
                        const std::string& key, const std::string& spec) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("family spec '" + spec + "' needs " + key + "=");
  return it->second;
}

}  // namespace

GeneratorSet family_from_spec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (name == "sims-example") {
    if (!rest.empty())
      throw std::invalid_argument("sims-example takes no parameters");
    return sims_example();
  }
  const auto params = parse_params(rest);
  if (name == "doubling" || name == "doubling-relabeled") {
    return doubling_cycle_perm(
        static_cast<int>(require_param(params, "h", spec)),
        name == "doubling-relabeled");
  }
  const auto seed_it = params.find("seed");
  const std::uint64_t seed =
      seed_it == params.end() ? 0 : static_cast<std::uint64_t>(seed_it->second);
  if (name == "stairs-adjacent" || name == "stairs-cycle" ||
      name == "stairs-random") {
    const int n = static_cast<int>(require_param(params, "n", spec));
    const StaircaseKind kind = name == "stairs-adjacent"
                                   ? StaircaseKind::AdjacentTransposition
                               : name == "stairs-cycle"
                                   ? StaircaseKind::DescendingCycle
                                   : StaircaseKind::Random;
    return staircase_family(n, kind, seed);
  }
  if (name == "two-gen")
    return two_generator_family(
        static_cast<int>(require_param(params, "n", spec)));
  if (name == "transposition-products")
    return transposition_products_family(
        static_cast<int>(require_param(params, "n", spec)));
  throw std::invalid_argument("unknown family '" + name + "'");
}

GeneratorSet family_instance(const std::string& name, int n,
                             std::uint64_t seed) {
  if (name == "doubling" || name == "doubling-relabeled") {
    int h = 2;
    while (((1 << h) - 2) < n && h < 31) ++h;
    if (((1 << h) - 2) != n)
      throw std::invalid_argument(
          "doubling families need n = 2^h - 2 (got n=" + std::to_string(n) +
          ")");
    return doubling_cycle_perm(h, name == "doubling-relabeled");
  }
  if (name == "stairs-adjacent")
    return staircase_family(n, StaircaseKind::AdjacentTransposition);
  if (name == "stairs-cycle")
    return staircase_family(n, StaircaseKind::DescendingCycle);
  if (name == "stairs-random")
    return staircase_family(n, StaircaseKind::Random, seed);
  if (name == "two-gen") return two_generator_family(n);
  if (name == "transposition-products")
    return transposition_products_family(n);
  if (name == "sims-example") return sims_example();
  throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace permrep
