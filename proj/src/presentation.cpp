#include "oddcox/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace oddcox {

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

FreeWord cyclic_reduce(const FreeWord& w) {
  FreeWord r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

namespace {

FreeWord least_rotation(const FreeWord& w) {
  FreeWord best = w;
  FreeWord cur = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

FreeWord relator_key(const FreeWord& w) {
  const FreeWord r = cyclic_reduce(w);
  return std::min(least_rotation(r), least_rotation(free_inverse(r)));
}

bool is_proper_power(const FreeWord& w) {
  const FreeWord r = cyclic_reduce(w);
  const std::size_t n = r.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = r[i] == r[i - period];
    if (periodic) return true;
  }
  return false;
}

FinitePresentation tietze_simplify(FinitePresentation p) {
  std::vector<bool> alive(static_cast<std::size_t>(p.generators + 1), true);
  alive[0] = false;

  auto normalize = [](std::vector<FreeWord>& rels) {
    std::set<FreeWord> keys;
    std::vector<FreeWord> out;
    for (const FreeWord& r : rels) {
      FreeWord c = cyclic_reduce(r);
      if (c.empty()) continue;
      if (keys.insert(relator_key(c)).second) out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(), [](const FreeWord& a, const FreeWord& b) { return a.size() < b.size(); });
    rels = std::move(out);
  };

  for (;;) {
    normalize(p.relators);
    // Shortest relator with a generator occurring exactly once.
    std::size_t pick = p.relators.size();
    int generator = 0;
    for (std::size_t r = 0; r < p.relators.size() && pick == p.relators.size(); ++r) {
      std::vector<int> count(static_cast<std::size_t>(p.generators + 1), 0);
      for (int x : p.relators[r]) ++count[static_cast<std::size_t>(std::abs(x))];
      for (int x : p.relators[r]) {
        if (count[static_cast<std::size_t>(std::abs(x))] == 1) {
          pick = r;
          generator = std::abs(x);
          break;
        }
      }
    }
    if (pick == p.relators.size()) break;

    // Rotate so the generator leads: g^e u = 1, hence g = u^-1 (e = 1) or u.
    FreeWord rel = p.relators[pick];
    const auto at = std::find_if(rel.begin(), rel.end(), [&](int x) { return std::abs(x) == generator; });
    std::rotate(rel.begin(), at, rel.end());
    const int sign = rel.front() > 0 ? 1 : -1;
    const FreeWord rest(rel.begin() + 1, rel.end());
    const FreeWord value = sign > 0 ? free_inverse(rest) : rest;
    const FreeWord value_inv = free_inverse(value);

    p.relators.erase(p.relators.begin() + static_cast<long>(pick));
    for (FreeWord& r : p.relators) {
      FreeWord out;
      for (int x : r) {
        if (x == generator) {
          out.insert(out.end(), value.begin(), value.end());
        } else if (x == -generator) {
          out.insert(out.end(), value_inv.begin(), value_inv.end());
        } else {
          out.push_back(x);
        }
      }
      r = free_reduce(out);
    }
    alive[static_cast<std::size_t>(generator)] = false;
  }

  std::vector<int> renumber(static_cast<std::size_t>(p.generators + 1), 0);
  FinitePresentation out;
  for (int g = 1; g <= p.generators; ++g) {
    if (!alive[static_cast<std::size_t>(g)]) continue;
    renumber[static_cast<std::size_t>(g)] = ++out.generators;
    if (static_cast<std::size_t>(g) <= p.names.size()) out.names.push_back(p.names[static_cast<std::size_t>(g - 1)]);
  }
  for (const FreeWord& r : p.relators) {
    FreeWord mapped;
    for (int x : r) mapped.push_back(x > 0 ? renumber[static_cast<std::size_t>(x)] : -renumber[static_cast<std::size_t>(-x)]);
    out.relators.push_back(std::move(mapped));
  }
  if (out.names.size() != static_cast<std::size_t>(out.generators)) out.names.clear();
  return out;
}

std::string to_string(const FreeWord& w, const FinitePresentation& p) {
  if (w.empty()) return "1";
  auto name = [&](int g) {
    return static_cast<std::size_t>(g) <= p.names.size() ? p.names[static_cast<std::size_t>(g - 1)]
                                                          : "x" + std::to_string(g);
  };
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const int power = static_cast<int>(j - i) * (w[i] > 0 ? 1 : -1);
    if (!out.empty()) out += ' ';
    out += name(std::abs(w[i]));
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

}  // namespace oddcox
