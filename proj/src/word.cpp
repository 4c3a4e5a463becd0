#include "oddcox/word.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <string>
#include <optional>
#include <unordered_set>

#include "oddcox/error.hpp"

namespace oddcox {

namespace {

constexpr long kNoBraid = 0;  // marks an infinite exponent in the move table

using Key = std::u16string;

Key to_key(const Word& w) {
  Key k;
  k.reserve(w.size());
  for (Gen g : w) k.push_back(static_cast<char16_t>(g));
  return k;
}

Word from_key(const Key& k) {
  std::vector<Gen> letters;
  letters.reserve(k.size());
  for (char16_t c : k) letters.push_back(static_cast<Gen>(c));
  return Word(std::move(letters));
}

bool has_adjacent_pair(const Key& k, std::size_t& at) {
  for (std::size_t p = 0; p + 1 < k.size(); ++p) {
    if (k[p] == k[p + 1]) {
      at = p;
      return true;
    }
  }
  return false;
}

}  // namespace

Word Word::power(int k) const {
  std::vector<Gen> out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Gen> out(a.letters_);
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a.letters_ <=> b.letters_;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<Gen> letters;
  std::size_t pos = 0;
  bool saw_e = false;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',') {
      ++pos;
      continue;
    }
    if (text[pos] == 'e') {
      saw_e = true;
      ++pos;
      continue;
    }
    Gen g = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), g);
    if (ec != std::errc() || g < 1) {
      fail(ErrorKind::Parse, "bad word letter at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
    }
    letters.push_back(g);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (saw_e && !letters.empty()) fail(ErrorKind::Parse, "\"e\" must stand alone: \"" + std::string(text) + "\"");
  return Word(std::move(letters));
}

Word alternating(Gen s, Gen t, std::size_t length) {
  std::vector<Gen> out;
  for (std::size_t i = 0; i < length; ++i) out.push_back(i % 2 == 0 ? s : t);
  return Word(std::move(out));
}

WordEngine::WordEngine(CoxeterSystem sys, std::size_t orbit_budget)
    : sys_(std::move(sys)), budget_(orbit_budget) {
  const int n = sys_.rank();
  exponent_.assign(static_cast<std::size_t>((n + 1) * (n + 1)), kNoBraid);
  for (Gen i = 1; i <= n; ++i) {
    for (Gen j = 1; j <= n; ++j) {
      const Exponent e = sys_.m(i, j);
      if (i != j && e.finite()) exponent_[static_cast<std::size_t>(i * (n + 1) + j)] = e.value();
    }
  }
}

void WordEngine::check_letters(const Word& w) const {
  for (Gen g : w) {
    if (g < 1 || g > sys_.rank()) {
      fail(ErrorKind::InvalidLetter, "letter " + std::to_string(g) + " outside 1.." + std::to_string(sys_.rank()));
    }
  }
}

namespace {

// Breadth-first exploration of the braid-move class of `start`. `visit` sees
// every member once and stops the search by returning true.
template <typename Visit>
void explore(const Key& start, const std::vector<long>& exponent, int rank, std::size_t budget, Visit&& visit) {
  std::unordered_set<Key> seen{start};
  std::deque<Key> queue{start};
  const auto stride = static_cast<std::size_t>(rank + 1);
  while (!queue.empty()) {
    Key cur = std::move(queue.front());
    queue.pop_front();
    if (visit(cur)) return;
    const std::size_t len = cur.size();
    for (std::size_t p = 0; p + 1 < len; ++p) {
      const char16_t a = cur[p];
      const char16_t b = cur[p + 1];
      if (a == b) continue;
      const long m = exponent[a * stride + b];
      if (m == kNoBraid || p + static_cast<std::size_t>(m) > len) continue;
      bool alternates = true;
      for (std::size_t q = p + 2; q < p + static_cast<std::size_t>(m); ++q) {
        if (cur[q] != cur[q - 2]) {
          alternates = false;
          break;
        }
      }
      if (!alternates) continue;
      Key next = cur;
      for (std::size_t q = p; q < p + static_cast<std::size_t>(m); ++q) next[q] = (next[q] == a) ? b : a;
      if (seen.insert(next).second) {
        if (seen.size() > budget) {
          fail(ErrorKind::OrbitBudgetExceeded, "braid orbit exceeded budget of " + std::to_string(budget) + " words");
        }
        queue.push_back(std::move(next));
      }
    }
  }
}

}  // namespace

std::vector<Word> WordEngine::braid_orbit(const Word& w) const {
  check_letters(w);
  std::vector<Word> out;
  explore(to_key(w), exponent_, sys_.rank(), budget_, [&](const Key& k) {
    out.push_back(from_key(k));
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

CanonicalWord WordEngine::append(const CanonicalWord& u, Gen s) const {
  if (s < 1 || s > sys_.rank()) {
    fail(ErrorKind::InvalidLetter, "letter " + std::to_string(s) + " outside 1.." + std::to_string(sys_.rank()));
  }
  const Word& base = u.word();
  if (base.empty()) return CanonicalWord(Word{s});
  if (base[base.size() - 1] == s) {
    // A prefix of a ShortLex-least reduced word is itself ShortLex-least.
    return CanonicalWord(Word(std::vector<Gen>(base.begin(), base.end() - 1)));
  }

  Key start = to_key(base);
  start.push_back(static_cast<char16_t>(s));

  std::optional<Key> cancelled;
  Key least = start;
  explore(start, exponent_, sys_.rank(), budget_, [&](const Key& k) {
    std::size_t at = 0;
    if (has_adjacent_pair(k, at)) {
      Key shorter = k;
      shorter.erase(at, 2);
      cancelled = std::move(shorter);
      return true;
    }
    if (k < least) least = k;
    return false;
  });
  if (!cancelled) return CanonicalWord(from_key(least));

  // The shortened word is reduced; its canonical form is the least member of
  // its braid class.
  least = *cancelled;
  explore(*cancelled, exponent_, sys_.rank(), budget_, [&](const Key& k) {
    if (k < least) least = k;
    return false;
  });
  return CanonicalWord(from_key(least));
}

CanonicalWord WordEngine::reduce(const Word& w) const {
  check_letters(w);
  CanonicalWord acc = identity();
  for (Gen g : w) acc = append(acc, g);
  return acc;
}

bool WordEngine::equal(const Word& a, const Word& b) const { return reduce(a) == reduce(b); }

CanonicalWord WordEngine::multiply(const Word& a, const Word& b) const {
  CanonicalWord acc = reduce(a);
  check_letters(b);
  for (Gen g : b) acc = append(acc, g);
  return acc;
}

CanonicalWord WordEngine::conjugate(const Word& v, const Word& x) const {
  return reduce(x * v * x.inverse());
}

std::set<Gen> WordEngine::left_descents(const Word& w) const {
  const CanonicalWord cw = reduce(w);
  std::set<Gen> out;
  // l(s w) = l(w^-1 s), and w^-1 is the reversal.
  const CanonicalWord inv = reduce(cw.word().inverse());
  for (Gen s = 1; s <= sys_.rank(); ++s) {
    if (append(inv, s).length() < cw.length()) out.insert(s);
  }
  return out;
}

std::set<Gen> WordEngine::support(const Word& w) const {
  const CanonicalWord cw = reduce(w);
  return {cw.word().begin(), cw.word().end()};
}

Word involution_to_base(const WordEngine& engine, const Word& v) {
  const CoxeterSystem& sys = engine.system();
  CanonicalWord cur = engine.reduce(v);
  if (cur.is_identity() || !engine.multiply(cur.word(), cur.word()).is_identity()) {
    fail(ErrorKind::NotInvolution, "not a nontrivial involution: " + to_string(v));
  }

  std::vector<Gen> prefix;  // generators in application order
  while (cur.length() > 1) {
    bool stepped = false;
    for (Gen s = 1; s <= sys.rank() && !stepped; ++s) {
      CanonicalWord next = engine.reduce(Word{s} * cur.word() * Word{s});
      if (next.length() + 2 == cur.length()) {
        prefix.push_back(s);
        cur = std::move(next);
        stepped = true;
      }
    }
    if (!stepped) {
      fail(ErrorKind::NoDescentStep, "no length-decreasing conjugation for " + to_string(cur.word()));
    }
  }

  // x = (shifts along the tree path) * s_k ... s_1
  Word x(std::vector<Gen>(prefix.rbegin(), prefix.rend()));

  const Gen j = cur.word()[0];
  if (j != 1) {
    // Parent pointers of a BFS from 1 give the tree path j -> 1.
    std::vector<Gen> parent(static_cast<std::size_t>(sys.rank() + 1), 0);
    std::deque<Gen> queue{1};
    parent[1] = 1;
    while (!queue.empty()) {
      const Gen a = queue.front();
      queue.pop_front();
      for (Gen b : sys.neighbours(a)) {
        if (parent[b] == 0) {
          parent[b] = a;
          queue.push_back(b);
        }
      }
    }
    if (parent[j] == 0) fail(ErrorKind::NotInTW, "generator " + std::to_string(j) + " is not connected to 1");
    for (Gen a = j; a != 1; a = parent[a]) {
      const Gen b = parent[a];
      const long m = sys.m(a, b).value();
      // (w_a w_b)^h w_a (w_a w_b)^-h = w_b for h = (m - 1) / 2, m odd.
      x = alternating(a, b, static_cast<std::size_t>(m - 1)) * x;
    }
  }
  return engine.reduce(x).word();
}

DihedralLog dihedral_log(const WordEngine& engine, Gen j, const Word& w) {
  const CoxeterSystem& sys = engine.system();
  if (j < 2 || j > sys.rank() || !sys.m(1, j).finite()) {
    fail(ErrorKind::NotInParabolic, "generator " + std::to_string(j) + " does not span a finite parabolic with 1");
  }
  const CanonicalWord target = engine.reduce(w);
  for (Gen g : target.word()) {
    if (g != 1 && g != j) fail(ErrorKind::NotInParabolic, to_string(w) + " is not in <w_1, w_" + std::to_string(j) + ">");
  }
  const long t = sys.m(1, j).value();
  const Word rotation{1, j};
  for (long k = 0; k < t; ++k) {
    const Word r = rotation.power(static_cast<int>(k));
    if (engine.reduce(r) == target) return {Parity::Even, k};
    if (engine.reduce(Word{1} * r) == target) return {Parity::Odd, k};
  }
  fail(ErrorKind::NotInParabolic, to_string(w) + " not found in the dihedral parabolic");
}

}  // namespace oddcox
