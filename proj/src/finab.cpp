#include "invdmod/finab.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace invdmod {

std::vector<Character> characters(const FiniteAbelianGroup& g) {
  // The dual group is abstractly the same product of cyclics; residue tuples
  // enumerate it directly.
  std::vector<Character> out;
  for (auto& e : g.elements()) out.push_back(Character{e});
  return out;
}

bool is_trivial_character(const Character& c) {
  return std::all_of(c.residues.begin(), c.residues.end(),
                     [](long long r) { return r == 0; });
}

long long character_order(const FiniteAbelianGroup& g, const Character& c) {
  return g.element_order(c.residues);
}

Character character_product(const FiniteAbelianGroup& g, const Character& a, const Character& b) {
  return Character{g.add(g.reduce(a.residues), g.reduce(b.residues))};
}

Character character_inverse(const FiniteAbelianGroup& g, const Character& a) {
  return Character{g.negate(a.residues)};
}

RepClass::RepClass(FiniteAbelianGroup group, std::vector<Entry> entries)
    : group_(std::move(group)) {
  std::map<Character, long long> acc;
  for (auto& e : entries) {
    if (e.mult < 0) fail(ErrorCode::InvalidArgument, "negative multiplicity");
    if (e.mult == 0) continue;
    Character c{group_.reduce(e.character.residues)};
    acc[c] += e.mult;
  }
  for (auto& [c, m] : acc) entries_.push_back(Entry{c, m});
}

long long RepClass::rank() const {
  long long n = 0;
  for (auto& e : entries_) n += e.mult;
  return n;
}

bool operator==(const RepClass& a, const RepClass& b) {
  if (a.group_ != b.group_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (!(a.entries_[i].character == b.entries_[i].character) ||
        a.entries_[i].mult != b.entries_[i].mult)
      return false;
  return true;
}

RepClass trivial_rep(const FiniteAbelianGroup& g, long long n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "negative rank");
  std::vector<RepClass::Entry> es;
  if (n > 0) es.push_back({Character{g.zero()}, n});
  return RepClass(g, std::move(es));
}

long long count_classes(const FiniteAbelianGroup& gamma, int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "negative rank");
  // C(|gamma| + n - 1, n), overflow-checked.
  __int128 num = 1;
  long long q = gamma.order();
  for (long long i = 1; i <= n; ++i) {
    num = num * (q - 1 + i);
    num /= i;  // exact: prefix products are binomials
    if (num > INT64_MAX) fail(ErrorCode::Overflow, "class count exceeds 64 bits");
  }
  return (long long)num;
}

std::vector<RepClass> classify_semisimple(const FiniteAbelianGroup& gamma, int n,
                                          long long cap) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "negative rank");
  if (count_classes(gamma, n) > cap)
    fail(ErrorCode::ResourceLimit, "too many classes to enumerate");
  std::vector<Character> chars = characters(gamma);
  std::vector<RepClass> out;
  // Multisets of size n over chars, nondecreasing index sequences.
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      std::vector<RepClass::Entry> es;
      for (int idx : pick) {
        if (!es.empty() && es.back().character == chars[idx])
          ++es.back().mult;
        else
          es.push_back({chars[idx], 1});
      }
      out.push_back(RepClass(gamma, std::move(es)));
      return;
    }
    for (int i = start; i < (int)chars.size(); ++i) {
      pick.push_back(i);
      self(self, i, left - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<RepClass> classify_semisimple(const SemisimpleGroup& g, int n, long long cap) {
  return classify_semisimple(g.gamma(), n, cap);
}

long long invariants_dim(const RepClass& v) {
  for (auto& e : v.entries())
    if (is_trivial_character(e.character)) return e.mult;
  return 0;
}

RepClass tensor(const RepClass& a, const RepClass& b) {
  if (a.group() != b.group())
    fail(ErrorCode::GroupMismatch, "tensor of classes over different groups");
  std::vector<RepClass::Entry> es;
  for (auto& x : a.entries())
    for (auto& y : b.entries()) {
      __int128 m = (__int128)x.mult * y.mult;
      if (m > INT64_MAX) fail(ErrorCode::Overflow, "multiplicity exceeds 64 bits");
      es.push_back({character_product(a.group(), x.character, y.character), (long long)m});
    }
  return RepClass(a.group(), std::move(es));
}

RepClass dual(const RepClass& v) {
  std::vector<RepClass::Entry> es;
  for (auto& e : v.entries())
    es.push_back({character_inverse(v.group(), e.character), e.mult});
  return RepClass(v.group(), std::move(es));
}

long long hom_dim(const RepClass& a, const RepClass& b) {
  if (a.group() != b.group())
    fail(ErrorCode::GroupMismatch, "hom of classes over different groups");
  long long d = 0;
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() && ib != b.entries().end()) {
    if (ia->character < ib->character) ++ia;
    else if (ib->character < ia->character) ++ib;
    else { d += ia->mult * ib->mult; ++ia; ++ib; }
  }
  return d;
}

}  // namespace invdmod
