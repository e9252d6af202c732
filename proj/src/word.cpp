#include "eta/word.hpp"

#include "eta/error.hpp"

namespace eta {

Word inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->inverted());
  return r;
}

Word free_reduce(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (const Letter& l : w) {
    if (!r.empty() && r.back() == l.inverted()) {
      r.pop_back();
    } else {
      r.push_back(l);
    }
  }
  return r;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

void append(Word& w, const Word& tail) { w.insert(w.end(), tail.begin(), tail.end()); }

Word power(const Word& w, long long exponent) {
  const Word base = exponent < 0 ? inverse(w) : w;
  long long n = exponent < 0 ? -exponent : exponent;
  Word r;
  r.reserve(base.size() * static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) append(r, base);
  return r;
}

Word commutator(const Word& a, const Word& b) {
  Word r = inverse(a);
  append(r, inverse(b));
  append(r, a);
  append(r, b);
  return r;
}

std::vector<long long> exponent_sums(const Word& w, std::size_t num_generators) {
  std::vector<long long> sums(num_generators, 0);
  for (const Letter& l : w) {
    if (l.generator >= num_generators) throw Error("letter outside generator range");
    sums[l.generator] += l.inverse ? -1 : 1;
  }
  return sums;
}

Perm evaluate(const Word& w, std::span<const Perm> generators, std::span<const Perm> inverses,
              std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t x = 0; x < degree; ++x) images[x] = static_cast<Point>(x);
  for (const Letter& l : w) {
    if (l.generator >= generators.size()) throw Error("letter outside generator range");
    const Perm& g = l.inverse ? inverses[l.generator] : generators[l.generator];
    if (g.degree() != degree) throw DegreeMismatch("generator degree differs from word degree");
    for (auto& x : images) x = g[x];
  }
  return Perm(std::move(images));
}

}  // namespace eta
