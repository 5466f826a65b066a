#include "permrep/perm.hpp"

#include <algorithm>
#include <cctype>

namespace permrep {

namespace {

void check_bijection(const std::vector<int>& images, const char* what) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument(std::string(what) +
                                  ": not a permutation of 1.." +
                                  std::to_string(n));
    seen[v - 1] = 1;
  }
}

}  // namespace

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  check_bijection(images_, "Perm");
}

bool operator==(const Perm& a, const Perm& b) {
  const int n = std::max(a.degree(), b.degree());
  for (int i = 1; i <= n; ++i)
    if (a.apply(i) != b.apply(i)) return false;
  return true;
}

InverseRep::InverseRep(const Perm& p, int level) {
  if (level < 1) throw std::invalid_argument("InverseRep: level must be >= 1");
  if (largest_moved_point(p) > level)
    throw std::invalid_argument("InverseRep: perm moves points beyond level");
  preimages_.resize(level);
  for (int i = 1; i <= level; ++i) preimages_[p.apply(i) - 1] = i;
}

InverseRep::InverseRep(std::vector<int> preimages)
    : preimages_(std::move(preimages)) {
  check_bijection(preimages_, "InverseRep");
}

Perm InverseRep::direct() const {
  const int n = degree();
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[preimages_[i - 1] - 1] = i;
  return Perm(std::move(images));
}

Perm parse_cycles(std::string_view text, int degree) {
  if (degree < 1) throw std::invalid_argument("parse_cycles: degree must be >= 1");
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  std::vector<char> used(degree, 0);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  // "()" is the canonical rendering of the identity (see format_cycles); accept
  // it so every formatted permutation parses back.
  if (pos < text.size() && text[pos] == '(') {
    ++pos;
    if (pos >= text.size() || text[pos] != ')')
      throw ParseError(ParseError::Kind::Syntax, "expected ')'", pos);
    ++pos;
    skip_ws();
    if (pos < text.size())
      throw ParseError(ParseError::Kind::Syntax, "unexpected text after '()'", pos);
    return Perm(std::move(images));
  }
  while (pos < text.size()) {
    if (text[pos] != '[')
      throw ParseError(ParseError::Kind::Syntax, "expected '['", pos);
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      const std::size_t num_start = pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError(ParseError::Kind::Syntax, "expected point number", pos);
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > degree)
          throw ParseError(ParseError::Kind::PointOutOfRange,
                           "point exceeds degree " + std::to_string(degree),
                           num_start);
        ++pos;
      }
      if (value < 1)
        throw ParseError(ParseError::Kind::PointOutOfRange,
                         "points are numbered from 1", num_start);
      if (used[value - 1])
        throw ParseError(ParseError::Kind::DuplicatePoint,
                         "point " + std::to_string(value) + " appears twice",
                         num_start);
      used[value - 1] = 1;
      cycle.push_back(static_cast<int>(value));
      skip_ws();
      if (pos >= text.size())
        throw ParseError(ParseError::Kind::Syntax, "unterminated cycle", pos);
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ']') {
        ++pos;
        break;
      }
      throw ParseError(ParseError::Kind::Syntax, "expected ',' or ']'", pos);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Perm(std::move(images));
}

std::string format_cycles(const Perm& p) {
  const int n = largest_moved_point(p);
  if (n == 0) return "()";
  std::vector<char> seen(n, 0);
  std::string out;
  for (int i = 1; i <= n; ++i) {
    if (seen[i - 1] || p.apply(i) == i) continue;
    out += '[';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ',';
      first = false;
      out += std::to_string(j);
      seen[j - 1] = 1;
      j = p.apply(j);
    } while (j != i);
    out += ']';
  }
  return out;
}

Perm compose(const Perm& a, const Perm& b) {
  const int n = std::max(a.degree(), b.degree());
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1] = b.apply(a.apply(i));
  return Perm(std::move(images));
}

Perm inverse(const Perm& p) {
  const int n = p.degree();
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[p.apply(i) - 1] = i;
  return Perm(std::move(images));
}

Perm power(const Perm& p, long long r) {
  if (r < 0) return power(inverse(p), -r);
  Perm acc;
  Perm base = p;
  while (r > 0) {
    if (r & 1) acc = compose(acc, base);
    base = compose(base, base);
    r >>= 1;
  }
  return acc;
}

Perm mult_by_inverse_transversal(const Perm& p, const InverseRep& s) {
  const int k = s.degree();
  if (largest_moved_point(p) > k)
    throw std::invalid_argument("mult_by_inverse_transversal: degree mismatch");
  std::vector<int> d(k);
  for (int i = 1; i <= k; ++i) d[i - 1] = s.preimage(p.apply(i));
  return Perm(std::move(d));
}

Perm mult_transversal_by_perm(const InverseRep& s, const Perm& p) {
  const int k = s.degree();
  if (largest_moved_point(p) > k)
    throw std::invalid_argument("mult_transversal_by_perm: degree mismatch");
  std::vector<int> d(k);
  for (int i = 1; i <= k; ++i) d[s.preimage(i) - 1] = p.apply(i);
  return Perm(std::move(d));
}

int largest_moved_point(const Perm& p) {
  for (int i = p.degree(); i >= 1; --i)
    if (p.apply(i) != i) return i;
  return 0;
}

}  // namespace permrep
