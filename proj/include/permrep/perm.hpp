#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permrep {

// Thrown by parse_cycles. position() is the 0-based offset of the offending
// character (for out-of-range or duplicate points, the offset where the
// number starts).
class ParseError : public std::runtime_error {
public:
  enum class Kind { Syntax, DuplicatePoint, PointOutOfRange };

  ParseError(Kind kind, const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        kind_(kind), position_(position) {}

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

private:
  Kind kind_;
  std::size_t position_;
};

// A permutation of {1..degree}. Points beyond the degree are implicitly
// fixed, and all comparisons ignore trailing fixed points, so the same
// mapping declared at two different degrees compares equal.
//
// Products compose left to right throughout this library: (a*b) takes
// i to b(a(i)), i.e. a acts first.
class Perm {
public:
  Perm() = default;  // identity, degree 0

  // images[i-1] is the image of point i. Throws std::invalid_argument if
  // the vector is not a permutation of 1..images.size().
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }

  // Image of point i (1-based); points beyond the degree map to themselves.
  // Throws std::out_of_range for i < 1.
  int apply(int i) const {
    if (i < 1) throw std::out_of_range("point index must be >= 1");
    if (i > degree()) return i;
    return images_[i - 1];
  }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i + 1) return false;
    return true;
  }

  friend bool operator==(const Perm& a, const Perm& b);
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }

private:
  std::vector<int> images_;
};

// A transversal perm sigma stored by its inverse images: preimages[i-1] = q[i]
// where sigma takes q[i] to i, for 1 <= i <= degree. This is the storage form
// that makes the two products the algorithm needs single-pass array scans:
//
//   pi * sigma^-  via d[i] = q[pi[i]]
//   sigma * pi    via d[q[i]] = pi[i]
class InverseRep {
public:
  // Store the perm p viewed at the given level; the level must cover every
  // point p moves. Throws std::invalid_argument otherwise.
  InverseRep(const Perm& p, int level);

  // Adopt a ready-made preimage array (q itself must be a permutation).
  explicit InverseRep(std::vector<int> preimages);

  int degree() const { return static_cast<int>(preimages_.size()); }
  int preimage(int i) const { return preimages_[i - 1]; }
  const std::vector<int>& preimages() const { return preimages_; }

  // The represented perm as a direct image array (costs an inversion; used
  // for output and tests, not in the update algorithms).
  Perm direct() const;

private:
  std::vector<int> preimages_;
};

// Cycle-notation parser. Grammar: zero or more cycles "[p1,p2,...,pn]",
// whitespace allowed between tokens; every point must lie in 1..degree and
// may appear at most once. The empty string is the identity, and the
// canonical identity form "()" emitted by format_cycles is accepted too, so
// parse_cycles(format_cycles(p), p.degree()) == p for every p. Errors carry
// the character position (see ParseError).
Perm parse_cycles(std::string_view text, int degree);

// Canonical cycle form: cycles of length >= 2 only, each starting with its
// smallest point, cycles ordered by smallest point; identity prints as "()".
std::string format_cycles(const Perm& p);

// Left-to-right product: result takes i to b(a(i)). Differing degrees are
// handled by padding the smaller perm with fixed points.
Perm compose(const Perm& a, const Perm& b);

Perm inverse(const Perm& p);

// r-fold product; r = 0 gives the identity, negative r powers the inverse.
Perm power(const Perm& p, long long r);

// Free-function form of Perm::apply.
inline int apply(const Perm& p, int i) { return p.apply(i); }

// p * sigma^- where sigma is given by its InverseRep s: d[i] = q[p[i]] for
// 1 <= i <= s.degree(). p must not move points beyond s.degree().
Perm mult_by_inverse_transversal(const Perm& p, const InverseRep& s);

// sigma * p where sigma is given by its InverseRep s: d[q[i]] = p[i] for
// 1 <= i <= s.degree(). p must not move points beyond s.degree().
Perm mult_transversal_by_perm(const InverseRep& s, const Perm& p);

// Largest i with p(i) != i, or 0 for the identity.
int largest_moved_point(const Perm& p);

}  // namespace permrep
