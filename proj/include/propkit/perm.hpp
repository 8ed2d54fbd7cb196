#ifndef PROPKIT_PERM_HPP
#define PROPKIT_PERM_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace propkit {

/// A finite permutation in one-line notation. Internally 0-based:
/// `images()[i]` is the image of position i. Composition applies the
/// right factor first, so (a * b)(i) = a(b(i)).
class Perm {
public:
  Perm() = default;
  static Perm identity(int degree);
  /// 0-based images; must be a bijection of [0, n).
  explicit Perm(std::vector<int> images);
  /// Convenience for tests/fixtures: 1-based one-line images.
  static Perm from_one_line(const std::vector<int>& images_1based);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm operator*(const Perm& rhs) const;  // apply rhs, then *this

  /// Block-diagonal permutation on degree() + rhs.degree() letters.
  Perm direct_sum(const Perm& rhs) const;

  bool operator==(const Perm& rhs) const = default;
  auto operator<=>(const Perm& rhs) const = default;

  /// One-line image string, 1-based: "(3 4 5 1 2)".
  std::string to_string() const;
  static Perm parse(const std::string& text);

  /// Applies the right action: result[i] = xs[sigma(i)]. Degree must
  /// equal xs.size().
  template <typename T>
  std::vector<T> act_right(const std::vector<T>& xs) const {
    check_degree(static_cast<int>(xs.size()));
    std::vector<T> out;
    out.reserve(xs.size());
    for (int i = 0; i < degree(); ++i) out.push_back(xs[images_[i]]);
    return out;
  }

  /// Applies the left action: result[k] = xs[tau^{-1}(k)].
  template <typename T>
  std::vector<T> act_left(const std::vector<T>& xs) const {
    check_degree(static_cast<int>(xs.size()));
    std::vector<T> out(xs.size());
    for (int k = 0; k < degree(); ++k) out[images_[k]] = xs[k];
    return out;
  }

private:
  void check_degree(int expected) const;
  std::vector<int> images_;
};

/// The increasing block swap of Eq. form: maps [0,y) onto [x, x+y) and
/// [y, x+y) onto [0, x), each restriction increasing.
Perm sigma_xy(int x, int y);

/// Interchange of a p-fold list of n-blocks with an n-fold list of
/// p-blocks: position (j-1)*n + i goes to (i-1)*p + j (1-based reading).
Perm block_transpose(int n, int p);

/// All permutations of a given degree in lexicographic order.
std::vector<Perm> all_perms(int degree);

std::ostream& operator<<(std::ostream& os, const Perm& p);

}  // namespace propkit

#endif
