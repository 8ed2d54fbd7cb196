#include "propkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "propkit/error.hpp"

namespace propkit {

Perm Perm::identity(int degree) {
  require(degree >= 0, "permutation degree must be nonnegative");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    require(v >= 0 && v < static_cast<int>(images_.size()) && !seen[v],
            "permutation images must be a bijection");
    seen[v] = 1;
  }
}

Perm Perm::from_one_line(const std::vector<int>& images_1based) {
  std::vector<int> img;
  img.reserve(images_1based.size());
  for (int v : images_1based) img.push_back(v - 1);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& rhs) const {
  require(degree() == rhs.degree(), "permutation degree mismatch in composition");
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) img[i] = images_[rhs.images_[i]];
  return Perm(std::move(img));
}

Perm Perm::direct_sum(const Perm& rhs) const {
  std::vector<int> img;
  img.reserve(images_.size() + rhs.images_.size());
  for (int v : images_) img.push_back(v);
  for (int v : rhs.images_) img.push_back(v + degree());
  return Perm(std::move(img));
}

std::string Perm::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < degree(); ++i) {
    if (i) os << ' ';
    os << images_[i] + 1;
  }
  os << ')';
  return os.str();
}

Perm Perm::parse(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') body.erase(body.begin());
  if (!body.empty() && body.back() == ')') body.pop_back();
  std::istringstream is(body);
  std::vector<int> img;
  int v = 0;
  while (is >> v) img.push_back(v);
  require(is.eof(), "malformed permutation: " + text);
  return from_one_line(img);
}

void Perm::check_degree(int expected) const {
  require(degree() == expected, "permutation degree mismatch: expected " +
                                    std::to_string(expected) + ", got " +
                                    std::to_string(degree()));
}

Perm sigma_xy(int x, int y) {
  require(x >= 0 && y >= 0, "sigma_xy arguments must be nonnegative");
  std::vector<int> img(x + y);
  for (int i = 0; i < y; ++i) img[i] = x + i;
  for (int i = 0; i < x; ++i) img[y + i] = i;
  return Perm(std::move(img));
}

Perm block_transpose(int n, int p) {
  require(n >= 0 && p >= 0, "block_transpose arguments must be nonnegative");
  std::vector<int> img(n * p);
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < n; ++i) img[j * n + i] = i * p + j;
  return Perm(std::move(img));
}

std::vector<Perm> all_perms(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) {
  return os << p.to_string();
}

}  // namespace propkit
