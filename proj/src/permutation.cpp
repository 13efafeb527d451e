#include "braidperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace braidperm
{

namespace
{

std::size_t trimmed_degree(std::vector<Point> const &images)
{
  std::size_t n = images.size();
  while (n > 0 && images[n - 1] == n)
    --n;
  return n;
}

} // namespace

Permutation::Permutation(std::size_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{1});
}

Permutation Permutation::from_images(std::span<Point const> images)
{
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x < 1 || x > images.size() || seen[x - 1])
      throw std::invalid_argument("image sequence is not a bijection");
    seen[x - 1] = true;
  }
  Permutation p;
  p.images_.assign(images.begin(), images.end());
  return p;
}

Permutation Permutation::from_images(std::initializer_list<Point> images)
{
  return from_images(std::span<Point const>(images.begin(), images.size()));
}

Permutation Permutation::inverse() const
{
  Permutation inv(degree());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv.images_[images_[i] - 1] = static_cast<Point>(i + 1);
  return inv;
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  std::size_t const n = std::max(degree(), rhs.degree());
  Permutation result(n);
  for (Point x = 1; x <= n; ++x)
    result.images_[x - 1] = (*this)(rhs(x));
  return result;
}

Permutation Permutation::pow(long long exponent) const
{
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? 0ULL - static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  std::size_t const ord = order();
  e %= ord;
  Permutation result(degree());
  while (e > 0) {
    if (e & 1ULL)
      result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation Permutation::extended(std::size_t degree) const
{
  if (degree <= this->degree())
    return *this;
  Permutation result(degree);
  std::copy(images_.begin(), images_.end(), result.images_.begin());
  return result;
}

Permutation Permutation::trimmed() const
{
  Permutation result;
  result.images_.assign(images_.begin(), images_.begin() + trimmed_degree(images_));
  return result;
}

bool Permutation::is_identity() const { return trimmed_degree(images_) == 0; }

Point Permutation::largest_moved_point() const
{
  return static_cast<Point>(trimmed_degree(images_));
}

std::vector<Point> Permutation::support() const
{
  std::vector<Point> result;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1)
      result.push_back(static_cast<Point>(i + 1));
  }
  return result;
}

std::size_t Permutation::order() const
{
  std::size_t result = 1;
  for (auto const &c : cycle_decomposition(*this).cycles)
    result = std::lcm(result, c.length());
  return result;
}

bool Permutation::commutes_with(Permutation const &other) const
{
  return *this * other == other * *this;
}

bool Permutation::preserves(Point first, Point last) const
{
  for (Point x = first; x <= last; ++x) {
    Point y = (*this)(x);
    if (y < first || y > last)
      return false;
  }
  return true;
}

Permutation Permutation::block(std::size_t offset, std::size_t width) const
{
  std::vector<Point> images(width);
  for (std::size_t i = 1; i <= width; ++i) {
    Point y = (*this)(static_cast<Point>(offset + i));
    if (y <= offset || y > offset + width)
      throw std::invalid_argument("block is not invariant");
    images[i - 1] = static_cast<Point>(y - offset);
  }
  return from_images(images);
}

bool operator==(Permutation const &lhs, Permutation const &rhs)
{
  std::size_t const n = trimmed_degree(lhs.images_);
  if (n != trimmed_degree(rhs.images_))
    return false;
  return std::equal(lhs.images_.begin(), lhs.images_.begin() + n, rhs.images_.begin());
}

bool operator<(Permutation const &lhs, Permutation const &rhs)
{
  std::size_t const n = std::max(lhs.degree(), rhs.degree());
  for (Point x = 1; x <= n; ++x) {
    Point a = lhs(x), b = rhs(x);
    if (a != b)
      return a < b;
  }
  return false;
}

std::size_t Permutation::hash() const
{
  std::size_t seed = 0;
  std::size_t const n = trimmed_degree(images_);
  for (std::size_t i = 0; i < n; ++i)
    seed ^= images_[i] + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

Permutation conjugate(Permutation const &zeta, Permutation const &sigma)
{
  return zeta * sigma * zeta.inverse();
}

Permutation omega_shift(Permutation const &sigma, std::size_t k)
{
  std::vector<Point> images(sigma.degree() + k);
  for (std::size_t i = 1; i <= k; ++i)
    images[i - 1] = static_cast<Point>(i);
  for (std::size_t i = 1; i <= sigma.degree(); ++i)
    images[k + i - 1] = static_cast<Point>(sigma(static_cast<Point>(i)) + k);
  return Permutation::from_images(images);
}

Permutation theta(std::size_t s, std::size_t d, std::size_t n)
{
  if (s < 1 || s + 1 > n || d < 1)
    throw std::out_of_range("theta: block index out of range");
  std::vector<Point> images(n * d);
  std::iota(images.begin(), images.end(), Point{1});
  std::size_t const lo = (s - 1) * d;
  for (std::size_t i = 1; i <= d; ++i) {
    images[lo + i - 1] = static_cast<Point>(lo + d + i);
    images[lo + d + i - 1] = static_cast<Point>(lo + i);
  }
  return Permutation::from_images(images);
}

Cycle::Cycle(std::vector<Point> points) : points_(std::move(points))
{
  if (points_.empty())
    throw std::invalid_argument("empty cycle");
  auto sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1)
    throw std::invalid_argument("cycle point must be positive");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("repeated point in cycle");
}

Point Cycle::least() const { return *std::min_element(points_.begin(), points_.end()); }

bool Cycle::contains(Point x) const
{
  return std::find(points_.begin(), points_.end(), x) != points_.end();
}

Cycle Cycle::rotated_to(Point start) const
{
  auto it = std::find(points_.begin(), points_.end(), start);
  if (it == points_.end())
    throw std::invalid_argument("rotation start not in cycle");
  std::vector<Point> pts(it, points_.end());
  pts.insert(pts.end(), points_.begin(), it);
  return Cycle(std::move(pts));
}

Cycle Cycle::shifted(std::size_t k) const
{
  std::vector<Point> pts = points_;
  for (auto &x : pts)
    x = static_cast<Point>(x + k);
  return Cycle(std::move(pts));
}

bool operator==(Cycle const &lhs, Cycle const &rhs)
{
  if (lhs.length() != rhs.length())
    return false;
  auto const a = lhs.canonical().points_;
  auto const b = rhs.canonical().points_;
  return a == b;
}

std::vector<Cycle> CycleDecomposition::all_cycles() const
{
  std::vector<Cycle> result = cycles;
  for (Point x : fixed_points)
    result.emplace_back(std::vector<Point>{x});
  std::sort(result.begin(), result.end(),
            [](Cycle const &a, Cycle const &b) { return a.least() < b.least(); });
  return result;
}

std::vector<Cycle> CycleDecomposition::cycles_of_length(std::size_t m) const
{
  std::vector<Cycle> result;
  for (auto const &c : all_cycles()) {
    if (c.length() == m)
      result.push_back(c);
  }
  return result;
}

CycleDecomposition cycle_decomposition(Permutation const &sigma)
{
  CycleDecomposition result;
  result.degree = sigma.degree();
  std::vector<bool> seen(sigma.degree() + 1, false);
  for (Point x = 1; x <= sigma.degree(); ++x) {
    if (seen[x])
      continue;
    std::vector<Point> pts;
    for (Point y = x; !seen[y]; y = sigma(y)) {
      seen[y] = true;
      pts.push_back(y);
    }
    if (pts.size() == 1)
      result.fixed_points.push_back(x);
    else
      result.cycles.emplace_back(std::move(pts));
  }
  return result;
}

std::vector<Cycle> cycles_with_fixed_points(Permutation const &sigma, std::size_t degree)
{
  return cycle_decomposition(sigma.extended(degree)).all_cycles();
}

Permutation from_cycles(std::span<Cycle const> cycles, std::size_t degree)
{
  std::size_t n = degree;
  for (auto const &c : cycles)
    n = std::max<std::size_t>(n, *std::max_element(c.points().begin(), c.points().end()));
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  std::vector<bool> used(n + 1, false);
  for (auto const &c : cycles) {
    auto const &pts = c.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (used[pts[i]])
        throw std::invalid_argument("cycles have overlapping supports");
      used[pts[i]] = true;
      images[pts[i] - 1] = pts[(i + 1) % pts.size()];
    }
  }
  return Permutation::from_images(images);
}

Permutation from_cycles(std::initializer_list<Cycle> cycles, std::size_t degree)
{
  return from_cycles(std::span<Cycle const>(cycles.begin(), cycles.size()), degree);
}

std::size_t CycleType::count(std::size_t m) const
{
  auto it = multiplicities.find(m);
  return it == multiplicities.end() ? 0 : it->second;
}

CycleType cycle_type(Permutation const &sigma, std::size_t degree)
{
  CycleType result;
  result.degree = std::max(degree, sigma.degree());
  for (auto const &c : cycles_with_fixed_points(sigma, result.degree))
    ++result.multiplicities[c.length()];
  return result;
}

CycleType cycle_type(Permutation const &sigma) { return cycle_type(sigma, sigma.degree()); }

std::uint64_t factorial(std::size_t n)
{
  std::uint64_t result = 1;
  for (std::size_t i = 2; i <= n; ++i)
    result *= i;
  return result;
}

std::uint64_t z_of(CycleType const &lambda)
{
  std::uint64_t result = 1;
  for (auto const &[m, c] : lambda.multiplicities) {
    for (std::size_t i = 0; i < c; ++i)
      result *= m;
    result *= factorial(c);
  }
  return result;
}

std::uint64_t partition_count(std::size_t d)
{
  std::vector<std::uint64_t> ways(d + 1, 0);
  ways[0] = 1;
  for (std::size_t part = 1; part <= d; ++part) {
    for (std::size_t total = part; total <= d; ++total)
      ways[total] += ways[total - part];
  }
  return ways[d];
}

namespace
{

void partitions_rec(std::size_t remaining, std::size_t max_part, CycleType &current,
                    std::vector<CycleType> &out)
{
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    ++current.multiplicities[part];
    partitions_rec(remaining - part, part, current, out);
    if (--current.multiplicities[part] == 0)
      current.multiplicities.erase(part);
  }
}

} // namespace

std::vector<CycleType> partitions(std::size_t d)
{
  std::vector<CycleType> result;
  CycleType current;
  current.degree = d;
  partitions_rec(d, d, current, result);
  return result;
}

Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  std::vector<Cycle> cycles;
  bool saw_empty = false;
  skip_ws();
  if (pos == text.size())
    throw ParseError("empty permutation text; use \"()\" for the identity");

  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<Point> pts;
    bool need_separator = false;
    for (;;) {
      skip_ws();
      if (pos == text.size())
        throw ParseError("unterminated cycle");
      char const c = text[pos];
      if (c == ')') {
        if (!pts.empty() && !need_separator)
          throw ParseError("trailing ',' in cycle");
        ++pos;
        break;
      }
      if (c == ',') {
        if (pts.empty() || !need_separator)
          throw ParseError("misplaced ',' at offset " + std::to_string(pos));
        need_separator = false;
        ++pos;
        continue;
      }
      if (c == '-' || c == '+')
        throw ParseError("points must be positive integers");
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError(std::string("unexpected character '") + c + "'");
      unsigned long long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned>(text[pos] - '0');
        if (value > 1'000'000)
          throw ParseError("point too large");
        ++pos;
      }
      if (value == 0)
        throw ParseError("points must be >= 1");
      pts.push_back(static_cast<Point>(value));
      need_separator = true;
    }
    if (pts.empty()) {
      saw_empty = true;
    } else {
      try {
        cycles.emplace_back(std::move(pts));
      } catch (std::invalid_argument const &e) {
        throw ParseError(e.what());
      }
    }
    skip_ws();
  }
  if (saw_empty && !cycles.empty())
    throw ParseError("\"()\" cannot be combined with other cycles");

  try {
    return from_cycles(cycles, degree);
  } catch (std::invalid_argument const &) {
    throw ParseError("repeated point across cycles");
  }
}

namespace
{

std::string print_with(Permutation const &sigma, char const *sep)
{
  auto const dec = cycle_decomposition(sigma);
  if (dec.cycles.empty())
    return "()";
  std::ostringstream os;
  for (auto const &c : dec.cycles) {
    os << '(';
    bool first = true;
    for (Point x : c.points()) {
      if (!first)
        os << sep;
      os << x;
      first = false;
    }
    os << ')';
  }
  return os.str();
}

} // namespace

std::string print_cycles(Permutation const &sigma) { return print_with(sigma, " "); }

std::string print_cycles_gap(Permutation const &sigma) { return print_with(sigma, ","); }

std::ostream &operator<<(std::ostream &os, Permutation const &sigma)
{
  return os << print_cycles(sigma);
}

std::ostream &operator<<(std::ostream &os, Cycle const &c)
{
  os << '(';
  for (std::size_t i = 0; i < c.points().size(); ++i)
    os << (i ? " " : "") << c.points()[i];
  return os << ')';
}

} // namespace braidperm
