#include "sfc/lattice.hpp"

#include "sfc/error.hpp"

namespace sfc {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("lattice coefficient overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("lattice coefficient overflow");
  return r;
}

// g = x*a + y*b with g = gcd(a, b) > 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    std::int64_t q = a / b, t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

// p*u + q*v
IntegerLattice::Vec combine(std::int64_t p, const IntegerLattice::Vec& u, std::int64_t q, const IntegerLattice::Vec& v) {
  IntegerLattice::Vec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = checked_add(checked_mul(p, u[i]), checked_mul(q, v[i]));
  return r;
}

}  // namespace

void IntegerLattice::add(Vec v) {
  if (v.size() != rows_.size()) throw InputError("lattice vector has wrong dimension");
  for (std::size_t c = 0; c < rows_.size(); ++c) {
    if (v[c] == 0) continue;
    if (!rows_[c]) {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      rows_[c] = std::move(v);
      return;
    }
    Vec& b = *rows_[c];
    std::int64_t x, y;
    std::int64_t g = ext_gcd(b[c], v[c], x, y);
    Vec nb = combine(x, b, y, v);
    Vec nv = combine(b[c] / g, v, -(v[c] / g), b);
    b = std::move(nb);
    v = std::move(nv);
  }
}

void IntegerLattice::add(const IntegerLattice& o) {
  for (const auto& r : o.rows_)
    if (r) add(*r);
}

bool IntegerLattice::contains(Vec v) const {
  if (v.size() != rows_.size()) throw InputError("lattice vector has wrong dimension");
  for (std::size_t c = 0; c < rows_.size(); ++c) {
    if (v[c] == 0) continue;
    if (!rows_[c]) return false;
    const Vec& b = *rows_[c];
    if (v[c] % b[c] != 0) return false;
    v = combine(1, v, -(v[c] / b[c]), b);
  }
  return true;
}

std::size_t IntegerLattice::rank() const {
  std::size_t r = 0;
  for (const auto& x : rows_) r += x.has_value();
  return r;
}

std::vector<IntegerLattice::Vec> IntegerLattice::basis() const {
  std::vector<Vec> out;
  for (const auto& x : rows_)
    if (x) out.push_back(*x);
  return out;
}

}  // namespace sfc
