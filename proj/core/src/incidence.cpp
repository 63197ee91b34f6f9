#include "dissecta/incidence.hpp"

#include <algorithm>

#include "dissecta/checked.hpp"
#include "dissecta/error.hpp"

namespace dissecta {

namespace {

std::size_t common_dimension(const ValueTable& table, std::size_t expected_rows) {
  if (table.size() != expected_rows) {
    throw Error(Errc::dimension_mismatch, "value table has " + std::to_string(table.size()) +
                                              " rows, poset has " +
                                              std::to_string(expected_rows) + " elements");
  }
  if (table.empty()) return 0;
  const std::size_t d = table.front().size();
  for (const auto& v : table) {
    if (v.size() != d) throw Error(Errc::dimension_mismatch, "value table rows differ in length");
  }
  return d;
}

void axpy(Vector& y, std::int64_t a, const Vector& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = checked_add(y[i], checked_mul(a, x[i]));
}

}  // namespace

IncidenceFunction::IncidenceFunction(PosetRef host) : host_(std::move(host)) {
  values_.resize(host_->size());
  for (Index a = 0; a < host_->size(); ++a) values_[a].assign(host_->up(a).size(), 0);
}

IncidenceFunction IncidenceFunction::delta(PosetRef host) {
  IncidenceFunction f(std::move(host));
  for (Index a = 0; a < f.host_->size(); ++a) f.values_[a][0] = 1;  // up(a) starts with a
  return f;
}

IncidenceFunction IncidenceFunction::zeta(PosetRef host) {
  IncidenceFunction f(std::move(host));
  for (auto& row : f.values_) std::fill(row.begin(), row.end(), 1);
  return f;
}

std::size_t IncidenceFunction::slot(Index a, Index b) const {
  const auto& up = host_->up(a);
  const std::uint32_t rb = host_->rank(b);
  auto it = std::lower_bound(up.begin(), up.end(), rb,
                             [&](Index x, std::uint32_t r) { return host_->rank(x) < r; });
  return static_cast<std::size_t>(it - up.begin());
}

std::int64_t IncidenceFunction::operator()(Index a, Index b) const {
  if (!host_->leq(a, b)) return 0;
  return values_[a][slot(a, b)];
}

void IncidenceFunction::set(Index a, Index b, std::int64_t value) {
  if (!host_->leq(a, b)) {
    throw Error(Errc::not_comparable,
                "'" + host_->id(a) + "' is not below '" + host_->id(b) + "'");
  }
  values_[a][slot(a, b)] = value;
}

IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g) {
  if (f.host() != g.host()) {
    throw Error(Errc::host_mismatch, "convolution of functions on different posets");
  }
  const Poset& p = *f.host();
  IncidenceFunction h(f.host());
  std::vector<std::int64_t> acc(p.size(), 0);
  for (Index a = 0; a < p.size(); ++a) {
    const auto& up_a = p.up(a);
    const auto& f_row = f.row(a);
    for (std::size_t k = 0; k < up_a.size(); ++k) {
      const std::int64_t fac = f_row[k];
      if (fac == 0) continue;
      const Index c = up_a[k];
      const auto& up_c = p.up(c);
      const auto& g_row = g.row(c);
      for (std::size_t j = 0; j < up_c.size(); ++j) {
        acc[up_c[j]] = checked_add(acc[up_c[j]], checked_mul(fac, g_row[j]));
      }
    }
    auto& h_row = h.row(a);
    for (std::size_t k = 0; k < up_a.size(); ++k) {
      h_row[k] = acc[up_a[k]];
      acc[up_a[k]] = 0;
    }
  }
  return h;
}

IncidenceFunction mobius(const PosetRef& host) {
  const Poset& p = *host;
  IncidenceFunction mu(host);
  std::vector<std::int64_t> acc(p.size(), 0);
  for (Index a = 0; a < p.size(); ++a) {
    const auto& up_a = p.up(a);
    auto& row = mu.row(a);
    for (std::size_t k = 0; k < up_a.size(); ++k) {
      const Index c = up_a[k];
      // acc[c] already holds sum_{a<=c'<c} mu(a,c'): every such c' precedes c
      // in the linear extension.
      const std::int64_t value = (c == a) ? 1 : checked_neg(acc[c]);
      row[k] = value;
      acc[c] = 0;
      if (value == 0) continue;
      for (Index b : p.up(c)) {
        if (b != c) acc[b] = checked_add(acc[b], value);
      }
    }
  }
  return mu;
}

std::vector<std::int64_t> mobius_to(const Poset& p, Index target) {
  std::vector<std::int64_t> acc(p.size(), 0);
  std::vector<std::int64_t> out(p.size(), 0);
  const auto& below = p.down(target);
  for (auto it = below.rbegin(); it != below.rend(); ++it) {
    const Index x = *it;
    const std::int64_t value = (x == target) ? 1 : checked_neg(acc[x]);
    out[x] = value;
    if (value == 0) continue;
    for (Index c : p.down(x)) {
      if (c != x) acc[c] = checked_add(acc[c], value);
    }
  }
  return out;
}

ValueTable zeta_transform(const Poset& p, const ValueTable& f, Direction dir) {
  const std::size_t d = common_dimension(f, p.size());
  ValueTable g(p.size(), Vector(d, 0));
  for (Index x = 0; x < p.size(); ++x) {
    const auto& range = dir == Direction::down ? p.down(x) : p.up(x);
    for (Index c : range) axpy(g[x], 1, f[c]);
  }
  return g;
}

ValueTable mobius_invert(const IncidenceFunction& mu, const ValueTable& g, Direction dir) {
  const Poset& p = *mu.host();
  const std::size_t d = common_dimension(g, p.size());
  ValueTable f(p.size(), Vector(d, 0));
  for (Index c = 0; c < p.size(); ++c) {
    const auto& up_c = p.up(c);
    const auto& row = mu.row(c);
    for (std::size_t k = 0; k < up_c.size(); ++k) {
      const Index x = up_c[k];
      if (dir == Direction::down) {
        axpy(f[x], row[k], g[c]);  // f(x) += g(c) mu(c,x)
      } else {
        axpy(f[c], row[k], g[x]);  // f(c) += mu(c,x) g(x)
      }
    }
  }
  return f;
}

ValueTable mobius_invert(const PosetRef& host, const ValueTable& g, Direction dir) {
  return mobius_invert(mobius(host), g, dir);
}

namespace {

ValueTable lift(const std::vector<std::int64_t>& f) {
  ValueTable t;
  t.reserve(f.size());
  for (auto v : f) t.push_back(Vector{v});
  return t;
}

std::vector<std::int64_t> lower(const ValueTable& t) {
  std::vector<std::int64_t> out;
  out.reserve(t.size());
  for (const auto& v : t) out.push_back(v.at(0));
  return out;
}

}  // namespace

std::vector<std::int64_t> zeta_transform(const Poset& p, const std::vector<std::int64_t>& f,
                                         Direction dir) {
  return lower(zeta_transform(p, lift(f), dir));
}

std::vector<std::int64_t> mobius_invert(const IncidenceFunction& mu,
                                        const std::vector<std::int64_t>& g, Direction dir) {
  return lower(mobius_invert(mu, lift(g), dir));
}

}  // namespace dissecta
