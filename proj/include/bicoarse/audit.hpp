#pragma once

// Finite-sample auditor for the coarse-group axioms of a metered magma
// (G, d, ∗, e, (−)⁻¹): a set-group up to uniformly bounded error exactly when
// the associativity, unit and inverse defects are bounded and left/right
// multiplication is equi-controlled. Every value reported here is a supremum
// over the supplied sample, so it can refute but never certify those bounds.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "bicoarse/error.hpp"
#include "bicoarse/word.hpp"

namespace bicoarse {

template <class T, class Dist>
struct MeteredMagma {
  std::string descriptor;
  std::vector<T> sample;
  std::function<T(const T&, const T&)> op;
  std::function<T(const T&)> inv;
  T unit;
  std::function<Dist(const T&, const T&)> metric;
  // Domain on which op/inv/metric are defined; empty means everywhere.
  std::function<bool(const T&)> in_domain;
};

template <class T, class Dist>
struct Witnessed {
  Dist value{};
  std::vector<T> witness;  // the elements realizing value, in clause order
};

template <class T, class Dist>
struct DefectReport {
  std::string descriptor;
  std::size_t sample_size = 0;
  std::size_t metric_violations = 0;
  Witnessed<T, Dist> assoc;    // d(g(hk), (gh)k)
  Witnessed<T, Dist> unit;     // d(eg, g), d(ge, g)
  Witnessed<T, Dist> inverse;  // d(gg⁻¹, e), d(g⁻¹g, e)
  Witnessed<T, Dist> abelian;  // d(gh, hg)
  std::vector<Dist> radii;
  std::vector<Witnessed<T, Dist>> equi_left;   // d(gh, gh') with d(h, h') <= r
  std::vector<Witnessed<T, Dist>> equi_right;  // d(hg, h'g) with d(h, h') <= r
};

namespace detail {

// Floating distances (e.g. Euclidean via hypot) get a relative slack in the
// triangle check; integral distances are compared exactly.
inline constexpr double kTriangleSlack = 1e-9;

template <class Dist>
bool exceeds(Dist lhs, Dist rhs) {
  if constexpr (std::is_floating_point_v<Dist>) {
    return lhs > rhs + kTriangleSlack * std::max<Dist>(Dist(1), rhs);
  } else {
    return lhs > rhs;
  }
}

template <class T, class Dist>
T checked(const MeteredMagma<T, Dist>& m, T value) {
  if (m.in_domain && !m.in_domain(value)) {
    throw Error(ErrorKind::SampleNotClosed, m.descriptor + ": a required product leaves the audited domain");
  }
  return value;
}

// Strictly larger values replace the witness, so the first witness in sample
// order wins ties.
template <class T, class Dist>
void raise(Witnessed<T, Dist>& slot, Dist value, std::vector<T> witness) {
  if (slot.witness.empty() || value > slot.value) {
    slot.value = value;
    slot.witness = std::move(witness);
  }
}

}  // namespace detail

template <class T, class Dist>
DefectReport<T, Dist> audit(const MeteredMagma<T, Dist>& m, const std::vector<Dist>& radii) {
  const auto& s = m.sample;
  const std::size_t n = s.size();
  auto op = [&](const T& x, const T& y) { return detail::checked(m, m.op(x, y)); };
  auto inv = [&](const T& x) { return detail::checked(m, m.inv(x)); };

  DefectReport<T, Dist> r;
  r.descriptor = m.descriptor;
  r.sample_size = n;
  r.radii = radii;
  r.equi_left.resize(radii.size());
  r.equi_right.resize(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    r.equi_left[i].value = Dist{};
    r.equi_right[i].value = Dist{};
  }

  std::vector<T> products;  // products[i * n + j] = s[i] ∗ s[j]
  products.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) products.push_back(op(s[i], s[j]));
  }
  std::vector<Dist> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = m.metric(s[i], s[j]);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i * n + i] != Dist{}) ++r.metric_violations;
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i * n + j] != dist[j * n + i]) ++r.metric_violations;
      if (i != j && !(dist[i * n + j] > Dist{}) && !(s[i] == s[j])) ++r.metric_violations;
    }
  }
  if (n <= 200) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (detail::exceeds(dist[i * n + k], dist[i * n + j] + dist[j * n + k])) ++r.metric_violations;
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const T& g = s[i];
    detail::raise(r.unit, std::max(m.metric(op(m.unit, g), g), m.metric(op(g, m.unit), g)), {g});
    const T gi = inv(g);
    detail::raise(r.inverse, std::max(m.metric(op(g, gi), m.unit), m.metric(op(gi, g), m.unit)), {g});
    for (std::size_t j = 0; j < n; ++j) {
      const T& h = s[j];
      detail::raise(r.abelian, m.metric(products[i * n + j], products[j * n + i]), {g, h});
      for (std::size_t k = 0; k < n; ++k) {
        const T& x = s[k];
        detail::raise(r.assoc, m.metric(op(g, products[j * n + k]), op(products[i * n + j], x)), {g, h, x});
      }
    }
  }

  // Equi-invariance: g ranges over the sample, (h, h') over sample pairs within r.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Dist dhk = dist[j * n + k];
      for (std::size_t ri = 0; ri < radii.size(); ++ri) {
        if (dhk > radii[ri]) continue;
        for (std::size_t i = 0; i < n; ++i) {
          detail::raise(r.equi_left[ri], m.metric(products[i * n + j], products[i * n + k]), {s[i], s[j], s[k]});
          detail::raise(r.equi_right[ri], m.metric(products[j * n + i], products[k * n + i]), {s[i], s[j], s[k]});
        }
      }
    }
  }
  return r;
}

template <class T, class Dist>
struct ConjugationDefect {
  Dist value{};
  std::optional<T> g;
  std::optional<T> h;
};

// sup over g in G, h in H of min over h' in H of d(g h g⁻¹, h').
template <class T, class Dist>
ConjugationDefect<T, Dist> conjugation_defect(const MeteredMagma<T, Dist>& m, const std::vector<T>& subgroup,
                                              const std::vector<T>& conjugators) {
  ConjugationDefect<T, Dist> out;
  for (const T& g : conjugators) {
    const T gi = detail::checked(m, m.inv(g));
    for (const T& h : subgroup) {
      const T c = detail::checked(m, m.op(detail::checked(m, m.op(g, h)), gi));
      std::optional<Dist> nearest;
      for (const T& h2 : subgroup) {
        const Dist d = m.metric(c, h2);
        if (!nearest || d < *nearest) nearest = d;
      }
      if (nearest && (!out.g || *nearest > out.value)) {
        out.value = *nearest;
        out.g = g;
        out.h = h;
      }
    }
  }
  return out;
}

// (F_S, d_x) on the reduced ball of the given radius.
MeteredMagma<ReducedWord, std::size_t> f2_cancel_magma(std::size_t radius, const Alphabet& alphabet = Alphabet(2));
// ℤ on {−n..n} with x ∗ y = x + y + 1, unit 0, inverse −x, metric |x − y|.
MeteredMagma<std::int64_t, std::int64_t> perturbed_z_magma(std::int64_t n);

struct Z2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const Z2&) const = default;
};

// ℤ² on the box [−n, n]² with Euclidean distance.
MeteredMagma<Z2, double> z2_euclid_magma(std::int64_t n);

struct AbelianGrowthEntry {
  long n;
  std::size_t distance;  // d_x([x^n, y^n], ε)
};

// Throws Error(InvalidInput) for n_max > 12.
std::vector<AbelianGrowthEntry> abelian_growth(long n_max, int x = 0, int y = 1);

}  // namespace bicoarse
