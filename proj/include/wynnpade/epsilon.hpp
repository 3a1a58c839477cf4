#pragma once

// Pade-table sequence acceleration via the Wynn five-point identity, with the
// eta side-table and minimal-|eta| approximant selection.
//
// The table r(l,m) is built from a sequence S_0..S_n placed in row m=0, plus a
// virtual row m=-1 of infinities whose reciprocal differences contribute zero.
// Each southern cell is
//
//   r(l,m+1) = C + 1 / ( 1/(E-C) + 1/(W-C) - 1/(N-C) )
//
// with compass neighbours C=r(l,m), E=r(l+1,m), W=r(l-1,m), N=r(l,m-1) and the
// triangular extent m <= l <= n-m.  The companion estimate
//
//   eta(l,m) = 1 / ( 1/(E-C) + 1/(W-C) )
//
// approximates the step to the southern cell; the cell minimising |eta| is the
// empirically optimal approximant and |eta_min| doubles as an error estimate.
//
// The algebra is written against an abstract field T so both double and
// std::complex<double> instantiate; every shipped driver uses double.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <type_traits>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wynnpade {

enum class CellStatus { Valid, Infinite, Invalid, Converged };

inline const char* to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Valid: return "valid";
    case CellStatus::Infinite: return "infinite";
    case CellStatus::Invalid: return "invalid";
    case CellStatus::Converged: return "converged";
  }
  return "invalid";
}

template <class T>
struct PadeCell {
  T value{};
  CellStatus status{CellStatus::Invalid};
};

namespace detail {

inline double mag(double v) { return std::abs(v); }
inline double mag(const std::complex<double>& v) { return std::abs(v); }

template <class T>
bool finite_value(const T& v) {
  if constexpr (std::is_same_v<T, std::complex<double>>) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  } else {
    return std::isfinite(v);
  }
}

}  // namespace detail

// Differences at or below kConvergedRelTol * |C| are treated as exact zeros by
// the convergence rule (sub-epsilon differences are indistinguishable from
// rounding noise).
inline constexpr double kConvergedRelTol = 4.0 * std::numeric_limits<double>::epsilon();

// Triangular table of approximant values.  Row m holds cells l = m .. n-m;
// the virtual row m = -1 exists for l = 0 .. n+1 with status Infinite.
template <class T>
class PadeTable {
 public:
  PadeTable() = default;

  explicit PadeTable(std::span<const T> seq) {
    if (seq.empty()) throw std::invalid_argument("empty sequence");
    n_ = static_cast<int>(seq.size()) - 1;
    rows_.emplace_back();
    rows_[0].reserve(seq.size());
    for (const T& s : seq) {
      if (!detail::finite_value(s)) throw std::invalid_argument("non-finite sequence entry");
      rows_[0].push_back(PadeCell<T>{s, CellStatus::Valid});
    }
  }

  int n() const { return n_; }

  // Deepest real row index (row m exists while m <= n - m).
  int max_row() const { return static_cast<int>(rows_.size()) - 1; }

  bool exists(int l, int m) const {
    if (m == -1) return l >= 0 && l <= n_ + 1;
    return m >= 0 && m <= max_row() && l >= m && l <= n_ - m;
  }

  const PadeCell<T>& at(int l, int m) const {
    static const PadeCell<T> infinite{T{}, CellStatus::Infinite};
    if (m == -1) return infinite;
    return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(l - m)];
  }

  // Used by build_table only.
  std::vector<std::vector<PadeCell<T>>>& rows() { return rows_; }
  const std::vector<std::vector<PadeCell<T>>>& rows() const { return rows_; }

 private:
  int n_ = -1;
  std::vector<std::vector<PadeCell<T>>> rows_;
};

template <class T>
struct EtaEntry {
  int l = 0;
  int m = 0;
  T eta{};
};

// Entries in row-major (m, then l) order; present only where C, E, W are all
// Valid and the defining denominator is finite and nonzero (eta = 0 is
// recorded on exact local convergence).
template <class T>
using EtaTable = std::vector<EtaEntry<T>>;

template <class T>
struct ApproximantChoice {
  T value{};
  std::optional<double> eta_min{};  // |eta| of the winning cell; empty if no eta exists
  int l = 0;
  int m = 0;
  bool converged_exactly = false;
};

// ---------------------------------------------------------------------------

template <class T>
PadeTable<T> build_table(std::span<const T> seq) {
  PadeTable<T> table(seq);
  const int n = table.n();
  auto& rows = table.rows();

  for (int m = 0; 2 * (m + 1) <= n; ++m) {
    const auto& cur = rows[static_cast<std::size_t>(m)];
    std::vector<PadeCell<T>> south;
    south.reserve(static_cast<std::size_t>(n - 2 * m - 1));
    // South cells live at l = m+1 .. n-m-1.
    for (int l = m + 1; l <= n - m - 1; ++l) {
      const PadeCell<T>& C = cur[static_cast<std::size_t>(l - m)];
      const PadeCell<T>& E = cur[static_cast<std::size_t>(l + 1 - m)];
      const PadeCell<T>& W = cur[static_cast<std::size_t>(l - 1 - m)];
      const PadeCell<T>& N = table.at(l, m - 1);

      if (C.status == CellStatus::Invalid || E.status == CellStatus::Invalid ||
          W.status == CellStatus::Invalid || N.status == CellStatus::Invalid) {
        south.push_back(PadeCell<T>{T{}, CellStatus::Invalid});
        continue;
      }

      const T dE = E.value - C.value;
      const T dW = W.value - C.value;
      const double ctol = kConvergedRelTol * detail::mag(C.value);
      if (detail::mag(dE) <= ctol || detail::mag(dW) <= ctol) {
        // Locally converged: the sequence has stopped moving at this stencil.
        south.push_back(PadeCell<T>{C.value, CellStatus::Converged});
        continue;
      }

      T bracket = T(1) / dE + T(1) / dW;
      if (N.status != CellStatus::Infinite) {
        const T dN = N.value - C.value;
        if (dN == T(0)) {
          south.push_back(PadeCell<T>{T{}, CellStatus::Invalid});
          continue;
        }
        bracket -= T(1) / dN;
      }
      if (bracket == T(0) || !detail::finite_value(bracket)) {
        south.push_back(PadeCell<T>{T{}, CellStatus::Invalid});
        continue;
      }
      const T value = C.value + T(1) / bracket;
      if (!detail::finite_value(value)) {
        south.push_back(PadeCell<T>{T{}, CellStatus::Invalid});
        continue;
      }
      south.push_back(PadeCell<T>{value, CellStatus::Valid});
    }
    rows.push_back(std::move(south));
  }
  return table;
}

template <class T>
EtaTable<T> eta_table(const PadeTable<T>& table) {
  EtaTable<T> etas;
  const int n = table.n();
  for (int m = 0; m <= table.max_row(); ++m) {
    for (int l = m + 1; l <= n - m - 1; ++l) {
      const PadeCell<T>& C = table.at(l, m);
      const PadeCell<T>& E = table.at(l + 1, m);
      const PadeCell<T>& W = table.at(l - 1, m);
      if (C.status != CellStatus::Valid || E.status != CellStatus::Valid ||
          W.status != CellStatus::Valid) {
        continue;
      }
      const T dE = E.value - C.value;
      const T dW = W.value - C.value;
      const double ctol = kConvergedRelTol * detail::mag(C.value);
      if (detail::mag(dE) <= ctol || detail::mag(dW) <= ctol) {
        etas.push_back(EtaEntry<T>{l, m, T(0)});  // exact local convergence
        continue;
      }
      const T denom = T(1) / dE + T(1) / dW;
      if (denom == T(0) || !detail::finite_value(denom)) continue;
      const T eta = T(1) / denom;
      if (!detail::finite_value(eta)) continue;
      etas.push_back(EtaEntry<T>{l, m, eta});
    }
  }
  return etas;
}

template <class T>
ApproximantChoice<T> select_optimal(const PadeTable<T>& table, const EtaTable<T>& etas) {
  const int n = table.n();
  if (etas.empty()) {
    // Too short for any eta: fall back to the last sequence entry.
    return ApproximantChoice<T>{table.at(n, 0).value, std::nullopt, n, 0, false};
  }

  const EtaEntry<T>* best = &etas.front();
  double best_mag = detail::mag(best->eta);
  for (const EtaEntry<T>& e : etas) {
    const double m = detail::mag(e.eta);
    // Tie-break: smaller l+m, then smaller m (lower orders amplify less noise).
    if (m < best_mag ||
        (m == best_mag && (e.l + e.m < best->l + best->m ||
                           (e.l + e.m == best->l + best->m && e.m < best->m)))) {
      best = &e;
      best_mag = m;
    }
  }

  const bool converged = best_mag == 0.0;
  // The eta estimate governs the south cell produced by the winning stencil;
  // report that value when the cell is usable, otherwise the centre.
  const PadeCell<T>& south = table.at(best->l, best->m + 1);
  if (south.status == CellStatus::Valid) {
    return ApproximantChoice<T>{south.value, best_mag, best->l, best->m + 1, converged};
  }
  if (south.status == CellStatus::Converged) {
    // The converged south value equals the centre value; report the (Valid)
    // centre indices.
    return ApproximantChoice<T>{south.value, best_mag, best->l, best->m, converged};
  }
  return ApproximantChoice<T>{table.at(best->l, best->m).value, best_mag, best->l, best->m,
                              converged};
}

template <class T>
ApproximantChoice<T> accelerate(std::span<const T> seq) {
  const PadeTable<T> table = build_table(seq);
  return select_optimal(table, eta_table(table));
}

namespace detail {

inline std::string fmt_scalar(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string fmt_scalar(const std::complex<double>& v) {
  return fmt_scalar(v.real()) + "+" + fmt_scalar(v.imag()) + "i";
}

}  // namespace detail

// Debug dump: header `l,m,value,status,eta`, one row per cell, row-major by m
// (starting at the virtual row -1) then l.  eta is empty where undefined.
template <class T>
void dump_table(const PadeTable<T>& table, const EtaTable<T>& etas, std::ostream& os) {
  os << "l,m,value,status,eta\n";
  const int n = table.n();
  for (int l = 0; l <= n + 1; ++l) {
    os << l << ",-1,inf,infinite,\n";
  }
  for (int m = 0; m <= table.max_row(); ++m) {
    for (int l = m; l <= n - m; ++l) {
      const PadeCell<T>& c = table.at(l, m);
      os << l << ',' << m << ',' << detail::fmt_scalar(c.value) << ',' << to_string(c.status)
         << ',';
      for (const EtaEntry<T>& e : etas) {
        if (e.l == l && e.m == m) {
          os << detail::fmt_scalar(e.eta);
          break;
        }
      }
      os << '\n';
    }
  }
}

// Convenience overloads over raw vectors (the common call style).
inline PadeTable<double> build_table(const std::vector<double>& seq) {
  return build_table<double>(std::span<const double>(seq));
}
inline ApproximantChoice<double> accelerate(const std::vector<double>& seq) {
  return accelerate<double>(std::span<const double>(seq));
}

}  // namespace wynnpade
