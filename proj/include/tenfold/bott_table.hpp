#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace tenfold {

enum class InvariantGroup { Zero, Z2, Z };

inline std::string_view to_string(InvariantGroup g) {
  switch (g) {
    case InvariantGroup::Z:
      return "Z";
    case InvariantGroup::Z2:
      return "Z2";
    case InvariantGroup::Zero:
      break;
  }
  return "0";
}

inline std::optional<InvariantGroup> parse_group(std::string_view s) {
  if (s == "Z") return InvariantGroup::Z;
  if (s == "Z2") return InvariantGroup::Z2;
  if (s == "0") return InvariantGroup::Zero;
  return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, InvariantGroup g) { return os << to_string(g); }

enum class Family { Complex, Real };

inline std::string_view to_string(Family f) { return f == Family::Real ? "real" : "complex"; }

/// Bott period: 2 for the complex family, 8 for the real one.
constexpr int period(Family f) { return f == Family::Real ? 8 : 2; }

constexpr int reduce(int x, Family f) {
  const int p = period(f);
  return ((x % p) + p) % p;
}

/// (family, s, d) coordinate, stored reduced modulo the Bott period.
struct TableIndex {
  Family family;
  int s;
  int d;

  TableIndex(Family f, int s_, int d_) : family(f), s(reduce(s_, f)), d(reduce(d_, f)) {}

  friend bool operator==(const TableIndex&, const TableIndex&) = default;
};

struct ClassifyingSpace {
  Family family;
  int s;
  std::string_view label;
  InvariantGroup pi0;
};

// Coset descriptions and zeroth homotopy groups, one record per symmetry index.
inline constexpr std::array<ClassifyingSpace, 2> kComplexSpaces{{
    {Family::Complex, 0, "U(2n)/(U(n)×U(n))×Z", InvariantGroup::Z},
    {Family::Complex, 1, "U(n)", InvariantGroup::Zero},
}};

inline constexpr std::array<ClassifyingSpace, 8> kRealSpaces{{
    {Family::Real, 0, "{O(2n)/(O(n)×O(n))}×Z", InvariantGroup::Z},
    {Family::Real, 1, "O(16n)", InvariantGroup::Z2},
    {Family::Real, 2, "O(16n)/U(8n)", InvariantGroup::Z2},
    {Family::Real, 3, "U(8n)/Sp(4n)", InvariantGroup::Zero},
    {Family::Real, 4, "{Sp(4n)/(Sp(2n)×Sp(2n))}×Z", InvariantGroup::Z},
    {Family::Real, 5, "Sp(2n)", InvariantGroup::Zero},
    {Family::Real, 6, "Sp(2n)/U(2n)", InvariantGroup::Zero},
    {Family::Real, 7, "U(2n)/O(2n)", InvariantGroup::Zero},
}};

inline const ClassifyingSpace& classifying_space(Family f, int s) {
  const int r = reduce(s, f);
  return f == Family::Real ? kRealSpaces[r] : kComplexSpaces[r];
}

inline InvariantGroup pi0(Family f, int s) { return classifying_space(f, s).pi0; }

/// Bott clock: the group in class s and dimension d is pi0 of the space at s - d.
inline InvariantGroup group_at(Family f, int s, int d) { return pi0(f, s - d); }

inline InvariantGroup group_at(const TableIndex& idx) { return group_at(idx.family, idx.s, idx.d); }

/// One more symmetry generator: the loop space of the current space.
inline TableIndex loop_shift(const TableIndex& idx) {
  return TableIndex(idx.family, idx.s + 1, idx.d);
}

/// One more spatial dimension: the suspension of the current space.
inline TableIndex suspend_shift(const TableIndex& idx) {
  return TableIndex(idx.family, idx.s, idx.d + 1);
}

inline constexpr std::array<std::string_view, 2> kComplexLabels{"A", "AIII"};
inline constexpr std::array<std::string_view, 8> kRealLabels{"AI",  "BDI", "D", "DIII",
                                                             "AII", "CII", "C", "CI"};

inline std::string_view cartan_label(Family f, int s) {
  const int r = reduce(s, f);
  return f == Family::Real ? kRealLabels[r] : kComplexLabels[r];
}

/// The published periodic table, cell by cell, as strings. Rows are ordered
/// complex s = 0..1 followed by real s = 0..7; columns are d = 0..7.
using ReferenceTable = std::array<std::array<std::string_view, 8>, 10>;

inline constexpr ReferenceTable kReferenceTable{{
    {"Z", "0", "Z", "0", "Z", "0", "Z", "0"},        // A
    {"0", "Z", "0", "Z", "0", "Z", "0", "Z"},        // AIII
    {"Z", "0", "0", "0", "Z", "0", "Z2", "Z2"},      // AI
    {"Z2", "Z", "0", "0", "0", "Z", "0", "Z2"},      // BDI
    {"Z2", "Z2", "Z", "0", "0", "0", "Z", "0"},      // D
    {"0", "Z2", "Z2", "Z", "0", "0", "0", "Z"},      // DIII
    {"Z", "0", "Z2", "Z2", "Z", "0", "0", "0"},      // AII
    {"0", "Z", "0", "Z2", "Z2", "Z", "0", "0"},      // CII
    {"0", "0", "Z", "0", "Z2", "Z2", "Z", "0"},      // C
    {"0", "0", "0", "Z", "0", "Z2", "Z2", "Z"},      // CI
}};

inline std::size_t reference_row(Family f, int s) {
  return f == Family::Complex ? static_cast<std::size_t>(reduce(s, f))
                              : 2 + static_cast<std::size_t>(reduce(s, f));
}

struct TableEntry {
  Family family;
  int s;
  int d;
  InvariantGroup group;
};

/// All 80 cells: complex 2x8 then real 8x8, rows by s, columns by d.
inline std::vector<TableEntry> generate_entries() {
  std::vector<TableEntry> out;
  out.reserve(80);
  for (Family f : {Family::Complex, Family::Real})
    for (int s = 0; s < period(f); ++s)
      for (int d = 0; d < 8; ++d) out.push_back({f, s, d, group_at(f, s, d)});
  return out;
}

struct TableMismatch {
  Family family;
  int s;
  int d;
  InvariantGroup generated;
  std::string_view reference;
};

struct TableDiff {
  std::size_t compared = 0;
  std::vector<TableMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  std::size_t matched() const { return compared - mismatches.size(); }
};

/// Regenerate every cell from the Bott clock and diff against a reference.
inline TableDiff generate_table(const ReferenceTable& reference = kReferenceTable) {
  TableDiff diff;
  // Columns are keyed on the raw d = 0..7; TableIndex would reduce d mod 2 for
  // the complex family.
  for (Family f : {Family::Complex, Family::Real}) {
    for (int s = 0; s < period(f); ++s) {
      for (int d = 0; d < 8; ++d) {
        const InvariantGroup g = group_at(f, s, d);
        const std::string_view ref = reference[reference_row(f, s)][d];
        ++diff.compared;
        if (to_string(g) != ref) diff.mismatches.push_back({f, s, d, g, ref});
      }
    }
  }
  return diff;
}

struct IdentityCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};

/// (1,1) periodicity plus d- and s-periodicity over every index, for both families.
inline std::vector<IdentityCheck> check_periodicities() {
  IdentityCheck diag{"(1,1)-periodicity", 0, 0};
  IdentityCheck dper{"d-periodicity", 0, 0};
  IdentityCheck sper{"s-periodicity", 0, 0};
  for (Family f : {Family::Complex, Family::Real}) {
    const int p = period(f);
    for (int s = -p; s < 2 * p; ++s) {
      for (int d = -p; d < 2 * p; ++d) {
        const InvariantGroup g = group_at(f, s, d);
        ++diag.checked;
        if (group_at(f, s + 1, d + 1) != g) ++diag.failures;
        ++dper.checked;
        if (group_at(f, s, d + p) != g) ++dper.failures;
        ++sper.checked;
        if (group_at(f, s + p, d) != g) ++sper.failures;
      }
    }
  }
  return {diag, dper, sper};
}

}  // namespace tenfold
