#pragma once

// Shared fixtures for the unit and acceptance tests: the reference
// configurations, a small parser that turns "2h - e123 + f14" into class
// coordinates without going through the library formatter, and the
// closed-form coefficient maps of the nontrivial symmetries.

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "toricsym/blowup.hpp"
#include "toricsym/chow.hpp"
#include "toricsym/symmetry.hpp"

namespace toricsym::fixtures {

// Center orders used in the constructions of the four classes.
inline const char* const kClassA = "p123,l34,l24";
inline const char* const kClassB = "p123,p124,l23,l34,l14";
inline const char* const kClassC = "p124,p123,l34,l23,l14";
inline const char* const kClassD = "p123,p124,p134,p234,l12,l13,l14,l23,l24,l34";

inline const IntMat kTauA = IntMat::from_rows({{0, 1, 0}, {1, 0, 0}, {1, 1, -1}});
inline const IntMat kTauB = IntMat::from_rows({{0, 0, 1}, {1, -1, 1}, {1, 0, 0}});
inline const IntMat kTauC = IntMat::from_rows({{0, 0, -1}, {1, 0, -1}, {1, -1, 0}});
inline const IntMat kSigmaC = IntMat::from_rows({{1, -1, 0}, {0, -1, 0}, {0, 0, -1}});
inline const IntMat kTauD = IntMat::from_rows({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});

// Parses a signed linear combination of basis names. `lower` selects curve
// names (h, e123, f34) versus divisor names (H, E123, F34). Returns the plain
// coefficient of each basis element in basis order.
inline IntVec parse_combination(const BlowupSpace& space, const std::string& text, bool lower) {
  std::vector<std::string> names = space.ledger().basis_names;
  if (lower)
    for (auto& n : names) n[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(n[0])));
  IntVec out(names.size(), 0);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "0") return out;
  std::size_t i = 0;
  while (i < s.size()) {
    Int sign = 1;
    if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
    Int k = 0;
    bool has_k = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      k = k * 10 + (s[i++] - '0');
      has_k = true;
    }
    if (!has_k) k = 1;
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    const std::string name = s.substr(i, j - i);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::invalid_argument("unknown basis name " + name);
    out[static_cast<std::size_t>(it - names.begin())] += sign * k;
    i = j;
  }
  return out;
}

inline DivisorClass divisor(const BlowupSpace& space, const std::string& text) {
  return DivisorClass{parse_combination(space, text, false)};
}

// Curve classes use (d, a..., b...) with beta = d h - sum a e - sum b f.
inline CurveClass curve(const BlowupSpace& space, const std::string& text) {
  IntVec v = parse_combination(space, text, true);
  for (std::size_t i = 1; i < v.size(); ++i) v[i] = -v[i];
  return CurveClass{v};
}

inline CurveClass basis_curve(std::size_t n, std::size_t slot) {
  IntVec v(n, 0);
  v[slot] = slot == 0 ? 1 : -1;
  return CurveClass{v};
}

inline std::size_t slot_of(const BlowupSpace& space, const std::string& name) {
  const auto& names = space.ledger().basis_names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument("unknown basis name " + name);
  return static_cast<std::size_t>(it - names.begin());
}

inline const ToricSymmetry& find_matrix(const std::vector<ToricSymmetry>& group, const IntMat& m) {
  for (const auto& s : group)
    if (s.matrix == m) return s;
  throw std::invalid_argument("matrix not in symmetry group: " + to_string(m));
}

// A coefficient formula maps its own coordinate vector (d, a1, ...) to
// the image coordinates. `order` lists, for each formula slot after d, the
// basis name it refers to in the library basis.
struct ClosedForm {
  std::string name;
  std::string centers;
  IntMat matrix;
  std::vector<std::string> order;
  std::function<IntVec(const IntVec&)> apply;
};

inline IntVec to_closed_form(const BlowupSpace& space, const ClosedForm& f, const IntVec& coords) {
  IntVec out{coords[0]};
  for (const auto& n : f.order) out.push_back(coords[slot_of(space, n)]);
  return out;
}

inline IntVec from_closed_form(const BlowupSpace& space, const ClosedForm& f, const IntVec& t) {
  IntVec out(space.basis_size(), 0);
  out[0] = t[0];
  for (std::size_t i = 0; i < f.order.size(); ++i) out[slot_of(space, f.order[i])] = t[i + 1];
  return out;
}

inline std::vector<ClosedForm> closed_forms() {
  std::vector<ClosedForm> out;
  out.push_back({"A", kClassA, kTauA, {"E123", "F24", "F34"}, [](const IntVec& t) {
                   const Int d = t[0], a1 = t[1], a2 = t[2], a3 = t[3];
                   return IntVec{2 * d - a1 - a2 - a3, d - a2 - a3, d - a1 - a3, d - a1 - a2};
                 }});
  out.push_back({"B", kClassB, kTauB, {"E123", "E124", "F23", "F34", "F14"}, [](const IntVec& t) {
                   const Int d = t[0], a1 = t[1], a2 = t[2], a3 = t[3], a4 = t[4], a5 = t[5];
                   return IntVec{2 * d - a1 - a2 - a3 - a4, a5, d - a1 - a3 - a4, d - a2 - a4 - a5,
                                 d - a1 - a2 - a3, a1};
                 }});
  out.push_back({"C-tau", kClassC, kTauC, {"E124", "E123", "F34", "F23", "F14"}, [](const IntVec& t) {
                   const Int d = t[0], a1 = t[1], a2 = t[2], a3 = t[3], a4 = t[4], a5 = t[5];
                   return IntVec{2 * d - a1 - a2 - a3 - a4, a5, d - a2 - a3 - a4, d - a1 - a2 - a4, a2,
                                 d - a1 - a3 - a5};
                 }});
  out.push_back({"C-sigma", kClassC, kSigmaC, {"E124", "E123", "F34", "F23", "F14"}, [](const IntVec& t) {
                   const Int d = t[0], a1 = t[1], a2 = t[2], a3 = t[3], a4 = t[4], a5 = t[5];
                   return IntVec{2 * d - a1 - a2 - a3 - a5, a4, d - a1 - a3 - a5, d - a1 - a2 - a5, a1,
                                 d - a2 - a3 - a4};
                 }});
  // e_i is the point off the i-th coordinate hyperplane (e_1 = e234) and
  // f_ij is the line on the cone <v_i, v_j>.
  out.push_back({"D", kClassD, kTauD,
                 {"E234", "E134", "E124", "E123", "F12", "F13", "F14", "F23", "F24", "F34"},
                 [](const IntVec& t) {
                   // t = (d, a1..a4, b12, b13, b14, b23, b24, b34)
                   const Int d = t[0];
                   auto a = [&](int i) { return t[static_cast<std::size_t>(i)]; };
                   auto b = [&](int i, int j) {
                     if (i > j) std::swap(i, j);
                     static const std::map<std::pair<int, int>, std::size_t> slot{
                         {{1, 2}, 5}, {{1, 3}, 6}, {{1, 4}, 7}, {{2, 3}, 8}, {{2, 4}, 9}, {{3, 4}, 10}};
                     return t[slot.at({i, j})];
                   };
                   IntVec out{3 * d - 2 * (a(1) + a(2) + a(3) + a(4))};
                   for (int i = 1; i <= 4; ++i) {
                     Int v = d;
                     for (int j = 1; j <= 4; ++j)
                       if (j != i) v -= a(j) + b(i, j);
                     out.push_back(v);
                   }
                   const int pairs[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
                   for (const auto& p : pairs) {
                     int k = 0, l = 0;
                     for (int m = 1; m <= 4; ++m)
                       if (m != p[0] && m != p[1]) (k == 0 ? k : l) = m;
                     out.push_back(b(k, l));
                   }
                   return out;
                 }});
  return out;
}

}  // namespace toricsym::fixtures
