// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "milnor/multinet/multinet.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace milnor {

namespace {

std::string set_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

bool contains(const IndexSet& s, std::size_t x) {
  return std::find(s.begin(), s.end(), x) != s.end();
}

}  // namespace

MultinetReport verify_multinet(const Arrangement& a, const Multinet& mn) {
  const std::size_t n = a.size();
  MultinetReport rep;
  if (mn.m.size() != n) throw std::invalid_argument("multinet: multiplicity count mismatch");
  std::vector<long> cls(n, -1);
  for (std::size_t i = 0; i < mn.parts.size(); ++i)
    for (std::size_t h : mn.parts[i]) {
      if (h >= n) throw std::invalid_argument("multinet: index out of range");
      if (cls[h] != -1) throw std::invalid_argument("multinet: classes overlap");
      cls[h] = static_cast<long>(i);
    }
  for (std::size_t h = 0; h < n; ++h)
    if (cls[h] == -1) throw std::invalid_argument("multinet: classes do not cover hyperplane " +
                                                  std::to_string(h));
  for (long x : mn.m)
    if (x < 1) throw std::invalid_argument("multinet: multiplicities must be positive");

  rep.k = mn.parts.size();
  if (rep.k < 3) rep.violations.push_back("fewer than 3 classes");

  std::vector<Flat2> flats = rank2_flats(a);
  // Flat index for each pair of hyperplanes.
  std::vector<std::vector<std::size_t>> flat_of(n, std::vector<std::size_t>(n, 0));
  for (std::size_t f = 0; f < flats.size(); ++f)
    for (std::size_t x : flats[f].hyperplanes)
      for (std::size_t y : flats[f].hyperplanes) flat_of[x][y] = f;

  std::vector<bool> in_base(flats.size(), false);
  if (mn.base_locus.empty()) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (cls[x] != cls[y]) in_base[flat_of[x][y]] = true;
  } else {
    for (IndexSet s : mn.base_locus) {
      std::sort(s.begin(), s.end());
      auto it = std::find_if(flats.begin(), flats.end(),
                             [&](const Flat2& f) { return f.hyperplanes == s; });
      if (it == flats.end())
        throw std::invalid_argument("multinet: base locus entry " + set_string(s) +
                                    " is not a rank-2 flat");
      in_base[it - flats.begin()] = true;
    }
  }
  for (std::size_t f = 0; f < flats.size(); ++f)
    if (in_base[f]) rep.base_locus.push_back(flats[f].hyperplanes);

  // (1) equal class weights.
  std::vector<long> weight(rep.k, 0);
  for (std::size_t h = 0; h < n; ++h) weight[cls[h]] += mn.m[h];
  rep.d = weight.empty() ? 0 : weight[0];
  for (std::size_t i = 1; i < rep.k; ++i)
    if (weight[i] != rep.d) {
      rep.violations.push_back("(1) class weights differ: class 0 has " + std::to_string(rep.d) +
                               ", class " + std::to_string(i) + " has " +
                               std::to_string(weight[i]));
    }
  // (2) cross-class intersections lie in the base locus.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (cls[x] != cls[y] && !in_base[flat_of[x][y]])
        rep.violations.push_back("(2) flat " + set_string(flats[flat_of[x][y]].hyperplanes) +
                                 " meets two classes but is not in the base locus");
  // (3) n_X independent of the class.
  for (std::size_t f = 0; f < flats.size(); ++f) {
    if (!in_base[f]) continue;
    std::vector<long> per(rep.k, 0);
    for (std::size_t h : flats[f].hyperplanes) per[cls[h]] += mn.m[h];
    rep.n_x.emplace_back(flats[f].hyperplanes, per.empty() ? 0 : per[0]);
    for (std::size_t i = 1; i < rep.k; ++i)
      if (per[i] != per[0]) {
        rep.violations.push_back("(3) n_X not constant on flat " +
                                 set_string(flats[f].hyperplanes));
        break;
      }
  }
  // (4) each class is connected through flats outside the base locus.
  for (std::size_t i = 0; i < rep.k; ++i) {
    const IndexSet& part = mn.parts[i];
    if (part.empty()) {
      rep.violations.push_back("(4) class " + std::to_string(i) + " is empty");
      continue;
    }
    std::set<std::size_t> reached{part[0]};
    std::vector<std::size_t> stack{part[0]};
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : part)
        if (!reached.count(y) && !in_base[flat_of[x][y]]) {
          reached.insert(y);
          stack.push_back(y);
        }
    }
    if (reached.size() != part.size())
      rep.violations.push_back("(4) class " + std::to_string(i) + " is disconnected");
  }
  long g = 0;
  for (long x : mn.m) g = std::gcd(g, x);
  if (g != 1) rep.warnings.push_back("gcd of multiplicities is " + std::to_string(g));
  // Structural constraints on k.
  bool heavy = std::any_of(mn.m.begin(), mn.m.end(), [](long x) { return x > 1; });
  std::size_t base_count = rep.base_locus.size();
  if (base_count > 1 && rep.k != 3 && rep.k != 4)
    rep.violations.push_back("k must be 3 or 4 when the base locus has more than one flat");
  if (heavy && rep.k != 3)
    rep.violations.push_back("k must be 3 when some multiplicity exceeds 1");
  rep.valid = rep.violations.empty();
  return rep;
}

PointedReport verify_pointed(const Arrangement& a, const Multinet& mn, std::size_t h) {
  if (h >= a.size()) throw std::out_of_range("verify_pointed: hyperplane out of range");
  PointedReport out;
  MultinetReport rep = verify_multinet(a, mn);
  if (!rep.valid) {
    out.violations = rep.violations;
    out.violations.insert(out.violations.begin(), "underlying multinet invalid");
    return out;
  }
  long mh = mn.m[h];
  if (mh <= 1) out.violations.push_back("m_H = " + std::to_string(mh) + " is not > 1");
  for (const auto& [flat, nx] : rep.n_x)
    if (contains(flat, h) && nx % mh != 0) {
      out.violating_flats.push_back(flat);
      out.violations.push_back("m_H does not divide n_X = " + std::to_string(nx) + " on " +
                               set_string(flat));
    }
  if (out.violations.empty()) {
    PointedMultinet pm;
    pm.multinet = mn;
    pm.multinet.base_locus = rep.base_locus;
    pm.multinet.pointed = h;
    pm.hyperplane = h;
    pm.d = rep.d;
    out.pointed = pm;
  }
  return out;
}

std::pair<Arrangement, PointedMultinet> monomial_multinet(long p) {
  if (p < 2) throw std::invalid_argument("monomial_multinet: p must be at least 2");
  const long order = p <= 2 ? 1 : p;
  CyclotomicField f(order);
  auto root = [&](long a) {
    return p == 2 ? f.from_int(a % 2 == 0 ? 1 : -1) : f.root_power(a);
  };
  auto label = [&](const std::string& u, const std::string& v, long a) {
    if (a == 0) return u + "-" + v;
    if (p == 2) return u + "+" + v;
    return u + "-w" + (a == 1 ? "" : "^" + std::to_string(a)) + v;
  };
  std::vector<Arrangement::Normal> rows;
  std::vector<std::string> labels{"x", "y", "z"};
  for (int c = 0; c < 3; ++c) {
    Arrangement::Normal v(3, f.zero());
    v[c] = f.one();
    rows.push_back(v);
  }
  const std::pair<int, int> blocks[3] = {{0, 1}, {0, 2}, {1, 2}};
  const char* names = "xyz";
  for (const auto& [u, v] : blocks)
    for (long a = 0; a < p; ++a) {
      Arrangement::Normal row(3, f.zero());
      row[u] = f.one();
      row[v] = f.neg(root(a));
      rows.push_back(row);
      labels.push_back(label(std::string(1, names[u]), std::string(1, names[v]), a));
    }
  Arrangement arr = Arrangement::cyclotomic(order, 3, rows, labels);
  auto block = [&](int b) {
    IndexSet s;
    for (long a = 0; a < p; ++a) s.push_back(3 + b * p + a);
    return s;
  };
  Multinet mn;
  IndexSet q1{0}, q2{1}, q3{2};
  for (auto i : block(2)) q1.push_back(i);  // x^p (y^p - z^p)
  for (auto i : block(1)) q2.push_back(i);  // y^p (x^p - z^p)
  for (auto i : block(0)) q3.push_back(i);  // z^p (x^p - y^p)
  mn.parts = {q1, q2, q3};
  mn.m.assign(arr.size(), 1);
  mn.m[0] = mn.m[1] = mn.m[2] = p;
  PointedReport pr = verify_pointed(arr, mn, 0);
  if (!pr.pointed) throw std::logic_error("monomial_multinet: construction failed verification");
  return {arr, *pr.pointed};
}

std::vector<long> SmallPencilCert::normalized_direction() const {
  std::vector<long> e = direction;
  for (long x : e)
    if (x != 0) {
      if (x < 0)
        for (long& y : e) y = -y;
      break;
    }
  return e;
}

SmallPencilCert deletion_pencil_certificate(const Arrangement& a, const PointedMultinet& pm) {
  const Multinet& mn = pm.multinet;
  PointedReport check = verify_pointed(a, mn, pm.hyperplane);
  if (!check.pointed)
    throw std::invalid_argument("deletion_pencil_certificate: pointed multinet invalid");
  if (mn.parts.size() != 3)
    throw std::invalid_argument("deletion_pencil_certificate: needs exactly 3 classes");
  SmallPencilCert c{delete_hyperplane(a, pm.hyperplane), 0, 0, {}, {}, {}, 0, {}};
  c.removed = pm.hyperplane;
  c.multiplier = mn.m[pm.hyperplane];
  c.primes = prime_factors(c.multiplier);
  for (std::size_t i = 0; i < 3; ++i)
    if (contains(mn.parts[i], pm.hyperplane)) c.pointed_class = i;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != c.pointed_class) others.push_back(i);
  c.fiber_classes = {others[0], others[1]};
  auto new_index = [&](std::size_t h) { return h < pm.hyperplane ? h : h - 1; };
  c.direction.assign(c.deleted.size(), 0);
  c.class_polys.resize(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t h : mn.parts[i]) {
      if (h == pm.hyperplane) continue;
      c.class_polys[i].emplace_back(new_index(h), mn.m[h]);
      if (i == others[0]) c.direction[new_index(h)] += mn.m[h];
      if (i == others[1]) c.direction[new_index(h)] -= mn.m[h];
    }
  for (auto& cp : c.class_polys) std::sort(cp.begin(), cp.end());
  return c;
}

Multinet multinet_from_json(const nlohmann::json& j, const Arrangement& a) {
  if (!j.is_object() || !j.contains("parts") || !j.contains("m"))
    throw std::invalid_argument("multinet file needs 'parts' and 'm'");
  Multinet mn;
  mn.parts = j.at("parts").get<std::vector<IndexSet>>();
  mn.m = j.at("m").get<std::vector<long>>();
  if (j.contains("base_locus")) mn.base_locus = j.at("base_locus").get<std::vector<IndexSet>>();
  if (j.contains("pointed") && !j.at("pointed").is_null()) {
    const auto& p = j.at("pointed");
    if (p.is_string()) {
      auto idx = a.find_label(p.get<std::string>());
      if (!idx) throw std::invalid_argument("multinet: unknown hyperplane label " + p.dump());
      mn.pointed = *idx;
    } else {
      mn.pointed = p.get<std::size_t>();
    }
  }
  return mn;
}

nlohmann::json to_json(const Multinet& m) {
  nlohmann::json j{{"parts", m.parts}, {"m", m.m}, {"base_locus", m.base_locus}};
  if (m.pointed) j["pointed"] = *m.pointed;
  return j;
}

nlohmann::json to_json(const MultinetReport& r) {
  nlohmann::json nx = nlohmann::json::array();
  for (const auto& [flat, v] : r.n_x) nx.push_back({{"flat", flat}, {"n_X", v}});
  return {{"valid", r.valid},  {"k", r.k},
          {"d", r.d},          {"n_X", nx},
          {"base_locus", r.base_locus}, {"violations", r.violations},
          {"warnings", r.warnings}};
}

nlohmann::json to_json(const SmallPencilCert& c) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cp : c.class_polys) {
    nlohmann::json q = nlohmann::json::array();
    for (const auto& [h, m] : cp) q.push_back({{"hyperplane", h}, {"multiplicity", m}});
    classes.push_back(q);
  }
  return {{"deleted", to_json(c.deleted)},
          {"removed", c.removed},
          {"multiplier", c.multiplier},
          {"primes", c.primes},
          {"translate_order", c.multiplier},
          {"direction", c.direction},
          {"direction_generator", c.normalized_direction()},
          {"class_polynomials", classes},
          {"fiber_classes", {c.fiber_classes.first, c.fiber_classes.second}}};
}

}  // namespace milnor
