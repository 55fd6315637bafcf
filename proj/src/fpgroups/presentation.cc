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

#include "milnor/fpgroups/presentation.h"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace milnor {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (x == 0) throw std::invalid_argument("word: letter 0 is not a generator");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void Presentation::normalize() {
  std::vector<Word> out;
  for (const Word& w : relators) {
    for (int x : w)
      if (x == 0 || static_cast<std::size_t>(std::abs(x)) > generators)
        throw std::invalid_argument("presentation: letter " + std::to_string(x) +
                                    " out of range");
    Word r = cyclic_reduce(w);
    if (!r.empty()) out.push_back(std::move(r));
  }
  relators = std::move(out);
}

Character Character::canonical() const {
  if (order < 1) throw std::invalid_argument("character: order must be positive");
  Character c{order, exponents};
  for (long& e : c.exponents) e = mod_floor(e, order);
  return c;
}

bool Character::is_trivial() const {
  for (long e : exponents)
    if (mod_floor(e, order) != 0) return false;
  return true;
}

bool Character::is_surjective() const {
  long g = order;
  for (long e : exponents) g = gcd_long(g, e);
  return g == 1;
}

bool Character::is_projective() const {
  long s = 0;
  for (long e : exponents) s = mod_floor(s + e, order);
  return s == 0;
}

long Character::image_order() const {
  long g = order;
  for (long e : exponents) g = gcd_long(g, e);
  return order / g;
}

Character Character::reduced() const {
  long d = image_order();
  long s = order / d;
  Character c{d, {}};
  for (long e : exponents) c.exponents.push_back(mod_floor(e, order) / s);
  return c;
}

Character Character::power(long k) const {
  Character c{order, exponents};
  for (long& e : c.exponents) e = mod_floor(e * mod_floor(k, order), order);
  return c.reduced();
}

long Character::value(const Word& w) const {
  long v = 0;
  for (int x : w) {
    std::size_t i = static_cast<std::size_t>(std::abs(x)) - 1;
    if (i >= exponents.size()) throw std::invalid_argument("character: generator out of range");
    v += x > 0 ? exponents[i] : -exponents[i];
  }
  return mod_floor(v, order);
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int x : p.relators[r]) m.at(r, static_cast<std::size_t>(std::abs(x)) - 1) += x > 0 ? 1 : -1;
  return m;
}

AbelianGroup abelianization(const Presentation& p) { return cokernel(relation_matrix(p)); }

Presentation presentation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators"))
    throw std::invalid_argument("presentation file needs 'generators'");
  Presentation p;
  long g = j.at("generators").get<long>();
  if (g < 0) throw std::invalid_argument("presentation: negative generator count");
  p.generators = static_cast<std::size_t>(g);
  if (j.contains("relators"))
    for (const auto& r : j.at("relators")) p.relators.push_back(r.get<Word>());
  p.normalize();
  return p;
}

nlohmann::json to_json(const Presentation& p) {
  return {{"generators", p.generators}, {"relators", p.relators}};
}

Character character_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("exponents"))
    throw std::invalid_argument("character file needs 'order' and 'exponents'");
  Character c{j.at("order").get<long>(), j.at("exponents").get<std::vector<long>>()};
  if (c.order < 1) throw std::invalid_argument("character: order must be positive");
  return c.canonical();
}

nlohmann::json to_json(const Character& c) {
  return {{"order", c.order}, {"exponents", c.exponents}};
}

}  // namespace milnor
