#include "catsieve/catalog.hpp"

#include <algorithm>
#include <set>

namespace catsieve {

CategoryPtr category_from_tables(const std::vector<std::string>& objects, const std::vector<Arrow>& arrows,
                                 const std::vector<Composite>& composites) {
  RawCategory raw;
  raw.objects = objects;
  for (const auto& o : objects) {
    raw.morphisms.push_back({"id_" + o, o, o});
    raw.identities[o] = "id_" + o;
  }
  for (const auto& a : arrows) raw.morphisms.push_back({a.name, a.src, a.dst});
  for (const auto& c : composites) raw.compose[{c.g, c.f}] = c.gf;
  return std::make_shared<const FinCategory>(FinCategory::validate(raw));
}

CategoryPtr poset(const std::vector<std::string>& elements,
                  const std::vector<std::pair<std::string, std::string>>& covers) {
  std::set<std::pair<std::string, std::string>> less(covers.begin(), covers.end());
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [a, b] : std::vector(less.begin(), less.end()))
      for (const auto& [c, d] : std::vector(less.begin(), less.end()))
        if (b == c && less.insert({a, d}).second) grew = true;
  }
  for (const auto& [a, b] : less)
    if (a == b || less.count({b, a})) throw Error(ErrorKind::Malformed, "order relation has a cycle through " + a);

  auto name = [](const std::string& a, const std::string& b) { return a + "<" + b; };
  auto arrow_name = [&](const std::string& a, const std::string& b) { return a == b ? "id_" + a : name(a, b); };
  std::vector<Arrow> arrows;
  std::vector<Composite> composites;
  for (const auto& [a, b] : less) arrows.push_back({name(a, b), a, b});
  for (const auto& [a, b] : less)
    for (const auto& [c, d] : less)
      if (b == c) composites.push_back({arrow_name(c, d), arrow_name(a, b), arrow_name(a, d)});
  return category_from_tables(elements, arrows, composites);
}

CategoryPtr walking_arrow() { return category_from_tables({"0", "1"}, {{"f", "0", "1"}}, {}); }

CategoryPtr commutative_square() { return poset({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}); }

CategoryPtr parallel_pair() { return category_from_tables({"0", "1"}, {{"f", "0", "1"}, {"g", "0", "1"}}, {}); }

CategoryPtr coequalizer_category() {
  return category_from_tables({"A", "B", "Q"},
                              {{"f", "A", "B"}, {"g", "A", "B"}, {"q", "B", "Q"}, {"h", "A", "Q"}},
                              {{"q", "f", "h"}, {"q", "g", "h"}});
}

CategoryPtr idempotent_monoid() { return category_from_tables({"*"}, {{"e", "*", "*"}}, {{"e", "e", "e"}}); }

CategoryPtr split_idempotent() {
  return category_from_tables({"A", "B"}, {{"p", "A", "B"}, {"s", "B", "A"}, {"e", "A", "A"}},
                              {{"p", "s", "id_B"},
                               {"s", "p", "e"},
                               {"e", "e", "e"},
                               {"p", "e", "p"},
                               {"e", "s", "s"}});
}

CategoryPtr cospan() { return poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}); }

std::vector<std::pair<std::string, CategoryPtr>> standard_catalog() {
  return {{"walking_arrow", walking_arrow()},
          {"commutative_square", commutative_square()},
          {"parallel_pair", parallel_pair()},
          {"coequalizer", coequalizer_category()},
          {"idempotent", idempotent_monoid()},
          {"split_idempotent", split_idempotent()},
          {"cospan", cospan()},
          {"discrete_2", discrete_category(2)}};
}

CategoryPtr named_category(const std::string& name) {
  for (auto& [n, c] : standard_catalog())
    if (n == name) return c;
  throw Error(ErrorKind::UnknownObject, "no catalog category named " + name);
}

}  // namespace catsieve
