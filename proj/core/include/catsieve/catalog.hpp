#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catsieve/fincat.hpp"

namespace catsieve {

struct Arrow {
  std::string name;
  std::string src;
  std::string dst;
};

struct Composite {
  std::string g;
  std::string f;
  std::string gf;
};

// Identities are named "id_<object>" and composites with them are implied.
CategoryPtr category_from_tables(const std::vector<std::string>& objects, const std::vector<Arrow>& arrows,
                                 const std::vector<Composite>& composites);

// The poset generated by `covers` (pairs a < b); the arrow a -> b is "a<b".
CategoryPtr poset(const std::vector<std::string>& elements,
                  const std::vector<std::pair<std::string, std::string>>& covers);

CategoryPtr walking_arrow();           // 0 -f-> 1
CategoryPtr commutative_square();      // a < b, c < d
CategoryPtr parallel_pair();           // f, g : 0 -> 1
CategoryPtr coequalizer_category();    // f, g : A -> B, q : B -> Q, q∘f = q∘g = h
CategoryPtr idempotent_monoid();       // one object, e∘e = e
CategoryPtr split_idempotent();        // p∘s = id_B, s∘p = e
CategoryPtr cospan();                  // a < c > b

std::vector<std::pair<std::string, CategoryPtr>> standard_catalog();
// Throws UnknownObject for names outside the catalog.
CategoryPtr named_category(const std::string& name);

}  // namespace catsieve
