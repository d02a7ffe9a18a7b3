#include "altperm/tables.hpp"

#include <algorithm>

namespace altperm {

namespace {

constexpr std::optional<std::uint64_t> kBlank = std::nullopt;

}  // namespace

const ReferenceTable& table_6even() {
  static const ReferenceTable t{
      "6even", PermClass::alternating(), {2, 4, 6, 8, 10, 12}, {
      {{{"634521", "652341"}, {"534621", "651342"}},
       {1, 5, 61, 1385, 47860, 2202236}},
      {{{"564321", "654312"}, {"645321"}, {"653421"}, {"456321", "654123"}, {"345621", "651234"}, {"234561", "612345"}, {"165432", "543216"}, {"216543", "432165"}, {"126543", "432156"}, {"321654"}, {"213654", "321465"}, {"123456"}, {"123654", "321456"}, {"213465", "213465"}, {"123465", "213456"}},
       {1, 5, 61, 1385, 47860, 2201540}},
      {{{"312654", "321564"}, {"213564", "312465"}, {"123564", "312456"}},
       {1, 5, 61, 1385, 47860, 2198859}},
      {{{"215643", "431265"}, {"125643", "431256"}},
       {1, 5, 61, 1385, 47860, 2197690}},
      {{{"214563", "412365"}, {"124563", "412356"}},
       {1, 5, 61, 1385, 47860, 2197299}},
      {{{"214653", "421365"}, {"124653", "421356"}},
       {1, 5, 61, 1385, 47860, 2195798}},
      {{{"143265", "215436"}, {"125436", "143256"}},
       {1, 5, 61, 1344, 44386, 1954114}},
      {{{"132654", "321546"}, {"124365", "214356"}, {"132465", "213546"}, {"123546", "132456"}, {"124356", "124356"}, {"214365"}},
       {1, 5, 61, 1344, 44377, 1951843}},
      {{{"564231", "645312"}, {"456231", "645123"}},
       {1, 5, 61, 1344, 44377, 1951757}},
      {{{"564312", "564312"}, {"456312", "564123"}, {"345612", "561234"}, {"456123"}},
       {1, 5, 61, 1344, 44377, 1951429}},
      {{{"465312", "564213"}, {"456213", "465123"}},
       {1, 5, 61, 1344, 44342, 1943735}},
      {{{"215634", "341265"}, {"125634", "341256"}},
       {1, 5, 61, 1344, 44333, 1940841}},
      {{{"216534", "342165"}, {"126534", "342156"}},
       {1, 5, 61, 1344, 44333, 1940623}},
      {{{"546312", "564132"}, {"456132", "546123"}},
       {1, 5, 61, 1344, 44324, 1940209}},
      {{{"231654", "321645"}, {"213645", "231465"}, {"123645", "231456"}},
       {1, 5, 61, 1344, 44306, 1937196}},
      {{{"216453", "423165"}, {"126453", "423156"}},
       {1, 5, 61, 1344, 44306, 1936673}},
      {{{"216345", "234165"}, {"126345", "234156"}},
       {1, 5, 61, 1344, 44306, 1935009}},
      {{{"142365", "214536"}, {"124536", "142356"}},
       {1, 5, 61, 1344, 44289, 1935152}},
      {{{"134265", "215346"}, {"125346", "134256"}},
       {1, 5, 61, 1344, 44289, 1934933}},
      {{{"214635", "241365"}, {"124635", "241356"}},
       {1, 5, 61, 1344, 44280, 1932468}},
      {{{"216435", "243165"}, {"126435", "243156"}},
       {1, 5, 61, 1344, 44280, 1931424}},
      {{{"215364", "314265"}, {"125364", "314256"}},
       {1, 5, 61, 1344, 44271, 1930657}},
      {{{"215463", "413265"}, {"125463", "413256"}},
       {1, 5, 61, 1344, 44271, 1929874}},
      {{{"216354", "324165"}, {"126354", "324156"}},
       {1, 5, 61, 1344, 44253, 1926893}},
      }};
  return t;
}

const ReferenceTable& table_6odd() {
  static const ReferenceTable t{
      "6odd", PermClass::alternating(), {1, 3, 5, 7, 9, 11, 13}, {
      {{{"654321", "123456"}, {"654312", "213456"}, {"654123", "321456"}, {"651234", "432156"}, {"612345", "543216"}},
       {1, 2, 16, 272, 7936, 329098, 17316208}},
      {{{"634521", "125436"}, {"634512", "215436"}},
       {1, 2, 16, 272, 7622, 300499, 15125692}},
      {{{"653421", "124356"}, {"653412", "214356"}},
       {1, 2, 16, 272, 7622, 300430, 15106854}},
      {{{"645321", "123546"}, {"645312", "213546"}, {"645123", "321546"}},
       {1, 2, 16, 272, 7622, 300430, 15106113}},
      {{{"564321", "123465"}, {"456321", "123654"}, {"345621", "126543"}, {"234561", "165432"}, {"564312", "213465"}, {"456312", "213654"}, {"345612", "216543"}, {"564123", "321465"}, {"456123", "321654"}, {"561234", "432165"}},
       {1, 2, 16, 272, 7622, 300430, 15102362}},
      {{{"564213", "312465"}, {"456213", "312654"}},
       {1, 2, 16, 272, 7622, 300172, 15038858}},
      {{{"435621", "126534"}, {"435612", "216534"}},
       {1, 2, 16, 272, 7622, 300103, 15012608}},
      {{{"465321", "123564"}, {"465312", "213564"}, {"465123", "321564"}},
       {1, 2, 16, 272, 7622, 300094, 15023874}},
      {{{"346521", "125643"}, {"346512", "215643"}},
       {1, 2, 16, 272, 7622, 300025, 15004212}},
      {{{"436521", "125634"}, {"436512", "215634"}},
       {1, 2, 16, 272, 7622, 300025, 14998611}},
      {{{"546321", "123645"}, {"546312", "213645"}, {"546123", "321645"}},
       {1, 2, 16, 272, 7622, 299916, 14987084}},
      {{{"365421", "124563"}, {"365412", "214563"}},
       {1, 2, 16, 272, 7622, 299897, kBlank}},
      {{{"543621", "126345"}, {"543612", "216345"}},
       {1, 2, 16, 272, 7622, 299768, kBlank}},
      {{{"635421", "124536"}, {"635412", "214536"}},
       {1, 2, 16, 272, 7622, 299708, kBlank}},
      {{{"356421", "124653"}, {"356412", "214653"}},
       {1, 2, 16, 272, 7622, 299698, kBlank}},
      {{{"643521", "125346"}, {"643512", "215346"}},
       {1, 2, 16, 272, 7622, 299668, kBlank}},
      {{{"534621", "126435"}, {"534612", "216435"}},
       {1, 2, 16, 272, 7622, 299658, kBlank}},
      {{{"536421", "124635"}, {"536412", "214635"}},
       {1, 2, 16, 272, 7622, 299639, kBlank}},
      {{{"563421", "124365"}, {"563412", "214365"}},
       {1, 2, 16, 266, 7164, 270463, 13077672}},
      {{{"564231", "132465"}, {"456231", "132654"}},
       {1, 2, 16, 266, 7164, 270463, 13077275}},
      {{{"564132", "231465"}, {"456132", "231654"}},
       {1, 2, 16, 266, 7156, 268940, 12868164}},
      {{{"354621", "126453"}, {"354612", "216453"}},
       {1, 2, 16, 266, 7156, 268876, kBlank}},
      {{{"463521", "125364"}, {"463512", "215364"}},
       {1, 2, 16, 266, 7148, 267642, kBlank}},
      {{{"453621", "126354"}, {"453612", "216354"}},
       {1, 2, 16, 266, 7148, 267590, kBlank}},
      {{{"364521", "125463"}, {"364512", "215463"}},
       {1, 2, 16, 266, 7148, 267539, kBlank}},
      }};
  return t;
}

const ReferenceTable& table_4rep() {
  static const ReferenceTable t{
      "4rep", PermClass::descent_type(3), {1, 2, 3, 4, 5, 6, 7, 8, 9}, {
      {{{"1342"}},
       {1, 1, 1, 2, 5, 9, 20, 64, 143}},
      {{{"1243"}},
       {1, 1, 1, 2, 5, 9, 21, 68, 153}},
      {{{"1423"}},
       {1, 1, 1, 3, 6, 9, 42, 93, 143}},
      {{{"3124"}},
       {1, 1, 1, 3, 9, 9, 44, 143, 143}},
      {{{"2134"}, {"4123"}},
       {1, 1, 1, 3, 9, 9, 44, 153, 153}},
      }};
  return t;
}

std::vector<const ReferenceTable*> reference_tables() {
  return {&table_6even(), &table_6odd(), &table_4rep()};
}

const ReferenceTable* find_table(std::string_view name) {
  for (const auto* t : reference_tables()) {
    if (t->name == name) return t;
  }
  return nullptr;
}

std::vector<Permutation> ReferenceTable::Row::patterns() const {
  std::vector<Permutation> out;
  for (const auto& g : groups) {
    for (const auto& s : g) {
      const auto p = Permutation::parse(s);
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  }
  return out;
}

}  // namespace altperm
