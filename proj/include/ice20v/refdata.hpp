#pragma once

// Reference values the verification suites and acceptance checks compare
// against: reference counting sequences for the four boundary prescriptions,
// the refined polynomial tables, the pentagon/rectangle count tables, the
// symmetry-class sequences, and the reference phase-matrix examples.  Values
// are stored as decimal strings so nothing overflows on the way in.

#include <array>
#include <string>
#include <vector>

#include "ice20v/apm.hpp"
#include "ice20v/poly.hpp"
#include "ice20v/rings.hpp"

namespace ice20v::refdata {

// 20V counts with domain-wall boundaries 1/2 (equal by the rotation
// bijection), n = 1..8.
inline const std::vector<std::string>& seq_a() {
  static const std::vector<std::string> v = {"1",       "3",         "23",
                                             "433",     "19705",     "2151843",
                                             "561696335", "349667866305"};
  return v;
}

// DWBC3 counts = triangle tiling numbers, n = 1..6.
inline const std::vector<std::string>& seq_b() {
  static const std::vector<std::string> v = {"1", "3", "29", "901", "89893", "28793575"};
  return v;
}

// DWBC4 square counts, n = 1..6.
inline const std::vector<std::string>& seq_dwbc4() {
  static const std::vector<std::string> v = {"1", "3", "59", "7813", "6953685", "41634316343"};
  return v;
}

// Square-ice DWBC counts with unit weights (alternating sign matrices),
// n = 1..5; classical sanity anchor.
inline const std::vector<std::string>& seq_asm() {
  static const std::vector<std::string> v = {"1", "2", "7", "42", "429"};
  return v;
}

// Pentagon counts p[k][n-1] for k = 0..5, n = 1..6.
inline const std::vector<std::vector<std::string>>& pentagon_table() {
  static const std::vector<std::vector<std::string>> v = {
      {"1", "3", "29", "901", "89893", "28793575"},
      {"1", "4", "56", "2640", "411840", "210613312"},
      {"1", "4", "60", "3268", "628420", "417062340"},
      {"1", "4", "60", "3328", "675584", "495222784"},
      {"1", "4", "60", "3328", "678912", "507356160"},
      {"1", "4", "60", "3328", "678912", "508035072"},
  };
  return v;
}

struct NabcRow {
  int b, c;
  std::array<const char*, 7> values;  // a = 0..6
};

// Rectangular DWBC4 counts N_{a,b,c}.
inline const std::vector<NabcRow>& nabc_table() {
  static const std::vector<NabcRow> v = {
      {0, 1, {"1", "3", "8", "21", "55", "144", "377"}},
      {0, 2, {"1", "8", "59", "415", "2874", "19810", "136358"}},
      {1, 1, {"3", "11", "41", "153", "571", "2131", "7953"}},
      {0, 3, {"1", "21", "415", "7813", "143336", "2598735", "46881130"}},
      {1, 2, {"8", "85", "959", "10934", "124869", "1426389", "16294360"}},
      {2, 1, {"5", "23", "103", "456", "2009", "8833", "38803"}},
      {0, 4, {"1", "55", "2874", "143336", "6953685", "331859360", "15697347566"}},
      {1, 3, {"21", "604", "19018", "615405", "20055060", "654666505", "21378877706"}},
      {2, 2, {"20", "333", "5331", "83821", "1305844", "20250090", "313317426"}},
      {3, 1, {"7", "39", "201", "1000", "4888", "23673", "114087"}},
      {0, 5, {"1", "144", "19810", "2598735", "331859360", "41634316343", "5164420164680"}},
      {1, 4,
       {"55", "4194", "355234", "31391724", "2816672309", "254000932538", "22940968768675"}},
      {2, 3, {"76", "4151", "213173", "10696445", "530068706", "26081095911", "1278122145554"}},
      {3, 2, {"36", "881", "18859", "379449", "7391755", "141473217", "2681264915"}},
      {4, 1, {"9", "59", "343", "1880", "9976", "51944", "267385"}},
  };
  return v;
}

// Refined tiling polynomials, coefficient lists by ascending tau power,
// n = 1..7.
inline const std::vector<std::vector<std::string>>& refined_type1() {
  static const std::vector<std::vector<std::string>> v = {
      {"1"},
      {"1", "2"},
      {"3", "14", "6"},
      {"23", "198", "166", "46"},
      {"433", "6322", "7874", "4210", "866"},
      {"19705", "468866", "777258", "606026", "240578", "39410"},
      {"2151843", "81652574", "169682406", "172604734", "99699558", "31601534", "4303686"},
  };
  return v;
}

inline const std::vector<std::vector<std::string>>& refined_type2() {
  static const std::vector<std::vector<std::string>> v = {
      {"1"},
      {"2", "1"},
      {"10", "10", "3"},
      {"122", "182", "106", "23"},
      {"3594", "7098", "6042", "2538", "433"},
      {"254138", "623062", "691642", "423302", "139994", "19705"},
      {"42978130", "125667490", "171143570", "136152146", "65650546", "17952610", "2151843"},
  };
  return v;
}

// Symmetry-class sequences (n starts at 1).
inline const std::vector<std::string>& seq_sapm12() {
  static const std::vector<std::string> v = {"1", "3", "13", "85", "861"};
  return v;
}
inline const std::vector<std::string>& seq_tcapm() {
  static const std::vector<std::string> v = {"1", "2", "6", "28", "204"};
  return v;
}
inline const std::vector<std::string>& seq_sapm3() {
  static const std::vector<std::string> v = {"1", "3", "15", "135", "2223"};
  return v;
}
inline const std::vector<std::string>& seq_sapm4() {
  static const std::vector<std::string> v = {"1", "3", "27", "639"};
  return v;
}
inline const std::vector<std::string>& seq_htapm() {
  static const std::vector<std::string> v = {"1", "1", "7", "53"};
  return v;
}

// Reference example phase matrices (row-major, top row first).
inline ApmMatrix example_apm(int type) {
  auto build = [](std::size_t n, const std::vector<std::vector<const char*>>& sym) {
    // invert the value map -w*h + w2*v = (-v, -h-v): v = -a, h = a - b
    ApmMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::string s = sym[i][j];
        long a = 0, b = 0;
        if (s == "1") a = 1;
        else if (s == "-1") a = -1;
        else if (s == "w") b = 1;
        else if (s == "-w") b = -1;
        else if (s == "w2") { a = -1; b = -1; }
        else if (s == "-w2") { a = 1; b = 1; }
        else if (s != "0") throw std::invalid_argument("bad symbol");
        int v = int(-a), h = int(a - b);
        m.triple(i, j) = {h, v, -(h + v)};
      }
    return m;
  };
  switch (type) {
    case 1:
      return build(5, {{"0", "0", "-w", "0", "0"},
                       {"0", "0", "1", "-w2", "0"},
                       {"-w2", "-w2", "0", "0", "1"},
                       {"0", "0", "-w", "0", "0"},
                       {"0", "0", "-w", "0", "0"}});
    case 2:
      return build(5, {{"0", "0", "-w", "0", "0"},
                       {"0", "0", "-w", "0", "0"},
                       {"1", "0", "0", "-w2", "-w2"},
                       {"0", "-w2", "1", "0", "0"},
                       {"0", "0", "-w", "0", "0"}});
    case 3:
      return build(5, {{"0", "1", "0", "0", "0"},
                       {"1", "0", "0", "0", "0"},
                       {"-w", "0", "0", "0", "0"},
                       {"w2", "0", "0", "-w", "0"},
                       {"1", "w", "-w2", "1", "-w2"}});
    case 4:
      return build(6, {{"-w", "w2", "w2", "w2", "-1", "0"},
                       {"0", "1", "-w2", "0", "w", "0"},
                       {"0", "-w", "-1", "-w", "0", "-1"},
                       {"0", "0", "-w2", "0", "1", "w"},
                       {"w2", "w2", "w2", "-w", "0", "w"},
                       {"1", "-w2", "-w2", "-w2", "w", "-w2"}});
    default:
      throw std::invalid_argument("example type must be 1..4");
  }
}

}  // namespace ice20v::refdata
