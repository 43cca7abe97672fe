#pragma once

// Frozen minimal-crossing drawings, stored in the drawing v1 text
// format and rebuilt (hence fully revalidated) on every call. The
// counts match the published values these drawings realize; G7_2's
// exact crossing number is open, so its entry is a best known drawing
// and the load check only demands it stay strictly below 8.
//
// The K7 entry additionally carries the structure the surgery tests
// lean on: its trigon {0,1,2} is cr-reducible and best_surgery drops
// it to an 8-crossing good drawing of gnk(7,1).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xing/drawing_io.hpp"

namespace xing {

inline const std::vector<std::pair<std::string, const char*>>& fixture_texts() {
  static const std::vector<std::pair<std::string, const char*>> texts = {
    {"K7",
     R"drawing(drawing v1
graph
0 1
0 2
0 3
0 4
0 5
0 6
1 2
1 3
1 4
1 5
1 6
2 3
2 4
2 5
2 6
3 4
3 5
3 6
4 5
4 6
5 6
crossing 0 5 18
crossing 1 1 8
crossing 2 10 16
crossing 3 2 8
crossing 4 2 6
crossing 5 13 19
crossing 6 5 13
crossing 7 6 15
crossing 8 1 15
order 1 1 8
order 2 3 4
order 5 0 6
order 6 4 7
order 8 3 1
order 10 2
order 13 5 6
order 15 7 8
order 16 2
order 18 0
order 19 5
rot 0 2 0 4 5 3 1
rot 1 8 6 7 10 9 0
rot 2 1 12 13 14 11 6
rot 3 16 7 2 15 11 17
rot 4 15 8 3 18 19 12
rot 5 13 18 4 9 16 20
rot 6 5 20 10 17 14 19
rot x0 5+ 18- 5- 18+
rot x1 1+ 8- 1- 8+
rot x2 10- 16- 10+ 16+
rot x3 8- 2- 8+ 2+
rot x4 6- 2- 6+ 2+
rot x5 19+ 13- 19- 13+
rot x6 5+ 13- 5- 13+
rot x7 6+ 15- 6- 15+
rot x8 1+ 15- 1- 15+
)drawing"},
    {"G7_1",
     R"drawing(drawing v1
graph
0 3
0 4
0 5
0 6
0 7
1 3
1 4
1 5
1 6
1 7
2 3
2 4
2 5
2 6
2 7
3 4
3 5
3 6
4 5
4 6
5 6
label 0 a
label 1 t_{1,1}
label 2 t_{1,2}
label 3 1
label 4 2
label 5 3
label 6 4
label 7 v_1
crossing 0 14 18
crossing 1 0 8
crossing 2 10 20
crossing 3 4 6
crossing 4 2 8
crossing 5 2 5
crossing 6 8 15
crossing 7 3 15
order 0 1
order 2 4 5
order 3 7
order 4 3
order 5 5
order 6 3
order 8 4 1 6
order 10 2
order 14 0
order 15 6 7
order 18 0
order 20 2
rot 0 2 0 3 1 4
rot 1 8 6 9 7 5
rot 2 11 13 10 12 14
rot 3 5 16 10 17 15 0
rot 4 18 6 1 15 19 11
rot 5 20 16 2 7 18 12
rot 6 3 8 17 20 13 19
rot 7 4 14 9
rot x0 14+ 18- 14- 18+
rot x1 0- 8- 0+ 8+
rot x2 10+ 20- 10- 20+
rot x3 4+ 6- 4- 6+
rot x4 8+ 2- 8- 2+
rot x5 5+ 2- 5- 2+
rot x6 8- 15- 8+ 15+
rot x7 3- 15- 3+ 15+
)drawing"},
    {"G7_2",
     R"drawing(drawing v1
graph
0 5
0 6
0 7
0 8
1 3
1 4
1 5
1 6
1 7
2 3
2 4
2 5
2 6
2 7
3 5
3 6
3 8
4 5
4 6
4 8
5 6
label 0 a
label 1 t_{1,1}
label 2 t_{1,2}
label 3 t_{2,1}
label 4 t_{2,2}
label 5 1
label 6 2
label 7 v_1
label 8 v_2
crossing 0 0 5
crossing 1 4 20
crossing 2 12 16
crossing 3 16 18
crossing 4 13 17
crossing 5 0 13
crossing 6 5 13
order 0 0 5
order 4 1
order 5 6 0
order 12 2
order 13 4 5 6
order 16 2 3
order 17 4
order 18 3
order 20 1
rot 0 1 3 0 2
rot 1 8 5 6 4 7
rot 2 12 9 11 13 10
rot 3 16 15 4 14 9
rot 4 19 18 10 17 5
rot 5 0 17 11 14 20 6
rot 6 7 20 15 12 18 1
rot 7 2 13 8
rot 8 3 16 19
rot x0 5- 0- 5+ 0+
rot x1 4- 20- 4+ 20+
rot x2 12+ 16- 12- 16+
rot x3 18+ 16- 18- 16+
rot x4 17- 13- 17+ 13+
rot x5 0- 13- 0+ 13+
rot x6 5+ 13- 5- 13+
)drawing"},
    {"Gstar",
     R"drawing(drawing v1
graph
0 3
0 4
0 5
0 6
0 7
1 3
1 4
1 5
1 6
1 7
2 3
2 4
2 5
2 6
2 7
3 6
3 8
4 6
4 8
5 6
5 8
crossing 0 0 14
crossing 1 12 16
crossing 2 3 6
crossing 3 2 14
crossing 4 2 5
crossing 5 13 18
crossing 6 2 15
crossing 7 7 15
order 0 0
order 2 3 4 6
order 3 2
order 5 4
order 6 2
order 7 7
order 12 1
order 13 5
order 14 0 3
order 15 6 7
order 16 1
order 18 5
rot 0 2 0 1 3 4
rot 1 6 8 7 5 9
rot 2 14 10 12 13 11
rot 3 0 5 15 16 10
rot 4 11 18 17 6 1
rot 5 20 12 2 7 19
rot 6 3 17 13 19 15 8
rot 7 4 9 14
rot 8 18 16 20
rot x0 14- 0- 14+ 0+
rot x1 12- 16- 12+ 16+
rot x2 3+ 6- 3- 6+
rot x3 14- 2- 14+ 2+
rot x4 5+ 2- 5- 2+
rot x5 18- 13- 18+ 13+
rot x6 2+ 15- 2- 15+
rot x7 7+ 15- 7- 15+
)drawing"},
    {"Heawood",
     R"drawing(drawing v1
graph
0 7
0 11
0 13
1 7
1 8
1 12
2 8
2 9
2 13
3 7
3 9
3 10
4 8
4 10
4 11
5 9
5 11
5 12
6 10
6 12
6 13
crossing 0 0 6
crossing 1 5 13
crossing 2 15 20
order 0 0
order 5 1
order 6 0
order 13 1
order 15 2
order 20 2
rot 0 0 2 1
rot 1 4 5 3
rot 2 6 7 8
rot 3 9 11 10
rot 4 14 13 12
rot 5 15 17 16
rot 6 20 18 19
rot 7 3 9 0
rot 8 6 12 4
rot 9 10 15 7
rot 10 13 18 11
rot 11 1 16 14
rot 12 19 5 17
rot 13 2 8 20
rot x0 0+ 6- 0- 6+
rot x1 5- 13- 5+ 13+
rot x2 20- 15- 20+ 15+
)drawing"},
    {"K6",
     R"drawing(drawing v1
graph
0 1
0 2
0 3
0 4
0 5
1 2
1 3
1 4
1 5
2 3
2 4
2 5
3 4
3 5
4 5
crossing 0 0 9
crossing 1 8 10
crossing 2 3 13
order 0 0
order 3 2
order 8 1
order 9 0
order 10 1
order 13 2
rot 0 0 1 4 3 2
rot 1 0 6 7 8 5
rot 2 9 5 10 11 1
rot 3 2 13 12 6 9
rot 4 10 7 12 3 14
rot 5 4 11 8 14 13
rot x0 9- 0- 9+ 0+
rot x1 10- 8- 10+ 8+
rot x2 13- 3- 13+ 3+
)drawing"},
    {"Q7",
     R"drawing(drawing v1
graph
0 3
0 4
0 5
0 6
1 3
1 4
1 5
1 6
2 3
2 4
2 5
2 6
3 4
3 5
4 5
crossing 0 6 8
crossing 1 3 12
crossing 2 3 5
order 3 1 2
order 5 2
order 6 0
order 8 0
order 12 1
rot 0 3 0 2 1
rot 1 5 7 6 4
rot 2 8 11 9 10
rot 3 12 4 8 13 0
rot 4 1 14 9 5 12
rot 5 2 13 6 10 14
rot 6 7 3 11
rot x0 6- 8- 6+ 8+
rot x1 12- 3- 12+ 3+
rot x2 5- 3- 5+ 3+
)drawing"},
    {"P7",
     R"drawing(drawing v1
graph
1 3
1 4
1 5
1 6
2 3
2 4
2 5
2 6
3 5
3 7
4 5
4 7
5 6
5 7
6 7
crossing 0 2 5
crossing 1 5 8
crossing 2 3 9
order 2 0
order 3 2
order 5 1 0
order 8 1
order 9 2
rot 1 2 0 3 1
rot 2 5 6 7 4
rot 3 8 4 9 0
rot 4 1 11 10 5
rot 5 6 8 2 10 13 12
rot 6 3 7 12 14
rot 7 9 14 13 11
rot x0 5- 2- 5+ 2+
rot x1 5- 8- 5+ 8+
rot x2 9+ 3- 9- 3+
)drawing"},
    {"Q8",
     R"drawing(drawing v1
graph
0 3
0 4
0 5
0 6
1 3
1 4
1 5
1 6
2 3
2 4
2 5
2 6
3 7
4 7
5 7
crossing 0 2 4
crossing 1 8 13
crossing 2 3 5
order 2 0
order 3 2
order 4 0
order 5 2
order 8 1
order 13 1
rot 0 3 2 0 1
rot 1 5 7 6 4
rot 2 11 9 8 10
rot 3 4 12 8 0
rot 4 1 13 9 5
rot 5 2 6 10 14
rot 6 7 3 11
rot 7 12 14 13
rot x0 4+ 2- 4- 2+
rot x1 13+ 8- 13- 8+
rot x2 5- 3- 5+ 3+
)drawing"},
    {"P8",
     R"drawing(drawing v1
graph
0 5
0 6
0 7
1 3
1 4
1 5
1 6
2 3
2 4
2 5
2 6
3 5
3 7
4 5
4 7
crossing 0 6 14
crossing 1 0 7
order 0 1
order 6 0
order 7 1
order 14 0
rot 0 0 1 2
rot 1 6 4 5 3
rot 2 7 9 8 10
rot 3 7 12 3 11
rot 4 13 4 14 8
rot 5 11 5 13 9 0
rot 6 1 10 6
rot 7 2 14 12
rot x0 6+ 14- 6- 14+
rot x1 0+ 7- 0- 7+
)drawing"},
    {"P9",
     R"drawing(drawing v1
graph
0 5
0 6
0 7
1 4
1 6
1 8
2 3
2 4
2 5
2 6
3 7
3 8
4 5
4 7
5 8
crossing 0 2 14
crossing 1 3 6
order 2 0
order 3 1
order 6 1
order 14 0
rot 0 0 2 1
rot 1 5 3 4
rot 2 9 6 7 8
rot 3 10 6 11
rot 4 12 7 3 13
rot 5 8 12 14 0
rot 6 1 4 9
rot 7 2 13 10
rot 8 14 11 5
rot x0 14+ 2- 14- 2+
rot x1 6- 3- 6+ 3+
)drawing"},
    {"P10",
     R"drawing(drawing v1
graph
0 5
0 6
0 7
1 4
1 6
1 8
2 3
2 6
2 9
3 7
3 8
4 7
4 9
5 8
5 9
crossing 0 2 8
crossing 1 3 13
order 2 0
order 3 1
order 8 0
order 13 1
rot 0 0 2 1
rot 1 3 4 5
rot 2 8 6 7
rot 3 9 10 6
rot 4 12 3 11
rot 5 13 14 0
rot 6 1 7 4
rot 7 2 11 9
rot 8 5 10 13
rot 9 8 14 12
rot x0 2+ 8- 2- 8+
rot x1 13- 3- 13+ 3+
)drawing"},
  };
  return texts;
}

inline std::map<std::string, Drawing> fixtures() {
  static const std::map<std::string, int> want = {
      {"K7", 9}, {"G7_1", 8}, {"G7_2", 7}, {"Gstar", 8}, {"Heawood", 3},
      {"K6", 3}, {"Q7", 3},   {"P7", 3},   {"Q8", 3},    {"P8", 2},
      {"P9", 2}, {"P10", 2}};
  std::map<std::string, Drawing> out;
  for (const auto& [name, text] : fixture_texts()) {
    Drawing d = parse_drawing(text);
    if (!d.is_good()) throw error("fixture " + name + " is not a good drawing");
    int count = want.at(name);
    bool ok = name == "G7_2" ? d.crossing_count() <= count
                             : d.crossing_count() == count;
    if (!ok)
      throw error("fixture " + name + " has " + std::to_string(d.crossing_count()) +
                  " crossings, expected " + std::to_string(count));
    out.emplace(name, std::move(d));
  }
  return out;
}

} // namespace xing
