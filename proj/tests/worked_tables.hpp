#pragma once

// Reference rows of the worked tables, columns k = 1..K (blank entries are 0).

#include <string>
#include <vector>

namespace tables {

struct Worked {
  std::string name;
  std::string vars;
  std::string poly;
  std::vector<long> gamma, mu_t, mu_f, mu, nu, mu2, nu2, sp;
};

inline const std::vector<Worked>& worked() {
  static const std::vector<Worked> w = {
      {"xyz",
       "x,y,z",
       "x*y*z",
       {0, 0, 1, 3, 3, 1, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0, 0, 0},
       {0, 0, 1, 3, 3, 3, 3, 3, 3},
       {0, 0, 1, 3, 3, 3, 3, 3, 3},
       {0, 0, 0, 0, 0, 2, 3, 3, 3},
       {0, 0, 1, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 2, 0, 0, 0},
       {0, 0, 1, 0, 0, -2, 0, 0, 0}},
      {"x2y2+x2z2+y2z2",
       "x,y,z",
       "x^2*y^2 + x^2*z^2 + y^2*z^2",
       {0, 0, 1, 3, 6, 7, 6, 3, 1, 0, 0, 0},
       {0, 0, 0, 0, 3, 4, 3, 0, 0, 0, 0, 0},
       {0, 0, 1, 3, 3, 3, 3, 3, 3, 3, 3, 3},
       {0, 0, 1, 3, 6, 7, 6, 3, 3, 3, 3, 3},
       {0, 0, 0, 0, 0, 0, 0, 0, 2, 3, 3, 3},
       {0, 0, 1, 3, 4, 4, 3, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
       {0, 0, 1, 3, 4, 4, 3, 0, 0, 0, 0, 0}},
      {"xyz(x+y+z)",
       "x,y,z",
       "x^2*y*z + x*y^2*z + x*y*z^2",
       {0, 0, 1, 3, 6, 7, 6, 3, 1, 0, 0, 0},
       {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
       {0, 0, 1, 3, 6, 6, 6, 6, 6, 6, 6, 6},
       {0, 0, 1, 3, 6, 7, 6, 6, 6, 6, 6, 6},
       {0, 0, 0, 0, 0, 0, 0, 3, 5, 6, 6, 6},
       {0, 0, 1, 3, 1, 1, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0},
       {0, 0, 1, 3, 1, 1, 0, -3, 0, 0, 0, 0}},
      {"x2y2+z4",
       "x,y,z",
       "x^2*y^2 + z^4",
       {0, 0, 1, 3, 6, 7, 6, 3, 1, 0, 0, 0},
       {0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0},
       {0, 0, 1, 3, 5, 6, 6, 6, 6, 6, 6, 6},
       {0, 0, 1, 3, 6, 7, 7, 6, 6, 6, 6, 6},
       {0, 0, 0, 0, 0, 0, 1, 3, 5, 6, 6, 6},
       {0, 0, 1, 1, 2, 1, 1, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0},
       {0, 0, 1, 1, 2, 1, 0, -1, -1, 0, 0, 0}},
      {"x2y2",
       "x,y",
       "x^2*y^2",
       {0, 1, 2, 3, 2, 1, 0, 0},
       {0, 0, 0, 1, 0, 0, 0, 0},
       {0, 1, 2, 2, 2, 2, 2, 2},
       {0, 1, 2, 3, 2, 2, 2, 2},
       {0, 0, 0, 0, 0, 1, 2, 2},
       {0, 1, 0, 1, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 1, 0, 0},
       {0, 1, 0, 1, 0, -1, 0, 0}},
  };
  return w;
}

}  // namespace tables
