#include "kspec/corpus.hpp"

#include <algorithm>

namespace kspec {

bool CorpusEntry::has(const std::string& tag) const { return std::find(tags.begin(), tags.end(), tag) != tags.end(); }

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = {
      // n = 2
      {"x2y2", "x,y", "x^2*y^2", {"binary", "wh"}, {}, {}, 2},
      {"xy(x+y)", "x,y", "x^2*y + x*y^2", {"binary", "smooth"}, {}, {}, {}},
      {"x3y2", "x,y", "x^3*y^2", {"binary", "wh"}, {}, {}, 2},
      {"x2y(x+y)2", "x,y", "x^4*y + 2*x^3*y^2 + x^2*y^3", {"binary", "wh"}, {}, {}, 2},
      {"fermat2-5", "x,y", "x^5 + y^5", {"binary", "smooth"}, {}, {}, {}},
      {"x3y", "x,y", "x^3*y", {"binary", "wh"}, {}, {}, 2},
      {"xy", "x,y", "x*y", {"binary", "smooth"}, {}, {}, {}},
      // n = 3
      {"xyz", "x,y,z", "x*y*z", {"nodal", "wh"}, "1", "1 1 1", 3},
      {"x2y2+x2z2+y2z2", "x,y,z", "x^2*y^2 + x^2*z^2 + y^2*z^2", {"nodal", "wh"}, "1", "1 1 1", 3},
      {"xyz(x+y+z)", "x,y,z", "x^2*y*z + x*y^2*z + x*y*z^2", {"nodal", "wh"}, "1", "1 1 1 1 1 1", 3},
      {"x2y2+z4", "x,y,z", "x^2*y^2 + z^4", {"wh", "monomial-powers"}, "3/4", "3/4 3/4 1 1 5/4 5/4", 2},
      {"fermat3-3", "x,y,z", "x^3 + y^3 + z^3", {"smooth"}, {}, {}, {}},
      {"fermat3-4", "x,y,z", "x^4 + y^4 + z^4", {"smooth"}, {}, {}, {}},
      {"fermat3-5", "x,y,z", "x^5 + y^5 + z^5", {"smooth"}, {}, {}, {}},
      {"x3+y3 in 3", "x,y,z", "x^3 + y^3", {"wh", "fewer-vars"}, "2/3", "2/3 1 1 4/3", 1},
      {"x4+y4 in 3", "x,y,z", "x^4 + y^4", {"wh", "fewer-vars"}, "1/2", "1/2 3/4 3/4 1 1 1 5/4 5/4 3/2", 1},
      {"xy3+z4", "x,y,z", "x*y^3 + z^4", {"wh", "monomial-powers"}, "7/12", "7/12 5/6 13/12 11/12 7/6 17/12", 1},
      {"x3y+z4", "x,y,z", "x^3*y + z^4", {"wh", "monomial-powers"}, "7/12", "7/12 5/6 13/12 11/12 7/6 17/12", 1},
      {"x2y3+z5",
       "x,y,z",
       "x^2*y^3 + z^5",
       {"wh", "monomial-powers"},
       "8/15",
       "7/10 9/10 11/10 13/10 8/15 11/15 14/15 17/15 13/15 16/15 19/15 22/15", 2},
      {"xy4+z5",
       "x,y,z",
       "x*y^4 + z^5",
       {"wh", "monomial-powers"},
       "9/20",
       "9/20 13/20 17/20 21/20 7/10 9/10 11/10 13/10 19/20 23/20 27/20 31/20", 1},
      {"nodal cubic", "x,y,z", "y^2*z - x^3 - x^2*z", {"nodal", "wh"}, "1", "1", 1},
      {"cuspidal cubic", "x,y,z", "y^2*z - x^3", {"wh"}, "5/6", "5/6 7/6", 1},
      {"conic+line", "x,y,z", "x^3 + x*y^2 - x*z^2", {"nodal", "wh"}, "1", "1 1", 2},
      {"four lines", "x,y,z", "2*x^2*y^2 + 2*y^2*z^2 + 2*x^2*z^2 - x^4 - y^4 - z^4", {"nodal", "wh"}, "1",
       "1 1 1 1 1 1", 3},
      {"x5+y4z",
       "x,y,z",
       "x^5 + y^4*z",
       {"wh"},
       "9/20",
       "9/20 13/20 17/20 21/20 7/10 9/10 11/10 13/10 19/20 23/20 27/20 31/20", 1},
      {"x4z+y5+x2y3", "x,y,z", "x^4*z + y^5 + x^2*y^3", {"nonwh"}, {}, {}, 1},
      // n = 4
      {"fermat4-3", "x,y,z,w", "x^3 + y^3 + z^3 + w^3", {"smooth"}, {}, {}, {}},
      {"fermat4-4", "x,y,z,w", "x^4 + y^4 + z^4 + w^4", {"smooth"}, {}, {}, {}},
      {"x2y2+z4+w4", "x,y,z,w", "x^2*y^2 + z^4 + w^4", {"wh", "monomial-powers"}, {}, {}, 2},
      {"xy3+z4+w4", "x,y,z,w", "x*y^3 + z^4 + w^4", {"wh", "monomial-powers"}, {}, {}, 1},
      {"x3+y3+z3 in 4", "x,y,z,w", "x^3 + y^3 + z^3", {"wh", "fewer-vars"}, {}, {}, 1},
      {"cayley cubic", "x,y,z,w", "x*y*z + x*y*w + x*z*w + y*z*w", {"nodal", "wh"}, {}, {}, 4},
      {"xyz+w3", "x,y,z,w", "x*y*z + w^3", {"wh"}, {}, {}, 3},
  };
  return corpus;
}

}  // namespace kspec
