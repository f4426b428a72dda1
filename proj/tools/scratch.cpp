#include <iostream>
#include "cadec/formula.hpp"
#include "cadec/elim.hpp"
#include "cadec/groebner.hpp"
using namespace cadec;
int main() {
  auto ord = parse_order_spec("z > y > x > w");
  auto P = [&](const char* s) { return MultiPoly::parse(s, ord); };
  MultiPoly f1 = P("x*y - z^2 - w^2"), f2 = P("x + y^2 + z + w"), f3 = P("x - y^2 + z - w");
  std::size_t z = ord->index_of("z"), y = ord->index_of("y"), x = ord->index_of("x");
  MultiPoly r1 = resultant(f1, f2, z), r2 = resultant(f1, f3, z), r3 = resultant(f2, f3, z);
  std::cout << "r1 = " << r1.to_string() << "\n";
  std::cout << "r2 = " << r2.to_string() << "\n";
  std::cout << "r3 = " << r3.to_string() << "\n";
  MultiPoly R1 = resultant(r1, r2, y), R2 = resultant(r1, r3, y), R2b = resultant(r2, r3, y);
  std::cout << "R1 = " << R1.to_string() << "\n";
  std::cout << "R2 = " << R2.to_string() << "\n";
  std::cout << "R2b = " << R2b.to_string() << "\n";
  std::cout << "res(R1,R2,x) = " << resultant(R1, R2, x).to_string() << "\n";
  auto q = divide_exact(R1, R2);
  std::cout << "R2 | R1: " << (q.has_value() ? "yes, quotient " + q->to_string() : "no") << "\n";
  // expected printed values
  std::cout << "r1 match: " << (r1 == P("-y^4 - 2*w*y^2 - 2*x*y^2 - 2*w^2 - 2*w*x - x^2 + x*y")) << "\n";
  std::cout << "r2 match: " << (r2 == P("-y^4 - 2*w*y^2 + 2*x*y^2 - 2*w^2 + 2*w*x - x^2 + x*y")) << "\n";
  std::cout << "r3 match: " << (r3 == P("-2*y^2 - 2*w")) << "\n";
  std::cout << "R1 match: " << (R1 == P("256*x^4*(w^4+2*w^2*x^2+x^4+w*x^2)")) << "\n";
  std::cout << "R2 match: " << (R2 == P("16*w^4+32*w^2*x^2+16*x^4+16*w*x^2")) << "\n";
  // GB
  PolySet F(ord); F.insert(f1); F.insert(f2); F.insert(f3);
  MonomialOrder mo{MonomialOrder::Kind::kLex, ord};
  GroebnerBasis G = buchberger(F, mo);
  std::cout << "GB (" << G.gens.size() << "):\n";
  for (auto& g : G.gens) std::cout << "  " << g.to_string() << "\n";
  std::cout << "reduce(f1, G) = " << reduce(f1, G).to_string() << "\n";
  return 0;
}
