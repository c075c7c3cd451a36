#include <iostream>

#include "braidrep/rea.hpp"

using namespace braidrep;

int main() {
  const int K = 3;
  // c * unit should place c in layer 1 unchanged.
  for (int ci = 0; ci < 4; ++ci) {
    std::vector<Rat> c(4, Rat());
    c[ci] = Rat(1);
    LayeredElement r = mult_coeff(c, LayeredElement::unit(K));
    std::cout << "c=" << ci << " -> layers:";
    for (auto& [m, v] : r.layers) {
      std::cout << " [" << m << ":";
      for (int i = 0; i < layer_dim(m); ++i)
        if (!v[i].is_zero()) std::cout << " " << i << "=" << v[i].to_string("s");
      std::cout << "]";
    }
    std::cout << "\n";
  }

  // unit-side: the unit coefficient (layer 0, value 1) times a layer-1 element
  for (int ei = 0; ei < 4; ++ei) {
    std::vector<Rat> u{Rat(1)};
    LayeredElement r = mult_general(0, u, LayeredElement::basis(K, 1, ei));
    std::cout << "unit * e" << ei << " -> layers:";
    for (auto& [m, v] : r.layers) {
      std::cout << " [" << m << ":";
      for (int i = 0; i < layer_dim(m); ++i)
        if (!v[i].is_zero()) std::cout << " " << i << "=" << v[i].to_string("s");
      std::cout << "]";
    }
    std::cout << "\n";
  }

  // commutativity at s=1 for two degree-1 coefficients
  for (int ci = 0; ci < 4; ++ci)
    for (int cj = 0; cj < 4; ++cj) {
      std::vector<Rat> c(4, Rat()), cp(4, Rat());
      c[ci] = Rat(1);
      cp[cj] = Rat(1);
      LayeredElement ab = mult_coeff(c, LayeredElement::single(K, 1, cp));
      LayeredElement ba = mult_coeff(cp, LayeredElement::single(K, 1, c));
      bool eq = true;
      for (int m : {0, 2}) {
        auto ia = ab.layers.find(m);
        auto ib = ba.layers.find(m);
        for (int i = 0; i < layer_dim(m); ++i) {
          Rat va = ia == ab.layers.end() ? Rat() : ia->second[i];
          Rat vb = ib == ba.layers.end() ? Rat() : ib->second[i];
          mpq_class pa = va.eval(mpq_class(1));
          mpq_class pb = vb.eval(mpq_class(1));
          if (pa != pb) eq = false;
        }
      }
      if (!eq) std::cout << "s=1 commutativity FAIL at " << ci << "," << cj << "\n";
    }
  std::cout << "s=1 commutativity done\n";
  return 0;
}
