// Scratch driver used during development to pin convention choices.
#include <iostream>

#include "braidrep/rea.hpp"

using namespace braidrep;

int main() {
  // 1. associativity of the braided product (c * c') * e = c * (c' * e)
  {
    const int K = 4;
    bool ok = true;
    for (int ci = 0; ci < 4 && ok; ++ci)
      for (int cj = 0; cj < 4 && ok; ++cj)
        for (int m = 0; m <= 2 && ok; ++m)
          for (int ei = 0; ei < layer_dim(m) && ok; ++ei) {
            std::vector<Rat> c(4, Rat()), cp(4, Rat());
            c[ci] = Rat(1);
            cp[cj] = Rat(1);
            LayeredElement e = LayeredElement::basis(K, m, ei);
            LayeredElement rhs = mult_coeff(c, mult_coeff(cp, e));
            // lhs: expand c*c' into layers 0 and 2, then multiply into e
            LayeredElement ccp = mult_coeff(c, LayeredElement::single(K, 1, cp));
            LayeredElement lhs = LayeredElement::zero(K);
            auto l0 = ccp.layers.find(0);
            if (l0 != ccp.layers.end()) {
              for (const auto& [mm, v] : e.layers) {
                auto it = lhs.layers.emplace(mm, std::vector<Rat>(layer_dim(mm), Rat())).first;
                for (int t = 0; t < layer_dim(mm); ++t) it->second[t] += l0->second[0] * v[t];
              }
            }
            auto l2 = ccp.layers.find(2);
            if (l2 != ccp.layers.end()) {
              LayeredElement part = mult_general(2, l2->second, e);
              for (const auto& [mm, v] : part.layers) {
                auto it = lhs.layers.emplace(mm, std::vector<Rat>(layer_dim(mm), Rat())).first;
                for (int t = 0; t < layer_dim(mm); ++t) it->second[t] += v[t];
              }
            }
            if (!lhs.same_layers(rhs)) {
              ok = false;
              std::cout << "assoc FAIL at c=" << ci << " c'=" << cj << " m=" << m
                        << " e=" << ei << "\n";
            }
          }
    std::cout << "associativity: " << (ok ? "PASS" : "FAIL") << "\n";
  }

  // 2. module-algebra property: ad x (c.e) = sum (ad x1 c).(ad x2 e)
  {
    const std::map<char, std::vector<std::pair<std::string, std::string>>> legs = {
        {'E', {{"E", ""}, {"K", "E"}}},
        {'F', {{"F", "k"}, {"", "F"}}},
        {'K', {{"K", "K"}}},
    };
    bool ok = true;
    for (char x : std::string("EFK")) {
      for (int m = 0; m <= 3 && ok; ++m) {
        for (int j : {m - 1, m + 1}) {
          if (j < 0 || j > 4) continue;
          Mat lhs = layer_ad_rep(j).gen(x) * mult_block(1, m, j);
          Mat rhs(lhs.rows(), lhs.cols());
          for (const auto& [x1, x2] : legs.at(x))
            rhs = rhs + mult_block(1, m, j) *
                            layer_ad_rep(1).gen_word(x1).kron(layer_ad_rep(m).gen_word(x2));
          if (lhs != rhs) {
            ok = false;
            std::cout << "module-algebra FAIL at x=" << x << " m=" << m << " j=" << j << "\n";
          }
        }
      }
    }
    std::cout << "module-algebra (ad-equivariance of mult): " << (ok ? "PASS" : "FAIL")
              << "\n";
  }

  // 3. reflection equation, straight and mutated
  {
    Report r = reflection_check(3);
    std::cout << "reflection K=3: " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
    Report rm = reflection_check(3, true);
    std::cout << "reflection K=3 mutated (expect FAIL): " << (rm.all_pass() ? "PASS" : "FAIL")
              << "\n";
  }

  // 4. module axiom for both slot choices
  {
    Report rv = dmodule_axiom_check(3, ModuleSlot::Vector);
    std::cout << "dmodule axiom (vector slot): " << (rv.all_pass() ? "PASS" : "FAIL") << "\n";
    if (!rv.all_pass())
      for (const auto& l : rv.lines)
        if (!l.pass) std::cout << "   " << l.name << " " << l.note << "\n";
    Report rf = dmodule_axiom_check(3, ModuleSlot::Functional);
    std::cout << "dmodule axiom (functional slot): " << (rf.all_pass() ? "PASS" : "FAIL")
              << "\n";
    if (!rf.all_pass())
      for (const auto& l : rf.lines)
        if (!l.pass) std::cout << "   " << l.name << " " << l.note << "\n";
  }

  // 5. antipode: solve, classical limit, square
  {
    try {
      const Mat& X = antipode_coeff_matrix();
      std::cout << "antipode solved. entries:\n";
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) std::cout << "  [" << i << "," << j << "] "
                                              << X.get(i, j).to_string("s");
        std::cout << "\n";
      }
      Mat X2 = X * X;
      std::cout << "antipode squared:\n";
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (!X2.get(i, j).is_zero())
            std::cout << "  [" << i << "," << j << "] = " << X2.get(i, j).to_string("s")
                      << "\n";
      // compare against act_left(K^a) act_right(K^b) on layer 1
      for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
          std::string wa = std::string(std::abs(a), a >= 0 ? 'K' : 'k');
          std::string wb = std::string(std::abs(b), b >= 0 ? 'K' : 'k');
          if (X2 == act_left(1, wa) * act_right(1, wb))
            std::cout << "  X^2 == act_left(K^" << a << ") act_right(K^" << b << ")\n";
        }
    } catch (const std::exception& ex) {
      std::cout << "antipode FAILED: " << ex.what() << "\n";
    }
  }
  return 0;
}
