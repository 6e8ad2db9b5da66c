#include "compalg/fixtures.hpp"

#include <algorithm>

namespace compalg {

namespace {

BilinearMap dual_number_product() {
  BilinearMap mu = make_bilinear(2, 2);
  mu.at(0, {0, 0}) = Rational(1);
  mu.at(1, {0, 1}) = Rational(1);
  mu.at(1, {1, 0}) = Rational(1);
  return mu;
}

}  // namespace

CompatibleAlgebra fixture(const std::string& name) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (key == "F1") {
    BilinearMap mu = make_bilinear(1, 1);
    mu.at(0, {0, 0}) = Rational(1);
    return CompatibleAlgebra{1, mu, mu};
  }
  if (key == "F2") {
    return CompatibleAlgebra{2, dual_number_product(), make_bilinear(2, 2)};
  }
  if (key == "F3") {
    BilinearMap mu2 = make_bilinear(2, 2);
    mu2.at(1, {0, 0}) = Rational(1);  // 1 .2 1 = x, everything else dies
    return CompatibleAlgebra{2, dual_number_product(), mu2};
  }
  if (key == "F4") {
    BilinearMap mu1 = make_bilinear(2, 2);
    mu1.at(0, {0, 0}) = Rational(1);
    BilinearMap mu2 = make_bilinear(2, 2);
    mu2.at(1, {1, 1}) = Rational(1);
    return CompatibleAlgebra{2, mu1, mu2};
  }
  if (key == "NC") {
    BilinearMap mu1 = make_bilinear(2, 2);
    mu1.at(0, {0, 0}) = Rational(1);
    mu1.at(1, {0, 1}) = Rational(1);
    return CompatibleAlgebra{2, mu1, make_bilinear(2, 2)};
  }
  throw InputError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"F1", "F2", "F3", "F4", "NC"};
}

Matrix fixture_nijenhuis_n() {
  Matrix n(2, 2);
  n(1, 0) = Rational(1);  // N(1) = x, N(x) = 0
  return n;
}

}  // namespace compalg
