#include "doctest.h"

#include <stdexcept>

#include "lrmoc/core/pauli.hpp"

using namespace lrmoc;

TEST_CASE("parse and print round trip") {
  const auto p = PauliString::parse("-XIZY");
  CHECK(p.n_qubits() == 4);
  CHECK(p.phase() == 2);
  CHECK(p.op(0) == 'X');
  CHECK(p.op(1) == 'I');
  CHECK(p.op(2) == 'Z');
  CHECK(p.op(3) == 'Y');
  CHECK(p.to_string() == "-XIZY");
  CHECK(p.weight() == 3);
  CHECK_THROWS_AS(PauliString::parse("XQ"), std::invalid_argument);
}

TEST_CASE("single-site products follow the Pauli algebra") {
  auto prod = [](const char* a, const char* b) {
    auto p = PauliString::parse(a);
    p *= PauliString::parse(b);
    return p.to_string();
  };
  CHECK(prod("X", "Y") == "+iZ");
  CHECK(prod("Y", "X") == "-iZ");
  CHECK(prod("Y", "Z") == "+iX");
  CHECK(prod("Z", "Y") == "-iX");
  CHECK(prod("Z", "X") == "+iY");
  CHECK(prod("X", "Z") == "-iY");
  CHECK(prod("X", "X") == "+I");
  CHECK(prod("XX", "ZZ") == "-YY");
  CHECK(prod("XX", "YY") == "-ZZ");
}

TEST_CASE("two-site parity checks") {
  for (Basis b : {Basis::XX, Basis::YY, Basis::ZZ}) {
    const auto p = PauliString::two_site(6, b, 1, 4);
    CHECK(p.weight() == 2);
    CHECK(p.phase() == 0);
    CHECK(p.support() == std::vector<std::size_t>{1, 4});
  }
  CHECK_THROWS(PauliString::two_site(4, Basis::ZZ, 2, 2));
  CHECK_THROWS(PauliString::two_site(4, Basis::ZZ, 0, 4));
}

TEST_CASE("commutation") {
  CHECK(PauliString::parse("XX").commutes_with(PauliString::parse("ZZ")));
  CHECK_FALSE(PauliString::parse("XI").commutes_with(PauliString::parse("ZZ")));
  CHECK(PauliString::parse("XYZ").commutes_with(PauliString::parse("XYZ")));
}

TEST_CASE("strings wider than one word") {
  PauliString a(130);
  PauliString b(130);
  a.set(3, true, false);
  a.set(129, false, true);
  b.set(129, true, false);
  CHECK_FALSE(a.commutes_with(b));
  a *= b;
  CHECK(a.op(129) == 'Y');
  CHECK(a.phase() == 1);  // Z X = iY
}
