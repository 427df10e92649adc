#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rscod/galois.hpp"

using namespace rsc;

TEST_CASE("GF(7) powers of the primitive root 3") {
    auto f = GaloisField::prime(7);
    CHECK(f.alpha() == 3);
    Label expect[6] = {3, 2, 6, 4, 5, 1};
    for (int i = 1; i <= 6; ++i) CHECK(f.pow(3, i) == expect[i - 1]);
    CHECK(f.mul(3, 5) == 1);  // 3^-1 = 5
    CHECK(f.inv(3) == 5);
    CHECK(f.inv(2) == 4);     // 3^-2 = 4
}

TEST_CASE("GF(2^3) with 1+X+X^3 reproduces the element table") {
    auto f = GaloisField::binary(3, 0b1011);
    // alpha^i labels: 2,4,3,6,7,5,1
    Label pw[7] = {2, 4, 3, 6, 7, 5, 1};
    for (int i = 1; i <= 7; ++i) CHECK(f.alpha_pow(i) == pw[i - 1]);
    // inverse column: inv(a^i) = a^(7-i)
    CHECK(f.inv(f.alpha_pow(1)) == f.alpha_pow(6));
    CHECK(f.inv(f.alpha_pow(2)) == f.alpha_pow(5));
    CHECK(f.inv(f.alpha_pow(3)) == f.alpha_pow(4));
    // tuples read (p0,p1,p2)
    CHECK(f.label_to_tuple_string(f.alpha_pow(1)) == "010");
    CHECK(f.label_to_tuple_string(f.alpha_pow(3)) == "110");
    CHECK(f.label_to_tuple_string(f.alpha_pow(5)) == "111");
    CHECK(f.label_to_poly_string(f.alpha_pow(5)) == "1+X+X^2");
    // additions are label XORs: a^3 + a^5 = 3 ^ 7 = 4 = a^2
    CHECK(f.add(f.alpha_pow(3), f.alpha_pow(5)) == f.alpha_pow(2));
}

TEST_CASE("reducible / non-minimal polynomials are rejected") {
    CHECK_THROWS_AS(GaloisField::binary(3, 0b1111), NotMinimalPolynomial);  // (1+X)(1+X^2)
    CHECK_THROWS_AS(GaloisField::binary(4, 0b11111), NotMinimalPolynomial); // irreducible, not primitive
    CHECK_THROWS_AS(GaloisField::prime(6), NotPrime);
    CHECK_THROWS_AS(GaloisField::binary(3, 0b101), BadParameters);          // degree 2, not 3
}

TEST_CASE("inverse of zero") {
    auto f = GaloisField::binary_default(3);
    CHECK_THROWS_AS(f.inv(0), DivideByZero);
    CHECK(f.add(5, 0) == 5);
    CHECK(f.mul(1, 6) == 6);
}

static void check_axioms_exhaustive(const GaloisField& f) {
    unsigned q = f.q();
    for (unsigned a = 0; a < q; ++a) {
        CHECK(f.add(Label(a), 0) == a);
        CHECK(f.mul(Label(a), 1) == a);
        if (a != 0) CHECK(f.mul(Label(a), f.inv(Label(a))) == 1);
        for (unsigned b = 0; b < q; ++b) {
            CHECK(f.add(Label(a), Label(b)) == f.add(Label(b), Label(a)));
            CHECK(f.mul(Label(a), Label(b)) == f.mul(Label(b), Label(a)));
        }
    }
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            for (unsigned c = 0; c < q; ++c) {
                CHECK(f.add(f.add(Label(a), Label(b)), Label(c)) ==
                      f.add(Label(a), f.add(Label(b), Label(c))));
                CHECK(f.mul(f.mul(Label(a), Label(b)), Label(c)) ==
                      f.mul(Label(a), f.mul(Label(b), Label(c))));
                CHECK(f.mul(Label(a), f.add(Label(b), Label(c))) ==
                      f.add(f.mul(Label(a), Label(b)), f.mul(Label(a), Label(c))));
            }
}

TEST_CASE("field axioms, exhaustive for small fields") {
    check_axioms_exhaustive(GaloisField::binary_default(2));
    check_axioms_exhaustive(GaloisField::binary_default(3));
    check_axioms_exhaustive(GaloisField::binary_default(4));
    check_axioms_exhaustive(GaloisField::prime(7));
    check_axioms_exhaustive(GaloisField::prime(11));
}

TEST_CASE("primitive powers are pairwise distinct, all shipped fields") {
    for (unsigned m = 1; m <= 8; ++m) {
        auto f = GaloisField::binary_default(m);
        std::vector<bool> seen(f.q(), false);
        Label x = 1;
        for (unsigned i = 0; i < f.q() - 1; ++i) {
            CHECK(!seen[x]);
            seen[x] = true;
            x = f.mul(x, f.alpha());
        }
        CHECK(x == 1);  // alpha^(q-1) = 1
    }
}

TEST_CASE("polynomial text parsing") {
    CHECK(parse_poly_mask("0b1011") == 0b1011);
    CHECK(parse_poly_mask("11") == 11);
    CHECK(parse_poly_mask("1+X+X^3") == 0b1011);
    CHECK(parse_poly_mask("1+X^2+X^3") == 0b1101);
    CHECK(parse_poly_mask("1+X+X³") == 0b1011);  // unicode superscript
    CHECK(parse_poly_mask("x^8+x^4+x^3+x^2+1") == 0x11d);
}
