#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "b3/cyclo.hpp"

using namespace b3;

TEST_CASE("cyclotomic modulus polynomials") {
    auto phi = [](unsigned m) { return CycField(m).modulus(); };
    CHECK(phi(1) == std::vector<mpz_class>{-1, 1});
    CHECK(phi(2) == std::vector<mpz_class>{1, 1});
    CHECK(phi(3) == std::vector<mpz_class>{1, 1, 1});
    CHECK(phi(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(phi(9) == std::vector<mpz_class>{1, 0, 0, 1, 0, 0, 1});
    CHECK(phi(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    CHECK(phi(25) == std::vector<mpz_class>{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    CHECK(CycField(49).degree() == 42);
}

TEST_CASE("root of unity arithmetic") {
    CycField F(9);
    const CycScalar& z = F.zeta(1);
    CHECK(z.pow(9).is_one());
    CHECK(z.pow(-1) == F.zeta(8));
    CHECK(F.root_of_unity(3, 1) == F.zeta(3));

    // sum over all ninth roots of unity vanishes
    CycScalar s(0);
    for (long k = 0; k < 9; ++k) s += F.zeta(k);
    CHECK(s.is_zero());

    // 1 + zeta_3 + zeta_3^2 = 0
    const CycScalar& z3 = F.root_of_unity(3, 1);
    CHECK((CycScalar(1) + z3 + z3 * z3).is_zero());

    CycScalar a = CycScalar(1) + z;  // invertible
    CHECK((a * a.inv()).is_one());
    CHECK((a / a).is_one());
    CHECK_THROWS_AS(CycScalar(0).inv(), DivisionByZero);
}

TEST_CASE("rational scalars work without a field") {
    CycScalar half{mpq_class(1, 2)};
    CHECK((half + half).is_one());
    CHECK((half * CycScalar(4)) == CycScalar(2));
    CHECK((-half + half).is_zero());
    CHECK(half.str() == "1/2");
}

TEST_CASE("q-numbers at roots of unity") {
    CycField F(9);
    const CycScalar& q = F.root_of_unity(3, 1);  // primitive cube root

    CHECK(q_number(0, q).is_one());
    CHECK(q_number(1, q).is_one());
    CHECK(q_number(3, q).is_zero());         // 1 + q + q^2
    CHECK(q_number(4, q).is_one());          // collapses mod ord(q)
    CHECK(q_number(5, CycScalar(1)) == CycScalar(5));

    CHECK(q_factorial(0, q).is_one());
    CHECK(q_factorial(2, q) == CycScalar(1) + q);
    CHECK(q_factorial(3, q).is_zero());

    // Pascal-route binomials stay finite where the factorial quotient is 0/0.
    CHECK(q_binomial(3, 1, q).is_zero());
    CHECK(q_binomial(4, 2, q).is_zero());
    CHECK(q_binomial(4, 1, q).is_one());
    CHECK(q_binomial(6, 3, q) == CycScalar(2));  // Lucas: C(2,1) * binom_q(0,0)
    CHECK(q_binomial(5, 5, q).is_one());
    CHECK(q_binomial(5, 0, q).is_one());

    CHECK(q_multinomial(4, {2, 2}, q) == q_binomial(4, 2, q));
    CHECK(q_multinomial(6, {3, 2, 1}, q) == q_binomial(6, 3, q) * q_binomial(3, 2, q));
    CHECK_THROWS_AS(q_multinomial(4, {1, 2}, q), InvalidArgument);
}

TEST_CASE("xi and beta scalars") {
    CycField F(9);
    const CycScalar& q = F.zeta(1);
    CHECK(xi(1, q) == CycScalar(1) - q.pow(-1));
    CHECK(xi(2, q) == CycScalar(1) - q.pow(-2));
    BetaScalars b = beta_scalars(q);
    CHECK((b.beta1 + b.beta2).is_one());
    CHECK(b.beta1 * (CycScalar(1) + q) == CycScalar(1));
    CHECK(b.beta == b.beta1 * b.beta2 * xi(2, q));
    CHECK_THROWS_AS(beta_scalars(CycScalar(-1)), DivisionByZero);
}

TEST_CASE("gaussian binomials: pascal route equals factorial route") {
    for (unsigned long n = 0; n <= 9; ++n) {
        for (unsigned long k = 0; k <= n; ++k) {
            QPoly p = gauss_binomial_pascal(n, k);
            QPoly f = gauss_binomial_quotient(n, k);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(p == f);
        }
    }
    CHECK(gauss_binomial_pascal(4, 2).coeffs() == std::vector<mpz_class>{1, 1, 2, 1, 1});
    CHECK(gauss_multinomial(5, {2, 2, 1}) ==
          gauss_binomial_pascal(5, 2) * gauss_binomial_pascal(3, 2));
}

TEST_CASE("gaussian polynomial evaluation matches direct q-binomials") {
    CycField F(25);
    const CycScalar& q = F.root_of_unity(5, 2);
    for (unsigned long n = 0; n <= 7; ++n)
        for (unsigned long k = 0; k <= n; ++k)
            CHECK(gauss_binomial_pascal(n, k).eval(q) == q_binomial(n, k, q));
}

TEST_CASE("qpoly exact division") {
    QPoly n = gauss_factorial(5);
    QPoly d = gauss_factorial(3);
    QPoly quot = n.divide_exact(d);
    CHECK(quot * d == n);
    CHECK_THROWS_AS((gauss_number(3) + QPoly(1)).divide_exact(gauss_number(2)), InvalidArgument);
}

TEST_CASE("scalar rendering is canonical") {
    CycField F(9);
    CHECK(CycScalar(0).str() == "0");
    CHECK(CycScalar(-3).str() == "-3");
    CHECK(F.zeta(1).str() == "q");
    CHECK((F.zeta(2) - CycScalar(1)).str() == "-1 + q^2");
    // equality is representation equality
    CHECK(F.zeta(3) == F.root_of_unity(3, 1));
    CHECK(F.zeta(3).hash() == F.root_of_unity(3, 1).hash());
}
