#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "biframe/errors.hpp"
#include "biframe/fixtures.hpp"
#include "biframe/multiplier.hpp"
#include "oracle.hpp"

using namespace biframe;

namespace {

SymbolFunction unit_symbol(const std::shared_ptr<const AtomSpace>& mu) {
    return SymbolFunction(mu, std::vector<Scalar>(mu->size(), Scalar(1, 0)));
}

SymbolFunction random_symbol(oracle::Rng& rng, const std::shared_ptr<const AtomSpace>& mu,
                             Field field) {
    std::vector<Scalar> values;
    for (std::size_t k = 0; k < mu->size(); ++k)
        values.push_back(oracle::random_scalar(rng, field));
    return SymbolFunction(mu, std::move(values));
}

struct RandomInstance {
    std::shared_ptr<const AtomSpace> mu;
    VectorFamily f;
    VectorFamily g;
};

RandomInstance random_families(oracle::Rng& rng, int dim, int atoms, Field field) {
    std::vector<Atom> raw;
    for (int k = 0; k < atoms; ++k)
        raw.push_back({std::to_string(k), oracle::uniform(rng, 0.5, 2.0)});
    auto mu = std::make_shared<const AtomSpace>(std::move(raw));
    const Space s{dim, field};
    return {mu, VectorFamily(mu, s, oracle::random_matrix(rng, dim, atoms, field)),
            VectorFamily(mu, s, oracle::random_matrix(rng, dim, atoms, field))};
}

} // namespace

TEST_CASE("unit symbol on an orthonormal basis gives the identity") {
    const BiframePair basis = fixtures::parseval_pair(3);
    const MultiplierOperator m = build_multiplier(unit_symbol(basis.F.atom_space()),
                                                  basis.F, basis.G);
    CHECK(m.M.entries == Matrix::Identity(3, 3));
    CHECK(m.actual_norm == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.norm_bound == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("diagonal symbol on the standard basis") {
    const BiframePair basis = fixtures::parseval_pair(3);
    SymbolFunction m(basis.F.atom_space(), {Scalar(2, 0), Scalar(3, 0), Scalar(4, 0)});
    const MultiplierOperator mult = build_multiplier(m, basis.F, basis.G);
    Matrix expected = Matrix::Zero(3, 3);
    expected.diagonal() << Scalar(2, 0), Scalar(3, 0), Scalar(4, 0);
    CHECK(mult.M.entries == expected);
    CHECK(mult.actual_norm == doctest::Approx(4.0).epsilon(1e-14));
    // Equality case of the norm bound: ||m||_inf sqrt(1*1) = 4.
    CHECK(mult.norm_bound == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("unit symbol reduces to the pair operator exactly") {
    const BiframePair pair = fixtures::skew_pair();
    const MultiplierOperator m = build_multiplier(unit_symbol(pair.F.atom_space()),
                                                  pair.F, pair.G);
    CHECK(m.M.entries == assemble(pair).S.entries);
    CHECK(m.M.entries == fixtures::skew_pair_matrix());

    oracle::Rng rng(41);
    for (int it = 0; it < 20; ++it) {
        const Field field = it % 2 ? Field::Complex : Field::Real;
        const int dim = 2 + static_cast<int>(rng() % 3);
        const RandomInstance inst = random_families(rng, dim, dim + 2, field);
        const MultiplierOperator mm = build_multiplier(unit_symbol(inst.mu), inst.f, inst.g);
        CHECK(mm.M.entries == assemble(BiframePair(inst.f, inst.g)).S.entries);
    }
}

TEST_CASE("multiplier adjoint") {
    SUBCASE("real symbol with F = G is Hermitian") {
        const BiframePair basis = fixtures::parseval_pair(3);
        SymbolFunction m(basis.F.atom_space(), {Scalar(2, 0), Scalar(-1, 0), Scalar(0.5, 0)});
        const MultiplierOperator mult = build_multiplier(m, basis.F, basis.G);
        const Op adj = multiplier_adjoint(mult, basis.F, basis.G);
        CHECK((adj.entries - mult.M.entries).cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("unit symbol on the skew pair: adjoint is the transpose") {
        const BiframePair pair = fixtures::skew_pair();
        const MultiplierOperator mult = build_multiplier(unit_symbol(pair.F.atom_space()),
                                                         pair.F, pair.G);
        const Op adj = multiplier_adjoint(mult, pair.F, pair.G);
        CHECK(adj.entries == fixtures::skew_pair_matrix().transpose());
    }

    SUBCASE("random complex instances match the conjugate-symbol swap") {
        oracle::Rng rng(42);
        for (int it = 0; it < 100; ++it) {
            const int dim = 2 + static_cast<int>(rng() % 3);
            const RandomInstance inst = random_families(rng, dim, dim + 2, Field::Complex);
            const SymbolFunction m = random_symbol(rng, inst.mu, Field::Complex);
            const MultiplierOperator mult = build_multiplier(m, inst.f, inst.g);
            const Op adj = multiplier_adjoint(mult, inst.f, inst.g);
            const MultiplierOperator cross = build_multiplier(m.conjugated(), inst.g, inst.f);
            CHECK((adj.entries - cross.M.entries).cwiseAbs().maxCoeff() <= 1e-13);
        }
    }
}

TEST_CASE("user-supplied Bessel bounds loosen the guarantee but stay valid") {
    const BiframePair basis = fixtures::parseval_pair(3);
    SymbolFunction m(basis.F.atom_space(), {Scalar(2, 0), Scalar(3, 0), Scalar(4, 0)});
    const MultiplierOperator tight = build_multiplier(m, basis.F, basis.G);
    const MultiplierOperator loose = build_multiplier(m, basis.F, basis.G, 2.0, 8.0);
    CHECK(loose.bessel_f == 2.0);
    CHECK(loose.bessel_g == 8.0);
    CHECK(loose.norm_bound == doctest::Approx(4.0 * 4.0).epsilon(1e-12));
    CHECK(loose.actual_norm == doctest::Approx(tight.actual_norm));
}

TEST_CASE("norm bound holds on random instances") {
    oracle::Rng rng(43);
    for (int it = 0; it < 100; ++it) {
        const Field field = it % 2 ? Field::Complex : Field::Real;
        const int dim = 2 + static_cast<int>(rng() % 3);
        const RandomInstance inst = random_families(rng, dim, dim + 3, field);
        const MultiplierOperator mult =
            build_multiplier(random_symbol(rng, inst.mu, field), inst.f, inst.g);
        CHECK(mult.actual_norm <= mult.norm_bound + 1e-9);
    }
}

TEST_CASE("linearity in the symbol") {
    oracle::Rng rng(44);
    for (int it = 0; it < 30; ++it) {
        const Field field = it % 2 ? Field::Complex : Field::Real;
        const int dim = 2 + static_cast<int>(rng() % 3);
        const RandomInstance inst = random_families(rng, dim, dim + 2, field);
        const SymbolFunction m1 = random_symbol(rng, inst.mu, field);
        const SymbolFunction m2 = random_symbol(rng, inst.mu, field);
        const Scalar a = oracle::random_scalar(rng, field);
        const Scalar b = oracle::random_scalar(rng, field);

        std::vector<Scalar> mixed(inst.mu->size());
        for (std::size_t k = 0; k < mixed.size(); ++k)
            mixed[k] = a * m1.value(k) + b * m2.value(k);

        const Matrix lhs =
            build_multiplier(SymbolFunction(inst.mu, mixed), inst.f, inst.g).M.entries;
        const Matrix rhs = a * build_multiplier(m1, inst.f, inst.g).M.entries +
                           b * build_multiplier(m2, inst.f, inst.g).M.entries;
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-13);
    }
}

TEST_CASE("lower bound certificate") {
    SUBCASE("identity multiplier") {
        const BiframePair basis = fixtures::parseval_pair(3);
        const MultiplierOperator mult = build_multiplier(unit_symbol(basis.F.atom_space()),
                                                         basis.F, basis.G);
        const LowerBoundCertificate cert = lower_bound_certificate(mult, basis.F, basis.G);
        CHECK(cert.injectivity == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(cert.implied_lower == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(cert.actual_lower == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(cert.holds);
    }

    SUBCASE("skew pair with unit symbol") {
        const BiframePair pair = fixtures::skew_pair();
        const MultiplierOperator mult = build_multiplier(unit_symbol(pair.F.atom_space()),
                                                         pair.F, pair.G);
        const LowerBoundCertificate cert = lower_bound_certificate(mult, pair.F, pair.G);
        oracle::Rng rng(45);
        const double d_oracle =
            std::sqrt(std::max(0.0, oracle::power_iteration_extremes(
                                        Matrix(mult.M.entries.adjoint() * mult.M.entries), rng)
                                        .first));
        CHECK(std::abs(cert.injectivity - d_oracle) <= 1e-6);
        CHECK(cert.holds);
    }

    SUBCASE("zero symbol degenerates gracefully") {
        const BiframePair basis = fixtures::parseval_pair(3);
        SymbolFunction zero(basis.F.atom_space(), std::vector<Scalar>(3, Scalar(0, 0)));
        const MultiplierOperator mult = build_multiplier(zero, basis.F, basis.G);
        const LowerBoundCertificate cert = lower_bound_certificate(mult, basis.F, basis.G);
        CHECK(cert.injectivity == 0.0);
        CHECK(cert.implied_lower == 0.0);
        CHECK(cert.holds);
    }

    SUBCASE("soundness on random instances") {
        oracle::Rng rng(46);
        for (int it = 0; it < 100; ++it) {
            const Field field = it % 2 ? Field::Complex : Field::Real;
            const int dim = 2 + static_cast<int>(rng() % 3);
            const RandomInstance inst = random_families(rng, dim, dim + 2, field);
            const MultiplierOperator mult =
                build_multiplier(random_symbol(rng, inst.mu, field), inst.f, inst.g);
            const LowerBoundCertificate cert = lower_bound_certificate(mult, inst.f, inst.g);
            CHECK(cert.implied_lower <= cert.actual_lower + 1e-9);
        }
    }
}

TEST_CASE("perturbation certificate") {
    const BiframePair basis = fixtures::parseval_pair(3);

    SUBCASE("identity multiplier at lambda = 0") {
        const MultiplierOperator mult = build_multiplier(unit_symbol(basis.F.atom_space()),
                                                         basis.F, basis.G);
        const PerturbationCertificate cert =
            perturbation_certificate(mult, basis.F, basis.G, 0.0, 0.0);
        CHECK(cert.hypothesis_ok);
        CHECK(cert.implied_lower_ff == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(cert.actual_lower_ff == doctest::Approx(1.0).epsilon(1e-14));
        REQUIRE(cert.implied_lower_gg.has_value());
        CHECK(*cert.implied_lower_gg == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(cert.holds);
    }

    SUBCASE("diagonal perturbation within lambda = 0.1") {
        SymbolFunction m(basis.F.atom_space(), {Scalar(0.9, 0), Scalar(1.0, 0), Scalar(1.1, 0)});
        const MultiplierOperator mult = build_multiplier(m, basis.F, basis.G);
        const PerturbationCertificate cert =
            perturbation_certificate(mult, basis.F, basis.G, 0.1, 0.0);
        CHECK(cert.hypothesis_ok);
        // (1-0.1)^2 / (1.1^2 * 1 * 1)
        CHECK(cert.implied_lower_ff == doctest::Approx(0.81 / 1.21).epsilon(1e-12));
        CHECK(cert.actual_lower_ff == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(cert.holds);
    }

    SUBCASE("hypothesis rejection is a verdict, not an exception") {
        SymbolFunction m(basis.F.atom_space(), {Scalar(0.5, 0), Scalar(1.0, 0), Scalar(1.0, 0)});
        const MultiplierOperator mult = build_multiplier(m, basis.F, basis.G);
        const PerturbationCertificate cert =
            perturbation_certificate(mult, basis.F, basis.G, 0.1, 0.0);
        CHECK_FALSE(cert.hypothesis_ok);
        CHECK_FALSE(cert.holds);
    }

    SUBCASE("preconditions") {
        const MultiplierOperator mult = build_multiplier(unit_symbol(basis.F.atom_space()),
                                                         basis.F, basis.G);
        CHECK_THROWS_AS(perturbation_certificate(mult, basis.F, basis.G, 1.5, 0.0),
                        InvalidArgument);
        CHECK_THROWS_AS(perturbation_certificate(mult, basis.F, basis.G, 0.0, -1.0),
                        InvalidArgument);
    }

    SUBCASE("negative lambda2 uses the operator norm, staying sound") {
        SymbolFunction m(basis.F.atom_space(), {Scalar(0.95, 0), Scalar(1.0, 0), Scalar(1.05, 0)});
        const MultiplierOperator mult = build_multiplier(m, basis.F, basis.G);
        // ||I - M|| = 0.05; budget must use ||M|| = 1.05 for lambda2 < 0:
        // 0.2 - 0.1 * 1.05 = 0.095 >= 0.05.
        const PerturbationCertificate cert =
            perturbation_certificate(mult, basis.F, basis.G, 0.2, -0.1);
        CHECK(cert.hypothesis_ok);
        CHECK(cert.holds);

        // At lambda1 = 0.15 the sigma_min relaxation would certify, yet the
        // pointwise hypothesis fails at e3: 0.05 > 0.15 - 0.1*1.05.
        const PerturbationCertificate tight =
            perturbation_certificate(mult, basis.F, basis.G, 0.15, -0.1);
        CHECK_FALSE(tight.hypothesis_ok);
    }
}

TEST_CASE("multiplier dual") {
    SUBCASE("identity multiplier returns the original pair") {
        const BiframePair basis = fixtures::parseval_pair(3);
        const SymbolFunction m = unit_symbol(basis.F.atom_space());
        const MultiplierOperator mult = build_multiplier(m, basis.F, basis.G);
        const BiframePair dual = multiplier_dual(mult, m, basis.F, basis.G);
        CHECK((dual.F.columns() - basis.F.columns()).cwiseAbs().maxCoeff() <= 1e-15);
        CHECK(duality_residual(dual) <= 1e-14);
    }

    SUBCASE("unit symbol on the skew pair applies the adjoint inverse") {
        const BiframePair pair = fixtures::skew_pair();
        const SymbolFunction m = unit_symbol(pair.F.atom_space());
        const MultiplierOperator mult = build_multiplier(m, pair.F, pair.G);
        const BiframePair dual = multiplier_dual(mult, m, pair.F, pair.G);
        const Matrix expected = fixtures::skew_pair_inverse().adjoint() * pair.F.columns();
        CHECK((dual.F.columns() - expected).cwiseAbs().maxCoeff() <= 1e-13);
        CHECK(duality_residual(dual) <= 1e-12);
    }

    SUBCASE("random symbols bounded away from zero") {
        oracle::Rng rng(47);
        for (int it = 0; it < 50; ++it) {
            const Field field = it % 2 ? Field::Complex : Field::Real;
            const int dim = 2 + static_cast<int>(rng() % 3);
            const int atoms = dim + 2;
            std::vector<Atom> raw;
            for (int k = 0; k < atoms; ++k)
                raw.push_back({std::to_string(k), oracle::uniform(rng, 0.5, 2.0)});
            auto mu = std::make_shared<const AtomSpace>(std::move(raw));
            const Space s{dim, field};
            Matrix cols = oracle::random_matrix(rng, dim, atoms, field);
            cols.leftCols(dim) = Matrix::Identity(dim, dim);
            VectorFamily fam(mu, s, cols);

            std::vector<Scalar> values;
            for (int k = 0; k < atoms; ++k) {
                const double mod = oracle::uniform(rng, 0.5, 1.5);
                const double arg =
                    field == Field::Real ? 0.0 : oracle::uniform(rng, 0.0, 6.28318);
                values.push_back(Scalar(mod * std::cos(arg), mod * std::sin(arg)));
            }
            const SymbolFunction m(mu, std::move(values));
            const MultiplierOperator mult = build_multiplier(m, fam, fam);
            const BiframePair dual = multiplier_dual(mult, m, fam, fam);
            CHECK(duality_residual(dual) <= 1e-9);
        }
    }

    SUBCASE("singular multiplier is rejected") {
        const BiframePair basis = fixtures::parseval_pair(2);
        SymbolFunction zero(basis.F.atom_space(), std::vector<Scalar>(2, Scalar(0, 0)));
        const MultiplierOperator mult = build_multiplier(zero, basis.F, basis.G);
        CHECK_THROWS_AS(multiplier_dual(mult, zero, basis.F, basis.G), SingularOperator);
    }
}

TEST_CASE("shape validation") {
    const BiframePair basis3 = fixtures::parseval_pair(3);
    const BiframePair basis2 = fixtures::parseval_pair(2);
    CHECK_THROWS_AS(build_multiplier(unit_symbol(basis2.F.atom_space()), basis3.F, basis3.G),
                    ShapeError);
    CHECK_THROWS_AS(build_multiplier(unit_symbol(basis3.F.atom_space()), basis3.F, basis2.G),
                    ShapeError);
    CHECK_THROWS_AS(SymbolFunction(basis3.F.atom_space(), std::vector<Scalar>(2, Scalar(1, 0))),
                    ShapeError);

    // Complex symbol over a real space.
    SymbolFunction cm(basis3.F.atom_space(),
                      {Scalar(0, 1), Scalar(1, 0), Scalar(1, 0)});
    CHECK_THROWS_AS(build_multiplier(cm, basis3.F, basis3.G), ShapeError);
}
