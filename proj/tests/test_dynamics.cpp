#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cmrep/dynamics/lindblad.hpp"
#include "cmrep/error.hpp"
#include "cmrep/qcore/eig.hpp"
#include "cmrep/qcore/metrics.hpp"
#include "oracles.hpp"

using namespace cmrep;
using namespace cmrep::dynamics;
using qcore::Complex;
using qcore::ComplexMatrix;

namespace {

constexpr double kPi = std::numbers::pi;

// Fock index of |n_m, n_c> with magnon first.
std::size_t idx(const LindbladParams& p, std::size_t nm, std::size_t nc) { return nm * p.dim_c + nc; }

std::vector<oracle::CMat> jumps_of(const LindbladParams& p) {
    std::vector<oracle::CMat> out;
    for (const auto& l : collapse_operators(p)) out.push_back(oracle::to_eigen(l.op));
    return out;
}

}  // namespace

TEST_CASE("coupling_strength scaling and inversion") {
    MaterialParams mp;
    mp.total_spin = 1e15;
    mp.cavity_mode_volume = 1e-7;
    const double g = coupling_strength(mp);

    MaterialParams doubled = mp;
    doubled.total_spin *= 2;
    CHECK(coupling_strength(doubled) == doctest::Approx(g * std::sqrt(2.0)).epsilon(1e-12));

    MaterialParams quad = mp;
    quad.cavity_mode_volume *= 4;
    CHECK(coupling_strength(quad) == doctest::Approx(g / 2).epsilon(1e-12));

    // Solve for the spin count that gives g / 2pi = 130 MHz and feed it back.
    const double target = angular(130e6);
    MaterialParams tuned = mp;
    tuned.total_spin = 2.0 * tuned.cavity_mode_volume * std::pow(target / tuned.gyromagnetic_ratio, 2) /
                       (kHbar * tuned.omega_c * tuned.vacuum_permeability);
    CHECK(coupling_strength(tuned) == doctest::Approx(target).epsilon(1e-12));

    MaterialParams bad = mp;
    bad.cavity_mode_volume = 0.0;
    CHECK_THROWS_AS(coupling_strength(bad), RangeError);
    bad = mp;
    bad.total_spin = -1.0;
    CHECK_THROWS_AS(coupling_strength(bad), RangeError);
}

TEST_CASE("LindbladParams defaults and flags") {
    const LindbladParams p;
    CHECK(p.g_mc == doctest::Approx(2 * kPi * 130e6));
    CHECK(p.strongly_coupled());
    LindbladParams weak = p;
    weak.g_mc = angular(0.5e6);
    CHECK_FALSE(weak.strongly_coupled());
    LindbladParams neg = p;
    neg.kappa_d = -1.0;
    CHECK_THROWS_AS(neg.validate(), RangeError);
}

TEST_CASE("full Hamiltonian") {
    LindbladParams p;
    p.omega_m = angular(9e9);
    SUBCASE("zero coupling is the diagonal of bare energies") {
        p.g_mc = 0.0;
        const auto h = build_full_hamiltonian(p);
        for (std::size_t nm = 0; nm < 2; ++nm)
            for (std::size_t nc = 0; nc < 2; ++nc)
                CHECK(h(idx(p, nm, nc), idx(p, nm, nc)).real() ==
                      doctest::Approx(p.omega_m * nm + p.omega_c * nc));
        CHECK(h.approx_equal(ComplexMatrix::diagonal(std::vector<Complex>{h(0, 0), h(1, 1), h(2, 2), h(3, 3)}), 0.0));
    }
    SUBCASE("exchange element and exact Hermiticity") {
        const auto h = build_full_hamiltonian(p);
        CHECK(h(idx(p, 0, 1), idx(p, 1, 0)).real() == doctest::Approx(p.g_mc));
        CHECK(h == h.adjoint());
    }
}

TEST_CASE("RWA Hamiltonian") {
    const LindbladParams p;
    const auto h = build_rwa_hamiltonian(p);
    std::vector<Complex> ket(4);
    ket[idx(p, 0, 1)] = 1.0;
    const auto out = h.apply(ket);
    CHECK(std::abs(out[idx(p, 1, 0)] - Complex(p.g_mc)) < 1e-6);
    CHECK(std::abs(out[idx(p, 0, 1)]) == 0.0);

    std::vector<Complex> vac(4);
    vac[idx(p, 0, 0)] = 1.0;
    CHECK(ComplexMatrix(4, 1, h.apply(vac)).max_abs() == 0.0);

    for (std::size_t dim : {2u, 3u, 4u}) {
        LindbladParams q = p;
        q.dim_c = q.dim_m = dim;
        const auto hq = build_rwa_hamiltonian(q);
        const auto n = excitation_number(q);
        CHECK(qcore::commutator(hq, n).max_abs() <= 1e-12 * q.g_mc);
        // Entries only connect equal excitation numbers.
        for (std::size_t r = 0; r < hq.rows(); ++r)
            for (std::size_t c = 0; c < hq.cols(); ++c)
                if (n(r, r) != n(c, c)) CHECK(hq(r, c) == Complex(0.0));
    }
}

TEST_CASE("collapse operators") {
    LindbladParams p;
    const auto ls = collapse_operators(p);
    REQUIRE(ls.size() == 4);

    std::vector<Complex> one_c(4);
    one_c[idx(p, 0, 1)] = 1.0;
    const auto out = ls[0].op.apply(one_c);
    CHECK(std::abs(out[idx(p, 0, 0)] - Complex(std::sqrt(p.kappa_d))) < 1e-9);

    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            if (r != c) CHECK(ls[2].op(r, c) == Complex(0.0));

    const auto zero = collapse_operators(p.ideal());
    for (const auto& l : zero) CHECK(l.op.max_abs() == 0.0);
}

TEST_CASE("lindblad_rhs fixed points") {
    LindbladParams p;
    const auto vac = qcore::DensityMatrix::basis(node_space(p), {0, 0});
    const std::vector<CollapseOperator> decay{collapse_operators(p)[0], collapse_operators(p)[1]};
    CHECK(lindblad_rhs(vac, ComplexMatrix(4, 4), decay).max_abs() == 0.0);

    const auto mixed = qcore::DensityMatrix::maximally_mixed(node_space(p));
    const std::vector<CollapseOperator> dephase{collapse_operators(p)[2], collapse_operators(p)[3]};
    CHECK(lindblad_rhs(mixed, ComplexMatrix(4, 4), dephase).max_abs() < 1e-6);

    CHECK_THROWS_AS(lindblad_rhs(ComplexMatrix::identity(3), ComplexMatrix(4, 4), dephase), ShapeError);
}

TEST_CASE("lindblad_rhs is traceless and matches the folded generator") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 4;
        const auto rho = oracle::from_eigen(oracle::random_density(dim, rng));
        const auto h = oracle::from_eigen(oracle::random_hermitian(dim, rng));
        std::vector<CollapseOperator> ls;
        for (int k = 0; k < 3; ++k) {
            oracle::CMat g = oracle::random_hermitian(dim, rng) + oracle::cd(0, 1) * oracle::random_hermitian(dim, rng);
            ls.push_back({"random", oracle::from_eigen(g), u(rng)});
        }
        const auto out = lindblad_rhs(rho, h, ls);
        CHECK(std::abs(out.trace()) < 1e-10);
        CHECK(out.hermiticity_error() < 1e-10);
        CHECK(LindbladGenerator(h, ls)(rho).approx_equal(out, 1e-10));
    }
}

TEST_CASE("evolve: ideal limit produces the target Bell state") {
    const auto p = LindbladParams{}.ideal();
    const auto rho0 = qcore::DensityMatrix::basis(node_space(p), {0, 1});
    const double t = kPi / (4 * p.g_mc);
    const auto trace = evolve(rho0, p, t, default_time_step(p), 10);
    CHECK(qcore::overlap_fidelity(trace.final_state, bell_pair_target(p)) > 0.999);

    const auto n = excitation_number(p);
    for (const auto& s : trace.states) CHECK(std::abs((n * s.matrix()).trace().real() - 1.0) < 1e-8);
}

TEST_CASE("evolve: Rabi period of the excitation exchange") {
    const auto p = LindbladParams{}.ideal();
    const auto rho0 = qcore::DensityMatrix::basis(node_space(p), {0, 1});
    const auto trace = evolve(rho0, p, kPi / p.g_mc, default_time_step(p), 1000);
    CHECK(std::abs(trace.final_state.populations()[idx(p, 0, 1)] - 1.0) < 1e-4);
}

TEST_CASE("evolve: frozen dynamics stay constant") {
    LindbladParams p = LindbladParams{}.ideal();
    p.g_mc = 0.0;
    const auto rho0 = qcore::DensityMatrix::from_ket(node_space(p), bell_pair_target(LindbladParams{}));
    const auto trace = evolve(rho0, p, 1e-9, 1e-11, 7);
    for (const auto& s : trace.states) CHECK(s.matrix().approx_equal(rho0.matrix(), 1e-15));
}

TEST_CASE("evolve: argument and numerical errors") {
    const LindbladParams p;
    const auto rho0 = qcore::DensityMatrix::basis(node_space(p), {0, 1});
    CHECK_THROWS_AS(evolve(rho0, p, 1e-9, 0.0, 1), RangeError);
    CHECK_THROWS_AS(evolve(rho0, p, 1e-12, 1e-11, 1), RangeError);
    CHECK_THROWS_AS(evolve(rho0, p, 1e-9, 1e-11, 0), RangeError);
    // Far outside the RK4 stability region the state leaves the PSD cone.
    CHECK_THROWS_AS(evolve(rho0, p, 200.0 / p.g_mc, 4.0 / p.g_mc, 1), IntegrationError);
}

TEST_CASE("evolve: recorded steps keep every density-matrix invariant") {
    const LindbladParams p;
    const auto trace = pair_generation_trace(p, 120);
    REQUIRE(trace.times.size() == trace.states.size());
    REQUIRE(trace.times.size() == trace.concurrences.size());
    REQUIRE(trace.times.size() == trace.populations.size());
    for (std::size_t k = 1; k < trace.times.size(); ++k) CHECK(trace.times[k] > trace.times[k - 1]);
    for (const auto& s : trace.states) {
        CHECK(std::abs(s.matrix().trace() - Complex(1.0)) <= 1e-6);
        CHECK(s.matrix().hermiticity_error() <= 1e-8);
        CHECK(qcore::hermitian_eigenvalues(s.matrix()).back() >= -1e-7);
    }
    CHECK(trace.times.back() == doctest::Approx(3 * kPi / (4 * p.g_mc)));
}

TEST_CASE("evolve agrees with the Liouvillian propagator oracle") {
    for (auto model : {HamiltonianModel::rwa, HamiltonianModel::full}) {
        LindbladParams p;
        p.omega_m = angular(10.05e9);  // slight detuning exercises the frame term
        const auto rho0 = qcore::DensityMatrix::basis(node_space(p), {0, 1});
        const double t = bell_pair_time(p);
        const auto trace = evolve(rho0, p, t, default_time_step(p, model), 1u << 30, {model});
        const auto expected = oracle::liouvillian_propagate(oracle::to_eigen(frame_hamiltonian(p, model)),
                                                            jumps_of(p), oracle::to_eigen(rho0.matrix()), t);
        CHECK(trace.final_state.matrix().approx_equal(oracle::from_eigen(expected), 1e-8));
    }
}

TEST_CASE("evolve converges under step halving") {
    const LindbladParams p;
    const auto rho0 = qcore::DensityMatrix::basis(node_space(p), {0, 1});
    const double t = bell_pair_time(p);
    const double dt = default_time_step(p);
    const auto target = bell_pair_target(p);
    const double f1 = qcore::overlap_fidelity(evolve(rho0, p, t, dt, 1u << 30).final_state, target);
    const double f2 = qcore::overlap_fidelity(evolve(rho0, p, t, dt / 2, 1u << 30).final_state, target);
    CHECK(std::abs(f1 - f2) < 1e-6);
}

TEST_CASE("generate_bell_pair") {
    SUBCASE("ideal limit") {
        const auto pair = generate_bell_pair(LindbladParams{}.ideal());
        CHECK(pair.fidelity >= 0.999);
    }
    SUBCASE("dissipative node matches the oracle and keeps populations near 1/2") {
        const LindbladParams p;
        const auto pair = generate_bell_pair(p);
        const auto rho0 = qcore::DensityMatrix::basis(node_space(p), {0, 1});
        const auto expected = oracle::liouvillian_propagate(oracle::to_eigen(build_rwa_hamiltonian(p)), jumps_of(p),
                                                            oracle::to_eigen(rho0.matrix()), bell_pair_time(p));
        CHECK(pair.state.matrix().approx_equal(oracle::from_eigen(expected), 1e-8));
        const auto pops = pair.state.populations();
        CHECK(pops[idx(p, 0, 1)] >= 0.46);
        CHECK(pops[idx(p, 0, 1)] <= 0.50);
        CHECK(pops[idx(p, 1, 0)] >= 0.46);
        CHECK(pops[idx(p, 1, 0)] <= 0.50);
        CHECK(pair.fidelity < 1.0);
    }
    SUBCASE("full Hamiltonian and RWA agree at g/omega ~ 0.013") {
        const LindbladParams p;
        const auto rwa = generate_bell_pair(p, {HamiltonianModel::rwa});
        const auto full = generate_bell_pair(p, {HamiltonianModel::full});
        CHECK(std::abs(rwa.fidelity - full.fidelity) < 0.01);
    }
}

TEST_CASE("concurrence is absent for larger truncations") {
    LindbladParams p;
    p.dim_c = 3;
    const auto trace = pair_generation_trace(p, 10);
    for (const auto& c : trace.concurrences) CHECK_FALSE(c.has_value());
    CHECK(trace.populations.front().size() == 6);
}
