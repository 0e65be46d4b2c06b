#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "qdc/numerics.hpp"
#include "qdc/qdot.hpp"

using qdc::QDotParams;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846264338327950288;

QDotParams dot(double fss_uev) {
  QDotParams qd;
  qd.fss_uev = fss_uev;
  return qd;
}

}  // namespace

TEST_CASE("amplitude peak and half-width follow from the lifetime") {
  const QDotParams qd = dot(0.0);
  // peak value sqrt(2 tau / pi) at line centre, tau = 0.77 ns
  CHECK(qdc::amplitude_h(0.0, qd) ==
        doctest::Approx(2.2140398025397774e-5).epsilon(1e-12));
  // at one half-width the squared modulus halves
  const double g = qd.half_width();
  CHECK(qdc::amplitude_h(g, qd) ==
        doctest::Approx(qdc::amplitude_h(0.0, qd) / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(g == doctest::Approx(649350649.35064935).epsilon(1e-15));
}

TEST_CASE("the V amplitude is the H amplitude shifted by the splitting") {
  const QDotParams qd = dot(2.5);
  const double delta = qd.splitting();
  CHECK(qdc::amplitude_v(delta, qd) == qdc::amplitude_h(0.0, qd));
  for (double w : {-3e9, -1e8, 0.0, 5e8, 2.2e9}) {
    CHECK(qdc::amplitude_v(delta + w, qd) ==
          doctest::Approx(qdc::amplitude_h(w, qd)).epsilon(1e-14));
  }
}

TEST_CASE("amplitudes are square-normalized") {
  for (double s : {0.0, 2.5}) {
    const QDotParams qd = dot(s);
    auto prob_h = [&](double w) {
      const double a = qdc::amplitude_h(w, qd);
      return a * a;
    };
    auto r = qdc::integrate_real(prob_h, {-kInf, kInf, qd.half_width()});
    CHECK(r.converged);
    CHECK(std::fabs(r.value - 1.0) <= 1e-8);

    auto prob_v = [&](double w) {
      const double a = qdc::amplitude_v(w, qd);
      return a * a;
    };
    auto rv = qdc::integrate_real(prob_v, {-kInf, kInf, qd.half_width()});
    CHECK(std::fabs(rv.value - 1.0) <= 1e-8);
  }
}

TEST_CASE("phase difference vanishes without splitting") {
  const QDotParams qd = dot(0.0);
  for (double w : {-5e9, -1e8, 0.0, 3e8, 7e9}) {
    CHECK(std::fabs(qdc::phase_diff(w, qd)) <= 1e-15);
  }
}

TEST_CASE("phase difference peaks midway between the lines") {
  const QDotParams qd = dot(2.5);
  const double delta = qd.splitting();
  const double x = qd.fss_uev * qdc::consts::microelectronvolt * qd.tau /
                   qdc::consts::hbar;
  CHECK(x == doctest::Approx(2.9245898389583078).epsilon(1e-15));
  CHECK(qdc::phase_diff(0.5 * delta, qd) ==
        doctest::Approx(2.4826607195499905).epsilon(1e-12));
  CHECK(qdc::phase_diff(0.5 * delta, qd) ==
        doctest::Approx(2.0 * std::atan(x)).epsilon(1e-14));
  // symmetric about the midpoint
  for (double y : {1e8, 6.5e8, 3e9, 4e10}) {
    CHECK(qdc::phase_diff(0.5 * delta + y, qd) ==
          doctest::Approx(qdc::phase_diff(0.5 * delta - y, qd)).epsilon(1e-12));
  }
  // and is the sum of the two path phases
  for (double w : {-2e9, 1e8, 3.1e9}) {
    CHECK(qdc::phase_diff(w, qd) ==
          doctest::Approx(qdc::phase_v(w, qd) - qdc::phase_h(w, qd)).epsilon(1e-14));
  }
}

TEST_CASE("a huge splitting drives the peak phase toward pi") {
  const QDotParams qd = dot(2500.0);  // 2.5 meV
  CHECK(qdc::phase_diff(0.5 * qd.splitting(), qd) > 3.14);
  CHECK(qdc::phase_diff(0.5 * qd.splitting(), qd) < kPi);
}

TEST_CASE("phase difference stays inside (0, pi) across the spectrum") {
  const QDotParams qd = dot(2.5);
  const double g = qd.half_width();
  for (int i = 0; i <= 10000; ++i) {
    // uniform sweep of +-1000 half-widths around the H line
    const double w = (-1000.0 + 0.2 * i) * g;
    const double phi = qdc::phase_diff(w, qd);
    CHECK(phi > 0.0);
    CHECK(phi < kPi);
  }
}

TEST_CASE("closed-form overlap values") {
  {
    const std::complex<double> a = qdc::alpha_closed_form(dot(2.5));
    CHECK(a.real() == doctest::Approx(0.10467668499279169).epsilon(1e-14));
    CHECK(a.imag() == doctest::Approx(0.30613636930575817).epsilon(1e-14));
    CHECK(std::abs(a) == doctest::Approx(0.32353776439975549).epsilon(1e-14));
  }
  {
    const std::complex<double> a = qdc::alpha_closed_form(dot(2.0));
    CHECK(a.real() == doctest::Approx(0.15446247182865309).epsilon(1e-14));
    CHECK(a.imag() == doctest::Approx(0.36139150048837014).epsilon(1e-14));
    CHECK(0.5 * (1.0 + a.real()) ==
          doctest::Approx(0.57723123591432654).epsilon(1e-14));
  }
  CHECK(qdc::alpha_closed_form(dot(0.0)) == std::complex<double>(1.0, 0.0));
}

TEST_CASE("overlap magnitude decreases with splitting toward 1/2 fidelity") {
  double prev = 1.0;
  for (double s : {0.5, 1.0, 2.0, 4.0, 8.0, 50.0}) {
    const double f = 0.5 * (1.0 + qdc::alpha_closed_form(dot(s)).real());
    CHECK(f < prev);
    CHECK(f >= 0.5);
    prev = f;
  }
  CHECK(0.5 * (1.0 + qdc::alpha_closed_form(dot(1e4)).real()) ==
        doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("parameter validation") {
  QDotParams qd;
  qd.tau = 0.0;
  CHECK_THROWS_AS(qd.validate(), std::invalid_argument);
  qd = QDotParams{};
  qd.fss_uev = -1.0;
  CHECK_THROWS_AS(qd.validate(), std::invalid_argument);
  qd = QDotParams{};
  qd.omega0 = 0.0;
  CHECK_THROWS_AS(qd.validate(), std::invalid_argument);
  CHECK_NOTHROW(QDotParams{}.validate());
}
