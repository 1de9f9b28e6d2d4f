#include "papso/gsuite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace papso {

namespace {

using std::nullopt;
using Span = std::span<const double>;
using Out = std::span<double>;

double sq(double v) { return v * v; }
double cube(double v) { return v * v * v; }

// Single constraint for l <= u <= h.
double interval(double u, double l, double h) { return std::max(l - u, u - h); }

BenchmarkProblem g01() {
  Problem p;
  p.name = "g01";
  p.lower.assign(13, 0.0);
  p.upper = {1, 1, 1, 1, 1, 1, 1, 1, 1, 100, 100, 100, 1};
  p.n_inequality = 9;
  p.objective = [](Span x) {
    double f = 0.0;
    for (int i = 0; i < 4; ++i) f += 5.0 * x[i] - 5.0 * x[i] * x[i];
    for (int i = 4; i < 13; ++i) f -= x[i];
    return f;
  };
  p.constraints = [](Span x, Out g) {
    g[0] = 2 * x[0] + 2 * x[1] + x[9] + x[10] - 10;
    g[1] = 2 * x[0] + 2 * x[2] + x[9] + x[11] - 10;
    g[2] = 2 * x[1] + 2 * x[2] + x[10] + x[11] - 10;
    g[3] = -8 * x[0] + x[9];
    g[4] = -8 * x[1] + x[10];
    g[5] = -8 * x[2] + x[11];
    g[6] = -2 * x[3] - x[4] + x[9];
    g[7] = -2 * x[5] - x[6] + x[10];
    g[8] = -2 * x[7] - x[8] + x[11];
  };
  p.known_optimum = -15.0;
  p.reference_point = {1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 1};
  return {std::move(p), {"g01", -15.0, 13, 9, 0, 0.0003, 0.0003, 23.4617, 89.92, nullopt}};
}

BenchmarkProblem g02() {
  Problem p;
  p.name = "g02";
  p.lower.assign(20, 0.0);
  p.upper.assign(20, 10.0);
  p.n_inequality = 2;
  p.objective = [](Span x) {
    double s4 = 0.0;
    double prod = 1.0;
    double weighted = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double c2 = sq(std::cos(x[i]));
      s4 += c2 * c2;
      prod *= c2;
      weighted += static_cast<double>(i + 1) * x[i] * x[i];
    }
    return -std::abs((s4 - 2.0 * prod) / std::sqrt(weighted));
  };
  p.constraints = [](Span x, Out g) {
    double prod = 1.0;
    double sum = 0.0;
    for (double v : x) {
      prod *= v;
      sum += v;
    }
    g[0] = 0.75 - prod;
    g[1] = sum - 7.5 * static_cast<double>(x.size());
  };
  p.known_optimum = -0.80361910412559;
  p.reference_point = {3.16246061572185,  3.12833142812967,  3.09479212988791,  3.06145059523469,
                       3.02792915885555,  2.99382606701730,  2.95866871765285,  2.92184227312450,
                       0.49482511456933,  0.48835711005490,  0.48231642711865,  0.47664475092742,
                       0.47129550835493,  0.46623099264167,  0.46142004984199,  0.45683664767217,
                       0.45245876903267,  0.44826762241853,  0.44424700958760,  0.44038285956317};
  return {std::move(p), {"g02", -0.803619, 20, 2, 0, 99.9971, 99.9971, 99.9971, 0.01, nullopt}};
}

BenchmarkProblem g03() {
  Problem p;
  p.name = "g03";
  p.lower.assign(10, 0.0);
  p.upper.assign(10, 1.0);
  p.n_equality = 1;
  p.objective = [](Span x) {
    const double n = static_cast<double>(x.size());
    double f = std::pow(std::sqrt(n), n);
    for (double v : x) f *= v;
    return -f;
  };
  p.constraints = [](Span x, Out g) {
    double s = 0.0;
    for (double v : x) s += v * v;
    g[0] = s - 1.0;
  };
  // The optimum at equality tolerance 1e-4 sits on sum x^2 = 1 + 1e-4.
  p.known_optimum = -1.000500100010;
  p.reference_point.assign(10, 0.31624357685176785);
  return {std::move(p), {"g03", -1.000500, 10, 0, 1, nullopt, 0.0002, 24.5335, nullopt, 1.66}};
}

BenchmarkProblem g04() {
  Problem p;
  p.name = "g04";
  p.lower = {78, 33, 27, 27, 27};
  p.upper = {102, 45, 45, 45, 45};
  p.n_inequality = 3;
  p.objective = [](Span x) {
    return 5.3578547 * x[2] * x[2] + 0.8356891 * x[0] * x[4] + 37.293239 * x[0] - 40792.141;
  };
  p.constraints = [](Span x, Out g) {
    const double u1 =
        85.334407 + 0.0056858 * x[1] * x[4] + 0.0006262 * x[0] * x[3] - 0.0022053 * x[2] * x[4];
    const double u2 =
        80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] + 0.0021813 * x[2] * x[2];
    const double u3 =
        9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] + 0.0019085 * x[2] * x[3];
    g[0] = interval(u1, 0.0, 92.0);
    g[1] = interval(u2, 90.0, 110.0);
    g[2] = interval(u3, 20.0, 25.0);
  };
  p.known_optimum = -30665.538671783317;
  p.reference_point = {78, 33, 29.9952560256815985, 45, 36.7758129057882073};
  return {std::move(p), {"g04", -30665.538672, 5, 3, 0, 26.9887, 26.9887, 30.2026, 0.11, nullopt}};
}

BenchmarkProblem g05() {
  Problem p;
  p.name = "g05";
  p.lower = {0, 0, -0.55, -0.55};
  p.upper = {1200, 1200, 0.55, 0.55};
  p.n_inequality = 1;
  p.n_equality = 3;
  p.objective = [](Span x) {
    return 3.0 * x[0] + 0.000001 * cube(x[0]) + 2.0 * x[1] + (0.000002 / 3.0) * cube(x[1]);
  };
  p.constraints = [](Span x, Out g) {
    g[0] = interval(x[3] - x[2], -0.55, 0.55);
    g[1] = 1000 * std::sin(-x[2] - 0.25) + 1000 * std::sin(-x[3] - 0.25) + 894.8 - x[0];
    g[2] = 1000 * std::sin(x[2] - 0.25) + 1000 * std::sin(x[2] - x[3] - 0.25) + 894.8 - x[1];
    g[3] = 1000 * std::sin(x[3] - 0.25) + 1000 * std::sin(x[3] - x[2] - 0.25) + 1294.8;
  };
  p.known_optimum = 5126.4967140071;
  p.reference_point = {679.945148297028709, 1026.06697600004691, 0.118876369094410433,
                       -0.396233485215178266};
  return {std::move(p), {"g05", 5126.496714, 4, 1, 3, nullopt, nullopt, 23.3053, 68.88, 688.79}};
}

BenchmarkProblem g06() {
  Problem p;
  p.name = "g06";
  p.lower = {13, 0};
  p.upper = {100, 100};
  p.n_inequality = 2;
  p.objective = [](Span x) { return cube(x[0] - 10) + cube(x[1] - 20); };
  p.constraints = [](Span x, Out g) {
    g[0] = -sq(x[0] - 5) - sq(x[1] - 5) + 100;
    g[1] = sq(x[0] - 6) + sq(x[1] - 5) - 82.81;
  };
  p.known_optimum = -6961.81387558015;
  p.reference_point = {14.09500000000000064, 0.8429607892154795668};
  return {std::move(p), {"g06", -6961.813876, 2, 2, 0, 0.0074, 0.0074, 24.3050, 2790.51, nullopt}};
}

BenchmarkProblem g07() {
  Problem p;
  p.name = "g07";
  p.lower.assign(10, -10.0);
  p.upper.assign(10, 10.0);
  p.n_inequality = 8;
  p.objective = [](Span x) {
    return sq(x[0]) + sq(x[1]) + x[0] * x[1] - 14 * x[0] - 16 * x[1] + sq(x[2] - 10) +
           4 * sq(x[3] - 5) + sq(x[4] - 3) + 2 * sq(x[5] - 1) + 5 * sq(x[6]) + 7 * sq(x[7] - 11) +
           2 * sq(x[8] - 10) + sq(x[9] - 7) + 45;
  };
  p.constraints = [](Span x, Out g) {
    g[0] = -105 + 4 * x[0] + 5 * x[1] - 3 * x[6] + 9 * x[7];
    g[1] = 10 * x[0] - 8 * x[1] - 17 * x[6] + 2 * x[7];
    g[2] = -8 * x[0] + 2 * x[1] + 5 * x[8] - 2 * x[9] - 12;
    g[3] = 3 * sq(x[0] - 2) + 4 * sq(x[1] - 3) + 2 * sq(x[2]) - 7 * x[3] - 120;
    g[4] = 5 * sq(x[0]) + 8 * x[1] + sq(x[2] - 6) - 2 * x[3] - 40;
    g[5] = sq(x[0]) + 2 * sq(x[1] - 2) - 2 * x[0] * x[1] + 14 * x[4] - 6 * x[5];
    g[6] = 0.5 * sq(x[0] - 8) + 2 * sq(x[1] - 4) + 3 * sq(x[4]) - x[5] - 30;
    g[7] = -3 * x[0] + 6 * x[1] + 12 * sq(x[8] - 8) - 7 * x[9];
  };
  p.known_optimum = 24.30620906818;
  p.reference_point = {2.17199634142692, 2.3636830416034,  8.77392573913157, 5.09598443745173,
                       0.990654756560493, 1.43057392853463, 1.32164415364306, 9.82872576524495,
                       8.2800915887356,  8.3759266477347};
  // Nudged clear of g1 and g3, which the rounded digits violate by ~1e-14.
  p.reference_point[7] -= 1e-13;
  p.reference_point[8] -= 1e-13;
  return {std::move(p), {"g07", 24.306209, 10, 8, 0, 0.0001, 0.0001, 23.8399, 383.89, nullopt}};
}

BenchmarkProblem g08() {
  Problem p;
  p.name = "g08";
  p.lower = {0, 0};
  p.upper = {10, 10};
  p.n_inequality = 2;
  p.objective = [](Span x) {
    const double two_pi = 2.0 * std::numbers::pi;
    return -cube(std::sin(two_pi * x[0])) * std::sin(two_pi * x[1]) /
           (cube(x[0]) * (x[0] + x[1]));
  };
  p.constraints = [](Span x, Out g) {
    g[0] = sq(x[0]) - x[1] + 1;
    g[1] = 1 - x[0] + sq(x[1] - 4);
  };
  p.known_optimum = -0.0958250414180359;
  p.reference_point = {1.22797135260752599, 4.24537336612274885};
  return {std::move(p), {"g08", -0.095825, 2, 2, 0, 0.8610, 0.8610, 23.4371, 9.88, nullopt}};
}

BenchmarkProblem g09() {
  Problem p;
  p.name = "g09";
  p.lower.assign(7, -10.0);
  p.upper.assign(7, 10.0);
  p.n_inequality = 4;
  p.objective = [](Span x) {
    return sq(x[0] - 10) + 5 * sq(x[1] - 12) + std::pow(x[2], 4) + 3 * sq(x[3] - 11) +
           10 * std::pow(x[4], 6) + 7 * sq(x[5]) + std::pow(x[6], 4) - 4 * x[5] * x[6] -
           10 * x[5] - 8 * x[6];
  };
  p.constraints = [](Span x, Out g) {
    g[0] = -127 + 2 * sq(x[0]) + 3 * std::pow(x[1], 4) + x[2] + 4 * sq(x[3]) + 5 * x[4];
    g[1] = -282 + 7 * x[0] + 3 * x[1] + 10 * sq(x[2]) + x[3] - x[4];
    g[2] = -196 + 23 * x[0] + sq(x[1]) + 6 * sq(x[5]) - 8 * x[6];
    g[3] = 4 * sq(x[0]) + sq(x[1]) - 3 * x[0] * x[1] + 2 * sq(x[2]) + 5 * x[5] - 11 * x[6];
  };
  p.known_optimum = 680.630057374402;
  p.reference_point = {2.33049935147405174, 1.95137236847114592, -0.477541399510615805,
                       4.36572624923625874, -0.624486959100388983, 1.03813099410962173,
                       1.5942266780671519};
  return {std::move(p), {"g09", 680.630057, 7, 4, 0, 0.5232, 0.5232, 24.0533, 421.13, nullopt}};
}

BenchmarkProblem g10() {
  Problem p;
  p.name = "g10";
  p.lower = {100, 1000, 1000, 10, 10, 10, 10, 10};
  p.upper = {10000, 10000, 10000, 1000, 1000, 1000, 1000, 1000};
  p.n_inequality = 6;
  p.objective = [](Span x) { return x[0] + x[1] + x[2]; };
  p.constraints = [](Span x, Out g) {
    g[0] = -1 + 0.0025 * (x[3] + x[5]);
    g[1] = -1 + 0.0025 * (x[4] + x[6] - x[3]);
    g[2] = -1 + 0.01 * (x[7] - x[4]);
    g[3] = -x[0] * x[5] + 833.33252 * x[3] + 100 * x[0] - 83333.333;
    g[4] = -x[1] * x[6] + 1250 * x[4] + x[1] * x[3] - 1250 * x[3];
    g[5] = -x[2] * x[7] + 1250000 + x[2] * x[4] - 2500 * x[4];
  };
  p.known_optimum = 7049.24802052867;
  p.reference_point = {579.306685017979589, 1359.97067807935605, 5109.97065743133317,
                       182.01769963061534,  295.601173702746792,  217.982300369384632,
                       286.41652592786852,  395.601173702746735};
  return {std::move(p), {"g10", 7049.248021, 8, 6, 0, 0.0005, 0.0005, 21.1715, 10.83, nullopt}};
}

BenchmarkProblem g11() {
  Problem p;
  p.name = "g11";
  p.lower = {-1, -1};
  p.upper = {1, 1};
  p.n_equality = 1;
  p.objective = [](Span x) { return sq(x[0]) + sq(x[1] - 1); };
  p.constraints = [](Span x, Out g) { g[0] = x[1] - sq(x[0]); };
  p.known_optimum = 0.7499;
  p.reference_point = {-0.707036070037170616, 0.500000004333606807};
  return {std::move(p), {"g11", 0.749900, 2, 0, 1, nullopt, 0.0108, 24.8914, nullopt, 0.26}};
}

BenchmarkProblem g12() {
  Problem p;
  p.name = "g12";
  p.lower.assign(3, 0.0);
  p.upper.assign(3, 10.0);
  p.n_inequality = 1;
  p.objective = [](Span x) {
    return -(100 - sq(x[0] - 5) - sq(x[1] - 5) - sq(x[2] - 5)) / 100;
  };
  // Membership in any of the 9^3 spheres of radius 0.25 centred on the
  // integer grid {1..9}^3. The minimum over centres separates per axis.
  p.constraints = [](Span x, Out g) {
    double d2 = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double c = std::clamp(std::round(x[i]), 1.0, 9.0);
      d2 += sq(x[i] - c);
    }
    g[0] = d2 - 0.0625;
  };
  p.known_optimum = -1.0;
  p.reference_point = {5, 5, 5};
  return {std::move(p), {"g12", -1.0, 3, 1, 0, 4.7713, 4.7713, 22.0256, 0.11, nullopt}};
}

BenchmarkProblem g13() {
  Problem p;
  p.name = "g13";
  p.lower = {-2.3, -2.3, -3.2, -3.2, -3.2};
  p.upper = {2.3, 2.3, 3.2, 3.2, 3.2};
  p.n_equality = 3;
  p.objective = [](Span x) { return std::exp(x[0] * x[1] * x[2] * x[3] * x[4]); };
  p.constraints = [](Span x, Out g) {
    g[0] = sq(x[0]) + sq(x[1]) + sq(x[2]) + sq(x[3]) + sq(x[4]) - 10;
    g[1] = x[1] * x[2] - 5 * x[3] * x[4];
    g[2] = cube(x[0]) + cube(x[1]) + 1;
  };
  p.known_optimum = 0.053941514041898;
  // Published optimum pulled 0.1% of the way towards h = 0 so that every
  // |h_j| is strictly inside the 1e-4 tolerance.
  p.reference_point = {-1.7171422413554152, 1.5957212289387201, 1.8272502361485619,
                       -0.76365986511715311, -0.76365985056926589};
  return {std::move(p), {"g13", 0.053942, 5, 0, 3, nullopt, nullopt, 22.8845, nullopt, 6.63}};
}

}  // namespace

const std::vector<std::string>& benchmark_names() {
  static const std::vector<std::string> names = {"g01", "g02", "g03", "g04", "g05", "g06", "g07",
                                                 "g08", "g09", "g10", "g11", "g12", "g13"};
  return names;
}

BenchmarkProblem get_problem(const std::string& name) {
  using Factory = BenchmarkProblem (*)();
  static const Factory factories[] = {g01, g02, g03, g04, g05, g06, g07,
                                      g08, g09, g10, g11, g12, g13};
  const auto& names = benchmark_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return factories[i]();
  }
  std::string valid;
  for (const auto& n : names) valid += (valid.empty() ? "" : ", ") + n;
  throw std::out_of_range("unknown problem '" + name + "'; valid names: " + valid);
}

std::vector<BenchmarkProblem> all_problems() {
  std::vector<BenchmarkProblem> out;
  for (const auto& n : benchmark_names()) out.push_back(get_problem(n));
  return out;
}

}  // namespace papso
