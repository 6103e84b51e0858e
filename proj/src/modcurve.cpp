#include "qmod/modcurve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qmod::modcurve {

namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<long> divisors(long n) {
  std::vector<long> ds;
  for (long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  std::sort(ds.begin(), ds.end());
  return ds;
}

long euler_phi(long n) {
  long r = n;
  for (long p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

// Legendre-style symbols entering the elliptic-point counts, with the
// conventional values at the ramified primes: (-1/2) = 0, (-3/3) = 0.
int symbol_minus1(long p) {
  if (p == 2) return 0;
  return p % 4 == 1 ? 1 : -1;
}

int symbol_minus3(long p) {
  if (p == 3) return 0;
  return p % 3 == 1 ? 1 : -1;
}

long cusp_width(long d, long N) { return N / (d * std::gcd(d, N / d)); }

Cusp make_cusp(long a, long d, long N) {
  Cusp c;
  c.a = a;
  c.d = d;
  c.width = cusp_width(d, N);
  c.is_zero_class = (d == 1);
  c.is_infinity_class = (d == N);
  c.is_rational = std::gcd(d, N / d) <= 2;
  return c;
}

}  // namespace

ArithmeticProfile arithmetic_profile(long N) {
  if (N < 1) throw std::domain_error("arithmetic_profile: N must be >= 1");
  ArithmeticProfile p;
  p.N = N;
  p.psi = N;
  for (long q : prime_factors(N)) p.psi = p.psi / q * (q + 1);
  p.sigma_infty = 0;
  for (long d : divisors(N)) p.sigma_infty += euler_phi(std::gcd(d, N / d));
  if (N % 9 == 0) {
    p.eps_rho = 0;
  } else {
    p.eps_rho = 1;
    for (long q : prime_factors(N)) p.eps_rho *= 1 + symbol_minus3(q);
  }
  if (N % 4 == 0) {
    p.eps_i = 0;
  } else {
    p.eps_i = 1;
    for (long q : prime_factors(N)) p.eps_i *= 1 + symbol_minus1(q);
  }
  // genus = 1 + psi/12 - sigma/2 - eps_rho/3 - eps_i/4, always integral
  const long twelve_g = 12 + p.psi - 6 * p.sigma_infty - 4 * p.eps_rho - 3 * p.eps_i;
  if (twelve_g % 12 != 0 || twelve_g < 0)
    throw std::runtime_error("arithmetic_profile: non-integral genus for N=" +
                             std::to_string(N));
  p.genus = twelve_g / 12;
  return p;
}

std::vector<long> genus_zero_levels(long bound) {
  std::vector<long> out;
  for (long N = 2; N <= bound; ++N)
    if (arithmetic_profile(N).genus == 0) out.push_back(N);
  return out;
}

long singular_point_count(long N) {
  auto p = arithmetic_profile(N);
  return p.sigma_infty + p.eps_i + p.eps_rho;
}

std::vector<Cusp> cusp_table(long N) {
  if (N < 1) throw std::domain_error("cusp_table: N must be >= 1");
  std::vector<Cusp> out;
  for (long d : divisors(N)) {
    const long f = std::gcd(d, N / d);
    for (long r = 1; r <= f; ++r) {
      if (std::gcd(r, f) != 1) continue;
      long a = r;
      while (std::gcd(a, d) != 1) a += f;
      out.push_back(make_cusp(a, d, N));
    }
  }
  return out;
}

Cusp canonicalize_cusp(long a, long c, long N) {
  if (c == 0) return make_cusp(1, N, N);  // i*infinity is [1/N]
  if (c < 0) {
    a = -a;
    c = -c;
  }
  const long g0 = std::gcd(std::abs(a), c);
  if (g0 > 1) {
    a /= g0;
    c /= g0;
  }
  if (a == 0) return make_cusp(1, 1, N);  // tau = 0 is [1/1]
  const long d = std::gcd(c, N);
  const long f = std::gcd(d, N / d);
  // class invariant: a * (c/d) mod f, lifted to the least positive
  // representative coprime to d
  long x = ((a % f) * ((c / d) % f)) % f;
  x = ((x % f) + f) % f;
  if (x == 0) x = f;
  while (std::gcd(x, d) != 1) x += f;
  return make_cusp(x, d, N);
}

long FormalCuspSum::total() const {
  long t = 0;
  for (const auto& [c, m] : terms) t += m;
  return t;
}

std::string FormalCuspSum::to_string() const {
  std::string s;
  for (const auto& [c, m] : terms) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m) + "*";
    s += "[" + std::to_string(c.a) + "/" + std::to_string(c.d) + "]_" +
         std::to_string(level);
  }
  return s.empty() ? "0" : s;
}

namespace {

// Width of the cusp a/c with respect to Gamma_0(M): M / gcd(c^2, M).
long width_on(long c, long M) { return M / std::gcd(c * c, M); }

// Image of a cusp of X_0(N^2) under phi' as a class of X_0(N)' (recorded by
// the Gamma_0(N)-class of N*tau), together with the ramification index.
struct PhiPrimeImage {
  Cusp image;  // class [y]_N, the cusp of X_0(N)' being [y]_N / N
  long ram;
};

PhiPrimeImage phi_prime_image(long a, long d_tilde, long N) {
  // N * (a/d~) reduced
  const long g = std::gcd(N, d_tilde);
  long num = (N / g) * a;
  long den = d_tilde / g;
  Cusp img = canonicalize_cusp(num, den, N);
  // Stabilizer index: [Stab_{Gamma_0(N)'} : Stab_{Gamma_0(N^2)}] with the
  // Gamma_0(N)'-stabilizer computed through conjugation by tau -> N tau.
  const long h2 = width_on(d_tilde, N * N);
  const long e1 = width_on(den, N);
  const long ram = (h2 * g * g) / (e1 * N);
  if (ram * e1 * N != h2 * g * g)
    throw std::runtime_error("phi_prime_image: non-integral ramification");
  return {img, ram};
}

}  // namespace

FormalCuspSum lift_cusp(long N, LiftMap map, const Cusp& target) {
  if (N < 2) throw std::domain_error("lift_cusp: N must be >= 2");
  FormalCuspSum sum;
  sum.level = N * N;
  for (const Cusp& c : cusp_table(N * N)) {
    if (map == LiftMap::Phi) {
      Cusp img = canonicalize_cusp(c.a, c.d, N);
      if (!(img == target)) continue;
      const long ram = width_on(c.d, N * N) / width_on(std::gcd(c.d, N), N);
      sum.terms.emplace_back(c, ram);
    } else {
      auto [img, ram] = phi_prime_image(c.a, c.d, N);
      if (!(img == target)) continue;
      sum.terms.emplace_back(c, ram);
    }
  }
  return sum;
}

FormalCuspSum lift_distinguished(long N, LiftMap map, bool zero_class) {
  return lift_cusp(N, map, zero_class ? make_cusp(1, 1, N) : make_cusp(1, N, N));
}

long CuspFibre::total() const {
  long t = 0;
  for (const auto& [c, m] : points) t += m;
  return t;
}

CuspFibre cusp_fibre(long N, long d) {
  if (N < 1 || d < 1 || N % d != 0)
    throw std::domain_error("cusp_fibre: d must divide N");
  CuspFibre fibre;
  // canonical representative over d
  for (const Cusp& c : cusp_table(N))
    if (c.d == d) {
      fibre.base = c;
      break;
    }
  for (const Cusp& c : cusp_table(N * N)) {
    Cusp img = canonicalize_cusp(c.a, c.d, N);
    if (!(img == fibre.base)) continue;
    const long ram = width_on(c.d, N * N) / width_on(d, N);
    fibre.points.emplace_back(c, ram);
  }
  // Fibre shape sanity: d/(d,N/d) cusps, each of multiplicity N(d,N/d)/d.
  const long f = std::gcd(d, N / d);
  if (static_cast<long>(fibre.points.size()) != d / f)
    throw std::runtime_error("cusp_fibre: unexpected fibre size");
  for (const auto& [c, m] : fibre.points)
    if (m != N * f / d) throw std::runtime_error("cusp_fibre: unexpected multiplicity");
  return fibre;
}

bool valid_discriminant(long D) {
  if (D >= 0) return false;
  const long r = ((D % 4) + 4) % 4;
  return r == 0 || r == 1;
}

long class_number(long D) {
  if (!valid_discriminant(D))
    throw std::domain_error("class_number: invalid discriminant " + std::to_string(D));
  long count = 0;
  for (long a = 1; 3 * a * a <= -D; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      const long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const long c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

FrickePlusData fricke_genus_plus(long N) {
  if (N < 5)
    throw std::domain_error("fricke_genus_plus: valid for N >= 5");
  FrickePlusData out;
  out.N = N;
  const long h4N = class_number(-4 * N);
  const long hN = valid_discriminant(-N) ? class_number(-N) : 0;
  out.a_casing_1mod4 = h4N + (N % 4 == 1 ? hN : 0);
  out.a_casing_3mod4 = h4N + (N % 4 == 3 ? hN : 0);
  out.readings_agree = out.a_casing_1mod4 == out.a_casing_3mod4;

  const long g = arithmetic_profile(N).genus;
  auto genus_plus_of = [&](long a, long* result) {
    // g+ = (g+1)/2 - a/4, integral or bust
    const long four_gp = 2 * (g + 1) - a;
    if (four_gp % 4 != 0 || four_gp < 0) return false;
    *result = four_gp / 4;
    return true;
  };
  long gp_1mod4 = -1, gp_3mod4 = -1;
  const bool ok_1mod4 = genus_plus_of(out.a_casing_1mod4, &gp_1mod4);
  const bool ok_3mod4 = genus_plus_of(out.a_casing_3mod4, &gp_3mod4);
  if (ok_1mod4) {
    out.fixed_points = out.a_casing_1mod4;
    out.genus_plus = gp_1mod4;
  } else if (ok_3mod4) {
    out.fixed_points = out.a_casing_3mod4;
    out.genus_plus = gp_3mod4;
  } else {
    throw std::runtime_error("fricke_genus_plus: no reading gives an integral genus for N=" +
                             std::to_string(N));
  }
  if (!out.readings_agree) {
    out.note = "a(N) readings disagree: h(-4N)+h(-N) casing gives " +
               std::to_string(out.a_casing_1mod4) + " (N=1 mod 4) vs " +
               std::to_string(out.a_casing_3mod4) + " (N=3 mod 4); keeping " +
               std::to_string(out.fixed_points) + " (integral genus)";
  }
  return out;
}

}  // namespace qmod::modcurve
