#include "eisenzero/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

namespace eisenzero {

namespace {

constexpr double pi = std::numbers::pi;

void validate_policy(const TruncationPolicy& policy) {
    if (policy.lattice_u_max < 1) throw std::invalid_argument("lattice_u_max must be >= 1");
    if (policy.lattice_v_max < 0) throw std::invalid_argument("lattice_v_max must be >= 0");
    if (policy.fourier_l_max < 0) throw std::invalid_argument("fourier_l_max must be >= 0");
    if (policy.coeff_n0_max < 1) throw std::invalid_argument("coeff_n0_max must be >= 1");
    if (!(policy.target_tail > 0.0)) throw std::invalid_argument("target_tail must be > 0");
}

// Integral of (1 + s^2)^{-m} over the whole line: sqrt(pi) Gamma(m - 1/2) / Gamma(m).
double integral_width(double m) {
    return std::exp(0.5 * std::log(pi) + std::lgamma(m - 0.5) - std::lgamma(m));
}

// Bound on sum_{u > U} u^{-s} for s > 1: first term plus the comparison integral.
double power_sum_tail(double s, double U) {
    return std::pow(U, -s) + std::pow(U, 1.0 - s) / (s - 1.0);
}

// Bound on sum over integers t with |t| > W of (t^2 + a^2)^{-m}.
double window_tail(double W, double a, double m) {
    const double q = W * W + a * a;
    return std::pow(q, 1.0 - m) / (W * (m - 1.0)) + 2.0 * std::pow(q, -m);
}

// Bound on the sum over every integer t of (t^2 + a^2)^{-m}.
double family_tail(double a, double m) {
    return integral_width(m) * std::pow(a, 1.0 - 2.0 * m) + std::pow(a, -2.0 * m);
}

std::int64_t choose_window(double a, double m, double budget) {
    std::int64_t w = 8;
    while (w < (std::int64_t{1} << 22) && window_tail(static_cast<double>(w), a, m) > budget)
        w *= 2;
    return w;
}

struct FamilyPartial {
    std::complex<double> sum{0.0, 0.0};
    double tail = 0.0;
    std::int64_t terms = 0;
    double peak = 0.0;
};

// One outer index u of the E_0 sum: all v with gcd(u, 2v) = 1 inside the
// window, visited in ascending |v| with the negative twin first.
FamilyPartial e0_family(std::int64_t u, double x, double y, const Weight& w,
                        const TruncationPolicy& policy, double budget, bool drop_leading) {
    FamilyPartial out;
    const double kh = w.half();
    const double m = 0.25 * static_cast<double>(w.k);
    const double a = static_cast<double>(u) * y;
    const std::int64_t center = std::llround(-static_cast<double>(u) * x);
    const std::complex<double> eps_k = epsilon_pow(u, w.k);

    auto add = [&](std::int64_t v) {
        if (drop_leading && u == 1 && (v == 0 || v == 1)) return;
        if (std::gcd(u, v < 0 ? -v : v) != 1) return;
        const int jac = jacobi(-v, u);
        const std::complex<double> p =
            std::pow(std::complex<double>(static_cast<double>(u) * x + static_cast<double>(v), a), -kh);
        out.sum += jac > 0 ? eps_k * p : -eps_k * p;
        const double mag = std::abs(p);
        if (mag > out.peak) out.peak = mag;
        ++out.terms;
    };

    if (policy.lattice_v_max > 0) {
        const std::int64_t W = policy.lattice_v_max;
        for (std::int64_t j = 0; j <= W; ++j) {
            add(-j);
            if (j > 0) add(j);
        }
        if (center >= -W && center <= W) {
            const std::int64_t slack = W - std::llabs(center);
            out.tail = window_tail(static_cast<double>(std::max<std::int64_t>(slack, 1)), a, m);
        } else {
            out.tail = family_tail(a, m);
        }
    } else {
        const std::int64_t W = choose_window(a, m, budget);
        const std::int64_t lo = center - W;
        const std::int64_t hi = center + W;
        const std::int64_t jmax = std::max(std::llabs(lo), std::llabs(hi));
        for (std::int64_t j = 0; j <= jmax; ++j) {
            if (-j >= lo && -j <= hi) add(-j);
            if (j > 0 && j >= lo && j <= hi) add(j);
        }
        out.tail = window_tail(static_cast<double>(W), a, m);
    }
    return out;
}

// One outer index c of the E_inf sum: odd d coprime to c, coefficient
// G(-d / 4c)^k cached per residue class of -d mod 4c.
FamilyPartial einf_family(std::int64_t c, double x, double y, const Weight& w,
                          const TruncationPolicy& policy, double budget) {
    FamilyPartial out;
    const double kh = w.half();
    const double m = 0.25 * static_cast<double>(w.k);
    const std::int64_t n = 4 * c;
    const double a = static_cast<double>(n) * y;
    const std::int64_t center = std::llround(-static_cast<double>(n) * x);
    std::unordered_map<std::int64_t, std::complex<double>> coeff_cache;

    auto add = [&](std::int64_t d) {
        if (d % 2 == 0) return;
        if (std::gcd(d < 0 ? -d : d, c) != 1) return;
        std::int64_t r = (-d) % n;
        if (r < 0) r += n;
        auto it = coeff_cache.find(r);
        if (it == coeff_cache.end())
            it = coeff_cache.emplace(r, unit_phase_pow(gauss_phase(r, n), w.k)).first;
        const std::complex<double> p =
            std::pow(std::complex<double>(static_cast<double>(n) * x + static_cast<double>(d), a), -kh);
        out.sum += it->second * p;
        const double mag = std::abs(p);
        if (mag > out.peak) out.peak = mag;
        ++out.terms;
    };

    if (policy.lattice_v_max > 0) {
        const std::int64_t W = policy.lattice_v_max;
        for (std::int64_t j = 1; j <= W; j += 2) {
            add(-j);
            add(j);
        }
        if (center >= -W && center <= W) {
            const std::int64_t slack = W - std::llabs(center);
            out.tail = window_tail(static_cast<double>(std::max<std::int64_t>(slack, 1)), a, m);
        } else {
            out.tail = family_tail(a, m);
        }
    } else {
        const std::int64_t W = choose_window(a, m, budget);
        const std::int64_t lo = center - W;
        const std::int64_t hi = center + W;
        const std::int64_t jmax = std::max(std::llabs(lo), std::llabs(hi));
        for (std::int64_t j = 0; j <= jmax; ++j) {
            if (-j >= lo && -j <= hi) add(-j);
            if (j > 0 && j >= lo && j <= hi) add(j);
        }
        out.tail = window_tail(static_cast<double>(W), a, m);
    }
    return out;
}

// One outer index d of the E_half sum: all c coprime to d, coefficient
// G((d - 2c) / 8d)^k cached per residue class of d - 2c mod 8d.
FamilyPartial ehalf_family(std::int64_t d, double x, double y, const Weight& w,
                           const TruncationPolicy& policy, double budget, bool drop_leading) {
    FamilyPartial out;
    const double kh = w.half();
    const double m = 0.25 * static_cast<double>(w.k);
    const std::int64_t n = 8 * d;
    const double a = static_cast<double>(d) * y;
    const std::int64_t center = std::llround(-static_cast<double>(d) * x);
    std::unordered_map<std::int64_t, std::complex<double>> coeff_cache;

    auto add = [&](std::int64_t c) {
        if (drop_leading && d == 1 && (c == 0 || c == -1)) return;
        if (std::gcd(c < 0 ? -c : c, d) != 1) return;
        std::int64_t r = (d - 2 * c) % n;
        if (r < 0) r += n;
        auto it = coeff_cache.find(r);
        if (it == coeff_cache.end())
            it = coeff_cache.emplace(r, unit_phase_pow(gauss_phase(r, n), w.k)).first;
        const std::complex<double> p =
            std::pow(std::complex<double>(static_cast<double>(d) * x + static_cast<double>(c), a), -kh);
        out.sum += it->second * p;
        const double mag = std::abs(p);
        if (mag > out.peak) out.peak = mag;
        ++out.terms;
    };

    if (policy.lattice_v_max > 0) {
        const std::int64_t W = policy.lattice_v_max;
        for (std::int64_t j = 0; j <= W; ++j) {
            add(-j);
            if (j > 0) add(j);
        }
        if (center >= -W && center <= W) {
            const std::int64_t slack = W - std::llabs(center);
            out.tail = window_tail(static_cast<double>(std::max<std::int64_t>(slack, 1)), a, m);
        } else {
            out.tail = family_tail(a, m);
        }
    } else {
        const std::int64_t W = choose_window(a, m, budget);
        const std::int64_t lo = center - W;
        const std::int64_t hi = center + W;
        const std::int64_t jmax = std::max(std::llabs(lo), std::llabs(hi));
        for (std::int64_t j = 0; j <= jmax; ++j) {
            if (-j >= lo && -j <= hi) add(-j);
            if (j > 0 && j >= lo && j <= hi) add(j);
        }
        out.tail = window_tail(static_cast<double>(W), a, m);
    }
    return out;
}

enum class Kind { E0, EInf, EHalf };

// Shared driver: per-family partial sums computed independently (in parallel
// when OpenMP is enabled), then reduced serially in ascending family order so
// results do not depend on the thread count.
EvalResult assemble(Kind kind, const ComplexPoint& z, const Weight& w,
                    const TruncationPolicy& policy, bool drop_leading) {
    validate_policy(policy);
    const double kh = w.half();
    const double m = 0.25 * static_cast<double>(w.k);

    std::vector<std::int64_t> outer;
    if (kind == Kind::EInf) {
        for (std::int64_t c = 1; c <= policy.lattice_u_max; ++c) outer.push_back(c);
    } else {
        for (std::int64_t u = 1; u <= policy.lattice_u_max; u += 2) outer.push_back(u);
    }

    const double lead = std::abs(std::pow(z.value(), -kh));
    const double scale_floor = kind == Kind::EInf ? 1.0 : lead;
    const double budget = policy.target_tail * scale_floor / static_cast<double>(outer.size() + 1);

    std::vector<FamilyPartial> parts(outer.size());
    const auto count = static_cast<std::int64_t>(outer.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        switch (kind) {
            case Kind::E0: parts[i] = e0_family(outer[i], z.x, z.y, w, policy, budget, drop_leading); break;
            case Kind::EInf: parts[i] = einf_family(outer[i], z.x, z.y, w, policy, budget); break;
            case Kind::EHalf: parts[i] = ehalf_family(outer[i], z.x, z.y, w, policy, budget, drop_leading); break;
        }
    }

    EvalResult r;
    std::complex<double> total{0.0, 0.0};
    double scale = scale_floor;
    for (const auto& part : parts) {
        total += part.sum;
        r.tail_estimate += part.tail;
        r.terms_used += part.terms;
        if (part.peak > scale) scale = part.peak;
    }

    // Families beyond the outer cutoff, bounded with unit coefficients.
    const double U = static_cast<double>(policy.lattice_u_max);
    const double ymul = kind == Kind::EInf ? 4.0 * z.y : z.y;
    r.tail_estimate += integral_width(m) * std::pow(ymul, 1.0 - 2.0 * m) * power_sum_tail(2.0 * m - 1.0, U) +
                       std::pow(ymul, -2.0 * m) * power_sum_tail(2.0 * m, U);

    switch (kind) {
        case Kind::E0: r.value = total; break;
        case Kind::EInf: r.value = 1.0 + eighth_root_power(w.k) * total; break;
        case Kind::EHalf: r.value = eighth_root_power(-w.k) * total; break;
    }
    r.certified = r.tail_estimate <= policy.target_tail * scale;
    return r;
}

// Geometric sum of p^{h (k-2)} for h = 0 .. v.
double geometric_power_sum(std::int64_t p, int v, int k) {
    double s = 0.0;
    for (int h = 0; h <= v; ++h) s += std::pow(static_cast<double>(p), static_cast<double>(h) * (k - 2));
    return s;
}

// pi^{k/2} sf^{k/2 - 1} / Gamma(k/2), assembled in log space to survive large k.
double coefficient_prefactor_magnitude(std::int64_t sf, double kh) {
    return std::exp(kh * std::log(pi) + (kh - 1.0) * std::log(static_cast<double>(sf)) - std::lgamma(kh));
}

}  // namespace

Weight::Weight(int k_in) : k(k_in) {
    if (k < 5 || k % 2 == 0)
        throw std::invalid_argument("weight index must be an odd integer >= 5");
}

ComplexPoint::ComplexPoint(double x_in, double y_in) : x(x_in), y(y_in) {
    if (!(y > 0.0))
        throw std::invalid_argument("point must lie in the open upper half-plane");
}

std::complex<double> half_power(std::complex<double> w, double half_exponent) {
    if (w == std::complex<double>{0.0, 0.0})
        throw std::invalid_argument("half_power of zero is undefined");
    return std::exp(half_exponent * std::log(w));
}

std::complex<double> half_power(std::complex<double> w, const Weight& w8) {
    return half_power(w, w8.half());
}

EvalResult eval_E_inf(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy) {
    return assemble(Kind::EInf, z, w, policy, false);
}

EvalResult eval_E_0_lattice(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy) {
    return assemble(Kind::E0, z, w, policy, false);
}

EvalResult eval_E_half_lattice(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy) {
    return assemble(Kind::EHalf, z, w, policy, false);
}

EvalResult eval_E_0_lattice_rest(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy) {
    return assemble(Kind::E0, z, w, policy, true);
}

EvalResult eval_E_half_lattice_rest(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy) {
    return assemble(Kind::EHalf, z, w, policy, true);
}

FourierCoefficient fourier_b(std::int64_t ell, const Weight& w, const TruncationPolicy& policy) {
    validate_policy(policy);
    if (ell < 1) throw std::invalid_argument("coefficient index must be positive");
    const double kh = w.half();
    const auto dec = squarefree_decompose(ell);
    const std::int64_t sf = dec.squarefree_part;

    FourierCoefficient out;
    out.ell = ell;
    out.lambda = (w.k - 1) / 2;

    std::vector<std::int64_t> odd_divs;
    for (std::int64_t d = 1; d * d <= sf; ++d) {
        if (sf % d != 0) continue;
        if (d % 2 == 1) odd_divs.push_back(d);
        const std::int64_t e = sf / d;
        if (e != d && e % 2 == 1) odd_divs.push_back(e);
    }
    std::sort(odd_divs.begin(), odd_divs.end());

    double sigma = 0.0;
    for (const auto n1 : odd_divs) sigma += std::pow(static_cast<double>(n1), 1.0 - w.k);

    // Squarefree stage: sum over odd squarefree n0 and odd divisors n1 of sf,
    // with the square class n0 n1^2 congruent to n0 mod 4.
    std::complex<double> s{0.0, 0.0};
    std::int64_t last = 1;
    for (std::int64_t n0 = 1; n0 <= policy.coeff_n0_max; n0 += 2) {
        if (moebius(n0) == 0) continue;
        const int sgn = (n0 % 4 == 3 && ((w.k + 1) % 4) == 2) ? -1 : 1;
        const double base = static_cast<double>(sgn * jacobi(-sf, n0)) * std::sqrt(static_cast<double>(n0));
        for (const auto n1 : odd_divs) {
            const int mu = moebius(n1);
            if (mu == 0) continue;
            const double u = static_cast<double>(n0) * static_cast<double>(n1) * static_cast<double>(n1);
            s += base * std::pow(u, -kh) * static_cast<double>(mu * n1);
        }
        last = n0;
        if (n0 >= 99 && n0 % 128 == 127 &&
            sigma * power_sum_tail(0.5 * (w.k - 1.0), static_cast<double>(n0)) <=
                policy.target_tail * std::max(std::abs(s), 1.0))
            break;
    }
    double stage_tail = sigma * power_sum_tail(0.5 * (w.k - 1.0), static_cast<double>(last));

    const std::complex<double> pref =
        coefficient_prefactor_magnitude(sf, kh) * eighth_root_power(-w.k);
    out.value = pref * s;
    out.tail = std::abs(pref) * stage_tail;

    // Square ladder: each prime square p^{2v} contributes a real ratio.
    std::int64_t cur = sf;
    for (const auto& [p, v] : dec.prime_square_ladder) {
        double ratio;
        if (p == 2) {
            ratio = std::exp2(static_cast<double>(w.k - 2) * v);
        } else if (cur % p == 0) {
            ratio = geometric_power_sum(p, v, w.k);
        } else {
            const int chi = jacobi(out.lambda % 2 != 0 ? -cur : cur, p);
            out.chi_at_p = chi;
            ratio = geometric_power_sum(p, v, w.k) -
                    static_cast<double>(chi) * std::pow(static_cast<double>(p), static_cast<double>(out.lambda - 1)) *
                        geometric_power_sum(p, v - 1, w.k);
        }
        out.value *= ratio;
        out.tail *= std::abs(ratio);
        for (int i = 0; i < 2 * v; ++i) cur *= p;
    }
    return out;
}

std::complex<double> fourier_b_direct(std::int64_t ell, const Weight& w, std::int64_t n_max) {
    if (ell < 1) throw std::invalid_argument("coefficient index must be positive");
    if (n_max < 1) throw std::invalid_argument("modulus cutoff must be positive");
    const double kh = w.half();
    std::complex<double> s{0.0, 0.0};
    for (std::int64_t n = 1; n <= n_max; n += 2) {
        std::complex<double> inner{0.0, 0.0};
        for (std::int64_t j = 0; j < n; ++j) {
            const int cj = jacobi(j, n);
            if (cj == 0) continue;
            const auto r = static_cast<std::int64_t>(static_cast<__int128>(ell) * j % n);
            inner += static_cast<double>(cj) * std::polar(1.0, -2.0 * pi * static_cast<double>(r) / static_cast<double>(n));
        }
        s += epsilon_pow(n, w.k) * std::pow(static_cast<double>(n), -kh) * inner;
    }
    return coefficient_prefactor_magnitude(ell, kh) * eighth_root_power(-w.k) * s;
}

int fourier_default_l_max(const Weight& w, double y, double target_tail) {
    if (!(target_tail > 0.0)) throw std::invalid_argument("target_tail must be > 0");
    const double raw = (std::log(1.0 / target_tail) + static_cast<double>(w.k) * std::numbers::ln2) /
                       (2.0 * pi * y);
    return std::max(1, static_cast<int>(std::ceil(raw)));
}

EvalResult eval_E_0_fourier(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy) {
    validate_policy(policy);
    const double kh = w.half();
    const int l_max = policy.fourier_l_max > 0 ? policy.fourier_l_max
                                               : fourier_default_l_max(w, z.y, policy.target_tail);
    const std::complex<double> q = std::polar(std::exp(-2.0 * pi * z.y), 2.0 * pi * z.x);
    const double qa = std::exp(-2.0 * pi * z.y);

    EvalResult r;
    std::complex<double> total{0.0, 0.0};
    std::complex<double> qp{1.0, 0.0};
    double coeff_tails = 0.0;
    double first_mag = 0.0;
    for (int l = 1; l <= l_max; ++l) {
        const auto b = fourier_b(l, w, policy);
        qp *= q;
        total += b.value * qp;
        coeff_tails += b.tail * std::abs(qp);
        if (l == 1) first_mag = std::abs(b.value) * qa;
        ++r.terms_used;
    }
    const double scale = std::exp2(kh);
    r.value = scale * total;

    // Dropped q-terms: |b_l| <= 2 pi^{k/2} l^{k/2-1} / Gamma(k/2) gives a
    // geometric majorant once the term ratio drops below one.
    const double log_first =
        kh * std::log(pi) + (kh - 1.0) * std::log(static_cast<double>(l_max + 1)) - std::lgamma(kh) -
        2.0 * pi * z.y * static_cast<double>(l_max + 1) + std::numbers::ln2;
    const double rho = qa * std::pow(static_cast<double>(l_max + 2) / static_cast<double>(l_max + 1), kh - 1.0);
    double q_tail;
    bool convergent = rho < 1.0;
    if (convergent) {
        q_tail = std::exp(log_first) / (1.0 - rho);
    } else {
        q_tail = std::numeric_limits<double>::infinity();
    }
    r.tail_estimate = scale * (coeff_tails + q_tail);
    r.certified = convergent && r.tail_estimate <= policy.target_tail * scale * first_mag;
    return r;
}

namespace ref {

namespace {

// Window bounds plus the matching dropped-terms bound for one family.
std::pair<std::int64_t, std::int64_t> ref_window(std::int64_t center, double a, double m,
                                                 const TruncationPolicy& policy, double budget,
                                                 double& tail_out) {
    if (policy.lattice_v_max > 0) {
        const std::int64_t W = policy.lattice_v_max;
        if (center >= -W && center <= W)
            tail_out = window_tail(static_cast<double>(std::max<std::int64_t>(W - std::llabs(center), 1)), a, m);
        else
            tail_out = family_tail(a, m);
        return {-W, W};
    }
    const std::int64_t W = choose_window(a, m, budget);
    tail_out = window_tail(static_cast<double>(W), a, m);
    return {center - W, center + W};
}

double outer_families_tail(double ymul, double m, int u_max) {
    const double U = static_cast<double>(u_max);
    return integral_width(m) * std::pow(ymul, 1.0 - 2.0 * m) * power_sum_tail(2.0 * m - 1.0, U) +
           std::pow(ymul, -2.0 * m) * power_sum_tail(2.0 * m, U);
}

}  // namespace

// Plain nested loops in natural order with no coefficient caching, kept as an
// independent cross-check of the production kernels.
EvalResult eval_E_inf(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy) {
    validate_policy(policy);
    const double kh = w.half();
    const double m = 0.25 * static_cast<double>(w.k);
    const double budget = policy.target_tail / static_cast<double>(policy.lattice_u_max + 1);
    EvalResult r;
    std::complex<double> total{0.0, 0.0};
    double scale = 1.0;
    for (std::int64_t c = 1; c <= policy.lattice_u_max; ++c) {
        const std::int64_t n = 4 * c;
        const double a = static_cast<double>(n) * z.y;
        const std::int64_t center = std::llround(-static_cast<double>(n) * z.x);
        double fam_tail = 0.0;
        const auto [lo, hi] = ref_window(center, a, m, policy, budget, fam_tail);
        for (std::int64_t d = lo; d <= hi; ++d) {
            if (d % 2 == 0 || std::gcd(d < 0 ? -d : d, c) != 1) continue;
            std::int64_t rm = (-d) % n;
            if (rm < 0) rm += n;
            const std::complex<double> coeff = unit_phase_pow(gauss_phase(rm, n), w.k);
            const std::complex<double> p = std::pow(
                std::complex<double>(static_cast<double>(n) * z.x + static_cast<double>(d), a), -kh);
            total += coeff * p;
            scale = std::max(scale, std::abs(p));
            ++r.terms_used;
        }
        r.tail_estimate += fam_tail;
    }
    r.tail_estimate += outer_families_tail(4.0 * z.y, m, policy.lattice_u_max);
    r.value = 1.0 + eighth_root_power(w.k) * total;
    r.certified = r.tail_estimate <= policy.target_tail * scale;
    return r;
}

EvalResult eval_E_0_lattice(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy) {
    validate_policy(policy);
    const double kh = w.half();
    const double m = 0.25 * static_cast<double>(w.k);
    const double lead = std::abs(std::pow(z.value(), -kh));
    const double budget = policy.target_tail * lead / static_cast<double>(policy.lattice_u_max + 1);
    EvalResult r;
    std::complex<double> total{0.0, 0.0};
    double scale = lead;
    for (std::int64_t u = 1; u <= policy.lattice_u_max; u += 2) {
        const double a = static_cast<double>(u) * z.y;
        const std::int64_t center = std::llround(-static_cast<double>(u) * z.x);
        double fam_tail = 0.0;
        const auto [lo, hi] = ref_window(center, a, m, policy, budget, fam_tail);
        for (std::int64_t v = lo; v <= hi; ++v) {
            if (std::gcd(u, v < 0 ? -v : v) != 1) continue;
            const int jac = jacobi(-v, u);
            const std::complex<double> p = std::pow(
                std::complex<double>(static_cast<double>(u) * z.x + static_cast<double>(v), a), -kh);
            total += static_cast<double>(jac) * epsilon_pow(u, w.k) * p;
            scale = std::max(scale, std::abs(p));
            ++r.terms_used;
        }
        r.tail_estimate += fam_tail;
    }
    r.tail_estimate += outer_families_tail(z.y, m, policy.lattice_u_max);
    r.value = total;
    r.certified = r.tail_estimate <= policy.target_tail * scale;
    return r;
}

EvalResult eval_E_half_lattice(const ComplexPoint& z, const Weight& w, const TruncationPolicy& policy) {
    validate_policy(policy);
    const double kh = w.half();
    const double m = 0.25 * static_cast<double>(w.k);
    const double lead = std::abs(std::pow(z.value(), -kh));
    const double budget = policy.target_tail * lead / static_cast<double>(policy.lattice_u_max + 1);
    EvalResult r;
    std::complex<double> total{0.0, 0.0};
    double scale = lead;
    for (std::int64_t d = 1; d <= policy.lattice_u_max; d += 2) {
        const std::int64_t n = 8 * d;
        const double a = static_cast<double>(d) * z.y;
        const std::int64_t center = std::llround(-static_cast<double>(d) * z.x);
        double fam_tail = 0.0;
        const auto [lo, hi] = ref_window(center, a, m, policy, budget, fam_tail);
        for (std::int64_t c = lo; c <= hi; ++c) {
            if (std::gcd(c < 0 ? -c : c, d) != 1) continue;
            std::int64_t rm = (d - 2 * c) % n;
            if (rm < 0) rm += n;
            const std::complex<double> coeff = unit_phase_pow(gauss_phase(rm, n), w.k);
            const std::complex<double> p = std::pow(
                std::complex<double>(static_cast<double>(d) * z.x + static_cast<double>(c), a), -kh);
            total += coeff * p;
            scale = std::max(scale, std::abs(p));
            ++r.terms_used;
        }
        r.tail_estimate += fam_tail;
    }
    r.tail_estimate += outer_families_tail(z.y, m, policy.lattice_u_max);
    r.value = eighth_root_power(-w.k) * total;
    r.certified = r.tail_estimate <= policy.target_tail * scale;
    return r;
}

}  // namespace ref

}  // namespace eisenzero
