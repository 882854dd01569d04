#include "mordell/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <thread>

#include "mordell/errors.hpp"
#include "mordell/etale.hpp"
#include "mordell/number_field.hpp"

namespace mordell {

QuadraticIrrational::QuadraticIrrational(Integer p, Integer q, Integer d, Integer r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
    if (sgn(r_) == 0) throw InvalidInputError("zero denominator");
    if (sgn(q_) == 0 || sgn(d_) <= 0) throw InvalidInputError("the value must be irrational");
    Integer f, rest;
    square_split(d_, f, rest);
    q_ *= f;
    d_ = rest;
    if (d_ == 1) throw InvalidInputError("the value must be irrational");
    if (sgn(r_) < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
    p_ /= g;
    q_ /= g;
    r_ /= g;
}

RealAlgebraic QuadraticIrrational::value() const {
    RealAlgebraic root = RealAlgebraic(Rational(d_)).nth_root(2);
    return (RealAlgebraic(Rational(p_)) + RealAlgebraic(Rational(q_)) * root) /
           RealAlgebraic(Rational(r_));
}

QPolynomial QuadraticIrrational::minimal_polynomial() const {
    // (rx - p)^2 = q^2 d, made monic
    Rational c1 = Rational(-2 * p_) / Rational(r_);
    Rational c0 = Rational(p_ * p_ - q_ * q_ * d_) / Rational(r_ * r_);
    return QPolynomial({c0, c1, Rational(1)});
}

Integer QuadraticIrrational::field_discriminant() const {
    return d_ % 4 == 1 ? d_ : 4 * d_;
}

std::string QuadraticIrrational::str() const {
    std::string s = "(" + p_.get_str();
    s += sgn(q_) < 0 ? "-" : "+";
    s += Integer(abs(q_)).get_str() + "*sqrt(" + d_.get_str() + "))/" + r_.get_str();
    return s;
}

namespace {

// floor((P + sqrt(N)) / Q) for irrational sqrt(N): any integer u below the
// value satisfies u Q <= P + isqrt(N) when Q > 0, and u(-Q) <= -P - isqrt(N) - 1
// when Q < 0, so one floor division is exact in both cases
Integer floor_surd(const Integer& P, const Integer& N, const Integer& Q) {
    Integer s = isqrt(N);
    if (sgn(Q) > 0) return floor_div(P + s, Q);
    return floor_div(-P - s - 1, -Q);
}

long long digit_to_ll(const Integer& a) {
    if (!a.fits_slong_p()) throw UnsupportedError("continued fraction digit exceeds machine range");
    return a.get_si();
}

} // namespace

CFExpansion cf_expand(const QuadraticIrrational& x) {
    // surd recurrence on x_k = (P_k + sqrt(N)) / Q_k with Q_k | N - P_k^2
    Integer P, Q, N;
    if (sgn(x.q()) > 0) {
        P = x.p();
        Q = x.r();
    } else {
        P = -x.p();
        Q = -x.r();
    }
    N = x.q() * x.q() * x.d();
    if (!mpz_divisible_p(Integer(N - P * P).get_mpz_t(), Q.get_mpz_t())) {
        Integer a = abs(Q);
        P *= a;
        N *= a * a;
        Q *= a;
    }

    std::vector<long long> digits;
    std::map<std::pair<Integer, Integer>, size_t> seen;
    for (size_t k = 0; k < 100000; ++k) {
        auto state = std::make_pair(P, Q);
        auto it = seen.find(state);
        if (it != seen.end()) {
            CFExpansion e;
            e.preperiod.assign(digits.begin(), digits.begin() + static_cast<long>(it->second));
            e.period.assign(digits.begin() + static_cast<long>(it->second), digits.end());
            return e;
        }
        seen.emplace(std::move(state), k);
        Integer a = floor_surd(P, N, Q);
        if (k > 0 && a < 1) throw DomainError("surd recurrence left the positive regime");
        digits.push_back(digit_to_ll(a));
        P = a * Q - P;
        Q = (N - P * P) / Q; // exact by the divisibility invariant
    }
    throw DomainError("continued fraction failed to become periodic");
}

long long max_tail_digit(const CFExpansion& e) {
    long long m = 0;
    for (size_t i = 1; i < e.preperiod.size(); ++i) m = std::max(m, e.preperiod[i]);
    for (long long d : e.period) m = std::max(m, d);
    return m;
}

bool in_bad_k(const QuadraticIrrational& x, long long k) {
    if (k < 1) throw InvalidInputError("digit bound must be at least one");
    return max_tail_digit(cf_expand(x)) <= k;
}

QuadraticIrrational cusick_family(long long m) {
    if (m < 1) throw InvalidInputError("family parameter must be positive");
    Integer mm(static_cast<long>(m));
    Integer n = (3 * mm - 2) * (3 * mm + 2);
    if (is_square(n)) throw DomainError("family member degenerates to a rational");
    return QuadraticIrrational(0, 1, n, mm);
}

Lattice quadratic_lattice(const QuadraticIrrational& x) {
    auto field = NumberFieldR::create(x.minimal_polynomial());
    auto algebra = EtaleAlgebra::create({field});
    return construct_lattice(algebra, {algebra->basis_element(0), algebra->basis_element(1)});
}

std::vector<SpectrumPoint> spectrum_scan(
    const std::vector<std::pair<long long, QuadraticIrrational>>& family,
    const SearchBudget& budget, long radius, unsigned seed) {
    std::vector<std::optional<SpectrumPoint>> slots(family.size());
    std::vector<std::exception_ptr> errors(family.size());

    auto run_one = [&](size_t i) {
        try {
            const auto& [param, x] = family[i];
            Lattice lat = quadratic_lattice(x);
            MordellEstimate est = kappa_search(lat, budget, seed);
            slots[i] = SpectrumPoint{param,
                                     x,
                                     x.field_discriminant(),
                                     max_tail_digit(cf_expand(x)),
                                     lambda_inf(lat, radius),
                                     kappa_oracle_2d(lat, radius),
                                     est.kappa_lower,
                                     est.certified};
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };

    long threads = 1;
    if (const char* env = std::getenv("MORDELL_THREADS")) {
        threads = std::strtol(env, nullptr, 10);
        threads = std::clamp(threads, 1L, 64L);
    }
    if (threads <= 1 || family.size() <= 1) {
        for (size_t i = 0; i < family.size(); ++i) run_one(i);
    } else {
        // points are independent and all shared values are immutable
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < family.size(); i = next.fetch_add(1)) run_one(i);
        };
        std::vector<std::thread> pool;
        for (long t = 0; t < std::min<long>(threads, static_cast<long>(family.size())); ++t)
            pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<SpectrumPoint> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    std::sort(out.begin(), out.end(), [](const SpectrumPoint& a, const SpectrumPoint& b) {
        if (a.field_disc != b.field_disc) return a.field_disc < b.field_disc;
        return a.param < b.param;
    });
    return out;
}

std::string spectrum_csv(const std::vector<SpectrumPoint>& points) {
    std::string csv = "param,D,discriminant,max_digit,lambda,kappa_oracle,kappa_search,certified\n";
    char buf[64];
    auto real12 = [&](const RealAlgebraic& v) {
        std::snprintf(buf, sizeof buf, "%.12g", v.approx());
        return std::string(buf);
    };
    for (const auto& pt : points) {
        csv += std::to_string(pt.param) + ',' + pt.x.d().get_str() + ',' + pt.field_disc.get_str() +
               ',' + std::to_string(pt.max_digit) + ',' + real12(pt.lambda) + ',' +
               real12(pt.kappa_oracle) + ',' + real12(pt.kappa_search) + ',' +
               (pt.certified ? "true" : "false") + '\n';
    }
    return csv;
}

InterleaveWord interleave_word(const std::vector<long long>& alpha,
                               const std::vector<long long>& omega, int depth) {
    if (depth < 0) throw InvalidInputError("depth must be nonnegative");
    InterleaveWord w;
    long long top = 0;
    for (long long d : alpha) top = std::max(top, d);
    for (long long d : omega) top = std::max(top, d);
    w.uniform_digit = top + 1;
    w.word.reserve(static_cast<size_t>(depth));
    for (long t = 0; static_cast<int>(w.word.size()) < depth; ++t) {
        for (long i = -t; i <= t && static_cast<int>(w.word.size()) < depth; ++i) {
            if (i >= 0) {
                if (static_cast<size_t>(i) >= omega.size())
                    throw InvalidInputError("forward digits run out before the requested depth");
                w.word.push_back(omega[static_cast<size_t>(i)]);
            } else {
                size_t j = static_cast<size_t>(-i - 1);
                if (j >= alpha.size())
                    throw InvalidInputError("backward digits run out before the requested depth");
                w.word.push_back(alpha[j]);
            }
        }
    }
    return w;
}

} // namespace mordell
