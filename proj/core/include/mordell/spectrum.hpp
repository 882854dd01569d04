#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mordell/kappa.hpp"
#include "mordell/lattice.hpp"
#include "mordell/polynomial.hpp"
#include "mordell/rational.hpp"

namespace mordell {

// (p + q sqrt(D)) / r in lowest terms: D squarefree and > 1, q nonzero,
// r positive, gcd(p, q, r) = 1. construction normalizes any D > 0 by
// pulling square factors into q and rejects rational values.
class QuadraticIrrational {
public:
    QuadraticIrrational(Integer p, Integer q, Integer d, Integer r);

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    const Integer& d() const { return d_; }
    const Integer& r() const { return r_; }

    RealAlgebraic value() const;
    QPolynomial minimal_polynomial() const; // monic quadratic over Q
    Integer field_discriminant() const;     // D for D = 1 mod 4, else 4D

    bool operator==(const QuadraticIrrational& o) const {
        return p_ == o.p_ && q_ == o.q_ && d_ == o.d_ && r_ == o.r_;
    }
    std::string str() const;

private:
    Integer p_, q_, d_, r_;
};

// eventually periodic continued fraction [preperiod; period period ...].
// the leading digit is the integer part and may be any integer; all later
// digits are at least one and the period is minimal and nonempty.
struct CFExpansion {
    std::vector<long long> preperiod;
    std::vector<long long> period;
};

CFExpansion cf_expand(const QuadraticIrrational& x);

// largest digit among a_1, a_2, ...: the eventual digits plus the preperiod
// tail; the integer part a_0 does not count
long long max_tail_digit(const CFExpansion& e);

// every digit a_i with i >= 1 is at most k
bool in_bad_k(const QuadraticIrrational& x, long long k);

// sqrt((3m-2)(3m+2)) / m in canonical form
QuadraticIrrational cusick_family(long long m);

// unimodular plane lattice of Z + Zx under both field embeddings
Lattice quadratic_lattice(const QuadraticIrrational& x);

struct SpectrumPoint {
    long long param = 0; // family parameter the point came from
    QuadraticIrrational x;
    Integer field_disc;
    long long max_digit = 0;   // largest eventual continued fraction digit
    RealAlgebraic lambda;      // product minimum within the scan radius
    RealAlgebraic kappa_oracle; // exact best pair box within the radius
    RealAlgebraic kappa_search; // certified lower bound from the diagonal search
    bool certified = false;
};

// evaluates every family member independently (worker count from the
// MORDELL_THREADS environment variable) and returns rows sorted by
// (field discriminant, parameter); identical inputs give identical output
std::vector<SpectrumPoint> spectrum_scan(
    const std::vector<std::pair<long long, QuadraticIrrational>>& family,
    const SearchBudget& budget = {}, long radius = 10, unsigned seed = 0);

// fixed schema, 12 significant digits, '.' decimal separator
std::string spectrum_csv(const std::vector<SpectrumPoint>& points);

// the word built from growing centered blocks of a doubly infinite digit
// sequence: block t reads a_{-t} ... a_0 ... a_t, blocks are concatenated in
// order of t, and the first `depth` symbols are returned. alpha holds the
// backward digits a_{-1}, a_{-2}, ...; omega the forward digits a_0, a_1, ...
struct InterleaveWord {
    std::vector<long long> word;
    long long uniform_digit = 1; // one more than the largest input digit
};

InterleaveWord interleave_word(const std::vector<long long>& alpha,
                               const std::vector<long long>& omega, int depth);

} // namespace mordell
