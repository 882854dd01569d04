#include "mordell/kappa.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>

#include "mordell/enumerate.hpp"
#include "mordell/errors.hpp"
#include "mordell/etale.hpp"

namespace mordell {

namespace {

// first nonzero coefficient positive; enumeration emits both signs
bool canonical_coeffs(const std::vector<long long>& c) {
    for (long long x : c) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

// odometer over nonzero coefficient vectors with sup norm <= radius, one
// representative per +- pair
template <typename F>
void for_each_canonical(int n, long radius, F&& f) {
    std::vector<long long> c(static_cast<size_t>(n), -radius);
    for (;;) {
        if (canonical_coeffs(c)) f(c);
        int i = n - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == radius) {
            c[static_cast<size_t>(i)] = -radius;
            --i;
        }
        if (i < 0) break;
        ++c[static_cast<size_t>(i)];
    }
}

} // namespace

std::optional<LatticePoint> interior_witness(const Lattice& lat, const SymmetricBox& box) {
    auto pts = enumerate_in_box(lat, box, true, 1);
    if (pts.empty()) return std::nullopt;
    return pts.front();
}

bool is_admissible(const Lattice& lat, const SymmetricBox& box) {
    return !interior_witness(lat, box).has_value();
}

namespace {

// exact and numeric copies of the generator matrix, shared across the many
// weighted norm queries of one search so the algebraic entries are built once
struct sup_min_context {
    const Lattice& lat;
    RMatrix basis;
    std::vector<std::vector<double>> approx_rows;

    explicit sup_min_context(const Lattice& l)
        : lat(l), basis(l.basis_matrix()), approx_rows(l.approx_basis()) {}
};

RealAlgebraic weighted_sup_min_on(const sup_min_context& ctx, const std::vector<Rational>& weights) {
    const Lattice& lat = ctx.lat;
    const int n = lat.n();
    if (static_cast<int>(weights.size()) != n)
        throw InvalidInputError("weight count must match the lattice dimension");
    Rational wprod(1);
    for (const auto& w : weights) {
        if (sign(w) <= 0) throw InvalidInputError("weights must be positive");
        wprod *= w;
    }

    const RMatrix& basis = ctx.basis;
    auto rows = ctx.approx_rows;
    for (size_t i = 0; i < rows.size(); ++i) {
        double w = to_double(weights[i]);
        for (auto& v : rows[i]) v *= w;
    }

    // rational interval of max_i w_i |row_i . c| at enclosure width wid
    auto norm_interval = [&](const std::vector<long long>& c, const Rational& wid) {
        Rational mlo(0), mhi(0);
        for (int i = 0; i < n; ++i) {
            Rational lo(0), hi(0);
            for (size_t j = 0; j < c.size(); ++j) {
                if (c[j] == 0) continue;
                auto [elo, ehi] = basis[static_cast<size_t>(i)][j].enclosure(wid);
                Rational cq(static_cast<long>(c[j]));
                if (c[j] > 0) {
                    lo += cq * elo;
                    hi += cq * ehi;
                } else {
                    lo += cq * ehi;
                    hi += cq * elo;
                }
            }
            Rational alo = sign(lo) >= 0 ? lo : (sign(hi) <= 0 ? -hi : Rational(0));
            Rational ahi = std::max(abs(lo), abs(hi));
            const Rational& w = weights[static_cast<size_t>(i)];
            alo *= w;
            ahi *= w;
            if (i == 0 || alo > mlo) mlo = alo;
            if (i == 0 || ahi > mhi) mhi = ahi;
        }
        return std::pair<Rational, Rational>(mlo, mhi);
    };

    auto norm_exact = [&](const std::vector<long long>& c) {
        std::optional<RealAlgebraic> m;
        for (int i = 0; i < n; ++i) {
            RealAlgebraic img(Rational(0));
            for (size_t j = 0; j < c.size(); ++j) {
                if (c[j] == 0) continue;
                img = img + basis[static_cast<size_t>(i)][j] * RealAlgebraic(Rational(static_cast<long>(c[j])));
            }
            RealAlgebraic v = img.abs() * RealAlgebraic(weights[static_cast<size_t>(i)]);
            if (!m || v > *m) m = std::move(v);
        }
        return *m;
    };

    // the weighted ball of radius r is the box with half widths r / w_i, of
    // volume (2r)^n / prod w; at r slightly above (covol * prod w)^(1/n) it
    // must hold a nonzero point, so the bracket closes immediately in exact
    // arithmetic and the doublings below only absorb approximation slack
    double target = std::pow(lat.covolume().approx() * to_double(wprod), 1.0 / n);
    Rational r(mpq_class(target * 1.01 + 1e-9));
    for (int attempt = 0;; ++attempt) {
        if (attempt > 8) throw DomainError("weighted norm bracket failed to close");
        // candidate pool covers the closed weighted ball of radius r; the
        // minimum is certain only if some candidate attains a value <= r
        double radius = std::sqrt(static_cast<double>(n)) * to_double(r) * (1.0 + 1e-7) + 1e-9;
        auto cands = ellipsoid_candidates(rows, radius, 4000000);
        if (cands.empty()) {
            r *= 2;
            continue;
        }
        // screen with rational intervals, keeping only possible minimizers;
        // exact algebraic evaluation is reserved for the few survivors
        std::vector<std::pair<Rational, Rational>> iv(cands.size());
        std::vector<size_t> alive(cands.size());
        for (size_t k = 0; k < cands.size(); ++k) alive[k] = k;
        Rational wid(1, 1 << 20);
        for (int round = 0; round < 5 && alive.size() > 1; ++round) {
            std::optional<Rational> cap;
            for (size_t k : alive) {
                iv[k] = norm_interval(cands[k], wid);
                if (!cap || iv[k].second < *cap) cap = iv[k].second;
            }
            std::vector<size_t> next;
            for (size_t k : alive)
                if (!(iv[k].first > *cap)) next.push_back(k);
            alive.swap(next);
            wid /= 1 << 12;
        }
        std::optional<RealAlgebraic> best;
        if (lat.origin()) {
            // the positive global scale factors out of every value, so the
            // winner is found with field arithmetic of the origin degree and
            // scaled exactly once at the end
            const auto& org = *lat.origin();
            const auto& homs = org.algebra->hom_table();
            for (size_t k : alive) {
                AlgebraElement beta = origin_combination(lat, cands[k]);
                std::optional<RealAlgebraic> m;
                for (int i = 0; i < n; ++i) {
                    const auto& [comp, emb] = homs[static_cast<size_t>(i)];
                    RealAlgebraic v = beta.part(comp).value(emb).abs() *
                                      RealAlgebraic(weights[static_cast<size_t>(i)]);
                    if (!m || v > *m) m = std::move(v);
                }
                if (!best || *m < *best) best = std::move(m);
            }
            best = *best * org.scale;
        } else {
            for (size_t k : alive) {
                RealAlgebraic v = norm_exact(cands[k]);
                if (!best || v < *best) best = std::move(v);
            }
        }
        if (*best > RealAlgebraic(r)) {
            // every candidate sits outside the ball, so the true minimizer
            // may as well; widen and repeat
            r *= 2;
            continue;
        }
        return *best;
    }
}

} // namespace

RealAlgebraic weighted_sup_min(const Lattice& lat, const std::vector<Rational>& weights) {
    return weighted_sup_min_on(sup_min_context(lat), weights);
}

RealAlgebraic largest_admissible_cube(const Lattice& lat) {
    return weighted_sup_min(lat, std::vector<Rational>(static_cast<size_t>(lat.n()), Rational(1)));
}

RVector normalize_to_cube(const Lattice& lat, const SymmetricBox& box) {
    const int n = lat.n();
    if (box.n() != n) throw InvalidInputError("box dimension must match the lattice");
    RealAlgebraic g(1);
    for (int i = 0; i < n; ++i) g = g * box.half_width(i);
    g = g.nth_root(n);
    RVector d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = g / box.half_width(i);
    return d;
}

LockingConfiguration locking_points(const Lattice& lat, const SymmetricBox& box) {
    const int n = lat.n();
    if (box.n() != n) throw InvalidInputError("box dimension must match the lattice");
    if (interior_witness(lat, box))
        throw DomainError("locking points are defined for admissible boxes only");

    LockingConfiguration cfg;
    cfg.boundary = enumerate_in_box(lat, box, false);
    cfg.face.assign(static_cast<size_t>(n), {});
    cfg.face_interior.assign(static_cast<size_t>(n), {});
    for (size_t k = 0; k < cfg.boundary.size(); ++k) {
        const auto& p = cfg.boundary[k];
        // admissibility pushes every enumerated point onto the boundary
        for (int i : p.tight_rows) {
            if (p.image[static_cast<size_t>(i)].sign() <= 0) continue;
            cfg.face[static_cast<size_t>(i)].push_back(k);
            if (p.tight_rows.size() == 1) cfg.face_interior[static_cast<size_t>(i)].push_back(k);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (cfg.face[static_cast<size_t>(i)].empty()) cfg.unlocked.push_back(i);
        if (cfg.face_interior[static_cast<size_t>(i)].empty()) cfg.growable.push_back(i);
    }
    return cfg;
}

std::vector<FaceCertificate> locking_certificate(const Lattice& lat, const SymmetricBox& box,
                                                 const Partition& p) {
    if (p.n() != lat.n()) throw InvalidInputError("partition size must match the lattice");
    auto cfg = locking_points(lat, box);
    if (!cfg.growable.empty())
        throw DomainError("face " + std::to_string(cfg.growable.front() + 1) +
                          " is not locked in its relative interior");

    std::vector<FaceCertificate> out;
    for (int b = 0; b < p.num_blocks(); ++b) {
        const auto& block = p.block(b);
        for (int i0 : block) {
            std::vector<std::vector<RealAlgebraic>> proj;
            for (size_t k : cfg.face_interior[static_cast<size_t>(i0)]) {
                const auto& pt = cfg.boundary[k];
                std::vector<RealAlgebraic> row;
                for (int j : block)
                    if (j != i0) row.push_back(pt.image[static_cast<size_t>(j)]);
                proj.push_back(std::move(row));
            }
            auto hull = zero_in_convex_hull(proj);
            FaceCertificate fc;
            fc.block = b;
            fc.axis = i0;
            fc.certified = hull.contains;
            fc.improving = std::move(hull.functional);
            out.push_back(std::move(fc));
        }
    }
    return out;
}

namespace {

struct diag_less {
    bool operator()(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return false;
    }
};

int lex_compare(const RVector& a, const RVector& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        int c = a[i].compare(b[i]);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace

MordellEstimate kappa_search(const Lattice& lat, const SearchBudget& budget, unsigned seed) {
    const int n = lat.n();
    if (budget.max_evals < 1 || !(budget.max_seconds > 0))
        throw InvalidInputError("search budget must allow at least one evaluation");
    const RealAlgebraic& covol = lat.covolume();
    const auto t0 = std::chrono::steady_clock::now();

    long evals = 0;
    bool degenerate = false;
    std::vector<SearchRecord> log;
    std::map<std::vector<Rational>, std::optional<RealAlgebraic>, diag_less> cache;

    const Rational cap(4096); // diagonal entries confined to [1/cap, cap]

    auto out_of_time = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() >
               budget.max_seconds;
    };
    auto stopped = [&] { return evals >= budget.max_evals || out_of_time(); };

    // the free part holds n-1 entries; the last one balances the product to 1
    auto full_diag = [&](const std::vector<Rational>& d) {
        std::vector<Rational> f = d;
        Rational prod(1);
        for (const auto& x : d) prod *= x;
        f.push_back(Rational(1) / prod);
        return f;
    };

    const sup_min_context ctx(lat);
    auto evaluate = [&](const std::vector<Rational>& d) -> std::optional<RealAlgebraic> {
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
        ++evals;
        std::optional<RealAlgebraic> h;
        try {
            h = weighted_sup_min_on(ctx, full_diag(d));
        } catch (const BudgetError&) {
            h = std::nullopt; // blown enumeration marks a dead direction
        }
        if (h && log.size() < 5000) log.push_back({full_diag(d), *h});
        cache.emplace(d, h);
        return h;
    };

    std::optional<RealAlgebraic> best_h;
    std::vector<Rational> best_d;

    auto witness_widths = [&](const std::vector<Rational>& dfull, const RealAlgebraic& h) {
        RVector w(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            w[static_cast<size_t>(i)] = h / RealAlgebraic(dfull[static_cast<size_t>(i)]);
        return w;
    };

    auto consider = [&](const std::vector<Rational>& d, const RealAlgebraic& h) {
        if (!best_h) {
            best_h = h;
            best_d = d;
            return;
        }
        int c = h.compare(*best_h);
        if (c > 0) {
            best_h = h;
            best_d = d;
        } else if (c == 0 &&
                   lex_compare(witness_widths(full_diag(d), h),
                               witness_widths(full_diag(best_d), *best_h)) < 0) {
            best_d = d; // equal volume: keep the lexicographically smallest box
        }
    };

    // a cube meeting the covolume bound cannot be improved
    auto optimal = [&](const RealAlgebraic& h) { return h.pow(n) == covol; };

    std::vector<std::vector<Rational>> starts;
    if (n >= 2) {
        const Rational opts[3] = {Rational(1), Rational(1, 2), Rational(2)};
        size_t count = 1;
        for (int i = 0; i < n - 1; ++i) count *= 3;
        for (size_t s = 0; s < count; ++s) {
            std::vector<Rational> d;
            size_t x = s;
            for (int i = 0; i < n - 1; ++i) {
                d.push_back(opts[x % 3]);
                x /= 3;
            }
            starts.push_back(std::move(d)); // all-ones start comes first
        }
        std::mt19937 rng(seed);
        for (int extra = 0; extra < 2; ++extra) {
            std::vector<Rational> d;
            for (int i = 0; i < n - 1; ++i)
                d.push_back(Rational(64 + static_cast<long>(rng() % 193), 128));
            starts.push_back(std::move(d));
        }
    } else {
        starts.push_back({});
    }

    const Rational step_floor = Rational(1) + Rational(1, 1 << 26);
    for (const auto& start : starts) {
        if (stopped()) break;
        auto h0 = evaluate(start);
        if (!h0) continue;
        std::vector<Rational> cur = start;
        RealAlgebraic hcur = *h0;
        consider(cur, hcur);
        if (optimal(hcur)) break;
        // moves scale one free entry or a pair of them; pair moves cross the
        // diagonal ridges of the piecewise linear landscape where single
        // coordinate steps only zigzag
        std::vector<std::vector<std::pair<int, int>>> moves;
        for (int i = 0; i < n - 1; ++i) {
            moves.push_back({{i, 1}});
            moves.push_back({{i, -1}});
        }
        for (int i = 0; i < n - 1; ++i)
            for (int j = i + 1; j < n - 1; ++j)
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2) moves.push_back({{i, si}, {j, sj}});
        Rational step(2);
        while (n >= 2 && !stopped() && step > step_floor) {
            std::vector<Rational> next;
            std::optional<RealAlgebraic> hnext;
            for (const auto& mv : moves) {
                if (stopped()) break;
                std::vector<Rational> cand = cur;
                bool inside = true;
                for (auto [i, s] : mv) {
                    auto& e = cand[static_cast<size_t>(i)];
                    if (s > 0)
                        e *= step;
                    else
                        e /= step;
                    if (e > cap || e < Rational(1) / cap) {
                        degenerate = true; // improvement pressed against the cap
                        inside = false;
                        break;
                    }
                }
                if (!inside) continue;
                auto h = evaluate(cand);
                if (h && *h > hcur && (!hnext || *h > *hnext)) {
                    hnext = *h;
                    next = std::move(cand);
                }
            }
            if (hnext) {
                cur = std::move(next);
                hcur = *hnext;
                consider(cur, hcur);
                if (optimal(hcur)) break;
            } else {
                step = (step + 1) / 2;
                // only the record holding trajectory earns the fine ladder;
                // beaten starts stop once their local shape is clear
                if (best_h && hcur < *best_h && step < Rational(1) + Rational(1, 256)) break;
            }
        }
        if (best_h && optimal(*best_h)) break;
    }

    if (!best_h) throw BudgetError("search budget exhausted before any frame was evaluated");

    auto dfull = full_diag(best_d);
    SymmetricBox wbox(witness_widths(dfull, *best_h));
    bool certified = is_admissible(lat, wbox);
    RealAlgebraic kappa = best_h->pow(n) / covol;
    return MordellEstimate{std::move(kappa), std::move(wbox),    std::move(dfull), certified,
                           degenerate,       evals,              std::move(log)};
}

RealAlgebraic kappa_oracle_2d(const Lattice& lat, long radius) {
    if (lat.n() != 2) throw UnsupportedError("the pair oracle handles two dimensions only");
    if (radius < 1) throw InvalidInputError("oracle radius must be at least one");
    if ((2 * radius + 1) * (2 * radius + 1) > 4'000'000)
        throw BudgetError("oracle radius too large");

    std::vector<RealAlgebraic> xs, ys;
    for_each_canonical(2, radius, [&](const std::vector<long long>& c) {
        RVector img = lat.image(c);
        RealAlgebraic ax = img[0].abs(), ay = img[1].abs();
        if (ax.sign() > 0) xs.push_back(std::move(ax));
        if (ay.sign() > 0) ys.push_back(std::move(ay));
    });
    auto dedup = [](std::vector<RealAlgebraic>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(xs);
    dedup(ys);
    if (xs.empty() || ys.empty())
        throw DomainError("every point inside the radius has a zero coordinate");

    // admissibility is monotone under shrinking, so the best second half
    // width is nonincreasing as the first one grows: one sweep suffices
    std::optional<RealAlgebraic> best;
    long j = static_cast<long>(ys.size()) - 1;
    for (size_t i = 0; i < xs.size() && j >= 0; ++i) {
        while (j >= 0 && !is_admissible(lat, SymmetricBox({xs[i], ys[static_cast<size_t>(j)]})))
            --j;
        if (j < 0) break;
        RealAlgebraic area = xs[i] * ys[static_cast<size_t>(j)];
        if (!best || area > *best) best = std::move(area);
    }
    if (!best) throw DomainError("no admissible pair box inside the radius");
    return *best / lat.covolume();
}

RealAlgebraic lambda_inf(const Lattice& lat, long radius) {
    const int n = lat.n();
    if (radius < 1) throw InvalidInputError("radius must be at least one");
    if (std::pow(2.0 * radius + 1, n) > 4e6) throw BudgetError("product scan radius too large");

    if (lat.origin()) {
        // the coordinate product of a module point is the scale power times
        // the element norm up to sign, so the scan stays rational
        std::optional<Rational> best;
        for_each_canonical(n, radius, [&](const std::vector<long long>& c) {
            AlgebraElement b = origin_combination(lat, c);
            Rational q(1);
            for (int j = 0; j < b.algebra()->num_components(); ++j) q *= b.part(j).norm();
            q = abs(q);
            if (!best || q < *best) best = std::move(q);
        });
        return RealAlgebraic(*best) * lat.origin()->scale.pow(n);
    }
    std::optional<RealAlgebraic> best;
    for_each_canonical(n, radius, [&](const std::vector<long long>& c) {
        RVector img = lat.image(c);
        RealAlgebraic p(1);
        for (const auto& v : img) p = p * v;
        p = p.abs();
        if (!best || p < *best) best = std::move(p);
    });
    return *best;
}

GruberReport gruber_consistency(const Lattice& lat, long radius, const SearchBudget& budget) {
    if (lat.n() != 2) throw UnsupportedError("the consistency report handles two dimensions only");
    if (radius < 1) throw InvalidInputError("radius must be at least one");

    GruberReport rep;
    RealAlgebraic l1 = lambda_inf(lat, radius);
    RealAlgebraic l2 = lambda_inf(lat, 2 * radius);
    rep.lambda_stable = (l1 == l2);
    rep.lambda_upper = std::move(l2);
    auto est = kappa_search(lat, budget, 0);
    rep.kappa_lower = est.kappa_lower;

    if (rep.lambda_upper.sign() == 0) {
        // a zero product admits boxes arbitrarily close to the covolume
        // bound, so the estimate has to crowd toward one
        rep.consistent = rep.kappa_lower >= RealAlgebraic(Rational(9, 10));
        rep.note = rep.consistent ? "zero product minimum and the kappa estimate approaches one"
                                  : "zero product minimum but the kappa estimate stayed low";
    } else if (rep.lambda_stable) {
        rep.consistent = rep.kappa_lower < RealAlgebraic(1);
        rep.note = rep.consistent ? "stable positive product minimum and kappa strictly below one"
                                  : "positive product minimum yet kappa reached one";
    } else {
        rep.consistent = true;
        rep.note = "product minimum still shrinking at this radius, no verdict";
    }
    return rep;
}

} // namespace mordell
