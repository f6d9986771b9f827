// Copyright 2026 The qracd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRACD_REPRODUCE_HPP
#define QRACD_REPRODUCE_HPP

// The reproduction checklist: every reference value with its tolerance and
// runtime budget. Used by `qracd reproduce` and by the acceptance tests.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qracd/angle.hpp"
#include "qracd/discord.hpp"
#include "qracd/geodiscord.hpp"
#include "qracd/qmath.hpp"
#include "qracd/qrac.hpp"
#include "qracd/search.hpp"

namespace qracd {

struct CheckItem {
    enum class Kind { Near, AtLeast, AtMost };
    std::string what;
    Kind kind;
    double expected;
    double got;
    double tolerance;
    bool pass;
};

struct CheckReport {
    std::string name;
    std::string title;
    std::vector<CheckItem> items;
    double seconds = 0.0;
    double time_limit = 0.0;
    bool pass = false;
};

struct ReproduceOptions {
    /// Shifts every reference toward failure; 0 for a real run.
    double perturb = 0.0;
    unsigned workers = 8;
};

/// Collects items for one criterion.
class CheckContext {
   public:
    explicit CheckContext(double perturb) : perturb_(perturb) {}

    void near(std::string what, double expected, double got, double tol) {
        expected += perturb_;
        add({std::move(what), CheckItem::Kind::Near, expected, got, tol, std::abs(got - expected) <= tol});
    }
    void at_least(std::string what, double bound, double got) {
        bound += perturb_;
        add({std::move(what), CheckItem::Kind::AtLeast, bound, got, 0.0, got >= bound});
    }
    void at_most(std::string what, double bound, double got) {
        bound -= perturb_;
        add({std::move(what), CheckItem::Kind::AtMost, bound, got, 0.0, got <= bound});
    }

    std::vector<CheckItem> take() { return std::move(items_); }

   private:
    void add(CheckItem item) {
        // NaN never passes.
        if (std::isnan(item.got)) item.pass = false;
        items_.push_back(std::move(item));
    }
    double perturb_;
    std::vector<CheckItem> items_;
};

struct CheckDef {
    std::string name;
    std::string title;
    double time_limit;
    std::function<void(CheckContext &, const ReproduceOptions &)> body;
};

namespace detail {

inline Params random_params(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
    Params p;
    for (auto &v : p) v = u(rng);
    return p;
}

inline MeasurementDirection random_direction(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return MeasurementDirection::from_angles(std::acos(1.0 - 2.0 * u(rng)), 2.0 * kPi * u(rng));
}

inline double max_abs_diff(const RealSpectrum &a, const RealSpectrum &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// Angle of an in-plane direction, a = (cos t, 0, sin t), t in [0, pi).
inline double in_plane_theta(const Vec3 &a) {
    double t = std::atan2(a[2], a[0]);
    while (t < 0.0) t += kPi;
    while (t >= kPi) t -= kPi;
    return t;
}

}  // namespace detail

inline std::vector<CheckDef> reproduction_checks() {
    using std::numbers::sqrt2;
    std::vector<CheckDef> checks;

    checks.push_back({"qd_optimal", "discord of the optimal code is 1/2 at theta = pi/4 or 3pi/4", 1.0,
                      [](CheckContext &c, const ReproduceOptions &) {
                          const auto r = quantum_discord(optimal_encoding());
                          c.near("D", 0.5, r.value, 1e-6);
                          c.near("argmin |a2|", 0.0, std::abs(r.argmin[1]), 1e-9);
                          const double t = detail::in_plane_theta(r.argmin.vec());
                          const double target = std::abs(t - kPi / 4) < std::abs(t - 3 * kPi / 4) ? kPi / 4 : 3 * kPi / 4;
                          c.near("argmin theta", target, t, kPi / 180.0);
                      }});

    checks.push_back({"gd_optimal", "geometric discord of the optimal code is 1/16, G = diag(1,0,1)/2", 1e-3,
                      [](CheckContext &c, const ReproduceOptions &) {
                          const auto enc = optimal_encoding();
                          c.near("D_G", 1.0 / 16.0, geometric_discord(enc), 1e-12);
                          const auto g = bloch_decompose(enc).g;
                          const Mat3 want = {{{0.5, 0, 0}, {0, 0, 0}, {0, 0, 0.5}}};
                          double diff = 0.0;
                          for (int i = 0; i < 3; ++i)
                              for (int j = 0; j < 3; ++j) diff = std::max(diff, std::abs(g[i][j] - want[i][j]));
                          c.near("max |G - diag(1,0,1)/2|", 0.0, diff, 1e-12);
                      }});

    checks.push_back({"witness_optimal", "witness maximum 2 sqrt2 and success probability (2+sqrt2)/4", 1e-3,
                      [](CheckContext &c, const ReproduceOptions &) {
                          const auto enc = optimal_encoding();
                          const auto w = witness_max_closed(enc);
                          c.near("T_max", 2.0 * sqrt2, w.t_max, 1e-12);
                          c.near("P_B", (2.0 + sqrt2) / 4.0, success_probability(enc, w.m0, w.m1), 1e-12);
                      }});

    checks.push_back({"planar_closed_form", "planar closed form agrees with the general path", 5.0,
                      [](CheckContext &c, const ReproduceOptions &) {
                          std::mt19937_64 rng(20130101);
                          std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
                          double diff = 0.0;
                          for (int n = 0; n < 10000; ++n) {
                              const std::array<double, 4> d = {u(rng), u(rng), u(rng), u(rng)};
                              const double general = geometric_discord(encoding_states(d, {0, 0}));
                              diff = std::max(diff, std::abs(planar_gd_closed(d).d_g - general));
                          }
                          c.near("max |closed - general| over 1e4 planar tuples", 0.0, diff, 1e-10);
                          double sym = 0.0;
                          for (int n = 0; n <= 1000; ++n) {
                              const double delta = 2.0 * kPi * n / 1000.0;
                              const double want = (1.0 - std::abs(std::sin(4.0 * delta))) / 16.0;
                              sym = std::max(sym, std::abs(geometric_discord(planar_rotation(delta)) - want));
                          }
                          c.near("max |D_G - (1-|sin4d|)/16| over symmetric rotations", 0.0, sym, 1e-12);
                      }});

    checks.push_back({"classical_point", "delta = pi/8 gives a classical-classical state", 1.0,
                      [](CheckContext &c, const ReproduceOptions &) {
                          const auto enc = planar_rotation(kPi / 8.0);
                          c.at_most("D", 1e-6, quantum_discord(enc).value);
                          c.at_most("D_G", 1e-12, geometric_discord(enc));
                          c.near("T_max", 2.0, witness_max_closed(enc).t_max, 1e-9);
                      }});

    checks.push_back({"reference_points", "published parameter tuples", 1.0, [](CheckContext &c, const ReproduceOptions &) {
                          struct Row {
                              const char *label;
                              Params pi_mult;
                              double gd8;
                              double t;
                          };
                          const Row rows[] = {
                              {"pi/10", {1.40, 1.90, 0.30, 0.70, 0.60, 0.40}, 0.6090, 1.9519},
                              {"pi/20", {0.35, 1.90, 0.45, 1.55, 0.60, 0.35}, 0.6431, 2.2740},
                              {"pi*1e-4", {0.2509, 0.1980, 0.3909, 1.6089, 0.6928, 0.3079}, 0.6649, 1.1658},
                          };
                          for (const auto &row : rows) {
                              Params p;
                              for (int i = 0; i < 6; ++i) p[i] = row.pi_mult[i] * kPi;
                              c.near(std::string("8D_G row ") + row.label, row.gd8, gd8_at(p), 5e-4);
                              c.at_least(std::string("T_max row ") + row.label, row.t - 5e-3,
                                         witness_max_closed(encoding_from_params(p)).t_max);
                          }
                      }});

    checks.push_back({"grid_search", "pi/10 lattice search and refinement toward 2/3", 600.0,
                      [](CheckContext &c, const ReproduceOptions &opts) {
                          GridSpec spec;
                          spec.step = kPi / 10.0;
                          spec.workers = opts.workers;
                          const auto res = grid_search_gd(spec);
                          c.near("lattice cells", 64e6, static_cast<double>(res.evaluations), 0.0);
                          c.at_least("8D_G of pi/10 winner", 0.6090 - 1e-4, res.gd8);
                          c.at_most("8D_G of pi/10 winner", 2.0 / 3.0 + 1e-9, res.gd8);
                          const auto refined = refine_local(res.params, kPi * 1e-4);
                          c.at_least("8D_G refined from pi/10 winner", 0.66, refined.gd8);
                      }});

    checks.push_back({"upper_bounds", "bounds over 1e5 random encodings", 60.0,
                      [](CheckContext &c, const ReproduceOptions &) {
                          std::mt19937_64 rng(1729);
                          OptimizerSettings coarse;
                          coarse.polar_points = 37;
                          coarse.azimuth_points = 19;
                          coarse.tolerance = 1e-7;
                          double max_gd8 = 0.0, max_t = 0.0, max_tr = 0.0, min_d = 1.0, max_excess = -1.0, max_pb = 0.0;
                          for (int n = 0; n < 100000; ++n) {
                              const auto enc = encoding_from_params(detail::random_params(rng));
                              const auto dec = bloch_decompose(enc);
                              max_gd8 = std::max(max_gd8, 8.0 * geometric_discord(enc));
                              max_tr = std::max(max_tr, std::abs(trace(dec.g) - 1.0));
                              const auto w = witness_max_closed(enc);
                              max_t = std::max(max_t, w.t_max);
                              const auto m0 = detail::random_direction(rng);
                              const auto m1 = detail::random_direction(rng);
                              max_pb = std::max(max_pb, std::abs(success_probability(enc, m0, m1) -
                                                                 (0.5 + witness_value(enc, m0, m1) / 8.0)));
                              const double d = quantum_discord(enc, coarse).value;
                              min_d = std::min(min_d, d);
                              max_excess = std::max(max_excess, d - mutual_information(enc));
                          }
                          c.at_most("max 8D_G", 2.0 / 3.0 + 1e-9, max_gd8);
                          c.at_most("max T_max", 2.0 * sqrt2 + 1e-9, max_t);
                          c.near("max |tr G - 1|", 0.0, max_tr, 1e-10);
                          c.at_least("min D", -1e-9, min_d);
                          c.at_most("max (D - I)", 1e-9, max_excess);
                          c.near("max |P_B - (1/2 + T/8)|", 0.0, max_pb, 1e-12);
                      }});

    checks.push_back({"oracle_equivalence", "Bloch-arithmetic ensembles match the dense 8x8 path", 10.0,
                      [](CheckContext &c, const ReproduceOptions &) {
                          std::mt19937_64 rng(4242);
                          double diff = 0.0;
                          for (int n = 0; n < 1000; ++n) {
                              const auto enc = encoding_from_params(detail::random_params(rng));
                              const auto a = detail::random_direction(rng);
                              const auto fast = conditional_ensemble(enc, a);
                              const auto dense = conditional_ensemble_dense(enc, a);
                              diff = std::max({diff, std::abs(fast.p_plus - dense.p_plus),
                                               std::abs(fast.p_minus - dense.p_minus),
                                               detail::max_abs_diff(fast.spec_plus, dense.spec_plus),
                                               detail::max_abs_diff(fast.spec_minus, dense.spec_minus)});
                          }
                          c.near("max |fast - dense| over 1e3 pairs", 0.0, diff, 1e-10);
                      }});

    checks.push_back({"sweep_monotone", "qd, 8D_G and T-2 fall together over delta in [0, pi/8]", 30.0,
                      [](CheckContext &c, const ReproduceOptions &) {
                          const auto rows = sweep_planar(0.0, kPi / 8.0, 101);
                          double rise_qd = 0.0, rise_gd = 0.0, rise_t = 0.0;
                          for (std::size_t i = 1; i < rows.size(); ++i) {
                              rise_qd = std::max(rise_qd, rows[i].qd - rows[i - 1].qd);
                              rise_gd = std::max(rise_gd, rows[i].gd8 - rows[i - 1].gd8);
                              rise_t = std::max(rise_t, rows[i].t_minus_2 - rows[i - 1].t_minus_2);
                          }
                          c.at_most("max step increase of qd", 1e-9, rise_qd);
                          c.at_most("max step increase of 8D_G", 1e-9, rise_gd);
                          c.at_most("max step increase of T-2", 1e-9, rise_t);
                      }});

    checks.push_back({"theta_curve", "measurement-angle curve of the optimal code", 1.0,
                      [](CheckContext &c, const ReproduceOptions &) {
                          const auto enc = optimal_encoding();
                          c.near("Dtilde(pi/4)", 0.5, dtilde_at(enc, kPi / 4.0), 1e-12);
                          c.near("Dtilde(3pi/4)", 0.5, dtilde_at(enc, 3.0 * kPi / 4.0), 1e-12);
                          // Binary entropy of cos^2(pi/8).
                          const double q = 0.5 * (1.0 + 1.0 / sqrt2);
                          const double h = -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
                          c.near("Dtilde(0)", h, dtilde_at(enc, 0.0), 1e-12);
                          c.near("Dtilde(0) rounded", 0.6009, dtilde_at(enc, 0.0), 5e-5);
                          c.near("derivative zero", kPi / 4.0,
                                 dtilde_derivative_zero(enc, kPi / 4.0 - kPi / 8.0, kPi / 4.0 + kPi / 8.0), 1e-3);
                      }});

    return checks;
}

inline CheckReport run_check(const CheckDef &def, const ReproduceOptions &opts) {
    CheckReport rep;
    rep.name = def.name;
    rep.title = def.title;
    rep.time_limit = def.time_limit;
    CheckContext ctx(opts.perturb);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        def.body(ctx, opts);
    } catch (const std::exception &e) {
        ctx.near(std::string("exception: ") + e.what(), 0.0, std::nan(""), 0.0);
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.items = ctx.take();
    rep.pass = !rep.items.empty() && rep.seconds < rep.time_limit &&
               std::all_of(rep.items.begin(), rep.items.end(), [](const CheckItem &i) { return i.pass; });
    return rep;
}

inline void print_report(std::ostream &out, const CheckReport &rep) {
    out << (rep.pass ? "PASS " : "FAIL ") << rep.name << "  (" << rep.title << ")  " << format_number(rep.seconds, 4)
        << " s / limit " << format_number(rep.time_limit, 4) << " s\n";
    for (const auto &item : rep.items) {
        out << "    " << (item.pass ? "ok   " : "FAIL ") << item.what << ": got " << format_number(item.got, 12);
        switch (item.kind) {
            case CheckItem::Kind::Near:
                out << ", expected " << format_number(item.expected, 12) << " +- " << format_number(item.tolerance, 3);
                break;
            case CheckItem::Kind::AtLeast:
                out << ", expected >= " << format_number(item.expected, 12);
                break;
            case CheckItem::Kind::AtMost:
                out << ", expected <= " << format_number(item.expected, 12);
                break;
        }
        out << "\n";
    }
}

}  // namespace qracd

#endif  // QRACD_REPRODUCE_HPP
