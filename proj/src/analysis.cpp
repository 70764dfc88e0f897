#include "gms/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "gms/simplex.hpp"

namespace gms {

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::a_at_least_as_tight: return "A_at_least_as_tight";
        case Verdict::b_at_least_as_tight: return "B_at_least_as_tight";
        case Verdict::equivalent: return "equivalent";
        case Verdict::a_strictly_tighter: return "A_strictly_tighter";
        case Verdict::b_strictly_tighter: return "B_strictly_tighter";
        case Verdict::noncomparable: return "noncomparable";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double rand01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string x_label(int t, const std::string& task_id) {
    return "X_" + std::to_string(t) + "_" + task_id;
}
std::string s_label(int t, const std::string& task_id) {
    return "S_" + std::to_string(t) + "_" + task_id;
}

}  // namespace

/// Execution-space image of a point: X values read directly, or derived as
/// window sums of starts when the point comes from a start-only model.
static FractionalPoint x_projection(FormulationId id, const Instance& instance,
                                    const FractionalPoint& point) {
    FractionalPoint projection;
    for (int m = 0; m < instance.num_tasks(); ++m) {
        const auto& task = instance.tasks[m];
        for (int t = 1; t <= instance.horizon; ++t) {
            double value = 0.0;
            if (id == FormulationId::F6) {
                for (int tp = std::max(1, t - task.duration + 1); tp <= t; ++tp)
                    value += point.get(s_label(tp, task.id));
            } else {
                value = point.get(x_label(t, task.id));
            }
            projection.set(x_label(t, task.id), value);
        }
    }
    return projection;
}

namespace {

/// Relaxation-membership test for one formulation over one instance. Points
/// carrying every variable of the target space are checked row by row;
/// partial points are completed (or refuted) by a phase-1 probe with the
/// given labels pinned. F6 membership of anything carrying execution values
/// goes through its expanded twin, whose relaxation is identical.
class Membership {
  public:
    Membership(FormulationId id, const Instance& instance)
        : id_(id), model_(build(id, instance)) {
        if (id == FormulationId::F6) twin_ = build(FormulationId::F7, instance);
    }

    const MipModel& model() const { return model_; }

    bool contains(const FractionalPoint& point, double* measure = nullptr) const {
        const MipModel* target = &model_;
        if (id_ == FormulationId::F6) {
            for (const auto& [label, value] : point.values)
                if (label.rfind("X_", 0) == 0) {
                    target = &twin_;
                    break;
                }
        }
        FractionalPoint known;
        int covered = 0;
        for (const auto& [label, value] : point.values)
            if (target->find_var(label) >= 0) {
                known.set(label, value);
                ++covered;
            }
        if (covered == target->num_vars()) {
            const auto report = residuals(*target, known);
            if (measure) *measure = report.max_violation();
            return report.max_violation() <= kFeasTol;
        }
        const auto probe = feasibility_probe(*target, known);
        if (measure) *measure = probe.infeasibility;
        return probe.feasible;
    }

  private:
    FormulationId id_;
    MipModel model_;
    MipModel twin_;
};

}  // namespace

TightnessVerdict compare(FormulationId a, FormulationId b, const Instance& instance,
                         int n_samples, std::uint64_t seed,
                         std::span<const FractionalPoint> injected) {
    TightnessVerdict result;
    result.a = a;
    result.b = b;
    result.samples_used = n_samples;

    const MipModel model_a = build(a, instance);
    const MipModel model_b = build(b, instance);
    const Membership in_a(a, instance);
    const Membership in_b(b, instance);

    const LpSolution za = lp_solve(model_a);
    const LpSolution zb = lp_solve(model_b);
    const bool bounds_ok =
        za.status == LpStatus::optimal && zb.status == LpStatus::optimal;
    result.bound_gap = bounds_ok ? za.objective - zb.objective
                                 : std::numeric_limits<double>::quiet_NaN();

    // 0: no separation, 1: point of A outside B, 2: point of B outside A.
    std::vector<int> direction(2 * n_samples, 0);
    std::vector<FractionalPoint> projections(2 * n_samples);
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n_samples; ++k) {
        const LpSolution va = sample_vertex(model_a, mix_seed(seed, 2 * k));
        FractionalPoint xa = x_projection(a, instance, va.values);
        if (!in_b.contains(xa)) {
            direction[2 * k] = 1;
            projections[2 * k] = std::move(xa);
        }
        const LpSolution vb = sample_vertex(model_b, mix_seed(seed, 2 * k + 1));
        FractionalPoint xb = x_projection(b, instance, vb.values);
        if (!in_a.contains(xb)) {
            direction[2 * k + 1] = 2;
            projections[2 * k + 1] = std::move(xb);
        }
    }

    bool a_outside_b = false, b_outside_a = false;
    for (int k = 0; k < 2 * n_samples; ++k) {
        if (direction[k] == 0) continue;
        Witness witness;
        witness.point = std::move(projections[k]);
        witness.direction = direction[k] == 1 ? "in_A_not_B" : "in_B_not_A";
        a_outside_b |= direction[k] == 1;
        b_outside_a |= direction[k] == 2;
        result.witnesses.push_back(std::move(witness));
    }

    for (const auto& candidate : injected) {
        const bool member_a = in_a.contains(candidate);
        const bool member_b = in_b.contains(candidate);
        if (member_b && !member_a) {
            result.witnesses.push_back({candidate, "in_B_not_A"});
            b_outside_a = true;
        } else if (member_a && !member_b) {
            result.witnesses.push_back({candidate, "in_A_not_B"});
            a_outside_b = true;
        }
    }

    if (a_outside_b && b_outside_a)
        result.verdict = Verdict::noncomparable;
    else if (b_outside_a)
        result.verdict = Verdict::a_strictly_tighter;
    else if (a_outside_b)
        result.verdict = Verdict::b_strictly_tighter;
    else if (bounds_ok && std::abs(result.bound_gap) <= kFeasTol)
        result.verdict = Verdict::equivalent;
    else
        result.verdict = Verdict::inconclusive;
    return result;
}

namespace {

/// Vertices of the F7 relaxation interleaved with convex combinations of
/// consecutive vertex pairs.
std::vector<FractionalPoint> sample_f7_points(const MipModel& f7, int n_points,
                                              std::uint64_t seed) {
    std::vector<FractionalPoint> points(n_points);
    const int n_vertices = (n_points + 1) / 2;
    std::vector<FractionalPoint> vertices(n_vertices);
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n_vertices; ++k)
        vertices[k] = sample_vertex(f7, mix_seed(seed, k)).values;
    for (int k = 0; k < n_points; ++k) {
        if (k % 2 == 0) {
            points[k] = vertices[k / 2];
            continue;
        }
        const FractionalPoint& u = vertices[k / 2];
        const FractionalPoint& v = vertices[(k / 2 + 1) % n_vertices];
        std::mt19937_64 rng(mix_seed(seed ^ 0x5bf0'15f0u, k));
        const double lambda = rand01(rng);
        FractionalPoint blend;
        for (const auto& [label, value] : u.values)
            blend.set(label, lambda * value + (1.0 - lambda) * v.get(label));
        points[k] = std::move(blend);
    }
    return points;
}

}  // namespace

LemmaReport verify_lemma1(const Instance& instance, int n_points, std::uint64_t seed) {
    const MipModel f7 = build(FormulationId::F7, instance);
    const auto points = sample_f7_points(f7, n_points, seed);
    LemmaReport report;
    report.lemma = "L1";
    report.points_checked = n_points;
    for (const auto& point : points) {
        for (int m = 0; m < instance.num_tasks(); ++m) {
            const auto& task = instance.tasks[m];
            double mass = 0.0;
            for (int t = 1; t <= instance.horizon; ++t)
                mass += point.get(x_label(t, task.id));
            report.max_deviation =
                std::max(report.max_deviation, std::abs(mass - task.duration));
        }
    }
    report.pass = report.max_deviation <= kFeasTol;
    return report;
}

LemmaReport verify_lemma2(const Instance& instance, int n_points, std::uint64_t seed) {
    const MipModel f7 = build(FormulationId::F7, instance);
    const auto points = sample_f7_points(f7, n_points, seed);
    LemmaReport report;
    report.lemma = "L2";
    report.points_checked = n_points;
    report.max_deviation = -std::numeric_limits<double>::infinity();
    auto x_at = [&](const FractionalPoint& p, int t, const std::string& id) {
        return t < 1 || t > instance.horizon ? 0.0 : p.get(x_label(t, id));
    };
    for (const auto& point : points)
        for (int m = 0; m < instance.num_tasks(); ++m) {
            const auto& task = instance.tasks[m];
            for (int t = 1; t <= instance.horizon; ++t) {
                const double rise =
                    x_at(point, t, task.id) - x_at(point, t - 1, task.id);
                for (int j = 0; j < task.duration; ++j)
                    report.max_deviation = std::max(
                        report.max_deviation, rise - x_at(point, t + j, task.id));
            }
        }
    report.pass = report.max_deviation <= kFeasTol;
    return report;
}

Instance counterexample1_instance() {
    Instance instance;
    instance.horizon = 4;
    instance.tasks.push_back({"m1", 2, 0.0});
    instance.cost.assign(4, {1.0});
    return instance;
}

Instance counterexample2_instance() {
    Instance instance;
    instance.horizon = 10;
    instance.tasks.push_back({"m1", 3, 0.0});
    instance.cost.assign(10, {1.0});
    return instance;
}

FractionalPoint counterexample1_point(const Instance& instance) {
    const std::string& id = instance.tasks[0].id;
    FractionalPoint point;
    const double x[] = {1.0 / 3, 2.0 / 3, 2.0 / 3, 1.0 / 3};
    const double s[] = {2.0 / 3, 1.0 / 3, 0.0, 0.0};
    for (int t = 1; t <= 4; ++t) {
        point.set(x_label(t, id), x[t - 1]);
        point.set(s_label(t, id), s[t - 1]);
    }
    return point;
}

FractionalPoint counterexample2_point(const Instance& instance) {
    const std::string& id = instance.tasks[0].id;
    FractionalPoint point;
    for (int t = 1; t <= 10; ++t) {
        const bool third = (t >= 1 && t <= 3) || (t >= 6 && t <= 8);
        point.set(x_label(t, id), third ? 1.0 / 3 : 1.0 / 4);
    }
    return point;
}

bool PaperReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

namespace {

FractionalPoint x_part(const FractionalPoint& point) {
    FractionalPoint result;
    for (const auto& [label, value] : point.values)
        if (label.rfind("X_", 0) == 0) result.set(label, value);
    return result;
}

struct Reporter {
    PaperReport& report;
    void add(std::string name, bool pass, double measured, std::string detail) {
        report.checks.push_back(
            {std::move(name), pass, measured, std::move(detail)});
    }
};

/// Max residual of sampled F7 vertices (or F6 vertices with their induced
/// execution values) against another formulation's rows.
double sampled_image_residual(FormulationId source, FormulationId target,
                              const std::vector<Instance>& family, int per_instance,
                              std::uint64_t seed) {
    double worst = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Instance& instance = family[i];
        const MipModel source_model = build(source, instance);
        const MipModel target_model = build(target, instance);
        std::vector<double> local(per_instance, 0.0);
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < per_instance; ++k) {
            const auto vertex =
                sample_vertex(source_model, mix_seed(seed + 31 * i, k)).values;
            FractionalPoint point = vertex;
            if (source == FormulationId::F6)
                for (const auto& [label, value] :
                     x_projection(source, instance, vertex).values)
                    point.set(label, value);
            local[k] = residuals(target_model, point).max_violation();
        }
        for (double v : local) worst = std::max(worst, v);
    }
    return worst;
}

/// Max phase-1 infeasibility over cross-direction probes between two
/// formulations whose relaxations should coincide on the execution space.
double cross_projection_infeasibility(FormulationId a, FormulationId b,
                                      const std::vector<Instance>& family,
                                      int per_instance, std::uint64_t seed) {
    double worst = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Instance& instance = family[i];
        const MipModel model_a = build(a, instance);
        const MipModel model_b = build(b, instance);
        const Membership in_a(a, instance);
        const Membership in_b(b, instance);
        std::vector<double> local(2 * per_instance, 0.0);
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < per_instance; ++k) {
            double measure = 0.0;
            const auto va = sample_vertex(model_a, mix_seed(seed + 47 * i, 2 * k)).values;
            in_b.contains(x_projection(a, instance, va), &measure);
            local[2 * k] = measure;
            const auto vb =
                sample_vertex(model_b, mix_seed(seed + 47 * i, 2 * k + 1)).values;
            in_a.contains(x_projection(b, instance, vb), &measure);
            local[2 * k + 1] = measure;
        }
        for (double v : local) worst = std::max(worst, v);
    }
    return worst;
}

}  // namespace

PaperReport verify_paper(std::uint64_t bundle_seed) {
    PaperReport report;
    report.seed = bundle_seed;
    Reporter out{report};

    const Instance ce1 = counterexample1_instance();
    const Instance ce2 = counterexample2_instance();
    const FractionalPoint p1 = counterexample1_point(ce1);
    const FractionalPoint p2 = counterexample2_point(ce2);

    // ---- first counterexample: a point of F1's relaxation with no
    // counterpart among consistent start/execution pairs ----
    {
        const MipModel f1 = build(FormulationId::F1, ce1);
        const MipModel f7 = build(FormulationId::F7, ce1);
        const auto on_f1 = residuals(f1, p1);
        out.add("F7_tighter_than_F1/counterexample_feasible_in_F1",
                on_f1.max_violation() <= 1e-9, on_f1.max_violation(),
                "max residual of the fractional point over F1 rows and bounds");
        const double rise_slack = on_f1.slack_of(f1, "1c[t=2,m=m1]");
        out.add("F7_tighter_than_F1/rise_row_tight_at_t2",
                std::abs(rise_slack) <= 1e-9, rise_slack,
                "1c at t=2 holds with zero slack (1/3 <= 1/3)");

        const auto on_f7 = residuals(f7, p1);
        const double v2 = on_f7.violation_of(f7, "7b[t=2,m=m1]");
        const double v3 = on_f7.violation_of(f7, "7b[t=3,m=m1]");
        out.add("F7_tighter_than_F1/link_row_violated_by_one_third",
                std::abs(v2 - 1.0 / 3) <= 1e-9 && std::abs(v3 - 1.0 / 3) <= 1e-9, v2,
                "7b residual is exactly 1/3 at t=2 and t=3");

        const auto full_probe = feasibility_probe(f7, p1);
        out.add("F7_tighter_than_F1/counterexample_infeasible_in_F7",
                !full_probe.feasible, full_probe.infeasibility,
                "phase-1 infeasibility with both X and S pinned");
        const auto x_probe = feasibility_probe(f7, x_part(p1));
        out.add("F7_tighter_than_F1/x_values_alone_still_extend",
                x_probe.feasible, x_probe.infeasibility,
                "the X part admits a different S, as noted for this point");

        const Membership in_f6(FormulationId::F6, ce1);
        double measure = 0.0;
        const bool member = in_f6.contains(p1, &measure);
        out.add("F6_tighter_than_F1/counterexample_infeasible_in_F6", !member, measure,
                "membership via the expanded twin with X and S pinned");
    }

    // ---- second counterexample: execution values satisfying F2, F3 and F5
    // that no start assignment can generate ----
    {
        const MipModel f2 = build(FormulationId::F2, ce2);
        const MipModel f3 = build(FormulationId::F3, ce2);
        const MipModel f5 = build(FormulationId::F5, ce2);
        const MipModel f7 = build(FormulationId::F7, ce2);

        double mass = 0.0;
        for (int t = 1; t <= 10; ++t) mass += p2.get("X_" + std::to_string(t) + "_m1");
        out.add("F7_tighter_than_F2/execution_mass_equals_duration",
                std::abs(mass - 3.0) <= 1e-9, mass, "6*(1/3) + 4*(1/4) = 3 = W");

        const auto on_f2 = residuals(f2, p2);
        out.add("F7_tighter_than_F2/counterexample_feasible_in_F2",
                on_f2.max_violation() <= 1e-9, on_f2.max_violation(),
                "max residual over F2 rows and bounds");
        const auto on_f3 = residuals(f3, p2);
        out.add("F7_tighter_than_F3/counterexample_feasible_in_F3",
                on_f3.max_violation() <= 1e-9, on_f3.max_violation(),
                "max residual over F3 rows and bounds");
        const auto on_f5 = residuals(f5, p2);
        out.add("F7_tighter_than_F5/counterexample_feasible_in_F5",
                on_f5.max_violation() <= 1e-9, on_f5.max_violation(),
                "max residual over F5 rows and bounds");
        const double start_slack = on_f5.slack_of(f5, "5b[t=1,m=m1]");
        out.add("F7_tighter_than_F5/start_row_saturated_at_t1",
                std::abs(start_slack) <= 1e-9, start_slack,
                "5b at t=1 holds with zero slack (3*(1/3-0) = 1 <= 1)");

        const auto probe = feasibility_probe(f7, p2);
        out.add("F7_tighter_than_F2/counterexample_infeasible_in_F7", !probe.feasible,
                probe.infeasibility, "no start assignment matches these X values");
        out.add("F7_tighter_than_F3/counterexample_infeasible_in_F7", !probe.feasible,
                probe.infeasibility, "same probe, cited for the F3 relation");
        out.add("F7_tighter_than_F5/counterexample_infeasible_in_F7", !probe.feasible,
                probe.infeasibility, "same probe, cited for the F5 relation");

        const Membership in_f6(FormulationId::F6, ce2);
        double measure = 0.0;
        const bool member = in_f6.contains(p2, &measure);
        out.add("F6_tighter_than_F2/counterexample_infeasible_in_F6", !member, measure,
                "membership via the expanded twin with X pinned");
        out.add("F6_tighter_than_F3/counterexample_infeasible_in_F6", !member, measure,
                "same membership test, cited for the F3 relation");
        out.add("F6_tighter_than_F5/counterexample_infeasible_in_F6", !member, measure,
                "same membership test, cited for the F5 relation");
    }

    // ---- constructive halves on sampled vertices ----
    std::vector<Instance> family = {ce1, ce2};
    {
        GenProfile coupled;
        coupled.coupling = true;
        family.push_back(generate(mix_seed(bundle_seed, 1), 10, 2));
        family.push_back(generate(mix_seed(bundle_seed, 2), 12, 2, coupled));
        family.push_back(generate(mix_seed(bundle_seed, 3), 8, 3, coupled));
    }
    const int per_instance = 20;
    const struct {
        FormulationId target;
        const char* f7_name;
        const char* f6_name;
    } constructive[] = {
        {FormulationId::F1, "F7_tighter_than_F1/sampled_vertices_satisfy_F1",
         "F6_tighter_than_F1/sampled_points_satisfy_F1"},
        {FormulationId::F2, "F7_tighter_than_F2/sampled_vertices_satisfy_F2",
         "F6_tighter_than_F2/sampled_points_satisfy_F2"},
        {FormulationId::F3, "F7_tighter_than_F3/sampled_vertices_satisfy_F3",
         "F6_tighter_than_F3/sampled_points_satisfy_F3"},
        {FormulationId::F5, "F7_tighter_than_F5/sampled_vertices_satisfy_F5",
         "F6_tighter_than_F5/sampled_points_satisfy_F5"},
    };
    for (const auto& entry : constructive) {
        const double worst7 = sampled_image_residual(FormulationId::F7, entry.target,
                                                     family, per_instance, bundle_seed);
        out.add(entry.f7_name, worst7 <= kFeasTol, worst7,
                "max residual of sampled F7 vertices on the target rows");
        const double worst6 = sampled_image_residual(FormulationId::F6, entry.target,
                                                     family, per_instance,
                                                     bundle_seed ^ 0xf6f6);
        out.add(entry.f6_name, worst6 <= kFeasTol, worst6,
                "max residual of sampled F6 vertices with induced X values");
    }

    // ---- F4 equivalence, both directions ----
    {
        const double worst47 = cross_projection_infeasibility(
            FormulationId::F4, FormulationId::F7, family, per_instance, bundle_seed);
        out.add("F7_equivalent_to_F4/cross_feasible_sampled", worst47 <= kPhase1Tol,
                worst47, "max probe infeasibility across both directions");
        const double worst46 = cross_projection_infeasibility(
            FormulationId::F4, FormulationId::F6, family, per_instance,
            bundle_seed ^ 0x46);
        out.add("F6_equivalent_to_F4/cross_feasible_sampled", worst46 <= kPhase1Tol,
                worst46, "max probe infeasibility across both directions");
    }

    // ---- dual-bound ordering on a coupled seeded family ----
    {
        GenProfile coupled;
        coupled.coupling = true;
        std::vector<Instance> bound_family;
        for (int i = 0; i < 8; ++i)
            bound_family.push_back(generate(mix_seed(bundle_seed ^ 0xb0, i), 16, 3, coupled));
        const int n_instances = static_cast<int>(bound_family.size());
        std::vector<double> z(static_cast<std::size_t>(n_instances) * 7);
#pragma omp parallel for schedule(dynamic) collapse(2)
        for (int i = 0; i < n_instances; ++i)
            for (int f = 0; f < 7; ++f)
                z[i * 7 + f] =
                    lp_solve(build(kAllFormulations[f], bound_family[i])).objective;

        auto zf = [&](int i, FormulationId id) { return z[i * 7 + static_cast<int>(id)]; };
        double max_equal_gap = 0.0, worst_dominance = 0.0, worst_f2_f3 = 0.0;
        for (int i = 0; i < n_instances; ++i) {
            const double z6 = zf(i, FormulationId::F6);
            max_equal_gap = std::max({max_equal_gap,
                                      std::abs(z6 - zf(i, FormulationId::F7)),
                                      std::abs(z6 - zf(i, FormulationId::F4))});
            for (FormulationId weak : {FormulationId::F1, FormulationId::F2,
                                       FormulationId::F3, FormulationId::F5})
                worst_dominance = std::max(worst_dominance, zf(i, weak) - z6);
            worst_f2_f3 = std::max(
                worst_f2_f3, zf(i, FormulationId::F3) - zf(i, FormulationId::F2));
        }
        out.add("bound_ordering/F6_F7_F4_equal", max_equal_gap <= kFeasTol,
                max_equal_gap, "max pairwise |z_LP| gap among F6, F7, F4");
        out.add("bound_ordering/tightest_dominates_F1_F2_F3_F5",
                worst_dominance <= kFeasTol, worst_dominance,
                "max of z_LP(Fk) - z_LP(F6) over k in {1,2,3,5}");
        out.add("bound_ordering/F2_dominates_F3", worst_f2_f3 <= kFeasTol, worst_f2_f3,
                "max of z_LP(F3) - z_LP(F2)");
    }

    // ---- lemma suites ----
    {
        std::vector<Instance> lemma_family = {ce1, ce2,
                                              generate(mix_seed(bundle_seed, 9), 14, 3)};
        double worst1 = 0.0, worst2 = -std::numeric_limits<double>::infinity();
        int points = 0;
        for (std::size_t i = 0; i < lemma_family.size(); ++i) {
            const auto l1 = verify_lemma1(lemma_family[i], 50, bundle_seed + i);
            const auto l2 = verify_lemma2(lemma_family[i], 50, bundle_seed + i);
            worst1 = std::max(worst1, l1.max_deviation);
            worst2 = std::max(worst2, l2.max_deviation);
            points += l1.points_checked;
        }
        out.add("lemma_execution_mass/max_deviation", worst1 <= kFeasTol, worst1,
                "max |sum_t X - W| over " + std::to_string(points) + " sampled points");
        out.add("lemma_rise_bound/max_deviation", worst2 <= kFeasTol, worst2,
                "max X_t - X_{t-1} - X_{t+j} over sampled points");
    }

    return report;
}

std::string report_to_json(const PaperReport& report) {
    nlohmann::ordered_json j;
    j["seed"] = report.seed;
    j["all_pass"] = report.all_pass();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& check : report.checks) {
        nlohmann::ordered_json c;
        c["name"] = check.name;
        c["pass"] = check.pass;
        c["measured"] = check.measured;
        c["detail"] = check.detail;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
}

std::string report_to_text(const PaperReport& report) {
    std::size_t width = 0;
    for (const auto& check : report.checks) width = std::max(width, check.name.size());
    std::ostringstream out;
    for (const auto& check : report.checks) {
        char measured[32];
        std::snprintf(measured, sizeof(measured), "%12.3e", check.measured);
        out << (check.pass ? "PASS  " : "FAIL  ") << check.name
            << std::string(width - check.name.size() + 2, ' ') << measured << "  "
            << check.detail << "\n";
    }
    out << (report.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return out.str();
}

}  // namespace gms
