// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.
// Runs without the libtest harness so the lines always show up in `cargo test`.

use std::time::{Duration, Instant};

use connclust::disjoint::{
    make_disjoint, solve_assignment_detailed, solve_disjoint_detailed, solve_two_center_disjoint, DisjointOutput,
    DisjointSolve, PartitionStrategy, TwoCenterOptions,
};
use connclust::exact::{solve_line_center, solve_line_diameter, solve_tree_assignment, tree_dp_solve, ReachRule};
use connclust::greedy::{greedy_clustering, solve_nondisjoint, CenterOrder, GreedyOutput};
use connclust::instances::{
    brute_force_sat, clique_cover_brute_force, four_center_clustering, gen_random, gen_sat_gadget, gen_star_gadget,
    gen_worstcase_i, gen_worstcase_iprime, multicut_brute_force, radius_two_clustering, set_cover_brute_force, Cnf,
    RandomFamily, RandomOptions, SatVariant, StarKind,
};
use connclust::model::{candidate_radii, clustering_cost, validate_clustering, SearchStrategy};
use connclust::oracle::{
    exact_assignment, exact_disjoint, exact_nondisjoint_center, exact_nondisjoint_diameter, OracleLimits,
};
use connclust::wsp::{
    doubling_dimension_upper_bound, doubling_layer_bound, general_diameter_bound, general_layer_bound,
    lp_diameter_bound, partition_doubling, partition_general_metric, partition_lp, verify_wsp, WellSeparatedPartition,
};
use connclust::{Instance, LpNorm, Mode, Objective, Rational, Scalar};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Pinned tolerances. Integer-grid distances are compared exactly; the only
// non-integer distances come from Lp coordinates and use this relative slack.
const REL_TOL: f64 = 1e-9;

const AC1_PER_FAMILY: u64 = 500;
const AC2_INSTANCES: u64 = 500;
const AC3_PER_CONSTRUCTION: u64 = 200;
const AC5_FORMULAS: u64 = 60;
const AC5_PER_STAR: u64 = 60;

const AC1_BUDGET: Duration = Duration::from_secs(120);
const AC4_BUDGET: Duration = Duration::from_secs(10);
const AC7_TREE_BUDGET: Duration = Duration::from_secs(30);
const AC7_GENERAL_BUDGET: Duration = Duration::from_secs(60);

fn le(a: f64, b: f64) -> bool {
    a <= b + REL_TOL * 1f64.max(a.abs()).max(b.abs())
}

struct Tally {
    id: &'static str,
    title: &'static str,
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
    elapsed: Duration,
}

impl Tally {
    fn new(id: &'static str, title: &'static str) -> Self {
        Self { id, title, checks: 0, failures: Vec::new(), notes: Vec::new(), elapsed: Duration::ZERO }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.check(false, || what);
    }

    fn report(&self) -> bool {
        let pass = self.failures.is_empty();
        let mut line = format!(
            "{} {} {}: {} checks, {} violations, {:.2} s",
            self.id,
            if pass { "PASS" } else { "FAIL" },
            self.title,
            self.checks,
            self.failures.len(),
            self.elapsed.as_secs_f64()
        );
        for n in &self.notes {
            line.push_str("; ");
            line.push_str(n);
        }
        println!("{line}");
        for f in self.failures.iter().take(5) {
            println!("    {f}");
        }
        pass
    }
}

fn small_instance(family: RandomFamily, seed: u64, max_n: usize, max_k: usize, closure: bool) -> Instance<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let n = rng.gen_range(2..=max_n);
    let k = rng.gen_range(1..=max_k.min(n));
    let opts = RandomOptions {
        max_distance: if rng.gen_bool(0.5) { 3 } else { 10 },
        metric_closure: closure,
        ..RandomOptions::default()
    };
    gen_random(family, n, k, seed, &opts).expect("valid sizes")
}

fn search_for(seed: u64) -> SearchStrategy {
    if seed.is_multiple_of(5) {
        SearchStrategy::Linear
    } else {
        SearchStrategy::Binary
    }
}

/// Disjointness, connectivity, coverage, cluster count and the per-layer bounds
/// of one disjointification run.
fn check_disjointification<S: Scalar>(
    t: &mut Tally,
    ctx: &str,
    inst: &Instance<S>,
    greedy: &GreedyOutput<S>,
    partition: &WellSeparatedPartition<S>,
    out: &DisjointOutput<S>,
    metric: bool,
) {
    let verdict = validate_clustering(inst, &out.clustering);
    t.check(verdict.is_feasible() && out.clustering.mode() == Mode::Disjoint, || {
        format!("{ctx}: infeasible output {:?}", verdict.violations)
    });
    t.check(out.clustering.len() <= greedy.centers.len(), || {
        format!("{ctx}: {} clusters from {} centers", out.clustering.len(), greedy.centers.len())
    });
    t.check(out.trace.len() == partition.layer_count(), || format!("{ctx}: trace length"));
    for (i, layer) in out.trace.iter().enumerate() {
        t.check(layer.disjoint_connected, || format!("{ctx}: layer {} not disjoint/connected", i + 1));
        t.check(le(layer.max_radius.to_f64_lossy(), layer.radius_bound.to_f64_lossy()), || {
            format!("{ctx}: layer {} radius {} > {}", i + 1, layer.max_radius, layer.radius_bound)
        });
        if metric {
            t.check(le(layer.max_diameter.to_f64_lossy(), layer.diameter_bound.to_f64_lossy()), || {
                format!("{ctx}: layer {} diameter {} > {}", i + 1, layer.max_diameter, layer.diameter_bound)
            });
        }
    }
}

fn check_solve<S: Scalar>(t: &mut Tally, ctx: &str, inst: &Instance<S>, s: &DisjointSolve<S>, metric: bool) {
    let out = DisjointOutput { clustering: s.clustering.clone(), trace: s.trace.clone() };
    check_disjointification(t, ctx, inst, &s.greedy, &s.partition, &out, metric);
}

fn ac1() -> Tally {
    let mut t = Tally::new("AC1", "exact path/tree solvers equal the oracle");
    let start = Instant::now();
    let limits = OracleLimits::default();
    for seed in 0..AC1_PER_FAMILY {
        let inst = small_instance(RandomFamily::Line, seed, 9, 4, seed % 2 == 0);
        let search = search_for(seed);
        let ctx = format!("line seed {seed}");
        let line_c = solve_line_center(&inst, ReachRule::CenterDistance, search).unwrap().0.value;
        let opt_c = exact_nondisjoint_center(&inst, &limits).unwrap().0;
        t.check(line_c == opt_c, || format!("{ctx}: line center {line_c} vs oracle {opt_c}"));
        let line_d = solve_line_diameter(&inst, search).unwrap().0.value;
        let opt_dd = exact_disjoint(&inst, Objective::Diameter, &limits).unwrap().0;
        let opt_nd = exact_nondisjoint_diameter(&inst, &limits).unwrap().0;
        t.check(line_d == opt_dd && line_d == opt_nd, || {
            format!("{ctx}: line diameter {line_d} vs oracle {opt_dd} (disjoint) {opt_nd} (non-disjoint)")
        });
        let dp = tree_dp_solve(&inst, Objective::Center, search).unwrap().0.value;
        let opt = exact_disjoint(&inst, Objective::Center, &limits).unwrap().0;
        t.check(dp == opt, || format!("{ctx}: tree dp {dp} vs oracle {opt}"));
    }
    for seed in 0..AC1_PER_FAMILY {
        let inst = small_instance(RandomFamily::Tree, seed, 9, 4, seed % 2 == 0);
        let search = search_for(seed);
        let ctx = format!("tree seed {seed}");
        let (report, c) = tree_dp_solve(&inst, Objective::Center, search).unwrap();
        let opt = exact_disjoint(&inst, Objective::Center, &limits).unwrap().0;
        t.check(report.value == opt && validate_clustering(&inst, &c).is_feasible(), || {
            format!("{ctx}: tree dp {} vs oracle {opt}", report.value)
        });
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ids: Vec<usize> = (0..inst.len()).collect();
        ids.shuffle(&mut rng);
        let centers = &ids[..inst.k()];
        let assigned = solve_tree_assignment(&inst, centers, search).unwrap().0.value;
        let opt = exact_assignment(&inst, centers, Objective::Center, &limits).unwrap().0;
        t.check(assigned == opt, || format!("{ctx}: tree assignment {assigned} vs oracle {opt}"));
    }
    t.elapsed = start.elapsed();
    let took = t.elapsed;
    t.check(took < AC1_BUDGET, || format!("took {took:?}"));
    t
}

fn ac2(ac6: &mut Tally) -> Tally {
    let mut t = Tally::new("AC2", "approximation factors against the oracle");
    let start = Instant::now();
    let limits = OracleLimits::default();
    let mut two_center_runs = 0;
    for seed in 0..AC2_INSTANCES {
        let mut inst = small_instance(RandomFamily::General, seed, 9, 3, true);
        if seed % 3 == 0 {
            inst = inst.with_k(2).unwrap();
        }
        let ctx = format!("general seed {seed} (n = {}, k = {})", inst.len(), inst.k());
        for objective in [Objective::Center, Objective::Diameter] {
            let (report, c) =
                solve_nondisjoint(&inst, objective, CenterOrder::SmallestId, SearchStrategy::Binary).unwrap();
            let opt = match objective {
                Objective::Center => exact_nondisjoint_center(&inst, &limits).unwrap().0,
                Objective::Diameter => exact_nondisjoint_diameter(&inst, &limits).unwrap().0,
            };
            t.check(report.value <= 2.0 * opt && validate_clustering(&inst, &c).is_feasible(), || {
                format!("{ctx}: non-disjoint {objective:?} {} vs oracle {opt}", report.value)
            });

            let s =
                solve_disjoint_detailed(&inst, objective, PartitionStrategy::General, SearchStrategy::Binary).unwrap();
            let bound = s.report.bound.expect("pipeline reports its bound");
            t.check(s.report.value <= bound && s.report.feasible, || {
                format!("{ctx}: disjoint {objective:?} {} above bound {bound}", s.report.value)
            });
            check_solve(ac6, &ctx, &inst, &s, true);
        }
        if inst.k() == 2 {
            two_center_runs += 1;
            let (report, c) = solve_two_center_disjoint(&inst, TwoCenterOptions::default()).unwrap();
            let opt = exact_disjoint(&inst, Objective::Center, &limits).unwrap().0;
            t.check(report.value <= 2.0 * opt && validate_clustering(&inst, &c).is_feasible(), || {
                format!("{ctx}: two-center {} vs oracle {opt}", report.value)
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let centers: Vec<usize> = rand::seq::index::sample(&mut rng, inst.len(), 2).into_vec();
        // the center budget must admit both centers
        let inst = inst.with_k(2).unwrap();
        let s = solve_assignment_detailed(&inst, &centers, Objective::Center).unwrap();
        let opt = exact_assignment(&inst, &centers, Objective::Center, &limits).unwrap().0;
        t.check(s.report.value <= 3.0 * opt && s.report.feasible, || {
            format!("{ctx}: assignment to {centers:?} {} vs oracle {opt}", s.report.value)
        });
        check_solve(ac6, &format!("{ctx} centers {centers:?}"), &inst, &s, true);
    }
    t.notes.push(format!("{two_center_runs} two-center instances"));
    t.elapsed = start.elapsed();
    t
}

/// A random center set and radius for one partition sample. Every other sample
/// uses the greedy centers at that radius and also runs the disjointification.
fn sample_centers<S: Scalar>(inst: &Instance<S>, seed: u64) -> (Vec<usize>, S, Option<GreedyOutput<S>>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9));
    let radii: Vec<S> = candidate_radii(inst.matrix()).into_iter().filter(|r| *r > S::zero()).collect();
    let r = radii[rng.gen_range(0..radii.len())];
    if seed.is_multiple_of(2) {
        let g = greedy_clustering(inst, r, CenterOrder::Seeded(seed));
        (g.centers.clone(), r, Some(g))
    } else {
        let size = rng.gen_range(1..=inst.len().min(16));
        (rand::seq::index::sample(&mut rng, inst.len(), size).into_vec(), r, None)
    }
}

fn ac3(ac6: &mut Tally) -> Tally {
    let mut t = Tally::new("AC3", "well-separated partitions and their bounds");
    let start = Instant::now();
    let metric_opts = RandomOptions { metric_closure: true, ..RandomOptions::default() };
    let run = |t: &mut Tally, ac6: &mut Tally, ctx: String, inst: &Instance<f64>, seed: u64, kind: u8| {
        let (centers, r, greedy) = sample_centers(inst, seed);
        let k = centers.len();
        let (p, layer_bound, h_bound) = match kind {
            0 => (
                partition_general_metric(inst.matrix(), &centers, r),
                general_layer_bound(k),
                general_diameter_bound(k, r),
            ),
            1 => {
                let (coords, norm) = inst.coords().unwrap();
                let dim = coords[0].len();
                (partition_lp(coords, norm, &centers, r), dim + 1, lp_diameter_bound(dim, norm, r))
            }
            _ => {
                let dim = doubling_dimension_upper_bound(inst.matrix(), &centers);
                (partition_doubling(inst.matrix(), &centers, r, dim), doubling_layer_bound(dim), 2.0 * r)
            }
        };
        let violations = verify_wsp(inst.matrix(), &centers, &p);
        t.check(violations.is_empty(), || format!("{ctx}: {violations:?}"));
        t.check(p.layer_count() <= layer_bound, || format!("{ctx}: {} layers > {layer_bound}", p.layer_count()));
        t.check(le(p.max_h(), h_bound), || format!("{ctx}: h {} > {h_bound}", p.max_h()));
        if let Some(g) = greedy {
            let out = make_disjoint(inst, &g, &p).unwrap();
            // the budget here is the greedy center count, whatever k the generator chose
            let budgeted = inst.with_k(g.centers.len()).unwrap();
            check_disjointification(ac6, &ctx, &budgeted, &g, &p, &out, true);
        }
    };
    for seed in 0..AC3_PER_CONSTRUCTION {
        let n = 5 + (seed as usize * 7) % 36;
        let inst = gen_random::<f64>(RandomFamily::General, n, 1, seed, &metric_opts).unwrap();
        run(&mut t, ac6, format!("general seed {seed}"), &inst, seed, 0);
    }
    let norms = [LpNorm::Finite(1), LpNorm::Finite(2), LpNorm::Infinity];
    for dim in 1..=3 {
        for norm in norms {
            for seed in 0..AC3_PER_CONSTRUCTION {
                let n = 5 + (seed as usize * 7) % 36;
                let inst = gen_random::<f64>(RandomFamily::Lp { dim, norm }, n, 1, seed, &metric_opts).unwrap();
                run(&mut t, ac6, format!("lp d = {dim} p = {norm} seed {seed}"), &inst, seed, 1);
            }
        }
    }
    for seed in 0..AC3_PER_CONSTRUCTION {
        let n = 5 + (seed as usize * 7) % 36;
        let family = if seed % 2 == 0 {
            RandomFamily::Lp { dim: 1 + (seed as usize / 2) % 2, norm: LpNorm::Finite(2) }
        } else {
            RandomFamily::General
        };
        let inst = gen_random::<f64>(family, n, 1, seed, &metric_opts).unwrap();
        run(&mut t, ac6, format!("doubling seed {seed}"), &inst, seed, 2);
    }
    t.elapsed = start.elapsed();
    t
}

fn ac4() -> Tally {
    let mut t = Tally::new("AC4", "lower-bound witnesses I(2) and I'(2)");
    let start = Instant::now();
    let limits = OracleLimits::default();
    let two = Rational::from_integer(2);
    let i2 = gen_worstcase_i::<Rational>(2).unwrap();
    let centers = i2.role("centers");
    let (opt, _) = exact_assignment(&i2.instance, centers, Objective::Center, &limits).unwrap();
    t.check(opt == Rational::from_integer(3), || format!("I(2) assignment optimum {opt}, expected 3"));
    let c = radius_two_clustering(&i2).unwrap();
    let cost = clustering_cost(&i2.instance, &c, Objective::Center).unwrap();
    t.check(validate_clustering(&i2.instance, &c).is_feasible() && c.mode() == Mode::Disjoint, || {
        "I(2) radius-two clustering infeasible".into()
    });
    t.check(cost <= two && c.len() <= centers.len(), || format!("I(2) witness cost {cost} with {} clusters", c.len()));

    let ip = gen_worstcase_iprime::<Rational>(2).unwrap();
    let wide = OracleLimits { max_n_partition: ip.instance.len(), ..OracleLimits::default() };
    let (nd, _) = exact_nondisjoint_center(&ip.instance, &limits).unwrap();
    t.check(nd == Rational::from_integer(1), || format!("I'(2) non-disjoint optimum {nd}, expected 1"));
    let (d, _) = exact_disjoint(&ip.instance, Objective::Center, &wide).unwrap();
    t.check(d >= two, || format!("I'(2) disjoint optimum {d}, expected at least 2"));
    t.notes.push(format!(
        "I(2) n = {}, I'(2) n = {}, I'(2) disjoint optimum {d}",
        i2.instance.len(),
        ip.instance.len()
    ));
    t.elapsed = start.elapsed();
    let took = t.elapsed;
    t.check(took < AC4_BUDGET, || format!("took {took:?}"));
    t
}

fn random_cnf(rng: &mut ChaCha8Rng) -> Cnf {
    let vars = rng.gen_range(3..=6);
    let m = rng.gen_range(2 * vars..=7 * vars);
    let clauses = (0..m)
        .map(|_| {
            rand::seq::index::sample(rng, vars, 3)
                .into_iter()
                .map(|v| if rng.gen_bool(0.5) { v as i32 + 1 } else { -(v as i32 + 1) })
                .collect()
        })
        .collect();
    Cnf::new(vars, clauses).unwrap()
}

fn ac5() -> Tally {
    let mut t = Tally::new("AC5", "SAT dichotomy and star gadgets against brute force");
    let start = Instant::now();
    let limits = OracleLimits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut sat, mut unsat) = (0, 0);
    for i in 0..AC5_FORMULAS {
        let f = random_cnf(&mut rng);
        let answer = brute_force_sat(&f).unwrap();
        let gadget = gen_sat_gadget::<f64>(&f, SatVariant::TwoCenter).unwrap();
        let (opt, _) = exact_assignment(&gadget.instance, gadget.role("centers"), Objective::Center, &limits).unwrap();
        let expected = if answer.is_some() { 1.0 } else { 3.0 };
        t.check(opt == expected, || format!("formula {i} {:?}: optimum {opt}, expected {expected}", f.clauses));
        if let Some(a) = answer {
            sat += 1;
            let four = gen_sat_gadget::<f64>(&f, SatVariant::FourCenter).unwrap();
            let c = four_center_clustering(&f, &a).unwrap();
            let cost = clustering_cost(&four.instance, &c, Objective::Center).unwrap();
            t.check(validate_clustering(&four.instance, &c).is_feasible() && cost == 1.0, || {
                format!("formula {i}: four-center witness cost {cost}")
            });
        } else {
            unsat += 1;
        }
    }
    t.check(sat > 0 && unsat > 0, || format!("corpus lacks a side: {sat} sat, {unsat} unsat"));
    t.notes.push(format!("{sat} satisfiable, {unsat} unsatisfiable"));

    let mut yes = [0; 3];
    for i in 0..AC5_PER_STAR {
        let vertices = rng.gen_range(2..=7);
        let edges: Vec<(usize, usize)> =
            (0..vertices).flat_map(|u| (u + 1..vertices).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.5)).collect();
        let k = rng.gen_range(1..vertices);
        let kind = StarKind::CliqueCover { vertices, edges: edges.clone(), k };
        let inst = gen_star_gadget::<f64>(&kind).unwrap().instance;
        let brute = clique_cover_brute_force(vertices, &edges, k).unwrap();
        let opt = exact_nondisjoint_diameter(&inst, &limits).unwrap().0;
        yes[0] += brute as usize;
        t.check(opt == if brute { 1.0 } else { 2.0 }, || {
            format!("clique cover {i} {kind:?}: optimum {opt}, brute {brute}")
        });
    }
    for i in 0..AC5_PER_STAR {
        let elements = rng.gen_range(1..=6);
        let count = rng.gen_range(1..=5);
        let mut sets: Vec<Vec<usize>> =
            (0..count).map(|_| (0..elements).filter(|_| rng.gen_bool(0.4)).collect()).collect();
        for e in 0..elements {
            if !sets.iter().any(|s| s.contains(&e)) {
                let j = rng.gen_range(0..count);
                sets[j].push(e);
                sets[j].sort_unstable();
            }
        }
        let k = rng.gen_range(1..=count.min(4));
        let kind = StarKind::SetCover { elements, sets: sets.clone(), k };
        let inst = gen_star_gadget::<f64>(&kind).unwrap().instance;
        let brute = set_cover_brute_force(elements, &sets, k).unwrap();
        let opt = exact_nondisjoint_center(&inst, &limits).unwrap().0;
        yes[1] += brute as usize;
        t.check(opt == if brute { 1.0 } else { 2.0 }, || {
            format!("set cover {i} {kind:?}: optimum {opt}, brute {brute}")
        });
    }
    for i in 0..AC5_PER_STAR {
        let leaves = rng.gen_range(2..=8);
        let pairs: Vec<(usize, usize)> =
            (0..leaves).flat_map(|u| (u + 1..leaves).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.3)).collect();
        let k = rng.gen_range(1..leaves);
        let kind = StarKind::Multicut { leaves, pairs: pairs.clone(), k };
        let inst = gen_star_gadget::<f64>(&kind).unwrap().instance;
        let brute = multicut_brute_force(leaves, &pairs, k).unwrap();
        let opt = exact_disjoint(&inst, Objective::Diameter, &limits).unwrap().0;
        yes[2] += brute as usize;
        t.check(opt == if brute { 1.0 } else { 2.0 }, || {
            format!("multicut {i} {kind:?}: optimum {opt}, brute {brute}")
        });
    }
    t.notes.push(format!("yes-instances: clique cover {}, set cover {}, multicut {}", yes[0], yes[1], yes[2]));
    t.elapsed = start.elapsed();
    t
}

fn ac7(ac6: &mut Tally) -> Tally {
    let mut t = Tally::new("AC7", "scale sanity at n = 2000");
    let start = Instant::now();
    let tree_opts = RandomOptions { max_distance: 1000, ..RandomOptions::default() };
    let tree = gen_random::<f64>(RandomFamily::Tree, 2000, 20, 7, &tree_opts).unwrap();
    let clock = Instant::now();
    match tree_dp_solve(&tree, Objective::Center, SearchStrategy::Binary) {
        Ok((report, c)) => {
            let took = clock.elapsed();
            t.check(took < AC7_TREE_BUDGET, || format!("tree dp took {took:?}"));
            t.check(validate_clustering(&tree, &c).is_feasible(), || "tree dp output infeasible".into());
            t.notes.push(format!("tree dp {:.2} s (value {})", took.as_secs_f64(), report.value));
        }
        Err(e) => t.fail(format!("tree dp: {e}")),
    }

    let lp_opts = RandomOptions { extra_edge_prob: 0.001, ..RandomOptions::default() };
    let family = RandomFamily::Lp { dim: 2, norm: LpNorm::Finite(2) };
    let inst = gen_random::<f64>(family, 2000, 50, 7, &lp_opts).unwrap();
    let clock = Instant::now();
    match solve_disjoint_detailed(&inst, Objective::Center, PartitionStrategy::General, SearchStrategy::Binary) {
        Ok(s) => {
            let took = clock.elapsed();
            t.check(took < AC7_GENERAL_BUDGET, || format!("disjoint pipeline took {took:?}"));
            t.check(validate_clustering(&inst, &s.clustering).is_feasible(), || "disjoint output infeasible".into());
            t.notes.push(format!(
                "disjoint general {:.2} s (value {:.4}, bound {:.4})",
                took.as_secs_f64(),
                s.report.value,
                s.report.bound.unwrap_or(f64::NAN)
            ));
            check_solve(ac6, "n = 2000 lp instance", &inst, &s, true);
        }
        Err(e) => t.fail(format!("disjoint pipeline: {e}")),
    }
    t.elapsed = start.elapsed();
    t
}

fn main() {
    let mut ac6 = Tally::new("AC6", "disjointification invariants on every run above");
    let start = Instant::now();
    let t1 = ac1();
    let t2 = ac2(&mut ac6);
    let t3 = ac3(&mut ac6);
    let t4 = ac4();
    let t5 = ac5();
    let t7 = ac7(&mut ac6);
    ac6.elapsed = start.elapsed();
    ac6.notes.push("time is the whole suite".into());
    let mut all = true;
    for t in [&t1, &t2, &t3, &t4, &t5, &ac6, &t7] {
        all &= t.report();
    }
    if !all {
        std::process::exit(1);
    }
}
