use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use connclust::disjoint::{
    pad_to_k, solve_assignment_given_centers, solve_disjoint_detailed, solve_two_center_disjoint, PartitionStrategy,
    TwoCenterOptions,
};
use connclust::exact::{solve_line_center, solve_line_diameter, solve_tree_assignment, tree_dp_solve, ReachRule};
use connclust::greedy::{solve_nondisjoint, CenterOrder};
use connclust::instances::{
    gen_random, gen_sat_gadget, gen_star_gadget, gen_worstcase_i, gen_worstcase_iprime, Cnf, GadgetMeta, RandomFamily,
    RandomOptions, SatVariant, StarKind,
};
use connclust::model::io::{self, ClusteringDoc};
use connclust::model::{clustering_cost, validate_clustering, SearchStrategy};
use connclust::oracle::{solve_oracle, OracleLimits};
use connclust::{Clustering, Instance, LpNorm, Mode, Objective, Scalar, SolveReport};
use serde_json::json;

use crate::{Algo, CheckArgs, DotArgs, EvalArgs, Failure, Family, GenArgs, SearchArg, SolveArgs};

pub fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::bad_input(format!("{}: {e}", path.display())))
}

pub fn load<S: Scalar>(path: &Path) -> Result<Instance<S>, Failure> {
    Ok(io::load_instance(&read(path)?)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, format!("{}\n", text.trim_end()))
            .map_err(|e| Failure::bad_input(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{}", text.trim_end()).map_err(Failure::from)
        }
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::bad_input(format!("--{flag} is required for this family")))
}

pub fn parse_ids(text: &str) -> Result<Vec<usize>, Failure> {
    text.split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| s.trim().parse().map_err(|_| Failure::bad_input(format!("bad point id {s:?}"))))
        .collect()
}

fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let (u, v) =
                s.split_once('-').ok_or_else(|| Failure::bad_input(format!("bad pair {s:?}, expected u-v")))?;
            let id = |x: &str| x.trim().parse().map_err(|_| Failure::bad_input(format!("bad pair {s:?}")));
            Ok((id(u)?, id(v)?))
        })
        .collect()
}

fn parse_sets(text: &str) -> Result<Vec<Vec<usize>>, Failure> {
    text.split(';').map(str::trim).filter(|s| !s.is_empty()).map(parse_ids).collect()
}

pub fn parse_norm(p: &str) -> Result<LpNorm, Failure> {
    match p {
        "inf" | "infinity" => Ok(LpNorm::Infinity),
        _ => match p.parse::<u32>() {
            Ok(v) if v >= 1 => Ok(LpNorm::Finite(v)),
            _ => Err(Failure::bad_input(format!("bad norm exponent {p:?}"))),
        },
    }
}

fn random_family(a: &GenArgs) -> Result<RandomFamily, Failure> {
    Ok(match a.family {
        Family::Line => RandomFamily::Line,
        Family::Tree => RandomFamily::Tree,
        Family::General => RandomFamily::General,
        Family::Lp => RandomFamily::Lp { dim: a.dim, norm: parse_norm(&a.p)? },
        _ => unreachable!("not a random family"),
    })
}

fn gadget<S: Scalar>(a: &GenArgs) -> Result<GadgetMeta<S>, Failure> {
    let formula = || Cnf::parse(a.formula.as_deref().unwrap_or_default());
    let pairs = || parse_pairs(a.pairs.as_deref().unwrap_or_default());
    Ok(match a.family {
        Family::WorstcaseI => gen_worstcase_i(need(a.m, "m")?)?,
        Family::WorstcaseIprime => gen_worstcase_iprime(need(a.m, "m")?)?,
        Family::Sat => gen_sat_gadget(&formula()?, SatVariant::TwoCenter)?,
        Family::Sat4 => gen_sat_gadget(&formula()?, SatVariant::FourCenter)?,
        Family::CliqueCover => gen_star_gadget(&StarKind::CliqueCover {
            vertices: need(a.size, "size")?,
            edges: pairs()?,
            k: need(a.k, "k")?,
        })?,
        Family::SetCover => gen_star_gadget(&StarKind::SetCover {
            elements: need(a.size, "size")?,
            sets: parse_sets(a.sets.as_deref().unwrap_or_default())?,
            k: need(a.k, "k")?,
        })?,
        Family::Multicut => {
            gen_star_gadget(&StarKind::Multicut { leaves: need(a.size, "size")?, pairs: pairs()?, k: need(a.k, "k")? })?
        }
        _ => unreachable!("not a gadget family"),
    })
}

pub fn gen<S: Scalar>(a: &GenArgs) -> Result<(), Failure> {
    let (inst, annotations) = match a.family {
        Family::Line | Family::Tree | Family::General | Family::Lp => {
            let opts = RandomOptions {
                max_distance: a.max_distance,
                metric_closure: a.metric_closure,
                extra_edge_prob: a.extra_edge_prob,
            };
            let inst: Instance<S> = gen_random(random_family(a)?, need(a.n, "n")?, need(a.k, "k")?, a.seed, &opts)?;
            let ann = json!({ "k": inst.k(), "roles": {}, "seed": a.seed });
            (inst, ann)
        }
        _ => {
            let meta = gadget::<S>(a)?;
            let ann = meta.annotations_json();
            (meta.instance, ann)
        }
    };
    emit(a.out.as_deref(), &io::instance_to_json(&inst))?;
    let side = a.annotations.clone().or_else(|| {
        a.out.as_ref().map(|p| {
            let mut s = p.clone().into_os_string();
            s.push(".annotations.json");
            PathBuf::from(s)
        })
    });
    if let Some(p) = side {
        emit(Some(&p), &serde_json::to_string_pretty(&annotations).expect("annotations serialize"))?;
    }
    Ok(())
}

fn search(s: SearchArg) -> SearchStrategy {
    match s {
        SearchArg::Binary => SearchStrategy::Binary,
        SearchArg::Linear => SearchStrategy::Linear,
    }
}

fn precondition(msg: &str) -> Failure {
    Failure::from(connclust::Error::Precondition(msg.into()))
}

/// The options of `solve` that `bench` reuses.
#[derive(Clone, Debug)]
pub struct SolveRequest {
    pub objective: Objective,
    pub mode: Mode,
    pub algo: Algo,
    pub centers: Option<Vec<usize>>,
    pub seed: Option<u64>,
    pub search: SearchStrategy,
    pub dim: Option<u32>,
}

fn with_strategy<S: Scalar>(
    inst: &Instance<S>,
    req: &SolveRequest,
    strategy: PartitionStrategy,
) -> connclust::Result<(SolveReport<S>, Clustering)> {
    if req.mode == Mode::NonDisjoint {
        return Err(connclust::Error::Precondition("partition pipelines produce disjoint clusterings".into()));
    }
    match &req.centers {
        Some(c) => solve_assignment_given_centers(inst, c, req.objective),
        None => solve_disjoint_detailed(inst, req.objective, strategy, req.search).map(|s| (s.report, s.clustering)),
    }
}

fn resolve_auto<S: Scalar>(inst: &Instance<S>, req: &SolveRequest) -> Algo {
    let g = inst.graph();
    let disjoint_center = req.mode == Mode::Disjoint && req.objective == Objective::Center;
    match &req.centers {
        Some(_) if disjoint_center && g.is_tree() => Algo::TreeAssign,
        Some(_) => Algo::General,
        None if g.path_order().is_some() => Algo::Line,
        None if disjoint_center && g.is_tree() => Algo::TreeDp,
        None if disjoint_center && inst.k() == 2 => Algo::TwoCenter,
        None if req.mode == Mode::NonDisjoint => Algo::Greedy,
        None => Algo::General,
    }
}

pub fn run_solver<S: Scalar>(
    inst: &Instance<S>,
    req: &SolveRequest,
) -> connclust::Result<(SolveReport<S>, Clustering)> {
    use connclust::Error::Precondition;
    let algo = if req.algo == Algo::Auto { resolve_auto(inst, req) } else { req.algo };
    let no_centers = |name: &str| match req.centers {
        Some(_) => Err(Precondition(format!("{name} does not take fixed centers"))),
        None => Ok(()),
    };
    match algo {
        Algo::Auto => unreachable!("resolved above"),
        Algo::Greedy => {
            no_centers("greedy")?;
            if req.mode == Mode::Disjoint {
                return Err(Precondition("greedy covering is non-disjoint".into()));
            }
            let order = req.seed.map_or(CenterOrder::SmallestId, CenterOrder::Seeded);
            solve_nondisjoint(inst, req.objective, order, req.search)
        }
        Algo::Line => {
            no_centers("line")?;
            match (req.objective, req.mode) {
                (Objective::Center, Mode::NonDisjoint) => {
                    solve_line_center(inst, ReachRule::CenterDistance, req.search)
                }
                (Objective::Diameter, _) => solve_line_diameter(inst, req.search),
                (Objective::Center, Mode::Disjoint) => {
                    inst.graph().path_order().ok_or(connclust::Error::NotAPath)?;
                    tree_dp_solve(inst, Objective::Center, req.search)
                }
            }
        }
        Algo::TreeDp => {
            no_centers("tree-dp")?;
            tree_dp_solve(inst, req.objective, req.search)
        }
        Algo::TreeAssign => {
            if req.objective != Objective::Center {
                return Err(Precondition("tree assignment solves the center objective".into()));
            }
            let c = req.centers.as_deref().ok_or(connclust::Error::MissingCenters)?;
            solve_tree_assignment(inst, c, req.search)
        }
        Algo::General => with_strategy(inst, req, PartitionStrategy::General),
        Algo::Lp => with_strategy(inst, req, PartitionStrategy::Lp),
        Algo::Doubling => {
            let dim = req.dim.ok_or_else(|| Precondition("--dim is required for the doubling partition".into()))?;
            with_strategy(inst, req, PartitionStrategy::Doubling(dim))
        }
        Algo::TwoCenter => {
            no_centers("two-center")?;
            if req.objective != Objective::Center || req.mode != Mode::Disjoint {
                return Err(Precondition("two-center solves the disjoint center objective".into()));
            }
            solve_two_center_disjoint(inst, TwoCenterOptions::default())
        }
        Algo::Oracle => solve_oracle(inst, req.objective, req.mode, req.centers.as_deref(), &OracleLimits::default()),
    }
}

pub fn solve<S: Scalar>(a: &SolveArgs) -> Result<(), Failure> {
    let inst = load::<S>(&a.input)?;
    let req = SolveRequest {
        objective: a.objective.into(),
        mode: a.mode.into(),
        algo: a.algo,
        centers: a.centers.as_deref().map(parse_ids).transpose()?,
        seed: a.seed,
        search: search(a.search),
        dim: a.dim,
    };
    if req.centers.as_ref().is_some_and(|c| c.is_empty()) {
        return Err(Failure::bad_input("--centers is empty"));
    }
    let (mut report, mut c) = run_solver(&inst, &req)?;
    if a.exact_k {
        if c.mode() != Mode::Disjoint {
            return Err(precondition("--exact-k needs a disjoint clustering"));
        }
        c = pad_to_k(&inst, &c)?;
        report =
            SolveReport::measure(&inst, &c, report.objective, report.algorithm, report.search_radius, report.bound)?;
    }
    let doc = ClusteringDoc::new(&inst, &c, Some(report.objective))?.with_report(&report);
    emit(a.out.as_deref(), &serde_json::to_string_pretty(&doc).expect("clustering serializes"))
}

fn load_clustering(path: &Path) -> Result<(ClusteringDoc, Clustering), Failure> {
    let doc = io::load_clustering(&read(path)?)?;
    let c = doc.to_clustering()?;
    Ok((doc, c))
}

pub fn validate<S: Scalar>(a: &CheckArgs) -> Result<(), Failure> {
    let inst = load::<S>(&a.input)?;
    let (_, c) = load_clustering(&a.clustering)?;
    let verdict = validate_clustering(&inst, &c);
    let violations: Vec<String> = verdict.violations.iter().map(ToString::to_string).collect();
    let out = json!({ "feasible": verdict.is_feasible(), "violations": violations });
    emit(None, &serde_json::to_string_pretty(&out).expect("verdict serializes"))?;
    if verdict.is_feasible() {
        Ok(())
    } else {
        Err(Failure::infeasible(format!("{} violation(s)", violations.len())))
    }
}

pub fn eval<S: Scalar>(a: &EvalArgs) -> Result<(), Failure> {
    let inst = load::<S>(&a.input)?;
    let (doc, c) = load_clustering(&a.clustering)?;
    let objective = a.objective.map(Objective::from).or(doc.objective).unwrap_or(Objective::Center);
    let value = clustering_cost(&inst, &c, objective)?;
    let out = json!({
        "objective": objective,
        "value": io::number_from_scalar(value),
        "clusters": c.len(),
        "feasible": validate_clustering(&inst, &c).is_feasible(),
    });
    emit(None, &serde_json::to_string_pretty(&out).expect("evaluation serializes"))
}

pub fn export_dot<S: Scalar>(a: &DotArgs) -> Result<(), Failure> {
    let inst = load::<S>(&a.input)?;
    let c = a.clustering.as_deref().map(load_clustering).transpose()?.map(|(_, c)| c);
    emit(None, &io::to_dot(&inst, c.as_ref()))
}
