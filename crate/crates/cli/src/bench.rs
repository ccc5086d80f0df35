use std::time::Instant;

use clap::Args;
use connclust::instances::{gen_random, RandomFamily, RandomOptions};
use connclust::model::SearchStrategy;
use connclust::oracle::{solve_oracle, OracleLimits};
use connclust::{Mode, Objective, Scalar};

use crate::commands::{parse_norm, run_solver, SolveRequest};
use crate::{Algo, Failure, Family, ModeArg, ObjectiveArg};

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value = "general")]
    pub family: Family,
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Number of instances, seeded `seed..seed + count`.
    #[arg(long, default_value_t = 10)]
    pub count: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated solvers.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "auto")]
    pub algo: Vec<Algo>,
    #[arg(long, value_enum, default_value = "center")]
    pub objective: ObjectiveArg,
    #[arg(long, value_enum, default_value = "disjoint")]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    #[arg(long, default_value = "2")]
    pub p: String,
    #[arg(long)]
    pub metric_closure: bool,
    /// Also run the exact oracle (small instances only).
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

fn row<S: Scalar>(a: &BenchArgs, family: RandomFamily, seed: u64) -> Result<Vec<String>, Failure> {
    let opts = RandomOptions { metric_closure: a.metric_closure, ..RandomOptions::default() };
    let inst = gen_random::<S>(family, a.n, a.k, seed, &opts)?;
    let objective: Objective = a.objective.into();
    let mode: Mode = a.mode.into();
    let oracle = if a.oracle {
        Some(solve_oracle(&inst, objective, mode, None, &OracleLimits::default())?.0.value.to_f64_lossy())
    } else {
        None
    };
    let name = format!("{family:?}-{seed}").to_lowercase();
    let mut lines = Vec::new();
    for &algo in &a.algo {
        let req = SolveRequest {
            objective,
            mode,
            algo,
            centers: None,
            seed: None,
            search: SearchStrategy::Binary,
            dim: Some(a.dim as u32),
        };
        let start = Instant::now();
        let (report, _) = run_solver(&inst, &req)?;
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let value = report.value.to_f64_lossy();
        let (oracle_col, ratio) = match oracle {
            Some(o) if o > 0.0 => (o.to_string(), format!("{:.4}", value / o)),
            Some(o) => (o.to_string(), if value == 0.0 { "1".into() } else { "inf".into() }),
            None => (String::new(), String::new()),
        };
        let algo_name = serde_json::to_value(report.algorithm).ok().and_then(|v| v.as_str().map(str::to_owned));
        lines.push(format!(
            "{name},{},{},{},{value},{oracle_col},{ratio},{ms:.3}",
            algo_name.unwrap_or_default(),
            a.n,
            a.k
        ));
    }
    Ok(lines)
}

pub fn run<S: Scalar>(a: &BenchArgs) -> Result<(), Failure> {
    let family = match a.family {
        Family::Line => RandomFamily::Line,
        Family::Tree => RandomFamily::Tree,
        Family::General => RandomFamily::General,
        Family::Lp => RandomFamily::Lp { dim: a.dim, norm: parse_norm(&a.p)? },
        other => return Err(Failure::bad_input(format!("bench needs a random family, got {other:?}"))),
    };
    let seeds: Vec<u64> = (a.seed..a.seed + a.count).collect();
    let threads = a.threads.max(1);
    let chunk = seeds.len().div_ceil(threads).max(1);
    // rows keep the seed order whatever the thread count
    let results: Vec<Result<Vec<String>, Failure>> = std::thread::scope(|scope| {
        let handles: Vec<_> = seeds
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(|&s| row::<S>(a, family, s)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("bench worker panicked")).collect()
    });
    println!("instance,algo,n,k,value,oracle,ratio,wall_ms");
    for r in results {
        for line in r? {
            println!("{line}");
        }
    }
    Ok(())
}
