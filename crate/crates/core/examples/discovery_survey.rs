//! Seed survey for the discovery engine: runs the default configuration
//! over a seed range and reports which restarts converge and how fast.
//!
//! Usage: discovery_survey [first_seed] [last_seed]

use pentacode::discovery::{discover, DiscoveryConfig, RestartStatus};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let first: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let last: u64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(20);

    let mut successes = 0usize;
    let mut total = 0usize;
    let mut restart_stats = (0usize, 0usize, 0usize); // converged/stalled/exhausted
    for seed in first..=last {
        total += 1;
        let cfg = DiscoveryConfig::five_six_two(seed);
        let start = std::time::Instant::now();
        let run = discover(&cfg).expect("valid config");
        for t in &run.traces {
            match t.status {
                RestartStatus::Converged { .. } => restart_stats.0 += 1,
                RestartStatus::Stalled { .. } => restart_stats.1 += 1,
                RestartStatus::Exhausted => restart_stats.2 += 1,
            }
        }
        match &run.outcome {
            Some(d) => {
                successes += 1;
                println!(
                    "seed {seed}: converged at restart {} after {} iterations \
                     ({} restarts tried, {:.2}s); distance {} k {} erasure {} residual {:.2e}",
                    d.restart,
                    d.iterations,
                    run.traces.len(),
                    start.elapsed().as_secs_f64(),
                    d.report.distance,
                    d.report.k,
                    d.report.checks.erasure,
                    d.report.projector_residual,
                );
            }
            None => {
                println!(
                    "seed {seed}: no convergence in {} restarts ({:.2}s)",
                    run.traces.len(),
                    start.elapsed().as_secs_f64()
                );
            }
        }
    }
    println!(
        "\n{successes}/{total} seeds converged; restarts: {} converged, {} stalled, {} exhausted",
        restart_stats.0, restart_stats.1, restart_stats.2
    );
}
