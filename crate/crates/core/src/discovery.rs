//! Numerical re-discovery of codes: random Hermitian start, per-weight
//! rescaling onto a target enumerator, and the polishing iteration
//! M′ = 2M² − M⁴ that drives eigenvalues toward {0, 1}.
//!
//! The scalar map λ ↦ 2λ²−λ⁴ fixes 0 and 1 and has an unstable fixed
//! point at (√5−1)/2; eigenvalues below it flow to 0, above it to 1.
//! Alternating the two steps converges (when a restart lands in the
//! right basin) to a projector with the target enumerator.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{enumerator_a, CodeProjector, VerificationReport, WeightEnumerator};
use crate::error::{Error, Result};
use crate::expansion::{Coefficient, Exact, ExactExpansion, FloatExpansion};
use crate::pauli::PauliLabel;

/// Default seed for the canonical search; chosen so that the default
/// configuration converges on its first restart (see the seed study in
/// the acceptance suite).
pub const DEFAULT_SEED: u64 = 7;

/// Documented seeds for the reproducibility study: a majority of these
/// converge under the default configuration.
pub const STUDY_SEEDS: [u64; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];

/// Residual threshold the alternation can reliably reach: the tail of
/// ‖M²−M‖_F decays only algebraically once the iterate is near the
/// projector manifold, so thresholds much below 1e-7 are impractical.
pub const DEFAULT_TOL: f64 = 1e-7;

pub const DEFAULT_MAX_ITERS: usize = 2000;
pub const DEFAULT_RESTARTS: usize = 20;

/// Verification tolerance for converged outputs. After the final
/// enumerator enforcement the projector residual sits near 1e-4, erasure
/// residuals near 1e-2, and the Knill–Laflamme residuals split into a
/// near-zero cluster (≤ ~0.03) and an order-one cluster (≥ ~0.6), so 0.1
/// classifies every check with a wide margin.
pub const DISCOVERED_REPORT_TOL: f64 = 0.1;

/// Configuration of one discovery run.
#[derive(Clone, Debug)]
pub struct DiscoveryConfig {
    pub n: usize,
    /// Target rank K.
    pub k: usize,
    /// Target weight enumerator; coefficient 0 must equal K².
    pub target: WeightEnumerator<f64>,
    /// Restrict iterates to real matrices (no odd-Y labels).
    pub real_mode: bool,
    pub seed: u64,
    pub max_iters: usize,
    pub restarts: usize,
    /// Convergence threshold on ‖M²−M‖_F.
    pub tol: f64,
}

impl DiscoveryConfig {
    /// The ((5,6,2)) search: n = 5, K = 6, target 36u⁵ + 60uv⁴ + 96v⁵,
    /// real initial guess.
    pub fn five_six_two(seed: u64) -> DiscoveryConfig {
        DiscoveryConfig {
            n: 5,
            k: 6,
            target: WeightEnumerator::from_integers(&[36, 0, 0, 0, 60, 96]),
            real_mode: true,
            seed,
            max_iters: DEFAULT_MAX_ITERS,
            restarts: DEFAULT_RESTARTS,
            tol: DEFAULT_TOL,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > 8 {
            return Err(Error::BadTarget("supported qubit range is 1..=8".into()));
        }
        if self.target.coeffs().len() != self.n + 1 {
            return Err(Error::BadTarget(format!(
                "target has {} coefficients for n = {}",
                self.target.coeffs().len(),
                self.n
            )));
        }
        let k2 = (self.k * self.k) as f64;
        if (self.target.coeff(0) - k2).abs() > 1e-9 * k2.max(1.0) {
            return Err(Error::BadTarget("coefficient 0 must equal K²".into()));
        }
        if self.target.coeffs().iter().any(|&a| a < 0.0) {
            return Err(Error::BadTarget("coefficients must be nonnegative".into()));
        }
        Ok(())
    }
}

/// One recorded iteration of a restart.
#[derive(Clone, Copy, Debug)]
pub struct TraceStep {
    pub iter: usize,
    /// ‖M²−M‖_F of the iterate after the polish step.
    pub residual: f64,
    /// max_d |A_d(M) − target_d| after the polish step.
    pub enumerator_dev: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RestartStatus {
    Converged {
        iterations: usize,
    },
    /// Abandoned on the spurious plateau: residual above the stall floor
    /// with under 20% improvement across the trailing window.
    Stalled {
        iterations: usize,
    },
    Exhausted,
}

/// Residual and enumerator-deviation series of one restart.
#[derive(Clone, Debug)]
pub struct DiscoveryTrace {
    pub restart: usize,
    pub steps: Vec<TraceStep>,
    pub status: RestartStatus,
}

/// A converged, verified output.
#[derive(Clone, Debug)]
pub struct Discovered {
    pub restart: usize,
    pub iterations: usize,
    /// The iterate that met the residual test, before re-enforcement.
    pub converged: FloatExpansion,
    /// The shipped expansion: enumerator re-enforced to the exact target.
    pub expansion: FloatExpansion,
    /// Projector view of `expansion`, validated at
    /// [`DISCOVERED_REPORT_TOL`].
    pub projector: CodeProjector<f64>,
    pub report: VerificationReport,
    /// Exact rational rounding (denominators ≤ 64), kept only when the
    /// rounded expansion is exactly a projector.
    pub exact: Option<CodeProjector<Exact>>,
}

/// Result of a full multi-restart run; `outcome` is None when every
/// restart was exhausted.
#[derive(Clone, Debug)]
pub struct DiscoveryRun {
    pub outcome: Option<Discovered>,
    pub traces: Vec<DiscoveryTrace>,
}

// Stall heuristic: a restart whose residual is still above the floor and
// has improved by less than 20% across the trailing window is circling
// the spurious attractor and is abandoned.
const STALL_WINDOW: usize = 400;
const STALL_FLOOR: f64 = 5e-3;

/// Independent standard normals via Box–Muller over a deterministic
/// stream.
fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1 = ((rng.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64);
    let u2 = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

fn restart_rng(seed: u64, restart: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart as u64);
    rng
}

/// Flat coefficient workspace over the active label set (all labels, or
/// the even-Y labels in real mode), with a precomputed commuting-pair
/// table so squaring is a single multiply-add sweep.
struct Workspace {
    n: usize,
    labels: Vec<PauliLabel>,
    weights: Vec<usize>,
    /// Slots per weight class.
    classes: Vec<Vec<usize>>,
    /// (i, j, product slot, negative) for commuting pairs i < j.
    pairs: Vec<(u32, u32, u32, bool)>,
    identity_slot: usize,
    scale: f64,
}

impl Workspace {
    fn new(n: usize, real_mode: bool) -> Workspace {
        let labels: Vec<PauliLabel> = PauliLabel::all(n)
            .filter(|l| !real_mode || l.y_count() % 2 == 0)
            .collect();
        let mut slot_of = vec![u32::MAX; 1 << (2 * n)];
        for (slot, l) in labels.iter().enumerate() {
            slot_of[((l.x as usize) << n) | l.z as usize] = slot as u32;
        }
        let weights: Vec<usize> = labels.iter().map(|l| l.weight()).collect();
        let mut classes = vec![Vec::new(); n + 1];
        for (slot, w) in weights.iter().enumerate() {
            classes[*w].push(slot);
        }
        let mut pairs = Vec::new();
        for i in 0..labels.len() {
            for j in i + 1..labels.len() {
                let (a, b) = (labels[i], labels[j]);
                if !a.commutes(b) {
                    continue;
                }
                let g = a.xor(b);
                let slot = slot_of[((g.x as usize) << n) | g.z as usize];
                debug_assert_ne!(slot, u32::MAX, "active set closed under products");
                pairs.push((i as u32, j as u32, slot, a.mul_phase(b) == 2));
            }
        }
        let identity_slot = labels
            .iter()
            .position(|l| l.is_identity())
            .expect("identity is active");
        Workspace {
            n,
            labels,
            weights,
            classes,
            pairs,
            identity_slot,
            scale: (1u64 << n) as f64,
        }
    }

    fn square(&self, c: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; c.len()];
        let mut diag = 0.0;
        for v in c {
            diag += v * v;
        }
        out[self.identity_slot] = diag;
        for &(i, j, g, neg) in &self.pairs {
            let v = 2.0 * c[i as usize] * c[j as usize];
            if neg {
                out[g as usize] -= v;
            } else {
                out[g as usize] += v;
            }
        }
        out
    }

    /// A_d(M) = 4ⁿ Σ_{wt=d} c².
    fn enumerator(&self, c: &[f64]) -> Vec<f64> {
        let mut a = vec![0.0; self.n + 1];
        for (slot, v) in c.iter().enumerate() {
            a[self.weights[slot]] += v * v;
        }
        for v in &mut a {
            *v *= self.scale * self.scale;
        }
        a
    }

    fn residual(&self, c: &[f64]) -> f64 {
        let sq = self.square(c);
        let mut sum = 0.0;
        for (a, b) in sq.iter().zip(c) {
            let d = a - b;
            sum += d * d;
        }
        (self.scale * sum).sqrt()
    }

    fn to_expansion(&self, c: &[f64]) -> FloatExpansion {
        let mut out = FloatExpansion::new(self.n);
        for (slot, v) in c.iter().enumerate() {
            if *v != 0.0 {
                out.set(self.labels[slot], *v);
            }
        }
        out
    }

    #[cfg(test)]
    fn flatten(&self, m: &FloatExpansion) -> Vec<f64> {
        let mut c = vec![0.0; self.labels.len()];
        for (slot, l) in self.labels.iter().enumerate() {
            c[slot] = m.coefficient(*l);
        }
        c
    }

    /// Scales each weight class onto the target; classes with target 0
    /// are zeroed. Errors on a zero-mass class with positive target.
    fn enforce(&self, c: &mut [f64], target: &[f64]) -> Result<()> {
        let a = self.enumerator(c);
        for d in 0..=self.n {
            if target[d] == 0.0 {
                for &slot in &self.classes[d] {
                    c[slot] = 0.0;
                }
            } else {
                if a[d] <= 0.0 {
                    return Err(Error::EmptyWeightClass(d));
                }
                let factor = (target[d] / a[d]).sqrt();
                for &slot in &self.classes[d] {
                    c[slot] *= factor;
                }
            }
        }
        Ok(())
    }

    /// M′ = 2M² − M⁴ = 2S − S² with S = M².
    fn polish(&self, c: &[f64]) -> Vec<f64> {
        let s = self.square(c);
        let s2 = self.square(&s);
        s.iter().zip(&s2).map(|(a, b)| 2.0 * a - b).collect()
    }

    fn resample_class(&self, c: &mut [f64], d: usize, rng: &mut ChaCha8Rng) {
        for &slot in &self.classes[d] {
            c[slot] = standard_normal(rng);
        }
    }

    fn random_start(&self, k: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
        let mut c: Vec<f64> = (0..self.labels.len())
            .map(|_| standard_normal(rng))
            .collect();
        c[self.identity_slot] = k as f64 / self.scale;
        c
    }
}

/// The random initial iterate for `cfg` (the same one restart 0 of
/// [`discover`] uses): i.i.d. standard normal coefficients over the
/// active labels, identity coefficient overwritten to K/2ⁿ.
pub fn random_expansion(cfg: &DiscoveryConfig) -> Result<FloatExpansion> {
    cfg.validate()?;
    let ws = Workspace::new(cfg.n, cfg.real_mode);
    let mut rng = restart_rng(cfg.seed, 0);
    Ok(ws.to_expansion(&ws.random_start(cfg.k, &mut rng)))
}

/// Rescales each weight class of `m` so that its enumerator equals
/// `target` exactly; classes with target 0 are zeroed.
pub fn enforce_enumerator(
    m: &FloatExpansion,
    target: &WeightEnumerator<f64>,
) -> Result<FloatExpansion> {
    let n = m.qubits();
    if target.coeffs().len() != n + 1 {
        return Err(Error::BadTarget(format!(
            "target has {} coefficients for n = {}",
            target.coeffs().len(),
            n
        )));
    }
    let current = enumerator_a(m);
    let mut out = FloatExpansion::new(n);
    for (label, c) in m.terms() {
        let d = label.weight();
        let t = *target.coeff(d);
        if t == 0.0 {
            continue;
        }
        let cur = *current.coeff(d);
        if cur <= 0.0 {
            return Err(Error::EmptyWeightClass(d));
        }
        out.set(*label, c * (t / cur).sqrt());
    }
    for d in 0..=n {
        if *target.coeff(d) > 0.0 && current.coeff(d) <= &0.0 {
            return Err(Error::EmptyWeightClass(d));
        }
    }
    Ok(out)
}

/// One polishing step M′ = 2M² − M⁴; spectra map by λ ↦ 2λ²−λ⁴.
pub fn polish_step(m: &FloatExpansion) -> FloatExpansion {
    let s = m.square();
    let s2 = s.square();
    let doubled = s.scaled(&2.0);
    doubled.sub(&s2).expect("same n")
}

/// Full multi-restart search. Restart r draws from the stream (seed, r);
/// the result is the converged restart with the lowest index. Each
/// restart alternates enforcement and polishing until ‖M²−M‖_F ≤ tol,
/// then re-enforces the enumerator, verifies the outcome, and attempts an
/// exact rational rounding.
pub fn discover(cfg: &DiscoveryConfig) -> Result<DiscoveryRun> {
    cfg.validate()?;
    let ws = Workspace::new(cfg.n, cfg.real_mode);
    let target: Vec<f64> = cfg.target.coeffs().to_vec();
    let mut traces = Vec::with_capacity(cfg.restarts);
    let mut outcome = None;

    for restart in 0..cfg.restarts {
        let mut rng = restart_rng(cfg.seed, restart);
        let mut c = ws.random_start(cfg.k, &mut rng);
        let mut steps: Vec<TraceStep> = Vec::with_capacity(cfg.max_iters.min(4096));
        let mut status = RestartStatus::Exhausted;

        for iter in 0..cfg.max_iters {
            loop {
                match ws.enforce(&mut c, &target) {
                    Ok(()) => break,
                    // a zero-mass class is refilled from this restart's
                    // stream, unless it has no active labels at all
                    Err(Error::EmptyWeightClass(d)) if !ws.classes[d].is_empty() => {
                        ws.resample_class(&mut c, d, &mut rng)
                    }
                    Err(e) => return Err(e),
                }
            }
            c = ws.polish(&c);
            let residual = ws.residual(&c);
            let a = ws.enumerator(&c);
            let enumerator_dev = a
                .iter()
                .zip(&target)
                .map(|(x, t)| (x - t).abs())
                .fold(0.0, f64::max);
            steps.push(TraceStep {
                iter,
                residual,
                enumerator_dev,
            });

            if residual <= cfg.tol {
                status = RestartStatus::Converged {
                    iterations: iter + 1,
                };
                break;
            }
            if iter >= STALL_WINDOW
                && residual > STALL_FLOOR
                && residual > 0.8 * steps[iter - STALL_WINDOW].residual
            {
                status = RestartStatus::Stalled {
                    iterations: iter + 1,
                };
                break;
            }
        }

        if let RestartStatus::Converged { iterations } = status {
            if outcome.is_none() {
                let converged = ws.to_expansion(&c);
                let mut enforced = c.clone();
                ws.enforce(&mut enforced, &target)?;
                let expansion = ws.to_expansion(&enforced);
                let projector = CodeProjector::new(expansion.clone(), DISCOVERED_REPORT_TOL)?;
                let report = projector.report(DISCOVERED_REPORT_TOL);
                let exact = round_to_exact_projector(&expansion, 64);
                outcome = Some(Discovered {
                    restart,
                    iterations,
                    converged,
                    expansion,
                    projector,
                    report,
                    exact,
                });
            }
        }
        traces.push(DiscoveryTrace {
            restart,
            steps,
            status,
        });
        if outcome.is_some() {
            break;
        }
    }

    Ok(DiscoveryRun { outcome, traces })
}

/// Rounds every coefficient to the nearest rational with denominator at
/// most `max_den` and keeps the result only if it is exactly a projector.
pub fn round_to_exact_projector(m: &FloatExpansion, max_den: i64) -> Option<CodeProjector<Exact>> {
    let mut exact = ExactExpansion::new(m.qubits());
    for (label, c) in m.terms() {
        let (num, den) = nearest_ratio(*c, max_den);
        exact.add_term(*label, &Exact::from_ratio(num, den));
    }
    CodeProjector::new(exact, 0.0).ok()
}

/// Best rational approximation p/q to x with 1 ≤ q ≤ max_den, preferring
/// smaller denominators on ties.
fn nearest_ratio(x: f64, max_den: i64) -> (i64, i64) {
    let mut best = (x.round() as i64, 1i64);
    let mut best_err = (x - best.0 as f64).abs();
    for den in 2..=max_den {
        let num = (x * den as f64).round() as i64;
        let err = (x - num as f64 / den as f64).abs();
        if err + 1e-18 < best_err {
            best = (num, den);
            best_err = err;
        }
    }
    best
}

/// Renders traces in the line format `restart iter residual enum_dev`.
pub fn format_trace_lines(traces: &[DiscoveryTrace]) -> String {
    let mut out = String::new();
    for trace in traces {
        for step in &trace.steps {
            out.push_str(&format!(
                "{} {} {:.6e} {:.6e}\n",
                trace.restart, step.iter, step.residual, step.enumerator_dev
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::{five_six_two_generators, SymmetryLevel};

    #[test]
    fn scalar_polish_map() {
        // fixed points 0 and 1; 0.5 → 0.4375; 0.9 → 0.9639
        let f = |l: f64| 2.0 * l * l - l.powi(4);
        assert_eq!(f(0.0), 0.0);
        assert_eq!(f(1.0), 1.0);
        assert!((f(0.5) - 0.4375).abs() < 1e-15);
        assert!((f(0.9) - 0.9639).abs() < 1e-12);
        // unstable fixed point at the root of λ²+λ−1
        let star = (5.0_f64.sqrt() - 1.0) / 2.0;
        assert!((f(star) - star).abs() < 1e-12);
        // below it flows to 0, above it to 1
        let mut lo = star - 1e-3;
        let mut hi = star + 1e-3;
        for _ in 0..25 {
            lo = f(lo);
            hi = f(hi);
        }
        assert!(lo < 0.05);
        assert!(hi > 0.95);
    }

    #[test]
    fn random_expansion_is_deterministic() {
        let cfg = DiscoveryConfig::five_six_two(12345);
        let a = random_expansion(&cfg).unwrap();
        let b = random_expansion(&cfg).unwrap();
        assert_eq!(a, b);
        let other = random_expansion(&DiscoveryConfig::five_six_two(54321)).unwrap();
        assert_ne!(a, other);
    }

    #[test]
    fn random_expansion_respects_real_mode() {
        let cfg = DiscoveryConfig::five_six_two(7);
        let m = random_expansion(&cfg).unwrap();
        assert!(m.is_real_matrix());
        assert_eq!(m.coefficient(PauliLabel::IDENTITY), 6.0 / 32.0);

        let mut complex_cfg = cfg;
        complex_cfg.real_mode = false;
        let m = random_expansion(&complex_cfg).unwrap();
        assert!(!m.is_real_matrix());
        assert_eq!(m.len(), 1024);
    }

    #[test]
    fn enforce_hits_target_exactly() {
        let cfg = DiscoveryConfig::five_six_two(3);
        let m = random_expansion(&cfg).unwrap();
        let forced = enforce_enumerator(&m, &cfg.target).unwrap();
        let a = enumerator_a(&forced);
        for d in 0..=5 {
            assert!((a.coeff(d) - cfg.target.coeff(d)).abs() < 1e-12, "A_{d}");
        }
        // idempotent: a second application changes nothing beyond roundoff
        let twice = enforce_enumerator(&forced, &cfg.target).unwrap();
        assert!(twice.approx_eq(&forced, 1e-14));
    }

    #[test]
    fn enforce_reports_empty_classes() {
        let mut m = FloatExpansion::new(5);
        m.set(PauliLabel::IDENTITY, 6.0 / 32.0);
        // no weight-4 or weight-5 mass at all
        let err = enforce_enumerator(&m, &DiscoveryConfig::five_six_two(0).target);
        assert!(matches!(err, Err(Error::EmptyWeightClass(_))));
    }

    #[test]
    fn polish_fixes_projectors() {
        let proj = crate::analysis::five_six_two_projector();
        let m = proj.expansion().to_float();
        let polished = polish_step(&m);
        assert!(polished.approx_eq(&m, 1e-12));
    }

    #[test]
    fn polish_commutes_with_symmetries() {
        // enforced iterates are the inputs polish actually sees; the raw
        // normal start has coefficients too large for an absolute bound
        let cfg = DiscoveryConfig::five_six_two(11);
        let m = enforce_enumerator(&random_expansion(&cfg).unwrap(), &cfg.target).unwrap();
        for g in five_six_two_generators(SymmetryLevel::Full) {
            let a = g.act_on_expansion(&polish_step(&m));
            let b = polish_step(&g.act_on_expansion(&m));
            assert!(a.approx_eq(&b, 1e-10));
        }
    }

    #[test]
    fn workspace_square_matches_generic_square() {
        let cfg = DiscoveryConfig::five_six_two(5);
        let m = random_expansion(&cfg).unwrap();
        let ws = Workspace::new(5, true);
        let flat = ws.square(&ws.flatten(&m));
        let generic = m.square();
        assert!(ws.to_expansion(&flat).approx_eq(&generic, 1e-10));
    }

    #[test]
    fn zero_iteration_budget_fails_with_empty_traces() {
        let mut cfg = DiscoveryConfig::five_six_two(1);
        cfg.max_iters = 0;
        cfg.restarts = 3;
        let run = discover(&cfg).unwrap();
        assert!(run.outcome.is_none());
        assert_eq!(run.traces.len(), 3);
        for t in &run.traces {
            assert!(t.steps.is_empty());
            assert_eq!(t.status, RestartStatus::Exhausted);
        }
    }

    #[test]
    fn nearest_ratio_prefers_small_denominators() {
        assert_eq!(nearest_ratio(0.1875, 64), (3, 16));
        assert_eq!(nearest_ratio(-0.125, 64), (-1, 8));
        assert_eq!(nearest_ratio(2.0, 64), (2, 1));
    }

    #[test]
    fn exact_rounding_recovers_transcribed_projectors() {
        let proj = crate::analysis::five_six_two_projector();
        let floats = proj.expansion().to_float();
        let exact = round_to_exact_projector(&floats, 64).expect("rational projector");
        assert_eq!(exact.expansion(), proj.expansion());
    }
}
